// Interpolation engine: the classical, power, character and
// representation-ring decompositions, all powered by the partial-fraction
// kernel.  The representation-ring variant certifies that its polynomial
// part is an honest character, and every decomposition verifies its own
// cross-multiplied reconstruction identity before it is returned.
#pragma once

#include <optional>
#include <vector>

#include "gkmk/pfkernel.hpp"
#include "gkmk/zsplit.hpp"

namespace gkmk {

// --------------------------------------------------------------- classical

struct ClassicResult {
  Poly<Rat> f0;
  std::vector<Rat> residues;  // c_i over (z - a_i)
};

inline ClassicResult interp_classic(const Poly<Rat>& f, const std::vector<Rat>& roots) {
  for (std::size_t i = 0; i < roots.size(); ++i)
    for (std::size_t j = i + 1; j < roots.size(); ++j)
      if (roots[i] == roots[j]) fail(errc::repeated_root, "interpolation roots coincide");
  auto fx = rat_field();
  std::vector<Poly<Rat>> ps;
  for (const Rat& a : roots) ps.push_back(Poly<Rat>{Rat(-a), Rat(1)});
  PolyPF<Rat> pf = poly_pf(fx, f, ps);

  ClassicResult out;
  out.f0 = pf.f0;
  for (std::size_t i = 0; i < roots.size(); ++i) {
    Rat ci = pf.parts[i].empty() ? Rat(0) : pf.parts[i][0];
    // the closed form c_i = f(a_i) / prod_{j != i} (a_i - a_j)
    Rat fa(0), pw(1);
    for (const Rat& c : f) {
      fa += c * pw;
      pw *= roots[i];
    }
    Rat dn(1);
    for (std::size_t j = 0; j < roots.size(); ++j)
      if (j != i) dn *= roots[i] - roots[j];
    if (ci != fa / dn) fail(errc::integrality_failure, "classical residue mismatch");
    out.residues.push_back(ci);
  }
  return out;
}

// ------------------------------------------------------------------- power

struct PowerResult {
  Poly<Rat> f0;
  std::vector<Poly<Rat>> fi;  // deg f_i < k_i, over (z^{k_i} - a_i)
};

inline PowerResult interp_power(Poly<Rat> f,
                                const std::vector<std::pair<long long, Rat>>& pairs) {
  auto fx = rat_field();
  pnorm(f);
  std::vector<Poly<Rat>> ps;
  long long ksum = 0;
  for (const auto& [k, a] : pairs) {
    if (k <= 0) fail(errc::bad_parameters, "power interpolation needs k_i > 0");
    Poly<Rat> p(static_cast<std::size_t>(k) + 1, Rat(0));
    p[0] = -a;
    p.back() = Rat(1);
    ps.push_back(std::move(p));
    ksum += k;
  }
  PolyPF<Rat> pf = poly_pf(fx, f, ps);

  // independent recomputation of f0 from the expansion coefficients
  const long long n = f.empty() ? -1 : static_cast<long long>(f.size()) - 1;
  Poly<Rat> f0b;
  if (n >= ksum) {
    const std::size_t tmax = static_cast<std::size_t>(n - ksum);
    std::vector<Rat> w(tmax + 1, Rat(0));
    w[0] = 1;
    for (const auto& [k, a] : pairs)
      for (std::size_t t = static_cast<std::size_t>(k); t <= tmax; ++t)
        w[t] += a * w[t - static_cast<std::size_t>(k)];
    f0b.assign(tmax + 1, Rat(0));
    for (std::size_t j = 0; j <= tmax; ++j)
      for (std::size_t t = 0; t + j <= tmax; ++t)
        f0b[j] += f[static_cast<std::size_t>(ksum) + j + t] * w[t];
    pnorm(f0b);
  }
  if (!pis_zero(psub(fx, pf.f0, f0b)))
    fail(errc::integrality_failure, "power interpolation f0 cross-check failed");

  return {pf.f0, pf.parts};
}

// --------------------------------------------------------------- character

template <class F>
struct CharacterResult {
  ZLaurent<F> f0;
  LaurentPF<F> pf;

  ZLaurent<F> fi(std::size_t i) const { return paper_fi(pf, i); }
  int sign(std::size_t i) const { return pf.factors[i].k < 0 ? -1 : 1; }
};

// exact reconstruction:  f = f0 * D + sum_i A_i * D / P_i
template <class F>
bool reconstruction_holds(const FieldCtx<F>& fx, const ZLaurent<F>& f, const LaurentPF<F>& pf) {
  ZLaurent<F> d;
  d.emplace(Int(0), fx.one);
  for (const auto& lf : pf.factors) {
    if (field_is_zero(lf.a)) continue;
    ZLaurent<F> fac;
    fac.emplace(Int(0), fx.one);
    zl_add_term(fac, lf.k, F(-lf.a));
    d = zl_mul(d, fac);
  }
  ZLaurent<F> rhs = zl_mul(pf.f0, d);
  for (std::size_t i = 0; i < pf.factors.size(); ++i)
    for (const auto& [k, c] : lambda_times_proper(fx, pf, i)) zl_add_term(rhs, k, c);
  return zl_equal(f, rhs);
}

template <class F>
CharacterResult<F> interp_character(const FieldCtx<F>& fx, const ZLaurent<F>& f,
                                    const std::vector<std::pair<Int, F>>& kas) {
  CharacterResult<F> out;
  out.pf = laurent_pf(fx, f, kas);
  out.f0 = out.pf.f0;
  if (!reconstruction_holds(fx, f, out.pf))
    fail(errc::integrality_failure, "character interpolation reconstruction failed");
  return out;
}

// ----------------------------------------------------- representation ring

struct RgTerm {
  IntVector alpha;
  Int k;           // alpha(xi)
  IntVector beta;  // H-part of alpha
  ZHatForm fi;     // the paper's f_i, Q(H) coefficients
  int sign;        // sgn(k)
};

struct LagrangeDecomposition {
  SplitBasisPtr basis;
  CharElem f0;      // certified element of R(G)
  ZHatForm f0_hat;  // the same, before certification
  std::vector<RgTerm> terms;
  LaurentPF<Fraction> pf;
};

inline void require_valid_weights(const std::vector<IntVector>& weights, const IntVector& xi) {
  for (const auto& w : weights) {
    if (w.is_zero()) fail(errc::zero_vector, "zero interpolation weight");
    if (dot(w, xi) == 0)
      fail(errc::zero_pairing, "weight " + w.str() + " pairs to zero with the polarization");
  }
  for (std::size_t i = 0; i < weights.size(); ++i)
    for (std::size_t j = i + 1; j < weights.size(); ++j)
      if (pairwise_dependent(weights[i], weights[j]))
        fail(errc::dependent_weights,
             "weights " + weights[i].str() + " and " + weights[j].str() + " are dependent");
}

inline ZLaurent<Fraction> split_to_laurent(const ZSplitForm& zf) {
  ZLaurent<Fraction> r;
  for (const auto& [k, c] : zf.ck) r.emplace(k, Fraction(c));
  return r;
}

inline ZHatForm laurent_to_hat(const ZLaurent<Fraction>& zl, const SplitBasisPtr& basis) {
  ZHatForm r;
  r.basis = basis;
  for (const auto& [k, c] : zl) r.add_term(k, c);
  return r;
}

inline LagrangeDecomposition interp_rg(const CharElem& f, const std::vector<IntVector>& weights,
                                       const IntVector& xi) {
  require_valid_weights(weights, xi);
  SplitBasisPtr basis = make_split_basis(xi);
  const std::size_t hr = basis->h_rank();
  auto fx = fraction_field<Int>(hr);

  ZLaurent<Fraction> num = split_to_laurent(z_split(f, basis));
  std::vector<std::pair<Int, Fraction>> kas;
  std::vector<Int> ks;
  std::vector<IntVector> betas;
  for (const auto& w : weights) {
    auto [k, beta] = split_weight(*basis, w);
    kas.emplace_back(k, Fraction(CharElem::monomial(hr, beta)));
    ks.push_back(k);
    betas.push_back(beta);
  }

  CharacterResult<Fraction> cr = interp_character(fx, num, kas);

  LagrangeDecomposition out;
  out.basis = basis;
  out.pf = cr.pf;
  out.f0_hat = laurent_to_hat(cr.f0, basis);
  out.f0 = certify_integral(out.f0_hat, "interpolation polynomial part");
  for (std::size_t i = 0; i < weights.size(); ++i) {
    RgTerm t;
    t.alpha = weights[i];
    t.k = ks[i];
    t.beta = betas[i];
    t.fi = laurent_to_hat(cr.fi(i), basis);
    t.sign = cr.sign(i);
    out.terms.push_back(std::move(t));
  }
  return out;
}

// ------------------------------------------------- Gysin identity, 2 routes

// pi_i(a_j w^{k_j}) by collapsing the sum over the roots of 1 - a_i w^{k_i}:
// the |k_i|-th roots of unity average a power sum, which vanishes unless
// |k_i| divides k_j and otherwise telescopes to a_j a_i^{-k_j/k_i}.
inline std::optional<IntVector> pi_root_sum(const SplitBasis& sb, const IntVector& alpha_i,
                                            const IntVector& alpha_j) {
  auto [ki, bi] = split_weight(sb, alpha_i);
  auto [kj, bj] = split_weight(sb, alpha_j);
  if (ki == 0) fail(errc::zero_pairing, "pi_i needs a nonzero pairing");
  if (kj % ki != 0) return std::nullopt;
  Int q = kj / ki;
  return bj - q * bi;
}

// The same value by pure lattice projection through R(G_i):  restrict
// alpha_j modulo Z alpha_i, test divisibility of the z-component, descend.
inline std::optional<IntVector> pi_lattice(const SplitBasis& sb, const IntVector& alpha_i,
                                           const IntVector& alpha_j) {
  Int ki = dot(alpha_i, sb.xi);
  if (ki == 0) fail(errc::zero_pairing, "pi_i needs a nonzero pairing");
  auto quo = make_quotient(sb.rank, {alpha_i});
  IntVector rep = quo->canon(alpha_j);
  Int t = dot(rep, sb.xi);
  if (t % ki != 0) return std::nullopt;
  IntVector lam = rep - Int(t / ki) * alpha_i;
  auto [z, h] = split_weight(sb, lam);
  if (z != 0) fail(errc::integrality_failure, "projected weight has a z-component");
  return h;
}

}  // namespace gkmk
