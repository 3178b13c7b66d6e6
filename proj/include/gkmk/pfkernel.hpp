// The partial-fraction kernel.  Every interpolation formula in the library
// reduces to one of two exact splittings over an abstract coefficient
// field:
//
//   poly_pf:    N / prod P_i  =  f0  +  sum A_i / P_i      (polynomial part)
//   laurent_pf: N / prod (1 - a_i z^{k_i})                 (Laurent part)
//               =  f0  +  sum A_i / P_i
//
// where each 1 - a_i z^{k_i} is normalized to a monic P_i with nonzero
// constant term times a unit and a power of z, and poles at z = 0 are
// assigned to the Laurent part f0.  Uniqueness of both splittings comes
// from pairwise coprimality of the P_i, checked here; residues are
// extracted by extended Euclid (CRT), never by adjoining roots.
#pragma once

#include <map>
#include <vector>

#include "gkmk/poly.hpp"

namespace gkmk {

template <class F>
using ZLaurent = std::map<Int, F>;  // finite sums  sum c_k z^k

template <class F>
void zl_add_term(ZLaurent<F>& m, const Int& k, const F& c) {
  if (field_is_zero(c)) return;
  auto it = m.find(k);
  if (it == m.end()) {
    m.emplace(k, c);
  } else {
    it->second = it->second + c;
    if (field_is_zero(it->second)) m.erase(it);
  }
}

template <class F>
ZLaurent<F> zl_mul(const ZLaurent<F>& a, const ZLaurent<F>& b) {
  ZLaurent<F> r;
  for (const auto& [ka, ca] : a)
    for (const auto& [kb, cb] : b) zl_add_term(r, ka + kb, F(ca * cb));
  return r;
}

template <class F>
bool zl_equal(const ZLaurent<F>& a, const ZLaurent<F>& b) {
  ZLaurent<F> d = a;
  for (const auto& [k, c] : b) zl_add_term(d, k, F(-c));
  return d.empty();
}

template <class F>
struct PolyPF {
  Poly<F> f0;
  std::vector<Poly<F>> parts;  // deg A_i < deg P_i
};

// N / prod(P_i) = f0 + sum A_i/P_i with the P_i monic, nonconstant and
// pairwise coprime.
template <class F>
PolyPF<F> poly_pf(const FieldCtx<F>& fx, const Poly<F>& n, const std::vector<Poly<F>>& ps) {
  for (const auto& p : ps)
    if (p.size() < 2) fail(errc::bad_parameters, "partial-fraction factor must be nonconstant");
  for (std::size_t i = 0; i < ps.size(); ++i)
    for (std::size_t j = i + 1; j < ps.size(); ++j)
      if (pgcd_monic(fx, ps[i], ps[j]).size() != 1)
        fail(errc::common_factor, "denominator factors share a root");

  Poly<F> q{fx.one};
  for (const auto& p : ps) q = pmul(fx, q, p);
  auto [f0, r] = pdivmod(fx, n, q);

  PolyPF<F> out;
  out.f0 = std::move(f0);
  Poly<F> check;
  for (const auto& p : ps) {
    auto [ci, rem] = pdivmod(fx, q, p);
    if (!rem.empty()) fail(errc::common_factor, "inexact cofactor division");
    Poly<F> mi = pmod(fx, ci, p);
    Poly<F> ai = pmod(fx, pmul(fx, pmod(fx, r, p), pinv_mod(fx, mi, p)), p);
    check = padd(fx, std::move(check), pmul(fx, ai, ci));
    out.parts.push_back(std::move(ai));
  }
  if (!pis_zero(psub(fx, check, r)))
    fail(errc::integrality_failure, "partial-fraction residue identity failed");
  return out;
}

template <class F>
struct LaurentFactor {
  Int k;
  F a;
  Poly<F> p;  // monic with nonzero constant term; empty when the factor is the unit 1
  Int shift;  // (1 - a z^k) = unit * z^shift * p
  F unit;
};

template <class F>
struct LaurentPF {
  ZLaurent<F> f0;                         // Laurent polynomial part
  std::vector<LaurentFactor<F>> factors;  // as supplied, normalized
  std::vector<Poly<F>> parts;             // A_i, deg < deg p_i (zero for unit factors)
};

template <class F>
LaurentPF<F> laurent_pf(const FieldCtx<F>& fx, const ZLaurent<F>& num,
                        const std::vector<std::pair<Int, F>>& kas) {
  LaurentPF<F> out;
  F uprod = fx.one;
  Int sh_total = 0;
  for (const auto& [k, a] : kas) {
    if (k == 0) fail(errc::zero_pairing, "factor exponent k must be nonzero");
    LaurentFactor<F> lf;
    lf.k = k;
    lf.a = a;
    if (field_is_zero(a)) {
      lf.shift = 0;
      lf.unit = fx.one;  // the factor is literally 1
    } else if (k < 0) {
      std::size_t kk = static_cast<std::size_t>(to_ll(-k));
      lf.p.assign(kk + 1, fx.zero);
      lf.p[0] = -a;
      lf.p[kk] = fx.one;
      lf.shift = k;
      lf.unit = fx.one;
    } else {
      std::size_t kk = static_cast<std::size_t>(to_ll(k));
      lf.p.assign(kk + 1, fx.zero);
      lf.p[0] = -(fx.one / a);
      lf.p[kk] = fx.one;
      lf.shift = 0;
      lf.unit = -a;
    }
    uprod = uprod * lf.unit;
    sh_total += lf.shift;
    out.factors.push_back(std::move(lf));
  }

  if (num.empty()) {
    out.parts.assign(out.factors.size(), Poly<F>{});
    return out;
  }

  // N / D = (N / U) z^{-S} / prod p_i
  ZLaurent<F> m;
  const F uinv = fx.one / uprod;
  for (const auto& [k, c] : num) m.emplace(k - sh_total, c * uinv);

  const Int vmin = m.begin()->first;
  const Int vmax = m.rbegin()->first;
  const Int mu_i = vmin < 0 ? Int(-vmin) : Int(0);
  const std::size_t mu = static_cast<std::size_t>(to_ll(mu_i));

  Poly<F> npoly(static_cast<std::size_t>(to_ll(vmax + mu_i)) + 1, fx.zero);
  for (const auto& [k, c] : m) npoly[static_cast<std::size_t>(to_ll(k + mu_i))] = c;
  pnorm(npoly);

  Poly<F> q{fx.one};
  for (const auto& lf : out.factors)
    if (!lf.p.empty()) q = pmul(fx, q, lf.p);
  for (std::size_t i = 0; i < out.factors.size(); ++i)
    for (std::size_t j = i + 1; j < out.factors.size(); ++j) {
      if (out.factors[i].p.empty() || out.factors[j].p.empty()) continue;
      if (pgcd_monic(fx, out.factors[i].p, out.factors[j].p).size() != 1)
        fail(errc::common_factor, "denominator factors share a root");
    }

  Poly<F> qall = pshift(fx, q, mu);
  auto [f0p, r] = pdivmod(fx, npoly, qall);

  Poly<F> check;
  for (const auto& lf : out.factors) {
    if (lf.p.empty()) {
      out.parts.emplace_back();
      continue;
    }
    auto [ci, rem] = pdivmod(fx, qall, lf.p);
    if (!rem.empty()) fail(errc::common_factor, "inexact cofactor division");
    Poly<F> mi = pmod(fx, ci, lf.p);
    Poly<F> ai = pmod(fx, pmul(fx, pmod(fx, r, lf.p), pinv_mod(fx, mi, lf.p)), lf.p);
    check = padd(fx, std::move(check), pmul(fx, ai, ci));
    out.parts.push_back(std::move(ai));
  }

  Poly<F> az;
  if (mu > 0) {
    Poly<F> zmu(mu + 1, fx.zero);
    zmu[mu] = fx.one;
    Poly<F> mz = pmod(fx, q, zmu);
    az = pmod(fx, pmul(fx, pmod(fx, r, zmu), pinv_mod(fx, mz, zmu)), zmu);
    check = padd(fx, std::move(check), pmul(fx, az, q));
  }
  if (!pis_zero(psub(fx, check, r)))
    fail(errc::integrality_failure, "partial-fraction residue identity failed");

  for (std::size_t j = 0; j < f0p.size(); ++j) zl_add_term(out.f0, Int(j), f0p[j]);
  for (std::size_t j = 0; j < az.size(); ++j) zl_add_term(out.f0, Int(j) - mu_i, az[j]);
  return out;
}

// The paper's f_i for factor i: the proper term is
//   -sgn(k_i) f_i / (1 - a_i z^{k_i})  =  A_i / P_i,
// so f_i = A_i z^{k_i} for k_i < 0 and f_i = a_i A_i for k_i > 0.
template <class F>
ZLaurent<F> paper_fi(const LaurentPF<F>& pf, std::size_t i) {
  ZLaurent<F> r;
  const auto& lf = pf.factors[i];
  const auto& ai = pf.parts[i];
  if (lf.k < 0) {
    for (std::size_t j = 0; j < ai.size(); ++j) zl_add_term(r, Int(j) + lf.k, ai[j]);
  } else {
    for (std::size_t j = 0; j < ai.size(); ++j) zl_add_term(r, Int(j), F(lf.a * ai[j]));
  }
  return r;
}

// (prod of all factors) * A_i / P_i  — a finite Laurent sum; this is the
// building block of the transfer operators and the basis recursion.
template <class F>
ZLaurent<F> lambda_times_proper(const FieldCtx<F>& fx, const LaurentPF<F>& pf, std::size_t i) {
  ZLaurent<F> r;
  const auto& lf = pf.factors[i];
  if (lf.p.empty() || pis_zero(pf.parts[i])) return r;
  for (std::size_t j = 0; j < pf.parts[i].size(); ++j)
    zl_add_term(r, Int(j) + lf.shift, F(pf.parts[i][j] * lf.unit));
  for (std::size_t j = 0; j < pf.factors.size(); ++j) {
    if (j == i) continue;
    const auto& g = pf.factors[j];
    if (field_is_zero(g.a)) continue;
    ZLaurent<F> fac;
    fac.emplace(Int(0), fx.one);
    zl_add_term(fac, g.k, F(-g.a));
    r = zl_mul(r, fac);
  }
  return r;
}

}  // namespace gkmk
