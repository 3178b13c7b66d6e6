// The equivariant-cohomology pipeline: polynomial classes with rational
// coefficients, the edge condition with linear forms in place of
// characters, the local index as a polynomial part, and the recursion
// producing the basis dual to the Morse decomposition.  Same splitting
// kernel as K-theory, with denominators k_i s + beta_i(h) linear in the
// split variable.
#pragma once

#include <map>
#include <string>
#include <vector>

#include "gkmk/gkm.hpp"
#include "gkmk/pfkernel.hpp"
#include "gkmk/zsplit.hpp"

namespace gkmk {

using CohClass = std::map<std::string, CohElem>;

inline CohElem coh_linear_form(std::size_t rank, const IntVector& w) {
  CohElem f(rank);
  for (std::size_t j = 0; j < rank; ++j) {
    if (w[j] == 0) continue;
    IntVector e(rank);
    e[j] = 1;
    f.add_term(e, Rat(w[j]));
  }
  return f;
}

// evaluate f at the tuple of polynomials `images` (one per variable)
inline CohElem coh_substitute(const CohElem& f, const std::vector<CohElem>& images,
                              std::size_t target_rank) {
  CohElem out(target_rank);
  for (const auto& [e, c] : f.terms()) {
    CohElem m = CohElem::constant(target_rank, c);
    for (std::size_t j = 0; j < e.size(); ++j) {
      long long p = to_ll(e[j]);
      if (p < 0) fail(errc::bad_parameters, "cohomology classes must be polynomial");
      for (long long t = 0; t < p; ++t) m *= images[j];
    }
    out += m;
  }
  return out;
}

struct CohSplit {
  SplitBasisPtr basis;
  std::vector<CohElem> x_to_sh;  // images of the x_j in the (s, h) variables
  std::vector<CohElem> sh_to_x;  // images of (s, h) back in the x variables
};

inline CohSplit make_coh_split(const IntVector& xi) {
  CohSplit cs;
  cs.basis = make_split_basis(xi);
  const std::size_t n = cs.basis->rank;
  for (std::size_t j = 0; j < n; ++j) {
    // x_j -> xi_j * s + sum_i Binv[j][i] * h_i   (column 0 of Binv is xi)
    CohElem img(n);
    for (std::size_t i = 0; i < n; ++i) {
      const Int& c = cs.basis->binv.at(j, i);
      if (c == 0) continue;
      IntVector e(n);
      e[i] = 1;
      img.add_term(e, Rat(c));
    }
    cs.x_to_sh.push_back(std::move(img));
  }
  for (std::size_t i = 0; i < n; ++i) cs.sh_to_x.push_back(coh_linear_form(n, cs.basis->b.row(i)));
  return cs;
}

struct CohClassCheck {
  bool ok = true;
  std::string witness;
};

// chi_p - chi_q divisible by the linear form of the edge label
inline CohClassCheck coh_check_class(const GkmGraph& g, const CohClass& chi) {
  for (const auto& v : g.vertices)
    if (!chi.count(v)) fail(errc::bad_parameters, "class missing vertex " + v);
  for (const auto& ed : g.edges) {
    CohElem diff = chi.at(ed.from) - chi.at(ed.to);
    if (diff.is_zero()) continue;
    if (!try_exact_div(diff, coh_linear_form(g.rank, ed.label_at_from)))
      return {false, ed.from + "-" + ed.to};
  }
  return {};
}

namespace coh_detail {

using QP = CohFraction;  // rational functions in the h variables

// collect an (s,h)-polynomial as a polynomial in s with Q(h) coefficients
inline Poly<QP> collect_s(const CohElem& f, std::size_t hr) {
  Poly<QP> out;
  for (const auto& [e, c] : f.terms()) {
    std::size_t d = static_cast<std::size_t>(to_ll(e[0]));
    if (out.size() <= d) out.resize(d + 1, QP::zero(hr));
    IntVector eh(hr);
    for (std::size_t j = 0; j < hr; ++j) eh[j] = e[j + 1];
    out[d] = out[d] + QP(CohElem::monomial(hr, eh, c));
  }
  pnorm(out);
  return out;
}

// certified inverse of collect_s
inline CohElem expand_s(const Poly<QP>& p, std::size_t n, const char* what) {
  CohElem out(n);
  for (std::size_t d = 0; d < p.size(); ++d) {
    auto c = is_character(p[d]);
    if (!c) fail(errc::integrality_failure,
                 std::string(what) + ": coefficient of s^" + std::to_string(d) +
                     " is not polynomial");
    for (const auto& [eh, x] : c->terms()) {
      IntVector e(n);
      e[0] = Int(d);
      for (std::size_t j = 0; j + 1 < n; ++j) e[j + 1] = eh[j];
      out.add_term(e, x);
    }
  }
  return out;
}

// monic linear factors s + beta_i/k_i for the descending weights
inline std::vector<Poly<QP>> monic_factors(const SplitBasis& sb,
                                           const std::vector<DescendingEdge>& ds) {
  const std::size_t hr = sb.h_rank();
  std::vector<Poly<QP>> ps;
  for (const auto& d : ds) {
    auto [k, beta] = split_weight(sb, d.label);
    QP b0 = QP(coh_linear_form(hr, beta)) / QP(CohElem::constant(hr, Rat(k)));
    ps.push_back(Poly<QP>{b0, QP::one(hr)});
  }
  return ps;
}

}  // namespace coh_detail

// polynomial part of a_p / prod(alpha_i) over the descending weights at p
inline CohElem coh_local_index(const GkmGraph& g, const MorseOrientation& mo, const CohClass& a,
                               const std::string& p) {
  using coh_detail::QP;
  const auto& ds = mo.descending.at(p);
  const CohElem& ap = a.at(p);
  if (ds.empty()) return ap;
  const IntVector& xie = mo.pol.effective(p);
  CohSplit cs = make_coh_split(xie);
  const std::size_t n = g.rank, hr = n - 1;
  auto fx = fraction_field<Rat>(hr);

  Poly<QP> num = coh_detail::collect_s(coh_substitute(ap, cs.x_to_sh, n), hr);
  std::vector<Poly<QP>> ps = coh_detail::monic_factors(*cs.basis, ds);
  PolyPF<QP> pf = poly_pf(fx, num, ps);

  // prod(alpha_i) = (prod k_i) * prod(P_i): rescale the polynomial part
  Rat kprod(1);
  for (const auto& d : ds) kprod *= Rat(d.k);
  Poly<QP> f0 = pscale(pf.f0, QP(CohElem::constant(hr, Rat(Rat(1) / kprod))));

  CohElem sh = coh_detail::expand_s(f0, n, "cohomological index");
  return coh_substitute(sh, cs.sh_to_x, n);
}

using CohIndexVector = std::map<std::string, CohElem>;

inline CohIndexVector coh_total_index(const GkmGraph& g, const MorseOrientation& mo,
                                      const CohClass& a) {
  CohIndexVector out;
  for (const auto& v : g.vertices) out.emplace(v, coh_local_index(g, mo, a, v));
  return out;
}

// The cohomological basis class of p by the same ascending recursion as in
// K-theory: at each vertex q,
//   a_q = prod(alpha) * (delta_{pq} + sum_i [proper part at alpha_i of
//                                            a_{q_i} / prod(alpha)]).
inline CohClass coh_tau(const GkmGraph& g, const MorseOrientation& mo, const std::string& p) {
  using coh_detail::QP;
  if (!g.has_vertex(p)) fail(errc::bad_parameters, "unknown vertex " + p);
  CohClass out;
  for (const auto& q : mo.order) {
    const auto& ds = mo.descending.at(q);
    if (ds.empty()) {
      out.emplace(q, q == p ? CohElem::one(g.rank) : CohElem::zero(g.rank));
      continue;
    }
    const IntVector& xie = mo.pol.effective(q);
    CohSplit cs = make_coh_split(xie);
    const std::size_t n = g.rank, hr = n - 1;
    auto fx = fraction_field<Rat>(hr);
    std::vector<Poly<QP>> ps = coh_detail::monic_factors(*cs.basis, ds);

    Poly<QP> acc;  // the value in (s, h) coordinates
    if (q == p) {
      Poly<QP> lam{QP::one(hr)};
      Rat kprod(1);
      for (const auto& d : ds) kprod *= Rat(d.k);
      for (const auto& f : ps) lam = pmul(fx, lam, f);
      acc = pscale(lam, QP(CohElem::constant(hr, kprod)));
    }
    for (std::size_t i = 0; i < ds.size(); ++i) {
      const CohElem& src = out.at(ds[i].lower);
      if (src.is_zero()) continue;
      Poly<QP> num = coh_detail::collect_s(coh_substitute(src, cs.x_to_sh, n), hr);
      PolyPF<QP> pf = poly_pf(fx, num, ps);
      // prod(alpha) * A_i / ((prod k) P_i) * ... : the scalar products cancel,
      // leaving A_i * prod_{j != i} P_j
      Poly<QP> term = pf.parts[i];
      for (std::size_t j = 0; j < ps.size(); ++j)
        if (j != i) term = pmul(fx, term, ps[j]);
      acc = padd(fx, std::move(acc), term);
    }
    CohElem sh = coh_detail::expand_s(acc, n, "cohomological basis class");
    out.emplace(q, coh_substitute(sh, cs.sh_to_x, n));
  }
  return out;
}

}  // namespace gkmk
