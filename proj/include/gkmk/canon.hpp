// The canonical basis tau_p, its decomposition algorithm, and the
// ascending-path restriction formula.
//
// Construction: walk the vertices in topological order.  At a vertex q the
// splitting of tau_p(q) over the Euler factor has polynomial part
// delta_{pq} (the defining index property) and proper terms that depend
// only on the restrictions along the descending edges, which the edge
// condition identifies with the already-known values at the lower
// endpoints.  So
//
//   tau_p(q) = Lambda_q * (delta_{pq} + sum_i proper_i(tau_p(q_i)/Lambda_q))
//
// and each step certifies that the assembled value is an honest character.
// The per-edge transfer operator Q_e is the single proper term multiplied
// back by the Euler factor; summing its composites over ascending paths
// reproduces the same restrictions, which is verified explicitly.
#pragma once

#include <map>
#include <string>
#include <vector>

#include "gkmk/localindex.hpp"

namespace gkmk {

namespace canon_detail {

struct VertexKernel {
  SplitBasisPtr basis;
  std::vector<std::pair<Int, Fraction>> kas;
  FieldCtx<Fraction> fx;
};

inline VertexKernel vertex_kernel(const GkmGraph& g, const MorseOrientation& mo,
                                  const std::string& q) {
  VertexKernel vk;
  vk.basis = make_split_basis(mo.pol.effective(q));
  const std::size_t hr = vk.basis->h_rank();
  vk.fx = fraction_field<Int>(hr);
  for (const auto& d : mo.descending.at(q)) {
    auto [k, beta] = split_weight(*vk.basis, d.label);
    vk.kas.emplace_back(k, Fraction(CharElem::monomial(hr, beta)));
  }
  return vk;
}

}  // namespace canon_detail

// Q_e: for an ascending edge e into q = t(e), the Euler factor of q times
// the proper part at the reversed edge of f / Lambda_q.  Input and output
// live in R-hat(G) over the split coordinates of the polarization at q.
inline ZHatForm q_e(const GkmGraph& g, const MorseOrientation& mo, const PathStep& e,
                    const ZHatForm& f) {
  const std::string& q = e.dst;
  if (!mo.ascending(e.edge, e.src, g))
    fail(errc::bad_parameters, "q_e needs an ascending edge");
  canon_detail::VertexKernel vk = canon_detail::vertex_kernel(g, mo, q);
  if (!(f.basis->xi == vk.basis->xi))
    fail(errc::context_mismatch, "form is split along a different polarization");
  const auto& ds = mo.descending.at(q);
  std::size_t idx = ds.size();
  for (std::size_t i = 0; i < ds.size(); ++i)
    if (ds[i].edge == e.edge) idx = i;
  if (idx == ds.size()) fail(errc::bad_parameters, "edge is not descending at its target");

  ZLaurent<Fraction> num(f.ck.begin(), f.ck.end());
  LaurentPF<Fraction> pf = laurent_pf(vk.fx, num, vk.kas);
  ZHatForm out;
  out.basis = f.basis;
  for (const auto& [k, c] : lambda_times_proper(vk.fx, pf, idx)) out.add_term(k, c);
  return out;
}

// tau_p as a full restriction tuple.  Certifies integrality at every vertex
// and the edge conditions of the finished class.
inline KClass tau(const GkmGraph& g, const MorseOrientation& mo, const std::string& p) {
  if (!g.has_vertex(p)) fail(errc::bad_parameters, "unknown vertex " + p);
  KClass out;
  for (const auto& q : mo.order) {
    const auto& ds = mo.descending.at(q);
    if (ds.empty()) {
      out.emplace(q, q == p ? CharElem::one(g.rank) : CharElem::zero(g.rank));
      continue;
    }
    canon_detail::VertexKernel vk = canon_detail::vertex_kernel(g, mo, q);
    ZHatForm acc;
    acc.basis = vk.basis;
    if (q == p) {
      ZSplitForm lam = z_split(lambda_minus(g, mo, q), vk.basis);
      acc += to_hat(lam);
    }
    for (std::size_t i = 0; i < ds.size(); ++i) {
      const CharElem& src = out.at(ds[i].lower);
      if (src.is_zero()) continue;
      ZLaurent<Fraction> num = split_to_laurent(z_split(src, vk.basis));
      LaurentPF<Fraction> pf = laurent_pf(vk.fx, num, vk.kas);
      for (const auto& [k, c] : lambda_times_proper(vk.fx, pf, i)) acc.add_term(k, c);
    }
    out.emplace(q, certify_integral(acc, ("tau restriction at " + q).c_str()));
  }
  ClassCheck cc = check_class(g, out);
  if (!cc.ok)
    fail(errc::edge_condition_failure, "constructed class fails the edge condition at " + cc.witness);
  return out;
}

struct CanonicalBasis {
  std::vector<std::string> order;  // construction order (minimum first)
  std::map<std::string, KClass> taus;
};

// ascending-reachable set of p (p included)
inline std::set<std::string> reachable_above(const GkmGraph& g, const MorseOrientation& mo,
                                             const std::string& p) {
  std::set<std::string> seen{p};
  std::vector<std::string> stack{p};
  while (!stack.empty()) {
    std::string v = stack.back();
    stack.pop_back();
    for (std::size_t e : g.incident(v)) {
      if (!mo.ascending(e, v, g)) continue;
      const std::string& w = g.other_end(e, v);
      if (seen.insert(w).second) stack.push_back(w);
    }
  }
  return seen;
}

// all tau_p, with the Kronecker property and the support condition verified
inline CanonicalBasis basis(const GkmGraph& g, const MorseOrientation& mo) {
  CanonicalBasis cb;
  cb.order = mo.order;
  for (const auto& p : g.vertices) cb.taus.emplace(p, tau(g, mo, p));
  for (const auto& p : g.vertices) {
    const KClass& tp = cb.taus.at(p);
    auto up = reachable_above(g, mo, p);
    for (const auto& q : g.vertices)
      if (!up.count(q) && !tp.at(q).is_zero())
        fail(errc::edge_condition_failure, "tau_" + p + " supported off the ascending set at " + q);
    IndexVector iv = total_index(g, mo, tp);
    for (const auto& q : g.vertices) {
      const CharElem want =
          q == p ? CharElem::one(g.rank) : CharElem::zero(g.rank);
      if (!(iv.at(q) == want))
        fail(errc::reconstruction_failure, "index of tau_" + p + " at " + q + " is not Kronecker");
    }
  }
  return cb;
}

// Coefficients of a in the canonical basis, by peeling local indices in
// increasing topological order.  The residual must vanish at every
// processed vertex (triangularity) and entirely at the end.
inline std::map<std::string, CharElem> decompose(const GkmGraph& g, const MorseOrientation& mo,
                                                 const CanonicalBasis& cb, const KClass& a) {
  {
    ClassCheck cc = check_class(g, a);
    if (!cc.ok) fail(errc::edge_condition_failure, "input fails the edge condition at " + cc.witness);
  }
  std::map<std::string, CharElem> coeff;
  KClass residual = a;
  for (const auto& v : mo.order) {
    CharElem cv = local_index(g, mo, residual, v);
    const KClass& tv = cb.taus.at(v);
    for (const auto& q : g.vertices) residual[q] -= cv * tv.at(q);
    if (!residual.at(v).is_zero())
      fail(errc::reconstruction_failure, "residual does not vanish at " + v);
    coeff.emplace(v, std::move(cv));
  }
  for (const auto& v : g.vertices)
    if (!residual.at(v).is_zero())
      fail(errc::reconstruction_failure, "nonzero residual after all coefficients");
  return coeff;
}

// Theorem-6 route: sum of Q_gamma(1) over ascending paths from p to q,
// certified against the recursion.  Global-polarization pipeline only: the
// transfer operators compose inside a single split coordinate system.
inline CharElem tau_via_paths(const GkmGraph& g, const MorseOrientation& mo,
                              const std::string& p, const std::string& q, std::size_t cap) {
  if (!mo.pol.vertex_xi.empty())
    fail(errc::bad_parameters, "path formula runs on the global polarization only");
  KClass tp = tau(g, mo, p);
  CharElem expected = tp.at(q);
  CharElem got(g.rank);
  if (p == q) {
    got = lambda_minus(g, mo, p);
  } else {
    SplitBasisPtr basis = make_split_basis(mo.pol.xi);
    const std::size_t hr = basis->h_rank();
    std::vector<Path> paths = ascending_paths(g, mo, p, q, cap);
    ZHatForm acc;
    acc.basis = basis;
    for (const Path& path : paths) {
      ZHatForm f;
      f.basis = basis;
      f.add_term(Int(0), Fraction::one(hr));
      for (const PathStep& st : path) f = q_e(g, mo, st, f);
      acc += f;
    }
    got = certify_integral(acc, "path-formula restriction");
  }
  if (!(got == expected))
    fail(errc::reconstruction_failure,
         "path formula disagrees with the recursion at (" + p + ", " + q + ")");
  return got;
}

}  // namespace gkmk
