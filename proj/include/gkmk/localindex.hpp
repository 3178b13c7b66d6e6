// Local indices at fixed points.  The general path computes the
// interpolation polynomial part of a_p over the Euler factor of the
// descending directions; the torsion-free path (all pairings -1 against
// the vertex circle) evaluates the simplified rational sum directly and
// must agree with the engine.
#pragma once

#include <map>
#include <string>

#include "gkmk/facsum.hpp"
#include "gkmk/gkm.hpp"
#include "gkmk/lagrange.hpp"

namespace gkmk {

using IndexVector = std::map<std::string, CharElem>;

inline std::vector<IntVector> descending_weights(const MorseOrientation& mo,
                                                 const std::string& p) {
  std::vector<IntVector> w;
  for (const auto& d : mo.descending.at(p)) w.push_back(d.label);
  return w;
}

// I_p(a): the f0 of the decomposition of a_p over the descending weights,
// with the effective polarization at p.
inline CharElem local_index(const GkmGraph& g, const MorseOrientation& mo, const KClass& a,
                            const std::string& p) {
  const auto& ds = mo.descending.at(p);
  const CharElem& ap = a.at(p);
  if (ds.empty()) return ap;
  return interp_rg(ap, descending_weights(mo, p), mo.pol.effective(p)).f0;
}

inline IndexVector total_index(const GkmGraph& g, const MorseOrientation& mo, const KClass& a) {
  IndexVector out;
  for (const auto& v : g.vertices) out.emplace(v, local_index(g, mo, a, v));
  return out;
}

// Torsion-free fast path.  With every descending pairing equal to -1 the
// Gysin maps are relabelings: a character x^lam of G enters the term of
// the i-th descending edge as x^{lam + lam(xi_p) alpha_i}, the orbifold
// corrections collapse, and the index is the plain rational sum
//
//   sum_i  r_i(a_{q_i}) / [(1 - x^{-alpha_i}) prod_{j != i} (1 - x^{alpha_j - alpha_i})]
//        + a_p / prod_i (1 - x^{alpha_i}),
//
// cleared over the common denominator and certified by exact division.
inline CharElem local_index_torsion_free(const GkmGraph& g, const MorseOrientation& mo,
                                         const KClass& a, const std::string& p) {
  const auto& ds = mo.descending.at(p);
  const CharElem& ap = a.at(p);
  if (ds.empty()) return ap;
  for (const auto& d : ds)
    if (d.k != -1)
      fail(errc::not_torsion_free,
           "descending pairing at " + p + " is " + d.k.str() + ", not -1");
  const IntVector& xip = mo.pol.effective(p);
  const std::size_t n = g.rank;

  FactoredSum sum(n);
  for (std::size_t i = 0; i < ds.size(); ++i) {
    const IntVector& ai = ds[i].label;
    const CharElem& src = a.at(ds[i].lower);
    CharElem num(n);
    for (const auto& [lam, c] : src.terms()) num.add_term(lam + dot(lam, xip) * ai, c);
    FactorList den;
    fl_add(den, -ai);
    for (std::size_t j = 0; j < ds.size(); ++j)
      if (j != i) fl_add(den, ds[j].label - ai);
    sum.add_term(std::move(num), std::move(den));
  }
  FactorList lam_den;
  for (const auto& d : ds) fl_add(lam_den, d.label);
  sum.add_term(ap, lam_den);
  return sum.certified_sum("torsion-free index");
}

inline IndexVector total_index_torsion_free(const GkmGraph& g, const MorseOrientation& mo,
                                            const KClass& a) {
  IndexVector out;
  for (const auto& v : g.vertices) out.emplace(v, local_index_torsion_free(g, mo, a, v));
  return out;
}

}  // namespace gkmk
