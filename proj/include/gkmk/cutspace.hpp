// Twisted projective spaces as cut models and their equivariant index by
// fixed-point localization.  This is the geometric oracle for the local
// indices: it never touches the partial-fraction kernel.
//
// Conventions, pinned by ind(1) = 1 and the Kronecker property of the
// canonical basis (the paper's printed first factor is off by the known
// sign ambiguity):
//   * the character lattice at the i-th orbit circle is
//     Z^{n+1} / Z(alpha_i, k_i), with the T'-coordinate last;
//   * a character lam of G enters the per-point data as its T'-invariant
//     lift (lam, lam(xi)) -- this factors through the edge restriction
//     automatically since (alpha_i, k_i) maps to the relation itself;
//   * the cut coordinate carries zeta = class of (0,...,0,-1);
//   * the tangent factor of the j-th coordinate is 1 - class(alpha_j, k_j).
//
// The finite group Gamma_i of order |k_i| acts on a class (mu, c) through
// the root of unity with exponent -c/k_i.  Invariant parts are extracted
// after multiplying numerator and denominator by the full Gamma_i-orbit
// product of the denominator: each denominator factor norms to the
// integral factor (1 - m^{kappa/g})^g with g = gcd(c(m), kappa), while the
// twisted numerator product is Galois-stable, hence has plain integer
// coefficients even though its intermediates are cyclotomic.
#pragma once

#include <vector>

#include "gkmk/cyclotomic.hpp"
#include "gkmk/facsum.hpp"
#include "gkmk/gkm.hpp"
#include "gkmk/localindex.hpp"

namespace gkmk {

struct CutPoint {
  IntVector alpha;
  Int k;            // alpha(xi), nonzero
  unsigned kappa;   // |k| = order of Gamma_i
  QuotientPtr lat;  // Z^{n+1} / Z(alpha, k)
};

struct CutSpace {
  std::size_t rank = 0;  // n
  IntVector xi;
  std::vector<CutPoint> points;  // the m orbit-circle fixed points
  unsigned K = 1;                // lcm of the kappa's

  std::size_t m() const { return points.size(); }
};

namespace cut_detail {

inline CutSpace build_points(std::size_t rank, const std::vector<IntVector>& weights,
                             const IntVector& xi) {
  if (xi.size() != rank) fail(errc::bad_parameters, "polarization rank mismatch");
  if (content(xi) != 1) fail(errc::not_primitive, "cut polarization must be primitive");
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (weights[i].size() != rank) fail(errc::bad_parameters, "weight rank mismatch");
    if (weights[i].is_zero()) fail(errc::zero_vector, "zero cut weight");
    for (std::size_t j = i + 1; j < weights.size(); ++j)
      if (pairwise_dependent(weights[i], weights[j]))
        fail(errc::dependent_weights,
             "cut weights " + weights[i].str() + " and " + weights[j].str() + " are dependent");
  }
  CutSpace cs;
  cs.rank = rank;
  cs.xi = xi;
  Int kl = 1;
  for (const auto& w : weights) {
    CutPoint pt;
    pt.alpha = w;
    pt.k = dot(w, xi);
    if (pt.k == 0) fail(errc::zero_pairing, "cut weight pairs to zero");
    pt.kappa = static_cast<unsigned>(to_ll(abs_int(pt.k)));
    IntVector rel(rank + 1);
    for (std::size_t j = 0; j < rank; ++j) rel[j] = w[j];
    rel[rank] = pt.k;
    pt.lat = make_quotient(rank + 1, {rel});
    kl = lcm_int(kl, pt.k);
    cs.points.push_back(std::move(pt));
  }
  cs.K = static_cast<unsigned>(to_ll(abs_int(kl)));
  return cs;
}

}  // namespace cut_detail

// Formula-5.1 regime: every pairing negative.  Positive pairings are routed
// to index_general, mixed zero pairings are rejected outright.
inline CutSpace build_cut_space(std::size_t rank, const std::vector<IntVector>& weights,
                                const IntVector& xi) {
  CutSpace cs = cut_detail::build_points(rank, weights, xi);
  for (const auto& pt : cs.points)
    if (pt.k > 0)
      fail(errc::mixed_signs,
           "weight " + pt.alpha.str() + " pairs positively; use index_general");
  return cs;
}

// T'-invariant lift of a character of G into the lattice of the i-th orbit
// circle: lam -> class(lam, lam(xi)).
template <class C>
CharElemT<C> embed_at_point(const CharElemT<C>& f, const CutSpace& cs, const CutPoint& pt) {
  if (f.rank() != cs.rank || !f.free_context())
    fail(errc::context_mismatch, "embedding needs a free element of the cut-space rank");
  CharElemT<C> out(cs.rank + 1, pt.lat);
  for (const auto& [lam, c] : f.terms()) {
    IntVector e(cs.rank + 1);
    for (std::size_t j = 0; j < cs.rank; ++j) e[j] = lam[j];
    e[cs.rank] = dot(lam, cs.xi);
    out.add_term(e, c);
  }
  return out;
}

// class of (0, ..., 0, -1): the cut coordinate
template <class C>
CharElemT<C> zeta_class(const CutSpace& cs, const CutPoint& pt) {
  IntVector e(cs.rank + 1);
  e[cs.rank] = -1;
  return CharElemT<C>::monomial(cs.rank + 1, e, C(1), pt.lat);
}

// The Gysin map pi_i: keep the Gamma_i-invariant classes, i.e. those whose
// T'-component c is divisible by k, and send (mu, c) to x^{mu - (c/k) alpha}.
template <class C>
CharElemT<C> gysin_invariant_part(const CharElemT<C>& f, std::size_t target_rank) {
  const QuotientPtr& quo = f.quotient();
  if (!quo || quo->ambient_rank() != target_rank + 1 || quo->relations().size() != 1)
    fail(errc::context_mismatch, "element is not over an orbit-circle lattice");
  const IntVector& rel = quo->relations()[0];
  const Int& k = rel[target_rank];
  if (k == 0) fail(errc::bad_parameters, "degenerate orbit-circle relation");
  CharElemT<C> out(target_rank);
  for (const auto& [e, c] : f.terms()) {
    const Int& cc = e[target_rank];
    if (cc % k != 0) continue;
    Int q = cc / k;
    IntVector lam(target_rank);
    for (std::size_t j = 0; j < target_rank; ++j) lam[j] = e[j] - q * rel[j];
    out.add_term(lam, c);
  }
  return out;
}

// twist of the Gamma_i-action by its s-th element: the monomial of class
// (mu, c) is scaled by the root of unity with exponent -c s / k_i.
inline CharElemT<CycInt> twist_sigma(const CharElemT<CycInt>& f, const CutSpace& cs,
                                     const CutPoint& pt, unsigned s) {
  CharElemT<CycInt> out(cs.rank + 1, pt.lat);
  const Int ratio = Int(cs.K) / pt.k;  // k divides K
  for (const auto& [e, c] : f.terms()) {
    Int expo = mod_euclid(-e[cs.rank] * Int(s) * ratio, Int(cs.K));
    out.add_term(e, c * CycInt::root_power(cs.K, expo));
  }
  return out;
}

// restriction tuple fed to the localization sum
struct CutDelta {
  std::vector<CharElem> at_points;  // element over the i-th orbit-circle lattice
  CharElem at_free;                 // restriction at p_{m+1}, over Z^n
};

inline CutDelta cut_delta_from_restrictions(const CutSpace& cs,
                                            const std::vector<CharElem>& point_values,
                                            const CharElem& free_value) {
  if (point_values.size() != cs.m())
    fail(errc::bad_parameters, "need one restriction per orbit circle");
  CutDelta d;
  for (std::size_t i = 0; i < cs.m(); ++i)
    d.at_points.push_back(embed_at_point(point_values[i], cs, cs.points[i]));
  d.at_free = free_value;
  return d;
}

namespace cut_detail {

inline CharElemT<CycInt> to_cyc(const CharElem& f) {
  CharElemT<CycInt> out(f.rank(), f.quotient());
  for (const auto& [e, c] : f.terms()) out.add_term(e, CycInt(c));
  return out;
}

inline CharElem from_cyc(const CharElemT<CycInt>& f, const char* what) {
  CharElem out(f.rank(), f.quotient());
  for (const auto& [e, c] : f.terms()) {
    if (!c.is_rational())
      fail(errc::integrality_failure, std::string(what) + ": cyclotomic residue survives");
    out.add_term(e, c.rational_value());
  }
  return out;
}

// the localization sum with sgn(-k_i) prefixes; Formula 5.1 when all k_i<0
inline CharElem localization_sum(const CutSpace& cs, const CutDelta& delta, const char* what) {
  if (delta.at_points.size() != cs.m())
    fail(errc::bad_parameters, "restriction tuple size mismatch");
  const std::size_t n = cs.rank;
  FactoredSum sum(n);

  for (std::size_t i = 0; i < cs.m(); ++i) {
    const CutPoint& pt = cs.points[i];
    const CharElem& di = delta.at_points[i];
    if (di.rank() != n + 1 || !di.quotient() || !(*di.quotient() == *pt.lat))
      fail(errc::context_mismatch, "restriction is over the wrong orbit-circle lattice");

    // denominator D_i = (1 - zeta) prod_{j != i} (1 - y_j) over the circle lattice
    CharElem d = CharElem::one(n + 1, pt.lat) - zeta_class<Int>(cs, pt);
    for (std::size_t j = 0; j < cs.m(); ++j) {
      if (j == i) continue;
      CharElem y = embed_at_point(CharElem::monomial(n, cs.points[j].alpha), cs, pt);
      if (y == CharElem::one(n + 1, pt.lat))
        fail(errc::denominator_vanishes, "tangent factor degenerates at point " +
                                             std::to_string(i));
      d *= CharElem::one(n + 1, pt.lat) - y;
    }

    // numerator: delta_i times the nontrivial Gamma_i-twists of D_i
    CharElem num(n + 1, pt.lat);
    if (pt.kappa == 1) {
      num = di;
    } else {
      CharElemT<CycInt> acc = to_cyc(di);
      for (unsigned s = 1; s < pt.kappa; ++s) acc *= twist_sigma(to_cyc(d), cs, pt, s);
      num = from_cyc(acc, what);
    }
    CharElem proj = gysin_invariant_part(num, n);
    if (pt.k > 0) proj = -proj;  // sgn(-k_i)

    // denominator after Gamma_i-averaging, factor by factor:
    // (1 - m) norms to (1 - proj(m^{kappa/g}))^g with g = gcd(c(m), kappa)
    FactorList den;
    auto norm_factor = [&](const CharElem& mono_elem) {
      const auto& [e, c] = *mono_elem.terms().begin();
      Int cc = e[n];
      Int g = gcd_int(mod_euclid(cc, Int(pt.kappa)), Int(pt.kappa));
      if (g == 0) g = pt.kappa;
      Int power = Int(pt.kappa) / g;
      CharElem mp = CharElem::monomial(n + 1, power * e, Int(1), pt.lat);
      CharElem w = gysin_invariant_part(mp, n);
      const auto& [we, wc] = *w.terms().begin();
      fl_add(den, we, to_ll(g));
    };
    norm_factor(zeta_class<Int>(cs, pt));
    for (std::size_t j = 0; j < cs.m(); ++j) {
      if (j == i) continue;
      norm_factor(embed_at_point(CharElem::monomial(n, cs.points[j].alpha), cs, pt));
    }
    sum.add_term(std::move(proj), std::move(den));
  }

  // the isolated point p_{m+1}: plain restriction over the Euler factor
  FactorList lam;
  for (const auto& pt : cs.points) fl_add(lam, pt.alpha);
  sum.add_term(delta.at_free, lam);

  return sum.certified_sum(what);
}

}  // namespace cut_detail

// Formula 5.1: the equivariant index of the restriction tuple on the
// twisted projective space (all pairings negative).
inline CharElem orbifold_index(const CutSpace& cs, const CutDelta& delta) {
  for (const auto& pt : cs.points)
    if (pt.k > 0) fail(errc::mixed_signs, "orbifold_index needs negative pairings");
  return cut_detail::localization_sum(cs, delta, "orbifold index");
}

// Formula 5.2: the index of delta on the sign-fixed model, evaluated
// through the mixed-sign localization sum.  With r positive pairings the
// identity reads  ind(delta) = (-1)^r J(delta * prod_{k_j>0} x^{alpha_j}),
// which reduces to orbifold_index when r = 0.
inline CharElem index_general(const CutSpace& cs, const CutDelta& delta) {
  std::size_t r = 0;
  CharElem twist = CharElem::one(cs.rank);
  for (const auto& pt : cs.points) {
    if (pt.k > 0) {
      ++r;
      twist *= CharElem::monomial(cs.rank, pt.alpha);
    }
  }
  if (r == 0) return orbifold_index(cs, delta);
  CutDelta tw;
  for (std::size_t i = 0; i < cs.m(); ++i)
    tw.at_points.push_back(delta.at_points[i] * embed_at_point(twist, cs, cs.points[i]));
  tw.at_free = delta.at_free * twist;
  CharElem j = cut_detail::localization_sum(cs, tw, "general index");
  return r % 2 == 0 ? j : -j;
}

// mixed-sign cut data (pairings nonzero, any sign)
inline CutSpace build_cut_space_general(std::size_t rank, const std::vector<IntVector>& weights,
                                        const IntVector& xi) {
  return cut_detail::build_points(rank, weights, xi);
}

// The localization oracle for a local index: the cut model at p is built on
// the descending weights, the orbit-circle restrictions come from the lower
// endpoints of the descending edges, and the free restriction is a_p.
inline CharElem oracle_local_index(const GkmGraph& g, const MorseOrientation& mo,
                                   const KClass& a, const std::string& p) {
  const auto& ds = mo.descending.at(p);
  if (ds.empty()) return a.at(p);
  std::vector<IntVector> weights;
  std::vector<CharElem> lowers;
  for (const auto& d : ds) {
    weights.push_back(d.label);
    lowers.push_back(a.at(d.lower));
  }
  CutSpace cs = build_cut_space(g.rank, weights, mo.pol.effective(p));
  CutDelta delta = cut_delta_from_restrictions(cs, lowers, a.at(p));
  return orbifold_index(cs, delta);
}

}  // namespace gkmk
