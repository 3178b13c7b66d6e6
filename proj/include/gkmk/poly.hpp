// Dense univariate polynomials over an abstract coefficient field, used by
// the partial-fraction kernel with F = Q (classical formulas), F = Q(H)
// (character interpolation) and F = Q(h) with polynomial entries (the
// cohomological analogue).  Coefficients are low-degree-first; the empty
// vector is the zero polynomial.
#pragma once

#include <utility>
#include <vector>

#include "gkmk/fraction.hpp"

namespace gkmk {

inline bool field_is_zero(const Rat& x) { return x == 0; }
template <class C>
bool field_is_zero(const FractionT<C>& x) { return x.is_zero(); }

// exemplars used to mint constants of context-carrying fields
template <class F>
struct FieldCtx {
  F zero;
  F one;
};

inline FieldCtx<Rat> rat_field() { return {Rat(0), Rat(1)}; }
template <class C>
FieldCtx<FractionT<C>> fraction_field(std::size_t rank) {
  return {FractionT<C>::zero(rank), FractionT<C>::one(rank)};
}

template <class F>
using Poly = std::vector<F>;

template <class F>
void pnorm(Poly<F>& p) {
  while (!p.empty() && field_is_zero(p.back())) p.pop_back();
}

template <class F>
bool pis_zero(const Poly<F>& p) { return p.empty(); }

// degree of a nonzero polynomial
template <class F>
std::size_t pdeg(const Poly<F>& p) { return p.size() - 1; }

template <class F>
Poly<F> pconst(const FieldCtx<F>&, const F& c) {
  Poly<F> p;
  if (!field_is_zero(c)) p.push_back(c);
  return p;
}

template <class F>
Poly<F> padd(const FieldCtx<F>& fx, Poly<F> a, const Poly<F>& b) {
  if (a.size() < b.size()) a.resize(b.size(), fx.zero);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = a[i] + b[i];
  pnorm(a);
  return a;
}

template <class F>
Poly<F> pneg(Poly<F> a) {
  for (F& c : a) c = -c;
  return a;
}

template <class F>
Poly<F> psub(const FieldCtx<F>& fx, Poly<F> a, const Poly<F>& b) {
  return padd(fx, std::move(a), pneg(b));
}

template <class F>
Poly<F> pscale(Poly<F> a, const F& s) {
  if (field_is_zero(s)) return {};
  for (F& c : a) c = c * s;
  pnorm(a);
  return a;
}

template <class F>
Poly<F> pmul(const FieldCtx<F>& fx, const Poly<F>& a, const Poly<F>& b) {
  if (a.empty() || b.empty()) return {};
  Poly<F> r(a.size() + b.size() - 1, fx.zero);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (field_is_zero(a[i])) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = r[i + j] + a[i] * b[j];
  }
  pnorm(r);
  return r;
}

template <class F>
Poly<F> pshift(const FieldCtx<F>& fx, Poly<F> a, std::size_t k) {
  if (a.empty() || k == 0) return a;
  a.insert(a.begin(), k, fx.zero);
  return a;
}

template <class F>
std::pair<Poly<F>, Poly<F>> pdivmod(const FieldCtx<F>& fx, Poly<F> a, const Poly<F>& b) {
  if (b.empty()) fail(errc::bad_parameters, "polynomial division by zero");
  if (a.size() < b.size()) return {Poly<F>{}, std::move(a)};
  const F& lead = b.back();
  const std::size_t db = b.size() - 1;
  Poly<F> q(a.size() - db, fx.zero);
  for (std::size_t i = a.size(); i-- > db;) {
    if (field_is_zero(a[i])) continue;
    F c = a[i] / lead;
    std::size_t sh = i - db;
    q[sh] = c;
    for (std::size_t j = 0; j <= db; ++j) a[sh + j] = a[sh + j] - c * b[j];
  }
  pnorm(q);
  pnorm(a);
  return {std::move(q), std::move(a)};
}

template <class F>
Poly<F> pmod(const FieldCtx<F>& fx, Poly<F> a, const Poly<F>& b) {
  return pdivmod(fx, std::move(a), b).second;
}

template <class F>
Poly<F> pmonic(Poly<F> a) {
  if (a.empty()) return a;
  const F inv = a.back();
  for (F& c : a) c = c / inv;
  return a;
}

template <class F>
Poly<F> pgcd_monic(const FieldCtx<F>& fx, Poly<F> a, Poly<F> b) {
  pnorm(a);
  pnorm(b);
  while (!b.empty()) {
    Poly<F> r = pmod(fx, std::move(a), b);
    a = std::move(b);
    b = std::move(r);
  }
  return pmonic(std::move(a));
}

// inverse of a modulo m (m nonconstant); CommonFactor when gcd(a, m) != 1
template <class F>
Poly<F> pinv_mod(const FieldCtx<F>& fx, Poly<F> a, const Poly<F>& m) {
  a = pmod(fx, std::move(a), m);
  Poly<F> r0 = m, r1 = a;
  Poly<F> t0, t1{fx.one};
  while (!r1.empty()) {
    auto [q, r2] = pdivmod(fx, r0, r1);
    Poly<F> t2 = psub(fx, t0, pmul(fx, q, t1));
    r0 = std::move(r1);
    r1 = std::move(r2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.size() != 1) fail(errc::common_factor, "denominator factors are not coprime");
  return pmod(fx, pscale(std::move(t0), F(fx.one / r0[0])), m);
}

}  // namespace gkmk
