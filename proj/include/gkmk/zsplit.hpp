// The z/H coordinate split.  A primitive polarization xi is completed to a
// weight basis whose first coordinate pairs to 1 with xi; an element of
// R(G) then becomes a finite sum  sum_k c_k z^k  with c_k in R(H), and the
// fraction-field variant (c_k in Q(H)) is the ambient ring of the transfer
// operators.
#pragma once

#include <map>
#include <memory>

#include "gkmk/charelem.hpp"
#include "gkmk/fraction.hpp"

namespace gkmk {

struct SplitBasis {
  IntVector xi;
  IntMatrix b;     // rows: the completed weight basis
  IntMatrix binv;  // inverse; column 0 equals xi
  std::size_t rank;

  std::size_t h_rank() const { return rank - 1; }
};

using SplitBasisPtr = std::shared_ptr<const SplitBasis>;

inline SplitBasisPtr make_split_basis(const IntVector& xi) {
  auto sb = std::make_shared<SplitBasis>();
  sb->xi = xi;
  sb->b = complete_to_basis(xi);
  sb->binv = inverse_unimodular(sb->b);
  sb->rank = xi.size();
  return sb;
}

// coordinates of a weight in the split basis: (z-exponent, H-part)
inline std::pair<Int, IntVector> split_weight(const SplitBasis& sb, const IntVector& w) {
  IntVector c = mul_row(w, sb.binv);
  IntVector h(sb.h_rank());
  for (std::size_t j = 1; j < sb.rank; ++j) h[j - 1] = c[j];
  return {c[0], h};
}

inline IntVector join_weight(const SplitBasis& sb, const Int& k, const IntVector& h) {
  IntVector c(sb.rank);
  c[0] = k;
  for (std::size_t j = 1; j < sb.rank; ++j) c[j] = h[j - 1];
  return mul_row(c, sb.b);
}

// sum_k c_k z^k; Coef is CharElem (R(H)) or Fraction (Q(H)).
template <class Coef>
struct ZFormT {
  SplitBasisPtr basis;
  std::map<Int, Coef> ck;

  bool is_zero() const { return ck.empty(); }

  void add_term(const Int& k, const Coef& c) {
    if (c.is_zero()) return;
    auto it = ck.find(k);
    if (it == ck.end()) {
      ck.emplace(k, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) ck.erase(it);
    }
  }

  ZFormT& operator+=(const ZFormT& o) {
    for (const auto& [k, c] : o.ck) add_term(k, c);
    return *this;
  }
  friend ZFormT operator+(ZFormT a, const ZFormT& b) { return a += b; }
  friend ZFormT operator-(const ZFormT& a) {
    ZFormT r;
    r.basis = a.basis;
    for (const auto& [k, c] : a.ck) r.ck.emplace(k, -c);
    return r;
  }
  friend ZFormT operator-(ZFormT a, const ZFormT& b) { return a += -b; }

  friend ZFormT operator*(const ZFormT& a, const ZFormT& b) {
    ZFormT r;
    r.basis = a.basis ? a.basis : b.basis;
    for (const auto& [ka, ca] : a.ck)
      for (const auto& [kb, cb] : b.ck) r.add_term(ka + kb, ca * cb);
    return r;
  }

  friend bool operator==(const ZFormT& a, const ZFormT& b) {
    if (a.ck.size() != b.ck.size()) return false;
    auto it = a.ck.begin();
    auto jt = b.ck.begin();
    for (; it != a.ck.end(); ++it, ++jt) {
      if (it->first != jt->first) return false;
      if (!(it->second == jt->second)) return false;
    }
    return true;
  }
};

using ZSplitForm = ZFormT<CharElem>;  // R(G) in split coordinates
using ZHatForm = ZFormT<Fraction>;    // R-hat(G): Q(H) coefficients

// R(G) -> split form; lossless (z_join inverts it).
inline ZSplitForm z_split(const CharElem& f, const SplitBasisPtr& sb) {
  if (!f.free_context() || f.rank() != sb->rank)
    fail(errc::context_mismatch, "z_split needs a free element of matching rank");
  ZSplitForm r;
  r.basis = sb;
  for (const auto& [e, c] : f.terms()) {
    auto [k, h] = split_weight(*sb, e);
    auto it = r.ck.find(k);
    if (it == r.ck.end()) it = r.ck.emplace(k, CharElem::zero(sb->h_rank())).first;
    it->second.add_term(h, c);
    if (it->second.is_zero()) r.ck.erase(it);
  }
  return r;
}

inline CharElem z_join(const ZSplitForm& zf) {
  const SplitBasis& sb = *zf.basis;
  CharElem f(sb.rank);
  for (const auto& [k, c] : zf.ck)
    for (const auto& [h, x] : c.terms()) f.add_term(join_weight(sb, k, h), x);
  return f;
}

inline ZHatForm to_hat(const ZSplitForm& zf) {
  ZHatForm r;
  r.basis = zf.basis;
  for (const auto& [k, c] : zf.ck) r.ck.emplace(k, Fraction(c));
  return r;
}

inline ZHatForm zhat_scale(const ZHatForm& a, const Fraction& s) {
  ZHatForm r;
  r.basis = a.basis;
  if (s.is_zero()) return r;
  for (const auto& [k, c] : a.ck) r.add_term(k, c * s);
  return r;
}

// Certify that every Q(H) coefficient is an honest R(H) element and return
// the corresponding character; IntegralityFailure otherwise.
inline CharElem certify_integral(const ZHatForm& zf, const char* what) {
  ZSplitForm out;
  out.basis = zf.basis;
  for (const auto& [k, c] : zf.ck) {
    auto q = is_character(c);
    if (!q) fail(errc::integrality_failure, std::string(what) + ": coefficient of z^" +
                                                k.str() + " is not integral");
    if (!q->is_zero()) out.ck.emplace(k, *q);
  }
  return z_join(out);
}

}  // namespace gkmk
