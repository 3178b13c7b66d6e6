// Lazy fractions of group-ring elements.  No gcd normalization is ever
// attempted: equality is by cross-multiplication, and a ring element is
// extracted (when one is demanded) by exact division.  The only rewriting
// is cheap unit bookkeeping: common monomial shifts, integer content, and
// folding single-term denominators, which are units of the Laurent ring.
#pragma once

#include <optional>
#include <string>
#include <utility>

#include "gkmk/charelem.hpp"

namespace gkmk {

template <class C>
class FractionT {
 public:
  FractionT() = default;
  explicit FractionT(CharElemT<C> num)
      : num_(std::move(num)), den_(CharElemT<C>::one(num_.rank(), num_.quotient())) {}
  FractionT(CharElemT<C> num, CharElemT<C> den)
      : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) fail(errc::denominator_vanishes, "fraction with zero denominator");
    num_.require_context(den_);
    reduce_light();
  }

  static FractionT zero(std::size_t rank) {
    return FractionT(CharElemT<C>::zero(rank));
  }
  static FractionT one(std::size_t rank) {
    return FractionT(CharElemT<C>::one(rank));
  }

  const CharElemT<C>& num() const { return num_; }
  const CharElemT<C>& den() const { return den_; }
  std::size_t rank() const { return num_.rank(); }
  bool is_zero() const { return num_.is_zero(); }

  friend FractionT operator+(const FractionT& a, const FractionT& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    return FractionT(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend FractionT operator-(const FractionT& a, const FractionT& b) {
    if (b.is_zero()) return a;
    return FractionT(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend FractionT operator-(const FractionT& a) {
    FractionT r = a;
    r.num_ = -r.num_;
    return r;
  }
  friend FractionT operator*(const FractionT& a, const FractionT& b) {
    if (a.is_zero() || b.is_zero()) return zero(a.rank());
    return FractionT(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend FractionT operator/(const FractionT& a, const FractionT& b) {
    if (b.is_zero()) fail(errc::denominator_vanishes, "division by a zero fraction");
    if (a.is_zero()) return zero(a.rank());
    return FractionT(a.num_ * b.den_, a.den_ * b.num_);
  }
  FractionT& operator+=(const FractionT& o) { return *this = *this + o; }
  FractionT& operator-=(const FractionT& o) { return *this = *this - o; }
  FractionT& operator*=(const FractionT& o) { return *this = *this * o; }
  FractionT& operator/=(const FractionT& o) { return *this = *this / o; }

  // cross-multiplied equality (exact; no normalization assumed)
  friend bool operator==(const FractionT& a, const FractionT& b) {
    return a.num_ * b.den_ == b.num_ * a.den_;
  }

  std::string str() const { return "(" + num_.str() + ") / (" + den_.str() + ")"; }

 private:
  void reduce_light() {
    if (num_.is_zero()) {
      den_ = CharElemT<C>::one(num_.rank(), num_.quotient());
      return;
    }
    if (!num_.free_context()) return;
    // shift out the common monomial unit
    IntVector mn = num_.min_exponent(), md = den_.min_exponent();
    IntVector s(num_.rank());
    bool shift = false;
    for (std::size_t j = 0; j < s.size(); ++j) {
      s[j] = mn[j] < md[j] ? mn[j] : md[j];
      shift = shift || s[j] != 0;
    }
    if (shift) {
      num_ = num_.mul_monomial(-s);
      den_ = den_.mul_monomial(-s);
    }
    if constexpr (std::is_same_v<C, Int>) {
      Int g = gcd_int(int_content(num_), int_content(den_));
      if (g > 1) {
        CharElemT<C> n2(num_.rank()), d2(num_.rank());
        for (const auto& [e, c] : num_.terms()) n2.add_term(e, c / g);
        for (const auto& [e, c] : den_.terms()) d2.add_term(e, c / g);
        num_ = std::move(n2);
        den_ = std::move(d2);
      }
    }
    // a one-term denominator is a unit times an integer
    if (den_.size() == 1) {
      const auto& [e, c] = *den_.terms().begin();
      if (!e.is_zero()) {
        num_ = num_.mul_monomial(-e);
        den_ = CharElemT<C>::constant(num_.rank(), c);
      }
      if constexpr (std::is_same_v<C, Rat>) {
        const auto& [e2, c2] = *den_.terms().begin();
        if (e2.is_zero() && c2 != 1) {
          num_ = C(C(1) / c2) * num_;
          den_ = CharElemT<C>::one(num_.rank());
        }
      }
    }
    if (num_ == den_) {
      num_ = CharElemT<C>::one(num_.rank());
      den_ = num_;
    }
  }

  CharElemT<C> num_, den_;
};

using Fraction = FractionT<Int>;     // Q(H) and index-sum arithmetic
using CohFraction = FractionT<Rat>;  // rational-function field over Q[h]

// Returns the exact quotient when the denominator divides the numerator;
// absence is a value, not an error.
template <class C>
std::optional<CharElemT<C>> is_character(const FractionT<C>& fr) {
  return try_exact_div(fr.num(), fr.den());
}

inline bool fraction_is_zero(const Fraction& f) { return f.is_zero(); }
inline bool fraction_is_zero(const CohFraction& f) { return f.is_zero(); }

// numeric evaluation of a fraction at a point on the unit torus
inline std::complex<double> eval_numeric(const Fraction& f,
                                         const std::vector<std::complex<double>>& pt) {
  std::complex<double> d = f.den().eval(pt);
  if (std::abs(d) < 1e-12) fail(errc::denominator_vanishes, "denominator vanishes at point");
  return f.num().eval(pt) / d;
}

}  // namespace gkmk
