// Group-ring elements of (possibly torsion) character lattices: finitely
// supported maps exponent -> coefficient.  With an n-dimensional free
// context this is R(G) = Z[x1^+-1, ..., xn^+-1]; with a quotient context it
// is the representation ring of the corresponding subgroup; with rational
// coefficients and polynomial support it doubles as the symmetric algebra
// used by the cohomology pipeline.
#pragma once

#include <complex>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "gkmk/lattice.hpp"

namespace gkmk {

// coefficient helpers ---------------------------------------------------

inline bool coeff_is_zero(const Int& c) { return c == 0; }
inline bool coeff_is_zero(const Rat& c) { return c == 0; }
inline bool coeff_is_negative(const Int& c) { return c < 0; }
inline bool coeff_is_negative(const Rat& c) { return c < 0; }

inline bool coeff_divide(const Int& a, const Int& b, Int& out) {
  if (b == 0) return false;
  Int q = a / b;
  if (q * b != a) return false;
  out = q;
  return true;
}
inline bool coeff_divide(const Rat& a, const Rat& b, Rat& out) {
  if (b == 0) return false;
  out = a / b;
  return true;
}

inline std::string coeff_str(const Int& c) { return c.str(); }
inline std::string coeff_str(const Rat& c) { return c.str(); }

inline std::complex<double> coeff_complex(const Int& c) {
  return {c.convert_to<double>(), 0.0};
}
inline std::complex<double> coeff_complex(const Rat& c) {
  return {c.convert_to<double>(), 0.0};
}

// grlex: total degree first, then lexicographic.
inline bool grlex_less(const IntVector& a, const IntVector& b) {
  Int da = 0, db = 0;
  for (const Int& x : a.v) da += x;
  for (const Int& x : b.v) db += x;
  if (da != db) return da < db;
  return a < b;
}

template <class C>
class CharElemT {
 public:
  CharElemT() : rank_(0) {}
  explicit CharElemT(std::size_t rank, QuotientPtr quo = nullptr)
      : rank_(rank), quo_(std::move(quo)) {}

  static CharElemT zero(std::size_t rank, QuotientPtr quo = nullptr) {
    return CharElemT(rank, std::move(quo));
  }
  static CharElemT constant(std::size_t rank, C c, QuotientPtr quo = nullptr) {
    CharElemT e(rank, std::move(quo));
    e.add_term(IntVector(rank), std::move(c));
    return e;
  }
  static CharElemT one(std::size_t rank, QuotientPtr quo = nullptr) {
    return constant(rank, C(1), std::move(quo));
  }
  static CharElemT monomial(std::size_t rank, const IntVector& e, C c = C(1),
                            QuotientPtr quo = nullptr) {
    CharElemT r(rank, std::move(quo));
    r.add_term(e, std::move(c));
    return r;
  }

  std::size_t rank() const { return rank_; }
  const QuotientPtr& quotient() const { return quo_; }
  bool free_context() const { return quo_ == nullptr; }
  const std::map<IntVector, C>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  bool context_equal(const CharElemT& o) const {
    if (rank_ != o.rank_) return false;
    if (!quo_ && !o.quo_) return true;
    if (!quo_ || !o.quo_) return false;
    return quo_ == o.quo_ || *quo_ == *o.quo_;
  }

  void require_context(const CharElemT& o) const {
    if (!context_equal(o)) fail(errc::context_mismatch, "lattice contexts differ");
  }

  void add_term(const IntVector& e, C c) {
    if (coeff_is_zero(c)) return;
    if (e.size() != rank_) fail(errc::context_mismatch, "exponent rank mismatch");
    IntVector k = quo_ ? quo_->canon(e) : e;
    auto it = terms_.find(k);
    if (it == terms_.end()) {
      terms_.emplace(std::move(k), std::move(c));
    } else {
      it->second += c;
      if (coeff_is_zero(it->second)) terms_.erase(it);
    }
  }

  friend bool operator==(const CharElemT& a, const CharElemT& b) {
    return a.rank_ == b.rank_ && a.terms_ == b.terms_;
  }

  CharElemT& operator+=(const CharElemT& o) {
    require_context(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  CharElemT& operator-=(const CharElemT& o) {
    require_context(o);
    for (const auto& [e, c] : o.terms_) add_term(e, C(-c));
    return *this;
  }
  friend CharElemT operator+(CharElemT a, const CharElemT& b) { return a += b; }
  friend CharElemT operator-(CharElemT a, const CharElemT& b) { return a -= b; }
  friend CharElemT operator-(const CharElemT& a) {
    CharElemT r(a.rank_, a.quo_);
    for (const auto& [e, c] : a.terms_) r.terms_.emplace(e, C(-c));
    return r;
  }

  friend CharElemT operator*(const CharElemT& a, const CharElemT& b) {
    a.require_context(b);
    CharElemT r(a.rank_, a.quo_ ? a.quo_ : b.quo_);
    // multiply by the smaller operand on the outside
    const CharElemT& s = a.size() <= b.size() ? a : b;
    const CharElemT& t = a.size() <= b.size() ? b : a;
    for (const auto& [es, cs] : s.terms_)
      for (const auto& [et, ct] : t.terms_) r.add_term(es + et, C(cs * ct));
    return r;
  }

  CharElemT& operator*=(const CharElemT& o) { return *this = *this * o; }

  friend CharElemT operator*(const C& c, const CharElemT& a) {
    CharElemT r(a.rank_, a.quo_);
    if (coeff_is_zero(c)) return r;
    for (const auto& [e, x] : a.terms_) r.add_term(e, C(c * x));
    return r;
  }

  CharElemT mul_monomial(const IntVector& e, const C& c = C(1)) const {
    CharElemT r(rank_, quo_);
    for (const auto& [k, x] : terms_) r.add_term(k + e, C(c * x));
    return r;
  }

  // componentwise minimum exponent over the support (free contexts)
  IntVector min_exponent() const {
    IntVector m = terms_.begin()->first;
    for (const auto& [e, c] : terms_)
      for (std::size_t j = 0; j < rank_; ++j)
        if (e[j] < m[j]) m[j] = e[j];
    return m;
  }

  const std::pair<const IntVector, C>& leading_grlex() const {
    auto best = terms_.begin();
    for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
      if (grlex_less(best->first, it->first)) best = it;
    return *best;
  }

  std::complex<double> eval(const std::vector<std::complex<double>>& point) const {
    if (point.size() != rank_) fail(errc::bad_parameters, "evaluation point has wrong rank");
    std::complex<double> s = 0.0;
    for (const auto& [e, c] : terms_) {
      std::complex<double> m = coeff_complex(c);
      for (std::size_t j = 0; j < rank_; ++j) {
        long long k = to_ll(e[j]);
        std::complex<double> base = k >= 0 ? point[j] : 1.0 / point[j];
        for (long long t = 0; t < (k >= 0 ? k : -k); ++t) m *= base;
      }
      s += m;
    }
    return s;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      bool neg = coeff_is_negative(c);
      C cc = neg ? C(-c) : c;
      if (first) {
        if (neg) os << "-";
        first = false;
      } else {
        os << (neg ? " - " : " + ");
      }
      std::string cs = coeff_str(cc);
      if (e.is_zero()) {
        os << cs;
      } else {
        if (cs != "1") os << cs << "*";
        os << "x^" << e.str();
      }
    }
    return os.str();
  }

 private:
  std::size_t rank_;
  QuotientPtr quo_;
  std::map<IntVector, C> terms_;
};

using CharElem = CharElemT<Int>;   // R(G) and friends
using CohElem = CharElemT<Rat>;    // polynomial classes in equivariant cohomology

// integer content of the coefficients (0 for the zero element)
inline Int int_content(const CharElem& f) {
  Int g = 0;
  for (const auto& [e, c] : f.terms()) g = gcd_int(g, c);
  return g;
}

// Exact division in the Laurent ring over a free context.  Monomials are
// units, so both operands are first shifted to the nonnegative orthant;
// divisibility there reduces to ordinary polynomial division by the single
// divisor, and iterated grlex leading-term elimination is complete over an
// integral domain.  Throws NotDivisible with the remainder as witness.
template <class C>
CharElemT<C> exact_div(const CharElemT<C>& f, const CharElemT<C>& g) {
  if (g.is_zero()) fail(errc::bad_parameters, "division by the zero element");
  if (!f.free_context() || !g.free_context())
    fail(errc::context_mismatch, "exact division needs a free lattice context");
  f.require_context(g);
  const std::size_t n = f.rank();
  if (f.is_zero()) return CharElemT<C>::zero(n);

  IntVector sf = f.min_exponent(), sg = g.min_exponent();
  CharElemT<C> r = f.mul_monomial(-sf);
  CharElemT<C> d = g.mul_monomial(-sg);
  const auto& [ltd_e, ltd_c] = d.leading_grlex();

  CharElemT<C> q(n);
  while (!r.is_zero()) {
    const auto& [ltr_e, ltr_c] = r.leading_grlex();
    IntVector de = ltr_e - ltd_e;
    bool ok = true;
    for (std::size_t j = 0; j < n; ++j) ok = ok && de[j] >= 0;
    C qc(0);
    if (ok) ok = coeff_divide(ltr_c, ltd_c, qc);
    if (!ok) {
      error e(errc::not_divisible, "remainder " + r.str());
      throw e;
    }
    q.add_term(de, qc);
    r -= d.mul_monomial(de, qc);
  }
  return q.mul_monomial(sf - sg);
}

template <class C>
std::optional<CharElemT<C>> try_exact_div(const CharElemT<C>& f, const CharElemT<C>& g) {
  try {
    return exact_div(f, g);
  } catch (const error& e) {
    if (e.code() == errc::not_divisible) return std::nullopt;
    throw;
  }
}

// Restriction map along a quotient lattice: push every exponent through the
// canonical form and merge.  A ring homomorphism by construction.
template <class C>
CharElemT<C> restrict_to(const CharElemT<C>& f, const QuotientPtr& q) {
  if (q->ambient_rank() != f.rank())
    fail(errc::context_mismatch, "quotient ambient rank does not match element");
  CharElemT<C> r(f.rank(), q);
  for (const auto& [e, c] : f.terms()) r.add_term(e, c);
  return r;
}

// Whether f lies in the ideal (x^alpha - 1); equivalently f restricts to
// zero in R(G_e).  Coefficients are bucketed by coset of Z*alpha using a
// pivot-coordinate reduction, deliberately independent of the Smith-form
// machinery in QuotientLattice (the two routes cross-check each other).
inline bool divisible_mod_weight(const CharElem& f, const IntVector& alpha) {
  if (alpha.is_zero()) fail(errc::zero_vector, "divisible_mod_weight with zero weight");
  if (!f.free_context())
    fail(errc::context_mismatch, "edge test needs a free lattice context");
  IntVector a = alpha;
  std::size_t p = 0;
  while (a[p] == 0) ++p;
  if (a[p] < 0) a = -a;
  std::map<IntVector, Int> buckets;
  for (const auto& [e, c] : f.terms()) {
    Int t = floor_div(e[p], a[p]);
    IntVector rep = e - t * a;
    buckets[rep] += c;
  }
  for (const auto& [rep, s] : buckets)
    if (s != 0) return false;
  return true;
}

}  // namespace gkmk
