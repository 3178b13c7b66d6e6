// Integer cyclotomic arithmetic Z[w]/(Phi_K(w)) for the finite twists in
// the orbifold localization sums.  K stays tiny (the lcm of the per-point
// orbifold orders), so a dense reduced representation is plenty.
#pragma once

#include <mutex>
#include <unordered_map>
#include <vector>

#include "gkmk/ints.hpp"

namespace gkmk {

namespace detail {

// exact division of integer polynomials (low-degree-first), divisor monic
inline std::vector<Int> poly_div_exact_monic(std::vector<Int> a, const std::vector<Int>& b) {
  const std::size_t db = b.size() - 1;
  std::vector<Int> q;
  if (a.size() > db) q.assign(a.size() - db, Int(0));
  for (std::size_t i = a.size(); i-- > db;) {
    Int c = a[i];
    if (c == 0) continue;
    std::size_t sh = i - db;
    q[sh] = c;
    for (std::size_t j = 0; j <= db; ++j) a[sh + j] -= c * b[j];
  }
  for (const Int& r : a)
    if (r != 0) fail(errc::not_divisible, "cyclotomic polynomial division not exact");
  return q;
}

}  // namespace detail

// K-th cyclotomic polynomial, low-degree-first coefficients.  Divisor
// polynomials are filled in bottom-up under a single lock.
inline const std::vector<Int>& cyclotomic_poly(unsigned K) {
  static std::mutex mu;
  static std::unordered_map<unsigned, std::vector<Int>> cache;
  if (K == 0) fail(errc::bad_parameters, "cyclotomic order must be positive");
  std::lock_guard<std::mutex> lock(mu);
  for (unsigned d = 1; d <= K; ++d) {
    if (K % d != 0 || cache.count(d)) continue;
    std::vector<Int> num(d + 1);
    num[0] = -1;
    num[d] = 1;
    for (unsigned e = 1; e < d; ++e)
      if (d % e == 0) num = detail::poly_div_exact_monic(std::move(num), cache.at(e));
    cache.emplace(d, std::move(num));
  }
  return cache.at(K);
}

// Element of Z[w]/(Phi_K(w)).  K == 1 plays the role of a plain integer and
// promotes silently when mixed with a genuine cyclotomic order.
class CycInt {
 public:
  CycInt() : k_(1), c_(1) {}
  CycInt(int v) : k_(1), c_(1) { c_[0] = v; }  // NOLINT: implicit by design
  CycInt(const Int& v) : k_(1), c_(1) { c_[0] = v; }

  // w^e in Z[w]/(Phi_K)
  static CycInt root_power(unsigned K, const Int& e) {
    CycInt r;
    r.k_ = K;
    const auto& phi = cyclotomic_poly(K);
    const std::size_t deg = phi.size() - 1;
    std::vector<Int> p(static_cast<std::size_t>(to_ll(mod_euclid(e, Int(K)))) + 1);
    p.back() = 1;
    r.c_ = reduce(p, phi, deg);
    return r;
  }

  unsigned order() const { return k_; }
  bool is_zero() const {
    for (const Int& x : c_)
      if (x != 0) return false;
    return true;
  }
  bool is_rational() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
      if (c_[i] != 0) return false;
    return true;
  }
  const Int& rational_value() const { return c_[0]; }

  friend CycInt operator+(CycInt a, const CycInt& b) {
    promote(a, b, [](std::vector<Int>& x, const std::vector<Int>& y) {
      for (std::size_t i = 0; i < y.size(); ++i) x[i] += y[i];
    });
    return a;
  }
  friend CycInt operator-(CycInt a, const CycInt& b) {
    promote(a, b, [](std::vector<Int>& x, const std::vector<Int>& y) {
      for (std::size_t i = 0; i < y.size(); ++i) x[i] -= y[i];
    });
    return a;
  }
  friend CycInt operator-(const CycInt& a) {
    CycInt r = a;
    for (Int& x : r.c_) x = -x;
    return r;
  }
  CycInt& operator+=(const CycInt& o) { return *this = *this + o; }
  CycInt& operator-=(const CycInt& o) { return *this = *this - o; }

  friend CycInt operator*(const CycInt& a, const CycInt& b) {
    if (a.k_ == 1 || b.k_ == 1) {
      // scalar case
      const CycInt& big = a.k_ == 1 ? b : a;
      const Int s = (a.k_ == 1 ? a : b).c_[0];
      CycInt r = big;
      for (Int& x : r.c_) x *= s;
      return r;
    }
    if (a.k_ != b.k_) fail(errc::context_mismatch, "mixed cyclotomic orders");
    const auto& phi = cyclotomic_poly(a.k_);
    std::vector<Int> p(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) p[i + j] += a.c_[i] * b.c_[j];
    }
    CycInt r;
    r.k_ = a.k_;
    r.c_ = reduce(p, phi, phi.size() - 1);
    return r;
  }
  CycInt& operator*=(const CycInt& o) { return *this = *this * o; }

  friend bool operator==(const CycInt& a, const CycInt& b) { return (a - b).is_zero(); }

  std::string str() const {
    if (is_rational()) return c_[0].str();
    std::string s = "(";
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (c_[i] == 0) continue;
      if (!first) s += " + ";
      s += c_[i].str();
      if (i > 0) s += "*w^" + std::to_string(i);
      first = false;
    }
    return s + ")";
  }

 private:
  static std::vector<Int> reduce(std::vector<Int> p, const std::vector<Int>& phi,
                                 std::size_t deg) {
    for (std::size_t i = p.size(); i-- > deg;) {
      Int c = p[i];
      if (c == 0) continue;
      std::size_t sh = i - deg;
      for (std::size_t j = 0; j < phi.size(); ++j) p[sh + j] -= c * phi[j];
    }
    p.resize(deg);
    if (p.empty()) p.resize(1);
    return p;
  }

  template <class Op>
  static void promote(CycInt& a, const CycInt& b, Op op) {
    if (a.k_ == b.k_) {
      op(a.c_, b.c_);
      return;
    }
    if (a.k_ == 1) {
      Int v = a.c_[0];
      a.k_ = b.k_;
      a.c_.assign(b.c_.size(), Int(0));
      a.c_[0] = v;
      op(a.c_, b.c_);
      return;
    }
    if (b.k_ == 1) {
      std::vector<Int> bc(a.c_.size(), Int(0));
      bc[0] = b.c_[0];
      op(a.c_, bc);
      return;
    }
    fail(errc::context_mismatch, "mixed cyclotomic orders");
  }

  unsigned k_;
  std::vector<Int> c_;
};

inline bool coeff_is_zero(const CycInt& c) { return c.is_zero(); }
inline bool coeff_is_negative(const CycInt&) { return false; }
inline std::string coeff_str(const CycInt& c) { return c.str(); }
inline std::complex<double> coeff_complex(const CycInt&) {
  fail(errc::bad_parameters, "numeric evaluation of cyclotomic coefficients");
}

}  // namespace gkmk
