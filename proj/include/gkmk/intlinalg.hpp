// Exact integer linear algebra: vectors of the character lattice, integer
// matrices, Hermite and Smith normal forms, primitivity and basis
// completion.  Everything works over arbitrary-precision integers.
#pragma once

#include <algorithm>
#include <compare>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "gkmk/errors.hpp"
#include "gkmk/ints.hpp"

namespace gkmk {

// ---------------------------------------------------------------------------
// IntVector: an element of Z^n (a weight, a polarization, an exponent).

struct IntVector {
  std::vector<Int> v;

  IntVector() = default;
  explicit IntVector(std::size_t n) : v(n) {}
  IntVector(std::initializer_list<long long> xs) {
    v.reserve(xs.size());
    for (long long x : xs) v.emplace_back(x);
  }
  explicit IntVector(std::vector<Int> xs) : v(std::move(xs)) {}

  std::size_t size() const { return v.size(); }
  Int& operator[](std::size_t i) { return v[i]; }
  const Int& operator[](std::size_t i) const { return v[i]; }

  bool is_zero() const {
    return std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
  }

  friend bool operator==(const IntVector& a, const IntVector& b) { return a.v == b.v; }
  friend std::strong_ordering operator<=>(const IntVector& a, const IntVector& b) {
    if (a.v.size() != b.v.size()) return a.v.size() <=> b.v.size();
    for (std::size_t i = 0; i < a.v.size(); ++i)
      if (a.v[i] != b.v[i]) return a.v[i] < b.v[i] ? std::strong_ordering::less
                                                   : std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  IntVector& operator+=(const IntVector& o) {
    for (std::size_t i = 0; i < v.size(); ++i) v[i] += o.v[i];
    return *this;
  }
  IntVector& operator-=(const IntVector& o) {
    for (std::size_t i = 0; i < v.size(); ++i) v[i] -= o.v[i];
    return *this;
  }
  friend IntVector operator+(IntVector a, const IntVector& b) { return a += b; }
  friend IntVector operator-(IntVector a, const IntVector& b) { return a -= b; }
  friend IntVector operator-(const IntVector& a) {
    IntVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return r;
  }
  friend IntVector operator*(const Int& c, const IntVector& a) {
    IntVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
    return r;
  }

  std::string str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) s += ",";
      s += v[i].str();
    }
    return s + ")";
  }
};

inline Int dot(const IntVector& a, const IntVector& b) {
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// gcd of the entries (0 for the zero vector).
inline Int content(const IntVector& a) {
  Int g = 0;
  for (const Int& x : a.v) g = gcd_int(g, x);
  return g;
}

// v = c * v0 with c > 0 and v0 primitive.
inline std::pair<IntVector, Int> primitive_part(const IntVector& v) {
  if (v.is_zero()) fail(errc::zero_vector, "primitive_part of the zero vector");
  Int c = content(v);
  IntVector v0(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) v0[i] = v[i] / c;
  return {v0, c};
}

// Linear dependence test for a pair of vectors: all 2x2 minors vanish.
inline bool pairwise_dependent(const IntVector& a, const IntVector& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j)
      if (a[i] * b[j] - a[j] * b[i] != 0) return false;
  return true;
}

// ---------------------------------------------------------------------------
// IntMatrix: dense rows x cols integer matrix (row-major).

struct IntMatrix {
  std::size_t rows = 0, cols = 0;
  std::vector<Int> a;

  IntMatrix() = default;
  IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}

  Int& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  const Int& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  IntVector row(std::size_t i) const {
    IntVector r(cols);
    for (std::size_t j = 0; j < cols; ++j) r[j] = at(i, j);
    return r;
  }

  friend bool operator==(const IntMatrix& x, const IntMatrix& y) {
    return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
  }

  friend IntMatrix operator*(const IntMatrix& x, const IntMatrix& y) {
    if (x.cols != y.rows) fail(errc::bad_parameters, "matrix product dimension mismatch");
    IntMatrix r(x.rows, y.cols);
    for (std::size_t i = 0; i < x.rows; ++i)
      for (std::size_t k = 0; k < x.cols; ++k) {
        const Int& xik = x.at(i, k);
        if (xik == 0) continue;
        for (std::size_t j = 0; j < y.cols; ++j) r.at(i, j) += xik * y.at(k, j);
      }
    return r;
  }
};

// row-vector times matrix: (1 x rows) * (rows x cols)
inline IntVector mul_row(const IntVector& v, const IntMatrix& m) {
  if (v.size() != m.rows) fail(errc::bad_parameters, "row-vector product dimension mismatch");
  IntVector r(m.cols);
  for (std::size_t i = 0; i < m.rows; ++i) {
    if (v[i] == 0) continue;
    for (std::size_t j = 0; j < m.cols; ++j) r[j] += v[i] * m.at(i, j);
  }
  return r;
}

// Exact determinant by fraction-free (Bareiss) elimination.
inline Int det(const IntMatrix& m) {
  if (m.rows != m.cols) fail(errc::bad_parameters, "determinant of a non-square matrix");
  std::size_t n = m.rows;
  if (n == 0) return 1;
  IntMatrix w = m;
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (w.at(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && w.at(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(w.at(k, j), w.at(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        w.at(i, j) = (w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j)) / prev;
    prev = w.at(k, k);
  }
  return sign > 0 ? w.at(n - 1, n - 1) : Int(-w.at(n - 1, n - 1));
}

inline bool is_unimodular(const IntMatrix& m) {
  if (m.rows != m.cols) return false;
  Int d = det(m);
  return d == 1 || d == -1;
}

namespace detail {

// Replace rows (i, j) by a unimodular combination that puts gcd(m[i][c], m[j][c])
// at (i, c) and zero at (j, c); mirror every row operation onto u.
inline void gcd_rows(IntMatrix& m, IntMatrix& u, std::size_t i, std::size_t j, std::size_t c) {
  const Int a = m.at(i, c), b = m.at(j, c);
  if (b == 0) return;
  if (a == 0) {
    for (std::size_t t = 0; t < m.cols; ++t) std::swap(m.at(i, t), m.at(j, t));
    for (std::size_t t = 0; t < u.cols; ++t) std::swap(u.at(i, t), u.at(j, t));
    for (std::size_t t = 0; t < m.cols; ++t) m.at(j, t) = -m.at(j, t);
    for (std::size_t t = 0; t < u.cols; ++t) u.at(j, t) = -u.at(j, t);
    return;
  }
  Int x, y;
  Int g = ext_gcd(a, b, x, y);
  Int ag = a / g, bg = b / g;
  // [[x, y], [-b/g, a/g]] has determinant 1
  for (std::size_t t = 0; t < m.cols; ++t) {
    Int mi = m.at(i, t), mj = m.at(j, t);
    m.at(i, t) = x * mi + y * mj;
    m.at(j, t) = -bg * mi + ag * mj;
  }
  for (std::size_t t = 0; t < u.cols; ++t) {
    Int ui = u.at(i, t), uj = u.at(j, t);
    u.at(i, t) = x * ui + y * uj;
    u.at(j, t) = -bg * ui + ag * uj;
  }
}

inline void gcd_cols(IntMatrix& m, IntMatrix& v, std::size_t i, std::size_t j, std::size_t r) {
  const Int a = m.at(r, i), b = m.at(r, j);
  if (b == 0) return;
  if (a == 0) {
    for (std::size_t t = 0; t < m.rows; ++t) std::swap(m.at(t, i), m.at(t, j));
    for (std::size_t t = 0; t < v.rows; ++t) std::swap(v.at(t, i), v.at(t, j));
    for (std::size_t t = 0; t < m.rows; ++t) m.at(t, j) = -m.at(t, j);
    for (std::size_t t = 0; t < v.rows; ++t) v.at(t, j) = -v.at(t, j);
    return;
  }
  Int x, y;
  Int g = ext_gcd(a, b, x, y);
  Int ag = a / g, bg = b / g;
  for (std::size_t t = 0; t < m.rows; ++t) {
    Int mi = m.at(t, i), mj = m.at(t, j);
    m.at(t, i) = x * mi + y * mj;
    m.at(t, j) = -bg * mi + ag * mj;
  }
  for (std::size_t t = 0; t < v.rows; ++t) {
    Int vi = v.at(t, i), vj = v.at(t, j);
    v.at(t, i) = x * vi + y * vj;
    v.at(t, j) = -bg * vi + ag * vj;
  }
}

}  // namespace detail

// Row Hermite normal form: U unimodular with U*m = H, pivots positive,
// entries above a pivot reduced into [0, pivot), zero rows at the bottom.
inline std::pair<IntMatrix, IntMatrix> hnf(const IntMatrix& m) {
  IntMatrix h = m;
  IntMatrix u = IntMatrix::identity(m.rows);
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
    for (std::size_t i = r + 1; i < m.rows; ++i) detail::gcd_rows(h, u, r, i, c);
    if (h.at(r, c) == 0) continue;
    if (h.at(r, c) < 0) {
      for (std::size_t t = 0; t < h.cols; ++t) h.at(r, t) = -h.at(r, t);
      for (std::size_t t = 0; t < u.cols; ++t) u.at(r, t) = -u.at(r, t);
    }
    for (std::size_t i = 0; i < r; ++i) {
      Int q = floor_div(h.at(i, c), h.at(r, c));
      if (q == 0) continue;
      for (std::size_t t = 0; t < h.cols; ++t) h.at(i, t) -= q * h.at(r, t);
      for (std::size_t t = 0; t < u.cols; ++t) u.at(i, t) -= q * u.at(r, t);
    }
    ++r;
  }
  return {h, u};
}

// Inverse of a unimodular matrix (H must come out as the identity).
inline IntMatrix inverse_unimodular(const IntMatrix& m) {
  auto [h, u] = hnf(m);
  if (!(h == IntMatrix::identity(m.rows)))
    fail(errc::bad_parameters, "matrix is not unimodular");
  return u;
}

struct SmithResult {
  IntMatrix d;  // diagonal, d1 | d2 | ...
  IntMatrix u;  // rows x rows, unimodular
  IntMatrix v;  // cols x cols, unimodular
};

// Smith normal form: u*m*v = d with nonnegative diagonal and divisibility
// chain d1 | d2 | ...
inline SmithResult snf(const IntMatrix& m) {
  IntMatrix d = m;
  IntMatrix u = IntMatrix::identity(m.rows);
  IntMatrix v = IntMatrix::identity(m.cols);
  const std::size_t k = std::min(m.rows, m.cols);

  for (std::size_t t = 0; t < k; ++t) {
    // bring a nonzero entry into the pivot position
    std::size_t pi = t, pj = t;
    bool found = false;
    for (std::size_t i = t; i < d.rows && !found; ++i)
      for (std::size_t j = t; j < d.cols && !found; ++j)
        if (d.at(i, j) != 0) { pi = i; pj = j; found = true; }
    if (!found) break;
    if (pi != t) {
      for (std::size_t c = 0; c < d.cols; ++c) std::swap(d.at(t, c), d.at(pi, c));
      for (std::size_t c = 0; c < u.cols; ++c) std::swap(u.at(t, c), u.at(pi, c));
    }
    if (pj != t) {
      for (std::size_t r = 0; r < d.rows; ++r) std::swap(d.at(r, t), d.at(r, pj));
      for (std::size_t r = 0; r < v.rows; ++r) std::swap(v.at(r, t), v.at(r, pj));
    }
    // clear row and column t; row operations may repopulate the column,
    // so iterate until both are clean
    for (;;) {
      bool dirty = false;
      for (std::size_t i = t + 1; i < d.rows; ++i)
        if (d.at(i, t) != 0) { detail::gcd_rows(d, u, t, i, t); dirty = true; }
      for (std::size_t j = t + 1; j < d.cols; ++j)
        if (d.at(t, j) != 0) { detail::gcd_cols(d, v, t, j, t); dirty = true; }
      bool clean = true;
      for (std::size_t i = t + 1; i < d.rows; ++i) clean = clean && d.at(i, t) == 0;
      for (std::size_t j = t + 1; j < d.cols; ++j) clean = clean && d.at(t, j) == 0;
      if (clean) break;
      if (!dirty) break;
    }
    if (d.at(t, t) < 0) {
      for (std::size_t c = 0; c < d.cols; ++c) d.at(t, c) = -d.at(t, c);
      for (std::size_t c = 0; c < u.cols; ++c) u.at(t, c) = -u.at(t, c);
    }
  }

  // enforce the divisibility chain
  for (;;) {
    bool fixed = true;
    for (std::size_t t = 0; t + 1 < k; ++t) {
      const Int &a = d.at(t, t), &b = d.at(t + 1, t + 1);
      if (a == 0 && b != 0) { fixed = false; }
      else if (a != 0 && b % a != 0) { fixed = false; }
      else continue;
      // fold column t+1 into column t and re-clear at t
      for (std::size_t r = 0; r < d.rows; ++r) d.at(r, t) += d.at(r, t + 1);
      for (std::size_t r = 0; r < v.rows; ++r) v.at(r, t) += v.at(r, t + 1);
      for (;;) {
        for (std::size_t i = t + 1; i < d.rows; ++i)
          if (d.at(i, t) != 0) detail::gcd_rows(d, u, t, i, t);
        for (std::size_t j = t + 1; j < d.cols; ++j)
          if (d.at(t, j) != 0) detail::gcd_cols(d, v, t, j, t);
        bool clean = true;
        for (std::size_t i = t + 1; i < d.rows; ++i) clean = clean && d.at(i, t) == 0;
        for (std::size_t j = t + 1; j < d.cols; ++j) clean = clean && d.at(t, j) == 0;
        if (clean) break;
      }
      if (d.at(t, t) < 0) {
        for (std::size_t c = 0; c < d.cols; ++c) d.at(t, c) = -d.at(t, c);
        for (std::size_t c = 0; c < u.cols; ++c) u.at(t, c) = -u.at(t, c);
      }
      if (d.at(t + 1, t + 1) < 0) {
        for (std::size_t c = 0; c < d.cols; ++c) d.at(t + 1, c) = -d.at(t + 1, c);
        for (std::size_t c = 0; c < u.cols; ++c) u.at(t + 1, c) = -u.at(t + 1, c);
      }
    }
    if (fixed) break;
  }
  return {d, u, v};
}

// Completes a primitive xi to a weight basis: the returned unimodular matrix
// has first row pairing 1 with xi and the remaining rows pairing 0.  This
// realizes the z/H coordinate split used throughout.
inline IntMatrix complete_to_basis(const IntVector& xi) {
  if (xi.is_zero()) fail(errc::zero_vector, "complete_to_basis of the zero vector");
  if (content(xi) != 1)
    fail(errc::not_primitive, "polarization has content " + content(xi).str());
  const std::size_t n = xi.size();
  IntMatrix col(n, 1);
  for (std::size_t i = 0; i < n; ++i) col.at(i, 0) = xi[i];
  SmithResult s = snf(col);
  // s.u * xi^T = +-e1 since the content is 1
  IntMatrix b = s.u;
  Int p = dot(b.row(0), xi);
  if (p == -1) {
    for (std::size_t j = 0; j < n; ++j) b.at(0, j) = -b.at(0, j);
  } else if (p != 1) {
    fail(errc::bad_parameters, "basis completion failed");
  }
  return b;
}

}  // namespace gkmk
