// shared helpers for the test suites: deterministic random generators for
// lattice vectors, ring elements and classes
#pragma once

#include <random>

#include "gkmk/canon.hpp"

namespace gkmk::testutil {

using Rng = std::mt19937_64;

inline Int rand_int(Rng& rng, long long lo, long long hi) {
  std::uniform_int_distribution<long long> d(lo, hi);
  return Int(d(rng));
}

inline IntVector rand_vec(Rng& rng, std::size_t n, long long lo, long long hi) {
  IntVector v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = rand_int(rng, lo, hi);
  return v;
}

inline IntVector rand_nonzero_vec(Rng& rng, std::size_t n, long long lo, long long hi) {
  for (;;) {
    IntVector v = rand_vec(rng, n, lo, hi);
    if (!v.is_zero()) return v;
  }
}

inline CharElem rand_elem(Rng& rng, std::size_t n, std::size_t terms, long long espan = 3,
                          long long cspan = 4) {
  CharElem f(n);
  for (std::size_t t = 0; t < terms; ++t)
    f.add_term(rand_vec(rng, n, -espan, espan), rand_int(rng, -cspan, cspan));
  return f;
}

// a random monomial c * x^e with c != 0 and exponents in [-span, span]
inline CharElem rand_monomial(Rng& rng, std::size_t n, long long span = 2) {
  Int c = 0;
  while (c == 0) c = rand_int(rng, -2, 2);
  return CharElem::monomial(n, rand_vec(rng, n, -span, span), c);
}

// random R(G)-combination of the canonical basis: always a valid class
inline KClass rand_class(Rng& rng, const GkmGraph& g, const CanonicalBasis& cb,
                         long long espan = 2) {
  KClass a = kclass_zero(g);
  for (const auto& [p, t] : cb.taus) {
    CharElem c = rand_monomial(rng, g.rank, espan);
    for (const auto& v : g.vertices) a[v] += c * t.at(v);
  }
  return a;
}

// true when fn() throws a library error with exactly the given code
template <class Fn>
bool throws_code(Fn&& fn, errc c) {
  try {
    fn();
  } catch (const error& e) {
    return e.code() == c;
  } catch (...) {
    return false;
  }
  return false;
}

}  // namespace gkmk::testutil
