// Sums of fractions whose denominators are products of factors (1 - x^w).
// Denominators are kept as factor multisets; a sum is cleared over the
// union denominator and certified into the ring by one exact division at
// the end.  Shared by the torsion-free index path and the localization
// sums on cut spaces.
#pragma once

#include <map>
#include <vector>

#include "gkmk/charelem.hpp"

namespace gkmk {

using FactorList = std::map<IntVector, long long>;  // w -> multiplicity of (1 - x^w)

inline void fl_add(FactorList& fl, const IntVector& w, long long mult = 1) {
  if (w.is_zero()) fail(errc::denominator_vanishes, "denominator factor 1 - x^0");
  fl[w] += mult;
}

class FactoredSum {
 public:
  explicit FactoredSum(std::size_t rank) : rank_(rank) {}

  void add_term(CharElem num, FactorList den) {
    if (num.rank() != rank_) fail(errc::context_mismatch, "summand rank mismatch");
    terms_.push_back({std::move(num), std::move(den)});
  }

  // sum of num_i / prod(1-x^w)^mult_i, certified to lie in the ring
  CharElem certified_sum(const char* what) const {
    FactorList uni;
    for (const auto& t : terms_)
      for (const auto& [w, m] : t.den)
        if (auto it = uni.find(w); it == uni.end())
          uni.emplace(w, m);
        else
          it->second = std::max(it->second, m);

    CharElem total = CharElem::zero(rank_);
    for (const auto& t : terms_) {
      if (t.num.is_zero()) continue;
      CharElem x = t.num;
      for (const auto& [w, m] : uni) {
        long long have = 0;
        if (auto it = t.den.find(w); it != t.den.end()) have = it->second;
        for (long long j = have; j < m; ++j)
          x *= CharElem::one(rank_) - CharElem::monomial(rank_, w);
      }
      total += x;
    }
    if (total.is_zero()) return total;

    CharElem den = CharElem::one(rank_);
    for (const auto& [w, m] : uni)
      for (long long j = 0; j < m; ++j)
        den *= CharElem::one(rank_) - CharElem::monomial(rank_, w);
    auto q = try_exact_div(total, den);
    if (!q) fail(errc::integrality_failure, std::string(what) + ": sum is not a ring element");
    return *q;
  }

 private:
  struct Term {
    CharElem num;
    FactorList den;
  };
  std::size_t rank_;
  std::vector<Term> terms_;
};

}  // namespace gkmk
