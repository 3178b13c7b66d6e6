// Quotient lattices Z^N / <relations>, with torsion.  These model the
// character groups of the subgroups cut out by weights: the kernel of a
// single character (restriction along an edge) and the stabilizers of the
// orbit circles on twisted projective spaces.
#pragma once

#include <memory>
#include <string>
#include <vector>

#include "gkmk/intlinalg.hpp"

namespace gkmk {

// Equality of cosets is equality of canonical forms.  The canonical form is
// computed in Smith coordinates of the relation span: coordinates carrying a
// nonzero invariant factor are reduced into [0, d_i) (d_i = 1 kills the
// coordinate, d_i > 1 is a torsion residue), free coordinates pass through.
class QuotientLattice {
 public:
  QuotientLattice(std::size_t ambient_rank, std::vector<IntVector> relations)
      : rank_(ambient_rank), relations_(std::move(relations)) {
    for (const auto& r : relations_)
      if (r.size() != rank_)
        fail(errc::bad_parameters, "relation rank does not match ambient rank");
    IntMatrix m(relations_.size(), rank_);
    for (std::size_t i = 0; i < relations_.size(); ++i)
      for (std::size_t j = 0; j < rank_; ++j) m.at(i, j) = relations_[i][j];
    SmithResult s = relations_.empty()
                        ? SmithResult{IntMatrix(0, rank_), IntMatrix::identity(0),
                                      IntMatrix::identity(rank_)}
                        : snf(m);
    v_ = s.v;
    vinv_ = inverse_unimodular(v_);
    const std::size_t k = std::min(s.d.rows, s.d.cols);
    for (std::size_t i = 0; i < k; ++i)
      if (s.d.at(i, i) != 0) factors_.push_back(s.d.at(i, i));
    // canonical key: HNF of the relation span, used for value equality of contexts
    if (!relations_.empty()) {
      auto [h, u] = hnf(m);
      key_ = "";
      for (std::size_t i = 0; i < h.rows; ++i) {
        bool zero = true;
        for (std::size_t j = 0; j < h.cols; ++j) zero = zero && h.at(i, j) == 0;
        if (zero) continue;
        key_ += h.row(i).str();
      }
    }
  }

  std::size_t ambient_rank() const { return rank_; }
  const std::vector<IntVector>& relations() const { return relations_; }
  const std::vector<Int>& invariant_factors() const { return factors_; }

  // canonical coset representative; idempotent, and canon(a) == canon(b)
  // exactly when a - b lies in the relation span
  IntVector canon(const IntVector& a) const {
    if (a.size() != rank_)
      fail(errc::context_mismatch, "vector rank does not match quotient ambient rank");
    IntVector w = mul_row(a, v_);
    for (std::size_t i = 0; i < factors_.size(); ++i) w[i] = mod_euclid(w[i], factors_[i]);
    return mul_row(w, vinv_);
  }

  bool contains(const IntVector& a) const { return canon(a).is_zero(); }

  // value identity of quotient contexts (same ambient rank, same span)
  friend bool operator==(const QuotientLattice& a, const QuotientLattice& b) {
    return a.rank_ == b.rank_ && a.key_ == b.key_;
  }

 private:
  std::size_t rank_;
  std::vector<IntVector> relations_;
  IntMatrix v_, vinv_;
  std::vector<Int> factors_;
  std::string key_;
};

using QuotientPtr = std::shared_ptr<const QuotientLattice>;

inline QuotientPtr make_quotient(std::size_t rank, std::vector<IntVector> relations) {
  return std::make_shared<const QuotientLattice>(rank, std::move(relations));
}

}  // namespace gkmk
