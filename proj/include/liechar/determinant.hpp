#pragma once

#include <cstddef>
#include <vector>

#include "liechar/matrix.hpp"
#include "liechar/poly.hpp"

namespace liechar {

/// Square matrix of polynomials sharing one ambient ring.
class PolyMatrix {
 public:
  PolyMatrix(std::size_t n, std::size_t num_vars);

  std::size_t size() const noexcept { return n_; }
  std::size_t num_vars() const noexcept { return num_vars_; }

  MultiPoly& operator()(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }
  const MultiPoly& operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }

  /// Throws Error(ring_mismatch) if some entry lives in another ring.
  void check() const;

 private:
  std::size_t n_;
  std::size_t num_vars_;
  std::vector<MultiPoly> entries_;
};

/// z0 I + sum_i z_i mats[i-1], in 1 + mats.size() variables.
PolyMatrix linear_pencil(const std::vector<RatMatrix>& mats, std::size_t n);

/// Fraction-free Bareiss elimination. A column with no nonzero pivot candidate
/// expands to zero, which is the cofactor expansion along that column.
MultiPoly determinant(const PolyMatrix& m);

/// Laplace expansion along the first row, recursing on minors.
MultiPoly cofactor_determinant(const PolyMatrix& m);

}  // namespace liechar
