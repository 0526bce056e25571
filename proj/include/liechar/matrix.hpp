#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "liechar/rational.hpp"

namespace liechar {

using RatVector = std::vector<Rat>;

/// Dense row-major matrix over the rationals.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  RatMatrix(std::initializer_list<std::initializer_list<Rat>> rows);

  static RatMatrix identity(std::size_t n);
  /// 1-based elementary matrix E_{ij} of size n.
  static RatMatrix unit(std::size_t n, std::size_t i, std::size_t j);
  static RatMatrix from_rows(const std::vector<RatVector>& rows, std::size_t cols);
  static RatMatrix from_columns(const std::vector<RatVector>& cols, std::size_t rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  bool is_zero() const;

  Rat& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rat& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  RatVector row(std::size_t i) const;
  RatVector column(std::size_t j) const;
  /// Row-major flattening, the coordinate vector of the matrix in gl(V).
  const RatVector& flat() const noexcept { return data_; }

  RatMatrix transpose() const;

  RatMatrix& operator+=(const RatMatrix& other);
  RatMatrix& operator-=(const RatMatrix& other);
  RatMatrix& operator*=(const Rat& scalar);

  friend RatMatrix operator+(RatMatrix a, const RatMatrix& b) { return a += b; }
  friend RatMatrix operator-(RatMatrix a, const RatMatrix& b) { return a -= b; }
  friend RatMatrix operator*(RatMatrix a, const Rat& s) { return a *= s; }
  friend RatMatrix operator*(const Rat& s, RatMatrix a) { return a *= s; }
  friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
  friend RatVector operator*(const RatMatrix& a, const RatVector& v);
  friend bool operator==(const RatMatrix& a, const RatMatrix& b) = default;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  RatVector data_;
};

RatMatrix commutator(const RatMatrix& a, const RatMatrix& b);
RatMatrix block_diagonal(const RatMatrix& a, const RatMatrix& b);

struct RowEchelon {
  RatMatrix reduced;                // nonzero rows only
  std::vector<std::size_t> pivots;  // pivot column of each row
};

/// Reduced row-echelon form; pivot is the leftmost nonzero column, first nonzero row wins.
RowEchelon rref(const RatMatrix& m);
std::size_t rank(const RatMatrix& m);

/// Rows form a basis of { x : m x = 0 }, in reduced echelon form.
RatMatrix null_space(const RatMatrix& m);

/// Throws Error(singular_matrix) when not invertible, Error(shape) when not square.
RatMatrix inverse(const RatMatrix& m);

/// Some solution of m x = b, or nullopt when inconsistent.
std::optional<RatVector> solve(const RatMatrix& m, const RatVector& b);

bool is_zero(const RatVector& v);

}  // namespace liechar
