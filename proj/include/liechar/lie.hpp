#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "liechar/matrix.hpp"

namespace liechar {

/// Coordinates of a Lie algebra element in the algebra's basis.
using Element = RatVector;

/// One stored structure constant row: [e_i, e_j] = sum coeff * e_k, 0-based, i < j.
struct BracketEntry {
  std::size_t i = 0;
  std::size_t j = 0;
  std::vector<std::pair<std::size_t, Rat>> terms;
};

/// Finite-dimensional Lie algebra given by structure constants on a named basis.
/// Only pairs i < j are stored; [e_j, e_i] = -[e_i, e_j] and [e_i, e_i] = 0 are implied.
class LieAlgebra {
 public:
  LieAlgebra() = default;

  /// Throws Error(index_order) for i >= j and Error(shape) for out-of-range indices.
  static LieAlgebra from_brackets(std::vector<std::string> names, const std::vector<BracketEntry>& entries);
  /// Full table, table[i][j] = coordinates of [e_i, e_j]; antisymmetry is checked.
  static LieAlgebra from_table(std::vector<std::string> names, const std::vector<std::vector<Element>>& table);
  /// Structure constants of the matrix Lie algebra spanned by linearly independent `basis`.
  /// Throws Error(invalid_argument) when the span is not closed under commutators.
  static LieAlgebra from_matrices(std::vector<std::string> names, const std::vector<RatMatrix>& basis);
  static LieAlgebra abelian(std::size_t dim);

  std::size_t dim() const noexcept { return dim_; }
  const std::vector<std::string>& basis_names() const noexcept { return names_; }
  /// Coordinates of [e_i, e_j] for any i, j.
  Element structure(std::size_t i, std::size_t j) const;
  /// Nonzero stored brackets with i < j, in (i, j) order.
  std::vector<BracketEntry> brackets() const;

  Element basis_vector(std::size_t i) const;

  friend bool operator==(const LieAlgebra&, const LieAlgebra&) = default;

 private:
  std::size_t pair_index(std::size_t i, std::size_t j) const;

  std::size_t dim_ = 0;
  std::vector<std::string> names_;
  std::vector<Element> upper_;  // pairs i < j, row-major over the strict upper triangle
};

struct AxiomViolation {
  enum class Kind { antisymmetry, jacobi } kind = Kind::jacobi;
  std::size_t i = 0, j = 0, k = 0;  // 0-based
  std::string describe(const LieAlgebra& L) const;
};

/// Empty report means the algebra satisfies antisymmetry and the Jacobi identity.
std::vector<AxiomViolation> validate(const LieAlgebra& L);

Element bracket(const LieAlgebra& L, const Element& x, const Element& y);
/// Column j holds the coordinates of [x, e_j].
RatMatrix ad_matrix(const LieAlgebra& L, const Element& x);

/// Subspace of Q^n stored as a reduced row-echelon basis; equality is basis equality.
class Subspace {
 public:
  Subspace() = default;
  static Subspace span(const std::vector<RatVector>& vectors, std::size_t ambient);
  static Subspace whole(std::size_t ambient);
  static Subspace zero(std::size_t ambient);

  std::size_t ambient() const noexcept { return ambient_; }
  std::size_t dim() const noexcept { return basis_.rows(); }
  const RatMatrix& basis() const noexcept { return basis_; }
  std::vector<RatVector> vectors() const;
  bool contains(const RatVector& v) const;
  bool contains(const Subspace& other) const;

  friend bool operator==(const Subspace&, const Subspace&) = default;

 private:
  std::size_t ambient_ = 0;
  RatMatrix basis_;
};

using SubspaceChain = std::vector<Subspace>;

enum class SeriesKind { derived, lower_central };

/// Starts at L and stops at the first repeated term (at most dim + 1 steps).
SubspaceChain series(const LieAlgebra& L, SeriesKind kind);

/// span{[x, y] : x in A, y in B}.
Subspace bracket_span(const LieAlgebra& L, const Subspace& a, const Subspace& b);

struct Classification {
  bool solvable = false;
  bool nilpotent = false;
};

/// Series-based ground truth. Throws Error(inconsistent) if nilpotent but not solvable.
Classification classify_oracle(const LieAlgebra& L);

/// New basis x_j = sum_i P(i, j) e_i. Throws Error(singular_matrix) for singular P.
LieAlgebra change_basis(const LieAlgebra& L, const RatMatrix& P);

Subspace center(const LieAlgebra& L);

/// Verifies a user-supplied linear map. Column j of `map` is the image of the j-th
/// source basis vector in target coordinates.
struct HomomorphismCheck {
  bool bijective = false;
  bool bracket_preserving = false;
  std::vector<std::pair<std::size_t, std::size_t>> failures;  // 0-based source pairs
};
HomomorphismCheck check_isomorphism(const LieAlgebra& source, const LieAlgebra& target, const RatMatrix& map);

}  // namespace liechar
