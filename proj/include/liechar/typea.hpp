#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "liechar/charpoly.hpp"
#include "liechar/lie.hpp"
#include "liechar/poly.hpp"

namespace liechar::typea {

/// Weakly decreasing non-negative parts, trailing zeros trimmed.
struct Partition {
  std::vector<int> parts;

  static Partition make(std::vector<int> parts);
  int size() const;
  friend bool operator==(const Partition&, const Partition&) = default;
};

/// Coefficients a_1..a_{n-1} of a dominant weight on the fundamental weights of sl_n.
struct DominantWeight {
  std::vector<int> coeffs;
  std::size_t n() const noexcept { return coeffs.size() + 1; }
};

/// Parses `slN:a1,...,a{N-1}`. Throws Error(parse_syntax).
DominantWeight parse_dominant(std::string_view spec);

Partition partition_from_dominant(const DominantWeight& a);

/// Epsilon coordinates of a weight, length n.
using Weight = std::vector<int>;

/// lambda(h_i) = eps_i - eps_{i+1}.
std::vector<int> pairing(const Weight& eps);

/// Finite multiset weight -> multiplicity for sl_n.
struct Character {
  std::size_t n = 0;
  std::map<Weight, long> mult;

  long dimension() const;
  /// Whether mult(sigma eps) = mult(eps) for every permutation sigma.
  bool weyl_stable() const;
  friend bool operator==(const Character&, const Character&) = default;
};

/// Kostka numbers by semistandard tableaux of shape lambda with entries 1..n.
/// Throws Error(invalid_argument) when lambda has more than n rows.
Character weight_multiplicities(const Partition& lambda, std::size_t n);

/// Weights add, multiplicities multiply. Throws Error(dimension_mismatch) on rank mismatch.
Character tensor_character(const Character& u, const Character& v);

/// Orders coefficient vectors for display: larger sum first, then lexicographically larger.
struct FormOrder {
  bool operator()(const std::vector<long>& a, const std::vector<long>& b) const;
};

/// Product of z0 + sum a_i z_i with integer a, kept factored. z0 is the empty-coefficient form
/// (all zeros); the product of no factors is 1.
class LinearizedPoly {
 public:
  using FactorMap = std::map<std::vector<long>, unsigned, FormOrder>;

  LinearizedPoly() = default;
  explicit LinearizedPoly(std::size_t rank) : rank_(rank) {}

  /// The identity of the resolution product: the single factor z0.
  static LinearizedPoly z0(std::size_t rank);

  std::size_t rank() const noexcept { return rank_; }
  const FactorMap& factors() const noexcept { return factors_; }
  unsigned degree() const;
  void add_factor(const std::vector<long>& coeffs, unsigned exponent = 1);

  /// Ordinary product, the image of direct sum.
  LinearizedPoly operator*(const LinearizedPoly& other) const;
  /// Expanded polynomial in z0..z_rank.
  MultiPoly expand() const;
  /// `(z0+2*z1)^1*(z0)^2*(z0-2*z1)^1`; the empty product renders as `1`.
  std::string to_string() const;

  friend bool operator==(const LinearizedPoly&, const LinearizedPoly&) = default;

 private:
  std::size_t rank_ = 0;
  FactorMap factors_;
};

/// Pairwise sums of factor coefficient vectors with exponents multiplied.
LinearizedPoly resolution_product(const LinearizedPoly& f, const LinearizedPoly& g);

/// One factor per weight: coefficients are the pairings, exponent the multiplicity.
LinearizedPoly linearize_from_character(const Character& ch);

/// Inverse recipe: each factor's pairing vector lifted to eps coordinates with minimum entry 0.
Character character_from_linearized(const LinearizedPoly& f);

/// Sets z_{ell+1}.. to zero and splits the remainder into integral linear forms.
/// Returns nullopt when it does not split over Z. Throws Error(shape) if ell is too large.
std::optional<LinearizedPoly> linearize_full(const MultiPoly& p, std::size_t ell);

/// Invariance of the factor multiset under the adjacent transpositions of S_n, n = rank + 1.
bool weyl_invariance_check(const LinearizedPoly& f);

/// Closed-form characteristic polynomial of the irreducible sl2-module of highest weight m
/// in variables (z0, z_h, z_e, z_f).
MultiPoly sl2_closed_form(unsigned m);

/// Highest-weight ladder on v_0..v_m: h v_j = (m - 2j) v_j, f v_j = v_{j+1},
/// e v_j = j (m - j + 1) v_{j-1}. Basis order (h, e, f).
Representation sl2_irrep_rep(unsigned m);

struct SlnAlgebra {
  LieAlgebra algebra;
  std::vector<RatMatrix> matrices;    // defining representation
  std::vector<std::size_t> cartan;    // indices of h_1..h_{n-1}
};

/// Basis h_1..h_{n-1} (h_i = E_ii - E_{i+1,i+1}), then E_ij for i != j in row-major order.
SlnAlgebra sln_canonical_basis(std::size_t n);

}  // namespace liechar::typea
