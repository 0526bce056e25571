#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "liechar/factor.hpp"
#include "liechar/lie.hpp"
#include "liechar/matrix.hpp"
#include "liechar/poly.hpp"

namespace liechar {

/// phi(e_1), ..., phi(e_s) as space_dim x space_dim matrices.
struct Representation {
  std::vector<RatMatrix> mats;
  std::size_t space_dim = 0;

  /// Throws Error(shape) unless every matrix is space_dim x space_dim.
  static Representation make(std::vector<RatMatrix> mats, std::size_t space_dim);
  std::size_t generators() const noexcept { return mats.size(); }
  friend bool operator==(const Representation&, const Representation&) = default;
};

Representation adjoint_representation(const LieAlgebra& L);
/// Zero action of an s-dimensional algebra on a space of dimension n.
Representation trivial_representation(std::size_t generators, std::size_t n = 1);

/// Basis pairs (i < j, 0-based) where phi([e_i, e_j]) != [phi(e_i), phi(e_j)].
std::vector<std::pair<std::size_t, std::size_t>> rep_validate(const LieAlgebra& L, const Representation& rep);

struct CharPolyResult {
  MultiPoly poly;
  std::size_t space_dim = 0;
  std::optional<Factorization> factored;
};

/// det(z0 I + sum z_i phi(e_i)). The output is checked to be homogeneous of degree
/// space_dim and monic in z0; a violation throws Error(inconsistent).
CharPolyResult char_poly(const Representation& rep);

Representation dual(const Representation& rep);

struct DualCheck {
  Representation dual_rep;
  MultiPoly dual_poly;
  bool verified = false;
};
/// p_dual(z0, z) == (-1)^n p(-z0, z).
DualCheck dual_identity(const Representation& rep);

/// Block-diagonal sum. Throws Error(dimension_mismatch) when generator counts differ.
Representation direct_sum(const Representation& u, const Representation& v);

struct DirectSumCheck {
  Representation sum;
  bool verified = false;
};
DirectSumCheck direct_sum_identity(const Representation& u, const Representation& v);

struct NilpotencyVerdict {
  MultiPoly p_ad;
  bool theorem = false;    // p_ad == z0^n
  bool corollary = false;  // p_ad(1, z) == 1
};
/// Throws Error(inconsistent) when the two verdicts disagree.
NilpotencyVerdict nilpotency_tests(const LieAlgebra& L);
/// Same, reusing an already computed adjoint characteristic polynomial.
NilpotencyVerdict nilpotency_tests(const LieAlgebra& L, const MultiPoly& p_ad);

struct CodimCheck {
  std::size_t codim = 0;
  unsigned z0_multiplicity = 0;
  bool holds = false;
};
CodimCheck codim_factor_check(const LieAlgebra& L);
CodimCheck codim_factor_check(const LieAlgebra& L, const MultiPoly& p_ad);

struct KernelReduction {
  Subspace kernel;
  /// Basis of L with image vectors first then kernel vectors, as columns in e-coordinates.
  RatMatrix basis_change;
  Representation image_rep;  // phi(y_1), ..., phi(y_{s-t})
  RatMatrix D;               // blockdiag(1, P^T) with P the transition from {e} to {y, x}
  bool verified = false;
};
KernelReduction kernel_reduction(const LieAlgebra& L, const Representation& rep);

/// Structure constants of phi(L) on the image basis from kernel_reduction.
LieAlgebra image_algebra(const KernelReduction& red);

enum class SolvabilityOutcome { consistent, undetermined_over_q, contradiction };
const char* outcome_name(SolvabilityOutcome o);

struct SolvabilityReport {
  bool oracle = false;           // L solvable
  bool image_solvable = false;   // phi(L) solvable; equals `oracle` for faithful reps and for ad
  Factorization factorization;
  SolvabilityOutcome outcome = SolvabilityOutcome::consistent;
  bool consistent = true;
};
SolvabilityReport solvability_test(const LieAlgebra& L, const Representation& rep);
/// `p` must be char_poly(rep).poly.
SolvabilityReport solvability_test(const LieAlgebra& L, const Representation& rep, const MultiPoly& p);

struct PowerLinearResult {
  bool is_power_of_linear_form = false;
  std::optional<LinearForm> root;
  /// true when implied, nullopt when inconclusive.
  std::optional<bool> implied_nilpotent;
};
PowerLinearResult power_linear_test(const Representation& rep);

}  // namespace liechar
