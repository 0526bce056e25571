#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "liechar/poly.hpp"

namespace liechar {

/// z0 + sum coeffs[i-1] zi. The z0 coefficient is fixed at 1 for every factor we extract.
struct LinearForm {
  RatVector coeffs;

  MultiPoly to_poly(std::size_t num_vars) const;
  std::string to_string() const;
  friend bool operator==(const LinearForm&, const LinearForm&) = default;
};

/// Display order for linear forms: larger coefficient sum first, then lexicographically larger.
bool form_precedes(const RatVector& a, const RatVector& b);

/// Coefficients of a univariate polynomial, constant term first.
using UniPoly = std::vector<Rat>;

/// Rational roots with multiplicity (sorted ascending, repeated per multiplicity).
/// The second member is true when all roots were found.
std::pair<std::vector<Rat>, bool> rational_roots(const UniPoly& coeffs);

/// Per-variable candidate coefficients for linear factors of p. For variable i the
/// values are the rational roots lambda of p(x, 0, .., 1 at i, .., 0) = prod (x + lambda),
/// i.e. the rational eigenvalues of the i-th generator.
struct CandidateGrid {
  std::vector<std::vector<Rat>> values;
  bool irrational_spectrum = false;
};

CandidateGrid eigenvalue_grid(const MultiPoly& p);

enum class IncompleteReason { none, no_candidate_divides, irrational_spectrum };

struct Factorization {
  bool complete = false;
  std::vector<std::pair<LinearForm, unsigned>> factors;
  MultiPoly residual;
  IncompleteReason reason = IncompleteReason::none;

  /// Product of factors (with multiplicity) and residual.
  MultiPoly expand(std::size_t num_vars) const;
  std::string to_string() const;
};

const char* reason_name(IncompleteReason r);

/// Greedy trial division by the listed candidates.
/// Preconditions (Error(precondition)): p homogeneous and monic in z0.
Factorization linear_factorization(const MultiPoly& p, const std::vector<LinearForm>& candidates);

/// Trial division over the Cartesian product of the grid. Candidate prefixes are pruned
/// when they fail to divide p with the remaining variables set to zero.
Factorization linear_factorization(const MultiPoly& p, const CandidateGrid& grid);

/// Uses eigenvalue_grid(p).
Factorization linear_factorization(const MultiPoly& p);

}  // namespace liechar
