#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "liechar/matrix.hpp"
#include "liechar/rational.hpp"

namespace liechar {

/// Exponent vector over z0..zs with its total degree cached.
class Monomial {
 public:
  using Exponent = std::uint16_t;

  Monomial() = default;
  explicit Monomial(std::size_t num_vars) : exps_(num_vars, 0) {}
  Monomial(std::initializer_list<unsigned> exps);

  static Monomial variable(std::size_t num_vars, std::size_t index, unsigned power = 1);

  std::size_t num_vars() const noexcept { return exps_.size(); }
  unsigned degree() const noexcept { return degree_; }
  unsigned operator[](std::size_t i) const noexcept { return exps_[i]; }
  void set(std::size_t i, unsigned e);

  bool divides(const Monomial& other) const noexcept;
  Monomial operator*(const Monomial& other) const;
  /// Requires divides(other) in reverse: `*this` must be a multiple of `other`.
  Monomial operator/(const Monomial& other) const;

  bool operator==(const Monomial& other) const noexcept { return exps_ == other.exps_; }

  /// Graded lexicographic with z0 > z1 > ... > zs.
  std::strong_ordering grlex(const Monomial& other) const noexcept;

 private:
  std::vector<Exponent> exps_;
  unsigned degree_ = 0;
};

struct GrlexDescending {
  bool operator()(const Monomial& a, const Monomial& b) const noexcept { return a.grlex(b) > 0; }
};

/// Sparse polynomial over Q in a fixed number of variables z0..z{n-1}.
/// Terms are kept in descending graded-lex order with no zero coefficients.
class MultiPoly {
 public:
  using TermMap = std::map<Monomial, Rat, GrlexDescending>;

  MultiPoly() = default;
  explicit MultiPoly(std::size_t num_vars) : num_vars_(num_vars) {}

  static MultiPoly constant(std::size_t num_vars, const Rat& c);
  static MultiPoly variable(std::size_t num_vars, std::size_t index);
  static MultiPoly term(const Monomial& m, const Rat& c);
  /// z0 + sum coeffs[i-1] * zi.
  static MultiPoly linear(std::size_t num_vars, const Rat& z0_coeff, const RatVector& coeffs);

  /// Parses the canonical text form. num_vars = 0 infers it from the highest index used.
  static MultiPoly parse(std::string_view text, std::size_t num_vars = 0);

  std::size_t num_vars() const noexcept { return num_vars_; }
  const TermMap& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  Rat coefficient(const Monomial& m) const;
  /// Leading term in graded-lex order; undefined on zero.
  const std::pair<const Monomial, Rat>& leading() const { return *terms_.begin(); }
  unsigned total_degree() const;
  unsigned degree_in(std::size_t var) const;
  unsigned min_degree_in(std::size_t var) const;

  void add_term(const Monomial& m, const Rat& c);

  MultiPoly& operator+=(const MultiPoly& other);
  MultiPoly& operator-=(const MultiPoly& other);
  MultiPoly& operator*=(const MultiPoly& other);
  MultiPoly& operator*=(const Rat& scalar);

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const Rat& s) { return a *= s; }
  friend MultiPoly operator*(const Rat& s, MultiPoly a) { return a *= s; }
  MultiPoly operator-() const;
  MultiPoly pow(unsigned k) const;

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.num_vars_ == b.num_vars_ && a.terms_ == b.terms_;
  }

  /// Sets variable `var` to `value`.
  MultiPoly substitute(std::size_t var, const Rat& value) const;
  /// Replaces each variable zk by images[k]; all images share one ring.
  MultiPoly compose(const std::vector<MultiPoly>& images) const;
  /// Same polynomial viewed in a ring with more variables.
  MultiPoly embed(std::size_t num_vars) const;

  std::string to_string() const;
  friend std::ostream& operator<<(std::ostream& os, const MultiPoly& p) { return os << p.to_string(); }

 private:
  void check_ring(const MultiPoly& other) const;

  std::size_t num_vars_ = 0;
  TermMap terms_;
};

/// Returns q with p = q * d, or nullopt when d does not divide p.
/// Throws Error(division_by_zero) for d = 0.
std::optional<MultiPoly> exact_divide(const MultiPoly& p, const MultiPoly& d);

/// p(z D): variable zk becomes sum_m D(m, k) zm.
MultiPoly apply_linear_change(const MultiPoly& p, const RatMatrix& D);

struct StructureInfo {
  std::optional<unsigned> homogeneous_degree;
  unsigned z0_multiplicity = 0;
};

/// Throws Error(degenerate_input) on the zero polynomial.
StructureInfo structure_checks(const MultiPoly& p);

/// Homogeneous with coefficient 1 on z0^deg.
bool is_monic_in_z0(const MultiPoly& p);

}  // namespace liechar
