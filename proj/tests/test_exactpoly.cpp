#include <doctest.h>

#include <algorithm>
#include <random>

#include "liechar/determinant.hpp"
#include "liechar/error.hpp"
#include "liechar/factor.hpp"
#include "liechar/poly.hpp"
#include "liechar/rational.hpp"
#include "support.hpp"

using namespace liechar;
using testsupport::P;

namespace {

PolyMatrix matrix_of(const std::vector<std::vector<const char*>>& rows, std::size_t nv) {
  PolyMatrix m(rows.size(), nv);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = P(rows[i][j], nv);
  return m;
}

const char* kM1 = "z0^4 + 2*z0^3*z3 + z0^2*z3^2 - z0^2*z4^2";

MultiPoly form(std::size_t nv, std::vector<int> coeffs) {
  RatVector c;
  for (int x : coeffs) c.emplace_back(x);
  return MultiPoly::linear(nv, 1, c);
}

}  // namespace

TEST_CASE("rationals are stored reduced with positive denominator") {
  const Rat a = parse_rat("-6/4");
  CHECK(a.get_num() == -3);
  CHECK(a.get_den() == 2);
  CHECK(to_string(parse_rat("0/7")) == "0");
  CHECK(to_string(parse_rat("-10/5")) == "-2");
  CHECK_THROWS_AS(parse_rat("1/0"), Error);
  CHECK_THROWS_AS(parse_rat("x"), Error);
}

TEST_CASE("ring operations") {
  const std::size_t nv = 2;
  CHECK(P("z0 + z1", nv) * P("z0 - z1", nv) == P("z0^2 - z1^2", nv));
  const MultiPoly p = P("3*z0^2*z1 - 1/2*z1", nv);
  CHECK(p + MultiPoly(nv) == p);
  CHECK((p - p).is_zero());
  CHECK(-(-p) == p);
  CHECK(p.pow(0) == MultiPoly::constant(nv, 1));

  const MultiPoly x = P("z0^2", 5) * form(5, {0, 0, 1, 1}) * form(5, {0, 0, 1, -1});
  CHECK(x == P(kM1, 5));
  CHECK(x.to_string() == kM1);

  try {
    (void)(P("z0", 2) + P("z0", 3));
    FAIL("expected ring mismatch");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::ring_mismatch);
  }
}

TEST_CASE("canonical text") {
  CHECK(P("-z1 + 2/3*z0*z1^2 + 0*z2 + z0^3", 3).to_string() == "z0^3 + 2/3*z0*z1^2 - z1");
  CHECK(MultiPoly(4).to_string() == "0");
  CHECK(MultiPoly::constant(2, Rat(-5, 3)).to_string() == "-5/3");
  CHECK_THROWS_AS(MultiPoly::parse("z0 +", 2), Error);
  CHECK_THROWS_AS(MultiPoly::parse("z3", 2), Error);
}

TEST_CASE("determinant examples") {
  const PolyMatrix m1 = matrix_of({{"z0+z3", "z4", "-z1", "-z2"},
                                   {"z4", "z0+z3", "-z2", "-z1"},
                                   {"0", "0", "z0", "0"},
                                   {"0", "0", "0", "z0"}},
                                  5);
  CHECK(determinant(m1) == P(kM1, 5));
  CHECK(determinant(m1) == testsupport::leibniz_det(m1));

  PolyMatrix diag(4, 1);
  for (std::size_t i = 0; i < 4; ++i) diag(i, i) = P("z0", 1);
  CHECK(determinant(diag) == P("z0^4", 1));

  const PolyMatrix l5 = matrix_of({{"z0-z2", "z1", "0", "0", "0"},
                                   {"-2*z3", "z0", "2*z1", "0", "0"},
                                   {"0", "-z3", "z0+z2", "0", "0"},
                                   {"0", "0", "0", "z0-z5", "z4"},
                                   {"0", "0", "0", "0", "z0"}},
                                  6);
  const MultiPoly det = determinant(l5);
  CHECK(det == testsupport::leibniz_det(l5));
  CHECK(det == cofactor_determinant(l5));
  CHECK(det == P("z0^2", 6) * P("z0 - z5", 6) * P("z0^2 - z2^2 + 4*z1*z3", 6));

  PolyMatrix singular_column(3, 2);
  singular_column(0, 1) = P("z0", 2);
  singular_column(1, 2) = P("z1", 2);
  singular_column(2, 1) = P("z1", 2);
  CHECK(determinant(singular_column).is_zero());
}

TEST_CASE("apply_linear_change examples") {
  const MultiPoly p1 = P(kM1, 5);
  CHECK(apply_linear_change(p1, RatMatrix::identity(5)) == p1);

  RatMatrix D = RatMatrix::identity(5);
  for (std::size_t k = 1; k < 4; ++k) D(k, k + 1) = 1;
  const MultiPoly p2 = P("z0^2", 5) * form(5, {0, 1, 2, 1}) * form(5, {0, 1, 0, -1});
  CHECK(apply_linear_change(p1, D) == p2);

  RatMatrix scale = RatMatrix::identity(2);
  scale(1, 1) = 2;
  CHECK(apply_linear_change(P("z0 + z1", 2), scale) == P("z0 + 2*z1", 2));

  try {
    (void)apply_linear_change(p1, RatMatrix::identity(4));
    FAIL("expected shape error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::shape);
  }
}

TEST_CASE("exact_divide examples") {
  CHECK(exact_divide(P("z0^2 - z1^2", 2), P("z0 - z1", 2)) == P("z0 + z1", 2));
  const auto q = exact_divide(P(kM1, 5), P("z0^2", 5));
  REQUIRE(q);
  CHECK(*q == P("z0^2 + 2*z0*z3 + z3^2 - z4^2", 5));
  CHECK(*q * P("z0^2", 5) == P(kM1, 5));
  CHECK_FALSE(exact_divide(P("z0 + z1", 2), P("z1", 2)).has_value());
  try {
    (void)exact_divide(P("z0", 2), MultiPoly(2));
    FAIL("expected division by zero");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::division_by_zero);
  }
}

TEST_CASE("structure_checks examples") {
  const auto m1 = structure_checks(P(kM1, 5));
  CHECK(m1.homogeneous_degree == 4u);
  CHECK(m1.z0_multiplicity == 2);

  const auto mixed = structure_checks(P("z0 + z1 + 1", 2));
  CHECK_FALSE(mixed.homogeneous_degree.has_value());
  CHECK(mixed.z0_multiplicity == 0);

  try {
    (void)structure_checks(MultiPoly(3));
    FAIL("expected degenerate input");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::degenerate_input);
  }
}

TEST_CASE("linear_factorization examples") {
  const Factorization f = linear_factorization(P(kM1, 5));
  CHECK(f.complete);
  CHECK(f.to_string() == "(z0+z3+z4)^1*(z0+z3-z4)^1*(z0)^2");
  CHECK(f.expand(5) == P(kM1, 5));
  unsigned total = 0;
  for (const auto& [lf, mult] : f.factors) total += mult;
  CHECK(total == 4);

  const Factorization cube = linear_factorization(P("z0^3", 2), {LinearForm{RatVector{0}}});
  CHECK(cube.complete);
  REQUIRE(cube.factors.size() == 1);
  CHECK(cube.factors[0].second == 3);

  const MultiPoly l5 = P("z0^5 - z0^4*z5 + 4*z0^3*z1*z3 - z0^3*z2^2 - 4*z0^2*z1*z3*z5 + z0^2*z2^2*z5", 6);
  const Factorization g = linear_factorization(l5);
  CHECK_FALSE(g.complete);
  CHECK(g.reason == IncompleteReason::no_candidate_divides);
  CHECK(g.residual.total_degree() == 2);
  CHECK(g.expand(6) == l5);

  const Factorization irr = linear_factorization(P("z0^2 - 2*z1^2", 2));
  CHECK_FALSE(irr.complete);
  CHECK(irr.reason == IncompleteReason::irrational_spectrum);

  CHECK_THROWS_AS(linear_factorization(P("z0 + z1^2", 2)), Error);
  CHECK_THROWS_AS(linear_factorization(P("2*z0 + z1", 2)), Error);
}

TEST_CASE("property: ring axioms on random polynomials") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const MultiPoly a = testsupport::random_poly(rng, 3, 4, 3);
    const MultiPoly b = testsupport::random_poly(rng, 3, 4, 3);
    const MultiPoly c = testsupport::random_poly(rng, 3, 3, 2);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(MultiPoly::parse(a.to_string(), 3) == a);
  }
}

TEST_CASE("property: Bareiss agrees with cofactor and permutation expansion") {
  std::mt19937 rng(12);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + trial % 4;
    PolyMatrix m(n, 3);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        m(i, j) = (trial % 3 == 0 && (i + j) % 2) ? MultiPoly(3) : testsupport::random_poly(rng, 3, 2, 1);
    const MultiPoly oracle = testsupport::leibniz_det(m);
    CHECK(determinant(m) == oracle);
    CHECK(cofactor_determinant(m) == oracle);
  }
}

TEST_CASE("property: sparse and block-triangular determinants") {
  std::mt19937 rng(31);
  std::uniform_int_distribution<int> coin(0, 2);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 2 + trial % 5;
    const std::size_t cut = 1 + trial % (n - 1);
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    PolyMatrix m(n, 3);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const bool lower = i >= cut && j < cut;
        if (lower || coin(rng) == 0) continue;
        m(perm[i], perm[j]) = testsupport::random_poly(rng, 3, 2, 1);
      }
    CHECK(determinant(m) == testsupport::leibniz_det(m));
  }
}

TEST_CASE("property: pencil determinant is homogeneous and monic") {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 1 + trial % 4;
    std::vector<RatMatrix> mats;
    for (int k = 0; k < 3; ++k) mats.push_back(testsupport::random_matrix(rng, n));
    const MultiPoly p = determinant(linear_pencil(mats, n));
    CHECK(structure_checks(p).homogeneous_degree == static_cast<unsigned>(n));
    CHECK(is_monic_in_z0(p));
  }
}

TEST_CASE("property: linear change inverts") {
  std::mt19937 rng(14);
  for (int trial = 0; trial < 30; ++trial) {
    const MultiPoly p = testsupport::random_poly(rng, 4, 5, 3);
    const RatMatrix D = testsupport::random_invertible(rng, 4);
    CHECK(apply_linear_change(apply_linear_change(p, D), inverse(D)) == p);
  }
}

TEST_CASE("property: exact division multiplies back") {
  std::mt19937 rng(15);
  for (int trial = 0; trial < 40; ++trial) {
    const MultiPoly a = testsupport::random_poly(rng, 3, 3, 2);
    const MultiPoly d = testsupport::random_poly(rng, 3, 3, 2);
    if (d.is_zero()) continue;
    const auto q = exact_divide(a * d, d);
    REQUIRE(q);
    CHECK(*q * d == a * d);
    if (const auto r = exact_divide(a + MultiPoly::variable(3, 2).pow(7), d)) CHECK(*r * d == a + MultiPoly::variable(3, 2).pow(7));
  }
}

TEST_CASE("property: factorization reproduces products of random linear forms") {
  std::mt19937 rng(16);
  std::uniform_int_distribution<int> coeff(-2, 2);
  for (int trial = 0; trial < 25; ++trial) {
    const std::size_t nv = 4;
    MultiPoly p = MultiPoly::constant(nv, 1);
    for (int k = 0; k < 3; ++k) p *= form(nv, {coeff(rng), coeff(rng), coeff(rng)});
    const Factorization f = linear_factorization(p);
    CHECK(f.complete);
    CHECK(f.expand(nv) == p);
    MultiPoly q = p * P("z0^2 + z1*z2 + z3^2", nv);
    const Factorization g = linear_factorization(q);
    CHECK(g.expand(nv) == q);
    CHECK_FALSE(g.complete);
  }
}
