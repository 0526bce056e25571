#include <doctest.h>

#include <random>

#include "liechar/document.hpp"
#include "liechar/error.hpp"
#include "liechar/lie.hpp"
#include "support.hpp"

using namespace liechar;

namespace {

LieAlgebra load(const char* name) { return load_algebra_file(testsupport::fixture(name)).algebra; }

LieAlgebra sl2_with_ef(std::vector<std::pair<std::size_t, Rat>> ef) {
  return LieAlgebra::from_brackets({"h", "e", "f"}, {{0, 1, {{1, 2}}}, {0, 2, {{2, -2}}}, {1, 2, std::move(ef)}});
}

Element vec(std::initializer_list<int> xs) {
  Element v;
  for (int x : xs) v.emplace_back(x);
  return v;
}

RatMatrix E(std::size_t n, std::size_t i, std::size_t j) { return RatMatrix::unit(n, i, j); }

}  // namespace

TEST_CASE("validate") {
  CHECK(validate(sl2_with_ef({{0, 1}})).empty());
  const auto bad = validate(sl2_with_ef({{0, 1}, {1, 1}}));
  REQUIRE_FALSE(bad.empty());
  CHECK(bad.front().kind == AxiomViolation::Kind::jacobi);
  CHECK(bad.front().i == 0);
  CHECK(bad.front().j == 1);
  CHECK(bad.front().k == 2);
  CHECK(validate(LieAlgebra::abelian(4)).empty());
  CHECK_THROWS_AS(LieAlgebra::from_brackets({"a", "b"}, {{1, 0, {{0, 1}}}}), Error);
}

TEST_CASE("bracket on M1^10") {
  const LieAlgebra L = load("m1_10.alg");
  CHECK(bracket(L, L.basis_vector(3), L.basis_vector(0)) == vec({0, 1, 0, 0}));
  CHECK(bracket(L, L.basis_vector(3), L.basis_vector(1)) == vec({1, 0, 0, 0}));
  CHECK(bracket(L, vec({1, 1, 0, 0}), L.basis_vector(2)) == vec({-1, -1, 0, 0}));
  std::mt19937 rng(21);
  for (int t = 0; t < 20; ++t) {
    Element x;
    for (int k = 0; k < 4; ++k) x.push_back(testsupport::random_rat(rng, 5, 3));
    CHECK(is_zero(bracket(L, x, x)));
  }
  CHECK_THROWS_AS(bracket(L, vec({1, 0}), vec({1, 0, 0, 0})), Error);
}

TEST_CASE("ad matrices of M1^10") {
  const LieAlgebra L = load("m1_10.alg");
  CHECK(ad_matrix(L, L.basis_vector(0)) == -1 * E(4, 1, 3) - E(4, 2, 4));
  CHECK(ad_matrix(L, L.basis_vector(1)) == -1 * E(4, 1, 4) - E(4, 2, 3));
  CHECK(ad_matrix(L, L.basis_vector(2)) == E(4, 1, 1) + E(4, 2, 2));
  CHECK(ad_matrix(L, L.basis_vector(3)) == E(4, 1, 2) + E(4, 2, 1));
  CHECK(ad_matrix(L, vec({1, 1, 0, 0})) == -1 * E(4, 1, 3) - E(4, 2, 4) - E(4, 1, 4) - E(4, 2, 3));
  CHECK(ad_matrix(LieAlgebra::abelian(3), vec({1, 2, 3})).is_zero());
}

TEST_CASE("series") {
  const LieAlgebra H = load("heisenberg.alg");
  const auto lcs = series(H, SeriesKind::lower_central);
  REQUIRE(lcs.size() == 3);
  CHECK(lcs[0].dim() == 3);
  CHECK(lcs[1] == Subspace::span({vec({0, 0, 1})}, 3));
  CHECK(lcs[2].dim() == 0);

  const auto ab = series(LieAlgebra::abelian(3), SeriesKind::derived);
  REQUIRE(ab.size() == 2);
  CHECK(ab[1].dim() == 0);

  const auto l5 = series(load("l5.alg"), SeriesKind::derived);
  CHECK(l5.back().dim() == 3);
  CHECK(l5.back() == Subspace::span({vec({1, 0, 0, 0, 0}), vec({0, 1, 0, 0, 0}), vec({0, 0, 1, 0, 0})}, 5));
}

TEST_CASE("classify_oracle") {
  CHECK_FALSE(classify_oracle(load("l5.alg")).solvable);
  const auto m1 = classify_oracle(load("m1_10.alg"));
  CHECK(m1.solvable);
  CHECK_FALSE(m1.nilpotent);
  CHECK(classify_oracle(load("nilpotent5.alg")).nilpotent);
}

TEST_CASE("change_basis") {
  const LieAlgebra L = load("m1_10.alg");
  const LieAlgebra same = change_basis(L, RatMatrix::identity(4));
  CHECK(same.dim() == 4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) CHECK(same.structure(i, j) == L.structure(i, j));

  const RatMatrix P{{1, 0, 0, 0}, {1, 1, 0, 0}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  const LieAlgebra B2 = change_basis(L, P);
  // ad_{x_j} written back in e-coordinates is P ad^{B2}_{x_j} P^{-1}.
  const RatMatrix expected[] = {
      -1 * E(4, 1, 3) - E(4, 2, 4) - E(4, 1, 4) - E(4, 2, 3),
      -1 * E(4, 1, 4) - E(4, 2, 3) + E(4, 1, 1) + E(4, 2, 2),
      E(4, 1, 1) + E(4, 2, 2) + E(4, 1, 2) + E(4, 2, 1),
      E(4, 1, 2) + E(4, 2, 1),
  };
  for (std::size_t j = 0; j < 4; ++j)
    CHECK(P * ad_matrix(B2, B2.basis_vector(j)) * inverse(P) == expected[j]);

  RatMatrix scale = RatMatrix::identity(4);
  scale(0, 0) = 2;
  const LieAlgebra S = change_basis(L, scale);
  CHECK(S.structure(0, 2) == vec({-1, 0, 0, 0}));
  CHECK(S.structure(0, 3) == vec({0, -2, 0, 0}));
  CHECK(S.structure(1, 3) == Element{Rat(-1, 2), 0, 0, 0});

  RatMatrix singular = RatMatrix::identity(4);
  singular(3, 3) = 0;
  try {
    (void)change_basis(L, singular);
    FAIL("expected singular matrix");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::singular_matrix);
  }
}

TEST_CASE("center") {
  CHECK(center(load("heisenberg.alg")) == Subspace::span({vec({0, 0, 1})}, 3));
  CHECK(center(LieAlgebra::abelian(3)) == Subspace::whole(3));
  CHECK(center(load("sl2.alg")).dim() == 0);
}

TEST_CASE("isomorphism check") {
  const LieAlgebra n25 = load("n2_5.alg");
  const LieAlgebra L = load("nilpotent5.alg");
  const RatMatrix phi = RatMatrix::from_columns(
      {vec({1, 0, -1, 0, 0}), vec({0, 1, 1, 0, 0}), vec({0, 0, 1, 0, 0}), vec({0, -1, -1, 1, 0}), vec({-1, 0, 1, 0, 1})}, 5);
  const auto ok = check_isomorphism(n25, L, phi);
  CHECK(ok.bijective);
  CHECK(ok.bracket_preserving);
  RatMatrix broken = phi;
  broken(0, 2) = 1;
  CHECK_FALSE(check_isomorphism(n25, L, broken).bracket_preserving);
}

TEST_CASE("from_matrices recovers sl2 constants") {
  const LieAlgebra L = LieAlgebra::from_matrices({"h", "e", "f"}, {E(2, 1, 1) - E(2, 2, 2), E(2, 1, 2), E(2, 2, 1)});
  CHECK(L == sl2_with_ef({{0, 1}}));
  CHECK_THROWS_AS(LieAlgebra::from_matrices({"a", "b"}, {E(2, 1, 2), E(2, 2, 1)}), Error);
}

TEST_CASE("property: corpus invariants") {
  const auto corpus = testsupport::build_corpus();
  std::mt19937 rng(22);
  for (const auto& entry : corpus) {
    const LieAlgebra& L = entry.algebra;
    CAPTURE(entry.name);
    CHECK(validate(L).empty());
    const auto oracle = classify_oracle(L);
    CHECK((!oracle.nilpotent || oracle.solvable));
    CHECK(oracle.nilpotent == testsupport::nilpotent_by_words(L));
    CHECK(oracle.solvable == testsupport::solvable_by_cartan(L));

    for (int t = 0; t < 3; ++t) {
      Element x, y;
      for (std::size_t k = 0; k < L.dim(); ++k) {
        x.push_back(testsupport::random_rat(rng));
        y.push_back(testsupport::random_rat(rng));
      }
      CHECK(ad_matrix(L, x) * y == bracket(L, x, y));
    }

    const auto derived = series(L, SeriesKind::derived);
    for (std::size_t k = 1; k < derived.size(); ++k) {
      CHECK(derived[k - 1].contains(derived[k]));
      CHECK(derived[k].contains(bracket_span(L, derived[k - 1], derived[k])));
    }

    for (const auto& z : center(L).vectors()) CHECK(ad_matrix(L, z).is_zero());

    const RatMatrix P = testsupport::random_invertible(rng, L.dim());
    const LieAlgebra M = change_basis(L, P);
    const auto moved = classify_oracle(M);
    CHECK(moved.solvable == oracle.solvable);
    CHECK(moved.nilpotent == oracle.nilpotent);
    const LieAlgebra back = change_basis(M, inverse(P));
    for (std::size_t i = 0; i < L.dim(); ++i)
      for (std::size_t j = 0; j < L.dim(); ++j) CHECK(back.structure(i, j) == L.structure(i, j));
  }
}
