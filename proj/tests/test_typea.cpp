#include <doctest.h>

#include <algorithm>
#include <random>

#include "liechar/charpoly.hpp"
#include "liechar/error.hpp"
#include "liechar/typea.hpp"
#include "support.hpp"

using namespace liechar;
using namespace liechar::typea;
using testsupport::P;

namespace {

Character ch(std::vector<int> parts, std::size_t n) { return weight_multiplicities(Partition::make(std::move(parts)), n); }

LinearizedPoly lin(std::size_t rank, std::vector<std::pair<std::vector<long>, unsigned>> factors) {
  LinearizedPoly f(rank);
  for (auto& [c, e] : factors) f.add_factor(c, e);
  return f;
}

std::vector<long> pairings(const Character& c) {
  std::vector<long> out;
  for (const auto& [w, m] : c.mult)
    for (long k = 0; k < m; ++k) out.push_back(pairing(w).front());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("partition_from_dominant") {
  CHECK(partition_from_dominant(parse_dominant("sl3:1,0")) == Partition::make({1}));
  CHECK(partition_from_dominant(parse_dominant("sl3:1,1")) == Partition::make({2, 1}));
  CHECK(partition_from_dominant(parse_dominant("sl4:0,0,0")).parts.empty());
  CHECK_THROWS_AS(parse_dominant("sl3:1"), Error);
  CHECK_THROWS_AS(parse_dominant("su3:1,0"), Error);
  CHECK_THROWS_AS(parse_dominant("sl3:-1,0"), Error);
}

TEST_CASE("weight_multiplicities") {
  for (std::size_t n = 2; n <= 5; ++n)
    for (int k = 1; k < static_cast<int>(n); ++k) {
      const Character c = ch(std::vector<int>(k, 1), n);
      long expected = 1;
      for (int i = 0; i < k; ++i) expected = expected * static_cast<long>(n - i) / (i + 1);
      CHECK(c.dimension() == expected);
      for (const auto& [w, m] : c.mult) {
        CHECK(m == 1);
        CHECK(std::count(w.begin(), w.end(), 1) == k);
      }
    }

  for (int m = 0; m <= 6; ++m) {
    const Character c = ch({m}, 2);
    CHECK(c.dimension() == m + 1);
    for (int j = 0; j <= m; ++j) {
      CHECK(c.mult.at(Weight{m - j, j}) == 1);
      CHECK(pairing(Weight{m - j, j}) == std::vector<int>{m - 2 * j});
    }
  }

  const Character adj = ch({2, 1}, 3);
  CHECK(adj.dimension() == 8);
  CHECK(adj.mult.size() == 7);
  CHECK(adj.mult.at(Weight{1, 1, 1}) == 2);

  CHECK_THROWS_AS(ch({1, 1, 1}, 2), Error);
}

TEST_CASE("tensor_character") {
  const Character v = ch({2, 1}, 3);
  CHECK(tensor_character(ch({}, 3), v) == v);
  CHECK(pairings(tensor_character(ch({1}, 2), ch({1}, 2))) == std::vector<long>{-2, 0, 0, 2});

  const Character vv = tensor_character(ch({1}, 3), ch({1}, 3));
  CHECK(vv.dimension() == 9);
  CHECK(vv.mult.at(Weight{2, 0, 0}) == 1);
  CHECK(vv.mult.at(Weight{0, 0, 2}) == 1);
  CHECK(vv.mult.at(Weight{1, 1, 0}) == 2);
  CHECK(vv.mult.at(Weight{0, 1, 1}) == 2);
  CHECK_THROWS_AS(tensor_character(ch({1}, 2), ch({1}, 3)), Error);
}

TEST_CASE("linearize_from_character") {
  const LinearizedPoly two = linearize_from_character(ch({2}, 2));
  CHECK(two.expand() == P("z0", 2) * P("z0^2 - 4*z1^2", 2));
  CHECK(two.to_string() == "(z0+2*z1)^1*(z0)^1*(z0-2*z1)^1");
  CHECK(linearize_from_character(ch({}, 2)) == LinearizedPoly::z0(1));

  const LinearizedPoly w1 = linearize_from_character(ch({1}, 3));
  CHECK(w1.expand() == P("z0 + z1", 3) * P("z0 - z1 + z2", 3) * P("z0 - z2", 3));
  RatMatrix h1(3, 3), h2(3, 3);
  h1(0, 0) = 1;
  h1(1, 1) = -1;
  h2(1, 1) = 1;
  h2(2, 2) = -1;
  CHECK(w1.expand() == char_poly(Representation::make({h1, h2}, 3)).poly);
}

TEST_CASE("linearize_full") {
  const auto one = linearize_full(sl2_closed_form(1), 1);
  REQUIRE(one);
  CHECK(*one == lin(1, {{{1}, 1}, {{-1}, 1}}));

  const auto pure = linearize_full(P("z0^4", 5), 2);
  REQUIRE(pure);
  CHECK(*pure == lin(2, {{{0, 0}, 4}}));

  const auto two = linearize_full(P("z0^3 - 4*z0*z1^2 - 4*z0*z2*z3", 4), 1);
  REQUIRE(two);
  CHECK(*two == lin(1, {{{2}, 1}, {{0}, 1}, {{-2}, 1}}));

  CHECK_FALSE(linearize_full(P("z0^2 - 2*z1^2", 2), 1).has_value());
  CHECK_FALSE(linearize_full(P("z0^2 - 1/4*z1^2", 2), 1).has_value());
  CHECK_THROWS_AS(linearize_full(P("z0^2", 3), 3), Error);
}

TEST_CASE("resolution_product") {
  const LinearizedPoly f = lin(1, {{{1}, 1}, {{-1}, 1}});
  CHECK(resolution_product(f, LinearizedPoly::z0(1)) == f);
  CHECK(resolution_product(f, f) == lin(1, {{{2}, 1}, {{0}, 2}, {{-2}, 1}}));

  const LinearizedPoly g = linearize_from_character(ch({2}, 2));
  const LinearizedPoly h = linearize_from_character(ch({3}, 2));
  CHECK(resolution_product(f * g, h) == resolution_product(f, h) * resolution_product(g, h));
  CHECK_THROWS_AS(resolution_product(f, LinearizedPoly::z0(2)), Error);
}

TEST_CASE("weyl_invariance_check") {
  CHECK(weyl_invariance_check(lin(1, {{{1}, 1}, {{-1}, 1}})));
  CHECK_FALSE(weyl_invariance_check(lin(1, {{{1}, 1}})));
  CHECK(weyl_invariance_check(lin(2, {{{1, 0}, 1}, {{-1, 1}, 1}, {{0, -1}, 1}})));
  CHECK_FALSE(weyl_invariance_check(lin(2, {{{1, 0}, 1}, {{-1, 1}, 1}, {{0, -1}, 2}})));
}

TEST_CASE("sl2 closed form and ladder") {
  CHECK(sl2_closed_form(0) == P("z0", 4));
  CHECK(sl2_closed_form(1) == P("z0^2 - z1^2 - z2*z3", 4));
  CHECK(sl2_closed_form(2) == P("z0^3 - 4*z0*z1^2 - 4*z0*z2*z3", 4));

  const Representation v1 = sl2_irrep_rep(1);
  CHECK(v1.mats[0] == RatMatrix{{1, 0}, {0, -1}});
  CHECK(v1.mats[1] == RatMatrix::unit(2, 1, 2));
  CHECK(v1.mats[2] == RatMatrix::unit(2, 2, 1));
  CHECK(char_poly(v1).poly == sl2_closed_form(1));

  const LieAlgebra sl2 = sln_canonical_basis(2).algebra;
  for (unsigned m = 0; m <= 6; ++m) {
    const Representation r = sl2_irrep_rep(m);
    CHECK(r.space_dim == m + 1);
    CHECK(rep_validate(sl2, r).empty());
    const auto full = linearize_full(char_poly(r).poly, 1);
    REQUIRE(full);
    CHECK(*full == linearize_from_character(ch({static_cast<int>(m)}, 2)));
  }
}

TEST_CASE("sln_canonical_basis") {
  const SlnAlgebra two = sln_canonical_basis(2);
  CHECK(two.algebra.dim() == 3);
  CHECK(two.algebra.structure(0, 1) == RatVector{0, 2, 0});
  CHECK(two.algebra.structure(0, 2) == RatVector{0, 0, -2});
  CHECK(two.algebra.structure(1, 2) == RatVector{1, 0, 0});

  for (std::size_t n = 3; n <= 4; ++n) {
    const SlnAlgebra s = sln_canonical_basis(n);
    CHECK(s.algebra.dim() == n * n - 1);
    CHECK(validate(s.algebra).empty());
    CHECK(s.cartan.size() == n - 1);
    // E_12 sits right after the Cartan part.
    RatVector expected(n * n - 1);
    expected[n - 1] = 2;
    CHECK(s.algebra.structure(0, n - 1) == expected);
  }
  CHECK_THROWS_AS(sln_canonical_basis(1), Error);
}

TEST_CASE("property: characters are Weyl stable and linearizations invariant") {
  std::mt19937 rng(41);
  std::uniform_int_distribution<int> part(0, 2);
  for (int t = 0; t < 20; ++t) {
    const std::size_t n = 2 + t % 3;
    std::vector<int> a(n - 1);
    for (auto& x : a) x = part(rng);
    const Character c = weight_multiplicities(partition_from_dominant(DominantWeight{a}), n);
    CHECK(c.weyl_stable());
    const LinearizedPoly f = linearize_from_character(c);
    CHECK(weyl_invariance_check(f));
    CHECK(linearize_from_character(character_from_linearized(f)) == f);
  }
}

TEST_CASE("property: invariant factor multisets round-trip through characters") {
  std::mt19937 rng(42);
  std::uniform_int_distribution<int> entry(0, 3);
  std::uniform_int_distribution<unsigned> mult(1, 3);
  for (int t = 0; t < 25; ++t) {
    const std::size_t n = 2 + t % 3;
    Character c{n, {}};
    for (int orbits = 1 + t % 2; orbits > 0; --orbits) {
      Weight w(n);
      for (auto& x : w) x = entry(rng);
      const unsigned m = mult(rng);
      std::sort(w.begin(), w.end());
      do c.mult[w] += m;
      while (std::next_permutation(w.begin(), w.end()));
    }
    // Shift so the smallest coordinate is 0, the lift used by the inverse recipe.
    Character normalized{n, {}};
    for (const auto& [w, m] : c.mult) {
      Weight v = w;
      const int lo = *std::min_element(v.begin(), v.end());
      for (auto& x : v) x -= lo;
      normalized.mult[v] += m;
    }
    const LinearizedPoly f = linearize_from_character(normalized);
    CHECK(weyl_invariance_check(f));
    CHECK(character_from_linearized(f) == normalized);
  }
}

TEST_CASE("property: ring laws for product and resolution product") {
  std::mt19937 rng(43);
  std::uniform_int_distribution<int> part(0, 2);
  auto random_lin = [&](std::size_t n) {
    std::vector<int> a(n - 1);
    for (auto& x : a) x = part(rng);
    return linearize_from_character(weight_multiplicities(partition_from_dominant(DominantWeight{a}), n));
  };
  for (int t = 0; t < 12; ++t) {
    const std::size_t n = 2 + t % 2;
    const LinearizedPoly f = random_lin(n), g = random_lin(n), h = random_lin(n);
    CHECK(f * g == g * f);
    CHECK(resolution_product(f, g) == resolution_product(g, f));
    CHECK(resolution_product(resolution_product(f, g), h) == resolution_product(f, resolution_product(g, h)));
    CHECK((f * g) * h == f * (g * h));
    CHECK(resolution_product(f, LinearizedPoly::z0(n - 1)) == f);
    CHECK(resolution_product(f * g, h) == resolution_product(f, h) * resolution_product(g, h));
    CHECK((f * g).expand() == f.expand() * g.expand());
  }
}
