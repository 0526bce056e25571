#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "liechar/charpoly.hpp"
#include "liechar/determinant.hpp"
#include "liechar/lie.hpp"
#include "liechar/matrix.hpp"
#include "liechar/poly.hpp"

namespace testsupport {

using namespace liechar;

inline std::string fixture(const std::string& name) { return std::string(LIECHAR_FIXTURES) + "/" + name; }

inline MultiPoly P(const char* text, std::size_t num_vars) { return MultiPoly::parse(text, num_vars); }

// Sum over permutations with the sign from the inversion count.
inline MultiPoly leibniz_det(const PolyMatrix& m) {
  const std::size_t n = m.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  MultiPoly total(m.num_vars());
  do {
    std::size_t inversions = 0;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b)
        if (perm[a] > perm[b]) ++inversions;
    MultiPoly term = MultiPoly::constant(m.num_vars(), inversions % 2 ? -1 : 1);
    for (std::size_t r = 0; r < n && !term.is_zero(); ++r) term *= m(r, perm[r]);
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

// Nilpotent iff every product of dim ad-matrices vanishes; tracked as a span of words.
inline bool nilpotent_by_words(const LieAlgebra& L) {
  const std::size_t s = L.dim();
  if (s == 0) return true;
  std::vector<RatMatrix> ads;
  for (std::size_t i = 0; i < s; ++i) ads.push_back(ad_matrix(L, L.basis_vector(i)));
  auto reduce = [s](const std::vector<RatMatrix>& mats) {
    std::vector<RatVector> rows;
    for (const auto& m : mats) rows.push_back(m.flat());
    const RatMatrix basis = rref(RatMatrix::from_rows(rows, s * s)).reduced;
    std::vector<RatMatrix> out;
    for (std::size_t r = 0; r < basis.rows(); ++r) {
      if (is_zero(basis.row(r))) continue;
      RatMatrix m(s, s);
      for (std::size_t k = 0; k < s * s; ++k) m(k / s, k % s) = basis(r, k);
      out.push_back(m);
    }
    return out;
  };
  std::vector<RatMatrix> span = reduce(ads);
  for (std::size_t len = 1; len < s && !span.empty(); ++len) {
    std::vector<RatMatrix> next;
    for (const auto& a : ads)
      for (const auto& w : span) next.push_back(a * w);
    span = reduce(next);
  }
  return span.empty();
}

// Cartan's criterion: solvable iff tr(ad x ad y) = 0 for x in L, y in [L, L].
inline bool solvable_by_cartan(const LieAlgebra& L) {
  const std::size_t s = L.dim();
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = i + 1; j < s; ++j) {
      const RatMatrix ady = ad_matrix(L, L.structure(i, j));
      for (std::size_t k = 0; k < s; ++k) {
        const RatMatrix prod = ad_matrix(L, L.basis_vector(k)) * ady;
        Rat trace = 0;
        for (std::size_t d = 0; d < s; ++d) trace += prod(d, d);
        if (trace != 0) return false;
      }
    }
  return true;
}

inline Rat random_rat(std::mt19937& rng, int range = 3, int max_den = 1) {
  std::uniform_int_distribution<int> num(-range, range);
  std::uniform_int_distribution<int> den(1, max_den);
  Rat r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

inline MultiPoly random_poly(std::mt19937& rng, std::size_t num_vars, int terms, unsigned max_deg) {
  MultiPoly p(num_vars);
  std::uniform_int_distribution<unsigned> exp(0, max_deg);
  std::uniform_int_distribution<std::size_t> var(0, num_vars - 1);
  for (int t = 0; t < terms; ++t) {
    Monomial m(num_vars);
    unsigned budget = exp(rng);
    while (budget--) {
      const std::size_t v = var(rng);
      m.set(v, m[v] + 1);
    }
    p.add_term(m, random_rat(rng, 4, 3));
  }
  return p;
}

inline RatMatrix random_matrix(std::mt19937& rng, std::size_t n, int range = 2) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = random_rat(rng, range);
  return m;
}

// Unit lower times unit upper, with a random diagonal of +-1 and 2.
inline RatMatrix random_invertible(std::mt19937& rng, std::size_t n) {
  RatMatrix lo = RatMatrix::identity(n), up = RatMatrix::identity(n);
  std::uniform_int_distribution<int> pick(0, 2);
  const Rat diag[] = {1, -1, 2};
  for (std::size_t i = 0; i < n; ++i) {
    up(i, i) = diag[pick(rng)];
    for (std::size_t j = 0; j < i; ++j) {
      lo(i, j) = random_rat(rng, 1);
      up(j, i) = random_rat(rng, 1);
    }
  }
  return lo * up;
}

// A permutation times n random transvections, with a +-1 or 2 scaling.
inline RatMatrix random_sparse_invertible(std::mt19937& rng, std::size_t n) {
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(perm[i], i) = 1;
  std::uniform_int_distribution<std::size_t> idx(0, n - 1);
  for (std::size_t step = 0; step < n && n > 1; ++step) {
    const std::size_t i = idx(rng), j = idx(rng);
    if (i == j) continue;
    for (std::size_t r = 0; r < n; ++r) m(r, j) += random_rat(rng, 1) * m(r, i);
  }
  std::uniform_int_distribution<int> pick(0, 2);
  const Rat scale[] = {1, -1, 2};
  const std::size_t k = idx(rng);
  const Rat c = scale[pick(rng)];
  for (std::size_t r = 0; r < n; ++r) m(r, k) *= c;
  return m;
}

struct CorpusEntry {
  std::string name;
  LieAlgebra algebra;
  Representation rep;  // a faithful representation when one is at hand, otherwise the adjoint
  enum class Kind { nilpotent, split_solvable, other } kind = Kind::other;
};

std::vector<CorpusEntry> build_corpus(unsigned seed = 20261016);

}  // namespace testsupport
