#include "liechar/determinant.hpp"

#include <algorithm>
#include <utility>
#include <vector>

#include "liechar/error.hpp"

namespace liechar {

PolyMatrix::PolyMatrix(std::size_t n, std::size_t num_vars)
    : n_(n), num_vars_(num_vars), entries_(n * n, MultiPoly(num_vars)) {}

void PolyMatrix::check() const {
  for (const auto& e : entries_)
    if (e.num_vars() != num_vars_) throw Error(Errc::ring_mismatch, "matrix entries live in different rings");
}

PolyMatrix linear_pencil(const std::vector<RatMatrix>& mats, std::size_t n) {
  const std::size_t vars = mats.size() + 1;
  PolyMatrix m(n, vars);
  for (std::size_t i = 0; i < n; ++i) m(i, i).add_term(Monomial::variable(vars, 0), Rat(1));
  for (std::size_t k = 0; k < mats.size(); ++k) {
    if (mats[k].rows() != n || mats[k].cols() != n)
      throw Error(Errc::shape, "generator " + std::to_string(k + 1) + " is not " + std::to_string(n) + "x" +
                                   std::to_string(n));
    const Monomial zk = Monomial::variable(vars, k + 1);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j).add_term(zk, mats[k](i, j));
  }
  return m;
}

namespace {

MultiPoly bareiss(PolyMatrix a) {
  const std::size_t n = a.size();
  const std::size_t vars = a.num_vars();
  if (n == 0) return MultiPoly::constant(vars, 1);

  MultiPoly previous = MultiPoly::constant(vars, 1);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    // Sparsest nonzero pivot keeps the intermediate minors small.
    std::size_t best = n;
    for (std::size_t r = k; r < n; ++r)
      if (!a(r, k).is_zero() && (best == n || a(r, k).size() < a(best, k).size())) best = r;
    if (best == n) return MultiPoly(vars);
    if (best != k) {
      for (std::size_t j = k; j < n; ++j) std::swap(a(best, j), a(k, j));
      negate = !negate;
    }
    const MultiPoly& pivot = a(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      const bool row_trivial = a(i, k).is_zero();
      for (std::size_t j = k + 1; j < n; ++j) {
        MultiPoly numerator = pivot * a(i, j);
        if (!row_trivial && !a(k, j).is_zero()) numerator -= a(i, k) * a(k, j);
        auto q = exact_divide(numerator, previous);
        if (!q) throw Error(Errc::inconsistent, "Bareiss step produced an inexact division");
        a(i, j) = std::move(*q);
      }
      a(i, k) = MultiPoly(vars);
    }
    previous = a(k, k);
  }
  MultiPoly det = a(n - 1, n - 1);
  return negate ? -det : det;
}

// Tarjan SCCs of the pattern i -> j when m(i, j) != 0.
std::vector<std::vector<std::size_t>> pattern_components(const PolyMatrix& m) {
  const std::size_t n = m.size();
  const std::size_t unset = n;
  std::vector<std::size_t> index(n, unset), low(n, 0), stack;
  std::vector<bool> on_stack(n, false);
  std::vector<std::vector<std::size_t>> comps;
  std::size_t counter = 0;
  // iterative: frames of (node, next column)
  std::vector<std::pair<std::size_t, std::size_t>> frames;
  for (std::size_t root = 0; root < n; ++root) {
    if (index[root] != unset) continue;
    frames.push_back({root, 0});
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!frames.empty()) {
      auto& [v, j] = frames.back();
      if (j < n) {
        const std::size_t w = j++;
        if (w == v || m(v, w).is_zero()) continue;
        if (index[w] == unset) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          frames.push_back({w, 0});
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      const std::size_t done = v;
      frames.pop_back();
      if (!frames.empty()) low[frames.back().first] = std::min(low[frames.back().first], low[done]);
      if (low[done] == index[done]) {
        std::vector<std::size_t> comp;
        std::size_t w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp.push_back(w);
        } while (w != done);
        comps.push_back(std::move(comp));
      }
    }
  }
  return comps;
}

}  // namespace

MultiPoly determinant(const PolyMatrix& input) {
  input.check();
  const std::size_t n = input.size();
  const std::size_t vars = input.num_vars();
  if (n == 0) return MultiPoly::constant(vars, 1);
  // Same permutation on rows and columns makes the matrix block triangular.
  const auto comps = pattern_components(input);
  if (comps.size() == 1) return bareiss(input);
  MultiPoly det = MultiPoly::constant(vars, 1);
  for (const auto& comp : comps) {
    PolyMatrix block(comp.size(), vars);
    for (std::size_t i = 0; i < comp.size(); ++i)
      for (std::size_t j = 0; j < comp.size(); ++j) block(i, j) = input(comp[i], comp[j]);
    det = det * bareiss(std::move(block));
    if (det.is_zero()) return det;
  }
  return det;
}

namespace {

MultiPoly cofactor_rec(const PolyMatrix& m) {
  const std::size_t n = m.size();
  const std::size_t vars = m.num_vars();
  if (n == 0) return MultiPoly::constant(vars, 1);
  if (n == 1) return m(0, 0);
  MultiPoly total(vars);
  for (std::size_t col = 0; col < n; ++col) {
    if (m(0, col).is_zero()) continue;
    PolyMatrix minor(n - 1, vars);
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t j = 0, jj = 0; j < n; ++j)
        if (j != col) minor(i - 1, jj++) = m(i, j);
    MultiPoly t = m(0, col) * cofactor_rec(minor);
    if (col % 2) total -= t;
    else total += t;
  }
  return total;
}

}  // namespace

MultiPoly cofactor_determinant(const PolyMatrix& m) {
  m.check();
  return cofactor_rec(m);
}

}  // namespace liechar
