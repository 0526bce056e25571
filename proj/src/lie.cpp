#include "liechar/lie.hpp"

#include <sstream>

#include "liechar/error.hpp"

namespace liechar {

namespace {

void check_dim(const LieAlgebra& L, const Element& x) {
  if (x.size() != L.dim())
    throw Error(Errc::dimension_mismatch,
                "element has " + std::to_string(x.size()) + " coordinates, algebra has dimension " + std::to_string(L.dim()));
}

std::vector<std::string> default_names(std::size_t dim) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < dim; ++i) names.push_back("e" + std::to_string(i + 1));
  return names;
}

}  // namespace

std::size_t LieAlgebra::pair_index(std::size_t i, std::size_t j) const {
  return i * dim_ - i * (i + 1) / 2 + (j - i - 1);
}

LieAlgebra LieAlgebra::from_brackets(std::vector<std::string> names, const std::vector<BracketEntry>& entries) {
  LieAlgebra L;
  L.dim_ = names.size();
  L.names_ = std::move(names);
  L.upper_.assign(L.dim_ * (L.dim_ ? L.dim_ - 1 : 0) / 2, Element(L.dim_));
  for (const auto& e : entries) {
    if (e.i >= L.dim_ || e.j >= L.dim_) throw Error(Errc::shape, "bracket index out of range");
    if (e.i >= e.j)
      throw Error(Errc::index_order, "bracket entry [" + std::to_string(e.i + 1) + ", " + std::to_string(e.j + 1) +
                                         "] must have i < j");
    auto& row = L.upper_[L.pair_index(e.i, e.j)];
    for (const auto& [k, c] : e.terms) {
      if (k >= L.dim_) throw Error(Errc::shape, "bracket result index out of range");
      row[k] += c;
    }
  }
  return L;
}

LieAlgebra LieAlgebra::from_table(std::vector<std::string> names, const std::vector<std::vector<Element>>& table) {
  const std::size_t n = names.size();
  if (table.size() != n) throw Error(Errc::shape, "structure table has the wrong size");
  std::vector<BracketEntry> entries;
  for (std::size_t i = 0; i < n; ++i) {
    if (table[i].size() != n) throw Error(Errc::shape, "structure table has the wrong size");
    for (std::size_t j = 0; j < n; ++j) {
      if (table[i][j].size() != n) throw Error(Errc::shape, "structure table entry has the wrong length");
      Element sum = table[i][j];
      for (std::size_t k = 0; k < n; ++k) sum[k] += table[j][i][k];
      if (!is_zero(sum) || (i == j && !is_zero(table[i][j])))
        throw Error(Errc::invalid_argument, "structure table is not antisymmetric at (" + std::to_string(i + 1) + ", " +
                                                std::to_string(j + 1) + ")");
      if (i < j) {
        BracketEntry e{i, j, {}};
        for (std::size_t k = 0; k < n; ++k)
          if (table[i][j][k] != 0) e.terms.emplace_back(k, table[i][j][k]);
        entries.push_back(std::move(e));
      }
    }
  }
  return from_brackets(std::move(names), entries);
}

LieAlgebra LieAlgebra::from_matrices(std::vector<std::string> names, const std::vector<RatMatrix>& basis) {
  const std::size_t s = basis.size();
  if (names.size() != s) throw Error(Errc::shape, "one name per basis matrix required");
  if (s == 0) return from_brackets(std::move(names), {});
  const std::size_t flat = basis.front().flat().size();
  std::vector<RatVector> cols;
  for (const auto& b : basis) {
    if (b.flat().size() != flat) throw Error(Errc::shape, "basis matrices differ in size");
    cols.push_back(b.flat());
  }
  const RatMatrix coords = RatMatrix::from_columns(cols, flat);
  if (rank(coords) != s) throw Error(Errc::invalid_argument, "basis matrices are linearly dependent");
  std::vector<BracketEntry> entries;
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = i + 1; j < s; ++j) {
      auto x = solve(coords, commutator(basis[i], basis[j]).flat());
      if (!x) throw Error(Errc::invalid_argument, "span of the matrices is not closed under commutators");
      BracketEntry e{i, j, {}};
      for (std::size_t k = 0; k < s; ++k)
        if ((*x)[k] != 0) e.terms.emplace_back(k, (*x)[k]);
      entries.push_back(std::move(e));
    }
  return from_brackets(std::move(names), entries);
}

LieAlgebra LieAlgebra::abelian(std::size_t dim) { return from_brackets(default_names(dim), {}); }

Element LieAlgebra::structure(std::size_t i, std::size_t j) const {
  if (i >= dim_ || j >= dim_) throw Error(Errc::shape, "basis index out of range");
  if (i == j) return Element(dim_);
  if (i < j) return upper_[pair_index(i, j)];
  Element r = upper_[pair_index(j, i)];
  for (auto& x : r) x = -x;
  return r;
}

std::vector<BracketEntry> LieAlgebra::brackets() const {
  std::vector<BracketEntry> out;
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i + 1; j < dim_; ++j) {
      const auto& row = upper_[pair_index(i, j)];
      if (is_zero(row)) continue;
      BracketEntry e{i, j, {}};
      for (std::size_t k = 0; k < dim_; ++k)
        if (row[k] != 0) e.terms.emplace_back(k, row[k]);
      out.push_back(std::move(e));
    }
  return out;
}

Element LieAlgebra::basis_vector(std::size_t i) const {
  Element v(dim_);
  v.at(i) = 1;
  return v;
}

std::string AxiomViolation::describe(const LieAlgebra& L) const {
  const auto& n = L.basis_names();
  std::ostringstream out;
  if (kind == Kind::jacobi)
    out << "Jacobi identity fails at (" << n[i] << ", " << n[j] << ", " << n[k] << ")";
  else
    out << "antisymmetry fails at (" << n[i] << ", " << n[j] << ")";
  return out.str();
}

Element bracket(const LieAlgebra& L, const Element& x, const Element& y) {
  check_dim(L, x);
  check_dim(L, y);
  const std::size_t n = L.dim();
  Element r(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j] == 0 || i == j) continue;
      const Rat w = x[i] * y[j];
      const Element c = L.structure(i, j);
      for (std::size_t k = 0; k < n; ++k) r[k] += w * c[k];
    }
  }
  return r;
}

std::vector<AxiomViolation> validate(const LieAlgebra& L) {
  std::vector<AxiomViolation> report;
  const std::size_t n = L.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Element sum = L.structure(i, j);
      const Element rev = L.structure(j, i);
      for (std::size_t k = 0; k < n; ++k) sum[k] += rev[k];
      if (!is_zero(sum) || !is_zero(L.structure(i, i)))
        report.push_back({AxiomViolation::Kind::antisymmetry, i, j, 0});
    }
  // The Jacobi sum is alternating in (x, y, z), so strictly increasing triples suffice.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        const Element ei = L.basis_vector(i), ej = L.basis_vector(j), ek = L.basis_vector(k);
        Element sum = bracket(L, ei, L.structure(j, k));
        const Element b = bracket(L, ej, L.structure(k, i));
        const Element c = bracket(L, ek, L.structure(i, j));
        for (std::size_t m = 0; m < n; ++m) sum[m] += b[m] + c[m];
        if (!is_zero(sum)) report.push_back({AxiomViolation::Kind::jacobi, i, j, k});
      }
  return report;
}

RatMatrix ad_matrix(const LieAlgebra& L, const Element& x) {
  check_dim(L, x);
  const std::size_t n = L.dim();
  RatMatrix m(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    const Element col = bracket(L, x, L.basis_vector(j));
    for (std::size_t i = 0; i < n; ++i) m(i, j) = col[i];
  }
  return m;
}

// ---- subspaces ---------------------------------------------------------------

Subspace Subspace::span(const std::vector<RatVector>& vectors, std::size_t ambient) {
  Subspace s;
  s.ambient_ = ambient;
  s.basis_ = rref(RatMatrix::from_rows(vectors, ambient)).reduced;
  if (s.basis_.cols() != ambient) s.basis_ = RatMatrix(0, ambient);
  return s;
}

Subspace Subspace::whole(std::size_t ambient) {
  Subspace s;
  s.ambient_ = ambient;
  s.basis_ = RatMatrix::identity(ambient);
  return s;
}

Subspace Subspace::zero(std::size_t ambient) {
  Subspace s;
  s.ambient_ = ambient;
  s.basis_ = RatMatrix(0, ambient);
  return s;
}

std::vector<RatVector> Subspace::vectors() const {
  std::vector<RatVector> out;
  for (std::size_t i = 0; i < basis_.rows(); ++i) out.push_back(basis_.row(i));
  return out;
}

bool Subspace::contains(const RatVector& v) const {
  if (v.size() != ambient_) throw Error(Errc::dimension_mismatch, "vector and subspace ambient dimensions differ");
  auto rows = vectors();
  rows.push_back(v);
  return rank(RatMatrix::from_rows(rows, ambient_)) == dim();
}

bool Subspace::contains(const Subspace& other) const {
  for (const auto& v : other.vectors())
    if (!contains(v)) return false;
  return true;
}

Subspace bracket_span(const LieAlgebra& L, const Subspace& a, const Subspace& b) {
  std::vector<RatVector> out;
  const auto av = a.vectors();
  const auto bv = b.vectors();
  for (const auto& x : av)
    for (const auto& y : bv) {
      auto z = bracket(L, x, y);
      if (!is_zero(z)) out.push_back(std::move(z));
    }
  return Subspace::span(out, L.dim());
}

SubspaceChain series(const LieAlgebra& L, SeriesKind kind) {
  const Subspace whole = Subspace::whole(L.dim());
  SubspaceChain chain{whole};
  for (std::size_t step = 0; step <= L.dim(); ++step) {
    const Subspace& cur = chain.back();
    Subspace next = kind == SeriesKind::derived ? bracket_span(L, cur, cur) : bracket_span(L, whole, cur);
    if (next == cur) break;
    chain.push_back(std::move(next));
  }
  return chain;
}

Classification classify_oracle(const LieAlgebra& L) {
  Classification c;
  c.solvable = series(L, SeriesKind::derived).back().dim() == 0;
  c.nilpotent = series(L, SeriesKind::lower_central).back().dim() == 0;
  if (c.nilpotent && !c.solvable) throw Error(Errc::inconsistent, "series oracle reports nilpotent but not solvable");
  return c;
}

LieAlgebra change_basis(const LieAlgebra& L, const RatMatrix& P) {
  const std::size_t n = L.dim();
  if (P.rows() != n || P.cols() != n) throw Error(Errc::shape, "transition matrix has the wrong size");
  const RatMatrix Pinv = inverse(P);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("x" + std::to_string(i + 1));
  std::vector<BracketEntry> entries;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const Element v = Pinv * bracket(L, P.column(i), P.column(j));
      BracketEntry e{i, j, {}};
      for (std::size_t k = 0; k < n; ++k)
        if (v[k] != 0) e.terms.emplace_back(k, v[k]);
      entries.push_back(std::move(e));
    }
  return LieAlgebra::from_brackets(std::move(names), entries);
}

Subspace center(const LieAlgebra& L) {
  const std::size_t n = L.dim();
  // Row (j, k): sum_i x_i c_{ij}^k = 0.
  RatMatrix system(n * n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Element c = L.structure(i, j);
      for (std::size_t k = 0; k < n; ++k) system(j * n + k, i) = c[k];
    }
  const RatMatrix ns = null_space(system);
  std::vector<RatVector> rows;
  for (std::size_t r = 0; r < ns.rows(); ++r) rows.push_back(ns.row(r));
  return Subspace::span(rows, n);
}

HomomorphismCheck check_isomorphism(const LieAlgebra& source, const LieAlgebra& target, const RatMatrix& map) {
  if (map.rows() != target.dim() || map.cols() != source.dim())
    throw Error(Errc::shape, "map must be " + std::to_string(target.dim()) + "x" + std::to_string(source.dim()));
  HomomorphismCheck result;
  result.bijective = source.dim() == target.dim() && rank(map) == source.dim();
  const std::size_t n = source.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const Element lhs = map * source.structure(i, j);
      const Element rhs = bracket(target, map.column(i), map.column(j));
      if (lhs != rhs) result.failures.emplace_back(i, j);
    }
  result.bracket_preserving = result.failures.empty();
  return result;
}

}  // namespace liechar
