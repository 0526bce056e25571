#include "liechar/charpoly.hpp"

#include "liechar/determinant.hpp"
#include "liechar/error.hpp"

namespace liechar {

Representation Representation::make(std::vector<RatMatrix> mats, std::size_t space_dim) {
  for (std::size_t k = 0; k < mats.size(); ++k)
    if (mats[k].rows() != space_dim || mats[k].cols() != space_dim)
      throw Error(Errc::shape, "representation matrix " + std::to_string(k + 1) + " is not " +
                                   std::to_string(space_dim) + "x" + std::to_string(space_dim));
  return Representation{std::move(mats), space_dim};
}

Representation adjoint_representation(const LieAlgebra& L) {
  std::vector<RatMatrix> mats;
  for (std::size_t i = 0; i < L.dim(); ++i) mats.push_back(ad_matrix(L, L.basis_vector(i)));
  return Representation{std::move(mats), L.dim()};
}

Representation trivial_representation(std::size_t generators, std::size_t n) {
  return Representation{std::vector<RatMatrix>(generators, RatMatrix(n, n)), n};
}

std::vector<std::pair<std::size_t, std::size_t>> rep_validate(const LieAlgebra& L, const Representation& rep) {
  if (rep.generators() != L.dim())
    throw Error(Errc::dimension_mismatch, "representation has " + std::to_string(rep.generators()) +
                                              " matrices for an algebra of dimension " + std::to_string(L.dim()));
  Representation::make(rep.mats, rep.space_dim);
  std::vector<std::pair<std::size_t, std::size_t>> bad;
  for (std::size_t i = 0; i < L.dim(); ++i)
    for (std::size_t j = i + 1; j < L.dim(); ++j) {
      const Element c = L.structure(i, j);
      RatMatrix image(rep.space_dim, rep.space_dim);
      for (std::size_t k = 0; k < L.dim(); ++k)
        if (c[k] != 0) image += rep.mats[k] * c[k];
      if (image != commutator(rep.mats[i], rep.mats[j])) bad.emplace_back(i, j);
    }
  return bad;
}

CharPolyResult char_poly(const Representation& rep) {
  Representation::make(rep.mats, rep.space_dim);
  CharPolyResult r;
  r.space_dim = rep.space_dim;
  r.poly = determinant(linear_pencil(rep.mats, rep.space_dim));
  const auto info = structure_checks(r.poly);
  if (info.homogeneous_degree != rep.space_dim || !is_monic_in_z0(r.poly))
    throw Error(Errc::inconsistent, "characteristic polynomial is not homogeneous and monic in z0");
  return r;
}

Representation dual(const Representation& rep) {
  Representation d{{}, rep.space_dim};
  for (const auto& m : rep.mats) d.mats.push_back(m.transpose() * Rat(-1));
  return d;
}

DualCheck dual_identity(const Representation& rep) {
  DualCheck out;
  out.dual_rep = dual(rep);
  out.dual_poly = char_poly(out.dual_rep).poly;
  const MultiPoly p = char_poly(rep).poly;
  RatMatrix flip = RatMatrix::identity(p.num_vars());
  flip(0, 0) = -1;
  MultiPoly expected = apply_linear_change(p, flip);
  if (rep.space_dim % 2) expected = -expected;
  out.verified = out.dual_poly == expected;
  return out;
}

Representation direct_sum(const Representation& u, const Representation& v) {
  if (u.generators() != v.generators())
    throw Error(Errc::dimension_mismatch, "direct sum of representations of different algebras");
  Representation r{{}, u.space_dim + v.space_dim};
  for (std::size_t k = 0; k < u.generators(); ++k) r.mats.push_back(block_diagonal(u.mats[k], v.mats[k]));
  return r;
}

DirectSumCheck direct_sum_identity(const Representation& u, const Representation& v) {
  DirectSumCheck out;
  out.sum = direct_sum(u, v);
  out.verified = char_poly(out.sum).poly == char_poly(u).poly * char_poly(v).poly;
  return out;
}

NilpotencyVerdict nilpotency_tests(const LieAlgebra& L) {
  return nilpotency_tests(L, char_poly(adjoint_representation(L)).poly);
}

NilpotencyVerdict nilpotency_tests(const LieAlgebra& L, const MultiPoly& p_ad) {
  if (p_ad.num_vars() != L.dim() + 1) throw Error(Errc::ring_mismatch, "adjoint polynomial has the wrong ring");
  NilpotencyVerdict v;
  v.p_ad = p_ad;
  const std::size_t vars = v.p_ad.num_vars();
  v.theorem = v.p_ad == MultiPoly::term(Monomial::variable(vars, 0, static_cast<unsigned>(L.dim())), Rat(1));
  v.corollary = v.p_ad.substitute(0, Rat(1)) == MultiPoly::constant(vars, 1);
  if (v.theorem != v.corollary) throw Error(Errc::inconsistent, "nilpotency theorem and corollary disagree");
  return v;
}

CodimCheck codim_factor_check(const LieAlgebra& L) {
  return codim_factor_check(L, char_poly(adjoint_representation(L)).poly);
}

CodimCheck codim_factor_check(const LieAlgebra& L, const MultiPoly& p_ad) {
  if (p_ad.num_vars() != L.dim() + 1) throw Error(Errc::ring_mismatch, "adjoint polynomial has the wrong ring");
  const Subspace whole = Subspace::whole(L.dim());
  CodimCheck c;
  c.codim = L.dim() - bracket_span(L, whole, whole).dim();
  c.z0_multiplicity = structure_checks(p_ad).z0_multiplicity;
  c.holds = c.z0_multiplicity >= c.codim;
  return c;
}

namespace {

struct ImageSplit {
  Subspace kernel;
  RatMatrix basis_change;  // columns y_1..y_{s-t}, x_1..x_t
  Representation image_rep;
};

ImageSplit split_kernel(const Representation& rep) {
  Representation::make(rep.mats, rep.space_dim);
  const std::size_t s = rep.generators();
  const std::size_t flat = rep.space_dim * rep.space_dim;
  std::vector<RatVector> cols;
  for (const auto& m : rep.mats) cols.push_back(m.flat());
  const RatMatrix phi = RatMatrix::from_columns(cols, flat);
  const RatMatrix ns = null_space(phi);

  ImageSplit out;
  std::vector<RatVector> kernel_vectors;
  for (std::size_t r = 0; r < ns.rows(); ++r) kernel_vectors.push_back(ns.row(r));
  out.kernel = Subspace::span(kernel_vectors, s);

  // Complement the kernel with the standard vectors at its non-pivot columns.
  std::vector<bool> pivot(s, false);
  for (std::size_t c : rref(out.kernel.basis()).pivots) pivot[c] = true;
  std::vector<RatVector> basis;
  for (std::size_t c = 0; c < s; ++c) {
    if (pivot[c]) continue;
    RatVector y(s);
    y[c] = 1;
    basis.push_back(std::move(y));
  }
  out.image_rep.space_dim = rep.space_dim;
  for (const auto& y : basis) {
    RatMatrix m(rep.space_dim, rep.space_dim);
    for (std::size_t i = 0; i < s; ++i)
      if (y[i] != 0) m += rep.mats[i] * y[i];
    out.image_rep.mats.push_back(std::move(m));
  }
  for (const auto& x : out.kernel.vectors()) basis.push_back(x);
  out.basis_change = RatMatrix::from_columns(basis, s);
  return out;
}

}  // namespace

KernelReduction kernel_reduction(const LieAlgebra& L, const Representation& rep) {
  if (rep.generators() != L.dim()) throw Error(Errc::dimension_mismatch, "representation does not match the algebra");
  ImageSplit split = split_kernel(rep);
  KernelReduction out;
  out.kernel = std::move(split.kernel);
  out.basis_change = std::move(split.basis_change);
  out.image_rep = std::move(split.image_rep);

  const std::size_t s = L.dim();
  const RatMatrix P = inverse(out.basis_change);
  out.D = RatMatrix(s + 1, s + 1);
  out.D(0, 0) = 1;
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = 0; j < s; ++j) out.D(i + 1, j + 1) = P(j, i);

  const MultiPoly p_phi = char_poly(rep).poly;
  const MultiPoly p_image = char_poly(out.image_rep).poly.embed(s + 1);
  out.verified = apply_linear_change(p_image, out.D) == p_phi;
  return out;
}

LieAlgebra image_algebra(const KernelReduction& red) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < red.image_rep.generators(); ++i) names.push_back("y" + std::to_string(i + 1));
  return LieAlgebra::from_matrices(std::move(names), red.image_rep.mats);
}

const char* outcome_name(SolvabilityOutcome o) {
  switch (o) {
    case SolvabilityOutcome::consistent: return "consistent";
    case SolvabilityOutcome::undetermined_over_q: return "undetermined-over-Q";
    case SolvabilityOutcome::contradiction: return "contradiction";
  }
  return "unknown";
}

SolvabilityReport solvability_test(const LieAlgebra& L, const Representation& rep) {
  return solvability_test(L, rep, char_poly(rep).poly);
}

SolvabilityReport solvability_test(const LieAlgebra& L, const Representation& rep, const MultiPoly& p) {
  if (rep.generators() != L.dim()) throw Error(Errc::dimension_mismatch, "representation does not match the algebra");
  SolvabilityReport r;
  r.oracle = classify_oracle(L).solvable;
  const ImageSplit split = split_kernel(rep);
  std::vector<std::string> names(split.image_rep.generators(), "y");
  r.image_solvable = classify_oracle(LieAlgebra::from_matrices(names, split.image_rep.mats)).solvable;
  if (r.oracle && !r.image_solvable) throw Error(Errc::inconsistent, "image of a solvable algebra is not solvable");

  r.factorization = linear_factorization(p);
  const auto& f = r.factorization;
  if (f.complete)
    r.outcome = r.image_solvable ? SolvabilityOutcome::consistent : SolvabilityOutcome::contradiction;
  else if (!r.image_solvable)
    r.outcome = SolvabilityOutcome::consistent;
  else if (f.reason == IncompleteReason::irrational_spectrum)
    r.outcome = SolvabilityOutcome::undetermined_over_q;
  else
    r.outcome = SolvabilityOutcome::contradiction;
  r.consistent = r.outcome != SolvabilityOutcome::contradiction;
  return r;
}

PowerLinearResult power_linear_test(const Representation& rep) {
  const MultiPoly p = char_poly(rep).poly;
  const std::size_t vars = p.num_vars();
  const unsigned n = static_cast<unsigned>(rep.space_dim);
  PowerLinearResult out;
  LinearForm f{RatVector(vars - 1)};
  if (n > 0)
    for (std::size_t i = 1; i < vars; ++i) {
      Monomial m = Monomial::variable(vars, 0, n - 1);
      m.set(i, 1);
      f.coeffs[i - 1] = p.coefficient(m) / n;
    }
  out.is_power_of_linear_form = f.to_poly(vars).pow(n) == p;
  if (out.is_power_of_linear_form) {
    out.root = f;
    out.implied_nilpotent = true;
  }
  return out;
}

}  // namespace liechar
