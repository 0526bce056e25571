#include "liechar/typea.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>
#include <sstream>

#include "liechar/error.hpp"
#include "liechar/factor.hpp"

namespace liechar::typea {

Partition Partition::make(std::vector<int> parts) {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] < 0) throw Error(Errc::invalid_argument, "partition parts must be non-negative");
    if (i && parts[i] > parts[i - 1]) throw Error(Errc::invalid_argument, "partition parts must be weakly decreasing");
  }
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  return Partition{std::move(parts)};
}

int Partition::size() const { return std::accumulate(parts.begin(), parts.end(), 0); }

DominantWeight parse_dominant(std::string_view spec) {
  auto fail = [&](const std::string& why) -> Error {
    return Error(Errc::parse_syntax, "bad weight '" + std::string(spec) + "': " + why);
  };
  if (spec.substr(0, 2) != "sl") throw fail("expected slN:a1,...");
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos) throw fail("missing ':'");
  std::size_t n = 0;
  const auto rank_text = spec.substr(2, colon - 2);
  auto [ptr, ec] = std::from_chars(rank_text.data(), rank_text.data() + rank_text.size(), n);
  if (ec != std::errc() || ptr != rank_text.data() + rank_text.size() || n < 2) throw fail("N must be an integer >= 2");
  DominantWeight w;
  std::string_view rest = spec.substr(colon + 1);
  while (true) {
    const auto comma = rest.find(',');
    const auto item = rest.substr(0, comma);
    int a = 0;
    auto [p, e] = std::from_chars(item.data(), item.data() + item.size(), a);
    if (e != std::errc() || p != item.data() + item.size() || a < 0 || item.empty())
      throw fail("coefficients must be non-negative integers");
    w.coeffs.push_back(a);
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  if (w.coeffs.size() != n - 1) throw fail("expected " + std::to_string(n - 1) + " coefficients");
  return w;
}

Partition partition_from_dominant(const DominantWeight& a) {
  std::vector<int> parts(a.coeffs.size());
  int running = 0;
  for (std::size_t i = a.coeffs.size(); i-- > 0;) {
    if (a.coeffs[i] < 0) throw Error(Errc::invalid_argument, "dominant weight coefficients must be non-negative");
    running += a.coeffs[i];
    parts[i] = running;
  }
  return Partition::make(std::move(parts));
}

std::vector<int> pairing(const Weight& eps) {
  std::vector<int> out;
  for (std::size_t i = 0; i + 1 < eps.size(); ++i) out.push_back(eps[i] - eps[i + 1]);
  return out;
}

long Character::dimension() const {
  long d = 0;
  for (const auto& [w, m] : mult) d += m;
  return d;
}

bool Character::weyl_stable() const {
  for (const auto& [w, m] : mult)
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      Weight s = w;
      std::swap(s[i], s[i + 1]);
      auto it = mult.find(s);
      if (it == mult.end() || it->second != m) return false;
    }
  return true;
}

Character weight_multiplicities(const Partition& lambda, std::size_t n) {
  if (n == 0) throw Error(Errc::invalid_argument, "rank must be positive");
  if (lambda.parts.size() > n)
    throw Error(Errc::invalid_argument, "shape with " + std::to_string(lambda.parts.size()) +
                                            " rows has no tableaux with entries 1.." + std::to_string(n));
  const auto& shape = lambda.parts;
  std::vector<std::vector<int>> tableau(shape.size());
  for (std::size_t r = 0; r < shape.size(); ++r) tableau[r].assign(static_cast<std::size_t>(shape[r]), 0);
  Character ch;
  ch.n = n;
  Weight content(n, 0);

  // Row by row, left to right: rows weakly increase, columns strictly increase.
  std::function<void(std::size_t, std::size_t)> fill = [&](std::size_t r, std::size_t c) {
    if (r == shape.size()) {
      ++ch.mult[content];
      return;
    }
    if (c == tableau[r].size()) {
      fill(r + 1, 0);
      return;
    }
    int lo = 1;
    if (c > 0) lo = std::max(lo, tableau[r][c - 1]);
    if (r > 0) lo = std::max(lo, tableau[r - 1][c] + 1);
    for (int v = lo; v <= static_cast<int>(n); ++v) {
      tableau[r][c] = v;
      ++content[static_cast<std::size_t>(v - 1)];
      fill(r, c + 1);
      --content[static_cast<std::size_t>(v - 1)];
    }
  };
  fill(0, 0);
  return ch;
}

Character tensor_character(const Character& u, const Character& v) {
  if (u.n != v.n) throw Error(Errc::dimension_mismatch, "characters of different ranks");
  Character out;
  out.n = u.n;
  for (const auto& [wu, mu] : u.mult)
    for (const auto& [wv, mv] : v.mult) {
      Weight w(u.n);
      for (std::size_t i = 0; i < u.n; ++i) w[i] = wu[i] + wv[i];
      out.mult[w] += mu * mv;
    }
  return out;
}

bool FormOrder::operator()(const std::vector<long>& a, const std::vector<long>& b) const {
  const long sa = std::accumulate(a.begin(), a.end(), 0L);
  const long sb = std::accumulate(b.begin(), b.end(), 0L);
  if (sa != sb) return sa > sb;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

LinearizedPoly LinearizedPoly::z0(std::size_t rank) {
  LinearizedPoly p(rank);
  p.add_factor(std::vector<long>(rank, 0));
  return p;
}

unsigned LinearizedPoly::degree() const {
  unsigned d = 0;
  for (const auto& [c, e] : factors_) d += e;
  return d;
}

void LinearizedPoly::add_factor(const std::vector<long>& coeffs, unsigned exponent) {
  if (coeffs.size() != rank_) throw Error(Errc::dimension_mismatch, "factor has the wrong number of coefficients");
  if (exponent) factors_[coeffs] += exponent;
}

LinearizedPoly LinearizedPoly::operator*(const LinearizedPoly& other) const {
  if (rank_ != other.rank_) throw Error(Errc::dimension_mismatch, "linearized polynomials of different ranks");
  LinearizedPoly r = *this;
  for (const auto& [c, e] : other.factors_) r.add_factor(c, e);
  return r;
}

MultiPoly LinearizedPoly::expand() const {
  const std::size_t vars = rank_ + 1;
  MultiPoly r = MultiPoly::constant(vars, 1);
  for (const auto& [c, e] : factors_) {
    RatVector coeffs(c.begin(), c.end());
    r *= MultiPoly::linear(vars, Rat(1), coeffs).pow(e);
  }
  return r;
}

std::string LinearizedPoly::to_string() const {
  if (factors_.empty()) return "1";
  std::ostringstream out;
  bool first = true;
  for (const auto& [c, e] : factors_) {
    if (!first) out << '*';
    first = false;
    out << '(' << LinearForm{RatVector(c.begin(), c.end())}.to_string() << ")^" << e;
  }
  return out.str();
}

LinearizedPoly resolution_product(const LinearizedPoly& f, const LinearizedPoly& g) {
  if (f.rank() != g.rank()) throw Error(Errc::dimension_mismatch, "resolution product of different ranks");
  LinearizedPoly r(f.rank());
  for (const auto& [a, ea] : f.factors())
    for (const auto& [b, eb] : g.factors()) {
      std::vector<long> sum(f.rank());
      for (std::size_t i = 0; i < f.rank(); ++i) sum[i] = a[i] + b[i];
      r.add_factor(sum, ea * eb);
    }
  return r;
}

LinearizedPoly linearize_from_character(const Character& ch) {
  if (ch.n == 0) throw Error(Errc::invalid_argument, "character without a rank");
  LinearizedPoly r(ch.n - 1);
  for (const auto& [w, m] : ch.mult) {
    if (m < 0) throw Error(Errc::invalid_argument, "negative multiplicity");
    const auto p = pairing(w);
    r.add_factor(std::vector<long>(p.begin(), p.end()), static_cast<unsigned>(m));
  }
  return r;
}

namespace {

Weight lift(const std::vector<long>& coeffs) {
  const std::size_t n = coeffs.size() + 1;
  std::vector<long> eps(n, 0);
  for (std::size_t i = n - 1; i-- > 0;) eps[i] = eps[i + 1] + coeffs[i];
  const long lo = *std::min_element(eps.begin(), eps.end());
  Weight w(n);
  for (std::size_t i = 0; i < n; ++i) w[i] = static_cast<int>(eps[i] - lo);
  return w;
}

}  // namespace

Character character_from_linearized(const LinearizedPoly& f) {
  Character ch;
  ch.n = f.rank() + 1;
  for (const auto& [c, e] : f.factors()) ch.mult[lift(c)] += e;
  return ch;
}

std::optional<LinearizedPoly> linearize_full(const MultiPoly& p, std::size_t ell) {
  if (p.num_vars() == 0 || ell + 1 > p.num_vars())
    throw Error(Errc::shape, "linearization rank " + std::to_string(ell) + " exceeds the variable count");
  MultiPoly q(ell + 1);
  for (const auto& [m, c] : p.terms()) {
    bool root_part = false;
    for (std::size_t k = ell + 1; k < m.num_vars(); ++k)
      if (m[k]) root_part = true;
    if (root_part) continue;
    Monomial mm(ell + 1);
    for (std::size_t k = 0; k <= ell; ++k) mm.set(k, m[k]);
    q.add_term(mm, c);
  }
  const Factorization f = linear_factorization(q);
  if (!f.complete) return std::nullopt;
  LinearizedPoly out(ell);
  for (const auto& [form, e] : f.factors) {
    std::vector<long> coeffs;
    for (const auto& c : form.coeffs) {
      if (c.get_den() != 1 || !c.get_num().fits_slong_p()) return std::nullopt;
      coeffs.push_back(c.get_num().get_si());
    }
    out.add_factor(coeffs, e);
  }
  return out;
}

bool weyl_invariance_check(const LinearizedPoly& f) {
  const std::size_t n = f.rank() + 1;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    LinearizedPoly moved(f.rank());
    for (const auto& [c, e] : f.factors()) {
      Weight w = lift(c);
      std::swap(w[i], w[i + 1]);
      const auto p = pairing(w);
      moved.add_factor(std::vector<long>(p.begin(), p.end()), e);
    }
    if (moved != f) return false;
  }
  return true;
}

MultiPoly sl2_closed_form(unsigned m) {
  constexpr std::size_t vars = 4;
  const MultiPoly z0 = MultiPoly::variable(vars, 0);
  const MultiPoly z0sq = z0 * z0;
  const MultiPoly casimir = MultiPoly::variable(vars, 1).pow(2) + MultiPoly::variable(vars, 2) * MultiPoly::variable(vars, 3);
  MultiPoly r = MultiPoly::constant(vars, 1);
  if (m % 2 == 0) {
    r = z0;
    for (unsigned i = 1; i <= m / 2; ++i) r *= z0sq - casimir * Rat(4 * i * i);
  } else {
    for (unsigned i = 0; i <= (m - 1) / 2; ++i) r *= z0sq - casimir * Rat((2 * i + 1) * (2 * i + 1));
  }
  return r;
}

Representation sl2_irrep_rep(unsigned m) {
  const std::size_t d = m + 1;
  RatMatrix h(d, d), e(d, d), f(d, d);
  for (std::size_t j = 0; j < d; ++j) {
    const long jj = static_cast<long>(j);
    h(j, j) = static_cast<long>(m) - 2 * jj;
    if (j > 0) e(j - 1, j) = jj * (static_cast<long>(m) - jj + 1);
    if (j + 1 < d) f(j + 1, j) = 1;
  }
  return Representation{{h, e, f}, d};
}

SlnAlgebra sln_canonical_basis(std::size_t n) {
  if (n < 2) throw Error(Errc::invalid_argument, "sl_n needs n >= 2");
  SlnAlgebra out;
  std::vector<std::string> names;
  for (std::size_t i = 1; i < n; ++i) {
    out.matrices.push_back(RatMatrix::unit(n, i, i) - RatMatrix::unit(n, i + 1, i + 1));
    out.cartan.push_back(i - 1);
    names.push_back("h" + std::to_string(i));
  }
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= n; ++j) {
      if (i == j) continue;
      out.matrices.push_back(RatMatrix::unit(n, i, j));
      names.push_back("E" + std::to_string(i) + std::to_string(j));
    }
  out.algebra = LieAlgebra::from_matrices(std::move(names), out.matrices);
  return out;
}

}  // namespace liechar::typea
