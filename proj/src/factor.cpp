#include "liechar/factor.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "liechar/error.hpp"

namespace liechar {

MultiPoly LinearForm::to_poly(std::size_t num_vars) const { return MultiPoly::linear(num_vars, Rat(1), coeffs); }

std::string LinearForm::to_string() const {
  std::ostringstream out;
  out << "z0";
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    const Rat& c = coeffs[i];
    if (c == 0) continue;
    out << (c < 0 ? '-' : '+');
    const Rat mag = abs(c);
    if (mag != 1) out << liechar::to_string(mag) << '*';
    out << 'z' << (i + 1);
  }
  return out.str();
}

bool form_precedes(const RatVector& a, const RatVector& b) {
  Rat sa, sb;
  for (const auto& x : a) sa += x;
  for (const auto& x : b) sb += x;
  if (sa != sb) return sa > sb;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

const char* reason_name(IncompleteReason r) {
  switch (r) {
    case IncompleteReason::none: return "none";
    case IncompleteReason::no_candidate_divides: return "no-candidate-divides";
    case IncompleteReason::irrational_spectrum: return "irrational-spectrum";
  }
  return "unknown";
}

MultiPoly Factorization::expand(std::size_t num_vars) const {
  MultiPoly r = residual.num_vars() == num_vars ? residual : residual.embed(num_vars);
  for (const auto& [f, e] : factors) r *= f.to_poly(num_vars).pow(e);
  return r;
}

std::string Factorization::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (const auto& [f, e] : factors) {
    if (!first) out << '*';
    first = false;
    out << '(' << f.to_string() << ")^" << e;
  }
  if (first || residual != MultiPoly::constant(residual.num_vars(), 1)) {
    if (!first) out << '*';
    out << '(' << residual.to_string() << ')';
  }
  return out.str();
}

// ---- rational roots --------------------------------------------------------

namespace {

Rat horner(const UniPoly& c, const Rat& x) {
  Rat acc;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

// Quotient of c by (x - r); the caller guarantees r is a root.
UniPoly deflate(const UniPoly& c, const Rat& r) {
  const std::size_t d = c.size() - 1;
  UniPoly q(d);
  Rat carry;
  for (std::size_t k = d; k-- > 0;) {
    carry = c[k + 1] + carry * r;
    q[k] = carry;
  }
  return q;
}

std::vector<Integer> positive_divisors(Integer n) {
  n = abs(n);
  std::vector<Integer> small, large;
  for (Integer d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d * d != n) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

}  // namespace

std::pair<std::vector<Rat>, bool> rational_roots(const UniPoly& input) {
  UniPoly c = input;
  while (!c.empty() && c.back() == 0) c.pop_back();
  if (c.empty()) throw Error(Errc::degenerate_input, "roots of the zero polynomial");
  std::vector<Rat> roots;
  std::size_t zeros = 0;
  while (c.front() == 0) {
    c.erase(c.begin());
    ++zeros;
  }
  roots.insert(roots.end(), zeros, Rat(0));
  if (c.size() > 1) {
    Integer lcm = 1;
    for (const auto& x : c) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den_mpz_t());
    std::vector<Integer> ints;
    for (const auto& x : c) ints.push_back(Integer(x * lcm));
    std::set<Rat> candidates;
    const auto ps = positive_divisors(ints.front());
    const auto qs = positive_divisors(ints.back());
    for (const auto& p : ps)
      for (const auto& q : qs) {
        Rat r(p, q);
        r.canonicalize();
        candidates.insert(r);
        candidates.insert(-r);
      }
    for (const auto& r : candidates) {
      while (c.size() > 1 && horner(c, r) == 0) {
        roots.push_back(r);
        c = deflate(c, r);
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  return {roots, c.size() == 1};
}

// ---- grids and trial division ----------------------------------------------

namespace {

void require_monic(const MultiPoly& p) {
  if (p.num_vars() == 0) throw Error(Errc::precondition, "polynomial has no z0 variable");
  if (!is_monic_in_z0(p)) throw Error(Errc::precondition, "linear factorization needs a homogeneous polynomial monic in z0");
}

void sort_factors(Factorization& f) {
  std::sort(f.factors.begin(), f.factors.end(),
            [](const auto& a, const auto& b) { return form_precedes(a.first.coeffs, b.first.coeffs); });
}

// Divides `current` by `form` as many times as possible.
unsigned strip_factor(MultiPoly& current, const MultiPoly& form) {
  unsigned mult = 0;
  while (!current.is_constant()) {
    auto q = exact_divide(current, form);
    if (!q) break;
    current = std::move(*q);
    ++mult;
  }
  return mult;
}

void finish(Factorization& f, bool irrational) {
  f.complete = f.residual.is_constant();
  if (!f.complete) f.reason = irrational ? IncompleteReason::irrational_spectrum : IncompleteReason::no_candidate_divides;
  sort_factors(f);
}

}  // namespace

CandidateGrid eigenvalue_grid(const MultiPoly& p) {
  require_monic(p);
  const std::size_t s = p.num_vars() - 1;
  const unsigned n = p.leading().first.degree();
  CandidateGrid grid;
  grid.values.resize(s);
  for (std::size_t i = 1; i <= s; ++i) {
    UniPoly u(n + 1);
    for (const auto& [m, c] : p.terms()) {
      if (m[0] + m[i] != m.degree()) continue;
      u[m[0]] += c;
    }
    auto [roots, all] = rational_roots(u);
    if (!all) grid.irrational_spectrum = true;
    std::set<Rat> distinct;
    for (const auto& r : roots) distinct.insert(-r);
    grid.values[i - 1].assign(distinct.begin(), distinct.end());
  }
  return grid;
}

Factorization linear_factorization(const MultiPoly& p, const std::vector<LinearForm>& candidates) {
  require_monic(p);
  Factorization f;
  f.residual = p;
  for (const auto& c : candidates) {
    if (c.coeffs.size() + 1 > p.num_vars()) throw Error(Errc::ring_mismatch, "candidate has too many coefficients");
    const unsigned mult = strip_factor(f.residual, c.to_poly(p.num_vars()));
    if (mult) f.factors.emplace_back(c, mult);
  }
  finish(f, false);
  return f;
}

Factorization linear_factorization(const MultiPoly& p, const CandidateGrid& grid) {
  require_monic(p);
  const std::size_t vars = p.num_vars();
  const std::size_t s = vars - 1;
  if (grid.values.size() != s) throw Error(Errc::shape, "candidate grid has the wrong number of variables");

  Factorization f;
  f.residual = p;
  while (!f.residual.is_constant()) {
    // restricted[k]: residual with z_{k+1}..z_s set to zero.
    std::vector<MultiPoly> restricted(s + 1);
    restricted[s] = f.residual;
    for (std::size_t k = s; k > 0; --k) restricted[k - 1] = restricted[k].substitute(k, 0);

    RatVector coeffs(s);
    std::function<bool(std::size_t)> search = [&](std::size_t k) -> bool {
      // coeffs[0..k) fixed; test the prefix form against restricted[k].
      RatVector prefix(coeffs.begin(), coeffs.begin() + static_cast<std::ptrdiff_t>(k));
      if (!exact_divide(restricted[k], MultiPoly::linear(vars, Rat(1), prefix))) return false;
      if (k == s) return true;
      for (const auto& v : grid.values[k]) {
        coeffs[k] = v;
        if (search(k + 1)) return true;
      }
      coeffs[k] = 0;
      return false;
    };
    if (!search(0)) break;
    LinearForm form{coeffs};
    const unsigned mult = strip_factor(f.residual, form.to_poly(vars));
    f.factors.emplace_back(std::move(form), mult);
  }
  finish(f, grid.irrational_spectrum);
  return f;
}

Factorization linear_factorization(const MultiPoly& p) { return linear_factorization(p, eigenvalue_grid(p)); }

}  // namespace liechar
