#include "liechar/poly.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <sstream>

#include "liechar/error.hpp"

namespace liechar {

// ---- Monomial -------------------------------------------------------------

Monomial::Monomial(std::initializer_list<unsigned> exps) {
  exps_.reserve(exps.size());
  for (unsigned e : exps) {
    exps_.push_back(static_cast<Exponent>(e));
    degree_ += e;
  }
}

Monomial Monomial::variable(std::size_t num_vars, std::size_t index, unsigned power) {
  if (index >= num_vars) throw Error(Errc::ring_mismatch, "variable index out of range");
  Monomial m(num_vars);
  m.set(index, power);
  return m;
}

void Monomial::set(std::size_t i, unsigned e) {
  if (e > std::numeric_limits<Exponent>::max()) throw Error(Errc::invalid_argument, "exponent overflow");
  degree_ = degree_ - exps_[i] + e;
  exps_[i] = static_cast<Exponent>(e);
}

bool Monomial::divides(const Monomial& other) const noexcept {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r = *this;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    const unsigned e = unsigned(exps_[i]) + other.exps_[i];
    if (e > std::numeric_limits<Exponent>::max()) throw Error(Errc::invalid_argument, "exponent overflow");
    r.exps_[i] = static_cast<Exponent>(e);
  }
  r.degree_ = degree_ + other.degree_;
  return r;
}

Monomial Monomial::operator/(const Monomial& other) const {
  Monomial r = *this;
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] = static_cast<Exponent>(exps_[i] - other.exps_[i]);
  r.degree_ = degree_ - other.degree_;
  return r;
}

std::strong_ordering Monomial::grlex(const Monomial& other) const noexcept {
  if (degree_ != other.degree_) return degree_ <=> other.degree_;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] != other.exps_[i]) return exps_[i] <=> other.exps_[i];
  return std::strong_ordering::equal;
}

// ---- MultiPoly ------------------------------------------------------------

MultiPoly MultiPoly::constant(std::size_t num_vars, const Rat& c) {
  MultiPoly p(num_vars);
  p.add_term(Monomial(num_vars), c);
  return p;
}

MultiPoly MultiPoly::variable(std::size_t num_vars, std::size_t index) {
  return term(Monomial::variable(num_vars, index), Rat(1));
}

MultiPoly MultiPoly::term(const Monomial& m, const Rat& c) {
  MultiPoly p(m.num_vars());
  p.add_term(m, c);
  return p;
}

MultiPoly MultiPoly::linear(std::size_t num_vars, const Rat& z0_coeff, const RatVector& coeffs) {
  if (coeffs.size() + 1 > num_vars) throw Error(Errc::ring_mismatch, "linear form has more coefficients than variables");
  MultiPoly p(num_vars);
  p.add_term(Monomial::variable(num_vars, 0), z0_coeff);
  for (std::size_t i = 0; i < coeffs.size(); ++i) p.add_term(Monomial::variable(num_vars, i + 1), coeffs[i]);
  return p;
}

bool MultiPoly::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.degree() == 0);
}

Rat MultiPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rat(0) : it->second;
}

unsigned MultiPoly::total_degree() const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

unsigned MultiPoly::degree_in(std::size_t var) const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m[var]);
  return d;
}

unsigned MultiPoly::min_degree_in(std::size_t var) const {
  unsigned d = std::numeric_limits<unsigned>::max();
  for (const auto& [m, c] : terms_) d = std::min(d, m[var]);
  return terms_.empty() ? 0 : d;
}

void MultiPoly::add_term(const Monomial& m, const Rat& c) {
  if (m.num_vars() != num_vars_) throw Error(Errc::ring_mismatch, "monomial ring mismatch");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void MultiPoly::check_ring(const MultiPoly& other) const {
  if (num_vars_ != other.num_vars_)
    throw Error(Errc::ring_mismatch, "polynomials live in rings with " + std::to_string(num_vars_) + " and " +
                                         std::to_string(other.num_vars_) + " variables");
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& other) {
  check_ring(other);
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& other) {
  check_ring(other);
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.check_ring(b);
  MultiPoly r(a.num_vars_);
  if (a.is_zero() || b.is_zero()) return r;
  Rat prod;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      prod = ca * cb;
      r.add_term(ma * mb, prod);
    }
  return r;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& other) { return *this = *this * other; }

MultiPoly& MultiPoly::operator*=(const Rat& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= scalar;
  return *this;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

MultiPoly MultiPoly::pow(unsigned k) const {
  MultiPoly result = constant(num_vars_, 1);
  MultiPoly base = *this;
  while (k) {
    if (k & 1u) result *= base;
    k >>= 1u;
    if (k) base *= base;
  }
  return result;
}

MultiPoly MultiPoly::substitute(std::size_t var, const Rat& value) const {
  if (var >= num_vars_) throw Error(Errc::ring_mismatch, "substitution variable out of range");
  MultiPoly r(num_vars_);
  for (const auto& [m, c] : terms_) {
    Monomial mm = m;
    const unsigned e = m[var];
    mm.set(var, 0);
    Rat coeff = c;
    if (e) {
      Rat power;
      mpz_pow_ui(power.get_num_mpz_t(), value.get_num_mpz_t(), e);
      mpz_pow_ui(power.get_den_mpz_t(), value.get_den_mpz_t(), e);
      coeff *= power;
    }
    r.add_term(mm, coeff);
  }
  return r;
}

MultiPoly MultiPoly::compose(const std::vector<MultiPoly>& images) const {
  if (images.size() != num_vars_) throw Error(Errc::shape, "composition needs one image per variable");
  const std::size_t target = images.empty() ? 0 : images.front().num_vars();
  for (const auto& img : images)
    if (img.num_vars() != target) throw Error(Errc::ring_mismatch, "composition images live in different rings");
  std::vector<std::vector<MultiPoly>> powers(num_vars_);
  for (std::size_t k = 0; k < num_vars_; ++k) powers[k].push_back(constant(target, 1));
  auto power_of = [&](std::size_t k, unsigned e) -> const MultiPoly& {
    while (powers[k].size() <= e) powers[k].push_back(powers[k].back() * images[k]);
    return powers[k][e];
  };
  MultiPoly r(target);
  for (const auto& [m, c] : terms_) {
    MultiPoly t = constant(target, c);
    for (std::size_t k = 0; k < num_vars_; ++k)
      if (m[k]) t *= power_of(k, m[k]);
    r += t;
  }
  return r;
}

MultiPoly MultiPoly::embed(std::size_t num_vars) const {
  if (num_vars < num_vars_) throw Error(Errc::ring_mismatch, "cannot embed into a smaller ring");
  MultiPoly r(num_vars);
  for (const auto& [m, c] : terms_) {
    Monomial mm(num_vars);
    for (std::size_t k = 0; k < num_vars_; ++k) mm.set(k, m[k]);
    r.add_term(mm, c);
  }
  return r;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const bool negative = c < 0;
    const Rat mag = negative ? Rat(-c) : c;
    if (first)
      out << (negative ? "-" : "");
    else
      out << (negative ? " - " : " + ");
    first = false;
    bool wrote = false;
    if (mag != 1 || m.degree() == 0) {
      out << liechar::to_string(mag);
      wrote = true;
    }
    for (std::size_t k = 0; k < m.num_vars(); ++k) {
      if (!m[k]) continue;
      if (wrote) out << '*';
      out << 'z' << k;
      if (m[k] > 1) out << '^' << m[k];
      wrote = true;
    }
  }
  return out.str();
}

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : text_(text) {}

  struct RawTerm {
    Rat coeff;
    std::vector<std::pair<std::size_t, unsigned>> powers;
  };

  std::vector<RawTerm> run() {
    std::vector<RawTerm> terms;
    skip();
    if (at_end()) fail("empty polynomial");
    bool first = true;
    while (!at_end()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      RawTerm t = term();
      t.coeff *= sign;
      terms.push_back(std::move(t));
      skip();
    }
    return terms;
  }

 private:
  RawTerm term() {
    RawTerm t{Rat(1), {}};
    bool need_factor = true;
    while (need_factor) {
      skip();
      if (peek() == 'z') {
        ++pos_;
        const auto idx = number();
        unsigned e = 1;
        skip();
        if (peek() == '^') {
          ++pos_;
          skip();
          e = static_cast<unsigned>(number());
        }
        t.powers.emplace_back(idx, e);
      } else if (std::isdigit(static_cast<unsigned char>(peek()))) {
        std::size_t start = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (peek() == '/') {
          ++pos_;
          while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        }
        t.coeff *= parse_rat(text_.substr(start, pos_ - start));
      } else {
        fail("expected a coefficient or a variable");
      }
      skip();
      need_factor = peek() == '*';
      if (need_factor) ++pos_;
    }
    return t;
  }

  std::size_t number() {
    std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected digits");
    return std::stoul(std::string(text_.substr(start, pos_ - start)));
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(Errc::parse_syntax, "polynomial parse error at offset " + std::to_string(pos_) + ": " + msg);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

MultiPoly MultiPoly::parse(std::string_view text, std::size_t num_vars) {
  auto raw = PolyParser(text).run();
  std::size_t needed = 1;
  for (const auto& t : raw)
    for (const auto& [idx, e] : t.powers) needed = std::max(needed, idx + 1);
  if (num_vars == 0) num_vars = needed;
  if (needed > num_vars) throw Error(Errc::ring_mismatch, "polynomial uses more variables than its ring");
  MultiPoly p(num_vars);
  for (const auto& t : raw) {
    Monomial m(num_vars);
    for (const auto& [idx, e] : t.powers) m.set(idx, m[idx] + e);
    p.add_term(m, t.coeff);
  }
  return p;
}

// ---- free functions -------------------------------------------------------

std::optional<MultiPoly> exact_divide(const MultiPoly& p, const MultiPoly& d) {
  if (d.is_zero()) throw Error(Errc::division_by_zero, "division by the zero polynomial");
  if (p.num_vars() != d.num_vars()) throw Error(Errc::ring_mismatch, "division across rings");
  MultiPoly remainder = p;
  MultiPoly quotient(p.num_vars());
  const auto& [lead_m, lead_c] = d.leading();
  while (!remainder.is_zero()) {
    const auto& [rm, rc] = remainder.leading();
    // With a monomial order, exact divisibility forces LT(d) | LT(remainder) at every step.
    if (!lead_m.divides(rm)) return std::nullopt;
    const Monomial qm = rm / lead_m;
    const Rat qc = rc / lead_c;
    quotient.add_term(qm, qc);
    for (const auto& [dm, dc] : d.terms()) remainder.add_term(qm * dm, -(qc * dc));
  }
  return quotient;
}

MultiPoly apply_linear_change(const MultiPoly& p, const RatMatrix& D) {
  const std::size_t n = p.num_vars();
  if (D.rows() != n || D.cols() != n)
    throw Error(Errc::shape, "substitution matrix must be " + std::to_string(n) + "x" + std::to_string(n));
  std::vector<MultiPoly> images;
  images.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    MultiPoly img(n);
    for (std::size_t m = 0; m < n; ++m) img.add_term(Monomial::variable(n, m), D(m, k));
    images.push_back(std::move(img));
  }
  return p.compose(images);
}

StructureInfo structure_checks(const MultiPoly& p) {
  if (p.is_zero()) throw Error(Errc::degenerate_input, "structure of the zero polynomial is undefined");
  StructureInfo info;
  const unsigned d = p.leading().first.degree();
  bool homogeneous = true;
  for (const auto& [m, c] : p.terms())
    if (m.degree() != d) homogeneous = false;
  if (homogeneous) info.homogeneous_degree = d;
  info.z0_multiplicity = p.num_vars() ? p.min_degree_in(0) : 0;
  return info;
}

bool is_monic_in_z0(const MultiPoly& p) {
  if (p.is_zero() || p.num_vars() == 0) return false;
  const auto info = structure_checks(p);
  if (!info.homogeneous_degree) return false;
  return p.coefficient(Monomial::variable(p.num_vars(), 0, *info.homogeneous_degree)) == 1;
}

}  // namespace liechar
