#include "waring/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace waring {

Monomial Monomial::variable(std::size_t nvars, std::size_t index, unsigned power) {
  Monomial m(nvars);
  m.exps_.at(index) = power;
  return m;
}

unsigned Monomial::degree() const { return std::accumulate(exps_.begin(), exps_.end(), 0u); }

bool Monomial::divides(const Monomial& other) const {
  if (other.nvars() != nvars()) return false;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  if (other.nvars() != nvars()) throw AmbientMismatch("monomial variable counts differ");
  Monomial m = *this;
  for (std::size_t i = 0; i < exps_.size(); ++i) m.exps_[i] += other.exps_[i];
  return m;
}

Monomial Monomial::operator/(const Monomial& divisor) const {
  if (!divisor.divides(*this)) throw std::invalid_argument("monomial does not divide");
  Monomial m = *this;
  for (std::size_t i = 0; i < exps_.size(); ++i) m.exps_[i] -= divisor.exps_[i];
  return m;
}

bool GradedLexGreater::operator()(const Monomial& a, const Monomial& b) const {
  const unsigned da = a.degree();
  const unsigned db = b.degree();
  if (da != db) return da > db;
  return a.exps() > b.exps();
}

Variables::Variables(std::vector<std::string> names) : names_(std::move(names)) {}

Variables Variables::indexed(std::string_view prefix, std::size_t count, std::size_t first) {
  std::vector<std::string> names;
  names.reserve(count);
  for (std::size_t i = 0; i < count; ++i) names.push_back(std::string(prefix) + std::to_string(first + i));
  return Variables(std::move(names));
}

std::size_t Variables::find(std::string_view name) const {
  std::string normalized(name);
  // "x_3" is an alias of "x3".
  const auto us = normalized.find('_');
  if (us != std::string::npos && us > 0 && us + 1 < normalized.size() &&
      std::isdigit(static_cast<unsigned char>(normalized[us + 1])))
    normalized.erase(us, 1);
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == normalized || names_[i] == name) return i;
  return names_.size();
}

Polynomial Polynomial::constant(std::size_t nvars, const Rational& c) {
  Polynomial p(nvars);
  p.add_term(Monomial(nvars), c);
  return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t index) {
  return monomial(Monomial::variable(nvars, index));
}

Polynomial Polynomial::monomial(const Monomial& m, const Rational& c) {
  Polynomial p(m.nvars());
  p.add_term(m, c);
  return p;
}

unsigned Polynomial::degree() const {
  // The first key is the largest in graded-lex order.
  return terms_.empty() ? 0 : terms_.begin()->first.degree();
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  return terms_.begin()->first.degree() == terms_.rbegin()->first.degree();
}

bool Polynomial::is_form_of_degree(unsigned d) const {
  return !terms_.empty() && is_homogeneous() && degree() == d;
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::size_t Polynomial::highest_variable() const {
  std::size_t hi = nvars_;
  for (const auto& [m, c] : terms_)
    for (std::size_t i = 0; i < nvars_; ++i)
      if (m[i] != 0 && (hi == nvars_ || i > hi)) hi = i;
  return hi;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (m.nvars() != nvars_) throw AmbientMismatch("monomial does not match the polynomial ring");
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

void Polynomial::check_ambient(const Polynomial& other) const {
  if (other.nvars_ != nvars_)
    throw AmbientMismatch("polynomials live in rings with " + std::to_string(nvars_) + " and " +
                          std::to_string(other.nvars_) + " variables");
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  check_ambient(other);
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  check_ambient(other);
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

Polynomial Polynomial::operator-() const { return *this * Rational(-1); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_ambient(b);
  Polynomial p(a.nvars_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) p.add_term(ma * mb, ca * cb);
  return p;
}

Polynomial Polynomial::pow(unsigned k) const {
  Polynomial result = constant(nvars_, 1);
  Polynomial base = *this;
  while (k > 0) {
    if (k & 1u) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

Polynomial Polynomial::with_nvars(std::size_t nvars) const {
  Polynomial p(nvars);
  for (const auto& [m, c] : terms_) {
    std::vector<unsigned> e(nvars, 0);
    for (std::size_t i = 0; i < m.nvars(); ++i) {
      if (i < nvars) e[i] = m[i];
      else if (m[i] != 0) throw AmbientMismatch("cannot drop a variable that occurs in the polynomial");
    }
    p.add_term(Monomial(std::move(e)), c);
  }
  return p;
}

namespace {

std::string monomial_text(const Monomial& m, const Variables& vars) {
  std::string out;
  for (std::size_t i = 0; i < m.nvars(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += vars[i];
    if (m[i] > 1) out += '^' + std::to_string(m[i]);
  }
  return out;
}

}  // namespace

std::string Polynomial::to_string(const Variables& vars) const {
  if (vars.size() != nvars_) throw AmbientMismatch("variable names do not match the polynomial ring");
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const bool negative = sgn(c) < 0;
    const Rational mag = abs(c);
    if (first) out += negative ? "-" : "";
    else out += negative ? " - " : " + ";
    first = false;
    const std::string mono = monomial_text(m, vars);
    if (mono.empty()) out += waring::to_string(mag);
    else if (mag == 1) out += mono;
    else out += waring::to_string(mag) + "*" + mono;
  }
  return out;
}

std::string Polynomial::to_string() const { return to_string(Variables::indexed("x", nvars_)); }

LinearForm LinearForm::variable(std::size_t nvars, std::size_t index) {
  std::vector<Rational> c(nvars);
  c.at(index) = 1;
  return LinearForm(std::move(c));
}

LinearForm LinearForm::from_polynomial(const Polynomial& p) {
  std::vector<Rational> c(p.nvars());
  for (const auto& [m, v] : p.terms()) {
    if (m.degree() != 1) throw std::invalid_argument("not a linear form: " + p.to_string());
    for (std::size_t i = 0; i < m.nvars(); ++i)
      if (m[i] == 1) c[i] = v;
  }
  return LinearForm(std::move(c));
}

bool LinearForm::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& q) { return sgn(q) == 0; });
}

Polynomial LinearForm::to_polynomial() const {
  Polynomial p(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) p.add_term(Monomial::variable(coeffs_.size(), i), coeffs_[i]);
  return p;
}

Rational LinearForm::operator()(std::span<const Rational> v) const {
  if (v.size() != coeffs_.size()) throw AmbientMismatch("point dimension mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < v.size(); ++i) s += coeffs_[i] * v[i];
  return s;
}

LinearForm& LinearForm::operator+=(const LinearForm& other) {
  if (other.nvars() != nvars()) throw AmbientMismatch("linear forms of different lengths");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

LinearForm& LinearForm::operator-=(const LinearForm& other) {
  if (other.nvars() != nvars()) throw AmbientMismatch("linear forms of different lengths");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

LinearForm& LinearForm::operator*=(const Rational& c) {
  for (auto& v : coeffs_) v *= c;
  return *this;
}

bool LinearForm::proportional_to(const LinearForm& other, Rational* ratio) const {
  if (other.nvars() != nvars() || is_zero() || other.is_zero()) return false;
  // Find r with other = r * this.
  std::size_t k = 0;
  while (sgn(coeffs_[k]) == 0) ++k;
  const Rational r = other.coeffs_[k] / coeffs_[k];
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (other.coeffs_[i] != r * coeffs_[i]) return false;
  if (ratio) *ratio = r;
  return true;
}

std::string LinearForm::to_string(const Variables& vars) const { return to_polynomial().to_string(vars); }
std::string LinearForm::to_string() const { return to_polynomial().to_string(); }

Polynomial substitute_linear(const Polynomial& p, std::span<const LinearForm> images) {
  if (images.size() != p.nvars()) throw AmbientMismatch("one image per variable is required");
  const std::size_t target = images.empty() ? 0 : images.front().nvars();
  for (const auto& im : images)
    if (im.nvars() != target) throw AmbientMismatch("substitution images disagree on the target ring");

  // powers[i][k] = images[i]^k, filled lazily.
  std::vector<std::vector<Polynomial>> powers(images.size());
  auto power_of = [&](std::size_t i, unsigned k) -> const Polynomial& {
    auto& cache = powers[i];
    if (cache.empty()) {
      cache.push_back(Polynomial::constant(target, 1));
      cache.push_back(images[i].to_polynomial());
    }
    while (cache.size() <= k) cache.push_back(cache.back() * cache[1]);
    return cache[k];
  };

  Polynomial out(target);
  for (const auto& [m, c] : p.terms()) {
    Polynomial term = Polynomial::constant(target, c);
    for (std::size_t i = 0; i < m.nvars(); ++i)
      if (m[i] != 0) term = term * power_of(i, m[i]);
    out += term;
  }
  return out;
}

Polynomial derivative(const Polynomial& p, std::size_t var) {
  if (var >= p.nvars()) throw std::out_of_range("derivative variable out of range");
  Polynomial out(p.nvars());
  for (const auto& [m, c] : p.terms()) {
    if (m[var] == 0) continue;
    Monomial r = m;
    r[var] -= 1;
    out.add_term(r, c * m[var]);
  }
  return out;
}

}  // namespace waring
