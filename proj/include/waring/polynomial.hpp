#pragma once

#include "waring/rational.hpp"

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace waring {

/// Thrown when two operands live in rings with different variable counts.
class AmbientMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Dense exponent vector; exps()[i] is the power of variable i.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  Monomial(std::initializer_list<unsigned> exps) : exps_(exps) {}
  explicit Monomial(std::vector<unsigned> exps) : exps_(std::move(exps)) {}

  static Monomial variable(std::size_t nvars, std::size_t index, unsigned power = 1);

  std::size_t nvars() const { return exps_.size(); }
  unsigned degree() const;
  unsigned operator[](std::size_t i) const { return exps_[i]; }
  unsigned& operator[](std::size_t i) { return exps_[i]; }
  const std::vector<unsigned>& exps() const { return exps_; }

  bool divides(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  /// Requires divides(other) to hold for `other / *this`.
  Monomial operator/(const Monomial& divisor) const;

  bool operator==(const Monomial&) const = default;

 private:
  std::vector<unsigned> exps_;
};

/// Graded lexicographic order, largest monomial first: higher total degree
/// first, then larger exponent of x0, then x1, and so on.
struct GradedLexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Display names for the variables of a ring; "x0".."xn" by default.
class Variables {
 public:
  explicit Variables(std::vector<std::string> names);
  /// prefix + index, indices starting at `first`: indexed("y", 3, 1) is y1, y2, y3.
  static Variables indexed(std::string_view prefix, std::size_t count, std::size_t first = 0);

  std::size_t size() const { return names_.size(); }
  const std::string& operator[](std::size_t i) const { return names_[i]; }
  /// Index of `name`, accepting "x_3" for "x3". Returns size() if absent.
  std::size_t find(std::string_view name) const;

 private:
  std::vector<std::string> names_;
};

/// Exact multivariate polynomial over Q with a fixed number of variables.
/// Terms are kept in graded-lex order and never store a zero coefficient.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Rational, GradedLexGreater>;

  explicit Polynomial(std::size_t nvars = 0) : nvars_(nvars) {}
  static Polynomial constant(std::size_t nvars, const Rational& c);
  static Polynomial variable(std::size_t nvars, std::size_t index);
  static Polynomial monomial(const Monomial& m, const Rational& c = 1);

  std::size_t nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  /// Highest total degree; 0 for constants and for the zero polynomial.
  unsigned degree() const;
  /// True when every term has the same total degree (the zero polynomial counts).
  bool is_homogeneous() const;
  bool is_form_of_degree(unsigned d) const;
  Rational coefficient(const Monomial& m) const;
  /// Largest variable index with a non-zero exponent, or nvars() if constant.
  std::size_t highest_variable() const;

  void add_term(const Monomial& m, const Rational& c);

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Rational& c);
  Polynomial operator-() const;
  Polynomial pow(unsigned k) const;

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }

  bool operator==(const Polynomial& other) const = default;

  /// Same polynomial viewed in a ring with `nvars` variables. Shrinking is
  /// allowed only when the dropped variables do not occur.
  Polynomial with_nvars(std::size_t nvars) const;

  /// Canonical text: graded-lex terms, reduced fractions, e.g. "x0^2*x1 - 1/3*x2^3".
  std::string to_string(const Variables& vars) const;
  std::string to_string() const;

 private:
  void check_ambient(const Polynomial& other) const;

  std::size_t nvars_;
  TermMap terms_;
};

/// A linear form sum_i c_i x_i, stored as its coefficient vector.
class LinearForm {
 public:
  LinearForm() = default;
  explicit LinearForm(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {}
  static LinearForm variable(std::size_t nvars, std::size_t index);
  /// Throws std::invalid_argument unless p is a form of degree 1 (or zero).
  static LinearForm from_polynomial(const Polynomial& p);

  std::size_t nvars() const { return coeffs_.size(); }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  const Rational& operator[](std::size_t i) const { return coeffs_[i]; }
  bool is_zero() const;

  Polynomial to_polynomial() const;
  /// Evaluates the form at the point v.
  Rational operator()(std::span<const Rational> v) const;

  LinearForm& operator+=(const LinearForm& other);
  LinearForm& operator-=(const LinearForm& other);
  LinearForm& operator*=(const Rational& c);
  friend LinearForm operator+(LinearForm a, const LinearForm& b) { return a += b; }
  friend LinearForm operator-(LinearForm a, const LinearForm& b) { return a -= b; }
  friend LinearForm operator*(const Rational& c, LinearForm a) { return a *= c; }
  LinearForm operator-() const { return Rational(-1) * *this; }
  bool operator==(const LinearForm&) const = default;

  /// True when one form is a scalar multiple of the other (both non-zero).
  bool proportional_to(const LinearForm& other, Rational* ratio = nullptr) const;

  std::string to_string(const Variables& vars) const;
  std::string to_string() const;

 private:
  std::vector<Rational> coeffs_;
};

/// Replaces variable i of `p` by images[i]. The images may live in a ring
/// with a different number of variables; they must all share it.
Polynomial substitute_linear(const Polynomial& p, std::span<const LinearForm> images);

/// Partial derivative with respect to variable i.
Polynomial derivative(const Polynomial& p, std::size_t var);

}  // namespace waring
