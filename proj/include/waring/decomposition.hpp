#pragma once

#include "waring/linear_change.hpp"
#include "waring/polynomial.hpp"

#include <string>
#include <vector>

namespace waring {

struct WaringTerm {
  Rational coefficient;
  LinearForm form;

  bool operator==(const WaringTerm&) const = default;
};

/// F = sum_i c_i L_i^d with rational c_i. Over an algebraically closed
/// field each c_i is absorbed into L_i as a d-th root.
class WaringDecomposition {
 public:
  WaringDecomposition(unsigned degree, std::size_t nvars) : degree_(degree), nvars_(nvars) {}
  WaringDecomposition(unsigned degree, std::size_t nvars, std::vector<WaringTerm> terms);

  unsigned degree() const { return degree_; }
  std::size_t nvars() const { return nvars_; }
  const std::vector<WaringTerm>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  void add(const Rational& coefficient, const LinearForm& form);
  void append(const WaringDecomposition& other);

  Polynomial expand() const;

  /// Combines proportional forms (c L^d + c' (r L)^d -> (c + c' r^d) L^d) and
  /// drops zero terms. Term order follows first occurrence.
  WaringDecomposition merged() const;

  /// True when no two forms are proportional and none is zero.
  bool pairwise_independent() const;

  /// "6*F = (x0 + x2)^3 + (x0 - x2)^3 - 2*(x1)^3": scaled by the common
  /// denominator of the coefficients.
  std::string identity_string(const Variables& vars, std::string_view lhs = "F") const;
  std::string identity_string() const;

  bool operator==(const WaringDecomposition&) const = default;

 private:
  unsigned degree_;
  std::size_t nvars_;
  std::vector<WaringTerm> terms_;
};

/// Each form rewritten through x = A y, giving a decomposition of substitute(F, A).
WaringDecomposition substitute(const WaringDecomposition& dec, const LinearChange& change);

struct VerificationResult {
  bool expansion_matches = false;
  bool pairwise_independent = false;
  Polynomial residual;  // F - expansion

  bool ok() const { return expansion_matches && pairwise_independent; }
};

/// Exact expansion check plus pairwise independence of the forms.
VerificationResult verify_decomposition(const Polynomial& form, const WaringDecomposition& dec);

}  // namespace waring
