#pragma once

// Waring decompositions of reducible cubics whose linear factor is tangent
// to a smooth quadric, via the normal form
//   x0 (x0 x1 + x2 x3 + x4^2 + ... + xn^2)      (n >= 3)
//   x0 (x0 x1 + x2^2)                            (n = 2)
// and explicit decompositions of products of three linear forms.

#include "waring/cubic.hpp"
#include "waring/decomposition.hpp"
#include "waring/linear_change.hpp"

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace waring {

/// No rational change of coordinates to the normal form was found.
class NeedsFieldExtension : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A supplied change does not carry the cubic to the normal form.
class InvalidChange : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The normal form in n + 1 variables (n >= 2).
Polynomial type_c_normal_form(std::size_t n);
ReducibleCubic type_c_normal_cubic(std::size_t n);

/// F = a (a b + sum_k p_k q_k + sum_k w_k c_k^2) with rational weights w_k.
struct TangentCubicData {
  LinearForm a;
  LinearForm b;
  std::vector<std::pair<LinearForm, LinearForm>> pairs;
  std::vector<std::pair<Rational, LinearForm>> squares;

  Polynomial expand() const;
};

/// Peels the cubic one quadric summand at a time:
///  - a pair p q = u^2 - v^2 (u = (p+q)/2, v = (p-q)/2) gives
///    a u^2 + a^3/3 = [(a+u)^3 + (a-u)^3] / 6, b -> b - a/3, and -v^2 joins
///    the squares;
///  - two squares whose weights have ratio minus a rational square are
///    merged into a pair, lowest indices first;
///  - otherwise a square w c^2 is peeled as w[(a+c)^3 + (a-c)^3]/6, b -> b - w a/3;
///  - the last square is handled by
///    a(a b + w c^2) = a^2 t + w[(a+c)^3 + (a-c)^3]/6,  t = b - w a/3,
///    a^2 t = [(a+t)^3 - (a-t)^3 - 2 t^3] / 6.
/// Every summand after the first costs two cubes and the last one five, so
/// m summands give at most 2m + 3 terms. Proportional terms are merged and
/// the result is checked by expansion before it is returned.
WaringDecomposition decompose_tangent_cubic(const TangentCubicData& data);

/// At most 2n + 1 terms for the normal form in n + 1 variables. Throws
/// std::invalid_argument for n < 2.
WaringDecomposition decompose_type_c_normal(std::size_t n);

/// Rational data a, b, w_k, c_k with L Q = a(a b + sum w_k c_k^2); always
/// exists for a type-C cubic. Throws std::invalid_argument otherwise.
TangentCubicData tangent_cubic_data(const ReducibleCubic& cubic);

/// A change A with substitute(L Q, A) equal to the normal form, if the
/// rational search finds one.
std::optional<LinearChange> normalize_type_c(const ReducibleCubic& cubic);

struct TypeCOptions {
  /// Fall back to the weighted data of tangent_cubic_data() when no rational
  /// change to the normal form exists, instead of NeedsFieldExtension.
  bool allow_weighted = false;
};

/// Decomposition of a type-C cubic with at most 2n + 1 terms, transported
/// from the normal form through `change` (substitute(L Q, change) must be
/// the normal form) or through an automatically found change.
WaringDecomposition decompose_type_c(const ReducibleCubic& cubic,
                                     const std::optional<LinearChange>& change = std::nullopt,
                                     TypeCOptions options = {});

/// 24 L1 L2 L3 = (L1+L2+L3)^3 - (L1+L2-L3)^3 - (L1-L2+L3)^3 - (-L1+L2+L3)^3.
WaringDecomposition decompose_linear_product(const LinearForm& l1, const LinearForm& l2, const LinearForm& l3);

/// Splits a rank-2 quadratic form into two rational linear factors, if possible.
std::optional<std::pair<LinearForm, LinearForm>> factor_quadric(const Polynomial& quadric);

}  // namespace waring
