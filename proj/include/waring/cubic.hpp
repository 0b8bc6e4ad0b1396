#pragma once

#include "waring/decomposition.hpp"
#include "waring/linalg.hpp"
#include "waring/polynomial.hpp"

#include <optional>
#include <stdexcept>
#include <string>

namespace waring {

/// A cubic given by its factors, F = L * Q.
class ReducibleCubic {
 public:
  /// Throws std::invalid_argument for a zero or non-linear L, a zero or
  /// non-quadratic Q, and AmbientMismatch if they disagree on the ring.
  ReducibleCubic(LinearForm linear, Polynomial quadric);

  std::size_t nvars() const { return linear_.nvars(); }
  /// n, for a cubic in n + 1 variables.
  std::size_t projective_dimension() const { return nvars() - 1; }
  const LinearForm& linear() const { return linear_; }
  const Polynomial& quadric() const { return quadric_; }
  Polynomial product() const { return linear_.to_polynomial() * quadric_; }

 private:
  LinearForm linear_;
  Polynomial quadric_;
};

enum class CubicKind { TypeA, TypeB, TypeC, Cone, DegenerateProduct };

std::string to_string(CubicKind kind);

struct CubicType {
  CubicKind kind;
  /// rank Cat_1(L Q); below nvars exactly for cones.
  std::size_t essential_variables = 0;
  /// Rank of the symmetric matrix of Q.
  std::size_t quadric_rank = 0;

  bool operator==(const CubicType&) const = default;
};

/// Symmetric M with Q(x) = x^T M x.
Matrix quadric_matrix(const Polynomial& quadric);

/// l^T adj(M) l; zero exactly when the hyperplane L = 0 is tangent to a
/// smooth quadric Q = 0.
Rational tangency_invariant(const ReducibleCubic& cubic);

/// True when L divides Q.
bool linear_divides(const LinearForm& linear, const Polynomial& quadric);

/// Types A (Q smooth, L not tangent), B (Q a cone, L off its vertex),
/// C (Q smooth, L tangent), or Cone / DegenerateProduct.
CubicType classify(const ReducibleCubic& cubic);

}  // namespace waring
