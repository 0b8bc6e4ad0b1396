#pragma once

#include "waring/linalg.hpp"
#include "waring/polynomial.hpp"

#include <stdexcept>

namespace waring {

class SingularChange : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An invertible change of coordinates x = A y: old variable x_i becomes
/// sum_j A(i, j) y_j.
class LinearChange {
 public:
  /// Throws SingularChange if `matrix` is not square and invertible.
  explicit LinearChange(Matrix matrix);
  static LinearChange identity(std::size_t n);
  /// Rows given as the linear forms x_i = rows[i](y).
  static LinearChange from_images(const std::vector<LinearForm>& rows);

  std::size_t size() const { return matrix_.rows(); }
  const Matrix& matrix() const { return matrix_; }
  LinearChange inverse() const;
  /// Composition: (this * other) substitutes `this` first, then `other`.
  LinearChange then(const LinearChange& other) const;

  /// Image of old variable x_i as a linear form in the new variables.
  LinearForm image(std::size_t i) const;

 private:
  Matrix matrix_;
};

/// F(A y): every old variable replaced by its image.
Polynomial substitute(const Polynomial& f, const LinearChange& change);

/// The linear form L(x) rewritten in the new variables, i.e. L(A y).
LinearForm substitute(const LinearForm& form, const LinearChange& change);

/// Coordinates where x0(x0x1 + x2^2) becomes y1^3/3 + y1^2 y3 + y1 y2^2.
/// New variables are ordered (y1, y2, y3).
LinearChange type_c_base_coordinates();

/// The hyperbolic-pair change for x0(x0x1 + x2x3 + x4^2 + ... + xn^2):
/// x0 = y1, x1 = y3, x2 = y0 + y2, x3 = y0 - y2, xk = yk for k >= 4.
/// Requires n >= 3.
LinearChange type_c_peeling_coordinates(std::size_t n);

}  // namespace waring
