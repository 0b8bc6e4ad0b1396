#include "waring/linear_change.hpp"

namespace waring {

LinearChange::LinearChange(Matrix matrix) : matrix_(std::move(matrix)) {
  if (matrix_.rows() != matrix_.cols()) throw SingularChange("linear change must be square");
  if (sgn(matrix_.determinant()) == 0) throw SingularChange("linear change is singular");
}

LinearChange LinearChange::identity(std::size_t n) { return LinearChange(Matrix::identity(n)); }

LinearChange LinearChange::from_images(const std::vector<LinearForm>& rows) {
  std::vector<Vector> data;
  data.reserve(rows.size());
  for (const auto& r : rows) data.push_back(r.coefficients());
  return LinearChange(Matrix::from_rows(data));
}

LinearChange LinearChange::inverse() const { return LinearChange(*matrix_.inverse()); }

LinearChange LinearChange::then(const LinearChange& other) const {
  // x = A y, y = B z  =>  x = (A B) z.
  return LinearChange(matrix_ * other.matrix_);
}

LinearForm LinearChange::image(std::size_t i) const { return LinearForm(matrix_.row(i)); }

Polynomial substitute(const Polynomial& f, const LinearChange& change) {
  if (change.size() != f.nvars()) throw AmbientMismatch("linear change does not match the polynomial ring");
  std::vector<LinearForm> images;
  images.reserve(change.size());
  for (std::size_t i = 0; i < change.size(); ++i) images.push_back(change.image(i));
  return substitute_linear(f, images);
}

LinearForm substitute(const LinearForm& form, const LinearChange& change) {
  if (change.size() != form.nvars()) throw AmbientMismatch("linear change does not match the linear form");
  // L(A y) = (A^T l) . y
  return LinearForm(change.matrix().transpose() * std::span<const Rational>(form.coefficients()));
}

LinearChange type_c_base_coordinates() {
  Matrix a(3, 3);
  a(0, 0) = 1;                 // x0 = y1
  a(1, 0) = Rational(1, 3);    // x1 = y1/3 + y3
  a(1, 2) = 1;
  a(2, 1) = 1;                 // x2 = y2
  return LinearChange(std::move(a));
}

LinearChange type_c_peeling_coordinates(std::size_t n) {
  if (n < 3) throw std::invalid_argument("the hyperbolic-pair change needs n >= 3");
  Matrix a(n + 1, n + 1);
  a(0, 1) = 1;                 // x0 = y1
  a(1, 3) = 1;                 // x1 = y3
  a(2, 0) = 1;                 // x2 = y0 + y2
  a(2, 2) = 1;
  a(3, 0) = 1;                 // x3 = y0 - y2
  a(3, 2) = -1;
  for (std::size_t k = 4; k <= n; ++k) a(k, k) = 1;
  return LinearChange(std::move(a));
}

}  // namespace waring
