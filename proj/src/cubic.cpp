#include "waring/cubic.hpp"

#include "waring/apolarity.hpp"

namespace waring {

ReducibleCubic::ReducibleCubic(LinearForm linear, Polynomial quadric)
    : linear_(std::move(linear)), quadric_(std::move(quadric)) {
  if (linear_.nvars() != quadric_.nvars()) throw AmbientMismatch("L and Q live in different rings");
  if (linear_.is_zero()) throw std::invalid_argument("the linear factor is zero");
  if (!quadric_.is_form_of_degree(2)) throw std::invalid_argument("Q must be a non-zero quadratic form");
}

std::string to_string(CubicKind kind) {
  switch (kind) {
    case CubicKind::TypeA: return "A";
    case CubicKind::TypeB: return "B";
    case CubicKind::TypeC: return "C";
    case CubicKind::Cone: return "cone";
    case CubicKind::DegenerateProduct: return "degenerate";
  }
  return "?";
}

Matrix quadric_matrix(const Polynomial& quadric) {
  if (!quadric.is_zero() && !quadric.is_form_of_degree(2)) throw std::invalid_argument("not a quadratic form");
  const std::size_t n = quadric.nvars();
  Matrix m(n, n);
  for (const auto& [mono, c] : quadric.terms()) {
    std::size_t i = n, j = n;
    for (std::size_t k = 0; k < n; ++k) {
      if (mono[k] == 2) i = j = k;
      else if (mono[k] == 1) (i == n ? i : j) = k;
    }
    if (i == j) m(i, i) = c;
    else {
      m(i, j) = c / 2;
      m(j, i) = c / 2;
    }
  }
  return m;
}

Rational tangency_invariant(const ReducibleCubic& cubic) {
  const Matrix m = quadric_matrix(cubic.quadric());
  const Rational det = m.determinant();
  if (sgn(det) == 0) return 0;
  const Matrix inv = *m.inverse();
  const auto& l = cubic.linear().coefficients();
  const Vector w = inv * std::span<const Rational>(l);
  Rational s = 0;
  for (std::size_t k = 0; k < l.size(); ++k) s += l[k] * w[k];
  return det * s;
}

bool linear_divides(const LinearForm& linear, const Polynomial& quadric) {
  // L | Q iff Q vanishes on the hyperplane L = 0: eliminate one variable.
  const auto& l = linear.coefficients();
  std::size_t pivot = 0;
  while (pivot < l.size() && sgn(l[pivot]) == 0) ++pivot;
  if (pivot == l.size()) throw std::invalid_argument("zero linear form");
  std::vector<LinearForm> images;
  for (std::size_t i = 0; i < l.size(); ++i) {
    if (i != pivot) {
      images.push_back(LinearForm::variable(l.size(), i));
      continue;
    }
    std::vector<Rational> c(l.size());
    for (std::size_t k = 0; k < l.size(); ++k)
      if (k != pivot) c[k] = -l[k] / l[pivot];
    images.emplace_back(std::move(c));
  }
  return substitute_linear(quadric, images).is_zero();
}

CubicType classify(const ReducibleCubic& cubic) {
  const std::size_t n1 = cubic.nvars();
  CubicType t{CubicKind::Cone, essential_variables(cubic.product()), quadric_matrix(cubic.quadric()).rank()};
  if (linear_divides(cubic.linear(), cubic.quadric())) {
    t.kind = CubicKind::DegenerateProduct;
  } else if (t.essential_variables < n1) {
    t.kind = CubicKind::Cone;
  } else if (t.quadric_rank == n1) {
    t.kind = sgn(tangency_invariant(cubic)) == 0 ? CubicKind::TypeC : CubicKind::TypeA;
  } else if (t.quadric_rank + 1 == n1) {
    t.kind = CubicKind::TypeB;
  } else {
    // A quadric of rank <= n, times L, involves at most n linear forms.
    throw std::logic_error("non-cone reducible cubic with a quadric of rank < n");
  }
  return t;
}

}  // namespace waring
