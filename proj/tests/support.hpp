#pragma once

#include "waring/linear_change.hpp"
#include "waring/monomial_basis.hpp"
#include "waring/polynomial.hpp"

#include <random>

namespace testing_support {

using namespace waring;

inline Rational random_rational(std::mt19937& rng, int height = 5) {
  std::uniform_int_distribution<int> num(-height, height);
  std::uniform_int_distribution<int> den(1, height);
  Rational q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

inline Rational random_integer(std::mt19937& rng, int height = 3) {
  return Rational(std::uniform_int_distribution<int>(-height, height)(rng));
}

inline LinearChange random_change(std::mt19937& rng, std::size_t n, int height = 3) {
  for (;;) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = random_integer(rng, height);
    if (m.determinant() != 0) return LinearChange(m);
  }
}

inline LinearChange random_rational_change(std::mt19937& rng, std::size_t n, int height = 3) {
  for (;;) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = random_rational(rng, height);
    if (m.determinant() != 0) return LinearChange(m);
  }
}

/// Random form of the given degree with about `density` of its monomials present.
inline Polynomial random_form(std::mt19937& rng, std::size_t nvars, unsigned degree, double density = 0.5,
                              int height = 4) {
  const auto basis = monomial_basis(nvars, degree);
  std::bernoulli_distribution keep(density);
  for (;;) {
    Polynomial p(nvars);
    for (const auto& m : basis->monomials())
      if (keep(rng)) p.add_term(m, random_integer(rng, height));
    if (!p.is_zero()) return p;
  }
}

inline LinearForm random_linear(std::mt19937& rng, std::size_t nvars, int height = 3) {
  for (;;) {
    Vector v(nvars);
    for (auto& c : v) c = random_integer(rng, height);
    LinearForm l(v);
    if (!l.is_zero()) return l;
  }
}

}  // namespace testing_support
