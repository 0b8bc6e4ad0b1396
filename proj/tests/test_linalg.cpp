#include "support.hpp"

#include <doctest.h>

using namespace waring;
using namespace testing_support;

TEST_CASE("rref, rank, kernel and determinant") {
  const Matrix m = Matrix::from_rows({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
  std::vector<std::size_t> pivots;
  const Matrix r = m.rref(&pivots);
  CHECK(pivots == std::vector<std::size_t>{0, 1});
  CHECK(r.row(0) == Vector{1, 0, 1});
  CHECK(r.row(1) == Vector{0, 1, 1});
  CHECK(m.rank() == 2);
  CHECK(m.determinant() == 0);
  CHECK_FALSE(m.inverse());
  const auto ker = m.kernel();
  REQUIRE(ker.size() == 1);
  CHECK(ker[0] == Vector{-1, -1, 1});
  const Matrix s = Matrix::from_rows({{2, 1}, {1, 1}});
  CHECK(s.determinant() == 1);
  CHECK(*s.inverse() == Matrix::from_rows({{1, -1}, {-1, 2}}));
  CHECK(*s.solve(Vector{3, 2}) == Vector{1, 1});
  CHECK_FALSE(Matrix::from_rows({{1, 1}, {1, 1}}).solve(Vector{1, 2}));
}

TEST_CASE("subspaces compare by canonical basis") {
  const Subspace a = Subspace::span(3, {{1, 1, 0}, {0, 1, 1}});
  const Subspace b = Subspace::span(3, {{1, 0, -1}, {2, 3, 1}});
  CHECK(a == b);
  CHECK(a.dim() == 2);
  CHECK(a.contains(Vector{1, 2, 1}));
  CHECK_FALSE(a.contains(Vector{0, 0, 1}));
  Subspace c = a;
  CHECK_FALSE(c.insert(Vector{3, 3, 0}));
  CHECK(c.insert(Vector{0, 0, 1}));
  CHECK(c.is_full());
  CHECK(c.contains(a));
  CHECK_FALSE(a.contains(c));
}

TEST_CASE("property: random matrices") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 80; ++trial) {
    const std::size_t rows = 1 + trial % 5, cols = 1 + (trial / 5) % 5;
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = trial % 4 == 0 ? random_integer(rng, 1) : random_rational(rng);
    const auto ker = m.kernel();
    CHECK(m.rank() + ker.size() == cols);
    for (const auto& v : ker) CHECK(is_zero(m * std::span<const Rational>(v)));
    CHECK(m.transpose().rank() == m.rank());
    if (rows == cols) {
      const auto inv = m.inverse();
      CHECK(inv.has_value() == (m.determinant() != 0));
      if (inv) {
        CHECK(m * *inv == Matrix::identity(rows));
        CHECK(inv->determinant() * m.determinant() == 1);
      }
    }
  }
}
