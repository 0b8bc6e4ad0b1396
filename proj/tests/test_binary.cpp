#include "support.hpp"

#include "waring/binary.hpp"
#include "waring/parse.hpp"

#include <doctest.h>

using namespace waring;
using namespace testing_support;

TEST_CASE("binary ranks of the basic examples") {
  const BinaryRank cube = decompose_binary(parse_polynomial("x0^3", 2));
  CHECK(cube.rank == 1);
  REQUIRE(cube.decomposition);
  CHECK(verify_decomposition(parse_polynomial("x0^3", 2), *cube.decomposition).ok());

  const BinaryRank two = decompose_binary(parse_polynomial("x0^3 + x1^3", 2));
  CHECK(two.rank == 2);
  CHECK(two.low_generator.to_string() == "d0*d1");
  CHECK(two.low_squarefree);
  REQUIRE(two.decomposition);
  CHECK(two.decomposition->size() == 2);

  const Polynomial f = parse_polynomial("x0^2*x1", 2);
  const BinaryRank three = decompose_binary(f);
  CHECK(three.rank == 3);
  CHECK(three.low_generator.to_string() == "d1^2");
  CHECK_FALSE(three.low_squarefree);
  REQUIRE(three.decomposition);
  CHECK(three.decomposition->size() == 3);
  CHECK(verify_decomposition(f, *three.decomposition).ok());
}

TEST_CASE("x0^2 x1 has no two-term rational decomposition in a small box") {
  // For every pair of independent forms a x0 + b x1 with |a|, |b| <= 3, the
  // coefficients c1, c2 would solve a 4 x 2 linear system; none exists.
  const Polynomial f = parse_polynomial("x0^2*x1", 2);
  const auto basis = monomial_basis(2, 3);
  const Vector target = to_coordinates(f, *basis);
  std::vector<LinearForm> forms;
  for (int a = -3; a <= 3; ++a)
    for (int b = -3; b <= 3; ++b)
      if ((a > 0) || (a == 0 && b > 0)) forms.push_back(LinearForm({a, b}));
  std::size_t solvable = 0;
  for (std::size_t i = 0; i < forms.size(); ++i)
    for (std::size_t j = i + 1; j < forms.size(); ++j) {
      if (forms[i].proportional_to(forms[j])) continue;
      const Vector u = to_coordinates(forms[i].to_polynomial().pow(3), *basis);
      const Vector v = to_coordinates(forms[j].to_polynomial().pow(3), *basis);
      Matrix m(4, 2);
      for (std::size_t r = 0; r < 4; ++r) {
        m(r, 0) = u[r];
        m(r, 1) = v[r];
      }
      if (m.solve(target)) ++solvable;
    }
  CHECK(solvable == 0);
}

TEST_CASE("squarefree test and rational roots") {
  CHECK(is_squarefree_binary(parse_polynomial("x0*x1*(x0 - x1)", 2)));
  CHECK_FALSE(is_squarefree_binary(parse_polynomial("x0^2*x1", 2)));
  CHECK(is_squarefree_binary(parse_polynomial("x0^2 + x1^2", 2)));
  CHECK_FALSE(is_squarefree_binary(parse_polynomial("(x0^2 + x1^2)^2", 2)));
  const auto roots = rational_roots_binary(parse_polynomial("(2*x0 - 3*x1)*x1*(x0 + x1)", 2));
  REQUIRE(roots);
  CHECK(roots->size() == 3);
  CHECK_FALSE(rational_roots_binary(parse_polynomial("x0^2 + x1^2", 2)));
  CHECK_FALSE(rational_roots_binary(parse_polynomial("x0^2*x1", 2)));
}

TEST_CASE("binary input validation") {
  CHECK_THROWS_AS(decompose_binary(parse_polynomial("x0^3", 3)), std::invalid_argument);
  CHECK_THROWS_AS(decompose_binary(Polynomial(2)), std::invalid_argument);
  CHECK_THROWS_AS(decompose_binary(parse_polynomial("x0^3 + x1", 2)), std::invalid_argument);
}

TEST_CASE("property: binary ranks never exceed the degree and decompositions verify") {
  std::mt19937 rng(606);
  for (int trial = 0; trial < 120; ++trial) {
    const unsigned d = 1 + trial % 6;
    const Polynomial f = random_form(rng, 2, d, 0.6);
    const BinaryRank r = decompose_binary(f);
    CHECK(r.rank >= 1);
    CHECK(r.rank <= d);
    CHECK(r.low_generator.degree() + r.high_generator.degree() == d + 2);
    if (r.decomposition) {
      CHECK(r.decomposition->size() == r.rank);
      CHECK(verify_decomposition(f, *r.decomposition).ok());
    }
    if (r.certificate) CHECK(is_squarefree_binary(r.certificate->polynomial()));
  }
}

TEST_CASE("property: binary rank is invariant under changes of coordinates") {
  std::mt19937 rng(707);
  for (int trial = 0; trial < 40; ++trial) {
    const Polynomial f = random_form(rng, 2, 2 + trial % 5, 0.6);
    CHECK(decompose_binary(f).rank == decompose_binary(substitute(f, random_change(rng, 2))).rank);
  }
}
