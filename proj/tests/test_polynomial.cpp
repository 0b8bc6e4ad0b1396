#include "support.hpp"

#include "waring/linear_change.hpp"
#include "waring/parse.hpp"

#include <doctest.h>

using namespace waring;
using namespace testing_support;

TEST_CASE("rational parsing and printing") {
  CHECK(to_string(parse_rational("-6/4")) == "-3/2");
  CHECK(to_string(parse_rational("+7")) == "7");
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/"), std::invalid_argument);
  CHECK(common_denominator({Rational(1, 4), Rational(5, 6)}) == 12);
  Rational root;
  CHECK(is_rational_square(Rational(9, 4), &root));
  CHECK(root == Rational(3, 2));
  CHECK_FALSE(is_rational_square(Rational(2)));
  CHECK_FALSE(is_rational_square(Rational(-1)));
}

TEST_CASE("parser builds canonical polynomials") {
  const Polynomial p = parse_polynomial("x0*(x0*x1 + x2^2)", 3);
  CHECK(p.to_string() == "x0^2*x1 + x0*x2^2");
  CHECK(p.is_form_of_degree(3));
  CHECK(parse_polynomial("(x0 - x1)^2 - x0^2 - x1^2 + 2*x0*x1", 2).is_zero());
  CHECK(parse_polynomial("x1 - 1/3*x2^3", 3).to_string() == "-1/3*x2^3 + x1");
  CHECK(parse_polynomial("x_2 - x2", 3).is_zero());
  CHECK(parse_polynomial("0", 2).to_string() == "0");
  CHECK(parse_polynomial("6/4 * x0", 1).to_string() == "3/2*x0");
}

TEST_CASE("parser errors carry kind and position") {
  auto kind_of = [](std::string_view text, std::size_t nvars) {
    try {
      parse_polynomial(text, nvars);
    } catch (const ParseError& e) {
      return std::pair{e.kind(), e.position()};
    }
    FAIL("no error");
    return std::pair{ParseError::Kind::Syntax, std::size_t{0}};
  };
  CHECK(kind_of("x0 + x3", 3) == std::pair{ParseError::Kind::UndeclaredVariable, std::size_t{5}});
  CHECK(kind_of("2x0", 1).first == ParseError::Kind::Syntax);
  CHECK(kind_of("x0 +", 1).first == ParseError::Kind::Syntax);
  CHECK(kind_of("(x0", 1).first == ParseError::Kind::Syntax);
  CHECK(kind_of("x0/0", 1).first != ParseError::Kind::UndeclaredVariable);
  CHECK(kind_of("1/0", 1).first == ParseError::Kind::ZeroDenominator);
  CHECK(infer_variable_count("x0*x7 + x_3", "x") == 8);
  CHECK(infer_variable_count("d2 + x5", "d") == 3);
}

TEST_CASE("custom variable names") {
  const Variables vars({"y1", "y2", "y3"});
  const Polynomial f = parse_polynomial("y1*(y1*y3 + y2^2)", vars);
  CHECK(f.to_string(vars) == "y1^2*y3 + y1*y2^2");
  CHECK(f.coefficient(Monomial{2, 0, 1}) == 1);
}

TEST_CASE("arithmetic and ambient checks") {
  const Polynomial a = parse_polynomial("x0 + x1", 2);
  CHECK((a * a - a.pow(2)).is_zero());
  CHECK(a.pow(3).size() == 4);
  CHECK_THROWS_AS(a + Polynomial::variable(3, 0), AmbientMismatch);
  CHECK(a.with_nvars(4).nvars() == 4);
  CHECK_THROWS(a.with_nvars(1));
  CHECK(derivative(a.pow(3), 0) == Rational(3) * a.pow(2));
}

TEST_CASE("linear forms") {
  const LinearForm l({1, -2, 0});
  Rational r;
  CHECK(l.proportional_to(LinearForm({-3, 6, 0}), &r));
  CHECK(r == -3);
  CHECK_FALSE(l.proportional_to(LinearForm({1, 2, 0})));
  CHECK(l.to_string() == "x0 - 2*x1");
  const Vector point{1, 1, 5};
  CHECK(l(point) == -1);
  CHECK(LinearForm::from_polynomial(parse_polynomial("2*x1 - x2", 3)) == LinearForm({0, 2, -1}));
  CHECK_THROWS(LinearForm::from_polynomial(parse_polynomial("x1^2", 3)));
}

TEST_CASE("linear changes") {
  CHECK_THROWS_AS(LinearChange(Matrix::from_rows({{1, 2}, {2, 4}})), SingularChange);
  const LinearChange a = LinearChange::from_images({LinearForm({1, 1}), LinearForm({0, 1})});
  const Polynomial f = parse_polynomial("x0^2 - x1^2", 2);
  CHECK(substitute(f, a).to_string() == "x0^2 + 2*x0*x1");
  CHECK(substitute(substitute(f, a), a.inverse()) == f);
  // The base coordinates turn the three-variable normal form into y1^3/3 + y1^2 y3 + y1 y2^2.
  const Polynomial normal = parse_polynomial("x0*(x0*x1 + x2^2)", 3);
  CHECK(substitute(normal, type_c_base_coordinates()) == parse_polynomial("1/3*x0^3 + x0^2*x2 + x0*x1^2", 3));
}

TEST_CASE("property: substitution round trip and homomorphism") {
  std::mt19937 rng(20240611);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 2 + trial % 3;
    const LinearChange a = random_change(rng, n);
    const LinearChange b = random_change(rng, n);
    const Polynomial p = random_form(rng, n, 1 + trial % 3);
    const Polynomial q = random_form(rng, n, 2);
    CHECK(substitute(substitute(p, a), a.inverse()) == p);
    CHECK(substitute(p * q, a) == substitute(p, a) * substitute(q, a));
    CHECK(substitute(p + q.pow(0) * p, a) == Rational(2) * substitute(p, a));
    CHECK(substitute(substitute(p, a), b) == substitute(p, a.then(b)));
  }
}
