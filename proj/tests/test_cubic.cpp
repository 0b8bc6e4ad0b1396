#include "support.hpp"

#include "waring/apolarity.hpp"
#include "waring/parse.hpp"
#include "waring/type_c.hpp"

#include <doctest.h>

using namespace waring;
using namespace testing_support;

namespace {

ReducibleCubic cubic(std::string_view l, std::string_view q, std::size_t nvars) {
  return ReducibleCubic(LinearForm::from_polynomial(parse_polynomial(l, nvars)), parse_polynomial(q, nvars));
}

ReducibleCubic transformed(const ReducibleCubic& c, const LinearChange& a) {
  return ReducibleCubic(substitute(c.linear(), a), substitute(c.quadric(), a));
}

// A sparse change: a few elementary operations and a scaled permutation.
LinearChange sparse_change(std::mt19937& rng, std::size_t nv) {
  Matrix m = Matrix::identity(nv);
  for (int e = 0; e < 4; ++e) {
    const std::size_t i = rng() % nv, j = rng() % nv;
    if (i == j) continue;
    Matrix el = Matrix::identity(nv);
    el(i, j) = random_rational(rng, 2);
    m = m * el;
  }
  std::vector<std::size_t> perm(nv);
  for (std::size_t i = 0; i < nv; ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  Matrix p(nv, nv);
  for (std::size_t i = 0; i < nv; ++i) p(i, perm[i]) = Rational(1 + static_cast<int>(rng() % 3));
  return LinearChange(m * p);
}

}  // namespace

TEST_CASE("reducible cubic validation") {
  CHECK_THROWS_AS(cubic("0", "x0^2", 2), std::invalid_argument);
  CHECK_THROWS_AS(cubic("x0", "x0", 2), std::invalid_argument);
  CHECK_THROWS_AS(cubic("x0", "0", 2), std::invalid_argument);
  CHECK_THROWS_AS(ReducibleCubic(LinearForm({1, 0}), parse_polynomial("x0^2", 3)), AmbientMismatch);
  const ReducibleCubic c = cubic("x0", "x1*x2", 3);
  CHECK(c.projective_dimension() == 2);
  CHECK(c.product().to_string() == "x0*x1*x2");
}

TEST_CASE("classification examples") {
  CHECK(classify(type_c_normal_cubic(4)).kind == CubicKind::TypeC);
  CHECK(classify(type_c_normal_cubic(2)).kind == CubicKind::TypeC);
  CHECK(classify(cubic("x0", "x1*x2", 3)).kind == CubicKind::TypeB);
  CHECK(classify(cubic("x0", "x0^2 + x1^2 + x2^2", 3)).kind == CubicKind::TypeA);
  const CubicType cone = classify(cubic("x0", "x1^2", 3));
  CHECK(cone.kind == CubicKind::Cone);
  CHECK(cone.essential_variables == 2);
  CHECK(classify(cubic("x0 + x1", "x0^2 - x1^2 + x0*x2 + x1*x2", 3)).kind == CubicKind::DegenerateProduct);
  // Q a cone whose vertex lies on L: the product is a cone.
  CHECK(classify(cubic("x0 + x1", "x0*x1", 3)).kind == CubicKind::Cone);
  CHECK(to_string(CubicKind::TypeA) == "A");
}

TEST_CASE("tangency invariant") {
  CHECK(tangency_invariant(type_c_normal_cubic(3)) == 0);
  CHECK(tangency_invariant(cubic("x0", "x0^2 + x1^2 + x2^2", 3)) != 0);
  CHECK(linear_divides(LinearForm({1, 1}), parse_polynomial("x0^2 - x1^2", 2)));
  CHECK_FALSE(linear_divides(LinearForm({1, 0}), parse_polynomial("x0*x1 + x1^2", 2) + parse_polynomial("x1^2", 2)));
}

TEST_CASE("property: classification is invariant under linear changes") {
  std::mt19937 rng(2024);
  const std::vector<ReducibleCubic> cases{type_c_normal_cubic(3), cubic("x0", "x1*x2", 3),
                                          cubic("x0", "x0^2 + x1^2 + x2^2", 3), cubic("x0", "x1^2", 3),
                                          cubic("x0 + x1", "x0*x2 + x1*x2", 3), cubic("x0", "x1*x2 + x3^2", 4)};
  for (const auto& c : cases) {
    const CubicType base = classify(c);
    for (int trial = 0; trial < 20; ++trial) CHECK(classify(transformed(c, random_change(rng, c.nvars()))) == base);
  }
}

TEST_CASE("normal forms") {
  CHECK(type_c_normal_form(2).to_string() == "x0^2*x1 + x0*x2^2");
  CHECK(type_c_normal_form(3).to_string() == "x0^2*x1 + x0*x2*x3");
  CHECK(type_c_normal_form(5).to_string() == "x0^2*x1 + x0*x2*x3 + x0*x4^2 + x0*x5^2");
  CHECK_THROWS(type_c_normal_form(1));
}

TEST_CASE("normal form decompositions stay within 2n + 1 terms") {
  for (std::size_t n = 2; n <= 12; ++n) {
    const WaringDecomposition dec = decompose_type_c_normal(n);
    CHECK(dec.size() <= 2 * n + 1);
    CHECK(verify_decomposition(type_c_normal_form(n), dec).ok());
  }
  CHECK(decompose_type_c_normal(2).size() == 5);
}

TEST_CASE("three-variable decomposition matches the base identity after a change") {
  // In the base coordinates the normal form is y1^3/3 + y1^2 y3 + y1 y2^2.
  const LinearChange base = type_c_base_coordinates();
  const WaringDecomposition dec = substitute(decompose_type_c_normal(2), base);
  const Polynomial g = parse_polynomial("1/3*x0^3 + x0^2*x2 + x0*x1^2", 3);
  CHECK(verify_decomposition(g, dec).ok());
  CHECK(dec.size() == 5);
}

TEST_CASE("tangent cubic data reproduces the cubic") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 2 + trial % 4;
    const ReducibleCubic c = transformed(type_c_normal_cubic(n), random_change(rng, n + 1));
    const TangentCubicData data = tangent_cubic_data(c);
    CHECK(data.expand() == c.product());
    const WaringDecomposition dec = decompose_tangent_cubic(data);
    CHECK(dec.size() <= 2 * n + 1);
    CHECK(verify_decomposition(c.product(), dec).ok());
  }
  CHECK_THROWS_AS(tangent_cubic_data(cubic("x0", "x1*x2", 3)), std::invalid_argument);
}

TEST_CASE("decompose_type_c with a supplied change") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 12; ++trial) {
    const std::size_t n = 2 + trial % 5;
    const LinearChange a = random_change(rng, n + 1);
    const ReducibleCubic c = transformed(type_c_normal_cubic(n), a);
    // substitute(F o A, A^-1) = F, so A^-1 carries c to the normal form.
    const WaringDecomposition dec = decompose_type_c(c, a.inverse());
    CHECK(dec.size() <= 2 * n + 1);
    CHECK(verify_decomposition(c.product(), dec).ok());
    CHECK_THROWS_AS(decompose_type_c(c, a), InvalidChange);
  }
  CHECK_THROWS_AS(decompose_type_c(type_c_normal_cubic(2), LinearChange::identity(4)), InvalidChange);
}

TEST_CASE("automatic normalization") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 2 + trial % 7;
    const ReducibleCubic c = transformed(type_c_normal_cubic(n), sparse_change(rng, n + 1));
    const auto change = normalize_type_c(c);
    REQUIRE(change.has_value());
    CHECK(substitute(c.product(), *change) == type_c_normal_form(n));
    CHECK(verify_decomposition(c.product(), decompose_type_c(c)).ok());
  }
  // A scaled linear factor and a scaled square still normalize.
  CHECK(normalize_type_c(cubic("x0", "x0*x1 + 2*x2^2", 3)).has_value());
  CHECK(normalize_type_c(cubic("x1", "x0*x2 + x1*x3", 4)).has_value());
}

TEST_CASE("cubics that need a field extension") {
  // x2^2 + 2 x3^2 is anisotropic over Q, so no rational hyperbolic pair exists.
  const ReducibleCubic c = cubic("x0", "x0*x1 + x2^2 + 2*x3^2", 4);
  CHECK(classify(c).kind == CubicKind::TypeC);
  CHECK_FALSE(normalize_type_c(c).has_value());
  CHECK_THROWS_AS(decompose_type_c(c), NeedsFieldExtension);
  const WaringDecomposition dec = decompose_type_c(c, std::nullopt, TypeCOptions{true});
  CHECK(dec.size() <= 7);
  CHECK(verify_decomposition(c.product(), dec).ok());
  CHECK_THROWS_AS(decompose_type_c(cubic("x0", "x0*x1 + x2^2 + x3^2", 4)), NeedsFieldExtension);
}

TEST_CASE("products of three linear forms") {
  const LinearForm x0 = LinearForm::variable(3, 0), x1 = LinearForm::variable(3, 1), x2 = LinearForm::variable(3, 2);
  const WaringDecomposition dec = decompose_linear_product(x0, x1, x2);
  CHECK(dec.size() == 4);
  CHECK(verify_decomposition(parse_polynomial("x0*x1*x2", 3), dec).ok());
  CHECK(dec.identity_string() == "24*F = (x0 + x1 + x2)^3 - (x0 + x1 - x2)^3 - (x0 - x1 + x2)^3 - (-x0 + x1 + x2)^3");
  // The sign pattern + - - + does not give x0 x1 x2; the residual shows it.
  WaringDecomposition wrong(3, 3);
  const Rational c(1, 24);
  wrong.add(c, x0 + x1 + x2);
  wrong.add(-c, x0 + x1 - x2);
  wrong.add(-c, x0 - x1 + x2);
  wrong.add(c, x1 + x2 - x0);
  const VerificationResult r = verify_decomposition(parse_polynomial("x0*x1*x2", 3), wrong);
  CHECK_FALSE(r.ok());
  CHECK(r.residual == Rational(-1, 12) * (x1 + x2 - x0).to_polynomial().pow(3));
}

TEST_CASE("quadric factorization") {
  const auto f = factor_quadric(parse_polynomial("x0^2 - 4*x1^2 + x0*x2", 3));
  CHECK_FALSE(f.has_value());
  const auto g = factor_quadric(parse_polynomial("x0^2 - 4*x1^2", 3));
  REQUIRE(g.has_value());
  CHECK(g->first.to_polynomial() * g->second.to_polynomial() == parse_polynomial("x0^2 - 4*x1^2", 3));
  CHECK_FALSE(factor_quadric(parse_polynomial("x0^2 + x1^2", 3)).has_value());
  CHECK(factor_quadric(parse_polynomial("3*(x1 - x2)^2", 3)).has_value());
  CHECK(factor_quadric(parse_polynomial("x1*x2", 3)).has_value());
}

TEST_CASE("decomposition objects") {
  WaringDecomposition dec(3, 2);
  dec.add(1, LinearForm({1, 0}));
  dec.add(2, LinearForm({2, 0}));
  dec.add(1, LinearForm({0, 1}));
  CHECK_FALSE(dec.pairwise_independent());
  const WaringDecomposition m = dec.merged();
  CHECK(m.size() == 2);
  CHECK(m.terms()[0].coefficient == 17);
  CHECK(m.expand() == dec.expand());
  CHECK(m.pairwise_independent());
  WaringDecomposition zero(3, 2);
  zero.add(1, LinearForm({1, 1}));
  zero.add(1, LinearForm({-1, -1}));
  CHECK(zero.merged().size() == 0);
}

TEST_CASE("verification residual of a deleted term") {
  const Polynomial f = type_c_normal_form(2);
  const WaringDecomposition dec = decompose_type_c_normal(2);
  for (std::size_t k = 0; k < dec.size(); ++k) {
    std::vector<WaringTerm> terms = dec.terms();
    const WaringTerm gone = terms[k];
    terms.erase(terms.begin() + static_cast<std::ptrdiff_t>(k));
    const VerificationResult r = verify_decomposition(f, WaringDecomposition(3, 3, terms));
    CHECK_FALSE(r.ok());
    CHECK(r.residual == gone.coefficient * gone.form.to_polynomial().pow(3));
  }
}

TEST_CASE("property: transported decompositions verify") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 2 + trial % 5;
    const LinearChange a = random_change(rng, n + 1);
    const WaringDecomposition dec = decompose_type_c_normal(n);
    CHECK(verify_decomposition(substitute(type_c_normal_form(n), a), substitute(dec, a)).ok());
  }
}
