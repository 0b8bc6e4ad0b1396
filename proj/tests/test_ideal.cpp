#include "support.hpp"

#include "waring/apolarity.hpp"
#include "waring/parse.hpp"

#include <doctest.h>

using namespace waring;
using namespace testing_support;

namespace {

// I_i spelled out as span{ m * g : deg m + deg g = i }.
Subspace brute_force_component(const HomogeneousIdeal& ideal, unsigned degree) {
  const auto target = monomial_basis(ideal.nvars(), degree);
  std::vector<Vector> vectors;
  for (const auto& g : ideal.generators()) {
    if (g.degree() > degree) continue;
    for (const auto& m : monomial_basis(ideal.nvars(), degree - g.degree())->monomials())
      vectors.push_back(to_coordinates(Polynomial::monomial(m) * g.polynomial(), *target));
  }
  return Subspace::span(target->size(), vectors);
}

HomogeneousIdeal random_ideal(std::mt19937& rng, std::size_t nvars) {
  std::vector<DiffOperator> gens;
  const int count = 1 + static_cast<int>(rng() % 3);
  for (int k = 0; k < count; ++k) gens.emplace_back(random_form(rng, nvars, 1 + rng() % 3, 0.4).with_nvars(nvars));
  return HomogeneousIdeal(nvars, gens);
}

}  // namespace

TEST_CASE("ideal construction") {
  CHECK_THROWS_AS(HomogeneousIdeal(2, {parse_operator("d0 + d1^2", 2)}), std::invalid_argument);
  CHECK_THROWS_AS(HomogeneousIdeal(2, {parse_operator("d0", 3)}), AmbientMismatch);
  const HomogeneousIdeal i(2, {parse_operator("0", 2), parse_operator("d0*d1", 2)});
  CHECK(i.generators().size() == 1);
  CHECK(i.to_string() == "<d0*d1>");
  CHECK_THROWS(hilbert_function(i));
  CHECK(hilbert_function(HomogeneousIdeal::maximal(4)).values == std::vector<std::size_t>{1});
}

TEST_CASE("Hilbert function helpers") {
  const HilbertFunction hf{{1, 2, 2, 0}};
  CHECK(hf.sum() == 5);
  CHECK(hf.max() == 2);
  CHECK(hf.delta() == std::vector<long long>{1, 1, 0, -2});
  CHECK(hf.to_string() == "(1, 2, 2, 0)");
  CHECK(HilbertFunction{{1, 3, 3, 1}}.is_symmetric());
  CHECK(HilbertFunction{{1, 3, 3, 1, 0}}.is_symmetric());
  CHECK_FALSE(hf.is_symmetric());
  CHECK(hf[7] == 0);
}

TEST_CASE("sum and colon on the three-variable example") {
  const Polynomial f = parse_polynomial("x0^2*x2 + x0*x1^2", 3);
  const HomogeneousIdeal perp = apolar_ideal(f);
  const DiffOperator d1 = parse_operator("d1", 3), d2 = parse_operator("d2", 3);
  CHECK(hilbert_function(ideal_sum(perp, HomogeneousIdeal::principal(d2))).values == std::vector<std::size_t>{1, 2, 2, 0});
  const HomogeneousIdeal colon = ideal_colon(perp, d1);
  CHECK(hilbert_function(colon).values == std::vector<std::size_t>{1, 2, 1, 0});
  CHECK(same_ideal_up_to(ideal_sum(colon, HomogeneousIdeal::principal(d2)),
                         HomogeneousIdeal(3, {d2, parse_operator("d0^2", 3), parse_operator("d1^2", 3)}), 4));
  // Colon by a unit changes nothing.
  CHECK(same_ideal_up_to(ideal_colon(perp, DiffOperator::unit(3)), perp, 5));
}

TEST_CASE("non-zero-divisors on two points of the line") {
  // I = <d0 d1> is the ideal of (1:0) and (0:1).
  const HomogeneousIdeal points(2, {parse_operator("d0*d1", 2)});
  CHECK(is_nonzero_divisor(points, parse_operator("d0 + d1", 2), 5));
  CHECK(is_nonzero_divisor(points, parse_operator("2*d0 - 3*d1", 2), 5));
  CHECK_FALSE(is_nonzero_divisor(points, parse_operator("d0", 2), 5));
  CHECK_FALSE(is_nonzero_divisor(points, parse_operator("d1", 2), 5));
  // Through degree 0 nothing can be detected yet.
  CHECK(is_nonzero_divisor(points, parse_operator("d0", 2), 0));
}

TEST_CASE("property: graded components match brute-force enumeration") {
  std::mt19937 rng(1234);
  for (int trial = 0; trial < 30; ++trial) {
    const HomogeneousIdeal ideal = random_ideal(rng, 2 + trial % 3);
    const auto comps = graded_components(ideal, 4);
    for (unsigned i = 0; i <= 4; ++i) {
      CHECK(comps[i] == brute_force_component(ideal, i));
      CHECK(graded_basis(ideal, i) == comps[i]);
    }
  }
}

TEST_CASE("property: minimal generators regenerate the components and are minimal") {
  std::mt19937 rng(555);
  for (int trial = 0; trial < 20; ++trial) {
    const Polynomial f = random_form(rng, 2 + trial % 3, 3 + trial % 2, 0.4);
    const HomogeneousIdeal perp = apolar_ideal(f);
    const unsigned bound = *perp.truncation_bound();
    for (unsigned i = 0; i <= bound; ++i) CHECK(brute_force_component(perp, i) == apolar_component(f, i));
    for (std::size_t k = 0; k < perp.generators().size(); ++k) {
      std::vector<DiffOperator> rest = perp.generators();
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(k));
      CHECK_FALSE(same_ideal_up_to(HomogeneousIdeal(perp.nvars(), rest), perp, bound));
    }
  }
}

TEST_CASE("property: exact sequence HF(I + l)_i = HF(I)_i - HF(I : l)_(i-1)") {
  std::mt19937 rng(8080);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 2 + trial % 3;
    const Polynomial f = random_form(rng, n, 3 + trial % 2, 0.5);
    const HomogeneousIdeal perp = apolar_ideal(f);
    const DiffOperator ell = DiffOperator::directional(random_linear(rng, n));
    const HilbertFunction base = hilbert_function(perp);
    const HilbertFunction plus = hilbert_function(ideal_sum(perp, HomogeneousIdeal::principal(ell)));
    const HilbertFunction colon = hilbert_function(ideal_colon(perp, ell));
    CHECK(plus[0] == base[0]);
    for (std::size_t i = 1; i < base.values.size(); ++i) CHECK(plus[i] + colon[i - 1] == base[i]);
  }
}

TEST_CASE("property: colon by g equals the apolar ideal of g F") {
  std::mt19937 rng(2718);
  for (int trial = 0; trial < 25; ++trial) {
    const std::size_t n = 2 + trial % 3;
    const Polynomial f = random_form(rng, n, 4, 0.4);
    const DiffOperator g(random_form(rng, n, 1 + trial % 2, 0.6));
    const Polynomial gf = apolar_apply(g, f);
    if (gf.is_zero()) continue;
    const auto colon = colon_components(apolar_ideal(f), g, 5);
    for (unsigned i = 0; i <= 5; ++i) CHECK(colon[i] == apolar_component(gf, i));
  }
}

TEST_CASE("property: smaller ideals give larger avoidance sums degreewise") {
  std::mt19937 rng(77);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 3;
    const Polynomial f = random_form(rng, n, 3, 0.5);
    const HomogeneousIdeal perp = apolar_ideal(f);
    std::vector<DiffOperator> some;
    for (const auto& g : perp.generators())
      if (rng() % 2) some.push_back(g);
    const HomogeneousIdeal smaller(n, some, perp.truncation_bound());
    const HomogeneousIdeal ell = HomogeneousIdeal::principal(DiffOperator::directional(random_linear(rng, n)));
    const HilbertFunction big = hilbert_function(ideal_sum(smaller, ell));
    const HilbertFunction small = hilbert_function(ideal_sum(perp, ell));
    for (std::size_t i = 0; i < small.values.size(); ++i) CHECK(big[i] >= small[i]);
  }
}
