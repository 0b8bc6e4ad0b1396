#pragma once

// The apolarity action of T = Q[d0..dn] on S = Q[x0..xn]:
//   d^a (x^b) = a! binom(b, a) x^(b - a)  when b >= a, and 0 otherwise,
// i.e. ordinary differentiation.

#include "waring/ideal.hpp"
#include "waring/linalg.hpp"
#include "waring/linear_change.hpp"
#include "waring/monomial_basis.hpp"
#include "waring/polynomial.hpp"

#include <memory>

namespace waring {

/// D(F). Bilinear; zero when deg D > deg F.
Polynomial apolar_apply(const DiffOperator& op, const Polynomial& form);

/// Matrix of T_i -> S_{d-i}, D -> D(F): one column per monomial of T_i,
/// one row per monomial of S_{d-i}, both in graded-lex order.
struct CatalecticantMatrix {
  Matrix entries;
  std::shared_ptr<const MonomialBasis> operator_basis;  // columns, T_i
  std::shared_ptr<const MonomialBasis> image_basis;     // rows, S_{d-i}
  unsigned source_degree = 0;
  unsigned form_degree = 0;

  std::size_t rank() const { return entries.rank(); }
};

/// Throws std::invalid_argument unless F is a non-zero form and 0 <= i <= deg F.
CatalecticantMatrix catalecticant(const Polynomial& form, unsigned i);

/// (F^perp)_i = ker Cat_i  (all of T_i once i > deg F).
Subspace apolar_component(const Polynomial& form, unsigned i);

/// F^perp with minimal generators in degrees 1..d+1 and truncation bound d+1.
HomogeneousIdeal apolar_ideal(const Polynomial& form);

/// rank Cat_1(F): the number of variables F genuinely depends on.
std::size_t essential_variables(const Polynomial& form);

/// F written in its essential variables: F(x) = reduced(coordinates(x)),
/// where `coordinates` are k independent linear forms spanning the
/// (d-1)-th partials of F and `reduced` lives in k variables.
struct EssentialReduction {
  Polynomial reduced;
  std::vector<LinearForm> coordinates;
  /// Invertible completion of `coordinates`: substitute(F, to_reduced) is
  /// `reduced` padded with the unused trailing variables.
  LinearChange to_reduced;
};

EssentialReduction reduce_to_essential(const Polynomial& form);

}  // namespace waring
