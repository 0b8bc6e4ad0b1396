#pragma once

#include "waring/linalg.hpp"
#include "waring/polynomial.hpp"

#include <map>
#include <memory>

namespace waring {

/// The monomials of one degree in graded-lex order (largest first), with
/// reverse lookup. Coordinates of homogeneous polynomials are taken in this
/// basis throughout.
class MonomialBasis {
 public:
  MonomialBasis(std::size_t nvars, unsigned degree);

  std::size_t nvars() const { return nvars_; }
  unsigned degree() const { return degree_; }
  std::size_t size() const { return monomials_.size(); }
  const std::vector<Monomial>& monomials() const { return monomials_; }
  const Monomial& operator[](std::size_t k) const { return monomials_[k]; }
  /// Throws std::out_of_range for a monomial of another degree.
  std::size_t index_of(const Monomial& m) const;

 private:
  std::size_t nvars_;
  unsigned degree_;
  std::vector<Monomial> monomials_;
  std::map<std::vector<unsigned>, std::size_t> index_;
};

/// Shared, immutable basis; safe to call from several threads.
std::shared_ptr<const MonomialBasis> monomial_basis(std::size_t nvars, unsigned degree);

/// Number of monomials of degree `degree` in `nvars` variables.
std::size_t monomial_count(std::size_t nvars, unsigned degree);

/// Coordinates of a homogeneous polynomial of the basis degree (zero allowed).
Vector to_coordinates(const Polynomial& p, const MonomialBasis& basis);
Polynomial from_coordinates(std::span<const Rational> v, const MonomialBasis& basis);

}  // namespace waring
