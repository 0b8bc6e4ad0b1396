#pragma once

// Homogeneous ideals in the ring of differential operators T = Q[d0..dn],
// handled degree by degree with exact linear algebra. Every ideal that
// carries a truncation bound b contains all of T_b, so finitely many
// degrees determine it.

#include "waring/linalg.hpp"
#include "waring/monomial_basis.hpp"
#include "waring/polynomial.hpp"

#include <optional>
#include <string>
#include <vector>

namespace waring {

/// An element of the dual ring, written over d0..dn.
class DiffOperator {
 public:
  DiffOperator() = default;
  explicit DiffOperator(Polynomial p) : poly_(std::move(p)) {}
  static DiffOperator partial(std::size_t nvars, std::size_t index);
  static DiffOperator unit(std::size_t nvars);
  /// The first-order operator sum_i v_i d_i (derivative along v).
  static DiffOperator directional(const LinearForm& direction);

  const Polynomial& polynomial() const { return poly_; }
  std::size_t nvars() const { return poly_.nvars(); }
  unsigned degree() const { return poly_.degree(); }
  bool is_zero() const { return poly_.is_zero(); }
  bool is_homogeneous() const { return poly_.is_homogeneous(); }

  friend DiffOperator operator*(const DiffOperator& a, const DiffOperator& b) {
    return DiffOperator(a.poly_ * b.poly_);
  }
  bool operator==(const DiffOperator&) const = default;

  std::string to_string() const;

 private:
  Polynomial poly_;
};

Variables dual_variables(std::size_t nvars);

/// Parses an operator written over d0..d{nvars-1} (also d_0 style).
DiffOperator parse_operator(std::string_view text, std::size_t nvars);

class HomogeneousIdeal {
 public:
  /// Zero generators are dropped. Throws std::invalid_argument for a
  /// non-homogeneous generator and AmbientMismatch for a foreign one.
  /// `truncation_bound` is a certificate that the ideal contains T_b.
  HomogeneousIdeal(std::size_t nvars, std::vector<DiffOperator> generators,
                   std::optional<unsigned> truncation_bound = std::nullopt);

  static HomogeneousIdeal principal(const DiffOperator& g);
  /// The ideal generated by d0..dn.
  static HomogeneousIdeal maximal(std::size_t nvars);

  std::size_t nvars() const { return nvars_; }
  const std::vector<DiffOperator>& generators() const { return generators_; }
  std::optional<unsigned> truncation_bound() const { return bound_; }

  std::string to_string() const;

 private:
  std::size_t nvars_;
  std::vector<DiffOperator> generators_;
  std::optional<unsigned> bound_;
};

/// Values HF(T/I, i) for i = 0 .. truncation_bound - 1; every later value is 0.
struct HilbertFunction {
  std::vector<std::size_t> values;

  std::size_t operator[](std::size_t i) const { return i < values.size() ? values[i] : 0; }
  /// HF(i) - HF(i-1), with HF(-1) = 0.
  std::vector<long long> delta() const;
  std::size_t sum() const;
  std::size_t max() const;
  bool is_symmetric() const;
  /// "(1, 2, 2, 0)"
  std::string to_string() const;

  bool operator==(const HilbertFunction&) const = default;
};

/// The degree-i part I_i as a subspace of T_i (coordinates in the graded-lex
/// monomial basis). For i >= truncation bound this is all of T_i.
Subspace graded_basis(const HomogeneousIdeal& ideal, unsigned degree);

/// I_0 .. I_max_degree, computed incrementally through I_i = T_1 I_{i-1} + (new generators).
std::vector<Subspace> graded_components(const HomogeneousIdeal& ideal, unsigned max_degree);

/// Throws std::invalid_argument if the ideal has no truncation bound.
HilbertFunction hilbert_function(const HomogeneousIdeal& ideal);

/// I + J: generators concatenated, bound the smaller of the two.
HomogeneousIdeal ideal_sum(const HomogeneousIdeal& a, const HomogeneousIdeal& b);

/// (I : g) = { D : g D in I }, computed degreewise. Keeps the bound of I.
HomogeneousIdeal ideal_colon(const HomogeneousIdeal& ideal, const DiffOperator& g);

/// Degreewise (I : g)_i for i = 0 .. max_degree.
std::vector<Subspace> colon_components(const HomogeneousIdeal& ideal, const DiffOperator& g, unsigned max_degree);

/// Definitional check that `ell` is a non-zero-divisor on T/I through degree
/// `up_to`: (I : ell)_i == I_i for every i <= up_to.
bool is_nonzero_divisor(const HomogeneousIdeal& ideal, const DiffOperator& ell, unsigned up_to);

/// Degreewise span equality I_i == J_i for i = 0 .. max_degree.
bool same_ideal_up_to(const HomogeneousIdeal& a, const HomogeneousIdeal& b, unsigned max_degree);

/// Minimal homogeneous generators of the ideal whose components are given
/// (index = degree, the last one being T_bound). In each degree the new
/// generators span the reduced complement of T_1 * I_{i-1}, in RREF.
HomogeneousIdeal ideal_from_components(std::size_t nvars, const std::vector<Subspace>& components, unsigned bound);

/// span{ x_j v : v in lower, j } inside T_{degree(lower)+1}.
Subspace multiply_by_linear(const Subspace& lower, std::size_t nvars, unsigned lower_degree);

}  // namespace waring
