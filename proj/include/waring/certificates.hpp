#pragma once

// Rank bounds for reducible cubics and the certificates behind them.

#include "waring/cubic.hpp"
#include "waring/decomposition.hpp"
#include "waring/ideal.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace waring {

/// A cubic type for which the classification table has no entry.
class UnsupportedCubicType : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class BoundKind { Catalecticant, Table, Avoidance, ColonRefinement, Sylvester, Witness };

std::string to_string(BoundKind kind);

/// Rank of a general form of degree d in n + 1 variables:
/// ceil(binom(n + d, d) / (n + 1)), except d = 2 (n + 1), (d, n) = (3, 4) (8)
/// and d = 4 with n = 2, 3, 4 (6, 10, 15). Requires n >= 1, d >= 2.
std::size_t ah_generic_rank(std::size_t n, unsigned d);

struct TableBounds {
  std::size_t lower;
  std::size_t upper;
  bool operator==(const TableBounds&) const = default;
};

/// A, B: rank 2n; C: 2n <= rank <= 2n + 1. A cone has no entry of its own
/// (nullopt: analyse it in its essential variables); a degenerate product
/// throws UnsupportedCubicType. Requires n >= 2.
std::optional<TableBounds> table_bounds(CubicKind kind, std::size_t n);

/// max_i HF(T/F^perp, i).
std::size_t catalecticant_lower_bound(const Polynomial& form);

/// deg X >= sum_i HF(T/(F^perp + <ell>), i) for any decomposition point set X
/// with no point on {ell = 0}: there ell is a non-zero-divisor on T/I(X).
/// With a colon operator g the ideal F^perp is replaced by (F^perp : g),
/// which bounds the points of X off {g = 0}.
struct AvoidanceCertificate {
  DiffOperator hyperplane;
  HilbertFunction hilbert;  // of T/(F^perp + <ell>)
  std::size_t hf_sum = 0;
  std::optional<DiffOperator> colon;
  std::optional<HilbertFunction> refined_hilbert;  // of T/((F^perp : g) + <ell>)
  std::optional<std::size_t> refined_sum;
  /// Points known to lie on {g = 0} and excised by the colon.
  std::optional<std::size_t> removed_points;
  std::string condition;

  /// refined_sum + removed_points when both are known, hf_sum otherwise.
  std::size_t bound() const;
};

/// Throws std::invalid_argument for ell = 0, deg ell != 1, or ell(F) = 0.
AvoidanceCertificate avoidance_lower_bound(const Polynomial& form, const DiffOperator& ell);

/// Adds the colon refinement by a non-zero homogeneous g.
AvoidanceCertificate colon_refinement(const Polynomial& form, const DiffOperator& ell, const DiffOperator& g);

/// Forms and operators of the three-variable instance are written
/// over y1, y2, y3 and d1, d2, d3 (indices 0, 1, 2).
Variables example_form_variables();
Variables example_operator_variables();
/// y1 (y1 y3 + y2^2).
Polynomial example_type_c_form();

struct ClaimResult {
  std::string id;
  std::string statement;
  bool passed = false;
  std::string detail;
};

struct CaseCertificate {
  std::vector<ClaimResult> claims;
  std::optional<AvoidanceCertificate> refinement;
  bool all_passed() const;
  /// "rank >= 5" when every claim holds.
  std::string conclusion() const;
};

/// Re-checks, for y1 (y1 y3 + y2^2), each computation in the case analysis
/// proving rank >= 5 in three variables:
///  (i)   F^perp = <d1d3 - d2^2, d2d3, d3^2, d1^3, d1^2d2, d2^3>
///  (ii)  HF(T/(F^perp + <d3>)) = (1, 2, 2, 0), sum 5
///  (iii) F^perp_2 = span{d1d3 - d2^2, d2d3, d3^2}
///  (iv)  the pencil a d3^2 + b d2d3 has base locus {d3 = 0}
///  (v)   every conic d1d3 - d2^2 + a d3^2 + b d2d3 is smooth and meets
///        {d3 = 0} only at (1:0:0)
///  (vi)  (F^perp : d2) + <d3> = <d3, d1^2, d2^2>, HF sum 4
///  (vii) d3 F != 0
/// Another form may be passed to see which claims break.
CaseCertificate segre_case_certificate(const Polynomial& form = example_type_c_form());

/// y0^2 y1 - y1 y2^2 + y1^2 y3 + y1 y4^2 + ... + y1 yn^2: the normal form
/// after the hyperbolic-pair change (n >= 3), in variables y0..yn.
Polynomial peeled_type_c_form(std::size_t n);

/// The generator families d_i d3 (i != 1), d1d3 - d_i^2 (i != 1, 2, 3),
/// d1d3 + d2^2, d_i d_j (i < j, i, j != 1, 3), d_i^3 (i != 3),
/// d1^2 d_i (i != 3) of the apolar ideal of peeled_type_c_form(n).
std::vector<DiffOperator> peeled_type_c_generators(std::size_t n);

struct RankBound {
  std::size_t value = 0;
  BoundKind kind = BoundKind::Table;
};

struct RankReport {
  CubicType classification;
  std::size_t n = 0;
  RankBound lower;
  RankBound upper;
  std::optional<WaringDecomposition> witness;
  std::size_t generic_rank = 0;
  std::size_t catalecticant_bound = 0;
  std::vector<AvoidanceCertificate> certificates;
  std::vector<std::string> notes;
};

/// Classification, table bounds, catalecticant bound, a verified witness when
/// one can be built, conditional avoidance certificates, and the generic rank.
/// Cones (and degenerate products) are analysed in their essential variables.
RankReport rank_report(const ReducibleCubic& cubic);

}  // namespace waring
