#pragma once

#include "waring/decomposition.hpp"
#include "waring/ideal.hpp"
#include "waring/polynomial.hpp"

#include <optional>

namespace waring {

/// Exact Waring rank of a binary form from its two-generator apolar ideal
/// F^perp = <g_low, g_high>, deg g_low <= deg g_high, deg sum = d + 2:
/// the rank is deg g_low when g_low is squarefree and deg g_high otherwise.
struct BinaryRank {
  std::size_t rank = 0;
  DiffOperator low_generator;
  DiffOperator high_generator;
  bool low_squarefree = false;
  /// A squarefree element of F^perp in degree `rank`, when one was found.
  std::optional<DiffOperator> certificate;
  /// Present when the certificate splits into distinct rational linear factors.
  std::optional<WaringDecomposition> decomposition;
};

/// Throws std::invalid_argument unless F is a non-zero binary form of
/// degree >= 1.
BinaryRank decompose_binary(const Polynomial& form);

/// Squarefreeness of a binary form over an algebraically closed field.
bool is_squarefree_binary(const Polynomial& form);

/// Distinct rational points (a : b) with form(a, b) = 0 when the form
/// splits completely into distinct rational linear factors.
std::optional<std::vector<std::pair<Rational, Rational>>> rational_roots_binary(const Polynomial& form);

}  // namespace waring
