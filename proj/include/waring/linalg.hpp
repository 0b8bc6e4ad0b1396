#pragma once

// Dense exact linear algebra over the rationals. Sizes here are small
// (a few hundred rows at most), so everything is plain Gaussian elimination.

#include "waring/rational.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace waring {

using Vector = std::vector<Rational>;

bool is_zero(std::span<const Rational> v);

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<Vector>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;

  Matrix transpose() const;
  Matrix operator*(const Matrix& other) const;
  Vector operator*(std::span<const Rational> v) const;
  bool operator==(const Matrix& other) const = default;

  /// Reduced row-echelon form; pivot columns are written to `pivots` if given.
  Matrix rref(std::vector<std::size_t>* pivots = nullptr) const;
  std::size_t rank() const;
  /// Basis of the right null space, one vector per free column, in the
  /// canonical form read off the RREF.
  std::vector<Vector> kernel() const;
  Rational determinant() const;
  std::optional<Matrix> inverse() const;
  /// Some solution of A x = b, or nullopt if inconsistent.
  std::optional<Vector> solve(std::span<const Rational> b) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// A linear subspace of Q^dim held as a fully reduced echelon basis.
/// The basis is kept in RREF at all times, so two subspaces are equal iff
/// their bases are equal.
class Subspace {
 public:
  explicit Subspace(std::size_t dim = 0) : dim_(dim) {}
  static Subspace full(std::size_t dim);
  static Subspace span(std::size_t dim, const std::vector<Vector>& vectors);

  std::size_t ambient_dim() const { return dim_; }
  std::size_t dim() const { return rows_.size(); }
  bool is_full() const { return rows_.size() == dim_; }

  /// Adds v to the span; returns false if v was already in it.
  bool insert(Vector v);
  /// Remainder of v after elimination against the basis pivots.
  Vector reduce(Vector v) const;
  bool contains(const Vector& v) const;
  bool contains(const Subspace& other) const;

  /// Basis rows sorted by pivot column.
  std::vector<Vector> basis() const;
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool operator==(const Subspace& other) const;

 private:
  std::size_t dim_;
  std::vector<Vector> rows_;
  std::vector<std::size_t> pivots_;  // pivots_[k] is the pivot column of rows_[k]
};

}  // namespace waring
