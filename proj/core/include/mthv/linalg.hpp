#pragma once

// Exact rational linear algebra. Elimination runs fraction-free on integer
// rows (Bareiss) and only the final back-substitution uses rationals.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "mthv/scalar.hpp"

namespace mthv {

using RationalVector = std::vector<Scalar>;

class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static RationalMatrix from_rows(const std::vector<RationalVector>& rows, std::size_t cols);
  static RationalMatrix from_columns(const std::vector<RationalVector>& columns, std::size_t rows);
  static RationalMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  RationalVector row(std::size_t i) const;
  RationalVector apply(std::span<const Scalar> v) const;

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

/// Reduced row echelon form together with its pivot columns.
struct Echelon {
  RationalMatrix rref;  // only the first rank() rows are nonzero
  std::vector<std::size_t> pivots;
  std::size_t rank() const { return pivots.size(); }
};

/// RREF of m. When column_order is given, columns are eliminated in that
/// order, so pivots land on the earliest columns of the order first.
Echelon row_echelon(const RationalMatrix& m, std::span<const std::size_t> column_order = {});

std::size_t rank(const RationalMatrix& m);

/// Basis of the right null space; size is cols - rank.
std::vector<RationalVector> kernel(const RationalMatrix& m);

/// Coefficients x with sum_i x_i span[i] == target, or nullopt if target is
/// outside the span. Throws std::invalid_argument on dimension mismatch.
std::optional<RationalVector> member(std::span<const Scalar> target, const std::vector<RationalVector>& span);

/// Incrementally maintained reduced basis of a subspace of Q^n. Used to reduce
/// vectors to canonical representatives modulo a span.
class SubspaceReducer {
 public:
  /// column_order lists coordinates by elimination priority; empty means 0..n-1.
  explicit SubspaceReducer(std::size_t dim, std::vector<std::size_t> column_order = {});

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return rows_.size(); }

  /// v minus its projection along the stored pivots.
  RationalVector reduce(RationalVector v) const;
  bool contains(const RationalVector& v) const;
  /// Adds v to the span; returns false if it was already contained.
  bool insert(const RationalVector& v);

  /// Stored basis rows in reduced form, each with a unit pivot.
  const std::vector<RationalVector>& basis() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

 private:
  std::size_t dim_;
  std::vector<std::size_t> order_;
  std::vector<RationalVector> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace mthv
