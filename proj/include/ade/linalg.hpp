#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <utility>
#include <vector>

namespace ade {

using Integer = mpz_class;
using Rational = mpq_class;
using QVector = std::vector<Rational>;

/// Dense matrix over the rationals. Row-major, value semantics.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols);

  static QMatrix from_rows(const std::vector<QVector>& rows);
  static QMatrix identity(std::size_t n);

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  [[nodiscard]] QVector row(std::size_t i) const;
  void append_row(const QVector& row);

  /// Reduces in place to reduced row echelon form; returns the pivot columns.
  std::vector<std::size_t> row_reduce();

  [[nodiscard]] std::size_t rank() const;
  [[nodiscard]] Rational determinant() const;
  [[nodiscard]] QMatrix inverse() const;
  [[nodiscard]] QMatrix transpose() const;
  /// Basis of { v : M v = 0 }.
  [[nodiscard]] std::vector<QVector> nullspace() const;

  friend QMatrix operator*(const QMatrix& a, const QMatrix& b);
  friend QVector operator*(const QMatrix& a, const QVector& v);
  friend bool operator==(const QMatrix& a, const QMatrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Numbers of positive and negative squares of a symmetric matrix
/// (Sylvester inertia), computed by congruence diagonalisation.
std::pair<int, int> inertia(const QMatrix& symmetric);

/// Rank of the span of the given rows.
std::size_t span_rank(const std::vector<QVector>& rows);

}  // namespace ade
