#include "ade/linalg.hpp"

#include "ade/error.hpp"

#include <utility>

namespace ade {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::OutOfRange: return "out_of_range";
    case ErrorCode::BasisMismatch: return "basis_mismatch";
    case ErrorCode::UnrelatedModels: return "unrelated_models";
    case ErrorCode::EnumerationBoundExceeded: return "enumeration_bound_exceeded";
    case ErrorCode::NotARoot: return "not_a_root";
    case ErrorCode::OrbitCapExceeded: return "orbit_cap_exceeded";
    case ErrorCode::ParityViolation: return "parity_violation";
    case ErrorCode::UnsupportedRegime: return "unsupported_regime";
    case ErrorCode::RepresentationMismatch: return "representation_mismatch";
    case ErrorCode::NonzeroBoundaryDegree: return "nonzero_boundary_degree";
    case ErrorCode::MissingMarking: return "missing_marking";
    case ErrorCode::NonReducedCover: return "non_reduced_cover";
    case ErrorCode::InconsistentDegrees: return "inconsistent_degrees";
    case ErrorCode::MissingCollision: return "missing_collision";
    case ErrorCode::InvalidDatum: return "invalid_datum";
    case ErrorCode::InvalidRing: return "invalid_ring";
    case ErrorCode::DecompositionFailed: return "decomposition_failed";
    case ErrorCode::Schema: return "schema";
    case ErrorCode::Parse: return "parse";
    case ErrorCode::Io: return "io";
  }
  return "unknown";
}

QMatrix::QMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

QMatrix QMatrix::from_rows(const std::vector<QVector>& rows) {
  QMatrix m;
  for (const auto& r : rows) m.append_row(r);
  return m;
}

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

QVector QMatrix::row(std::size_t i) const {
  return {data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
          data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
}

void QMatrix::append_row(const QVector& row) {
  if (rows_ == 0 && data_.empty()) cols_ = row.size();
  if (row.size() != cols_) {
    throw DomainError(ErrorCode::OutOfRange, "QMatrix::append_row: width mismatch");
  }
  data_.insert(data_.end(), row.begin(), row.end());
  ++rows_;
}

std::vector<std::size_t> QMatrix::row_reduce() {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
    std::size_t p = r;
    while (p < rows_ && sgn((*this)(p, c)) == 0) ++p;
    if (p == rows_) continue;
    if (p != r) {
      for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(p, j), (*this)(r, j));
    }
    const Rational inv = 1 / (*this)(r, c);
    for (std::size_t j = c; j < cols_; ++j) (*this)(r, j) *= inv;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == r || sgn((*this)(i, c)) == 0) continue;
      const Rational factor = (*this)(i, c);
      for (std::size_t j = c; j < cols_; ++j) (*this)(i, j) -= factor * (*this)(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t QMatrix::rank() const {
  QMatrix copy = *this;
  return copy.row_reduce().size();
}

Rational QMatrix::determinant() const {
  if (rows_ != cols_) throw DomainError(ErrorCode::OutOfRange, "determinant of non-square matrix");
  QMatrix a = *this;
  Rational det = 1;
  for (std::size_t c = 0; c < cols_; ++c) {
    std::size_t p = c;
    while (p < rows_ && sgn(a(p, c)) == 0) ++p;
    if (p == rows_) return 0;
    if (p != c) {
      for (std::size_t j = 0; j < cols_; ++j) std::swap(a(p, j), a(c, j));
      det = -det;
    }
    det *= a(c, c);
    for (std::size_t i = c + 1; i < rows_; ++i) {
      if (sgn(a(i, c)) == 0) continue;
      const Rational factor = a(i, c) / a(c, c);
      for (std::size_t j = c; j < cols_; ++j) a(i, j) -= factor * a(c, j);
    }
  }
  return det;
}

QMatrix QMatrix::inverse() const {
  if (rows_ != cols_) throw DomainError(ErrorCode::OutOfRange, "inverse of non-square matrix");
  const std::size_t n = rows_;
  QMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = (*this)(i, j);
    aug(i, n + i) = 1;
  }
  const auto pivots = aug.row_reduce();
  if (pivots.size() < n || pivots[n - 1] != n - 1) {
    throw DomainError(ErrorCode::OutOfRange, "inverse of singular matrix");
  }
  QMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

QMatrix QMatrix::transpose() const {
  QMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

std::vector<QVector> QMatrix::nullspace() const {
  QMatrix a = *this;
  const auto pivots = a.row_reduce();
  std::vector<bool> is_pivot(cols_, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<QVector> basis;
  for (std::size_t free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    QVector v(cols_, Rational(0));
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
  if (a.cols_ != b.rows_) throw DomainError(ErrorCode::OutOfRange, "matrix product shape mismatch");
  QMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (sgn(a(i, k)) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

QVector operator*(const QMatrix& a, const QVector& v) {
  if (a.cols_ != v.size()) throw DomainError(ErrorCode::OutOfRange, "matrix-vector shape mismatch");
  QVector out(a.rows_, Rational(0));
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t j = 0; j < a.cols_; ++j) out[i] += a(i, j) * v[j];
  return out;
}

std::pair<int, int> inertia(const QMatrix& symmetric) {
  QMatrix a = symmetric;
  const std::size_t n = a.rows();
  int pos = 0;
  int neg = 0;
  // Congruence: swap to a nonzero diagonal pivot, or create one from an
  // off-diagonal entry by adding row/column j to row/column i.
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && sgn(a(p, p)) == 0) ++p;
    if (p == n) {
      bool made = false;
      for (std::size_t i = k; i < n && !made; ++i)
        for (std::size_t j = i + 1; j < n && !made; ++j) {
          if (sgn(a(i, j)) == 0) continue;
          for (std::size_t c = 0; c < n; ++c) a(i, c) += a(j, c);
          for (std::size_t r = 0; r < n; ++r) a(r, i) += a(r, j);
          p = i;
          made = true;
        }
      if (!made) break;  // remaining block is zero
    }
    if (p != k) {
      for (std::size_t c = 0; c < n; ++c) std::swap(a(p, c), a(k, c));
      for (std::size_t r = 0; r < n; ++r) std::swap(a(r, p), a(r, k));
    }
    const Rational pivot = a(k, k);
    (sgn(pivot) > 0 ? pos : neg)++;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (sgn(a(i, k)) == 0) continue;
      const Rational factor = a(i, k) / pivot;
      for (std::size_t c = k; c < n; ++c) a(i, c) -= factor * a(k, c);
      for (std::size_t r = k; r < n; ++r) a(r, i) -= factor * a(r, k);
    }
  }
  return {pos, neg};
}

std::size_t span_rank(const std::vector<QVector>& rows) {
  if (rows.empty()) return 0;
  return QMatrix::from_rows(rows).rank();
}

}  // namespace ade
