#include "mrep/basis_matrix.hpp"

#include "mrep/error.hpp"

#include <algorithm>
#include <string>

namespace mrep {

BasisMatrix::BasisMatrix(Matrix columns) : dim_(columns.rows()), cols_(columns.cols()) {
  if (cols_ > 0) {
    slices_.push_back({std::make_shared<const Matrix>(std::move(columns)), Rational(1), 0});
  }
}

BasisMatrix BasisMatrix::from_columns(std::size_t dim, const std::vector<Point>& columns) {
  if (columns.empty()) return BasisMatrix(dim);
  return BasisMatrix(Matrix::from_columns(columns, dim));
}

const BasisMatrix::Slice& BasisMatrix::locate(std::size_t j) const {
  if (j >= cols_) {
    throw Error(ErrorKind::InvalidArgument,
                "column " + std::to_string(j) + " out of range for " + std::to_string(cols_));
  }
  auto it = std::upper_bound(slices_.begin(), slices_.end(), j,
                             [](std::size_t col, const Slice& s) { return col < s.offset; });
  return *std::prev(it);
}

Point BasisMatrix::column(std::size_t j) const {
  const Slice& s = locate(j);
  Point out = s.data->column(j - s.offset);
  if (s.scale != 1) {
    for (auto& x : out) x *= s.scale;
  }
  return out;
}

std::vector<Point> BasisMatrix::columns() const {
  std::vector<Point> out;
  out.reserve(cols_);
  for (std::size_t j = 0; j < cols_; ++j) out.push_back(column(j));
  return out;
}

void BasisMatrix::accumulate_column(std::size_t j, const Rational& coefficient, Point& acc) const {
  if (acc.size() != dim_) {
    throw Error(ErrorKind::DimensionMismatch, "accumulator dimension " +
                                                  std::to_string(acc.size()) + " != " +
                                                  std::to_string(dim_));
  }
  if (coefficient == 0) return;
  const Slice& s = locate(j);
  const Rational c = coefficient * s.scale;
  const std::size_t local = j - s.offset;
  for (std::size_t i = 0; i < dim_; ++i) acc[i] += c * (*s.data)(i, local);
}

Point BasisMatrix::column_sum() const {
  Point acc(dim_);
  for (std::size_t j = 0; j < cols_; ++j) accumulate_column(j, Rational(1), acc);
  return acc;
}

BasisMatrix BasisMatrix::concat(const BasisMatrix& right) const {
  if (dim_ != right.dim_) {
    throw Error(ErrorKind::DimensionMismatch, "concatenating bases of dimension " +
                                                  std::to_string(dim_) + " and " +
                                                  std::to_string(right.dim_));
  }
  BasisMatrix out(dim_);
  out.slices_.reserve(slices_.size() + right.slices_.size());
  out.slices_ = slices_;
  for (const Slice& s : right.slices_) out.slices_.push_back({s.data, s.scale, s.offset + cols_});
  out.cols_ = cols_ + right.cols_;
  return out;
}

BasisMatrix BasisMatrix::scaled(const Rational& factor) const {
  BasisMatrix out = *this;
  for (Slice& s : out.slices_) s.scale *= factor;
  return out;
}

BasisMatrix BasisMatrix::mapped(const Matrix& m) const {
  if (m.cols() != dim_) {
    throw Error(ErrorKind::DimensionMismatch, "map with " + std::to_string(m.cols()) +
                                                  " columns applied to dimension " +
                                                  std::to_string(dim_));
  }
  if (cols_ == 0) return BasisMatrix(m.rows());
  return BasisMatrix(m * dense());
}

Matrix BasisMatrix::dense() const {
  Matrix out(dim_, cols_);
  for (const Slice& s : slices_) {
    for (std::size_t j = 0; j < s.data->cols(); ++j) {
      for (std::size_t i = 0; i < dim_; ++i) out(i, s.offset + j) = s.scale * (*s.data)(i, j);
    }
  }
  return out;
}

bool operator==(const BasisMatrix& a, const BasisMatrix& b) {
  if (a.dim_ != b.dim_ || a.cols_ != b.cols_) return false;
  return a.dense() == b.dense();
}

}  // namespace mrep
