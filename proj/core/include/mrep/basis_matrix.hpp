#pragma once

#include "mrep/linalg.hpp"

#include <memory>
#include <vector>

namespace mrep {

/// d x h matrix of basis vectors (or generators) stored as a sequence of
/// scaled, shared column slices. Concatenation, negation and scaling only
/// touch slice descriptors, so Minkowski sums and chain links never copy
/// the columns of their operands.
class BasisMatrix {
 public:
  BasisMatrix() = default;
  explicit BasisMatrix(std::size_t dim) : dim_(dim) {}
  explicit BasisMatrix(Matrix columns);

  static BasisMatrix from_columns(std::size_t dim, const std::vector<Point>& columns);

  std::size_t rows() const noexcept { return dim_; }
  std::size_t cols() const noexcept { return cols_; }

  Point column(std::size_t j) const;
  std::vector<Point> columns() const;

  /// acc += coefficient * column(j)
  void accumulate_column(std::size_t j, const Rational& coefficient, Point& acc) const;

  Point column_sum() const;

  BasisMatrix concat(const BasisMatrix& right) const;
  BasisMatrix scaled(const Rational& factor) const;
  BasisMatrix negated() const { return scaled(Rational(-1)); }

  /// Left multiplication; the result owns a single fresh slice.
  BasisMatrix mapped(const Matrix& m) const;

  Matrix dense() const;

  std::size_t slice_count() const noexcept { return slices_.size(); }

  friend bool operator==(const BasisMatrix& a, const BasisMatrix& b);

 private:
  struct Slice {
    std::shared_ptr<const Matrix> data;
    Rational scale;
    std::size_t offset;  // first logical column of this slice
  };

  const Slice& locate(std::size_t j) const;

  std::size_t dim_ = 0;
  std::size_t cols_ = 0;
  std::vector<Slice> slices_;
};

}  // namespace mrep
