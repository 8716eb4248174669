#pragma once

#include "mrep/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace mrep {

/// A point (or direction) in Q^d. std::vector's operator< is the
/// lexicographic order used as the canonical tie-break throughout.
using Point = std::vector<Rational>;

Point operator+(const Point& a, const Point& b);
Point operator-(const Point& a, const Point& b);
Point operator-(const Point& a);
Point operator*(const Rational& s, const Point& a);

/// a += s * b, in place.
void axpy(Point& a, const Rational& s, const Point& b);

bool is_zero(const Point& a);

/// Sorts lexicographically and drops duplicates.
void sort_unique(std::vector<Point>& points);

/// Dense row-major matrix of exact scalars.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<Point>& rows, std::size_t cols);
  static Matrix from_columns(const std::vector<Point>& columns, std::size_t rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  Point row(std::size_t i) const;
  Point column(std::size_t j) const;

  std::span<const Rational> entries() const noexcept { return entries_; }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

Point operator*(const Matrix& m, const Point& x);
Matrix operator*(const Matrix& a, const Matrix& b);

/// Rank via exact Gaussian elimination.
std::size_t rank(const std::vector<Point>& vectors);

}  // namespace mrep
