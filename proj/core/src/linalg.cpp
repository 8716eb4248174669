#include "mrep/linalg.hpp"

#include "mrep/error.hpp"

#include <algorithm>
#include <string>

namespace mrep {

namespace {

void require_same_size(const Point& a, const Point& b) {
  if (a.size() != b.size()) {
    throw Error(ErrorKind::DimensionMismatch, "points of dimension " + std::to_string(a.size()) +
                                                  " and " + std::to_string(b.size()));
  }
}

}  // namespace

Point operator+(const Point& a, const Point& b) {
  require_same_size(a, b);
  Point out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

Point operator-(const Point& a, const Point& b) {
  require_same_size(a, b);
  Point out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

Point operator-(const Point& a) {
  Point out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = -a[i];
  return out;
}

Point operator*(const Rational& s, const Point& a) {
  Point out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = s * a[i];
  return out;
}

void axpy(Point& a, const Rational& s, const Point& b) {
  require_same_size(a, b);
  if (s == 0) return;
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += s * b[i];
}

bool is_zero(const Point& a) {
  return std::all_of(a.begin(), a.end(), [](const Rational& x) { return x == 0; });
}

void sort_unique(std::vector<Point>& points) {
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
}

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  entries_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw Error(ErrorKind::DimensionMismatch, "ragged matrix literal");
    entries_.insert(entries_.end(), r.begin(), r.end());
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<Point>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) {
      throw Error(ErrorKind::DimensionMismatch, "row " + std::to_string(i) + " has " +
                                                    std::to_string(rows[i].size()) + " entries");
    }
    std::copy(rows[i].begin(), rows[i].end(), m.entries_.begin() + i * cols);
  }
  return m;
}

Matrix Matrix::from_columns(const std::vector<Point>& columns, std::size_t rows) {
  Matrix m(rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != rows) {
      throw Error(ErrorKind::DimensionMismatch, "column " + std::to_string(j) + " has " +
                                                    std::to_string(columns[j].size()) + " entries");
    }
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
  }
  return m;
}

Point Matrix::row(std::size_t i) const {
  return Point(entries_.begin() + i * cols_, entries_.begin() + (i + 1) * cols_);
}

Point Matrix::column(std::size_t j) const {
  Point out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
  return out;
}

Point operator*(const Matrix& m, const Point& x) {
  if (m.cols() != x.size()) {
    throw Error(ErrorKind::DimensionMismatch, "matrix with " + std::to_string(m.cols()) +
                                                  " columns applied to a point of dimension " +
                                                  std::to_string(x.size()));
  }
  Point out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Rational acc = 0;
    for (std::size_t j = 0; j < m.cols(); ++j) acc += m(i, j) * x[j];
    out[i] = std::move(acc);
  }
  return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) {
    throw Error(ErrorKind::DimensionMismatch, "matrix product " + std::to_string(a.rows()) + "x" +
                                                  std::to_string(a.cols()) + " * " +
                                                  std::to_string(b.rows()) + "x" +
                                                  std::to_string(b.cols()));
  }
  Matrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    }
  }
  return out;
}

std::size_t rank(const std::vector<Point>& vectors) {
  std::vector<Point> rows = vectors;
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t pivot = r;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[r], rows[pivot]);
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      if (rows[i][c] == 0) continue;
      Rational factor = rows[i][c] / rows[r][c];
      for (std::size_t k = c; k < cols; ++k) rows[i][k] -= factor * rows[r][k];
    }
    ++r;
  }
  return r;
}

}  // namespace mrep
