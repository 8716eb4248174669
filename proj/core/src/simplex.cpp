#include "simplex.hpp"

#include <optional>

namespace mrep::detail {

namespace {

// Dense tableau for  A y = b, y >= 0, b >= 0, with one artificial per row.
// Columns [0, n) are the structural variables, [n, n + m) the artificials.
class PhaseOneTableau {
 public:
  PhaseOneTableau(std::vector<std::vector<Rational>> a, std::vector<Rational> b)
      : m_(a.size()), n_(a.empty() ? 0 : a.front().size()) {
    rows_.resize(m_);
    rhs_ = std::move(b);
    basis_.resize(m_);
    for (std::size_t i = 0; i < m_; ++i) {
      if (rhs_[i] < 0) {
        for (auto& x : a[i]) x = -x;
        rhs_[i] = -rhs_[i];
      }
      rows_[i] = std::move(a[i]);
      rows_[i].resize(n_ + m_);
      rows_[i][n_ + i] = 1;
      basis_[i] = n_ + i;
    }
    // Reduced costs of  min sum(artificials)  with the artificial basis.
    cost_.assign(n_ + m_, Rational(0));
    objective_ = 0;
    for (std::size_t i = 0; i < m_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) cost_[j] -= rows_[i][j];
      objective_ += rhs_[i];
    }
  }

  // Minimum of the artificial sum.
  Rational solve() {
    while (true) {
      std::optional<std::size_t> entering;
      for (std::size_t j = 0; j < n_ + m_; ++j) {
        if (cost_[j] < 0) {
          entering = j;
          break;
        }
      }
      if (!entering) return objective_;

      const std::size_t e = *entering;
      std::optional<std::size_t> leaving;
      Rational best_ratio;
      for (std::size_t i = 0; i < m_; ++i) {
        if (rows_[i][e] <= 0) continue;
        Rational ratio = rhs_[i] / rows_[i][e];
        if (!leaving || ratio < best_ratio ||
            (ratio == best_ratio && basis_[i] < basis_[*leaving])) {
          leaving = i;
          best_ratio = std::move(ratio);
        }
      }
      // The phase-1 objective is bounded below by zero, so some row always
      // limits the step.
      pivot(*leaving, e);
    }
  }

 private:
  void pivot(std::size_t r, std::size_t e) {
    const Rational inv = 1 / rows_[r][e];
    for (auto& x : rows_[r]) x *= inv;
    rhs_[r] *= inv;
    for (std::size_t i = 0; i < m_; ++i) {
      if (i == r || rows_[i][e] == 0) continue;
      const Rational f = rows_[i][e];
      for (std::size_t j = 0; j < n_ + m_; ++j) {
        if (rows_[r][j] != 0) rows_[i][j] -= f * rows_[r][j];
      }
      rhs_[i] -= f * rhs_[r];
    }
    if (cost_[e] != 0) {
      const Rational f = cost_[e];
      for (std::size_t j = 0; j < n_ + m_; ++j) {
        if (rows_[r][j] != 0) cost_[j] -= f * rows_[r][j];
      }
      objective_ += f * rhs_[r];
    }
    basis_[r] = e;
  }

  std::size_t m_;
  std::size_t n_;
  std::vector<std::vector<Rational>> rows_;
  std::vector<Rational> rhs_;
  std::vector<std::size_t> basis_;
  std::vector<Rational> cost_;
  Rational objective_;
};

}  // namespace

bool convex_combination_exists(const std::vector<Point>& points, const Point& x) {
  if (points.empty()) return false;
  const std::size_t d = x.size();
  const std::size_t n = points.size();
  std::vector<std::vector<Rational>> a(d + 1, std::vector<Rational>(n));
  std::vector<Rational> b(d + 1);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = points[j][i];
    b[i] = x[i];
  }
  for (std::size_t j = 0; j < n; ++j) a[d][j] = 1;
  b[d] = 1;
  return PhaseOneTableau(std::move(a), std::move(b)).solve() == 0;
}

}  // namespace mrep::detail
