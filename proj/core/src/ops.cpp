#include "mrep/ops.hpp"

#include "mrep/error.hpp"
#include "mrep/oracle.hpp"

#include <bit>
#include <cstdint>
#include <string>

namespace mrep {

namespace {

void require_alpha(std::size_t factors, std::span<const Rational> alpha, const Rational& lo) {
  if (alpha.size() != factors) {
    throw Error(ErrorKind::DimensionMismatch, "expected " + std::to_string(factors) +
                                                  " factors, got " + std::to_string(alpha.size()));
  }
  for (std::size_t k = 0; k < alpha.size(); ++k) {
    if (alpha[k] < lo || alpha[k] > 1) {
      throw Error(ErrorKind::AlphaOutOfRange, "factor " + std::to_string(k) + " = " +
                                                  to_string(alpha[k]) + " outside [" +
                                                  to_string(lo) + ", 1]");
    }
  }
}

void require_same_dim(std::size_t a, std::size_t b, std::string_view op) {
  if (a != b) {
    throw Error(ErrorKind::DimensionMismatch, std::string(op) + " of polytopes in dimensions " +
                                                  std::to_string(a) + " and " + std::to_string(b));
  }
}

void require_chain(const MRep& rep) {
  if (!rep.is_chain_form()) {
    throw Error(ErrorKind::NotChainForm, "exponent matrix is not a single lower triangular block");
  }
}

void require_factor_cap(std::size_t factors, const Limits& limits) {
  if (factors > limits.max_factors || factors >= 63) {
    throw Error(ErrorKind::CapExceeded, "enumerating 2^" + std::to_string(factors) +
                                            " factor corners exceeds the cap of 2^" +
                                            std::to_string(limits.max_factors));
  }
}

// s + sum_i monomial_i(alpha) * B(:,i)
Point evaluate_generic(const Point& origin, const BasisMatrix& basis,
                       const ExponentMatrix& exponents, std::span<const Rational> alpha) {
  Point out = origin;
  if (exponents.is_lower_triangular()) {
    // Column i carries prod_{k >= i} alpha_k; accumulate it from the right.
    Rational monomial = 1;
    for (std::size_t i = basis.cols(); i-- > 0;) {
      monomial *= alpha[i];
      if (monomial == 0) break;
      basis.accumulate_column(i, monomial, out);
    }
    return out;
  }
  const auto factors = exponents.column_factors();
  for (std::size_t i = 0; i < basis.cols(); ++i) {
    Rational monomial = 1;
    for (std::size_t k : factors[i]) {
      monomial *= alpha[k];
      if (monomial == 0) break;
    }
    basis.accumulate_column(i, monomial, out);
  }
  return out;
}

std::vector<std::uint64_t> factor_masks(const ExponentMatrix& exponents) {
  std::vector<std::uint64_t> masks;
  for (const auto& factors : exponents.column_factors()) {
    std::uint64_t m = 0;
    for (std::size_t k : factors) m |= std::uint64_t{1} << k;
    masks.push_back(m);
  }
  return masks;
}

// All corners of the factor box. With signed = false a corner bit set means
// alpha_k = 1 (else 0); with signed = true it means alpha_k = -1 (else 1).
std::vector<Point> enumerate_corners(const Point& origin, const BasisMatrix& basis,
                                     const ExponentMatrix& exponents, bool signed_factors,
                                     const Limits& limits) {
  const std::size_t p = exponents.rows();
  require_factor_cap(p, limits);
  const auto masks = factor_masks(exponents);
  const auto columns = basis.columns();
  const std::size_t d = origin.size();

  std::vector<Point> points;
  points.reserve(std::size_t{1} << p);
  for (std::uint64_t corner = 0; corner < (std::uint64_t{1} << p); ++corner) {
    Point x = origin;
    for (std::size_t i = 0; i < columns.size(); ++i) {
      if (signed_factors) {
        const bool negative = std::popcount(masks[i] & corner) % 2 == 1;
        for (std::size_t r = 0; r < d; ++r) {
          if (negative) {
            x[r] -= columns[i][r];
          } else {
            x[r] += columns[i][r];
          }
        }
      } else if ((masks[i] & ~corner) == 0) {
        for (std::size_t r = 0; r < d; ++r) x[r] += columns[i][r];
      }
    }
    points.push_back(std::move(x));
  }
  sort_unique(points);
  return points;
}

}  // namespace

Point evaluate(const MRep& rep, std::span<const Rational> alpha) {
  require_alpha(rep.factor_count(), alpha, Rational(0));
  return evaluate_generic(rep.start(), rep.basis(), rep.exponents(), alpha);
}

Point evaluate(const CRep& rep, std::span<const Rational> alpha) {
  return evaluate(to_mrep(rep), alpha);
}

Point evaluate(const ZRep& rep, std::span<const Rational> alpha) {
  require_alpha(rep.factor_count(), alpha, Rational(-1));
  return evaluate_generic(rep.center(), rep.generators(), rep.exponents(), alpha);
}

MRep chain_from_points(const VRep& points) {
  const auto& v = points.points();
  const std::size_t n = v.size();
  if (n == 1) return MRep(v.front());
  std::vector<Point> columns;
  columns.reserve(n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) columns.push_back(v[i] - v[i + 1]);
  return MRep(v.back(), BasisMatrix::from_columns(points.dim(), columns),
              ExponentMatrix(Block::lower_triangular(n - 1)));
}

VRep chain_vertices(const MRep& chain) {
  require_chain(chain);
  const std::size_t h = chain.basis_count();
  std::vector<Point> v(h + 1);
  v[h] = chain.start();
  for (std::size_t i = h; i-- > 0;) {
    v[i] = v[i + 1];
    chain.basis().accumulate_column(i, Rational(1), v[i]);
  }
  return VRep(std::move(v));
}

std::vector<Rational> canonical_alpha(std::span<const Rational> alpha, const MRep& chain) {
  require_chain(chain);
  require_alpha(chain.factor_count(), alpha, Rational(0));
  std::vector<Rational> out(alpha.begin(), alpha.end());
  std::size_t last_zero = 0;
  for (std::size_t k = 0; k < out.size(); ++k) {
    if (out[k] == 0) last_zero = k;
  }
  for (std::size_t j = 0; j < last_zero; ++j) out[j] = 0;
  return out;
}

VRep candidate_vertices(const MRep& rep, const Limits& limits) {
  if (rep.is_chain_form()) {
    auto points = chain_vertices(rep).points();
    sort_unique(points);
    return VRep(std::move(points));
  }
  return VRep(enumerate_corners(rep.start(), rep.basis(), rep.exponents(), false, limits));
}

VRep candidate_vertices(const CRep& rep, const Limits& limits) {
  return candidate_vertices(to_mrep(rep), limits);
}

VRep candidate_vertices(const ZRep& rep, const Limits& limits) {
  return VRep(enumerate_corners(rep.center(), rep.generators(), rep.exponents(), true, limits));
}

VRep candidate_vertices(const VRep& rep, const Limits&) {
  auto points = rep.points();
  sort_unique(points);
  return VRep(std::move(points));
}

VRep candidate_vertices(const Representation& rep, const Limits& limits) {
  return std::visit([&](const auto& r) { return candidate_vertices(r, limits); }, rep);
}

MRep linear_map(const Matrix& m, const MRep& rep) {
  require_same_dim(m.cols(), rep.dim(), "linear map");
  return MRep(m * rep.start(), rep.basis().mapped(m), rep.exponents());
}

CRep linear_map(const Matrix& m, const CRep& rep) {
  require_same_dim(m.cols(), rep.dim(), "linear map");
  return CRep(m * rep.start(), rep.basis().mapped(m), m * rep.end());
}

ZRep linear_map(const Matrix& m, const ZRep& rep) {
  require_same_dim(m.cols(), rep.dim(), "linear map");
  return ZRep(m * rep.center(), rep.generators().mapped(m), rep.exponents());
}

VRep linear_map(const Matrix& m, const VRep& rep) {
  require_same_dim(m.cols(), rep.dim(), "linear map");
  std::vector<Point> out;
  out.reserve(rep.size());
  for (const Point& p : rep.points()) out.push_back(m * p);
  return VRep(std::move(out));
}

MRep minkowski_sum(const MRep& a, const MRep& b) {
  require_same_dim(a.dim(), b.dim(), "Minkowski sum");
  return MRep(a.start() + b.start(), a.basis().concat(b.basis()),
              ExponentMatrix::block_diagonal(a.exponents(), b.exponents()));
}

ZRep minkowski_sum(const ZRep& a, const ZRep& b) {
  require_same_dim(a.dim(), b.dim(), "Minkowski sum");
  return ZRep(a.center() + b.center(), a.generators().concat(b.generators()),
              ExponentMatrix::block_diagonal(a.exponents(), b.exponents()));
}

MRep convex_hull(const MRep& a, const MRep& b) {
  require_same_dim(a.dim(), b.dim(), "convex hull");
  const bool swap = a.basis_count() < b.basis_count();
  const MRep& p1 = swap ? b : a;
  const MRep& p2 = swap ? a : b;
  const std::size_t d = p1.dim();

  BasisMatrix link = BasisMatrix::from_columns(d, {p1.start() - p2.start()});
  BasisMatrix basis =
      p2.basis().concat(p2.basis().negated()).concat(p1.basis()).concat(link);

  using C = ExponentCell;
  const ExponentMatrix& e1 = p1.exponents();
  const ExponentMatrix& e2 = p2.exponents();
  ExponentMatrix exponents = ExponentMatrix::assemble(
      {{C::of(e2), C::of(e2), C::zero(), C::zero()},
       {C::zero(), C::zero(), C::of(e1), C::zero()},
       {C::zero(), C::ones(), C::ones(), C::ones()}},
      {e2.rows(), e1.rows(), 1}, {e2.cols(), e2.cols(), e1.cols(), 1});

  return MRep(p2.start(), std::move(basis), std::move(exponents));
}

CRep convex_hull(const CRep& a, const CRep& b) {
  require_same_dim(a.dim(), b.dim(), "convex hull");
  // The chain is walked from the last column to the first, so P1's columns
  // go last and P2's first.
  BasisMatrix link = BasisMatrix::from_columns(a.dim(), {b.start() - a.end()});
  return CRep(a.start(), b.basis().concat(link).concat(a.basis()), b.end(), CRep::Trusted{});
}

ZRep convex_hull(const ZRep& a, const ZRep& b) {
  require_same_dim(a.dim(), b.dim(), "convex hull");
  const Rational half(1, 2);
  BasisMatrix shift = BasisMatrix::from_columns(a.dim(), {a.center() - b.center()});
  BasisMatrix generators = shift.concat(a.generators())
                               .concat(a.generators())
                               .concat(b.generators())
                               .concat(b.generators().negated())
                               .scaled(half);

  using C = ExponentCell;
  const ExponentMatrix& e1 = a.exponents();
  const ExponentMatrix& e2 = b.exponents();
  ExponentMatrix exponents = ExponentMatrix::assemble(
      {{C::zero(), C::of(e1), C::of(e1), C::zero(), C::zero()},
       {C::zero(), C::zero(), C::zero(), C::of(e2), C::of(e2)},
       {C::ones(), C::zero(), C::ones(), C::zero(), C::ones()}},
      {e1.rows(), e2.rows(), 1}, {1, e1.cols(), e1.cols(), e2.cols(), e2.cols()});

  return ZRep(half * (a.center() + b.center()), std::move(generators), std::move(exponents));
}

MRep to_chain_form(const MRep& rep, bool filter_hull, const Limits& limits) {
  VRep candidates = candidate_vertices(rep, limits);
  if (filter_hull) candidates = VRep(hull_vertices(candidates, limits).vertices);
  return chain_from_points(candidates);
}

CRep to_crep(const MRep& chain) {
  require_chain(chain);
  return CRep(chain.start(), chain.basis());
}

MRep to_mrep(const CRep& rep) {
  const std::size_t h = rep.basis_count();
  if (h == 0) return MRep(rep.start());
  return MRep(rep.start(), rep.basis(), ExponentMatrix(Block::lower_triangular(h)));
}

std::size_t representation_size(const MRep& rep) {
  return (rep.basis_count() + 1) * rep.dim() + rep.exponents().storage_size();
}

std::size_t representation_size(const CRep& rep) { return (rep.basis_count() + 2) * rep.dim(); }

std::size_t representation_size(const ZRep& rep) {
  return (rep.generator_count() + 1) * rep.dim() + rep.exponents().storage_size();
}

std::size_t representation_size(const VRep& rep) { return rep.size() * rep.dim(); }

std::size_t representation_size(const Representation& rep) {
  return std::visit([](const auto& r) { return representation_size(r); }, rep);
}

}  // namespace mrep
