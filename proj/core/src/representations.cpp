#include "mrep/representations.hpp"

#include "mrep/error.hpp"

#include <string>

namespace mrep {

namespace {

void check_generator_shapes(std::size_t dim, const BasisMatrix& basis,
                            const ExponentMatrix& exponents, std::string_view what) {
  if (basis.rows() != dim) {
    throw Error(ErrorKind::DimensionMismatch,
                std::string(what) + " has " + std::to_string(basis.rows()) +
                    "-dimensional columns but a " + std::to_string(dim) + "-dimensional origin");
  }
  if (basis.cols() != exponents.cols()) {
    throw Error(ErrorKind::DimensionMismatch,
                std::string(what) + " has " + std::to_string(basis.cols()) + " columns but " +
                    std::to_string(exponents.cols()) + " exponent columns");
  }
}

}  // namespace

VRep::VRep(std::vector<Point> points) : points_(std::move(points)) {
  if (points_.empty()) throw Error(ErrorKind::EmptyInput, "vertex list is empty");
  dim_ = points_.front().size();
  for (std::size_t i = 1; i < points_.size(); ++i) {
    if (points_[i].size() != dim_) {
      throw Error(ErrorKind::DimensionMismatch, "point " + std::to_string(i) + " has dimension " +
                                                    std::to_string(points_[i].size()) +
                                                    ", expected " + std::to_string(dim_));
    }
  }
}

MRep::MRep(Point start) : start_(std::move(start)), basis_(start_.size()) {}

MRep::MRep(Point start, BasisMatrix basis, ExponentMatrix exponents)
    : start_(std::move(start)), basis_(std::move(basis)), exponents_(std::move(exponents)) {
  check_generator_shapes(start_.size(), basis_, exponents_, "basis");
}

CRep::CRep(Point start, BasisMatrix basis)
    : start_(std::move(start)), basis_(std::move(basis)) {
  if (basis_.rows() != start_.size()) {
    throw Error(ErrorKind::DimensionMismatch, "basis and start point dimensions differ");
  }
  end_ = start_ + basis_.column_sum();
}

CRep::CRep(Point start, BasisMatrix basis, Point end) : CRep(std::move(start), std::move(basis)) {
  if (end.size() != end_.size()) {
    throw Error(ErrorKind::DimensionMismatch, "end point dimension differs from start point");
  }
  if (end != end_) {
    throw Error(ErrorKind::InvalidArgument,
                "end point must equal start plus the sum of the basis vectors");
  }
}

ZRep::ZRep(Point center) : center_(std::move(center)), generators_(center_.size()) {}

ZRep::ZRep(Point center, BasisMatrix generators, ExponentMatrix exponents)
    : center_(std::move(center)),
      generators_(std::move(generators)),
      exponents_(std::move(exponents)) {
  check_generator_shapes(center_.size(), generators_, exponents_, "generator matrix");
}

bool ZRep::is_zonotope() const {
  return exponents_.materialize() == BitMatrix::identity(generator_count());
}

SegmentList::SegmentList(std::vector<Segment> segments) : segments_(std::move(segments)) {
  for (std::size_t i = 0; i < segments_.size(); ++i) {
    const Segment& s = segments_[i];
    if (s.from.size() != s.to.size() || s.from.size() != segments_.front().from.size()) {
      throw Error(ErrorKind::DimensionMismatch,
                  "segment " + std::to_string(i) + " does not match the common dimension");
    }
    if (s.from == s.to) {
      throw Error(ErrorKind::InvalidArgument,
                  "segment " + std::to_string(i) + " has zero length");
    }
  }
}

std::string_view kind_name(const Representation& rep) {
  struct Visitor {
    std::string_view operator()(const VRep&) const { return "vrep"; }
    std::string_view operator()(const MRep&) const { return "mrep"; }
    std::string_view operator()(const CRep&) const { return "crep"; }
    std::string_view operator()(const ZRep&) const { return "zrep"; }
  };
  return std::visit(Visitor{}, rep);
}

std::size_t dimension(const Representation& rep) {
  return std::visit([](const auto& r) { return r.dim(); }, rep);
}

}  // namespace mrep
