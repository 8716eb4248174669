#include "app.hpp"

#include "document.hpp"
#include "svg.hpp"

#include <mrep/error.hpp>
#include <mrep/ops.hpp>
#include <mrep/oracle.hpp>
#include <mrep/zonotope.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <ostream>
#include <sstream>

namespace mrep::cli {

namespace {

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError:
    case ErrorKind::EmptyInput:
    case ErrorKind::InvalidArgument: return kParseError;
    case ErrorKind::DimensionMismatch:
    case ErrorKind::KindMismatch:
    case ErrorKind::NotChainForm:
    case ErrorKind::AlphaOutOfRange: return kDimensionError;
    case ErrorKind::CapExceeded: return kCapExceeded;
  }
  return kParseError;
}

[[noreturn]] void kind_mismatch(const Representation& rep, std::string_view wanted) {
  throw Error(ErrorKind::KindMismatch,
              std::string(kind_name(rep)) + " operand cannot be used as " + std::string(wanted));
}

Representation load(const std::string& path) { return parse_document(read_text_file(path)).rep; }

MRep as_mrep(const Representation& rep) {
  if (const auto* v = std::get_if<VRep>(&rep)) return chain_from_points(*v);
  if (const auto* m = std::get_if<MRep>(&rep)) return *m;
  if (const auto* c = std::get_if<CRep>(&rep)) return to_mrep(*c);
  kind_mismatch(rep, "an mrep");
}

CRep as_crep(const Representation& rep) {
  if (const auto* v = std::get_if<VRep>(&rep)) return to_crep(chain_from_points(*v));
  if (const auto* m = std::get_if<MRep>(&rep)) {
    if (!m->is_chain_form()) kind_mismatch(rep, "a crep (not in chain form)");
    return to_crep(*m);
  }
  if (const auto* c = std::get_if<CRep>(&rep)) return *c;
  kind_mismatch(rep, "a crep");
}

ZRep as_zrep(const Representation& rep) {
  if (const auto* z = std::get_if<ZRep>(&rep)) return *z;
  kind_mismatch(rep, "a zrep");
}

std::size_t basis_count(const Representation& rep) {
  struct Visitor {
    std::size_t operator()(const VRep&) const { return 0; }
    std::size_t operator()(const MRep& m) const { return m.basis_count(); }
    std::size_t operator()(const CRep& c) const { return c.basis_count(); }
    std::size_t operator()(const ZRep& z) const { return z.generator_count(); }
  };
  return std::visit(Visitor{}, rep);
}

std::size_t factor_count(const Representation& rep) {
  struct Visitor {
    std::size_t operator()(const VRep&) const { return 0; }
    std::size_t operator()(const MRep& m) const { return m.factor_count(); }
    std::size_t operator()(const CRep& c) const { return c.basis_count(); }
    std::size_t operator()(const ZRep& z) const { return z.factor_count(); }
  };
  return std::visit(Visitor{}, rep);
}

std::string block_inventory(const ExponentMatrix& e) {
  std::ostringstream s;
  s << e.grid_rows() << 'x' << e.grid_cols() << " grid";
  for (const Block& b : e.blocks()) {
    s << ' ' << to_string(b.kind()) << '(' << b.rows() << 'x' << b.cols() << ')';
  }
  return s.str();
}

void emit(const std::string& text, const std::string& output, std::ostream& out) {
  if (output.empty()) {
    out << text;
  } else {
    write_text_file(output, text);
  }
}

std::vector<Rational> parse_alpha(const std::string& text) {
  std::vector<Rational> alpha;
  if (text.empty()) return alpha;
  std::size_t begin = 0;
  while (true) {
    const std::size_t comma = text.find(',', begin);
    alpha.push_back(parse_rational(std::string_view(text).substr(
        begin, comma == std::string::npos ? std::string::npos : comma - begin)));
    if (comma == std::string::npos) break;
    begin = comma + 1;
  }
  return alpha;
}

std::string point_json(const Point& p) {
  std::string s = "[";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i > 0) s += ", ";
    s += "\"" + to_string(p[i]) + "\"";
  }
  return s + "]";
}

void report(const Representation& rep, std::ostream& err) {
  err << "h=" << basis_count(rep) << " size=" << representation_size(rep) << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact M-, C- and Z-representations of convex polytopes", "mrep"};
  app.require_subcommand(1);

  Limits limits;
  app.add_option("--cap-p", limits.max_factors, "Largest factor count p enumerated as 2^p corners")
      ->capture_default_str();
  app.add_option("--cap-points", limits.max_oracle_points,
                 "Largest distinct point count handed to the hull oracle")
      ->capture_default_str();
  app.add_option("--cap-zonotope", limits.max_zonotope_points,
                 "Largest point count for zonotope detection")
      ->capture_default_str();

  std::string input;
  std::string input_b;
  std::string output;
  std::string matrix_path;
  std::string rep_kind;
  std::string alpha_text;
  bool filter_hull = false;

  auto* chain = app.add_subcommand("chain", "Chain form of a vertex list");
  chain->add_option("input", input, "vrep file")->required();
  chain->add_option("-o,--output", output, "Output file (default stdout)");

  auto* map = app.add_subcommand("map", "Apply a linear map");
  map->add_option("--matrix", matrix_path, "matrix file")->required();
  map->add_option("input", input, "representation file")->required();
  map->add_option("-o,--output", output, "Output file (default stdout)");

  auto* minkowski = app.add_subcommand("minkowski", "Minkowski sum of two representations");
  minkowski->add_option("a", input, "first operand")->required();
  minkowski->add_option("b", input_b, "second operand")->required();
  minkowski->add_option("-o,--output", output, "Output file (default stdout)");

  auto* convhull = app.add_subcommand("convhull", "Convex hull of two representations");
  convhull->add_option("a", input, "first operand")->required();
  convhull->add_option("b", input_b, "second operand")->required();
  convhull->add_option("--rep", rep_kind, "Result representation: m, c or z")
      ->check(CLI::IsMember({"m", "c", "z"}));
  convhull->add_option("-o,--output", output, "Output file (default stdout)");

  auto* vertices = app.add_subcommand("vertices", "Candidate vertices as a vrep");
  vertices->add_option("input", input, "representation file")->required();
  vertices->add_flag("--filter-hull", filter_hull, "Keep hull vertices only");
  vertices->add_option("-o,--output", output, "Output file (default stdout)");

  auto* reduce_cmd = app.add_subcommand("reduce", "Zonotope-aware M-representation of a point set");
  reduce_cmd->add_option("input", input, "representation file")->required();
  reduce_cmd->add_option("-o,--output", output, "Output file (default stdout)");

  auto* equal = app.add_subcommand("equal", "Exit 0 iff both files describe the same set");
  equal->add_option("a", input, "first operand")->required();
  equal->add_option("b", input_b, "second operand")->required();

  auto* size = app.add_subcommand("size", "Report representation size");
  size->add_option("input", input, "representation file")->required();

  auto* plot = app.add_subcommand("plot", "Render a 2-D polytope as SVG");
  plot->add_option("input", input, "representation file")->required();
  plot->add_option("-o,--output", output, "SVG file")->required();

  auto* eval = app.add_subcommand("eval", "Evaluate a representation at a factor vector");
  eval->add_option("input", input, "representation file")->required();
  eval->add_option("--alpha", alpha_text, "Comma-separated rationals")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kParseError;
  }

  try {
    if (chain->parsed()) {
      const Representation rep = load(input);
      const auto* v = std::get_if<VRep>(&rep);
      if (v == nullptr) kind_mismatch(rep, "a vertex list");
      const MRep result = chain_from_points(*v);
      emit(serialize_document({kSchemaVersion, result}), output, out);
      report(result, err);
    } else if (map->parsed()) {
      const Matrix m = parse_matrix_document(read_text_file(matrix_path));
      const Representation rep = load(input);
      const Representation result =
          std::visit([&](const auto& r) -> Representation { return linear_map(m, r); }, rep);
      emit(serialize_document({kSchemaVersion, result}), output, out);
    } else if (minkowski->parsed()) {
      const Representation a = load(input);
      const Representation b = load(input_b);
      Representation result = std::holds_alternative<ZRep>(a) || std::holds_alternative<ZRep>(b)
                                  ? Representation(minkowski_sum(as_zrep(a), as_zrep(b)))
                                  : Representation(minkowski_sum(as_mrep(a), as_mrep(b)));
      emit(serialize_document({kSchemaVersion, result}), output, out);
      report(result, err);
    } else if (convhull->parsed()) {
      const Representation a = load(input);
      const Representation b = load(input_b);
      if (rep_kind.empty()) {
        if (std::holds_alternative<ZRep>(a) && std::holds_alternative<ZRep>(b)) {
          rep_kind = "z";
        } else if (std::holds_alternative<CRep>(a) && std::holds_alternative<CRep>(b)) {
          rep_kind = "c";
        } else {
          rep_kind = "m";
        }
      }
      Representation result = rep_kind == "z"   ? Representation(convex_hull(as_zrep(a), as_zrep(b)))
                              : rep_kind == "c" ? Representation(convex_hull(as_crep(a), as_crep(b)))
                                                : Representation(convex_hull(as_mrep(a), as_mrep(b)));
      emit(serialize_document({kSchemaVersion, result}), output, out);
      report(result, err);
    } else if (vertices->parsed()) {
      VRep points = candidate_vertices(load(input), limits);
      if (filter_hull) points = VRep(hull_vertices(points, limits).vertices);
      emit(serialize_document({kSchemaVersion, points}), output, out);
      err << "points=" << points.size() << '\n';
    } else if (reduce_cmd->parsed()) {
      const Reduction r = reduce(candidate_vertices(load(input), limits), limits);
      emit(serialize_document({kSchemaVersion, r.rep}), output, out);
      err << "h=" << r.rep.basis_count() << " branch=" << (r.zonotope ? "zonotope" : "chain")
          << '\n';
    } else if (equal->parsed()) {
      const bool same = sets_equal(load(input), load(input_b), limits);
      out << (same ? "equal" : "not equal") << '\n';
      return same ? kOk : kNotEqual;
    } else if (size->parsed()) {
      const Representation rep = load(input);
      out << "kind: " << kind_name(rep) << '\n'
          << "dim: " << dimension(rep) << '\n'
          << "h: " << basis_count(rep) << '\n'
          << "p: " << factor_count(rep) << '\n'
          << "scalars: " << representation_size(rep) << '\n';
      if (const auto* m = std::get_if<MRep>(&rep)) {
        out << "blocks: " << block_inventory(m->exponents()) << '\n';
      } else if (const auto* z = std::get_if<ZRep>(&rep)) {
        out << "blocks: " << block_inventory(z->exponents()) << '\n';
      } else if (std::holds_alternative<CRep>(rep)) {
        out << "blocks: implied L(" << basis_count(rep) << 'x' << basis_count(rep) << ")\n";
      }
    } else if (plot->parsed()) {
      const Representation rep = load(input);
      if (dimension(rep) != 2) {
        throw Error(ErrorKind::DimensionMismatch,
                    "plot needs a 2-D polytope, got dimension " + std::to_string(dimension(rep)));
      }
      const auto hull = hull_vertices(candidate_vertices(rep, limits), limits).vertices;
      write_text_file(output, render_polygon_svg(hull));
    } else if (eval->parsed()) {
      const Representation rep = load(input);
      const auto alpha = parse_alpha(alpha_text);
      Point x;
      if (const auto* m = std::get_if<MRep>(&rep)) {
        x = evaluate(*m, alpha);
      } else if (const auto* c = std::get_if<CRep>(&rep)) {
        x = evaluate(*c, alpha);
      } else if (const auto* z = std::get_if<ZRep>(&rep)) {
        x = evaluate(*z, alpha);
      } else {
        kind_mismatch(rep, "a generator representation");
      }
      out << point_json(x) << '\n';
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.kind());
  }
  return kOk;
}

}  // namespace mrep::cli
