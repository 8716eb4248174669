#include "document.hpp"

#include <mrep/error.hpp>

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace mrep::cli {

using Json = nlohmann::ordered_json;

namespace {

[[noreturn]] void parse_fail(const std::string& message) {
  throw Error(ErrorKind::ParseError, message);
}

const Json& field(const Json& obj, const char* name) {
  if (!obj.is_object() || !obj.contains(name)) parse_fail(std::string("missing field '") + name + "'");
  return obj.at(name);
}

std::size_t count_field(const Json& obj, const char* name) {
  const Json& v = field(obj, name);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0)) {
    parse_fail(std::string("field '") + name + "' must be a non-negative integer");
  }
  return v.get<std::size_t>();
}

Rational rational_from(const Json& v) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<long long>());
  parse_fail("rational must be a string or an integer, got " + v.dump());
}

Json rational_to(const Rational& r) { return to_string(r); }

Point point_from(const Json& v, std::size_t dim) {
  if (!v.is_array()) parse_fail("point must be an array");
  if (v.size() != dim) {
    parse_fail("point " + v.dump() + " does not have dimension " + std::to_string(dim));
  }
  Point out;
  out.reserve(v.size());
  for (const Json& x : v) out.push_back(rational_from(x));
  return out;
}

Json point_to(const Point& p) {
  Json out = Json::array();
  for (const Rational& x : p) out.push_back(rational_to(x));
  return out;
}

std::vector<Point> points_from(const Json& v, std::size_t dim) {
  if (!v.is_array()) parse_fail("expected an array of points");
  std::vector<Point> out;
  for (const Json& p : v) out.push_back(point_from(p, dim));
  return out;
}

BasisMatrix basis_from(const Json& v, std::size_t dim) {
  return BasisMatrix::from_columns(dim, points_from(v, dim));
}

Json basis_to(const BasisMatrix& b) {
  Json out = Json::array();
  for (const Point& c : b.columns()) out.push_back(point_to(c));
  return out;
}

BlockKind block_kind_from(const std::string& tag) {
  if (tag == "O") return BlockKind::Zero;
  if (tag == "J") return BlockKind::AllOnes;
  if (tag == "L") return BlockKind::LowerTriOnes;
  if (tag == "I") return BlockKind::Identity;
  if (tag == "dense") return BlockKind::Dense;
  parse_fail("unknown block tag '" + tag + "'");
}

Block block_from(const Json& v) {
  const Json& tag = field(v, "block");
  if (!tag.is_string()) parse_fail("block tag must be a string");
  const std::size_t rows = count_field(v, "rows");
  const std::size_t cols = count_field(v, "cols");
  switch (block_kind_from(tag.get<std::string>())) {
    case BlockKind::Zero: return Block::zero(rows, cols);
    case BlockKind::AllOnes: return Block::ones(rows, cols);
    case BlockKind::LowerTriOnes:
      if (rows != cols) parse_fail("L block must be square");
      return Block::lower_triangular(rows);
    case BlockKind::Identity:
      if (rows != cols) parse_fail("I block must be square");
      return Block::identity(rows);
    case BlockKind::Dense: {
      const Json& bits = field(v, "bits");
      if (!bits.is_array()) parse_fail("dense bits must be an array");
      std::vector<std::uint8_t> out;
      for (const Json& b : bits) {
        if (!b.is_number_integer() || (b.get<int>() != 0 && b.get<int>() != 1)) {
          parse_fail("dense bits must be 0 or 1");
        }
        out.push_back(static_cast<std::uint8_t>(b.get<int>()));
      }
      if (out.size() != rows * cols) parse_fail("dense block has the wrong number of bits");
      return Block::dense(rows, cols, std::move(out));
    }
  }
  parse_fail("unreachable block kind");
}

Json block_to(const Block& b) {
  Json out = Json::object();
  out["block"] = std::string(to_string(b.kind()));
  out["rows"] = b.rows();
  out["cols"] = b.cols();
  if (b.kind() == BlockKind::Dense) {
    Json bits = Json::array();
    for (std::uint8_t x : b.dense_bits()) bits.push_back(static_cast<int>(x));
    out["bits"] = std::move(bits);
  }
  return out;
}

std::vector<std::size_t> counts_from(const Json& v, const char* name) {
  if (!v.is_array()) parse_fail(std::string("'") + name + "' must be an array");
  std::vector<std::size_t> out;
  for (const Json& x : v) {
    if (!x.is_number_integer() || x.get<long long>() < 0) {
      parse_fail(std::string("'") + name + "' entries must be non-negative integers");
    }
    out.push_back(x.get<std::size_t>());
  }
  return out;
}

ExponentMatrix exponents_from(const Json& v) {
  auto heights = counts_from(field(v, "rowHeights"), "rowHeights");
  auto widths = counts_from(field(v, "colWidths"), "colWidths");
  const Json& blocks = field(v, "blocks");
  if (!blocks.is_array()) parse_fail("'blocks' must be an array");
  std::vector<Block> out;
  for (const Json& b : blocks) out.push_back(block_from(b));
  return ExponentMatrix(std::move(heights), std::move(widths), std::move(out));
}

Json exponents_to(const ExponentMatrix& e) {
  Json out = Json::object();
  out["rowHeights"] = e.row_heights();
  out["colWidths"] = e.col_widths();
  Json blocks = Json::array();
  for (const Block& b : e.blocks()) blocks.push_back(block_to(b));
  out["blocks"] = std::move(blocks);
  return out;
}

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    parse_fail(std::string("invalid JSON: ") + e.what());
  }
}

void check_header(const Json& doc, const char* expected_kind) {
  const Json& version = field(doc, "schemaVersion");
  if (!version.is_number_integer() || version.get<int>() != kSchemaVersion) {
    parse_fail("unsupported schemaVersion " + version.dump());
  }
  if (expected_kind != nullptr) {
    const Json& kind = field(doc, "kind");
    if (!kind.is_string() || kind.get<std::string>() != expected_kind) {
      parse_fail(std::string("expected kind '") + expected_kind + "'");
    }
  }
}

Representation representation_from(const Json& doc) {
  const Json& kind_field = field(doc, "kind");
  if (!kind_field.is_string()) parse_fail("'kind' must be a string");
  const std::string kind = kind_field.get<std::string>();
  const std::size_t dim = count_field(doc, "dim");

  if (kind == "vrep") return VRep(points_from(field(doc, "vertices"), dim));
  if (kind == "mrep") {
    return MRep(point_from(field(doc, "start"), dim), basis_from(field(doc, "basis"), dim),
                exponents_from(field(doc, "exponents")));
  }
  if (kind == "crep") {
    return CRep(point_from(field(doc, "start"), dim), basis_from(field(doc, "basis"), dim),
                point_from(field(doc, "end"), dim));
  }
  if (kind == "zrep") {
    return ZRep(point_from(field(doc, "center"), dim),
                basis_from(field(doc, "generators"), dim),
                exponents_from(field(doc, "exponents")));
  }
  parse_fail("unknown kind '" + kind + "'");
}

struct ToJson {
  Json& out;

  void operator()(const VRep& v) const {
    Json vertices = Json::array();
    for (const Point& p : v.points()) vertices.push_back(point_to(p));
    out["vertices"] = std::move(vertices);
  }
  void operator()(const MRep& m) const {
    out["start"] = point_to(m.start());
    out["basis"] = basis_to(m.basis());
    out["exponents"] = exponents_to(m.exponents());
  }
  void operator()(const CRep& c) const {
    out["start"] = point_to(c.start());
    out["basis"] = basis_to(c.basis());
    out["end"] = point_to(c.end());
  }
  void operator()(const ZRep& z) const {
    out["center"] = point_to(z.center());
    out["generators"] = basis_to(z.generators());
    out["exponents"] = exponents_to(z.exponents());
  }
};

}  // namespace

RepDocument parse_document(std::string_view text) {
  const Json doc = parse_json(text);
  check_header(doc, nullptr);
  try {
    return RepDocument{doc.at("schemaVersion").get<int>(), representation_from(doc)};
  } catch (const Error& e) {
    // A structurally invalid file is a parse failure whatever the library
    // calls it; an empty vertex list keeps its own kind.
    if (e.kind() == ErrorKind::ParseError || e.kind() == ErrorKind::EmptyInput) throw;
    parse_fail(e.what());
  } catch (const Json::exception& e) {
    parse_fail(e.what());
  }
}

std::string serialize_document(const RepDocument& doc) {
  Json out = Json::object();
  out["schemaVersion"] = doc.schema_version;
  out["kind"] = std::string(kind_name(doc.rep));
  out["dim"] = dimension(doc.rep);
  std::visit(ToJson{out}, doc.rep);
  return out.dump(2) + "\n";
}

Matrix parse_matrix_document(std::string_view text) {
  const Json doc = parse_json(text);
  check_header(doc, "matrix");
  const std::size_t rows = count_field(doc, "rows");
  const std::size_t cols = count_field(doc, "cols");
  const Json& entries = field(doc, "entries");
  if (!entries.is_array() || entries.size() != rows) parse_fail("matrix needs 'rows' entry rows");
  std::vector<Point> row_points;
  for (const Json& r : entries) row_points.push_back(point_from(r, cols));
  return Matrix::from_rows(row_points, cols);
}

std::string serialize_matrix_document(const Matrix& m) {
  Json out = Json::object();
  out["schemaVersion"] = kSchemaVersion;
  out["kind"] = "matrix";
  out["rows"] = m.rows();
  out["cols"] = m.cols();
  Json entries = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) entries.push_back(point_to(m.row(i)));
  out["entries"] = std::move(entries);
  return out.dump(2) + "\n";
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) parse_fail("cannot open '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::InvalidArgument, "cannot write '" + path.string() + "'");
  out << text;
}

}  // namespace mrep::cli
