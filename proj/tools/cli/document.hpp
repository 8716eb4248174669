#pragma once

#include <mrep/representations.hpp>

#include <filesystem>
#include <string>
#include <string_view>

namespace mrep::cli {

inline constexpr int kSchemaVersion = 1;

/// One representation per file:
///
///   {"schemaVersion": 1, "kind": "mrep", "dim": 2,
///    "start": ["1", "2"],
///    "basis": [["-2", "0"], ["1", "-2"]],          // columns
///    "exponents": {"rowHeights": [2], "colWidths": [2],
///                  "blocks": [{"block": "L", "rows": 2, "cols": 2}]}}
///
/// vrep carries "vertices", crep "start"/"basis"/"end", zrep
/// "center"/"generators"/"exponents". Rationals are strings ("3", "-1/2");
/// JSON integers and plain decimals ("0.5") are accepted on input.
struct RepDocument {
  int schema_version = kSchemaVersion;
  Representation rep;

  friend bool operator==(const RepDocument&, const RepDocument&) = default;
};

/// Throws Error(ParseError) for malformed text or schema violations,
/// including shapes rejected by the representation constructors. An empty
/// vertex list raises EmptyInput.
RepDocument parse_document(std::string_view text);
std::string serialize_document(const RepDocument& doc);

/// {"schemaVersion": 1, "kind": "matrix", "rows": m, "cols": n,
///  "entries": [[...], ...]}  (row-major)
Matrix parse_matrix_document(std::string_view text);
std::string serialize_matrix_document(const Matrix& m);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace mrep::cli
