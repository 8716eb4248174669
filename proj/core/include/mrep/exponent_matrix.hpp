#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string_view>
#include <vector>

namespace mrep {

/// Plain {0,1} matrix, row-major. Only used where a fully expanded
/// exponent pattern is needed (inspection, tests, file round trips).
struct BitMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::uint8_t> bits;

  BitMatrix() = default;
  BitMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), bits(r * c, 0) {}
  BitMatrix(std::size_t r, std::size_t c, std::vector<std::uint8_t> b);

  static BitMatrix identity(std::size_t n);
  static BitMatrix lower_triangular(std::size_t n);

  bool operator()(std::size_t i, std::size_t j) const { return bits[i * cols + j] != 0; }
  void set(std::size_t i, std::size_t j, bool value) { bits[i * cols + j] = value ? 1 : 0; }

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;
};

enum class BlockKind { Zero, AllOnes, LowerTriOnes, Identity, Dense };

std::string_view to_string(BlockKind kind);

/// One tile of an exponent matrix. Structured tiles are described by their
/// shape alone; dense tiles share their bits between copies.
class Block {
 public:
  static Block zero(std::size_t rows, std::size_t cols);
  static Block ones(std::size_t rows, std::size_t cols);
  static Block lower_triangular(std::size_t n);
  static Block identity(std::size_t n);
  static Block dense(std::size_t rows, std::size_t cols, std::vector<std::uint8_t> bits);

  BlockKind kind() const noexcept { return kind_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_structured() const noexcept { return kind_ != BlockKind::Dense; }

  bool at(std::size_t i, std::size_t j) const;

  /// 2 for a structured tile (tag + size), rows*cols for a dense one.
  std::size_t storage_size() const noexcept;

  /// Row-major bits; empty for structured tiles.
  const std::vector<std::uint8_t>& dense_bits() const;

  friend bool operator==(const Block& a, const Block& b);

 private:
  Block(BlockKind kind, std::size_t rows, std::size_t cols,
        std::shared_ptr<const std::vector<std::uint8_t>> bits = nullptr)
      : kind_(kind), rows_(rows), cols_(cols), bits_(std::move(bits)) {}

  BlockKind kind_ = BlockKind::Zero;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::shared_ptr<const std::vector<std::uint8_t>> bits_;
};

class ExponentMatrix;

/// A band of a block layout handed to ExponentMatrix::assemble: either an
/// existing exponent matrix or a constant fill.
struct ExponentCell {
  enum class Fill { Matrix, Zero, Ones };

  Fill fill = Fill::Zero;
  const ExponentMatrix* matrix = nullptr;

  static ExponentCell of(const ExponentMatrix& m) { return {Fill::Matrix, &m}; }
  static ExponentCell zero() { return {Fill::Zero, nullptr}; }
  static ExponentCell ones() { return {Fill::Ones, nullptr}; }
};

/// Block-structured exponent matrix E in {0,1}^{p x h}.
///
/// The matrix is a grid of tiles: every tile in grid row r has height
/// row_heights()[r] and every tile in grid column c has width
/// col_widths()[c]. Zero-sized grid rows and columns are dropped on
/// construction, so a layout such as [[E2, E2, O, O], [O, O, E1, O], ...]
/// degrades gracefully when an operand has no basis vectors.
class ExponentMatrix {
 public:
  /// The 0 x 0 matrix of a single-point representation.
  ExponentMatrix() = default;

  explicit ExponentMatrix(Block block);

  ExponentMatrix(std::vector<std::size_t> row_heights, std::vector<std::size_t> col_widths,
                 std::vector<Block> blocks);

  /// p x h matrix stored as a single dense tile.
  static ExponentMatrix from_bits(const BitMatrix& bits);

  /// [[a, O], [O, b]]
  static ExponentMatrix block_diagonal(const ExponentMatrix& a, const ExponentMatrix& b);

  /// Builds a block layout from bands. band_heights[r] and band_widths[c]
  /// give the size of each band; matrix cells must match them. Matrix cells
  /// keep their own tiling, fill cells are split to follow it.
  static ExponentMatrix assemble(const std::vector<std::vector<ExponentCell>>& bands,
                                 const std::vector<std::size_t>& band_heights,
                                 const std::vector<std::size_t>& band_widths);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  std::size_t grid_rows() const noexcept { return row_heights_.size(); }
  std::size_t grid_cols() const noexcept { return col_widths_.size(); }
  const std::vector<std::size_t>& row_heights() const noexcept { return row_heights_; }
  const std::vector<std::size_t>& col_widths() const noexcept { return col_widths_; }
  const std::vector<Block>& blocks() const noexcept { return blocks_; }
  const Block& block(std::size_t grid_row, std::size_t grid_col) const;

  bool at(std::size_t i, std::size_t j) const;

  BitMatrix materialize() const;

  std::size_t storage_size() const noexcept;

  /// True iff the matrix is a single LowerTriOnes tile (or empty).
  bool is_lower_triangular() const noexcept;

  /// For each column, the ascending list of factor indices with exponent 1.
  std::vector<std::vector<std::size_t>> column_factors() const;

  friend bool operator==(const ExponentMatrix&, const ExponentMatrix&) = default;

 private:
  std::vector<std::size_t> row_heights_;
  std::vector<std::size_t> col_widths_;
  std::vector<Block> blocks_;  // grid row-major
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
};

}  // namespace mrep
