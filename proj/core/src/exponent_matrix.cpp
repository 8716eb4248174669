#include "mrep/exponent_matrix.hpp"

#include "mrep/error.hpp"

#include <numeric>
#include <string>

namespace mrep {

BitMatrix::BitMatrix(std::size_t r, std::size_t c, std::vector<std::uint8_t> b)
    : rows(r), cols(c), bits(std::move(b)) {
  if (bits.size() != rows * cols) {
    throw Error(ErrorKind::DimensionMismatch, "bit matrix " + std::to_string(rows) + "x" +
                                                  std::to_string(cols) + " given " +
                                                  std::to_string(bits.size()) + " entries");
  }
  for (auto& bit : bits) {
    if (bit > 1) throw Error(ErrorKind::InvalidArgument, "exponent entries must be 0 or 1");
  }
}

BitMatrix BitMatrix::identity(std::size_t n) {
  BitMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
  return m;
}

BitMatrix BitMatrix::lower_triangular(std::size_t n) {
  BitMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j <= i; ++j) m.set(i, j, true);
  }
  return m;
}

std::string_view to_string(BlockKind kind) {
  switch (kind) {
    case BlockKind::Zero: return "O";
    case BlockKind::AllOnes: return "J";
    case BlockKind::LowerTriOnes: return "L";
    case BlockKind::Identity: return "I";
    case BlockKind::Dense: return "dense";
  }
  return "?";
}

Block Block::zero(std::size_t rows, std::size_t cols) { return Block(BlockKind::Zero, rows, cols); }

Block Block::ones(std::size_t rows, std::size_t cols) {
  return Block(BlockKind::AllOnes, rows, cols);
}

Block Block::lower_triangular(std::size_t n) { return Block(BlockKind::LowerTriOnes, n, n); }

Block Block::identity(std::size_t n) { return Block(BlockKind::Identity, n, n); }

Block Block::dense(std::size_t rows, std::size_t cols, std::vector<std::uint8_t> bits) {
  BitMatrix checked(rows, cols, std::move(bits));
  return Block(BlockKind::Dense, rows, cols,
               std::make_shared<const std::vector<std::uint8_t>>(std::move(checked.bits)));
}

bool Block::at(std::size_t i, std::size_t j) const {
  switch (kind_) {
    case BlockKind::Zero: return false;
    case BlockKind::AllOnes: return true;
    case BlockKind::LowerTriOnes: return i >= j;
    case BlockKind::Identity: return i == j;
    case BlockKind::Dense: return (*bits_)[i * cols_ + j] != 0;
  }
  return false;
}

std::size_t Block::storage_size() const noexcept {
  return kind_ == BlockKind::Dense ? rows_ * cols_ : 2;
}

const std::vector<std::uint8_t>& Block::dense_bits() const {
  static const std::vector<std::uint8_t> none;
  return bits_ ? *bits_ : none;
}

bool operator==(const Block& a, const Block& b) {
  if (a.kind_ != b.kind_ || a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
  if (a.kind_ != BlockKind::Dense) return true;
  return a.bits_ == b.bits_ || *a.bits_ == *b.bits_;
}

ExponentMatrix::ExponentMatrix(Block block)
    : ExponentMatrix({block.rows()}, {block.cols()}, {block}) {}

ExponentMatrix::ExponentMatrix(std::vector<std::size_t> row_heights,
                               std::vector<std::size_t> col_widths, std::vector<Block> blocks) {
  const std::size_t gr = row_heights.size();
  const std::size_t gc = col_widths.size();
  if (blocks.size() != gr * gc) {
    throw Error(ErrorKind::DimensionMismatch, "block grid " + std::to_string(gr) + "x" +
                                                  std::to_string(gc) + " given " +
                                                  std::to_string(blocks.size()) + " blocks");
  }
  for (std::size_t r = 0; r < gr; ++r) {
    for (std::size_t c = 0; c < gc; ++c) {
      const Block& b = blocks[r * gc + c];
      if (b.rows() != row_heights[r] || b.cols() != col_widths[c]) {
        throw Error(ErrorKind::DimensionMismatch,
                    "block (" + std::to_string(r) + "," + std::to_string(c) + ") is " +
                        std::to_string(b.rows()) + "x" + std::to_string(b.cols()) +
                        ", grid expects " + std::to_string(row_heights[r]) + "x" +
                        std::to_string(col_widths[c]));
      }
    }
  }

  for (std::size_t r = 0; r < gr; ++r) {
    if (row_heights[r] == 0) continue;
    row_heights_.push_back(row_heights[r]);
    for (std::size_t c = 0; c < gc; ++c) {
      if (col_widths[c] != 0) blocks_.push_back(std::move(blocks[r * gc + c]));
    }
  }
  for (std::size_t w : col_widths) {
    if (w != 0) col_widths_.push_back(w);
  }
  if (row_heights_.empty()) blocks_.clear();
  rows_ = std::accumulate(row_heights_.begin(), row_heights_.end(), std::size_t{0});
  cols_ = std::accumulate(col_widths_.begin(), col_widths_.end(), std::size_t{0});
}

ExponentMatrix ExponentMatrix::from_bits(const BitMatrix& bits) {
  if (bits.rows == 0 || bits.cols == 0) {
    return ExponentMatrix({bits.rows}, {bits.cols}, {Block::zero(bits.rows, bits.cols)});
  }
  return ExponentMatrix(Block::dense(bits.rows, bits.cols, bits.bits));
}

ExponentMatrix ExponentMatrix::block_diagonal(const ExponentMatrix& a, const ExponentMatrix& b) {
  return assemble({{ExponentCell::of(a), ExponentCell::zero()},
                   {ExponentCell::zero(), ExponentCell::of(b)}},
                  {a.rows(), b.rows()}, {a.cols(), b.cols()});
}

namespace {

// Tiling of one band: taken from any matrix cell in it, or the band itself.
std::vector<std::size_t> band_partition(std::size_t band_size,
                                        const std::vector<const ExponentMatrix*>& members,
                                        bool along_rows) {
  std::vector<std::size_t> partition;
  bool found = false;
  for (const ExponentMatrix* m : members) {
    const auto& p = along_rows ? m->row_heights() : m->col_widths();
    const std::size_t extent = along_rows ? m->rows() : m->cols();
    if (extent != band_size) {
      throw Error(ErrorKind::DimensionMismatch,
                  "exponent block of extent " + std::to_string(extent) +
                      " placed in a band of size " + std::to_string(band_size));
    }
    if (!found) {
      partition = p;
      found = true;
    } else if (partition != p) {
      throw Error(ErrorKind::InvalidArgument, "incompatible tilings within one band");
    }
  }
  if (!found && band_size > 0) partition = {band_size};
  return partition;
}

}  // namespace

ExponentMatrix ExponentMatrix::assemble(const std::vector<std::vector<ExponentCell>>& bands,
                                        const std::vector<std::size_t>& band_heights,
                                        const std::vector<std::size_t>& band_widths) {
  const std::size_t nr = band_heights.size();
  const std::size_t nc = band_widths.size();
  if (bands.size() != nr) throw Error(ErrorKind::DimensionMismatch, "band row count mismatch");
  for (const auto& row : bands) {
    if (row.size() != nc) throw Error(ErrorKind::DimensionMismatch, "band column count mismatch");
  }

  std::vector<std::vector<std::size_t>> row_parts(nr);
  std::vector<std::vector<std::size_t>> col_parts(nc);
  for (std::size_t r = 0; r < nr; ++r) {
    std::vector<const ExponentMatrix*> members;
    for (const auto& cell : bands[r]) {
      if (cell.fill == ExponentCell::Fill::Matrix) members.push_back(cell.matrix);
    }
    row_parts[r] = band_partition(band_heights[r], members, true);
  }
  for (std::size_t c = 0; c < nc; ++c) {
    std::vector<const ExponentMatrix*> members;
    for (std::size_t r = 0; r < nr; ++r) {
      if (bands[r][c].fill == ExponentCell::Fill::Matrix) members.push_back(bands[r][c].matrix);
    }
    col_parts[c] = band_partition(band_widths[c], members, false);
  }

  std::vector<std::size_t> heights;
  std::vector<std::size_t> widths;
  for (const auto& p : row_parts) heights.insert(heights.end(), p.begin(), p.end());
  for (const auto& p : col_parts) widths.insert(widths.end(), p.begin(), p.end());

  std::vector<Block> blocks;
  blocks.reserve(heights.size() * widths.size());
  for (std::size_t r = 0; r < nr; ++r) {
    for (std::size_t sub_r = 0; sub_r < row_parts[r].size(); ++sub_r) {
      for (std::size_t c = 0; c < nc; ++c) {
        const ExponentCell& cell = bands[r][c];
        for (std::size_t sub_c = 0; sub_c < col_parts[c].size(); ++sub_c) {
          switch (cell.fill) {
            case ExponentCell::Fill::Matrix:
              blocks.push_back(cell.matrix->block(sub_r, sub_c));
              break;
            case ExponentCell::Fill::Zero:
              blocks.push_back(Block::zero(row_parts[r][sub_r], col_parts[c][sub_c]));
              break;
            case ExponentCell::Fill::Ones:
              blocks.push_back(Block::ones(row_parts[r][sub_r], col_parts[c][sub_c]));
              break;
          }
        }
      }
    }
  }
  return ExponentMatrix(std::move(heights), std::move(widths), std::move(blocks));
}

const Block& ExponentMatrix::block(std::size_t grid_row, std::size_t grid_col) const {
  if (grid_row >= grid_rows() || grid_col >= grid_cols()) {
    throw Error(ErrorKind::InvalidArgument, "block index out of range");
  }
  return blocks_[grid_row * grid_cols() + grid_col];
}

bool ExponentMatrix::at(std::size_t i, std::size_t j) const {
  if (i >= rows_ || j >= cols_) throw Error(ErrorKind::InvalidArgument, "entry out of range");
  std::size_t gr = 0;
  while (i >= row_heights_[gr]) i -= row_heights_[gr++];
  std::size_t gc = 0;
  while (j >= col_widths_[gc]) j -= col_widths_[gc++];
  return block(gr, gc).at(i, j);
}

BitMatrix ExponentMatrix::materialize() const {
  BitMatrix out(rows_, cols_);
  std::size_t row0 = 0;
  for (std::size_t gr = 0; gr < grid_rows(); ++gr) {
    std::size_t col0 = 0;
    for (std::size_t gc = 0; gc < grid_cols(); ++gc) {
      const Block& b = block(gr, gc);
      for (std::size_t i = 0; i < b.rows(); ++i) {
        for (std::size_t j = 0; j < b.cols(); ++j) out.set(row0 + i, col0 + j, b.at(i, j));
      }
      col0 += col_widths_[gc];
    }
    row0 += row_heights_[gr];
  }
  return out;
}

std::size_t ExponentMatrix::storage_size() const noexcept {
  std::size_t total = 0;
  for (const Block& b : blocks_) total += b.storage_size();
  return total;
}

bool ExponentMatrix::is_lower_triangular() const noexcept {
  if (rows_ == 0 && cols_ == 0) return true;
  return blocks_.size() == 1 && blocks_.front().kind() == BlockKind::LowerTriOnes;
}

std::vector<std::vector<std::size_t>> ExponentMatrix::column_factors() const {
  std::vector<std::vector<std::size_t>> out(cols_);
  std::size_t col0 = 0;
  for (std::size_t gc = 0; gc < grid_cols(); ++gc) {
    std::size_t row0 = 0;
    for (std::size_t gr = 0; gr < grid_rows(); ++gr) {
      const Block& b = block(gr, gc);
      for (std::size_t j = 0; j < b.cols(); ++j) {
        auto& factors = out[col0 + j];
        switch (b.kind()) {
          case BlockKind::Zero: break;
          case BlockKind::AllOnes:
            for (std::size_t i = 0; i < b.rows(); ++i) factors.push_back(row0 + i);
            break;
          case BlockKind::LowerTriOnes:
            for (std::size_t i = j; i < b.rows(); ++i) factors.push_back(row0 + i);
            break;
          case BlockKind::Identity: factors.push_back(row0 + j); break;
          case BlockKind::Dense:
            for (std::size_t i = 0; i < b.rows(); ++i) {
              if (b.at(i, j)) factors.push_back(row0 + i);
            }
            break;
        }
      }
      row0 += row_heights_[gr];
    }
    col0 += col_widths_[gc];
  }
  return out;
}

}  // namespace mrep
