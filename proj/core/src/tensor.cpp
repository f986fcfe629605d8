#include "alphacc/tensor.hpp"

#include <algorithm>

#include "alphacc/error.hpp"

namespace alphacc {

MsaLayout::MsaLayout(std::vector<std::size_t> row_lengths, std::size_t width)
    : row_length_(std::move(row_lengths)), width_(width) {
  row_offset_.reserve(row_length_.size());
  columns_.resize(width_);
  rows_valid_at_.assign(width_, 0);
  for (std::size_t r = 0; r < row_length_.size(); ++r) {
    if (row_length_[r] > width_) throw ConfigError("row length exceeds MSA width");
    row_offset_.push_back(cells_);
    for (std::size_t c = 0; c < row_length_[r]; ++c) {
      columns_[c].push_back(cells_ + c);
      cell_column_.push_back(c);
      cell_row_.push_back(r);
      ++rows_valid_at_[c];
    }
    cells_ += row_length_[r];
  }
}

std::size_t MsaLayout::shared_rows(std::size_t i, std::size_t j) const { return rows_valid_at_[std::max(i, j)]; }

}  // namespace alphacc
