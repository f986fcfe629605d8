#pragma once

// Dense row-major matrices and the masked MSA tensor.
//
// An MsaTensor stores only valid cells. Valid cells form a prefix of every
// row, so row r occupies the contiguous block [row_offset[r],
// row_offset[r] + row_length[r]) of `values`. Masked cells are implicitly
// zero and no stage can write into them.

#include <cstddef>
#include <cstdint>
#include <vector>

#include <Eigen/Core>

namespace alphacc {

template <class S>
using Matrix = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

template <class S>
using ColumnVector = Eigen::Matrix<S, Eigen::Dynamic, 1>;

class MsaLayout {
 public:
  MsaLayout() = default;
  /// `width` is the number of columns; every length must be <= width.
  MsaLayout(std::vector<std::size_t> row_lengths, std::size_t width);

  std::size_t rows() const { return row_length_.size(); }
  std::size_t width() const { return width_; }
  std::size_t cells() const { return cells_; }
  std::size_t row_length(std::size_t r) const { return row_length_[r]; }
  std::size_t row_offset(std::size_t r) const { return row_offset_[r]; }
  bool valid(std::size_t r, std::size_t c) const { return c < row_length_[r]; }
  std::size_t cell(std::size_t r, std::size_t c) const { return row_offset_[r] + c; }
  /// Compact indices of the valid cells in column c, ascending row order.
  const std::vector<std::size_t>& column(std::size_t c) const { return columns_[c]; }
  /// Column of a compact cell index.
  std::size_t column_of(std::size_t cell) const { return cell_column_[cell]; }
  std::size_t row_of(std::size_t cell) const { return cell_row_[cell]; }
  /// Number of rows valid at both columns i and j.
  std::size_t shared_rows(std::size_t i, std::size_t j) const;

  bool operator==(const MsaLayout& o) const { return row_length_ == o.row_length_ && width_ == o.width_; }

 private:
  std::vector<std::size_t> row_length_;
  std::vector<std::size_t> row_offset_;
  std::vector<std::vector<std::size_t>> columns_;
  std::vector<std::size_t> cell_column_;
  std::vector<std::size_t> cell_row_;
  std::vector<std::size_t> rows_valid_at_;
  std::size_t width_ = 0;
  std::size_t cells_ = 0;
};

template <class S>
struct MsaTensor {
  MsaLayout layout;
  Matrix<S> values;  // cells x d

  std::size_t dim() const { return static_cast<std::size_t>(values.cols()); }
  auto cell(std::size_t r, std::size_t c) { return values.row(static_cast<Eigen::Index>(layout.cell(r, c))); }
  auto cell(std::size_t r, std::size_t c) const { return values.row(static_cast<Eigen::Index>(layout.cell(r, c))); }

  /// (rows * width) x d with zero rows at masked cells.
  Matrix<S> dense() const {
    Matrix<S> out = Matrix<S>::Zero(static_cast<Eigen::Index>(layout.rows() * layout.width()), values.cols());
    for (std::size_t r = 0; r < layout.rows(); ++r) {
      for (std::size_t c = 0; c < layout.row_length(r); ++c) {
        out.row(static_cast<Eigen::Index>(r * layout.width() + c)) = cell(r, c);
      }
    }
    return out;
  }
};

}  // namespace alphacc
