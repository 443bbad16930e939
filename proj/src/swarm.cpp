#include "psso/swarm.hpp"

#include <algorithm>
#include <string>

#include "psso/error.hpp"

namespace psso {

std::string_view to_string(LayoutMode mode) noexcept {
  return mode == LayoutMode::kParticleMajor ? "particle-major" : "interleaved";
}

LayoutMode parse_layout(std::string_view text) {
  if (text == "particle-major") return LayoutMode::kParticleMajor;
  if (text == "interleaved") return LayoutMode::kInterleaved;
  throw InvalidArgument("unknown layout '" + std::string(text) +
                        "' (expected particle-major or interleaved)");
}

PositionMatrix::PositionMatrix(std::size_t rows, std::size_t cols, LayoutMode layout, double fill)
    : rows_(rows), cols_(cols), layout_(layout), data_(rows * cols, fill) {}

std::span<const double> PositionMatrix::row_span(std::size_t row) const {
  if (layout_ != LayoutMode::kParticleMajor) {
    throw InvalidArgument("row_span requires particle-major storage");
  }
  return std::span<const double>(data_).subspan(row * cols_, cols_);
}

std::span<const double> PositionMatrix::gather_row(std::size_t row,
                                                   std::span<double> out) const noexcept {
  if (layout_ == LayoutMode::kParticleMajor) {
    std::copy_n(data_.begin() + static_cast<std::ptrdiff_t>(row * cols_), cols_, out.begin());
  } else {
    for (std::size_t j = 0; j < cols_; ++j) out[j] = data_[j * rows_ + row];
  }
  return out.first(cols_);
}

void PositionMatrix::copy_row_from(std::size_t row, const PositionMatrix& src,
                                   std::size_t src_row) noexcept {
  if (layout_ == LayoutMode::kParticleMajor && src.layout_ == LayoutMode::kParticleMajor) {
    std::copy_n(src.data_.begin() + static_cast<std::ptrdiff_t>(src_row * src.cols_), cols_,
                data_.begin() + static_cast<std::ptrdiff_t>(row * cols_));
    return;
  }
  for (std::size_t j = 0; j < cols_; ++j) (*this)(row, j) = src(src_row, j);
}

std::vector<double> PositionMatrix::row_vector(std::size_t row) const {
  std::vector<double> out(cols_);
  gather_row(row, out);
  return out;
}

PositionMatrix PositionMatrix::with_layout(LayoutMode layout) const {
  PositionMatrix out;
  out.rows_ = rows_;
  out.cols_ = cols_;
  out.layout_ = layout;
  out.data_ = convert_layout(data_, rows_, cols_, layout_, layout);
  return out;
}

bool operator==(const PositionMatrix& a, const PositionMatrix& b) noexcept {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
  if (a.layout_ == b.layout_) return a.data_ == b.data_;
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t j = 0; j < a.cols_; ++j) {
      if (a(i, j) != b(i, j)) return false;
    }
  }
  return true;
}

std::vector<double> convert_layout(std::span<const double> data, std::size_t rows,
                                   std::size_t cols, LayoutMode from, LayoutMode to) {
  if (data.size() != rows * cols) {
    throw InvalidArgument("convert_layout: storage has " + std::to_string(data.size()) +
                          " elements, expected " + std::to_string(rows) + " x " +
                          std::to_string(cols));
  }
  std::vector<double> out(data.begin(), data.end());
  if (from == to) return out;
  // A particle-major rows x cols buffer is an interleaved cols x rows buffer.
  const std::size_t src_rows = from == LayoutMode::kParticleMajor ? rows : cols;
  const std::size_t src_cols = from == LayoutMode::kParticleMajor ? cols : rows;
  for (std::size_t r = 0; r < src_rows; ++r) {
    for (std::size_t c = 0; c < src_cols; ++c) out[c * src_rows + r] = data[r * src_cols + c];
  }
  return out;
}

Swarm Swarm::with_layout(LayoutMode layout) const {
  Swarm out = *this;
  out.sol = sol.with_layout(layout);
  out.pbests = pbests.with_layout(layout);
  return out;
}

}  // namespace psso
