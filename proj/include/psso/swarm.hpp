#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

namespace psso {

/// Storage order of an nsol x nvar matrix. Purely a representation choice:
/// logical (particle, variable) indexing is the same under both.
enum class LayoutMode {
  kParticleMajor,  ///< each particle's nvar coordinates are contiguous
  kInterleaved,    ///< coordinate j of all particles is contiguous
};

std::string_view to_string(LayoutMode mode) noexcept;
/// Accepts "particle-major" and "interleaved"; throws InvalidArgument otherwise.
LayoutMode parse_layout(std::string_view text);

/// Dense rows x cols matrix of doubles with a selectable storage order.
class PositionMatrix {
 public:
  PositionMatrix() = default;
  PositionMatrix(std::size_t rows, std::size_t cols, LayoutMode layout = LayoutMode::kParticleMajor,
                 double fill = 0.0);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  LayoutMode layout() const noexcept { return layout_; }

  std::size_t offset(std::size_t row, std::size_t col) const noexcept {
    return layout_ == LayoutMode::kParticleMajor ? row * cols_ + col : col * rows_ + row;
  }
  double& operator()(std::size_t row, std::size_t col) noexcept { return data_[offset(row, col)]; }
  double operator()(std::size_t row, std::size_t col) const noexcept {
    return data_[offset(row, col)];
  }

  /// Contiguous view of one row; only valid for particle-major storage.
  std::span<const double> row_span(std::size_t row) const;
  /// Copies a row into `out` (size cols) regardless of layout and returns it as a span.
  std::span<const double> gather_row(std::size_t row, std::span<double> out) const noexcept;
  void copy_row_from(std::size_t row, const PositionMatrix& src, std::size_t src_row) noexcept;
  std::vector<double> row_vector(std::size_t row) const;

  std::span<const double> storage() const noexcept { return data_; }
  std::span<double> storage() noexcept { return data_; }

  /// Same logical matrix in another storage order.
  PositionMatrix with_layout(LayoutMode layout) const;

  /// Logical equality: same dimensions and every (i, j) element equal.
  friend bool operator==(const PositionMatrix& a, const PositionMatrix& b) noexcept;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  LayoutMode layout_ = LayoutMode::kParticleMajor;
  std::vector<double> data_;
};

/// Re-orders raw storage of a rows x cols matrix from one layout to another.
/// Throws InvalidArgument if data.size() != rows * cols.
std::vector<double> convert_layout(std::span<const double> data, std::size_t rows,
                                   std::size_t cols, LayoutMode from, LayoutMode to);

/// Population state. Invariants after every public operation:
/// p_f[i] == f(pbests row i); g_f == min_i p_f[i] and gbest is a pbests row
/// attaining it; p_f[i] <= sol_f[i] after each pBest pass.
struct Swarm {
  PositionMatrix sol;
  PositionMatrix pbests;
  std::vector<double> gbest;
  std::vector<double> sol_f;
  std::vector<double> p_f;
  double g_f = 0.0;

  std::size_t nsol() const noexcept { return sol.rows(); }
  std::size_t nvar() const noexcept { return sol.cols(); }
  LayoutMode layout() const noexcept { return sol.layout(); }

  /// Both matrices converted; vectors unchanged.
  Swarm with_layout(LayoutMode layout) const;

  friend bool operator==(const Swarm&, const Swarm&) = default;
};

}  // namespace psso
