#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "palatum/dome.hpp"
#include "palatum/tongue.hpp"

namespace palatum {

/// Boolean tongue-palate contact grid. Row 0 is the most anterior row,
/// column 0 the leftmost.
class EPGFrame {
 public:
  EPGFrame(int rows, int cols, std::vector<bool> cells, std::vector<double> x_of_row,
           std::vector<double> z_frac_of_col);

  /// All-false frame with uniform row positions over [x_front, x_back].
  static EPGFrame empty(int rows, int cols, double x_front, double x_back);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool at(int row, int col) const { return cells_[index(row, col)]; }
  void set(int row, int col, bool value) { cells_[index(row, col)] = value; }
  const std::vector<bool>& cells() const { return cells_; }
  const std::vector<double>& x_of_row() const { return x_of_row_; }
  const std::vector<double>& z_frac_of_col() const { return z_frac_of_col_; }

  int contact_count() const;
  bool row_has_contact(int row) const;

  friend bool operator==(const EPGFrame&, const EPGFrame&) = default;

 private:
  std::size_t index(int row, int col) const { return static_cast<std::size_t>(row * cols_ + col); }

  int rows_;
  int cols_;
  std::vector<bool> cells_;
  std::vector<double> x_of_row_;
  std::vector<double> z_frac_of_col_;
};

inline constexpr int kDefaultEpgRows = 8;
inline constexpr int kDefaultEpgCols = 8;

/// Uniform cell-centre fractions (j + 0.5) / n.
std::vector<double> cell_center_fractions(int n);

/// Rasterizes tongue-palate contact. Rows are centred over the palate's x
/// range; rows the contour does not reach stay all-false.
EPGFrame compute_epg(const PalateGeometry& geometry, const TongueContour& contour,
                     const ShapingParams& params, int rows = kDefaultEpgRows,
                     int cols = kDefaultEpgCols);

/// '#' for contact, '.' otherwise, one line per row.
std::string epg_text(const EPGFrame& frame);

}  // namespace palatum
