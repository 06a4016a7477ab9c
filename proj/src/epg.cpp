#include "palatum/epg.hpp"

#include <algorithm>
#include <sstream>

#include "palatum/error.hpp"

namespace palatum {

EPGFrame::EPGFrame(int rows, int cols, std::vector<bool> cells, std::vector<double> x_of_row,
                   std::vector<double> z_frac_of_col)
    : rows_(rows),
      cols_(cols),
      cells_(std::move(cells)),
      x_of_row_(std::move(x_of_row)),
      z_frac_of_col_(std::move(z_frac_of_col)) {
  if (rows_ < 1 || cols_ < 1) throw ValidationError("EPG frame needs rows >= 1 and cols >= 1");
  if (cells_.size() != static_cast<std::size_t>(rows_ * cols_) ||
      x_of_row_.size() != static_cast<std::size_t>(rows_) ||
      z_frac_of_col_.size() != static_cast<std::size_t>(cols_)) {
    throw ValidationError("EPG frame arrays do not match its dimensions");
  }
  for (int i = 1; i < rows_; ++i) {
    if (!(x_of_row_[i] > x_of_row_[i - 1])) throw ValidationError("EPG row x must increase");
  }
  for (int j = 0; j < cols_; ++j) {
    const double f = z_frac_of_col_[j];
    if (!(f > 0.0 && f < 1.0)) throw ValidationError("EPG column fractions must lie in (0, 1)");
    if (j > 0 && !(f > z_frac_of_col_[j - 1])) {
      throw ValidationError("EPG column fractions must increase");
    }
  }
}

EPGFrame EPGFrame::empty(int rows, int cols, double x_front, double x_back) {
  std::vector<double> xs;
  for (double f : cell_center_fractions(rows)) xs.push_back(x_front + f * (x_back - x_front));
  return {rows, cols, std::vector<bool>(static_cast<std::size_t>(rows * cols), false), std::move(xs),
          cell_center_fractions(cols)};
}

int EPGFrame::contact_count() const {
  return static_cast<int>(std::count(cells_.begin(), cells_.end(), true));
}

bool EPGFrame::row_has_contact(int row) const {
  for (int j = 0; j < cols_; ++j) {
    if (at(row, j)) return true;
  }
  return false;
}

std::vector<double> cell_center_fractions(int n) {
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) out.push_back((j + 0.5) / n);
  return out;
}

EPGFrame compute_epg(const PalateGeometry& geometry, const TongueContour& contour,
                     const ShapingParams& params, int rows, int cols) {
  if (rows < 1 || cols < 2) {
    throw DomainError("compute_epg needs rows >= 1 and cols >= 2");
  }
  const TongueField field(contour, params, geometry);
  EPGFrame frame = EPGFrame::empty(rows, cols, geometry.x_front(), geometry.x_back());

  for (int i = 0; i < rows; ++i) {
    const double x = frame.x_of_row()[i];
    if (!field.defined_at(x)) continue;
    const DomeSlice slice = slice_at(geometry, x);
    for (int j = 0; j < cols; ++j) {
      // Offset from the centre as an exact odd function of j, so mirrored
      // columns see mirrored z.
      const double offset = slice.span() * (2.0 * j + 1.0 - cols) / (2.0 * cols);
      const double z = std::clamp(slice.z_center() + offset, slice.z_min(), slice.z_max());
      frame.set(i, j, field.at(slice, z) >= dome_elevation(slice, z));
    }
  }
  return frame;
}

std::string epg_text(const EPGFrame& frame) {
  std::string out;
  out.reserve(static_cast<std::size_t>(frame.rows() * (frame.cols() + 1)));
  for (int i = 0; i < frame.rows(); ++i) {
    for (int j = 0; j < frame.cols(); ++j) out.push_back(frame.at(i, j) ? '#' : '.');
    out.push_back('\n');
  }
  return out;
}

}  // namespace palatum
