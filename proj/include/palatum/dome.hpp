#pragma once

#include <string_view>
#include <vector>

namespace palatum {

/// Coronal profile of the palatal dome.
enum class DomeShape { Cosine, HalfEllipse };

std::string_view to_string(DomeShape shape);
DomeShape parse_dome_shape(std::string_view text);

/// One coronal cross-section of the hard palate.
///
/// Heights are elevations above the tooth-row baseline: the dome rises from
/// u = 0 at the molar edges (z_min, z_max) to u = h at the midline. All
/// lengths are millimetres; x runs anterior to posterior.
class DomeSlice {
 public:
  DomeSlice(double x, double z_min, double z_max, double h, DomeShape shape);

  double x() const { return x_; }
  double z_min() const { return z_min_; }
  double z_max() const { return z_max_; }
  double h() const { return h_; }
  DomeShape shape() const { return shape_; }

  double z_center() const { return 0.5 * (z_min_ + z_max_); }
  /// Half of the lateral dome width (the ellipse's horizontal semi-axis).
  double half_width() const { return 0.5 * (z_max_ - z_min_); }
  double span() const { return z_max_ - z_min_; }
  bool contains(double z) const { return z >= z_min_ && z <= z_max_; }

  DomeSlice with_shape(DomeShape shape) const { return {x_, z_min_, z_max_, h_, shape}; }

  friend bool operator==(const DomeSlice&, const DomeSlice&) = default;

 private:
  double x_;
  double z_min_;
  double z_max_;
  double h_;
  DomeShape shape_;
};

/// Stack of coronal slices from the incisors to the velar transition.
class PalateGeometry {
 public:
  /// Slices are re-tagged with `shape`. Requires at least two slices with
  /// strictly increasing x.
  PalateGeometry(DomeShape shape, std::vector<DomeSlice> slices);

  DomeShape shape() const { return shape_; }
  const std::vector<DomeSlice>& slices() const { return slices_; }
  double x_front() const { return slices_.front().x(); }
  double x_back() const { return slices_.back().x(); }
  bool covers(double x) const { return x >= x_front() && x <= x_back(); }
  double max_height() const;
  double max_span() const;

  PalateGeometry with_shape(DomeShape shape) const { return {shape, slices_}; }

 private:
  DomeShape shape_;
  std::vector<DomeSlice> slices_;
};

struct Point3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
};

/// Row-major (x-major) sample grid of the dome surface.
struct SurfaceGrid {
  int nx = 0;
  int nz = 0;
  std::vector<Point3> points;  ///< (nx+1)*(nz+1) entries

  const Point3& at(int i, int j) const { return points[static_cast<std::size_t>(i * (nz + 1) + j)]; }
};

/// Elevation of the dome surface above the baseline at lateral position z.
/// Throws DomainError when z lies outside [z_min, z_max].
double dome_elevation(const DomeSlice& slice, double z);

/// Slice at an arbitrary x, linearly interpolating z_min, z_max and h
/// between the bracketing stored slices.
DomeSlice slice_at(const PalateGeometry& geometry, double x);

SurfaceGrid sample_surface(const PalateGeometry& geometry, int nx, int nz);

}  // namespace palatum
