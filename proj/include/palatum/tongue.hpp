#pragma once

#include <string_view>
#include <utility>
#include <vector>

#include "palatum/dome.hpp"

namespace palatum {

struct ContourPoint {
  double x = 0.0;
  double u = 0.0;  ///< elevation above the baseline; negative is below it
  friend bool operator==(const ContourPoint&, const ContourPoint&) = default;
};

/// Midsagittal tongue contour, piecewise linear in x.
class TongueContour {
 public:
  explicit TongueContour(std::vector<ContourPoint> points);

  const std::vector<ContourPoint>& points() const { return points_; }
  double x_front() const { return points_.front().x; }
  double x_back() const { return points_.back().x; }
  bool covers(double x) const { return x >= x_front() && x <= x_back(); }

  TongueContour raised(double delta) const;

  friend bool operator==(const TongueContour&, const TongueContour&) = default;

 private:
  std::vector<ContourPoint> points_;
};

enum class TipManner { Full, Near, Lateral };
enum class DorsumManner { Full, Near };

std::string_view to_string(TipManner manner);
std::string_view to_string(DorsumManner manner);
TipManner parse_tip_manner(std::string_view text);
DorsumManner parse_dorsum_manner(std::string_view text);

/// Lateral shaping controls layered over the flat coronal tongue.
struct ShapingParams {
  TipManner tt_manner = TipManner::Near;
  DorsumManner td_manner = DorsumManner::Near;
  double tth = 0.0;  ///< tongue tip height, [0, 1]
  double edge_elev_max = 8.0;
  double posterior_onset_x = 0.0;
  bool groove_enabled = false;
  double groove_width = 0.0;
  double groove_depth = 0.0;
  bool lateral_lower_enabled = false;
  double lateral_lower_width = 0.0;
  double lateral_lower_depth = 0.0;

  /// Throws ValidationError on negative widths/depths, tth outside [0, 1],
  /// both lowering modes enabled, or lateral lowering without Lateral manner.
  void validate() const;

  friend bool operator==(const ShapingParams&, const ShapingParams&) = default;
};

/// Length over which edge elevation ramps in behind posterior_onset_x.
inline constexpr double kEdgeRampLength = 10.0;

/// Repo defaults scaled to a palate: groove 1/4 and lateral band 1/5 of the
/// widest span, both lowering depths twice the highest dome.
ShapingParams default_shaping_params(const PalateGeometry& geometry);

double midsagittal_height(const TongueContour& contour, double x);

/// Raised lateral tongue edges for sealing consonants. Zero unless one of
/// the manners is Full; tip closures scale with tth, dorsal ones saturate.
double edge_elevation_delta(const ShapingParams& params, const DomeSlice& slice, double x, double z);

double groove_delta(const ShapingParams& params, const DomeSlice& slice, double z);

double lateral_lowering_delta(const ShapingParams& params, const DomeSlice& slice, double z);

/// First x at which the edge-elevation ramp is saturated.
inline double molar_region_start(const ShapingParams& params) {
  return params.posterior_onset_x + kEdgeRampLength;
}

/// Tongue surface height u_t(x, z) over the palate.
class TongueField {
 public:
  /// Throws DomainError when contour and palate share no x range.
  TongueField(TongueContour contour, ShapingParams params, PalateGeometry geometry);

  /// Height at (x, z). x must be covered by both the contour and the palate,
  /// z must lie within the slice at x.
  double operator()(double x, double z) const;
  /// Same, with the slice already resolved.
  double at(const DomeSlice& slice, double z) const;

  bool defined_at(double x) const { return contour_.covers(x) && geometry_.covers(x); }

  const TongueContour& contour() const { return contour_; }
  const ShapingParams& params() const { return params_; }
  const PalateGeometry& geometry() const { return geometry_; }

 private:
  TongueContour contour_;
  ShapingParams params_;
  PalateGeometry geometry_;
};

inline TongueField tongue_height_field(TongueContour contour, ShapingParams params,
                                       PalateGeometry geometry) {
  return TongueField(std::move(contour), std::move(params), std::move(geometry));
}

}  // namespace palatum
