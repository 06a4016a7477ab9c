#include "palatum/tongue.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include "palatum/error.hpp"

namespace palatum {

TongueContour::TongueContour(std::vector<ContourPoint> points) : points_(std::move(points)) {
  if (points_.size() < 2) {
    throw ValidationError("tongue contour needs at least 2 points");
  }
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (!std::isfinite(points_[i].x) || !std::isfinite(points_[i].u)) {
      throw ValidationError("tongue contour point " + std::to_string(i) + " is not finite");
    }
    if (i > 0 && !(points_[i].x > points_[i - 1].x)) {
      throw ValidationError("tongue contour x must be strictly increasing (point " +
                            std::to_string(i) + ")");
    }
  }
}

TongueContour TongueContour::raised(double delta) const {
  auto pts = points_;
  for (auto& p : pts) p.u += delta;
  return TongueContour(std::move(pts));
}

std::string_view to_string(TipManner manner) {
  switch (manner) {
    case TipManner::Full:
      return "full";
    case TipManner::Near:
      return "near";
    case TipManner::Lateral:
      return "lateral";
  }
  return "near";
}

std::string_view to_string(DorsumManner manner) {
  return manner == DorsumManner::Full ? "full" : "near";
}

TipManner parse_tip_manner(std::string_view text) {
  if (text == "full") return TipManner::Full;
  if (text == "near") return TipManner::Near;
  if (text == "lateral") return TipManner::Lateral;
  throw ValidationError("unknown tongue tip manner '" + std::string(text) +
                        "' (expected full, near or lateral)");
}

DorsumManner parse_dorsum_manner(std::string_view text) {
  if (text == "full") return DorsumManner::Full;
  if (text == "near") return DorsumManner::Near;
  throw ValidationError("unknown tongue dorsum manner '" + std::string(text) +
                        "' (expected full or near)");
}

void ShapingParams::validate() const {
  auto check_non_negative = [](double value, const char* name) {
    if (!std::isfinite(value) || value < 0.0) {
      throw ValidationError(std::string(name) + " must be a finite value >= 0");
    }
  };
  if (!std::isfinite(tth) || tth < 0.0 || tth > 1.0) {
    throw ValidationError("tth must lie in [0, 1]");
  }
  if (!std::isfinite(posterior_onset_x)) {
    throw ValidationError("posterior_onset_x must be finite");
  }
  check_non_negative(edge_elev_max, "edge_elev_max");
  check_non_negative(groove_width, "groove_width");
  check_non_negative(groove_depth, "groove_depth");
  check_non_negative(lateral_lower_width, "lateral_lower_width");
  check_non_negative(lateral_lower_depth, "lateral_lower_depth");
  if (groove_enabled && lateral_lower_enabled) {
    throw ValidationError("central groove and lateral lowering are mutually exclusive");
  }
  if (lateral_lower_enabled && tt_manner != TipManner::Lateral) {
    throw ValidationError("lateral lowering requires tt_manner = lateral");
  }
}

ShapingParams default_shaping_params(const PalateGeometry& geometry) {
  ShapingParams p;
  p.edge_elev_max = 8.0;
  p.groove_width = 0.25 * geometry.max_span();
  p.groove_depth = 2.0 * geometry.max_height();
  p.lateral_lower_width = 0.2 * geometry.max_span();
  p.lateral_lower_depth = 2.0 * geometry.max_height();
  return p;
}

double midsagittal_height(const TongueContour& contour, double x) {
  const auto& pts = contour.points();
  if (!contour.covers(x)) {
    std::ostringstream msg;
    msg << "x=" << x << " outside tongue contour range [" << contour.x_front() << ", "
        << contour.x_back() << "]";
    throw DomainError(msg.str());
  }
  auto upper = std::lower_bound(pts.begin(), pts.end(), x,
                                [](const ContourPoint& p, double value) { return p.x < value; });
  if (upper->x == x) return upper->u;
  const ContourPoint& b = *upper;
  const ContourPoint& a = *(upper - 1);
  const double t = (x - a.x) / (b.x - a.x);
  return a.u + t * (b.u - a.u);
}

double edge_elevation_delta(const ShapingParams& params, const DomeSlice& slice, double x, double z) {
  double scale = 0.0;
  if (params.tt_manner == TipManner::Full) {
    scale = params.tth;
  } else if (params.td_manner == DorsumManner::Full) {
    scale = 1.0;
  }
  if (scale == 0.0) return 0.0;
  const double ramp = std::clamp((x - params.posterior_onset_x) / kEdgeRampLength, 0.0, 1.0);
  const double lateral = std::min(1.0, std::abs(z - slice.z_center()) / slice.half_width());
  return scale * params.edge_elev_max * ramp * lateral * lateral;
}

double groove_delta(const ShapingParams& params, const DomeSlice& slice, double z) {
  if (!params.groove_enabled) return 0.0;
  return std::abs(z - slice.z_center()) <= 0.5 * params.groove_width ? -params.groove_depth : 0.0;
}

double lateral_lowering_delta(const ShapingParams& params, const DomeSlice& slice, double z) {
  if (!params.lateral_lower_enabled) return 0.0;
  const bool in_band = z <= slice.z_min() + params.lateral_lower_width ||
                       z >= slice.z_max() - params.lateral_lower_width;
  return in_band ? -params.lateral_lower_depth : 0.0;
}

TongueField::TongueField(TongueContour contour, ShapingParams params, PalateGeometry geometry)
    : contour_(std::move(contour)), params_(std::move(params)), geometry_(std::move(geometry)) {
  params_.validate();
  if (contour_.x_front() > geometry_.x_back() || contour_.x_back() < geometry_.x_front()) {
    std::ostringstream msg;
    msg << "tongue contour [" << contour_.x_front() << ", " << contour_.x_back()
        << "] does not overlap palate [" << geometry_.x_front() << ", " << geometry_.x_back() << "]";
    throw DomainError(msg.str());
  }
}

double TongueField::operator()(double x, double z) const {
  return at(slice_at(geometry_, x), z);
}

double TongueField::at(const DomeSlice& slice, double z) const {
  if (!slice.contains(z)) {
    std::ostringstream msg;
    msg << "z=" << z << " outside slice span at x=" << slice.x();
    throw DomainError(msg.str());
  }
  const double x = slice.x();
  return midsagittal_height(contour_, x) + edge_elevation_delta(params_, slice, x, z) +
         groove_delta(params_, slice, z) + lateral_lowering_delta(params_, slice, z);
}

}  // namespace palatum
