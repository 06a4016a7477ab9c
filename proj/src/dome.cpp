#include "palatum/dome.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <string>

#include "palatum/error.hpp"

namespace palatum {

std::string_view to_string(DomeShape shape) {
  switch (shape) {
    case DomeShape::Cosine:
      return "cosine";
    case DomeShape::HalfEllipse:
      return "half_ellipse";
  }
  return "cosine";
}

DomeShape parse_dome_shape(std::string_view text) {
  if (text == "cosine") return DomeShape::Cosine;
  if (text == "half_ellipse") return DomeShape::HalfEllipse;
  throw ValidationError("unknown dome shape '" + std::string(text) +
                        "' (expected cosine or half_ellipse)");
}

DomeSlice::DomeSlice(double x, double z_min, double z_max, double h, DomeShape shape)
    : x_(x), z_min_(z_min), z_max_(z_max), h_(h), shape_(shape) {
  if (!std::isfinite(x) || !std::isfinite(z_min) || !std::isfinite(z_max) || !std::isfinite(h)) {
    throw ValidationError("dome slice has non-finite parameters");
  }
  if (!(z_min < z_max)) {
    std::ostringstream msg;
    msg << "dome slice at x=" << x << " needs z_min < z_max (got " << z_min << ", " << z_max << ")";
    throw ValidationError(msg.str());
  }
  if (!(h > 0.0)) {
    std::ostringstream msg;
    msg << "dome slice at x=" << x << " needs h > 0 (got " << h << ")";
    throw ValidationError(msg.str());
  }
}

PalateGeometry::PalateGeometry(DomeShape shape, std::vector<DomeSlice> slices)
    : shape_(shape), slices_(std::move(slices)) {
  if (slices_.size() < 2) {
    throw ValidationError("palate geometry needs at least 2 slices");
  }
  for (std::size_t i = 1; i < slices_.size(); ++i) {
    if (!(slices_[i].x() > slices_[i - 1].x())) {
      std::ostringstream msg;
      msg << "palate slice x must be strictly increasing (slice " << i << " at x=" << slices_[i].x()
          << " follows x=" << slices_[i - 1].x() << ")";
      throw ValidationError(msg.str());
    }
  }
  for (auto& slice : slices_) slice = slice.with_shape(shape_);
}

double PalateGeometry::max_height() const {
  double best = 0.0;
  for (const auto& s : slices_) best = std::max(best, s.h());
  return best;
}

double PalateGeometry::max_span() const {
  double best = 0.0;
  for (const auto& s : slices_) best = std::max(best, s.span());
  return best;
}

double dome_elevation(const DomeSlice& slice, double z) {
  if (!slice.contains(z)) {
    std::ostringstream msg;
    msg << "z=" << z << " outside dome span [" << slice.z_min() << ", " << slice.z_max()
        << "] of slice at x=" << slice.x();
    throw DomainError(msg.str());
  }
  // Fraction of the half width between z and the nearer molar edge: exactly
  // 0 on the edges, 1 on the midline, equal for mirrored points.
  const double edge = std::min(z - slice.z_min(), slice.z_max() - z);
  const double q = std::clamp(edge / slice.half_width(), 0.0, 1.0);
  switch (slice.shape()) {
    case DomeShape::Cosine:
      // (h/2)(1 - cos(2*pi*(z - z_min)/span)) measured from the nearer edge.
      return 0.5 * slice.h() * (1.0 - std::cos(std::numbers::pi * q));
    case DomeShape::HalfEllipse:
      // h*sqrt(1 - r^2) with r = 1 - q, factored as (1 - r)(1 + r).
      return slice.h() * std::sqrt(q * (2.0 - q));
  }
  return 0.0;
}

DomeSlice slice_at(const PalateGeometry& geometry, double x) {
  const auto& slices = geometry.slices();
  if (!geometry.covers(x)) {
    std::ostringstream msg;
    msg << "x=" << x << " outside palate range [" << geometry.x_front() << ", " << geometry.x_back()
        << "]";
    throw DomainError(msg.str());
  }
  auto upper = std::lower_bound(slices.begin(), slices.end(), x,
                                [](const DomeSlice& s, double value) { return s.x() < value; });
  if (upper->x() == x) return *upper;
  const DomeSlice& b = *upper;
  const DomeSlice& a = *(upper - 1);
  const double t = (x - a.x()) / (b.x() - a.x());
  auto lerp = [t](double p, double q) { return p + t * (q - p); };
  return {x, lerp(a.z_min(), b.z_min()), lerp(a.z_max(), b.z_max()), lerp(a.h(), b.h()),
          geometry.shape()};
}

SurfaceGrid sample_surface(const PalateGeometry& geometry, int nx, int nz) {
  if (nx < 1 || nz < 1) {
    throw DomainError("sample_surface needs nx >= 1 and nz >= 1");
  }
  SurfaceGrid grid;
  grid.nx = nx;
  grid.nz = nz;
  grid.points.reserve(static_cast<std::size_t>((nx + 1) * (nz + 1)));
  const double x0 = geometry.x_front();
  const double x1 = geometry.x_back();
  for (int i = 0; i <= nx; ++i) {
    const double x = i == nx ? x1 : x0 + (x1 - x0) * i / nx;
    const DomeSlice slice = slice_at(geometry, x);
    for (int j = 0; j <= nz; ++j) {
      const double z = j == nz ? slice.z_max() : slice.z_min() + slice.span() * j / nz;
      grid.points.push_back({x, dome_elevation(slice, z), z});
    }
  }
  return grid;
}

}  // namespace palatum
