#include "palatum/contact.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "palatum/error.hpp"

namespace palatum {

Intersection invert_dome(const DomeSlice& slice, double u) {
  if (!(u > 0.0 && u < slice.h())) {
    std::ostringstream msg;
    msg << "invert_dome needs 0 < u < h (u=" << u << ", h=" << slice.h() << ", slice x=" << slice.x()
        << ")";
    throw DomainError(msg.str());
  }
  switch (slice.shape()) {
    case DomeShape::Cosine: {
      const double c = std::clamp(1.0 - 2.0 * u / slice.h(), -1.0, 1.0);
      const double t = std::acos(c) / (2.0 * std::numbers::pi);
      return {slice.z_min() + t * slice.span(), slice.z_max() - t * slice.span()};
    }
    case DomeShape::HalfEllipse: {
      const double q = u / slice.h();
      const double offset = slice.half_width() * std::sqrt(1.0 - q * q);
      return {slice.z_center() - offset, slice.z_center() + offset};
    }
  }
  return {};
}

ContactClass classify_slice(const DomeSlice& slice, double u) {
  if (!std::isfinite(u)) {
    std::ostringstream msg;
    msg << "tongue height is not finite at slice x=" << slice.x();
    throw DomainError(msg.str());
  }
  if (u <= 0.0) return NoContact{};
  if (u >= slice.h()) return FullContact{slice.z_center()};
  return invert_dome(slice, u);
}

std::vector<ZInterval> contact_intervals(const DomeSlice& slice,
                                         const std::function<double(double)>& tongue_profile,
                                         int n_samples) {
  if (n_samples < 16) {
    throw DomainError("contact_intervals needs at least 16 samples");
  }
  auto z_at = [&](int k) {
    return k == n_samples ? slice.z_max() : slice.z_min() + slice.span() * k / n_samples;
  };
  auto touches = [&](double z) { return tongue_profile(z) >= dome_elevation(slice, z); };

  std::vector<ZInterval> out;
  bool inside = false;
  double start = 0.0;
  double prev_z = slice.z_min();
  for (int k = 0; k <= n_samples; ++k) {
    const double z = z_at(k);
    const bool hit = touches(z);
    if (hit && !inside) {
      start = z;
      if (k > 0) {
        const double mid = 0.5 * (prev_z + z);
        if (touches(mid)) start = mid;
      }
      inside = true;
    } else if (!hit && inside) {
      double end = prev_z;
      const double mid = 0.5 * (prev_z + z);
      if (touches(mid)) end = mid;
      out.push_back({start, end});
      inside = false;
    }
    prev_z = z;
  }
  if (inside) out.push_back({start, slice.z_max()});
  return out;
}

}  // namespace palatum
