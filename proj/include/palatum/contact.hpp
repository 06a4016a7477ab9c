#pragma once

#include <functional>
#include <variant>
#include <vector>

#include "palatum/dome.hpp"

namespace palatum {

struct NoContact {
  friend bool operator==(const NoContact&, const NoContact&) = default;
};

/// Flat tongue level crosses the dome at two lateral points.
struct Intersection {
  double z_left = 0.0;
  double z_right = 0.0;
  friend bool operator==(const Intersection&, const Intersection&) = default;
};

/// Tongue at or above the apex; the whole span is in contact.
struct FullContact {
  double z_apex = 0.0;
  friend bool operator==(const FullContact&, const FullContact&) = default;
};

using ContactClass = std::variant<NoContact, Intersection, FullContact>;

/// Lateral positions where the dome reaches elevation u, for 0 < u < h.
Intersection invert_dome(const DomeSlice& slice, double u);

/// Three-way classification of a flat coronal tongue line at elevation u:
/// u <= 0 is NoContact, u >= h is FullContact at the apex, anything in
/// between intersects the dome twice.
ContactClass classify_slice(const DomeSlice& slice, double u);

struct ZInterval {
  double lo = 0.0;
  double hi = 0.0;
  friend bool operator==(const ZInterval&, const ZInterval&) = default;
};

/// Maximal z-intervals where tongue_profile(z) >= dome_elevation(z), found by
/// uniform sampling (n_samples steps) with one bisection step per boundary.
/// Endpoints are accurate to within one sample step.
std::vector<ZInterval> contact_intervals(const DomeSlice& slice,
                                         const std::function<double(double)>& tongue_profile,
                                         int n_samples);

}  // namespace palatum
