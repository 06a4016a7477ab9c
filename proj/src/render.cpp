#include "palatum/render.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>
#include <cstdio>
#include <sstream>

#include "palatum/error.hpp"

namespace palatum {

namespace {

constexpr const char* kDotStroke = "#333333";
constexpr const char* kTongueColor = "#b5566d";
constexpr const char* kBackground = "#ffffff";

std::string num(double value, int precision) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", precision, value);
  std::string out(buf);
  // "-0.000" and "0.000" must not differ between runs that land either side of zero.
  if (out.find_first_not_of("-0.") == std::string::npos && out.front() == '-') out.erase(0, 1);
  return out;
}

bool is_hex_color(const std::string& c) {
  return c.size() == 7 && c[0] == '#' &&
         std::all_of(c.begin() + 1, c.end(), [](char ch) { return std::isxdigit(static_cast<unsigned char>(ch)); });
}

struct Rgb {
  unsigned char r, g, b;
};

Rgb parse_rgb(const std::string& hex) {
  auto byte = [&](int pos) { return static_cast<unsigned char>(std::stoi(hex.substr(pos, 2), nullptr, 16)); };
  return {byte(1), byte(3), byte(5)};
}

std::string svg_open(const RenderStyle& style) {
  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << style.width
      << "\" height=\"" << style.height << "\" viewBox=\"0 0 " << style.width << ' ' << style.height
      << "\">\n"
      << "  <rect x=\"0\" y=\"0\" width=\"" << style.width << "\" height=\"" << style.height
      << "\" fill=\"" << kBackground << "\"/>\n";
  return out.str();
}

// Palatal view layout shared by the SVG and PPM renderers. The arch narrows
// towards the incisors (top of the canvas) like a dental arch seen from below.
class PalatalLayout {
 public:
  PalatalLayout(const EPGFrame& frame, const RenderStyle& style)
      : rows_(frame.rows()), cols_(frame.cols()) {
    const double w = style.width;
    const double h = style.height;
    margin_ = 0.1 * std::min(w, h);
    cx_ = 0.5 * w;
    top_ = margin_;
    bottom_ = h - 0.5 * margin_;
    half_width_max_ = 0.5 * w - margin_;
    pitch_ = (bottom_ - top_) / rows_;
    const double front_pitch = 2.0 * half_width(row_t(0)) / cols_;
    radius_ = 0.3 * std::min(pitch_, front_pitch);
    fracs_ = frame.z_frac_of_col();
  }

  double row_t(int i) const { return (i + 0.5) / rows_; }
  double half_width(double t) const { return half_width_max_ * (0.55 + 0.45 * std::sqrt(t)); }
  double y_at(double t) const { return top_ + t * (bottom_ - top_); }
  double dot_x(int i, int j) const {
    const double usable = half_width(row_t(i)) - 1.8 * radius_;
    return cx_ + (fracs_[j] - 0.5) * 2.0 * usable / (1.0 - fracs_.front() * 2.0);
  }
  double dot_y(int i) const { return top_ + (i + 0.5) * pitch_; }
  double radius() const { return radius_; }

  // Outline as a polyline: left side from the back up to the front, an arc
  // across the incisors, then the right side back down.
  std::vector<std::pair<double, double>> outline() const {
    constexpr int kSideSamples = 24;
    constexpr int kArcSamples = 24;
    std::vector<std::pair<double, double>> pts;
    for (int k = kSideSamples; k >= 0; --k) {
      const double t = static_cast<double>(k) / kSideSamples;
      pts.emplace_back(cx_ - half_width(t), y_at(t));
    }
    const double hw0 = half_width(0.0);
    for (int k = 1; k < kArcSamples; ++k) {
      const double a = std::numbers::pi * k / kArcSamples;
      pts.emplace_back(cx_ - hw0 * std::cos(a), top_ - 0.8 * margin_ * std::sin(a));
    }
    for (int k = 0; k <= kSideSamples; ++k) {
      const double t = static_cast<double>(k) / kSideSamples;
      pts.emplace_back(cx_ + half_width(t), y_at(t));
    }
    return pts;
  }

 private:
  int rows_;
  int cols_;
  double margin_ = 0.0;
  double cx_ = 0.0;
  double top_ = 0.0;
  double bottom_ = 0.0;
  double half_width_max_ = 0.0;
  double pitch_ = 0.0;
  double radius_ = 0.0;
  std::vector<double> fracs_;
};

}  // namespace

void RenderStyle::validate() const {
  if (width < 1 || height < 1) throw ValidationError("canvas width and height must be positive");
  for (const auto* c : {&contact_color, &no_contact_color, &outline_color}) {
    if (!is_hex_color(*c)) throw ValidationError("colour '" + *c + "' is not #rrggbb");
  }
  if (precision != 3) throw ValidationError("render precision is fixed at 3 digits");
}

std::string render_palatal_svg(const EPGFrame& frame, const RenderStyle& style) {
  style.validate();
  const int p = style.precision;
  const PalatalLayout layout(frame, style);
  std::ostringstream out;
  out << svg_open(style);

  out << "  <path class=\"outline\" d=\"";
  const auto outline = layout.outline();
  for (std::size_t k = 0; k < outline.size(); ++k) {
    out << (k == 0 ? "M" : " L") << num(outline[k].first, p) << ',' << num(outline[k].second, p);
  }
  out << "\" fill=\"none\" stroke=\"" << style.outline_color << "\" stroke-width=\"2\"/>\n";

  out << "  <g class=\"electrodes\">\n";
  for (int i = 0; i < frame.rows(); ++i) {
    for (int j = 0; j < frame.cols(); ++j) {
      const bool hit = frame.at(i, j);
      out << "    <circle class=\"" << (hit ? "contact" : "no-contact") << "\" cx=\""
          << num(layout.dot_x(i, j), p) << "\" cy=\"" << num(layout.dot_y(i), p) << "\" r=\""
          << num(layout.radius(), p) << "\" fill=\""
          << (hit ? style.contact_color : style.no_contact_color) << "\" stroke=\"" << kDotStroke
          << "\" stroke-width=\"0.750\"/>\n";
    }
  }
  out << "  </g>\n</svg>\n";
  return out.str();
}

std::string render_palatal_ppm(const EPGFrame& frame, const RenderStyle& style) {
  style.validate();
  const PalatalLayout layout(frame, style);
  const int w = style.width;
  const int h = style.height;
  std::vector<Rgb> pixels(static_cast<std::size_t>(w * h), parse_rgb(kBackground));
  auto put = [&](int px, int py, Rgb c) {
    if (px >= 0 && px < w && py >= 0 && py < h) pixels[static_cast<std::size_t>(py * w + px)] = c;
  };

  const Rgb outline = parse_rgb(style.outline_color);
  const auto pts = layout.outline();
  for (std::size_t k = 1; k < pts.size(); ++k) {
    const auto [x0, y0] = pts[k - 1];
    const auto [x1, y1] = pts[k];
    const int steps = std::max(1, static_cast<int>(std::ceil(2.0 * std::hypot(x1 - x0, y1 - y0))));
    for (int s = 0; s <= steps; ++s) {
      const double t = static_cast<double>(s) / steps;
      put(static_cast<int>(std::floor(x0 + t * (x1 - x0))), static_cast<int>(std::floor(y0 + t * (y1 - y0))),
          outline);
    }
  }

  const Rgb hit_color = parse_rgb(style.contact_color);
  const Rgb miss_color = parse_rgb(style.no_contact_color);
  const Rgb stroke = parse_rgb(kDotStroke);
  const double r = layout.radius();
  for (int i = 0; i < frame.rows(); ++i) {
    for (int j = 0; j < frame.cols(); ++j) {
      const double cx = layout.dot_x(i, j);
      const double cy = layout.dot_y(i);
      const Rgb fill = frame.at(i, j) ? hit_color : miss_color;
      for (int py = static_cast<int>(std::floor(cy - r - 1)); py <= static_cast<int>(std::ceil(cy + r + 1)); ++py) {
        for (int px = static_cast<int>(std::floor(cx - r - 1)); px <= static_cast<int>(std::ceil(cx + r + 1)); ++px) {
          const double d = std::hypot(px + 0.5 - cx, py + 0.5 - cy);
          if (d <= r - 0.75) {
            put(px, py, fill);
          } else if (d <= r) {
            put(px, py, stroke);
          }
        }
      }
    }
  }

  std::string out = "P6\n" + std::to_string(w) + " " + std::to_string(h) + "\n255\n";
  out.reserve(out.size() + pixels.size() * 3);
  for (const Rgb& c : pixels) {
    out.push_back(static_cast<char>(c.r));
    out.push_back(static_cast<char>(c.g));
    out.push_back(static_cast<char>(c.b));
  }
  return out;
}

std::string render_coronal_svg(const DomeSlice& slice, double u, const RenderStyle& style) {
  style.validate();
  if (!std::isfinite(u)) throw DomainError("tongue height must be finite");
  const int p = style.precision;
  const double w = style.width;
  const double hgt = style.height;
  const double margin = 0.08 * std::min(w, hgt);
  const double z_lo = slice.z_min() - 0.08 * slice.span();
  const double z_hi = slice.z_max() + 0.08 * slice.span();
  const double u_lo = std::min(0.0, u) - 0.15 * slice.h();
  const double u_hi = std::max(slice.h(), u) + 0.15 * slice.h();
  auto px = [&](double z) { return margin + (z - z_lo) / (z_hi - z_lo) * (w - 2.0 * margin); };
  auto py = [&](double e) { return hgt - margin - (e - u_lo) / (u_hi - u_lo) * (hgt - 2.0 * margin); };
  const double marker = 0.02 * std::min(w, hgt);

  std::ostringstream out;
  out << svg_open(style);
  out << "  <line class=\"baseline\" x1=\"" << num(px(slice.z_min()), p) << "\" y1=\"" << num(py(0.0), p)
      << "\" x2=\"" << num(px(slice.z_max()), p) << "\" y2=\"" << num(py(0.0), p) << "\" stroke=\""
      << style.outline_color << "\" stroke-width=\"2\"/>\n";

  out << "  <polyline class=\"dome\" points=\"";
  for (int k = 0; k < kCoronalCurveSamples; ++k) {
    const double z = k == kCoronalCurveSamples - 1
                         ? slice.z_max()
                         : slice.z_min() + slice.span() * k / (kCoronalCurveSamples - 1);
    out << (k == 0 ? "" : " ") << num(px(z), p) << ',' << num(py(dome_elevation(slice, z)), p);
  }
  out << "\" fill=\"none\" stroke=\"" << style.outline_color << "\" stroke-width=\"1.500\"/>\n";

  out << "  <line class=\"tongue\" x1=\"" << num(px(z_lo), p) << "\" y1=\"" << num(py(u), p) << "\" x2=\""
      << num(px(z_hi), p) << "\" y2=\"" << num(py(u), p) << "\" stroke=\"" << kTongueColor
      << "\" stroke-width=\"1.500\" stroke-dasharray=\"6,3\"/>\n";

  auto dot = [&](const char* cls, double z, double e, const std::string& fill) {
    out << "  <circle class=\"" << cls << "\" cx=\"" << num(px(z), p) << "\" cy=\"" << num(py(e), p)
        << "\" r=\"" << num(marker, p) << "\" fill=\"" << fill << "\" stroke=\"" << kDotStroke
        << "\" stroke-width=\"0.750\"/>\n";
  };
  auto cross = [&](double z, double e) {
    out << "  <g class=\"cross\" transform=\"translate(" << num(px(z), p) << ',' << num(py(e), p)
        << ")\" stroke=\"" << style.contact_color << "\" stroke-width=\"2\">"
        << "<line x1=\"" << num(-marker, p) << "\" y1=\"" << num(-marker, p) << "\" x2=\"" << num(marker, p)
        << "\" y2=\"" << num(marker, p) << "\"/>"
        << "<line x1=\"" << num(-marker, p) << "\" y1=\"" << num(marker, p) << "\" x2=\"" << num(marker, p)
        << "\" y2=\"" << num(-marker, p) << "\"/></g>\n";
  };

  const ContactClass contact = classify_slice(slice, u);
  if (std::holds_alternative<NoContact>(contact)) {
    dot("no-contact", slice.z_min(), 0.0, style.no_contact_color);
    dot("no-contact", slice.z_max(), 0.0, style.no_contact_color);
  } else if (const auto* hit = std::get_if<Intersection>(&contact)) {
    cross(hit->z_left, u);
    cross(hit->z_right, u);
  } else {
    dot("apex", std::get<FullContact>(contact).z_apex, slice.h(), style.contact_color);
  }
  out << "</svg>\n";
  return out.str();
}

std::string export_obj(const PalateGeometry& geometry, int nx, int nz,
                       const std::optional<std::vector<ContactClass>>& contacts) {
  if (nx < 1 || nz < 1) throw DomainError("export_obj needs nx >= 1 and nz >= 1");
  if (contacts && contacts->size() != static_cast<std::size_t>(nx + 1)) {
    throw ValidationError("contact list has " + std::to_string(contacts->size()) +
                          " entries, expected nx + 1 = " + std::to_string(nx + 1));
  }
  constexpr int p = 6;
  const SurfaceGrid grid = sample_surface(geometry, nx, nz);
  std::ostringstream out;
  auto vertex = [&](double x, double y, double z) {
    out << "v " << num(x, p) << ' ' << num(y, p) << ' ' << num(z, p) << '\n';
  };

  out << "g palate\n";
  for (const Point3& pt : grid.points) vertex(pt.x, pt.y, pt.z);
  auto idx = [nz](int i, int j) { return i * (nz + 1) + j + 1; };
  for (int i = 0; i < nx; ++i) {
    for (int j = 0; j < nz; ++j) {
      out << "f " << idx(i, j) << ' ' << idx(i + 1, j) << ' ' << idx(i + 1, j + 1) << '\n';
      out << "f " << idx(i, j) << ' ' << idx(i + 1, j + 1) << ' ' << idx(i, j + 1) << '\n';
    }
  }

  if (contacts) {
    for (int i = 0; i <= nx; ++i) {
      const DomeSlice slice = slice_at(geometry, grid.at(i, 0).x);
      const ContactClass& c = (*contacts)[static_cast<std::size_t>(i)];
      if (std::holds_alternative<NoContact>(c)) {
        for (double z : {slice.z_min(), slice.z_max()}) {
          out << "g no_contact\n";
          vertex(slice.x(), 0.0, z);
        }
      } else if (const auto* hit = std::get_if<Intersection>(&c)) {
        for (double z : {hit->z_left, hit->z_right}) {
          out << "g intersection\n";
          vertex(slice.x(), dome_elevation(slice, std::clamp(z, slice.z_min(), slice.z_max())), z);
        }
      } else {
        const double z = std::get<FullContact>(c).z_apex;
        out << "g full_contact\n";
        vertex(slice.x(), dome_elevation(slice, std::clamp(z, slice.z_min(), slice.z_max())), z);
      }
    }
  }
  return out.str();
}

}  // namespace palatum
