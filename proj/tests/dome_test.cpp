#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "oracles.hpp"
#include "palatum/dome.hpp"
#include "palatum/error.hpp"

using namespace palatum;
using palatum::testing::reference_elevation;
using palatum::testing::unit_slice;

namespace {

PalateGeometry two_slice_geometry(DomeShape shape = DomeShape::Cosine) {
  return PalateGeometry(shape, {DomeSlice(0.0, -1.0, 1.0, 8.0, shape), DomeSlice(10.0, -1.0, 1.0, 12.0, shape)});
}

}  // namespace

TEST(DomeSlice, DerivedQuantities) {
  const DomeSlice s(3.0, -4.0, 2.0, 7.0, DomeShape::HalfEllipse);
  EXPECT_DOUBLE_EQ(s.z_center(), -1.0);
  EXPECT_DOUBLE_EQ(s.half_width(), 3.0);
  EXPECT_DOUBLE_EQ(s.span(), 6.0);
}

TEST(DomeSlice, RejectsBrokenInvariants) {
  EXPECT_THROW(DomeSlice(0.0, 1.0, 1.0, 5.0, DomeShape::Cosine), ValidationError);
  EXPECT_THROW(DomeSlice(0.0, 2.0, 1.0, 5.0, DomeShape::Cosine), ValidationError);
  EXPECT_THROW(DomeSlice(0.0, -1.0, 1.0, 0.0, DomeShape::Cosine), ValidationError);
  EXPECT_THROW(DomeSlice(0.0, -1.0, 1.0, NAN, DomeShape::Cosine), ValidationError);
}

TEST(DomeElevation, CosineExamples) {
  const DomeSlice s = unit_slice(DomeShape::Cosine);
  EXPECT_NEAR(dome_elevation(s, -1.0), 0.0, 1e-12);
  EXPECT_NEAR(dome_elevation(s, 0.0), 10.0, 1e-12);
  EXPECT_NEAR(dome_elevation(s, -0.5), 5.0, 1e-12);
}

TEST(DomeElevation, HalfEllipseExampleMatchesBisectionOnImplicitEquation) {
  const DomeSlice s = unit_slice(DomeShape::HalfEllipse);
  const double u = dome_elevation(s, 0.5);
  EXPECT_NEAR(u, 10.0 * std::sqrt(0.75), 1e-12);
  EXPECT_NEAR(u, 8.6603, 5e-5);

  // Solve ((z - zc)/a)^2 + (u/b)^2 = 1 for u at z = 0.5 by bisection.
  double lo = 0.0;
  double hi = 10.0;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    (0.25 + (mid / 10.0) * (mid / 10.0) < 1.0 ? lo : hi) = mid;
  }
  EXPECT_NEAR(u, lo, 1e-9);
}

TEST(DomeElevation, OutOfRangeNamesSlice) {
  const DomeSlice s(17.5, -1.0, 1.0, 10.0, DomeShape::Cosine);
  try {
    dome_elevation(s, 1.5);
    FAIL() << "expected DomainError";
  } catch (const DomainError& e) {
    EXPECT_NE(std::string(e.what()).find("x=17.5"), std::string::npos) << e.what();
  }
}

TEST(DomeElevation, MatchesReferenceFormulaOnRandomSlices) {
  std::mt19937_64 rng(7);
  for (DomeShape shape : {DomeShape::Cosine, DomeShape::HalfEllipse}) {
    for (int n = 0; n < 500; ++n) {
      const DomeSlice s = palatum::testing::random_slice(rng, shape);
      std::uniform_real_distribution<double> zdist(s.z_min(), s.z_max());
      const double z = zdist(rng);
      EXPECT_NEAR(dome_elevation(s, z), reference_elevation(s, z), 1e-9 * s.h());
    }
  }
}

TEST(DomeElevation, ProfileInvariants) {
  std::mt19937_64 rng(11);
  for (DomeShape shape : {DomeShape::Cosine, DomeShape::HalfEllipse}) {
    for (int n = 0; n < 200; ++n) {
      const DomeSlice s = palatum::testing::random_slice(rng, shape);
      EXPECT_NEAR(dome_elevation(s, s.z_min()), 0.0, 1e-12);
      EXPECT_NEAR(dome_elevation(s, s.z_max()), 0.0, 1e-12);
      EXPECT_NEAR(dome_elevation(s, s.z_center()), s.h(), 1e-12);

      std::uniform_real_distribution<double> ddist(0.0, s.half_width());
      const double d = ddist(rng);
      EXPECT_NEAR(dome_elevation(s, s.z_center() + d), dome_elevation(s, s.z_center() - d), 1e-12);

      double prev = -1.0;
      for (int k = 0; k < 1000; ++k) {
        const double z = s.z_min() + (s.z_center() - s.z_min()) * k / 999.0;
        const double u = dome_elevation(s, z);
        EXPECT_GE(u, prev);
        EXPECT_GE(u, 0.0);
        EXPECT_LE(u, s.h());
        prev = u;
      }
    }
  }
}

TEST(PalateGeometry, ValidatesSlices) {
  EXPECT_THROW(PalateGeometry(DomeShape::Cosine, {unit_slice(DomeShape::Cosine)}), ValidationError);
  EXPECT_THROW(PalateGeometry(DomeShape::Cosine,
                              {DomeSlice(5.0, -1, 1, 2, DomeShape::Cosine), DomeSlice(5.0, -1, 1, 2, DomeShape::Cosine)}),
               ValidationError);
}

TEST(PalateGeometry, RetagsSlicesWithGeometryShape) {
  const PalateGeometry g(DomeShape::HalfEllipse, {DomeSlice(0.0, -1, 1, 2, DomeShape::Cosine),
                                                  DomeSlice(1.0, -1, 1, 2, DomeShape::Cosine)});
  for (const auto& s : g.slices()) EXPECT_EQ(s.shape(), DomeShape::HalfEllipse);
  EXPECT_EQ(g.with_shape(DomeShape::Cosine).slices()[1].shape(), DomeShape::Cosine);
}

TEST(SliceAt, LinearInterpolation) {
  const PalateGeometry g = two_slice_geometry();
  EXPECT_DOUBLE_EQ(slice_at(g, 0.0).h(), 8.0);
  EXPECT_DOUBLE_EQ(slice_at(g, 5.0).h(), 10.0);
  EXPECT_DOUBLE_EQ(slice_at(g, 7.5).h(), 11.0);
  EXPECT_EQ(slice_at(g, 10.0), g.slices()[1]);
  EXPECT_THROW(slice_at(g, -0.1), DomainError);
  EXPECT_THROW(slice_at(g, 10.1), DomainError);
}

TEST(SliceAt, InterpolatesLateralBounds) {
  const PalateGeometry g(DomeShape::Cosine, {DomeSlice(0.0, -10, 10, 4, DomeShape::Cosine),
                                             DomeSlice(20.0, -20, 16, 12, DomeShape::Cosine)});
  const DomeSlice s = slice_at(g, 5.0);
  EXPECT_DOUBLE_EQ(s.z_min(), -12.5);
  EXPECT_DOUBLE_EQ(s.z_max(), 11.5);
  EXPECT_DOUBLE_EQ(s.h(), 6.0);
  EXPECT_DOUBLE_EQ(s.x(), 5.0);
}

TEST(SampleSurface, SingleQuadHasFourBaselineCorners) {
  const SurfaceGrid grid = sample_surface(two_slice_geometry(), 1, 1);
  ASSERT_EQ(grid.points.size(), 4u);
  for (const auto& p : grid.points) EXPECT_EQ(p.y, 0.0);
}

TEST(SampleSurface, CentrePointIsApexOfMiddleSlice) {
  const DomeSlice s = unit_slice(DomeShape::Cosine);
  const PalateGeometry g(DomeShape::Cosine, {DomeSlice(0.0, -1, 1, 10, DomeShape::Cosine),
                                             DomeSlice(4.0, -1, 1, 10, DomeShape::Cosine)});
  const SurfaceGrid grid = sample_surface(g, 2, 2);
  EXPECT_NEAR(grid.at(1, 1).y, s.h(), 1e-12);
  EXPECT_DOUBLE_EQ(grid.at(1, 1).x, 2.0);
}

TEST(SampleSurface, ExhaustiveTwoSliceGrid) {
  const PalateGeometry g = two_slice_geometry();
  const SurfaceGrid grid = sample_surface(g, 4, 8);
  ASSERT_EQ(grid.points.size(), 45u);
  const auto top = std::max_element(grid.points.begin(), grid.points.end(),
                                    [](const Point3& a, const Point3& b) { return a.y < b.y; });
  EXPECT_NEAR(top->y, 12.0, 1e-12);
  EXPECT_DOUBLE_EQ(top->x, 10.0);
  EXPECT_NEAR(top->z, 0.0, 1e-12);
  for (int i = 0; i <= 4; ++i) {
    EXPECT_EQ(grid.at(i, 0).y, 0.0);
    EXPECT_EQ(grid.at(i, 8).y, 0.0);
    for (int j = 0; j <= 8; ++j) {
      const Point3& p = grid.at(i, j);
      EXPECT_NEAR(p.y, reference_elevation(slice_at(g, p.x), p.z), 1e-9);
    }
  }
}

TEST(SampleSurface, RejectsEmptyGrid) {
  EXPECT_THROW(sample_surface(two_slice_geometry(), 0, 4), DomainError);
  EXPECT_THROW(sample_surface(two_slice_geometry(), 4, 0), DomainError);
}
