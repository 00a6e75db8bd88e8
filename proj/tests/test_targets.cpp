#include <gtest/gtest.h>

#include <array>
#include <set>

#include "eulercount/targets.hpp"
#include "oracles.hpp"

namespace eulercount {
namespace {

TEST(RasterizeDisk, RadiusOneIsSingleCell) {
  const auto disk = rasterize_disk(1);
  ASSERT_EQ(disk.size(), 1u);
  EXPECT_EQ(disk.offsets()[0], (Offset{0, 0}));
}

TEST(RasterizeDisk, CountsMatchLatticeEnumeration) {
  EXPECT_EQ(oracle::open_disk_lattice_count(2), 9);
  EXPECT_EQ(oracle::open_disk_lattice_count(6), 109);
  for (int r = 1; r <= kMaxRadius; ++r) {
    ASSERT_EQ(static_cast<std::int64_t>(rasterize_disk(r).size()), oracle::open_disk_lattice_count(r))
        << "r=" << r;
  }
}

TEST(RasterizeDisk, RadiusTwoIsThreeByThreeBlock) {
  const auto disk = rasterize_disk(2);
  std::set<Offset> cells(disk.offsets().begin(), disk.offsets().end());
  for (int dx = -1; dx <= 1; ++dx) {
    for (int dy = -1; dy <= 1; ++dy) EXPECT_TRUE(cells.count({dx, dy}));
  }
  EXPECT_EQ(cells.size(), 9u);
}

TEST(RasterizeDisk, StrictInequalityAndDihedralSymmetry) {
  for (int r : {1, 3, 6, 7, 13, 50}) {
    const auto disk = rasterize_disk(r);
    std::set<Offset> cells(disk.offsets().begin(), disk.offsets().end());
    EXPECT_TRUE(cells.count({0, 0}));
    for (int dx = -r; dx <= r; ++dx) {
      for (int dy = -r; dy <= r; ++dy) {
        EXPECT_EQ(cells.count({dx, dy}) == 1, dx * dx + dy * dy < r * r);
        EXPECT_EQ(disk.contains({dx, dy}), dx * dx + dy * dy < r * r);
      }
    }
    for (Offset o : cells) {
      for (Offset s : {Offset{-o.dx, o.dy}, Offset{o.dx, -o.dy}, Offset{o.dy, o.dx},
                       Offset{-o.dy, -o.dx}}) {
        EXPECT_TRUE(cells.count(s));
      }
    }
  }
}

TEST(RasterizeDisk, SizeIncreasesWithRadius) {
  for (int r = 2; r <= kMaxRadius; ++r) {
    EXPECT_GT(rasterize_disk(r).size(), rasterize_disk(r - 1).size());
  }
}

TEST(RasterizeDisk, RejectsOutOfRangeRadius) {
  EXPECT_THROW(rasterize_disk(0), std::invalid_argument);
  EXPECT_THROW(rasterize_disk(-3), std::invalid_argument);
  EXPECT_THROW(rasterize_disk(kMaxRadius + 1), std::invalid_argument);
}

TEST(PlaceUniform, ZeroTargets) {
  Rng rng(1);
  EXPECT_TRUE(place_uniform({50, 50, 6, 0, 1}, rng).empty());
}

TEST(PlaceUniform, SinglePointRegion) {
  Rng rng(5);
  const auto centers = place_uniform({13, 13, 6, 25, 5}, rng);
  ASSERT_EQ(centers.size(), 25u);
  for (Point p : centers) EXPECT_EQ(p, (Point{6, 6}));
}

TEST(PlaceUniform, RejectsEmptyRegion) {
  Rng rng(1);
  EXPECT_THROW(place_uniform({12, 40, 6, 3, 1}, rng), std::invalid_argument);
  EXPECT_THROW(place_uniform({40, 12, 6, 3, 1}, rng), std::invalid_argument);
  EXPECT_THROW(place_uniform({40, 40, 6, -1, 1}, rng), std::invalid_argument);
}

TEST(PlaceUniform, DeterministicAndWithinMargins) {
  const FieldConfig config{60, 45, 7, 2000, 11};
  Rng a(42);
  Rng b(42);
  const auto first = place_uniform(config, a);
  EXPECT_EQ(first, place_uniform(config, b));
  for (Point p : first) {
    EXPECT_GE(p.x, 7);
    EXPECT_LE(p.x, 60 - 7 - 1);
    EXPECT_GE(p.y, 7);
    EXPECT_LE(p.y, 45 - 7 - 1);
  }
  Rng c(43);
  EXPECT_NE(first, place_uniform(config, c));
}

TEST(PlaceUniform, ChiSquareOnSixteenBlocks) {
  // 488 = 4 * 122, so the allowed box splits into 16 equal blocks.
  const FieldConfig config{500, 500, 6, 1'000'000, 0};
  Rng rng(2718);
  std::array<std::int64_t, 16> blocks{};
  for (Point p : place_uniform(config, rng)) {
    const int bx = (p.x - 6) / 122;
    const int by = (p.y - 6) / 122;
    ++blocks[static_cast<std::size_t>(by * 4 + bx)];
  }
  const double expected = 1'000'000.0 / 16.0;
  double chi2 = 0.0;
  for (auto observed : blocks) {
    chi2 += (observed - expected) * (observed - expected) / expected;
  }
  // Upper 0.001 quantile of chi-square with 15 degrees of freedom.
  EXPECT_LT(chi2, 37.697);
}

TEST(Stamp, SingleCell) {
  HeightField field(7, 7);
  stamp(field, rasterize_disk(1), {3, 3});
  EXPECT_EQ(field.at(3, 3), 1u);
  EXPECT_EQ(field.total(), 1u);
}

TEST(Stamp, RepeatedStampAddsUp) {
  HeightField field(20, 20);
  const auto disk = rasterize_disk(6);
  stamp(field, disk, {10, 10});
  stamp(field, disk, {10, 10});
  std::size_t twos = 0;
  for (auto v : field.values()) {
    EXPECT_TRUE(v == 0 || v == 2);
    twos += v == 2;
  }
  EXPECT_EQ(twos, 109u);
}

TEST(Stamp, TwelveApartIsDisjoint) {
  const auto disk = rasterize_disk(6);
  std::set<Offset> shifted;
  for (Offset o : disk.offsets()) shifted.insert({o.dx + 12, o.dy});
  for (Offset o : disk.offsets()) EXPECT_FALSE(shifted.count(o));

  HeightField field(40, 20);
  stamp(field, disk, {10, 10});
  stamp(field, disk, {22, 10});
  EXPECT_EQ(field.max_value(), 1u);
}

TEST(Stamp, RejectsOutOfBounds) {
  HeightField field(10, 10);
  EXPECT_THROW(stamp(field, rasterize_disk(3), {1, 5}), std::out_of_range);
  EXPECT_THROW(stamp(field, rasterize_disk(3), {5, 8}), std::out_of_range);
}

TEST(Stamp, MassConservation) {
  const FieldConfig config{80, 70, 5, 300, 0};
  Rng rng(77);
  const auto disk = rasterize_disk(5);
  const auto centers = place_uniform(config, rng);
  const auto field = make_field(80, 70, disk, centers);
  EXPECT_EQ(field.total(), centers.size() * disk.size());
}

TEST(FieldConfig, AllowedAreaMatchesFormula) {
  const FieldConfig config{500, 500, 6, 0, 0};
  EXPECT_EQ(config.allowed_area(), 488 * 488);
}

}  // namespace
}  // namespace eulercount
