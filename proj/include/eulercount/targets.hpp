#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

#include "eulercount/grid.hpp"
#include "eulercount/rng.hpp"

namespace eulercount {

struct Offset {
  int dx = 0;
  int dy = 0;
  auto operator<=>(const Offset&) const = default;
  Offset operator-() const { return {-dx, -dy}; }
};

struct Point {
  int x = 0;
  int y = 0;
  auto operator<=>(const Point&) const = default;
  Point operator+(Offset o) const { return {x + o.dx, y + o.dy}; }
};

inline constexpr int kMaxRadius = 128;

/// Integer lattice offsets of the open digital disk dx^2 + dy^2 < r^2.
class DiskTemplate {
 public:
  explicit DiskTemplate(int radius);

  int radius() const { return radius_; }
  std::span<const Offset> offsets() const { return offsets_; }
  std::size_t size() const { return offsets_.size(); }

  bool contains(Offset o) const {
    return std::int64_t{o.dx} * o.dx + std::int64_t{o.dy} * o.dy <
           std::int64_t{radius_} * radius_;
  }

  /// Largest |dx| in row dy, or -1 when the row is empty.
  int half_width(int dy) const {
    const int a = dy < 0 ? -dy : dy;
    return a < radius_ ? half_widths_[static_cast<std::size_t>(a)] : -1;
  }

  /// Rows span dy in [-extent(), extent()].
  int extent() const { return radius_ - 1; }

 private:
  int radius_;
  std::vector<int> half_widths_;
  std::vector<Offset> offsets_;
};

DiskTemplate rasterize_disk(int radius);

/// An l x w sensor field receiving n radius-r targets.
struct FieldConfig {
  int length = 0;
  int width = 0;
  int radius = 1;
  std::int64_t targets = 0;
  std::uint64_t seed = 0;

  /// Throws std::invalid_argument when the allowed-centre box is empty.
  void validate() const;

  // Allowed centres form the closed box [r, l-r-1] x [r, w-r-1].
  int allowed_length() const { return length - 2 * radius; }
  int allowed_width() const { return width - 2 * radius; }
  std::int64_t allowed_area() const {
    return std::int64_t{allowed_length()} * allowed_width();
  }
};

std::vector<Point> place_uniform(const FieldConfig& config, Rng& rng);

/// Adds one to every cell covered by `disk` centred at `center`.
void stamp(HeightField& field, const DiskTemplate& disk, Point center);

/// Same as stamp() but drops cells that fall outside the field.
void stamp_clipped(HeightField& field, const DiskTemplate& disk, Point center);

HeightField make_field(int length, int width, const DiskTemplate& disk,
                       std::span<const Point> centers);

}  // namespace eulercount
