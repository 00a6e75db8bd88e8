#include "eulercount/targets.hpp"

#include <stdexcept>
#include <string>

namespace eulercount {

DiskTemplate::DiskTemplate(int radius) : radius_(radius) {
  if (radius < 1 || radius > kMaxRadius) {
    throw std::invalid_argument("disk radius must lie in [1, " + std::to_string(kMaxRadius) +
                                "], got " + std::to_string(radius));
  }
  half_widths_.resize(static_cast<std::size_t>(radius));
  for (int dy = 0; dy < radius; ++dy) {
    int hw = 0;
    while ((hw + 1) * (hw + 1) + dy * dy < radius * radius) ++hw;
    half_widths_[static_cast<std::size_t>(dy)] = hw;
  }
  for (int dy = -extent(); dy <= extent(); ++dy) {
    const int hw = half_width(dy);
    for (int dx = -hw; dx <= hw; ++dx) offsets_.push_back({dx, dy});
  }
}

DiskTemplate rasterize_disk(int radius) { return DiskTemplate(radius); }

void FieldConfig::validate() const {
  if (radius < 1 || radius > kMaxRadius) {
    throw std::invalid_argument("radius must lie in [1, " + std::to_string(kMaxRadius) + "]");
  }
  if (length <= 2 * radius || width <= 2 * radius) {
    throw std::invalid_argument("field " + std::to_string(length) + "x" +
                                std::to_string(width) +
                                " leaves no room for centres of radius " +
                                std::to_string(radius));
  }
  if (targets < 0) throw std::invalid_argument("target count must be non-negative");
}

std::vector<Point> place_uniform(const FieldConfig& config, Rng& rng) {
  config.validate();
  const int r = config.radius;
  std::vector<Point> centers;
  centers.reserve(static_cast<std::size_t>(config.targets));
  for (std::int64_t i = 0; i < config.targets; ++i) {
    const int x = rng.between(r, config.length - r - 1);
    const int y = rng.between(r, config.width - r - 1);
    centers.push_back({x, y});
  }
  return centers;
}

void stamp(HeightField& field, const DiskTemplate& disk, Point center) {
  const int e = disk.extent();
  const int reach = disk.half_width(0);
  if (!field.contains(center.x - reach, center.y - e) ||
      !field.contains(center.x + reach, center.y + e)) {
    throw std::out_of_range("disk at (" + std::to_string(center.x) + ", " +
                            std::to_string(center.y) + ") leaves the field");
  }
  for (int dy = -e; dy <= e; ++dy) {
    const int hw = disk.half_width(dy);
    for (int dx = -hw; dx <= hw; ++dx) ++field.at(center.x + dx, center.y + dy);
  }
}

void stamp_clipped(HeightField& field, const DiskTemplate& disk, Point center) {
  for (Offset o : disk.offsets()) {
    const Point p = center + o;
    if (field.contains(p.x, p.y)) ++field.at(p.x, p.y);
  }
}

HeightField make_field(int length, int width, const DiskTemplate& disk,
                       std::span<const Point> centers) {
  HeightField field(length, width);
  for (Point c : centers) stamp(field, disk, c);
  return field;
}

}  // namespace eulercount
