#include "eulercount/grid.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace eulercount {

namespace {

void check_dims(int width, int height) {
  if (width < 1 || height < 1) {
    throw std::invalid_argument("grid dimensions must be at least 1x1, got " +
                                std::to_string(width) + "x" + std::to_string(height));
  }
}

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::uint32_t{0});
  }

  std::uint32_t find(std::uint32_t v) {
    while (parent_[v] != v) {
      parent_[v] = parent_[parent_[v]];
      v = parent_[v];
    }
    return v;
  }

  /// Returns true when two distinct sets were merged.
  bool unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a < b) std::swap(a, b);
    parent_[a] = b;
    return true;
  }

 private:
  std::vector<std::uint32_t> parent_;
};

}  // namespace

HeightField::HeightField(int width, int height) : width_(width), height_(height) {
  check_dims(width, height);
  values_.assign(static_cast<std::size_t>(width) * static_cast<std::size_t>(height), 0);
}

HeightField::HeightField(int width, int height, std::vector<std::uint32_t> values)
    : width_(width), height_(height), values_(std::move(values)) {
  check_dims(width, height);
  if (values_.size() != static_cast<std::size_t>(width) * static_cast<std::size_t>(height)) {
    throw std::invalid_argument("value count does not match grid dimensions");
  }
}

std::uint32_t HeightField::max_value() const {
  return *std::max_element(values_.begin(), values_.end());
}

std::uint64_t HeightField::total() const {
  return std::accumulate(values_.begin(), values_.end(), std::uint64_t{0});
}

HeightField HeightField::scaled(std::uint32_t factor) const {
  HeightField out = *this;
  for (auto& v : out.values_) v *= factor;
  return out;
}

HeightField HeightField::padded(int border) const {
  if (border < 0) throw std::invalid_argument("negative padding");
  HeightField out(width_ + 2 * border, height_ + 2 * border);
  for (int y = 0; y < height_; ++y) {
    std::copy_n(values_.begin() + static_cast<std::ptrdiff_t>(index(0, y)), width_,
                out.values_.begin() +
                    static_cast<std::ptrdiff_t>(out.index(border, y + border)));
  }
  return out;
}

HeightField operator+(const HeightField& a, const HeightField& b) {
  if (a.width() != b.width() || a.height() != b.height()) {
    throw std::invalid_argument("cannot add fields of different dimensions");
  }
  std::vector<std::uint32_t> sum(a.values().begin(), a.values().end());
  for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += b.values()[i];
  return HeightField(a.width(), a.height(), std::move(sum));
}

BitMask::BitMask(int width, int height) : width_(width), height_(height) {
  check_dims(width, height);
  bits_.assign(static_cast<std::size_t>(width) * static_cast<std::size_t>(height), 0);
}

BitMask BitMask::above(const HeightField& field, std::uint32_t level) {
  BitMask mask(field.width(), field.height());
  auto values = field.values();
  for (std::size_t i = 0; i < values.size(); ++i) mask.bits_[i] = values[i] > level;
  return mask;
}

BitMask BitMask::at_most(const HeightField& field, std::uint32_t level) {
  BitMask mask(field.width(), field.height());
  auto values = field.values();
  for (std::size_t i = 0; i < values.size(); ++i) mask.bits_[i] = values[i] <= level;
  return mask;
}

std::int64_t betti0(const BitMask& mask, Connectivity conn) {
  const int w = mask.width();
  const int h = mask.height();
  DisjointSets sets(static_cast<std::size_t>(w) * static_cast<std::size_t>(h));
  auto id = [w](int x, int y) {
    return static_cast<std::uint32_t>(y) * static_cast<std::uint32_t>(w) +
           static_cast<std::uint32_t>(x);
  };
  const bool diagonal = conn == Connectivity::EightNeighbor;

  // Raster scan, linking each set cell to its already-visited neighbours.
  std::int64_t cells = 0;
  std::int64_t merges = 0;
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      if (!mask.test(x, y)) continue;
      ++cells;
      const auto here = id(x, y);
      if (x > 0 && mask.test(x - 1, y)) merges += sets.unite(here, id(x - 1, y));
      if (y == 0) continue;
      if (mask.test(x, y - 1)) merges += sets.unite(here, id(x, y - 1));
      if (diagonal) {
        if (x > 0 && mask.test(x - 1, y - 1)) merges += sets.unite(here, id(x - 1, y - 1));
        if (x + 1 < w && mask.test(x + 1, y - 1)) merges += sets.unite(here, id(x + 1, y - 1));
      }
    }
  }
  return cells - merges;
}

std::vector<std::uint8_t> render_pgm(const HeightField& field) {
  const std::string header = "P5\n" + std::to_string(field.width()) + " " +
                             std::to_string(field.height()) + "\n255\n";
  std::vector<std::uint8_t> out(header.begin(), header.end());
  out.reserve(out.size() + field.size());
  const std::uint64_t peak = field.max_value();
  for (std::uint32_t v : field.values()) {
    if (peak == 0) {
      out.push_back(0);
      continue;
    }
    // round(v * 255 / peak), halves rounded up
    const std::uint64_t level = (2 * std::uint64_t{v} * 255 + peak) / (2 * peak);
    out.push_back(static_cast<std::uint8_t>(level));
  }
  return out;
}

}  // namespace eulercount
