#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace eulercount {

enum class Connectivity { FourNeighbor, EightNeighbor };

/// Dense row-major grid of per-sensor target counts.
class HeightField {
 public:
  HeightField(int width, int height);
  HeightField(int width, int height, std::vector<std::uint32_t> values);

  int width() const { return width_; }
  int height() const { return height_; }
  std::size_t size() const { return values_.size(); }

  bool contains(int x, int y) const {
    return x >= 0 && y >= 0 && x < width_ && y < height_;
  }

  std::uint32_t at(int x, int y) const { return values_[index(x, y)]; }
  std::uint32_t& at(int x, int y) { return values_[index(x, y)]; }

  std::span<const std::uint32_t> values() const { return values_; }
  std::uint32_t max_value() const;
  std::uint64_t total() const;

  /// Every cell multiplied by `factor`.
  HeightField scaled(std::uint32_t factor) const;

  /// Copy surrounded by `border` rows/columns of zeros on every side.
  HeightField padded(int border) const;

  bool operator==(const HeightField&) const = default;

 private:
  std::size_t index(int x, int y) const {
    return static_cast<std::size_t>(y) * static_cast<std::size_t>(width_) +
           static_cast<std::size_t>(x);
  }

  int width_;
  int height_;
  std::vector<std::uint32_t> values_;
};

HeightField operator+(const HeightField& a, const HeightField& b);

class BitMask {
 public:
  BitMask(int width, int height);

  /// {h > level}
  static BitMask above(const HeightField& field, std::uint32_t level);
  /// {h <= level}
  static BitMask at_most(const HeightField& field, std::uint32_t level);

  int width() const { return width_; }
  int height() const { return height_; }

  bool test(int x, int y) const { return bits_[index(x, y)] != 0; }
  void set(int x, int y, bool value = true) { bits_[index(x, y)] = value ? 1 : 0; }

 private:
  std::size_t index(int x, int y) const {
    return static_cast<std::size_t>(y) * static_cast<std::size_t>(width_) +
           static_cast<std::size_t>(x);
  }

  int width_;
  int height_;
  std::vector<std::uint8_t> bits_;
};

/// Number of connected components of the set cells (union-find).
std::int64_t betti0(const BitMask& mask, Connectivity conn);

/// Binary PGM (P5, maxval 255). The field maximum maps to 255, zero to 0,
/// linear in between with round-half-up.
std::vector<std::uint8_t> render_pgm(const HeightField& field);

}  // namespace eulercount
