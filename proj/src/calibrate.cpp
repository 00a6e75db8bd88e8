#include "eulercount/calibrate.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "eulercount/euler.hpp"
#include "eulercount/json.hpp"
#include "eulercount/parallel.hpp"

namespace eulercount {

namespace {

std::vector<Offset> tangency_offsets(const std::map<Offset, ErrorType>& classes) {
  std::vector<Offset> out;
  for (const auto& [offset, type] : classes) {
    if (type == ErrorType::Type1) out.push_back(offset);
  }
  return out;
}

std::string cache_key(int radius, int length, int width, EdgeMethod method) {
  return std::to_string(radius) + ":" + std::to_string(length) + ":" + std::to_string(width) +
         ":" + std::string(to_string(method));
}

}  // namespace

std::int64_t pair_integral(const DiskTemplate& disk, Offset offset) {
  const std::array<Point, 2> centers{Point{0, 0}, Point{offset.dx, offset.dy}};
  return disk_stack_integral(disk, centers);
}

std::map<Offset, ErrorType> classify_pair_offsets(int radius, int window, unsigned threads) {
  const DiskTemplate disk(radius);
  if (window < 0) window = classification_window(radius);
  const int side = 2 * window + 1;
  // Offsets whose supports are more than one cell apart cannot interact.
  const int contact = 2 * disk.extent() + 1;

  std::vector<std::int64_t> integrals(static_cast<std::size_t>(side) * side, 2);
  auto cell = [&](int dx, int dy) -> std::int64_t& {
    return integrals[static_cast<std::size_t>(dy + window) * side +
                     static_cast<std::size_t>(dx + window)];
  };
  // Disk and 8-adjacency are both invariant under the square's symmetries, so
  // one octant 0 <= dy <= dx determines the rest.
  const int reach = std::min(contact, window);
  parallel_for(static_cast<std::size_t>(reach) + 1, threads, [&](std::size_t a) {
    const int dx = static_cast<int>(a);
    for (int dy = 0; dy <= dx; ++dy) {
      if (dx == 0) continue;
      const auto value = pair_integral(disk, {dx, dy});
      for (int sx : {-1, 1}) {
        for (int sy : {-1, 1}) {
          cell(sx * dx, sy * dy) = value;
          cell(sx * dy, sy * dx) = value;
        }
      }
    }
  });

  std::map<Offset, ErrorType> classes;
  for (int dy = -window; dy <= window; ++dy) {
    for (int dx = -window; dx <= window; ++dx) {
      const auto value = cell(dx, dy);
      switch (value) {
        case 2:
          break;
        case 0:
          classes.emplace(Offset{dx, dy}, ErrorType::Type0);
          break;
        case 1:
          classes.emplace(Offset{dx, dy}, ErrorType::Type1);
          break;
        case 3:
          classes.emplace(Offset{dx, dy}, ErrorType::Type3);
          break;
        default:
          classes.emplace(Offset{dx, dy}, ErrorType::Other);
      }
    }
  }
  return classes;
}

ErrorTypeCounts error_type_counts(const std::map<Offset, ErrorType>& classes) {
  ErrorTypeCounts counts;
  for (const auto& [offset, type] : classes) {
    switch (type) {
      case ErrorType::Type0: ++counts.type0; break;
      case ErrorType::Type1: ++counts.type1; break;
      case ErrorType::Type3: ++counts.type3; break;
      case ErrorType::Other: ++counts.other; break;
    }
  }
  return counts;
}

ErrorTypeCounts error_type_counts(int radius, unsigned threads) {
  return error_type_counts(classify_pair_offsets(radius, -1, threads));
}

std::string_view to_string(ScanRegion region) {
  return region == ScanRegion::Window ? "window" : "annulus";
}

ScanRegion parse_scan_region(std::string_view text) {
  if (text == "window") return ScanRegion::Window;
  if (text == "annulus") return ScanRegion::Annulus;
  throw std::invalid_argument("unknown scan region '" + std::string(text) +
                              "' (expected window or annulus)");
}

bool in_scan_region(Offset offset, int radius, ScanRegion region) {
  if (region == ScanRegion::Window) return true;
  const std::int64_t inner = std::max(0, 2 * radius - 3);
  const std::int64_t d2 = static_cast<std::int64_t>(offset.dx) * offset.dx +
                          static_cast<std::int64_t>(offset.dy) * offset.dy;
  return d2 >= inner * inner;
}

ErrorTypeCounts error_type_counts(const std::map<Offset, ErrorType>& classes, int radius,
                                  ScanRegion region) {
  std::map<Offset, ErrorType> kept;
  for (const auto& [offset, type] : classes) {
    if (in_scan_region(offset, radius, region)) kept.emplace(offset, type);
  }
  return error_type_counts(kept);
}

ErrorTypeCounts error_type_counts(int radius, ScanRegion region, unsigned threads) {
  return error_type_counts(classify_pair_offsets(radius, -1, threads), radius, region);
}

std::string_view to_string(EdgeMethod method) {
  return method == EdgeMethod::Exact ? "exact" : "paper";
}

EdgeMethod parse_edge_method(std::string_view text) {
  if (text == "exact") return EdgeMethod::Exact;
  if (text == "paper") return EdgeMethod::PaperWeighted;
  throw std::invalid_argument("unknown edge method '" + std::string(text) +
                              "' (expected exact or paper)");
}

double corrected_b(int radius, int length, int width, EdgeMethod method) {
  return corrected_b(classify_pair_offsets(radius), radius, length, width, method);
}

double corrected_b(const std::map<Offset, ErrorType>& classes, int radius, int length, int width,
                   EdgeMethod method) {
  const int bound = method == EdgeMethod::Exact ? 2 * radius : 4 * radius;
  if (length <= bound || width <= bound) {
    throw std::invalid_argument("field " + std::to_string(length) + "x" +
                                std::to_string(width) + " must exceed " + std::to_string(bound) +
                                " in both directions for the " +
                                std::string(to_string(method)) + " edge correction");
  }
  const auto tangencies = tangency_offsets(classes);
  const std::int64_t box_x = length - 2 * radius;
  const std::int64_t box_y = width - 2 * radius;

  if (method == EdgeMethod::Exact) {
    // Each offset d is available to the (box_x - |dx|)(box_y - |dy|) centres
    // whose partner p + d also lies in the box.
    double pairs = 0.0;
    for (Offset d : tangencies) {
      const std::int64_t nx = std::max<std::int64_t>(0, box_x - std::abs(d.dx));
      const std::int64_t ny = std::max<std::int64_t>(0, box_y - std::abs(d.dy));
      pairs += static_cast<double>(nx * ny);
    }
    return pairs / static_cast<double>(box_x * box_y);
  }

  // Boundary band: allowed centres within Chebyshev distance < 2r of the box edge.
  const std::int64_t depth = 2 * radius;
  std::int64_t band_cells = 0;
  std::int64_t band_tangencies = 0;
  for (std::int64_t y = 0; y < box_y; ++y) {
    const bool edge_row = y < depth || y >= box_y - depth;
    for (std::int64_t x = 0; x < box_x; ++x) {
      if (!edge_row && x == depth && box_x - depth > x) x = box_x - depth;
      ++band_cells;
      for (Offset d : tangencies) {
        const std::int64_t px = x + d.dx;
        const std::int64_t py = y + d.dy;
        band_tangencies += px >= 0 && py >= 0 && px < box_x && py < box_y;
      }
    }
  }
  const double alpha = static_cast<double>(band_tangencies) / static_cast<double>(band_cells);
  const double beta = static_cast<double>(tangencies.size());
  const double total = static_cast<double>(length) * width;
  const double core = static_cast<double>(length - 4 * radius) * (width - 4 * radius);
  return ((total - core) * alpha + core * beta) / total;
}

double second_order_c(int radius, unsigned threads) {
  return second_order_c(classify_pair_offsets(radius, -1, threads), radius, threads);
}

double second_order_c(const std::map<Offset, ErrorType>& classes, int radius, unsigned threads) {
  const auto counts = error_type_counts(classes);
  if (counts.type0 != 0 || counts.type3 != 0 || counts.other != 0) {
    throw std::invalid_argument("second-order constant is undefined for radius " +
                                std::to_string(radius) + " (non-tangency errors present)");
  }
  const auto tangencies = tangency_offsets(classes);
  if (tangencies.empty()) return 0.0;
  const DiskTemplate disk(radius);

  // The third disk may coincide with the second (e == d); that stack keeps I = 2.
  std::vector<std::int64_t> good(tangencies.size(), 0);
  parallel_for(tangencies.size(), threads, [&](std::size_t i) {
    const Offset d = tangencies[i];
    for (Offset e : tangencies) {
      const std::array<Point, 3> centers{Point{0, 0}, Point{d.dx, d.dy}, Point{e.dx, e.dy}};
      good[i] += disk_stack_integral(disk, centers) == 2;
    }
  });
  std::int64_t total = 0;
  for (auto g : good) total += g;
  return static_cast<double>(total) / static_cast<double>(tangencies.size());
}

CalibrationResult calibrate(int radius, int length, int width, EdgeMethod method,
                            unsigned threads) {
  const auto classes = classify_pair_offsets(radius, -1, threads);
  CalibrationResult result;
  result.radius = radius;
  result.length = length;
  result.width = width;
  result.method = method;
  result.counts = error_type_counts(classes);
  result.b = result.counts.type1;
  if (result.counts.type0 == 0 && result.counts.type3 == 0 && result.counts.other == 0) {
    result.c = second_order_c(classes, radius, threads);
  }
  result.b_corrected = corrected_b(classes, radius, length, width, method);
  return result;
}

void to_json(nlohmann::json& j, const CalibrationResult& r) {
  j = nlohmann::json{{"radius", r.radius},
                     {"b", r.b},
                     {"type0", r.counts.type0},
                     {"type1", r.counts.type1},
                     {"type3", r.counts.type3},
                     {"other", r.counts.other},
                     {"c", r.c ? nlohmann::json(*r.c) : nlohmann::json(nullptr)},
                     {"b_corrected", r.b_corrected},
                     {"method", to_string(r.method)},
                     {"length", r.length},
                     {"width", r.width}};
}

void from_json(const nlohmann::json& j, CalibrationResult& r) {
  r.radius = j.at("radius").get<int>();
  r.b = j.at("b").get<std::int64_t>();
  r.counts.type0 = j.at("type0").get<std::int64_t>();
  r.counts.type1 = j.at("type1").get<std::int64_t>();
  r.counts.type3 = j.at("type3").get<std::int64_t>();
  r.counts.other = j.value("other", std::int64_t{0});
  if (j.at("c").is_null()) {
    r.c.reset();
  } else {
    r.c = j.at("c").get<double>();
  }
  r.b_corrected = j.at("b_corrected").get<double>();
  r.method = parse_edge_method(j.at("method").get<std::string>());
  r.length = j.at("length").get<int>();
  r.width = j.at("width").get<int>();
}

CalibrationCache::CalibrationCache(std::filesystem::path path) : path_(std::move(path)) {
  std::ifstream in(path_);
  if (!in) return;
  const auto doc = nlohmann::json::parse(in);
  for (const auto& entry : doc.at("entries")) {
    auto result = entry.get<CalibrationResult>();
    entries_[cache_key(result.radius, result.length, result.width, result.method)] = result;
  }
}

std::optional<CalibrationResult> CalibrationCache::find(int radius, int length, int width,
                                                        EdgeMethod method) const {
  auto it = entries_.find(cache_key(radius, length, width, method));
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

void CalibrationCache::store(const CalibrationResult& result) {
  entries_[cache_key(result.radius, result.length, result.width, result.method)] = result;
}

void CalibrationCache::save() const {
  nlohmann::json doc;
  doc["entries"] = nlohmann::json::array();
  for (const auto& [key, result] : entries_) doc["entries"].push_back(result);
  std::ofstream out(path_);
  if (!out) throw std::runtime_error("cannot write calibration cache " + path_.string());
  out << doc.dump(2) << '\n';
}

CalibrationResult CalibrationCache::get_or_compute(int radius, int length, int width,
                                                   EdgeMethod method, unsigned threads) {
  if (auto hit = find(radius, length, width, method)) return *hit;
  auto result = calibrate(radius, length, width, method, threads);
  store(result);
  save();
  return result;
}

}  // namespace eulercount
