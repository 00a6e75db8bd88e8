#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "eulercount/targets.hpp"

namespace eulercount {

/// Two-disk outcome whose integral is not 2. `Other` covers every value
/// outside {0, 1, 3}; these show up for larger radii.
enum class ErrorType { Type0 = 0, Type1 = 1, Type3 = 3, Other = -1 };

struct ErrorTypeCounts {
  std::int64_t type0 = 0;
  std::int64_t type1 = 0;
  std::int64_t type3 = 0;
  std::int64_t other = 0;
  bool operator==(const ErrorTypeCounts&) const = default;
};

/// Half-width of the square window of second-disk offsets that is scanned.
inline int classification_window(int radius) { return 2 * radius + 2; }

/// Integral of the zero-padded field holding one disk at the origin and one at `offset`.
std::int64_t pair_integral(const DiskTemplate& disk, Offset offset);

/// Every offset in the window whose two-disk integral differs from 2.
std::map<Offset, ErrorType> classify_pair_offsets(int radius, int window = -1,
                                                  unsigned threads = 0);

ErrorTypeCounts error_type_counts(const std::map<Offset, ErrorType>& classes);
ErrorTypeCounts error_type_counts(int radius, unsigned threads = 0);

/// Which second-disk offsets contribute to the counts.
///   Window:  the whole classification window.
///   Annulus: only offsets at Euclidean distance >= 2r - 3. Type 1 and type 3
///            never occur closer than that; only some overlapping type-0 stacks do.
enum class ScanRegion { Window, Annulus };

std::string_view to_string(ScanRegion region);
ScanRegion parse_scan_region(std::string_view text);
bool in_scan_region(Offset offset, int radius, ScanRegion region);

ErrorTypeCounts error_type_counts(const std::map<Offset, ErrorType>& classes, int radius,
                                  ScanRegion region);
ErrorTypeCounts error_type_counts(int radius, ScanRegion region, unsigned threads = 0);

enum class EdgeMethod { Exact, PaperWeighted };

std::string_view to_string(EdgeMethod method);
EdgeMethod parse_edge_method(std::string_view text);

/// Tangency constant b averaged over a finite l x w field.
///   Exact:         mean over allowed centres of tangency offsets that stay allowed
///                  (needs l, w > 2r).
///   PaperWeighted: area-weighted blend of the boundary-band mean and the
///                  unconstrained b (needs l, w > 4r).
double corrected_b(int radius, int length, int width, EdgeMethod method);

/// Same, reusing an existing classification.
double corrected_b(const std::map<Offset, ErrorType>& classes, int radius, int length, int width,
                   EdgeMethod method);

/// Mean number of third-disk positions, tangent to the centre disk, that leave
/// a tangent pair's integral at 2. Only defined when every error offset is type 1.
double second_order_c(int radius, unsigned threads = 0);
double second_order_c(const std::map<Offset, ErrorType>& classes, int radius,
                      unsigned threads = 0);

struct CalibrationResult {
  int radius = 0;
  int length = 0;
  int width = 0;
  EdgeMethod method = EdgeMethod::Exact;
  std::int64_t b = 0;
  ErrorTypeCounts counts;
  std::optional<double> c;  ///< absent unless every error offset is type 1
  double b_corrected = 0.0;
};

CalibrationResult calibrate(int radius, int length, int width,
                            EdgeMethod method = EdgeMethod::Exact, unsigned threads = 0);

/// JSON file of calibration results keyed by (radius, length, width, method).
class CalibrationCache {
 public:
  explicit CalibrationCache(std::filesystem::path path);

  std::optional<CalibrationResult> find(int radius, int length, int width,
                                        EdgeMethod method) const;
  void store(const CalibrationResult& result);
  void save() const;

  /// Cached result, computing and persisting it on a miss.
  CalibrationResult get_or_compute(int radius, int length, int width, EdgeMethod method,
                                   unsigned threads = 0);

 private:
  std::filesystem::path path_;
  std::map<std::string, CalibrationResult> entries_;
};

}  // namespace eulercount
