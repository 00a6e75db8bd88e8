#include "eulercount/euler.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace eulercount {

std::vector<LevelContribution> level_contributions(const HeightField& field, Padding padding) {
  const HeightField work = padding == Padding::Zero ? field.padded(1) : field;
  const std::uint32_t top = work.max_value();
  std::vector<LevelContribution> levels;
  levels.reserve(top);
  for (std::uint32_t s = 0; s < top; ++s) {
    LevelContribution c;
    c.level = s;
    c.upper_components = betti0(BitMask::above(work, s), kUpperConnectivity);
    c.lower_components = betti0(BitMask::at_most(work, s), kLowerConnectivity);
    levels.push_back(c);
  }
  return levels;
}

std::int64_t euler_integral(const HeightField& field, Padding padding) {
  std::int64_t total = 0;
  for (const auto& c : level_contributions(field, padding)) total += c.term();
  return total;
}

namespace {

struct Run {
  int begin;  // inclusive
  int end;    // inclusive
};

struct Segment {
  int begin;  // inclusive
  int end;    // exclusive
  int count;
};

// Union-find over runs; counts components as runs minus successful merges.
class RunComponents {
 public:
  void reset(std::size_t n) {
    parent_.resize(n);
    std::iota(parent_.begin(), parent_.end(), std::uint32_t{0});
    merges_ = 0;
  }

  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    parent_[std::max(a, b)] = std::min(a, b);
    ++merges_;
  }

  std::int64_t merges() const { return merges_; }

 private:
  std::uint32_t find(std::uint32_t v) {
    while (parent_[v] != v) {
      parent_[v] = parent_[parent_[v]];
      v = parent_[v];
    }
    return v;
  }

  std::vector<std::uint32_t> parent_;
  std::int64_t merges_ = 0;
};

// rows[i] holds the sorted, disjoint runs of row i; row_start indexes a flat array.
std::int64_t count_run_components(const std::vector<Run>& runs,
                                  const std::vector<std::size_t>& row_start,
                                  Connectivity conn, RunComponents& sets) {
  sets.reset(runs.size());
  const int slack = conn == Connectivity::EightNeighbor ? 1 : 0;
  for (std::size_t row = 1; row + 1 < row_start.size(); ++row) {
    std::size_t i = row_start[row - 1];
    const std::size_t i_end = row_start[row];
    std::size_t j = row_start[row];
    const std::size_t j_end = row_start[row + 1];
    while (i < i_end && j < j_end) {
      const Run& up = runs[i];
      const Run& cur = runs[j];
      if (up.end + slack < cur.begin) {
        ++i;
      } else if (cur.end + slack < up.begin) {
        ++j;
      } else {
        sets.unite(static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j));
        if (up.end < cur.end) {
          ++i;
        } else {
          ++j;
        }
      }
    }
  }
  return static_cast<std::int64_t>(runs.size()) - sets.merges();
}

}  // namespace

std::int64_t disk_stack_integral(const DiskTemplate& disk, std::span<const Point> centers) {
  if (centers.empty()) return 0;
  const int e = disk.extent();
  const int reach = disk.half_width(0);
  int xmin = std::numeric_limits<int>::max();
  int xmax = std::numeric_limits<int>::min();
  int ymin = xmin;
  int ymax = xmax;
  for (Point c : centers) {
    xmin = std::min(xmin, c.x - reach);
    xmax = std::max(xmax, c.x + reach);
    ymin = std::min(ymin, c.y - e);
    ymax = std::max(ymax, c.y + e);
  }
  // One cell of zero padding on every side.
  const int left = xmin - 1;
  const int right = xmax + 1;
  const int rows = ymax - ymin + 3;

  // Coverage segments per row (only segments with count > 0), flattened.
  thread_local std::vector<Segment> coverage;
  thread_local std::vector<std::size_t> coverage_start;
  thread_local std::vector<std::pair<int, int>> events;
  coverage.clear();
  coverage_start.assign(2, 0);
  int top = 0;
  for (int row = 1; row + 1 < rows; ++row) {
    const int y = ymin + row - 1;
    events.clear();
    for (Point c : centers) {
      const int hw = disk.half_width(y - c.y);
      if (hw < 0) continue;
      events.emplace_back(c.x - hw, 1);
      events.emplace_back(c.x + hw + 1, -1);
    }
    std::sort(events.begin(), events.end());
    int count = 0;
    for (std::size_t k = 0; k < events.size();) {
      const int x = events[k].first;
      while (k < events.size() && events[k].first == x) count += events[k++].second;
      if (k < events.size() && count > 0) {
        coverage.push_back({x, events[k].first, count});
        top = std::max(top, count);
      }
    }
    coverage_start.push_back(coverage.size());
  }
  coverage_start.push_back(coverage.size());

  thread_local std::vector<Run> upper;
  thread_local std::vector<Run> lower;
  thread_local std::vector<std::size_t> upper_start;
  thread_local std::vector<std::size_t> lower_start;
  thread_local RunComponents sets;
  std::int64_t total = 0;
  for (int s = 0; s < top; ++s) {
    upper.clear();
    lower.clear();
    upper_start.assign(1, 0);
    lower_start.assign(1, 0);
    for (int row = 0; row < rows; ++row) {
      const std::size_t first = upper.size();
      for (std::size_t k = coverage_start[static_cast<std::size_t>(row)];
           k < coverage_start[static_cast<std::size_t>(row) + 1]; ++k) {
        const Segment& seg = coverage[k];
        if (seg.count <= s) continue;
        if (upper.size() > first && upper.back().end + 1 == seg.begin) {
          upper.back().end = seg.end - 1;
        } else {
          upper.push_back({seg.begin, seg.end - 1});
        }
      }
      int x = left;
      for (std::size_t k = first; k < upper.size(); ++k) {
        if (upper[k].begin > x) lower.push_back({x, upper[k].begin - 1});
        x = upper[k].end + 1;
      }
      if (x <= right) lower.push_back({x, right});
      upper_start.push_back(upper.size());
      lower_start.push_back(lower.size());
    }
    total += count_run_components(upper, upper_start, kUpperConnectivity, sets) -
             count_run_components(lower, lower_start, kLowerConnectivity, sets) + 1;
  }
  return total;
}

}  // namespace eulercount
