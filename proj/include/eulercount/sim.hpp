#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>

#include "eulercount/calibrate.hpp"
#include "eulercount/model.hpp"
#include "eulercount/targets.hpp"

namespace eulercount {

/// Places config.targets disks with a stream seeded by `trial_seed`, returns the integral.
std::int64_t run_trial(const FieldConfig& config, std::uint64_t trial_seed);

/// The height field a trial integrates (also used for rendering).
HeightField simulate_field(const FieldConfig& config, std::uint64_t trial_seed);

/// Formula constants attached to a report.
struct ModelConstants {
  double b_corrected = 0.0;
  std::optional<double> c_second;  ///< absent when the radius has type 0/3 errors
};

/// Calibrated constants for the config's radius and field size.
ModelConstants calibrated_constants(const FieldConfig& config,
                                    EdgeMethod method = EdgeMethod::Exact, unsigned threads = 0);

struct SimReport {
  FieldConfig config;
  std::int64_t trials = 0;
  double mean_integral = 0.0;
  double std_dev = 0.0;
  double first_order_pred = 0.0;
  double second_order_pred_c2 = 0.0;  ///< NaN when no second-order c exists
  double second_order_pred_cb = 0.0;
};

/// Trial t uses derive_seed(master_seed, t); results do not depend on `threads`.
SimReport run_experiment(const FieldConfig& config, std::int64_t trials, std::uint64_t master_seed,
                         const ModelConstants& constants, unsigned threads = 0);

/// CSV with header n,observed,first_order,second_c2,second_cb, one row per n.
std::string reproduce_summary_table(std::span<const std::int64_t> n_values,
                                    const FieldConfig& config, std::int64_t trials,
                                    std::uint64_t master_seed, const ModelConstants& constants,
                                    unsigned threads = 0);

}  // namespace eulercount
