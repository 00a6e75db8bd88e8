#include "eulercount/sim.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>
#include <vector>

#include "eulercount/euler.hpp"
#include "eulercount/parallel.hpp"

namespace eulercount {

namespace {

std::string format_value(double v) {
  if (std::isnan(v)) return "nan";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

}  // namespace

HeightField simulate_field(const FieldConfig& config, std::uint64_t trial_seed) {
  config.validate();
  Rng rng(trial_seed);
  const auto centers = place_uniform(config, rng);
  return make_field(config.length, config.width, DiskTemplate(config.radius), centers);
}

std::int64_t run_trial(const FieldConfig& config, std::uint64_t trial_seed) {
  return euler_integral(simulate_field(config, trial_seed));
}

ModelConstants calibrated_constants(const FieldConfig& config, EdgeMethod method,
                                    unsigned threads) {
  const auto result = calibrate(config.radius, config.length, config.width, method, threads);
  return {result.b_corrected, result.c};
}

SimReport run_experiment(const FieldConfig& config, std::int64_t trials, std::uint64_t master_seed,
                         const ModelConstants& constants, unsigned threads) {
  config.validate();
  if (trials < 1) throw std::invalid_argument("at least one trial is required");

  std::vector<std::int64_t> integrals(static_cast<std::size_t>(trials));
  parallel_for(integrals.size(), threads, [&](std::size_t t) {
    integrals[t] = run_trial(config, derive_seed(master_seed, t));
  });

  // Exact integer sums keep the aggregate independent of scheduling.
  std::int64_t sum = 0;
  for (auto v : integrals) sum += v;
  const double mean = static_cast<double>(sum) / static_cast<double>(trials);
  double squares = 0.0;
  for (auto v : integrals) squares += (static_cast<double>(v) - mean) * (static_cast<double>(v) - mean);

  SimReport report;
  report.config = config;
  report.trials = trials;
  report.mean_integral = mean;
  report.std_dev = trials > 1 ? std::sqrt(squares / static_cast<double>(trials - 1)) : 0.0;

  const double n = static_cast<double>(config.targets);
  const double area = static_cast<double>(config.allowed_area());
  ModelParams bcorr{area, constants.b_corrected, constants.b_corrected};
  report.first_order_pred = predicted_integral(n, bcorr, Order::First);
  report.second_order_pred_cb = predicted_integral(n, bcorr, Order::SecondClosed);
  if (constants.c_second && *constants.c_second > 0.0) {
    ModelParams second{area, constants.b_corrected, *constants.c_second};
    report.second_order_pred_c2 = predicted_integral(n, second, Order::SecondClosed);
  } else {
    report.second_order_pred_c2 = std::numeric_limits<double>::quiet_NaN();
  }
  return report;
}

std::string reproduce_summary_table(std::span<const std::int64_t> n_values,
                                    const FieldConfig& config, std::int64_t trials,
                                    std::uint64_t master_seed, const ModelConstants& constants,
                                    unsigned threads) {
  std::string csv = "n,observed,first_order,second_c2,second_cb\n";
  for (std::int64_t n : n_values) {
    FieldConfig row_config = config;
    row_config.targets = n;
    const auto report = run_experiment(row_config, trials, master_seed, constants, threads);
    csv += std::to_string(n) + "," + format_value(report.mean_integral) + "," +
           format_value(report.first_order_pred) + "," +
           format_value(report.second_order_pred_c2) + "," +
           format_value(report.second_order_pred_cb) + "\n";
  }
  return csv;
}

}  // namespace eulercount
