#include "eulercount/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <nlohmann/json.hpp>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "eulercount/calibrate.hpp"
#include "eulercount/json.hpp"
#include "eulercount/model.hpp"
#include "eulercount/sim.hpp"

namespace eulercount::cli {

namespace {

struct FieldFlags {
  int length = 0;
  int width = 0;
  int radius = 0;
};

void add_field_flags(CLI::App* cmd, FieldFlags& f) {
  cmd->add_option("--length", f.length, "Sensor field length l")->required()->check(CLI::PositiveNumber);
  cmd->add_option("--width", f.width, "Sensor field width w")->required()->check(CLI::PositiveNumber);
  cmd->add_option("--radius", f.radius, "Target radius r")->required()->check(CLI::Range(1, kMaxRadius));
}

// Shared by predict and estimate.
struct ModelFlags {
  FieldFlags field;
  std::string c = "bcorr";
  std::string method = "exact";
  std::optional<double> b_corrected;
};

void add_model_flags(CLI::App* cmd, ModelFlags& m) {
  add_field_flags(cmd, m.field);
  cmd->add_option("--c", m.c, "second | bcorr | <value>");
  cmd->add_option("--method", m.method, "Edge correction: exact | paper");
  cmd->add_option("--b-corrected", m.b_corrected, "Override the calibrated b_corrected");
}

ModelParams resolve_model(const ModelFlags& m, unsigned threads) {
  FieldConfig config{m.field.length, m.field.width, m.field.radius, 0, 0};
  config.validate();
  std::optional<std::map<Offset, ErrorType>> classes;
  auto classification = [&]() -> const std::map<Offset, ErrorType>& {
    if (!classes) classes = classify_pair_offsets(m.field.radius, -1, threads);
    return *classes;
  };

  ModelParams p;
  p.area = static_cast<double>(config.allowed_area());
  p.b_corrected = m.b_corrected ? *m.b_corrected
                                : corrected_b(classification(), m.field.radius, m.field.length,
                                              m.field.width, parse_edge_method(m.method));
  if (m.c == "bcorr") {
    p.c = p.b_corrected;
  } else if (m.c == "second") {
    p.c = second_order_c(classification(), m.field.radius, threads);
  } else {
    std::size_t used = 0;
    try {
      p.c = std::stod(m.c, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != m.c.size()) {
      throw std::invalid_argument("--c must be 'second', 'bcorr' or a number, got '" + m.c + "'");
    }
  }
  p.validate();
  return p;
}

std::vector<std::int64_t> parse_counts(const std::string& text) {
  std::vector<std::int64_t> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    long long v = -1;
    try {
      v = std::stoll(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size() || v < 0) {
      throw std::invalid_argument("bad target count '" + item + "'");
    }
    values.push_back(v);
  }
  return values;
}

void emit(const std::string& data, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << data;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open " + path + " for writing");
  file.write(data.data(), static_cast<std::streamsize>(data.size()));
}

}  // namespace

std::pair<int, int> parse_range(const std::string& text) {
  const auto colon = text.find(':');
  auto parse = [&](const std::string& part) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(part, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (part.empty() || used != part.size()) {
      throw std::invalid_argument("bad range '" + text + "' (expected a:b)");
    }
    return v;
  };
  if (colon == std::string::npos) {
    const int v = parse(text);
    return {v, v};
  }
  const int lo = parse(text.substr(0, colon));
  const int hi = parse(text.substr(colon + 1));
  if (lo > hi) throw std::invalid_argument("empty range '" + text + "'");
  return {lo, hi};
}

int dispatch(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Euler-integral target counting on discrete sensor fields", "eulercount"};
  app.require_subcommand(1);
  unsigned threads = 0;
  app.add_option("--threads", threads, "Worker cap (0 = hardware concurrency)");

  // calibrate
  auto* calibrate_cmd = app.add_subcommand("calibrate", "Exhaustive error-type calibration");
  FieldFlags cal;
  std::string cal_method = "exact";
  std::string cache_path;
  add_field_flags(calibrate_cmd, cal);
  calibrate_cmd->add_option("--method", cal_method, "Edge correction: exact | paper");
  calibrate_cmd->add_option("--cache", cache_path, "JSON cache file");

  // table
  auto* table_cmd = app.add_subcommand("table", "Type 0/1/3 counts for a radius range");
  std::string radii;
  std::string region = "window";
  table_cmd->add_option("--radii", radii, "Inclusive range a:b")->required();
  table_cmd->add_option("--region", region, "Offsets counted: window | annulus");

  // simulate
  auto* simulate_cmd = app.add_subcommand("simulate", "Monte Carlo summary table");
  FieldFlags sim;
  std::string sim_counts;
  std::int64_t trials = 200;
  std::uint64_t sim_seed = 0;
  std::string sim_out;
  std::string sim_method = "exact";
  std::optional<double> sim_b;
  add_field_flags(simulate_cmd, sim);
  simulate_cmd->add_option("--n", sim_counts, "Target counts, comma separated")->required();
  simulate_cmd->add_option("--trials", trials, "Trials per n")->check(CLI::PositiveNumber);
  simulate_cmd->add_option("--seed", sim_seed, "Master seed")->required();
  simulate_cmd->add_option("--out", sim_out, "CSV output path");
  simulate_cmd->add_option("--method", sim_method, "Edge correction: exact | paper");
  simulate_cmd->add_option("--b-corrected", sim_b, "Override the calibrated b_corrected");

  // predict
  auto* predict_cmd = app.add_subcommand("predict", "Expected integral for n targets");
  ModelFlags pred;
  double pred_n = 0;
  int order = 2;
  add_model_flags(predict_cmd, pred);
  predict_cmd->add_option("--n", pred_n, "Target count")->required()->check(CLI::NonNegativeNumber);
  predict_cmd->add_option("--order", order, "1 or 2")->check(CLI::IsMember({1, 2}));

  // estimate
  auto* estimate_cmd = app.add_subcommand("estimate", "Bias-corrected target count");
  ModelFlags est;
  double observed = 0;
  add_model_flags(estimate_cmd, est);
  estimate_cmd->add_option("--observed", observed, "Observed integral")->required();

  // render
  auto* render_cmd = app.add_subcommand("render", "Render one simulated field as PGM");
  FieldFlags ren;
  std::int64_t ren_n = 0;
  std::uint64_t ren_seed = 0;
  std::string ren_out;
  add_field_flags(render_cmd, ren);
  render_cmd->add_option("--n", ren_n, "Target count")->required()->check(CLI::NonNegativeNumber);
  render_cmd->add_option("--seed", ren_seed, "Seed")->required();
  render_cmd->add_option("--out", ren_out, "PGM output path");

  // asymptotic
  auto* asym_cmd = app.add_subcommand("asymptotic", "One-layer integral H and H m");
  FieldFlags asym;
  std::int64_t layers = 1;
  add_field_flags(asym_cmd, asym);
  asym_cmd->add_option("--m", layers, "Layer count m")->required()->check(CLI::PositiveNumber);

  std::vector<const char*> argv{"eulercount"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (calibrate_cmd->parsed()) {
      const auto method = parse_edge_method(cal_method);
      CalibrationResult result;
      if (cache_path.empty()) {
        result = calibrate(cal.radius, cal.length, cal.width, method, threads);
      } else {
        CalibrationCache cache(cache_path);
        result = cache.get_or_compute(cal.radius, cal.length, cal.width, method, threads);
      }
      nlohmann::json j = result;
      out << j.dump() << '\n';
    } else if (table_cmd->parsed()) {
      const auto [lo, hi] = parse_range(radii);
      if (lo < 1 || hi > kMaxRadius) {
        throw std::invalid_argument("radii must lie in [1, " + std::to_string(kMaxRadius) + "]");
      }
      const auto scan = parse_scan_region(region);
      out << "radius,type0,type1,type3,other\n";
      for (int r = lo; r <= hi; ++r) {
        const auto c = error_type_counts(r, scan, threads);
        out << r << ',' << c.type0 << ',' << c.type1 << ',' << c.type3 << ',' << c.other << '\n';
      }
    } else if (simulate_cmd->parsed()) {
      FieldConfig config{sim.length, sim.width, sim.radius, 0, sim_seed};
      config.validate();
      const auto counts = parse_counts(sim_counts);
      ModelConstants constants;
      if (sim_b) {
        const auto classes = classify_pair_offsets(sim.radius, -1, threads);
        const auto kinds = error_type_counts(classes);
        constants.b_corrected = *sim_b;
        if (kinds.type0 == 0 && kinds.type3 == 0 && kinds.other == 0) {
          constants.c_second = second_order_c(classes, sim.radius, threads);
        }
      } else {
        constants = calibrated_constants(config, parse_edge_method(sim_method), threads);
      }
      emit(reproduce_summary_table(counts, config, trials, sim_seed, constants, threads), sim_out,
           out);
    } else if (predict_cmd->parsed()) {
      const auto p = resolve_model(pred, threads);
      const auto e = estimate(pred_n, p, order == 1 ? Order::First : Order::SecondClosed);
      nlohmann::json j{{"n", e.n},
                       {"expected_errors", e.expected_errors},
                       {"predicted_integral", e.predicted_integral}};
      out << j.dump() << '\n';
    } else if (estimate_cmd->parsed()) {
      const auto p = resolve_model(est, threads);
      const double n_hat = invert_estimate(observed, p);
      nlohmann::json j{{"n_hat_real", n_hat}, {"n_hat_int", std::llround(n_hat)}};
      out << j.dump() << '\n';
    } else if (render_cmd->parsed()) {
      FieldConfig config{ren.length, ren.width, ren.radius, ren_n, ren_seed};
      const auto bytes = render_pgm(simulate_field(config, ren_seed));
      emit(std::string(bytes.begin(), bytes.end()), ren_out, out);
    } else if (asym_cmd->parsed()) {
      const std::int64_t H = one_layer_H(asym.length, asym.width, DiskTemplate(asym.radius));
      nlohmann::json j{{"H", H}, {"m", layers}, {"integral", asymptotic_integral(layers, H)}};
      out << j.dump() << '\n';
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitOk;
}

}  // namespace eulercount::cli
