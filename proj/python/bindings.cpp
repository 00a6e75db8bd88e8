#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "eulercount/calibrate.hpp"
#include "eulercount/euler.hpp"
#include "eulercount/model.hpp"
#include "eulercount/sim.hpp"
#include "eulercount/targets.hpp"

namespace py = pybind11;
using namespace eulercount;

namespace {

using FieldArray = py::array_t<std::uint32_t, py::array::c_style | py::array::forcecast>;

// Arrays are indexed [y, x], matching the row-major field layout.
HeightField to_field(const FieldArray& array) {
  if (array.ndim() != 2) throw std::invalid_argument("field must be a 2-d array");
  const auto height = static_cast<int>(array.shape(0));
  const auto width = static_cast<int>(array.shape(1));
  std::vector<std::uint32_t> values(array.data(), array.data() + array.size());
  return HeightField(width, height, std::move(values));
}

FieldArray to_array(const HeightField& field) {
  FieldArray out({field.height(), field.width()});
  std::copy(field.values().begin(), field.values().end(), out.mutable_data());
  return out;
}

Padding parse_padding(const std::string& text) {
  if (text == "zero") return Padding::Zero;
  if (text == "none") return Padding::None;
  throw std::invalid_argument("padding must be 'zero' or 'none'");
}

Order parse_order(int order) {
  if (order == 1) return Order::First;
  if (order == 2) return Order::SecondClosed;
  throw std::invalid_argument("order must be 1 or 2");
}

py::dict counts_dict(const ErrorTypeCounts& c) {
  py::dict d;
  d["type0"] = c.type0;
  d["type1"] = c.type1;
  d["type3"] = c.type3;
  d["other"] = c.other;
  return d;
}

FieldConfig config_of(int length, int width, int radius, std::int64_t targets) {
  FieldConfig config{length, width, radius, targets, 0};
  config.validate();
  return config;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Euler-integral target counting";

  py::register_exception<std::domain_error>(m, "DomainError", PyExc_ValueError);

  m.def(
      "euler_integral",
      [](const FieldArray& field, const std::string& padding) {
        return euler_integral(to_field(field), parse_padding(padding));
      },
      py::arg("field"), py::arg("padding") = "zero");

  m.def(
      "make_field",
      [](int length, int width, int radius, const std::vector<std::pair<int, int>>& centers) {
        std::vector<Point> points;
        for (auto [x, y] : centers) points.push_back(Point{x, y});
        return to_array(make_field(length, width, DiskTemplate(radius), points));
      },
      py::arg("length"), py::arg("width"), py::arg("radius"), py::arg("centers"));

  m.def(
      "error_type_counts",
      [](int radius, const std::string& region) {
        const ScanRegion scan = parse_scan_region(region);
        ErrorTypeCounts counts;
        {
          py::gil_scoped_release release;
          counts = error_type_counts(radius, scan);
        }
        return counts_dict(counts);
      },
      py::arg("radius"), py::arg("region") = "window");

  m.def(
      "corrected_b",
      [](int radius, int length, int width, const std::string& method) {
        return corrected_b(radius, length, width, parse_edge_method(method));
      },
      py::arg("radius"), py::arg("length"), py::arg("width"), py::arg("method") = "exact");

  m.def("second_order_c", [](int radius) { return second_order_c(radius); }, py::arg("radius"));

  m.def(
      "calibrate",
      [](int radius, int length, int width, const std::string& method) {
        const auto r = calibrate(radius, length, width, parse_edge_method(method));
        py::dict d = counts_dict(r.counts);
        d["radius"] = r.radius;
        d["length"] = r.length;
        d["width"] = r.width;
        d["method"] = std::string(to_string(r.method));
        d["b"] = r.b;
        d["c"] = r.c ? py::object(py::float_(*r.c)) : py::object(py::none());
        d["b_corrected"] = r.b_corrected;
        return d;
      },
      py::arg("radius"), py::arg("length"), py::arg("width"), py::arg("method") = "exact");

  m.def(
      "predicted_integral",
      [](double n, double area, double b_corrected, double c, int order) {
        return predicted_integral(n, {area, b_corrected, c}, parse_order(order));
      },
      py::arg("n"), py::arg("area"), py::arg("b_corrected"), py::arg("c"), py::arg("order") = 2);

  m.def(
      "invert_estimate",
      [](double observed, double area, double b_corrected, double c) {
        return invert_estimate(observed, {area, b_corrected, c});
      },
      py::arg("observed"), py::arg("area"), py::arg("b_corrected"), py::arg("c"));

  m.def(
      "simulate_field",
      [](int length, int width, int radius, std::int64_t targets, std::uint64_t seed) {
        return to_array(simulate_field(config_of(length, width, radius, targets), seed));
      },
      py::arg("length"), py::arg("width"), py::arg("radius"), py::arg("targets"),
      py::arg("seed"));

  m.def(
      "run_trial",
      [](int length, int width, int radius, std::int64_t targets, std::uint64_t seed) {
        return run_trial(config_of(length, width, radius, targets), seed);
      },
      py::arg("length"), py::arg("width"), py::arg("radius"), py::arg("targets"),
      py::arg("seed"));

  m.def(
      "run_experiment",
      [](int length, int width, int radius, std::int64_t targets, std::int64_t trials,
         std::uint64_t seed, double b_corrected, std::optional<double> c, unsigned threads) {
        const auto config = config_of(length, width, radius, targets);
        SimReport report;
        {
          py::gil_scoped_release release;
          report = run_experiment(config, trials, seed, {b_corrected, c}, threads);
        }
        py::dict d;
        d["trials"] = report.trials;
        d["mean_integral"] = report.mean_integral;
        d["std_dev"] = report.std_dev;
        d["first_order_pred"] = report.first_order_pred;
        d["second_order_pred_c2"] = report.second_order_pred_c2;
        d["second_order_pred_cb"] = report.second_order_pred_cb;
        return d;
      },
      py::arg("length"), py::arg("width"), py::arg("radius"), py::arg("targets"),
      py::arg("trials"), py::arg("seed"), py::arg("b_corrected"), py::arg("c") = py::none(),
      py::arg("threads") = 0);

  m.def(
      "one_layer_h",
      [](int length, int width, int radius) {
        return one_layer_H(length, width, DiskTemplate(radius));
      },
      py::arg("length"), py::arg("width"), py::arg("radius"));

  m.def("asymptotic_integral", &asymptotic_integral, py::arg("m"), py::arg("H"));
}
