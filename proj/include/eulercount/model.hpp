#pragma once

#include <cstdint>
#include <functional>
#include <span>

#include "eulercount/targets.hpp"

namespace eulercount {

/// Constants of the bias model.
///   area         A = (l - 2r)(w - 2r), the allowed-centre area
///   b_corrected  edge-corrected tangency count
///   c            second-order proportionality constant, 0 < c < A
struct ModelParams {
  double area = 0.0;
  double b_corrected = 0.0;
  double c = 0.0;

  void validate() const;
};

struct ErrorEstimate {
  double n = 0.0;
  double expected_errors = 0.0;
  double predicted_integral = 0.0;
};

enum class Order { First, SecondClosed };

/// n (n - 1) b / A
double first_order_errors(double n, const ModelParams& p);

/// E_1 = 0, E_k = E_{k-1} (1 - c/A) + (k - 1) b / A.
double second_order_errors_recurrence(std::int64_t n, const ModelParams& p);

/// b / c^2 ((1 - c/A)^n A - A + n c), evaluated without cancellation for small n c / A.
double second_order_errors_closed(double n, const ModelParams& p);

/// a_n for a_{k+1} = f(k) a_k + g(k), a_0 = a0, via the product/sum solution.
/// Throws std::invalid_argument if any f(k), k < n, is zero.
double solve_linear_recurrence(const std::function<double(std::int64_t)>& f,
                               const std::function<double(std::int64_t)>& g, double a0,
                               std::int64_t n);
double solve_linear_recurrence(std::span<const double> f, std::span<const double> g, double a0,
                               std::int64_t n);

double expected_errors(double n, const ModelParams& p, Order order);
double predicted_integral(double n, const ModelParams& p, Order order);
ErrorEstimate estimate(double n, const ModelParams& p, Order order);

/// Supremum of the second-order forward map n -> n - E_n (infinite when c > b).
double predicted_integral_supremum(const ModelParams& p);

/// Real n >= 0 whose second-order predicted integral equals `observed`, by bisection.
/// Requires c >= b_corrected so the forward map is strictly increasing.
double invert_estimate(double observed, const ModelParams& p);

/// Integral of the field with one `disk` centred on every sensor of an l x w
/// field, clipped at the edges.
std::int64_t one_layer_H(int length, int width, const DiskTemplate& disk);

/// The large-n integral H m for n = m l w uniformly placed targets.
std::int64_t asymptotic_integral(std::int64_t m, std::int64_t H);

/// The h' field used by one_layer_H.
HeightField one_layer_field(int length, int width, const DiskTemplate& disk);

}  // namespace eulercount
