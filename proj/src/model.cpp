#include "eulercount/model.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "eulercount/euler.hpp"

namespace eulercount {

void ModelParams::validate() const {
  if (!(area >= 1.0)) throw std::invalid_argument("model area must be at least 1");
  if (!(b_corrected > 0.0)) throw std::invalid_argument("b_corrected must be positive");
  if (!(c > 0.0 && c < area)) {
    throw std::invalid_argument("c must lie in (0, A), got " + std::to_string(c));
  }
}

double first_order_errors(double n, const ModelParams& p) {
  return n * (n - 1.0) * p.b_corrected / p.area;
}

double second_order_errors_recurrence(std::int64_t n, const ModelParams& p) {
  const double keep = 1.0 - p.c / p.area;
  const double step = p.b_corrected / p.area;
  double errors = 0.0;  // E_1
  for (std::int64_t k = 2; k <= n; ++k) {
    errors = errors * keep + static_cast<double>(k - 1) * step;
  }
  return errors;
}

double second_order_errors_closed(double n, const ModelParams& p) {
  const double x = p.c / p.area;
  if (n * x < 0.5 && x < 0.5) {
    // (b/A) * sum_{k>=2} C(n,k) (-x)^(k-2); the leading -1 + n x cancels exactly.
    double term = n * (n - 1.0) / 2.0;
    double sum = term;
    for (int k = 2; k < 400 && term != 0.0; ++k) {
      term *= -x * (n - k) / (k + 1);
      sum += term;
      if (std::abs(term) <= 1e-18 * std::abs(sum)) break;
    }
    return p.b_corrected / p.area * sum;
  }
  const double decay = std::expm1(n * std::log1p(-x));  // (1 - x)^n - 1
  return p.b_corrected / (p.c * p.c) * (decay * p.area + n * p.c);
}

double solve_linear_recurrence(const std::function<double(std::int64_t)>& f,
                               const std::function<double(std::int64_t)>& g, double a0,
                               std::int64_t n) {
  if (n < 0) throw std::invalid_argument("recurrence index must be non-negative");
  double product = 1.0;
  double sum = 0.0;
  for (std::int64_t m = 0; m < n; ++m) {
    const double fm = f(m);
    if (fm == 0.0) {
      throw std::invalid_argument("recurrence coefficient f_" + std::to_string(m) + " is zero");
    }
    product *= fm;
    sum += g(m) / product;
  }
  return product * (a0 + sum);
}

double solve_linear_recurrence(std::span<const double> f, std::span<const double> g, double a0,
                               std::int64_t n) {
  if (n < 0 || f.size() < static_cast<std::size_t>(n) || g.size() < static_cast<std::size_t>(n)) {
    throw std::invalid_argument("recurrence sequences shorter than n");
  }
  return solve_linear_recurrence([&](std::int64_t k) { return f[static_cast<std::size_t>(k)]; },
                                 [&](std::int64_t k) { return g[static_cast<std::size_t>(k)]; },
                                 a0, n);
}

double expected_errors(double n, const ModelParams& p, Order order) {
  return order == Order::First ? first_order_errors(n, p) : second_order_errors_closed(n, p);
}

double predicted_integral(double n, const ModelParams& p, Order order) {
  return n - expected_errors(n, p, order);
}

ErrorEstimate estimate(double n, const ModelParams& p, Order order) {
  const double errors = expected_errors(n, p, order);
  return {n, errors, n - errors};
}

double predicted_integral_supremum(const ModelParams& p) {
  // n - E_n = n (1 - b/c) + (A b / c^2)(1 - (1 - c/A)^n)
  if (p.c > p.b_corrected) return std::numeric_limits<double>::infinity();
  return p.area * p.b_corrected / (p.c * p.c);
}

double invert_estimate(double observed, const ModelParams& p) {
  p.validate();
  if (p.c < p.b_corrected) {
    throw std::invalid_argument("inversion requires c >= b_corrected for injectivity");
  }
  if (!(observed >= 0.0)) throw std::domain_error("observed integral must be non-negative");
  const double sup = predicted_integral_supremum(p);
  if (observed >= sup) {
    throw std::domain_error("observed integral " + std::to_string(observed) +
                            " is at or above the attainable supremum " + std::to_string(sup));
  }
  auto forward = [&](double n) { return predicted_integral(n, p, Order::SecondClosed); };

  double lo = 0.0;
  double hi = 1.0;
  for (int i = 0; forward(hi) < observed; ++i) {
    if (i > 1000) throw std::runtime_error("failed to bracket the inverse estimate");
    lo = hi;
    hi *= 2.0;
  }
  for (int i = 0; i < 200 && hi - lo > 1e-12 * std::max(1.0, hi); ++i) {
    const double mid = 0.5 * (lo + hi);
    if (forward(mid) < observed) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  const double n_hat = 0.5 * (lo + hi);
  if (std::abs(forward(n_hat) - observed) > 1e-6) {
    throw std::runtime_error("bisection did not converge for observed " +
                             std::to_string(observed));
  }
  return n_hat;
}

HeightField one_layer_field(int length, int width, const DiskTemplate& disk) {
  HeightField field(length, width);
  for (int y = 0; y < width; ++y) {
    for (int x = 0; x < length; ++x) stamp_clipped(field, disk, {x, y});
  }
  return field;
}

std::int64_t one_layer_H(int length, int width, const DiskTemplate& disk) {
  return euler_integral(one_layer_field(length, width, disk));
}

std::int64_t asymptotic_integral(std::int64_t m, std::int64_t H) {
  if (m < 1) throw std::invalid_argument("layer count m must be positive");
  return H * m;
}

}  // namespace eulercount
