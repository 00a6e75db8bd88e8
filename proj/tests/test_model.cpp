#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <vector>

#include "eulercount/euler.hpp"
#include "eulercount/model.hpp"
#include "golden.hpp"

namespace eulercount {
namespace {

constexpr double kArea = 488.0 * 488.0;
constexpr double kBCorr = 85.322;

ModelParams with_c(double c) { return {kArea, kBCorr, c}; }

double relative(double a, double b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

TEST(ModelParams, Validation) {
  EXPECT_NO_THROW(with_c(21.455).validate());
  EXPECT_THROW((ModelParams{0.5, 1.0, 0.1}).validate(), std::invalid_argument);
  EXPECT_THROW((ModelParams{100.0, 0.0, 1.0}).validate(), std::invalid_argument);
  EXPECT_THROW((ModelParams{100.0, 1.0, 0.0}).validate(), std::invalid_argument);
  EXPECT_THROW((ModelParams{100.0, 1.0, 100.0}).validate(), std::invalid_argument);
}

TEST(FirstOrder, NoPairsNoErrors) {
  EXPECT_EQ(first_order_errors(0, with_c(kBCorr)), 0.0);
  EXPECT_EQ(first_order_errors(1, with_c(kBCorr)), 0.0);
}

TEST(SecondOrder, SmallCases) {
  const auto p = with_c(21.455);
  EXPECT_EQ(second_order_errors_recurrence(1, p), 0.0);
  EXPECT_DOUBLE_EQ(second_order_errors_recurrence(2, p), kBCorr / kArea);
  EXPECT_NEAR(second_order_errors_recurrence(3, p),
              3 * kBCorr / kArea - 21.455 * kBCorr / (kArea * kArea), 1e-15);
  EXPECT_EQ(second_order_errors_closed(0, p), 0.0);
  EXPECT_NEAR(second_order_errors_closed(1, p), 0.0, 1e-15);
  EXPECT_NEAR(second_order_errors_closed(2, p), kBCorr / kArea, 1e-15);
}

TEST(FormulaColumns, ReproduceReferenceTable) {
  for (const auto& row : golden::summary()) {
    const double n = static_cast<double>(row.n);
    EXPECT_LT(relative(predicted_integral(n, with_c(kBCorr), Order::First), row.first_order),
              0.005)
        << row.n;
    EXPECT_LT(relative(predicted_integral(n, with_c(21.455), Order::SecondClosed),
                       row.second_c2),
              0.005)
        << row.n;
    EXPECT_LT(relative(predicted_integral(n, with_c(kBCorr), Order::SecondClosed),
                       row.second_cb),
              0.005)
        << row.n;
  }
}

TEST(FormulaColumns, SpotValues) {
  EXPECT_NEAR(predicted_integral(100, with_c(kBCorr), Order::First), 96.5, 0.05);
  EXPECT_NEAR(predicted_integral(3000, with_c(kBCorr), Order::First), -223.4, 0.05);
  EXPECT_NEAR(predicted_integral(100, with_c(21.455), Order::SecondClosed), 98.2, 0.05);
  EXPECT_NEAR(predicted_integral(500, with_c(kBCorr), Order::SecondClosed), 457.8, 0.05);
  EXPECT_NEAR(predicted_integral(10000, with_c(21.455), Order::SecondClosed), -3555.9, 0.05);
  EXPECT_NEAR(predicted_integral(10000, with_c(kBCorr), Order::SecondClosed), 2713.6, 0.05);
}

TEST(ClosedForm, MatchesRecurrenceOnRandomParameters) {
  std::mt19937_64 gen(31337);
  std::uniform_real_distribution<double> log_area(0.0, std::log(1e7));
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<std::int64_t> count(0, 100000);
  for (int trial = 0; trial < 200; ++trial) {
    const double area = std::max(1.0, std::exp(log_area(gen)));
    const ModelParams p{area, 0.01 + 200.0 * unit(gen), area * (1e-6 + 0.999 * unit(gen))};
    const std::int64_t n = trial < 20 ? trial : count(gen);
    const double iterated = second_order_errors_recurrence(n, p);
    const double closed = second_order_errors_closed(static_cast<double>(n), p);
    ASSERT_LT(relative(closed, iterated), 1e-6) << "trial " << trial << " n=" << n;
  }
}

TEST(Recurrence, TrivialSequences) {
  auto one = [](std::int64_t) { return 1.0; };
  auto two = [](std::int64_t) { return 2.0; };
  auto zero = [](std::int64_t) { return 0.0; };
  EXPECT_DOUBLE_EQ(solve_linear_recurrence(one, one, 0.0, 37), 37.0);
  EXPECT_DOUBLE_EQ(solve_linear_recurrence(two, zero, 1.0, 20), std::ldexp(1.0, 20));
  EXPECT_DOUBLE_EQ(solve_linear_recurrence(two, zero, 1.0, 0), 1.0);
  EXPECT_THROW(solve_linear_recurrence(zero, one, 1.0, 3), std::invalid_argument);
  EXPECT_NO_THROW(solve_linear_recurrence(zero, one, 1.0, 0));
}

TEST(Recurrence, SpanOverloadAgrees) {
  const std::vector<double> f{1.5, 0.5, -2.0, 3.0};
  const std::vector<double> g{1.0, -1.0, 0.25, 2.0};
  double a = 0.75;
  for (std::size_t k = 0; k < f.size(); ++k) a = f[k] * a + g[k];
  EXPECT_NEAR(solve_linear_recurrence(f, g, 0.75, 4), a, 1e-12);
  const std::vector<double> bad{1.0, 0.0};
  EXPECT_THROW(solve_linear_recurrence(bad, g, 1.0, 2), std::invalid_argument);
}

TEST(Recurrence, ReproducesSecondOrderErrors) {
  const auto p = with_c(21.455);
  // Shifted index: a_k = E_{k+1}, so a_{k+1} = (1 - c/A) a_k + (k + 1) b / A.
  auto f = [&](std::int64_t) { return 1.0 - p.c / p.area; };
  auto g = [&](std::int64_t k) { return static_cast<double>(k + 1) * p.b_corrected / p.area; };
  for (std::int64_t n : {1, 2, 3, 10, 500, 4000}) {
    EXPECT_LT(relative(solve_linear_recurrence(f, g, 0.0, n - 1),
                       second_order_errors_recurrence(n, p)),
              1e-9);
  }
}

TEST(Inversion, RoundTrip) {
  const auto p = with_c(kBCorr);
  for (double n : {0.0, 1.0, 10.0, 100.0, 500.0, 1000.0, 5000.0}) {
    const double observed = predicted_integral(n, p, Order::SecondClosed);
    EXPECT_NEAR(invert_estimate(observed, p), n, 1e-4);
  }
  const auto q = with_c(200.0);
  for (double n : {3.0, 7000.0, 50000.0}) {
    EXPECT_NEAR(invert_estimate(predicted_integral(n, q, Order::SecondClosed), q), n, 1e-4);
  }
}

TEST(Inversion, ReferenceRows) {
  const auto p = with_c(kBCorr);
  EXPECT_NEAR(invert_estimate(193.0, p), 200.0, 1.0);
  EXPECT_NEAR(invert_estimate(2713.6, p), 10000.0, 50.0);
}

TEST(Inversion, RejectsOutOfRange) {
  const auto p = with_c(kBCorr);
  EXPECT_THROW(invert_estimate(-1.0, p), std::domain_error);
  EXPECT_THROW(invert_estimate(predicted_integral_supremum(p) + 1.0, p), std::domain_error);
  EXPECT_THROW(invert_estimate(10.0, with_c(21.455)), std::invalid_argument);
  EXPECT_TRUE(std::isinf(predicted_integral_supremum(with_c(100.0))));
}

TEST(ForwardMap, StrictlyIncreasingWhenCEqualsB) {
  const auto p = with_c(kBCorr);
  const double limit = 10.0 * kArea / kBCorr;
  double previous = predicted_integral(0.0, p, Order::SecondClosed);
  for (double n = 1.0; n <= limit; n += 7.0) {
    const double value = predicted_integral(n, p, Order::SecondClosed);
    ASSERT_GT(value, previous) << n;
    previous = value;
  }
}

TEST(ForwardMap, LimitBehaviour) {
  const auto small_c = with_c(21.455);
  EXPECT_LT(predicted_integral(1e6, small_c, Order::SecondClosed),
            predicted_integral(1e5, small_c, Order::SecondClosed));
  EXPECT_LT(predicted_integral(1e7, small_c, Order::SecondClosed), -1e6);

  const auto big_c = with_c(150.0);
  const double n = 100.0 * kArea / big_c.c;
  const double detrended =
      predicted_integral(n, big_c, Order::SecondClosed) - n * (1.0 - kBCorr / big_c.c);
  EXPECT_NEAR(detrended, kArea * kBCorr / (big_c.c * big_c.c), 1e-3);
}

TEST(OneLayer, SingleCellTemplateIsConstantField) {
  const DiskTemplate cell(1);
  EXPECT_EQ(one_layer_H(37, 21, cell), 1);
  const auto field = one_layer_field(37, 21, cell);
  for (auto v : field.values()) EXPECT_EQ(v, 1u);
  EXPECT_EQ(asymptotic_integral(3, one_layer_H(37, 21, cell)), 3);
}

TEST(OneLayer, SingleSensor) {
  const DiskTemplate disk(6);
  const auto field = one_layer_field(1, 1, disk);
  EXPECT_EQ(field.at(0, 0), 1u);
  EXPECT_EQ(one_layer_H(1, 1, disk), euler_integral(field));
}

TEST(OneLayer, ExplicitConstruction) {
  const DiskTemplate disk(6);
  HeightField expected(100, 100);
  for (int y = 0; y < 100; ++y) {
    for (int x = 0; x < 100; ++x) {
      for (Offset o : disk.offsets()) {
        const int px = x + o.dx;
        const int py = y + o.dy;
        if (px >= 0 && py >= 0 && px < 100 && py < 100) ++expected.at(px, py);
      }
    }
  }
  EXPECT_EQ(one_layer_field(100, 100, disk), expected);
  const auto H = one_layer_H(100, 100, disk);
  EXPECT_EQ(H, euler_integral(expected));
  for (std::int64_t m : {1, 2, 5}) {
    EXPECT_EQ(asymptotic_integral(m, H),
              euler_integral(expected.scaled(static_cast<std::uint32_t>(m))));
  }
}

TEST(OneLayer, RejectsNonPositiveLayers) {
  EXPECT_THROW(asymptotic_integral(0, 4), std::invalid_argument);
  EXPECT_EQ(asymptotic_integral(1, 4), 4);
}

}  // namespace
}  // namespace eulercount
