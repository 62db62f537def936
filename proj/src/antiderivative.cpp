#include "pforge/antiderivative.hpp"

#include <cmath>
#include <string>

#include "pforge/compensated_sum.hpp"
#include "pforge/errors.hpp"

namespace pforge {

namespace {

// Exact increment of the antiderivative across one chord segment:
// integral of (m*x + b) from k to k+h, written about the left knot as
// (m/2)*h^2 + d*h with d the chord value at k.
double segment_increment(double half_slope, double left_value, double h) {
  return half_slope * h * h + left_value * h;
}

}  // namespace

double PiecewiseQuadratic::value(double x) const {
  const std::size_t i = partition.locate(x);
  const QuadraticSegment& s = segments[i];
  const double k = partition.knots[i];
  const double dx = x - k;
  const double value_at_knot = std::fma(std::fma(s.a2, k, s.a1), k, s.a0);
  const double slope_at_knot = std::fma(2.0 * s.a2, k, s.a1);
  return std::fma(std::fma(s.a2, dx, slope_at_knot), dx, value_at_knot);
}

double PiecewiseQuadratic::derivative(double x) const {
  const std::size_t i = partition.locate(x);
  const QuadraticSegment& s = segments[i];
  return std::fma(2.0 * s.a2, x, s.a1);
}

PiecewiseQuadratic integrate(const PiecewiseLinear& pl) {
  PiecewiseQuadratic pq;
  pq.segments.resize(pl.segments.size());

  CompensatedSum value_at_knot;  // starts at zero: the left anchor
  for (std::size_t i = 0; i < pl.segments.size(); ++i) {
    const double half_slope = pl.segments[i].slope / 2.0;
    const double intercept = pl.segments[i].intercept;
    const double k = pl.partition.knots[i];
    // a0 makes the raw quadratic reproduce the accumulated knot value at k.
    const double a0 = value_at_knot.value() - std::fma(half_slope, k, intercept) * k;
    pq.segments[i] = {half_slope, intercept, a0};
    const double h = pl.partition.knots[i + 1] - k;
    value_at_knot.add(segment_increment(half_slope, pl.values[i], h));
  }
  pq.partition = pl.partition;
  return pq;
}

double streamed_terminal_value(const RealFunction& f, double a, double b, int level) {
  if (!(a < b)) throw InvalidInterval("interval endpoints must satisfy a < b");
  if (level < 1 || level > 62) throw LevelOutOfRange("level must be in [1, 62]");
  const std::uint64_t n = interval_count(level);
  CompensatedSum value_at_knot;
  double left = f(a);
  double left_knot = a;
  for (std::uint64_t i = 1; i <= n; ++i) {
    const double right_knot = knot_value(a, b, level, i);
    const double right = f(right_knot);
    const double h = right_knot - left_knot;
    if (!(h > 0.0))
      throw LevelOutOfRange("level " + std::to_string(level) +
                            " is too fine for this interval at double precision");
    const double half_slope = (right - left) / h / 2.0;
    value_at_knot.add(segment_increment(half_slope, left, h));
    left = right;
    left_knot = right_knot;
  }
  return value_at_knot.value();
}

}  // namespace pforge
