#pragma once

#include <vector>

#include "pforge/evaluable.hpp"
#include "pforge/interpolant.hpp"
#include "pforge/partition.hpp"

namespace pforge {

/// One parabolic arc: a2*x^2 + a1*x + a0 on its subinterval.
struct QuadraticSegment {
  double a2 = 0.0;
  double a1 = 0.0;
  double a0 = 0.0;
};

/// Piecewise-quadratic antiderivative of a piecewise-linear function,
/// anchored at value(lower) = 0. Adjacent arcs share both value and slope
/// at the knots.
struct PiecewiseQuadratic {
  DyadicPartition partition;
  std::vector<QuadraticSegment> segments;

  /// Value at x, evaluated in the centered form
  ///   a2*(x-k)^2 + (2*a2*k + a1)*(x-k) + value(k)
  /// about the segment's left knot k, which avoids cancellation when |x|
  /// is large relative to the segment length. Throws OutOfDomain.
  double value(double x) const;

  /// One-sided slope 2*a2*x + a1 of the segment containing x. At interior
  /// knots both neighbors agree to rounding because the arcs are stitched
  /// slope-continuously.
  double derivative(double x) const;
};

/// Integrates each chord exactly and stitches the constants left to right
/// so the result is continuous and starts at zero. The running knot value
/// is carried with compensated summation; at deep levels (millions of
/// segments) naive accumulation costs several digits.
PiecewiseQuadratic integrate(const PiecewiseLinear& pl);

/// Terminal value of the level-n construction (the value the materialized
/// route gives at the right endpoint) computed in O(1) memory, for
/// definite integrals at levels where segment storage is unwanted.
/// Evaluates f once per knot.
double streamed_terminal_value(const RealFunction& f, double a, double b, int level);

}  // namespace pforge
