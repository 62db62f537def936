#pragma once

#include <vector>

#include "pforge/evaluable.hpp"
#include "pforge/partition.hpp"

namespace pforge {

/// One chord: value(x) = slope*x + intercept on its subinterval.
struct LinearSegment {
  double slope = 0.0;
  double intercept = 0.0;
};

/// Continuous piecewise-linear interpolant agreeing with the sampled
/// function at every knot. Slopes come from the knot values, so adjacent
/// segments meet at the knots by construction.
struct PiecewiseLinear {
  DyadicPartition partition;
  std::vector<double> values;  // one per knot
  std::vector<LinearSegment> segments;

  /// Chord value at x. Throws OutOfDomain outside the interval.
  double value(double x) const;
};

/// Samples f at the knots of p and builds the interpolant.
/// A DomainError from f is rethrown annotated with the offending knot.
PiecewiseLinear interpolate(const RealFunction& f, DyadicPartition p);

/// Builds the interpolant from explicit per-knot data. values.size() must
/// equal the knot count.
PiecewiseLinear interpolate(DyadicPartition p, std::vector<double> values);

}  // namespace pforge
