#pragma once

#include <cstdint>
#include <vector>

#include "pforge/evaluable.hpp"
#include "pforge/partition.hpp"

namespace pforge {

/// How interval oscillations are certified. Sampled values can
/// underestimate the true max-minus-min; the inflated mode converts them
/// into a guaranteed upper bound for an L-Lipschitz function.
enum class Rigor { sampled, lipschitz_inflated };

struct RigorSpec {
  Rigor mode = Rigor::sampled;
  double lipschitz = 0.0;

  static RigorSpec sampled() { return {}; }
  static RigorSpec inflated(double lipschitz_bound) {
    return {Rigor::lipschitz_inflated, lipschitz_bound};
  }
};

/// Per-interval oscillations of a function over a partition, with their
/// maximum. `total` is exactly the maximum of `per_interval`.
struct OscillationReport {
  int level = 1;
  int samples_per_interval = 16;
  RigorSpec rigor;
  std::vector<double> per_interval;
  double total = 0.0;
};

inline constexpr int default_samples_per_interval = 16;

/// max - min of f over the k+1 equispaced samples lo + j*(hi-lo)/k,
/// j = 0..k (endpoints always included). Under lipschitz_inflated(L) the
/// sampled value is raised by 2*L*(hi-lo)/k, an upper bound on the true
/// oscillation of an L-Lipschitz function.
double interval_oscillation(const RealFunction& f, double lo, double hi, int k,
                            RigorSpec rigor = {});

/// Oscillation of every member of p, sampled on a shared grid of
/// 2^(level-1)*k + 1 points built the same way as the knots, so the
/// sample set of level n is bit-exactly a subset of the sample set of
/// level n+1 at the same per-interval density.
OscillationReport total_oscillation(const RealFunction& f, const DyadicPartition& p, int k,
                                    RigorSpec rigor = {});

/// The report's `total` alone, in O(1) memory. Same samples, same
/// arithmetic, same reduction order as total_oscillation.
double total_oscillation_value(const RealFunction& f, double a, double b, int level, int k,
                               RigorSpec rigor = {});

/// The shared sample grid total_oscillation reads f on.
std::vector<double> nested_sample_grid(const DyadicPartition& p, int k);

}  // namespace pforge
