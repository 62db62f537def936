#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "pforge/antiderivative.hpp"
#include "pforge/evaluable.hpp"
#include "pforge/oscillation.hpp"
#include "pforge/partition.hpp"

namespace pforge {

/// What the constructed antiderivative is allowed to claim. The uniform
/// error bound is total oscillation times interval length; it is a
/// guarantee only under lipschitz_inflated rigor, and a heuristic
/// estimate otherwise.
struct ConvergenceCertificate {
  double lower = 0.0;
  double upper = 0.0;
  int level = 1;
  double omega = 0.0;        // total oscillation at `level`
  double error_bound = 0.0;  // omega * (upper - lower)
  double tolerance = 0.0;
  bool met = false;          // error_bound <= tolerance
  RigorSpec rigor;
  std::uint64_t evaluations = 0;  // function calls spent, all levels
};

struct EngineOptions {
  double tolerance = 1e-6;
  int max_level = default_max_level;
  int samples_per_interval = default_samples_per_interval;
  RigorSpec rigor;
  /// Build exactly this level, skipping the refinement loop. Used to make
  /// worked examples and convergence tables reproducible.
  std::optional<int> forced_level;
};

struct ConstructionResult {
  PiecewiseQuadratic antiderivative;
  ConvergenceCertificate certificate;
};

struct IntegralResult {
  double value = 0.0;
  ConvergenceCertificate certificate;
};

/// One row of a per-level convergence table.
struct LevelSummary {
  int level = 1;
  double omega = 0.0;
  double error_bound = 0.0;
  double end_value = 0.0;  // antiderivative at the right endpoint
};

/// Walks levels 1, 2, ... until the certified uniform bound
/// omega * (b - a) falls within tolerance (or options.forced_level is
/// reached), then materializes the antiderivative at that level. When
/// max_level is hit first the last construction is returned with
/// met = false. Oscillation evaluation cost doubles per level, so the
/// whole walk costs at most twice the final level.
ConstructionResult construct_antiderivative(const RealFunction& f, double a, double b,
                                            const EngineOptions& options = {});

/// Same refinement loop, but the returned value is the terminal value of
/// the construction computed by the O(1)-memory streaming fold. Under
/// lipschitz_inflated rigor the true integral of f lies within
/// certificate.error_bound of the value.
IntegralResult definite_integral(const RealFunction& f, double a, double b,
                                 const EngineOptions& options = {});

/// Pointwise bound omega * (x - a): how far the constructed antiderivative
/// can drift from the true one over [a, x]. Throws OutOfDomain.
double error_bound_at(const ConvergenceCertificate& certificate, double x);

/// One row per level n = 1..max_level, for convergence-order inspection.
/// End values are computed by the streaming fold.
std::vector<LevelSummary> convergence_table(const RealFunction& f, double a, double b,
                                            const EngineOptions& options = {});

}  // namespace pforge
