#include "pforge/engine.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "pforge/errors.hpp"

namespace pforge {

namespace {

void validate(double a, double b, const EngineOptions& options) {
  if (!std::isfinite(a) || !std::isfinite(b) || !(a < b))
    throw InvalidInterval("interval endpoints must be finite with a < b, got [" +
                          std::to_string(a) + ", " + std::to_string(b) + "]");
  if (!(options.tolerance > 0.0))
    throw std::invalid_argument("tolerance must be positive, got " +
                                std::to_string(options.tolerance));
  if (options.max_level < 1)
    throw LevelOutOfRange("max_level must be at least 1, got " +
                          std::to_string(options.max_level));
  if (options.forced_level && (*options.forced_level < 1 || *options.forced_level > options.max_level))
    throw LevelOutOfRange("forced level " + std::to_string(*options.forced_level) +
                          " outside [1, " + std::to_string(options.max_level) + "]");
}

// Counts calls and rejects silent non-finite values, so the standing
// assumption (f evaluable and finite on [a,b]) is spot-checked at every
// sample actually used.
class CountingFunction {
 public:
  explicit CountingFunction(const RealFunction& f) : f_(f) {}

  RealFunction callable() {
    return [this](double x) {
      ++count_;
      const double v = f_(x);
      if (!std::isfinite(v))
        throw DomainError("function returned a non-finite value at x = " + std::to_string(x), x);
      return v;
    };
  }

  std::uint64_t count() const { return count_; }

 private:
  const RealFunction& f_;
  std::uint64_t count_ = 0;
};

// Certificate for a level the loop has settled on. met is re-derived from
// the stored numbers so the invariant met == (error_bound <= tolerance)
// holds by construction.
ConvergenceCertificate make_certificate(double a, double b, int level, double omega,
                                        const EngineOptions& options) {
  ConvergenceCertificate cert;
  cert.lower = a;
  cert.upper = b;
  cert.level = level;
  cert.omega = omega;
  cert.error_bound = omega * (b - a);
  cert.tolerance = options.tolerance;
  cert.met = cert.error_bound <= options.tolerance;
  cert.rigor = options.rigor;
  return cert;
}

// The refinement loop shared by both entry points: pick the level, then
// let `finish` build whatever representation the caller needs.
ConvergenceCertificate settle_level(const RealFunction& counted, double a, double b,
                                    const EngineOptions& options) {
  if (options.forced_level) {
    const int level = *options.forced_level;
    const double omega = total_oscillation_value(counted, a, b, level,
                                                 options.samples_per_interval, options.rigor);
    return make_certificate(a, b, level, omega, options);
  }
  for (int level = 1;; ++level) {
    const double omega = total_oscillation_value(counted, a, b, level,
                                                 options.samples_per_interval, options.rigor);
    if (omega * (b - a) <= options.tolerance || level == options.max_level)
      return make_certificate(a, b, level, omega, options);
  }
}

}  // namespace

ConstructionResult construct_antiderivative(const RealFunction& f, double a, double b,
                                            const EngineOptions& options) {
  validate(a, b, options);
  CountingFunction counter(f);
  const RealFunction counted = counter.callable();
  ConvergenceCertificate cert = settle_level(counted, a, b, options);
  PiecewiseQuadratic pq =
      integrate(interpolate(counted, build_partition(a, b, cert.level, options.max_level)));
  cert.evaluations = counter.count();
  return {std::move(pq), std::move(cert)};
}

IntegralResult definite_integral(const RealFunction& f, double a, double b,
                                 const EngineOptions& options) {
  validate(a, b, options);
  CountingFunction counter(f);
  const RealFunction counted = counter.callable();
  ConvergenceCertificate cert = settle_level(counted, a, b, options);
  const double value = streamed_terminal_value(counted, a, b, cert.level);
  cert.evaluations = counter.count();
  return {value, std::move(cert)};
}

double error_bound_at(const ConvergenceCertificate& certificate, double x) {
  if (!(x >= certificate.lower) || !(x <= certificate.upper))
    throw OutOfDomain("point " + std::to_string(x) + " outside [" +
                          std::to_string(certificate.lower) + ", " +
                          std::to_string(certificate.upper) + "]",
                      x);
  return certificate.omega * (x - certificate.lower);
}

std::vector<LevelSummary> convergence_table(const RealFunction& f, double a, double b,
                                            const EngineOptions& options) {
  validate(a, b, options);
  CountingFunction counter(f);
  const RealFunction counted = counter.callable();
  std::vector<LevelSummary> rows;
  rows.reserve(static_cast<std::size_t>(options.max_level));
  for (int level = 1; level <= options.max_level; ++level) {
    LevelSummary row;
    row.level = level;
    row.omega = total_oscillation_value(counted, a, b, level, options.samples_per_interval,
                                        options.rigor);
    row.error_bound = row.omega * (b - a);
    row.end_value = streamed_terminal_value(counted, a, b, level);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace pforge
