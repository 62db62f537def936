#include "pforge/oscillation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "pforge/errors.hpp"

namespace pforge {

namespace {

void check_sample_count(int k) {
  if (k < 2) throw std::invalid_argument("need at least 2 samples per interval, got " + std::to_string(k));
}

double inflate(double sampled, double width, int k, const RigorSpec& rigor) {
  if (rigor.mode == Rigor::sampled) return sampled;
  return sampled + 2.0 * rigor.lipschitz * width / static_cast<double>(k);
}

double global_sample(double a, double b, std::uint64_t total, std::uint64_t j) {
  if (j == 0) return a;
  if (j >= total) return b;
  const double step = (b - a) / static_cast<double>(total);
  return a + static_cast<double>(j) * step;
}

// Walks the shared sample grid once, f evaluated once per point, and hands
// each interval's oscillation to the sink in left-to-right order.
template <class Sink>
void for_each_interval(const RealFunction& f, double a, double b, int level, int k,
                       const RigorSpec& rigor, Sink&& sink) {
  check_sample_count(k);
  const std::uint64_t intervals = interval_count(level);
  const std::uint64_t total = intervals * static_cast<std::uint64_t>(k);
  double boundary = f(a);
  for (std::uint64_t i = 0; i < intervals; ++i) {
    double lo = boundary;
    double hi = boundary;
    for (int j = 1; j <= k; ++j) {
      const std::uint64_t idx = i * static_cast<std::uint64_t>(k) + static_cast<std::uint64_t>(j);
      const double v = f(global_sample(a, b, total, idx));
      lo = std::min(lo, v);
      hi = std::max(hi, v);
      if (j == k) boundary = v;
    }
    const double width = knot_value(a, b, level, i + 1) - knot_value(a, b, level, i);
    sink(i, inflate(hi - lo, width, k, rigor));
  }
}

}  // namespace

double interval_oscillation(const RealFunction& f, double lo, double hi, int k, RigorSpec rigor) {
  check_sample_count(k);
  if (!(lo < hi)) throw InvalidInterval("interval endpoints must satisfy lo < hi");
  double mn = f(lo);
  double mx = mn;
  for (int j = 1; j <= k; ++j) {
    const double s = j == k ? hi : lo + static_cast<double>(j) * (hi - lo) / static_cast<double>(k);
    const double v = f(s);
    mn = std::min(mn, v);
    mx = std::max(mx, v);
  }
  return inflate(mx - mn, hi - lo, k, rigor);
}

OscillationReport total_oscillation(const RealFunction& f, const DyadicPartition& p, int k,
                                    RigorSpec rigor) {
  OscillationReport report;
  report.level = p.level;
  report.samples_per_interval = k;
  report.rigor = rigor;
  report.per_interval.resize(p.segment_count());
  double total = 0.0;
  for_each_interval(f, p.lower, p.upper, p.level, k, rigor, [&](std::uint64_t i, double osc) {
    report.per_interval[static_cast<std::size_t>(i)] = osc;
    total = std::max(total, osc);
  });
  report.total = total;
  return report;
}

double total_oscillation_value(const RealFunction& f, double a, double b, int level, int k,
                               RigorSpec rigor) {
  double total = 0.0;
  for_each_interval(f, a, b, level, k, rigor, [&](std::uint64_t, double osc) {
    total = std::max(total, osc);
  });
  return total;
}

std::vector<double> nested_sample_grid(const DyadicPartition& p, int k) {
  check_sample_count(k);
  const std::uint64_t total = interval_count(p.level) * static_cast<std::uint64_t>(k);
  std::vector<double> grid(static_cast<std::size_t>(total) + 1);
  for (std::uint64_t j = 0; j <= total; ++j)
    grid[static_cast<std::size_t>(j)] = global_sample(p.lower, p.upper, total, j);
  return grid;
}

}  // namespace pforge
