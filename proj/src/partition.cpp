#include "pforge/partition.hpp"

#include <cmath>
#include <string>

#include "pforge/errors.hpp"

namespace pforge {

std::uint64_t interval_count(int level) {
  return std::uint64_t{1} << (level - 1);
}

double knot_value(double a, double b, int level, std::uint64_t index) {
  const std::uint64_t n = interval_count(level);
  if (index == 0) return a;
  if (index >= n) return b;
  const double h = (b - a) / static_cast<double>(n);
  return a + static_cast<double>(index) * h;
}

double DyadicPartition::spacing() const {
  return (upper - lower) / static_cast<double>(segment_count());
}

std::size_t DyadicPartition::locate(double x) const {
  if (!(x >= lower) || !(x <= upper))
    throw OutOfDomain("point " + std::to_string(x) + " outside [" +
                          std::to_string(lower) + ", " + std::to_string(upper) + "]",
                      x);
  const std::size_t last = segment_count() - 1;
  const double guess = std::floor((x - lower) / spacing());
  std::size_t i = guess <= 0.0                          ? 0
                  : guess >= static_cast<double>(last) ? last
                                                        : static_cast<std::size_t>(guess);
  // Rounding in the arithmetic guess can be off by one near a knot.
  if (x < knots[i] && i > 0) --i;
  if (i < last && x >= knots[i + 1]) ++i;
  return i;
}

namespace {

void check_level(int level, int max_level) {
  if (level < 1 || level > max_level)
    throw LevelOutOfRange("level " + std::to_string(level) + " outside [1, " +
                          std::to_string(max_level) + "]");
}

}  // namespace

DyadicPartition build_partition(double a, double b, int level, int max_level) {
  if (!std::isfinite(a) || !std::isfinite(b) || !(a < b))
    throw InvalidInterval("interval endpoints must be finite with a < b, got [" +
                          std::to_string(a) + ", " + std::to_string(b) + "]");
  check_level(level, max_level);

  const std::uint64_t n = interval_count(level);
  DyadicPartition p;
  p.lower = a;
  p.upper = b;
  p.level = level;
  p.knots.resize(static_cast<std::size_t>(n) + 1);
  for (std::uint64_t i = 0; i <= n; ++i)
    p.knots[static_cast<std::size_t>(i)] = knot_value(a, b, level, i);
  for (std::size_t i = 0; i + 1 < p.knots.size(); ++i)
    if (!(p.knots[i] < p.knots[i + 1]))
      throw LevelOutOfRange("level " + std::to_string(level) +
                            " is too fine for this interval at double precision");
  return p;
}

DyadicPartition refine(const DyadicPartition& p, int max_level) {
  check_level(p.level + 1, max_level);
  return build_partition(p.lower, p.upper, p.level + 1, max_level);
}

}  // namespace pforge
