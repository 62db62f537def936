#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace pforge {

/// Default ceiling on the refinement level. Level 24 means 2^23 (~8.4M)
/// segments, which keeps materialized coefficient arrays within a few
/// hundred MB. Callers may raise it explicitly.
inline constexpr int default_max_level = 24;

/// Knot i of the level-n regular dyadic grid on [a,b], computed from the
/// closed formula a + i*(b-a)/2^(n-1) with the final knot forced to b.
/// Because the spacing halves exactly from one level to the next, knots of
/// level n reappear bit-identically at every finer level.
double knot_value(double a, double b, int level, std::uint64_t index);

/// Number of subintervals at a level: 2^(level-1).
std::uint64_t interval_count(int level);

/// Regular dyadic partition of [a,b] into 2^(level-1) equal subintervals.
struct DyadicPartition {
  double lower = 0.0;
  double upper = 0.0;
  int level = 1;
  std::vector<double> knots;  // 2^(level-1) + 1 entries, strictly increasing

  std::size_t segment_count() const { return knots.size() - 1; }
  double spacing() const;

  /// Index of the subinterval containing x. Intervals are left-closed,
  /// right-open; the last interval is closed. O(1) from the uniform
  /// spacing with a one-step fix-up against the stored knots.
  /// Throws OutOfDomain for x outside [lower, upper].
  std::size_t locate(double x) const;
};

/// Builds the level-n partition. Throws InvalidInterval unless
/// a < b with both finite, and LevelOutOfRange unless 1 <= n <= max_level
/// (or if the knots would collide at double precision).
DyadicPartition build_partition(double a, double b, int level,
                                int max_level = default_max_level);

/// The level n+1 partition on the same interval. Every knot of p is a
/// knot of the result, bit-exactly.
DyadicPartition refine(const DyadicPartition& p, int max_level = default_max_level);

}  // namespace pforge
