#include "pforge/interpolant.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

#include "pforge/errors.hpp"

namespace pforge {

double PiecewiseLinear::value(double x) const {
  const std::size_t i = partition.locate(x);
  const LinearSegment& s = segments[i];
  return std::fma(s.slope, x, s.intercept);
}

PiecewiseLinear interpolate(const RealFunction& f, DyadicPartition p) {
  std::vector<double> values(p.knots.size());
  for (std::size_t i = 0; i < p.knots.size(); ++i) {
    try {
      values[i] = f(p.knots[i]);
    } catch (const DomainError& err) {
      throw DomainError("function not evaluable at knot " + std::to_string(i) + " (x = " +
                            std::to_string(p.knots[i]) + "): " + err.what(),
                        p.knots[i]);
    }
  }
  return interpolate(std::move(p), std::move(values));
}

PiecewiseLinear interpolate(DyadicPartition p, std::vector<double> values) {
  if (values.size() != p.knots.size())
    throw std::invalid_argument("need one value per knot: " + std::to_string(p.knots.size()) +
                                " knots, " + std::to_string(values.size()) + " values");
  PiecewiseLinear pl;
  pl.segments.resize(p.knots.size() - 1);
  for (std::size_t i = 0; i + 1 < p.knots.size(); ++i) {
    const double slope = (values[i + 1] - values[i]) / (p.knots[i + 1] - p.knots[i]);
    pl.segments[i] = {slope, std::fma(-slope, p.knots[i], values[i])};
  }
  pl.partition = std::move(p);
  pl.values = std::move(values);
  return pl;
}

}  // namespace pforge
