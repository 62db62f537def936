#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>

#include "pforge/engine.hpp"
#include "pforge/errors.hpp"

using pforge::construct_antiderivative;
using pforge::convergence_table;
using pforge::definite_integral;
using pforge::EngineOptions;
using pforge::error_bound_at;
using pforge::RigorSpec;

TEST_SUITE("engine") {

TEST_CASE("refinement stops at the first level meeting the tolerance") {
  // For the identity on [0,1] the bound at level n is exactly 2^(1-n), so
  // 0.01 is first met at level 8.
  EngineOptions options;
  options.tolerance = 0.01;
  const auto result = construct_antiderivative([](double x) { return x; }, 0.0, 1.0, options);
  const auto& cert = result.certificate;
  CHECK(cert.level == 8);
  CHECK(cert.omega == std::ldexp(1.0, -7));
  CHECK(cert.error_bound == std::ldexp(1.0, -7));
  CHECK(cert.met);
  CHECK(cert.tolerance == 0.01);
  CHECK(cert.lower == 0.0);
  CHECK(cert.upper == 1.0);
  CHECK(cert.evaluations > 0);
  for (const auto& s : result.antiderivative.segments) {
    CHECK(s.a2 == 0.5);
    CHECK(s.a1 == 0.0);
    CHECK(s.a0 == 0.0);
  }
}

TEST_CASE("the constructed antiderivative honors its certificate") {
  // x^3 is monotone on [0,1], so endpoint sampling makes the sampled
  // oscillation exact and the bound rigorous.
  EngineOptions options;
  options.tolerance = 1e-3;
  const auto result = construct_antiderivative([](double x) { return x * x * x; }, 0.0, 1.0,
                                               options);
  CHECK(result.certificate.met);
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> pick(0.0, 1.0);
  for (int i = 0; i < 200; ++i) {
    const double x = pick(rng);
    const double exact = x * x * x * x / 4.0;
    CHECK(std::abs(result.antiderivative.value(x) - exact) <= result.certificate.error_bound);
  }
}

TEST_CASE("the definite integral of sin over [0, pi] is 2") {
  EngineOptions options;
  options.tolerance = 1e-4;
  options.rigor = RigorSpec::inflated(1.0);
  const auto result =
      definite_integral([](double x) { return std::sin(x); }, 0.0, std::numbers::pi, options);
  CHECK(result.certificate.met);
  CHECK(result.certificate.level <= 19);
  CHECK(std::abs(result.value - 2.0) <= 1e-4);
  CHECK(result.certificate.rigor.mode == pforge::Rigor::lipschitz_inflated);
}

TEST_CASE("pointwise bounds grow linearly from the anchor") {
  EngineOptions options;
  options.forced_level = 4;
  const auto result =
      construct_antiderivative([](double x) { return std::cos(x); }, 1.0, 3.0, options);
  const auto& cert = result.certificate;
  CHECK(error_bound_at(cert, 1.0) == 0.0);
  CHECK(error_bound_at(cert, 3.0) == cert.error_bound);
  CHECK(error_bound_at(cert, 2.0) == cert.omega * 1.0);
  CHECK(error_bound_at(cert, 1.5) <= error_bound_at(cert, 2.5));
  CHECK_THROWS_AS(error_bound_at(cert, 0.5), pforge::OutOfDomain);
  CHECK_THROWS_AS(error_bound_at(cert, 3.5), pforge::OutOfDomain);
}

TEST_CASE("runs are deterministic") {
  const auto f = [](double x) { return std::sin(x) * std::exp(0.2 * x); };
  EngineOptions options;
  options.tolerance = 1e-5;
  const auto first = construct_antiderivative(f, 0.0, 2.0, options);
  const auto second = construct_antiderivative(f, 0.0, 2.0, options);
  CHECK(first.certificate.level == second.certificate.level);
  CHECK(first.certificate.omega == second.certificate.omega);
  CHECK(first.certificate.error_bound == second.certificate.error_bound);
  CHECK(first.certificate.evaluations == second.certificate.evaluations);
  REQUIRE(first.antiderivative.segments.size() == second.antiderivative.segments.size());
  for (std::size_t i = 0; i < first.antiderivative.segments.size(); ++i) {
    CHECK(first.antiderivative.segments[i].a2 == second.antiderivative.segments[i].a2);
    CHECK(first.antiderivative.segments[i].a1 == second.antiderivative.segments[i].a1);
    CHECK(first.antiderivative.segments[i].a0 == second.antiderivative.segments[i].a0);
  }
}

TEST_CASE("a forced level bypasses the stopping rule but not the certificate") {
  EngineOptions options;
  options.forced_level = 2;
  const auto result = construct_antiderivative([](double x) { return x * x; }, 0.0, 1.0, options);
  CHECK(result.certificate.level == 2);
  CHECK(result.certificate.omega == 0.75);
  CHECK(result.certificate.error_bound == 0.75);
  CHECK(!result.certificate.met);  // the default tolerance is far tighter
  CHECK(result.antiderivative.segments.size() == 2);
}

TEST_CASE("evaluation counting is exact for a forced level") {
  // Level 3: a 4*16+1 point oscillation grid plus 5 knot evaluations.
  EngineOptions options;
  options.forced_level = 3;
  const auto result = construct_antiderivative([](double x) { return x; }, 0.0, 1.0, options);
  CHECK(result.certificate.evaluations == 65 + 5);
}

TEST_CASE("hitting max_level reports met = false") {
  EngineOptions options;
  options.tolerance = 1e-12;
  options.max_level = 6;
  const auto result = definite_integral([](double x) { return std::sin(x); }, 0.0, 2.0, options);
  CHECK(result.certificate.level == 6);
  CHECK(!result.certificate.met);
  CHECK(result.certificate.error_bound > options.tolerance);
}

TEST_CASE("invalid requests are rejected up front") {
  const auto f = [](double x) { return x; };
  EngineOptions options;
  CHECK_THROWS_AS(construct_antiderivative(f, 1.0, 0.0, options), pforge::InvalidInterval);
  CHECK_THROWS_AS(construct_antiderivative(f, 0.0,
                                           std::numeric_limits<double>::infinity(), options),
                  pforge::InvalidInterval);
  options.tolerance = 0.0;
  CHECK_THROWS_AS(construct_antiderivative(f, 0.0, 1.0, options), std::invalid_argument);
  options.tolerance = 1e-6;
  options.forced_level = 30;
  options.max_level = 24;
  CHECK_THROWS_AS(construct_antiderivative(f, 0.0, 1.0, options), pforge::LevelOutOfRange);
  options.forced_level = 0;
  CHECK_THROWS_AS(definite_integral(f, 0.0, 1.0, options), pforge::LevelOutOfRange);
}

TEST_CASE("a function going non-finite is reported as a domain error") {
  const auto f = [](double x) { return 1.0 / (x - 0.5); };
  EngineOptions options;
  options.forced_level = 2;
  CHECK_THROWS_AS(construct_antiderivative(f, 0.0, 1.0, options), pforge::DomainError);
}

TEST_CASE("the convergence table walks every level once") {
  const auto f = [](double x) { return std::sin(x); };
  EngineOptions options;
  options.max_level = 10;
  const auto rows = convergence_table(f, 0.0, 2.0, options);
  REQUIRE(rows.size() == 10);
  for (int n = 1; n <= 10; ++n) {
    const auto& row = rows[static_cast<std::size_t>(n) - 1];
    CHECK(row.level == n);
    CHECK(row.error_bound == row.omega * 2.0);
    CHECK(row.omega ==
          pforge::total_oscillation_value(f, 0.0, 2.0, n, options.samples_per_interval));
    CHECK(row.end_value == pforge::streamed_terminal_value(f, 0.0, 2.0, n));
    if (n > 1) CHECK(row.omega <= rows[static_cast<std::size_t>(n) - 2].omega);
  }
  const double exact = 1.0 - std::cos(2.0);
  CHECK(std::abs(rows.back().end_value - exact) <= 1e-4);
}

TEST_CASE("the streamed and materialized routes agree") {
  const auto f = [](double x) { return std::exp(x) / (1.0 + x); };
  EngineOptions options;
  options.tolerance = 1e-5;
  const auto integral = definite_integral(f, 0.0, 1.5, options);
  const auto construction = construct_antiderivative(f, 0.0, 1.5, options);
  CHECK(integral.certificate.level == construction.certificate.level);
  const double scale = std::max(1.0, std::abs(integral.value));
  CHECK(std::abs(integral.value - construction.antiderivative.value(1.5)) <= 1e-9 * scale);
}

}  // TEST_SUITE
