#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "pforge/antiderivative.hpp"
#include "pforge/engine.hpp"

namespace pforge {

/// A point evaluation carried in exports next to the certificate.
struct EvalPoint {
  double x = 0.0;
  double value = 0.0;
  double error_bound = 0.0;
};

std::string rigor_name(const RigorSpec& rigor);

/// Export schema for a constructed antiderivative:
///   {"interval":[a,b],"level":n,"omega":...,"error_bound":...,
///    "rigor":"sampled"|"lipschitz","met":bool,
///    "segments":[{"lo":...,"hi":...,"a2":...,"a1":...,"a0":...},...]}
/// Coefficients are the raw a2*x^2 + a1*x + a0 basis for portability.
/// When eval points are given they are appended under "eval".
nlohmann::json construction_json(const ConstructionResult& result,
                                 const std::vector<EvalPoint>& eval_points = {});

nlohmann::json integral_json(const IntegralResult& result);

nlohmann::json table_json(double a, double b, const RigorSpec& rigor,
                          const std::vector<LevelSummary>& rows);

/// Rebuilds a piecewise quadratic from the construction schema. The
/// partition is rebuilt from the interval and level, so a reloaded object
/// evaluates bit-identically to the one that was exported.
PiecewiseQuadratic quadratic_from_json(const nlohmann::json& doc);

/// CSV mirrors of the JSON documents. Every number is printed in
/// shortest round-trip decimal form, so both formats carry identical
/// values.
std::string construction_csv(const ConstructionResult& result,
                             const std::vector<EvalPoint>& eval_points = {});
std::string integral_csv(const IntegralResult& result);
std::string table_csv(double a, double b, const RigorSpec& rigor,
                      const std::vector<LevelSummary>& rows);

}  // namespace pforge
