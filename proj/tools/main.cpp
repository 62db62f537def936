// Command-line front end: parse an expression, run the construction, and
// export coefficients, certificates, and convergence tables.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pforge/engine.hpp"
#include "pforge/errors.hpp"
#include "pforge/expr.hpp"
#include "pforge/serialize.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInputError = 1;
constexpr int kExitToleranceUnmet = 2;

struct RunConfig {
  std::string expression;
  std::vector<double> interval;
  double tolerance = 1e-6;
  int max_level = pforge::default_max_level;
  std::optional<int> forced_level;
  int samples = pforge::default_samples_per_interval;
  std::optional<double> lipschitz;
  std::string format = "json";
  std::string eval_list;
  std::string out_path;
};

void add_common_options(CLI::App& cmd, RunConfig& config) {
  cmd.add_option("--expr", config.expression, "expression for f in the variable x")->required();
  cmd.add_option("--interval", config.interval, "interval endpoints A B")
      ->required()
      ->expected(2);
  cmd.add_option("--max-level", config.max_level, "refinement ceiling")
      ->check(CLI::Range(1, 30))
      ->envname("PRIMITIVE_FORGE_MAX_LEVEL");
  cmd.add_option("--samples", config.samples, "oscillation samples per interval")
      ->check(CLI::Range(2, 1 << 20));
  cmd.add_option("--lipschitz", config.lipschitz,
                 "Lipschitz constant of f; switches the certificate to the rigorous "
                 "inflated oscillation bound")
      ->check(CLI::NonNegativeNumber);
  cmd.add_option("--format", config.format, "output format")
      ->check(CLI::IsMember({"json", "csv"}));
  cmd.add_option("--out", config.out_path, "write output to a file instead of stdout");
}

void add_tolerance_options(CLI::App& cmd, RunConfig& config) {
  cmd.add_option("--tol", config.tolerance, "uniform error tolerance")
      ->check(CLI::PositiveNumber);
  cmd.add_option("--level", config.forced_level,
                 "force this exact level instead of refining to tolerance")
      ->check(CLI::Range(1, 30));
}

pforge::EngineOptions engine_options(const RunConfig& config) {
  pforge::EngineOptions options;
  options.tolerance = config.tolerance;
  options.max_level = config.max_level;
  options.samples_per_interval = config.samples;
  options.forced_level = config.forced_level;
  if (config.lipschitz) options.rigor = pforge::RigorSpec::inflated(*config.lipschitz);
  return options;
}

std::vector<double> parse_eval_list(const std::string& text) {
  std::vector<double> points;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t next = text.find(',', pos);
    if (next == std::string::npos) next = text.size();
    const std::string item = text.substr(pos, next - pos);
    try {
      std::size_t used = 0;
      points.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad --eval entry '" + item + "'");
    }
    pos = next + 1;
  }
  return points;
}

void emit(const RunConfig& config, const std::string& body) {
  if (config.out_path.empty()) {
    std::cout << body;
    if (body.empty() || body.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(config.out_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file '" + config.out_path + "'");
  out << body;
  if (body.empty() || body.back() != '\n') out << '\n';
  if (!out.flush()) throw std::runtime_error("cannot write output file '" + config.out_path + "'");
}

int run_construct(const RunConfig& config) {
  const auto expr = pforge::Expression::parse(config.expression);
  const auto result = pforge::construct_antiderivative(
      expr.evaluator(), config.interval[0], config.interval[1], engine_options(config));

  std::vector<pforge::EvalPoint> eval_points;
  for (const double x : parse_eval_list(config.eval_list))
    eval_points.push_back({x, result.antiderivative.value(x),
                           pforge::error_bound_at(result.certificate, x)});

  if (config.format == "csv")
    emit(config, pforge::construction_csv(result, eval_points));
  else
    emit(config, pforge::construction_json(result, eval_points).dump());
  return result.certificate.met ? kExitOk : kExitToleranceUnmet;
}

int run_integrate(const RunConfig& config) {
  const auto expr = pforge::Expression::parse(config.expression);
  const auto result = pforge::definite_integral(expr.evaluator(), config.interval[0],
                                                config.interval[1], engine_options(config));
  if (config.format == "csv")
    emit(config, pforge::integral_csv(result));
  else
    emit(config, pforge::integral_json(result).dump());
  return result.certificate.met ? kExitOk : kExitToleranceUnmet;
}

int run_table(const RunConfig& config) {
  const auto expr = pforge::Expression::parse(config.expression);
  pforge::EngineOptions options = engine_options(config);
  const auto rows =
      pforge::convergence_table(expr.evaluator(), config.interval[0], config.interval[1], options);
  if (config.format == "csv")
    emit(config, pforge::table_csv(config.interval[0], config.interval[1], options.rigor, rows));
  else
    emit(config,
         pforge::table_json(config.interval[0], config.interval[1], options.rigor, rows).dump());
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Constructs antiderivatives of continuous functions as certified "
               "piecewise-quadratic coefficients"};
  app.require_subcommand(1);

  RunConfig config;

  CLI::App* construct = app.add_subcommand(
      "construct", "build the antiderivative and export segment coefficients");
  add_common_options(*construct, config);
  add_tolerance_options(*construct, config);
  construct->add_option("--eval", config.eval_list,
                        "comma-separated x values to evaluate the antiderivative at");

  CLI::App* integrate =
      app.add_subcommand("integrate", "compute the definite integral over the interval");
  add_common_options(*integrate, config);
  add_tolerance_options(*integrate, config);

  CLI::App* table = app.add_subcommand(
      "table", "emit one row per level with oscillation, bound, and endpoint value");
  add_common_options(*table, config);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::cerr << "error: " << e.what() << '\n';
    return kExitInputError;
  }

  try {
    if (config.interval.size() == 2 && !(config.interval[0] < config.interval[1]))
      throw pforge::InvalidInterval("interval endpoints must satisfy A < B");
    if (construct->parsed()) return run_construct(config);
    if (integrate->parsed()) return run_integrate(config);
    if (table->parsed()) return run_table(config);
    std::cerr << "error: no subcommand given\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInputError;
  }
}
