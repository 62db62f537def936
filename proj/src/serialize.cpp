#include "pforge/serialize.hpp"

#include <charconv>
#include <stdexcept>
#include <string>

#include "pforge/errors.hpp"

namespace pforge {

namespace {

std::string shortest(double v) {
  char buf[32];
  const auto result = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, result.ptr);
}

std::string shortest(bool v) { return v ? "true" : "false"; }
std::string shortest(int v) { return std::to_string(v); }

nlohmann::json certificate_header(const ConvergenceCertificate& cert) {
  nlohmann::json doc;
  doc["interval"] = {cert.lower, cert.upper};
  doc["level"] = cert.level;
  doc["omega"] = cert.omega;
  doc["error_bound"] = cert.error_bound;
  doc["rigor"] = rigor_name(cert.rigor);
  doc["met"] = cert.met;
  return doc;
}

template <class Row>
void csv_line(std::string& out, const Row& row) {
  out += row;
  out += '\n';
}

}  // namespace

std::string rigor_name(const RigorSpec& rigor) {
  return rigor.mode == Rigor::sampled ? "sampled" : "lipschitz";
}

nlohmann::json construction_json(const ConstructionResult& result,
                                 const std::vector<EvalPoint>& eval_points) {
  nlohmann::json doc = certificate_header(result.certificate);
  nlohmann::json segments = nlohmann::json::array();
  const auto& pq = result.antiderivative;
  for (std::size_t i = 0; i < pq.segments.size(); ++i) {
    segments.push_back({{"lo", pq.partition.knots[i]},
                        {"hi", pq.partition.knots[i + 1]},
                        {"a2", pq.segments[i].a2},
                        {"a1", pq.segments[i].a1},
                        {"a0", pq.segments[i].a0}});
  }
  doc["segments"] = std::move(segments);
  if (!eval_points.empty()) {
    nlohmann::json eval = nlohmann::json::array();
    for (const auto& p : eval_points)
      eval.push_back({{"x", p.x}, {"value", p.value}, {"error_bound", p.error_bound}});
    doc["eval"] = std::move(eval);
  }
  return doc;
}

nlohmann::json integral_json(const IntegralResult& result) {
  nlohmann::json doc = certificate_header(result.certificate);
  doc["value"] = result.value;
  return doc;
}

nlohmann::json table_json(double a, double b, const RigorSpec& rigor,
                          const std::vector<LevelSummary>& rows) {
  nlohmann::json doc;
  doc["interval"] = {a, b};
  doc["rigor"] = rigor_name(rigor);
  nlohmann::json out_rows = nlohmann::json::array();
  for (const auto& row : rows)
    out_rows.push_back({{"level", row.level},
                        {"omega", row.omega},
                        {"error_bound", row.error_bound},
                        {"value", row.end_value}});
  doc["rows"] = std::move(out_rows);
  return doc;
}

PiecewiseQuadratic quadratic_from_json(const nlohmann::json& doc) {
  const auto& interval = doc.at("interval");
  if (!interval.is_array() || interval.size() != 2)
    throw std::invalid_argument("\"interval\" must be [a, b]");
  const double a = interval[0].get<double>();
  const double b = interval[1].get<double>();
  const int level = doc.at("level").get<int>();

  PiecewiseQuadratic pq;
  pq.partition = build_partition(a, b, level, level > default_max_level ? level : default_max_level);
  const auto& segments = doc.at("segments");
  if (!segments.is_array() || segments.size() != pq.partition.segment_count())
    throw std::invalid_argument("segment count does not match level " + std::to_string(level));
  pq.segments.resize(segments.size());
  for (std::size_t i = 0; i < segments.size(); ++i) {
    const auto& s = segments[i];
    pq.segments[i] = {s.at("a2").get<double>(), s.at("a1").get<double>(),
                      s.at("a0").get<double>()};
  }
  return pq;
}

namespace {

std::string certificate_csv(const ConvergenceCertificate& cert) {
  std::string out;
  csv_line(out, "# interval," + shortest(cert.lower) + "," + shortest(cert.upper));
  csv_line(out, "# level," + shortest(cert.level));
  csv_line(out, "# omega," + shortest(cert.omega));
  csv_line(out, "# error_bound," + shortest(cert.error_bound));
  csv_line(out, "# rigor," + rigor_name(cert.rigor));
  csv_line(out, "# met," + shortest(cert.met));
  return out;
}

}  // namespace

std::string construction_csv(const ConstructionResult& result,
                             const std::vector<EvalPoint>& eval_points) {
  std::string out = certificate_csv(result.certificate);
  csv_line(out, "lo,hi,a2,a1,a0");
  const auto& pq = result.antiderivative;
  for (std::size_t i = 0; i < pq.segments.size(); ++i) {
    csv_line(out, shortest(pq.partition.knots[i]) + "," + shortest(pq.partition.knots[i + 1]) +
                      "," + shortest(pq.segments[i].a2) + "," + shortest(pq.segments[i].a1) + "," +
                      shortest(pq.segments[i].a0));
  }
  if (!eval_points.empty()) {
    csv_line(out, "# eval");
    csv_line(out, "x,value,error_bound");
    for (const auto& p : eval_points)
      csv_line(out, shortest(p.x) + "," + shortest(p.value) + "," + shortest(p.error_bound));
  }
  return out;
}

std::string integral_csv(const IntegralResult& result) {
  std::string out = certificate_csv(result.certificate);
  csv_line(out, "value," + shortest(result.value));
  return out;
}

std::string table_csv(double a, double b, const RigorSpec& rigor,
                      const std::vector<LevelSummary>& rows) {
  std::string out;
  csv_line(out, "# interval," + shortest(a) + "," + shortest(b));
  csv_line(out, "# rigor," + rigor_name(rigor));
  csv_line(out, "level,omega,error_bound,value");
  for (const auto& row : rows)
    csv_line(out, shortest(row.level) + "," + shortest(row.omega) + "," +
                      shortest(row.error_bound) + "," + shortest(row.end_value));
  return out;
}

}  // namespace pforge
