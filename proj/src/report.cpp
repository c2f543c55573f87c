#include "hardytk/report.hpp"

#include <charconv>
#include <sstream>

namespace hardytk::report {

namespace {

// Shortest representation that round-trips, keeps the CSV diff-able.
std::string csv_cell(const std::optional<double>& v) {
  if (!v) return "";
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), *v);
  return std::string(buf, res.ptr);
}

}  // namespace

Json RunReport::to_json() const {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["tool"] = kToolVersion;
  j["command"] = command;
  j["params"] = params;
  j["seed"] = seed;
  j["results"] = results;
  if (suite_pass) j["suite_pass"] = *suite_pass;
  j["wall_time_ms"] = wall_time_ms;
  return j;
}

RunReport RunReport::from_json(const Json& j) {
  RunReport r;
  r.command = j.at("command").get<std::string>();
  r.params = j.at("params");
  r.seed = j.at("seed").get<std::uint64_t>();
  r.results = j.at("results");
  if (j.contains("suite_pass")) r.suite_pass = j.at("suite_pass").get<bool>();
  r.wall_time_ms = j.at("wall_time_ms").get<std::int64_t>();
  return r;
}

std::string RunReport::to_csv() const {
  std::ostringstream os;
  os << "name,value,stderr,kind,d,N,alpha,seed,samples\n";
  for (const auto& row : csv_rows) {
    os << row.name << ',' << csv_cell(row.value) << ',' << csv_cell(row.std_error) << ','
       << row.kind << ',' << csv_cell(row.d) << ',' << csv_cell(row.n) << ','
       << csv_cell(row.alpha) << ',';
    if (row.seed) os << *row.seed;
    os << ',';
    if (row.samples) os << *row.samples;
    os << '\n';
  }
  return os.str();
}

Json to_json(const estimate::MCEstimate& e) {
  Json j;
  j["mean"] = e.mean;
  j["stderr"] = e.std_error;
  j["n_samples"] = e.n_samples;
  j["n_rejected"] = e.n_rejected;
  j["seed"] = e.seed;
  return j;
}

estimate::MCEstimate mc_estimate_from_json(const Json& j) {
  estimate::MCEstimate e;
  e.mean = j.at("mean").get<double>();
  e.std_error = j.at("stderr").get<double>();
  e.n_samples = j.at("n_samples").get<std::size_t>();
  e.n_rejected = j.at("n_rejected").get<std::size_t>();
  e.seed = j.at("seed").get<std::uint64_t>();
  return e;
}

Json to_json(const bounds::BoundReport& b) {
  Json j;
  j["name"] = b.name;
  j["value"] = b.value;
  j["kind"] = bounds::to_string(b.kind);
  j["formula"] = b.formula;
  j["params"] = Json::object();
  for (const auto& [k, v] : b.params) j["params"][k] = v;
  return j;
}

Json to_json(const functionals::QuotientResult& q) {
  Json j;
  j["family"] = q.family;
  j["T"] = to_json(q.T);
  j["X"] = to_json(q.X);
  if (q.Z) j["Z"] = to_json(*q.Z);
  j["quotient"] = to_json(q.quotient);
  if (q.bound_applicable) {
    j["bound"] = Json{{"name", q.bound_name},
                      {"value", q.bound_value},
                      {"margin_sigma", q.margin_sigma}};
  }
  return j;
}

std::string stable_serialization(const Json& report) {
  Json copy = report;
  copy.erase("wall_time_ms");
  return copy.dump(2);
}

}  // namespace hardytk::report
