#ifndef HARDYTK_REPORT_HPP
#define HARDYTK_REPORT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hardytk/bounds.hpp"
#include "hardytk/estimate.hpp"
#include "hardytk/functionals.hpp"

namespace hardytk::report {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kToolVersion = "hardytk 0.1.0";

/// One row of the fixed CSV schema:
/// name,value,stderr,kind,d,N,alpha,seed,samples
struct CsvRow {
  std::string name;
  std::optional<double> value;
  std::optional<double> std_error;
  std::string kind;
  std::optional<double> d;
  std::optional<double> n;
  std::optional<double> alpha;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> samples;
};

struct RunReport {
  std::string command;
  Json params = Json::object();
  Json results = Json::array();
  std::uint64_t seed = 0;
  std::int64_t wall_time_ms = 0;
  std::optional<bool> suite_pass;
  std::vector<CsvRow> csv_rows;

  Json to_json() const;
  static RunReport from_json(const Json& j);
  std::string to_csv() const;
};

Json to_json(const estimate::MCEstimate& e);
Json to_json(const bounds::BoundReport& b);
Json to_json(const functionals::QuotientResult& q);

estimate::MCEstimate mc_estimate_from_json(const Json& j);

/// Serialized form with the wall_time_ms line removed; two runs with the same
/// seed and chunking must agree bit-for-bit on this.
std::string stable_serialization(const Json& report);

}  // namespace hardytk::report

#endif
