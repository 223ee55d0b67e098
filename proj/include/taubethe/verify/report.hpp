#ifndef TAUBETHE_VERIFY_REPORT_HPP
#define TAUBETHE_VERIFY_REPORT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace taubethe::verify {

struct CheckRecord {
  std::string name;
  std::string fixture;
  double residual = 0.0;
  double threshold = 0.0;
  std::string status;  // pass | fail | degenerate
  double wall_time_ms = 0.0;

  bool operator==(const CheckRecord& o) const {
    return name == o.name && fixture == o.fixture && residual == o.residual &&
           threshold == o.threshold && status == o.status && wall_time_ms == o.wall_time_ms;
  }
};

struct Report {
  std::string version = "v1";
  std::uint64_t seed = 0;
  std::string config_digest;
  std::vector<CheckRecord> records;

  int total() const { return static_cast<int>(records.size()); }
  int passed() const;
  int failed() const;

  nlohmann::json to_json() const;
  static Report from_json(const nlohmann::json& j);

  // Serialization with wall_time fields zeroed, for determinism comparisons.
  std::string dump_without_timings() const;

  bool operator==(const Report& o) const {
    return version == o.version && seed == o.seed && config_digest == o.config_digest &&
           records == o.records;
  }
};

}  // namespace taubethe::verify

#endif
