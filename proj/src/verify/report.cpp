#include "taubethe/verify/report.hpp"

namespace taubethe::verify {

int Report::passed() const {
  int n = 0;
  for (const auto& r : records)
    if (r.status == "pass") ++n;
  return n;
}

int Report::failed() const {
  int n = 0;
  for (const auto& r : records)
    if (r.status == "fail") ++n;
  return n;
}

nlohmann::json Report::to_json() const {
  nlohmann::json j;
  j["version"] = version;
  j["provenance"]["seed"] = seed;
  j["provenance"]["config_digest"] = config_digest;
  j["records"] = nlohmann::json::array();
  for (const auto& r : records) {
    nlohmann::json jr;
    jr["name"] = r.name;
    jr["fixture"] = r.fixture;
    jr["residual"] = r.residual;
    jr["threshold"] = r.threshold;
    jr["status"] = r.status;
    jr["wall_time_ms"] = r.wall_time_ms;
    j["records"].push_back(jr);
  }
  j["summary"]["total"] = total();
  j["summary"]["passed"] = passed();
  j["summary"]["failed"] = failed();
  return j;
}

Report Report::from_json(const nlohmann::json& j) {
  Report rep;
  rep.version = j.at("version").get<std::string>();
  rep.seed = j.at("provenance").at("seed").get<std::uint64_t>();
  rep.config_digest = j.at("provenance").at("config_digest").get<std::string>();
  for (const auto& jr : j.at("records")) {
    CheckRecord r;
    r.name = jr.at("name").get<std::string>();
    r.fixture = jr.at("fixture").get<std::string>();
    r.residual = jr.at("residual").get<double>();
    r.threshold = jr.at("threshold").get<double>();
    r.status = jr.at("status").get<std::string>();
    r.wall_time_ms = jr.at("wall_time_ms").get<double>();
    rep.records.push_back(std::move(r));
  }
  return rep;
}

std::string Report::dump_without_timings() const {
  Report stripped = *this;
  for (auto& r : stripped.records) r.wall_time_ms = 0.0;
  return stripped.to_json().dump(2);
}

}  // namespace taubethe::verify
