#ifndef TAUBETHE_VERIFY_CONFIG_HPP
#define TAUBETHE_VERIFY_CONFIG_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "taubethe/core/types.hpp"

namespace taubethe::verify {

struct ChainConfig {
  int sites = 5;
  std::optional<std::vector<Complex>> nu;  // nullopt = "auto"
  Complex gamma{0.4, 0.15};
};

struct SamplesConfig {
  int lambda_sets = 3;
  int x_sets = 5;
  int max_multiplicity = 2;
};

const std::vector<std::string>& known_checks();

struct RunConfig {
  ChainConfig chain;
  int n_roots = 3;
  std::uint64_t seed = 42;
  Tolerance tolerance;
  std::vector<std::string> checks = known_checks();
  SamplesConfig samples;

  void validate() const;

  static RunConfig from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;

  // FNV-1a over the canonical serialization; changes iff a semantic field does.
  std::string digest() const;
};

nlohmann::json complex_to_json(Complex z);
Complex complex_from_json(const nlohmann::json& j);

}  // namespace taubethe::verify

#endif
