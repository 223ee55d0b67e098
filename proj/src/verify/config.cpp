#include "taubethe/verify/config.hpp"

#include <algorithm>

namespace taubethe::verify {

const std::vector<std::string>& known_checks() {
  static const std::vector<std::string> names = {
      "oracle-vs-slavnov", "schur-expansion", "casoratian-columns", "ratio-constancy",
      "A1", "A2", "bilinear", "hirota-miwa", "laplace", "symfun-identities"};
  return names;
}

nlohmann::json complex_to_json(Complex z) {
  return nlohmann::json::array({z.real(), z.imag()});
}

Complex complex_from_json(const nlohmann::json& j) {
  if (j.is_number()) return Complex(j.get<double>(), 0.0);
  if (!j.is_array() || j.size() != 2)
    throw std::invalid_argument("complex values serialize as [re, im]");
  return Complex(j[0].get<double>(), j[1].get<double>());
}

void RunConfig::validate() const {
  if (chain.sites < 1) throw std::invalid_argument("config: chain.L must be >= 1");
  if (chain.nu && static_cast<int>(chain.nu->size()) != chain.sites)
    throw std::invalid_argument("config: explicit nu list must have L entries");
  if (n_roots < 1 || n_roots > chain.sites)
    throw std::invalid_argument("config: need 1 <= n_roots <= L");
  if (samples.lambda_sets < 1)
    throw std::invalid_argument("config: samples.lambda_sets must be >= 1");
  if (samples.x_sets < 2)
    throw std::invalid_argument("config: samples.x_sets must be >= 2");
  if (samples.max_multiplicity < 1)
    throw std::invalid_argument("config: samples.max_multiplicity must be >= 1");
  tolerance.validate();
  const auto& known = known_checks();
  for (const auto& c : checks)
    if (std::find(known.begin(), known.end(), c) == known.end())
      throw std::invalid_argument("config: unknown check name '" + c + "'");
}

RunConfig RunConfig::from_json(const nlohmann::json& j) {
  RunConfig cfg;
  if (j.contains("chain")) {
    const auto& jc = j.at("chain");
    cfg.chain.sites = jc.at("L").get<int>();
    if (jc.contains("nu") && !(jc.at("nu").is_string() && jc.at("nu") == "auto")) {
      std::vector<Complex> nu;
      for (const auto& e : jc.at("nu")) nu.push_back(complex_from_json(e));
      cfg.chain.nu = std::move(nu);
    }
    if (jc.contains("gamma")) cfg.chain.gamma = complex_from_json(jc.at("gamma"));
  }
  if (j.contains("n_roots")) cfg.n_roots = j.at("n_roots").get<int>();
  if (j.contains("seed")) cfg.seed = j.at("seed").get<std::uint64_t>();
  if (j.contains("tolerance")) {
    cfg.tolerance.rel = j.at("tolerance").value("rel", cfg.tolerance.rel);
    cfg.tolerance.abs_floor = j.at("tolerance").value("abs_floor", cfg.tolerance.abs_floor);
  }
  if (j.contains("checks")) {
    if (j.at("checks").is_string() && j.at("checks") == "all") {
      cfg.checks = known_checks();
    } else {
      cfg.checks.clear();
      for (const auto& c : j.at("checks")) cfg.checks.push_back(c.get<std::string>());
    }
  }
  if (j.contains("samples")) {
    const auto& js = j.at("samples");
    cfg.samples.lambda_sets = js.value("lambda_sets", cfg.samples.lambda_sets);
    cfg.samples.x_sets = js.value("x_sets", cfg.samples.x_sets);
    cfg.samples.max_multiplicity = js.value("max_multiplicity", cfg.samples.max_multiplicity);
  }
  cfg.validate();
  return cfg;
}

nlohmann::json RunConfig::to_json() const {
  nlohmann::json j;
  j["chain"]["L"] = chain.sites;
  if (chain.nu) {
    nlohmann::json arr = nlohmann::json::array();
    for (Complex v : *chain.nu) arr.push_back(complex_to_json(v));
    j["chain"]["nu"] = arr;
  } else {
    j["chain"]["nu"] = "auto";
  }
  j["chain"]["gamma"] = complex_to_json(chain.gamma);
  j["n_roots"] = n_roots;
  j["seed"] = seed;
  j["tolerance"]["rel"] = tolerance.rel;
  j["tolerance"]["abs_floor"] = tolerance.abs_floor;
  j["checks"] = checks;
  j["samples"]["lambda_sets"] = samples.lambda_sets;
  j["samples"]["x_sets"] = samples.x_sets;
  j["samples"]["max_multiplicity"] = samples.max_multiplicity;
  return j;
}

std::string RunConfig::digest() const {
  const std::string canon = to_json().dump();
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : canon) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string(buf);
}

}  // namespace taubethe::verify
