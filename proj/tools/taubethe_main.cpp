// Command-line front end: config-driven verification runs plus small
// single-shot queries (Bethe roots, scalar products, tau evaluations).
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "taubethe/bethe/solver.hpp"
#include "taubethe/dkp/tau.hpp"
#include "taubethe/slavnov/slavnov.hpp"
#include "taubethe/verify/runner.hpp"
#include "taubethe/xxz/oracle.hpp"

namespace {

using namespace taubethe;

verify::RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file: " + path);
  nlohmann::json j;
  in >> j;
  verify::RunConfig cfg = verify::RunConfig::from_json(j);
  if (const char* env = std::getenv("TAUBETHE_SEED")) {
    cfg.seed = std::strtoull(env, nullptr, 10);
  }
  return cfg;
}

Complex parse_complex(const std::string& s) {
  std::istringstream in(s);
  double re = 0.0, im = 0.0;
  char comma = 0;
  in >> re;
  if (in >> comma && comma == ',') in >> im;
  return {re, im};
}

std::string complex_str(Complex z) {
  std::ostringstream out;
  out.precision(15);
  out << z.real() << (z.imag() < 0 ? " - " : " + ") << std::abs(z.imag()) << "i";
  return out.str();
}

int cmd_verify(const verify::RunConfig& cfg, bool json_only,
               const std::string& report_path) {
  const verify::Report report = verify::run_verify(cfg);
  const std::string dump = report.to_json().dump(2);
  if (!report_path.empty()) {
    std::ofstream out(report_path);
    out << dump << "\n";
  }
  if (json_only) {
    std::cout << dump << "\n";
  } else {
    for (const auto& r : report.records) {
      std::cout << (r.status == "pass" ? "PASS " : r.status == "fail" ? "FAIL " : "DEGEN")
                << "  " << r.fixture << "  " << r.name << "  residual " << r.residual
                << " (threshold " << r.threshold << ")\n";
    }
    std::cout << "summary: " << report.passed() << "/" << report.total() << " passed, "
              << report.failed() << " failed\n";
  }
  return report.failed() == 0 ? 0 : 1;
}

int cmd_bethe_solve(const verify::RunConfig& cfg, bool json_only) {
  const xxz::ChainSpec chain = verify::build_chain(cfg);
  SampleConfig sc;
  sc.seed = cfg.seed;
  std::vector<bethe::BetheSolution> sols;
  try {
    sols = bethe::solve_bethe(chain, cfg.n_roots, sc, 16);
  } catch (const SolverExhaustedError& e) {
    std::cerr << "no admissible Bethe solution: " << e.what() << "\n";
    return 1;
  }
  if (json_only) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& s : sols) {
      nlohmann::json roots = nlohmann::json::array();
      for (Complex m : s.mus) roots.push_back(verify::complex_to_json(m));
      j.push_back({{"roots", roots},
                   {"residual", s.residual},
                   {"eigen_residual", s.eigen_residual}});
    }
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << "L = " << chain.sites() << ", N = " << cfg.n_roots << ": " << sols.size()
            << " solution(s)\n";
  for (std::size_t i = 0; i < sols.size(); ++i) {
    std::cout << "solution " << i << "  (defect " << sols[i].residual << ", eigencheck "
              << sols[i].eigen_residual << ")\n";
    for (Complex m : sols[i].mus) std::cout << "  mu = " << complex_str(m) << "\n";
  }
  return 0;
}

int cmd_scalar_product(const verify::RunConfig& cfg, const std::vector<std::string>& lam_args,
                       const std::vector<std::string>& mu_args, bool json_only) {
  const xxz::ChainSpec chain = verify::build_chain(cfg);
  std::vector<Complex> lams, mus;
  for (const auto& s : lam_args) lams.push_back(parse_complex(s));
  for (const auto& s : mu_args) mus.push_back(parse_complex(s));
  if (lams.size() != mus.size()) {
    std::cerr << "need equally many --lambda and --mu\n";
    return 2;
  }
  const Complex oracle = xxz::scalar_product_oracle(chain, lams, mus);
  nlohmann::json j;
  j["oracle"] = verify::complex_to_json(oracle);
  const double defect = mus.empty() ? 0.0 : bethe::bethe_defect_norm(chain, mus);
  j["bethe_defect"] = defect;
  if (!mus.empty() && defect <= 1e-8) {
    bethe::BetheSolution sol{mus, defect, 0.0};
    j["slavnov"] = verify::complex_to_json(slavnov::slavnov_det(chain, lams, sol));
  }
  if (json_only) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "oracle  = " << complex_str(oracle) << "\n";
    if (j.contains("slavnov"))
      std::cout << "slavnov = " << complex_str(verify::complex_from_json(j["slavnov"]))
                << "\n";
    else if (!mus.empty())
      std::cout << "(mus are not Bethe roots; normalized defect " << defect
                << " -- Slavnov form skipped)\n";
  }
  return 0;
}

int cmd_tau(const verify::RunConfig& cfg, const std::string& shifts_arg, bool json_only) {
  const xxz::ChainSpec chain = verify::build_chain(cfg);
  SampleConfig sc;
  sc.seed = cfg.seed;
  const auto sols = bethe::solve_bethe(chain, cfg.n_roots, sc, 1);
  const auto data =
      slavnov::ExponentiatedData::from_chain(chain, std::vector<Complex>{}, sols[0].mus);
  const slavnov::CasoratianSpec spec = slavnov::casoratian_spec(data);
  const auto xsets = verify::sample_x_sets(cfg.n_roots, 1, cfg.seed + 7);
  std::vector<symfun::MiwaEntry> entries;
  for (Complex x : xsets[0]) entries.push_back({x, 1});
  // repeated indices in --shifts raise the multiplicity more than once
  if (!shifts_arg.empty()) {
    std::istringstream in(shifts_arg);
    std::string tok;
    while (std::getline(in, tok, ',')) {
      const std::size_t idx = std::stoul(tok);
      if (idx >= entries.size()) {
        std::cerr << "shift index " << idx << " out of range\n";
        return 2;
      }
      entries[idx].multiplicity += 1;
    }
  }
  const dkp::TauFunction tf{spec.c, symfun::MiwaMultiset(entries)};
  const Complex value = dkp::tau(tf);
  nlohmann::json j;
  j["tau"] = verify::complex_to_json(value);
  nlohmann::json jb = nlohmann::json::array();
  for (const auto& e : entries)
    jb.push_back({{"value", verify::complex_to_json(e.value)},
                  {"multiplicity", e.multiplicity}});
  j["base"] = jb;
  j["smallest_singular_value"] = spec.smallest_singular_value;
  if (json_only)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << "tau = " << complex_str(value) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"inhomogeneous XXZ scalar products as Casoratian tau-functions"};
  app.require_subcommand(1);

  std::string config_path;
  bool json_only = false;
  app.add_flag("--json", json_only, "machine-readable output only");

  auto* verify_cmd = app.add_subcommand("verify", "run the configured check suite");
  std::string report_path;
  std::vector<std::string> only;
  verify_cmd->add_option("--config", config_path, "config JSON path")->required();
  verify_cmd->add_option("--only", only, "restrict to these checks");
  verify_cmd->add_option("--report", report_path, "also write the report to this file");

  auto* bethe_cmd = app.add_subcommand("bethe-solve", "print the Bethe root table");
  bethe_cmd->add_option("--config", config_path, "config JSON path")->required();

  auto* sp_cmd = app.add_subcommand("scalar-product", "oracle (and Slavnov) scalar product");
  std::vector<std::string> lam_args, mu_args;
  sp_cmd->add_option("--config", config_path, "config JSON path")->required();
  sp_cmd->add_option("--lambda", lam_args, "free rapidity as re[,im] (repeatable)");
  sp_cmd->add_option("--mu", mu_args, "Bethe rapidity as re[,im] (repeatable)");

  auto* tau_cmd = app.add_subcommand("tau", "evaluate tau with shifted multiplicities");
  std::string shifts_arg;
  tau_cmd->add_option("--config", config_path, "config JSON path")->required();
  tau_cmd->add_option("--shifts", shifts_arg, "comma-separated 0-based base indices");

  CLI11_PARSE(app, argc, argv);

  try {
    verify::RunConfig cfg = load_config(config_path);
    if (verify_cmd->parsed()) {
      if (!only.empty()) {
        cfg.checks = only;
        cfg.validate();
      }
      return cmd_verify(cfg, json_only, report_path);
    }
    if (bethe_cmd->parsed()) return cmd_bethe_solve(cfg, json_only);
    if (sp_cmd->parsed()) return cmd_scalar_product(cfg, lam_args, mu_args, json_only);
    if (tau_cmd->parsed()) return cmd_tau(cfg, shifts_arg, json_only);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
