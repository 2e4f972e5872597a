// lcgerm: exact lc/lct computations for plane curve germs, theorem checks,
// proof-chain audits, scenarios and fuzz campaigns.
//
// Exit codes: 0 success, 1 a checked property failed, 2 parse error,
// 3 semantic error (invalid germ, missing name, unmet hypothesis).

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "lcgerm/errors.hpp"
#include "lcgerm/reports.hpp"
#include "lcgerm/scenarios.hpp"

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitParse = 2;
constexpr int kExitSemantic = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw lcgerm::InvariantError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

lcgerm::ConfigFile load_config(const std::string& path, int depth_cap) {
  auto cfg = lcgerm::read_config_file(path);
  if (depth_cap > 0) cfg.depth_cap = depth_cap;
  return cfg;
}

int emit(const lcgerm::Report& r, bool json) {
  std::cout << (json ? r.json : r.text);
  return r.ok ? 0 : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Log canonical thresholds and local inequalities for plane curve germs"};
  app.require_subcommand(1);

  bool json = false;
  int depth_cap = 0;
  app.add_flag("--json", json, "Machine-readable output");
  app.add_option("--depth-cap", depth_cap, "Override the blow-up depth cap")->check(CLI::PositiveNumber);

  std::string config_path;
  auto* lct = app.add_subcommand("lct", "lct of the divisor, or the threshold along a family curve");
  lct->add_option("config", config_path, "Configuration file")->required();

  auto* loglc = app.add_subcommand("loglc", "Whether the boundary is log canonical at the origin");
  loglc->add_option("config", config_path, "Configuration file")->required();

  std::vector<std::string> pair;
  auto* imult = app.add_subcommand("imult", "Local intersection multiplicities of named curves");
  imult->add_option("config", config_path, "Configuration file")->required();
  imult->add_option("--pair", pair, "Two curve names (default: every pair)")->expected(2);

  std::string theorem = "all";
  auto* thm = app.add_subcommand("theorem", "Check the local inequalities on a two-curve configuration");
  thm->add_option("config", config_path, "Configuration file")->required();
  thm->add_option("--theorem", theorem, "all, adjunction, main, kosta or kosta-original");

  std::string catalog_path;
  std::uint64_t audit_seed = lcgerm::kDefaultAuditSeed;
  auto* audit = app.add_subcommand("audit", "Certify the catalog of proof-branch inequality systems");
  audit->add_option("--catalog", catalog_path, "Catalog file (default: built-in)");
  audit->add_option("--seed", audit_seed, "Seed for the shuffled elimination orders");

  std::string scenario = "all";
  bool list = false;
  auto* scen = app.add_subcommand("scenario", "Run a named self-checking scenario");
  scen->add_option("--scenario", scenario, "Scenario name or 'all'");
  scen->add_flag("--list", list, "List scenario names");

  lcgerm::GenSpec spec;
  auto* fuzz = app.add_subcommand("fuzz", "Random campaign checking every theorem against the oracle");
  fuzz->add_option("--seed", spec.seed, "Generator seed");
  fuzz->add_option("--count", spec.count, "Number of configurations")->check(CLI::NonNegativeNumber);
  fuzz->add_option("--max-components", spec.max_components, "Components of omega")->check(CLI::PositiveNumber);
  fuzz->add_option("--threads", spec.threads, "Worker threads (0: hardware)");

  std::string report_path;
  auto* verify = app.add_subcommand("verify", "Re-check a --json report");
  verify->add_option("report", report_path, "Report file ('-' for stdin)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitParse;
  }

  try {
    if (*lct) return emit(lcgerm::lct_report(load_config(config_path, depth_cap)), json);
    if (*loglc) return emit(lcgerm::loglc_report(load_config(config_path, depth_cap)), json);
    if (*imult) {
      std::optional<std::pair<std::string, std::string>> p;
      if (!pair.empty()) p = {{pair[0], pair[1]}};
      return emit(lcgerm::imult_report(load_config(config_path, depth_cap), p), json);
    }
    if (*thm) {
      const auto which = lcgerm::parse_theorem_selector(theorem);
      return emit(lcgerm::theorem_report(load_config(config_path, depth_cap), which), json);
    }
    if (*audit) {
      if (catalog_path.empty()) return emit(lcgerm::audit_report(lcgerm::builtin_catalog(), audit_seed), json);
      return emit(lcgerm::audit_report(lcgerm::parse_catalog(read_file(catalog_path)), audit_seed, catalog_path),
                  json);
    }
    if (*scen) {
      if (list) {
        for (const auto& n : lcgerm::scenario_names()) std::cout << n << "\n";
        return 0;
      }
      return emit(lcgerm::scenario_report(scenario), json);
    }
    if (*fuzz) return emit(lcgerm::fuzz_report(spec), json);
    if (*verify) {
      std::string text;
      if (report_path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        text = ss.str();
      } else {
        text = read_file(report_path);
      }
      return emit(lcgerm::verify_report(text), json);
    }
  } catch (const lcgerm::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const lcgerm::HypothesisNotMet& e) {
    std::cerr << "hypothesis not met: " << e.what() << "\n";
    return kExitSemantic;
  } catch (const lcgerm::InvariantError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitSemantic;
  }
  return kExitSemantic;
}
