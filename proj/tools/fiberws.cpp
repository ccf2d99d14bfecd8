// Command-line workbench: analyze single fibers, scan family grids, and run
// the theorem-verification suites, emitting machine-readable reports.

#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "hopf/report.hpp"

namespace {

void add_common(CLI::App* cmd, hopf::RunConfig& cfg, std::string& checks_list,
                std::map<std::string, std::vector<long long>>& params) {
  cmd->add_option("--family", cfg.family, "family name")
      ->check(CLI::IsMember(hopf::family_names()));
  cmd->add_option("--ell", cfg.ell, "order of the root of unity")->check(CLI::PositiveNumber);
  cmd->add_option("--prime", [&cfg](const std::vector<std::string>& vals) {
        try {
          size_t used = 0;
          cfg.prime = std::stoull(vals.at(0), &used);
          return used == vals.at(0).size();
        } catch (const std::exception&) {
          return false;
        }
      },
      "prime modulus override (default: smallest valid prime above dim^2)");
  cmd->add_option("--seed", cfg.seed, "seed for all randomized procedures");
  cmd->add_option("--grid", cfg.grid_samples, "seed-derived samples per continuous parameter");
  cmd->add_option("--format", cfg.format, "report format")
      ->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--out", cfg.out_path, "write the report to this path");
  cmd->add_option("--checks", checks_list,
                  "comma list of enabled checks: ch_check,cocycles,tensor_multiplicities");
  cmd->add_option("--ch-samples", cfg.ch_samples, "random elements per Cayley-Hamilton check");
  for (const char* p : {"s", "u", "v", "x", "y"}) {
    cmd->add_option("--" + std::string(p), params[p],
                    std::string("values for parameter ") + p)
        ->delimiter(',');
  }
}

void apply_checks(const std::string& list, hopf::CheckToggles& t) {
  if (list.empty()) return;
  t = {false, false, false};
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item == "ch_check")
      t.ch_check = true;
    else if (item == "cocycles")
      t.cocycles = true;
    else if (item == "tensor_multiplicities")
      t.tensor_multiplicities = true;
    else if (item == "all")
      t = {true, true, true};
    else if (item == "none")
      t = {false, false, false};
    else
      throw hopf::ConfigError("unknown check toggle '" + item + "'");
  }
}

int run(const hopf::RunConfig& cfg) {
  hopf::RunReport report = hopf::run_command(cfg);
  std::cout << hopf::render_summary(report);
  if (!cfg.out_path.empty()) {
    std::ofstream out(cfg.out_path, std::ios::binary);
    if (!out) throw hopf::ConfigError("cannot open output path " + cfg.out_path);
    out << (cfg.format == "csv" ? hopf::render_csv(report) : hopf::render_json(report));
  }
  return report.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact-arithmetic workbench for fiber algebras of Hopf algebra families"};
  app.require_subcommand(1);
  // config files carry the same keys as the flags, under a [subcommand]
  // section; flags win on conflict
  app.set_config("--config", "", "read options from this file");

  hopf::RunConfig cfg;
  std::string checks_list;
  std::map<std::string, std::vector<long long>> params;

  CLI::App* analyze = app.add_subcommand("analyze-fiber", "full pipeline on a single fiber");
  CLI::App* scan = app.add_subcommand("scan-family", "per-point records plus stratum summary");
  CLI::App* verify =
      app.add_subcommand("verify-theorems", "every invariant suite on the family grid");
  for (CLI::App* cmd : {analyze, scan, verify}) add_common(cmd, cfg, checks_list, params);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 3;
  }

  try {
    cfg.command = app.get_subcommands().front()->get_name();
    apply_checks(checks_list, cfg.checks);
    for (auto& [k, v] : params)
      if (!v.empty()) cfg.param_values[k] = v;
    return run(cfg);
  } catch (const hopf::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 3;
  } catch (const hopf::NonSplitBlockError& e) {
    std::cerr << "computational failure: " << e.what() << "\n";
    return 2;
  } catch (const hopf::RetryExhaustedError& e) {
    std::cerr << "computational failure: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
