// hvc: verification suites, closed-form tables, errata ledger and 1-D
// solvers for the Hausdorff vector calculus library.
//
// Exit status: 0 success, 1 numerical failure, 2 malformed configuration.

#include <algorithm>
#include <deque>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hvc/app/config.hpp"
#include "hvc/app/errata.hpp"
#include "hvc/app/solve.hpp"
#include "hvc/app/table.hpp"
#include "hvc/app/verify.hpp"

namespace {

using namespace hvc;
using namespace hvc::app;

// Raw flag values, applied on top of the config file with the same keys.
struct Flags {
  std::string config;
  std::deque<std::string> storage;
  std::vector<std::pair<std::string, const std::string*>> run;
  std::vector<std::pair<std::string, const std::string*>> solver;

  const std::string* add(CLI::App* cmd, bool solver_key, const char* flag, const char* key,
                         const char* help) {
    std::string& value = storage.emplace_back();
    cmd->add_option(flag, value, help);
    (solver_key ? solver : run).push_back({key, &value});
    return &value;
  }
};

void add_common(CLI::App* cmd, Flags& f) {
  cmd->add_option("--config", f.config, "configuration file ([run] and [solver] sections)");
  f.add(cmd, false, "--mu", "mu", "comma-separated fractal dimensions in (0, 1]");
  f.add(cmd, false, "--convention", "convention", "paper | mapped | both");
  f.add(cmd, false, "--quad", "quad", "<points>x<panels> for surface and volume quadrature");
  f.add(cmd, false, "--seed", "seed", "corpus seed");
  f.add(cmd, false, "--out", "out", "output directory");
  f.add(cmd, false, "--format", "format", "stdout format: csv | json");
}

void emit(const RunConfig& c, const std::string& stem, const Json& doc, const CsvTable& csv) {
  const std::string json_text = doc.dump(2) + "\n";
  const std::string csv_text = csv.str();
  if (!c.out.empty()) {
    std::filesystem::create_directories(c.out);
    write_text((std::filesystem::path(c.out) / (stem + ".json")).string(), json_text);
    write_text((std::filesystem::path(c.out) / (stem + ".csv")).string(), csv_text);
  }
  std::cout << (c.format == "csv" ? csv_text : json_text);
}

int cmd_verify(const RunConfig& c) {
  const auto rows = run_verify(c);
  emit(c, "verify", verify_json(c, rows), verify_csv(rows));
  if (all_asserted_pass(rows)) return 0;
  std::cerr << "asserted identities failed:\n";
  for (const auto& r : rows) {
    if (r.asserted && !r.passed) std::cerr << row_json(r).dump() << "\n";
  }
  return 1;
}

int cmd_table(const RunConfig& c) {
  const auto rows = run_table(c);
  emit(c, "table", table_json(c, rows), table_csv(rows));
  bool ok = true;
  for (const auto& r : rows) ok = ok && (!r.asserted || r.passed);
  if (!ok) std::cerr << "closed-form rows exceeded tolerance\n";
  return ok ? 0 : 1;
}

int cmd_errata(const RunConfig& c) {
  const auto items = run_errata(c);
  emit(c, "errata", errata_json(c, items), errata_csv(items));
  return 0;
}

int cmd_solve(const RunConfig& c) {
  const auto runs = run_solve(c);
  const Json doc = solve_json(c, runs);
  if (!c.out.empty()) {
    std::filesystem::create_directories(c.out);
    for (const auto& r : runs) {
      for (const auto& lv : r.levels) {
        const std::string name = "solve_mu" + format_double(r.mu) + "_n" +
                                 std::to_string(lv.solution.nodes()) + ".csv";
        write_text((std::filesystem::path(c.out) / name).string(), snapshot_csv(lv.solution).str());
      }
    }
    write_text((std::filesystem::path(c.out) / "solve.json").string(), doc.dump(2) + "\n");
  }
  if (c.format == "csv") {
    std::cout << snapshot_csv(runs.back().levels.back().solution).str();
  } else {
    std::cout << doc.dump(2) << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hausdorff vector calculus verification and solver tool"};
  app.require_subcommand(1);
  Flags flags;

  std::vector<CLI::App*> cmds;
  for (const char* name : {"verify", "solve", "table", "errata"}) {
    CLI::App* cmd = app.add_subcommand(name);
    add_common(cmd, flags);
    cmds.push_back(cmd);
  }
  cmds[0]->description("run the identity suites for each mu and convention");
  cmds[1]->description("solve the 1-D diffusion or Burgers equation");
  cmds[2]->description("check the closed-form derivative and integral tables");
  cmds[3]->description("print the errata ledger with numerical witnesses");

  CLI::App* solve = cmds[1];
  auto solver_opt = [&](const char* flag, const char* key, const char* help) {
    return flags.add(solve, true, flag, key, help);
  };
  solver_opt("--equation", "equation", "diffusion | burgers");
  solver_opt("--initial", "initial", "eigenmode | constant | manufactured | bump");
  solver_opt("--boundary", "boundary", "dirichlet | reflective");
  solver_opt("--nodes", "nodes", "grid nodes on the coarsest level");
  const std::string* dt_flag = solver_opt("--dt", "dt", "fixed time step (checked against the stability bound)");
  solver_opt("--t-end", "t_end", "final time");
  solver_opt("--theta", "theta", "diffusivity");
  solver_opt("--domain", "domain", "physical interval a,b");
  solver_opt("--levels", "levels", "number of nested grids for convergence studies");
  solver_opt("--snapshots", "snapshots", "comma-separated snapshot times");
  bool auto_cfl = false;
  solve->add_flag("--auto-cfl", auto_cfl, "choose the largest certified step (default)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  RunConfig cfg;
  const CLI::App* chosen = app.get_subcommands().front();
  cfg.command = chosen->get_name();
  try {
    if (!flags.config.empty()) {
      std::ifstream in(flags.config);
      if (!in) throw ConfigError("cannot read config file " + flags.config);
      std::stringstream ss;
      ss << in.rdbuf();
      parse_config_text(ss.str(), cfg);
      if (cfg.command != chosen->get_name()) {
        throw ConfigError("config command '" + cfg.command + "' does not match subcommand '" +
                          chosen->get_name() + "'");
      }
    }
    for (const auto& [key, value] : flags.run) {
      if (!value->empty()) apply_setting(cfg, "run", key, *value, "--" + key);
    }
    for (const auto& [key, value] : flags.solver) {
      if (!value->empty()) {
        std::string flag = key;
        std::replace(flag.begin(), flag.end(), '_', '-');
        apply_setting(cfg, "solver", key, *value, "--" + flag);
      }
    }
    if (auto_cfl) {
      if (!dt_flag->empty()) {
        throw ConfigError("--dt and --auto-cfl are mutually exclusive");
      }
      cfg.solve.dt.reset();
    }
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (cfg.command == "verify") return cmd_verify(cfg);
    if (cfg.command == "table") return cmd_table(cfg);
    if (cfg.command == "errata") return cmd_errata(cfg);
    return cmd_solve(cfg);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
