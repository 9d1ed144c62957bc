// Command-line front end: schedule tables, phase scans, attack sweeps,
// reference class tables and an end-to-end protocol demo.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "qss/analytic.hpp"
#include "qss/report.hpp"
#include "qss/sweep.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitGate = 2;
constexpr int kExitResourceGuard = 3;

double resolve_omega(const std::string& mode, const qss::GroverSchedule& sched) {
  if (mode == "opt" || mode == "optimal") return sched.omega_star;
  if (mode == "pi") return qss::kPi;
  std::size_t used = 0;
  const double value = std::stod(mode, &used);
  if (used != mode.size()) throw CLI::ValidationError("--omega", "expected opt, pi or radians");
  if (!(value > 0.0) || !(value < qss::kTwoPi)) {
    throw CLI::ValidationError("--omega", "radians must lie strictly inside (0, 2pi)");
  }
  return value;
}

std::optional<std::uint32_t> resolve_count(const std::string& mode, const char* flag) {
  if (mode == "avg") return std::nullopt;
  std::size_t used = 0;
  const unsigned long value = std::stoul(mode, &used);
  if (used != mode.size()) throw CLI::ValidationError(flag, "expected avg or an integer");
  return static_cast<std::uint32_t>(value);
}

int write_report(const qss::ReportTable& table, const std::string& out_path,
                 const std::string& format) {
  std::ostream* out = &std::cout;
  std::ofstream file;
  if (!out_path.empty()) {
    file.open(out_path, std::ios::binary);
    if (!file) {
      std::cerr << "error: cannot write " << out_path << "\n";
      return kExitUsage;
    }
    out = &file;
  }
  if (format == "json") {
    qss::write_table_json(table, *out);
  } else {
    qss::write_table_csv(table, *out);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Statevector simulator and interception-attack analyzer for a "
               "Grover-search secret sharing protocol"};
  app.require_subcommand(1);

  std::string out_path;
  std::string format = "csv";
  int workers = 0;
  std::uint64_t seed = 1;

  auto add_common = [&](CLI::App* cmd, bool with_format = true) {
    cmd->add_option("--out", out_path, "output path (default: stdout)");
    if (with_format) {
      cmd->add_option("--format", format, "output format")
          ->check(CLI::IsMember({"csv", "json"}));
    }
    cmd->add_option("--workers", workers, "worker threads (0 = hardware)");
    cmd->add_option("--seed", seed, "random seed");
  };

  // grover-table
  auto* cmd_table = app.add_subcommand(
      "grover-table", "exact-success phases and probabilities per register size");
  std::vector<std::size_t> dims{4, 8, 16, 32, 64};
  cmd_table->add_option("--dims", dims, "register sizes (powers of two)");
  add_common(cmd_table);

  // omega-scan
  auto* cmd_scan =
      app.add_subcommand("omega-scan", "success probability as a function of the phase");
  std::size_t scan_dim = 8;
  int scan_steps = 629;
  cmd_scan->add_option("--dim,-d", scan_dim, "register size (power of two)");
  cmd_scan->add_option("--steps", scan_steps, "number of scan points")
      ->check(CLI::Range(2, 10'000'000));
  add_common(cmd_scan);

  // sweep
  auto* cmd_sweep = app.add_subcommand(
      "sweep", "exhaustive attack sweep over true and guessed initial states");
  int sweep_q = 2;
  std::string omega_mode = "opt";
  std::string strategy_str = "complete";
  std::string message_mode = "avg";
  std::string oracle_mode;
  std::string reduction_str;
  int k1_override = -1;
  bool allow_insecure = false;
  bool force_full = false;
  bool expand_grid = false;
  std::size_t spot_checks = 0;
  cmd_sweep->add_option("--participants,-q", sweep_q, "participant count (2..7)")
      ->check(CLI::Range(2, 7));
  cmd_sweep->add_option("--omega", omega_mode, "opt, pi or radians");
  cmd_sweep->add_option("--strategy", strategy_str, "attack strategy")
      ->check(CLI::IsMember({"complete", "half", "variant2", "wrong-oracle"}));
  cmd_sweep->add_option("--message", message_mode, "avg or a fixed chunk value");
  cmd_sweep->add_option("--oracle", oracle_mode,
                        "avg or a fixed oracle state (wrong-oracle only)");
  cmd_sweep->add_option("--reduction", reduction_str,
                        "full or diff (default: full up to 4 participants, then diff)")
      ->check(CLI::IsMember({"full", "diff"}));
  cmd_sweep->add_option("--k1", k1_override,
                        "encode-side iteration override (requires --allow-insecure)");
  cmd_sweep->add_flag("--allow-insecure", allow_insecure,
                      "acknowledge an insecure-schedule experiment");
  cmd_sweep->add_flag("--force-full", force_full,
                      "lift the seven-participant full-grid resource guard");
  cmd_sweep->add_flag("--expand-grid", expand_grid,
                      "write the full matrix even for a diff-class sweep");
  cmd_sweep->add_option("--spot-checks", spot_checks,
                        "random full-evaluation checks of a diff-class sweep");
  add_common(cmd_sweep);

  // tables
  auto* cmd_tables =
      app.add_subcommand("tables", "reference class tables with a verification gate");
  int which = 2;
  int tables_q = 3;
  cmd_tables->add_option("--which", which, "table id: 2, 4 or 5")
      ->check(CLI::IsMember({2, 4, 5}));
  cmd_tables->add_option("--participants,-q", tables_q,
                         "participant count (table 5 only)")
      ->check(CLI::Range(2, 7));
  add_common(cmd_tables);

  // demo
  auto* cmd_demo = app.add_subcommand("demo", "end-to-end honest protocol transcript");
  std::uint64_t demo_value = 23;
  int demo_q = 2;
  std::string demo_omega = "opt";
  cmd_demo->add_option("--value", demo_value, "secret value to share");
  cmd_demo->add_option("--participants,-q", demo_q, "participant count (2..7)")
      ->check(CLI::Range(2, 7));
  cmd_demo->add_option("--omega", demo_omega, "opt, pi or radians");
  add_common(cmd_demo, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (cmd_table->parsed()) {
      return write_report(qss::grover_phase_table(dims), out_path, format);
    }

    if (cmd_scan->parsed()) {
      return write_report(qss::omega_scan_table(scan_dim, scan_steps), out_path, format);
    }

    if (cmd_sweep->parsed()) {
      qss::SweepConfig cfg;
      cfg.qubits = sweep_q;
      const qss::GroverSchedule sched = qss::iteration_schedule(sweep_q);
      cfg.omega = resolve_omega(omega_mode, sched);
      if (strategy_str == "half") cfg.strategy = qss::Strategy::Half;
      if (strategy_str == "variant2") cfg.strategy = qss::Strategy::Variant2;
      if (strategy_str == "wrong-oracle") cfg.strategy = qss::Strategy::WrongOracle;
      cfg.message = resolve_count(message_mode, "--message");
      if (!oracle_mode.empty()) cfg.oracle = resolve_count(oracle_mode, "--oracle");
      if (reduction_str.empty()) reduction_str = sweep_q <= 4 ? "full" : "diff";
      cfg.reduction =
          reduction_str == "full" ? qss::Reduction::Full : qss::Reduction::DiffClass;
      if (k1_override >= 0) {
        if (!allow_insecure) {
          std::cerr << "error: --k1 changes the secure schedule; add --allow-insecure\n";
          return kExitUsage;
        }
        cfg.encode_split = k1_override;
      }
      cfg.seed = seed;
      cfg.workers = workers;
      cfg.spot_checks = spot_checks;
      cfg.force_full = force_full;
      if (expand_grid && sweep_q >= 7 && !force_full) {
        throw qss::ResourceGuardError(
            "expanding a seven-participant grid writes ~270M cells; add --force-full");
      }

      const qss::SweepGrid grid = qss::sweep(cfg);
      const qss::AttackSummary summary = qss::aggregate(grid);

      const std::string prefix = out_path.empty() ? "qss_sweep" : out_path;
      const std::string grid_path = prefix + ".grid." + format;
      const std::string summary_path = prefix + ".summary.json";
      std::ofstream grid_file(grid_path, std::ios::binary);
      std::ofstream summary_file(summary_path, std::ios::binary);
      if (!grid_file || !summary_file) {
        std::cerr << "error: cannot write " << (grid_file ? summary_path : grid_path)
                  << "\n";
        return kExitUsage;
      }
      if (format == "json") {
        qss::write_grid_json(grid, grid_file, expand_grid);
      } else {
        qss::write_grid_csv(grid, grid_file, expand_grid);
      }
      qss::write_summary_json(grid, summary, summary_file);
      std::printf("p_s = %s (p_g = %s), %llu pairs -> %s, %s\n",
                  qss::format_sig(summary.p_s).c_str(),
                  qss::format_sig(summary.p_g).c_str(),
                  static_cast<unsigned long long>(summary.pairs), grid_path.c_str(),
                  summary_path.c_str());
      return kExitOk;
    }

    if (cmd_tables->parsed()) {
      qss::GateReport gate;
      const qss::ReportTable table = qss::class_table(which, tables_q, workers, &gate);
      const int rc = write_report(table, out_path, format);
      if (rc != kExitOk) return rc;
      if (!gate.ok) {
        for (const std::string& f : gate.failures) std::cerr << "gate: " << f << "\n";
        return kExitGate;
      }
      return kExitOk;
    }

    if (cmd_demo->parsed()) {
      std::optional<double> omega;
      if (demo_omega != "opt" && demo_omega != "optimal") {
        omega = resolve_omega(demo_omega, qss::iteration_schedule(demo_q));
      }
      const std::string transcript = qss::demo_transcript(demo_value, demo_q, omega, seed);
      if (!out_path.empty()) {
        std::ofstream file(out_path, std::ios::binary);
        if (!file) {
          std::cerr << "error: cannot write " << out_path << "\n";
          return kExitUsage;
        }
        file << transcript;
      } else {
        std::cout << transcript;
      }
      return kExitOk;
    }
  } catch (const qss::ResourceGuardError& e) {
    std::cerr << "resource guard: " << e.what() << "\n";
    return kExitResourceGuard;
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
