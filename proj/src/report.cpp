#include "qss/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "qss/analytic.hpp"

namespace qss {

std::string format_sig(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.9g", value);
  return buf;
}

namespace {

std::string json_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      default: out += c;
    }
  }
  return out;
}

std::string cell_text(const ReportTable::Cell& cell) {
  if (std::holds_alternative<std::int64_t>(cell)) {
    return std::to_string(std::get<std::int64_t>(cell));
  }
  if (std::holds_alternative<double>(cell)) return format_sig(std::get<double>(cell));
  return std::get<std::string>(cell);
}

std::string cell_json(const ReportTable::Cell& cell) {
  if (std::holds_alternative<std::string>(cell)) {
    return "\"" + json_escape(std::get<std::string>(cell)) + "\"";
  }
  return cell_text(cell);
}

std::string micro_text(std::int64_t micro) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", static_cast<double>(micro) / 1e6);
  return buf;
}

std::string delta_digits(std::size_t cls, int qubits) {
  std::string s(static_cast<std::size_t>(qubits), '0');
  for (int l = qubits - 1; l >= 0; --l) {
    s[static_cast<std::size_t>(l)] = static_cast<char>('0' + (cls & 3));
    cls >>= 2;
  }
  return s;
}

void append_config_meta(const SweepGrid& grid, std::ostream& out) {
  const SweepConfig& cfg = grid.config;
  out << "\"command\":\"sweep\",";
  out << "\"participants\":" << cfg.qubits << ",";
  out << "\"strategy\":\"" << strategy_name(cfg.strategy) << "\",";
  out << "\"omega\":" << format_sig(cfg.omega) << ",";
  out << "\"message\":";
  if (cfg.message) out << *cfg.message; else out << "\"avg\"";
  out << ",";
  if (cfg.strategy == Strategy::WrongOracle) {
    out << "\"oracle\":";
    if (cfg.oracle) out << *cfg.oracle; else out << "\"avg\"";
    out << ",";
  }
  out << "\"reduction\":\"" << reduction_name(cfg.reduction) << "\",";
  out << "\"iterations\":" << grid.schedule.iterations << ",";
  out << "\"encode_iterations\":" << grid.schedule.encode_iterations << ",";
  out << "\"decode_iterations\":" << grid.schedule.decode_iterations << ",";
  out << "\"seed\":" << cfg.seed;
  if (grid.spot_checks.performed > 0) {
    out << ",\"spot_checks\":{\"performed\":" << grid.spot_checks.performed
        << ",\"max_abs_diff\":" << format_sig(grid.spot_checks.max_abs_diff) << "}";
  }
}

}  // namespace

void write_table_csv(const ReportTable& table, std::ostream& out) {
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    out << (c ? "," : "") << table.columns[c];
  }
  out << "\n";
  for (const auto& row : table.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << cell_text(row[c]);
    out << "\n";
  }
}

void write_table_json(const ReportTable& table, std::ostream& out) {
  out << "{\"meta\":{\"command\":\"" << json_escape(table.command) << "\"";
  for (const auto& [key, value] : table.meta) {
    out << ",\"" << json_escape(key) << "\":\"" << json_escape(value) << "\"";
  }
  out << "},\"data\":{\"columns\":[";
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    out << (c ? "," : "") << "\"" << json_escape(table.columns[c]) << "\"";
  }
  out << "],\"rows\":[";
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    out << (r ? "," : "") << "[";
    for (std::size_t c = 0; c < table.rows[r].size(); ++c) {
      out << (c ? "," : "") << cell_json(table.rows[r][c]);
    }
    out << "]";
  }
  out << "]}}\n";
}

ReportTable grover_phase_table(const std::vector<std::size_t>& dims) {
  ReportTable table;
  table.command = "grover-table";
  table.columns = {"qubits", "register_size", "omega_star", "p_omega_star", "p_pi",
                   "iterations"};
  for (std::size_t dim : dims) {
    if (dim < 4 || (dim & (dim - 1)) != 0) {
      throw std::invalid_argument("register size must be a power of two, at least 4");
    }
    int qubits = 0;
    while ((std::size_t{1} << qubits) < dim) ++qubits;
    const GroverSchedule sched = iteration_schedule(qubits);
    table.rows.push_back({static_cast<std::int64_t>(qubits),
                          static_cast<std::int64_t>(dim), sched.omega_star,
                          success_probability(dim, sched.omega_star, sched.iterations),
                          success_probability(dim, kPi, sched.iterations),
                          static_cast<std::int64_t>(sched.iterations)});
  }
  return table;
}

ReportTable omega_scan_table(std::size_t dim, int steps) {
  if (steps < 2) throw std::invalid_argument("at least two scan points required");
  int qubits = 0;
  while ((std::size_t{1} << qubits) < dim) ++qubits;
  const GroverSchedule sched = iteration_schedule(qubits);
  ReportTable table;
  table.command = "omega-scan";
  table.meta = {{"register_size", std::to_string(dim)},
                {"iterations", std::to_string(sched.iterations)}};
  table.columns = {"omega", "p"};
  for (int i = 0; i < steps; ++i) {
    const double omega = kTwoPi * static_cast<double>(i) / static_cast<double>(steps - 1);
    table.rows.push_back({omega, success_probability(dim, omega, sched.iterations)});
  }
  return table;
}

namespace {

struct Bin {
  double p = 0.0;
  std::uint64_t pairs = 0;
};

std::vector<Bin> bins_of(const AttackSummary& summary) {
  std::vector<Bin> bins;
  bins.reserve(summary.histogram.size());
  for (const auto& [micro, count] : summary.histogram) {
    bins.push_back({static_cast<double>(micro) / 1e6, count});
  }
  return bins;
}

void gate_fail(GateReport* gate, const std::string& message) {
  if (gate == nullptr) return;
  gate->ok = false;
  gate->failures.push_back(message);
}

// Matches an observed bin to a reference probability within tol.
const Bin* find_bin(const std::vector<Bin>& bins, double p, double tol) {
  for (const Bin& b : bins) {
    if (std::fabs(b.p - p) <= tol) return &b;
  }
  return nullptr;
}

ReportTable two_party_table(int workers, GateReport* gate) {
  SweepConfig cfg;
  cfg.qubits = 2;
  cfg.omega = kPi;
  cfg.workers = workers;
  const AttackSummary summary = aggregate(sweep(cfg));
  const std::vector<Bin> bins = bins_of(summary);

  ReportTable table;
  table.command = "tables";
  table.meta = {{"table", "2"}, {"participants", "2"}, {"omega", "pi"}};
  table.columns = {"half_errors", "pi_errors", "p", "pairs", "fraction", "note"};
  struct Row { int r; bool pi; double p; };
  const Row rows[] = {{0, false, 1.0}, {1, false, 0.5}, {2, false, 0.25}, {0, true, 0.0}};
  for (const Row& row : rows) {
    const Rational frac = pair_fraction(2, row.r, row.pi);
    const std::uint64_t pairs = frac.num * (256 / frac.den);
    const Bin* bin = find_bin(bins, row.p, 1e-9);
    if (bin == nullptr || bin->pairs != pairs) {
      gate_fail(gate, "two-party class p=" + format_sig(row.p) + " expected " +
                          std::to_string(pairs) + " pairs");
    }
    table.rows.push_back({static_cast<std::int64_t>(row.pi ? 0 : row.r),
                          std::string(row.pi ? ">=1" : "0"), row.p,
                          static_cast<std::int64_t>(pairs),
                          std::to_string(frac.num) + "/" + std::to_string(frac.den),
                          std::string()});
  }
  if (std::fabs(summary.p_s - 0.25) > 1e-12) {
    gate_fail(gate, "two-party aggregate p_s deviates: " + format_sig(summary.p_s));
  }
  return table;
}

ReportTable three_party_table(int workers, GateReport* gate) {
  const GroverSchedule sched = iteration_schedule(3);

  SweepConfig opt;
  opt.qubits = 3;
  opt.omega = sched.omega_star;
  opt.workers = workers;
  const AttackSummary at_opt = aggregate(sweep(opt));

  SweepConfig pi_cfg;
  pi_cfg.qubits = 3;
  pi_cfg.omega = kPi;
  pi_cfg.message = 1;  // fixed chunk: the pi-phase values split per message
  pi_cfg.workers = workers;
  const AttackSummary at_pi = aggregate(sweep(pi_cfg));

  ReportTable table;
  table.command = "tables";
  table.meta = {{"table", "4"},
                {"participants", "3"},
                {"omega_star", format_sig(sched.omega_star)}};
  table.columns = {"omega", "p", "pairs", "note"};

  const double opt_ref[][2] = {{1.0, 64}, {0.5, 384}, {0.25, 768}, {0.125, 512}, {0.0, 2368}};
  const std::vector<Bin> opt_bins = bins_of(at_opt);
  for (const auto& ref : opt_ref) {
    const Bin* bin = find_bin(opt_bins, ref[0], 1e-6);
    if (bin == nullptr || bin->pairs != static_cast<std::uint64_t>(ref[1])) {
      gate_fail(gate, "three-party optimal-phase class p=" + format_sig(ref[0]) +
                          " expected " + format_sig(ref[1]) + " pairs");
    }
    table.rows.push_back({std::string("optimal"), bin ? bin->p : ref[0],
                          static_cast<std::int64_t>(bin ? bin->pairs : 0), std::string()});
  }
  if (std::fabs(at_opt.p_s - 0.125) > 1e-9) {
    gate_fail(gate, "three-party optimal-phase p_s deviates: " + format_sig(at_opt.p_s));
  }

  // Reference rows at omega = pi; counts for the two mixed-sign subclasses
  // are merged or missing in the reference, annotated below.
  struct PiRef { double p; std::uint64_t pairs; const char* note; };
  const PiRef pi_ref[] = {
      {0.9453, 64, ""},
      {0.4766, 384, ""},
      {0.2891, 384, ""},
      {0.1953, 512, "reference splits this count 512 across two condition rows"},
      {0.1016, 384, "count not printed in the reference"},
      {0.00781, 2368, ""},
  };
  const std::vector<Bin> pi_bins = bins_of(at_pi);
  for (const PiRef& ref : pi_ref) {
    const Bin* bin = find_bin(pi_bins, ref.p, 1e-4);
    if (bin == nullptr || bin->pairs != ref.pairs) {
      gate_fail(gate, "three-party pi-phase class p=" + format_sig(ref.p) + " expected " +
                          std::to_string(ref.pairs) + " pairs");
    }
    table.rows.push_back({std::string("pi"), bin ? bin->p : ref.p,
                          static_cast<std::int64_t>(bin ? bin->pairs : 0),
                          std::string(ref.note)});
  }
  if (std::fabs(at_pi.p_s - 0.125) > 1e-9) {
    gate_fail(gate, "three-party pi-phase p_s deviates: " + format_sig(at_pi.p_s));
  }
  return table;
}

ReportTable general_table(int qubits, int workers, GateReport* gate) {
  const GroverSchedule sched = iteration_schedule(qubits);
  SweepConfig cfg;
  cfg.qubits = qubits;
  cfg.omega = sched.omega_star;
  cfg.reduction = Reduction::DiffClass;
  cfg.workers = workers;
  const SweepGrid grid = sweep(cfg);

  // Simulated class values grouped by error profile.
  std::vector<double> max_dev(static_cast<std::size_t>(qubits) + 1, 0.0);
  double pi_dev = 0.0;
  for (std::size_t cls = 0; cls < grid.values.size(); ++cls) {
    const InitialState delta = InitialState::from_index(qubits, cls + 1);
    const ErrorProfile prof =
        error_profile(InitialState::from_index(qubits, 1), delta);
    const double dev = std::fabs(grid.values[cls] - pm_general_closed(prof));
    if (prof.pi_errors > 0) {
      pi_dev = std::max(pi_dev, dev);
    } else {
      max_dev[static_cast<std::size_t>(prof.half_errors)] =
          std::max(max_dev[static_cast<std::size_t>(prof.half_errors)], dev);
    }
  }

  ReportTable table;
  table.command = "tables";
  table.meta = {{"table", "5"},
                {"participants", std::to_string(qubits)},
                {"omega_star", format_sig(sched.omega_star)}};
  table.columns = {"half_errors", "pi_errors", "p", "fraction", "fraction_value",
                   "pairs", "sim_max_dev", "note"};
  const std::uint64_t total_pairs = std::uint64_t{1} << (4 * qubits);
  for (int r = 0; r <= qubits; ++r) {
    const Rational frac = pair_fraction(qubits, r, false);
    const double p = std::ldexp(1.0, -r);
    if (max_dev[static_cast<std::size_t>(r)] > 1e-6) {
      gate_fail(gate, "class with " + std::to_string(r) +
                          " quarter-turn errors deviates from the closed form by " +
                          format_sig(max_dev[static_cast<std::size_t>(r)]));
    }
    table.rows.push_back(
        {static_cast<std::int64_t>(r), std::string("0"), p,
         std::to_string(frac.num) + "/" + std::to_string(frac.den), frac.value(),
         static_cast<std::int64_t>(frac.num * (total_pairs / frac.den)),
         max_dev[static_cast<std::size_t>(r)],
         std::string(r >= 1 ? "reference count expression holds only when Q = 2r; "
                              "exact combinatorics shown"
                            : "")});
  }
  const Rational pi_frac = pair_fraction(qubits, 0, true);
  if (pi_dev > 1e-6) {
    gate_fail(gate, "half-turn-error classes deviate from zero by " + format_sig(pi_dev));
  }
  table.rows.push_back({static_cast<std::int64_t>(0), std::string(">=1"), 0.0,
                        std::to_string(pi_frac.num) + "/" + std::to_string(pi_frac.den),
                        pi_frac.value(),
                        static_cast<std::int64_t>(pi_frac.num * (total_pairs / pi_frac.den)),
                        pi_dev, std::string()});

  const double identity = expected_ps(qubits);
  if (identity != std::ldexp(1.0, -qubits)) {
    gate_fail(gate, "rational identity for the aggregate failed: " + format_sig(identity));
  }
  return table;
}

}  // namespace

ReportTable class_table(int which, int qubits, int workers, GateReport* gate) {
  switch (which) {
    case 2: return two_party_table(workers, gate);
    case 4: return three_party_table(workers, gate);
    case 5: return general_table(qubits, workers, gate);
    default:
      throw std::invalid_argument("table id must be 2, 4 or 5");
  }
}

void write_grid_csv(const SweepGrid& grid, std::ostream& out, bool expand) {
  if (!grid.compact || expand) {
    out << "s";
    for (std::size_t c = 0; c < grid.states; ++c) out << "," << (c + 1);
    out << "\n";
    // Precompute class ids when expanding a compact grid.
    std::vector<std::size_t> class_of;
    if (grid.compact) {
      class_of.resize(grid.states * grid.states);
      for (std::size_t s = 0; s < grid.states; ++s) {
        const InitialState row_state = InitialState::from_index(grid.config.qubits, s + 1);
        for (std::size_t sp = 0; sp < grid.states; ++sp) {
          class_of[s * grid.states + sp] = difference_class(
              row_state, InitialState::from_index(grid.config.qubits, sp + 1));
        }
      }
    }
    for (std::size_t s = 0; s < grid.states; ++s) {
      out << (s + 1);
      for (std::size_t sp = 0; sp < grid.states; ++sp) {
        const double v = grid.compact ? grid.values[class_of[s * grid.states + sp]]
                                      : grid.values[s * grid.states + sp];
        out << "," << format_sig(v);
      }
      out << "\n";
    }
    return;
  }
  out << "class,delta,p,pairs\n";
  for (std::size_t cls = 0; cls < grid.values.size(); ++cls) {
    out << (cls + 1) << "," << delta_digits(cls, grid.config.qubits) << ","
        << format_sig(grid.values[cls]) << "," << grid.states << "\n";
  }
}

void write_grid_json(const SweepGrid& grid, std::ostream& out, bool expand) {
  out << "{\"meta\":{";
  append_config_meta(grid, out);
  out << "},\"data\":{";
  if (!grid.compact || expand) {
    out << "\"format\":\"matrix\",\"states\":" << grid.states << ",\"rows\":[";
    for (std::size_t s = 0; s < grid.states; ++s) {
      out << (s ? "," : "") << "[";
      for (std::size_t sp = 0; sp < grid.states; ++sp) {
        out << (sp ? "," : "") << format_sig(grid.value(s, sp));
      }
      out << "]";
    }
    out << "]";
  } else {
    out << "\"format\":\"classes\",\"states\":" << grid.states << ",\"classes\":[";
    for (std::size_t cls = 0; cls < grid.values.size(); ++cls) {
      out << (cls ? "," : "") << "{\"class\":" << (cls + 1) << ",\"delta\":\""
          << delta_digits(cls, grid.config.qubits) << "\",\"p\":"
          << format_sig(grid.values[cls]) << ",\"pairs\":" << grid.states << "}";
    }
    out << "]";
  }
  out << "}}\n";
}

void write_summary_json(const SweepGrid& grid, const AttackSummary& summary,
                        std::ostream& out) {
  out << "{\"meta\":{";
  append_config_meta(grid, out);
  out << "},\"data\":{\"p_s\":" << format_sig(summary.p_s)
      << ",\"p_g\":" << format_sig(summary.p_g) << ",\"pairs\":" << summary.pairs
      << ",\"histogram\":[";
  for (std::size_t i = 0; i < summary.histogram.size(); ++i) {
    out << (i ? "," : "") << "{\"p\":" << micro_text(summary.histogram[i].first)
        << ",\"pairs\":" << summary.histogram[i].second << "}";
  }
  out << "]}}\n";
}

std::string demo_transcript(std::uint64_t value, int qubits, std::optional<double> omega,
                            std::uint64_t seed) {
  const HonestRun run = honest_run(value, qubits, omega, seed);
  std::ostringstream out;
  out << "secret value: " << value << "\n";
  out << "participants: " << qubits << ", register size " << run.schedule.dim
      << ", iterations " << run.schedule.iterations << " (encode "
      << run.schedule.encode_iterations << ", decode " << run.schedule.decode_iterations
      << ")\n";
  out << "phase: " << format_sig(omega.value_or(run.schedule.omega_star))
      << (omega ? "" : " (exact-success)") << "\n";
  for (std::size_t c = 0; c < run.chunks.size(); ++c) {
    out << "chunk " << (c + 1) << "/" << run.chunks.size() << ": value " << run.chunks[c]
        << "\n";
    out << "  initial state:";
    for (Mub l : run.initial_states[c].labels()) out << " |" << mub_name(l) << ">";
    out << "  (state number " << run.initial_states[c].index() << ")\n";
    const PureState encoded =
        encode(run.chunks[c], run.initial_states[c],
               omega.value_or(run.schedule.omega_star), run.schedule);
    out << "  encoded amplitudes:";
    for (std::size_t j = 0; j < encoded.dim(); ++j) {
      char buf[64];
      std::snprintf(buf, sizeof buf, " %.4f%+.4fi", encoded[j].real(), encoded[j].imag());
      out << buf;
    }
    out << "\n";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.9f", run.chunk_probability[c]);
    out << "  decode probability: " << buf << "\n";
    out << "  measured chunk: " << run.sampled_chunks[c] << "\n";
  }
  out << "decoded value: " << run.decoded_value
      << (run.decoded_value == value ? "  [matches]" : "  [differs]") << "\n";
  return out.str();
}

}  // namespace qss
