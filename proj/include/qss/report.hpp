#pragma once
// Report tables, deterministic CSV/JSON serialization, sweep output files
// and the demo transcript.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "qss/protocol.hpp"
#include "qss/sweep.hpp"

namespace qss {

// Keyed tabular report with a stable column schema. Numeric cells are
// serialized with 9 significant digits in both formats.
struct ReportTable {
  std::string command;
  std::vector<std::pair<std::string, std::string>> meta;
  std::vector<std::string> columns;
  using Cell = std::variant<std::int64_t, double, std::string>;
  std::vector<std::vector<Cell>> rows;
};

std::string format_sig(double value);  // %.9g

void write_table_csv(const ReportTable& table, std::ostream& out);
void write_table_json(const ReportTable& table, std::ostream& out);

/// Per register size: exact-success phase, its success probability, the
/// probability at omega = pi and the iteration count.
ReportTable grover_phase_table(const std::vector<std::size_t>& dims);

/// Success probability as a function of the reflection phase over [0, 2pi].
ReportTable omega_scan_table(std::size_t dim, int steps);

struct GateReport {
  bool ok = true;
  std::vector<std::string> failures;
};

/// Reference class tables: 2 = two-participant, 4 = three-participant,
/// 5 = arbitrary-Q. Cells are recomputed from simulation plus the exact
/// combinatorics; `gate` collects any mismatch against the reference
/// values (known reference errata are annotated, not gated).
ReportTable class_table(int which, int qubits, int workers, GateReport* gate);

void write_grid_csv(const SweepGrid& grid, std::ostream& out, bool expand);
void write_grid_json(const SweepGrid& grid, std::ostream& out, bool expand);
void write_summary_json(const SweepGrid& grid, const AttackSummary& summary,
                        std::ostream& out);

std::string demo_transcript(std::uint64_t value, int qubits, std::optional<double> omega,
                            std::uint64_t seed);

}  // namespace qss
