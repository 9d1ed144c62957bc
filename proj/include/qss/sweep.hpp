#pragma once
// Exhaustive attack sweeps over (true S, guessed S') pairs, the
// difference-class reduction, and aggregation into p_s and histograms.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qss/attack.hpp"
#include "qss/core.hpp"
#include "qss/protocol.hpp"

namespace qss {

enum class Strategy { Complete, Half, Variant2, WrongOracle };
enum class Reduction { Full, DiffClass };

const char* strategy_name(Strategy s);
const char* reduction_name(Reduction r);

struct ResourceGuardError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SweepConfig {
  int qubits = 2;
  Strategy strategy = Strategy::Complete;
  double omega = kPi;
  std::optional<std::uint32_t> message;  // nullopt = average over all chunks
  std::optional<std::uint32_t> oracle;   // wrong-oracle only; nullopt = average
  Reduction reduction = Reduction::Full;
  std::optional<int> encode_split;       // k1 override (insecure experiments)
  std::uint64_t seed = 1;
  int workers = 0;                       // 0 = hardware concurrency
  std::size_t spot_checks = 0;           // diff-class cross validation samples
  bool force_full = false;               // lifts the seven-participant guard
};

struct SpotCheckReport {
  std::size_t performed = 0;
  double max_abs_diff = 0.0;
};

struct SweepGrid {
  SweepConfig config;
  GroverSchedule schedule;
  bool compact = false;        // true: one value per difference class
  std::size_t states = 0;      // 4^Q
  std::vector<double> values;  // full: states*states row-major (row = true S)
  SpotCheckReport spot_checks;

  /// Cell for (true, guessed) 0-based state indices, expanding classes
  /// when compact.
  double value(std::size_t s, std::size_t sp) const;
};

/// 0-based difference-class id of a state pair (per-qubit phase-difference
/// labels read as a base-4 number, first participant most significant).
std::size_t difference_class(const InitialState& true_s, const InitialState& guessed_s);

/// Runs the configured sweep. FULL evaluates all 16^Q pairs; DIFF_CLASS
/// evaluates the 4^Q classes (identical values, attack success depends only
/// on per-qubit phase differences). Throws ResourceGuardError when a full
/// seven-participant grid is requested without force_full.
SweepGrid sweep(const SweepConfig& config);

struct AttackSummary {
  double p_s = 0.0;
  double p_g = 0.0;
  std::uint64_t pairs = 0;
  // probability rounded to 6 decimals (micro-units) -> pair count,
  // descending by probability.
  std::vector<std::pair<std::int64_t, std::uint64_t>> histogram;
};

AttackSummary aggregate(const SweepGrid& grid);

}  // namespace qss
