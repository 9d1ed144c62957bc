#include "qss/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>

#include "qss/parallel.hpp"

namespace qss {

const char* strategy_name(Strategy s) {
  switch (s) {
    case Strategy::Complete: return "complete";
    case Strategy::Half: return "half";
    case Strategy::Variant2: return "variant2";
    case Strategy::WrongOracle: return "wrong-oracle";
  }
  return "?";
}

const char* reduction_name(Reduction r) {
  return r == Reduction::Full ? "full" : "diff";
}

std::size_t difference_class(const InitialState& true_s, const InitialState& guessed_s) {
  if (true_s.qubits() != guessed_s.qubits()) {
    throw std::invalid_argument("participant count mismatch");
  }
  std::size_t id = 0;
  for (int l = 0; l < true_s.qubits(); ++l) {
    const Mub d = mub_difference(true_s.labels()[static_cast<std::size_t>(l)],
                                 guessed_s.labels()[static_cast<std::size_t>(l)]);
    id = id * 4 + static_cast<std::size_t>(mub_to_int(d));
  }
  return id;
}

double SweepGrid::value(std::size_t s, std::size_t sp) const {
  if (s >= states || sp >= states) throw std::out_of_range("state index out of range");
  if (!compact) return values[s * states + sp];
  const int q = config.qubits;
  return values[difference_class(InitialState::from_index(q, s + 1),
                                 InitialState::from_index(q, sp + 1))];
}

namespace {

struct Resolved {
  GroverSchedule sched;
  Strategy strategy = Strategy::Complete;
  cplx eio{1.0, 0.0};
  cplx w{0.0, 0.0};
  std::vector<std::uint32_t> messages;
  std::vector<std::uint32_t> oracles;  // wrong-oracle only
};

Resolved resolve(const SweepConfig& cfg) {
  if (cfg.qubits < 2 || cfg.qubits > 7) {
    throw std::invalid_argument("participant count must be between 2 and 7");
  }
  if (!(cfg.omega > 0.0) || !(cfg.omega < kTwoPi)) {
    throw std::invalid_argument("phase must lie in (0, 2pi)");
  }
  Resolved r;
  r.sched = iteration_schedule(cfg.qubits);
  if (cfg.encode_split) r.sched = r.sched.with_encode_split(*cfg.encode_split);
  r.strategy = cfg.strategy;
  r.eio = std::polar(1.0, cfg.omega);
  r.w = cplx{1.0, 0.0} - r.eio;
  const std::uint32_t dim = static_cast<std::uint32_t>(r.sched.dim);
  if (cfg.message) {
    if (*cfg.message >= dim) throw std::invalid_argument("chunk exceeds register size");
    r.messages = {*cfg.message};
  } else {
    for (std::uint32_t m = 0; m < dim; ++m) r.messages.push_back(m);
  }
  if (cfg.strategy == Strategy::WrongOracle) {
    if (cfg.oracle) {
      if (*cfg.oracle >= dim) throw std::invalid_argument("oracle state exceeds register size");
      r.oracles = {*cfg.oracle};
    } else {
      for (std::uint32_t m = 0; m < dim; ++m) r.oracles.push_back(m);
    }
  } else if (cfg.oracle) {
    throw std::invalid_argument("oracle state is only meaningful for the wrong-oracle strategy");
  }
  if (cfg.strategy == Strategy::Variant2 && cfg.qubits != 3) {
    throw std::invalid_argument("variant 2 is defined for three participants");
  }
  return r;
}

void encode_for(const Resolved& r, std::vector<cplx>& x, const std::vector<cplx>& s_amps,
                std::uint32_t m) {
  x = s_amps;
  if (r.strategy == Strategy::Variant2) {
    kernel::reflect_basis(x, m, r.eio);
    kernel::reflect(x, s_amps, r.w);
    kernel::reflect_basis(x, m, r.eio);
  } else {
    kernel::encode_in_place(x, s_amps, m, r.eio, r.w, r.sched.encode_iterations);
  }
}

double decode_prob(const Resolved& r, const std::vector<cplx>& x,
                   const std::vector<cplx>& g_amps, std::uint32_t m,
                   std::vector<cplx>& z) {
  switch (r.strategy) {
    case Strategy::Complete:
      z = x;
      kernel::decode_in_place(z, g_amps, m, r.eio, r.w, r.sched.decode_iterations);
      return std::norm(z[m]);
    case Strategy::Half:
    case Strategy::Variant2:
      z = x;
      kernel::reflect(z, g_amps, r.w);
      return std::norm(z[m]);
    case Strategy::WrongOracle: {
      double acc = 0.0;
      for (std::uint32_t mo : r.oracles) {
        z = x;
        kernel::decode_in_place(z, g_amps, mo, r.eio, r.w, r.sched.decode_iterations);
        acc += std::norm(z[m]);
      }
      return acc / static_cast<double>(r.oracles.size());
    }
  }
  return 0.0;
}

double eval_pair(const Resolved& r, const std::vector<cplx>& s_amps,
                 const std::vector<cplx>& g_amps, std::vector<cplx>& x,
                 std::vector<cplx>& z) {
  double acc = 0.0;
  for (std::uint32_t m : r.messages) {
    encode_for(r, x, s_amps, m);
    acc += decode_prob(r, x, g_amps, m, z);
  }
  return acc / static_cast<double>(r.messages.size());
}

std::vector<std::vector<cplx>> all_states(int qubits) {
  const std::size_t n = std::size_t{1} << (2 * qubits);
  std::vector<std::vector<cplx>> states(n);
  for (std::size_t i = 0; i < n; ++i) {
    states[i] = InitialState::from_index(qubits, i + 1).state().take();
  }
  return states;
}

// Neumaier-compensated accumulator for long reductions.
struct Accumulator {
  double sum = 0.0;
  double comp = 0.0;
  void add(double v) {
    const double t = sum + v;
    comp += std::abs(sum) >= std::abs(v) ? (sum - t) + v : (v - t) + sum;
    sum = t;
  }
  double total() const { return sum + comp; }
};

}  // namespace

SweepGrid sweep(const SweepConfig& config) {
  const Resolved r = resolve(config);
  SweepGrid grid;
  grid.config = config;
  grid.schedule = r.sched;
  grid.states = std::size_t{1} << (2 * config.qubits);

  if (config.reduction == Reduction::Full) {
    if (config.qubits >= 7 && !config.force_full) {
      throw ResourceGuardError(
          "full seven-participant sweep needs ~2 GiB and ~7e10 evaluations; "
          "rerun with the force-full override or the diff reduction");
    }
    const std::vector<std::vector<cplx>> states = all_states(config.qubits);
    grid.compact = false;
    grid.values.assign(grid.states * grid.states, 0.0);
    parallel_blocks(grid.states, config.workers, [&](std::size_t begin, std::size_t end) {
      std::vector<cplx> x, z;
      const double norm = 1.0 / static_cast<double>(r.messages.size());
      for (std::size_t row = begin; row < end; ++row) {
        double* cells = grid.values.data() + row * grid.states;
        for (std::uint32_t m : r.messages) {
          encode_for(r, x, states[row], m);
          for (std::size_t col = 0; col < grid.states; ++col) {
            cells[col] += decode_prob(r, x, states[col], m, z) * norm;
          }
        }
      }
    });
    return grid;
  }

  // Difference-class reduction: representative pairs (all-|+>, delta).
  grid.compact = true;
  grid.values.assign(grid.states, 0.0);
  const std::vector<cplx> base = InitialState::from_index(config.qubits, 1).state().take();
  parallel_blocks(grid.states, config.workers, [&](std::size_t begin, std::size_t end) {
    std::vector<cplx> x, z;
    for (std::size_t cls = begin; cls < end; ++cls) {
      const std::vector<cplx> guess =
          InitialState::from_index(config.qubits, cls + 1).state().take();
      grid.values[cls] = eval_pair(r, base, guess, x, z);
    }
  });

  if (config.spot_checks > 0) {
    std::mt19937_64 rng(config.seed);
    std::vector<cplx> x, z;
    SpotCheckReport report;
    for (std::size_t i = 0; i < config.spot_checks; ++i) {
      const std::size_t s = rng() % grid.states;
      const std::size_t sp = rng() % grid.states;
      const InitialState true_s = InitialState::from_index(config.qubits, s + 1);
      const InitialState guess_s = InitialState::from_index(config.qubits, sp + 1);
      const double direct = eval_pair(r, true_s.state().take(), guess_s.state().take(), x, z);
      const double expanded = grid.values[difference_class(true_s, guess_s)];
      report.max_abs_diff = std::max(report.max_abs_diff, std::abs(direct - expanded));
      ++report.performed;
    }
    grid.spot_checks = report;
  }
  return grid;
}

AttackSummary aggregate(const SweepGrid& grid) {
  AttackSummary summary;
  summary.p_g = guess_baseline(grid.config.qubits);
  summary.pairs = static_cast<std::uint64_t>(grid.states) * grid.states;
  const std::uint64_t per_value = grid.compact ? grid.states : 1;

  Accumulator acc;
  std::map<std::int64_t, std::uint64_t> hist;
  for (double v : grid.values) {
    acc.add(v);
    hist[std::llround(v * 1e6)] += per_value;
  }
  summary.p_s = acc.total() / static_cast<double>(grid.values.size());
  summary.histogram.assign(hist.rbegin(), hist.rend());
  return summary;
}

}  // namespace qss
