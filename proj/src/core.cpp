#include "qss/core.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qss {

namespace {

bool all_finite(std::span<const cplx> amps) {
  for (const cplx& a : amps) {
    if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) return false;
  }
  return true;
}

}  // namespace

Mub mub_from_int(int value) {
  if (value < 0 || value >= kMubCount) {
    throw std::invalid_argument("qubit label out of range");
  }
  return static_cast<Mub>(value);
}

int mub_to_int(Mub label) { return static_cast<int>(label); }

double mub_phase(Mub label) {
  switch (label) {
    case Mub::Plus: return 0.0;
    case Mub::Minus: return kPi;
    case Mub::PlusI: return 0.5 * kPi;
    case Mub::MinusI: return 1.5 * kPi;
  }
  throw std::invalid_argument("qubit label out of range");
}

cplx mub_phasor(Mub label) {
  switch (label) {
    case Mub::Plus: return {1.0, 0.0};
    case Mub::Minus: return {-1.0, 0.0};
    case Mub::PlusI: return {0.0, 1.0};
    case Mub::MinusI: return {0.0, -1.0};
  }
  throw std::invalid_argument("qubit label out of range");
}

namespace {

// Label as a quarter-turn count: phase = quarter * pi/2.
int mub_quarter(Mub label) {
  switch (label) {
    case Mub::Plus: return 0;
    case Mub::Minus: return 2;
    case Mub::PlusI: return 1;
    case Mub::MinusI: return 3;
  }
  return 0;
}

Mub mub_from_quarter(int quarter) {
  switch (((quarter % 4) + 4) % 4) {
    case 0: return Mub::Plus;
    case 1: return Mub::PlusI;
    case 2: return Mub::Minus;
    default: return Mub::MinusI;
  }
}

}  // namespace

Mub mub_shift(Mub a, Mub b) { return mub_from_quarter(mub_quarter(a) + mub_quarter(b)); }

Mub mub_difference(Mub from, Mub to) {
  return mub_from_quarter(mub_quarter(to) - mub_quarter(from));
}

const char* mub_name(Mub label) {
  switch (label) {
    case Mub::Plus: return "+";
    case Mub::Minus: return "-";
    case Mub::PlusI: return "+i";
    case Mub::MinusI: return "-i";
  }
  return "?";
}

PureState::PureState(std::vector<cplx> amplitudes) : amps_(std::move(amplitudes)) {
  if (amps_.empty()) throw std::invalid_argument("empty state vector");
  if (!all_finite(amps_)) throw std::invalid_argument("non-finite amplitude");
  const double n2 = kernel::norm_sq(amps_);
  if (std::abs(n2 - 1.0) > 1e-9) {
    throw std::invalid_argument("state vector is not normalized");
  }
  if (std::abs(n2 - 1.0) > 1e-12) {
    const double inv = 1.0 / std::sqrt(n2);
    for (cplx& a : amps_) a *= inv;
  }
}

PureState PureState::basis(std::size_t dim, std::size_t index) {
  if (index >= dim) throw std::out_of_range("basis index out of range");
  PureState s;
  s.amps_.assign(dim, cplx{0.0, 0.0});
  s.amps_[index] = 1.0;
  return s;
}

PureState PureState::uniform(std::size_t dim) {
  if (dim == 0) throw std::invalid_argument("empty state vector");
  PureState s;
  s.amps_.assign(dim, cplx{1.0 / std::sqrt(static_cast<double>(dim)), 0.0});
  return s;
}

PureState PureState::unchecked(std::vector<cplx> amplitudes) {
  PureState s;
  s.amps_ = std::move(amplitudes);
  return s;
}

PureState mub_qubit(Mub label) {
  const double r = 1.0 / std::sqrt(2.0);
  return PureState::unchecked({cplx{r, 0.0}, mub_phasor(label) * r});
}

PureState tensor(std::span<const PureState> factors) {
  if (factors.empty()) throw std::invalid_argument("tensor of no factors");
  std::vector<cplx> out{cplx{1.0, 0.0}};
  for (const PureState& f : factors) {
    std::vector<cplx> next(out.size() * f.dim());
    for (std::size_t i = 0; i < out.size(); ++i) {
      for (std::size_t j = 0; j < f.dim(); ++j) {
        next[i * f.dim() + j] = out[i] * f[j];
      }
    }
    out = std::move(next);
  }
  return PureState::unchecked(std::move(out));
}

PureState tensor(std::initializer_list<Mub> labels) {
  std::vector<PureState> qubits;
  qubits.reserve(labels.size());
  for (Mub l : labels) qubits.push_back(mub_qubit(l));
  return tensor(std::span<const PureState>(qubits));
}

cplx inner(const PureState& a, const PureState& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("dimension mismatch in inner product");
  cplx acc{0.0, 0.0};
  for (std::size_t i = 0; i < a.dim(); ++i) acc += std::conj(a[i]) * b[i];
  return acc;
}

double outcome_probability(const PureState& state, std::size_t index) {
  if (index >= state.dim()) throw std::out_of_range("measurement index out of range");
  return std::norm(state[index]);
}

PureState apply_reflection(const PureState& state, const Reflection& r) {
  if (state.dim() != r.axis.dim()) {
    throw std::invalid_argument("dimension mismatch in reflection");
  }
  std::vector<cplx> psi(state.amplitudes().begin(), state.amplitudes().end());
  kernel::reflect(psi, r.axis.amplitudes(), r.omega);
  const double n2 = kernel::norm_sq(psi);
  if (std::abs(n2 - 1.0) > 1e-12) {
    const double inv = 1.0 / std::sqrt(n2);
    for (cplx& a : psi) a *= inv;
  }
  return PureState::unchecked(std::move(psi));
}

PureState grover_iteration(const PureState& state, const PureState& oracle_axis,
                           const PureState& init_axis, double omega) {
  return apply_reflection(apply_reflection(state, {oracle_axis, omega}),
                          {init_axis, omega});
}

namespace kernel {

thread_local std::uint64_t reflection_count = 0;

double norm_sq(std::span<const cplx> psi) {
  double acc = 0.0;
  for (const cplx& a : psi) acc += std::norm(a);
  return acc;
}

void reflect(std::span<cplx> psi, std::span<const cplx> axis, cplx w) {
  if (psi.size() != axis.size()) {
    throw std::invalid_argument("dimension mismatch in reflection");
  }
  cplx overlap{0.0, 0.0};
  for (std::size_t i = 0; i < psi.size(); ++i) overlap += std::conj(axis[i]) * psi[i];
  const cplx scale = w * overlap;
  for (std::size_t i = 0; i < psi.size(); ++i) psi[i] -= scale * axis[i];
  ++reflection_count;
}

void reflect(std::span<cplx> psi, std::span<const cplx> axis, double omega) {
  reflect(psi, axis, cplx{1.0, 0.0} - std::polar(1.0, omega));
}

void reflect_basis(std::span<cplx> psi, std::size_t index, cplx eio) {
  psi[index] *= eio;
  ++reflection_count;
}

}  // namespace kernel

GroverSchedule GroverSchedule::with_encode_split(int k1) const {
  if (k1 < 0 || k1 > iterations) throw std::invalid_argument("encode split out of range");
  GroverSchedule s = *this;
  s.encode_iterations = k1;
  s.decode_iterations = iterations - k1;
  return s;
}

double success_probability(std::size_t dim, double omega, int iterations) {
  std::vector<cplx> psi = PureState::uniform(dim).take();
  std::vector<cplx> init = psi;
  const cplx eio = std::polar(1.0, omega);
  const cplx w = cplx{1.0, 0.0} - eio;
  for (int r = 0; r < iterations; ++r) {
    kernel::reflect_basis(psi, 0, eio);
    kernel::reflect(psi, init, w);
  }
  return std::norm(psi[0]);
}

namespace {

// Scalar maximization of the success probability over omega in (0, pi]:
// 1e-3 coarse scan followed by golden-section refinement to 1e-10.
double best_phase(std::size_t dim, int iterations) {
  const double step = 1e-3;
  double best_omega = kPi;
  double best_p = success_probability(dim, kPi, iterations);
  for (double omega = step; omega < kPi; omega += step) {
    const double p = success_probability(dim, omega, iterations);
    if (p > best_p) {
      best_p = p;
      best_omega = omega;
    }
  }
  double lo = std::max(step / 2, best_omega - step);
  double hi = std::min(kPi, best_omega + step);
  const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = hi - gr * (hi - lo);
  double d = lo + gr * (hi - lo);
  double fc = success_probability(dim, c, iterations);
  double fd = success_probability(dim, d, iterations);
  while (hi - lo > 1e-10) {
    if (fc > fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - gr * (hi - lo);
      fc = success_probability(dim, c, iterations);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + gr * (hi - lo);
      fd = success_probability(dim, d, iterations);
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

GroverSchedule iteration_schedule(int qubits) {
  if (qubits < 2) throw std::invalid_argument("at least two participants required");
  GroverSchedule s;
  s.qubits = qubits;
  s.dim = std::size_t{1} << qubits;
  const double theta = std::asin(1.0 / std::sqrt(static_cast<double>(s.dim)));
  const double k_exact = (kPi / 2.0 - theta) / (2.0 * theta);
  const double rounded = std::round(k_exact);
  if (std::abs(k_exact - rounded) < 1e-9) {
    // Integer rotation count: the standard reflection already succeeds
    // with certainty, no phase adjustment is needed.
    s.iterations = static_cast<int>(rounded);
    s.omega_star = kPi;
  } else {
    s.iterations = static_cast<int>(std::floor(k_exact)) + 1;
    s.omega_star = best_phase(s.dim, s.iterations);
  }
  // A single oracle kick is the only dealer-side sequence that keeps the
  // marked-state overlap of the transmitted register at 1/sqrt(d); any full
  // iteration before transmission amplifies the secret and leaks it.
  s.encode_iterations = 1;
  s.decode_iterations = s.iterations - 1;
  return s;
}

}  // namespace qss
