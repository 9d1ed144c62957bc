#include "qss/protocol.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace qss {

InitialState::InitialState(std::vector<Mub> labels) : labels_(std::move(labels)) {
  if (labels_.size() < 1) throw std::invalid_argument("initial state needs at least one qubit");
}

InitialState InitialState::from_index(int qubits, std::uint64_t index) {
  if (qubits < 1) throw std::invalid_argument("initial state needs at least one qubit");
  const std::uint64_t count = std::uint64_t{1} << (2 * qubits);
  if (index < 1 || index > count) throw std::invalid_argument("state number out of range");
  std::uint64_t digits = index - 1;
  std::vector<Mub> labels(static_cast<std::size_t>(qubits));
  for (int l = qubits - 1; l >= 0; --l) {
    labels[static_cast<std::size_t>(l)] = mub_from_int(static_cast<int>(digits & 3));
    digits >>= 2;
  }
  return InitialState(std::move(labels));
}

std::uint64_t InitialState::index() const {
  std::uint64_t digits = 0;
  for (Mub l : labels_) digits = digits * 4 + static_cast<std::uint64_t>(mub_to_int(l));
  return digits + 1;
}

PureState InitialState::state() const {
  std::vector<PureState> qubits;
  qubits.reserve(labels_.size());
  for (Mub l : labels_) qubits.push_back(mub_qubit(l));
  return tensor(std::span<const PureState>(qubits));
}

std::vector<cplx> InitialState::amplitudes_direct() const {
  const int q = qubits();
  const std::size_t dim = std::size_t{1} << q;
  const double scale = 1.0 / std::sqrt(static_cast<double>(dim));
  std::vector<cplx> amps(dim);
  for (std::size_t j = 0; j < dim; ++j) {
    cplx phase{1.0, 0.0};
    for (int l = 0; l < q; ++l) {
      if (j >> (q - 1 - l) & 1) phase *= mub_phasor(labels_[static_cast<std::size_t>(l)]);
    }
    amps[j] = phase * scale;
  }
  return amps;
}

InitialState InitialState::shifted(const InitialState& delta) const {
  if (delta.qubits() != qubits()) throw std::invalid_argument("shift size mismatch");
  std::vector<Mub> labels(labels_.size());
  for (std::size_t l = 0; l < labels_.size(); ++l) {
    labels[l] = mub_shift(labels_[l], delta.labels_[l]);
  }
  return InitialState(std::move(labels));
}

std::vector<std::uint32_t> chunk_message(std::uint64_t value, int qubits) {
  if (qubits < 2) throw std::invalid_argument("at least two participants required");
  int bits = 1;
  while (value >> bits) ++bits;
  const int groups = (bits + qubits - 1) / qubits;
  std::vector<std::uint32_t> chunks(static_cast<std::size_t>(groups));
  const std::uint32_t mask = (std::uint32_t{1} << qubits) - 1;
  for (int g = groups - 1; g >= 0; --g) {
    chunks[static_cast<std::size_t>(g)] = static_cast<std::uint32_t>(value & mask);
    value >>= qubits;
  }
  return chunks;
}

std::uint64_t assemble_chunks(const std::vector<std::uint32_t>& chunks, int qubits) {
  std::uint64_t value = 0;
  for (std::uint32_t c : chunks) value = (value << qubits) | c;
  return value;
}

namespace kernel {

void encode_in_place(std::span<cplx> psi, std::span<const cplx> s_axis,
                     std::size_t chunk, cplx eio, cplx w, int k1) {
  if (k1 <= 0) return;  // dealer applies nothing
  for (int i = 0; i + 1 < k1; ++i) {
    reflect_basis(psi, chunk, eio);
    reflect(psi, s_axis, w);
  }
  reflect_basis(psi, chunk, eio);
}

void decode_in_place(std::span<cplx> psi, std::span<const cplx> claimed_axis,
                     std::size_t oracle_chunk, cplx eio, cplx w, int k2) {
  reflect(psi, claimed_axis, w);
  for (int i = 0; i < k2; ++i) {
    reflect_basis(psi, oracle_chunk, eio);
    reflect(psi, claimed_axis, w);
  }
}

}  // namespace kernel

namespace {

void check_chunk(std::uint32_t chunk, std::size_t dim) {
  if (chunk >= dim) throw std::invalid_argument("chunk exceeds register size");
}

}  // namespace

PureState encode(std::uint32_t chunk, const InitialState& s, double omega,
                 const GroverSchedule& sched) {
  if (s.qubits() != sched.qubits) throw std::invalid_argument("schedule/state size mismatch");
  check_chunk(chunk, sched.dim);
  std::vector<cplx> psi = s.state().take();
  const std::vector<cplx> axis = psi;
  const cplx eio = std::polar(1.0, omega);
  kernel::encode_in_place(psi, axis, chunk, eio, cplx{1.0, 0.0} - eio,
                          sched.encode_iterations);
  return PureState::unchecked(std::move(psi));
}

PureState padlock_decode(const PureState& x, const InitialState& s, std::uint32_t chunk,
                         double omega, const GroverSchedule& sched) {
  if (x.dim() != sched.dim) throw std::invalid_argument("dimension mismatch in decode");
  if (s.qubits() != sched.qubits) throw std::invalid_argument("schedule/state size mismatch");
  check_chunk(chunk, sched.dim);
  std::vector<cplx> psi(x.amplitudes().begin(), x.amplitudes().end());
  const std::vector<cplx> axis = s.state().take();
  const cplx eio = std::polar(1.0, omega);
  kernel::decode_in_place(psi, axis, chunk, eio, cplx{1.0, 0.0} - eio,
                          sched.decode_iterations);
  return PureState::unchecked(std::move(psi));
}

PureState variant2_encode(std::uint32_t chunk, const InitialState& s, double omega) {
  if (s.qubits() != 3) throw std::invalid_argument("variant 2 is defined for three participants");
  check_chunk(chunk, 8);
  std::vector<cplx> psi = s.state().take();
  const std::vector<cplx> axis = psi;
  const cplx eio = std::polar(1.0, omega);
  const cplx w = cplx{1.0, 0.0} - eio;
  kernel::reflect_basis(psi, chunk, eio);
  kernel::reflect(psi, axis, w);
  kernel::reflect_basis(psi, chunk, eio);
  return PureState::unchecked(std::move(psi));
}

PureState variant2_decode(const PureState& y, const InitialState& s, double omega) {
  if (y.dim() != 8) throw std::invalid_argument("dimension mismatch in decode");
  if (s.qubits() != 3) throw std::invalid_argument("variant 2 is defined for three participants");
  return apply_reflection(y, {s.state(), omega});
}

HonestRun honest_run(std::uint64_t value, int qubits, std::optional<double> omega,
                     std::uint64_t seed) {
  HonestRun run;
  run.schedule = iteration_schedule(qubits);
  const double w = omega.value_or(run.schedule.omega_star);
  run.chunks = chunk_message(value, qubits);
  for (std::size_t c = 0; c < run.chunks.size(); ++c) {
    // Deterministic per-chunk stream so parallel and serial runs agree.
    std::mt19937_64 rng(seed + c);
    std::vector<Mub> labels(static_cast<std::size_t>(qubits));
    for (Mub& l : labels) l = mub_from_int(static_cast<int>(rng() & 3));
    InitialState s(std::move(labels));
    const PureState decoded =
        padlock_decode(encode(run.chunks[c], s, w, run.schedule), s, run.chunks[c], w,
                       run.schedule);
    run.chunk_probability.push_back(outcome_probability(decoded, run.chunks[c]));

    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    double acc = 0.0;
    std::uint32_t sample = static_cast<std::uint32_t>(decoded.dim() - 1);
    for (std::size_t j = 0; j < decoded.dim(); ++j) {
      acc += std::norm(decoded[j]);
      if (u < acc) {
        sample = static_cast<std::uint32_t>(j);
        break;
      }
    }
    run.sampled_chunks.push_back(sample);
    run.initial_states.push_back(std::move(s));
  }
  run.decoded_value = assemble_chunks(run.sampled_chunks, qubits);
  return run;
}

}  // namespace qss
