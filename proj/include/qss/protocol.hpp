#pragma once
// Message chunking, initial-state construction and numbering, and the
// encode/decode paths of the secret sharing protocol: the padlock variant
// for arbitrary Q and the padlock-free three-party variant.

#include <cstdint>
#include <optional>
#include <vector>

#include "qss/core.hpp"

namespace qss {

// Per-participant basis choice, dealer-first order. States are numbered
// 1..4^Q by reading the labels as a base-4 number, first participant most
// significant, plus one.
class InitialState {
 public:
  explicit InitialState(std::vector<Mub> labels);
  static InitialState from_index(int qubits, std::uint64_t index);  // 1-based

  int qubits() const { return static_cast<int>(labels_.size()); }
  const std::vector<Mub>& labels() const { return labels_; }
  std::uint64_t index() const;

  /// Tensor product of the per-participant MUB qubits (dim 2^Q).
  PureState state() const;
  /// Same amplitudes from the closed product formula; cross-check path.
  std::vector<cplx> amplitudes_direct() const;

  /// Element-wise phase shift by the labels of `delta`.
  InitialState shifted(const InitialState& delta) const;

 private:
  std::vector<Mub> labels_;
};

/// Splits the binary representation of value into Q-bit groups, left-padded
/// with zeros; each group read most significant bit first.
std::vector<std::uint32_t> chunk_message(std::uint64_t value, int qubits);

/// Inverse of chunk_message.
std::uint64_t assemble_chunks(const std::vector<std::uint32_t>& chunks, int qubits);

/// Dealer side: U_M G^{k1-1} |S>, G = U_S U_M (oracle first). A zero
/// encode split (insecure-schedule experiments) leaves |S> untouched.
PureState encode(std::uint32_t chunk, const InitialState& s, double omega,
                 const GroverSchedule& sched);

/// Padlock side: G^{k2} U_S |x>.
PureState padlock_decode(const PureState& x, const InitialState& s, std::uint32_t chunk,
                         double omega, const GroverSchedule& sched);

/// Padlock-free three-party variant: U_M U_S U_M |S>.
PureState variant2_encode(std::uint32_t chunk, const InitialState& s, double omega);

/// Decode for the three-party variant: U_S |y>.
PureState variant2_decode(const PureState& y, const InitialState& s, double omega);

struct HonestRun {
  GroverSchedule schedule;
  std::vector<std::uint32_t> chunks;
  std::vector<InitialState> initial_states;   // one per chunk
  std::vector<double> chunk_probability;      // P(chunk) after decode
  std::vector<std::uint32_t> sampled_chunks;  // measurement samples
  std::uint64_t decoded_value = 0;
};

/// End-to-end honest execution: chunk, sample a fresh initial state per
/// chunk (deterministically split from the seed), encode, decode, report
/// per-chunk probabilities and a sampled decoded value.
HonestRun honest_run(std::uint64_t value, int qubits, std::optional<double> omega,
                     std::uint64_t seed);

namespace kernel {

/// In-place encode on a raw state initialized to |S>; axis = amplitudes of S.
void encode_in_place(std::span<cplx> psi, std::span<const cplx> s_axis,
                     std::size_t chunk, cplx eio, cplx w, int k1);

/// In-place decode G'^{k2} U'_S with the supplied claimed-state axis.
void decode_in_place(std::span<cplx> psi, std::span<const cplx> claimed_axis,
                     std::size_t oracle_chunk, cplx eio, cplx w, int k2);

}  // namespace kernel

}  // namespace qss
