#pragma once
// Statevector primitives: MUB qubit construction, tensor products,
// generalized Householder reflections as rank-one updates, Grover
// iterations and the exact-success phase/iteration solver.

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace qss {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

// Qubit basis labels, numbered by the state-numbering rule used in every
// grid and report file: 0 -> |+>, 1 -> |->, 2 -> |+i>, 3 -> |-i>.
// Note the numbering is not monotone in the relative phase.
enum class Mub : int { Plus = 0, Minus = 1, PlusI = 2, MinusI = 3 };

inline constexpr int kMubCount = 4;

Mub mub_from_int(int value);
int mub_to_int(Mub label);

/// Relative phase of |1> for the label: 0, pi, pi/2 or 3pi/2.
double mub_phase(Mub label);

/// exp(i * mub_phase(label)) as an exact unit phasor (1, -1, i or -i).
cplx mub_phasor(Mub label);

/// Label whose phase is phase(a) + phase(b) mod 2pi.
Mub mub_shift(Mub a, Mub b);

/// Label whose phase is phase(to) - phase(from) mod 2pi.
Mub mub_difference(Mub from, Mub to);

const char* mub_name(Mub label);  // "+", "-", "+i", "-i"

// A normalized complex amplitude vector. The constructor validates
// finiteness and normalization within 1e-9 and removes any drift.
class PureState {
 public:
  explicit PureState(std::vector<cplx> amplitudes);

  static PureState basis(std::size_t dim, std::size_t index);
  static PureState uniform(std::size_t dim);
  // Caller guarantees the amplitudes are already normalized.
  static PureState unchecked(std::vector<cplx> amplitudes);

  std::size_t dim() const { return amps_.size(); }
  const cplx& operator[](std::size_t i) const { return amps_[i]; }
  std::span<const cplx> amplitudes() const { return amps_; }
  std::vector<cplx> take() && { return std::move(amps_); }

 private:
  PureState() = default;
  std::vector<cplx> amps_;
};

/// (|0> + e^{i phi}|1>)/sqrt(2) with phi given by the label.
PureState mub_qubit(Mub label);

/// Kronecker product, first factor most significant.
PureState tensor(std::span<const PureState> factors);
PureState tensor(std::initializer_list<Mub> labels);

/// <a|b>. Throws std::invalid_argument on dimension mismatch.
cplx inner(const PureState& a, const PureState& b);

/// |amplitudes[index]|^2. Throws std::out_of_range on a bad index.
double outcome_probability(const PureState& state, std::size_t index);

// Generalized Householder reflection U = I - (1 - e^{i omega}) |axis><axis|.
// omega = pi reproduces the standard reflection I - 2|axis><axis|.
struct Reflection {
  PureState axis;
  double omega = kPi;
};

/// Applies the reflection as a rank-one update in O(dim) work.
PureState apply_reflection(const PureState& state, const Reflection& r);

/// One Grover iteration G = U_init U_oracle: the oracle reflection acts
/// first, then the reflection about the initial state.
PureState grover_iteration(const PureState& state, const PureState& oracle_axis,
                           const PureState& init_axis, double omega);

namespace kernel {

// In-place building blocks shared with the sweep engine. Callers keep the
// buffers normalized; reflections are exactly unitary so drift stays at
// floating-point level.
extern thread_local std::uint64_t reflection_count;

double norm_sq(std::span<const cplx> psi);

/// psi -= (1 - e^{i omega}) <axis|psi> axis, with w = 1 - e^{i omega}.
void reflect(std::span<cplx> psi, std::span<const cplx> axis, cplx w);
void reflect(std::span<cplx> psi, std::span<const cplx> axis, double omega);

/// Reflection about a basis state: psi[index] *= e^{i omega}.
void reflect_basis(std::span<cplx> psi, std::size_t index, cplx eio);

}  // namespace kernel

// Iteration plan for a register of dim = 2^qubits: total Grover count k,
// the encode/decode split (k1, k2) and the phase omega_star at which k
// iterations reach the solution with certainty.
struct GroverSchedule {
  int qubits = 0;
  std::size_t dim = 0;
  int iterations = 0;         // k
  int encode_iterations = 0;  // k1 = 1 for the secure variant
  int decode_iterations = 0;  // k2 = k - k1
  double omega_star = kPi;

  /// Copy with k1 forced (insecure-schedule experiments); k2 = k - k1.
  GroverSchedule with_encode_split(int k1) const;
};

/// Throws std::invalid_argument for qubits < 2.
GroverSchedule iteration_schedule(int qubits);

/// Probability that k Grover iterations at phase omega recover a marked
/// state, starting from a MUB product state. The value depends only on
/// (dim, omega, k), not on which product state or solution index is used.
double success_probability(std::size_t dim, double omega, int iterations);

}  // namespace qss
