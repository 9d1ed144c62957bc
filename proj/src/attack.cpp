#include "qss/attack.hpp"

#include <cmath>
#include <stdexcept>

namespace qss {

double guess_baseline(int qubits) {
  if (qubits < 2) throw std::invalid_argument("at least two participants required");
  return std::ldexp(1.0, -qubits);
}

ErrorProfile error_profile(const InitialState& true_s, const InitialState& guessed_s) {
  if (true_s.qubits() != guessed_s.qubits()) {
    throw std::invalid_argument("participant count mismatch");
  }
  ErrorProfile p;
  for (int l = 0; l < true_s.qubits(); ++l) {
    const Mub d = mub_difference(true_s.labels()[static_cast<std::size_t>(l)],
                                 guessed_s.labels()[static_cast<std::size_t>(l)]);
    if (d == Mub::Minus) ++p.pi_errors;
    if (d == Mub::PlusI || d == Mub::MinusI) ++p.half_errors;
  }
  return p;
}

double complete_protocol_attack(const PureState& intercepted, const InitialState& guessed,
                                std::uint32_t chunk, double omega,
                                const GroverSchedule& sched) {
  return outcome_probability(padlock_decode(intercepted, guessed, chunk, omega, sched),
                             chunk);
}

double half_protocol_attack(const PureState& intercepted, const InitialState& guessed,
                            std::uint32_t chunk, double omega) {
  if (chunk >= intercepted.dim()) throw std::invalid_argument("chunk exceeds register size");
  return outcome_probability(apply_reflection(intercepted, {guessed.state(), omega}),
                             chunk);
}

double variant2_attack(const PureState& intercepted, const InitialState& guessed,
                       std::uint32_t chunk, double omega) {
  return outcome_probability(variant2_decode(intercepted, guessed, omega), chunk);
}

double wrong_oracle_attack(const PureState& intercepted, const InitialState& guessed,
                           std::uint32_t guessed_chunk, std::uint32_t true_chunk,
                           double omega, const GroverSchedule& sched) {
  if (true_chunk >= sched.dim) throw std::invalid_argument("chunk exceeds register size");
  return outcome_probability(
      padlock_decode(intercepted, guessed, guessed_chunk, omega, sched), true_chunk);
}

}  // namespace qss
