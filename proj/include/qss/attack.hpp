#pragma once
// Eavesdropper strategies against the protocol: completing the remaining
// iterations with a guessed initial state, finishing only the current
// iteration, attacking the padlock-free variant, and completing with a
// guessed oracle state.

#include <cstdint>

#include "qss/core.hpp"
#include "qss/protocol.hpp"

namespace qss {

/// Blind-guess baseline 2^{-Q}.
double guess_baseline(int qubits);

// Per-qubit phase-difference classification between a true and a guessed
// initial state: half_errors counts |delta phi| in {pi/2, 3pi/2}, pi_errors
// counts |delta phi| = pi.
struct ErrorProfile {
  int half_errors = 0;
  int pi_errors = 0;
};

ErrorProfile error_profile(const InitialState& true_s, const InitialState& guessed_s);

/// Padlock completion with the guessed initial state: G'^{k2} U'_S |x>,
/// where the oracle keeps the true chunk. Returns P(chunk).
double complete_protocol_attack(const PureState& intercepted, const InitialState& guessed,
                                std::uint32_t chunk, double omega,
                                const GroverSchedule& sched);

/// Finish only the current iteration: P(chunk) of U'_S |x>.
double half_protocol_attack(const PureState& intercepted, const InitialState& guessed,
                            std::uint32_t chunk, double omega);

/// Attack on the padlock-free three-party variant: P(chunk) of U'_S |y>.
double variant2_attack(const PureState& intercepted, const InitialState& guessed,
                       std::uint32_t chunk, double omega);

/// Completion without the padlock: both the claimed state and the oracle
/// state are guesses. Runs G'^{k2} U'_S with the guessed chunk in the
/// oracle and returns P(true_chunk).
double wrong_oracle_attack(const PureState& intercepted, const InitialState& guessed,
                           std::uint32_t guessed_chunk, std::uint32_t true_chunk,
                           double omega, const GroverSchedule& sched);

}  // namespace qss
