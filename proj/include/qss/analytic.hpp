#pragma once
// Closed-form probabilities for the interception attacks, used as
// independent oracles against the statevector sweeps, plus the exact
// pair-count combinatorics.

#include <cstdint>
#include <vector>

#include "qss/attack.hpp"
#include "qss/core.hpp"

namespace qss {

// True and guessed per-participant basis choices, dealer-first.
struct PhaseTuple {
  std::vector<Mub> true_labels;
  std::vector<Mub> guessed_labels;
};

PhaseTuple phase_tuple(const InitialState& true_s, const InitialState& guessed_s);

/// Two-participant complete attack, exact inner-product form.
double pm2_closed(double omega, const PhaseTuple& phases, std::uint32_t chunk);

/// Two-participant attack at omega = pi: product of per-qubit overlaps.
double pm2_pi_factorized(const PhaseTuple& phases);

/// Three-participant complete attack, exact inner-product form.
double pm3_closed(double omega, const PhaseTuple& phases, std::uint32_t chunk);

/// Same probability through the expanded polynomial route (independent
/// cross-check of pm3_closed).
double pm3_expanded(double omega, const PhaseTuple& phases, std::uint32_t chunk);

/// Three-participant half-completion attack (finish the current iteration
/// and measure), one closed form per chunk.
double pm_half_closed(double omega, const PhaseTuple& phases, std::uint32_t chunk);

/// Attack success at the exact-success phase and secure split, as a
/// function of the error profile alone: (1/2)^half if no pi error, else 0.
double pm_general_closed(const ErrorProfile& profile);

// Exact fraction of ordered (S, S') pairs.
struct Rational {
  std::uint64_t num = 0;
  std::uint64_t den = 1;
  double value() const;
  bool operator==(const Rational&) const = default;
};

Rational rational_reduced(std::uint64_t num, std::uint64_t den);
std::uint64_t binomial(int n, int k);

/// Fraction of pairs with exactly `half_errors` quarter-turn errors and no
/// half-turn error: C(Q,r) 2^r / 4^Q. With any_pi_error: 1 - (3/4)^Q.
Rational pair_fraction(int qubits, int half_errors, bool any_pi_error);

/// Sum over error profiles of pair_fraction * pm_general_closed, evaluated
/// in exact rational arithmetic; equals 2^-Q.
double expected_ps(int qubits);

}  // namespace qss
