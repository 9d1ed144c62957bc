#include "qss/analytic.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace qss {

namespace {

void check_tuple(const PhaseTuple& phases, int qubits, std::uint32_t chunk) {
  if (static_cast<int>(phases.true_labels.size()) != qubits ||
      static_cast<int>(phases.guessed_labels.size()) != qubits) {
    throw std::invalid_argument("phase tuple size mismatch");
  }
  if (chunk >= (std::uint32_t{1} << qubits)) {
    throw std::invalid_argument("chunk exceeds register size");
  }
}

// exp(i * sum of phases over the participants whose bit is set in `mask`),
// exact (products of unit phasors 1, -1, i, -i).
cplx bit_phasor(const std::vector<Mub>& labels, std::uint32_t mask) {
  cplx p{1.0, 0.0};
  const int q = static_cast<int>(labels.size());
  for (int l = 0; l < q; ++l) {
    if (mask >> (q - 1 - l) & 1) p *= mub_phasor(labels[static_cast<std::size_t>(l)]);
  }
  return p;
}

// <S'|S> as a product of per-qubit overlaps (1 + e^{i(phi - phi')})/2.
cplx overlap(const PhaseTuple& phases) {
  cplx c{1.0, 0.0};
  for (std::size_t l = 0; l < phases.true_labels.size(); ++l) {
    c *= 0.5 * (cplx{1.0, 0.0} +
                mub_phasor(phases.true_labels[l]) * std::conj(mub_phasor(phases.guessed_labels[l])));
  }
  return c;
}

}  // namespace

PhaseTuple phase_tuple(const InitialState& true_s, const InitialState& guessed_s) {
  if (true_s.qubits() != guessed_s.qubits()) {
    throw std::invalid_argument("participant count mismatch");
  }
  return {true_s.labels(), guessed_s.labels()};
}

double pm2_closed(double omega, const PhaseTuple& phases, std::uint32_t chunk) {
  check_tuple(phases, 2, chunk);
  const cplx E = std::polar(1.0, omega);
  const cplx w = cplx{1.0, 0.0} - E;
  const cplx ph = bit_phasor(phases.true_labels, chunk);
  const cplx ph_guess = bit_phasor(phases.guessed_labels, chunk);
  const cplx one_plus = cplx{1.0, 0.0} + E;
  return std::norm(-0.5 * w * ph_guess * overlap(phases) +
                   ph * one_plus * one_plus / 8.0);
}

double pm2_pi_factorized(const PhaseTuple& phases) {
  if (phases.true_labels.size() != 2 || phases.guessed_labels.size() != 2) {
    throw std::invalid_argument("phase tuple size mismatch");
  }
  double p = 1.0;
  for (std::size_t l = 0; l < 2; ++l) {
    p *= std::norm(0.5 * (cplx{1.0, 0.0} +
                          mub_phasor(phases.true_labels[l]) *
                              std::conj(mub_phasor(phases.guessed_labels[l]))));
  }
  return p;
}

double pm3_closed(double omega, const PhaseTuple& phases, std::uint32_t chunk) {
  check_tuple(phases, 3, chunk);
  const cplx E = std::polar(1.0, omega);
  const cplx E2 = E * E;
  const cplx ph = bit_phasor(phases.true_labels, chunk);
  const cplx ph_guess = bit_phasor(phases.guessed_labels, chunk);
  const cplx a_coeff = -(cplx{1.0, 0.0} - E) * (cplx{1.0, 0.0} + 14.0 * E + E2) /
                       (16.0 * std::sqrt(2.0));
  const cplx b_coeff = (cplx{1.0, 0.0} + 20.0 * E + 22.0 * E2 + 20.0 * E2 * E + E2 * E2) /
                       (128.0 * std::sqrt(2.0));
  return std::norm(a_coeff * ph_guess * std::conj(ph) * overlap(phases) + b_coeff);
}

double pm3_expanded(double omega, const PhaseTuple& phases, std::uint32_t chunk) {
  check_tuple(phases, 3, chunk);
  const cplx E = std::polar(1.0, omega);
  const cplx E2 = E * E;
  const double s2 = std::sqrt(2.0);
  const cplx v = s2 * (cplx{1.0, 0.0} + 20.0 * E + 22.0 * E2 + 20.0 * E2 * E + E2 * E2);
  const cplx w = -s2 * (cplx{1.0, 0.0} + 13.0 * E - 13.0 * E2 - E2 * E);
  // exp(i U[M]): guessed phases on the zero bits, true phases on the ones.
  const cplx u = bit_phasor(phases.true_labels, chunk) *
                 bit_phasor(phases.guessed_labels, ~chunk & 7u);
  cplx prod{1.0, 0.0};
  for (std::size_t l = 0; l < 3; ++l) {
    prod *= mub_phasor(phases.true_labels[l]) + mub_phasor(phases.guessed_labels[l]);
  }
  return std::norm(v * u + w * prod) / 65536.0;
}

double pm_half_closed(double omega, const PhaseTuple& phases, std::uint32_t chunk) {
  check_tuple(phases, 3, chunk);
  const cplx E = std::polar(1.0, omega);
  const cplx E2 = E * E;
  const cplx one{1.0, 0.0};
  const cplx t1 = mub_phasor(phases.true_labels[0]);
  const cplx t2 = mub_phasor(phases.true_labels[1]);
  const cplx t3 = mub_phasor(phases.true_labels[2]);
  const cplx g1 = mub_phasor(phases.guessed_labels[0]);
  const cplx g2 = mub_phasor(phases.guessed_labels[1]);
  const cplx g3 = mub_phasor(phases.guessed_labels[2]);

  cplx amp;
  switch (chunk) {
    case 0: {
      const cplx d1 = t1 * std::conj(g1), d2 = t2 * std::conj(g2), d3 = t3 * std::conj(g3);
      const cplx sum = (one + d1) * (one + d2) * (one + d3) - one;
      amp = 7.0 * E + E2 + (E - one) * sum;
      break;
    }
    case 1: {
      const cplx f = std::conj(g1 * g2) * (t1 * t2 + t2 * g1 + t1 * g2);
      amp = f * (t3 + g3) * (one - E) - t3 * (E2 + 7.0 * E) + g3 * (one - E);
      break;
    }
    case 2: {
      const cplx f = std::conj(g1 * g3) * (t1 * t3 + t3 * g1 + t1 * g3);
      amp = f * (t2 + g2) * (one - E) - t2 * (E2 + 7.0 * E) + g2 * (one - E);
      break;
    }
    case 3: {
      const cplx sum = t1 * t2 * t3 * std::conj(g1) + t3 * g2 +
                       t1 * t3 * std::conj(g1) * g2 + t2 * g3 +
                       t1 * t2 * std::conj(g1) * g3 + g2 * g3 +
                       t1 * std::conj(g1) * g2 * g3;
      amp = sum * (E - one) + t2 * t3 * (E2 + 7.0 * E);
      break;
    }
    case 4: {
      const cplx f = std::conj(g2 * g3) * (t2 * t3 + t3 * g2 + t2 * g3);
      amp = f * (t1 + g1) * (one - E) - t1 * (E2 + 7.0 * E) + g1 * (one - E);
      break;
    }
    case 5: {
      const cplx sum = t1 * t2 * t3 + t2 * t3 * g1 + t3 * g1 * g2 + t1 * t2 * g3 +
                       t2 * g1 * g3 + t1 * g2 * g3 + g1 * g2 * g3;
      amp = sum * std::conj(g2) * (one - E) - t1 * t3 * (E2 + 7.0 * E);
      break;
    }
    case 6: {
      const cplx sum = t1 * t2 * t3 + t2 * t3 * g1 + t1 * t3 * g2 + t3 * g1 * g2 +
                       t2 * g1 * g3 + t1 * g2 * g3 + g1 * g2 * g3;
      amp = sum * std::conj(g3) * (one - E) - t1 * t2 * (E2 + 7.0 * E);
      break;
    }
    case 7: {
      const cplx sum = t2 * t3 * g1 + t1 * t3 * g2 + t3 * g1 * g2 + t1 * t2 * g3 +
                       t2 * g1 * g3 + t1 * g2 * g3 + g1 * g2 * g3;
      amp = sum * (E - one) + t1 * t2 * t3 * (E2 + 7.0 * E);
      break;
    }
    default:
      throw std::invalid_argument("chunk exceeds register size");
  }
  return std::norm(amp) / 512.0;
}

double pm_general_closed(const ErrorProfile& profile) {
  if (profile.pi_errors > 0) return 0.0;
  return std::ldexp(1.0, -profile.half_errors);
}

double Rational::value() const { return static_cast<double>(num) / static_cast<double>(den); }

Rational rational_reduced(std::uint64_t num, std::uint64_t den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  if (num == 0) return {0, 1};
  const std::uint64_t g = std::gcd(num, den);
  return {num / g, den / g};
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  }
  return r;
}

Rational pair_fraction(int qubits, int half_errors, bool any_pi_error) {
  if (qubits < 2) throw std::invalid_argument("at least two participants required");
  const std::uint64_t den = std::uint64_t{1} << (2 * qubits);  // 4^Q
  if (any_pi_error) {
    std::uint64_t three_q = 1;
    for (int i = 0; i < qubits; ++i) three_q *= 3;
    return rational_reduced(den - three_q, den);
  }
  if (half_errors < 0 || half_errors > qubits) {
    throw std::invalid_argument("error count out of range");
  }
  return rational_reduced(binomial(qubits, half_errors) << half_errors, den);
}

double expected_ps(int qubits) {
  // sum_r pair_fraction(r) * 2^-r, exactly: common denominator 8^Q.
  const std::uint64_t den = std::uint64_t{1} << (3 * qubits);
  std::uint64_t num = 0;
  for (int r = 0; r <= qubits; ++r) {
    const Rational f = pair_fraction(qubits, r, false);
    // f.num/f.den * 2^-r, brought onto den
    num += f.num * (den / f.den >> r);
  }
  const Rational total = rational_reduced(num, den);
  return total.value();
}

}  // namespace qss
