#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <optional>
#include <vector>

#include "swapqkd/bell.hpp"
#include "swapqkd/random.hpp"

namespace swapqkd {

/// Dense complex-amplitude state of up to 8 qubits. This is the
/// brute-force route: slow enough to be obviously correct, fast enough at
/// 256 amplitudes to check everything exhaustively.
///
/// Indexing convention: qubit 0 is the most significant bit of the basis
/// index, so |q0 q1 ... q_{n-1}> has index q0*2^{n-1} + ... + q_{n-1}.
class StateVector {
 public:
  static constexpr int kMaxQubits = 8;
  static constexpr double kNormTolerance = 1e-12;

  using Amplitude = std::complex<double>;

  /// |00...0> on `num_qubits` qubits.
  explicit StateVector(int num_qubits);

  /// Takes ownership of a full amplitude vector. Throws if the count is
  /// not 2^num_qubits or the state is not normalized within 1e-12.
  StateVector(int num_qubits, std::vector<Amplitude> amplitudes);

  int num_qubits() const { return num_qubits_; }
  std::size_t dimension() const { return amplitudes_.size(); }
  const std::vector<Amplitude>& amplitudes() const { return amplitudes_; }
  Amplitude amplitude(std::size_t basis_index) const {
    return amplitudes_.at(basis_index);
  }

  /// Sum of squared magnitudes (1 within 1e-12 for any valid state).
  double squared_norm() const;

  /// Bit of `qubit` within `basis_index` under the MSB-first convention.
  int basis_bit(std::size_t basis_index, int qubit) const;

 private:
  int num_qubits_;
  std::vector<Amplitude> amplitudes_;
};

/// Outcome of a Bell measurement. The measured pair stays in place,
/// collapsed onto its Bell state, so qubit indices remain stable.
struct MeasureResult {
  BellLabel outcome;
  double probability = 0.0;
  StateVector post_state;
};

/// Canonical two-qubit Bell state for a label:
///   |phi+-> = (|00> +- |11>)/sqrt(2), |psi+-> = (|01> +- |10>)/sqrt(2).
StateVector make_bell_pair(BellLabel label);

/// Kronecker product; `a`'s qubits come first (more significant).
/// Throws if the combined qubit count exceeds 8.
StateVector tensor(const StateVector& a, const StateVector& b);

/// Single-qubit Pauli applied to the indexed qubit.
StateVector apply_pauli(const StateVector& state, int qubit, PauliOp op);

/// Born-rule probabilities of projecting qubits (q1, q2) onto each Bell
/// state, indexed by the label's public code value. Sums to 1 within 1e-12.
std::array<double, 4> bell_probabilities(const StateVector& state, int q1,
                                         int q2);

/// Deterministic projection of (q1, q2) onto one Bell outcome; the
/// normalized post-measurement state. Throws if the outcome has
/// (numerically) zero probability.
MeasureResult project_bell(const StateVector& state, int q1, int q2,
                           BellLabel outcome);

/// Samples a Bell outcome for (q1, q2) by the Born rule and collapses.
/// Zero-probability outcomes are never produced.
MeasureResult bell_measure(const StateVector& state, int q1, int q2,
                           RandomStream& rng);

/// Label of a two-qubit state that equals a canonical Bell state up to
/// global phase (within 1e-9 in probability); nullopt for anything else.
std::optional<BellLabel> identify_bell(const StateVector& state,
                                       double tolerance = 1e-9);

/// A tampered EPR source: (|00>|alpha> + |11>|beta>)/sqrt(2) on three
/// qubits (the two channel particles, then the adversary's register),
/// with <alpha|beta> = ancilla_overlap. alpha = |0>; beta lies in the
/// |0>,|1> plane. Overlap 0 gives a GHZ state, overlap 1 decouples the
/// register entirely.
StateVector make_entangled_source(double ancilla_overlap);

}  // namespace swapqkd
