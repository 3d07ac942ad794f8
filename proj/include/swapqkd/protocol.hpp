#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "swapqkd/adversary.hpp"
#include "swapqkd/bell.hpp"
#include "swapqkd/messages.hpp"
#include "swapqkd/random.hpp"

namespace swapqkd {

/// Full trace of one protocol round. `residual_24` is the receiver's
/// measured value; in honest runs it equals the sender's expectation
///   swap_residual(apply_pauli_first(pauli, initial_a), initial_b,
///                 announced_13).
struct RoundRecord {
  int round_index = 0;
  BellLabel initial_a;  // pair (1,2) as announced at creation
  BellLabel initial_b;  // pair (3,4)
  PauliOp pauli = PauliOp::I;
  BellLabel announced_13;
  BellLabel residual_24;
  BellLabel imaginary_13;  // outcome (1,3) would have shown without the op
  PauliOp inferred_pauli = PauliOp::I;
  // Fixed per-round ordering: certain(2) || residual code(2) || announced
  // code(2).
  std::array<std::uint8_t, 6> key_bits{};
};

/// The sender's expectation for the receiver's measurement.
constexpr BellLabel expected_residual(PauliOp pauli, BellLabel initial_a,
                                      BellLabel initial_b,
                                      BellLabel announced_13) {
  return swap_residual(apply_pauli_first(pauli, initial_a), initial_b,
                       announced_13);
}

/// Where the per-round local operation comes from: fresh coin flips, or an
/// explicit bit sequence the sender wants to transmit as the certain key.
enum class PauliSource : std::uint8_t { UniformRandom, ExplicitBits };

struct SessionConfig {
  int rounds = 0;
  double check_fraction = 0.0;  // in [0, 1)
  std::uint64_t seed = 0;
  PauliSource pauli_source = PauliSource::UniformRandom;
  std::vector<std::uint8_t> payload_bits;  // 2*rounds bits when explicit
  AttackModel attack{};
};

struct DetectionReport {
  int checked_rounds = 0;
  int mismatches = 0;
  bool aborted = false;
};

struct SessionResult {
  std::vector<std::uint8_t> alice_key;
  std::vector<std::uint8_t> bob_key;
  DetectionReport detection;
  std::vector<RoundRecord> per_round;
  AdversaryStats adversary;
  Transcript transcript;
};

/// Alice's half of one round (steps 1-5): two pairs created in the agreed
/// state, the local operation applied, the Bell measurement on particles
/// (1,3) taken, the imaginary state computed, and her six key bits fixed.
struct AliceRound {
  RoundRecord record;     // filled from the sender's view
  BellLabel channel_24;   // the state particles (2,4) now carry to Bob
};

/// Deterministic core with the measurement outcome injected.
AliceRound alice_round(PauliOp pauli, BellLabel forced_outcome_13);

/// Samples the outcome from the uniform swapping distribution.
AliceRound alice_round(RandomStream& rng, PauliOp pauli);

/// Bob's half (steps 6-8): measure, infer the imaginary state, recover the
/// local operation from the announced outcome, assemble his key bits.
struct BobRound {
  PauliOp inferred_pauli = PauliOp::I;
  BellLabel imaginary_13;
  std::array<std::uint8_t, 6> key_bits{};
};

BobRound bob_round(BellLabel residual_24, BellLabel announced_13,
                   BellLabel initial_a, BellLabel initial_b);

/// Step 9 sifting: each round is selected for checking with probability
/// `check_fraction`; checked rounds publish the receiver's residual code
/// and are consumed. Any mismatch against the sender's expectation aborts
/// the session and discards the keys.
struct SiftOutcome {
  std::vector<std::uint8_t> alice_key;
  std::vector<std::uint8_t> bob_key;
  DetectionReport report;
  std::vector<int> checked_rounds;
  Transcript messages;  // check reveals, verdicts, and a possible abort
};

SiftOutcome sift_and_check(const std::vector<RoundRecord>& records,
                           double check_fraction, RandomStream& rng,
                           int first_seq = 0);

/// Runs a full session: `rounds` protocol rounds under the configured
/// attack, step-9 verification, key assembly from the unchecked rounds.
/// Deterministic for a fixed config.
SessionResult run_session(const SessionConfig& config);

}  // namespace swapqkd
