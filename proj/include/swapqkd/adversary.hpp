#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "swapqkd/bell.hpp"
#include "swapqkd/messages.hpp"
#include "swapqkd/random.hpp"

namespace swapqkd {

/// The three eavesdropping scenarios the protocol is measured against,
/// plus the honest channel. Exactly one is active per session.
enum class AttackKind : std::uint8_t {
  None,
  PassiveGuess,     // Eve only reads the public classical channel
  EntangleSource,   // Eve substitutes three-party entangled sources
  ManInTheMiddle,   // Eve shares separate pairs with each party
};

struct AttackModel {
  AttackKind kind = AttackKind::None;
  // <alpha|beta> of the adversary's source registers; only meaningful for
  // EntangleSource. 0 is the strongest (orthogonal) attack.
  double overlap = 0.0;

  friend bool operator==(const AttackModel&, const AttackModel&) = default;
};

std::string_view attack_name(AttackKind kind);

/// Eve's view of one round: her 6-bit guess at the round key, which of
/// those bits she actually derived from her view (rather than guessed),
/// and any Bell measurements she performed herself.
struct EveRecord {
  int round_index = 0;
  std::optional<std::array<std::uint8_t, 6>> guessed_bits;
  std::array<bool, 6> known_bits_mask{};
  std::vector<BellLabel> eve_measurements;
};

/// Accumulated adversary accounting for a session. Success counters are
/// filled in by the session runner, which knows the legitimate key bits.
struct AdversaryStats {
  AttackModel model;
  std::vector<EveRecord> records;
  int rounds_observed = 0;
  int full_round_hits = 0;    // all six guessed bits equal Alice's bits
  int certain_bit_hits = 0;   // the two certain bits equal Alice's
  int cross_side_matches = 0; // MITM: Alice's outcome equals the far side's
  long long known_bits_total = 0;
};

/// Physical outcome of one round under the source-entangling attack,
/// simulated exactly on the 6-qubit state (two tampered sources).
struct EntangleSourceRound {
  BellLabel announced_13;  // Alice's Bell outcome
  BellLabel residual_24;   // Bob's Bell outcome
  BellLabel eve_outcome;   // Eve's Bell outcome on her two registers
};

EntangleSourceRound entangle_source_round(PauliOp pauli, double overlap,
                                          RandomStream& rng);

/// Physical outcome of one round under the man-in-the-middle attack,
/// simulated exactly on the 8-qubit state (two pairs per side).
struct MitmRound {
  BellLabel announced_13;   // Alice's outcome on her Eve-shared pairs
  BellLabel eve_alice_side; // Eve's outcome on her halves of Alice's pairs
  BellLabel eve_bob_side;   // Eve's outcome on her halves of Bob's pairs
  BellLabel residual_24;    // Bob's outcome on his Eve-shared pairs
};

MitmRound mitm_round(PauliOp pauli, RandomStream& rng);

/// Eve's per-round bookkeeping for the two active attacks. Both assume
/// the publicly agreed initial pairs.
EveRecord entangle_eve_record(int round_index,
                              const EntangleSourceRound& round);
EveRecord mitm_eve_record(int round_index, const MitmRound& round);

/// The purely passive adversary: reads the full classical transcript,
/// learns every announced code, and guesses the local operation uniformly.
/// Returns one record per announced round, in round order.
std::vector<EveRecord> passive_guess(const Transcript& transcript,
                                     RandomStream& rng);

/// Analytic probability that at least one of `checks` comparisons exposes
/// the attack: EntangleSource mismatches a check with probability
/// (1 - overlap^2)/2, ManInTheMiddle with probability 3/4, and the honest
/// or passive channels never mismatch.
double detection_curve(const AttackModel& model, int checks);

/// Per-check probability that Bob's residual agrees with Alice's
/// expectation under the given attack (the complement of the per-check
/// mismatch rate).
double per_check_match_probability(const AttackModel& model);

}  // namespace swapqkd
