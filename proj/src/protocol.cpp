#include "swapqkd/protocol.hpp"

#include <stdexcept>
#include <string>

namespace swapqkd {

namespace {

std::array<std::uint8_t, 6> assemble_bits(BitCode certain, BitCode residual,
                                          BitCode announced) {
  return {static_cast<std::uint8_t>(certain.first()),
          static_cast<std::uint8_t>(certain.second()),
          static_cast<std::uint8_t>(residual.first()),
          static_cast<std::uint8_t>(residual.second()),
          static_cast<std::uint8_t>(announced.first()),
          static_cast<std::uint8_t>(announced.second())};
}

void validate(const SessionConfig& config) {
  if (config.rounds <= 0) {
    throw std::invalid_argument("session needs a positive round count");
  }
  if (!(config.check_fraction >= 0.0 && config.check_fraction < 1.0)) {
    throw std::invalid_argument("check fraction must lie in [0, 1)");
  }
  if (config.pauli_source == PauliSource::ExplicitBits &&
      config.payload_bits.size() != static_cast<std::size_t>(2 * config.rounds)) {
    throw std::invalid_argument(
        "explicit payload must provide exactly 2 bits per round");
  }
  if (config.attack.kind == AttackKind::EntangleSource &&
      !(config.attack.overlap >= 0.0 && config.attack.overlap <= 1.0)) {
    throw std::invalid_argument("attack overlap must lie in [0, 1]");
  }
}

PauliOp pauli_for_round(const SessionConfig& config, int round,
                        RandomStream& rng) {
  if (config.pauli_source == PauliSource::ExplicitBits) {
    const std::uint8_t first = config.payload_bits[2 * round] & 1;
    const std::uint8_t second = config.payload_bits[2 * round + 1] & 1;
    return code_to_pauli(
        BitCode{static_cast<std::uint8_t>((first << 1) | second)});
  }
  return static_cast<PauliOp>(next_quarter(rng));
}

}  // namespace

AliceRound alice_round(PauliOp pauli, BellLabel forced_outcome_13) {
  // Step 1: two pairs in the agreed state; step 2: the local operation on
  // particle 1.
  const BellLabel initial_a = phi_plus;
  const BellLabel initial_b = phi_plus;
  const BellLabel operated = apply_pauli_first(pauli, initial_a);

  // Step 3: the Bell measurement on (1,3) leaves (2,4) in the residual the
  // swap rule dictates.
  const BellLabel residual = swap_residual(operated, initial_b,
                                           forced_outcome_13);
  // Step 4: the imaginary (1,3) state, computed as if no operation had
  // been applied.
  const BellLabel imaginary = infer_imaginary(initial_a, initial_b, residual);

  AliceRound result;
  result.record = RoundRecord{
      0, initial_a, initial_b, pauli, forced_outcome_13, residual, imaginary,
      pauli,
      assemble_bits(pauli_to_code(pauli), bell_to_code(residual),
                    bell_to_code(forced_outcome_13))};
  result.channel_24 = residual;
  return result;
}

AliceRound alice_round(RandomStream& rng, PauliOp pauli) {
  // All four outcomes occur with probability 1/4.
  const BellLabel outcome = all_bell_labels[next_quarter(rng)];
  return alice_round(pauli, outcome);
}

BobRound bob_round(BellLabel residual_24, BellLabel announced_13,
                   BellLabel initial_a, BellLabel initial_b) {
  BobRound result;
  result.imaginary_13 = infer_imaginary(initial_a, initial_b, residual_24);
  result.inferred_pauli =
      infer_pauli(announced_13, residual_24, initial_a, initial_b);
  result.key_bits = assemble_bits(pauli_to_code(result.inferred_pauli),
                                  bell_to_code(residual_24),
                                  bell_to_code(announced_13));
  return result;
}

SiftOutcome sift_and_check(const std::vector<RoundRecord>& records,
                           double check_fraction, RandomStream& rng,
                           int first_seq) {
  if (records.empty()) {
    throw std::invalid_argument("sifting needs at least one round");
  }

  SiftOutcome outcome;
  int seq = first_seq;
  std::vector<bool> checked(records.size(), false);
  for (std::size_t i = 0; i < records.size(); ++i) {
    if (next_uniform(rng) < check_fraction) checked[i] = true;
  }

  for (std::size_t i = 0; i < records.size(); ++i) {
    const RoundRecord& record = records[i];
    if (!checked[i]) continue;
    outcome.checked_rounds.push_back(record.round_index);
    outcome.report.checked_rounds++;

    // The receiver publishes his measured code; the sender compares it to
    // what her operation and announced outcome imply.
    outcome.messages.push_back(ClassicalMessage::check_reveal(
        seq++, record.round_index, record.residual_24));
    const BellLabel expected =
        expected_residual(record.pauli, record.initial_a, record.initial_b,
                          record.announced_13);
    const bool match = expected == record.residual_24;
    outcome.messages.push_back(
        ClassicalMessage::check_verdict(seq++, record.round_index, match));
    if (!match) outcome.report.mismatches++;
  }

  if (outcome.report.mismatches > 0) {
    outcome.report.aborted = true;
    outcome.messages.push_back(
        ClassicalMessage::abort(seq++, "verification mismatch; key discarded"));
    return outcome;  // keys stay empty
  }

  for (std::size_t i = 0; i < records.size(); ++i) {
    if (checked[i]) continue;
    const RoundRecord& record = records[i];
    const BellLabel alice_residual =
        expected_residual(record.pauli, record.initial_a, record.initial_b,
                          record.announced_13);
    const auto alice_bits =
        assemble_bits(pauli_to_code(record.pauli), bell_to_code(alice_residual),
                      bell_to_code(record.announced_13));
    const auto bob_bits =
        assemble_bits(pauli_to_code(record.inferred_pauli),
                      bell_to_code(record.residual_24),
                      bell_to_code(record.announced_13));
    outcome.alice_key.insert(outcome.alice_key.end(), alice_bits.begin(),
                             alice_bits.end());
    outcome.bob_key.insert(outcome.bob_key.end(), bob_bits.begin(),
                           bob_bits.end());
  }
  return outcome;
}

SessionResult run_session(const SessionConfig& config) {
  validate(config);

  RandomStream rng(config.seed);
  // Eve's private coin flips live on a derived stream so her guessing
  // never perturbs the physics or the sifting draw.
  RandomStream eve_rng(splitmix64(config.seed ^ 0x6576652d72756e1bULL));

  SessionResult result;
  result.adversary.model = config.attack;
  result.per_round.reserve(config.rounds);

  std::vector<std::array<std::uint8_t, 6>> alice_bits_per_round;
  alice_bits_per_round.reserve(config.rounds);

  int seq = 0;
  for (int round = 0; round < config.rounds; ++round) {
    const PauliOp pauli = pauli_for_round(config, round, rng);

    BellLabel announced;
    BellLabel bob_residual;
    switch (config.attack.kind) {
      case AttackKind::None:
      case AttackKind::PassiveGuess: {
        AliceRound alice = alice_round(rng, pauli);
        announced = alice.record.announced_13;
        bob_residual = alice.channel_24;
        break;
      }
      case AttackKind::EntangleSource: {
        const EntangleSourceRound physics =
            entangle_source_round(pauli, config.attack.overlap, rng);
        announced = physics.announced_13;
        bob_residual = physics.residual_24;
        result.adversary.records.push_back(entangle_eve_record(round, physics));
        break;
      }
      case AttackKind::ManInTheMiddle: {
        const MitmRound physics = mitm_round(pauli, rng);
        announced = physics.announced_13;
        bob_residual = physics.residual_24;
        result.adversary.records.push_back(mitm_eve_record(round, physics));
        if (physics.announced_13 == physics.eve_bob_side) {
          result.adversary.cross_side_matches++;
        }
        break;
      }
    }

    // Steps 5 and 7: the announcement handshake. The result is revealed
    // only after the receiver asks for it.
    result.transcript.push_back(ClassicalMessage::measurement_done(seq++,
                                                                   round));
    result.transcript.push_back(ClassicalMessage::result_request(seq++,
                                                                 round));
    result.transcript.push_back(
        ClassicalMessage::result_announce(seq++, round, announced));

    const BobRound bob = bob_round(bob_residual, announced, phi_plus,
                                   phi_plus);
    RoundRecord record{round,    phi_plus,      phi_plus,
                       pauli,    announced,     bob_residual,
                       bob.imaginary_13, bob.inferred_pauli,
                       assemble_bits(pauli_to_code(pauli),
                                     bell_to_code(bob_residual),
                                     bell_to_code(announced))};
    result.per_round.push_back(record);

    const BellLabel alice_residual =
        expected_residual(pauli, phi_plus, phi_plus, announced);
    alice_bits_per_round.push_back(
        assemble_bits(pauli_to_code(pauli), bell_to_code(alice_residual),
                      bell_to_code(announced)));
  }

  if (config.attack.kind == AttackKind::PassiveGuess) {
    result.adversary.records = passive_guess(result.transcript, eve_rng);
  }

  // Score Eve against the sender's actual bits.
  for (const EveRecord& record : result.adversary.records) {
    result.adversary.rounds_observed++;
    for (bool known : record.known_bits_mask) {
      if (known) result.adversary.known_bits_total++;
    }
    if (!record.guessed_bits) continue;
    const auto& truth = alice_bits_per_round[record.round_index];
    const auto& guess = *record.guessed_bits;
    if (guess == truth) result.adversary.full_round_hits++;
    if (guess[0] == truth[0] && guess[1] == truth[1]) {
      result.adversary.certain_bit_hits++;
    }
  }

  // Step 9.
  SiftOutcome sift =
      sift_and_check(result.per_round, config.check_fraction, rng, seq);
  result.detection = sift.report;
  result.alice_key = std::move(sift.alice_key);
  result.bob_key = std::move(sift.bob_key);
  result.transcript.insert(result.transcript.end(), sift.messages.begin(),
                           sift.messages.end());
  return result;
}

}  // namespace swapqkd
