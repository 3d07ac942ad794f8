#include "swapqkd/adversary.hpp"

#include <cmath>
#include <stdexcept>

#include "swapqkd/statevector.hpp"

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

}  // namespace

std::string_view attack_name(AttackKind kind) {
  switch (kind) {
    case AttackKind::None: return "none";
    case AttackKind::PassiveGuess: return "passive";
    case AttackKind::EntangleSource: return "entangle";
    case AttackKind::ManInTheMiddle: return "mitm";
  }
  return "unknown";
}

EntangleSourceRound entangle_source_round(PauliOp pauli, double overlap,
                                          RandomStream& rng) {
  // Qubit layout: [particle1, particle2, eve1, particle3, particle4, eve2].
  const StateVector source = make_entangled_source(overlap);
  StateVector state = tensor(source, source);
  state = apply_pauli(state, 0, pauli);

  // Alice measures particles (1,3), Bob (2,4), Eve her registers last;
  // the three act on disjoint qubits, so the order is a convention.
  const MeasureResult alice = bell_measure(state, 0, 3, rng);
  const MeasureResult bob = bell_measure(alice.post_state, 1, 4, rng);
  const MeasureResult eve = bell_measure(bob.post_state, 2, 5, rng);
  return {alice.outcome, bob.outcome, eve.outcome};
}

MitmRound mitm_round(PauliOp pauli, RandomStream& rng) {
  // Qubit layout: Alice-Eve pairs (0,1) and (2,3), then Eve-Bob pairs
  // (4,5) and (6,7). Alice holds 0 and 2, Bob holds 5 and 7, Eve the rest.
  const StateVector pair = make_bell_pair(phi_plus);
  StateVector state = tensor(tensor(pair, pair), tensor(pair, pair));
  state = apply_pauli(state, 0, pauli);

  const MeasureResult alice = bell_measure(state, 0, 2, rng);
  const MeasureResult eve_a = bell_measure(alice.post_state, 1, 3, rng);
  const MeasureResult eve_b = bell_measure(eve_a.post_state, 4, 6, rng);
  const MeasureResult bob = bell_measure(eve_b.post_state, 5, 7, rng);
  return {alice.outcome, eve_a.outcome, eve_b.outcome, bob.outcome};
}

EveRecord entangle_eve_record(int round_index,
                              const EntangleSourceRound& round) {
  EveRecord record;
  record.round_index = round_index;
  record.eve_measurements = {round.eve_outcome};

  // Eve mimics the receiver's inference with her own outcome standing in
  // for the residual. With orthogonal registers her outcome pins the
  // residual's flip bit but not its phase bit (the phase correlation flips
  // with the announced phase and the hidden operation), so no residual
  // code bit is derivable on its own: only the announced code counts as
  // known, at every overlap.
  const PauliOp certain_guess =
      infer_pauli(round.announced_13, round.eve_outcome, phi_plus, phi_plus);
  record.guessed_bits =
      assemble_bits(pauli_to_code(certain_guess), bell_to_code(round.eve_outcome),
                    bell_to_code(round.announced_13));
  record.known_bits_mask = {false, false, false, false, true, true};
  return record;
}

EveRecord mitm_eve_record(int round_index, const MitmRound& round) {
  EveRecord record;
  record.round_index = round_index;
  record.eve_measurements = {round.eve_alice_side, round.eve_bob_side};

  // Eve owns both channels outright: her Alice-side residual is exactly
  // the one the sender expects, so the receiver's inference run on it
  // recovers the local operation, and with it every key bit.
  const PauliOp certain =
      infer_pauli(round.announced_13, round.eve_alice_side, phi_plus, phi_plus);
  record.guessed_bits =
      assemble_bits(pauli_to_code(certain), bell_to_code(round.eve_alice_side),
                    bell_to_code(round.announced_13));
  record.known_bits_mask = {true, true, true, true, true, true};
  return record;
}

std::vector<EveRecord> passive_guess(const Transcript& transcript,
                                     RandomStream& rng) {
  std::vector<EveRecord> records;
  for (const ClassicalMessage& message : transcript) {
    if (message.type != MessageType::ResultAnnounce) continue;
    const BellLabel announced = code_to_bell(*message.code);

    EveRecord record;
    record.round_index = message.round;
    // The initial pair states are public; only the local operation is
    // private, so a uniform guess at it fixes the whole round.
    const PauliOp guess = static_cast<PauliOp>(next_quarter(rng));
    const BellLabel residual_guess =
        swap_residual(apply_pauli_first(guess, phi_plus), phi_plus, announced);
    record.guessed_bits =
        assemble_bits(pauli_to_code(guess), bell_to_code(residual_guess),
                      bell_to_code(announced));
    record.known_bits_mask = {false, false, false, false, true, true};
    records.push_back(std::move(record));
  }
  return records;
}

double per_check_match_probability(const AttackModel& model) {
  switch (model.kind) {
    case AttackKind::None:
    case AttackKind::PassiveGuess:
      return 1.0;
    case AttackKind::EntangleSource:
      // Derived by projecting the tampered 6-qubit source state; the
      // orthogonal-register attack halves the agreement rate.
      return 0.5 * (1.0 + model.overlap * model.overlap);
    case AttackKind::ManInTheMiddle:
      // Independent uniform outcomes on the two sides.
      return 0.25;
  }
  return 1.0;
}

double detection_curve(const AttackModel& model, int checks) {
  if (checks < 0) throw std::invalid_argument("check count must be >= 0");
  const double match = per_check_match_probability(model);
  return 1.0 - std::pow(match, checks);
}

}  // namespace swapqkd
