// Acceptance gate: one self-contained check per release criterion, each
// printing a single PASS/FAIL line with its pinned tolerance. Exits
// nonzero if any criterion fails.
#include <chrono>
#include <cmath>
#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "swapqkd/bell.hpp"
#include "swapqkd/campaign.hpp"
#include "swapqkd/protocol.hpp"
#include "swapqkd/statevector.hpp"

using namespace swapqkd;

namespace {

int failures = 0;

void report(int n, bool ok, const std::string& detail) {
  std::cout << "criterion " << n << (ok ? " PASS: " : " FAIL: ") << detail
            << "\n";
  if (!ok) failures++;
}

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string render(const CampaignResult& result) {
  std::ostringstream out;
  write_campaign(out, result);
  return out.str();
}

// 1. The XOR swap rule reproduces the dense simulator on every ordered
//    label pair: uniform outcome probabilities and exact residual labels.
void criterion_swap_oracle() {
  const auto start = Clock::now();
  double max_prob_err = 0.0;
  bool labels_exact = true;
  for (BellLabel a : all_bell_labels) {
    for (BellLabel b : all_bell_labels) {
      const StateVector joint = tensor(make_bell_pair(a), make_bell_pair(b));
      const auto probs = bell_probabilities(joint, 0, 2);
      for (BellLabel outcome : all_bell_labels) {
        const double p = probs[bell_to_code(outcome).value];
        max_prob_err = std::max(max_prob_err, std::abs(p - 0.25));
        const MeasureResult m = project_bell(joint, 0, 2, outcome);
        const auto partner = bell_probabilities(m.post_state, 1, 3);
        const BellLabel want = swap_residual(a, b, outcome);
        if (partner[bell_to_code(want).value] < 1.0 - 1e-9) {
          labels_exact = false;
        }
      }
    }
  }
  const double elapsed = seconds_since(start);
  std::ostringstream d;
  d << "swap rule vs dense simulator, 16 label pairs x 4 outcomes: max "
    << "|p - 1/4| = " << max_prob_err << " (tol 1e-12), residual labels "
    << (labels_exact ? "all exact" : "WRONG") << ", " << elapsed
    << " s (limit 1)";
  report(1, labels_exact && max_prob_err <= 1e-12 && elapsed <= 1.0, d.str());
}

// 2. The worked round: sigma_1 with announced outcome 10 leaves residual
//    11, and both parties assemble the key bits 011110.
void criterion_reference_round() {
  const AliceRound alice = alice_round(PauliOp::X, psi_minus);
  const std::array<std::uint8_t, 6> want = {0, 1, 1, 1, 1, 0};
  bool ok = alice.record.announced_13 == psi_minus &&
            alice.record.residual_24 == phi_minus &&
            alice.record.imaginary_13 == phi_minus &&
            alice.channel_24 == phi_minus && alice.record.key_bits == want;
  const BobRound bob = bob_round(alice.channel_24, alice.record.announced_13,
                                 phi_plus, phi_plus);
  ok = ok && bob.inferred_pauli == PauliOp::X && bob.key_bits == want;

  std::ostringstream d;
  d << "worked round (sigma1, announced 10): residual "
    << code_str(bell_to_code(alice.record.residual_24)) << ", sender bits ";
  for (std::uint8_t bit : alice.record.key_bits) d << static_cast<int>(bit);
  d << " (expected 011110), receiver recovers "
    << pauli_name(bob.inferred_pauli) << " and the same bits: "
    << (bob.key_bits == want ? "yes" : "no");
  report(2, ok, d.str());
}

// 3. Key rate: exactly 6 bits per round with checking off; 6(1 - f) within
//    0.1 at checking fraction f = 0.25 over 10^4 rounds.
void criterion_key_rate() {
  CampaignSpec spec;
  spec.sessions = 20;
  spec.rounds = 200;
  spec.check_fraction = 0.0;
  spec.master_seed = 11;
  const Aggregate totals = run_campaign(spec).totals;
  const bool exact =
      totals.key_rate.mean == 6.0 && totals.key_rate.halfwidth == 0.0;

  SessionConfig cfg;
  cfg.rounds = 10000;
  cfg.check_fraction = 0.25;
  cfg.seed = 12;
  const SessionResult session = run_session(cfg);
  const double rate =
      static_cast<double>(session.alice_key.size()) / cfg.rounds;
  const bool thinned = std::abs(rate - 4.5) <= 0.1;

  std::ostringstream d;
  d << "key rate " << totals.key_rate.mean
    << " bits/round with checking off (must be exactly 6); " << rate
    << " at fraction 0.25 over 10^4 rounds (want 4.5 +- 0.1)";
  report(3, exact && thinned, d.str());
}

// 4. Honest sessions never abort, both keys agree, and an explicit payload
//    arrives bit for bit in the certain slots.
void criterion_honest_sessions() {
  CampaignSpec spec;
  spec.sessions = 100;
  spec.rounds = 100;
  spec.check_fraction = 0.2;
  spec.master_seed = 2026;
  const CampaignResult result = run_campaign(spec);
  int aborted = 0;
  bool keys_equal = true;
  for (const SessionSummary& s : result.sessions) {
    if (s.aborted) aborted++;
    keys_equal = keys_equal && s.keys_equal;
  }

  SessionConfig cfg;
  cfg.rounds = 100;
  cfg.check_fraction = 0.0;
  cfg.seed = 5;
  cfg.pauli_source = PauliSource::ExplicitBits;
  RandomStream payload_rng(424242);
  cfg.payload_bits.resize(200);
  for (std::uint8_t& bit : cfg.payload_bits) {
    bit = static_cast<std::uint8_t>(next_quarter(payload_rng) & 1);
  }
  const SessionResult r = run_session(cfg);
  bool payload_ok = !r.detection.aborted && r.alice_key == r.bob_key &&
                    r.bob_key.size() == 600;
  for (int i = 0; i < 100 && payload_ok; ++i) {
    payload_ok = r.bob_key[6 * i] == cfg.payload_bits[2 * i] &&
                 r.bob_key[6 * i + 1] == cfg.payload_bits[2 * i + 1];
  }

  std::ostringstream d;
  d << "100 honest sessions: " << aborted << " aborts (want 0), keys "
    << (keys_equal ? "all equal" : "DIFFER")
    << "; 200-bit explicit payload delivered bit for bit: "
    << (payload_ok ? "yes" : "no");
  report(4, aborted == 0 && keys_equal && payload_ok, d.str());
}

// 5. Orthogonal-register source: per-check match rate 0.50 +- 0.02 over
//    10^4 rounds, and detection within 0.03 of 1 - (1/2)^k for
//    k in {1,2,4,8}, all in under 30 s.
void criterion_entangle_detection() {
  const auto start = Clock::now();
  SessionConfig cfg;
  cfg.rounds = 10000;
  cfg.check_fraction = 0.0;
  cfg.seed = 21;
  cfg.attack = AttackModel{AttackKind::EntangleSource, 0.0};
  const SessionSummary s = summarize(run_session(cfg), 0, cfg.seed);
  const double match = static_cast<double>(s.match_rounds) / cfg.rounds;
  bool ok = std::abs(match - 0.5) <= 0.02;

  CampaignSpec sweep;
  sweep.sessions = 3000;
  sweep.master_seed = 22;
  sweep.attack = cfg.attack;
  sweep.k_values = {1, 2, 4, 8};
  double worst = 0.0;
  for (const SweepRow& row : run_sweep(sweep)) {
    const double want = 1.0 - std::pow(0.5, row.k);
    ok = ok && std::abs(row.analytic - want) <= 1e-12;
    worst = std::max(worst, std::abs(row.empirical - want));
  }
  const double elapsed = seconds_since(start);
  ok = ok && worst <= 0.03 && elapsed <= 30.0;

  std::ostringstream d;
  d << "orthogonal-register source: match rate " << match
    << " over 10^4 rounds (want 0.50 +- 0.02), detection at k={1,2,4,8} "
    << "within " << worst << " of 1-(1/2)^k (tol 0.03), " << elapsed
    << " s (limit 30)";
  report(5, ok, d.str());
}

// 6. Full relay: cross-side agreement 0.25 +- 0.02 over 10^4 rounds,
//    detection within 0.03 of 1 - (1/4)^k.
void criterion_relay_detection() {
  SessionConfig cfg;
  cfg.rounds = 10000;
  cfg.check_fraction = 0.0;
  cfg.seed = 31;
  cfg.attack = AttackModel{AttackKind::ManInTheMiddle, 0.0};
  const SessionResult r = run_session(cfg);
  const double cross =
      static_cast<double>(r.adversary.cross_side_matches) / cfg.rounds;
  bool ok = std::abs(cross - 0.25) <= 0.02;

  CampaignSpec sweep;
  sweep.sessions = 3000;
  sweep.master_seed = 32;
  sweep.attack = cfg.attack;
  sweep.k_values = {1, 2, 4, 8};
  double worst = 0.0;
  for (const SweepRow& row : run_sweep(sweep)) {
    const double want = 1.0 - std::pow(0.25, row.k);
    ok = ok && std::abs(row.analytic - want) <= 1e-12;
    worst = std::max(worst, std::abs(row.empirical - want));
  }
  ok = ok && worst <= 0.03;

  std::ostringstream d;
  d << "relay: cross-side agreement " << cross
    << " over 10^4 rounds (want 0.25 +- 0.02), detection at k={1,2,4,8} "
    << "within " << worst << " of 1-(1/4)^k (tol 0.03)";
  report(6, ok, d.str());
}

// 7. Passive guessing: full-round success 0.25 +- 0.02, zero mismatches and
//    aborts, known-bit fraction exactly 2/6.
void criterion_passive_listener() {
  SessionConfig cfg;
  cfg.rounds = 10000;
  cfg.check_fraction = 0.0;
  cfg.seed = 41;
  cfg.attack = AttackModel{AttackKind::PassiveGuess, 0.0};
  const SessionResult r = run_session(cfg);
  const double full =
      static_cast<double>(r.adversary.full_round_hits) / cfg.rounds;

  CampaignSpec spec;
  spec.sessions = 50;
  spec.rounds = 100;
  spec.check_fraction = 0.3;
  spec.master_seed = 42;
  spec.attack = cfg.attack;
  const Aggregate totals = run_campaign(spec).totals;
  const bool clean = totals.total_mismatches == 0 &&
                     totals.abort_rate.mean == 0.0 &&
                     totals.abort_rate.halfwidth == 0.0;
  const bool known = totals.known_bit_fraction == 2.0 / 6.0;
  const bool ok = std::abs(full - 0.25) <= 0.02 && clean && known;

  std::ostringstream d;
  d << "passive listener: full-round guesses " << full
    << " (want 0.25 +- 0.02), mismatches " << totals.total_mismatches
    << " and abort rate " << totals.abort_rate.mean
    << " (must be exactly 0), known-bit fraction "
    << totals.known_bit_fraction << " (must be exactly 2/6)";
  report(7, ok, d.str());
}

// 8. Inference round-trips exactly over all 4^4 combinations of operation,
//    initial labels and announced outcome.
void criterion_inference_round_trip() {
  int checked = 0;
  bool ok = true;
  for (PauliOp op : all_paulis) {
    for (BellLabel a : all_bell_labels) {
      for (BellLabel b : all_bell_labels) {
        for (BellLabel announced : all_bell_labels) {
          const BellLabel residual = expected_residual(op, a, b, announced);
          ok = ok && infer_pauli(announced, residual, a, b) == op;
          ok = ok && infer_imaginary(a, b, residual) ==
                         apply_pauli_first(op, announced);
          checked++;
        }
      }
    }
  }
  std::ostringstream d;
  d << "operation and imaginary-outcome inference round-trips exact on all "
    << checked << "/256 combinations: " << (ok ? "yes" : "no");
  report(8, ok && checked == 256, d.str());
}

// 9. Bit-for-bit reproducibility: identical master seeds give identical
//    records, transcripts and sweep tables, independent of thread count.
void criterion_reproducibility() {
  CampaignSpec spec;
  spec.sessions = 8;
  spec.rounds = 40;
  spec.check_fraction = 0.25;
  spec.master_seed = 77;
  spec.attack = AttackModel{AttackKind::ManInTheMiddle, 0.0};

  const CampaignResult first = run_campaign(spec, true);
  const CampaignResult second = run_campaign(spec, true);
  CampaignSpec threaded = spec;
  threaded.parallel = 2;
  const CampaignResult third = run_campaign(threaded, true);
  bool ok = render(first) == render(second) &&
            render(first) == render(third) &&
            first.transcript_lines == second.transcript_lines &&
            first.transcript_lines == third.transcript_lines;

  CampaignSpec csv = spec;
  csv.format = OutputFormat::Csv;
  ok = ok && render(run_campaign(csv)) == render(run_campaign(csv));

  CampaignSpec sweep;
  sweep.sessions = 400;
  sweep.master_seed = 78;
  sweep.attack = AttackModel{AttackKind::EntangleSource, 0.3};
  sweep.k_values = {1, 3};
  std::ostringstream sweep_a, sweep_b;
  write_sweep(sweep_a, run_sweep(sweep), OutputFormat::JsonLines);
  write_sweep(sweep_b, run_sweep(sweep), OutputFormat::JsonLines);
  ok = ok && sweep_a.str() == sweep_b.str();

  std::ostringstream d;
  d << "identical master seeds reproduce campaign records, transcripts and "
    << "sweep tables byte for byte, serial and with 2 workers: "
    << (ok ? "yes" : "no");
  report(9, ok, d.str());
}

}  // namespace

int main() {
  criterion_swap_oracle();
  criterion_reference_round();
  criterion_key_rate();
  criterion_honest_sessions();
  criterion_entangle_detection();
  criterion_relay_detection();
  criterion_passive_listener();
  criterion_inference_round_trip();
  criterion_reproducibility();
  std::cout << "acceptance: " << (9 - failures) << "/9 criteria passed\n";
  return failures == 0 ? 0 : 1;
}
