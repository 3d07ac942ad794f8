#include "swapqkd/campaign.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <ostream>
#include <stdexcept>
#include <thread>
#include <utility>

#include <json.hpp>

#include "swapqkd/adversary.hpp"
#include "swapqkd/bell.hpp"
#include "swapqkd/random.hpp"
#include "swapqkd/statevector.hpp"

namespace swapqkd {
namespace {

using ordered_json = nlohmann::ordered_json;

constexpr double kZ95 = 1.96;

double binomial_halfwidth(double p, long long n) {
  if (n <= 0) return 0.0;
  return kZ95 * std::sqrt(p * (1.0 - p) / static_cast<double>(n));
}

// Work-stealing over a bare index counter; results must be written to
// per-index slots so the outcome is independent of scheduling.
template <typename Body>
void parallel_for(int count, int workers, Body&& body) {
  if (workers <= 1 || count <= 1) {
    for (int i = 0; i < count; ++i) body(i);
    return;
  }
  const int pool_size = std::min(workers, count);
  std::atomic<int> next{0};
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(pool_size));
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(pool_size));
  for (int w = 0; w < pool_size; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) {
          body(i);
        }
      } catch (...) {
        errors[static_cast<std::size_t>(w)] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

std::string bits_to_string(const std::vector<std::uint8_t>& bits) {
  std::string s;
  s.reserve(bits.size());
  for (auto b : bits) s.push_back(b ? '1' : '0');
  return s;
}

std::string csv_bool(bool b) { return b ? "true" : "false"; }

// Shortest representation that parses back to the same double; keeps CSV
// and JSON output byte-reproducible across runs.
std::string csv_double(double v) { return nlohmann::json(v).dump(); }

constexpr const char* kCsvHeader =
    "record,sessions,session,seed,rounds,checked,mismatches,aborted,"
    "delivered_bits,match_rounds,keys_equal,eve_rounds,eve_full_hits,"
    "eve_certain_hits,cross_side_matches,eve_known_bits,key_rate,key_rate_hw,"
    "abort_rate,abort_rate_hw,match_rate,match_rate_hw,eve_full_guess_rate,"
    "eve_full_guess_rate_hw,known_bit_fraction";

std::string session_csv_row(const SessionSummary& s) {
  std::string row = "session,";
  row += ',';  // sessions column is aggregate-only
  row += std::to_string(s.session_index) + ',';
  row += std::to_string(s.seed) + ',';
  row += std::to_string(s.rounds) + ',';
  row += std::to_string(s.checked) + ',';
  row += std::to_string(s.mismatches) + ',';
  row += csv_bool(s.aborted) + ',';
  row += std::to_string(s.delivered_bits) + ',';
  row += std::to_string(s.match_rounds) + ',';
  row += csv_bool(s.keys_equal) + ',';
  row += std::to_string(s.eve_rounds) + ',';
  row += std::to_string(s.eve_full_hits) + ',';
  row += std::to_string(s.eve_certain_hits) + ',';
  row += std::to_string(s.cross_side_matches) + ',';
  row += std::to_string(s.eve_known_bits);
  row += ",,,,,,,,,";  // nine rate columns
  return row;
}

std::string aggregate_csv_row(const Aggregate& a) {
  std::string row = "aggregate,";
  row += std::to_string(a.sessions) + ',';
  row += ",,";  // session, seed
  row += std::to_string(a.total_rounds) + ',';
  row += std::to_string(a.total_checked) + ',';
  row += std::to_string(a.total_mismatches) + ',';
  row += ',';  // aborted
  row += std::to_string(a.total_delivered_bits) + ',';
  row += ",,,,,,,";  // match_rounds, keys_equal, four eve counters
  row += csv_double(a.key_rate.mean) + ',';
  row += csv_double(a.key_rate.halfwidth) + ',';
  row += csv_double(a.abort_rate.mean) + ',';
  row += csv_double(a.abort_rate.halfwidth) + ',';
  row += csv_double(a.match_rate.mean) + ',';
  row += csv_double(a.match_rate.halfwidth) + ',';
  row += csv_double(a.eve_full_guess_rate.mean) + ',';
  row += csv_double(a.eve_full_guess_rate.halfwidth) + ',';
  row += csv_double(a.known_bit_fraction);
  return row;
}

ordered_json message_json(const ClassicalMessage& message) {
  return ordered_json::parse(to_json_line(message));
}

SessionConfig session_config(const CampaignSpec& spec, std::uint64_t seed) {
  SessionConfig cfg;
  cfg.rounds = spec.rounds;
  cfg.check_fraction = spec.check_fraction;
  cfg.seed = seed;
  cfg.attack = spec.attack;
  return cfg;
}

bool round_is_clean(const RoundRecord& r) {
  return r.residual_24 ==
         expected_residual(r.pauli, r.initial_a, r.initial_b, r.announced_13);
}

// ---- verification suite ----

struct CheckBuilder {
  VerifyCheck check;
  int cases = 0;

  explicit CheckBuilder(std::string name) {
    check.name = std::move(name);
    check.pass = true;
  }

  void expect(bool ok, const std::string& what) {
    ++cases;
    if (!ok && check.pass) {
      check.pass = false;
      check.detail = "failed: " + what;
    }
  }

  VerifyCheck finish(const std::string& summary) {
    if (check.pass) check.detail = summary;
    return check;
  }
};

VerifyCheck check_bell_code_table() {
  CheckBuilder b("bell-code table");
  const std::pair<BellLabel, std::uint8_t> table[] = {
      {phi_plus, 0}, {psi_plus, 1}, {psi_minus, 2}, {phi_minus, 3}};
  for (const auto& [label, value] : table) {
    b.expect(bell_to_code(label).value == value,
             std::string(bell_name(label)) + " -> " +
                 std::string(code_str(BitCode{value})));
    b.expect(code_to_bell(BitCode{value}) == label,
             std::string(code_str(BitCode{value})) + " -> " +
                 std::string(bell_name(label)));
  }
  return b.finish("4 labels round-trip");
}

VerifyCheck check_pauli_code_table() {
  CheckBuilder b("pauli-code table");
  const std::pair<PauliOp, std::uint8_t> table[] = {{PauliOp::I, 0},
                                                    {PauliOp::X, 1},
                                                    {PauliOp::Y, 2},
                                                    {PauliOp::Z, 3}};
  for (const auto& [op, value] : table) {
    b.expect(pauli_to_code(op).value == value,
             std::string(pauli_name(op)) + " code");
    b.expect(code_to_pauli(BitCode{value}) == op,
             std::string(code_str(BitCode{value})) + " operator");
  }
  return b.finish("4 operators round-trip");
}

VerifyCheck check_pauli_action() {
  CheckBuilder b("pauli action on labels");
  b.expect(apply_pauli_first(PauliOp::X, phi_plus) == psi_plus, "X phi+");
  b.expect(apply_pauli_first(PauliOp::Y, phi_plus) == psi_minus, "Y phi+");
  b.expect(apply_pauli_first(PauliOp::Z, phi_plus) == phi_minus, "Z phi+");
  b.expect(apply_pauli_first(PauliOp::I, phi_plus) == phi_plus, "I phi+");
  for (PauliOp op : {PauliOp::I, PauliOp::X, PauliOp::Y, PauliOp::Z}) {
    bool seen[4] = {false, false, false, false};
    for (BellLabel label : all_bell_labels) {
      BellLabel moved = apply_pauli_first(op, label);
      b.expect(apply_pauli_first(op, moved) == label, "involution");
      seen[bell_to_code(moved).value] = true;
    }
    b.expect(seen[0] && seen[1] && seen[2] && seen[3], "permutation");
  }
  return b.finish("16 involutions, 4 permutations");
}

VerifyCheck check_xor_law() {
  CheckBuilder b("swap rule xor law");
  for (BellLabel a : all_bell_labels) {
    for (BellLabel o : all_bell_labels) {
      for (BellLabel label_b : all_bell_labels) {
        BellLabel r = swap_residual(a, label_b, o);
        bool ok = r.x == static_cast<std::uint8_t>(a.x ^ label_b.x ^ o.x) &&
                  r.z == static_cast<std::uint8_t>(a.z ^ label_b.z ^ o.z);
        b.expect(ok, "componentwise xor");
        b.expect(infer_imaginary(a, label_b, r) == o, "inverse");
      }
    }
  }
  return b.finish("64 triples");
}

VerifyCheck check_pairing_table() {
  CheckBuilder b("cross-pair measurement table");
  // phi+ on particles 1,2 and psi- on 3,4; measuring 2 and 3 leaves 1 and 4
  // in the partner state of the observed outcome.
  const std::pair<BellLabel, BellLabel> table[] = {{phi_plus, psi_minus},
                                                   {psi_plus, phi_minus},
                                                   {psi_minus, phi_plus},
                                                   {phi_minus, psi_plus}};
  StateVector state = tensor(make_bell_pair(phi_plus), make_bell_pair(psi_minus));
  auto probs = bell_probabilities(state, 1, 2);
  for (const auto& [outcome, residual] : table) {
    b.expect(swap_residual(phi_plus, psi_minus, outcome) == residual,
             "label rule for " + std::string(bell_name(outcome)));
    double p = probs[bell_to_code(outcome).value];
    b.expect(std::abs(p - 0.25) <= 1e-12, "probability 1/4");
    StateVector post = project_bell(state, 1, 2, outcome).post_state;
    auto rest = bell_probabilities(post, 0, 3);
    b.expect(rest[bell_to_code(residual).value] >= 1.0 - 1e-9,
             "residual " + std::string(bell_name(residual)));
  }
  return b.finish("4 outcomes at 1/4 with matching residuals");
}

VerifyCheck check_oracle_equivalence() {
  CheckBuilder b("label algebra vs dense simulator");
  // Both cross-pair measurement choices obey the same rule.
  const std::pair<std::pair<int, int>, std::pair<int, int>> pairings[] = {
      {{0, 2}, {1, 3}}, {{1, 2}, {0, 3}}};
  for (BellLabel a : all_bell_labels) {
    for (BellLabel label_b : all_bell_labels) {
      StateVector state =
          tensor(make_bell_pair(a), make_bell_pair(label_b));
      auto dist = swap_distribution(a, label_b);
      for (const auto& [measured, kept] : pairings) {
        auto probs = bell_probabilities(state, measured.first, measured.second);
        for (const SwapTerm& term : dist) {
          int code = bell_to_code(term.outcome).value;
          b.expect(std::abs(probs[code] - term.probability.value()) <= 1e-12,
                   "outcome probability");
          b.expect(term.residual == swap_residual(a, label_b, term.outcome),
                   "distribution residual");
          StateVector post =
              project_bell(state, measured.first, measured.second, term.outcome)
                  .post_state;
          auto rest = bell_probabilities(post, kept.first, kept.second);
          b.expect(rest[bell_to_code(term.residual).value] >= 1.0 - 1e-9,
                   "projected residual");
        }
      }
    }
  }
  return b.finish("16 pairs, both pairings, 128 projections");
}

VerifyCheck check_inference_round_trip() {
  CheckBuilder b("operator inference round-trip");
  for (PauliOp op : {PauliOp::I, PauliOp::X, PauliOp::Y, PauliOp::Z}) {
    for (BellLabel a : all_bell_labels) {
      for (BellLabel label_b : all_bell_labels) {
        for (BellLabel announced : all_bell_labels) {
          BellLabel residual =
              swap_residual(apply_pauli_first(op, a), label_b, announced);
          b.expect(infer_pauli(announced, residual, a, label_b) == op,
                   "recovered operator");
          b.expect(infer_imaginary(a, label_b, residual) ==
                       (announced ^ pauli_shift(op)),
                   "imaginary displacement");
        }
      }
    }
  }
  return b.finish("256 round-trips");
}

VerifyCheck check_reference_round() {
  CheckBuilder b("reference round trace");
  AliceRound alice = alice_round(PauliOp::X, psi_minus);
  b.expect(alice.record.residual_24 == phi_minus, "residual label");
  b.expect(alice.record.imaginary_13 == phi_minus, "imaginary label");
  const std::uint8_t expected_bits[6] = {0, 1, 1, 1, 1, 0};
  for (int i = 0; i < 6; ++i) {
    b.expect(alice.record.key_bits[static_cast<std::size_t>(i)] ==
                 expected_bits[i],
             "alice key bit " + std::to_string(i));
  }
  BobRound bob = bob_round(alice.channel_24, psi_minus, phi_plus, phi_plus);
  b.expect(bob.inferred_pauli == PauliOp::X, "inferred operator");
  b.expect(bob.imaginary_13 == phi_minus, "bob imaginary");
  for (int i = 0; i < 6; ++i) {
    b.expect(bob.key_bits[static_cast<std::size_t>(i)] == expected_bits[i],
             "bob key bit " + std::to_string(i));
  }
  // Same trace on the dense simulator.
  StateVector state = tensor(make_bell_pair(phi_plus), make_bell_pair(phi_plus));
  state = apply_pauli(state, 0, PauliOp::X);
  auto probs = bell_probabilities(state, 0, 2);
  b.expect(std::abs(probs[bell_to_code(psi_minus).value] - 0.25) <= 1e-12,
           "forced outcome probability");
  StateVector post = project_bell(state, 0, 2, psi_minus).post_state;
  auto rest = bell_probabilities(post, 1, 3);
  b.expect(rest[bell_to_code(phi_minus).value] >= 1.0 - 1e-9,
           "simulated residual");
  return b.finish("key bits 011110 on both sides");
}

}  // namespace

SessionSummary summarize(const SessionResult& result, int session_index,
                         std::uint64_t seed) {
  SessionSummary s;
  s.session_index = session_index;
  s.seed = seed;
  s.rounds = static_cast<int>(result.per_round.size());
  s.checked = result.detection.checked_rounds;
  s.mismatches = result.detection.mismatches;
  s.aborted = result.detection.aborted;
  s.delivered_bits = static_cast<int>(result.alice_key.size());
  s.match_rounds = static_cast<int>(
      std::count_if(result.per_round.begin(), result.per_round.end(),
                    round_is_clean));
  s.keys_equal = result.alice_key == result.bob_key;
  s.eve_rounds = result.adversary.rounds_observed;
  s.eve_full_hits = result.adversary.full_round_hits;
  s.eve_certain_hits = result.adversary.certain_bit_hits;
  s.cross_side_matches = result.adversary.cross_side_matches;
  s.eve_known_bits = result.adversary.known_bits_total;
  return s;
}

Aggregate aggregate(const std::vector<SessionSummary>& summaries) {
  Aggregate a;
  a.sessions = static_cast<int>(summaries.size());
  if (summaries.empty()) return a;

  long long aborts = 0;
  long long match_rounds = 0;
  long long eve_rounds = 0;
  long long eve_full_hits = 0;
  long long eve_known_bits = 0;
  double rate_sum = 0.0;
  for (const SessionSummary& s : summaries) {
    a.total_rounds += s.rounds;
    a.total_checked += s.checked;
    a.total_mismatches += s.mismatches;
    a.total_delivered_bits += s.delivered_bits;
    aborts += s.aborted ? 1 : 0;
    match_rounds += s.match_rounds;
    eve_rounds += s.eve_rounds;
    eve_full_hits += s.eve_full_hits;
    eve_known_bits += s.eve_known_bits;
    rate_sum += static_cast<double>(s.delivered_bits) /
                static_cast<double>(s.rounds);
  }

  const auto n = static_cast<double>(summaries.size());
  a.key_rate.mean = rate_sum / n;
  if (summaries.size() >= 2) {
    double ss = 0.0;
    for (const SessionSummary& s : summaries) {
      double r = static_cast<double>(s.delivered_bits) /
                 static_cast<double>(s.rounds);
      ss += (r - a.key_rate.mean) * (r - a.key_rate.mean);
    }
    a.key_rate.halfwidth = kZ95 * std::sqrt(ss / (n - 1.0) / n);
  }

  a.abort_rate.mean = static_cast<double>(aborts) / n;
  a.abort_rate.halfwidth = binomial_halfwidth(a.abort_rate.mean, a.sessions);

  a.match_rate.mean =
      static_cast<double>(match_rounds) / static_cast<double>(a.total_rounds);
  a.match_rate.halfwidth =
      binomial_halfwidth(a.match_rate.mean, a.total_rounds);

  if (eve_rounds > 0) {
    a.eve_full_guess_rate.mean =
        static_cast<double>(eve_full_hits) / static_cast<double>(eve_rounds);
    a.eve_full_guess_rate.halfwidth =
        binomial_halfwidth(a.eve_full_guess_rate.mean, eve_rounds);
    a.known_bit_fraction = static_cast<double>(eve_known_bits) /
                           (6.0 * static_cast<double>(eve_rounds));
  }
  return a;
}

CampaignResult run_campaign(const CampaignSpec& spec, bool keep_transcripts) {
  if (spec.sessions < 1) throw std::invalid_argument("sessions must be >= 1");
  if (spec.parallel < 1) throw std::invalid_argument("parallel must be >= 1");

  CampaignResult result;
  result.spec = spec;
  result.sessions.resize(static_cast<std::size_t>(spec.sessions));
  std::vector<std::vector<std::string>> transcripts;
  if (keep_transcripts) {
    transcripts.resize(static_cast<std::size_t>(spec.sessions));
  }

  parallel_for(spec.sessions, spec.parallel, [&](int i) {
    const std::uint64_t seed =
        derive_seed(spec.master_seed, static_cast<std::uint64_t>(i));
    SessionResult session = run_session(session_config(spec, seed));
    result.sessions[static_cast<std::size_t>(i)] = summarize(session, i, seed);
    if (keep_transcripts) {
      auto& lines = transcripts[static_cast<std::size_t>(i)];
      lines.reserve(session.transcript.size());
      for (const ClassicalMessage& m : session.transcript) {
        ordered_json j{{"session", i}};
        j.update(message_json(m));
        lines.push_back(j.dump());
      }
    }
  });

  result.totals = aggregate(result.sessions);
  const bool all_aborted =
      std::all_of(result.sessions.begin(), result.sessions.end(),
                  [](const SessionSummary& s) { return s.aborted; });
  result.exit_code = all_aborted ? 2 : 0;
  if (keep_transcripts) {
    for (auto& lines : transcripts) {
      result.transcript_lines.insert(result.transcript_lines.end(),
                                     std::make_move_iterator(lines.begin()),
                                     std::make_move_iterator(lines.end()));
    }
  }
  return result;
}

std::vector<SweepRow> run_sweep(const CampaignSpec& spec) {
  if (spec.sessions < 1) throw std::invalid_argument("sessions must be >= 1");
  if (spec.parallel < 1) throw std::invalid_argument("parallel must be >= 1");
  for (int k : spec.k_values) {
    if (k < 0) throw std::invalid_argument("sweep k must be >= 0");
  }

  std::vector<SweepRow> rows;
  rows.reserve(spec.k_values.size());
  for (int k : spec.k_values) {
    SweepRow row;
    row.k = k;
    row.trials = spec.sessions;
    row.analytic = detection_curve(spec.attack, k);
    if (k > 0) {
      // One trial = a session of exactly k rounds with every round compared.
      std::vector<std::uint8_t> detected(
          static_cast<std::size_t>(spec.sessions), 0);
      const std::uint64_t k_seed =
          derive_seed(spec.master_seed, static_cast<std::uint64_t>(k));
      CampaignSpec trial_spec = spec;
      trial_spec.rounds = k;
      trial_spec.check_fraction = 0.0;
      parallel_for(spec.sessions, spec.parallel, [&](int t) {
        const std::uint64_t seed =
            derive_seed(k_seed, static_cast<std::uint64_t>(t));
        SessionResult session = run_session(session_config(trial_spec, seed));
        bool hit = !std::all_of(session.per_round.begin(),
                                session.per_round.end(), round_is_clean);
        detected[static_cast<std::size_t>(t)] = hit ? 1 : 0;
      });
      long long hits = std::count(detected.begin(), detected.end(),
                                  static_cast<std::uint8_t>(1));
      row.empirical =
          static_cast<double>(hits) / static_cast<double>(spec.sessions);
      row.halfwidth = binomial_halfwidth(row.empirical, spec.sessions);
    }
    rows.push_back(row);
  }
  return rows;
}

std::vector<VerifyCheck> run_verification() {
  return {check_bell_code_table(),      check_pauli_code_table(),
          check_pauli_action(),         check_xor_law(),
          check_pairing_table(),        check_oracle_equivalence(),
          check_inference_round_trip(), check_reference_round()};
}

std::string session_record_line(const SessionSummary& s) {
  ordered_json j{{"schema", "swapqkd.session.v1"},
                 {"session", s.session_index},
                 {"seed", s.seed},
                 {"rounds", s.rounds},
                 {"checked", s.checked},
                 {"mismatches", s.mismatches},
                 {"aborted", s.aborted},
                 {"delivered_bits", s.delivered_bits},
                 {"match_rounds", s.match_rounds},
                 {"keys_equal", s.keys_equal},
                 {"eve_rounds", s.eve_rounds},
                 {"eve_full_hits", s.eve_full_hits},
                 {"eve_certain_hits", s.eve_certain_hits},
                 {"cross_side_matches", s.cross_side_matches},
                 {"eve_known_bits", s.eve_known_bits}};
  return j.dump();
}

SessionSummary parse_session_record(const std::string& line) {
  const auto j = nlohmann::json::parse(line);
  if (j.at("schema").get<std::string>() != "swapqkd.session.v1") {
    throw std::invalid_argument("not a session record");
  }
  SessionSummary s;
  s.session_index = j.at("session").get<int>();
  s.seed = j.at("seed").get<std::uint64_t>();
  s.rounds = j.at("rounds").get<int>();
  s.checked = j.at("checked").get<int>();
  s.mismatches = j.at("mismatches").get<int>();
  s.aborted = j.at("aborted").get<bool>();
  s.delivered_bits = j.at("delivered_bits").get<int>();
  s.match_rounds = j.at("match_rounds").get<int>();
  s.keys_equal = j.at("keys_equal").get<bool>();
  s.eve_rounds = j.at("eve_rounds").get<int>();
  s.eve_full_hits = j.at("eve_full_hits").get<int>();
  s.eve_certain_hits = j.at("eve_certain_hits").get<int>();
  s.cross_side_matches = j.at("cross_side_matches").get<int>();
  s.eve_known_bits = j.at("eve_known_bits").get<long long>();
  return s;
}

std::string aggregate_record_line(const Aggregate& a) {
  ordered_json j{
      {"schema", "swapqkd.aggregate.v1"},
      {"sessions", a.sessions},
      {"total_rounds", a.total_rounds},
      {"total_checked", a.total_checked},
      {"total_mismatches", a.total_mismatches},
      {"total_delivered_bits", a.total_delivered_bits},
      {"key_rate",
       {{"mean", a.key_rate.mean}, {"halfwidth", a.key_rate.halfwidth}}},
      {"abort_rate",
       {{"mean", a.abort_rate.mean}, {"halfwidth", a.abort_rate.halfwidth}}},
      {"match_rate",
       {{"mean", a.match_rate.mean}, {"halfwidth", a.match_rate.halfwidth}}},
      {"eve_full_guess_rate",
       {{"mean", a.eve_full_guess_rate.mean},
        {"halfwidth", a.eve_full_guess_rate.halfwidth}}},
      {"known_bit_fraction", a.known_bit_fraction}};
  return j.dump();
}

void write_campaign(std::ostream& out, const CampaignResult& result) {
  if (result.spec.format == OutputFormat::Csv) {
    out << kCsvHeader << '\n';
    for (const SessionSummary& s : result.sessions) {
      out << session_csv_row(s) << '\n';
    }
    out << aggregate_csv_row(result.totals) << '\n';
    return;
  }
  for (const SessionSummary& s : result.sessions) {
    out << session_record_line(s) << '\n';
  }
  out << aggregate_record_line(result.totals) << '\n';
}

void write_sweep(std::ostream& out, const std::vector<SweepRow>& rows,
                 OutputFormat format) {
  if (format == OutputFormat::Csv) {
    out << "k,trials,analytic,empirical,halfwidth\n";
    for (const SweepRow& r : rows) {
      out << r.k << ',' << r.trials << ',' << csv_double(r.analytic) << ','
          << csv_double(r.empirical) << ',' << csv_double(r.halfwidth) << '\n';
    }
    return;
  }
  for (const SweepRow& r : rows) {
    ordered_json j{{"schema", "swapqkd.sweep.v1"}, {"k", r.k},
                   {"trials", r.trials},           {"analytic", r.analytic},
                   {"empirical", r.empirical},     {"halfwidth", r.halfwidth}};
    out << j.dump() << '\n';
  }
}

void write_verification(std::ostream& out,
                        const std::vector<VerifyCheck>& checks) {
  std::size_t passed = 0;
  for (const VerifyCheck& c : checks) {
    out << (c.pass ? "[PASS] " : "[FAIL] ") << c.name << ": " << c.detail
        << '\n';
    if (c.pass) ++passed;
  }
  out << "verification: " << passed << '/' << checks.size()
      << " checks passed\n";
}

std::string session_result_json(const SessionResult& result) {
  ordered_json rounds = ordered_json::array();
  for (const RoundRecord& r : result.per_round) {
    std::string bits;
    for (std::uint8_t bit : r.key_bits) bits.push_back(bit ? '1' : '0');
    rounds.push_back(ordered_json{
        {"round", r.round_index},
        {"initial_a", bell_name(r.initial_a)},
        {"initial_b", bell_name(r.initial_b)},
        {"pauli", pauli_name(r.pauli)},
        {"announced", code_str(bell_to_code(r.announced_13))},
        {"residual", code_str(bell_to_code(r.residual_24))},
        {"imaginary", code_str(bell_to_code(r.imaginary_13))},
        {"inferred_pauli", pauli_name(r.inferred_pauli)},
        {"key_bits", bits}});
  }
  ordered_json transcript = ordered_json::array();
  for (const ClassicalMessage& m : result.transcript) {
    transcript.push_back(message_json(m));
  }
  ordered_json j{
      {"schema", "swapqkd.session_result.v1"},
      {"alice_key", bits_to_string(result.alice_key)},
      {"bob_key", bits_to_string(result.bob_key)},
      {"detection",
       {{"checked_rounds", result.detection.checked_rounds},
        {"mismatches", result.detection.mismatches},
        {"aborted", result.detection.aborted}}},
      {"adversary",
       {{"attack", attack_name(result.adversary.model.kind)},
        {"overlap", result.adversary.model.overlap},
        {"rounds_observed", result.adversary.rounds_observed},
        {"full_round_hits", result.adversary.full_round_hits},
        {"certain_bit_hits", result.adversary.certain_bit_hits},
        {"cross_side_matches", result.adversary.cross_side_matches},
        {"known_bits_total", result.adversary.known_bits_total}}},
      {"rounds", rounds},
      {"transcript", transcript}};
  return j.dump();
}

}  // namespace swapqkd
