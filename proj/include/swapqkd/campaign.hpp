#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "swapqkd/protocol.hpp"

namespace swapqkd {

enum class OutputFormat : std::uint8_t { JsonLines, Csv };

/// A deterministic Monte Carlo campaign: `sessions` independent protocol
/// sessions, each seeded from (master_seed, session index).
struct CampaignSpec {
  int sessions = 100;
  int rounds = 100;
  double check_fraction = 0.0;
  AttackModel attack{};
  std::uint64_t master_seed = 0;
  OutputFormat format = OutputFormat::JsonLines;
  int parallel = 1;
  std::vector<int> k_values = {1, 2, 4, 8};  // sweep only
};

/// Everything the aggregate is computed from; one record per session.
struct SessionSummary {
  int session_index = 0;
  std::uint64_t seed = 0;
  int rounds = 0;
  int checked = 0;
  int mismatches = 0;
  bool aborted = false;
  int delivered_bits = 0;  // per party; zero when aborted
  int match_rounds = 0;    // rounds whose residual met the expectation
  bool keys_equal = false;
  int eve_rounds = 0;
  int eve_full_hits = 0;
  int eve_certain_hits = 0;
  int cross_side_matches = 0;
  long long eve_known_bits = 0;
};

struct RateEstimate {
  double mean = 0.0;
  double halfwidth = 0.0;  // 95% normal-approximation half-width
};

struct Aggregate {
  int sessions = 0;
  long long total_rounds = 0;
  long long total_checked = 0;
  long long total_mismatches = 0;
  long long total_delivered_bits = 0;
  RateEstimate key_rate;  // key bits per round, averaged across sessions
  RateEstimate abort_rate;
  RateEstimate match_rate;  // per-round residual agreement
  RateEstimate eve_full_guess_rate;
  double known_bit_fraction = 0.0;
};

SessionSummary summarize(const SessionResult& result, int session_index,
                         std::uint64_t seed);

/// Associative, order-fixed reduction of the per-session records; the
/// aggregate is exactly recomputable from the emitted summaries.
Aggregate aggregate(const std::vector<SessionSummary>& summaries);

struct CampaignResult {
  CampaignSpec spec;
  std::vector<SessionSummary> sessions;
  Aggregate totals;
  // 0 on success, 2 when every session aborted (attack detected everywhere).
  int exit_code = 0;
  // One JSON line per classical message, tagged with its session index;
  // filled only when requested.
  std::vector<std::string> transcript_lines;
};

CampaignResult run_campaign(const CampaignSpec& spec,
                            bool keep_transcripts = false);

/// Empirical vs analytic detection probability for `k` verification
/// comparisons: `spec.sessions` independent trials of exactly k compared
/// rounds each, per k.
struct SweepRow {
  int k = 0;
  int trials = 0;
  double analytic = 0.0;
  double empirical = 0.0;
  double halfwidth = 0.0;
};

std::vector<SweepRow> run_sweep(const CampaignSpec& spec);

/// One entry of the exhaustive verification suite.
struct VerifyCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// The full oracle-equivalence suite: encoding tables, Pauli action,
/// the swapping rule against the dense simulator for all label pairs and
/// outcomes, inference round-trips, and the reference round trace.
std::vector<VerifyCheck> run_verification();

// ---- serialization ----

std::string session_record_line(const SessionSummary& summary);
std::string aggregate_record_line(const Aggregate& totals);
SessionSummary parse_session_record(const std::string& line);

/// Campaign records in the chosen format: one record per session followed
/// by the aggregate. Identical spec and seed give identical bytes.
void write_campaign(std::ostream& out, const CampaignResult& result);
void write_sweep(std::ostream& out, const std::vector<SweepRow>& rows,
                 OutputFormat format);
void write_verification(std::ostream& out,
                        const std::vector<VerifyCheck>& checks);

/// Full session dump (keys, detection, per-round records, transcript) as
/// one JSON document; the determinism contract is byte-identity of this.
std::string session_result_json(const SessionResult& result);

}  // namespace swapqkd
