// swapqkd: deterministic simulator for the swapping-based key protocol.
//
// Exit codes: 0 success, 1 internal or verification failure,
// 2 every session aborted on a detected attack, 3 bad arguments.

#include <cstdint>
#include <exception>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "swapqkd/adversary.hpp"
#include "swapqkd/campaign.hpp"

namespace {

using swapqkd::AttackKind;
using swapqkd::CampaignSpec;
using swapqkd::OutputFormat;

struct CommonOptions {
  CampaignSpec spec;
  std::string attack = "none";
  std::string format = "json";
  std::string out_path;
  std::string transcript_path;
};

const std::map<std::string, AttackKind> kAttackNames = {
    {"none", AttackKind::None},
    {"passive", AttackKind::PassiveGuess},
    {"entangle", AttackKind::EntangleSource},
    {"mitm", AttackKind::ManInTheMiddle}};

void add_common_flags(CLI::App& cmd, CommonOptions& opts, bool with_attack) {
  cmd.add_option("--sessions", opts.spec.sessions, "independent sessions")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd.add_option("--rounds", opts.spec.rounds, "rounds per session")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd.add_option("--check-fraction", opts.spec.check_fraction,
                 "fraction of rounds revealed for verification, in [0,1)")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  cmd.add_option("--seed", opts.spec.master_seed, "master seed")
      ->capture_default_str();
  cmd.add_option("--format", opts.format, "output format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  cmd.add_option("--out", opts.out_path, "write records to this file");
  cmd.add_option("--parallel", opts.spec.parallel, "worker threads")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  if (with_attack) {
    cmd.add_option("--attack", opts.attack, "adversary model")
        ->check(CLI::IsMember({"none", "passive", "entangle", "mitm"}))
        ->capture_default_str();
    cmd.add_option("--overlap", opts.spec.attack.overlap,
                   "source-attack ancilla overlap, in [0,1]")
        ->check(CLI::Range(0.0, 1.0))
        ->capture_default_str();
  }
}

void finalize(CommonOptions& opts) {
  opts.spec.attack.kind = kAttackNames.at(opts.attack);
  opts.spec.format =
      opts.format == "csv" ? OutputFormat::Csv : OutputFormat::JsonLines;
  if (opts.spec.check_fraction >= 1.0) {
    throw std::invalid_argument("--check-fraction must be below 1");
  }
}

std::ostream& open_sink(const std::string& path, std::ofstream& file) {
  if (path.empty()) return std::cout;
  file.open(path);
  if (!file) throw std::runtime_error("cannot open output file: " + path);
  return file;
}

int run_and_write(CommonOptions& opts) {
  finalize(opts);
  const bool want_transcript = !opts.transcript_path.empty();
  swapqkd::CampaignResult result =
      swapqkd::run_campaign(opts.spec, want_transcript);

  std::ofstream file;
  swapqkd::write_campaign(open_sink(opts.out_path, file), result);

  if (want_transcript) {
    std::ofstream tf(opts.transcript_path);
    if (!tf) {
      throw std::runtime_error("cannot open transcript file: " +
                               opts.transcript_path);
    }
    for (const std::string& line : result.transcript_lines) tf << line << '\n';
  }
  return result.exit_code;
}

int run_sweep_and_write(CommonOptions& opts) {
  finalize(opts);
  if (opts.spec.attack.kind == AttackKind::None) {
    throw std::invalid_argument("sweep needs --attack passive|entangle|mitm");
  }
  auto rows = swapqkd::run_sweep(opts.spec);
  std::ofstream file;
  swapqkd::write_sweep(open_sink(opts.out_path, file), rows, opts.spec.format);
  return 0;
}

int run_verify() {
  auto checks = swapqkd::run_verification();
  swapqkd::write_verification(std::cout, checks);
  for (const auto& c : checks) {
    if (!c.pass) return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"swapping-based key distribution simulator"};
  app.require_subcommand(1);

  CLI::App* verify = app.add_subcommand(
      "verify", "exhaustive label-algebra and simulator cross-checks");

  CommonOptions run_opts;
  CLI::App* run = app.add_subcommand("run", "honest Monte Carlo sessions");
  add_common_flags(*run, run_opts, /*with_attack=*/false);
  run->add_option("--dump-transcript", run_opts.transcript_path,
                  "write per-message JSON lines to this file");

  CommonOptions attack_opts;
  attack_opts.attack = "passive";
  CLI::App* attack =
      app.add_subcommand("attack", "sessions against an adversary");
  add_common_flags(*attack, attack_opts, /*with_attack=*/true);
  attack->add_option("--dump-transcript", attack_opts.transcript_path,
                     "write per-message JSON lines to this file");

  CommonOptions sweep_opts;
  sweep_opts.spec.sessions = 1000;
  CLI::App* sweep = app.add_subcommand(
      "sweep", "detection probability vs number of verification comparisons");
  add_common_flags(*sweep, sweep_opts, /*with_attack=*/true);
  sweep->add_option("--k", sweep_opts.spec.k_values,
                    "comparison counts to sweep")
      ->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 3;
  }

  try {
    if (verify->parsed()) return run_verify();
    if (run->parsed()) return run_and_write(run_opts);
    if (attack->parsed()) return run_and_write(attack_opts);
    if (sweep->parsed()) return run_sweep_and_write(sweep_opts);
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
