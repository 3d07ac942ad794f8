#include <complex>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "swapqkd/adversary.hpp"
#include "swapqkd/bell.hpp"
#include "swapqkd/campaign.hpp"
#include "swapqkd/protocol.hpp"
#include "swapqkd/random.hpp"
#include "swapqkd/statevector.hpp"

namespace py = pybind11;

namespace {

using namespace swapqkd;

AttackModel parse_attack(const std::string& name, double overlap) {
  AttackModel model;
  model.overlap = overlap;
  if (name == "none") {
    model.kind = AttackKind::None;
  } else if (name == "passive") {
    model.kind = AttackKind::PassiveGuess;
  } else if (name == "entangle") {
    model.kind = AttackKind::EntangleSource;
  } else if (name == "mitm") {
    model.kind = AttackKind::ManInTheMiddle;
  } else {
    throw std::invalid_argument("unknown attack: " + name);
  }
  return model;
}

BitCode checked_code(int value) {
  if (value < 0 || value > 3) {
    throw std::invalid_argument("two-bit code must be in 0..3");
  }
  return BitCode{static_cast<std::uint8_t>(value)};
}

std::string key_string(const std::vector<std::uint8_t>& bits) {
  std::string s;
  s.reserve(bits.size());
  for (auto b : bits) s.push_back(b ? '1' : '0');
  return s;
}

py::dict session_dict(const SessionResult& r) {
  py::dict d;
  d["alice_key"] = key_string(r.alice_key);
  d["bob_key"] = key_string(r.bob_key);
  d["aborted"] = r.detection.aborted;
  d["checked_rounds"] = r.detection.checked_rounds;
  d["mismatches"] = r.detection.mismatches;
  d["rounds"] = static_cast<int>(r.per_round.size());
  d["eve_rounds"] = r.adversary.rounds_observed;
  d["eve_full_hits"] = r.adversary.full_round_hits;
  d["eve_certain_hits"] = r.adversary.certain_bit_hits;
  d["cross_side_matches"] = r.adversary.cross_side_matches;
  d["eve_known_bits"] = r.adversary.known_bits_total;
  d["json"] = session_result_json(r);
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "entanglement-swapping key distribution: label algebra, dense "
            "simulator, protocol sessions, adversaries";

  py::enum_<PauliOp>(m, "Pauli")
      .value("I", PauliOp::I)
      .value("X", PauliOp::X)
      .value("Y", PauliOp::Y)
      .value("Z", PauliOp::Z);

  py::class_<BellLabel>(m, "BellLabel")
      .def(py::init([](int x, int z) {
             return BellLabel{static_cast<std::uint8_t>(x & 1),
                              static_cast<std::uint8_t>(z & 1)};
           }),
           py::arg("x"), py::arg("z"))
      .def_readonly("x", &BellLabel::x)
      .def_readonly("z", &BellLabel::z)
      .def("__eq__",
           [](BellLabel a, const py::object& other) {
             return py::isinstance<BellLabel>(other) &&
                    a == other.cast<BellLabel>();
           })
      .def("__hash__", [](BellLabel l) { return (l.z << 1) | l.x; })
      .def("__xor__", [](BellLabel a, BellLabel b) { return a ^ b; })
      .def("__repr__",
           [](BellLabel l) { return std::string(bell_name(l)); });

  m.attr("PHI_PLUS") = phi_plus;
  m.attr("PSI_PLUS") = psi_plus;
  m.attr("PSI_MINUS") = psi_minus;
  m.attr("PHI_MINUS") = phi_minus;
  m.attr("ALL_BELL_LABELS") =
      std::vector<BellLabel>(all_bell_labels.begin(), all_bell_labels.end());

  // Label algebra.
  m.def("bell_code",
        [](BellLabel l) { return static_cast<int>(bell_to_code(l).value); },
        py::arg("label"), "public two-bit code of a Bell label");
  m.def("code_bell", [](int v) { return code_to_bell(checked_code(v)); },
        py::arg("code"));
  m.def("pauli_code",
        [](PauliOp op) { return static_cast<int>(pauli_to_code(op).value); },
        py::arg("op"));
  m.def("code_pauli", [](int v) { return code_to_pauli(checked_code(v)); },
        py::arg("code"));
  m.def("bell_name", [](BellLabel l) { return std::string(bell_name(l)); },
        py::arg("label"));
  m.def("pauli_name", [](PauliOp op) { return std::string(pauli_name(op)); },
        py::arg("op"));
  m.def("apply_pauli_first", &apply_pauli_first, py::arg("op"),
        py::arg("pair"),
        "label of a pair after the operator acts on its first particle");
  m.def("swap_residual", &swap_residual, py::arg("pair_a"), py::arg("pair_b"),
        py::arg("outcome"),
        "label left on the unmeasured particles after a cross-pair Bell "
        "measurement");
  m.def("infer_imaginary", &infer_imaginary, py::arg("pair_a"),
        py::arg("pair_b"), py::arg("residual"));
  m.def("infer_pauli", &infer_pauli, py::arg("announced"), py::arg("residual"),
        py::arg("pair_a"), py::arg("pair_b"),
        "operator recovered from the announced outcome and the measured "
        "residual");
  m.def("swap_distribution",
        [](BellLabel a, BellLabel b) {
          py::list out;
          for (const SwapTerm& t : swap_distribution(a, b)) {
            out.append(py::make_tuple(t.outcome, t.residual,
                                      t.probability.value()));
          }
          return out;
        },
        py::arg("pair_a"), py::arg("pair_b"),
        "list of (outcome, residual, probability)");

  // Deterministic randomness.
  py::class_<RandomStream>(m, "Rng")
      .def(py::init<std::uint64_t>(), py::arg("seed"));
  m.def("derive_seed", &derive_seed, py::arg("master"), py::arg("index"));

  // Dense oracle.
  py::class_<StateVector>(m, "StateVector")
      .def(py::init<int>(), py::arg("num_qubits"))
      .def(py::init<int, std::vector<std::complex<double>>>(),
           py::arg("num_qubits"), py::arg("amplitudes"))
      .def_property_readonly("num_qubits", &StateVector::num_qubits)
      .def_property_readonly("dimension", &StateVector::dimension)
      .def("amplitude", &StateVector::amplitude, py::arg("basis_index"))
      .def("amplitudes",
           [](const StateVector& s) { return s.amplitudes(); })
      .def("squared_norm", &StateVector::squared_norm);

  m.def("make_bell_pair", &make_bell_pair, py::arg("label"));
  m.def("make_entangled_source", &make_entangled_source, py::arg("overlap"));
  m.def("tensor", &tensor, py::arg("a"), py::arg("b"));
  m.def("apply_pauli", &apply_pauli, py::arg("state"), py::arg("qubit"),
        py::arg("op"));
  m.def("bell_probabilities",
        [](const StateVector& s, int q1, int q2) {
          auto p = bell_probabilities(s, q1, q2);
          return std::vector<double>(p.begin(), p.end());
        },
        py::arg("state"), py::arg("q1"), py::arg("q2"),
        "Born probabilities of the four Bell outcomes, indexed by code");
  m.def("project_bell",
        [](const StateVector& s, int q1, int q2, BellLabel outcome) {
          MeasureResult r = project_bell(s, q1, q2, outcome);
          return py::make_tuple(r.outcome, r.probability, r.post_state);
        },
        py::arg("state"), py::arg("q1"), py::arg("q2"), py::arg("outcome"));
  m.def("bell_measure",
        [](const StateVector& s, int q1, int q2, RandomStream& rng) {
          MeasureResult r = bell_measure(s, q1, q2, rng);
          return py::make_tuple(r.outcome, r.probability, r.post_state);
        },
        py::arg("state"), py::arg("q1"), py::arg("q2"), py::arg("rng"));
  m.def("identify_bell", &identify_bell, py::arg("state"),
        py::arg("tolerance") = 1e-9);

  // Protocol and adversaries.
  m.def("per_check_match_probability",
        [](const std::string& attack, double overlap) {
          return per_check_match_probability(parse_attack(attack, overlap));
        },
        py::arg("attack"), py::arg("overlap") = 0.0);
  m.def("detection_curve",
        [](const std::string& attack, int checks, double overlap) {
          return detection_curve(parse_attack(attack, overlap), checks);
        },
        py::arg("attack"), py::arg("checks"), py::arg("overlap") = 0.0);

  m.def("run_session",
        [](int rounds, double check_fraction, std::uint64_t seed,
           const std::string& attack, double overlap,
           const std::optional<std::vector<int>>& payload_bits) {
          SessionConfig cfg;
          cfg.rounds = rounds;
          cfg.check_fraction = check_fraction;
          cfg.seed = seed;
          cfg.attack = parse_attack(attack, overlap);
          if (payload_bits) {
            cfg.pauli_source = PauliSource::ExplicitBits;
            cfg.payload_bits.reserve(payload_bits->size());
            for (int b : *payload_bits) {
              cfg.payload_bits.push_back(b ? 1 : 0);
            }
          }
          return session_dict(run_session(cfg));
        },
        py::arg("rounds"), py::arg("check_fraction") = 0.0,
        py::arg("seed") = 0, py::arg("attack") = "none",
        py::arg("overlap") = 0.0, py::arg("payload_bits") = py::none(),
        "one full protocol session; returns a summary dict with a full "
        "JSON dump under 'json'");

  m.def("run_campaign",
        [](int sessions, int rounds, double check_fraction, std::uint64_t seed,
           const std::string& attack, double overlap, int parallel) {
          CampaignSpec spec;
          spec.sessions = sessions;
          spec.rounds = rounds;
          spec.check_fraction = check_fraction;
          spec.master_seed = seed;
          spec.attack = parse_attack(attack, overlap);
          spec.parallel = parallel;
          CampaignResult r = run_campaign(spec);
          py::list lines;
          for (const SessionSummary& s : r.sessions) {
            lines.append(session_record_line(s));
          }
          lines.append(aggregate_record_line(r.totals));
          py::dict d;
          d["exit_code"] = r.exit_code;
          d["lines"] = lines;
          d["key_rate"] = r.totals.key_rate.mean;
          d["abort_rate"] = r.totals.abort_rate.mean;
          d["match_rate"] = r.totals.match_rate.mean;
          d["known_bit_fraction"] = r.totals.known_bit_fraction;
          return d;
        },
        py::arg("sessions"), py::arg("rounds"),
        py::arg("check_fraction") = 0.0, py::arg("seed") = 0,
        py::arg("attack") = "none", py::arg("overlap") = 0.0,
        py::arg("parallel") = 1,
        "deterministic Monte Carlo campaign; returns the emitted records "
        "plus headline aggregates");

  m.def("run_sweep",
        [](const std::string& attack, double overlap,
           const std::vector<int>& k_values, int trials, std::uint64_t seed,
           int parallel) {
          CampaignSpec spec;
          spec.sessions = trials;
          spec.attack = parse_attack(attack, overlap);
          spec.k_values = k_values;
          spec.master_seed = seed;
          spec.parallel = parallel;
          py::list out;
          for (const SweepRow& row : run_sweep(spec)) {
            py::dict d;
            d["k"] = row.k;
            d["trials"] = row.trials;
            d["analytic"] = row.analytic;
            d["empirical"] = row.empirical;
            d["halfwidth"] = row.halfwidth;
            out.append(d);
          }
          return out;
        },
        py::arg("attack"), py::arg("overlap") = 0.0,
        py::arg("k_values") = std::vector<int>{1, 2, 4, 8},
        py::arg("trials") = 1000, py::arg("seed") = 0, py::arg("parallel") = 1,
        "empirical vs analytic detection probability per comparison count");

  m.def("verify",
        [] {
          py::list out;
          for (const VerifyCheck& c : run_verification()) {
            out.append(py::make_tuple(c.name, c.pass, c.detail));
          }
          return out;
        },
        "exhaustive cross-checks; list of (name, passed, detail)");

  m.attr("__version__") = "1.0.0";
}
