"""End-to-end smoke tests for the python module."""

import json
import math

import pytest

import swapqkd as sq


def test_label_code_round_trip():
    assert [sq.bell_code(l) for l in sq.ALL_BELL_LABELS] == [0, 1, 2, 3]
    for code in range(4):
        assert sq.bell_code(sq.code_bell(code)) == code
        assert sq.pauli_code(sq.code_pauli(code)) == code
    assert sq.bell_name(sq.PSI_MINUS) == "psi-"
    assert sq.PHI_PLUS ^ sq.PSI_MINUS == sq.PSI_MINUS
    with pytest.raises(ValueError):
        sq.code_bell(4)


def test_swap_rule_matches_dense_simulator():
    for a in sq.ALL_BELL_LABELS:
        for b in sq.ALL_BELL_LABELS:
            joint = sq.tensor(sq.make_bell_pair(a), sq.make_bell_pair(b))
            probs = sq.bell_probabilities(joint, 0, 2)
            assert all(abs(p - 0.25) < 1e-12 for p in probs)
            for outcome, residual, prob in sq.swap_distribution(a, b):
                assert prob == 0.25
                _, p, post = sq.project_bell(joint, 0, 2, outcome)
                assert math.isclose(p, 0.25, abs_tol=1e-12)
                partner = sq.bell_probabilities(post, 1, 3)
                assert partner[sq.bell_code(residual)] > 1 - 1e-9


def test_operator_inference():
    announced = sq.PSI_MINUS
    shifted = sq.apply_pauli_first(sq.Pauli.X, sq.PHI_PLUS)
    residual = sq.swap_residual(shifted, sq.PHI_PLUS, announced)
    assert residual == sq.PHI_MINUS
    assert sq.infer_pauli(announced, residual, sq.PHI_PLUS, sq.PHI_PLUS) \
        == sq.Pauli.X
    assert sq.infer_imaginary(sq.PHI_PLUS, sq.PHI_PLUS, residual) \
        == sq.PHI_MINUS


def test_session_is_deterministic_and_honest():
    first = sq.run_session(rounds=40, check_fraction=0.25, seed=7)
    second = sq.run_session(rounds=40, check_fraction=0.25, seed=7)
    assert first["json"] == second["json"]
    assert not first["aborted"]
    assert first["alice_key"] == first["bob_key"]
    assert len(first["alice_key"]) == 6 * (40 - first["checked_rounds"])

    doc = json.loads(first["json"])
    assert doc["schema"] == "swapqkd.session_result.v1"
    assert len(doc["rounds"]) == 40


def test_payload_rides_the_certain_bits():
    payload = [1, 0, 1, 1, 0, 0, 1, 0]
    result = sq.run_session(rounds=4, seed=3, payload_bits=payload)
    key = result["bob_key"]
    for i in range(4):
        assert key[6 * i] == str(payload[2 * i])
        assert key[6 * i + 1] == str(payload[2 * i + 1])


def test_detection_math():
    assert sq.per_check_match_probability("none") == 1.0
    assert sq.per_check_match_probability("mitm") == 0.25
    assert sq.per_check_match_probability("entangle", overlap=0.6) == \
        pytest.approx((1 + 0.36) / 2)
    assert sq.detection_curve("mitm", 2) == pytest.approx(1 - 0.0625)


def test_campaign_exit_codes():
    honest = sq.run_campaign(sessions=5, rounds=20, check_fraction=0.2, seed=1)
    assert honest["exit_code"] == 0
    assert honest["key_rate"] > 0
    assert len(honest["lines"]) == 6

    relayed = sq.run_campaign(sessions=5, rounds=60, check_fraction=0.4,
                              seed=1, attack="mitm")
    assert relayed["exit_code"] == 2
    assert relayed["abort_rate"] == 1.0


def test_sweep_rows():
    rows = sq.run_sweep("mitm", k_values=[1, 2], trials=400, seed=9)
    assert [r["k"] for r in rows] == [1, 2]
    for row in rows:
        assert row["trials"] == 400
        assert abs(row["empirical"] - row["analytic"]) <= 0.05


def test_statevector_surface():
    pair = sq.make_bell_pair(sq.PHI_PLUS)
    assert pair.num_qubits == 2
    assert pair.squared_norm() == pytest.approx(1.0)
    assert sq.identify_bell(pair) == sq.PHI_PLUS
    flipped = sq.apply_pauli(pair, 0, sq.Pauli.X)
    assert sq.identify_bell(flipped) == sq.PSI_PLUS

    rng = sq.Rng(seed=5)
    outcome, prob, _ = sq.bell_measure(sq.make_bell_pair(sq.PSI_MINUS),
                                       0, 1, rng)
    assert outcome == sq.PSI_MINUS
    assert prob == pytest.approx(1.0)

    ghz = sq.make_entangled_source(0.0)
    assert ghz.num_qubits == 3
    assert ghz.amplitude(0b000) == pytest.approx(1 / math.sqrt(2))
    assert ghz.amplitude(0b111) == pytest.approx(1 / math.sqrt(2))


def test_verify_suite_passes():
    checks = sq.verify()
    assert len(checks) == 8
    assert all(passed for _, passed, _ in checks)
