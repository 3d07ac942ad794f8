"""Entanglement-swapping key distribution simulator.

Thin re-export of the compiled core: Bell-label algebra, the dense
statevector oracle, protocol sessions, adversary models, and the
deterministic Monte Carlo campaign runner.
"""

from ._core import (  # noqa: F401
    ALL_BELL_LABELS,
    PHI_MINUS,
    PHI_PLUS,
    PSI_MINUS,
    PSI_PLUS,
    BellLabel,
    Pauli,
    Rng,
    StateVector,
    __version__,
    apply_pauli,
    apply_pauli_first,
    bell_code,
    bell_measure,
    bell_name,
    bell_probabilities,
    code_bell,
    code_pauli,
    derive_seed,
    detection_curve,
    identify_bell,
    infer_imaginary,
    infer_pauli,
    make_bell_pair,
    make_entangled_source,
    pauli_code,
    pauli_name,
    per_check_match_probability,
    project_bell,
    run_campaign,
    run_session,
    run_sweep,
    swap_distribution,
    swap_residual,
    tensor,
    verify,
)
