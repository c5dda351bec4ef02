"""Local-unitary invariants of two- and three-qubit states.

Direct tensor-contraction evaluation, measurement-circuit synthesis
(small transpose/adjoint-oracle method and doubled Bell-contraction
method), exact statevector simulation with seeded shot sampling, and
SLOCC classification.
"""

from ._luinv import (
    Circuit,
    InvariantEstimate,
    MeasuredCircuit,
    State,
    __version__,
    bell_scale_check,
    build_bell,
    build_small,
    canonical_invariants,
    canonical_state,
    classify,
    dense_preparation,
    estimate_invariant,
    exact_estimate,
    exact_family_invariants,
    family_circuit,
    family_state,
    hyperdet_q,
    outcome_probability,
    random_lu_orbit,
    random_state,
    representative_theta,
    run,
    sample,
    target_oracle_value,
    three_qubit_invariants,
    two_qubit_invariants,
)

__all__ = [
    "Circuit",
    "InvariantEstimate",
    "MeasuredCircuit",
    "State",
    "__version__",
    "bell_scale_check",
    "build_bell",
    "build_small",
    "canonical_invariants",
    "canonical_state",
    "classify",
    "dense_preparation",
    "estimate_invariant",
    "exact_estimate",
    "exact_family_invariants",
    "family_circuit",
    "family_state",
    "hyperdet_q",
    "outcome_probability",
    "random_lu_orbit",
    "random_state",
    "representative_theta",
    "run",
    "sample",
    "target_oracle_value",
    "three_qubit_invariants",
    "two_qubit_invariants",
]
