"""Sandwiched Renyi coherence measures."""

from ._core import (
    AxiomReport,
    HolderCheck,
    MeasureResult,
    SandcohError,
    c_s,
    c_s1,
    c_s1_pure,
    c_s_pure,
    check_axiom,
    dephase,
    fidelity,
    geometric_coherence,
    holder_check,
    holder_two_block,
    l1_coherence_qubit,
    linearization_counterexample,
    load_state,
    random_density,
    random_pure,
    sandwiched_renyi,
    save_state,
)

__all__ = [
    "AxiomReport",
    "HolderCheck",
    "MeasureResult",
    "SandcohError",
    "c_s",
    "c_s1",
    "c_s1_pure",
    "c_s_pure",
    "check_axiom",
    "dephase",
    "fidelity",
    "geometric_coherence",
    "holder_check",
    "holder_two_block",
    "l1_coherence_qubit",
    "linearization_counterexample",
    "load_state",
    "random_density",
    "random_pure",
    "sandwiched_renyi",
    "save_state",
]
