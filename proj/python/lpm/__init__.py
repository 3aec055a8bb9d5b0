"""Lefschetz pencil monodromy calculus and desk-scale numerical verifiers."""

import json

from ._lpm import (
    Arc,
    Braid,
    CutoffProfile,
    CutoffThresholdError,
    FreeWord,
    HypothesisFailure,
    Pencil,
    VerificationFailure,
    artin_apply,
    braid_eq,
    find_good_w0,
    full_twist,
    half_twist,
    radial_check,
    random_certificate,
    run_cli,
    solve_w,
    supporting_pair,
    verify_deform,
)

__all__ = [
    "Arc",
    "Braid",
    "CutoffProfile",
    "CutoffThresholdError",
    "FreeWord",
    "HypothesisFailure",
    "Pencil",
    "VerificationFailure",
    "artin_apply",
    "braid_eq",
    "find_good_w0",
    "full_twist",
    "half_twist",
    "load_pencil",
    "pencil",
    "radial_check",
    "random_certificate",
    "run_cli",
    "solve_w",
    "supporting_pair",
    "verify_deform",
]


def pencil(fiber, cycles):
    """Build a pencil from a fiber dict such as {"model": "torus"} and a cycle list."""
    return Pencil.from_json(json.dumps({"fiber": fiber, "cycles": cycles}))


def load_pencil(path):
    with open(path) as f:
        return Pencil.from_json(f.read())
