"""Deep-inference proof kernel for Peirce-style modal graphs."""

from ._core import (  # noqa: F401
    apply_rule_json,
    check_proof,
    countermodel,
    delta,
    parse,
    pi,
    polarity,
    prove,
    rho,
    sigma,
    systems,
    valid_on_frame,
)

__all__ = [
    "apply_rule_json",
    "check_proof",
    "countermodel",
    "delta",
    "parse",
    "pi",
    "polarity",
    "prove",
    "rho",
    "sigma",
    "systems",
    "valid_on_frame",
]
