"""Finite semigroups: Green's relations, kernels, Rees decompositions, census."""

from ._semikit import (
    Semigroup,
    SemikitError,
    canonical_form,
    census,
    cli,
    eggbox_dot,
    fingerprint,
    greens,
    kernel,
    rees_decompose,
    subsemigroups,
    verification_checks,
    verify,
)

__all__ = [
    "Semigroup",
    "SemikitError",
    "canonical_form",
    "census",
    "cli",
    "eggbox_dot",
    "fingerprint",
    "greens",
    "kernel",
    "rees_decompose",
    "subsemigroups",
    "verification_checks",
    "verify",
]
