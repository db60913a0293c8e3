"""Exact steady states of the multispecies totally asymmetric zero range
process on a ring, with the n-line process, combinatorial R, and matrix
product formulas behind a small native core."""

from ._tazrp import (
    apply_r,
    compositions,
    condensation,
    count_states,
    project,
    project_rows,
    simulate,
    steady,
    steady_prob,
    tau,
    yang_baxter,
)

__all__ = [
    "apply_r",
    "compositions",
    "condensation",
    "count_states",
    "project",
    "project_rows",
    "simulate",
    "steady",
    "steady_prob",
    "tau",
    "yang_baxter",
]
