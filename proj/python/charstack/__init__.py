"""Exact computation of E-series and conjectural mixed Poincare series of
character stacks of punctured surfaces, via star-shaped quiver combinatorics
and the HLRV symmetric-function kernel."""

from charstack._core import (
    eseries,
    hlrv,
    lr_coefficient,
    mixed_poincare,
    modified_macdonald_str,
    verify_ff,
)

__all__ = [
    "eseries",
    "hlrv",
    "lr_coefficient",
    "mixed_poincare",
    "modified_macdonald_str",
    "verify_ff",
]
