"""Brute-force evaluation of [G] by expanding every crossing with the skein relation

    [X] = A [smooth_A] + A^-1 [smooth_B] + [vertexify]

down to crossing-free diagrams, whose value is 2^(c-1) (-A - A^-1)^v.
This never touches orientations and serves as an independent check of the
state-sum formula.
"""

from __future__ import annotations

from fractions import Fraction

from .diagram import Diagram, DiagramError, graph_components, smooth_A, smooth_B, vertexify
from .invariant import bracket
from .laurent import LOOP_FACTOR, LaurentPolynomial, monomial

__all__ = ["DEFAULT_CAP", "CapExceeded", "planar_value", "oracle_bracket", "skein_residual"]

DEFAULT_CAP = 12

_A = monomial(1, 1)
_A_INV = monomial(1, -1)


def planar_value(c: int, v: int) -> LaurentPolynomial:
    """``2**(c-1) * (-A - A^-1)**v``, the bracket of a crossing-free diagram."""
    return (LOOP_FACTOR**v).scale(Fraction(2) ** (c - 1))


class CapExceeded(RuntimeError):
    """The diagram has more crossings than the expansion is allowed to handle."""


def oracle_bracket(d: Diagram, cap: int = DEFAULT_CAP, pivot: str = "lowest") -> LaurentPolynomial:
    """Expand all crossings (3^n leaves).  ``pivot`` picks the lowest or highest-indexed crossing."""
    if pivot not in ("lowest", "highest"):
        raise ValueError(f"unknown pivot {pivot!r}")
    if d.n_crossings > cap:
        raise CapExceeded(f"{d.n_crossings} crossings exceeds the cap of {cap}")
    return _expand(d, pivot)


def _expand(d: Diagram, pivot: str) -> LaurentPolynomial:
    xs = d.crossing_indices
    if not xs:
        return planar_value(graph_components(d), d.n_vertices)
    i = xs[0] if pivot == "lowest" else xs[-1]
    return (
        _A * _expand(smooth_A(d, i), pivot)
        + _A_INV * _expand(smooth_B(d, i), pivot)
        + _expand(vertexify(d, i), pivot)
    )


def skein_residual(d: Diagram, index: int) -> LaurentPolynomial:
    """bracket(d) minus the skein expansion at one crossing, all via the state sum."""
    if not 0 <= index < len(d.nodes) or d.is_vertex(index):
        raise DiagramError(f"node {index} is not a crossing")
    return bracket(d) - (
        _A * bracket(smooth_A(d, index))
        + _A_INV * bracket(smooth_B(d, index))
        + bracket(vertexify(d, index))
    )

