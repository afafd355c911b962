"""Hyperbolic orientations, crossing signs, writhe and the twisting number.

An orientation assigns a direction to every graph edge.  It is hyperbolic
when, around each vertex, the edge ends alternate in/out: slots 0 and 2
agree, slots 1 and 3 agree, and the two pairs disagree.  One edge fixes the
orientation of its whole graph component, so the constraints are solved
with a parity union-find over edges.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from .diagram import CROSSING, Diagram, GraphEdge, circuits, graph_edges
from .laurent import LaurentPolynomial, ZERO, monomial
from .unionfind import ParityUnionFind

__all__ = [
    "SIGN_TABLE",
    "OrientationAssignment",
    "HyperbolicSet",
    "enumerate_hyperbolic",
    "is_separable",
    "crossing_sign",
    "crossing_signs",
    "writhe",
    "hyperbolic_state_sum",
    "circuit_writhes",
    "twisting_number",
    "format_orientation",
]

# (slot where the under-strand enters, slot where the over-strand enters) -> sign
SIGN_TABLE = {
    (0, 3): +1,
    (0, 1): -1,
    (2, 1): +1,
    (2, 3): -1,
}


@dataclass(frozen=True)
class OrientationAssignment:
    """``reversed[i]`` is True when edge ``i`` runs against its canonical traversal."""

    reversed: tuple[bool, ...]

    def flipped(self, edge_indices=None) -> "OrientationAssignment":
        idx = range(len(self.reversed)) if edge_indices is None else set(edge_indices)
        return OrientationAssignment(
            tuple(not r if i in idx else r for i, r in enumerate(self.reversed))
        )


@dataclass(frozen=True)
class HyperbolicSet:
    edges: tuple[GraphEdge, ...]
    orientations: tuple[OrientationAssignment, ...]

    def __len__(self) -> int:
        return len(self.orientations)

    def __iter__(self) -> Iterator[OrientationAssignment]:
        return iter(self.orientations)

    def __bool__(self) -> bool:
        return bool(self.orientations)


@lru_cache(maxsize=4096)
def _edges(d: Diagram) -> tuple[GraphEdge, ...]:
    return tuple(graph_edges(d))


def _slot_owners(edges) -> dict:
    """Map each vertex position to ``(edge index, k)`` where in-polarity = reversed ^ k."""
    owners = {}
    for i, e in enumerate(edges):
        if not e.closed:
            owners[e.start] = (i, 0)
            owners[e.end] = (i, 1)
    return owners


@lru_cache(maxsize=4096)
def enumerate_hyperbolic(d: Diagram) -> HyperbolicSet:
    edges = _edges(d)
    owners = _slot_owners(edges)
    puf = ParityUnionFind(range(len(edges)))
    for v in d.vertex_indices:
        # in(0) == in(2), in(1) == in(3), in(0) != in(1)
        for s, t, differ in ((0, 2, 0), (1, 3, 0), (0, 1, 1)):
            ea, ka = owners[(v, s)]
            eb, kb = owners[(v, t)]
            if not puf.union(ea, eb, differ ^ ka ^ kb):
                return HyperbolicSet(edges, ())
    roots = puf.roots()
    found = [puf.find(i) for i in range(len(edges))]
    orientations = []
    for bits in itertools.product((False, True), repeat=len(roots)):
        choice = dict(zip(roots, bits))
        orientations.append(
            OrientationAssignment(tuple(choice[r] ^ bool(p) for r, p in found))
        )
    return HyperbolicSet(edges, tuple(orientations))


def is_separable(d: Diagram) -> bool:
    return bool(enumerate_hyperbolic(d))


def _entering(d: Diagram, h: OrientationAssignment) -> set:
    """Positions at which some arc enters its node under ``h``."""
    edges = _edges(d)
    if len(h.reversed) != len(edges):
        raise ValueError("orientation does not match the diagram's edges")
    into = set()
    for e, rev in zip(edges, h.reversed):
        for lab, forward in e.arcs:
            end0, end1 = d.arc_ends[lab]
            into.add(end1 if forward ^ rev else end0)
    return into


def _sign(d: Diagram, index: int, into: set) -> int:
    under = 0 if (index, 0) in into else 2
    over = 1 if (index, 1) in into else 3
    return SIGN_TABLE[under, over]


def crossing_sign(d: Diagram, h: OrientationAssignment, index: int) -> int:
    if d.nodes[index].kind != CROSSING:
        raise ValueError(f"node {index} is not a crossing")
    return _sign(d, index, _entering(d, h))


def crossing_signs(d: Diagram, h: OrientationAssignment) -> dict[int, int]:
    into = _entering(d, h)
    return {i: _sign(d, i, into) for i in d.crossing_indices}


def writhe(d: Diagram, h: OrientationAssignment) -> int:
    return sum(crossing_signs(d, h).values())


def hyperbolic_state_sum(d: Diagram) -> LaurentPolynomial:
    """Sum of ``A**writhe(h)`` over all hyperbolic orientations ``h``."""
    total = ZERO
    for h in enumerate_hyperbolic(d):
        total = total + monomial(1, writhe(d, h))
    return total


def circuit_writhes(d: Diagram) -> list[int]:
    """Self-writhe of each circuit (same order as ``circuits(d)``)."""
    out = []
    for c in circuits(d):
        entry = {}
        for node, slot in c.crossing_entries:
            entry.setdefault(node, []).append(slot)
        w = 0
        for node, slots in entry.items():
            if len(slots) == 2:
                under = next(s for s in slots if s in (0, 2))
                over = next(s for s in slots if s in (1, 3))
                w += SIGN_TABLE[under, over]
        out.append(w)
    return out


def twisting_number(d: Diagram) -> int:
    return sum(circuit_writhes(d))


def format_orientation(d: Diagram, h: OrientationAssignment) -> dict[str, str]:
    return {f"e{i}": "-" if r else "+" for i, r in enumerate(h.reversed)}
