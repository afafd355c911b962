"""The bracket [G] at B = A^-1, a = A, partitions, {G} and the normalized invariant P."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .diagram import (
    Diagram,
    DiagramError,
    diagram_components,
    graph_components,
    smooth_A,
    smooth_B,
    vertexify,
)
from .laurent import LOOP_FACTOR, ZERO, LaurentPolynomial, monomial
from .orientation import (
    OrientationAssignment,
    _edges,
    crossing_signs,
    enumerate_hyperbolic,
    hyperbolic_state_sum,
    twisting_number,
)
from .unionfind import UnionFind

__all__ = [
    "VERTICAL",
    "HORIZONTAL",
    "PartitionClass",
    "InvariantReport",
    "OneCrossingResult",
    "bracket",
    "partition_classes",
    "braces",
    "normalized",
    "one_crossing_test",
    "compute_report",
]

VERTICAL = "vertical"
HORIZONTAL = "horizontal"


def bracket(d: Diagram) -> LaurentPolynomial:
    """[G] = 1/2 (-A - A^-1)^v * sum over hyperbolic h of A^w(h)."""
    return (LOOP_FACTOR**d.n_vertices * hyperbolic_state_sum(d)).scale(Fraction(1, 2))


@dataclass(frozen=True)
class PartitionClass:
    """One partition: an orbit of hyperbolic orientations under reversing whole diagram components.

    ``marks`` maps crossing node index to VERTICAL or HORIZONTAL.
    """

    marks: dict
    signature: LaurentPolynomial
    representative: OrientationAssignment
    orbit_size: int


def _edge_diagram_component(d: Diagram) -> list[int]:
    """For each graph edge, an id of the diagram component containing it."""
    uf = UnionFind(d.labels)
    for node in d.nodes:
        for x in node.slots[1:]:
            uf.union(node.slots[0], x)
    ids: dict = {}
    out = []
    for e in _edges(d):
        key = ("loop", len(out)) if not e.arcs else uf.find(e.arcs[0][0])
        out.append(ids.setdefault(key, len(ids)))
    return out


def partition_classes(d: Diagram) -> list[PartitionClass]:
    hyp = enumerate_hyperbolic(d)
    if not hyp:
        return []
    comp = _edge_diagram_component(d)
    lead = {}
    for i, k in enumerate(comp):
        lead.setdefault(k, i)
    orbits: dict[tuple, list[OrientationAssignment]] = {}
    for h in hyp:
        r = h.reversed
        key = tuple(r[i] ^ r[lead[comp[i]]] for i in range(len(r)))
        orbits.setdefault(key, []).append(h)
    out = []
    for members in orbits.values():
        rep = members[0]
        signs = crossing_signs(d, rep)
        marks = {i: VERTICAL if s > 0 else HORIZONTAL for i, s in signs.items()}
        out.append(PartitionClass(marks, monomial(1, sum(signs.values())), rep, len(members)))
    return out


def braces(d: Diagram) -> LaurentPolynomial:
    """{G}: the sum of partition signatures, 0 for a non-separable diagram."""
    total = ZERO
    for p in partition_classes(d):
        total = total + p.signature
    return total


def normalized(d: Diagram) -> LaurentPolynomial:
    """P(G) = A^-t [G] / (2^(c-1) (-A - A^-1)^v), evaluated as A^-t * sum * 2^-c."""
    c = graph_components(d)
    return hyperbolic_state_sum(d).shift(-twisting_number(d)).scale(Fraction(1, 2**c))


@dataclass(frozen=True)
class OneCrossingResult:
    vanishes: bool
    cA: int
    cB: int
    cV: int


def one_crossing_test(d: Diagram) -> OneCrossingResult:
    """Component counts of the three resolutions of the only crossing.

    The bracket vanishes exactly when all three counts agree, provided the
    resolutions are planar.
    """
    xs = d.crossing_indices
    if len(xs) != 1:
        raise DiagramError(f"expected exactly one crossing, found {len(xs)}")
    (i,) = xs
    cA = graph_components(smooth_A(d, i))
    cB = graph_components(smooth_B(d, i))
    cV = graph_components(vertexify(d, i))
    return OneCrossingResult(cA == cB == cV, cA, cB, cV)


@dataclass(frozen=True)
class InvariantReport:
    bracket: LaurentPolynomial
    braces: LaurentPolynomial
    normalized: LaurentPolynomial
    twist: int
    c: int
    v: int
    crossings: int
    diagram_components: int
    separable: bool

    def to_json(self) -> dict:
        return {
            "bracket": self.bracket.to_json(),
            "braces": self.braces.to_json(),
            "normalized": self.normalized.to_json(),
            "twist": self.twist,
            "c": self.c,
            "v": self.v,
            "crossings": self.crossings,
            "diagram_components": self.diagram_components,
            "separable": self.separable,
        }

    @classmethod
    def from_json(cls, data: dict) -> "InvariantReport":
        return cls(
            bracket=LaurentPolynomial.from_json(data["bracket"]),
            braces=LaurentPolynomial.from_json(data["braces"]),
            normalized=LaurentPolynomial.from_json(data["normalized"]),
            twist=data["twist"],
            c=data["c"],
            v=data["v"],
            crossings=data["crossings"],
            diagram_components=data["diagram_components"],
            separable=data["separable"],
        )


def compute_report(d: Diagram) -> InvariantReport:
    return InvariantReport(
        bracket=bracket(d),
        braces=braces(d),
        normalized=normalized(d),
        twist=twisting_number(d),
        c=graph_components(d),
        v=d.n_vertices,
        crossings=d.n_crossings,
        diagram_components=diagram_components(d),
        separable=bool(enumerate_hyperbolic(d)),
    )
