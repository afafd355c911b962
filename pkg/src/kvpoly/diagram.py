"""Four-valent rigid-vertex graph diagrams in an extended PD code.

A diagram is a list of 4-slot nodes over integer arc labels.  Slots are
listed counterclockwise.  At every node the strands pair slot 0 with slot 2
and slot 1 with slot 3; at a crossing (0, 2) is the under-strand.  Circles
that meet no node are kept as a count of bare loops.

Text format, one directive per line::

    X a b c d     # crossing
    V a b c d     # rigid vertex
    O             # bare loop

A *position* is a pair ``(node_index, slot)``; every arc label has exactly
two positions, its ends, ordered lexicographically.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field, replace
from functools import cached_property
from typing import Iterator, Optional

from .unionfind import UnionFind

__all__ = [
    "CROSSING",
    "VERTEX",
    "DiagramError",
    "Node",
    "Diagram",
    "GraphEdge",
    "Circuit",
    "parse_diagram",
    "serialize_diagram",
    "graph_edges",
    "circuits",
    "graph_components",
    "diagram_components",
    "smooth_A",
    "smooth_B",
    "vertexify",
    "insert_curl",
    "disjoint_union",
    "add_bare_loops",
]

CROSSING = "X"
VERTEX = "V"

Position = tuple[int, int]


class DiagramError(ValueError):
    """Raised for malformed diagram text or structurally invalid diagrams."""

    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


@dataclass(frozen=True)
class Node:
    kind: str
    slots: tuple[int, int, int, int]

    def __post_init__(self):
        if self.kind not in (CROSSING, VERTEX):
            raise DiagramError(f"unknown node kind {self.kind!r}")
        if len(self.slots) != 4:
            raise DiagramError(f"a node needs 4 slots, got {len(self.slots)}")
        if any(isinstance(x, bool) or not isinstance(x, int) or x <= 0 for x in self.slots):
            raise DiagramError(f"arc labels must be positive integers: {self.slots}")

    @property
    def is_crossing(self) -> bool:
        return self.kind == CROSSING

    def __str__(self):
        return f"{self.kind} " + " ".join(map(str, self.slots))


@dataclass(frozen=True)
class Diagram:
    nodes: tuple[Node, ...] = ()
    bare_loops: int = 0

    def __post_init__(self):
        object.__setattr__(self, "nodes", tuple(self.nodes))
        if self.bare_loops < 0:
            raise DiagramError("bare loop count must be nonnegative")
        if not self.nodes and not self.bare_loops:
            raise DiagramError("empty diagram")
        counts = Counter(x for node in self.nodes for x in node.slots)
        bad = sorted(lab for lab, k in counts.items() if k != 2)
        if bad:
            raise DiagramError(
                "labels must appear exactly twice: "
                + ", ".join(f"{lab} (x{counts[lab]})" for lab in bad)
            )

    @classmethod
    def from_pd(cls, nodes, bare_loops: int = 0) -> "Diagram":
        """Build from ``[("X", (a, b, c, d)), ...]`` pairs."""
        return cls(tuple(Node(k, tuple(s)) for k, s in nodes), bare_loops)

    # -- structure -------------------------------------------------------

    @cached_property
    def arc_ends(self) -> dict[int, tuple[Position, Position]]:
        ends: dict[int, list[Position]] = {}
        for i, node in enumerate(self.nodes):
            for s, lab in enumerate(node.slots):
                ends.setdefault(lab, []).append((i, s))
        return {lab: (p[0], p[1]) for lab, p in sorted(ends.items())}

    @property
    def labels(self) -> list[int]:
        return list(self.arc_ends)

    def label_at(self, pos: Position) -> int:
        return self.nodes[pos[0]].slots[pos[1]]

    def other_end(self, pos: Position) -> Position:
        e0, e1 = self.arc_ends[self.label_at(pos)]
        return e1 if pos == e0 else e0

    def is_vertex(self, index: int) -> bool:
        return self.nodes[index].kind == VERTEX

    @property
    def crossing_indices(self) -> list[int]:
        return [i for i, n in enumerate(self.nodes) if n.kind == CROSSING]

    @property
    def vertex_indices(self) -> list[int]:
        return [i for i, n in enumerate(self.nodes) if n.kind == VERTEX]

    @property
    def n_crossings(self) -> int:
        return len(self.crossing_indices)

    @property
    def n_vertices(self) -> int:
        return len(self.vertex_indices)

    @property
    def max_label(self) -> int:
        return max(self.arc_ends, default=0)

    def __str__(self):
        return serialize_diagram(self)


def _opposite(pos: Position) -> Position:
    return pos[0], (pos[1] + 2) % 4


# -- text format ---------------------------------------------------------------


def parse_diagram(text: str) -> Diagram:
    nodes: list[Node] = []
    loops = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        head = tokens[0].upper()
        if head == "O":
            if len(tokens) != 1:
                raise DiagramError("'O' takes no arguments", lineno)
            loops += 1
        elif head in (CROSSING, VERTEX):
            if len(tokens) != 5:
                raise DiagramError(f"'{head}' needs exactly 4 labels", lineno)
            try:
                slots = tuple(int(t) for t in tokens[1:])
            except ValueError:
                raise DiagramError(f"non-integer label in {line!r}", lineno) from None
            if any(x <= 0 for x in slots):
                raise DiagramError("labels must be positive", lineno)
            nodes.append(Node(head, slots))
        else:
            raise DiagramError(f"unknown directive {tokens[0]!r}", lineno)
    return Diagram(tuple(nodes), loops)


def serialize_diagram(d: Diagram) -> str:
    lines = [str(n) for n in d.nodes] + ["O"] * d.bare_loops
    return "\n".join(lines) + "\n"


# -- quotient structures over arcs ---------------------------------------------


@dataclass(frozen=True)
class GraphEdge:
    """A chain of arcs glued straight through crossings.

    ``arcs`` lists ``(label, forward)`` in traversal order, ``forward``
    meaning the arc is run from its first end to its second.  An open edge
    leaves its ``start`` vertex slot and arrives at its ``end`` vertex slot.
    A closed strand has ``start = end = None``; a bare loop is a closed
    edge with no arcs.
    """

    arcs: tuple[tuple[int, bool], ...]
    start: Optional[Position] = None
    end: Optional[Position] = None

    @property
    def closed(self) -> bool:
        return self.start is None

    @property
    def labels(self) -> list[int]:
        return [lab for lab, _ in self.arcs]


@dataclass(frozen=True)
class Circuit:
    """A knot-theoretic circuit: arcs glued straight through every node.

    ``crossing_entries`` holds the positions at which the canonical
    traversal enters a crossing; ``vertex_passages`` counts passages
    through vertices with multiplicity.
    """

    arcs: tuple[int, ...]
    vertex_passages: int
    crossing_entries: tuple[Position, ...] = field(default=())


def _walk(d: Diagram, start: Position, through_vertices: bool) -> Iterator[tuple[Position, Position]]:
    """Yield ``(leave, arrive)`` position pairs along a strand.

    Stops on returning to ``start`` or, when not passing through vertices,
    on arriving at a vertex.
    """
    cur = start
    while True:
        arrive = d.other_end(cur)
        yield cur, arrive
        if not through_vertices and d.is_vertex(arrive[0]):
            return
        cur = _opposite(arrive)
        if cur == start:
            return


def graph_edges(d: Diagram) -> list[GraphEdge]:
    """Open edges in order of their first vertex slot, then closed strands, then bare loops."""
    seen: set[int] = set()
    edges: list[GraphEdge] = []
    for v in d.vertex_indices:
        for s in range(4):
            start = (v, s)
            if d.label_at(start) in seen:
                continue
            arcs = []
            arrive = start
            for leave, arrive in _walk(d, start, through_vertices=False):
                lab = d.label_at(leave)
                seen.add(lab)
                arcs.append((lab, leave == d.arc_ends[lab][0]))
            edges.append(GraphEdge(tuple(arcs), start, arrive))
    for lab in d.labels:
        if lab in seen:
            continue
        start = d.arc_ends[lab][0]
        arcs = []
        for leave, _ in _walk(d, start, through_vertices=False):
            x = d.label_at(leave)
            seen.add(x)
            arcs.append((x, leave == d.arc_ends[x][0]))
        edges.append(GraphEdge(tuple(arcs)))
    edges.extend(GraphEdge(()) for _ in range(d.bare_loops))
    return edges


def circuits(d: Diagram) -> list[Circuit]:
    """Circuits in order of their smallest arc label, bare loops last."""
    seen: set[int] = set()
    out: list[Circuit] = []
    for lab in d.labels:
        if lab in seen:
            continue
        arcs = []
        passages = 0
        entries = []
        for leave, arrive in _walk(d, d.arc_ends[lab][0], through_vertices=True):
            x = d.label_at(leave)
            seen.add(x)
            arcs.append(x)
            if d.is_vertex(arrive[0]):
                passages += 1
            else:
                entries.append(arrive)
        out.append(Circuit(tuple(arcs), passages, tuple(entries)))
    out.extend(Circuit((), 0) for _ in range(d.bare_loops))
    return out


def _components(d: Diagram, join_crossings: bool) -> int:
    uf = UnionFind(d.labels)
    for node in d.nodes:
        a, b, c, e = node.slots
        uf.union(a, c)
        uf.union(b, e)
        if join_crossings or node.kind == VERTEX:
            uf.union(a, b)
    return len(uf) + d.bare_loops


def graph_components(d: Diagram) -> int:
    """Components of the abstract graph: crossings do not join their strands."""
    return _components(d, join_crossings=False)


def diagram_components(d: Diagram) -> int:
    """Components of the planar graph obtained by making every crossing a vertex."""
    return _components(d, join_crossings=True)


# -- editing -------------------------------------------------------------------


def _crossing_index(d: Diagram, index: int) -> int:
    if not 0 <= index < len(d.nodes):
        raise DiagramError(f"node index {index} out of range")
    if d.nodes[index].kind != CROSSING:
        raise DiagramError(f"node {index} is a vertex, not a crossing")
    return index


def _resolve(d: Diagram, index: int, pairs) -> Diagram:
    index = _crossing_index(d, index)
    slots = d.nodes[index].slots
    rest = [n for i, n in enumerate(d.nodes) if i != index]
    uf = UnionFind(slots)
    for s, t in pairs:
        uf.union(slots[s], slots[t])
    remaining = Counter(x for n in rest for x in n.slots)
    relabel: dict[int, int] = {}
    loops = d.bare_loops
    for group in uf.groups():
        if any(remaining[x] for x in group):
            keep = min(group)
            relabel.update((x, keep) for x in group)
        else:
            loops += 1
    nodes = tuple(Node(n.kind, tuple(relabel.get(x, x) for x in n.slots)) for n in rest)
    return Diagram(nodes, loops)


def smooth_A(d: Diagram, index: int) -> Diagram:
    """Remove a crossing, joining slots (0, 1) and (2, 3)."""
    return _resolve(d, index, ((0, 1), (2, 3)))


def smooth_B(d: Diagram, index: int) -> Diagram:
    """Remove a crossing, joining slots (0, 3) and (1, 2)."""
    return _resolve(d, index, ((0, 3), (1, 2)))


def vertexify(d: Diagram, index: int) -> Diagram:
    index = _crossing_index(d, index)
    nodes = list(d.nodes)
    nodes[index] = replace(nodes[index], kind=VERTEX)
    return Diagram(tuple(nodes), d.bare_loops)


def insert_curl(d: Diagram, arc: Optional[int] = None, sign: int = 1) -> Diagram:
    """Splice a one-crossing curl into ``arc`` (or into a bare loop when ``arc`` is None).

    ``sign=+1`` multiplies the bracket by A and ``sign=-1`` by A^-1.  The
    new node is appended and uses two fresh labels.
    """
    if sign not in (1, -1):
        raise ValueError(f"sign must be +1 or -1, got {sign}")
    n1, n2 = d.max_label + 1, d.max_label + 2
    if arc is None:
        if not d.bare_loops:
            raise DiagramError("no bare loop to curl")
        slots = (n2, n2, n1, n1) if sign > 0 else (n1, n2, n2, n1)
        return Diagram(d.nodes + (Node(CROSSING, slots),), d.bare_loops - 1)
    if arc not in d.arc_ends:
        raise DiagramError(f"unknown arc {arc}")
    _, (qi, qs) = d.arc_ends[arc]
    nodes = list(d.nodes)
    q_slots = list(nodes[qi].slots)
    q_slots[qs] = n1
    nodes[qi] = Node(nodes[qi].kind, tuple(q_slots))
    slots = (n2, n2, arc, n1) if sign > 0 else (n1, n2, n2, arc)
    nodes.append(Node(CROSSING, slots))
    return Diagram(tuple(nodes), d.bare_loops)


def disjoint_union(d1: Diagram, d2: Diagram) -> Diagram:
    """Place ``d2`` beside ``d1``, shifting its labels past those of ``d1``."""
    k = d1.max_label
    shifted = tuple(Node(n.kind, tuple(x + k for x in n.slots)) for n in d2.nodes)
    return Diagram(d1.nodes + shifted, d1.bare_loops + d2.bare_loops)


def add_bare_loops(d: Diagram, count: int = 1) -> Diagram:
    return Diagram(d.nodes, d.bare_loops + count)
