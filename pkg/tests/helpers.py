"""Shared generators and brute-force references for the test suite."""

from __future__ import annotations

import itertools
import random

from hypothesis import strategies as st

from kvpoly.corpus import bundled_corpus, load_manifest
from kvpoly.diagram import Diagram, Node, parse_diagram
from kvpoly.laurent import ZERO, monomial
from kvpoly.orientation import SIGN_TABLE


def pd(text: str) -> Diagram:
    """Parse the comma-separated shorthand used in the examples, e.g. ``"X 1 2 3 4, V 1 2 3 4"``."""
    return parse_diagram(text.replace(",", "\n"))


def corpus_entries():
    return load_manifest(bundled_corpus())


def corpus_diagrams():
    return {e.name: e.diagram for e in corpus_entries()}


def diagram_from_matching(kinds, order, bare_loops=0) -> Diagram:
    """Pair up slots ``order[0]-order[1]``, ``order[2]-order[3]``... into arcs."""
    slots = [[0] * 4 for _ in kinds]
    for label, k in enumerate(range(0, len(order), 2), start=1):
        for pos in order[k:k + 2]:
            slots[pos // 4][pos % 4] = label
    return Diagram(tuple(Node(kd, tuple(s)) for kd, s in zip(kinds, slots)), bare_loops)


def random_diagram(rng: random.Random, max_nodes: int = 4) -> Diagram:
    """Random PD code: uniform slot matching, random node kinds.

    Such codes need not be planar-realizable; use them only for checks that
    are purely combinatorial.
    """
    n = rng.randint(1, max_nodes)
    kinds = [rng.choice("XV") for _ in range(n)]
    order = list(range(4 * n))
    rng.shuffle(order)
    return diagram_from_matching(kinds, order, rng.choice((0, 0, 1)))


@st.composite
def diagrams(draw, max_nodes: int = 4):
    n = draw(st.integers(1, max_nodes))
    kinds = draw(st.lists(st.sampled_from("XV"), min_size=n, max_size=n))
    order = draw(st.permutations(range(4 * n)))
    loops = draw(st.integers(0, 1))
    return diagram_from_matching(kinds, order, loops)


def brute_orientations(d: Diagram):
    """All arc orientations that pass straight through crossings and alternate at vertices.

    Yields the set of positions at which an arc enters its node.  Bare loops
    contribute a factor of two that the caller accounts for.
    """
    labels = d.labels
    for bits in itertools.product((0, 1), repeat=len(labels)):
        into = {d.arc_ends[lab][1 - b] for lab, b in zip(labels, bits)}
        ok = True
        for i, node in enumerate(d.nodes):
            inn = [(i, s) in into for s in range(4)]
            if node.kind == "X":
                ok = inn[0] != inn[2] and inn[1] != inn[3]
            else:
                ok = inn[0] == inn[2] and inn[1] == inn[3] and inn[0] != inn[1]
            if not ok:
                break
        if ok:
            yield into


def brute_state_sum(d: Diagram):
    total = ZERO
    for into in brute_orientations(d):
        w = 0
        for i in d.crossing_indices:
            under = 0 if (i, 0) in into else 2
            over = 1 if (i, 1) in into else 3
            w += SIGN_TABLE[under, over]
        total = total + monomial(1, w)
    return total.scale(2**d.bare_loops)


def brute_count(d: Diagram) -> int:
    return sum(1 for _ in brute_orientations(d)) * 2**d.bare_loops
