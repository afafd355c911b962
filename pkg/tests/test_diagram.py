import pytest
from hypothesis import given

from helpers import corpus_diagrams, diagrams, pd
from kvpoly.diagram import (
    Diagram,
    DiagramError,
    Node,
    add_bare_loops,
    circuits,
    diagram_components,
    graph_components,
    graph_edges,
    insert_curl,
    parse_diagram,
    serialize_diagram,
    smooth_A,
    smooth_B,
    vertexify,
)

CORPUS = corpus_diagrams()


class TestParse:
    def test_vertex(self):
        d = parse_diagram("V 1 1 2 2")
        assert d.nodes == (Node("V", (1, 1, 2, 2)),)
        assert d.labels == [1, 2]
        assert d.bare_loops == 0

    def test_bare_loop(self):
        d = parse_diagram("O")
        assert d.nodes == () and d.bare_loops == 1

    def test_mixed(self):
        d = parse_diagram("X 1 2 3 4\nV 1 2 3 4")
        assert d.n_crossings == 1 and d.n_vertices == 1

    def test_comments_and_blank_lines(self):
        d = parse_diagram("# curl\n\nX 2 2 1 1  # positive\n")
        assert d == pd("X 2 2 1 1")

    @pytest.mark.parametrize(
        "text, line",
        [
            ("X 1 2 3", 1),
            ("V 1 1 2 2\nY 1 2 3 4", 2),
            ("X 1 1 2 a", 1),
            ("O 3", 1),
            ("X 0 0 1 1", 1),
        ],
    )
    def test_malformed_line(self, text, line):
        with pytest.raises(DiagramError) as err:
            parse_diagram(text)
        assert err.value.line == line

    def test_label_count(self):
        with pytest.raises(DiagramError, match="exactly twice"):
            parse_diagram("X 1 2 3 4")

    def test_empty(self):
        with pytest.raises(DiagramError, match="empty"):
            parse_diagram("# nothing\n")


@pytest.mark.parametrize("text", ["X 1 2 2 1", "V 1 1 2 2", "O", "X 1 2 3 4\nV 1 2 3 4\nO\nO"])
def test_round_trip(text):
    d = parse_diagram(text)
    assert parse_diagram(serialize_diagram(d)) == d
    assert serialize_diagram(d) == text + "\n"


@given(diagrams())
def test_round_trip_random(d):
    assert parse_diagram(serialize_diagram(d)) == d


class TestGraphEdges:
    def test_closed_strand(self):
        (e,) = graph_edges(pd("X 1 2 2 1"))
        assert e.closed and sorted(e.labels) == [1, 2]

    def test_vertex_loops(self):
        edges = graph_edges(pd("V 1 1 2 2"))
        assert [e.labels for e in edges] == [[1], [2]]
        assert all(not e.closed for e in edges)
        assert [(e.start, e.end) for e in edges] == [((0, 0), (0, 1)), ((0, 2), (0, 3))]

    def test_through_crossing(self):
        edges = graph_edges(pd("X 1 2 3 4, V 1 2 3 4"))
        assert sorted(sorted(e.labels) for e in edges) == [[1, 3], [2, 4]]
        for e in edges:
            assert e.start[0] == e.end[0] == 1

    def test_bare_loops_are_closed_edges(self):
        edges = graph_edges(pd("O, O"))
        assert len(edges) == 2 and all(e.closed and not e.arcs for e in edges)


class TestCircuits:
    def test_vertex_crossing(self):
        cs = circuits(pd("X 1 2 3 4, V 1 2 3 4"))
        assert sorted(sorted(c.arcs) for c in cs) == [[1, 3], [2, 4]]
        assert [c.vertex_passages for c in cs] == [1, 1]

    def test_vertex_figure_eight(self):
        (c,) = circuits(pd("V 1 1 2 2"))
        assert sorted(c.arcs) == [1, 2] and c.vertex_passages == 2

    def test_bare_loop(self):
        (c,) = circuits(pd("O"))
        assert c.arcs == () and c.vertex_passages == 0

    def test_hopf(self):
        cs = circuits(CORPUS["hopf_link"])
        assert len(cs) == 2
        assert all(len(c.crossing_entries) == 2 for c in cs)


class TestComponents:
    def test_graph_components(self):
        assert graph_components(pd("X 1 2 2 1")) == 1
        assert graph_components(pd("O, O")) == 2
        assert graph_components(pd("X 1 2 3 4, V 1 2 3 4")) == 1

    def test_diagram_components(self):
        assert diagram_components(CORPUS["hopf_link"]) == 1
        assert graph_components(CORPUS["hopf_link"]) == 2
        assert diagram_components(pd("O")) == 1
        assert diagram_components(CORPUS["two_curls"]) == 2


class TestSmoothing:
    def test_smooth_A(self):
        assert smooth_A(pd("X 2 2 1 1"), 0) == Diagram((), 2)
        assert smooth_A(pd("X 1 2 2 1"), 0) == Diagram((), 1)
        assert smooth_A(pd("X 1 2 3 4, V 1 2 3 4"), 0) == pd("V 1 1 3 3")

    def test_smooth_B(self):
        assert smooth_B(pd("X 2 2 1 1"), 0) == Diagram((), 1)
        assert smooth_B(pd("X 1 2 2 1"), 0) == Diagram((), 2)
        assert smooth_B(pd("X 1 2 3 4, V 1 2 3 4"), 0) == pd("V 1 2 2 1")

    def test_relabel_keeps_smallest(self):
        # arcs 5 and 2 merge at slots (0, 1); 3 and 4 at slots (2, 3)
        d = pd("X 5 2 3 4, V 5 2 3 4")
        assert smooth_A(d, 0) == pd("V 2 2 3 3")

    def test_vertexify(self):
        d = vertexify(pd("X 1 2 2 1"), 0)
        assert d == pd("V 1 2 2 1")
        assert d.n_vertices == 1 and d.n_crossings == 0

    @pytest.mark.parametrize("op", [smooth_A, smooth_B, vertexify])
    def test_rejects_vertex_or_bad_index(self, op):
        d = pd("X 1 2 3 4, V 1 2 3 4")
        with pytest.raises(DiagramError):
            op(d, 1)
        with pytest.raises(DiagramError):
            op(d, 7)


class TestCurl:
    def test_bare_loop(self):
        assert insert_curl(pd("O"), None, 1) == pd("X 2 2 1 1")
        assert insert_curl(pd("O"), None, -1) == pd("X 1 2 2 1")

    def test_arc(self):
        d = insert_curl(pd("V 1 1 2 2"), 1, 1)
        assert d == pd("V 1 3 2 2, X 4 4 1 3")
        assert d.n_crossings == 1

    def test_errors(self):
        with pytest.raises(DiagramError):
            insert_curl(pd("V 1 1 2 2"), 9, 1)
        with pytest.raises(DiagramError):
            insert_curl(pd("V 1 1 2 2"), None, 1)
        with pytest.raises(ValueError):
            insert_curl(pd("O"), None, 2)


# -- structural properties ----------------------------------------------------


@given(diagrams())
def test_slot_accounting(d):
    assert 4 * len(d.nodes) == 2 * len(d.labels)


@given(diagrams())
def test_edges_and_circuits_partition_arcs(d):
    edges = graph_edges(d)
    cs = circuits(d)
    edge_arcs = [lab for e in edges for lab in e.labels]
    circ_arcs = [lab for c in cs for lab in c.arcs]
    assert sorted(edge_arcs) == sorted(circ_arcs) == d.labels
    owner = {lab: k for k, c in enumerate(cs) for lab in c.arcs}
    for e in edges:
        assert len({owner[lab] for lab in e.labels}) <= 1


@given(diagrams())
def test_component_order(d):
    assert graph_components(d) >= diagram_components(d) >= 1


@given(diagrams())
def test_resolutions_drop_one_crossing(d):
    for i in d.crossing_indices:
        for op in (smooth_A, smooth_B, vertexify):
            e = op(d, i)
            assert e.n_crossings == d.n_crossings - 1
            parse_diagram(serialize_diagram(e))


@given(diagrams())
def test_curl_then_matching_smoothing(d):
    targets = d.labels[:1] + ([None] if d.bare_loops else [])
    for arc in targets:
        for sign, undo in ((1, smooth_B), (-1, smooth_A)):
            curled = insert_curl(d, arc, sign)
            back = undo(curled, len(curled.nodes) - 1)
            assert len(circuits(back)) == len(circuits(d))
            assert back == d


def test_add_bare_loops():
    assert add_bare_loops(pd("V 1 1 2 2"), 2).bare_loops == 2
