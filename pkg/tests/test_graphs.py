import json

import pytest

from symgraph import (
    Alphabet,
    DirectedGraph,
    GraphSpecError,
    complete_graph,
    golden_graph,
    graph_from_edges,
    graph_to_json,
    higher_order_graph,
    iter_connected_bitmasks,
    graph_from_bitmask,
    linear_graph,
    parse_graph,
    two_cycle_graph,
    validate,
)

G1_SPEC = json.dumps({
    "alphabet": ["X", "Y", "Z"],
    "edges": [["X", "X"], ["X", "Y"], ["X", "Z"], ["Y", "Y"], ["Z", "X"], ["Z", "Y"]],
})
G2_SPEC = json.dumps({
    "alphabet": ["X", "Y", "Z"],
    "edges": [["X", "Y"], ["Y", "Y"], ["Z", "X"], ["Z", "Y"], ["Z", "Z"]],
})


def naive_matmul(a, b):
    k = len(a)
    return [[sum(a[i][l] * b[l][j] for l in range(k)) for j in range(k)] for i in range(k)]


class TestParse:
    def test_g1_adjacency(self):
        g = parse_graph(G1_SPEC)
        assert g.adjacency == ((1, 1, 1), (0, 1, 0), (1, 1, 0))

    def test_g2_adjacency(self):
        g = parse_graph(G2_SPEC)
        assert g.adjacency == ((0, 1, 0), (0, 1, 0), (1, 1, 1))

    def test_single_letter_no_edges(self):
        g = parse_graph(json.dumps({"alphabet": ["X"], "edges": []}))
        assert g.adjacency == ((0,),)

    def test_edge_order_irrelevant(self):
        doc = json.loads(G1_SPEC)
        doc["edges"] = list(reversed(doc["edges"]))
        assert parse_graph(json.dumps(doc)).adjacency == parse_graph(G1_SPEC).adjacency

    def test_duplicate_symbol_rejected(self):
        with pytest.raises(GraphSpecError):
            parse_graph(json.dumps({"alphabet": ["X", "X"], "edges": []}))

    def test_unknown_symbol_rejected(self):
        with pytest.raises(GraphSpecError):
            parse_graph(json.dumps({"alphabet": ["X"], "edges": [["X", "Q"]]}))

    def test_duplicate_edge_rejected(self):
        with pytest.raises(GraphSpecError):
            parse_graph(json.dumps({"alphabet": ["X"], "edges": [["X", "X"], ["X", "X"]]}))

    def test_malformed_document_rejected(self):
        with pytest.raises(GraphSpecError):
            parse_graph("{not json")
        with pytest.raises(GraphSpecError):
            parse_graph(json.dumps(["not", "an", "object"]))
        with pytest.raises(GraphSpecError):
            parse_graph(json.dumps({"alphabet": ["X"]}))

    def test_roundtrip_identity(self):
        for g in (golden_graph(), linear_graph(), complete_graph(), two_cycle_graph()):
            back = parse_graph(graph_to_json(g))
            assert back.adjacency == g.adjacency
            assert back.alphabet.symbols == g.alphabet.symbols
            assert back.name == g.name

    def test_serialized_edges_sorted(self):
        doc = json.loads(graph_to_json(golden_graph()))
        assert doc["edges"] == sorted(doc["edges"])


class TestValidate:
    def test_g1_diagnostics(self):
        d = validate(golden_graph())
        assert d.absorbing_states == ("Y",)
        assert d.weakly_connected
        assert not d.strongly_connected
        assert d.edge_count == 6

    def test_complete_graph_no_absorbing(self):
        d = validate(complete_graph())
        assert d.absorbing_states == ()
        assert d.strongly_connected

    def test_two_cycle(self):
        d = validate(two_cycle_graph())
        assert d.strongly_connected
        assert d.edge_count == 2

    def test_disconnected_reported(self):
        g = graph_from_edges(("A", "B", "C", "D"), [("A", "B"), ("C", "D")])
        assert not validate(g).weakly_connected

    def test_isolated_single_vertex_counts_as_disconnected(self):
        g = graph_from_edges(("X",), [])
        assert not validate(g).weakly_connected
        assert validate(graph_from_edges(("X",), [("X", "X")])).weakly_connected

    def test_absorbing_rows_zero_off_diagonal(self):
        # property: every absorbing state's row vanishes off the diagonal
        for k in (1, 2, 3):
            for mask in iter_connected_bitmasks(k):
                g = graph_from_bitmask(k, mask)
                d = validate(g)
                assert set(d.absorbing_states) <= set(g.alphabet.symbols)
                for sym in d.absorbing_states:
                    i = g.alphabet.index(sym)
                    assert all(g.adjacency[i][j] == 0 for j in range(k) if j != i)


class TestHigherOrder:
    def test_two_cycle(self):
        h = higher_order_graph(two_cycle_graph())
        assert set(h.alphabet.symbols) == {"X>Y", "Y>X"}
        assert h.edge_count == 2
        assert h.has_edge(h.alphabet.index("X>Y"), h.alphabet.index("Y>X"))
        assert h.has_edge(h.alphabet.index("Y>X"), h.alphabet.index("X>Y"))

    def test_g1_vertex_and_edge_counts(self):
        g = golden_graph()
        h = higher_order_graph(g)
        assert h.k == 6
        # oracle: edge count of the second-order graph equals the total of M^2
        m2 = naive_matmul(g.adjacency, g.adjacency)
        assert h.edge_count == sum(map(sum, m2)) == 11

    def test_complete_graph(self):
        h = higher_order_graph(complete_graph())
        assert h.k == 9
        # oracle: brute-force count of 2-paths i->j->k
        g = complete_graph()
        paths = sum(
            1
            for i in range(3)
            for j in range(3)
            for k in range(3)
            if g.adjacency[i][j] and g.adjacency[j][k]
        )
        assert h.edge_count == paths == 27

    def test_edgeless_input_rejected(self):
        with pytest.raises(GraphSpecError):
            higher_order_graph(graph_from_edges(("X",), []))

    def test_counts_match_m_squared_exhaustively(self):
        # for every connected digraph with k <= 3: |V(G2)| = edges, |E(G2)| = |M^2|
        for k in (1, 2, 3):
            for mask in iter_connected_bitmasks(k):
                g = graph_from_bitmask(k, mask)
                if g.edge_count == 0:
                    continue
                h = higher_order_graph(g)
                assert h.k == g.edge_count
                m2 = naive_matmul(g.adjacency, g.adjacency)
                assert h.edge_count == sum(map(sum, m2))


class TestAlphabet:
    def test_index_bijection(self):
        a = Alphabet(("X", "Y", "Z"))
        assert [a.index(s) for s in a.symbols] == [0, 1, 2]
        with pytest.raises(GraphSpecError):
            a.index("Q")

    def test_rejects_empty_and_blank(self):
        with pytest.raises(GraphSpecError):
            Alphabet(())
        with pytest.raises(GraphSpecError):
            Alphabet(("X", " "))

    def test_adjacency_entries_validated(self):
        with pytest.raises(GraphSpecError):
            DirectedGraph(Alphabet(("X",)), ((2,),))
