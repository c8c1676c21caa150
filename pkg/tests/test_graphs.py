import itertools

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hamclosure.errors import ExhaustionError, FormatError, InputError
from hamclosure.graphs import (
    Graph,
    articulation_points,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    emit_dot,
    emit_edge_list,
    emit_graph6,
    empty_graph,
    is_2_connected,
    is_connected,
    maximal_cliques,
    parse_edge_list,
    parse_graph6,
    path_graph,
    sample_graphs,
)


def graphs_strategy(max_n=10):
    @st.composite
    def build(draw):
        n = draw(st.integers(min_value=1, max_value=max_n))
        bits = draw(st.integers(min_value=0, max_value=(1 << (n * (n - 1) // 2)) - 1))
        edges = []
        k = 0
        for u in range(n):
            for v in range(u + 1, n):
                if bits >> k & 1:
                    edges.append((u, v))
                k += 1
        return Graph.from_edges(n, edges)

    return build()


class TestConstruction:
    def test_c4_from_edges(self):
        g = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
        assert g.edge_count == 4
        assert g == cycle_graph(4)

    def test_empty(self):
        assert empty_graph(3).edge_count == 0

    def test_duplicate_edges_collapse(self):
        g = Graph.from_edges(2, [(0, 1), (1, 0)])
        assert g.edge_count == 1

    def test_out_of_range_rejected(self):
        with pytest.raises(InputError):
            Graph.from_edges(3, [(0, 3)])

    def test_loop_rejected(self):
        with pytest.raises(InputError):
            Graph.from_edges(3, [(1, 1)])

    def test_asymmetric_rows_rejected(self):
        with pytest.raises(InputError):
            Graph(2, (0b10, 0b00))

    @given(graphs_strategy())
    def test_symmetry_and_irreflexivity(self, g):
        for v in range(g.n):
            assert not g.has_edge(v, v)
            for u in g.neighbors(v):
                assert g.has_edge(u, v) and g.has_edge(v, u)
        assert sum(g.degrees()) == 2 * g.edge_count

    def test_add_edges_returns_delta(self):
        g = path_graph(3)
        g2, added = g.add_edges([(0, 2), (0, 1)])
        assert added == ((0, 2),)
        assert g2 == complete_graph(3)
        assert g.edge_count == 2  # original untouched


class TestInduced:
    def test_c4_takes_p3(self):
        assert cycle_graph(4).induced([0, 1, 2]) == path_graph(3)

    def test_k4_takes_c3(self):
        assert complete_graph(4).induced([0, 1, 2]) == cycle_graph(3)

    def test_net_triangle(self, net):
        assert net.induced([0, 1, 2]) == cycle_graph(3)

    @given(graphs_strategy(8), st.data())
    def test_composition(self, g, data):
        s = data.draw(st.sets(st.integers(0, g.n - 1)))
        order = sorted(s)
        t = data.draw(st.sets(st.integers(0, len(order) - 1))) if order else set()
        inner = g.induced(order).induced(sorted(t))
        outer = g.induced([order[i] for i in sorted(t)])
        assert inner == outer


class TestConnectivity:
    def test_curated(self, curated):
        assert is_2_connected(curated["C4"])
        assert not is_2_connected(curated["P4"])
        assert not is_2_connected(curated["net"])
        assert not is_2_connected(path_graph(2))
        assert is_2_connected(complete_graph(3))

    def test_net_cut_vertices_are_the_corners(self, net):
        assert articulation_points(net) == [0, 1, 2]

    def test_disconnected(self):
        assert not is_connected(empty_graph(2))
        assert is_connected(empty_graph(1))


def naive_maximal_cliques(g):
    cliques = []
    vertices = range(g.n)
    for r in range(1, g.n + 1):
        for sub in itertools.combinations(vertices, r):
            mask = sum(1 << v for v in sub)
            if not g.is_clique_mask(mask):
                continue
            if any(all(g.has_edge(u, w) for u in sub) for w in vertices if w not in sub):
                continue
            cliques.append(frozenset(sub))
    return sorted(cliques, key=sorted)


class TestMaximalCliques:
    def test_c5_gives_its_edges(self):
        assert [sorted(c) for c in maximal_cliques(cycle_graph(5))] == [
            [0, 1], [0, 4], [1, 2], [2, 3], [3, 4],
        ]

    def test_k4_single(self):
        assert maximal_cliques(complete_graph(4)) == [frozenset({0, 1, 2, 3})]

    def test_net_expected(self, net):
        assert [sorted(c) for c in maximal_cliques(net)] == [[0, 1, 2], [0, 3], [1, 4], [2, 5]]

    def test_against_subset_enumeration(self, corpus):
        small = [g for g in corpus if g.n <= 7][:120]
        assert small
        for g in small:
            assert maximal_cliques(g) == naive_maximal_cliques(g)


class TestGraph6:
    def test_round_trip_curated(self, curated):
        for g in curated.values():
            assert parse_graph6(emit_graph6(g)) == g

    def test_single_vertex(self):
        assert parse_graph6(emit_graph6(empty_graph(1))) == empty_graph(1)

    @given(graphs_strategy(12))
    @settings(max_examples=150)
    def test_round_trip_random(self, g):
        assert parse_graph6(emit_graph6(g)) == g

    def test_against_reference_implementation(self, corpus):
        for g in corpus[:150]:
            via_nx = nx.from_graph6_bytes(emit_graph6(g).encode("ascii"))
            assert sorted(tuple(sorted(e)) for e in via_nx.edges()) == g.edges()
            ours = parse_graph6(nx.to_graph6_bytes(via_nx, header=False).decode().strip())
            assert ours == g

    def test_reference_complete_graph(self):
        text = nx.to_graph6_bytes(nx.complete_graph(5), header=False).decode().strip()
        assert parse_graph6(text) == complete_graph(5)

    def test_header_stripped(self):
        g = cycle_graph(5)
        assert parse_graph6(">>graph6<<" + emit_graph6(g)) == g

    def test_truncated_reports_offset(self):
        text = emit_graph6(complete_graph(7))
        with pytest.raises(FormatError) as exc:
            parse_graph6(text[:-1])
        assert exc.value.offset is not None

    def test_bad_byte_offset(self):
        with pytest.raises(FormatError) as exc:
            parse_graph6("C ")
        assert exc.value.offset == 1

    def test_large_n_header(self):
        g = empty_graph(70)
        assert parse_graph6(emit_graph6(g)) == g


class TestEdgeListAndDot:
    def test_round_trip(self, curated):
        for g in curated.values():
            assert parse_edge_list(emit_edge_list(g)) == g

    def test_header_mismatch(self):
        with pytest.raises(FormatError):
            parse_edge_list("3 2\n0 1\n")

    def test_dot_shape(self):
        text = emit_dot(path_graph(3))
        assert text.startswith("graph G {")
        assert "0 -- 1;" in text and "1 -- 2;" in text


class TestSampler:
    def test_deterministic(self):
        a = list(sample_graphs(8, 0.5, seed=42, limit=5))
        b = list(sample_graphs(8, 0.5, seed=42, limit=5))
        assert a == b

    def test_deterministic_with_filter(self):
        from hamclosure.heaviness import is_pattern_o_heavy
        from hamclosure.patterns import PatternKind

        claw_o_heavy = lambda g: is_pattern_o_heavy(g, PatternKind.CLAW)
        a = list(sample_graphs(8, 0.5, seed=42, predicate=claw_o_heavy, limit=6))
        b = list(sample_graphs(8, 0.5, seed=42, predicate=claw_o_heavy, limit=6))
        assert a == b and len(a) == 6

    def test_p_one_gives_complete(self):
        for g in sample_graphs(5, 1.0, seed=7, predicate=is_connected, limit=3):
            assert g == complete_graph(5)

    def test_exhaustion_signalled(self):
        sampler = sample_graphs(4, 0.0, seed=1, predicate=is_connected, max_attempts=50)
        with pytest.raises(ExhaustionError):
            list(sampler)
        assert sampler.attempts == 50

    def test_predicate_and_ratio(self):
        sampler = sample_graphs(6, 0.4, seed=3, predicate=is_connected, limit=10)
        graphs = list(sampler)
        assert len(graphs) == 10
        assert all(is_connected(g) for g in graphs)
        assert sampler.attempts >= sampler.yielded == 10

    def test_bad_probability(self):
        with pytest.raises(InputError):
            sample_graphs(4, 1.5, seed=0)


def test_bipartite_constructor():
    g = complete_bipartite(2, 3)
    assert g.n == 5 and g.edge_count == 6
    assert not g.has_edge(0, 1) and g.has_edge(0, 2)
