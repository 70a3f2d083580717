import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bicontract.graphs import (
    Graph,
    GraphError,
    InvalidEdgeError,
    complement,
    complete_bipartite,
    complete_graph,
    components,
    contract_edge,
    contract_edges,
    cycle_graph,
    empty_graph,
    find_forbidden,
    induced,
    is_balanced_biclique,
    is_biclique,
    is_connected,
    mask_of,
    parse_edge_list,
    format_edge_list,
    path_graph,
    sf_size,
)
from bicontract.smallgraphs import labeled_graphs

from conftest import isomorphic_small, random_graph


class TestContractEdge:
    def test_triangle_collapses_to_edge(self):
        g = contract_edge(complete_graph(3), (0, 1))
        assert g.n == 2 and g.edge_count == 1

    def test_cycle_shortens(self):
        g = contract_edge(cycle_graph(4), (0, 1))
        assert isomorphic_small(g, complete_graph(3))

    def test_c5_contracts_to_c4(self):
        g = contract_edge(cycle_graph(5), (1, 2))
        assert isomorphic_small(g, cycle_graph(4))

    def test_absent_edge_rejected(self):
        with pytest.raises(InvalidEdgeError):
            contract_edge(path_graph(3), (0, 2))

    def test_merged_vertex_keeps_smaller_id(self):
        g = contract_edge(path_graph(3), (1, 2))
        assert g.vertices == (0, 1)

    def test_vertex_count_drops_by_one_and_stays_simple(self):
        for seed in range(25):
            g = random_graph(7, seed)
            for e in g.edges:
                h = contract_edge(g, e)
                assert h.n == g.n - 1
                h.validate()


class TestContractEdges:
    def test_path_two_ends(self):
        res = contract_edges(path_graph(4), [(0, 1), (2, 3)])
        assert isomorphic_small(res.graph, complete_bipartite(1, 1))
        assert res.skipped == ()

    def test_tree_collapses_to_point(self):
        g = Graph.from_edges(5, [(0, 1), (0, 2), (2, 3), (2, 4)])
        res = contract_edges(g, g.edges)
        assert res.graph.n == 1 and res.graph.edge_count == 0

    def test_c5_two_disjoint_edges(self):
        res = contract_edges(cycle_graph(5), [(0, 1), (2, 3)])
        assert isomorphic_small(res.graph, complete_graph(3))

    def test_cycle_edge_becomes_skip(self):
        g = complete_graph(3)
        res = contract_edges(g, [(0, 1), (1, 2), (0, 2)])
        assert res.graph.n == 1
        assert len(res.skipped) == 1

    def test_edge_must_exist_in_original(self):
        with pytest.raises(InvalidEdgeError):
            contract_edges(path_graph(4), [(0, 3)])

    def test_trace_replay_reproduces_result(self):
        g = random_graph(7, 3, p=0.5)
        subset = list(g.edges)[::2]
        res = contract_edges(g, subset)
        replay = g
        for kept, gone in res.trace.ops:
            replay = contract_edge(replay, (kept, gone))
        assert replay == res.graph

    @settings(deadline=None, max_examples=60)
    @given(st.integers(0, 10_000), st.integers(0, 10_000))
    def test_order_independent_exactly(self, seed, shuffle_seed):
        g = random_graph(7, seed, p=0.45)
        edges = list(g.edges)
        rng = random.Random(seed)
        subset = [e for e in edges if rng.random() < 0.4]
        first = contract_edges(g, subset).graph
        shuffled = list(subset)
        random.Random(shuffle_seed).shuffle(shuffled)
        second = contract_edges(g, shuffled).graph
        assert first == second

    def test_representative_map_idempotent(self):
        g = path_graph(6)
        res = contract_edges(g, [(0, 1), (1, 2), (4, 5)])
        for v in range(6):
            assert res.trace.rep(res.trace.rep(v)) == res.trace.rep(v)


class TestBicliqueRecognition:
    def test_complete_bipartite_yes(self):
        parts = is_biclique(complete_bipartite(2, 3))
        assert parts is not None
        sizes = sorted((parts.left.bit_count(), parts.right.bit_count()))
        assert sizes == [2, 3]

    def test_triangle_no(self):
        assert is_biclique(complete_graph(3)) is None

    def test_edge_plus_isolated_no(self):
        assert is_biclique(Graph.from_edges(3, [(0, 1)])) is None

    def test_edgeless_is_biclique_with_empty_side(self):
        parts = is_biclique(empty_graph(4))
        assert parts == (0b1111, 0)

    def test_biclique_plus_isolated_vertex_is_not(self):
        g = Graph.from_edges(5, [(0, 2), (0, 3), (1, 2), (1, 3)])
        assert is_biclique(g) is None

    @pytest.mark.parametrize(
        "g,expected",
        [
            (complete_bipartite(2, 2), True),
            (complete_bipartite(1, 2), False),
            (empty_graph(1), False),
            (empty_graph(2), True),
            (empty_graph(3), False),
            (complete_bipartite(3, 3), True),
        ],
    )
    def test_balanced(self, g, expected):
        assert is_balanced_biclique(g) is expected

    def test_find_forbidden_examples(self):
        assert find_forbidden(path_graph(3)) is None
        kind, triple = find_forbidden(complete_graph(3))
        assert kind == "K3" and triple == (0, 1, 2)
        kind, triple = find_forbidden(Graph.from_edges(3, [(0, 1)]))
        assert kind == "K1+K2" and triple == (0, 1, 2)

    def test_forbidden_scan_matches_direct_recognizer_exhaustively(self):
        # the two routes are independent implementations of the same predicate
        for n in range(0, 7):
            for g in labeled_graphs(n):
                assert (is_biclique(g) is not None) == (find_forbidden(g) is None)

    def test_forbidden_restricted_to_subset(self):
        g = Graph.from_edges(5, [(0, 1), (0, 2), (1, 2), (3, 4)])
        assert find_forbidden(g, within=mask_of([0, 1, 3])) is not None
        assert find_forbidden(g, within=mask_of([0, 1])) is None


class TestComponentsAndForests:
    def test_opposite_cycle_vertices_are_separate(self):
        comps = components(cycle_graph(4), mask_of([0, 2]))
        assert comps == [1 << 0, 1 << 2]

    def test_adjacent_cycle_vertices_join(self):
        comps = components(cycle_graph(4), mask_of([0, 1]))
        assert comps == [mask_of([0, 1])]

    def test_empty_subset(self):
        assert components(cycle_graph(4), 0) == []

    def test_partition_property(self):
        for seed in range(20):
            g = random_graph(8, seed, p=0.3)
            s = mask_of(v for v in range(8) if (seed * 7 + v) % 3)
            comps = components(g, s)
            acc = 0
            for c in comps:
                assert c & acc == 0
                acc |= c
            assert acc == s

    def test_sf_sizes(self):
        assert sf_size(path_graph(4)) == 3
        assert sf_size(cycle_graph(4)) == 3
        assert sf_size(cycle_graph(4), mask_of([0, 2])) == 0
        assert sf_size(complete_graph(5), 0) == 0

    def test_sf_connected_characterization(self):
        for seed in range(30):
            g = random_graph(6, seed, p=0.35)
            assert (sf_size(g) == g.n - 1) == is_connected(g)


class TestSmallOps:
    def test_complement_of_triangle(self):
        c = complement(complete_graph(3))
        assert c.edge_count == 0 and c.vertices == (0, 1, 2)

    def test_complement_preserves_sparse_ids(self):
        g = induced(cycle_graph(5), mask_of([0, 2, 3]))
        c = complement(g)
        assert c.vertices == (0, 2, 3)
        assert c.has_edge(0, 3) and not c.has_edge(2, 3)

    def test_induced_of_cycle_is_path(self):
        sub = induced(cycle_graph(5), mask_of([0, 1, 2]))
        assert isomorphic_small(sub, path_graph(3))

    def test_is_connected(self):
        assert not is_connected(Graph.from_edges(3, [(0, 1)]))
        assert is_connected(path_graph(5))
        assert is_connected(empty_graph(1))

    def test_edge_count_matches_adjacency_halving(self):
        g = random_graph(9, 5)
        assert g.edge_count == sum(g.degree(v) for v in g.vertices) // 2


class TestEdgeListFormat:
    def test_round_trip(self):
        g = cycle_graph(5)
        assert parse_edge_list(format_edge_list(g)) == g

    def test_comments_and_blanks_ignored(self):
        text = "c a comment\n\np 3 2\ne 1 2\nc another\ne 2 3\n"
        assert parse_edge_list(text) == path_graph(3)

    def test_reindexes_sparse_ids(self):
        g = induced(cycle_graph(5), mask_of([0, 1, 2]))
        text = format_edge_list(g)
        assert text.splitlines()[0] == "p 3 2"

    @pytest.mark.parametrize(
        "text",
        [
            "e 1 2\n",                # edge before header
            "p 3\n",                  # short header
            "p 3 1\ne 1 4\n",         # endpoint out of range
            "p 3 1\ne 2 2\n",         # self-loop
            "p 3 2\ne 1 2\n",         # wrong edge count
            "p 3 1\nq 1 2\n",         # unknown record
            "",                        # empty
        ],
    )
    def test_parse_errors(self, text):
        with pytest.raises(GraphError):
            parse_edge_list(text)

    def test_output_is_deterministic(self):
        g = random_graph(7, 11)
        assert format_edge_list(g) == format_edge_list(g)
