import random

import networkx as nx
import pytest

from compnum import (
    CycleError,
    Digraph,
    Graph,
    GraphParseError,
    all_labeled_graphs,
    complete_graph,
    complete_multipartite_graph,
    cycle_graph,
    edgeless_graph,
    generate,
    is_acyclic,
    parse_arc_list,
    parse_graph6,
    path_graph,
    random_graph,
    star_graph,
    topological_order,
    write_arc_list,
    write_dot,
    write_graph6,
)


# -- graph6 --------------------------------------------------------------------


class TestGraph6:
    def test_parse_triangle(self):
        g = parse_graph6("Bw")
        assert g.n == 3
        assert g.edges() == [(0, 1), (0, 2), (1, 2)]

    def test_parse_k4(self):
        g = parse_graph6("C~")
        assert g == complete_graph(4)

    def test_parse_single_vertex(self):
        g = parse_graph6("@")
        assert g.n == 1 and g.edge_count == 0

    def test_write_triangle(self):
        assert write_graph6(complete_graph(3)) == "Bw"

    def test_write_single_vertex(self):
        assert write_graph6(Graph(1)) == "@"

    def test_write_c4(self):
        # bits 101101 -> 45, 45 + 63 = 108 = 'l'
        assert write_graph6(cycle_graph(4)) == "Cl"

    def test_trailing_newline_tolerated(self):
        assert parse_graph6("Bw\n") == complete_graph(3)

    @pytest.mark.parametrize(
        "text,fragment",
        [
            ("", "byte 0"),
            ("~A?", "byte 0"),  # 63-vertex header form is unsupported
            (chr(30) + "w", "byte 0"),
            ("B" + chr(200), "byte 1"),
            ("Bww", "byte 2"),  # trailing garbage
            ("C", "byte 1"),  # truncated body
            ("Bx", "padding"),  # 111001: nonzero padding bit
        ],
    )
    def test_parse_errors(self, text, fragment):
        with pytest.raises(GraphParseError, match=fragment):
            parse_graph6(text)

    def test_round_trip_all_small(self, graphs_up_to_3, graphs_4, graphs_5):
        for g in graphs_up_to_3 + graphs_4 + graphs_5:
            assert parse_graph6(write_graph6(g)) == g

    def test_matches_reference_encoder(self, graphs_4):
        for g in graphs_4:
            ref = nx.Graph()
            ref.add_nodes_from(range(g.n))
            ref.add_edges_from(g.edges())
            expected = nx.to_graph6_bytes(ref, nodes=sorted(ref), header=False)
            assert write_graph6(g).encode() + b"\n" == expected

    def test_matches_reference_decoder(self, graphs_4):
        for g in graphs_4:
            decoded = nx.from_graph6_bytes(write_graph6(g).encode())
            assert sorted(decoded.nodes()) == list(range(g.n))
            assert sorted(tuple(sorted(e)) for e in decoded.edges()) == g.edges()


# -- graph basics ----------------------------------------------------------------


class TestGraph:
    def test_rejects_self_loop(self):
        with pytest.raises(ValueError, match="self-loop"):
            Graph(2, [(1, 1)])

    def test_rejects_out_of_range(self):
        with pytest.raises(ValueError, match="out of range"):
            Graph(2, [(0, 2)])

    def test_rejects_oversized(self):
        with pytest.raises(ValueError, match="62"):
            Graph(63)

    def test_empty_graph_is_legal(self):
        g = Graph(0)
        assert g.edges() == []
        assert g.closed_neighborhood([]) == frozenset()
        assert g.incident_edges([]) == frozenset()
        assert g.is_clique([])

    def test_open_neighborhood(self):
        p3 = path_graph(3)
        assert p3.neighbors(1) == {0, 2}
        assert complete_graph(4).neighbors(0) == {1, 2, 3}
        assert edgeless_graph(3).neighbors(2) == frozenset()
        with pytest.raises(ValueError):
            p3.neighbors(3)

    def test_closed_neighborhood(self):
        p3 = path_graph(3)
        assert p3.closed_neighborhood([0]) == {0, 1}
        c4 = cycle_graph(4)
        assert c4.closed_neighborhood([0, 2]) == {0, 1, 2, 3}
        assert c4.closed_neighborhood(range(4)) == frozenset(range(4))

    def test_incident_edges(self):
        p3 = path_graph(3)
        assert p3.incident_edges([0]) == {(0, 1)}
        c4 = cycle_graph(4)
        assert c4.incident_edges([0, 1]) == {(0, 1), (0, 3), (1, 2)}

    def test_incident_edges_of_all_vertices_is_edge_set(self, graphs_4):
        for g in graphs_4:
            assert g.incident_edges(range(g.n)) == frozenset(g.edges())

    def test_induced_subgraph(self):
        sub, relabel = complete_graph(4).induced_subgraph([0, 1, 2])
        assert sub == complete_graph(3)
        assert relabel == {0: 0, 1: 1, 2: 2}
        sub, relabel = cycle_graph(4).induced_subgraph([0, 1, 2])
        assert sub == path_graph(3)
        sub, _ = cycle_graph(4).induced_subgraph([])
        assert sub.n == 0

    def test_induced_subgraph_relabels_in_order(self):
        sub, relabel = cycle_graph(4).induced_subgraph([3, 1, 2])
        assert relabel == {1: 0, 2: 1, 3: 2}
        assert sub.edges() == [(0, 1), (1, 2)]

    def test_is_clique(self):
        assert complete_graph(4).is_clique([0, 1, 2])
        assert not cycle_graph(4).is_clique([0, 2])
        assert cycle_graph(4).is_clique([1])
        assert cycle_graph(4).is_clique([])

    def test_incident_edges_inside_closed_neighborhood(self, graphs_4):
        # every edge touching U lies in the subgraph induced on the closed
        # neighborhood of U
        for g in graphs_4:
            for mask in range(1 << g.n):
                u = [v for v in range(g.n) if (mask >> v) & 1]
                region = g.closed_neighborhood(u)
                sub, relabel = g.induced_subgraph(region)
                sub_edges = {(relabel[a], relabel[b]) for a, b in g.incident_edges(u)}
                assert sub_edges <= set(sub.edges())

    def test_neighborhood_monotone(self, graphs_4):
        rng = random.Random(11)
        for g in graphs_4:
            small = frozenset(v for v in range(g.n) if rng.random() < 0.4)
            big = small | frozenset(v for v in range(g.n) if rng.random() < 0.4)
            assert g.closed_neighborhood(small) <= g.closed_neighborhood(big)
            assert g.incident_edges(small) <= g.incident_edges(big)


# -- digraphs and the arc-list format ---------------------------------------------


class TestArcList:
    def test_parse_basic(self):
        d = parse_arc_list("digraph 3\n0 2\n1 2")
        assert d.n == 3 and d.arcs == {(0, 2), (1, 2)}

    def test_parse_no_arcs(self):
        d = parse_arc_list("digraph 2\n")
        assert d.n == 2 and d.arcs == frozenset()

    def test_comments_and_blank_lines(self):
        d = parse_arc_list("# witness\ndigraph 2\n\n0 1  # forward\n")
        assert d.arcs == {(0, 1)}

    @pytest.mark.parametrize(
        "text,fragment",
        [
            ("graph 2\n0 1", "line 1"),
            ("digraph x\n", "line 1"),
            ("digraph 2\n0 0", "line 2: loop"),
            ("digraph 2\n0 1\n0 1", "line 3: duplicate"),
            ("digraph 2\n0 5", "line 2: vertex out of range"),
            ("digraph 2\n0 1 2", "line 2"),
            ("", "header"),
        ],
    )
    def test_parse_errors(self, text, fragment):
        with pytest.raises(GraphParseError, match=fragment):
            parse_arc_list(text)

    def test_round_trip(self):
        d = Digraph(4, [(0, 2), (1, 2), (3, 0)])
        assert parse_arc_list(write_arc_list(d)) == d

    def test_digraph_rejects_loop(self):
        with pytest.raises(ValueError, match="loop"):
            Digraph(2, [(1, 1)])

    def test_dot_output_names_added_vertices(self):
        d = Digraph(3, [(0, 2), (1, 2)])
        dot = write_dot(d, added=1)
        assert "0 -> z1;" in dot and "1 -> z1;" in dot
        assert dot.startswith("digraph {")


class TestTopologicalOrder:
    def test_shared_prey(self):
        assert topological_order(Digraph(3, [(0, 2), (1, 2)])) == [0, 1, 2]

    def test_two_cycle(self):
        with pytest.raises(CycleError) as info:
            topological_order(Digraph(2, [(0, 1), (1, 0)]))
        assert info.value.cycle in ([0, 1], [1, 0])

    def test_no_arcs_breaks_ties_by_label(self):
        assert topological_order(Digraph(3)) == [0, 1, 2]

    def test_smallest_available_first(self):
        assert topological_order(Digraph(4, [(3, 0), (3, 1)])) == [2, 3, 0, 1]

    def test_cycle_is_reported_as_a_real_cycle(self):
        d = Digraph(5, [(0, 1), (1, 2), (2, 3), (3, 1), (3, 4)])
        with pytest.raises(CycleError) as info:
            topological_order(d)
        cyc = info.value.cycle
        assert len(cyc) >= 2
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            assert (a, b) in d.arcs

    def test_order_property_on_random_digraphs(self):
        rng = random.Random(5)
        for _ in range(50):
            n = rng.randrange(1, 9)
            arcs = [
                (u, v)
                for u in range(n)
                for v in range(n)
                if u != v and rng.random() < 0.25
            ]
            d = Digraph(n, arcs)
            try:
                order = topological_order(d)
            except CycleError as err:
                cyc = err.cycle
                for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                    assert (a, b) in d.arcs
                continue
            pos = {v: i for i, v in enumerate(order)}
            assert sorted(order) == list(range(n))
            for u, v in d.arcs:
                assert pos[u] < pos[v]
            assert is_acyclic(d)


# -- generators ----------------------------------------------------------------


class TestGenerators:
    def test_cycle(self):
        assert cycle_graph(4).edges() == [(0, 1), (0, 3), (1, 2), (2, 3)]

    def test_star_is_multipartite_1_3(self):
        assert complete_multipartite_graph([1, 3]) == star_graph(3)
        assert star_graph(3).edges() == [(0, 1), (0, 2), (0, 3)]

    def test_path_of_two_is_an_edge(self):
        assert path_graph(2) == complete_graph(2)

    def test_multipartite_blocks_are_consecutive(self):
        g = complete_multipartite_graph([2, 2])
        assert g.edges() == [(0, 2), (0, 3), (1, 2), (1, 3)]

    def test_random_is_reproducible(self):
        a = random_graph(8, 0.5, seed=7)
        b = random_graph(8, 0.5, seed=7)
        assert a == b
        assert a != random_graph(8, 0.5, seed=8)

    def test_generate_dispatch(self):
        assert generate("cycle", [4]) == cycle_graph(4)
        assert generate("multipartite", [1, 3]) == star_graph(3)
        assert generate("path", [2]) == complete_graph(2)
        with pytest.raises(ValueError, match="unknown family"):
            generate("moebius", [5])
        with pytest.raises(ValueError, match="seed"):
            generate("random", [5, 0.5])

    def test_cycle_too_small(self):
        with pytest.raises(ValueError):
            cycle_graph(2)


class TestAllLabeledGraphs:
    @pytest.mark.parametrize("n,count", [(0, 1), (2, 2), (3, 8), (5, 1024)])
    def test_counts(self, n, count):
        assert sum(1 for _ in all_labeled_graphs(n)) == count

    def test_order_is_increasing_bit_pattern(self):
        graphs = list(all_labeled_graphs(3))
        assert graphs[0] == edgeless_graph(3)
        assert graphs[-1] == complete_graph(3)
        assert graphs[1].edges() == [(0, 1)]  # lowest-order bit is the pair (0, 1)

    def test_no_duplicates(self, graphs_4):
        assert len(set(graphs_4)) == 64

    def test_refuses_large_without_force(self):
        with pytest.raises(ValueError, match="force"):
            next(all_labeled_graphs(7))
        assert next(all_labeled_graphs(7, force=True)) == edgeless_graph(7)
