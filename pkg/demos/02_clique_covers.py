#!/usr/bin/env python3
"""Clique covers, exactly.

Edge clique cover number: fewest cliques covering all edges.
Vertex clique cover number: fewest cliques containing all vertices.
Both are solved exactly by branch and bound over the maximal cliques, and a
third variant covers only a chosen subset of the edges.
"""

from compnum import (
    complete_graph,
    complete_multipartite_graph,
    cycle_graph,
    edge_clique_cover,
    edge_clique_cover_number,
    maximal_cliques,
    restricted_edge_cover_number,
    star_graph,
    vertex_clique_cover_number,
)


def profile(name, g):
    cliques = maximal_cliques(g)
    print(f"{name}: n={g.n}, edges={g.edge_count}")
    print(f"  maximal cliques ({len(cliques)}): {[sorted(c) for c in cliques]}")
    print(f"  edge clique cover number:   {edge_clique_cover_number(g)}")
    print(f"  vertex clique cover number: {vertex_clique_cover_number(g)}")
    print()


def main():
    print("=" * 60)
    print("Exact clique cover numbers")
    print("=" * 60)

    profile("C_4 (triangle-free: one clique per edge)", cycle_graph(4))
    profile("K_5 (one clique does it all)", complete_graph(5))
    profile("Star K_{1,4}", star_graph(4))
    profile("Complete tripartite K_{1,2,2}", complete_multipartite_graph([1, 2, 2]))

    g = cycle_graph(4)
    size, indices = edge_clique_cover(g)
    print(f"A minimum edge cover of C_4 uses cliques {list(indices)} "
          f"of its maximal-clique list (size {size}).")

    # covering only some of the edges can be strictly cheaper
    part = [(0, 1), (1, 2)]
    print(f"Covering just {part} inside C_4 needs "
          f"{restricted_edge_cover_number(g, part)} cliques, "
          f"versus {edge_clique_cover_number(g)} for every edge.")


if __name__ == "__main__":
    main()
