#!/usr/bin/env python3
"""Competition graphs from the ground up.

Two vertices of the competition graph C(D) are adjacent exactly when they
share an out-neighbor (a common prey) in the digraph D.  This script builds
a few digraphs by hand and reads their competition graphs off.
"""

from compnum import Digraph, competition_graph, parse_arc_list, verify_realization, write_graph6
from compnum import complete_graph


def show(title, d):
    c = competition_graph(d)
    print(f"{title}")
    print(f"  arcs:  {d.sorted_arcs()}")
    print(f"  C(D):  edges {c.edges()}  (graph6: {write_graph6(c)})")
    print()


def main():
    print("=" * 60)
    print("Competition graphs of small digraphs")
    print("=" * 60)

    # both 0 and 1 point at 2, so 0 and 1 compete
    show("Two predators, one prey", Digraph(3, [(0, 2), (1, 2)]))

    # a directed 3-cycle: nobody shares prey with anybody
    show("Directed triangle", Digraph(3, [(0, 1), (1, 2), (2, 0)]))

    # no arcs, no competition
    show("No arcs at all", Digraph(4))

    # The defining question behind the competition number: for K_2, no
    # acyclic digraph on 2 vertices works, but one extra isolated vertex
    # acting as shared prey fixes that.
    print("Realizing K_2 with one added isolated vertex:")
    text = "digraph 3\n0 2\n1 2\n"
    d = parse_arc_list(text)
    result = verify_realization(complete_graph(2), 1, d)
    print(f"  witness arcs {d.sorted_arcs()}: verified = {bool(result)}")
    for arcs in ([], [(0, 1)], [(1, 0)], [(0, 1), (1, 0)]):
        attempt = verify_realization(complete_graph(2), 0, Digraph(2, arcs))
        print(f"  k=0 attempt {arcs or '(no arcs)'}: {attempt.reason or 'ok'}")
    print("\nEvery k=0 attempt fails, so the competition number of K_2 is 1.")


if __name__ == "__main__":
    main()
