"""Competition graphs, exact competition numbers, and realization witnesses.

The competition graph of a digraph D joins two distinct vertices whenever
they share an out-neighbor.  The competition number of a graph G is the
smallest k such that G plus k added isolated vertices is the competition
graph of some acyclic digraph; find_realization searches for such a digraph
at a fixed k and competition_number drives it by iterative deepening from
the best known lower bound.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .bounds import general_bound
from .covers import maximal_cliques, min_cover
from .graphs import CycleError, Digraph, Graph, topological_order, write_arc_list, write_dot


class BudgetExceededError(Exception):
    """The node budget ran out before the search finished.

    Never conflated with infeasibility: when this is raised nothing is known
    about the k values whose search did not complete.  ``lower_bound`` (when
    set by competition_number) is the smallest k not yet ruled out.
    """

    def __init__(self, message: str, lower_bound: int | None = None):
        super().__init__(message)
        self.lower_bound = lower_bound


@dataclass(frozen=True)
class Verification:
    ok: bool
    reason: str | None = None

    def __bool__(self) -> bool:
        return self.ok


@dataclass(frozen=True)
class RealizationWitness:
    """Certificate that k added isolated vertices suffice for a graph.

    ``digraph`` lives on n + k vertices, the added ones labeled n..n+k-1 and
    placed after all originals in ``ordering`` (an acyclic ordering of the
    digraph).  Added vertices never have outgoing arcs.
    """

    k: int
    digraph: Digraph
    ordering: tuple[int, ...]

    @property
    def original_count(self) -> int:
        return self.digraph.n - self.k

    def to_arc_list(self) -> str:
        return write_arc_list(self.digraph)

    def to_dot(self) -> str:
        return write_dot(self.digraph, added=self.k)


def competition_graph(d: Digraph) -> Graph:
    """Graph on the same vertices joining every pair with a common prey.

    The digraph need not be acyclic.
    """
    edges = set()
    for v in range(d.n):
        for x, y in combinations(sorted(d.in_neighbors(v)), 2):
            edges.add((x, y))
    return Graph(d.n, edges)


def verify_realization(g: Graph, k: int, d: Digraph) -> Verification:
    """Check that d is acyclic and its competition graph is exactly g plus k
    added isolated vertices (labels g.n..g.n+k-1).

    The first failed condition is reported, in the order: cycle found,
    missing edge, extra edge, non-isolated added vertex.
    """
    if k < 0:
        raise ValueError(f"k must be nonnegative, got {k}")
    if d.n != g.n + k:
        raise ValueError(f"digraph has {d.n} vertices, expected {g.n} + {k}")
    try:
        topological_order(d)
    except CycleError as err:
        arrow = " -> ".join(str(v) for v in err.cycle + err.cycle[:1])
        return Verification(False, f"cycle found: {arrow}")
    comp = competition_graph(d)
    for u, v in g.edges():
        if not comp.has_edge(u, v):
            return Verification(False, f"missing edge {u}-{v}")
    for u, v in comp.edges():
        if v < g.n and not g.has_edge(u, v):
            return Verification(False, f"extra edge {u}-{v}")
    for u, v in comp.edges():
        if v >= g.n:
            return Verification(False, f"non-isolated added vertex {v} (edge {u}-{v})")
    return Verification(True)


# -- feasibility search -------------------------------------------------------
#
# Why searching (vertex order, one clique per position, residual cover) is
# enough to decide feasibility at a fixed k:
#
# Take any acyclic digraph realizing the target graph plus k isolated
# vertices.  In its competition graph, the in-neighborhood of every vertex is
# a clique (its members all share that prey).  An added vertex appearing in
# an in-neighborhood of size >= 2 would therefore be adjacent to something,
# contradicting its isolation, and an in-neighborhood of size 1 creates no
# edge at all, so its arc can be dropped.  After dropping those arcs, every
# in-neighborhood is a clique of the original graph, added vertices have no
# outgoing arcs, and they can be moved to the back of an acyclic ordering.
# What remains is exactly an object of the searched shape: an ordering
# v_1..v_n of the original vertices where each v_i receives arcs from one
# clique inside {v_1..v_{i-1}}, plus up to k cliques feeding the added
# vertices, and together those cliques cover every edge.  Conversely any such
# assignment assembles into a realizing acyclic digraph, so exhausting the
# reformulated space at a given k is a proof of infeasibility.
#
# Two loss-free reductions shrink the space: the clique at position i may be
# taken inclusion-maximal within the first i-1 vertices (enlarging covers
# more and creates only edges the graph already has), and positions 1 and 2
# contribute nothing (no predecessors / a single predecessor covers no edge).
# Swapping the first two vertices changes nothing either, so orderings with
# v_1 > v_2 are skipped.


def find_realization(
    g: Graph, k: int, budget: int | None = None
) -> RealizationWitness | None:
    """Search for a witness with exactly k added vertices.

    Returns the witness found first in lexicographic exploration order, or
    None when no realization with k added vertices exists (a proof, not a
    timeout).  Raises BudgetExceededError when ``budget`` search nodes are
    spent first.
    """
    if k < 0:
        raise ValueError(f"k must be nonnegative, got {k}")
    n = g.n
    all_edges = frozenset(g.edges())
    host_cliques = maximal_cliques(g)
    clique_edges = tuple(
        frozenset((u, v) for u, v in combinations(sorted(c), 2)) for c in host_cliques
    )
    # Which maximal cliques cover each edge, as index bitmasks; drives the
    # pairwise-disjointness pruning bound.
    edge_mask = {}
    for e in all_edges:
        m = 0
        for i, ce in enumerate(clique_edges):
            if e in ce:
                m |= 1 << i
        edge_mask[e] = m

    def packing_bound(uncovered: frozenset) -> int:
        used = 0
        count = 0
        for e in sorted(uncovered):
            m = edge_mask[e]
            if not m & used:
                count += 1
                used |= m
        return count

    prefix_cliques: dict[frozenset, list[frozenset]] = {}

    def cliques_of_prefix(placed: frozenset) -> list[frozenset]:
        cached = prefix_cliques.get(placed)
        if cached is None:
            sub, relabel = g.induced_subgraph(placed)
            back = {new: old for old, new in relabel.items()}
            cached = [
                frozenset(back[v] for v in c) for c in maximal_cliques(sub)
            ]
            prefix_cliques[placed] = cached
        return cached

    residual: dict[frozenset, tuple[int, ...] | None] = {}

    def residual_cover(uncovered: frozenset) -> tuple[int, ...] | None:
        if uncovered in residual:
            return residual[uncovered]
        found = min_cover(uncovered, clique_edges, cap=k)
        result = None if found is None else found[1]
        residual[uncovered] = result
        return result

    nodes_left = [budget]

    def spend() -> None:
        if nodes_left[0] is None:
            return
        nodes_left[0] -= 1
        if nodes_left[0] < 0:
            raise BudgetExceededError(f"node budget of {budget} exhausted")

    dead: set[tuple[frozenset, frozenset]] = set()
    order: list[int] = []
    chosen: list[frozenset] = []

    def extend(placed: frozenset, covered: frozenset) -> RealizationWitness | None:
        spend()
        if len(order) == n:
            indices = residual_cover(all_edges - covered)
            if indices is None:
                return None
            return _assemble(g, k, order, chosen, [host_cliques[i] for i in indices])
        key = (placed, covered)
        if key in dead:
            return None
        # Feeder cliques only arrive at positions 3..n; count those slots.
        slots = max(0, n - max(len(order), 2))
        if slots + k < packing_bound(all_edges - covered):
            dead.add(key)
            return None
        feeders = cliques_of_prefix(placed) if len(order) >= 2 else [frozenset()]
        for v in sorted(frozenset(range(n)) - placed):
            if len(order) == 1 and v < order[0]:
                continue  # first two positions are interchangeable
            order.append(v)
            for clique in feeders:
                chosen.append(clique)
                witness = extend(
                    placed | {v},
                    covered | frozenset(
                        (a, b) for a, b in combinations(sorted(clique), 2)
                    ),
                )
                if witness is not None:
                    return witness
                chosen.pop()
            order.pop()
        dead.add(key)
        return None

    return extend(frozenset(), frozenset())


def _assemble(
    g: Graph,
    k: int,
    order: list[int],
    feeders: list[frozenset],
    residual_cliques: list[frozenset],
) -> RealizationWitness:
    n = g.n
    arcs = []
    for position, v in enumerate(order):
        for u in feeders[position]:
            arcs.append((u, v))
    for j, clique in enumerate(residual_cliques):
        for u in clique:
            arcs.append((u, n + j))
    witness = RealizationWitness(
        k=k,
        digraph=Digraph(n + k, arcs),
        ordering=tuple(order) + tuple(range(n, n + k)),
    )
    check = verify_realization(g, k, witness.digraph)
    if not check.ok:  # internal consistency guard, never expected to fire
        raise RuntimeError(f"assembled witness failed verification: {check.reason}")
    return witness


def competition_number(
    g: Graph, start_k: int | None = None, budget: int | None = None
) -> tuple[int, RealizationWitness]:
    """Exact competition number with a verified witness.

    Iterative deepening: k starts at max(0, general lower bound) unless
    start_k is given, and grows until a realization exists.  Termination is
    guaranteed because the edge clique cover number always suffices.
    ``budget`` caps search nodes per feasibility level; on exhaustion the
    raised BudgetExceededError carries the smallest k not yet ruled out,
    everything below it having been proven infeasible.
    """
    if g.n == 0:
        raise ValueError("competition number of the empty graph is not defined here")
    if start_k is not None:
        if start_k < 0:
            raise ValueError(f"start_k must be nonnegative, got {start_k}")
        k = start_k
    else:
        k = max(0, general_bound(g, prune=True).general)
    while True:
        try:
            witness = find_realization(g, k, budget=budget)
        except BudgetExceededError as err:
            raise BudgetExceededError(str(err), lower_bound=k) from None
        if witness is not None:
            return k, witness
        k += 1


# -- cover extraction from a witness -----------------------------------------


@dataclass(frozen=True)
class WitnessCover:
    """Edge clique cover read off a realization witness.

    ``tail`` is the set of the last m original vertices of the witness
    ordering, ``region`` its closed neighborhood, and ``cliques`` the
    in-neighborhoods (clipped to the region) of every later tail vertex and
    every added vertex.  Members are kept as a multiset: empty members are
    retained so that the count is exactly m + k - 1, with the deduplicated
    count reported separately.
    """

    tail: frozenset[int]
    region: frozenset[int]
    target_edges: frozenset[tuple[int, int]]
    cliques: tuple[frozenset[int], ...]

    @property
    def size(self) -> int:
        return len(self.cliques)

    @property
    def distinct_size(self) -> int:
        return len(set(self.cliques))

    @property
    def empty_members(self) -> int:
        return sum(1 for c in self.cliques if not c)

    def covers_target(self) -> bool:
        return all(
            any(u in c and v in c for c in self.cliques) for u, v in self.target_edges
        )

    def members_are_cliques(self, g: Graph) -> bool:
        return all(c <= self.region and g.is_clique(c) for c in self.cliques)


def cover_from_witness(g: Graph, witness: RealizationWitness, m: int) -> WitnessCover:
    """Turn a verified witness into an edge clique cover of the edges incident
    to the last m ordered original vertices, inside their closed neighborhood.

    The family has exactly m + k - 1 members and always covers those edges,
    which is what makes the m-th general-bound term at most k.
    """
    n = g.n
    if not 1 <= m <= n:
        raise ValueError(f"m must be in 1..{n}, got {m}")
    check = verify_realization(g, witness.k, witness.digraph)
    if not check.ok:
        raise ValueError(f"witness does not realize the graph: {check.reason}")
    if sorted(witness.ordering) != list(range(n + witness.k)):
        raise ValueError("witness ordering is not a permutation of the vertices")
    if any(v < n for v in witness.ordering[n:]):
        raise ValueError("witness ordering must place all added vertices last")
    position = {v: i for i, v in enumerate(witness.ordering)}
    if any(position[u] >= position[v] for u, v in witness.digraph.arcs):
        raise ValueError("witness ordering is not an acyclic ordering of its digraph")
    originals = list(witness.ordering[:n])
    tail = originals[n - m:]
    region = g.closed_neighborhood(tail)
    sources = tail[1:] + list(range(n, n + witness.k))
    return WitnessCover(
        tail=frozenset(tail),
        region=region,
        target_edges=g.incident_edges(tail),
        cliques=tuple(
            frozenset(witness.digraph.in_neighbors(x)) & region for x in sources
        ),
    )
