"""Maximal clique enumeration and exact minimum set cover.

These two primitives carry all the clique cover numbers: restricting cover
candidates to inclusion-maximal cliques is harmless because any clique in an
optimal cover can be enlarged to a maximal one without uncovering anything,
and that holds for edge covers, vertex covers, and covers of an edge subset
alike.
"""

from __future__ import annotations

from itertools import combinations
from typing import Hashable, Iterable, Sequence

from .graphs import Graph


class InfeasibleCoverError(ValueError):
    """Some universe element is not contained in any candidate set."""

    def __init__(self, element: Hashable):
        self.element = element
        super().__init__(f"element {element!r} is not covered by any candidate")


# -- maximal cliques ---------------------------------------------------------


def maximal_cliques(g: Graph) -> list[frozenset[int]]:
    """All inclusion-maximal cliques, each exactly once.

    Pivoting branch enumeration.  The result is sorted by member lists, so
    the order is deterministic and isolated vertices show up as singletons.
    """
    found: list[frozenset[int]] = []

    def expand(clique: frozenset[int], cand: set[int], excl: set[int]) -> None:
        if not cand and not excl:
            found.append(clique)
            return
        pivot = max(cand | excl, key=lambda u: (len(g.adj[u] & cand), -u))
        for v in sorted(cand - g.adj[pivot]):
            expand(clique | {v}, cand & g.adj[v], excl & g.adj[v])
            cand.discard(v)
            excl.add(v)

    if g.n:
        expand(frozenset(), set(range(g.n)), set())
    return sorted(found, key=sorted)


# -- exact set cover ---------------------------------------------------------


class CoverInstance:
    """Finite universe plus candidate subsets; extras outside the universe are
    dropped from the candidates on construction."""

    def __init__(self, universe: Iterable[Hashable], candidates: Iterable[Iterable[Hashable]]):
        self.universe = frozenset(universe)
        self.candidates = tuple(frozenset(c) & self.universe for c in candidates)

    def __repr__(self) -> str:
        return f"CoverInstance(|universe|={len(self.universe)}, candidates={len(self.candidates)})"


def _element_tables(universe, candidates):
    covers = {}
    masks = {}
    for e in universe:
        idxs = tuple(i for i, c in enumerate(candidates) if e in c)
        if not idxs:
            raise InfeasibleCoverError(e)
        covers[e] = idxs
        m = 0
        for i in idxs:
            m |= 1 << i
        masks[e] = m
    return covers, masks


def _packing_bound(uncovered, masks) -> int:
    # Count elements no single candidate can pair up: a lower bound on the
    # number of sets any cover must use.
    used = 0
    count = 0
    for e in sorted(uncovered):
        m = masks[e]
        if not m & used:
            count += 1
            used |= m
    return count


def _greedy_cover(universe, candidates):
    uncovered = set(universe)
    chosen = []
    while uncovered:
        best_i = -1
        best_gain = 0
        for i, c in enumerate(candidates):
            gain = len(c & uncovered)
            if gain > best_gain:
                best_gain, best_i = gain, i
        chosen.append(best_i)
        uncovered -= candidates[best_i]
    return chosen


def min_cover(
    universe: Iterable[Hashable],
    candidates: Sequence[frozenset],
    cap: int | None = None,
) -> tuple[int, tuple[int, ...]] | None:
    """Minimum-cardinality cover by branch and bound.

    Returns (size, chosen candidate indices); the choice is deterministic but
    not necessarily the lexicographically smallest optimum (min_set_cover
    provides that).  With ``cap`` set, returns None as soon as every cover
    provably needs more than ``cap`` sets.  Raises InfeasibleCoverError if
    some element is uncoverable.
    """
    universe = frozenset(universe)
    if not universe:
        return 0, ()
    covers, masks = _element_tables(universe, candidates)

    best_sel: tuple[int, ...] | None = None
    greedy = _greedy_cover(universe, candidates)
    best_size = len(greedy)
    if cap is None or best_size <= cap:
        best_sel = tuple(sorted(greedy))
    barrier = best_size if cap is None else min(best_size, cap + 1)

    def search(uncovered: frozenset, chosen: list[int]) -> None:
        nonlocal best_size, best_sel, barrier
        if not uncovered:
            if len(chosen) < barrier or best_sel is None:
                best_size = len(chosen)
                best_sel = tuple(sorted(chosen))
                barrier = best_size
            return
        if len(chosen) + _packing_bound(uncovered, masks) >= barrier:
            return
        branch = min(uncovered, key=lambda e: (len(covers[e]), e))
        for i in covers[branch]:
            chosen.append(i)
            search(uncovered - candidates[i], chosen)
            chosen.pop()

    search(universe, [])
    if best_sel is None or (cap is not None and best_size > cap):
        return None
    return best_size, best_sel


def min_set_cover(inst: CoverInstance) -> tuple[int, tuple[int, ...]]:
    """Exact minimum set cover with a deterministic certificate.

    The returned index set is the lexicographically smallest among all
    optimal subfamilies.
    """
    found = min_cover(inst.universe, inst.candidates)
    assert found is not None
    size, _ = found
    return size, _lex_min_cover(inst.universe, inst.candidates, size)


def _lex_min_cover(universe, candidates, size):
    if not universe:
        return ()
    _, masks = _element_tables(universe, candidates)
    m = len(candidates)
    suffix = [frozenset()] * (m + 1)
    for i in range(m - 1, -1, -1):
        suffix[i] = suffix[i + 1] | candidates[i]

    result: tuple[int, ...] | None = None

    def walk(start: int, uncovered: frozenset, chosen: list[int]) -> bool:
        nonlocal result
        if not uncovered:
            result = tuple(chosen)
            return True
        if len(chosen) == size or not uncovered <= suffix[start]:
            return False
        if len(chosen) + _packing_bound(uncovered, masks) > size:
            return False
        for i in range(start, m):
            # A set adding nothing new can never appear in a minimum cover.
            if not candidates[i] & uncovered:
                continue
            chosen.append(i)
            if walk(i + 1, uncovered - candidates[i], chosen):
                return True
            chosen.pop()
        return False

    walk(0, frozenset(universe), [])
    assert result is not None
    return result


# -- clique cover numbers ------------------------------------------------------


def _edge_candidates(g: Graph, cliques: Sequence[frozenset[int]]):
    return tuple(
        frozenset((u, v) for u, v in combinations(sorted(c), 2)) for c in cliques
    )


def edge_clique_cover_number(g: Graph) -> int:
    """Minimum number of cliques covering every edge; 0 if there are none."""
    size, _ = edge_clique_cover(g)
    return size


def edge_clique_cover(g: Graph) -> tuple[int, tuple[int, ...]]:
    """Minimum edge clique cover, reported as (size, indices into
    maximal_cliques(g))."""
    cliques = maximal_cliques(g)
    inst = CoverInstance(g.edges(), _edge_candidates(g, cliques))
    return min_set_cover(inst)


def vertex_clique_cover_number(g: Graph) -> int:
    """Minimum number of cliques containing every vertex; 0 for n = 0."""
    if g.n == 0:
        return 0
    inst = CoverInstance(range(g.n), maximal_cliques(g))
    size, _ = min_set_cover(inst)
    return size


def restricted_edge_cover_number(g: Graph, edge_subset: Iterable[tuple[int, int]]) -> int:
    """Minimum number of cliques of g covering every edge in the subset.

    Cliques may cover edges outside the subset; only the subset must be hit.
    """
    edges = frozenset(tuple(sorted(e)) for e in edge_subset)
    all_edges = frozenset(g.edges())
    stray = edges - all_edges
    if stray:
        raise ValueError(f"{min(stray)} is not an edge of the host graph")
    if not edges:
        return 0
    cliques = maximal_cliques(g)
    found = min_cover(edges, _edge_candidates(g, cliques))
    assert found is not None
    return found[0]
