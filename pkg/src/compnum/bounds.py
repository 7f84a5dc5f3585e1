"""Lower bounds for the competition number of a graph.

Three bounds are computed, all exact integer quantities:

* opsut_edge_bound:    (edge clique cover number) - n + 2
* opsut_vertex_bound:  min over vertices v of the vertex clique cover number
                       of the subgraph induced on the neighborhood of v
* general_bound:       max over m = 1..n of the m-th term, where the m-th
                       term is the minimum over all m-subsets U of

                           cover(U) - m + 1,

                       cover(U) being the minimum number of cliques of the
                       closed-neighborhood subgraph of U needed to cover all
                       edges incident to U.

The m = 1 term of the general bound equals opsut_vertex_bound, and for
n >= 2 the m = n-1 term equals opsut_edge_bound, so the general bound
dominates both; the test suite checks these identities exhaustively on
small-graph corpora.

Bounds are reported unclamped and can be negative (for complete graphs the
m-th term is 2 - m).  Callers compare against competition numbers with
max(0, bound).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .covers import restricted_edge_cover_number, vertex_clique_cover_number, edge_clique_cover_number
from .graphs import Graph


@dataclass(frozen=True)
class BoundTerm:
    """One per-m term: its value and a subset that attains it."""

    m: int
    value: int
    subset: tuple[int, ...]


@dataclass(frozen=True)
class BoundReport:
    """Everything the general bound computes for one graph.

    ``terms[m-1]`` holds the m-th term.  For m in ``truncated_ms`` the subset
    scan was cut short once it provably could not raise the maximum; the
    recorded value is then only an upper bound on that term, but ``general``
    is still the exact maximum over all m.
    """

    n: int
    opsut_edge: int
    opsut_vertex: int
    terms: tuple[BoundTerm, ...]
    general: int
    truncated_ms: frozenset[int]

    def term(self, m: int) -> BoundTerm:
        if not 1 <= m <= self.n:
            raise ValueError(f"m must be in 1..{self.n}, got {m}")
        return self.terms[m - 1]


def _require_vertices(g: Graph) -> None:
    if g.n == 0:
        raise ValueError("bound is undefined for the empty graph")


def opsut_edge_bound(g: Graph) -> int:
    """Edge-cover lower bound: edge clique cover number - n + 2, unclamped."""
    _require_vertices(g)
    return edge_clique_cover_number(g) - g.n + 2


def opsut_vertex_bound(g: Graph) -> int:
    """Neighborhood-cover lower bound, 0 as soon as some vertex is isolated."""
    _require_vertices(g)
    best = None
    for v in range(g.n):
        sub, _ = g.induced_subgraph(g.neighbors(v))
        value = vertex_clique_cover_number(sub)
        if best is None or value < best:
            best = value
    return best


def _subset_term(g: Graph, subset: Iterable[int]) -> int:
    subset = frozenset(subset)
    region = g.closed_neighborhood(subset)
    sub, relabel = g.induced_subgraph(region)
    target = [(relabel[u], relabel[v]) for u, v in g.incident_edges(subset)]
    return restricted_edge_cover_number(sub, target) - len(subset) + 1


def general_bound_term(g: Graph, m: int) -> BoundTerm:
    """Exact m-th term with the lexicographically first minimizing subset."""
    _require_vertices(g)
    if not 1 <= m <= g.n:
        raise ValueError(f"m must be in 1..{g.n}, got {m}")
    best = None
    best_subset = None
    for subset in combinations(range(g.n), m):
        value = _subset_term(g, subset)
        if best is None or value < best:
            best, best_subset = value, subset
    return BoundTerm(m, best, best_subset)


def general_bound(g: Graph, prune: bool = False) -> BoundReport:
    """Full report: both classical bounds plus every per-m term.

    With prune=True the scan for a given m stops once its running minimum
    drops to the best maximum seen so far (that m can no longer win); such m
    are listed in truncated_ms.  The reported ``general`` value is exact
    either way, and identical between pruned and unpruned runs.
    """
    _require_vertices(g)
    terms: list[BoundTerm] = []
    truncated: set[int] = set()
    best: int | None = None
    for m in range(1, g.n + 1):
        running: int | None = None
        argmin: tuple[int, ...] | None = None
        cut = False
        for subset in combinations(range(g.n), m):
            value = _subset_term(g, subset)
            if running is None or value < running:
                running, argmin = value, subset
            if prune and best is not None and running <= best:
                cut = True
                break
        terms.append(BoundTerm(m, running, argmin))
        if cut:
            truncated.add(m)
        else:
            best = running if best is None else max(best, running)
    return BoundReport(
        n=g.n,
        opsut_edge=opsut_edge_bound(g),
        opsut_vertex=opsut_vertex_bound(g),
        terms=tuple(terms),
        general=best,
        truncated_ms=frozenset(truncated),
    )
