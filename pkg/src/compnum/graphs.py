"""Simple graphs and digraphs on integer-labeled vertices, plus text formats.

Vertices are always 0..n-1.  Undirected graphs are capped at 62 vertices so
that every graph fits the one-header-byte graph6 encoding; the exact solvers
in this package are only practical far below that anyway.

Supported text formats:

* graph6 (one line): header byte ``chr(63 + n)`` for n <= 62, then the upper
  triangle of the adjacency matrix in column order x(0,1), x(0,2), x(1,2),
  x(0,3), ..., packed 6 bits per byte (most significant bit first), each byte
  offset by 63, zero bits as padding.  The writer emits canonical strings and
  the parser accepts exactly those, so parse and write are mutually inverse.
* arc list (multi-line): a ``digraph <n>`` header line, then one ``u v`` arc
  per line.  ``#`` starts a comment.  Duplicate arcs and loops are rejected.
* DOT (write-only), used to export witness digraphs for viewing.
"""

from __future__ import annotations

import heapq
import random
from functools import cached_property
from itertools import combinations
from typing import Iterable, Iterator, Sequence

MAX_GRAPH6_VERTICES = 62

#: Largest n for which all_labeled_graphs runs without force=True.
MAX_ENUMERATION_VERTICES = 6


class GraphParseError(ValueError):
    """A graph6 string or arc-list text could not be decoded."""


class CycleError(Exception):
    """A digraph that was expected to be acyclic contains a directed cycle.

    ``cycle`` holds the offending cycle as a list of distinct vertices
    [v0, v1, ..., vm] with arcs v0->v1->...->vm->v0.
    """

    def __init__(self, cycle: Sequence[int]):
        self.cycle = list(cycle)
        arrow = " -> ".join(str(v) for v in self.cycle + self.cycle[:1])
        super().__init__(f"directed cycle: {arrow}")


def _check_vertex(n: int, v: int) -> None:
    if not isinstance(v, int) or not 0 <= v < n:
        raise ValueError(f"vertex {v!r} out of range for {n} vertices")


class Graph:
    """Immutable simple undirected graph with set-based adjacency."""

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError(f"vertex count must be nonnegative, got {n}")
        if n > MAX_GRAPH6_VERTICES:
            raise ValueError(
                f"at most {MAX_GRAPH6_VERTICES} vertices supported, got {n}"
            )
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            _check_vertex(n, u)
            _check_vertex(n, v)
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            adj[u].add(v)
            adj[v].add(u)
        self.n = n
        self.adj: tuple[frozenset[int], ...] = tuple(frozenset(s) for s in adj)

    # -- basic queries ---------------------------------------------------

    def has_edge(self, u: int, v: int) -> bool:
        _check_vertex(self.n, u)
        _check_vertex(self.n, v)
        return v in self.adj[u]

    def edges(self) -> list[tuple[int, int]]:
        """All edges as sorted (u, v) pairs with u < v, in lexicographic order."""
        return [(u, v) for u in range(self.n) for v in sorted(self.adj[u]) if u < v]

    @property
    def edge_count(self) -> int:
        return sum(len(s) for s in self.adj) // 2

    def degree(self, v: int) -> int:
        _check_vertex(self.n, v)
        return len(self.adj[v])

    def neighbors(self, v: int) -> frozenset[int]:
        """Open neighborhood of v: all vertices adjacent to v, excluding v."""
        _check_vertex(self.n, v)
        return self.adj[v]

    # -- set-valued operations -------------------------------------------

    def _check_subset(self, vs: Iterable[int]) -> frozenset[int]:
        vs = frozenset(vs)
        for v in vs:
            _check_vertex(self.n, v)
        return vs

    def closed_neighborhood(self, vertices: Iterable[int]) -> frozenset[int]:
        """The given vertices together with everything adjacent to them."""
        vs = self._check_subset(vertices)
        out = set(vs)
        for v in vs:
            out |= self.adj[v]
        return frozenset(out)

    def incident_edges(self, vertices: Iterable[int]) -> frozenset[tuple[int, int]]:
        """All edges having at least one endpoint in the given set."""
        vs = self._check_subset(vertices)
        out = set()
        for v in vs:
            for u in self.adj[v]:
                out.add((u, v) if u < v else (v, u))
        return frozenset(out)

    def induced_subgraph(
        self, vertices: Iterable[int]
    ) -> tuple["Graph", dict[int, int]]:
        """Subgraph induced on the given set, relabeled to 0..|S|-1.

        Returns the new graph and the old-to-new label map.  Relabeling is
        order-preserving (smallest old label becomes 0).
        """
        vs = sorted(self._check_subset(vertices))
        relabel = {old: new for new, old in enumerate(vs)}
        edges = [
            (relabel[u], relabel[v])
            for u in vs
            for v in self.adj[u]
            if u < v and v in relabel
        ]
        return Graph(len(vs), edges), relabel

    def is_clique(self, vertices: Iterable[int]) -> bool:
        """True iff the vertices are pairwise adjacent; empty sets and
        singletons count as cliques."""
        vs = sorted(self._check_subset(vertices))
        return all(v in self.adj[u] for u, v in combinations(vs, 2))

    # -- dunder ------------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


class Digraph:
    """Immutable loop-free directed graph (may contain directed cycles)."""

    def __init__(self, n: int, arcs: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError(f"vertex count must be nonnegative, got {n}")
        arcset = set()
        for u, v in arcs:
            _check_vertex(n, u)
            _check_vertex(n, v)
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            arcset.add((u, v))
        self.n = n
        self.arcs: frozenset[tuple[int, int]] = frozenset(arcset)

    @cached_property
    def _out(self) -> tuple[frozenset[int], ...]:
        out: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.arcs:
            out[u].add(v)
        return tuple(frozenset(s) for s in out)

    @cached_property
    def _in(self) -> tuple[frozenset[int], ...]:
        inn: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.arcs:
            inn[v].add(u)
        return tuple(frozenset(s) for s in inn)

    def out_neighbors(self, v: int) -> frozenset[int]:
        _check_vertex(self.n, v)
        return self._out[v]

    def in_neighbors(self, v: int) -> frozenset[int]:
        _check_vertex(self.n, v)
        return self._in[v]

    @property
    def arc_count(self) -> int:
        return len(self.arcs)

    def sorted_arcs(self) -> list[tuple[int, int]]:
        return sorted(self.arcs)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Digraph):
            return NotImplemented
        return self.n == other.n and self.arcs == other.arcs

    def __hash__(self) -> int:
        return hash((self.n, self.arcs))

    def __repr__(self) -> str:
        return f"Digraph(n={self.n}, arcs={self.sorted_arcs()})"


# -- topological ordering -------------------------------------------------


def topological_order(d: Digraph) -> list[int]:
    """Vertex order in which every arc points forward.

    Deterministic: among the vertices currently available, the smallest
    label goes first.  Raises CycleError carrying one directed cycle if the
    digraph is not acyclic.
    """
    indeg = [0] * d.n
    for _, v in d.arcs:
        indeg[v] += 1
    ready = [v for v in range(d.n) if indeg[v] == 0]
    heapq.heapify(ready)
    order = []
    while ready:
        v = heapq.heappop(ready)
        order.append(v)
        for w in d.out_neighbors(v):
            indeg[w] -= 1
            if indeg[w] == 0:
                heapq.heappush(ready, w)
    if len(order) < d.n:
        remaining = frozenset(range(d.n)) - frozenset(order)
        raise CycleError(_find_cycle(d, remaining))
    return order


def _find_cycle(d: Digraph, remaining: frozenset[int]) -> list[int]:
    # Every vertex left over by the elimination above has an in-neighbor
    # among the leftovers, so walking backward must repeat a vertex.
    path = [min(remaining)]
    position = {path[0]: 0}
    while True:
        prev = min(u for u in d.in_neighbors(path[-1]) if u in remaining)
        if prev in position:
            cycle = path[position[prev]:]
            cycle.reverse()
            return cycle
        position[prev] = len(path)
        path.append(prev)


def is_acyclic(d: Digraph) -> bool:
    try:
        topological_order(d)
    except CycleError:
        return False
    return True


# -- graph6 ----------------------------------------------------------------


def _pair_order(n: int) -> list[tuple[int, int]]:
    """Upper-triangle pairs in graph6 column order."""
    return [(i, j) for j in range(1, n) for i in range(j)]


def parse_graph6(text: str) -> Graph:
    """Decode a one-line graph6 string (n <= 62).

    Errors name the byte offset of the first offending byte.
    """
    s = text.rstrip("\r\n")
    if not s:
        raise GraphParseError("byte 0: empty graph6 string")
    header = ord(s[0])
    if header == 126:
        raise GraphParseError("byte 0: vertex counts above 62 are not supported")
    if not 63 <= header <= 125:
        raise GraphParseError(f"byte 0: invalid header byte {s[0]!r}")
    n = header - 63
    npairs = n * (n - 1) // 2
    nbytes = (npairs + 5) // 6
    body = s[1:]
    if len(body) < nbytes:
        raise GraphParseError(
            f"byte {len(s)}: truncated body, expected {nbytes} data bytes, got {len(body)}"
        )
    if len(body) > nbytes:
        raise GraphParseError(f"byte {1 + nbytes}: trailing garbage after graph body")
    bits: list[int] = []
    for off, ch in enumerate(body, start=1):
        val = ord(ch) - 63
        if not 0 <= val <= 63:
            raise GraphParseError(f"byte {off}: data byte {ch!r} out of range")
        bits.extend((val >> shift) & 1 for shift in range(5, -1, -1))
    for idx in range(npairs, len(bits)):
        if bits[idx]:
            raise GraphParseError(f"byte {1 + idx // 6}: nonzero padding bit")
    pairs = _pair_order(n)
    edges = [pairs[idx] for idx in range(npairs) if bits[idx]]
    return Graph(n, edges)


def write_graph6(g: Graph) -> str:
    """Encode a graph as a canonical graph6 line (exact inverse of parse)."""
    if g.n > MAX_GRAPH6_VERTICES:
        raise ValueError(f"graph6 supports at most {MAX_GRAPH6_VERTICES} vertices")
    chars = [chr(63 + g.n)]
    acc = 0
    nbits = 0
    for i, j in _pair_order(g.n):
        acc = (acc << 1) | (1 if j in g.adj[i] else 0)
        nbits += 1
        if nbits == 6:
            chars.append(chr(63 + acc))
            acc, nbits = 0, 0
    if nbits:
        chars.append(chr(63 + (acc << (6 - nbits))))
    return "".join(chars)


# -- arc-list format ---------------------------------------------------------


def parse_arc_list(text: str) -> Digraph:
    """Decode the arc-list format.  Errors carry the offending line number."""
    n: int | None = None
    arcs: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if n is None:
            if len(parts) != 2 or parts[0] != "digraph" or not parts[1].isdigit():
                raise GraphParseError(f"line {lineno}: expected 'digraph <n>' header")
            n = int(parts[1])
            continue
        if len(parts) != 2:
            raise GraphParseError(f"line {lineno}: expected 'u v' arc")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphParseError(f"line {lineno}: expected integer vertex labels") from None
        if not (0 <= u < n and 0 <= v < n):
            raise GraphParseError(f"line {lineno}: vertex out of range 0..{n - 1}")
        if u == v:
            raise GraphParseError(f"line {lineno}: loop '{u} {v}' not allowed")
        if (u, v) in arcs:
            raise GraphParseError(f"line {lineno}: duplicate arc '{u} {v}'")
        arcs.add((u, v))
    if n is None:
        raise GraphParseError("line 1: missing 'digraph <n>' header")
    return Digraph(n, arcs)


def write_arc_list(d: Digraph) -> str:
    lines = [f"digraph {d.n}"]
    lines.extend(f"{u} {v}" for u, v in d.sorted_arcs())
    return "\n".join(lines) + "\n"


def write_dot(d: Digraph, added: int = 0) -> str:
    """DOT text for a digraph whose last ``added`` vertices came from a
    realization (they are named z1..zk; the rest keep their labels)."""
    if not 0 <= added <= d.n:
        raise ValueError(f"added count {added} out of range for {d.n} vertices")
    base = d.n - added

    def name(v: int) -> str:
        return str(v) if v < base else f"z{v - base + 1}"

    lines = ["digraph {"]
    lines.extend(f"  {name(v)};" for v in range(d.n))
    lines.extend(f"  {name(u)} -> {name(v)};" for u, v in d.sorted_arcs())
    lines.append("}")
    return "\n".join(lines) + "\n"


# -- generators --------------------------------------------------------------


def edgeless_graph(n: int) -> Graph:
    return Graph(n)


def path_graph(n: int) -> Graph:
    """Path 0-1-...-(n-1), consecutive labels adjacent."""
    if n < 1:
        raise ValueError("path needs at least 1 vertex")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    """Cycle in label order, closing the edge (0, n-1)."""
    if n < 3:
        raise ValueError("cycle needs at least 3 vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return Graph(n, combinations(range(n), 2))


def complete_multipartite_graph(parts: Sequence[int]) -> Graph:
    """Parts occupy consecutive label blocks; edges join distinct parts."""
    if not parts or any(p < 1 for p in parts):
        raise ValueError(f"part sizes must be positive, got {list(parts)}")
    n = sum(parts)
    block = []
    start = 0
    for p in parts:
        block.append(range(start, start + p))
        start += p
    edges = [
        (u, v)
        for a, b in combinations(range(len(parts)), 2)
        for u in block[a]
        for v in block[b]
    ]
    return Graph(n, edges)


def star_graph(leaves: int) -> Graph:
    """Center is vertex 0, leaves are 1..m."""
    if leaves < 0:
        raise ValueError("leaf count must be nonnegative")
    return complete_multipartite_graph([1, leaves]) if leaves else Graph(1)


def random_graph(n: int, p: float, seed: int) -> Graph:
    """Uniform G(n, p).  Each pair (i, j), i < j, is examined in lexicographic
    order; reproducible for a fixed seed."""
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"edge probability must be in [0, 1], got {p}")
    rng = random.Random(seed)
    return _random_graph(n, p, rng)


def _random_graph(n: int, p: float, rng: random.Random) -> Graph:
    return Graph(n, [e for e in combinations(range(n), 2) if rng.random() < p])


def random_graphs(n: int, p: float, seed: int, count: int) -> list[Graph]:
    """A reproducible stream of ``count`` draws from G(n, p), all fed by one
    generator seeded once."""
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"edge probability must be in [0, 1], got {p}")
    rng = random.Random(seed)
    return [_random_graph(n, p, rng) for _ in range(count)]


GENERATOR_FAMILIES = (
    "path",
    "cycle",
    "complete",
    "star",
    "multipartite",
    "edgeless",
    "random",
)


def generate(family: str, params: Sequence[float], seed: int | None = None) -> Graph:
    """Dispatch a named family.  Deterministic for fixed parameters and seed."""
    ints = [int(x) for x in params]
    if family == "path":
        return path_graph(*ints)
    if family == "cycle":
        return cycle_graph(*ints)
    if family == "complete":
        return complete_graph(*ints)
    if family == "star":
        return star_graph(*ints)
    if family == "multipartite":
        return complete_multipartite_graph(ints)
    if family == "edgeless":
        return edgeless_graph(*ints)
    if family == "random":
        if len(params) != 2:
            raise ValueError("random family takes parameters n,p")
        if seed is None:
            raise ValueError("random family requires a seed")
        return random_graph(int(params[0]), float(params[1]), seed)
    raise ValueError(f"unknown family {family!r}; known: {', '.join(GENERATOR_FAMILIES)}")


def all_labeled_graphs(n: int, force: bool = False) -> Iterator[Graph]:
    """Every labeled simple graph on n vertices, exactly once, in increasing
    order of the upper-triangle bit pattern (graph6 column order, bit k of the
    pattern being pair k).

    There are 2^(n(n-1)/2) of them, so n > 6 is refused unless force=True.
    """
    if n < 0:
        raise ValueError("vertex count must be nonnegative")
    if n > MAX_ENUMERATION_VERTICES and not force:
        raise ValueError(
            f"{2 ** (n * (n - 1) // 2)} graphs on {n} vertices; pass force=True to enumerate anyway"
        )
    pairs = _pair_order(n)
    for mask in range(1 << len(pairs)):
        yield Graph(n, [pairs[k] for k in range(len(pairs)) if (mask >> k) & 1])
