"""Simple undirected graphs on integer bitmasks, with edge contraction.

Vertex ids are small non-negative integers used as bit positions, so a
vertex set is a plain ``int`` with those bits set.  Ids are stable: when
an edge is contracted the merged vertex keeps the smaller endpoint id and
every other vertex keeps its bit.  That stability is what lets contraction
traces and certificates keep referring to original vertices.

All operations are pure: input graphs are never mutated, results are
fresh values.
"""

from __future__ import annotations

from typing import Iterable, Iterator, NamedTuple


class GraphError(Exception):
    """Malformed graph input or misuse of a graph operation."""


class InvalidEdgeError(GraphError):
    """An operation referenced an edge that is not in the graph."""


class DisconnectedGraphError(GraphError):
    """A solver that requires connected input was given a disconnected graph."""


def bit(v: int) -> int:
    return 1 << v


def mask_of(ids: Iterable[int]) -> int:
    m = 0
    for v in ids:
        m |= 1 << v
    return m


def bits(mask: int) -> Iterator[int]:
    """Yield the vertex ids set in ``mask``, ascending."""
    while mask:
        b = mask & -mask
        yield b.bit_length() - 1
        mask ^= b


def submasks(mask: int) -> Iterator[int]:
    """Yield every submask of ``mask`` (including 0 and mask itself)."""
    s = mask
    while True:
        yield s
        if s == 0:
            return
        s = (s - 1) & mask


class Graph:
    """Immutable simple graph: a vertex mask plus per-vertex neighbor masks."""

    __slots__ = ("_vmask", "_adj")

    def __init__(self, vmask: int, adj: dict[int, int]):
        self._vmask = vmask
        self._adj = adj

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        """Graph on vertex ids 0..n-1 with the given undirected edges."""
        vmask = (1 << n) - 1
        adj = {v: 0 for v in range(n)}
        for u, v in edges:
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u},{v}) outside vertex range 0..{n - 1}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(vmask, adj)

    @classmethod
    def from_vertices(cls, ids: Iterable[int], edges: Iterable[tuple[int, int]]) -> "Graph":
        """Graph on an arbitrary (possibly sparse) id set."""
        vmask = mask_of(ids)
        adj = {v: 0 for v in bits(vmask)}
        for u, v in edges:
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if u not in adj or v not in adj:
                raise GraphError(f"edge ({u},{v}) uses an unknown vertex")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(vmask, adj)

    @property
    def n(self) -> int:
        return self._vmask.bit_count()

    @property
    def vertex_mask(self) -> int:
        return self._vmask

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(bits(self._vmask))

    def adj_mask(self, v: int) -> int:
        return self._adj[v]

    def neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(bits(self._adj[v]))

    def degree(self, v: int) -> int:
        return self._adj[v].bit_count()

    def has_vertex(self, v: int) -> bool:
        return bool(self._vmask >> v & 1) if v >= 0 else False

    def has_edge(self, u: int, v: int) -> bool:
        return self.has_vertex(u) and bool(self._adj[u] >> v & 1)

    @property
    def edge_count(self) -> int:
        return sum(m.bit_count() for m in self._adj.values()) // 2

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        out = []
        for u in bits(self._vmask):
            higher = self._adj[u] >> (u + 1) << (u + 1)
            for v in bits(higher):
                out.append((u, v))
        return tuple(out)

    def validate(self) -> None:
        """Check structural invariants; raises GraphError on violation."""
        for v, m in self._adj.items():
            if not self._vmask >> v & 1:
                raise GraphError(f"adjacency entry for absent vertex {v}")
            if m >> v & 1:
                raise GraphError(f"self-loop at vertex {v}")
            if m & ~self._vmask:
                raise GraphError(f"vertex {v} adjacent to absent vertices")
            for u in bits(m):
                if not self._adj[u] >> v & 1:
                    raise GraphError(f"asymmetric adjacency between {u} and {v}")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._vmask == other._vmask and self._adj == other._adj

    def __hash__(self) -> int:
        return hash((self._vmask, tuple(sorted(self._adj.items()))))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.edge_count})"


# ---------------------------------------------------------------------------
# constructors for common graphs


def empty_graph(n: int) -> Graph:
    return Graph.from_edges(n, [])


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycles need at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def complete_bipartite(p: int, q: int) -> Graph:
    return Graph.from_edges(p + q, [(i, p + j) for i in range(p) for j in range(q)])


# ---------------------------------------------------------------------------
# components / spanning forests


def components(g: Graph, smask: int | None = None) -> list[int]:
    """Connected components of g[smask] as masks, ordered by minimum vertex id."""
    if smask is None:
        smask = g._vmask
    elif smask & ~g._vmask:
        raise GraphError("component query outside the vertex set")
    adj = g._adj
    out = []
    rem = smask
    while rem:
        comp = 0
        frontier = rem & -rem
        while frontier:
            comp |= frontier
            acc = 0
            f = frontier
            while f:
                b = f & -f
                acc |= adj[b.bit_length() - 1]
                f ^= b
            frontier = acc & smask & ~comp
        out.append(comp)
        rem &= ~comp
    return out


def component_count(g: Graph, smask: int) -> int:
    return len(components(g, smask))


def sf_size(g: Graph, smask: int | None = None) -> int:
    """Edge count of a spanning forest of g[smask]: |S| minus component count."""
    if smask is None:
        smask = g._vmask
    return smask.bit_count() - len(components(g, smask))


def is_connected(g: Graph) -> bool:
    return len(components(g, g._vmask)) <= 1


def induced(g: Graph, smask: int) -> Graph:
    """Induced subgraph on the vertices of ``smask``; ids are preserved."""
    if smask & ~g._vmask:
        raise GraphError("induced subgraph outside the vertex set")
    return Graph(smask, {v: g._adj[v] & smask for v in bits(smask)})


def complement(g: Graph) -> Graph:
    """Complement graph on the same vertex ids."""
    vm = g._vmask
    return Graph(vm, {v: vm & ~g._adj[v] & ~(1 << v) for v in bits(vm)})


# ---------------------------------------------------------------------------
# edge contraction


class ContractionTrace:
    """Record of contractions mapping original vertices to surviving ids.

    ``ops`` lists the performed contractions as (surviving, absorbed) pairs
    in order; replaying them on the original graph reproduces the current
    one.  ``rep`` is the representative map, with path compression, so it
    is idempotent: rep(rep(v)) == rep(v).
    """

    __slots__ = ("ops", "_parent")

    def __init__(self, vmask: int):
        self.ops: list[tuple[int, int]] = []
        self._parent: dict[int, int] = {v: v for v in bits(vmask)}

    def rep(self, v: int) -> int:
        p = self._parent
        root = v
        while p[root] != root:
            root = p[root]
        while p[v] != root:
            p[v], v = root, p[v]
        return root

    def record(self, kept: int, absorbed: int) -> None:
        self.ops.append((kept, absorbed))
        self._parent[self.rep(absorbed)] = self.rep(kept)

    def fork(self) -> "ContractionTrace":
        t = ContractionTrace(0)
        t.ops = list(self.ops)
        t._parent = dict(self._parent)
        return t

    def current_mask(self, original_mask: int) -> int:
        """Map a mask of original vertices to the mask of their representatives."""
        out = 0
        for v in bits(original_mask):
            out |= 1 << self.rep(v)
        return out

    def preimage_mask(self, current_mask: int) -> int:
        """Mask of all original vertices whose representative lies in current_mask."""
        out = 0
        for v in self._parent:
            if current_mask >> self.rep(v) & 1:
                out |= 1 << v
        return out


class ContractionResult(NamedTuple):
    graph: Graph
    trace: ContractionTrace
    skipped: tuple[tuple[int, int], ...]  # edges whose endpoints were already merged


def contract_edge(g: Graph, e: tuple[int, int]) -> Graph:
    """Contract one edge; the merged vertex keeps the smaller endpoint id."""
    u, v = e
    if not g.has_edge(u, v):
        raise InvalidEdgeError(f"edge ({u},{v}) not in graph")
    keep, gone = (u, v) if u < v else (v, u)
    kb, gb = 1 << keep, 1 << gone
    adj = g._adj
    merged = (adj[keep] | adj[gone]) & ~kb & ~gb
    new_adj = {}
    for w in bits(g._vmask & ~gb):
        if w == keep:
            new_adj[w] = merged
        else:
            m = adj[w] & ~gb
            if merged >> w & 1:
                m |= kb
            new_adj[w] = m
    return Graph(g._vmask & ~gb, new_adj)


def contract_edges(g: Graph, edges: Iterable[tuple[int, int]]) -> ContractionResult:
    """Contract a set of edges, tracking endpoints through representatives.

    Every edge must exist in the original graph.  An edge whose endpoints
    have already been merged together would be a self-loop; it is skipped
    and reported.  The resulting graph is independent of the contraction
    order (the merged vertex of each group ends up with the group minimum
    id).
    """
    trace = ContractionTrace(g._vmask)
    cur = g
    skipped = []
    for u, v in edges:
        if not g.has_edge(u, v):
            raise InvalidEdgeError(f"edge ({u},{v}) not in original graph")
        ru, rv = trace.rep(u), trace.rep(v)
        if ru == rv:
            skipped.append((u, v))
            continue
        keep, gone = (ru, rv) if ru < rv else (rv, ru)
        cur = contract_edge(cur, (keep, gone))
        trace.record(keep, gone)
    return ContractionResult(cur, trace, tuple(skipped))


# ---------------------------------------------------------------------------
# biclique recognition


class Bipartition(NamedTuple):
    """Ordered pair of disjoint vertex masks covering a graph's vertices."""

    left: int
    right: int

    def side_of(self, v: int) -> str:
        return "left" if self.left >> v & 1 else "right"


def is_biclique(g: Graph) -> Bipartition | None:
    """Bipartition witnessing that g is a complete bipartite graph, else None.

    Edgeless graphs count as bicliques and yield the bipartition (V, 0).
    Implemented directly: 2-color the single component, then check that
    every cross pair is an edge.  ``find_forbidden`` is the independent
    route to the same predicate.
    """
    vm = g._vmask
    if all(m == 0 for m in g._adj.values()):
        return Bipartition(vm, 0)
    comps = components(g, vm)
    if len(comps) != 1:
        return None  # an edge plus any other component induces K1+K2
    # BFS 2-coloring from the minimum id vertex.
    adj = g._adj
    start = vm & -vm
    color0, color1 = start, 0
    frontier, side = start, 0
    while frontier:
        acc = 0
        f = frontier
        while f:
            b = f & -f
            acc |= adj[b.bit_length() - 1]
            f ^= b
        if side == 0:
            frontier = acc & ~color1 & ~color0
            color1 |= acc & ~color0
        else:
            frontier = acc & ~color0 & ~color1
            color0 |= acc & ~color1
        side ^= 1
    # The scan below is self-certifying: it passes only if (color0, color1)
    # really is a complete bipartition, so odd cycles need no separate check.
    for v in bits(color0):
        if adj[v] != color1:
            return None
    for v in bits(color1):
        if adj[v] != color0:
            return None
    return Bipartition(color0, color1)


def is_balanced_biclique(g: Graph) -> bool:
    """True iff g is a biclique whose two sides have equal size.

    For edgeless graphs the parts are not pinned down by edges, so the
    ruling is: balanced iff the vertex count is even (split arbitrarily).
    In particular a single vertex is a biclique but not a balanced one.
    """
    parts = is_biclique(g)
    if parts is None:
        return False
    if parts.right == 0:
        # Edgeless graph: no edges pin the sides, so any even split works.
        # A single vertex has sides 1 and 0 and is not balanced.
        return g.n % 2 == 0
    return parts.left.bit_count() == parts.right.bit_count()


def find_forbidden(g: Graph, within: int | None = None) -> tuple[str, tuple[int, int, int]] | None:
    """Find a vertex triple inducing a triangle or an edge-plus-isolated-vertex.

    Returns ("K3", (a, b, c)) or ("K1+K2", (a, b, c)) with the triple in
    ascending order, or None exactly when g[within] is a biclique.  Scans
    edges in ascending order, checking the triangle pattern first, so the
    result is deterministic.
    """
    mask = g._vmask if within is None else within
    adj = g._adj
    for u in bits(mask):
        au = adj[u] & mask
        higher = au >> (u + 1) << (u + 1)
        for v in bits(higher):
            common = au & adj[v]
            if common:
                w = common & -common
                tri = sorted((u, v, w.bit_length() - 1))
                return "K3", (tri[0], tri[1], tri[2])
            rest = mask & ~au & ~adj[v] & ~(1 << u) & ~(1 << v)
            if rest:
                w = rest & -rest
                tri = sorted((u, v, w.bit_length() - 1))
                return "K1+K2", (tri[0], tri[1], tri[2])
    return None


# ---------------------------------------------------------------------------
# edge-list text format
#
# First line ``p <n> <m>``, then m lines ``e <u> <v>`` with 1-based vertex
# indices.  Blank lines and lines starting with ``c`` are ignored.


def parse_edge_list(text: str) -> Graph:
    n = None
    m_declared = 0
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if n is not None:
                raise GraphError(f"line {lineno}: duplicate header")
            if len(parts) != 3:
                raise GraphError(f"line {lineno}: header must be 'p <n> <m>'")
            try:
                n, m_declared = int(parts[1]), int(parts[2])
            except ValueError:
                raise GraphError(f"line {lineno}: non-integer header fields") from None
            if n < 0 or m_declared < 0:
                raise GraphError(f"line {lineno}: negative header fields")
        elif parts[0] == "e":
            if n is None:
                raise GraphError(f"line {lineno}: edge before header")
            if len(parts) != 3:
                raise GraphError(f"line {lineno}: edge line must be 'e <u> <v>'")
            try:
                u, v = int(parts[1]), int(parts[2])
            except ValueError:
                raise GraphError(f"line {lineno}: non-integer edge endpoints") from None
            if not (1 <= u <= n and 1 <= v <= n):
                raise GraphError(f"line {lineno}: endpoint outside 1..{n}")
            if u == v:
                raise GraphError(f"line {lineno}: self-loop")
            edges.append((u - 1, v - 1))
        else:
            raise GraphError(f"line {lineno}: unknown record {parts[0]!r}")
    if n is None:
        raise GraphError("missing 'p <n> <m>' header")
    g = Graph.from_edges(n, edges)
    if g.edge_count != m_declared:
        raise GraphError(f"header declares {m_declared} edges, found {g.edge_count} distinct")
    return g


def format_edge_list(g: Graph) -> str:
    """Render a graph in the edge-list format, re-indexing vertices to 1..n.

    Vertices are numbered by ascending id; output is byte-deterministic.
    """
    order = {v: i + 1 for i, v in enumerate(g.vertices)}
    pairs = sorted(tuple(sorted((order[u], order[v]))) for u, v in g.edges)
    lines = [f"p {g.n} {g.edge_count}"]
    lines.extend(f"e {a} {b}" for a, b in pairs)
    return "\n".join(lines) + "\n"
