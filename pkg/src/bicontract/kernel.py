"""Quadratic vertex kernel for balanced biclique contraction.

The kernelizer maintains a maximal packing of vertex-disjoint forbidden
triples (triangles and edge-plus-isolated-vertex patterns); the union Z
of their vertices is a biclique modulator by maximality, and <X, Y> with
|X| <= |Y| denotes the bipartition of G - Z.  Four reduction rules are
applied in order, re-deriving the packing and the Z classification from
scratch after every graph change:

  rr1  trivial outcomes: an already-balanced-biclique is a yes; k <= 0
       otherwise, or a packing with |Z| > 6k, is a no.
  rr2  if |Y| > |X| + |Z| + k the instance is a no (only checked once
       |Y| >= k + 3; smaller Y means the instance is already linear).
  rr3  contract one edge incident to a modulator vertex that is heavily
       tied to the far side (at least k+1 neighbors there), k -= 1.
  rr4  mark the vertices any solution could need, then delete one
       unmarked vertex from each of X and Y.

Each applied rule strictly decreases n + k or ends with a trivial
outcome, so the driver terminates; surviving instances have O(k^2)
vertices.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace

from . import graphs
from .graphs import DisconnectedGraphError, Graph

IN_PROGRESS = "in-progress"
REDUCED = "reduced-instance"
TRIVIAL_NO = "trivial-no"
TRIVIAL_YES = "trivial-yes"


@dataclass(frozen=True)
class Packing:
    """Vertex-disjoint forbidden triples and the union z of their vertices.

    Maximal by construction: the graph minus z contains neither pattern,
    so it is a biclique.
    """

    triples: tuple[tuple[str, tuple[int, int, int]], ...]
    z: int


def greedy_packing(g: Graph) -> Packing:
    """Maximal packing via repeated forbidden-triple search, by id order."""
    triples: list[tuple[str, tuple[int, int, int]]] = []
    used = 0
    while True:
        hit = graphs.find_forbidden(g, g.vertex_mask & ~used)
        if hit is None:
            return Packing(tuple(triples), used)
        kind, (a, b, c) = hit
        triples.append((kind, (a, b, c)))
        used |= (1 << a) | (1 << b) | (1 << c)


@dataclass
class KernelState:
    graph: Graph
    k: int
    packing: Packing
    x: int
    y: int
    z_x: int
    z_y: int
    z_rest: int
    marked: int = 0
    outcome: str = IN_PROGRESS
    log: list[dict] = field(default_factory=list)

    @property
    def z(self) -> int:
        return self.packing.z


def _derive(graph: Graph, k: int, log: list[dict]) -> KernelState:
    """Recompute packing, bipartition of G - Z and the Z classification."""
    packing = greedy_packing(graph)
    z = packing.z
    parts = graphs.is_biclique(graphs.induced(graph, graph.vertex_mask & ~z))
    assert parts is not None, "graph minus a maximal packing must be a biclique"
    x, y = parts.left, parts.right
    if x.bit_count() > y.bit_count():
        x, y = y, x
    z_x = z_y = 0
    adj = graph._adj
    for zv in graphs.bits(z):
        if (adj[zv] & y).bit_count() >= k + 1:
            z_x |= 1 << zv
        if (adj[zv] & x).bit_count() >= k + 1:
            z_y |= 1 << zv
    return KernelState(graph, k, packing, x, y, z_x, z_y, z & ~z_x & ~z_y, log=log)


def _finish(st: KernelState, outcome: str, rule: str, **info) -> KernelState:
    st.log.append({"event": "rule", "rule": rule, "outcome": outcome, **info})
    return replace(st, outcome=outcome)


def rr1_trivial(st: KernelState) -> KernelState:
    """Trivial yes/no outcomes; returns the state unchanged when silent."""
    if graphs.is_balanced_biclique(st.graph):
        return _finish(st, TRIVIAL_YES, "rr1")
    if st.k <= 0:
        return _finish(st, TRIVIAL_NO, "rr1", reason="budget exhausted")
    if st.z.bit_count() > 6 * st.k:
        return _finish(st, TRIVIAL_NO, "rr1", reason="packing too large")
    return st


def rr2_size(st: KernelState) -> KernelState:
    """Oversized far side: |Y| > |X| + |Z| + k cannot be balanced away."""
    if st.y.bit_count() > st.x.bit_count() + st.z.bit_count() + st.k:
        return _finish(st, TRIVIAL_NO, "rr2", reason="far side too large")
    return st


def rr3_contract(st: KernelState) -> KernelState:
    """Contract one edge tying a committed modulator vertex to its side.

    Vertices of z_x must end up with X and those of z_y with Y (their
    k+1 far-side neighbors would otherwise blow the budget), so an edge
    inside E(X, z_x), E(Y, z_y), E(z_x) or E(z_y) is always contracted in
    any solution.  A vertex in both z_x and z_y is contradictory: no.
    """
    if st.z_x & st.z_y:
        return _finish(st, TRIVIAL_NO, "rr3", reason="modulator vertex committed to both sides")
    adj = st.graph._adj
    best: tuple[int, int] | None = None
    for u in graphs.bits(st.z_x):
        targets = adj[u] & (st.x | st.z_x)
        if targets:
            t = targets & -targets
            e = tuple(sorted((u, t.bit_length() - 1)))
            best = e if best is None else min(best, e)
    for u in graphs.bits(st.z_y):
        targets = adj[u] & (st.y | st.z_y)
        if targets:
            t = targets & -targets
            e = tuple(sorted((u, t.bit_length() - 1)))
            best = e if best is None else min(best, e)
    if best is None:
        return st
    st.log.append({"event": "rule", "rule": "rr3", "k": st.k - 1})
    newg = graphs.contract_edge(st.graph, best)
    return _derive(newg, st.k - 1, st.log)


def rr4_mark_delete(st: KernelState) -> KernelState:
    """Mark every vertex a solution could rely on; delete an unmarked pair.

    Marks: all of Z; the X/Y neighbors of the uncommitted modulator part;
    and per modulator vertex one non-neighbor (minimum id) on each side
    outside those neighborhoods.  If both sides retain two unmarked
    vertices, one unmarked vertex per side is deleted; otherwise the
    kernelizer has converged.
    """
    g = st.graph
    adj = g._adj
    reach = 0
    for zv in graphs.bits(st.z_rest):
        reach |= adj[zv]
    marked = st.z | (reach & st.x) | (reach & st.y)
    for zv in graphs.bits(st.z):
        for side in (st.x, st.y):
            cand = side & ~reach & ~adj[zv]
            if cand:
                marked |= cand & -cand
    unmarked_x = st.x & ~marked
    unmarked_y = st.y & ~marked
    stamped = replace(st, marked=marked)
    if unmarked_x.bit_count() >= 2 and unmarked_y.bit_count() >= 2:
        u = (unmarked_x & -unmarked_x).bit_length() - 1
        v = (unmarked_y & -unmarked_y).bit_length() - 1
        st.log.append({"event": "rule", "rule": "rr4", "deleted": 2})
        newg = graphs.induced(g, g.vertex_mask & ~(1 << u) & ~(1 << v))
        return _derive(newg, st.k, st.log)
    return _finish(stamped, REDUCED, "rr4", reason="fewer than two unmarked on a side")


def kernelize_bbc(g: Graph, k: int) -> KernelState:
    """Run the reduction rules to a fixpoint; input must be connected.

    The returned state's outcome is trivial-yes, trivial-no, or
    reduced-instance (with the reduced graph and adjusted budget).
    """
    if not graphs.is_connected(g):
        raise DisconnectedGraphError("kernelization requires a connected input graph")
    log: list[dict] = []
    st = _derive(g, k, log)
    while True:
        st = rr1_trivial(st)
        if st.outcome != IN_PROGRESS:
            return st
        st.log.append(
            {
                "event": "state",
                "n": st.graph.n,
                "k": st.k,
                "z": st.z.bit_count(),
                "x": st.x.bit_count(),
                "y": st.y.bit_count(),
            }
        )
        if st.y.bit_count() <= st.k + 2:
            return _finish(st, REDUCED, "linear-exit", reason="far side already linear in k")
        st = rr2_size(st)
        if st.outcome != IN_PROGRESS:
            return st
        nxt = rr3_contract(st)
        if nxt.outcome != IN_PROGRESS or nxt is not st:
            if nxt.outcome != IN_PROGRESS:
                return nxt
            st = nxt
            continue
        nxt = rr4_mark_delete(st)
        if nxt.outcome != IN_PROGRESS:
            return nxt
        st = nxt
