"""Certified instance generators for the two contraction problems.

Three constructions turn classic hard problems into contraction
instances with a known answer, so generated instances double as test
material:

  * red-blue domination -> biclique contraction: pendant partners for
    the blue side, a hub adjacent to all reds, and enough hub pendants
    to force the hub's side to stay together; budget kappa + |B|.
  * hypergraph 2-coloring -> balanced biclique contraction: one vertex
    per hypergraph vertex, a left/right gadget pair per hyperedge, two
    large anchor sides wired as a biclique, and a final subdivision step
    that makes the output bipartite.
  * independent set -> biclique contraction parameterized by target
    size: add a universal vertex; an independent set of size t becomes
    a star on t + 1 vertices and vice versa.

Brute-force solvers for the source problems are included so every
generated instance ships with ground truth at small scale.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from . import graphs
from .graphs import Graph


class GeneratorError(graphs.GraphError):
    """Source instance cannot be normalized into the generator's domain."""


class BruteForceSizeError(graphs.GraphError):
    """Source instance exceeds the brute-force solver's size cap."""


# ---------------------------------------------------------------------------
# red-blue domination


@dataclass(frozen=True)
class RbdsInstance:
    """Bipartite domination instance: pick <= kappa reds covering all blues.

    ``edges`` holds (red index, blue index) pairs, both 0-based.
    """

    n_red: int
    n_blue: int
    kappa: int
    edges: frozenset[tuple[int, int]]

    def blue_neighbor_masks(self) -> list[int]:
        out = [0] * self.n_red
        for r, b in self.edges:
            out[r] |= 1 << b
        return out

    def red_neighbor_masks(self) -> list[int]:
        out = [0] * self.n_blue
        for r, b in self.edges:
            out[b] |= 1 << r
        return out

    def is_normalized(self) -> bool:
        if self.n_red <= self.kappa or self.n_blue <= self.kappa:
            return False
        return all(m.bit_count() >= 2 for m in self.red_neighbor_masks())


def normalize_rbds(inst: RbdsInstance) -> tuple[RbdsInstance, list[str]]:
    """Pad the instance so both sides exceed kappa; log what was added.

    Padding adds red vertices adjacent to every blue (and, when the blue
    side itself is short, blue vertices hanging off two such reds).  This
    never changes the answer: padding is only needed when a whole side
    fits under the budget, and such instances are already yes-instances
    once every blue has two red neighbors.  A blue vertex with fewer than
    two red neighbors cannot be repaired without changing the answer, so
    it is an error.
    """
    _check_rbds_domain(inst)
    log: list[str] = []
    n_red, n_blue = inst.n_red, inst.n_blue
    edges = set(inst.edges)
    while n_red <= inst.kappa:
        edges.update((n_red, b) for b in range(n_blue))
        log.append(f"added red {n_red} adjacent to all blues")
        n_red += 1
    if n_blue <= inst.kappa:
        # two fresh reds adjacent to everything carry the padded blues
        carriers = (n_red, n_red + 1)
        for c in carriers:
            edges.update((c, b) for b in range(n_blue))
        log.append("added two carrier reds adjacent to all blues")
        n_red += 2
        while n_blue <= inst.kappa:
            edges.update((c, n_blue) for c in carriers)
            log.append(f"added blue {n_blue} on the carrier reds")
            n_blue += 1
    out = RbdsInstance(n_red, n_blue, inst.kappa, frozenset(edges))
    assert out.is_normalized()
    return out, log


def _check_rbds_domain(inst: RbdsInstance) -> None:
    if inst.kappa < 0:
        raise GeneratorError("negative budget")
    if inst.n_red == 0 or inst.n_blue == 0:
        raise GeneratorError("empty red or blue side")
    for r, b in inst.edges:
        if not (0 <= r < inst.n_red and 0 <= b < inst.n_blue):
            raise GeneratorError(f"edge ({r},{b}) out of range")
    if any(m.bit_count() < 2 for m in inst.red_neighbor_masks()):
        raise GeneratorError("a blue vertex has fewer than two red neighbors")


def gen_bc_from_rbds(inst: RbdsInstance) -> tuple[Graph, int]:
    """Biclique-contraction instance equivalent to the domination instance.

    Layout (ids in order): reds, blues, one pendant partner per blue, the
    hub, then kappa + |B| + 1 hub pendants.  The output is connected and
    bipartite with |V| = |R| + 3|B| + kappa + 2; the budget is
    kappa + |B|.  Requires every blue to have at least two red neighbors;
    instances with a side not exceeding kappa are accepted (they are
    trivially dominated, and so are their outputs).
    """
    _check_rbds_domain(inst)
    nr, nb, kappa = inst.n_red, inst.n_blue, inst.kappa
    blue0 = nr
    partner0 = nr + nb
    hub = nr + 2 * nb
    pend0 = hub + 1
    n = pend0 + kappa + nb + 1
    edges = [(r, blue0 + b) for r, b in sorted(inst.edges)]
    edges += [(blue0 + b, partner0 + b) for b in range(nb)]
    edges += [(hub, r) for r in range(nr)]
    edges += [(hub, pend0 + i) for i in range(kappa + nb + 1)]
    return Graph.from_edges(n, edges), kappa + nb


def solve_rbds_brute(inst: RbdsInstance, limit: int = 20) -> bool:
    """Exhaust red subsets of size <= kappa; True iff one dominates all blues."""
    if inst.n_red > limit:
        raise BruteForceSizeError(f"{inst.n_red} reds exceed the brute limit of {limit}")
    covers = inst.blue_neighbor_masks()
    want = (1 << inst.n_blue) - 1
    for size in range(min(inst.kappa, inst.n_red) + 1):
        for combo in combinations(range(inst.n_red), size):
            got = 0
            for r in combo:
                got |= covers[r]
            if got == want:
                return True
    return False


# ---------------------------------------------------------------------------
# hypergraph 2-coloring


@dataclass(frozen=True)
class Hypergraph:
    """Vertex count plus a list of hyperedges (0-based vertex sets)."""

    n: int
    edges: tuple[frozenset[int], ...]


def normalize_hypergraph(hg: Hypergraph) -> tuple[Hypergraph, list[str]]:
    """Require >= 2 vertices per hyperedge, append the full edge if missing.

    The full edge only forbids monochromatic colorings of the whole
    vertex set, which any nonempty hyperedge already does, so appending
    it never changes 2-colorability.
    """
    if hg.n < 2:
        raise GeneratorError("need at least two vertices")
    for s in hg.edges:
        if len(s) < 2:
            raise GeneratorError("hyperedges must contain at least two vertices")
        if any(not 0 <= v < hg.n for v in s):
            raise GeneratorError("hyperedge vertex out of range")
    full = frozenset(range(hg.n))
    log: list[str] = []
    edges = hg.edges
    if full not in edges:
        edges = edges + (full,)
        log.append("appended the full hyperedge")
    if not edges:
        raise GeneratorError("no hyperedges")
    return Hypergraph(hg.n, edges), log


def h2c_core_counts(hg: Hypergraph) -> dict[str, int]:
    """Closed-form sizes of the construction for a normalized hypergraph."""
    n, m = hg.n, len(hg.edges)
    return {
        "anchor_side": 6 * m + 3 * n - 5,
        "core_vertices": 14 * m + 7 * n - 10,
        "core_budget": 2 * m + n - 2,
        "subdivisions": sum(len(s) for s in hg.edges),
    }


def gen_bbc_from_h2c(hg: Hypergraph) -> tuple[Graph, int]:
    """Balanced-biclique-contraction instance equivalent to 2-colorability.

    Layout (ids in order): hypergraph vertices, left gadgets, right
    gadgets, the left anchor side, the right anchor side, then one
    subdivision vertex per (vertex, left gadget) incidence, sorted by
    (gadget, vertex).  The core has 14M + 7N - 10 vertices and budget
    2M + N - 2; each subdivision adds one vertex and one to the budget.
    """
    norm, _ = normalize_hypergraph(hg)
    if norm.edges != hg.edges:
        raise GeneratorError("hypergraph must be normalized first (see normalize_hypergraph)")
    n, m = hg.n, len(hg.edges)
    side = 6 * m + 3 * n - 5
    sl0 = n
    sr0 = n + m
    l0 = n + 2 * m
    r0 = l0 + side
    sub0 = r0 + side
    edges: list[tuple[int, int]] = []
    incidences = [(j, i) for j, s in enumerate(hg.edges) for i in sorted(s)]
    for j, s in enumerate(hg.edges):
        edges += [(i, sr0 + j) for i in sorted(s)]
    edges += [(l0 + a, r0 + b) for a in range(side) for b in range(side)]
    edges += [(l0 + a, sr0 + j) for a in range(side) for j in range(m)]
    edges += [(r0 + b, sl0 + j) for b in range(side) for j in range(m)]
    # subdividing each (vertex, left gadget) edge keeps the graph bipartite
    for idx, (j, i) in enumerate(incidences):
        z = sub0 + idx
        edges += [(i, z), (z, sl0 + j)]
    total = sub0 + len(incidences)
    budget = (2 * m + n - 2) + len(incidences)
    return Graph.from_edges(total, edges), budget


def solve_h2c_brute(hg: Hypergraph, limit: int = 20) -> bool:
    """Exhaust 2-colorings; True iff some coloring leaves no edge monochromatic."""
    if hg.n > limit:
        raise BruteForceSizeError(f"{hg.n} vertices exceed the brute limit of {limit}")
    if any(not s for s in hg.edges):
        return False
    masks = [graphs.mask_of(s) for s in hg.edges]
    for half in range(1 << max(hg.n - 1, 0)):
        coloring = half << 1  # vertex 0 pinned to color 0; colorings are symmetric
        if all(0 < (em & coloring).bit_count() < em.bit_count() for em in masks):
            return True
    return False


# ---------------------------------------------------------------------------
# independent set, parameterized by target biclique size


def gen_bc_from_is(h: Graph, k_is: int) -> tuple[Graph, int]:
    """Add a universal vertex; returns (graph, target size k_is + 1).

    The new graph contracts to a biclique on at least k_is + 1 vertices
    (necessarily a star centered on the universal vertex's witness set)
    exactly when h has an independent set of size k_is.  The matching
    contraction budget is |V| - (k_is + 1).
    """
    hub = (max(h.vertices) + 1) if h.n else 0
    ids = list(h.vertices) + [hub]
    edges = list(h.edges) + [(v, hub) for v in h.vertices]
    return Graph.from_vertices(ids, edges), k_is + 1


def solve_is_brute(h: Graph, k: int, limit: int = 20) -> bool:
    """True iff h has an independent set of size k (exhaustive)."""
    if h.n > limit:
        raise BruteForceSizeError(f"{h.n} vertices exceed the brute limit of {limit}")
    if k <= 0:
        return True
    if k > h.n:
        return False
    for combo in combinations(h.vertices, k):
        m = graphs.mask_of(combo)
        if all(h.adj_mask(v) & m == 0 for v in combo):
            return True
    return False
