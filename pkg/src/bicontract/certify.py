"""Partition certificates for contraction to a (balanced) biclique.

A two-part partition <L, R> of the vertex set certifies that a graph can
be contracted to a biclique using sf(L) + sf(R) edge contractions, where
sf is the spanning-forest edge count of an induced side: contract a
spanning forest of each side and the surviving vertices form the two
sides of the target.  The partition is valid under budget k when

  1. sf(L) + sf(R) <= k, and
  2. every component of G[L] is adjacent to every component of G[R].

The balanced variant additionally requires both sides to induce the same
number of components (those counts are the target side sizes).

This module validates such certificates, converts between partitions and
edge-set solutions, and verifies edge-set solutions end to end.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import graphs
from .graphs import Bipartition, Graph


class MalformedPartitionError(graphs.GraphError):
    """The given pair of vertex sets is not a partition of V(G)."""


@dataclass(frozen=True)
class ContractionSolution:
    """An edge set whose contraction yields a (balanced) biclique."""

    edges: tuple[tuple[int, int], ...]
    target_balanced: bool = False


@dataclass(frozen=True)
class PartitionVerdict:
    """Outcome of validating a partition certificate.

    ``failed_condition`` is None on success, else one of "budget",
    "adjacency" or "balance" (checked in that order; the first failure is
    reported).  On adjacency failure ``witness_components`` carries one
    offending pair of component masks (left component, right component).
    """

    valid: bool
    sf_total: int
    failed_condition: str | None = None
    witness_components: tuple[int, int] | None = None


def _components_with_reach(g: Graph, smask: int) -> list[tuple[int, int]]:
    """Components of g[smask] paired with the full neighborhood mask of each."""
    adj = g._adj
    out = []
    rem = smask
    while rem:
        comp = 0
        reach = 0
        frontier = rem & -rem
        while frontier:
            comp |= frontier
            acc = 0
            f = frontier
            while f:
                b = f & -f
                acc |= adj[b.bit_length() - 1]
                f ^= b
            reach |= acc
            frontier = acc & smask & ~comp
        out.append((comp, reach))
        rem &= ~comp
    return out


def check_partition_masks(
    g: Graph, lmask: int, rmask: int, k: int, balanced: bool
) -> PartitionVerdict:
    """Validate <lmask, rmask> without building a Bipartition (hot path)."""
    lcomps = _components_with_reach(g, lmask)
    rcomps = _components_with_reach(g, rmask)
    sf_total = (lmask.bit_count() - len(lcomps)) + (rmask.bit_count() - len(rcomps))
    if sf_total > k:
        return PartitionVerdict(False, sf_total, "budget")
    for comp, reach in lcomps:
        for rcomp, _ in rcomps:
            if not reach & rcomp:
                return PartitionVerdict(False, sf_total, "adjacency", (comp, rcomp))
    if balanced and len(lcomps) != len(rcomps):
        return PartitionVerdict(False, sf_total, "balance")
    return PartitionVerdict(True, sf_total)


def _require_partition(g: Graph, p: Bipartition) -> None:
    if p.left & p.right:
        raise MalformedPartitionError("parts overlap")
    if p.left | p.right != g.vertex_mask or (p.left | p.right) & ~g.vertex_mask:
        raise MalformedPartitionError("parts do not cover the vertex set exactly")


def check_valid_partition(g: Graph, p: Bipartition, k: int) -> PartitionVerdict:
    """Check the two validity conditions for budget k.

    Either part may be empty; with an empty side the adjacency condition
    is vacuous, which is what lets <V, empty> certify contraction to an
    edgeless target.
    """
    _require_partition(g, p)
    return check_partition_masks(g, p.left, p.right, k, balanced=False)


def check_valid_balanced_partition(g: Graph, p: Bipartition, k: int) -> PartitionVerdict:
    """As check_valid_partition, plus equal component counts on both sides."""
    _require_partition(g, p)
    return check_partition_masks(g, p.left, p.right, k, balanced=True)


def _spanning_forest_edges(g: Graph, smask: int) -> list[tuple[int, int]]:
    """BFS spanning-forest edges of g[smask], deterministic by vertex id."""
    adj = g._adj
    out = []
    rem = smask
    while rem:
        root = rem & -rem
        seen = root
        frontier = root
        while frontier:
            nxt = 0
            f = frontier
            while f:
                b = f & -f
                v = b.bit_length() - 1
                fresh = adj[v] & smask & ~seen & ~nxt
                for w in graphs.bits(fresh):
                    out.append((v, w) if v < w else (w, v))
                nxt |= fresh
                f ^= b
            seen |= nxt
            frontier = nxt
        rem &= ~seen
    return out


def solution_from_partition(g: Graph, p: Bipartition, balanced: bool = False) -> ContractionSolution:
    """Spanning-forest edges of both sides; validity of p is not required."""
    _require_partition(g, p)
    edges = _spanning_forest_edges(g, p.left) + _spanning_forest_edges(g, p.right)
    return ContractionSolution(tuple(sorted(edges)), target_balanced=balanced)


def partition_from_solution(g: Graph, edges) -> Bipartition | None:
    """Pull the result bipartition of g/edges back to original vertices.

    Returns None when g/edges is not a biclique.
    """
    result = graphs.contract_edges(g, edges)
    parts = graphs.is_biclique(result.graph)
    if parts is None:
        return None
    left = result.trace.preimage_mask(parts.left)
    return Bipartition(left, g.vertex_mask & ~left)


def verify_solution(g: Graph, solution: ContractionSolution, k: int) -> bool:
    """True iff the edge set fits the budget and contracts to the target class."""
    if len(solution.edges) > k:
        return False
    contracted = graphs.contract_edges(g, solution.edges).graph
    if solution.target_balanced:
        return graphs.is_balanced_biclique(contracted)
    return graphs.is_biclique(contracted) is not None


# ---------------------------------------------------------------------------
# certificate JSON (vertex ids are emitted as given; the CLI shifts to the
# 1-based indices of the edge-list file format)


def certificate_to_obj(cert: Bipartition | ContractionSolution, offset: int = 0) -> dict:
    if isinstance(cert, Bipartition):
        return {
            "kind": "partition",
            "L": [v + offset for v in graphs.bits(cert.left)],
            "R": [v + offset for v in graphs.bits(cert.right)],
        }
    return {
        "kind": "edges",
        "edges": [[u + offset, v + offset] for u, v in sorted(cert.edges)],
    }


def certificate_from_obj(obj: dict, offset: int = 0, balanced: bool = False):
    """Parse a certificate object; returns a Bipartition or ContractionSolution."""
    if not isinstance(obj, dict):
        raise MalformedPartitionError("certificate must be a JSON object")
    kind = obj.get("kind", "edges" if "edges" in obj else "partition")
    if kind == "partition":
        try:
            left = graphs.mask_of(v - offset for v in obj["L"])
            right = graphs.mask_of(v - offset for v in obj["R"])
        except (KeyError, TypeError, ValueError) as exc:
            raise MalformedPartitionError(f"bad partition certificate: {exc}") from exc
        return Bipartition(left, right)
    if kind == "edges":
        try:
            edges = tuple(
                (min(u, v) - offset, max(u, v) - offset) for u, v in obj["edges"]
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise MalformedPartitionError(f"bad edge certificate: {exc}") from exc
        return ContractionSolution(edges, target_balanced=balanced)
    raise MalformedPartitionError(f"unknown certificate kind {kind!r}")
