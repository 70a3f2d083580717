"""Brute-force ground truth for (balanced) biclique contraction.

Decides both problems by exhausting two-part vertex partitions and
checking the certificate conditions, which is exactly the search the
partition characterization licenses.  A second, fully independent route
(``edge_subset_min_k``) exhausts small edge subsets and recognizes the
contracted graph directly; the two never share solver code, so each can
cross-check the other.

Deliberately simple everywhere: this module must stay obviously correct.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations

from . import certify, graphs
from .graphs import Bipartition, Graph

DEFAULT_LIMIT = 24


class OracleSizeError(graphs.GraphError):
    """Instance exceeds the configured exhaustive-search vertex cap."""


@dataclass(frozen=True)
class OracleResult:
    answer: bool
    certificate: Bipartition | None = None
    min_k: int | None = None


def _check_limit(g: Graph, limit: int) -> None:
    if g.n > limit:
        raise OracleSizeError(
            f"{g.n} vertices exceed the oracle limit of {limit}; "
            "raise the limit explicitly if you really want this"
        )


def _search(g: Graph, k: int, balanced: bool) -> Bipartition | None:
    """First valid partition in enumeration order, or None.

    Enumerates the 2^(n-1) unordered partitions by assigning vertices in
    ascending id order with the lowest vertex pinned to the left side;
    taking the left branch first makes the enumeration lexicographic.
    Partial assignments are abandoned as soon as their spanning-forest
    count exceeds k, which is safe because sf only grows as a side grows.
    """
    vs = g.vertices
    adj = g._adj

    def extend(i: int, lmask: int, rmask: int, sf: int) -> Bipartition | None:
        if i == len(vs):
            verdict = certify.check_partition_masks(g, lmask, rmask, k, balanced)
            return Bipartition(lmask, rmask) if verdict.valid else None
        v = vs[i]
        vb = 1 << v
        for left in (True, False):
            side_mask = lmask if left else rmask
            # sf grows by the number of existing own-side components v touches
            joined = 0
            seen = 0
            nb = adj[v] & side_mask
            while nb & ~seen:
                b = nb & ~seen
                b &= -b
                seen |= _component_of(adj, side_mask, b)
                joined += 1
            if sf + joined <= k:
                if left:
                    res = extend(i + 1, lmask | vb, rmask, sf + joined)
                else:
                    res = extend(i + 1, lmask, rmask | vb, sf + joined)
                if res is not None:
                    return res
        return None

    if not vs:
        verdict = certify.check_partition_masks(g, 0, 0, k, balanced)
        return Bipartition(0, 0) if verdict.valid else None
    first = 1 << vs[0]
    return extend(1, first, 0, 0)


def _component_of(adj: dict[int, int], smask: int, seed: int) -> int:
    comp = 0
    frontier = seed
    while frontier:
        comp |= frontier
        acc = 0
        f = frontier
        while f:
            b = f & -f
            acc |= adj[b.bit_length() - 1]
            f ^= b
        frontier = acc & smask & ~comp
    return comp


def oracle_bc(g: Graph, k: int, limit: int = DEFAULT_LIMIT) -> OracleResult:
    """Exhaustive decision for contraction to a biclique within budget k."""
    _check_limit(g, limit)
    cert = _search(g, k, balanced=False)
    return OracleResult(cert is not None, cert)


def oracle_bbc(g: Graph, k: int, limit: int = DEFAULT_LIMIT) -> OracleResult:
    """Exhaustive decision for contraction to a balanced biclique within budget k."""
    _check_limit(g, limit)
    cert = _search(g, k, balanced=True)
    return OracleResult(cert is not None, cert)


def oracle_min_k(g: Graph, balanced: bool, limit: int = DEFAULT_LIMIT) -> int | float:
    """Smallest budget certified by any partition, or math.inf if none exists.

    The structural conditions (adjacency, and balance when requested) do
    not mention the budget, so this is a branch-and-bound over all
    partitions minimizing sf(L) + sf(R) among those passing them.
    """
    _check_limit(g, limit)
    vs = g.vertices
    if not vs:
        ok = certify.check_partition_masks(g, 0, 0, g.n, balanced).valid
        return 0 if ok else math.inf
    best: int | float = math.inf

    def extend(i: int, lmask: int, rmask: int, sf: int) -> None:
        nonlocal best
        if sf >= best:
            return
        if i == len(vs):
            verdict = certify.check_partition_masks(g, lmask, rmask, g.n, balanced)
            if verdict.valid and verdict.sf_total < best:
                best = verdict.sf_total
            return
        v = vs[i]
        vb = 1 << v
        adj = g._adj
        for left in (True, False):
            side_mask = lmask if left else rmask
            joined = 0
            seen = 0
            nb = adj[v] & side_mask
            while nb & ~seen:
                b = nb & ~seen
                b &= -b
                seen |= _component_of(adj, side_mask, b)
                joined += 1
            if left:
                extend(i + 1, lmask | vb, rmask, sf + joined)
            else:
                extend(i + 1, lmask, rmask | vb, sf + joined)

    extend(1, 1 << vs[0], 0, 0)
    return best


def edge_subset_min_k(g: Graph, balanced: bool, cap: int) -> int | None:
    """Independent route: smallest |F| <= cap with g/F in the target class.

    Enumerates edge subsets by size and recognizes the contracted graph
    directly; shares nothing with the partition search above.  Returns
    None when no subset of size <= cap works.
    """
    all_edges = g.edges
    for size in range(cap + 1):
        for subset in combinations(all_edges, size):
            contracted = graphs.contract_edges(g, subset).graph
            if balanced:
                if graphs.is_balanced_biclique(contracted):
                    return size
            elif graphs.is_biclique(contracted) is not None:
                return size
    return None
