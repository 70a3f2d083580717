"""Single-exponential exact solver for (balanced) biclique contraction.

Strategy: a graph contractible to a biclique with k contractions has a
biclique modulator of at most 2k vertices (the endpoints of contracted
edges).  We find a smallest modulator Z within that bound by branching,
fix the bipartition <X, Y> of G - Z (with |X| <= |Y|), and then search
for a valid two-part partition of V through a case split on how X and Y
meet the two sides of the unknown partition:

  1a. X empty, Y on one side: test <Z_L, Z_R + Y> per ordered Z-split.
  1b. X empty, Y split: exhaust a two-way branching rule on Y vertices
      adjacent to both Z sides, then a degree-2 preprocessing rule; the
      surviving Y vertices are one-sided and get placed by an exact
      enumeration of their neighborhood types (see _leaf_side).
  2a. X on one side, Y on one side: test both direct completions.
  2b. X on one side, Y split: guess a Y vertex on X's side, contract its
      star to X and to that side of Z, fold the merged vertex into Z and
      continue as 1b.
  3a. X split, Y on one side: the mirror of 2b with roles swapped.
  3b. X and Y both split: all cross edges but one must be contracted, so
      either |X + Y| > k + 2 (impossible) or the graph is small enough to
      exhaust all partitions directly.

Every candidate partition is re-validated against the *original* graph
before being accepted, so accepted answers are sound by construction; the
exhaustive small-graph oracle suite guards completeness.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import certify, graphs, kernel
from .graphs import Bipartition, ContractionTrace, DisconnectedGraphError, Graph

YES = "yes"
NO = "no"
BUDGET_EXCEEDED = "budget-exceeded"


@dataclass
class SolveCounters:
    """Branch/work counters, reported by the CLI --trace flag."""

    modulator_nodes: int = 0
    partitions_checked: int = 0
    branch_nodes: int = 0
    preprocess_steps: int = 0
    case_invocations: dict[str, int] = field(default_factory=dict)

    def bump(self, case: str) -> None:
        self.case_invocations[case] = self.case_invocations.get(case, 0) + 1

    def as_dict(self) -> dict:
        return {
            "modulator_nodes": self.modulator_nodes,
            "partitions_checked": self.partitions_checked,
            "branch_nodes": self.branch_nodes,
            "preprocess_steps": self.preprocess_steps,
            "case_invocations": dict(sorted(self.case_invocations.items())),
        }


@dataclass
class Verdict:
    """Solver outcome: yes with a certificate, or a flavored no.

    ``budget-exceeded`` means no solution within this k (a larger budget
    might succeed); plain ``no`` is reserved for budget-independent
    impossibility, which this solver never proves on its own.
    """

    kind: str
    solution: certify.ContractionSolution | None
    counters: SolveCounters
    reason: str = ""

    @property
    def is_yes(self) -> bool:
        return self.kind == YES


@dataclass(frozen=True)
class Modulator:
    """Vertex set z with G - z a biclique on parts (x, y), |x| <= |y|."""

    z: int
    x: int
    y: int


@dataclass
class CaseContext:
    """Working state of the 1b-style branching: graph after some contractions,
    the trace back to the original, the two modulator sides, the pool of
    still-unclassified biclique-side vertices, and the remaining budget."""

    graph: Graph
    trace: ContractionTrace
    z_left: int
    z_right: int
    pool: int
    budget: int


# ---------------------------------------------------------------------------
# modulator search


def _find_k1k2(g: Graph, mask: int) -> tuple[int, int, int] | None:
    """An induced edge-plus-isolated-vertex triple within mask, or None."""
    adj = g._adj
    for u in graphs.bits(mask):
        au = adj[u] & mask
        higher = au >> (u + 1) << (u + 1)
        for v in graphs.bits(higher):
            rest = mask & ~au & ~adj[v] & ~(1 << u) & ~(1 << v)
            if rest:
                w = rest & -rest
                return u, v, w.bit_length() - 1
    return None


def _co_components(g: Graph, mask: int) -> list[int]:
    """Components of the complement graph restricted to mask."""
    adj = g._adj
    out = []
    rem = mask
    while rem:
        comp = 0
        frontier = rem & -rem
        while frontier:
            comp |= frontier
            acc = 0
            f = frontier
            while f:
                b = f & -f
                v = b.bit_length() - 1
                acc |= mask & ~adj[v] & ~b
                f ^= b
            frontier = acc & ~comp
        out.append(comp)
        rem &= ~comp
    return out


def _modulator_dfs(g: Graph, alive: int, budget: int, deleted: int, counters: SolveCounters) -> int | None:
    counters.modulator_nodes += 1
    triple = _find_k1k2(g, alive)
    if triple is None:
        # No induced K1+K2 means the complement is a disjoint union of
        # cliques; keeping at most two of them leaves a biclique, and
        # keeping the two largest is the cheapest way to do it.
        parts = _co_components(g, alive)
        if len(parts) <= 2:
            return deleted
        parts.sort(key=lambda m: (-m.bit_count(), m & -m))
        extra = alive & ~parts[0] & ~parts[1]
        if extra.bit_count() <= budget:
            return deleted | extra
        return None
    if budget == 0:
        return None
    for v in triple:
        res = _modulator_dfs(g, alive & ~(1 << v), budget - 1, deleted | (1 << v), counters)
        if res is not None:
            return res
    return None


def find_biclique_modulator(
    g: Graph, bound: int, counters: SolveCounters | None = None
) -> Modulator | None:
    """Smallest vertex set z with |z| <= bound and G - z a biclique, or None.

    Three-way branching on induced K1+K2 triples with iterative deepening;
    a greedy packing of vertex-disjoint forbidden triples gives the lower
    bound that seeds the deepening (and refutes quickly when it exceeds
    the bound).
    """
    if counters is None:
        counters = SolveCounters()
    if bound < 0:
        return None
    bound = min(bound, g.n)
    lower = len(kernel.greedy_packing(g).triples)
    if lower > bound:
        return None
    for b in range(lower, bound + 1):
        z = _modulator_dfs(g, g.vertex_mask, b, 0, counters)
        if z is not None:
            parts = graphs.is_biclique(graphs.induced(g, g.vertex_mask & ~z))
            assert parts is not None, "modulator search returned a non-modulator"
            x, y = parts.left, parts.right
            if x.bit_count() > y.bit_count():
                x, y = y, x
            return Modulator(z, x, y)
    return None


# ---------------------------------------------------------------------------
# branching and preprocessing rules (1b machinery)


def _contract_star(g: Graph, trace: ContractionTrace, center: int, targets: int) -> tuple[Graph, int]:
    """Contract every edge from center into targets; returns (graph, merged id).

    The star is a tree, so the contraction count equals the target count.
    """
    cur = g
    for t in graphs.bits(targets):
        a = trace.rep(center)
        b = trace.rep(t)
        assert a != b
        keep, gone = (a, b) if a < b else (b, a)
        cur = graphs.contract_edge(cur, (keep, gone))
        trace.record(keep, gone)
    return cur, trace.rep(center)


def _fold_into_side(ctx: CaseContext, v: int, into_left: bool) -> CaseContext:
    trace = ctx.trace.fork()
    side = ctx.z_left if into_left else ctx.z_right
    targets = ctx.graph.adj_mask(v) & side
    newg, merged = _contract_star(ctx.graph, trace, v, targets)
    zl = trace.current_mask(ctx.z_left)
    zr = trace.current_mask(ctx.z_right)
    if into_left:
        zl |= 1 << merged
    else:
        zr |= 1 << merged
    return CaseContext(newg, trace, zl, zr, ctx.pool & ~(1 << v), ctx.budget - targets.bit_count())


def apply_branching_rule_1(ctx: CaseContext, v: int) -> tuple[CaseContext, CaseContext]:
    """Two-way branch on a pool vertex adjacent to both modulator sides.

    One branch contracts all edges from v into z_left, the other into
    z_right; each budget drops by the respective contraction count and the
    merged vertex joins that side.  Only applicable when v sees more than
    two modulator vertices in total (the two-neighbor case is handled by
    the preprocessing rule instead).
    """
    nb = ctx.graph.adj_mask(v)
    z = ctx.z_left | ctx.z_right
    assert ctx.pool >> v & 1, "branching vertex must be in the pool"
    assert nb & ctx.z_left and nb & ctx.z_right, "branching vertex must see both sides"
    assert (nb & z).bit_count() > 2, "branching needs more than two modulator neighbors"
    return _fold_into_side(ctx, v, True), _fold_into_side(ctx, v, False)


def apply_preprocessing_rule_1(ctx: CaseContext, v: int) -> CaseContext:
    """Degree-2 pool vertex with one neighbor on each side: fold it left.

    Whatever side such a vertex takes, it attaches as a pendant and costs
    one contraction either way, so committing it to the z_left side is
    safe and deterministic.
    """
    nb = ctx.graph.adj_mask(v)
    assert ctx.pool >> v & 1, "preprocessing vertex must be in the pool"
    assert ctx.graph.degree(v) == 2, "preprocessing needs degree exactly 2"
    assert nb & ctx.z_left and nb & ctx.z_right, "preprocessing needs one neighbor per side"
    return _fold_into_side(ctx, v, True)


def _branching_vertex(ctx: CaseContext) -> int | None:
    z = ctx.z_left | ctx.z_right
    g = ctx.graph
    for v in graphs.bits(ctx.pool):
        nb = g.adj_mask(v)
        if nb & ctx.z_left and nb & ctx.z_right and (nb & z).bit_count() > 2:
            return v
    return None


def _preprocessing_vertex(ctx: CaseContext) -> int | None:
    g = ctx.graph
    for v in graphs.bits(ctx.pool):
        if g.degree(v) != 2:
            continue
        nb = g.adj_mask(v)
        if nb & ctx.z_left and nb & ctx.z_right:
            return v
    return None


def _leaf_side(ctx: CaseContext, zl: int, zr: int, yl: int, yr: int, balanced: bool, accept) -> int | None:
    """Exact leaf search, oriented: every yr vertex stays on the zr side.

    At this point every pool vertex is one-sided (its modulator neighbors
    all in zl or all in zr) and the pool is independent, so a yl vertex
    placed right is necessarily a singleton component that must be
    adjacent to every left component, while a yl vertex placed left just
    attaches to its neighbors' components.  Two yl vertices with the same
    zl-neighborhood are interchangeable, so it suffices to enumerate the
    *set of neighborhood types* kept on the left and derive the per-type
    counts: minimal counts minimize the spanning forest (unbalanced), and
    the balance equation pins the right-singleton count (balanced).  The
    mirrored orientation covers partitions that move yr vertices instead;
    a valid partition never moves vertices from both sides at once, since
    two opposite-side singletons would be non-adjacent components.
    """
    g = ctx.graph
    budget = ctx.budget
    rbase = zr | yr
    sf_r = graphs.sf_size(g, rbase)
    if sf_r > budget:
        return None
    c_r = rbase.bit_count() - sf_r
    groups: dict[int, list[int]] = {}
    for v in graphs.bits(yl):
        groups.setdefault(g.adj_mask(v) & zl, []).append(v)
    tkeys = sorted(groups)
    for smask in range(1 << len(tkeys)):
        chosen = [tkeys[i] for i in range(len(tkeys)) if smask >> i & 1]
        iso_in = 0 in chosen
        ne_chosen = [t for t in chosen if t]
        struct = zl
        for t in ne_chosen:
            struct |= 1 << groups[t][0]
        comp_masks = graphs.components(g, struct)
        c_ne = len(comp_masks)
        # a type may leave vertices on the right only if it touches every
        # left component (right-side singletons must see all of them)
        dominating = {t: all(c & t for c in comp_masks) for t in tkeys}
        if any(not dominating[t] for t in tkeys if t not in chosen):
            continue
        slack_types = [t for t in ne_chosen if dominating[t] and len(groups[t]) > 1]
        t_low = sum(len(groups[t]) for t in tkeys if t not in chosen)
        t_high = t_low + sum(len(groups[t]) - 1 for t in slack_types)
        iso_m = len(groups.get(0, ()))
        iso_range = range(1, iso_m + 1) if iso_in else (0,)
        for a_iso in iso_range:
            if balanced:
                t_need = (c_ne + a_iso) - c_r
                if not t_low <= t_need <= t_high:
                    continue
                wanted = (t_need,)
            else:
                wanted = (t_high,)  # fewest left vertices: minimal forest
            for t_total in wanted:
                lmask = zl
                surplus = t_high - t_total  # vertices pulled back left
                for t in ne_chosen:
                    if not dominating[t]:
                        take = len(groups[t])  # leftovers of this type can't sit right
                    else:
                        take = 1
                        if t in slack_types and surplus > 0:
                            extra = min(surplus, len(groups[t]) - 1)
                            take += extra
                            surplus -= extra
                    for v in groups[t][:take]:
                        lmask |= 1 << v
                for v in groups.get(0, ())[:a_iso]:
                    lmask |= 1 << v
                res = accept(ctx.trace, lmask)
                if res is not None:
                    return res
    return None


def _case_1b_core(ctx0: CaseContext, balanced: bool, accept, counters: SolveCounters) -> int | None:
    stack = [ctx0]
    while stack:
        ctx = stack.pop()
        if ctx.budget < 0:
            continue
        counters.branch_nodes += 1
        v = _branching_vertex(ctx)
        if v is not None:
            left, right = apply_branching_rule_1(ctx, v)
            if right.budget >= 0:
                stack.append(right)
            if left.budget >= 0:
                stack.append(left)
            continue
        dead = False
        while (v := _preprocessing_vertex(ctx)) is not None:
            if ctx.budget < 1:
                dead = True  # the forced pendant contraction is unaffordable
                break
            ctx = apply_preprocessing_rule_1(ctx, v)
            counters.preprocess_steps += 1
        if dead:
            continue
        yl = yr = 0
        for u in graphs.bits(ctx.pool):
            nb = ctx.graph.adj_mask(u) & (ctx.z_left | ctx.z_right)
            if nb & ctx.z_right == 0:
                yl |= 1 << u
            else:
                assert nb & ctx.z_left == 0, "rules were not exhausted"
                yr |= 1 << u
        res = accept(ctx.trace, ctx.z_left | yl)
        if res is not None:
            return res
        res = _leaf_side(ctx, ctx.z_left, ctx.z_right, yl, yr, balanced, accept)
        if res is not None:
            return res
        res = _leaf_side(ctx, ctx.z_right, ctx.z_left, yr, yl, balanced, accept)
        if res is not None:
            return res
    return None


def _guess_and_fold(
    g0: Graph, k: int, balanced: bool, zl: int, zr: int, star_side: int, split_side: int, accept, counters
) -> int | None:
    """Cases 2b/3a: guess a split-side vertex living with the one-sided set,
    contract its star to that whole set and to its zl neighbors, fold the
    merged vertex into the zl side and continue with the 1b machinery."""
    for v in graphs.bits(split_side):
        targets = star_side | (g0.adj_mask(v) & zl)
        cost = targets.bit_count()
        if cost > k:
            continue
        trace = ContractionTrace(g0.vertex_mask)
        cur, merged = _contract_star(g0, trace, v, targets)
        zl2 = trace.current_mask(zl) | (1 << merged)
        ctx = CaseContext(cur, trace, zl2, zr, split_side & ~(1 << v), k - cost)
        res = _case_1b_core(ctx, balanced, accept, counters)
        if res is not None:
            return res
    return None


# ---------------------------------------------------------------------------
# whole-graph partition enumeration (modulator-only entry and case 3b)


def _enumerate_partitions(g: Graph, k: int, balanced: bool, counters: SolveCounters) -> int | None:
    """Pruned exhaustive partition search used where the case analysis says
    the whole graph is small enough to brute over."""
    vs = g.vertices
    if not vs:
        counters.partitions_checked += 1
        return 0 if certify.check_partition_masks(g, 0, 0, k, balanced).valid else None
    adj = g._adj

    def comp_of(smask: int, seed: int) -> int:
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

    def extend(i: int, lmask: int, rmask: int, sf: int) -> int | None:
        if i == len(vs):
            counters.partitions_checked += 1
            ok = certify.check_partition_masks(g, lmask, rmask, k, balanced).valid
            return lmask if ok else None
        v = vs[i]
        vb = 1 << v
        for left in (True, False):
            side = lmask if left else rmask
            joined = 0
            seen = 0
            while adj[v] & side & ~seen:
                b = adj[v] & side & ~seen
                b &= -b
                seen |= comp_of(side, b)
                joined += 1
            if sf + joined <= k:
                res = extend(i + 1, lmask | vb if left else lmask, rmask if left else rmask | vb, sf + joined)
                if res is not None:
                    return res
        return None

    return extend(1, 1 << vs[0], 0, 0)


# ---------------------------------------------------------------------------
# driver


def _make_acceptor(g0: Graph, k: int, balanced: bool, counters: SolveCounters):
    vm = g0.vertex_mask

    def accept(trace: ContractionTrace | None, work_left: int) -> int | None:
        counters.partitions_checked += 1
        left = trace.preimage_mask(work_left) if trace is not None else work_left
        verdict = certify.check_partition_masks(g0, left, vm & ~left, k, balanced)
        return left if verdict.valid else None

    return accept


def _search_cases(g0: Graph, k: int, balanced: bool, mod: Modulator, counters: SolveCounters) -> int | None:
    accept = _make_acceptor(g0, k, balanced, counters)
    z, x, y = mod.z, mod.x, mod.y
    if x | y == 0:
        counters.bump("modulator-only")
        return _enumerate_partitions(g0, k, balanced, counters)

    # Constant-candidate cases first: they are cheap and settle most yes
    # instances before any branching starts.
    for zl in graphs.submasks(z):
        if x == 0:
            counters.bump("1a")
            res = accept(None, zl)
            if res is not None:
                return res
        else:
            counters.bump("2a")
            res = accept(None, zl | x)
            if res is not None:
                return res
            res = accept(None, zl | x | y)
            if res is not None:
                return res

    for zl in graphs.submasks(z):
        zr = z ^ zl
        if x == 0:
            counters.bump("1b")
            ctx = CaseContext(g0, ContractionTrace(g0.vertex_mask), zl, zr, y, k)
            res = _case_1b_core(ctx, balanced, accept, counters)
        else:
            counters.bump("2b")
            res = _guess_and_fold(g0, k, balanced, zl, zr, x, y, accept, counters)
            if res is None and x.bit_count() >= 2:
                counters.bump("3a")
                res = _guess_and_fold(g0, k, balanced, zl, zr, y, x, accept, counters)
        if res is not None:
            return res

    if x != 0 and x.bit_count() >= 2 and (x | y).bit_count() <= k + 2:
        # Both sides split: all cross edges but one are contracted, so the
        # whole graph has at most |z| + k + 2 vertices and direct search fits.
        counters.bump("3b")
        return _enumerate_partitions(g0, k, balanced, counters)
    return None


def _solve(g: Graph, k: int, balanced: bool) -> Verdict:
    if k < 0:
        raise ValueError("budget must be non-negative")
    if not graphs.is_connected(g):
        raise DisconnectedGraphError("solver requires a connected input graph")
    counters = SolveCounters()
    mod = find_biclique_modulator(g, min(2 * k, g.n), counters)
    if mod is None:
        return Verdict(
            BUDGET_EXCEEDED, None, counters,
            "no biclique modulator within twice the budget",
        )
    left = _search_cases(g, k, balanced, mod, counters)
    if left is None:
        return Verdict(BUDGET_EXCEEDED, None, counters, "no valid partition within the budget")
    partition = Bipartition(left, g.vertex_mask & ~left)
    solution = certify.solution_from_partition(g, partition, balanced=balanced)
    assert certify.verify_solution(g, solution, k), "accepted partition failed re-verification"
    return Verdict(YES, solution, counters)


def fpt_bc(g: Graph, k: int) -> Verdict:
    """Decide contraction to a biclique within budget k (connected input)."""
    return _solve(g, k, balanced=False)


def fpt_bbc(g: Graph, k: int) -> Verdict:
    """Decide contraction to a balanced biclique within budget k (connected input)."""
    return _solve(g, k, balanced=True)
