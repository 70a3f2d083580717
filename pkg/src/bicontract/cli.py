"""Batch command-line front door.

Subcommands: solve, oracle, verify, kernelize, generate, selftest.
Exit codes: 0 = yes / valid, 1 = no / invalid, 2 = usage or input error,
so scripted harnesses can tell a negative answer from a broken input.

Files use the shared edge-list format (``p <n> <m>`` header, ``e <u> <v>``
lines, 1-based indices); certificates and sidecars are JSON with sorted
keys and 1-based vertex indices matching the input file.  All file
emissions are byte-deterministic for a fixed input.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
import time
from dataclasses import dataclass

from . import certify, fpt, graphs, kernel, oracle, reductions, smallgraphs
from .graphs import Bipartition, Graph, GraphError

ORACLE_LIMIT_ENV = "BICLIQUE_ORACLE_LIMIT"


@dataclass
class RunReport:
    command: str
    input_digest: str
    answer: str | None = None
    certificate_path: str | None = None
    wall_time_s: float = 0.0
    counters: dict | None = None

    def emit(self) -> None:
        payload = {k: v for k, v in self.__dict__.items() if v is not None}
        print(json.dumps(payload, sort_keys=True))


def _read_graph(path: str) -> tuple[Graph, str]:
    with open(path, "rb") as fh:
        data = fh.read()
    digest = hashlib.sha256(data).hexdigest()
    return graphs.parse_edge_list(data.decode("utf-8")), digest


def _oracle_limit() -> int:
    raw = os.environ.get(ORACLE_LIMIT_ENV)
    if raw is None:
        return oracle.DEFAULT_LIMIT
    try:
        return int(raw)
    except ValueError:
        raise GraphError(f"{ORACLE_LIMIT_ENV} must be an integer, got {raw!r}") from None


def _write_json(path: str, obj: dict) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(json.dumps(obj, sort_keys=True, separators=(",", ": "), indent=1))
        fh.write("\n")


def _write_certificate(path: str, g: Graph, cert) -> None:
    # file indices are 1-based positions of the sorted vertex ids
    order = {v: i + 1 for i, v in enumerate(g.vertices)}
    if isinstance(cert, Bipartition):
        obj = {
            "kind": "partition",
            "L": sorted(order[v] for v in graphs.bits(cert.left)),
            "R": sorted(order[v] for v in graphs.bits(cert.right)),
        }
    else:
        obj = {
            "kind": "edges",
            "edges": sorted(sorted((order[u], order[v])) for u, v in cert.edges),
        }
    _write_json(path, obj)


# ---------------------------------------------------------------------------
# solve / oracle


def _positive_budget(args) -> int:
    if args.budget < 0:
        raise GraphError("--budget must be non-negative")
    return args.budget


def _run_decision(args, engine: str) -> int:
    g, digest = _read_graph(args.path)
    k = _positive_budget(args)
    if getattr(args, "threads", 1) < 1:
        raise GraphError("--threads must be at least 1")
    started = time.monotonic()
    counters = None
    certificate = None
    if engine == "oracle":
        res = (oracle.oracle_bbc if args.balanced else oracle.oracle_bc)(g, k, _oracle_limit())
        answer = res.answer
        certificate = res.certificate
    else:
        verdict = (fpt.fpt_bbc if args.balanced else fpt.fpt_bc)(g, k)
        answer = verdict.is_yes
        certificate = verdict.solution
        if getattr(args, "trace", False):
            counters = verdict.counters.as_dict()
    wall = time.monotonic() - started
    cert_path = None
    if getattr(args, "certificate", None) and answer and certificate is not None:
        _write_certificate(args.certificate, g, certificate)
        cert_path = args.certificate
    RunReport(
        command=args.command,
        input_digest=digest,
        answer="yes" if answer else "no",
        certificate_path=cert_path,
        wall_time_s=round(wall, 6),
        counters=counters,
    ).emit()
    return 0 if answer else 1


def cmd_solve(args) -> int:
    return _run_decision(args, args.engine)


def cmd_oracle(args) -> int:
    return _run_decision(args, "oracle")


# ---------------------------------------------------------------------------
# verify


def cmd_verify(args) -> int:
    g, digest = _read_graph(args.path)
    k = _positive_budget(args)
    with open(args.certificate, "r", encoding="utf-8") as fh:
        try:
            obj = json.load(fh)
        except json.JSONDecodeError as exc:
            raise GraphError(f"certificate is not valid JSON: {exc}") from exc
    cert = certify.certificate_from_obj(obj, offset=1, balanced=args.balanced)
    started = time.monotonic()
    if isinstance(cert, Bipartition):
        check = certify.check_valid_balanced_partition if args.balanced else certify.check_valid_partition
        verdict = check(g, cert, k)  # malformed partitions raise, -> exit 2
        ok = verdict.valid
    else:
        for u, v in cert.edges:
            if not g.has_edge(u, v):
                raise graphs.InvalidEdgeError(f"certificate edge ({u + 1},{v + 1}) not in graph")
        ok = certify.verify_solution(g, cert, k)
    RunReport(
        command="verify",
        input_digest=digest,
        answer="valid" if ok else "invalid",
        wall_time_s=round(time.monotonic() - started, 6),
    ).emit()
    return 0 if ok else 1


# ---------------------------------------------------------------------------
# kernelize


def cmd_kernelize(args) -> int:
    g, digest = _read_graph(args.path)
    k = _positive_budget(args)
    started = time.monotonic()
    st = kernel.kernelize_bbc(g, k)
    with open(args.output, "w", encoding="utf-8") as fh:
        fh.write(graphs.format_edge_list(st.graph))
    _write_json(
        args.output + ".json",
        {
            "original_n": g.n,
            "reduced_n": st.graph.n,
            "final_k": st.k,
            "outcome": st.outcome,
            "rule_applications": st.log,
        },
    )
    RunReport(
        command="kernelize",
        input_digest=digest,
        answer=st.outcome,
        certificate_path=args.output,
        wall_time_s=round(time.monotonic() - started, 6),
    ).emit()
    return 1 if st.outcome == kernel.TRIVIAL_NO else 0


# ---------------------------------------------------------------------------
# generate


def _parse_rbds_file(text: str) -> reductions.RbdsInstance:
    header = None
    edges = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if header is not None:
                raise GraphError(f"line {lineno}: duplicate header")
            if len(parts) != 5 or parts[1] != "rbds":
                raise GraphError(f"line {lineno}: header must be 'p rbds <reds> <blues> <kappa>'")
            try:
                header = (int(parts[2]), int(parts[3]), int(parts[4]))
            except ValueError:
                raise GraphError(f"line {lineno}: non-integer header fields") from None
        elif parts[0] == "e":
            if header is None:
                raise GraphError(f"line {lineno}: edge before header")
            try:
                r, b = int(parts[1]), int(parts[2])
            except (ValueError, IndexError):
                raise GraphError(f"line {lineno}: edge line must be 'e <red> <blue>'") from None
            if not (1 <= r <= header[0] and 1 <= b <= header[1]):
                raise GraphError(f"line {lineno}: edge ({r},{b}) out of range")
            edges.add((r - 1, b - 1))
        else:
            raise GraphError(f"line {lineno}: unknown record {parts[0]!r}")
    if header is None:
        raise GraphError("missing 'p rbds <reds> <blues> <kappa>' header")
    return reductions.RbdsInstance(header[0], header[1], header[2], frozenset(edges))


def _parse_h2c_file(text: str) -> reductions.Hypergraph:
    n = m = None
    hyperedges: list[frozenset[int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if n is None:
            if parts[0] != "h" or len(parts) != 3:
                raise GraphError(f"line {lineno}: header must be 'h <vertices> <hyperedges>'")
            try:
                n, m = int(parts[1]), int(parts[2])
            except ValueError:
                raise GraphError(f"line {lineno}: non-integer header fields") from None
            continue
        try:
            ids = [int(p) for p in parts]
        except ValueError:
            raise GraphError(f"line {lineno}: non-integer vertex id") from None
        if any(not 1 <= v <= n for v in ids):
            raise GraphError(f"line {lineno}: vertex id outside 1..{n}")
        hyperedges.append(frozenset(v - 1 for v in ids))
    if n is None:
        raise GraphError("missing 'h <vertices> <hyperedges>' header")
    if len(hyperedges) != m:
        raise GraphError(f"header declares {m} hyperedges, found {len(hyperedges)}")
    return reductions.Hypergraph(n, tuple(hyperedges))


def cmd_generate(args) -> int:
    with open(args.source, "rb") as fh:
        data = fh.read()
    digest = hashlib.sha256(data).hexdigest()
    text = data.decode("utf-8")
    started = time.monotonic()
    normalization: list[str] = []
    source_answer: bool | None = None
    sidecar: dict
    if args.kind == "rbds":
        # the construction is answer-faithful for any instance in the
        # generator's domain, so no padding is applied here
        inst = _parse_rbds_file(text)
        g, budget = reductions.gen_bc_from_rbds(inst)
        try:
            source_answer = reductions.solve_rbds_brute(inst)
        except reductions.BruteForceSizeError:
            source_answer = None
        sidecar = {
            "kind": "rbds",
            "budget": budget,
            "counts": {"reds": inst.n_red, "blues": inst.n_blue, "kappa": inst.kappa,
                       "n": g.n, "m": g.edge_count},
        }
    elif args.kind == "h2c":
        hg, normalization = reductions.normalize_hypergraph(_parse_h2c_file(text))
        g, budget = reductions.gen_bbc_from_h2c(hg)
        try:
            source_answer = reductions.solve_h2c_brute(hg)
        except reductions.BruteForceSizeError:
            source_answer = None
        counts = reductions.h2c_core_counts(hg)
        sidecar = {
            "kind": "h2c",
            "budget": budget,
            "counts": {"vertices": hg.n, "hyperedges": len(hg.edges),
                       "n": g.n, "m": g.edge_count, **counts},
        }
    else:  # is
        if args.k is None:
            raise GraphError("generate is requires --k (independent-set size)")
        h = graphs.parse_edge_list(text)
        g, target = reductions.gen_bc_from_is(h, args.k)
        try:
            source_answer = reductions.solve_is_brute(h, args.k)
        except reductions.BruteForceSizeError:
            source_answer = None
        sidecar = {
            "kind": "is",
            "target_size": target,
            "budget": g.n - target,
            "counts": {"source_n": h.n, "n": g.n, "m": g.edge_count},
        }
    sidecar["source_answer"] = source_answer
    sidecar["normalization"] = normalization
    with open(args.output, "w", encoding="utf-8") as fh:
        fh.write(graphs.format_edge_list(g))
    _write_json(args.output + ".json", sidecar)
    RunReport(
        command="generate",
        input_digest=digest,
        certificate_path=args.output,
        wall_time_s=round(time.monotonic() - started, 6),
    ).emit()
    return 0


# ---------------------------------------------------------------------------
# selftest


def cmd_selftest(args) -> int:
    """Exhaustive fpt-vs-oracle agreement on all connected graphs up to --max-n."""
    budgets = range(args.max_budget + 1)
    failures = 0
    started = time.monotonic()
    for n in range(1, args.max_n + 1):
        checked = 0
        count = 0
        for g in smallgraphs.connected_labeled_graphs(n):
            count += 1
            for balanced in (False, True):
                solver = fpt.fpt_bbc if balanced else fpt.fpt_bc
                probe = oracle.oracle_bbc if balanced else oracle.oracle_bc
                for k in budgets:
                    verdict = solver(g, k)
                    truth = probe(g, k)
                    checked += 1
                    if verdict.is_yes != truth.answer:
                        failures += 1
                        print(
                            f"DISAGREE n={n} k={k} balanced={balanced} "
                            f"edges={g.edges} fpt={verdict.is_yes} oracle={truth.answer}"
                        )
                    elif verdict.is_yes and not certify.verify_solution(
                        g, verdict.solution, k
                    ):
                        failures += 1
                        print(f"BAD CERT n={n} k={k} balanced={balanced} edges={g.edges}")
        print(f"selftest n={n}: {count} connected graphs, {checked} checks")
    print(f"selftest done in {time.monotonic() - started:.1f}s, failures={failures}")
    return 1 if failures else 0


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bicontract",
        description="Exact (balanced) biclique contraction toolkit",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_decision_flags(p, engine_flag: bool) -> None:
        p.add_argument("path", help="edge-list instance file")
        p.add_argument("--budget", "-k", type=int, required=True, help="contraction budget")
        p.add_argument("--balanced", action="store_true", help="target a balanced biclique")
        p.add_argument("--certificate", help="write a certificate JSON on yes")
        p.add_argument("--threads", type=int, default=1, help="worker cap (engines are single-threaded)")
        if engine_flag:
            p.add_argument("--engine", choices=["fpt", "oracle"], default="fpt")
            p.add_argument("--trace", action="store_true", help="include branch counters in the report")

    p = sub.add_parser("solve", help="decide an instance with the branching solver")
    add_decision_flags(p, engine_flag=True)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("oracle", help="decide an instance by exhaustive search")
    add_decision_flags(p, engine_flag=False)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("verify", help="check a certificate against an instance")
    p.add_argument("path", help="edge-list instance file")
    p.add_argument("--certificate", required=True, help="certificate JSON file")
    p.add_argument("--budget", "-k", type=int, required=True)
    p.add_argument("--balanced", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("kernelize", help="reduce a balanced instance")
    p.add_argument("path", help="edge-list instance file")
    p.add_argument("--budget", "-k", type=int, required=True)
    p.add_argument("--output", required=True, help="reduced instance path (sidecar adds .json)")
    p.set_defaults(func=cmd_kernelize)

    p = sub.add_parser("generate", help="build an instance from a source problem")
    p.add_argument("kind", choices=["rbds", "h2c", "is"])
    p.add_argument("source", help="source problem file")
    p.add_argument("--output", required=True, help="instance path (sidecar adds .json)")
    p.add_argument("--k", type=int, help="independent-set size (kind 'is' only)")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("selftest", help="exhaustive solver-vs-oracle agreement check")
    p.add_argument("--max-n", type=int, default=5)
    p.add_argument("--max-budget", type=int, default=4)
    p.set_defaults(func=cmd_selftest)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (GraphError, reductions.GeneratorError, oracle.OracleSizeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
