"""Command-line harness: decide | oracle | compare | audit-facts | gen.

Exit codes: 0 = ran to completion (disagreement findings included), 2 = input
or usage error, 3 = capacity error.  Disagreement between the decision
procedure and the oracle is a recorded finding, never a failure.
"""

from __future__ import annotations

import argparse
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor, as_completed
from pathlib import Path

from .eds import verify_eds
from .errors import CapacityError, ParseError
from .generators import GenSpec, parse_genspec
from .graph import Graph, encode_graph6, is_connected, is_regular, parse_edge_list, parse_graph6
from .oracle import solve_exact
from .records import (
    FLAG_CONFLUENCE, FLAG_EXHAUSTED, FLAG_PROBE_CONVERSE, FLAG_WORK_BUDGET,
    KIND_AUDIT, KIND_SUMMARY, CompareRecord, SkipRecord, compute_agree,
    decide_report_doc, json_line, oracle_report_doc, save_counterexample,
)
from .reduction import (
    REASON_EXHAUSTED, VERDICT_DISCREPANCY, VERDICT_FOUND,
    decide_eds, drop_witness, probe, reduce_to_fixpoint, work_budget,
)
from .rng import rank_permutation

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_CAPACITY = 3

ENV_MAX_N = "EDS_AUDIT_MAX_N"

COMPARE_CONFLUENCE_SEEDS = tuple(range(1, 6))
AUDIT_CONFLUENCE_SEEDS = tuple(range(1, 21))
AUDIT_DEFAULT_MAX_N = 20


def _print(line: str, out) -> None:
    out.write(line + "\n")


def oracle_cap(args) -> int | None:
    if getattr(args, "max_n", None) is not None:
        return args.max_n
    env = os.environ.get(ENV_MAX_N)
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise ParseError(f"{ENV_MAX_N} must be an integer, got {env!r}") from None
    return None


def expand_gen_args(gen_args: list[str], seeds: str | None) -> list[GenSpec]:
    """Expand --gen arguments, including 'seed=A..B' ranges and --seeds."""
    specs: list[GenSpec] = []
    for text in gen_args:
        rng = None
        base = text
        if "seed=" in text:
            head, _, tail = text.rpartition("seed=")
            if ".." in tail:
                rng = _parse_seed_range(tail)
                base = head.rstrip(",").rstrip(":")
        if rng is None and seeds is not None and text.startswith("random-regular")\
                and "seed=" not in text:
            rng = _parse_seed_range(seeds)
            base = text
        if rng is None:
            specs.append(parse_genspec(text))
        else:
            sep = ":" if ":" not in base else ","
            for s in rng:
                specs.append(parse_genspec(f"{base}{sep}seed={s}"))
    return specs


def _parse_seed_range(text: str) -> range:
    lo, dots, hi = text.partition("..")
    try:
        if dots:
            return range(int(lo), int(hi) + 1)
        value = int(text)
        return range(value, value + 1)
    except ValueError:
        raise ParseError(f"bad seed range {text!r}") from None


def collect_inputs(args) -> list[tuple[str, str | None]]:
    """Resolve the input source to a list of (graph6, genspec-or-None).

    Graphs are re-encoded to canonical graph6 so every downstream record and
    replay refers to the same string.
    """
    gen_args = getattr(args, "gen", None) or []
    if gen_args:
        if args.input is not None:
            raise ParseError("give either an input or --gen, not both")
        out = []
        for spec in expand_gen_args(gen_args, getattr(args, "seeds", None)):
            out.append((encode_graph6(spec.build()), spec.canonical()))
        return out
    if args.input is None or args.input == "-":
        text = sys.stdin.read()
    else:
        path = Path(args.input)
        if path.exists():
            text = path.read_text(encoding="utf-8")
        elif args.format == "graph6":
            text = args.input  # literal graph6 string
        else:
            raise ParseError(f"input file {args.input!r} not found")
    if args.format == "edgelist":
        return [(encode_graph6(parse_edge_list(text)), None)]
    out = []
    for lineno, line in enumerate(text.splitlines(), 1):
        if not line.strip():
            continue
        try:
            g = parse_graph6(line)
        except ParseError as exc:
            raise ParseError(f"line {lineno}: {exc}") from None
        out.append((encode_graph6(g), None))
    if not out:
        raise ParseError("no graphs in input")
    return out


def _open_out(args):
    if getattr(args, "out", None):
        return open(args.out, "w", encoding="utf-8")
    return sys.stdout


# decide


def cmd_decide(args) -> int:
    inputs = collect_inputs(args)
    status = EXIT_OK
    for graph6, _ in inputs:
        g = parse_graph6(graph6)
        err = precondition_error(g)
        if err:
            _print(json_line({"graph6": graph6, "error": err}), sys.stdout)
            status = EXIT_INPUT
            continue
        doc = decide_report_doc(graph6, decide_eds(g), include_trace=args.trace)
        _print(json_line(doc), sys.stdout)
    return status


def precondition_error(g: Graph) -> str | None:
    if g.n == 0:
        return "empty-graph"
    if is_regular(g) is None:
        return "not-regular"
    if not is_connected(g):
        return "disconnected"
    return None


# oracle


def cmd_oracle(args) -> int:
    inputs = collect_inputs(args)
    cap = oracle_cap(args)
    status = EXIT_OK
    for graph6, _ in inputs:
        g = parse_graph6(graph6)
        try:
            report = solve_exact(g, enumerate_all=args.enumerate, max_n=cap)
        except CapacityError as exc:
            _print(json_line({"graph6": graph6, "error": "capacity", "message": str(exc)}),
                   sys.stdout)
            status = max(status, EXIT_CAPACITY)
            continue
        except ValueError as exc:
            _print(json_line({"graph6": graph6, "error": "usage", "message": str(exc)}),
                   sys.stdout)
            status = EXIT_INPUT
            continue
        _print(json_line(oracle_report_doc(graph6, report)), sys.stdout)
    return status


# compare


def _compare_one(graph6: str, genspec: str | None, deterministic: bool,
                 cap: int | None) -> dict:
    """Worker for one compare row; returns row + optional counterexample parts."""
    g = parse_graph6(graph6)
    err = precondition_error(g)
    if err:
        return {"skip": SkipRecord(graph6, g.n, err, genspec).to_json_dict()}

    t0 = time.perf_counter()
    decision = decide_eds(g)
    elapsed_decide = time.perf_counter() - t0
    t0 = time.perf_counter()
    oracle = solve_exact(g, max_n=cap)
    elapsed_oracle = time.perf_counter() - t0

    flags = []
    if decision.reason == REASON_EXHAUSTED:
        flags.append(FLAG_EXHAUSTED)
        if oracle.has_eds:
            flags.append(FLAG_PROBE_CONVERSE)
    baseline, _ = reduce_to_fixpoint(g, frozenset(range(g.n)))
    for seed in COMPARE_CONFLUENCE_SEEDS:
        seeded, _ = reduce_to_fixpoint(g, frozenset(range(g.n)),
                                       order=rank_permutation(g.n, seed))
        if seeded != baseline:
            flags.append(FLAG_CONFLUENCE)
            break
    if decision.work_counter > work_budget(g.n):
        flags.append(FLAG_WORK_BUDGET)

    cert_valid = None
    if decision.verdict == VERDICT_FOUND:
        cert_valid = verify_eds(g, decision.certificate.members)

    record = CompareRecord(
        graph6=graph6, n=g.n, r=len(g.adj[0]),
        decide_verdict=decision.verdict, decide_reason=decision.reason,
        oracle_has_eds=oracle.has_eds,
        agree=compute_agree(decision.verdict, oracle.has_eds),
        certificate_valid=cert_valid, claim_audit_flags=tuple(flags),
        work_counter=decision.work_counter,
        elapsed_decide=0.0 if deterministic else elapsed_decide,
        elapsed_oracle=0.0 if deterministic else elapsed_oracle,
        genspec=genspec)
    out = {"row": record.to_json_dict()}
    if not record.agree or decision.verdict == VERDICT_DISCREPANCY:
        out["counterexample"] = {
            "record": record,
            "decide": decide_report_doc(graph6, decision, include_trace=True),
            "oracle": oracle_report_doc(graph6, oracle),
        }
    return out


def _compare_worker(payload: tuple) -> dict:
    return _compare_one(*payload)


def cmd_compare(args) -> int:
    # fail on an unwritable output path before any processing
    out = _open_out(args)
    save_dir = Path(args.save_counterexamples) if args.save_counterexamples else None
    try:
        if save_dir is not None:
            save_dir.mkdir(parents=True, exist_ok=True)
        inputs = collect_inputs(args)
        cap = oracle_cap(args)
        jobs = 1 if args.deterministic else max(1, args.jobs)
        results = _run_compare(inputs, args.deterministic, cap, jobs)
        totals = {"rows": 0, "skips": 0, "agreements": 0,
                  "counterexamples": 0, "max_work_counter": 0}
        for result in results:
            if "skip" in result:
                _print(json_line(result["skip"]), out)
                totals["skips"] += 1
                continue
            row = result["row"]
            _print(json_line(row), out)
            totals["rows"] += 1
            totals["agreements"] += 1 if row["agree"] else 0
            totals["max_work_counter"] = max(totals["max_work_counter"],
                                             row["work_counter"])
            if "counterexample" in result:
                totals["counterexamples"] += 1
                if save_dir is not None:
                    ce = result["counterexample"]
                    save_counterexample(save_dir, row["graph6"], ce["record"],
                                        ce["decide"], ce["oracle"])
        summary = {
            "kind": KIND_SUMMARY,
            "total": totals["rows"] + totals["skips"],
            "records": totals["rows"],
            "skips": totals["skips"],
            "agreement_rate": (totals["agreements"] / totals["rows"]
                               if totals["rows"] else None),
            "max_work_counter": totals["max_work_counter"],
            "counterexamples": totals["counterexamples"],
        }
        _print(json_line(summary), sys.stdout)
    finally:
        if out is not sys.stdout:
            out.close()
    return EXIT_OK


def _run_compare(inputs, deterministic, cap, jobs):
    if jobs == 1:
        for graph6, genspec in inputs:
            yield _compare_one(graph6, genspec, deterministic, cap)
        return
    payloads = [(graph6, genspec, deterministic, cap) for graph6, genspec in inputs]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        futures = [pool.submit(_compare_worker, p) for p in payloads]
        for fut in as_completed(futures):
            yield fut.result()


# audit-facts


def _audit_one(graph6: str, genspec: str | None, cap: int) -> dict:
    g = parse_graph6(graph6)
    if g.n == 0:
        return SkipRecord(graph6, 0, "empty-graph", genspec).to_json_dict()
    if g.n > cap:
        raise CapacityError(f"n={g.n} exceeds the audit size guard {cap}")
    enum = solve_exact(g, enumerate_all=True, max_n=cap)
    solutions = enum.solutions
    union = frozenset().union(*solutions) if solutions else frozenset()
    everything = frozenset(range(g.n))

    filter_violations = []
    for sol in solutions:
        for v in sorted(sol):
            witness = drop_witness(g, everything, v)
            if witness is not None:
                filter_violations.append({"vertex": v, "witness": witness})

    baseline, drops = reduce_to_fixpoint(g, everything)
    for event in drops:
        if event.vertex in union:
            filter_violations.append({"vertex": event.vertex, "witness": event.witness})

    probe_violations = []
    converse_violations = []
    for anchor in sorted(baseline):
        result = probe(g, baseline, anchor)
        in_some_solution = any(anchor in sol for sol in solutions)
        if not result.survivors:
            if in_some_solution:
                probe_violations.append({"anchor": anchor})
        elif solutions and not in_some_solution:
            converse_violations.append({"anchor": anchor,
                                        "survivors": sorted(result.survivors)})

    confluence_violations = []
    for seed in AUDIT_CONFLUENCE_SEEDS:
        seeded, _ = reduce_to_fixpoint(g, everything,
                                       order=rank_permutation(g.n, seed))
        if seeded != baseline:
            confluence_violations.append({"seed": seed, "fixpoint": sorted(seeded)})

    degree = is_regular(g)
    return {
        "kind": KIND_AUDIT,
        "graph6": graph6,
        "n": g.n,
        "r": degree,
        "connected": is_connected(g),
        "eds_count": len(solutions),
        "filter_soundness_violations": filter_violations,
        "probe_soundness_violations": probe_violations,
        "probe_converse_violations": converse_violations,
        "confluence_violations": confluence_violations,
        "sound": not filter_violations and not probe_violations,
        "genspec": genspec,
    }


def cmd_audit_facts(args) -> int:
    inputs = collect_inputs(args)
    cap = args.max_n if args.max_n is not None else AUDIT_DEFAULT_MAX_N
    out = _open_out(args)
    status = EXIT_OK
    sound = 0
    total = 0
    try:
        for graph6, genspec in inputs:
            try:
                row = _audit_one(graph6, genspec, cap)
            except CapacityError:
                skip = SkipRecord(graph6, parse_graph6(graph6).n, "capacity", genspec)
                _print(json_line(skip.to_json_dict()), out)
                status = max(status, EXIT_CAPACITY)
                continue
            _print(json_line(row), out)
            if row["kind"] == KIND_AUDIT:
                total += 1
                sound += 1 if row["sound"] else 0
        summary = {"kind": KIND_SUMMARY, "total": total, "sound": sound}
        _print(json_line(summary), sys.stdout)
    finally:
        if out is not sys.stdout:
            out.close()
    return status


# gen


def cmd_gen(args) -> int:
    specs = expand_gen_args(args.spec, args.seeds)
    out = _open_out(args)
    try:
        for spec in specs:
            _print(encode_graph6(spec.build()), out)
    finally:
        if out is not sys.stdout:
            out.close()
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="eds-audit",
        description="Decide efficient-dominating-set existence on regular graphs, "
                    "cross-check against an exact oracle, and audit the procedure's claims.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_input(p, with_gen: bool):
        p.add_argument("input", nargs="?",
                       help="graph6 string, file of graph6 lines, edge-list file, or - for stdin")
        p.add_argument("--format", choices=("graph6", "edgelist"), default="graph6")
        if with_gen:
            p.add_argument("--gen", action="append", default=[],
                           metavar="SPEC", help="generate graphs instead of reading input")
            p.add_argument("--seeds", help="seed range A..B applied to --gen specs")

    p = sub.add_parser("decide", help="run the decision procedure per graph")
    add_input(p, with_gen=False)
    p.add_argument("--trace", action="store_true", help="include the full event trace")
    p.set_defaults(func=cmd_decide)

    p = sub.add_parser("oracle", help="run the exact oracle per graph")
    add_input(p, with_gen=False)
    p.add_argument("--enumerate", action="store_true", help="enumerate all solutions")
    p.add_argument("--max-n", type=int, help="override the oracle size guard")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("compare", help="run both solvers and record agreement")
    add_input(p, with_gen=True)
    p.add_argument("--out", help="JSONL output path (default stdout)")
    p.add_argument("--save-counterexamples", metavar="DIR",
                   help="directory for replayable disagreement files")
    p.add_argument("--jobs", type=int, default=1, help="parallel per-graph jobs")
    p.add_argument("--deterministic", action="store_true",
                   help="single-threaded, zeroed timings, byte-stable output")
    p.add_argument("--max-n", type=int, help="override the oracle size guard")
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("audit-facts",
                       help="enumerate solutions and audit filter/probe claims")
    add_input(p, with_gen=True)
    p.add_argument("--out", help="JSONL output path (default stdout)")
    p.add_argument("--max-n", type=int, default=None,
                   help=f"size guard for enumeration (default {AUDIT_DEFAULT_MAX_N})")
    p.set_defaults(func=cmd_audit_facts)

    p = sub.add_parser("gen", help="emit graph6 lines for generator specs")
    p.add_argument("spec", nargs="+", help="generator spec, e.g. cycle:n=6")
    p.add_argument("--seeds", help="seed range A..B for random-regular specs")
    p.add_argument("--out", help="output path (default stdout)")
    p.set_defaults(func=cmd_gen)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except CapacityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    raise SystemExit(main())
