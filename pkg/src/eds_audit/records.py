"""JSONL record schemas, canonical JSON output, and counterexample files.

Every row the harness emits is one canonical JSON line carrying a "kind"
field, so concurrent writers can append in completion order and consumers can
parse each line independently.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from pathlib import Path

from .oracle import OracleReport
from .reduction import (
    KIND_DROP, KIND_PROBE_EMPTY, STAGE_INITIAL, STAGE_MAIN,
    VERDICT_DISCREPANCY, VERDICT_FOUND, Decision,
)

FLAG_PROBE_CONVERSE = "probe-converse-violation"
FLAG_CONFLUENCE = "confluence-violation"
FLAG_EXHAUSTED = "candidates-exhausted"
FLAG_WORK_BUDGET = "work-budget-exceeded"

KIND_RECORD = "record"
KIND_SKIP = "skip"
KIND_AUDIT = "audit"
KIND_SUMMARY = "summary"


def json_line(doc: dict) -> str:
    """Canonical one-line JSON: sorted keys, no whitespace."""
    return json.dumps(doc, sort_keys=True, separators=(",", ":"))


@dataclass(frozen=True)
class CompareRecord:
    """One comparison row: both verdicts for one graph plus audit flags."""

    graph6: str
    n: int
    r: int
    decide_verdict: str
    decide_reason: str | None
    oracle_has_eds: bool
    agree: bool
    certificate_valid: bool | None
    claim_audit_flags: tuple[str, ...]
    work_counter: int
    elapsed_decide: float
    elapsed_oracle: float
    genspec: str | None

    def to_json_dict(self) -> dict:
        return {
            "kind": KIND_RECORD,
            "graph6": self.graph6,
            "n": self.n,
            "r": self.r,
            "decide_verdict": self.decide_verdict,
            "decide_reason": self.decide_reason,
            "oracle_has_eds": self.oracle_has_eds,
            "agree": self.agree,
            "certificate_valid": self.certificate_valid,
            "claim_audit_flags": list(self.claim_audit_flags),
            "work_counter": self.work_counter,
            "elapsed_decide": self.elapsed_decide,
            "elapsed_oracle": self.elapsed_oracle,
            "genspec": self.genspec,
        }


@dataclass(frozen=True)
class SkipRecord:
    """A graph the harness did not process, and why."""

    graph6: str
    n: int
    reason: str
    genspec: str | None

    def to_json_dict(self) -> dict:
        return {
            "kind": KIND_SKIP,
            "graph6": self.graph6,
            "n": self.n,
            "reason": self.reason,
            "genspec": self.genspec,
        }


_RECORD_FIELDS = {
    "kind", "graph6", "n", "r", "decide_verdict", "decide_reason",
    "oracle_has_eds", "agree", "certificate_valid", "claim_audit_flags",
    "work_counter", "elapsed_decide", "elapsed_oracle", "genspec",
}
_SKIP_FIELDS = {"kind", "graph6", "n", "reason", "genspec"}


def parse_record_line(line: str) -> CompareRecord | SkipRecord | dict:
    """Parse and validate one harness JSONL row.

    Compare and skip rows come back as dataclasses; audit and summary rows as
    validated dicts.  Raises ValueError on anything malformed.
    """
    doc = json.loads(line)
    if not isinstance(doc, dict) or "kind" not in doc:
        raise ValueError("row is not an object with a 'kind' field")
    kind = doc["kind"]
    if kind == KIND_RECORD:
        if set(doc) != _RECORD_FIELDS:
            raise ValueError(f"compare row has wrong fields: {sorted(doc)}")
        return CompareRecord(
            graph6=doc["graph6"], n=doc["n"], r=doc["r"],
            decide_verdict=doc["decide_verdict"], decide_reason=doc["decide_reason"],
            oracle_has_eds=doc["oracle_has_eds"], agree=doc["agree"],
            certificate_valid=doc["certificate_valid"],
            claim_audit_flags=tuple(doc["claim_audit_flags"]),
            work_counter=doc["work_counter"], elapsed_decide=doc["elapsed_decide"],
            elapsed_oracle=doc["elapsed_oracle"], genspec=doc["genspec"])
    if kind == KIND_SKIP:
        if set(doc) != _SKIP_FIELDS:
            raise ValueError(f"skip row has wrong fields: {sorted(doc)}")
        return SkipRecord(graph6=doc["graph6"], n=doc["n"], reason=doc["reason"],
                          genspec=doc["genspec"])
    if kind in (KIND_AUDIT, KIND_SUMMARY):
        return doc
    raise ValueError(f"unknown row kind {kind!r}")


def decide_report_doc(graph6: str, decision: Decision, *, include_trace: bool = False) -> dict:
    """The JSON document cmd-decide prints for one graph (timing-free so
    replays can compare bytes)."""
    commits = list(decision.committed)
    doc = {
        "graph6": graph6,
        "verdict": decision.verdict,
        "reason": decision.reason,
        "certificate": (sorted(decision.certificate.members)
                        if decision.certificate else None),
        "final_set": (sorted(decision.final_set)
                      if decision.final_set is not None else None),
        "work_counter": decision.work_counter,
        "trace_summary": {
            "initial_drops": sum(1 for e in decision.trace
                                 if e.kind == KIND_DROP and e.stage == STAGE_INITIAL),
            "loop_drops": sum(1 for e in decision.trace
                              if e.kind == KIND_DROP and e.stage == STAGE_MAIN),
            "probe_empties": sum(1 for e in decision.trace
                                 if e.kind == KIND_PROBE_EMPTY),
            "commits": commits,
        },
    }
    if include_trace:
        doc["trace"] = decision.trace_json()
    return doc


def oracle_report_doc(graph6: str, report: OracleReport) -> dict:
    """The JSON document cmd-oracle prints for one graph (timing-free)."""
    doc = report.to_json_dict(include_elapsed=False)
    doc["graph6"] = graph6
    return doc


def counterexample_path(directory: Path, graph6: str) -> Path:
    digest = hashlib.sha256(graph6.encode("ascii")).hexdigest()[:16]
    return directory / f"counterexample-{digest}.json"


def save_counterexample(directory: Path, graph6: str, record: CompareRecord,
                        decide_doc: dict, oracle_doc: dict) -> Path:
    """Persist everything needed to replay one disagreement."""
    directory.mkdir(parents=True, exist_ok=True)
    path = counterexample_path(directory, graph6)
    payload = {
        "graph6": graph6,
        "genspec": record.genspec,
        "record": record.to_json_dict(),
        "decide": decide_doc,
        "oracle": oracle_doc,
    }
    path.write_text(json.dumps(payload, sort_keys=True, indent=2) + "\n",
                    encoding="utf-8")
    return path


def load_counterexample(path: Path) -> dict:
    payload = json.loads(path.read_text(encoding="utf-8"))
    for field in ("graph6", "record", "decide", "oracle"):
        if field not in payload:
            raise ValueError(f"counterexample file missing {field!r}")
    return payload


def replay_counterexample(path: Path) -> tuple[bool, str]:
    """Re-run both solvers on a saved graph and compare against the stored
    documents byte-for-byte (as canonical JSON lines)."""
    from .graph import parse_graph6
    from .oracle import solve_exact
    from .reduction import decide_eds

    payload = load_counterexample(path)
    g = parse_graph6(payload["graph6"])
    fresh_decide = decide_report_doc(payload["graph6"], decide_eds(g),
                                     include_trace="trace" in payload["decide"])
    fresh_oracle = oracle_report_doc(payload["graph6"], solve_exact(g))
    if json_line(fresh_decide) != json_line(payload["decide"]):
        return False, "decide output differs from the saved document"
    if json_line(fresh_oracle) != json_line(payload["oracle"]):
        return False, "oracle output differs from the saved document"
    return True, "replay matches"


def compute_agree(decide_verdict: str, oracle_has_eds: bool) -> bool:
    found = decide_verdict == VERDICT_FOUND
    return (found == oracle_has_eds) and decide_verdict != VERDICT_DISCREPANCY
