"""Candidate-elimination decision procedure for efficient dominating sets.

The procedure keeps a candidate set A (vertices still allowed in a solution)
and shrinks it three ways:

- drop filter: v leaves A when some vertex c at distance exactly 2 from v has
  no potential dominator left outside N(v), i.e. (N(c) \\ N(v)) and A are
  disjoint.  If v were in a solution, c's dominator would have to be c itself
  (then a common neighbor of v and c is dominated twice) or a common neighbor
  (breaking independence), so dropping such v is provably safe.
- fixpoint reduction: apply the drop filter repeatedly until no vertex of A
  qualifies.
- probe: tentatively place an anchor vertex a in the solution, delete
  N(a) and the distance-2 vertices of a from A, reduce to a fixpoint.  An
  empty result proves a belongs to no solution inside A (the sound
  direction).  The converse - a nonempty result meaning a is usable - is an
  unproven claim this package only audits.

decide_eds commits one anchor per round on the strength of that unproven
converse and never backtracks; the harness records disagreements with the
exact oracle as findings.  Every Found verdict is verified before it is
returned, so unsoundness can only surface as NoneExists-vs-oracle
disagreement or as an explicit Discrepancy.
"""

from __future__ import annotations

from dataclasses import dataclass

from .eds import EdsCertificate, verify_eds
from .graph import Graph, VertexSet, is_connected, is_regular
from .rng import rank_permutation

STAGE_INITIAL = "initial-reduction"
STAGE_PROBE = "probe"
STAGE_MAIN = "main-loop"

KIND_DROP = "drop"
KIND_COMMIT = "commit"
KIND_PROBE_EMPTY = "probe-empty"

VERDICT_FOUND = "found"
VERDICT_NONE = "none-exists"
VERDICT_DISCREPANCY = "discrepancy"

REASON_INITIAL_EMPTY = "initial-reduction-empty"
REASON_ALL_PROBES_EMPTY = "all-probes-empty"
REASON_EXHAUSTED = "candidates-exhausted"
REASON_NOT_EDS = "final-set-not-EDS"

# Work bound: one unit per droppability test.  A fixpoint reduction costs at
# most n*(n+1) <= 2n^2 tests (n drops, full rescan after each); decide runs
# at most n+1 probes per commit and at most n commits, so 4*n^4 dominates.
WORK_BUDGET_COEFF = 4


def work_budget(n: int) -> int:
    """Droppability-test budget decide_eds must stay under for an n-vertex graph."""
    return WORK_BUDGET_COEFF * n**4


@dataclass(frozen=True)
class TraceEvent:
    """One step of a decision run.

    kind 'drop': ``vertex`` left the candidate set, ``witness`` is the
    distance-2 vertex certifying the drop.  kind 'commit': ``vertex`` became
    an anchor and its distance-<=2 ball left the candidate set.  kind
    'probe-empty': candidate anchor ``vertex`` probed to the empty set and was
    rejected.
    """

    kind: str
    vertex: int
    witness: int | None
    stage: str

    def to_json_dict(self) -> dict:
        return {"kind": self.kind, "vertex": self.vertex,
                "witness": self.witness, "stage": self.stage}


@dataclass(frozen=True)
class ProbeResult:
    """Outcome of probing one anchor: the reduced candidate set and drop log."""

    anchor: int
    survivors: frozenset[int]
    drops: tuple[TraceEvent, ...]


@dataclass(frozen=True)
class Decision:
    """Verdict of the decision procedure plus its full audit trail.

    ``certificate`` is set for 'found' (always verified), ``reason`` for
    'none-exists' and 'discrepancy', ``final_set`` for 'discrepancy'.
    ``work_counter`` counts droppability tests across the whole run.
    """

    verdict: str
    certificate: EdsCertificate | None
    reason: str | None
    final_set: frozenset[int] | None
    trace: tuple[TraceEvent, ...]
    work_counter: int

    @property
    def committed(self) -> tuple[int, ...]:
        return tuple(e.vertex for e in self.trace if e.kind == KIND_COMMIT)

    def trace_json(self) -> list[dict]:
        return [e.to_json_dict() for e in self.trace]


class _Work:
    __slots__ = ("tests",)

    def __init__(self) -> None:
        self.tests = 0


def drop_witness(g: Graph, candidates: VertexSet, v: int,
                 work: _Work | None = None) -> int | None:
    """Smallest vertex c at distance 2 from v with (N(c) \\ N(v)) disjoint
    from ``candidates``; None if no such c.

    A returned witness certifies that v belongs to no efficient dominating
    set contained in ``candidates``.
    """
    g._check_vertex(v)
    if v not in candidates:
        raise ValueError(f"vertex {v} is not in the candidate set")
    if work is not None:
        work.tests += 1
    nv = g.adj[v]
    for c in g.second_lists[v]:
        if candidates.isdisjoint(g.adj[c] - nv):
            return c
    return None


def _reduce(g: Graph, current: set[int], order: list[int] | None, stage: str,
            work: _Work | None, events: list[TraceEvent]) -> set[int]:
    """Drop filter to fixpoint, rescanning from the front after each drop."""
    key = None if order is None else order.__getitem__
    while True:
        for v in sorted(current, key=key):
            c = drop_witness(g, current, v, work)
            if c is not None:
                current.discard(v)
                events.append(TraceEvent(KIND_DROP, v, c, stage))
                break
        else:
            return current


def reduce_to_fixpoint(g: Graph, a: VertexSet, *, order: list[int] | None = None,
                       stage: str = STAGE_INITIAL,
                       ) -> tuple[frozenset[int], tuple[TraceEvent, ...]]:
    """Apply the drop filter until no vertex of ``a`` qualifies.

    Returns the fixed point and the ordered drop log.  ``order`` ranks
    vertices for the scan (default: ascending id).
    """
    for v in a:
        g._check_vertex(v)
    events: list[TraceEvent] = []
    final = _reduce(g, set(a), order, stage, None, events)
    return frozenset(final), tuple(events)


def probe(g: Graph, a: VertexSet, anchor: int, *, order: list[int] | None = None,
          stage: str = STAGE_PROBE, work: _Work | None = None) -> ProbeResult:
    """Delete N(anchor) and the distance-2 vertices of anchor from ``a``, then
    reduce to a fixpoint.

    Empty survivors certify the anchor belongs to no efficient dominating set
    contained in ``a`` (sound); nonempty survivors decide nothing by
    themselves.
    """
    if anchor not in a:
        raise ValueError(f"anchor {anchor} is not in the candidate set")
    g._check_vertex(anchor)
    current = set(a)
    current -= g.adj[anchor]
    current.difference_update(g.second_lists[anchor])
    events: list[TraceEvent] = []
    final = _reduce(g, current, order, stage, work, events)
    return ProbeResult(anchor, frozenset(final), tuple(events))


def _decide(g: Graph, order: list[int] | None) -> Decision:
    r = is_regular(g)
    if r is None:
        raise ValueError("decision procedure requires a regular graph")
    if not is_connected(g):
        raise ValueError("decision procedure requires a connected graph")

    work = _Work()
    trace: list[TraceEvent] = []
    key = None if order is None else order.__getitem__

    current = _reduce(g, set(range(g.n)), order, STAGE_INITIAL, work, trace)
    if not current:
        return Decision(VERDICT_NONE, None, REASON_INITIAL_EMPTY, None,
                        tuple(trace), work.tests)

    committed: set[int] = set()
    first_round = True
    while True:
        uncommitted = current - committed
        if not uncommitted:
            break
        a = min(uncommitted, key=key)
        in_reach = g.adj[a] & current
        if order is None:
            candidates = [a, *sorted(in_reach)]
        else:
            candidates = sorted({a} | in_reach, key=key)
        accepted = None
        for cand in candidates:
            result = probe(g, frozenset(current), cand, order=order,
                           stage=STAGE_MAIN, work=work)
            if result.survivors:
                accepted = result
                break
            trace.append(TraceEvent(KIND_PROBE_EMPTY, cand, None, STAGE_MAIN))
        if accepted is None:
            reason = REASON_ALL_PROBES_EMPTY if first_round else REASON_EXHAUSTED
            return Decision(VERDICT_NONE, None, reason, None, tuple(trace), work.tests)
        trace.append(TraceEvent(KIND_COMMIT, accepted.anchor, None, STAGE_MAIN))
        trace.extend(accepted.drops)
        committed.add(accepted.anchor)
        current = set(accepted.survivors)
        first_round = False

    final = frozenset(current)
    if verify_eds(g, final):
        return Decision(VERDICT_FOUND, EdsCertificate(final, g.n), None, None,
                        tuple(trace), work.tests)
    return Decision(VERDICT_DISCREPANCY, None, REASON_NOT_EDS, final,
                    tuple(trace), work.tests)


def decide_eds(g: Graph) -> Decision:
    """Run the decision procedure with the deterministic smallest-id order.

    Raises ValueError unless g is connected and regular.  'found' verdicts
    carry a verified certificate; a final set failing verification comes back
    as 'discrepancy', never as a silent 'found'.
    """
    decision = _decide(g, None)
    assert decision.work_counter <= work_budget(g.n)
    return decision


def decide_with_order(g: Graph, drop_order_seed: int) -> Decision:
    """Same procedure, but every vertex scan and anchor choice follows a
    seeded random order; used to measure order sensitivity."""
    decision = _decide(g, rank_permutation(g.n, drop_order_seed))
    assert decision.work_counter <= work_budget(g.n)
    return decision
