"""Independent exact solvers for efficient domination, used as ground truth.

Shares nothing with the reduction module beyond the graph type and
verification semantics, so the cross-check stays meaningful.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from .errors import CapacityError
from .graph import Graph, is_regular

DEFAULT_MAX_N = 128
NAIVE_MAX_N = 20


@dataclass(frozen=True)
class OracleReport:
    """Exact-solver outcome: verdict, solutions, and search effort."""

    has_eds: bool
    solutions: tuple[frozenset[int], ...]
    nodes_explored: int
    elapsed: float

    def to_json_dict(self, *, include_elapsed: bool = True) -> dict:
        doc = {
            "has_eds": self.has_eds,
            "solutions": [sorted(s) for s in self.solutions],
            "nodes_explored": self.nodes_explored,
        }
        if include_elapsed:
            doc["elapsed"] = self.elapsed
        return doc


def _closed_masks(g: Graph) -> list[int]:
    masks = []
    for v in range(g.n):
        m = 1 << v
        for u in g.adj[v]:
            m |= 1 << u
        masks.append(m)
    return masks


def _sorted_solutions(found: list[frozenset[int]]) -> tuple[frozenset[int], ...]:
    return tuple(sorted(found, key=lambda s: tuple(sorted(s))))


def solve_exact(g: Graph, enumerate_all: bool = False, *, max_n: int | None = None,
                use_size_bound: bool = True) -> OracleReport:
    """Exact-cover backtracking over closed neighborhoods.

    Picks the uncovered vertex with the fewest remaining covers (ties to the
    smallest id) and branches on each candidate whose closed neighborhood
    still fits inside the uncovered set.  Finds one solution, or all of them
    with ``enumerate_all``.
    """
    cap = DEFAULT_MAX_N if max_n is None else max_n
    if g.n == 0:
        raise ValueError("oracle requires a nonempty graph")
    if g.n > cap:
        raise CapacityError(f"n={g.n} exceeds the oracle size guard {cap}")
    start = time.perf_counter()

    if use_size_bound:
        r = is_regular(g)
        if r is not None and g.n % (r + 1):
            # divisibility failure alone proves no EDS exists
            return OracleReport(False, (), 0, time.perf_counter() - start)

    masks = _closed_masks(g)
    closed_sorted = [sorted(g.closed_adj[v]) for v in range(g.n)]
    found: list[frozenset[int]] = []
    chosen: list[int] = []
    nodes = 0

    def recurse(uncovered: int) -> bool:
        nonlocal nodes
        nodes += 1
        if not uncovered:
            found.append(frozenset(chosen))
            return not enumerate_all
        best: list[int] | None = None
        m = uncovered
        while m:
            u = (m & -m).bit_length() - 1
            m &= m - 1
            cands = [x for x in closed_sorted[u] if (masks[x] & ~uncovered) == 0]
            if not cands:
                return False
            if best is None or len(cands) < len(best):
                best = cands
                if len(best) == 1:
                    break
        assert best is not None
        for x in best:
            chosen.append(x)
            stop = recurse(uncovered & ~masks[x])
            chosen.pop()
            if stop:
                return True
        return False

    recurse((1 << g.n) - 1)
    solutions = _sorted_solutions(found)
    return OracleReport(bool(solutions), solutions, nodes, time.perf_counter() - start)


def solve_naive(g: Graph) -> OracleReport:
    """Test all 2^n subsets; the oracle's own ground truth at tiny sizes.

    A subset qualifies exactly when the closed neighborhoods of its members
    are pairwise disjoint and cover every vertex (the partition
    characterization verify_eds implements).
    """
    if g.n == 0:
        raise ValueError("oracle requires a nonempty graph")
    if g.n > NAIVE_MAX_N:
        raise CapacityError(f"n={g.n} exceeds the naive-solver guard {NAIVE_MAX_N}")
    start = time.perf_counter()
    masks = _closed_masks(g)
    full = (1 << g.n) - 1
    found = []
    for bits in range(1 << g.n):
        acc = 0
        rest = bits
        while rest:
            v = (rest & -rest).bit_length() - 1
            rest &= rest - 1
            m = masks[v]
            if acc & m:
                break
            acc |= m
        else:
            if acc == full:
                found.append(frozenset(_bits_to_ids(bits)))
    solutions = _sorted_solutions(found)
    return OracleReport(bool(solutions), solutions, 1 << g.n,
                        time.perf_counter() - start)


def _bits_to_ids(bits: int) -> list[int]:
    ids = []
    while bits:
        ids.append((bits & -bits).bit_length() - 1)
        bits &= bits - 1
    return ids
