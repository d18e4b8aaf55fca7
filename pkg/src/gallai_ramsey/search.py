"""Exact searches for bad colorings of K_n.

Two engines live here.

``_EdgeSearch`` colors edges one at a time in colex order ``(0,1), (0,2),
(1,2), (0,3), ...`` so that each new vertex is finished before the next one
starts.  A color may be used only if every smaller color already appears
(palette symmetry; for two colors this is exactly ``c(0,1) = 1``).  Each
new edge is rejected if it closes a monochromatic C_L or, in Gallai mode, a
rainbow triangle.

``_TriangleGallai`` handles L = 3 by enumerating Gallai structure instead:
a 2-colored reduced graph on p >= 2 parts, a nonincreasing composition of
n into p parts, and a coloring of each part.  Feasibility of a part is
memoised on ``(part size, number of usable colors)``.

Exchangeability audit for that memo (L = 3 only).  Take a part A with
|A| >= 2 whose vertex in the reduced graph sees join colors J.  An edge
inside A with a color in J, together with any vertex of a part joined to A
in that color, is a monochromatic triangle, so A may only use colors
outside J.  Conversely, triangles of the blow-up are of three kinds: inside
one part, across three parts (a triangle of the reduced graph), or two
vertices in A plus one in B, whose A-edge then avoids the A-B join color.
So the blow-up is bad iff the reduced graph is bad and every part is a bad
coloring over the colors outside its J.  A blow-up of a rainbow-free
coloring by a <= 2 colored reduced graph is rainbow-free.  Which colors
lie outside J is irrelevant up to renaming, hence the key.  The two
reduced colors are named 1 and 2 without loss of generality because the
whole palette is symmetric at every level of the recursion.  Part
colorings may still reuse join colors of *other* parts freely; nothing is
pruned beyond the triangle argument above.  For L >= 4 a cycle can thread
through several parts, the argument fails, and the edge engine is used.
"""
from __future__ import annotations

import itertools
import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from . import graph as gmod
from .detect import is_bad
from .graph import ColoredCompleteGraph

log = logging.getLogger(__name__)

DEFAULT_TIME_LIMIT = 30 * 60.0

WITNESS, EXHAUSTED, TIMEOUT = "witness", "exhausted", "timeout"


@dataclass
class SearchOutcome:
    status: str
    n: int
    k: int
    length: int
    mode: str
    witness: ColoredCompleteGraph | None = None
    nodes: int = 0
    seconds: float = 0.0
    rules: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        d = {
            "status": self.status,
            "mode": self.mode,
            "n": self.n,
            "colors": self.k,
            "cycle": self.length,
            "stats": {"nodes": self.nodes, "millis": round(self.seconds * 1000, 3),
                      "symmetry_rules": list(self.rules)},
        }
        if self.witness is not None:
            d["witness"] = gmod.dumps(self.witness)
        return d


class _Timeout(Exception):
    pass


def _bits(mask):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _closes_cycle(adj, u: int, w: int, steps: int) -> bool:
    """Is there a simple u-w path with exactly ``steps`` edges in ``adj``?"""
    walks = [1 << w]
    for _ in range(steps):
        acc = 0
        for x in _bits(walks[-1]):
            acc |= adj[x]
        walks.append(acc)
    if not walks[steps] >> u & 1:
        return False
    wbit = 1 << w

    def rec(x, visited, left):
        if left == 1:
            return bool(adj[x] & wbit)
        for y in _bits(adj[x] & ~visited & walks[left - 1]):
            if rec(y, visited | (1 << y), left - 1):
                return True
        return False

    return rec(u, (1 << u) | wbit, steps)


class _EdgeSearch:
    def __init__(self, n: int, k: int, length: int, *, rainbow_free: bool,
                 deadline: float | None = None, collect: bool = False):
        self.n, self.k, self.L = n, k, length
        self.rainbow_free = rainbow_free
        self.deadline = deadline
        self.collect = collect
        self.edges = [(i, j) for j in range(1, n) for i in range(j)]
        self.adj = [[0] * n for _ in range(k + 1)]
        self.col = [[0] * n for _ in range(n)]
        self.nodes = 0
        self.found: list[np.ndarray] = []
        self.stop_at: int | None = None
        self.prefixes: list[tuple[int, ...]] = []

    def _ok(self, i: int, j: int, c: int) -> bool:
        col = self.col
        if self.rainbow_free:
            ci, cj = col[i], col[j]
            for x in range(i):
                a, b = ci[x], cj[x]
                if a != b and a != c and b != c:
                    return False
        if self.L <= j + 1 and _closes_cycle(self.adj[c], i, j, self.L - 1):
            return False
        return True

    def _set(self, i, j, c):
        self.col[i][j] = self.col[j][i] = c
        a = self.adj[c]
        a[i] |= 1 << j
        a[j] |= 1 << i

    def _unset(self, i, j, c):
        self.col[i][j] = self.col[j][i] = 0
        a = self.adj[c]
        a[i] &= ~(1 << j)
        a[j] &= ~(1 << i)

    def _matrix(self) -> np.ndarray:
        return np.array(self.col, dtype=np.uint8)

    def _rec(self, t: int, maxused: int) -> bool:
        if t == self.stop_at:
            self.prefixes.append(tuple(self.col[i][j] for i, j in self.edges[:t]))
            return False
        if t == len(self.edges):
            self.found.append(self._matrix())
            return not self.collect
        i, j = self.edges[t]
        for c in range(1, min(self.k, maxused + 1) + 1):
            self.nodes += 1
            if self.deadline is not None and not self.nodes & 0xFFF and time.monotonic() > self.deadline:
                raise _Timeout
            if not self._ok(i, j, c):
                continue
            self._set(i, j, c)
            if self._rec(t + 1, max(maxused, c)):
                return True
            self._unset(i, j, c)
        return False

    def run(self, prefix: tuple[int, ...] = ()) -> bool:
        """Search below ``prefix``; True if a solution was found (and kept)."""
        maxused = 0
        for t, c in enumerate(prefix):
            i, j = self.edges[t]
            if c > maxused + 1 or not self._ok(i, j, c):
                return False
            self._set(i, j, c)
            maxused = max(maxused, c)
        return self._rec(len(prefix), maxused)

    def split(self, depth: int) -> list[tuple[int, ...]]:
        self.stop_at = min(depth, len(self.edges))
        self._rec(0, 0)
        self.stop_at = None
        return self.prefixes


def _run_prefix(args):
    n, k, length, rainbow_free, deadline, prefix = args
    s = _EdgeSearch(n, k, length, rainbow_free=rainbow_free, deadline=deadline)
    try:
        hit = s.run(prefix)
    except _Timeout:
        return TIMEOUT, None, s.nodes
    return (WITNESS if hit else EXHAUSTED), (s.found[0] if hit else None), s.nodes


def _edge_search(n, k, length, *, rainbow_free, time_limit, workers):
    deadline = time.monotonic() + time_limit if time_limit else None
    if workers <= 1:
        status, mat, nodes = _run_prefix((n, k, length, rainbow_free, deadline, ()))
        return status, mat, nodes
    # split at a depth giving several prefixes per worker
    depth, prefixes, base_nodes = 1, [()], 0
    while len(prefixes) < 4 * workers and depth <= len(_EdgeSearch(n, k, length, rainbow_free=False).edges):
        s = _EdgeSearch(n, k, length, rainbow_free=rainbow_free)
        prefixes = s.split(depth)
        base_nodes = s.nodes
        depth += 1
    if not prefixes:
        return EXHAUSTED, None, base_nodes
    jobs = [(n, k, length, rainbow_free, deadline, p) for p in prefixes]
    status, mat, nodes = EXHAUSTED, None, base_nodes
    with ProcessPoolExecutor(max_workers=workers) as pool:
        for st, m, nd in pool.map(_run_prefix, jobs):
            nodes += nd
            if st == WITNESS and mat is None:
                status, mat = WITNESS, m
            elif st == TIMEOUT and status == EXHAUSTED:
                status = TIMEOUT
    return status, mat, nodes


def _finish(status, mat, nodes, t0, n, k, length, mode, rules) -> SearchOutcome:
    witness = None
    if status == WITNESS:
        witness = ColoredCompleteGraph(n, k, mat)
        verdict = is_bad(witness, length)
        if not verdict.is_bad:
            raise AssertionError(f"search produced a coloring that is {verdict.verdict}")
    return SearchOutcome(status, n, k, length, mode, witness, nodes,
                         time.perf_counter() - t0, rules)


def search_bad_two_coloring(n: int, length: int, *, time_limit: float | None = DEFAULT_TIME_LIMIT,
                            workers: int = 1) -> SearchOutcome:
    """Find a 2-coloring of K_n without a monochromatic C_length, or exhaust."""
    if n < 3 or length < 3:
        raise ValueError("need n >= 3 and cycle length >= 3")
    t0 = time.perf_counter()
    status, mat, nodes = _edge_search(n, 2, length, rainbow_free=False,
                                      time_limit=time_limit, workers=workers)
    rules = ["colex-edge-order", "first-edge-color-1", "incremental-cycle-through-new-edge"]
    return _finish(status, mat, nodes, t0, n, 2, length, "two-color", rules)


# ----------------------------------------------------- structural, L = 3

def _nonincreasing_compositions(n: int, p: int, cap: int | None = None):
    cap = n if cap is None else cap
    if p == 1:
        if 1 <= n <= cap:
            yield (n,)
        return
    for first in range(min(cap, n - (p - 1)), 0, -1):
        if first * p < n:
            break
        for rest in _nonincreasing_compositions(n - first, p - 1, first):
            yield (first,) + rest


def _reduced_graphs(p: int) -> list[np.ndarray]:
    """All 2-colorings of K_p (colors 1, 2) without a monochromatic triangle, c(0,1) = 1."""
    if p == 2:
        return [np.array([[0, 1], [1, 0]], dtype=np.uint8)]
    s = _EdgeSearch(p, 2, 3, rainbow_free=False, collect=True)
    s.run()
    return s.found


class _TriangleGallai:
    def __init__(self, deadline: float | None):
        self.memo: dict[tuple[int, int], np.ndarray | None] = {}
        self.reduced: dict[int, list[np.ndarray]] = {}
        self.deadline = deadline
        self.nodes = 0

    def reduced_for(self, p):
        if p not in self.reduced:
            self.reduced[p] = _reduced_graphs(p)
        return self.reduced[p]

    def solve(self, s: int, a: int) -> np.ndarray | None:
        """Bad coloring of K_s with colors 1..a (no rainbow or mono triangle)."""
        key = (s, a)
        if key not in self.memo:
            self.memo[key] = self._solve(s, a)
        return self.memo[key]

    def _solve(self, s, a):
        if s == 1:
            return np.zeros((1, 1), dtype=np.uint8)
        if a == 0:
            return None
        if a == 1:
            return np.array([[0, 1], [1, 0]], dtype=np.uint8) if s == 2 else None
        for p in range(2, s + 1):
            reds = self.reduced_for(p)
            if not reds:
                break  # no triangle-free 2-coloring on p vertices, hence none on more
            for red in reds:
                incident = [set(int(c) for c in red[v] if c) for v in range(p)]
                for sizes in _nonincreasing_compositions(s, p):
                    self.nodes += 1
                    if self.deadline is not None and time.monotonic() > self.deadline:
                        raise _Timeout
                    blocks = []
                    for v, size in enumerate(sizes):
                        if size == 1:
                            blocks.append((np.zeros((1, 1), dtype=np.uint8), [0]))
                            continue
                        free = [c for c in range(1, a + 1) if c not in incident[v]]
                        sub = self.solve(size, len(free))
                        if sub is None:
                            break
                        blocks.append((sub, [0] + free))
                    else:
                        return _assemble(red, blocks)
        return None


def _assemble(red: np.ndarray, blocks) -> np.ndarray:
    sizes = [b[0].shape[0] for b in blocks]
    bounds = np.concatenate([[0], np.cumsum(sizes)])
    n = int(bounds[-1])
    out = np.zeros((n, n), dtype=np.uint8)
    p = len(blocks)
    for i in range(p):
        for j in range(i + 1, p):
            out[bounds[i]:bounds[i + 1], bounds[j]:bounds[j + 1]] = red[i, j]
            out[bounds[j]:bounds[j + 1], bounds[i]:bounds[i + 1]] = red[i, j]
    for i, (sub, names) in enumerate(blocks):
        out[bounds[i]:bounds[i + 1], bounds[i]:bounds[i + 1]] = np.array(names, dtype=np.uint8)[sub]
    return out


def search_bad_gallai(n: int, k: int, length: int, *, time_limit: float | None = DEFAULT_TIME_LIMIT,
                      workers: int = 1) -> SearchOutcome:
    """Find a k-coloring of K_n with no rainbow triangle and no monochromatic C_length."""
    if n < 2 or k < 1 or length < 3:
        raise ValueError("need n >= 2, k >= 1 and cycle length >= 3")
    t0 = time.perf_counter()
    deadline = time.monotonic() + time_limit if time_limit else None
    if length == 3:
        solver = _TriangleGallai(deadline)
        try:
            mat = solver.solve(n, k)
            status = WITNESS if mat is not None else EXHAUSTED
        except _Timeout:
            mat, status = None, TIMEOUT
        rules = ["gallai-structure", "reduced-colors-named-1-2", "nonincreasing-part-sizes",
                 "memo(size,usable-colors)"]
        return _finish(status, mat, solver.nodes, t0, n, k, length, "gallai", rules)
    status, mat, nodes = _edge_search(n, k, length, rainbow_free=True,
                                      time_limit=time_limit, workers=workers)
    rules = ["colex-edge-order", "palette-order(new color = smallest unused)",
             "incremental-cycle-through-new-edge", "incremental-rainbow-check"]
    return _finish(status, mat, nodes, t0, n, k, length, "gallai", rules)


# ------------------------------------------------------------ threshold scan

@dataclass
class ThresholdReport:
    mode: str
    k: int
    length: int
    n_lo: int
    n_hi: int
    threshold: int | None
    outcomes: dict[int, SearchOutcome]

    def to_dict(self) -> dict:
        return {
            "mode": self.mode, "colors": self.k, "cycle": self.length,
            "from": self.n_lo, "to": self.n_hi, "threshold": self.threshold,
            "outcomes": {str(n): o.to_dict() for n, o in self.outcomes.items()},
        }


def threshold_scan(k: int, length: int, n_lo: int, n_hi: int, mode: str = "gallai", *,
                   time_limit: float | None = DEFAULT_TIME_LIMIT, workers: int = 1) -> ThresholdReport:
    """Least n in ``[n_lo, n_hi]`` where no bad coloring exists.

    A bad coloring on n vertices restricts to one on n-1, so the scan stops at
    the first exhausted n.  A timeout also stops it, with no threshold.
    """
    if n_lo > n_hi:
        raise ValueError(f"empty range {n_lo}..{n_hi}")
    if mode not in ("two-color", "gallai"):
        raise ValueError(f"unknown mode {mode!r}")
    outcomes = {}
    threshold = None
    for n in range(n_lo, n_hi + 1):
        if mode == "two-color":
            out = search_bad_two_coloring(n, length, time_limit=time_limit, workers=workers)
        else:
            out = search_bad_gallai(n, k, length, time_limit=time_limit, workers=workers)
        log.info("n=%d: %s (%d nodes)", n, out.status, out.nodes)
        outcomes[n] = out
        if out.status == EXHAUSTED:
            threshold = n
            break
        if out.status == TIMEOUT:
            break
    return ThresholdReport(mode, 2 if mode == "two-color" else k, length, n_lo, n_hi,
                           threshold, outcomes)
