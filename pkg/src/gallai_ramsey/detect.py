"""Rainbow triangles, monochromatic cycles of a fixed length, and bad-coloring verdicts."""
from __future__ import annotations

import os
import time
from dataclasses import dataclass, field

import numpy as np

from .graph import ColoredCompleteGraph

DEFAULT_NODE_BUDGET = 10**8

RAINBOW = "rainbow-triangle"
MONO = "mono-cycle"


def default_node_budget() -> int:
    env = os.environ.get("GR_NODE_BUDGET")
    return int(env) if env else DEFAULT_NODE_BUDGET


class NodeBudgetExceeded(RuntimeError):
    """A cycle search ran out of node budget before reaching a conclusion."""

    def __init__(self, color, length, nodes):
        self.color, self.length, self.nodes = color, length, nodes
        super().__init__(f"node budget exhausted after {nodes} extensions "
                         f"(color {color}, length {length})")


@dataclass(frozen=True)
class CycleWitness:
    kind: str
    vertices: tuple[int, ...]
    color: int | None = None

    def to_dict(self) -> dict:
        return {"kind": self.kind, "color": self.color, "vertices": list(self.vertices)}

    @classmethod
    def from_dict(cls, d: dict) -> "CycleWitness":
        return cls(d["kind"], tuple(d["vertices"]), d.get("color"))


def validate_witness(g: ColoredCompleteGraph, w: CycleWitness,
                     length: int | None = None) -> bool:
    """Re-read colors from ``g`` and confirm that ``w`` is what it claims."""
    vs = list(w.vertices)
    if any(not 0 <= v < g.n for v in vs) or len(set(vs)) != len(vs):
        return False
    m = g.matrix
    if w.kind == RAINBOW:
        if len(vs) != 3:
            return False
        a, b, c = vs
        return len({int(m[a, b]), int(m[a, c]), int(m[b, c])}) == 3
    if w.kind == MONO:
        if len(vs) < 3 or (length is not None and len(vs) != length):
            return False
        return all(int(m[vs[i], vs[(i + 1) % len(vs)]]) == w.color for i in range(len(vs)))
    return False


def find_rainbow_triangle(g: ColoredCompleteGraph) -> CycleWitness | None:
    """Lexicographically first rainbow triple, or None after a full scan."""
    m = g.matrix
    n = g.n
    for i in range(n - 2):
        sub = m[i + 1:, i + 1:]
        row = m[i, i + 1:]
        # pairs (j, l) with j < l among vertices > i
        hit = (row[:, None] != row[None, :]) & (row[:, None] != sub) & (row[None, :] != sub)
        hit = np.triu(hit, 1)
        if hit.any():
            j, l = np.argwhere(hit)[0]
            return CycleWitness(RAINBOW, (i, i + 1 + int(j), i + 1 + int(l)))
    return None


# ------------------------------------------------------------ cycle search

def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _component(adj, start: int, allowed: int) -> int:
    comp = frontier = 1 << start
    while frontier:
        nxt = 0
        for u in _bits(frontier):
            nxt |= adj[u]
        frontier = nxt & allowed & ~comp
        comp |= frontier
    return comp


def _components(adj, alive: int) -> list[int]:
    out = []
    rest = alive
    while rest:
        v = (rest & -rest).bit_length() - 1
        comp = _component(adj, v, alive)
        out.append(comp)
        rest &= ~comp
    return out


def _is_bipartite(adj, mask: int) -> bool:
    """Breadth-first 2-coloring of the subgraph induced by ``mask``."""
    rest = mask
    while rest:
        v = (rest & -rest).bit_length() - 1
        side = {v: 0}
        queue = [v]
        for u in queue:
            for w in _bits(adj[u] & mask):
                if w not in side:
                    side[w] = side[u] ^ 1
                    queue.append(w)
                elif side[w] == side[u]:
                    return False
        for u in side:
            rest &= ~(1 << u)
    return True


class _Budget(Exception):
    pass


@dataclass
class CycleQuery:
    """Outcome of one (color, length) search: ``status`` is found/none/inconclusive."""

    status: str
    witness: CycleWitness | None = None
    nodes: int = 0
    fast_path: str | None = None


def _anchored_search(adj, L: int, alive: int, budget: int, counter: list) -> list[int] | None:
    """Simple cycle of exactly L vertices whose smallest vertex is the anchor.

    For each anchor ``v`` (ascending) only vertices ``>= v`` are used.  A
    path ending at ``u`` with ``r`` closing steps left survives only if a
    walk of exactly ``r`` edges from ``u`` back to ``v`` exists, which also
    kills every odd-length attempt in a bipartite class.
    """
    for v in _bits(alive):
        allowed = alive & ~((1 << v) - 1)
        comp = _component(adj, v, allowed)
        if comp.bit_count() < L:
            continue
        # walks[t]: vertices with a walk of exactly t edges to v inside comp
        walks = [1 << v]
        for _ in range(L):
            prev = walks[-1]
            nxt = 0
            for u in _bits(prev):
                nxt |= adj[u]
            walks.append(nxt & comp)
        path = [v]

        def extend(u: int, visited: int) -> bool:
            d = len(path) - 1
            if d == L - 1:
                return bool(adj[u] >> v & 1) and u > path[1]
            need = L - 1 - d  # vertices still to add
            if (comp & ~visited).bit_count() < need:
                return False
            cand = adj[u] & comp & ~visited & walks[L - d - 1]
            for w in _bits(cand):
                counter[0] += 1
                if counter[0] > budget:
                    raise _Budget
                path.append(w)
                if extend(w, visited | (1 << w)):
                    return True
                path.pop()
            return False

        if walks[L] >> v & 1 and extend(v, 1 << v):
            return list(path)
    return None


def search_mono_cycle(g: ColoredCompleteGraph, color: int, length: int, *,
                      node_budget: int | None = None, fast_paths: bool = True) -> CycleQuery:
    if not 1 <= color <= g.k:
        raise ValueError(f"color {color} outside palette 1..{g.k}")
    if length < 3:
        raise ValueError("cycle length must be at least 3")
    if length > g.n:
        return CycleQuery("none", fast_path="too-few-vertices")
    budget = default_node_budget() if node_budget is None else node_budget
    adj = g.adjacency(color)
    alive = 0
    for v in range(g.n):
        if adj[v]:
            alive |= 1 << v

    if fast_paths:
        comps = _components(adj, alive)
        big = [c for c in comps if c.bit_count() >= length]
        if not big:
            return CycleQuery("none", fast_path="small-components")
        alive = 0
        for c in big:
            alive |= c
        if length % 2 and _is_bipartite(adj, alive):
            return CycleQuery("none", fast_path="bipartite")
        for c in big:
            if all((adj[u] | (1 << u)) & c == c for u in _bits(c)):
                vs = list(_bits(c))[:length]
                return CycleQuery("found", CycleWitness(MONO, tuple(vs), color), fast_path="clique")

    counter = [0]
    try:
        cyc = _anchored_search(adj, length, alive, budget, counter)
    except _Budget:
        return CycleQuery("inconclusive", nodes=counter[0])
    if cyc is None:
        return CycleQuery("none", nodes=counter[0])
    return CycleQuery("found", CycleWitness(MONO, tuple(cyc), color), nodes=counter[0])


def find_mono_cycle(g: ColoredCompleteGraph, color: int, length: int, *,
                    node_budget: int | None = None, fast_paths: bool = True) -> CycleWitness | None:
    """Exact search for a monochromatic cycle on exactly ``length`` vertices.

    Returns None only when no such cycle exists.  Raises
    :class:`NodeBudgetExceeded` if the search gives up first.
    """
    q = search_mono_cycle(g, color, length, node_budget=node_budget, fast_paths=fast_paths)
    if q.status == "inconclusive":
        raise NodeBudgetExceeded(color, length, q.nodes)
    return q.witness


# ---------------------------------------------------------------- verdicts

@dataclass
class Verdict:
    verdict: str
    witnesses: list[CycleWitness] = field(default_factory=list)
    nodes: int = 0
    millis: float = 0.0
    inconclusive_colors: list[int] = field(default_factory=list)

    @property
    def is_bad(self) -> bool:
        return self.verdict == "bad"

    def to_dict(self) -> dict:
        return {
            "verdict": self.verdict,
            "witnesses": [w.to_dict() for w in self.witnesses],
            "stats": {"nodes": self.nodes, "millis": round(self.millis, 3)},
        }


def is_bad(g: ColoredCompleteGraph, length: int, *, node_budget: int | None = None,
           fast_paths: bool = True, stop_at_first: bool = True) -> Verdict:
    """Decide whether ``g`` has neither a rainbow triangle nor a monochromatic C_length.

    Any witness makes the verdict ``not-bad`` even if another color's search
    was inconclusive; ``inconclusive`` is reported only without witnesses.
    """
    t0 = time.perf_counter()
    witnesses = []
    nodes = 0
    undecided = []
    rb = find_rainbow_triangle(g)
    if rb is not None:
        witnesses.append(rb)
    if not (witnesses and stop_at_first):
        for c in range(1, g.k + 1):
            q = search_mono_cycle(g, c, length, node_budget=node_budget, fast_paths=fast_paths)
            nodes += q.nodes
            if q.status == "found":
                witnesses.append(q.witness)
                if stop_at_first:
                    break
            elif q.status == "inconclusive":
                undecided.append(c)
    if witnesses:
        verdict = "not-bad"
    elif undecided:
        verdict = "inconclusive"
    else:
        verdict = "bad"
    return Verdict(verdict, witnesses, nodes, (time.perf_counter() - t0) * 1000, undecided)
