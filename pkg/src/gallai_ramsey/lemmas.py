"""Constructive 9-cycle oracles for two small structural lemmas.

Both functions either return an explicit monochromatic C9 built from the
fixed vertex patterns below, or a small certificate explaining why that
pattern is unavailable.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .detect import MONO, CycleWitness
from .graph import ColoredCompleteGraph


class JoinPreconditionError(ValueError):
    """A required monochromatic join is broken; ``pair`` is one offending edge."""

    def __init__(self, message: str, pair: tuple[int, int] | None = None):
        self.pair = pair
        super().__init__(message if pair is None else f"{message} at pair {pair}")


def _check_join(g: ColoredCompleteGraph, A, B, color: int, what: str):
    for a in A:
        for b in B:
            if g.color(a, b) != color:
                raise JoinPreconditionError(f"{what} is not complete in color {color}", (a, b))


def _vertex_set(g, vs, name) -> list[int]:
    out = list(dict.fromkeys(int(v) for v in vs))
    if len(out) != len(list(vs)):
        raise ValueError(f"{name} contains repeated vertices")
    for v in out:
        if not 0 <= v < g.n:
            raise ValueError(f"{name}: vertex {v} out of range")
    return out


@dataclass
class CoverSet:
    """Vertices of H whose removal leaves no edge of ``color`` inside H."""

    vertices: tuple[int, ...]
    color: int
    matching: tuple[tuple[int, int], ...] = ()


def _three_disjoint_edges(edges: list[tuple[int, int]]):
    """Three pairwise vertex-disjoint edges, by bounded-depth search."""
    m = len(edges)
    for a in range(m):
        e1 = edges[a]
        for b in range(a + 1, m):
            e2 = edges[b]
            if set(e1) & set(e2):
                continue
            used = set(e1) | set(e2)
            for c in range(b + 1, m):
                if not used & set(edges[c]):
                    return e1, e2, edges[c]
    return None


def three_vertex_claim(g: ColoredCompleteGraph, H, triple, color: int):
    """Mono C9 through ``triple`` and three disjoint H-edges, or a cover of size <= 4.

    Every edge between ``triple`` and ``H`` must have ``color``.
    """
    H = _vertex_set(g, H, "H")
    triple = _vertex_set(g, triple, "triple")
    if len(triple) != 3:
        raise ValueError("triple must contain exactly three vertices")
    if set(triple) & set(H):
        raise ValueError("triple must be disjoint from H")
    if not 1 <= color <= g.k:
        raise ValueError(f"color {color} outside palette")
    _check_join(g, triple, H, color, "triple-to-H join")

    Hs = sorted(H)
    edges = [(a, b) for i, a in enumerate(Hs) for b in Hs[i + 1:] if g.color(a, b) == color]
    three = _three_disjoint_edges(edges)
    if three is not None:
        u, v, w = triple
        (u1, v1), (u2, v2), (u3, v3) = three
        return CycleWitness(MONO, (u, u1, v1, v, u2, v2, w, u3, v3), color)
    # matching number <= 2, so any maximal matching has <= 2 edges
    matched: set[int] = set()
    matching = []
    for a, b in edges:
        if a not in matched and b not in matched:
            matching.append((a, b))
            matched |= {a, b}
    return CoverSet(tuple(sorted(matched)), color, tuple(matching))


@dataclass(frozen=True)
class JoinScenario:
    base: ColoredCompleteGraph
    Y: tuple[int, ...]
    Z: tuple[int, ...]
    color: int
    x: int | None = None


@dataclass
class AbsenceReport:
    """No 9-cycle pattern applies; ``reasons`` says which hypotheses failed."""

    color: int
    reasons: list[str] = field(default_factory=list)


def join_lemma(s: JoinScenario):
    """Mono C9 from a complete bipartite join plus an apex or a Z-edge.

    With an external vertex ``x`` complete to Y and Z in the join color the
    cycle is y1 x z1 y2 z2 y3 z3 y4 z4; otherwise, when |Z| >= 5 and Z has
    an internal edge z1z2 of that color, it is y1 z1 z2 y2 z3 y3 z4 y4 z5.
    """
    g, color = s.base, s.color
    Y = _vertex_set(g, s.Y, "Y")
    Z = _vertex_set(g, s.Z, "Z")
    if set(Y) & set(Z):
        raise ValueError("Y and Z must be disjoint")
    if len(Y) < 4 or len(Z) < 4:
        raise ValueError("need |Y| >= 4 and |Z| >= 4")
    if not 1 <= color <= g.k:
        raise ValueError(f"color {color} outside palette")
    _check_join(g, Y, Z, color, "Y-Z join")
    if s.x is not None:
        x = int(s.x)
        if x in Y or x in Z or not 0 <= x < g.n:
            raise ValueError("x must be a vertex outside Y and Z")
        _check_join(g, [x], Y + Z, color, "x-to-(Y u Z) join")
        y1, y2, y3, y4 = Y[:4]
        z1, z2, z3, z4 = Z[:4]
        return CycleWitness(MONO, (y1, x, z1, y2, z2, y3, z3, y4, z4), color)

    reasons = ["no external vertex complete to Y and Z"]
    # the statement is symmetric in Y and Z, so try the pattern both ways round
    for big, small, name in ((Z, Y, "Z"), (Y, Z, "Y")):
        inner = _inner_edge(g, big, color)
        if inner is not None and len(big) >= 5:
            b1, b2 = inner
            b3, b4, b5 = [b for b in big if b not in inner][:3]
            s1, s2, s3, s4 = small[:4]
            return CycleWitness(MONO, (s1, b1, b2, s2, b3, s3, b4, s4, b5), color)
        if inner is None:
            reasons.append(f"{name} has no internal edge in the join color")
        else:
            reasons.append(f"{name} has an internal edge in the join color but |{name}| < 5")
    if _inner_edge(g, Y, color) is None and _inner_edge(g, Z, color) is None:
        reasons.append("join color restricted to Y u Z is bipartite")
    else:
        reasons.append("a 9-cycle would need 5 vertices on the side with internal edges")
    return AbsenceReport(color, reasons)


def _inner_edge(g, vs, color):
    return next(((a, b) for i, a in enumerate(vs) for b in vs[i + 1:] if g.color(a, b) == color), None)
