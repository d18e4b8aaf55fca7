"""Gallai partitions, reduced graphs, and blow-up (substitution) of colorings."""
from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components

from . import graph as gmod
from .detect import CycleWitness, find_rainbow_triangle
from .graph import ColoredCompleteGraph, colors_used

FALLBACK_MAX_N = 12


class RainbowTriangleError(ValueError):
    def __init__(self, witness: CycleWitness):
        self.witness = witness
        super().__init__(f"coloring contains a rainbow triangle at {list(witness.vertices)}")


class PartitionNotFound(RuntimeError):
    pass


class MalformedPartition(ValueError):
    def __init__(self, message, vertex=None):
        self.vertex = vertex
        super().__init__(message)


@dataclass(frozen=True)
class GallaiPartition:
    parts: tuple[tuple[int, ...], ...]
    reduced: ColoredCompleteGraph

    @property
    def p(self) -> int:
        return len(self.parts)

    def reduced_color(self, i: int, j: int) -> int:
        return self.reduced.color(i, j)

    def to_dict(self) -> dict:
        return {"parts": [list(p) for p in self.parts], "reduced": gmod.dumps(self.reduced)}

    @classmethod
    def from_dict(cls, d: dict) -> "GallaiPartition":
        return cls(tuple(tuple(p) for p in d["parts"]), gmod.loads(d["reduced"]))


@dataclass
class ValidationReport:
    valid: bool
    problems: list[str] = field(default_factory=list)
    violating_vertices: tuple[int, int] | None = None
    violating_parts: tuple[int, int] | None = None


# ------------------------------------------------------------- extraction

def _labels_to_partition(g: ColoredCompleteGraph, labels: np.ndarray) -> GallaiPartition:
    _, first = np.unique(labels, return_index=True)
    order = np.argsort(first)  # parts ordered by their smallest vertex
    roots = np.unique(labels)[order]
    parts = tuple(tuple(np.flatnonzero(labels == r).tolist()) for r in roots)
    reps = [p[0] for p in parts]
    red = g.matrix[np.ix_(reps, reps)].copy()
    return GallaiPartition(parts, ColoredCompleteGraph(len(parts), g.k, red))


def _merge_fixpoint(m: np.ndarray, labels: np.ndarray) -> np.ndarray:
    """Merge parts joined by more than one color until every join is monochromatic."""
    n = m.shape[0]
    iu, ju = np.triu_indices(n, 1)
    cols = m[iu, ju].astype(np.int64)
    labels = labels.copy()
    while True:
        _, lab = np.unique(labels, return_inverse=True)
        p = lab.max() + 1
        if p == 1:
            return lab
        a, b = lab[iu], lab[ju]
        cross = a != b
        lo = np.minimum(a[cross], b[cross])
        hi = np.maximum(a[cross], b[cross])
        key = lo * p + hi
        cmin = np.full(p * p, 256, dtype=np.int64)
        cmax = np.zeros(p * p, dtype=np.int64)
        np.minimum.at(cmin, key, cols[cross])
        np.maximum.at(cmax, key, cols[cross])
        bad = np.flatnonzero((cmax > 0) & (cmin != cmax))
        if bad.size == 0:
            return lab
        # union-find over parts for all violating pairs at once
        parent = list(range(p))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for kk in bad.tolist():
            ra, rb = find(kk // p), find(kk % p)
            if ra != rb:
                parent[max(ra, rb)] = min(ra, rb)
        labels = np.array([find(x) for x in lab])


def candidate_color_sets(used: list[int]) -> list[tuple[int, ...]]:
    """Singletons first, then pairs, each group in lexicographic order."""
    return [(a,) for a in used] + list(itertools.combinations(used, 2))


def find_gallai_partition(g: ColoredCompleteGraph, *, allow_fallback: bool = True) -> GallaiPartition:
    """Return some Gallai partition of a rainbow-triangle-free coloring."""
    if g.n < 2:
        raise ValueError("a Gallai partition needs at least two vertices")
    used = sorted(colors_used(g))
    if len(used) <= 2:
        return _labels_to_partition(g, np.arange(g.n))
    m = g.matrix
    for cset in candidate_color_sets(used):
        other = ~np.isin(m, cset)
        np.fill_diagonal(other, False)
        _, labels = connected_components(csr_matrix(other), directed=False)
        labels = _merge_fixpoint(m, labels)
        if labels.max() > 0:
            return _labels_to_partition(g, labels)
    witness = find_rainbow_triangle(g)
    if witness is not None:
        raise RainbowTriangleError(witness)
    if allow_fallback and g.n <= FALLBACK_MAX_N:
        found = exhaustive_partition_search(g)
        if found is not None:
            return found
    raise PartitionNotFound(
        f"no Gallai partition found for a rainbow-free coloring on {g.n} vertices; "
        "this contradicts Gallai's theorem and indicates a bug")


def _set_partitions(n: int):
    """All set partitions of range(n) as label lists (restricted growth strings)."""
    labels = [0] * n

    def rec(i, top):
        if i == n:
            yield list(labels)
            return
        for c in range(top + 2):
            labels[i] = c
            yield from rec(i + 1, max(top, c))

    if n:
        yield from rec(1, 0)


def exhaustive_partition_search(g: ColoredCompleteGraph) -> GallaiPartition | None:
    """Brute-force search over all set partitions with at least two parts."""
    for labels in _set_partitions(g.n):
        if max(labels) == 0:
            continue
        P = _labels_to_partition(g, np.array(labels))
        if validate_partition(g, P).valid:
            return P
    return None


# ------------------------------------------------------------- validation

def _check_cover(g: ColoredCompleteGraph, P: GallaiPartition):
    seen = {}
    for idx, part in enumerate(P.parts):
        if not part:
            raise MalformedPartition(f"part {idx} is empty")
        for v in part:
            if not 0 <= v < g.n:
                raise MalformedPartition(f"vertex {v} out of range", v)
            if v in seen:
                raise MalformedPartition(f"vertex {v} appears in parts {seen[v]} and {idx}", v)
            seen[v] = idx
    for v in range(g.n):
        if v not in seen:
            raise MalformedPartition(f"vertex {v} is not covered by any part", v)


def validate_partition(g: ColoredCompleteGraph, P: GallaiPartition) -> ValidationReport:
    _check_cover(g, P)
    rep = ValidationReport(True)
    if P.p < 2:
        rep.valid = False
        rep.problems.append("a Gallai partition needs at least two parts")
    if P.reduced.n != P.p:
        rep.valid = False
        rep.problems.append(f"reduced graph has {P.reduced.n} vertices for {P.p} parts")
        return rep
    m = g.matrix
    lab = np.empty(g.n, dtype=np.intp)
    for idx, part in enumerate(P.parts):
        lab[list(part)] = idx
    claimed = P.reduced.matrix[np.ix_(lab, lab)]
    wrong = np.triu((lab[:, None] != lab[None, :]) & (m != claimed), 1)
    if wrong.any():
        hits = np.argwhere(wrong)
        u, w = (int(t) for t in hits[0])
        rep.valid = False
        rep.violating_vertices = (u, w)
        rep.violating_parts = tuple(sorted((int(lab[u]), int(lab[w]))))
        i, j = rep.violating_parts
        rep.problems.append(f"parts {i},{j}: edge ({u},{w}) has color {int(m[u, w])}, "
                            f"reduced graph says {P.reduced.color(i, j)}"
                            + (f" ({len(hits) - 1} more cross edges disagree)" if len(hits) > 1 else ""))
    cross = colors_used(P.reduced)
    if len(cross) > 2:
        rep.valid = False
        rep.problems.append(f"{len(cross)} colors between parts: {sorted(cross)}")
    return rep


def reduced_graph(g: ColoredCompleteGraph, P: GallaiPartition) -> ColoredCompleteGraph:
    rep = validate_partition(g, P)
    if not rep.valid:
        raise ValueError("invalid partition: " + "; ".join(rep.problems))
    return ColoredCompleteGraph(P.p, g.k, P.reduced.matrix.copy())


# ------------------------------------------------------------ substitution

@dataclass(frozen=True)
class Leaf:
    graph: ColoredCompleteGraph

    @property
    def size(self) -> int:
        return self.graph.n


@dataclass(frozen=True)
class Join:
    """Blow-up node: vertex ``i`` of ``reduced`` is replaced by ``children[i]``."""

    reduced: ColoredCompleteGraph
    children: tuple

    @property
    def size(self) -> int:
        return sum(c.size for c in self.children)


ConstructionRecipe = Leaf | Join


def recipe_to_dict(r) -> dict:
    if isinstance(r, Leaf):
        return {"leaf": gmod.dumps(r.graph)}
    return {"reduced": gmod.dumps(r.reduced), "children": [recipe_to_dict(c) for c in r.children]}


def recipe_from_dict(d: dict):
    if "leaf" in d:
        return Leaf(gmod.loads(d["leaf"]))
    if "reduced" not in d or "children" not in d:
        raise ValueError("recipe node needs 'leaf' or 'reduced'+'children'")
    return Join(gmod.loads(d["reduced"]), tuple(recipe_from_dict(c) for c in d["children"]))


def recipe_dumps(r) -> str:
    return json.dumps(recipe_to_dict(r))


def recipe_loads(text: str):
    return recipe_from_dict(json.loads(text))


def _palette(r) -> int:
    if isinstance(r, Leaf):
        return r.graph.k
    return max([r.reduced.k] + [_palette(c) for c in r.children])


def _check_recipe(r, depth=0):
    if depth > 10_000:
        raise ValueError("recipe nesting too deep")
    if isinstance(r, Leaf):
        w = find_rainbow_triangle(r.graph)
        if w is not None:
            raise RainbowTriangleError(w)
        return
    if not isinstance(r, Join):
        raise ValueError(f"malformed recipe node {r!r}")
    if len(r.children) != r.reduced.n:
        raise ValueError(f"reduced graph on {r.reduced.n} vertices has {len(r.children)} children")
    used = colors_used(r.reduced)
    if len(used) > 2:
        raise ValueError(f"reduced coloring uses {len(used)} colors {sorted(used)}; at most 2 allowed")
    for c in r.children:
        _check_recipe(c, depth + 1)


def _fill(r, m: np.ndarray, offset: int) -> int:
    if isinstance(r, Leaf):
        n = r.graph.n
        m[offset:offset + n, offset:offset + n] = r.graph.matrix
        return n
    starts = []
    pos = offset
    for c in r.children:
        starts.append(pos)
        pos += _fill(c, m, pos)
    ends = starts[1:] + [pos]
    for i in range(len(starts)):
        for j in range(i + 1, len(starts)):
            col = r.reduced.color(i, j)
            m[starts[i]:ends[i], starts[j]:ends[j]] = col
            m[starts[j]:ends[j], starts[i]:ends[i]] = col
    return pos - offset


def substitute(recipe) -> ColoredCompleteGraph:
    """Expand a recipe tree into one coloring; leaves are laid out left to right."""
    _check_recipe(recipe)
    n = recipe.size
    m = np.zeros((n, n), dtype=np.uint8)
    _fill(recipe, m, 0)
    return ColoredCompleteGraph(n, _palette(recipe), m)


def recipe_from_partition(g: ColoredCompleteGraph, P: GallaiPartition):
    """One-level recipe whose leaves are the parts of ``P``.

    Substituting it reproduces ``g`` exactly when the parts are consecutive
    blocks ``0..a-1, a..b-1, ...``; otherwise it reproduces ``g`` relabelled.
    """
    leaves = tuple(Leaf(gmod.induced_subgraph(g, part)) for part in P.parts)
    return Join(reduced_graph(g, P), leaves)
