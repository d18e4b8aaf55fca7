"""Edge-colored complete graphs and the ``gcol`` text format.

Vertices are ``0..n-1``; colors are ``1..k``.  Color 0 only ever appears on
the diagonal of the dense matrix, where it means "no edge".
"""
from __future__ import annotations

import os
from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable, Iterable, Iterator

import numpy as np

MAX_VERTICES = 1024
GCOL_MAGIC = "gcol"
GCOL_VERSION = 1


class GcolError(ValueError):
    """Malformed gcol input. ``line`` is 1-based, or None if not tied to a line."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        prefix = f"line {line}: " if line is not None else ""
        super().__init__(prefix + message)


@dataclass(frozen=True, eq=False)
class ColoredCompleteGraph:
    """A complete graph on ``n`` vertices with every edge colored in ``1..k``.

    ``matrix`` is a read-only symmetric ``uint8`` array with a zero diagonal.
    Build instances with :meth:`from_matrix` or one of the other
    constructors rather than by hand.
    """

    n: int
    k: int
    matrix: np.ndarray = field(repr=False)

    def __post_init__(self):
        m = self.matrix
        if self.n < 1:
            raise ValueError("need at least one vertex")
        if self.n > MAX_VERTICES:
            raise ValueError(f"n={self.n} exceeds MAX_VERTICES={MAX_VERTICES}")
        if self.k < 1 or self.k > 255:
            raise ValueError(f"palette size must be in 1..255, got {self.k}")
        if m.shape != (self.n, self.n) or m.dtype != np.uint8:
            raise ValueError("matrix must be an n-by-n uint8 array")
        if np.any(np.diagonal(m) != 0):
            raise ValueError("self-pairs must be uncolored (0)")
        if not np.array_equal(m, m.T):
            raise ValueError("color matrix is not symmetric")
        off = m[~np.eye(self.n, dtype=bool)]
        if off.size and (off.min() < 1 or off.max() > self.k):
            raise ValueError(f"edge colors must lie in 1..{self.k}")
        m.setflags(write=False)

    @classmethod
    def from_matrix(cls, matrix, k: int | None = None) -> "ColoredCompleteGraph":
        m = np.array(matrix, dtype=np.uint8, copy=True)
        if k is None:
            k = max(int(m.max()) if m.size else 1, 1)
        return cls(m.shape[0], k, m)

    @classmethod
    def from_function(cls, n: int, k: int,
                      color: Callable[[int, int], int]) -> "ColoredCompleteGraph":
        m = np.zeros((n, n), dtype=np.uint8)
        for i in range(n):
            for j in range(i + 1, n):
                m[i, j] = m[j, i] = color(i, j)
        return cls(n, k, m)

    @classmethod
    def from_edges(cls, n: int, k: int, colors: dict) -> "ColoredCompleteGraph":
        """Build from a mapping ``{(i, j): color}`` that covers every pair."""
        m = np.zeros((n, n), dtype=np.uint8)
        for (i, j), c in colors.items():
            m[i, j] = m[j, i] = c
        return cls(n, k, m)

    @classmethod
    def monochromatic(cls, n: int, color: int = 1, k: int | None = None):
        k = color if k is None else k
        m = np.full((n, n), color, dtype=np.uint8)
        np.fill_diagonal(m, 0)
        return cls(n, k, m)

    def color(self, i: int, j: int) -> int:
        if i == j:
            raise ValueError("self-pairs carry no color")
        return int(self.matrix[i, j])

    def edges(self) -> Iterator[tuple[int, int, int]]:
        n = self.n
        for i in range(n):
            row = self.matrix[i]
            for j in range(i + 1, n):
                yield i, j, int(row[j])

    def color_class(self, color: int) -> "ColorClassView":
        if not 1 <= color <= self.k:
            raise ValueError(f"color {color} outside palette 1..{self.k}")
        return ColorClassView(self, color)

    def adjacency(self, color: int) -> tuple[int, ...]:
        """Per-vertex neighbour bitmasks of one color class (bit j = vertex j)."""
        if not 1 <= color <= self.k:
            raise ValueError(f"color {color} outside palette 1..{self.k}")
        return self._adjacency[color]

    @cached_property
    def _adjacency(self) -> dict[int, tuple[int, ...]]:
        out = {}
        for c in range(1, self.k + 1):
            bits = np.packbits(self.matrix == c, axis=1, bitorder="little")
            out[c] = tuple(int.from_bytes(row.tobytes(), "little") for row in bits)
        return out

    def with_palette(self, k: int) -> "ColoredCompleteGraph":
        return ColoredCompleteGraph(self.n, k, self.matrix.copy())

    def __eq__(self, other):
        if not isinstance(other, ColoredCompleteGraph):
            return NotImplemented
        return (self.n == other.n and self.k == other.k
                and np.array_equal(self.matrix, other.matrix))

    def __hash__(self):
        return hash((self.n, self.k, self.matrix.tobytes()))

    def __repr__(self):
        return f"ColoredCompleteGraph(n={self.n}, k={self.k})"


@dataclass(frozen=True)
class ColorClassView:
    """The spanning subgraph formed by the edges of one color."""

    base: ColoredCompleteGraph
    color: int

    @property
    def vertices(self) -> range:
        return range(self.base.n)

    def edges(self) -> list[tuple[int, int]]:
        ii, jj = np.nonzero(np.triu(self.base.matrix == self.color))
        return list(zip(ii.tolist(), jj.tolist()))

    def neighbors(self, v: int) -> list[int]:
        return np.flatnonzero(self.base.matrix[v] == self.color).tolist()

    def degree(self, v: int) -> int:
        return int(np.count_nonzero(self.base.matrix[v] == self.color))


def colors_used(g: ColoredCompleteGraph) -> set[int]:
    if g.n < 2:
        return set()
    vals = np.unique(g.matrix[np.triu_indices(g.n, 1)])
    return {int(c) for c in vals}


def induced_subgraph(g: ColoredCompleteGraph, vertices: Iterable[int]) -> ColoredCompleteGraph:
    """Restrict ``g`` to ``vertices``, relabelled in increasing order."""
    s = sorted(set(int(v) for v in vertices))
    if not s:
        raise ValueError("vertex subset must be nonempty")
    if s[0] < 0 or s[-1] >= g.n:
        bad = s[0] if s[0] < 0 else s[-1]
        raise ValueError(f"vertex {bad} out of range 0..{g.n - 1}")
    idx = np.array(s)
    return ColoredCompleteGraph(len(s), g.k, g.matrix[np.ix_(idx, idx)].copy())


# ---------------------------------------------------------------- gcol I/O

def dumps(g: ColoredCompleteGraph) -> str:
    lines = [f"{GCOL_MAGIC} {GCOL_VERSION}", f"{g.n} {g.k}"]
    for v in range(g.n - 1):
        lines.append(" ".join(str(int(c)) for c in g.matrix[v, v + 1:]))
    return "\n".join(lines) + "\n"


def loads(text: str) -> ColoredCompleteGraph:
    rows = []
    for lineno, raw in enumerate(text.split("\n"), start=1):
        line = raw.rstrip()
        if line.startswith("#"):
            continue
        rows.append((lineno, line))
    # a trailing newline leaves one empty record; nothing else may be blank
    while rows and rows[-1][1] == "":
        rows.pop()
    if not rows:
        raise GcolError("empty input", 1)

    lineno, header = rows[0]
    if header.split() != [GCOL_MAGIC, str(GCOL_VERSION)]:
        raise GcolError(f"expected '{GCOL_MAGIC} {GCOL_VERSION}' header, got {header!r}", lineno)
    if len(rows) < 2:
        raise GcolError("missing '<n> <k>' line", lineno + 1)
    lineno, dims = rows[1]
    try:
        n, k = (int(t) for t in dims.split())
    except ValueError:
        raise GcolError(f"expected '<n> <k>', got {dims!r}", lineno) from None
    if n < 1 or k < 1:
        raise GcolError("n and k must be positive", lineno)
    if n > MAX_VERTICES:
        raise GcolError(f"n={n} exceeds MAX_VERTICES={MAX_VERTICES}", lineno)
    if k > 255:
        raise GcolError("k must be at most 255", lineno)

    body = rows[2:]
    if len(body) != n - 1:
        where = body[n - 1][0] if len(body) > n - 1 else (body[-1][0] + 1 if body else lineno + 1)
        raise GcolError(f"expected {n - 1} triangle rows, found {len(body)}", where)
    m = np.zeros((n, n), dtype=np.uint8)
    for v, (lineno, line) in enumerate(body):
        toks = line.split()
        if len(toks) != n - 1 - v:
            raise GcolError(f"row for vertex {v} needs {n - 1 - v} colors, found {len(toks)}", lineno)
        try:
            vals = [int(t) for t in toks]
        except ValueError:
            raise GcolError(f"non-integer color in {line!r}", lineno) from None
        for c in vals:
            if not 1 <= c <= k:
                raise GcolError(f"color {c} outside palette 1..{k}", lineno)
        m[v, v + 1:] = vals
        m[v + 1:, v] = vals
    return ColoredCompleteGraph(n, k, m)


def save(g: ColoredCompleteGraph, path: str | os.PathLike) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(dumps(g))


def load(path: str | os.PathLike) -> ColoredCompleteGraph:
    with open(path, encoding="utf-8") as fh:
        return loads(fh.read())
