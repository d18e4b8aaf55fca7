"""Extremal colorings for odd cycles and a seeded random Gallai-coloring sampler."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graph import ColoredCompleteGraph


def _check_m(m: int):
    if m < 2:
        raise ValueError(f"half-length parameter m must be >= 2, got {m}")


def odd_cycle_two_color_extremal(m: int) -> ColoredCompleteGraph:
    """K_{4m} with two color-1 cliques of size 2m joined in color 2.

    Neither color contains a cycle of length 2m+1: color-1 components are
    too small and color 2 is bipartite.
    """
    _check_m(m)
    half = 2 * m
    side = np.arange(4 * m) >= half
    mat = np.where(side[:, None] == side[None, :], 1, 2).astype(np.uint8)
    np.fill_diagonal(mat, 0)
    return ColoredCompleteGraph(4 * m, 2, mat)


def gallai_lower_bound(m: int, k: int) -> ColoredCompleteGraph:
    """Iterated doubling on m * 2**k vertices with no rainbow K3 and no mono C_{2m+1}.

    Level 1 is a color-1 clique on 2m vertices; level i joins two copies of
    level i-1 completely in color i.
    """
    _check_m(m)
    if k < 1:
        raise ValueError(f"need at least one color, got k={k}")
    mat = np.ones((2 * m, 2 * m), dtype=np.uint8)
    np.fill_diagonal(mat, 0)
    for i in range(2, k + 1):
        s = mat.shape[0]
        nxt = np.full((2 * s, 2 * s), i, dtype=np.uint8)
        nxt[:s, :s] = mat
        nxt[s:, s:] = mat
        mat = nxt
    return ColoredCompleteGraph(mat.shape[0], k, mat)


@dataclass(frozen=True)
class SamplerProfile:
    """Knobs for :func:`random_gallai`.

    The part count is geometric with the given mean, redrawn until it lies
    in ``[min_parts, max_parts]`` and then capped by the block size.
    """

    mean_parts: float = 3.0
    min_parts: int = 2
    max_parts: int = 8


DEFAULT_PROFILE = SamplerProfile()


def _draw_part_count(rng: np.random.Generator, n: int, prof: SamplerProfile) -> int:
    lo, hi = prof.min_parts, prof.max_parts
    for _ in range(1000):
        p = int(rng.geometric(1.0 / prof.mean_parts))
        if lo <= p <= hi:
            break
    else:
        p = lo
    return max(2, min(p, n))


def _sample_block(n: int, k: int, seq: np.random.SeedSequence,
                  prof: SamplerProfile) -> np.ndarray:
    if n == 1:
        return np.zeros((1, 1), dtype=np.uint8)
    rng = np.random.default_rng(seq)
    p = _draw_part_count(rng, n, prof)
    sizes = rng.multinomial(n - p, [1.0 / p] * p) + 1
    if k >= 2:
        pair = rng.choice(np.arange(1, k + 1), size=2, replace=False)
    else:
        pair = np.array([1, 1])
    red = pair[rng.integers(0, 2, size=(p, p))]
    red = np.triu(red, 1)
    red = (red + red.T).astype(np.uint8)

    out = np.zeros((n, n), dtype=np.uint8)
    bounds = np.concatenate([[0], np.cumsum(sizes)])
    for i in range(p):
        for j in range(i + 1, p):
            out[bounds[i]:bounds[i + 1], bounds[j]:bounds[j + 1]] = red[i, j]
            out[bounds[j]:bounds[j + 1], bounds[i]:bounds[i + 1]] = red[i, j]
    for i, child in enumerate(seq.spawn(p)):
        a, b = bounds[i], bounds[i + 1]
        out[a:b, a:b] = _sample_block(int(b - a), k, child, prof)
    return out


def random_gallai(n: int, k: int, seed: int,
                  profile: SamplerProfile = DEFAULT_PROFILE) -> ColoredCompleteGraph:
    """Random rainbow-triangle-free coloring of K_n built by recursive blow-ups.

    Deterministic in ``(n, k, seed, profile)``.
    """
    if n < 1 or k < 1:
        raise ValueError("n and k must be positive")
    mat = _sample_block(n, k, np.random.SeedSequence(seed % 2**64), profile)
    return ColoredCompleteGraph(n, k, mat)
