"""Exit criteria.  Each test prints one PASS/FAIL line; the summary repeats them all.

Run alone with ``pytest tests/test_acceptance.py`` or ``python tests/test_acceptance.py``.
"""
import sys
import time
from contextlib import contextmanager

import numpy as np
import pytest

from conftest import ACCEPTANCE_LINES
from gallai_ramsey.cli import run
from gallai_ramsey.constructions import gallai_lower_bound, random_gallai
from gallai_ramsey.detect import find_mono_cycle, is_bad, validate_witness
from gallai_ramsey.gallai import find_gallai_partition, validate_partition
from gallai_ramsey.graph import ColoredCompleteGraph, induced_subgraph, load
from gallai_ramsey.lemmas import AbsenceReport, CoverSet, join_lemma, three_vertex_claim
from gallai_ramsey.search import EXHAUSTED, WITNESS, search_bad_gallai, search_bad_two_coloring
from oracles import brute_mono_cycle, random_coloring
from scenarios import three_vertex_scenario, join_scenario


@contextmanager
def criterion(num, title, budget_s):
    t0 = time.perf_counter()
    line = None
    try:
        yield
        took = time.perf_counter() - t0
        assert took < budget_s, f"took {took:.1f}s, budget {budget_s}s"
        line = f"[{num:2d}] PASS  {title}  ({took:.2f}s / {budget_s:g}s)"
    except BaseException as e:
        took = time.perf_counter() - t0
        line = f"[{num:2d}] FAIL  {title}  ({took:.2f}s): {e}"
        raise
    finally:
        ACCEPTANCE_LINES.append(line)
        print(line)


def test_01_lower_bound_certificates(tmp_path, capsys):
    with criterion(1, "gr_k(K3,C9) lower-bound constructions k=1..6 are bad", 60):
        for k in range(1, 7):
            f = str(tmp_path / f"c{k}.gcol")
            assert run(["gen", "construct", "--m", "4", "--colors", str(k), "-o", f]) == 0
            assert load(f).n == 4 * 2**k
            assert run(["check", f, "--cycle", "9", "--expect", "bad"]) == 0
        capsys.readouterr()


def test_02_two_color_witness_exact(tmp_path, capsys):
    with criterion(2, "two-color K16 has no mono C9 under the general search", 5):
        f = str(tmp_path / "t.gcol")
        assert run(["gen", "two-color", "--m", "4", "-o", f]) == 0
        assert run(["check", f, "--cycle", "9", "--no-fast-paths", "--expect", "bad"]) == 0
        g = load(f)
        assert g.n == 16
        v = is_bad(g, 9, fast_paths=False, stop_at_first=False)
        assert v.verdict == "bad"
        capsys.readouterr()


def test_03_r2_c4():
    with criterion(3, "r2(C4)=6: witness at 5, exhausted at 6", 10):
        a = search_bad_two_coloring(5, 4)
        b = search_bad_two_coloring(6, 4)
        assert a.status == WITNESS and is_bad(a.witness, 4).is_bad
        assert b.status == EXHAUSTED


def test_04_r2_c5():
    with criterion(4, "r2(C5)=9: witness at 8, exhausted at 9", 600):
        a = search_bad_two_coloring(8, 5, time_limit=590)
        b = search_bad_two_coloring(9, 5, time_limit=590)
        assert a.status == WITNESS and is_bad(a.witness, 5).is_bad
        assert b.status == EXHAUSTED


def test_05_gr3_k3():
    with criterion(5, "gr3(K3,K3)=11: witness at 10, exhausted at 11", 1800):
        a = search_bad_gallai(10, 3, 3, time_limit=1790)
        b = search_bad_gallai(11, 3, 3, time_limit=1790)
        assert a.status == WITNESS and is_bad(a.witness, 3).is_bad
        assert b.status == EXHAUSTED


def test_06_partition_totality():
    with criterion(6, "1000 random Gallai colorings (n<=200, k<=5) yield valid partitions", 60):
        for seed in range(1000):
            rng = np.random.default_rng(seed)
            n = int(rng.integers(2, 201))
            k = int(rng.integers(1, 6))
            g = random_gallai(n, k, seed)
            P = find_gallai_partition(g)
            rep = validate_partition(g, P)
            assert rep.valid, (seed, rep.problems)


def test_07_k33_sampling():
    with criterion(7, "500 random Gallai 3-colorings of K33 all contain a mono C9", 1800):
        inconclusive = 0
        for seed in range(500):
            g = random_gallai(33, 3, seed)
            v = is_bad(g, 9)
            inconclusive += v.verdict == "inconclusive"
            assert v.verdict == "not-bad", (seed, v.verdict)
            w = v.witnesses[0]
            assert w.kind == "mono-cycle" and validate_witness(g, w, 9)
        assert inconclusive == 0


def test_08_lemma_adversarial():
    with criterion(8, "10^4 lemma scenarios: no contradicted absence, all cycles valid", 300):
        rng = np.random.default_rng(8)
        for i in range(10_000):
            if i % 2:
                g, H, triple, color = three_vertex_scenario(rng)
                out = three_vertex_claim(g, H, triple, color)
                if isinstance(out, CoverSet):
                    rest = [v for v in H if v not in out.vertices]
                    assert len(out.vertices) <= 4
                    if rest:
                        sub = induced_subgraph(g, rest)
                        assert all(find_mono_cycle(sub, color, L) is None for L in range(3, len(rest) + 1))
                else:
                    assert validate_witness(g, out, 9) and out.color == color
                    assert find_mono_cycle(g, color, 9) is not None
            else:
                s = join_scenario(rng)
                out = join_lemma(s)
                vs = list(s.Y) + list(s.Z) + ([s.x] if s.x is not None else [])
                if isinstance(out, AbsenceReport):
                    assert find_mono_cycle(induced_subgraph(s.base, vs), s.color, 9) is None
                else:
                    assert validate_witness(s.base, out, 9) and out.color == s.color
                    assert find_mono_cycle(s.base, s.color, 9) is not None


def test_09_brute_force_equivalence():
    with criterion(9, "find_mono_cycle == brute-force enumeration on 200 colorings, n<=8", 300):
        rng = np.random.default_rng(9)
        for _ in range(200):
            n = int(rng.integers(3, 9))
            k = int(rng.integers(1, 4))
            m = random_coloring(rng, n, k)
            g = ColoredCompleteGraph(n, k, m)
            rows = m.tolist()
            for L in range(3, n + 1):
                for c in range(1, k + 1):
                    w = find_mono_cycle(g, c, L)
                    assert (w is None) == (brute_mono_cycle(rows, c, L) is None), (rows, c, L)
                    if w is not None:
                        assert validate_witness(g, w, L)


def test_10_hereditary_badness():
    with criterion(10, "100 random vertex deletions from the k=4 construction stay bad", 60):
        g = gallai_lower_bound(4, 4)
        rng = np.random.default_rng(10)
        for _ in range(100):
            drop = rng.choice(64, size=int(rng.integers(1, 64)), replace=False)
            keep = sorted(set(range(64)) - set(drop.tolist()))
            assert is_bad(induced_subgraph(g, keep), 9).verdict == "bad"


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q", "-p", "no:cacheprovider"]))
