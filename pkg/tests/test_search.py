import numpy as np
import pytest

from gallai_ramsey import search as sm
from gallai_ramsey.detect import is_bad
from gallai_ramsey.graph import ColoredCompleteGraph, induced_subgraph
from gallai_ramsey.search import (EXHAUSTED, TIMEOUT, WITNESS, search_bad_gallai, search_bad_two_coloring,
                                  threshold_scan)
from oracles import brute_bad_exists, brute_is_bad

# brute_bad_exists(n, k, L) over every coloring, frozen (tests/oracles.py)
BRUTE = {
    (3, 1, 3): False, (4, 1, 3): False, (4, 1, 4): False, (5, 1, 3): False, (5, 1, 4): False,
    (5, 1, 5): False, (6, 1, 3): False, (6, 1, 4): False, (6, 1, 5): False, (6, 1, 6): False,
    (3, 2, 3): True, (4, 2, 3): True, (4, 2, 4): True, (5, 2, 3): True, (5, 2, 4): True,
    (5, 2, 5): True, (6, 2, 3): False, (6, 2, 4): False, (6, 2, 5): True, (6, 2, 6): True,
    (3, 3, 3): True, (4, 3, 3): True, (4, 3, 4): True, (5, 3, 3): True, (5, 3, 4): True,
    (5, 3, 5): True,
}


def test_brute_table_spot_check():
    for key in [(4, 1, 4), (5, 2, 5), (4, 3, 4)]:
        assert brute_bad_exists(*key) == BRUTE[key]


@pytest.mark.parametrize("key", sorted(BRUTE))
def test_gallai_search_matches_brute_force(key):
    n, k, L = key
    out = search_bad_gallai(n, k, L)
    assert out.status == (WITNESS if BRUTE[key] else EXHAUSTED)
    if out.witness is not None:
        assert brute_is_bad(out.witness.matrix.tolist(), k, L)


@pytest.mark.parametrize("key", sorted(k for k in BRUTE if k[1] == 2))
def test_two_color_search_matches_brute_force(key):
    n, _, L = key
    assert search_bad_two_coloring(n, L).status == (WITNESS if BRUTE[key] else EXHAUSTED)


@pytest.mark.parametrize("n, L, status", [(5, 4, WITNESS), (6, 4, EXHAUSTED),
                                          (8, 5, WITNESS), (9, 5, EXHAUSTED)])
def test_two_color_ramsey_values(n, L, status):
    out = search_bad_two_coloring(n, L)
    assert out.status == status
    if status == WITNESS:
        assert is_bad(out.witness, L).is_bad and out.witness.k == 2
    else:
        assert out.witness is None


@pytest.mark.parametrize("n, L", [(4, 3), (5, 3), (6, 3), (5, 4), (6, 4), (7, 4), (6, 5), (7, 5), (8, 5)])
def test_two_color_and_gallai_agree(n, L):
    assert search_bad_two_coloring(n, L).status == search_bad_gallai(n, 2, L).status


def test_gallai_one_color_long_cycle():
    out = search_bad_gallai(8, 1, 9)
    assert out.status == WITNESS and out.witness == ColoredCompleteGraph.monochromatic(8, 1)


# least n with every k-coloring containing a rainbow or mono triangle:
# 2*5^((k-1)/2)+1 for odd k, 5^(k/2)+1 for even k
@pytest.mark.parametrize("k, threshold", [(1, 3), (2, 6), (3, 11), (4, 26), (5, 51)])
def test_gallai_ramsey_triangle_values(k, threshold):
    below = search_bad_gallai(threshold - 1, k, 3)
    assert below.status == WITNESS and is_bad(below.witness, 3).is_bad
    assert search_bad_gallai(threshold, k, 3).status == EXHAUSTED


def test_restriction_consistency():
    for n, L in [(8, 5), (5, 4)]:
        w = search_bad_two_coloring(n, L).witness
        for v in range(n):
            assert is_bad(induced_subgraph(w, [u for u in range(n) if u != v]), L).is_bad
    w = search_bad_gallai(10, 3, 3).witness
    for v in range(10):
        assert is_bad(induced_subgraph(w, [u for u in range(10) if u != v]), 3).is_bad


def test_determinism():
    a, b = search_bad_two_coloring(8, 5), search_bad_two_coloring(8, 5)
    assert a.witness == b.witness and a.nodes == b.nodes
    a, b = search_bad_gallai(5, 3, 4), search_bad_gallai(5, 3, 4)
    assert a.witness == b.witness and a.nodes == b.nodes


def test_parallel_workers_same_status():
    for n, L in [(8, 5), (9, 5), (6, 4)]:
        one = search_bad_two_coloring(n, L)
        many = search_bad_two_coloring(n, L, workers=2)
        assert one.status == many.status
        if many.witness is not None:
            assert is_bad(many.witness, L).is_bad
    assert search_bad_gallai(5, 3, 4, workers=2).status == WITNESS


def test_timeout_status():
    out = search_bad_two_coloring(9, 5, time_limit=1e-9)
    assert out.status == TIMEOUT and out.witness is None


def test_witness_verified(monkeypatch):
    monkeypatch.setattr(sm, "is_bad", lambda g, L: type("V", (), {"is_bad": False, "verdict": "not-bad"})())
    with pytest.raises(AssertionError):
        search_bad_two_coloring(5, 4)


def test_edge_search_colex_order():
    s = sm._EdgeSearch(4, 2, 3, rainbow_free=False)
    assert s.edges == [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (2, 3)]


def test_compositions():
    assert list(sm._nonincreasing_compositions(5, 2)) == [(4, 1), (3, 2)]
    assert list(sm._nonincreasing_compositions(4, 4)) == [(1, 1, 1, 1)]
    assert len(list(sm._nonincreasing_compositions(10, 3))) == 8


def test_reduced_graphs_for_triangles():
    # labelled triangle-free 2-colorings of K_5 are the 12 pentagon splits; half have c(0,1)=1
    assert len(sm._reduced_graphs(5)) == 6
    assert sm._reduced_graphs(6) == []


def test_memo_exchangeability_against_brute_force():
    solver = sm._TriangleGallai(None)
    for (n, k, L), expect in BRUTE.items():
        if L == 3:
            assert (solver.solve(n, k) is not None) == expect
    assert solver.solve(1, 0) is not None and solver.solve(2, 0) is None


@pytest.mark.parametrize("k, L, lo, hi, mode, expect", [
    (2, 4, 4, 7, "two-color", 6),
    (3, 3, 9, 12, "gallai", 11),
    (1, 9, 8, 10, "gallai", 9),
])
def test_threshold_scan(k, L, lo, hi, mode, expect):
    rep = threshold_scan(k, L, lo, hi, mode)
    assert rep.threshold == expect
    assert max(rep.outcomes) == expect
    assert all(o.status == WITNESS for n, o in rep.outcomes.items() if n < expect)


def test_threshold_scan_errors():
    with pytest.raises(ValueError):
        threshold_scan(2, 4, 7, 4, "two-color")
    with pytest.raises(ValueError):
        threshold_scan(2, 4, 4, 7, "three-color")


def test_threshold_none_in_range():
    assert threshold_scan(2, 5, 5, 7, "two-color").threshold is None


def test_outcome_json():
    d = search_bad_two_coloring(5, 4).to_dict()
    assert d["status"] == "witness" and d["witness"].startswith("gcol 1\n5 2\n")
    assert "first-edge-color-1" in d["stats"]["symmetry_rules"]
    assert "witness" not in search_bad_two_coloring(6, 4).to_dict()
