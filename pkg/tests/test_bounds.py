from fractions import Fraction
from itertools import product
from math import comb

import pytest

from rblab.bounds import (
    capped_total,
    capped_total_max,
    check_n_equals_r,
    decompose,
    threshold_diagnostics,
    turan_closed_form,
    verify_prop31,
)
from rblab.errors import ContractViolationError, InvalidParameterError
from rblab.model import thresholds, turan_number
from rblab.nesting import WeightedGraph
from rblab.sequences import is_staircase_free


def test_closed_form_examples():
    assert turan_closed_form(2, 5, 4) == 8
    assert turan_closed_form(0, 6, 4) == 12
    for r in range(3, 9):
        assert turan_closed_form(0, r - 1, r) == comb(r - 1, 2)
    with pytest.raises(InvalidParameterError):
        turan_closed_form(0, 5, 1)


def test_closed_form_equals_turan_number():
    # full grid the artifact promises: every 2 <= parts <= n <= 400
    for n in range(2, 401):
        for parts in range(2, n + 1):
            r = parts + 1
            d = decompose(n, r)
            assert n == d.k0 * parts + d.m and 0 <= d.m <= parts - 1
            assert turan_closed_form(d.m, n, r) == turan_number(n, parts)


def test_prop31_small_sweep():
    report = verify_prop31(range(4, 7), 80)
    assert report.ok()
    assert all(report.checks[p] > 0 for p in ("i", "ii", "iii", "iv"))


def test_prop31_equality_spots():
    # (i) at r=4, n=5 holds with equality: k2 = 7 = C(4,2)+1
    assert thresholds(5, 4).k2 == comb(4, 2) + 1
    # (ii) r=4, n=5, s=3 is tight: 8 - 1 = 7 = 3 + (2/3)*3*2
    assert 3 * (turan_number(5, 3) - turan_number(2, 3)) == 3 * 3 + 2 * 3 * 2
    # (iii) at s = n-1: t(1) = 0 >= 0
    assert turan_number(1, 3) == 0


def test_prop31_rejects_bad_ranges():
    with pytest.raises(InvalidParameterError):
        verify_prop31([3], 50)
    with pytest.raises(InvalidParameterError):
        verify_prop31([4], 4)


def test_capped_totals():
    assert capped_total(4, 1) == 30
    assert capped_total(4, 6) == 30
    assert capped_total_max(4) == 30
    assert capped_total_max(3) == 6


def test_check_n_equals_r_accepts_extremal():
    h = comb(4, 2)
    wg = WeightedGraph.constant(4, h, h - 1)
    assert check_n_equals_r(wg, 4)
    assert wg.total_weight() == (h - 1) * h  # the bound is tight here


def test_check_n_equals_r_contract():
    h = comb(4, 2)
    with pytest.raises(ContractViolationError):
        check_n_equals_r(WeightedGraph.constant(4, h, h), 4)
    with pytest.raises(InvalidParameterError):
        check_n_equals_r(WeightedGraph.constant(5, h, 1), 4)
    with pytest.raises(InvalidParameterError):
        check_n_equals_r(WeightedGraph.constant(4, h - 1, 1), 4)


def test_n_equals_r_brute_force_r3():
    # enumerate all 4^3 weightings on K_3 with ceiling C(3,2) = 3
    h = comb(3, 2)
    best = -1
    for ws in product(range(h + 1), repeat=3):
        wg = WeightedGraph(3, h, ws)
        if is_staircase_free(wg, 3):
            assert check_n_equals_r(wg, 3)
            best = max(best, sum(ws))
    assert best == 6 == (h - 1) * h


def test_threshold_diagnostics_values():
    d = threshold_diagnostics(4, 6)
    assert d.balanced_density == Fraction(4, 5)
    d = threshold_diagnostics(4, 5, m=2)
    assert d.small_n_ratio == 8
    assert d.k2_excess == Fraction(5, 4)
    # k2 = ceil(excess) + C(r,2) - 1
    assert -(-d.k2_excess.numerator // d.k2_excess.denominator) + 5 == thresholds(5, 4).k2


def test_threshold_diagnostics_monotonicity():
    for r in range(4, 9):
        alphas = [
            threshold_diagnostics(r, n).balanced_density for n in range(2 * r - 2, 60)
        ]
        assert all(a > b for a, b in zip(alphas, alphas[1:]))
        hs = [
            threshold_diagnostics(r, r - 1 + m, m=m).small_n_ratio
            for m in range(2, r - 1)
        ]
        assert all(a >= b for a, b in zip(hs, hs[1:]))


def test_k2_excess_consistency():
    # excess > 1 exactly when k2 >= C(r,2)+1, for n >= r+1
    for r in range(4, 9):
        for n in range(r + 1, 80):
            d = threshold_diagnostics(r, n)
            assert (d.k2_excess > 1) == (thresholds(n, r).k2 >= comb(r, 2) + 1)
            assert d.k2_excess > 1
