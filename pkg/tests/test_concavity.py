import math

import pytest
from hypothesis import given, strategies as st

from rieszsphere.concavity import (CATALOG_RANGE, PRINTED_DIFFERENCES, UNKNOWN, MagicCatalog,
                                   backward_diff, convexity_sets, forward_diff, magic_numbers,
                                   monotonicity_check_N, monotonicity_check_s, second_diff,
                                   set_stats, signed_indicator)
from rieszsphere.exact import v_minus_two
from rieszsphere.tables import EnergyTable


def test_catalog_sizes_and_chain():
    cat = MagicCatalog()
    sizes = {s: len(cat.c_plus(s)) for s in (-1, 0, 1, 2, 3)}
    assert sizes == {-1: 0, 0: 22, 1: 54, 2: 75, 3: 85}
    assert cat.chain_holds()
    assert all(cat.c_plus(s) <= set(CATALOG_RANGE) for s in (0, 1, 2, 3))


def test_catalog_odd_counts_and_percentages():
    cat = MagicCatalog()
    odd = {s: set_stats(cat.c_plus(s)).odd for s in (0, 1, 2, 3)}
    assert odd == {0: 5, 1: 16, 2: 24, 3: 28}
    st = set_stats(cat.c_plus(2))
    assert st.coverage_percent == pytest.approx(100 * 75 / 197)
    assert st.odd_percent == pytest.approx(100 * 24 / 75)
    assert math.isnan(set_stats(cat.c_plus(-1)).odd_percent)


def test_pre_correction_variant():
    old = MagicCatalog(corrected=False)
    assert old.c_plus(1) - old.c_plus(2) == {197}
    assert not old.chain_holds()
    assert 177 in MagicCatalog().c_plus(3) and 177 not in old.c_plus(3)


@pytest.mark.parametrize("pair", sorted(PRINTED_DIFFERENCES))
def test_signed_indicator_matches_printed_differences(pair):
    cat = MagicCatalog()
    a, b = cat.c_plus(pair[0]), cat.c_plus(pair[1])
    ind = signed_indicator(a, b, CATALOG_RANGE)
    assert {n for n, v in ind.items() if v == 1} == PRINTED_DIFFERENCES[pair]
    assert not any(v == -1 for v in ind.values())


def test_catalog_unknown_outside_range():
    cat = MagicCatalog()
    assert cat.contains(0, 250) is UNKNOWN
    assert cat.contains(0, 12) is True and cat.contains(0, 13) is False


@given(st.lists(st.floats(-10, 10), min_size=3, max_size=30))
def test_differences_and_partition(vals):
    t = EnergyTable.from_values(1.0, dict(enumerate(vals, start=2)))
    rep = convexity_sets(t)
    ns = t.ns()
    assert rep.c_plus | rep.c_minus | rep.c_zero == set(ns[1:-1])
    assert not (rep.c_plus & rep.c_minus)
    for n in ns[1:-1]:
        assert second_diff(t, n) == pytest.approx(forward_diff(t, n) - backward_diff(t, n), abs=1e-9)


def test_tolerance_moves_rows_to_linear_set():
    t = EnergyTable.from_values(0.0, {2: 0.0, 3: 1.0, 4: 2.0 + 1e-12, 5: 3.0})
    assert 4 in convexity_sets(t).c_minus
    assert convexity_sets(t, tol=1e-9).c_zero == {3, 4}
    with pytest.raises(ValueError):
        convexity_sets(t, tol=-1)


def test_gaps_are_skipped():
    t = EnergyTable.from_values(0.0, {2: 0.0, 3: 1.0, 4: 2.5, 7: 3.0, 8: 3.1, 9: 3.15})
    assert set(convexity_sets(t).ddv) == {3, 8}
    with pytest.raises(KeyError):
        second_diff(t, 5)


def test_minus_two_table_has_no_convexity():
    t = EnergyTable.from_values(-2.0, {n: v_minus_two(n) for n in range(2, 60)})
    assert convexity_sets(t).c_plus == set()


def test_magic_numbers_only_at_log():
    t = EnergyTable.from_values(1.0, {2: 0, 3: 1, 4: 3})
    with pytest.raises(ValueError):
        magic_numbers(convexity_sets(t))


def test_monotonicity_checks():
    t = EnergyTable.from_values(0.0, {2: -1.0, 3: -0.5, 4: -0.7, 5: -0.2})
    viol = monotonicity_check_N(t)
    assert [(v.n, v.earlier) for v in viol] == [(4, 3)]
    lo = EnergyTable.from_values(-1.0, {2: -1.0, 3: -0.6})
    hi = EnergyTable.from_values(0.0, {2: -0.69, 3: -0.7})
    sv = monotonicity_check_s([hi, lo])
    assert [(v.n, v.s_lo, v.s_hi) for v in sv] == [(3, -1.0, 0.0)]
