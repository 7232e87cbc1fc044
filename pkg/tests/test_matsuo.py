"""Interleaving bijection, the RIN engine, and the gap-2 diagonal."""

from math import factorial

import pytest

from gapperms import (
    ABSOLUTE,
    SIGNED,
    ExceptionSpec,
    SequenceSpec,
    brute_count,
    count,
    count_with_exceptions,
    fast22,
    matsuo_map,
    rin,
)
from gapperms.tilings import _interval_terms, _multiply


def rin_reference(n, a, b, mode):
    """Independent route: a partition sum over split boards.  Position
    tilings may not span the link at a (intervals of [1..a] then [a+1..n]);
    value tilings must cut after b; same-size tiles are matched in a_i! ways,
    with the usual sign and, in absolute mode, a direction per run."""
    pos = _multiply(_interval_terms(a), _interval_terms(n - a))
    val = _multiply(_interval_terms(b), _interval_terms(n - b))
    small, big = (pos, val) if len(pos) <= len(val) else (val, pos)
    total = 0
    for mono, ca in small.items():
        cb = big.get(mono)
        if not cb:
            continue
        m = sum(mono)
        term = ca * cb
        for x in mono:
            term *= factorial(x)
        if mode == ABSOLUTE:
            term <<= m - (mono[0] if mono else 0)
        total += term if (n - m) % 2 == 0 else -term
    return total


def test_map_examples():
    assert matsuo_map(5).image == (1, 4, 2, 5, 3)
    assert matsuo_map(4).image == (1, 3, 2, 4)
    assert matsuo_map(1).image == (1,)


def test_map_is_an_interleaving_permutation():
    for n in range(1, 40):
        image = matsuo_map(n).image
        h = (n + 1) // 2
        assert sorted(image) == list(range(1, n + 1))
        assert image[0] == 1
        if n >= 2:
            assert image[1] == 1 + h


def test_rin_examples():
    assert rin(3, 2, 3, SIGNED) == 4
    assert rin(3, 1, 1, SIGNED) == 5
    assert rin(2, 1, 1, SIGNED) == 2


def test_rin_argument_checks():
    with pytest.raises(ValueError):
        rin(3, 0, 1, SIGNED)
    with pytest.raises(ValueError):
        rin(3, 3, 1, SIGNED)
    with pytest.raises(ValueError):
        rin(3, 1, 4, SIGNED)


def test_rin_matches_oracle_exhaustively():
    for n in range(2, 7):
        for mode in (SIGNED, ABSOLUTE):
            for a in range(1, n):
                for b in range(1, n + 1):
                    expected = count_with_exceptions(ExceptionSpec(n, {a}, {b}, mode))
                    assert rin(n, a, b, mode) == expected, (n, a, b, mode)


def test_rin_matches_split_board_sum_beyond_oracle_reach():
    for n in range(8, 11):
        for mode in (SIGNED, ABSOLUTE):
            for a in range(1, n, 2):
                for b in range(1, n + 1, 3):
                    assert rin(n, a, b, mode) == rin_reference(n, a, b, mode)
    for n, a, b, mode in [
        (18, 5, 11, SIGNED),
        (22, 11, 7, ABSOLUTE),
        (25, 13, 13, SIGNED),
        (20, 1, 20, ABSOLUTE),
        (21, 20, 1, SIGNED),
    ]:
        assert rin(n, a, b, mode) == rin_reference(n, a, b, mode)


def test_rin_never_below_unwaived_count():
    for n in range(2, 7):
        for mode in (SIGNED, ABSOLUTE):
            base = brute_count(SequenceSpec(1, 1, mode), n)
            for a in range(1, n):
                for b in range(1, n + 1):
                    assert rin(n, a, b, mode) >= base


def test_fast22_examples():
    assert fast22(4, SIGNED) == 18
    assert fast22(4, ABSOLUTE) == 16
    assert fast22(1, SIGNED) == 1


def test_fast22_matches_partition_engine():
    for mode in (SIGNED, ABSOLUTE):
        spec = SequenceSpec(2, 2, mode)
        for n in range(1, 13):
            assert fast22(n, mode) == count(spec, n), (n, mode)


def test_fast22_matches_oracle():
    for mode in (SIGNED, ABSOLUTE):
        spec = SequenceSpec(2, 2, mode)
        for n in range(1, 8):
            assert fast22(n, mode) == brute_count(spec, n)
