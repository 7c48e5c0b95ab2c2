from math import comb

import pytest

from lefschetz_kit.hilbert import (
    TruncatedSeries,
    aci_hilbert,
    complement_count,
    froberg_corollary_degree,
    froberg_truncation,
    power_ci_hilbert,
    power_ci_table,
)
from lefschetz_kit.monomials import CUBES, SQUARES, generic_power


def expand_power_sum(n, a, top):
    # coefficients of (1 + t + ... + t^(a-1))^n by repeated convolution
    coeffs = [1]
    block = [1] * a
    for _ in range(n):
        out = [0] * min(len(coeffs) + a - 1, top + 1)
        for i, c in enumerate(coeffs):
            for j, b in enumerate(block):
                if i + j <= top:
                    out[i + j] += c * b
        coeffs = out
    return coeffs + [0] * (top + 1 - len(coeffs))


def test_power_ci_known_values():
    assert power_ci_hilbert(3, 3, 3) == 7
    assert power_ci_hilbert(4, 2, 2) == 6
    assert power_ci_hilbert(5, 2, 6) == 0
    with pytest.raises(ValueError):
        power_ci_hilbert(3, 0, 1)


def test_power_ci_matches_direct_expansion():
    for n in range(1, 7):
        for a in range(2, 5):
            top = (a - 1) * n
            direct = expand_power_sum(n, a, top)
            for d in range(top + 1):
                assert power_ci_hilbert(n, a, d) == direct[d]


def test_power_ci_symmetry():
    for n in range(1, 8):
        for a in range(2, 5):
            socle = (a - 1) * n
            for d in range(socle + 1):
                assert power_ci_hilbert(n, a, d) == power_ci_hilbert(n, a, socle - d)


def test_power_ci_table():
    table = power_ci_table(3, 2)
    assert table.dimension(0) == 1
    assert table.dimension(3) == 1
    assert table.dimension(4) == 0
    assert sum(table.values.values()) == 2 ** 3
    total = sum(power_ci_table(4, 3).values.values())
    assert total == 3 ** 4


def test_aci_known_values():
    assert aci_hilbert(6, 2, 3) == 14
    assert aci_hilbert(2, 3, 3) == 1
    assert aci_hilbert(4, 2, 3) == 0
    assert aci_hilbert(5, 2, 0) == 1


def test_aci_is_clamped_difference():
    for n in range(1, 7):
        for a in (2, 3):
            for d in range(0, (a - 1) * (n + 1) + 2):
                grown = power_ci_hilbert(n + 1, a, d)
                below = power_ci_hilbert(n + 1, a, d - 1) if d else 0
                assert aci_hilbert(n, a, d) == max(grown - below, 0)


def test_complement_count_known_values():
    assert complement_count(SQUARES, 6, 3) == 14
    assert complement_count(SQUARES, 8, 5) == 0
    assert complement_count(CUBES, 2, 3) == 1
    with pytest.raises(ValueError):
        complement_count(generic_power(4), 5, 2)


def test_complement_matches_aci_small_grid():
    for n in range(2, 7):
        for d in range(0, 5):
            assert complement_count(SQUARES, n, d) == aci_hilbert(n, 2, d)
    for n in range(2, 6):
        for d in range(0, 6):
            assert complement_count(CUBES, n, d) == aci_hilbert(n, 3, d)


def test_froberg_truncation_known_values():
    pred = froberg_truncation(6, [2] * 8, 3)
    assert pred.coefficients == (1, 6, 13, 8)
    assert pred.truncation_degree == 3
    pred = froberg_truncation(5, [2] * 7, 3)
    assert pred.coefficients == (1, 5, 8)
    assert pred.truncation_degree == 2


def test_froberg_truncation_no_forms_is_polynomial_ring():
    pred = froberg_truncation(3, [], 3)
    assert pred.coefficients == (1, 3, 6, 10)


def test_froberg_truncation_single_form():
    for n in (2, 3, 4):
        for a in (2, 3):
            pred = froberg_truncation(n, [a], 6)
            for d, c in enumerate(pred.coefficients):
                want = comb(n - 1 + d, n - 1)
                if d >= a:
                    want -= comb(n - 1 + d - a, n - 1)
                assert c == want


def test_truncated_series_validation():
    with pytest.raises(ValueError):
        TruncatedSeries(coefficients=(), truncation_degree=-1)
    with pytest.raises(ValueError):
        TruncatedSeries(coefficients=(1, 0), truncation_degree=1)
    with pytest.raises(ValueError):
        TruncatedSeries(coefficients=(1, 2), truncation_degree=3)


def test_froberg_corollary_degrees():
    assert froberg_corollary_degree(7, 2, SQUARES) == 3
    assert froberg_corollary_degree(6, 3, CUBES) == 5
    assert froberg_corollary_degree(9, 4, generic_power(4)) == 7
    with pytest.raises(ValueError):
        froberg_corollary_degree(6, 3, SQUARES)
    with pytest.raises(ValueError):
        froberg_corollary_degree(6, 2, CUBES)
    with pytest.raises(ValueError):
        froberg_corollary_degree(6, 4, generic_power(5))
