import itertools
import math
from fractions import Fraction

import pytest

from hfbound.bounds import (
    BoundKind,
    classic_gv,
    classic_sp,
    hf_lower_1,
    hf_lower_2,
    hf_lower_3,
    hf_upper_1,
    hf_upper_2,
    hf_upper_3,
    rate,
)
from hfbound.codes import HfCode
from hfbound.errors import BadParameters, EmptyDistance, NonpositiveAverage

EXAMPLE_CODE = HfCode.from_symbols([(0, 1, 0, 2), (1, 2, 1, 2), (1, 0, 2, 0)], 3)


def max_code_size(q, n, d):
    """Largest code in {0..q-1}^n with minimum distance d, by clique search."""
    words = list(itertools.product(range(q), repeat=n))
    best = 1

    def grow(chosen, start):
        nonlocal best
        best = max(best, len(chosen))
        for i in range(start, len(words)):
            if all(sum(a != b for a, b in zip(words[i], c)) >= d for c in chosen):
                grow(chosen + [words[i]], i + 1)

    grow([], 0)
    return best


def test_classic_sp_examples():
    assert classic_sp(2, 3, 3).value == 2 == max_code_size(2, 3, 3)
    assert classic_sp(4, 3, 3).value == 6
    assert classic_sp(5, 4, 1).value == 5 ** 4
    assert classic_sp(4, 7, 1).rate == pytest.approx(1.0)


def test_classic_gv_examples():
    assert classic_gv(3, 3, 1).value == 27
    assert classic_gv(2, 4, 2).value == 4
    rep = classic_gv(4, 2, 2)
    ball = sum(math.comb(2, r) * 3 ** r for r in range(2))  # 7
    assert rep.denominator == ball
    assert rep.value == math.ceil(16 / ball) == 3 and "lower bound" in rep.notes


@pytest.mark.parametrize(
    "make,args,value",
    [
        (hf_upper_1, (4, 3, 3), 6),
        (hf_upper_1, (4, 5, 5), 8),
        (hf_lower_1, (4, 5, 3), 7),
        (hf_lower_1, (4, 8, 3), 74),
        (hf_upper_3, (4, 4, 3, Fraction(23, 3)), 14),
        (hf_upper_3, (4, 5, 5, 41), 7),
        (hf_upper_3, (4, 3, 3, Fraction(19, 3)), 5),
        (hf_lower_3, (4, 5, 3, 41), 8),
        (hf_lower_3, (4, 4, 2, Fraction(23, 3)), 15),
        (hf_lower_3, (4, 8, 3), 102),
    ],
)
def test_hf_bound_values(make, args, value):
    assert make(*args).value == value


def test_rounding_directions():
    up = hf_upper_3(4, 4, 3)
    lo = hf_lower_3(4, 4, 3)
    assert up.value == math.floor(Fraction(up.numerator) / up.denominator)
    assert lo.value == math.ceil(Fraction(lo.numerator) / lo.denominator)
    assert "rounded up" in lo.notes


@pytest.mark.parametrize("n", range(1, 9))
def test_degenerate_d1(n):
    size = 4 * 3 ** (n - 1)
    for make in (hf_upper_1, hf_lower_1, hf_upper_3, hf_lower_3):
        assert make(4, n, 1).value == size


def test_ordering_q4():
    for n in range(1, 9):
        for d in range(1, min(5, n) + 1):
            assert hf_lower_1(4, n, d).value <= hf_upper_1(4, n, d).value
            assert hf_lower_3(4, n, d).value <= hf_upper_3(4, n, d).value


def test_rate_examples():
    assert rate(1, 4, 5) == 0
    assert rate(4 ** 6, 4, 6) == pytest.approx(1.0)
    big = 4 * 3 ** 999
    assert rate(big, 4, 1000) == pytest.approx(math.log(3, 4) + (1 - math.log(3, 4)) / 1000)


def test_rate_cap():
    cap = math.log(3, 4)
    for n in range(1, 60):
        for d in range(1, min(5, n) + 1):
            reps = [hf_upper_1(4, n, d)]
            if d <= 3:  # larger radii need exhaustive search
                reps.append(hf_lower_1(4, n, d))
            for rep in reps:
                assert 0 <= rep.rate <= cap + 1 / n + 1e-12


def test_code_bounds_on_example_code():
    up, lo = hf_upper_2(EXAMPLE_CODE), hf_lower_2(EXAMPLE_CODE)
    assert up.kind is BoundKind.HF_UPPER_2 and up.d == 3
    assert up.value == 24 // up.denominator
    assert lo.value == math.ceil(Fraction(24, lo.denominator))


def test_code_bounds_d1_equal_space():
    whole = HfCode.from_symbols([(0, 1), (0, 2)], 3)
    assert hf_upper_2(whole).value == 6
    with pytest.raises(EmptyDistance):
        hf_upper_2(HfCode.from_symbols([(0, 1)], 3))


def test_parameter_errors():
    with pytest.raises(BadParameters):
        classic_sp(4, 3, 4)
    with pytest.raises(BadParameters):
        hf_upper_1(2, 3, 1)
    with pytest.raises(NonpositiveAverage):
        hf_upper_3(4, 3, 3, average=0)
