import warnings
from fractions import Fraction

import numpy as np
import pytest

from hfbound import kernels
from hfbound.core import enumerate_hf, hamming_distance, validate_hf
from hfbound.errors import BudgetExceeded, RadiusOutOfRange, UnsupportedParameters
from hfbound.spheres import (
    average_cumulative,
    caption_average,
    classify_profiles,
    extremal_centers,
    extremal_closed_forms,
    extremal_search,
    h1_closed_form,
    h2_closed_form,
    h2_closed_form_printed,
    pattern_max_word,
    pattern_min_word,
    s_table,
    sphere_profile,
    sphere_size_dp,
    sphere_size_oracle,
)


def W(s, q):
    return validate_hf(tuple(s), q)


def test_s_table_two_symbol_center():
    t = s_table(W((0, 1), 4), 2)
    assert t.row(2) == (3, 0, 2, 2)


def test_s_table_base_rows():
    a = W((2,), 4)
    t = s_table(a, 1)
    assert t.row(1) == (1, 1, 0, 1)
    assert t.row(0) == (0, 0, 1, 0)
    assert s_table(W((0, 1, 2), 4), 3).row(0) == (0, 0, 1, 0)


def test_example_shells_radius_one():
    assert sphere_size_dp(W((0, 1, 2), 5), 1) == 8
    assert sphere_size_dp(W((0, 1, 0), 5), 1) == 9
    assert h1_closed_form(W((0, 1, 2), 5)) == 8
    assert h1_closed_form(W((0, 1, 0), 5)) == 9


def test_example_shell_listing_matches_brute_force():
    # H_1 of 012 over q=5 written out
    center = (0, 1, 2)
    listed = {(2, 1, 2), (3, 1, 2), (4, 1, 2), (0, 3, 2), (0, 4, 2), (0, 1, 0), (0, 1, 3), (0, 1, 4)}
    brute = {w.symbols for w in enumerate_hf(5, 3) if hamming_distance(w.symbols, center) == 1}
    assert brute == listed


def test_profiles_known_rows():
    assert sphere_profile(W((0, 1, 2, 0, 1), 4)).sizes == (1, 7, 29, 79, 127, 81)
    assert sphere_profile(W((0, 1, 0, 1, 0), 4)).sizes == (1, 10, 36, 74, 104, 99)
    assert sphere_size_dp(pattern_max_word(4, 5), 2) == 36
    assert sphere_profile(W((3,), 6)).sizes == (1, 5)


@pytest.mark.parametrize("q", [3, 4, 5])
@pytest.mark.parametrize("n", range(1, 6))
def test_dp_equals_oracle_small(q, n):
    for w in enumerate_hf(q, n):
        prof = sphere_profile(w)
        assert prof.sizes[0] == 1
        assert sum(prof.sizes) == q * (q - 1) ** (n - 1)
        for r in range(n + 1):
            assert sphere_size_dp(w, r) == prof.sizes[r]
    # oracle is slow per call, so spot-check a few centers directly
    for w in list(enumerate_hf(q, n))[:: max(1, q ** n // 20)]:
        for r in range(n + 1):
            assert sphere_size_oracle(w, r) == sphere_size_dp(w, r)


def test_radius_bounds():
    with pytest.raises(RadiusOutOfRange):
        sphere_size_dp(W((0, 1), 3), 3)


def test_oracle_budget():
    with pytest.raises(BudgetExceeded):
        sphere_size_oracle(W((0, 1, 0, 1), 4), 1, budget=10)


def test_closed_forms_examples():
    assert h2_closed_form(W((0, 1, 2, 0), 4)) == 21
    assert h2_closed_form(W((0, 1, 0, 1), 4)) == 22
    with pytest.raises(UnsupportedParameters):
        h1_closed_form(W((0,), 4))


@pytest.mark.parametrize("q", [3, 4, 5, 6])
@pytest.mark.parametrize("n", range(2, 9))
def test_radius_one_closed_form_everywhere(q, n):
    words = kernels.hf_matrix(q, n)
    prof = kernels.profiles_all(words, q)
    for row, p in zip(words.tolist(), prof):
        assert h1_closed_form(W(row, q)) == p[1]


def test_printed_radius_two_expression_disagrees_with_dp():
    bad = 0
    total = 0
    for n in range(3, 7):
        for w in enumerate_hf(4, n):
            total += 1
            bad += h2_closed_form_printed(w) != sphere_size_dp(w, 2)
    assert bad > total // 2


@pytest.mark.parametrize("q,n,r,expected", [(4, 5, 1, (7, 10)), (4, 10, 2, (84, 166)), (5, 3, 2, (29, None))])
def test_pattern_closed_forms(q, n, r, expected):
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        lo, hi = extremal_closed_forms(q, n, r)
    assert lo == expected[0] == sphere_size_dp(pattern_min_word(q, n), r)
    if expected[1] is not None:
        assert hi == expected[1]
    assert hi == sphere_size_dp(pattern_max_word(q, n), r)


def test_pattern_n3_warns():
    with pytest.warns(UserWarning):
        extremal_closed_forms(4, 3, 2)


def test_monotone_in_alphabet_radius_one():
    for n in range(2, 8):
        for make in (pattern_min_word, pattern_max_word):
            sizes = [sphere_size_dp(make(q, n), 1) for q in range(3, 9)]
            assert sizes == sorted(sizes)


def test_extremal_examples():
    e = extremal_centers(4, 4, 1)
    assert (e.cumulative_min, e.cumulative_max) == (7, 9)
    e = extremal_centers(4, 5, 2)
    assert (e.cumulative_min, e.cumulative_max) == (37, 47)
    e = extremal_search(2, 4, 1)
    assert e.cumulative_min == e.cumulative_max


def test_extremal_n3_radius2_period2_is_smaller():
    pat = extremal_centers(4, 3, 2)
    found = extremal_search(4, 3, 2)
    assert (pat.cumulative_min, pat.cumulative_max) == (found.cumulative_min, found.cumulative_max)
    assert pat.cumulative_min < pat.cumulative_max


def test_extremal_search_tie_break_is_lexicographic():
    e = extremal_search(4, 4, 1)
    assert e.a_min.symbols == (0, 1, 2, 0)
    assert e.a_max.symbols == (0, 1, 0, 1)


@pytest.mark.parametrize("q", [4, 5])
def test_extremal_radius_three_by_search(q):
    e = extremal_centers(q, 5, 3)
    assert e.provenance == "search"
    sums = [sum(p[:4]) for p in kernels.profiles_all(kernels.hf_matrix(q, 5), q)]
    assert (e.cumulative_min, e.cumulative_max) == (min(sums), max(sums))


def test_known_averages():
    assert average_cumulative(4, 2, 2) == 12
    assert average_cumulative(4, 3, 2) == Fraction(59, 3)
    assert average_cumulative(4, 5, 2, method="enumeration") == 41
    assert average_cumulative(4, 4, 1, method="enumeration") == Fraction(23, 3)


@pytest.mark.parametrize("q", [4, 5])
@pytest.mark.parametrize("n", range(3, 10))
def test_average_paths_agree(q, n):
    for R in range(3):
        assert average_cumulative(q, n, R, "enumeration") == average_cumulative(q, n, R, "expectation")


def test_caption_average_diverges_from_n4():
    assert caption_average(2) == average_cumulative(4, 2, 2)
    assert caption_average(3) == average_cumulative(4, 3, 2)
    for n in range(4, 10):
        exact = average_cumulative(4, n, 2, "enumeration")
        assert exact == Fraction(8, 9) * (n + 2) ** 2 - Fraction(23, 9)
        assert caption_average(n) - exact == Fraction(258, 9)


def test_classify_counts():
    c4 = classify_profiles(4, 4)
    assert [c.count for c in c4] == [24, 24, 48, 12]
    assert c4[0].profile == (1, 6, 21, 44, 36)
    c5 = classify_profiles(4, 5)
    assert len(c5) == 10 and sum(c.count for c in c5) == 324
    last = [c for c in c5 if c.profile[1:] == (10, 36, 74, 104, 99)]
    assert last and last[0].count == 12


def test_profiles_exact_beyond_int64():
    n = 40  # 4 * 3**39 > 2**62, so the exact-integer path is used
    word = np.array([pattern_min_word(4, n).symbols], dtype=np.uint8)
    arr = kernels.profiles_array(word, 4)
    assert arr.dtype == object
    assert sum(arr[0]) == 4 * 3 ** (n - 1)
    assert arr[0][1] == 2 + n
