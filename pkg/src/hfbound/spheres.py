"""HF sphere sizes: DP tables, closed forms, extremal centers and averages.

``|H_r(a)|`` counts the HF words at Hamming distance *exactly* ``r`` from
the center ``a`` (a shell, not a ball).  "Cumulative" sums add the shells
``r = 0..R``.
"""

from __future__ import annotations

import warnings
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from . import kernels
from .core import (
    Alphabet,
    HfWord,
    _alphabet,
    characteristic_sequence,
    check_budget,
    count_hf,
    iter_hf_tuples,
    validate_hf,
)
from .errors import BadParameters, RadiusOutOfRange, UnsupportedParameters, UnsupportedRadius


def _word(center, q: int | None = None) -> HfWord:
    if isinstance(center, HfWord):
        return center
    if q is None:
        raise BadParameters("raw symbol sequences need an explicit q")
    return validate_hf(center, q)


# --------------------------------------------------------------------------
# last-symbol DP


@dataclass(frozen=True)
class STable:
    """Counts ``S(k, r, b)`` of HF words of length ``k`` ending in ``b`` at
    distance ``r`` from the length-``k`` prefix of ``center``.
    """

    center: HfWord
    max_radius: int
    # entries[k-1][r][b] for k = 1..n, r = 0..max_radius
    entries: tuple[tuple[tuple[int, ...], ...], ...]

    def __call__(self, k: int, r: int, b: int) -> int:
        if not 1 <= k <= self.center.n:
            raise BadParameters(f"prefix length {k} outside 1..{self.center.n}")
        if not 0 <= b < self.center.q:
            raise BadParameters(f"symbol {b} outside alphabet")
        if r > k:
            return 0
        if not 0 <= r <= self.max_radius:
            raise RadiusOutOfRange(f"radius {r} outside 0..{self.max_radius}")
        return self.entries[k - 1][r][b]

    def row(self, r: int, k: int | None = None) -> tuple[int, ...]:
        """``S(k, r, b)`` for every ``b``; ``k`` defaults to the full length."""
        k = self.center.n if k is None else k
        return tuple(self(k, r, b) for b in range(self.center.q))


def s_table(center: HfWord, max_radius: int) -> STable:
    """Fill the last-symbol table by dynamic programming over prefix length.

    Row ``r = 0`` is ``S(k, 0, b) = [b == a_k]``; for ``r >= 1`` a word ending
    in ``b`` extends a shorter word ending in any ``c != b``, at the same
    distance when ``b == a_k`` and one closer otherwise.
    """
    n, q = center.n, center.q
    if not 0 <= max_radius <= n:
        raise RadiusOutOfRange(f"radius {max_radius} outside 0..{n}")
    a = center.symbols
    R = max_radius
    rows = []
    cur = [[1 if b == a[0] else 0 for b in range(q)]]
    if R >= 1:
        cur.append([0 if b == a[0] else 1 for b in range(q)])
    cur += [[0] * q for _ in range(R + 1 - len(cur))]
    rows.append(tuple(tuple(r) for r in cur))
    for k in range(1, n):
        ak = a[k]
        tot = [sum(r) for r in cur]
        nxt = [[0] * q for _ in range(R + 1)]
        for r in range(min(k + 1, R) + 1):
            for b in range(q):
                if b == ak:
                    nxt[r][b] = tot[r] - cur[r][b]
                elif r:
                    nxt[r][b] = tot[r - 1] - cur[r - 1][b]
        cur = nxt
        rows.append(tuple(tuple(r) for r in cur))
    return STable(center, R, tuple(rows))


def sphere_size_dp(center: HfWord, r: int) -> int:
    if not 0 <= r <= center.n:
        raise RadiusOutOfRange(f"radius {r} outside 0..{center.n}")
    return sum(s_table(center, r).row(r))


@dataclass(frozen=True)
class SphereProfile:
    center: HfWord
    sizes: tuple[int, ...]

    def cumulative(self, R: int) -> int:
        return sum(self.sizes[: R + 1])

    def __getitem__(self, r: int) -> int:
        return self.sizes[r]


def sphere_profile(center: HfWord) -> SphereProfile:
    """All shell sizes ``r = 0..n`` (the kernel runs the same recurrence as :func:`s_table`)."""
    return SphereProfile(center, tuple(kernels.profile_dp(center.symbols, center.q)))


def sphere_size_oracle(center: HfWord, r: int, budget: int | None = None) -> int:
    """Count words at distance exactly ``r`` by scanning the whole space."""
    n, q = center.n, center.q
    if not 0 <= r <= n:
        raise RadiusOutOfRange(f"radius {r} outside 0..{n}")
    check_budget(q, n, budget)
    a = center.symbols
    return sum(1 for w in iter_hf_tuples(q, n) if sum(x != y for x, y in zip(a, w)) == r)


def oracle_histograms(alphabet: Alphabet | int, n: int, budget: int | None = None) -> np.ndarray:
    """Brute-force shell sizes for every center of ``C_{q,n}``, rows in lexicographic order."""
    q = _alphabet(alphabet).q
    check_budget(q, n, budget)
    words = kernels.hf_matrix(q, n)
    return kernels.distance_histograms(words, words)


# --------------------------------------------------------------------------
# closed forms


def _tau_vectors(a: Sequence[int]) -> tuple[list[int], list[int]]:
    """1-based τ^(2), τ^(3) padded with zeros (index 0 unused)."""
    n = len(a)
    t2 = [0] * (n + 2)
    t3 = [0] * (n + 2)
    if n > 2:
        t2[1 : n + 1] = characteristic_sequence(a, 2).bits
    if n > 3:
        t3[1 : n + 1] = characteristic_sequence(a, 3).bits
    return t2, t3


def h1_closed_form(center: HfWord) -> int:
    """``2 + n(q-3) + sum_{i=2}^{n-1} τ2_i``."""
    n, q = center.n, center.q
    if n < 2:
        raise UnsupportedParameters("closed form needs n >= 2; use sphere_size_dp for n = 1")
    t2, _ = _tau_vectors(center.symbols)
    return 2 + n * (q - 3) + sum(t2[2:n])


def _h2_from_tau(q: int, n: int, t2, t3):
    """Radius-2 shell size from τ vectors (1-based, any numeric type).

    Adjacent changed positions ``(i, i+1)`` contribute the first line; a
    changed pair at least two apart contributes ``f(i) * f(j)``, where
    ``f`` counts the admissible replacements at one position.  Only products
    of τ2 entries two or more apart appear, which keeps the expectation
    path exact.
    """

    def f(p):
        return (q - 3) + t2[p]

    adjacent = (
        2 * (q - 2) ** 2
        + 2
        + (n - 3) * ((q - 2) * (q - 3) + 2)
        - 2 * sum(t2[k] for k in range(2, n))
        - sum(t3[k] for k in range(2, n - 1))
    )
    both_ends = (q - 2) ** 2
    first_with_inner = (q - 2) * sum(f(j) for j in range(3, n))
    last_with_inner = (q - 2) * sum(f(i) for i in range(2, n - 1))
    inner_pairs = 0
    tail = 0  # sum of f(j) for j in i+2 .. n-1
    for i in range(n - 3, 1, -1):
        tail += f(i + 2)
        inner_pairs += f(i) * tail
    return adjacent + both_ends + first_with_inner + last_with_inner + inner_pairs


def h2_closed_form(center: HfWord) -> int:
    """Radius-2 shell size in terms of τ^(2) and τ^(3); requires ``n >= 3``."""
    n, q = center.n, center.q
    if n < 3:
        raise UnsupportedParameters("closed form needs n >= 3")
    t2, t3 = _tau_vectors(center.symbols)
    return _h2_from_tau(q, n, t2, t3)


def h2_closed_form_printed(center: HfWord) -> int:
    """The published radius-2 expression evaluated literally, kept for comparison.

    It differs from :func:`h2_closed_form` in two terms: the last-position
    pairs reuse the first-position sum over ``j = 3..n-1``, and the inner
    pairs weight position ``i`` by ``(q-3) - τ2_i``.  It disagrees with
    brute force on most centers.
    """
    n, q = center.n, center.q
    if n < 3:
        raise UnsupportedParameters("closed form needs n >= 3")
    t2, t3 = _tau_vectors(center.symbols)

    def f(p):
        return (q - 3) + t2[p]

    return (
        3 * (q - 2) ** 2
        + 2
        + (n - 3) * ((q - 2) * (q - 3) + 2)
        - 2 * sum(t2[k] for k in range(2, n))
        - sum(t3[k] for k in range(2, n - 1))
        + 2 * (q - 2) * sum(f(j) for j in range(3, n))
        + sum(((q - 3) - t2[i]) * sum(f(j) for j in range(i + 2, n)) for i in range(2, n - 2))
    )


def pattern_min_word(alphabet: Alphabet | int, n: int) -> HfWord:
    """Period-3 word ``0,1,2,0,1,2,...`` (the minimizing pattern for ``R <= 2``)."""
    alpha = _alphabet(alphabet)
    if alpha.q < 3 and n > 2:
        raise UnsupportedParameters("a period-3 pattern needs q >= 3")
    return HfWord(tuple(i % 3 for i in range(n)), alpha)


def pattern_max_word(alphabet: Alphabet | int, n: int) -> HfWord:
    """Period-2 word ``0,1,0,1,...`` (the maximizing pattern for ``R <= 2``)."""
    return HfWord(tuple(i % 2 for i in range(n)), _alphabet(alphabet))


def _min_pattern_size(q: int, n: int, r: int) -> int:
    if r == 1:
        return (q - 3) * n + 2
    if n == 2:
        return (q - 1) * (q - 2) + 1
    if n < 3:
        raise UnsupportedParameters(f"no radius-2 branch for n={n}")
    if n == 3:
        warnings.warn(
            "the period-3 constraint is vacuous for n < 4; value is for a_1 != a_3",
            stacklevel=3,
        )
    num = (n - 4) * (n - 3) * (q - 3) ** 2
    return num // 2 + n * (3 * q * q - 15 * q + 19) - 6 * q * q + 33 * q - 43


def _max_pattern_size(q: int, n: int, r: int) -> int:
    if r == 1:
        return q - 1 if n == 1 else n * (q - 2)
    if n == 2:
        return q * q - 3 * q + 3
    if n < 3:
        raise UnsupportedParameters(f"no radius-2 branch for n={n}")
    num = (n - 4) * (n - 3) * (q - 2) ** 2
    return num // 2 + n * (3 * q * q - 13 * q + 14) - 6 * q * q + 27 * q - 30


def extremal_closed_forms(alphabet: Alphabet | int, n: int, r: int) -> tuple[int, int]:
    """Shell sizes ``(|H_r(a_min)|, |H_r(a_max)|)`` for the period-3/period-2 patterns, r in {1, 2}."""
    q = _alphabet(alphabet).q
    if r not in (1, 2):
        raise UnsupportedParameters("closed forms exist for r = 1 and r = 2 only")
    if q < 4:
        raise UnsupportedParameters("the minimizing-pattern formula needs q >= 4")
    if n < 1:
        raise UnsupportedParameters("n must be >= 1")
    return _min_pattern_size(q, n, r), _max_pattern_size(q, n, r)


# --------------------------------------------------------------------------
# extremal centers


@dataclass(frozen=True)
class ExtremalCenters:
    a_min: HfWord
    a_max: HfWord
    radius: int
    cumulative_min: int
    cumulative_max: int
    provenance: str  # "pattern" or "search"


def _cumsum_rows(profiles: np.ndarray, R: int) -> list[int]:
    return [int(sum(int(v) for v in row[: R + 1])) for row in profiles]


def extremal_search(alphabet: Alphabet | int, n: int, R: int, budget: int | None = None) -> ExtremalCenters:
    """Exhaustive argmin/argmax of the cumulative sum up to ``R``; ties go to the
    lexicographically smallest word."""
    alpha = _alphabet(alphabet)
    q = alpha.q
    if not 0 <= R <= n:
        raise RadiusOutOfRange(f"radius {R} outside 0..{n}")
    check_budget(q, n, budget)
    words = kernels.hf_matrix(q, n)
    prof = kernels.profiles_array(words, q)
    if prof.dtype == object:
        sums = _cumsum_rows(prof, R)
        i_min = min(range(len(sums)), key=lambda i: (sums[i], i))
        i_max = min(range(len(sums)), key=lambda i: (-sums[i], i))
        lo, hi = sums[i_min], sums[i_max]
    else:
        sums = prof[:, : R + 1].sum(axis=1)
        i_min, i_max = int(np.argmin(sums)), int(np.argmax(sums))  # first occurrence
        lo, hi = int(sums[i_min]), int(sums[i_max])
    return ExtremalCenters(
        HfWord(tuple(int(s) for s in words[i_min]), alpha),
        HfWord(tuple(int(s) for s in words[i_max]), alpha),
        R,
        lo,
        hi,
        "search",
    )


def _pattern_cumulative(q: int, n: int, R: int) -> tuple[int, int]:
    lo = 1
    hi = 1
    for r in range(1, R + 1):
        if r > n:
            break
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            a, b = extremal_closed_forms(q, n, r)
        lo += a
        hi += b
    return lo, hi


def extremal_centers(
    alphabet: Alphabet | int, n: int, R: int, budget: int | None = None, verify: bool = False
) -> ExtremalCenters:
    """Whole-space extremes of the cumulative sum up to ``R``.

    Uses the period-3/period-2 pattern words for ``q >= 4`` and ``R <= 2``
    and exhaustive search otherwise (or when ``verify`` is set).  For
    ``n <= 3`` every HF word is a relabeling of one of the two patterns, and
    at ``n = 3, R = 2`` the period-2 word is the smaller one, so the two
    pattern sums are ordered rather than assigned.
    """
    alpha = _alphabet(alphabet)
    q = alpha.q
    if not 0 <= R <= n:
        raise RadiusOutOfRange(f"radius {R} outside 0..{n}")
    if verify or q < 4 or R > 2:
        return extremal_search(alpha, n, R, budget)
    p3, p2 = pattern_min_word(alpha, n), pattern_max_word(alpha, n)
    s3, s2 = _pattern_cumulative(q, n, R)
    if n <= 3 and s2 < s3:
        return ExtremalCenters(p2, p3, R, s2, s3, "pattern")
    return ExtremalCenters(p3, p2, R, s3, s2, "pattern")


# --------------------------------------------------------------------------
# averages


def _small_profile(q: int, n: int) -> list[int]:
    # every center of length 1 or 2 is equivalent under relabeling
    if n == 1:
        return [1, q - 1]
    return [1, 2 * (q - 2), q * q - 3 * q + 3]


def _expected_cumulative(q: int, n: int, R: int) -> Fraction:
    if R > 2:
        raise UnsupportedRadius("the expectation path covers R <= 2")
    if n <= 2:
        return Fraction(sum(_small_profile(q, n)[: R + 1]))
    total = Fraction(1)
    p2 = Fraction(1, q - 1)  # P(a_i == a_{i+2})
    p3 = Fraction(q - 2, (q - 1) ** 2)  # P(a_i == a_{i+3})
    if R >= 1:
        total += 2 + n * (q - 3) + (n - 2) * p2
    if R >= 2:
        t2 = [Fraction(0)] * 2 + [p2] * (n - 2) + [Fraction(0)] * 2
        t3 = [Fraction(0)] * 2 + [p3] * (n - 3) + [Fraction(0)] * 3
        total += _h2_from_tau(q, n, t2, t3)
    return total


def _enumerated_cumulative(q: int, n: int, R: int, budget: int | None) -> Fraction:
    size = check_budget(q, n, budget)
    prof = kernels.profiles_array(kernels.hf_matrix(q, n), q)
    if prof.dtype == object:
        total = sum(_cumsum_rows(prof, R))
    else:
        total = int(prof[:, : R + 1].sum())
    return Fraction(total, size)


def average_cumulative(
    alphabet: Alphabet | int,
    n: int,
    R: int,
    method: str = "auto",
    budget: int | None = None,
) -> Fraction:
    """Mean over all of ``C_{q,n}`` of the cumulative sum up to ``R``, exact.

    ``method`` is ``"enumeration"``, ``"expectation"`` (R <= 2, any n) or
    ``"auto"`` (expectation when R <= 2, enumeration otherwise).
    """
    q = _alphabet(alphabet).q
    if not 0 <= R <= n:
        raise RadiusOutOfRange(f"radius {R} outside 0..{n}")
    if method == "auto":
        method = "expectation" if R <= 2 else "enumeration"
    if method == "expectation":
        return _expected_cumulative(q, n, R)
    if method == "enumeration":
        return _enumerated_cumulative(q, n, R, budget)
    raise BadParameters(f"unknown method {method!r}")


def caption_average(n: int) -> Fraction:
    """The published q=4, radius-2 average curve: 12, 59/3, then 8/9 (n+2)^2 + 235/9.

    Matches the exact average only for ``n <= 3``.
    """
    if n == 2:
        return Fraction(12)
    if n == 3:
        return Fraction(59, 3)
    if n >= 4:
        return Fraction(8, 9) * (n + 2) ** 2 + Fraction(235, 9)
    raise BadParameters("the caption formula starts at n = 2")


# --------------------------------------------------------------------------
# classification


@dataclass(frozen=True)
class ProfileClass:
    profile: tuple[int, ...]
    members: tuple[HfWord, ...]

    @property
    def count(self) -> int:
        return len(self.members)


def classify_profiles(alphabet: Alphabet | int, n: int, budget: int | None = None) -> list[ProfileClass]:
    """Group ``C_{q,n}`` by full shell profile, ordered by increasing profile."""
    alpha = _alphabet(alphabet)
    q = alpha.q
    check_budget(q, n, budget)
    words = kernels.hf_matrix(q, n)
    profiles = kernels.profiles_all(words, q)
    groups: dict[tuple[int, ...], list[HfWord]] = {}
    for row, prof in zip(words.tolist(), profiles):
        groups.setdefault(tuple(prof), []).append(HfWord(tuple(row), alpha))
    return [ProfileClass(p, tuple(groups[p])) for p in sorted(groups)]


def profile_counts(alphabet: Alphabet | int, n: int, budget: int | None = None) -> Counter:
    return Counter({c.profile: c.count for c in classify_profiles(alphabet, n, budget)})
