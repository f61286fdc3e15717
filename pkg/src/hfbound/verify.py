"""Cross-module invariant sweeps, shared by the CLI ``verify`` command and the tests."""

from __future__ import annotations

import warnings
from dataclasses import asdict, dataclass, field

import numpy as np

from . import kernels
from .codes import HfCode, code_sphere_stats, greedy_construct, min_distance, random_code
from .core import Alphabet, HfWord, count_hf, hamming_distance
from .spheres import (
    extremal_centers,
    extremal_closed_forms,
    extremal_search,
    h1_closed_form,
    h2_closed_form,
    oracle_histograms,
    pattern_max_word,
    pattern_min_word,
)

SUITES = ("oracle", "closed-form", "extremal", "sandwich")


@dataclass
class SuiteResult:
    suite: str
    passed: bool = True
    checked: int = 0
    counterexample: str | None = None
    details: list[str] = field(default_factory=list)

    def fail(self, message: str) -> None:
        if self.passed:
            self.counterexample = message
        self.passed = False

    def as_dict(self) -> dict:
        return asdict(self)


def oracle_suite(qs=(3, 4, 5), max_n: int = 7, budget: int | None = None,
                 random_ns=(8, 9, 10), random_centers: int = 100, seed: int = 0) -> SuiteResult:
    """DP shell sizes against brute-force distance histograms."""
    res = SuiteResult("oracle")
    for q in qs:
        for n in range(1, max_n + 1):
            words = kernels.hf_matrix(q, n)
            dp = np.array(kernels.profiles_all(words, q), dtype=object)
            bf = oracle_histograms(q, n, budget)
            res.checked += dp.size
            bad = np.nonzero((dp != bf).any(axis=1))[0]
            if bad.size:
                i = int(bad[0])
                res.fail(f"q={q} n={n} center={words[i].tolist()}: dp={list(dp[i])} brute={bf[i].tolist()}")
        res.details.append(f"q={q}: n=1..{max_n} full sweep")
    rng = np.random.default_rng(seed)
    for n in random_ns:
        words = kernels.hf_matrix(4, n)
        pick = words[np.sort(rng.choice(len(words), size=random_centers, replace=False))]
        dp = np.array(kernels.profiles_all(pick, 4), dtype=object)
        bf = kernels.distance_histograms(pick, words)
        res.checked += dp.size
        bad = np.nonzero((dp != bf).any(axis=1))[0]
        if bad.size:
            res.fail(f"q=4 n={n} center={pick[int(bad[0])].tolist()}")
    if random_ns:
        res.details.append(f"q=4: {random_centers} random centers at n={list(random_ns)}")
    return res


def closed_form_suite(qs=(4, 5), ns=range(3, 9), pattern_qs=(4, 5, 6), pattern_max_n: int = 10) -> SuiteResult:
    """Radius-1/2 closed forms against DP on every center, and pattern formulas on pattern words."""
    res = SuiteResult("closed-form")
    for q in qs:
        alpha = Alphabet(q)
        for n in ns:
            words = kernels.hf_matrix(q, n)
            profiles = kernels.profiles_all(words, q)
            for row, prof in zip(words.tolist(), profiles):
                w = HfWord(tuple(row), alpha)
                h1, h2 = h1_closed_form(w), h2_closed_form(w)
                res.checked += 2
                if h1 != prof[1] or h2 != prof[2]:
                    res.fail(f"q={q} n={n} center={row}: closed=({h1},{h2}) dp=({prof[1]},{prof[2]})")
    for q in pattern_qs:
        for n in range(1, pattern_max_n + 1):
            lo = kernels.profile_dp(pattern_min_word(q, n).symbols, q)
            hi = kernels.profile_dp(pattern_max_word(q, n).symbols, q)
            for r in (1, 2):
                if r > n:
                    continue
                with warnings.catch_warnings():
                    warnings.simplefilter("ignore")
                    a, b = extremal_closed_forms(q, n, r)
                res.checked += 2
                if (a, b) != (lo[r], hi[r]):
                    res.fail(f"q={q} n={n} r={r}: patterns closed=({a},{b}) dp=({lo[r]},{hi[r]})")
    return res


def extremal_suite(q: int = 4, ns=range(4, 9), radii=(1, 2), budget: int | None = None) -> SuiteResult:
    """Exhaustive extremes against the pattern words."""
    res = SuiteResult("extremal")
    for n in ns:
        for R in radii:
            found = extremal_search(q, n, R, budget)
            pat = extremal_centers(q, n, R)
            lo = sum(kernels.profile_dp(pat.a_min.symbols, q)[: R + 1])
            hi = sum(kernels.profile_dp(pat.a_max.symbols, q)[: R + 1])
            res.checked += 1
            if (found.cumulative_min, found.cumulative_max) != (pat.cumulative_min, pat.cumulative_max) \
                    or (lo, hi) != (pat.cumulative_min, pat.cumulative_max):
                res.fail(
                    f"q={q} n={n} R={R}: search=({found.cumulative_min},{found.cumulative_max}) "
                    f"pattern=({pat.cumulative_min},{pat.cumulative_max}) words=({lo},{hi})"
                )
            res.details.append(f"n={n} R={R}: min {found.cumulative_min} max {found.cumulative_max}")
    return res


def sample_codes(q: int, n: int, count: int, rng: np.random.Generator) -> list[HfCode]:
    """Half uniformly random subsets, half random-order greedy codes (so ``d > 1`` is common)."""
    total = count_hf(q, n)
    codes = []
    for k in range(count):
        if k % 2 == 0 and total >= 2:
            size = int(rng.integers(2, min(total, 12) + 1))
            codes.append(random_code(q, n, size, rng))
        else:
            d = int(rng.integers(1, n + 1))
            code = greedy_construct(q, n, d, order="seeded-shuffle", seed=int(rng.integers(2**32)))
            if len(code) > 2:
                keep = int(rng.integers(2, len(code) + 1))
                pick = sorted(rng.choice(len(code), size=keep, replace=False).tolist())
                code = HfCode(tuple(code.words[i] for i in pick))
            codes.append(code)
    return codes


def _ball_members(center: tuple, words: list[tuple], r: int) -> set:
    return {w for w in words if hamming_distance(center, w) == r}


def sandwich_suite(q: int = 4, ns=range(1, 7), codes_per_point: int = 50, seed: int = 0,
                   disjoint_max_n: int = 5) -> SuiteResult:
    """Sandwich chain, packing count and shell disjointness on random codes."""
    res = SuiteResult("sandwich")
    rng = np.random.default_rng(seed)
    for n in ns:
        total = count_hf(q, n)
        all_words = [tuple(r) for r in kernels.hf_matrix(q, n).tolist()]
        for code in sample_codes(q, n, codes_per_point, rng):
            if len(code) < 2:
                continue
            d = min_distance(code)
            for R in (1, 2):
                if R > n:
                    continue
                ext = extremal_centers(q, n, R)
                st = code_sphere_stats(code, R)
                res.checked += 1
                if not (ext.cumulative_min <= st.w_min <= st.u_bar <= st.w_max <= ext.cumulative_max):
                    res.fail(
                        f"chain n={n} R={R} code={[str(w) for w in code]}: "
                        f"{ext.cumulative_min} <= {st.w_min} <= {st.u_bar} <= {st.w_max} <= {ext.cumulative_max}"
                    )
            packing = code_sphere_stats(code, (d - 1) // 2)
            res.checked += 1
            if sum(packing.cumulative) > total:
                res.fail(f"packing n={n} d={d}: {sum(packing.cumulative)} > {total}")
            if n <= disjoint_max_n and d >= 2:
                symbols = [w.symbols for w in code]
                shells = [
                    {r: _ball_members(c, all_words, r) for r in range(d)} for c in symbols
                ]
                for i in range(len(symbols)):
                    for j in range(i + 1, len(symbols)):
                        for r1 in range(d):
                            for r2 in range(d - r1):
                                res.checked += 1
                                if shells[i][r1] & shells[j][r2]:
                                    res.fail(f"disjointness n={n} d={d} r1={r1} r2={r2}")
    return res


def greedy_suite(q: int = 4, max_n: int = 7, max_d: int = 5, budget: int | None = None) -> SuiteResult:
    """Greedy witnesses: distance, size against the lower bound, and covering."""
    from .bounds import hf_lower_1

    res = SuiteResult("greedy")
    for n in range(1, max_n + 1):
        words = kernels.hf_matrix(q, n)
        for d in range(1, min(max_d, n) + 1):
            code = greedy_construct(q, n, d, budget=budget)
            bound = hf_lower_1(q, n, d).value
            res.checked += 1
            md = min_distance(code) if len(code) > 1 else n + 1
            if md < d or len(code) < bound:
                res.fail(f"n={n} d={d}: size {len(code)} (bound {bound}), distance {md}")
            near = kernels.nearest_distances(words, code.matrix())
            if int(near.max()) > d - 1:
                res.fail(f"n={n} d={d}: code is not covering")
            res.details.append(f"n={n} d={d}: M={len(code)} >= {bound}")
    return res


def run_suite(name: str, budget: int | None = None, seed: int = 0) -> list[SuiteResult]:
    if name == "all":
        return [r for s in SUITES for r in run_suite(s, budget, seed)]
    if name == "oracle":
        return [oracle_suite(budget=budget, seed=seed)]
    if name == "closed-form":
        return [closed_form_suite()]
    if name == "extremal":
        return [extremal_suite(budget=budget)]
    if name == "sandwich":
        return [sandwich_suite(seed=seed)]
    if name == "greedy":
        return [greedy_suite(budget=budget)]
    raise ValueError(f"unknown suite {name!r}")
