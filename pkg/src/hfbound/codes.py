"""HF code container, per-code sphere statistics and greedy construction."""

from __future__ import annotations

import functools
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from . import kernels
from .core import (
    Alphabet,
    HfWord,
    _alphabet,
    check_budget,
    format_word,
    hamming_distance,
    parse_word,
    validate_hf,
)
from .errors import BadParameters, EmptyCode, EmptyDistance, HfError, LengthMismatch


@dataclass(frozen=True)
class HfCode:
    """An ordered set of distinct HF words of one length over one alphabet."""

    words: tuple[HfWord, ...]

    def __post_init__(self):
        words = tuple(self.words)
        object.__setattr__(self, "words", words)
        if not words:
            return
        n, q = words[0].n, words[0].q
        for w in words:
            if w.n != n or w.q != q:
                raise LengthMismatch("all codewords must share length and alphabet")
        if len(set(words)) != len(words):
            raise BadParameters("codewords must be distinct")

    @classmethod
    def from_symbols(cls, rows: Iterable[Sequence[int]], alphabet: Alphabet | int) -> "HfCode":
        alpha = _alphabet(alphabet)
        return cls(tuple(validate_hf(r, alpha) for r in rows))

    @property
    def n(self) -> int:
        if not self.words:
            raise EmptyCode("empty code has no length")
        return self.words[0].n

    @property
    def q(self) -> int:
        if not self.words:
            raise EmptyCode("empty code has no alphabet")
        return self.words[0].q

    @property
    def size(self) -> int:
        return len(self.words)

    def __len__(self) -> int:
        return len(self.words)

    def __iter__(self):
        return iter(self.words)

    def matrix(self) -> np.ndarray:
        return np.array([w.symbols for w in self.words], dtype=np.uint8).reshape(len(self.words), -1)

    @functools.cached_property
    def min_distance(self) -> int:
        return min_distance(self)


def min_distance(code: HfCode) -> int:
    if len(code.words) < 2:
        raise EmptyDistance("minimum distance needs at least two codewords")
    cached = code.__dict__.get("min_distance")
    if cached is not None:
        return cached
    return kernels.min_pairwise_distance(code.matrix())


@dataclass(frozen=True)
class CodeSphereStats:
    radius: int
    cumulative: tuple[int, ...]  # per codeword, in code order
    c_min: HfWord
    c_max: HfWord
    w_min: int
    w_max: int
    u_bar: Fraction


def code_sphere_stats(code: HfCode, R: int) -> CodeSphereStats:
    """Cumulative sphere sums up to ``R`` for every codeword; ties break lexicographically."""
    if not code.words:
        raise EmptyCode("no codewords")
    if not 0 <= R <= code.n:
        raise BadParameters(f"radius {R} outside 0..{code.n}")
    profiles = kernels.profiles_all(code.matrix(), code.q)
    sums = tuple(sum(p[: R + 1]) for p in profiles)
    pairs = list(zip(sums, code.words))
    w_min, c_min = min(pairs)
    w_max = max(sums)
    c_max = min(w for s, w in pairs if s == w_max)
    return CodeSphereStats(R, sums, c_min, c_max, w_min, w_max, Fraction(sum(sums), len(sums)))


def greedy_construct(
    alphabet: Alphabet | int,
    n: int,
    d: int,
    order: str = "lexicographic",
    seed: int = 0,
    budget: int | None = None,
) -> HfCode:
    """Scan ``C_{q,n}`` keeping every word at distance >= d from those already kept.

    ``order`` is ``"lexicographic"`` or ``"seeded-shuffle"`` (a permutation
    drawn from ``seed``).  The result is maximal: every HF word lies within
    distance ``d - 1`` of some codeword.
    """
    alpha = _alphabet(alphabet)
    if not 1 <= d <= n:
        raise BadParameters(f"need 1 <= d <= n, got d={d}, n={n}")
    check_budget(alpha.q, n, budget)
    words = kernels.hf_matrix(alpha.q, n)
    if order == "seeded-shuffle":
        words = words[np.random.default_rng(seed).permutation(len(words))]
    elif order != "lexicographic":
        raise BadParameters(f"unknown order {order!r}")
    idx = kernels.greedy_indices(words, d)
    return HfCode(tuple(HfWord(tuple(int(s) for s in words[i]), alpha) for i in idx))


def random_code(alphabet: Alphabet | int, n: int, size: int, rng: np.random.Generator) -> HfCode:
    """A uniformly random subset of ``C_{q,n}`` with ``size`` words."""
    alpha = _alphabet(alphabet)
    words = kernels.hf_matrix(alpha.q, n)
    if not 1 <= size <= len(words):
        raise BadParameters(f"size must be in 1..{len(words)}")
    pick = np.sort(rng.choice(len(words), size=size, replace=False))
    return HfCode(tuple(HfWord(tuple(int(s) for s in words[i]), alpha) for i in pick))


# --------------------------------------------------------------------------
# verification


@dataclass
class CodeVerification:
    n: int
    M: int
    d: int
    q: int
    violations: list[str] = field(default_factory=list)
    measured_d: int | None = None
    witness: tuple[int, int] | None = None  # indices of a closest pair

    @property
    def accepted(self) -> bool:
        return not self.violations

    def summary(self) -> str:
        head = f"({self.n},{self.M},{self.d})_{self.q}: " + ("accept" if self.accepted else "reject")
        return "\n".join([head] + [f"  - {v}" for v in self.violations])


def verify_code(words: Sequence, n: int, M: int, d: int, q: int) -> CodeVerification:
    """Check a word listing against a claimed ``(n, M, d)_q``; violations are collected, not raised."""
    report = CodeVerification(n, M, d, q)
    parsed: list[tuple[int, ...]] = []
    for i, w in enumerate(words):
        try:
            word = parse_word(w, q) if isinstance(w, str) else validate_hf(w, q)
        except HfError as exc:
            report.violations.append(f"word {i}: {type(exc).__name__}: {exc}")
            continue
        if word.n != n:
            report.violations.append(f"word {i}: length {word.n} != {n}")
            continue
        parsed.append(word.symbols)
    if len(words) != M:
        report.violations.append(f"size {len(words)} != claimed M={M}")
    seen: dict[tuple[int, ...], int] = {}
    for i, w in enumerate(parsed):
        if w in seen:
            report.violations.append(f"duplicate word {format_word(w, q)} at {seen[w]} and {i}")
        seen.setdefault(w, i)
    if len(parsed) >= 2:
        best, pair = n + 1, None
        for i in range(len(parsed)):
            for j in range(i + 1, len(parsed)):
                dist = hamming_distance(parsed[i], parsed[j])
                if dist < best:
                    best, pair = dist, (i, j)
        report.measured_d, report.witness = best, pair
        if best != d:
            a, b = (format_word(parsed[k], q) for k in pair)
            report.violations.append(f"minimum distance {best} != claimed d={d} (witness {a}, {b})")
    return report


def verify_hfcode(code: HfCode, d_min: int) -> CodeVerification:
    """Like :func:`verify_code` but with ``d_min`` as a lower bound on the distance."""
    rep = CodeVerification(code.n, len(code), d_min, code.q)
    if len(code) >= 2:
        rep.measured_d = min_distance(code)
        if rep.measured_d < d_min:
            rep.violations.append(f"minimum distance {rep.measured_d} < {d_min}")
    return rep


# --------------------------------------------------------------------------
# file format


def dump_code(code: HfCode, dna: bool = False) -> str:
    lines = [f"# q={code.q} n={code.n}"]
    lines += [format_word(w, code.q, dna=dna) for w in code.words]
    return "\n".join(lines) + "\n"


def load_code(text: str) -> HfCode:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines or not lines[0].startswith("#"):
        raise BadParameters("code file must start with '# q=<q> n=<n>'")
    header = dict(tok.split("=", 1) for tok in lines[0].lstrip("#").split())
    try:
        q, n = int(header["q"]), int(header["n"])
    except (KeyError, ValueError) as exc:
        raise BadParameters(f"bad header {lines[0]!r}") from exc
    words = tuple(parse_word(ln, q) for ln in lines[1:] if not ln.startswith("#"))
    for w in words:
        if w.n != n:
            raise LengthMismatch(f"word {w} has length {w.n}, header says {n}")
    return HfCode(words)


def read_code(path: str | Path) -> HfCode:
    return load_code(Path(path).read_text())


def write_code(code: HfCode, path: str | Path, dna: bool = False) -> None:
    Path(path).write_text(dump_code(code, dna=dna))
