"""Alphabet and word model for homopolymer-free (HF) sequences.

Symbols are the integers ``0..q-1``.  A word is HF when no two adjacent
symbols are equal.  For ``q = 4`` words may also be rendered over the DNA
alphabet with ``0, 1, 2, 3 -> A, C, G, T``.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass, field
from typing import Iterator, Sequence

from .errors import (
    BadEll,
    BadParameters,
    BudgetExceeded,
    EmptyWord,
    LengthMismatch,
    OutOfRange,
    RepeatAt,
)

DNA = "ACGT"


@dataclass(frozen=True, order=True)
class Alphabet:
    q: int

    def __post_init__(self):
        if not isinstance(self.q, int) or self.q < 2:
            raise BadParameters(f"alphabet size must be an integer >= 2, got {self.q!r}")

    def __len__(self) -> int:
        return self.q

    def __iter__(self) -> Iterator[int]:
        return iter(range(self.q))


def _alphabet(alphabet: Alphabet | int) -> Alphabet:
    return alphabet if isinstance(alphabet, Alphabet) else Alphabet(alphabet)


@dataclass(frozen=True, order=True)
class HfWord:
    """A validated HF word.  Instances compare lexicographically by symbols."""

    symbols: tuple[int, ...]
    alphabet: Alphabet = field(compare=True)

    def __post_init__(self):
        symbols = tuple(self.symbols)
        object.__setattr__(self, "symbols", symbols)
        if not symbols:
            raise EmptyWord()
        q = self.alphabet.q
        for i, s in enumerate(symbols):
            if not 0 <= s < q:
                raise OutOfRange(i, s, q)
        for i in range(len(symbols) - 1):
            if symbols[i] == symbols[i + 1]:
                raise RepeatAt(i)

    @property
    def q(self) -> int:
        return self.alphabet.q

    @property
    def n(self) -> int:
        return len(self.symbols)

    def __len__(self) -> int:
        return len(self.symbols)

    def __getitem__(self, i):
        return self.symbols[i]

    def __iter__(self):
        return iter(self.symbols)

    def __str__(self) -> str:
        return format_word(self)


def validate_hf(symbols: Sequence[int], alphabet: Alphabet | int) -> HfWord:
    """Return an :class:`HfWord`, raising ``EmptyWord``, ``OutOfRange`` or ``RepeatAt``.

    Range violations are reported before adjacency violations.
    """
    return HfWord(tuple(int(s) for s in symbols), _alphabet(alphabet))


def is_hf(symbols: Sequence[int]) -> bool:
    return all(symbols[i] != symbols[i + 1] for i in range(len(symbols) - 1))


def count_hf(alphabet: Alphabet | int, n: int) -> int:
    """Number of HF words of length ``n``: ``q * (q-1)**(n-1)``."""
    q = _alphabet(alphabet).q
    if n < 1:
        raise BadParameters(f"length must be >= 1, got {n}")
    return q * (q - 1) ** (n - 1)


def iter_hf_tuples(q: int, n: int) -> Iterator[tuple[int, ...]]:
    """Raw symbol tuples of every HF word, in lexicographic order."""
    if n < 1:
        raise BadParameters(f"length must be >= 1, got {n}")
    # product() is lexicographic; choosing each next symbol from the q-1
    # symbols other than its predecessor keeps that order.
    others = [tuple(c for c in range(q) if c != b) for b in range(q)]
    for first in range(q):
        for steps in itertools.product(range(q - 1), repeat=n - 1):
            word = [first]
            prev = first
            for k in steps:
                prev = others[prev][k]
                word.append(prev)
            yield tuple(word)


def enumerate_hf(alphabet: Alphabet | int, n: int) -> Iterator[HfWord]:
    """Yield every HF word of length ``n`` exactly once, lexicographically."""
    alpha = _alphabet(alphabet)
    for t in iter_hf_tuples(alpha.q, n):
        yield HfWord(t, alpha)


def hamming_distance(a: HfWord | Sequence[int], b: HfWord | Sequence[int]) -> int:
    if len(a) != len(b):
        raise LengthMismatch(f"lengths differ: {len(a)} vs {len(b)}")
    if isinstance(a, HfWord) and isinstance(b, HfWord) and a.q != b.q:
        raise LengthMismatch(f"alphabets differ: q={a.q} vs q={b.q}")
    return sum(x != y for x, y in zip(a, b))


@dataclass(frozen=True)
class CharacteristicSequence:
    """Indicator of equal symbols ``ell`` positions apart.

    ``bits[i]`` (0-based) is 1 when ``a[i-1] == a[i-1+ell]``; ``bits[0]`` is
    always 0.  ``one_based(i)`` reads the same vector with 1-based indices.
    """

    ell: int
    bits: tuple[int, ...]

    def one_based(self, i: int) -> int:
        if 1 <= i <= len(self.bits):
            return self.bits[i - 1]
        return 0

    def __str__(self) -> str:
        return "".join(map(str, self.bits))


def characteristic_sequence(a: HfWord | Sequence[int], ell: int) -> CharacteristicSequence:
    n = len(a)
    if not 1 < ell < n:
        raise BadEll(f"need 1 < ell < n, got ell={ell}, n={n}")
    bits = [0] * n
    for i in range(n - ell):
        if a[i] == a[i + ell]:
            bits[i + 1] = 1
    return CharacteristicSequence(ell, tuple(bits))


def format_word(word: HfWord | Sequence[int], q: int | None = None, dna: bool = False) -> str:
    """Render a word: concatenated digits for q <= 10, comma-separated otherwise."""
    if q is None:
        q = word.q if isinstance(word, HfWord) else max(word) + 1
    if dna:
        if q != 4:
            raise BadParameters("DNA rendering requires q = 4")
        return "".join(DNA[s] for s in word)
    if q <= 10:
        return "".join(str(s) for s in word)
    return ",".join(str(s) for s in word)


def parse_word(text: str, alphabet: Alphabet | int) -> HfWord:
    """Inverse of :func:`format_word`; DNA letters are accepted when q = 4."""
    alpha = _alphabet(alphabet)
    text = text.strip()
    if not text:
        raise EmptyWord()
    if "," in text:
        symbols = [int(tok) for tok in text.split(",")]
    elif alpha.q == 4 and text[0].upper() in DNA and not text[0].isdigit():
        try:
            symbols = [DNA.index(ch) for ch in text.upper()]
        except ValueError as exc:
            raise BadParameters(f"not a DNA word: {text!r}") from exc
    elif alpha.q <= 10:
        symbols = [int(ch) for ch in text]
    else:
        raise BadParameters(f"words over q={alpha.q} must be comma-separated")
    return validate_hf(symbols, alpha)


DEFAULT_BUDGET = 2_000_000


def default_budget() -> int:
    """Enumeration budget in words; ``HFBOUND_BUDGET`` overrides the default."""
    raw = os.environ.get("HFBOUND_BUDGET")
    if raw:
        try:
            return int(raw)
        except ValueError as exc:
            raise BadParameters(f"HFBOUND_BUDGET must be an integer, got {raw!r}") from exc
    return DEFAULT_BUDGET


def check_budget(q: int, n: int, budget: int | None = None) -> int:
    """Return ``count_hf(q, n)`` or raise :class:`BudgetExceeded`."""
    budget = default_budget() if budget is None else budget
    size = count_hf(q, n)
    if size > budget:
        raise BudgetExceeded(size, budget)
    return size
