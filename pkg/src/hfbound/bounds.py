"""Sphere-packing and Gilbert-Varshamov style bounds, classic and HF.

Every bound is a quotient ``numerator / denominator`` rounded down (upper
bounds) or up (lower bounds) with exact integer or rational arithmetic.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction

from .core import count_hf
from .errors import BadParameters, NonpositiveAverage
from .spheres import average_cumulative, extremal_centers

LOWER_ROUNDING_NOTE = (
    "rounded up; the general-q statement of this bound rounds down, the q=4 statement rounds up"
)


class BoundKind(str, enum.Enum):
    CLASSIC_SP = "classic_sp"
    CLASSIC_GV = "classic_gv"
    HF_UPPER_1 = "hf_upper_1"
    HF_UPPER_2 = "hf_upper_2"
    HF_UPPER_3 = "hf_upper_3"
    HF_LOWER_1 = "hf_lower_1"
    HF_LOWER_2 = "hf_lower_2"
    HF_LOWER_3 = "hf_lower_3"

    @property
    def is_upper(self) -> bool:
        return self in (
            BoundKind.CLASSIC_SP,
            BoundKind.HF_UPPER_1,
            BoundKind.HF_UPPER_2,
            BoundKind.HF_UPPER_3,
        )


@dataclass(frozen=True)
class BoundReport:
    kind: BoundKind
    q: int
    n: int
    d: int
    radius_used: int
    numerator: int
    denominator: int | Fraction
    value: int
    rate: float
    notes: str = ""

    @property
    def value_log10(self) -> float:
        return _log(self.value, 10)


def _log(x: int, base: float) -> float:
    # math.log accepts arbitrarily large ints without converting to float first
    return math.log(x) / math.log(base)


def rate(value: int, q: int, n: int) -> float:
    """``(1/n) log_q(value)``; exact integers of any size are accepted."""
    if value < 1:
        raise BadParameters(f"rate needs value >= 1, got {value}")
    if value == 1:
        return 0.0
    return _log(value, q) / n


def quotient_rate(q: int, n: int, denominator: int | Fraction) -> float:
    """Rate of ``q(q-1)^(n-1) / denominator`` computed in the log domain, before rounding."""
    denominator = Fraction(denominator)
    log_num = 1.0 + (n - 1) * math.log(q - 1) / math.log(q)
    log_den = (_log(denominator.numerator, q) - _log(denominator.denominator, q))
    return (log_num - log_den) / n


def _check(q: int, n: int, d: int, min_q: int = 2):
    if q < min_q:
        raise BadParameters(f"q must be >= {min_q}, got {q}")
    if n < 1:
        raise BadParameters(f"n must be >= 1, got {n}")
    if not 1 <= d <= n:
        raise BadParameters(f"need 1 <= d <= n, got d={d}, n={n}")


def _floor_div(num: int, den: int | Fraction) -> int:
    return math.floor(Fraction(num) / Fraction(den))


def _ceil_div(num: int, den: int | Fraction) -> int:
    return math.ceil(Fraction(num) / Fraction(den))


def _report(kind, q, n, d, radius, num, den, notes="") -> BoundReport:
    value = _floor_div(num, den) if kind.is_upper else _ceil_div(num, den)
    return BoundReport(kind, q, n, d, radius, num, den, value, rate(value, q, n), notes)


def hamming_ball(q: int, n: int, radius: int) -> int:
    """Size of an unconstrained Hamming ball: ``sum_r C(n,r) (q-1)^r``."""
    return sum(math.comb(n, r) * (q - 1) ** r for r in range(radius + 1))


def classic_sp(q: int, n: int, d: int) -> BoundReport:
    _check(q, n, d)
    R = (d - 1) // 2
    return _report(BoundKind.CLASSIC_SP, q, n, d, R, q**n, hamming_ball(q, n, R))


def classic_gv(q: int, n: int, d: int) -> BoundReport:
    _check(q, n, d)
    return _report(
        BoundKind.CLASSIC_GV,
        q,
        n,
        d,
        d - 1,
        q**n,
        hamming_ball(q, n, d - 1),
        "lower bound on the maximum code size; rounded up",
    )


def hf_upper_1(q: int, n: int, d: int, budget: int | None = None) -> BoundReport:
    """Whole space over the smallest cumulative sphere at radius ``(d-1)//2``."""
    _check(q, n, d, min_q=3)
    R = (d - 1) // 2
    ext = extremal_centers(q, n, R, budget)
    return _report(
        BoundKind.HF_UPPER_1, q, n, d, R, count_hf(q, n), ext.cumulative_min,
        f"a_min={ext.a_min} ({ext.provenance})",
    )


def hf_lower_1(q: int, n: int, d: int, budget: int | None = None) -> BoundReport:
    _check(q, n, d, min_q=3)
    R = d - 1
    ext = extremal_centers(q, n, R, budget)
    return _report(
        BoundKind.HF_LOWER_1, q, n, d, R, count_hf(q, n), ext.cumulative_max,
        f"a_max={ext.a_max} ({ext.provenance})",
    )


def hf_upper_2(code) -> BoundReport:
    """Upper bound among codes sharing this code's minimizing codeword."""
    from .codes import code_sphere_stats, min_distance

    d = min_distance(code)
    R = (d - 1) // 2
    stats = code_sphere_stats(code, R)
    return _report(
        BoundKind.HF_UPPER_2, code.q, code.n, d, R, count_hf(code.q, code.n), stats.w_min,
        f"c_min={stats.c_min}",
    )


def hf_lower_2(code) -> BoundReport:
    from .codes import code_sphere_stats, min_distance

    d = min_distance(code)
    R = d - 1
    stats = code_sphere_stats(code, R)
    return _report(
        BoundKind.HF_LOWER_2, code.q, code.n, d, R, count_hf(code.q, code.n), stats.w_max,
        f"c_max={stats.c_max}; {LOWER_ROUNDING_NOTE}",
    )


def _average(q, n, R, average, budget):
    if average is None:
        average = average_cumulative(q, n, R, budget=budget)
    average = Fraction(average)
    if average <= 0:
        raise NonpositiveAverage(f"average must be positive, got {average}")
    return average


def hf_upper_3(q: int, n: int, d: int, average: Fraction | None = None, budget: int | None = None) -> BoundReport:
    """``average`` is the mean cumulative sum at radius ``(d-1)//2``; the
    whole-space mean is used when omitted."""
    _check(q, n, d)
    R = (d - 1) // 2
    avg = _average(q, n, R, average, budget)
    return _report(BoundKind.HF_UPPER_3, q, n, d, R, count_hf(q, n), avg, f"average={avg}")


def hf_lower_3(q: int, n: int, d: int, average: Fraction | None = None, budget: int | None = None) -> BoundReport:
    _check(q, n, d)
    R = d - 1
    avg = _average(q, n, R, average, budget)
    return _report(
        BoundKind.HF_LOWER_3, q, n, d, R, count_hf(q, n), avg,
        f"average={avg}; {LOWER_ROUNDING_NOTE}",
    )
