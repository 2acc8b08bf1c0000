"""Multiplicative characteristic-class calculus over a graded ring.

The A-hat and Todd classes are evaluated through the logarithms of their
generating functions: ``log((x/2)/sinh(x/2))`` and ``log(x/(1-exp(-x)))`` are
expanded once as exact univariate Taylor series, then applied to the power
sums of the Chern roots (Newton's identities).  This avoids symbolic root
splitting and stays in rational arithmetic end to end.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import DivisionInconsistent, RingMismatch
from .graded import GradedClass, exp_nilpotent

# ---------------------------------------------------------------------------
# exact univariate Taylor series, represented as tuples of Fractions
# ---------------------------------------------------------------------------


def _s_mul(a, b, prec):
    out = [Fraction(0)] * (prec + 1)
    for i, ai in enumerate(a[:prec + 1]):
        if not ai:
            continue
        for j, bj in enumerate(b[:prec + 1 - i]):
            if bj:
                out[i + j] += ai * bj
    return tuple(out)


def _s_inv(a, prec):
    if a[0] != 1:
        raise DivisionInconsistent("series inversion needs constant term 1")
    out = [Fraction(1)] + [Fraction(0)] * prec
    for n in range(1, prec + 1):
        acc = Fraction(0)
        for k in range(1, n + 1):
            ak = a[k] if k < len(a) else Fraction(0)
            acc += ak * out[n - k]
        out[n] = -acc
    return tuple(out)


def _s_log(a, prec):
    """log of a series with constant term 1, via integrating a'/a."""
    inv = _s_inv(a, prec)
    deriv = tuple((k + 1) * (a[k + 1] if k + 1 < len(a) else Fraction(0))
                  for k in range(prec))
    quot = _s_mul(deriv, inv, prec - 1) if prec else ()
    out = [Fraction(0)] * (prec + 1)
    for k, c in enumerate(quot):
        out[k + 1] = c / (k + 1)
    return tuple(out)


@lru_cache(maxsize=None)
def _ahat_log_coeffs(prec: int):
    """Coefficients of log((x/2)/sinh(x/2)) up to degree prec."""
    # sinh(x/2)/(x/2) = sum x^(2k) / (4^k (2k+1)!)
    s = [Fraction(0)] * (prec + 1)
    for k in range(0, prec // 2 + 1):
        s[2 * k] = Fraction(1, 4 ** k * math.factorial(2 * k + 1))
    return tuple(-c for c in _s_log(tuple(s), prec))


@lru_cache(maxsize=None)
def _todd_log_coeffs(prec: int):
    """Coefficients of log(x/(1-exp(-x))) up to degree prec."""
    # (1 - exp(-x))/x = sum (-1)^k x^k / (k+1)!
    s = tuple(Fraction((-1) ** k, math.factorial(k + 1)) for k in range(prec + 1))
    return tuple(-c for c in _s_log(s, prec))


# ---------------------------------------------------------------------------
# Chern data and power sums
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ChernData:
    """Total Chern class of a bundle, with its rank and flavor."""

    rank: int
    total: GradedClass
    flavor: str = "complex"

    def __post_init__(self):
        if self.total.scalar_part() != 1:
            raise DivisionInconsistent("total Chern class must start with 1")
        for d in self.total.degrees():
            if d % 2:
                raise DivisionInconsistent("Chern classes live in even degrees")

    def chern(self, k: int) -> GradedClass:
        return self.total.component(2 * k)

    @property
    def ring(self):
        return self.total.ring


@dataclass(frozen=True)
class PowerSums:
    """Power sums p_1..p_m of the Chern roots; p_k has degree 2k."""

    sums: tuple

    def __getitem__(self, k: int) -> GradedClass:
        return self.sums[k - 1]

    def __len__(self):
        return len(self.sums)


def newton_power_sums(c: ChernData, upto: int | None = None) -> PowerSums:
    """Power sums from Chern classes via Newton's identities.

    p_k - c_1 p_{k-1} + ... + (-1)^(k-1) c_{k-1} p_1 + (-1)^k k c_k = 0.
    """
    ring = c.ring
    m = upto if upto is not None else ring.truncation // 2
    ps = []
    for k in range(1, m + 1):
        acc = ring.zero()
        for j in range(1, k):
            acc = acc + (-1) ** (j - 1) * c.chern(j) * ps[k - j - 1]
        acc = acc - ((-1) ** k * k) * c.chern(k)
        ps.append(acc)
    return PowerSums(tuple(ps))


def chern_from_power_sums(ring, rank: int, ps: PowerSums, upto=None,
                          flavor="complex") -> ChernData:
    """Inverse of :func:`newton_power_sums` (used as a round-trip oracle)."""
    m = upto if upto is not None else ring.truncation // 2
    cs = []
    for k in range(1, m + 1):
        acc = ring.zero()
        for j in range(1, k):
            acc = acc + (-1) ** (j - 1) * cs[k - j - 1] * ps[j]
        acc = acc + (-1) ** (k - 1) * ps[k]
        cs.append(acc * Fraction(1, k))
    total = ring.one()
    for ck in cs:
        total = total + ck
    return ChernData(rank=rank, total=total, flavor=flavor)


def _evaluate_log_series(coeffs, ps: PowerSums, ring) -> GradedClass:
    z = ring.zero()
    for m in range(1, len(coeffs)):
        if m > len(ps):
            break
        if coeffs[m]:
            z = z + coeffs[m] * ps[m]
    return exp_nilpotent(z)


def a_hat(c: ChernData) -> GradedClass:
    """Truncated A-hat class of the (realified) bundle.

    For a line bundle with first Chern class x this is the Taylor truncation
    of (x/2)/sinh(x/2); only even power sums contribute.
    """
    ring = c.ring
    ps = newton_power_sums(c)
    return _evaluate_log_series(_ahat_log_coeffs(ring.truncation // 2), ps, ring)


def todd(c: ChernData) -> GradedClass:
    """Truncated Todd class; equals exp(c1/2) * a_hat(c) identically."""
    if c.flavor != "complex":
        raise DivisionInconsistent("the Todd class needs a complex structure")
    ring = c.ring
    ps = newton_power_sums(c)
    return _evaluate_log_series(_todd_log_coeffs(ring.truncation // 2), ps, ring)


def chern_character(c: ChernData) -> GradedClass:
    """rk + p_1 + p_2/2! + ... with p_k the Newton power sums."""
    if c.flavor != "complex":
        raise DivisionInconsistent("the Chern character needs a complex structure")
    ring = c.ring
    ps = newton_power_sums(c)
    out = ring.scalar(c.rank)
    for k in range(1, len(ps) + 1):
        out = out + ps[k] * Fraction(1, math.factorial(k))
    return out


def total_inverse(total: GradedClass) -> GradedClass:
    """Inverse of a total class 1 + (positive-degree part), truncated."""
    if total.scalar_part() != 1:
        raise DivisionInconsistent("can only invert total classes starting with 1")
    u = total - 1
    out = total.ring.one()
    term = total.ring.one()
    for _ in range(total.ring.truncation // 2 + 1):
        term = term * (-u)
        if term.is_zero():
            break
        out = out + term
    return out


def whitney_quotient(ambient: ChernData, normal: ChernData) -> ChernData:
    """Chern data of the quotient bundle: c(ambient)/c(normal)."""
    if ambient.ring is not normal.ring:
        raise RingMismatch("ambient and normal bundles live in different rings")
    if normal.rank > ambient.rank:
        raise DivisionInconsistent("normal rank exceeds ambient rank")
    total = ambient.total * total_inverse(normal.total)
    return ChernData(rank=ambient.rank - normal.rank, total=total,
                     flavor=ambient.flavor)
