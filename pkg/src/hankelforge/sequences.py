"""Exact generators for the binomial-sum sequence families.

All indices run from 0 and every value is an exact integer:

* ``FRANEL_R``       f(r, n) = sum_k C(n,k)^r                          (r >= 1)
* ``DOMB_M``         d(m, n) = sum_k C(n,k)^m C(2k,k) C(2(n-k),n-k)    (m >= 1)
* ``CLF``            p(n)    = sum_k C(2k,k)^2 C(2(n-k),n-k)^2 / C(n,k)
* ``APERY_B``        b(n)    = sum_k C(n,k)^2 C(n+k,k)
* ``APERY_A``        a(n)    = sum_k C(n,k)^2 C(n+k,k)^2
* ``CENTRAL_BINOM``  c(n)    = C(2n,n)
* ``G_SUM``          g(n)    = sum_k C(n,k)^2 C(2k,k)

The classical Franel numbers are ``FRANEL_R`` with r=3 and the Domb numbers
are ``DOMB_M`` with m=2.  The CLF (Catalan-Larcombe-French) summand division
is provably integral, so it is performed with a checked exact division.

``DOMB_M`` (m=2) and ``APERY_B`` also satisfy three-term recurrences, exposed
through :func:`term_by_recurrence` as an independent route to the same values:

    n^3 d(n) = 2(2n-1)(5n^2-5n+2) d(n-1) - 64(n-1)^3 d(n-2)
    n^2 b(n) = (11n^2-11n+3) b(n-1) + (n-1)^2 b(n-2)

All functions here are pure; the only shared state is the binomial row cache,
which is internally locked.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass

from . import binomial
from .exact import exact_div


class Family(enum.Enum):
    FRANEL_R = "franel"
    DOMB_M = "domb"
    CLF = "clf"
    APERY_B = "apery-b"
    APERY_A = "apery-a"
    CENTRAL_BINOM = "central"
    G_SUM = "g"


_PARAMETRIC = (Family.FRANEL_R, Family.DOMB_M)


@dataclass(frozen=True)
class SequenceId:
    """A sequence family plus its integer parameter (r or m, where used)."""

    family: Family
    param: int = 0

    def __post_init__(self) -> None:
        if self.family in _PARAMETRIC:
            if self.param < 1:
                raise ValueError(f"{self.family.value} requires a parameter >= 1")
        elif self.param != 0:
            raise ValueError(f"{self.family.value} takes no parameter")

    def label(self) -> str:
        if self.family is Family.FRANEL_R:
            return f"franel[r={self.param}]"
        if self.family is Family.DOMB_M:
            return f"domb[m={self.param}]"
        return self.family.value


@dataclass(frozen=True)
class SequenceTerms:
    """An id plus the exact terms at positions ``0..len-1``."""

    id: SequenceId
    terms: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.terms)


def franel(r: int = 3) -> SequenceId:
    return SequenceId(Family.FRANEL_R, r)


def domb(m: int = 2) -> SequenceId:
    return SequenceId(Family.DOMB_M, m)


CLF = SequenceId(Family.CLF)
APERY_B = SequenceId(Family.APERY_B)
APERY_A = SequenceId(Family.APERY_A)
CENTRAL_BINOM = SequenceId(Family.CENTRAL_BINOM)
G_SUM = SequenceId(Family.G_SUM)


def term(seq: SequenceId, n: int) -> int:
    """Exact value of the defining sum at index ``n``."""
    if n < 0:
        raise ValueError("index must be nonnegative")
    fam = seq.family
    if fam is Family.CENTRAL_BINOM:
        return binomial.binom(2 * n, n)
    row = binomial.row(n)
    if fam is Family.FRANEL_R:
        r = seq.param
        return sum(c**r for c in row)
    if fam is Family.DOMB_M:
        m = seq.param
        return sum(
            row[k] ** m * binomial.binom(2 * k, k) * binomial.binom(2 * (n - k), n - k)
            for k in range(n + 1)
        )
    if fam is Family.CLF:
        total = 0
        for k in range(n + 1):
            num = binomial.binom(2 * k, k) ** 2 * binomial.binom(2 * (n - k), n - k) ** 2
            total += exact_div(num, row[k], "CLF summand")
        return total
    if fam is Family.APERY_B:
        return sum(row[k] ** 2 * binomial.binom(n + k, k) for k in range(n + 1))
    if fam is Family.APERY_A:
        return sum(row[k] ** 2 * binomial.binom(n + k, k) ** 2 for k in range(n + 1))
    if fam is Family.G_SUM:
        return sum(row[k] ** 2 * binomial.binom(2 * k, k) for k in range(n + 1))
    raise ValueError(f"unknown family {fam!r}")


def prefix(seq: SequenceId, n_max: int) -> SequenceTerms:
    """Terms ``0..n_max`` in one pass over the shared binomial tables."""
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    return SequenceTerms(seq, tuple(term(seq, i) for i in range(n_max + 1)))


def term_by_recurrence(family: Family, n: int) -> int:
    """Value at ``n`` via the three-term recurrence (DOMB_M and APERY_B only).

    Seeded with the n=0,1 summation values; every division by the leading
    coefficient is checked exact.
    """
    if n < 0:
        raise ValueError("index must be nonnegative")
    if family is Family.DOMB_M:
        seq = domb(2)
        if n <= 1:
            return term(seq, n)
        prev, cur = term(seq, 0), term(seq, 1)
        for m in range(2, n + 1):
            num = 2 * (2 * m - 1) * (5 * m * m - 5 * m + 2) * cur - 64 * (m - 1) ** 3 * prev
            prev, cur = cur, exact_div(num, m**3, "Domb recurrence")
        return cur
    if family is Family.APERY_B:
        if n <= 1:
            return term(APERY_B, n)
        prev, cur = term(APERY_B, 0), term(APERY_B, 1)
        for k in range(2, n + 1):
            num = (11 * k * k - 11 * k + 3) * cur + (k - 1) ** 2 * prev
            prev, cur = cur, exact_div(num, k * k, "b recurrence")
        return cur
    raise ValueError("recurrence is available for DOMB_M and APERY_B only")
