"""Exact counts of equations and irreducible components.

All results are Python ints or :class:`fractions.Fraction`, so nothing
overflows or rounds.  Decimal strings are produced only by
:func:`decimal_string`.
"""

from __future__ import annotations

from dataclasses import dataclass
from decimal import Decimal, localcontext
from fractions import Fraction
from math import comb, factorial

from .core import Equation, Term
from .errors import ContextError, GuardError

MAX_ENUM_VARS = 12


@dataclass(frozen=True)
class KIndex:
    """A feasible (k1, k2) pair for n variables.

    k1 + k2 <= n, and (0, n), (n, 0) are excluded: one side of an equation
    can never be empty.
    """

    k1: int
    k2: int
    n: int

    def __post_init__(self):
        k1, k2, n = self.k1, self.k2, self.n
        if min(k1, k2) < 0 or n < 1 or k1 + k2 > n or (k1, k2) in ((0, n), (n, 0)):
            raise ContextError(f"({k1}, {k2}) is not a feasible index pair for n={n}")


def k_indices(n: int) -> list[KIndex]:
    return [
        KIndex(k1, k2, n)
        for k1 in range(n + 1)
        for k2 in range(n - k1 + 1)
        if (k1, k2) not in ((0, n), (n, 0))
    ]


def eq_count(k1: int, k2: int, n: int) -> int:
    """Number of (k1, k2)-equations in exactly n variables."""
    KIndex(k1, k2, n)
    return comb(n, k1) * comb(n - k1, k2)


def eq_total(n: int) -> int:
    if n < 1:
        raise ContextError("n must be >= 1")
    return 3**n - 2


def irr_formula(k1: int, k2: int, n: int) -> int:
    """Components of a (k1, k2)-equation in n <= l variables.

    ``(n - k1 - k2)(n - 1)! + k1 k2 (n - 2)!``; the second term is dropped when
    k1 k2 = 0 so that n = 1 never needs (-1)!.
    """
    KIndex(k1, k2, n)
    out = (n - k1 - k2) * factorial(n - 1)
    if k1 * k2:
        out += k1 * k2 * factorial(n - 2)
    return out


def weighted_total(n: int) -> int:
    """Sum over K_n of #Eq(k1, k2, n) * Irr(k1, k2, n)."""
    return sum(eq_count(k.k1, k.k2, n) * irr_formula(k.k1, k.k2, n) for k in k_indices(n))


def avg_irr(n: int) -> Fraction:
    """Closed form of the mean component count over all of Eq(n)."""
    if n < 2:
        raise ContextError("the closed form needs n >= 2")
    return Fraction(4 * factorial(n) * 3 ** (n - 2), 3**n - 2)


def avg_irr_by_sum(n: int) -> Fraction:
    if n < 2:
        raise ContextError("n must be >= 2")
    return Fraction(weighted_total(n), eq_total(n))


def binomial_identity_check(n: int) -> bool:
    """Check sum_t C(n, t) t 2^t == 2 n 3^(n-1) exactly."""
    if n < 0:
        raise ContextError("n must be >= 0")
    lhs = sum(comb(n, t) * t * 2**t for t in range(n + 1))
    rhs = Fraction(2 * n * 3**n, 3)
    return lhs == rhs


def enumerate_eq(n: int) -> list[Equation]:
    """Eq(n): ordered pairs of terms that together mention all of x1..xn.

    Each variable goes left only, right only, or both; this is enumerated in
    base 3 with x1 as the most significant digit (0 both, 1 left, 2 right),
    skipping the two assignments that leave a side empty.
    """
    if n < 1:
        raise ContextError("n must be >= 1")
    if n > MAX_ENUM_VARS:
        raise GuardError(f"Eq({n}) has {eq_total(n)} members; limit is n <= {MAX_ENUM_VARS}")
    out = []
    for code in range(3**n):
        left, right = [], []
        for i in range(n):
            digit = code // 3 ** (n - 1 - i) % 3
            if digit != 2:
                left.append(i + 1)
            if digit != 1:
                right.append(i + 1)
        if left and right:
            out.append(Equation(Term(left), Term(right)))
    return out


def asymptotic_ratio(n: int) -> Fraction:
    """avg_irr(n) / n!, which decreases towards 4/9."""
    return avg_irr(n) / factorial(n)


def decimal_string(q: Fraction, digits: int = 12) -> str:
    with localcontext() as ctx:
        ctx.prec = digits
        return str(Decimal(q.numerator) / Decimal(q.denominator))


def stats(n: int) -> dict:
    avg = avg_irr(n)
    return {
        "n": n,
        "avg_irr": {"num": avg.numerator, "den": avg.denominator},
        "decimal": decimal_string(avg),
        "total_equations": eq_total(n),
    }
