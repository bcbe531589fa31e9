"""Linearly ordered semilattices L_l, terms, equations and satisfaction.

Elements of L_l = {a_1 < ... < a_l} are represented by their 1-based index,
and a point of L_l^n by a tuple of n such indices (coordinate ``i - 1``
holds the value of ``x_i``).  Multiplication is ``a_i * a_j = a_min(i, j)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import ArityError, ContextError

Point = tuple[int, ...]


@dataclass(frozen=True)
class SemilatticeContext:
    """Ambient structure: the chain L_l and the number of variables n."""

    l: int
    n: int

    def __post_init__(self):
        if not isinstance(self.l, int) or self.l < 1:
            raise ContextError(f"semilattice order must be >= 1, got {self.l!r}")
        if not isinstance(self.n, int) or self.n < 1:
            raise ContextError(f"variable count must be >= 1, got {self.n!r}")

    @property
    def size(self) -> int:
        """Number of points in L_l^n."""
        return self.l**self.n

    def check_element(self, a: int) -> int:
        if not 1 <= a <= self.l:
            raise ContextError(f"a_{a} is not an element of L_{self.l}")
        return a

    def check_point(self, p: Sequence[int]) -> Point:
        p = tuple(p)
        if len(p) != self.n:
            raise ContextError(f"point {p} has arity {len(p)}, expected {self.n}")
        for a in p:
            self.check_element(a)
        return p


def meet(ctx: SemilatticeContext, a: int, b: int) -> int:
    return min(ctx.check_element(a), ctx.check_element(b))


@dataclass(frozen=True)
class Term:
    """A coefficient-free commutative word, stored as its variable set.

    Over a semilattice ``x1*x1*x2`` and ``x2*x1`` are the same term, so only
    the set of variable indices is kept.
    """

    vars: frozenset[int]

    def __init__(self, vars: Iterable[int]):
        vs = frozenset(vars)
        if not vs:
            raise ContextError("a term needs at least one variable")
        for v in vs:
            if not isinstance(v, int) or v < 1:
                raise ContextError(f"bad variable index {v!r}")
        object.__setattr__(self, "vars", vs)

    def __mul__(self, other: Term) -> Term:
        return Term(self.vars | other.vars)

    def key(self) -> tuple[int, ...]:
        """Sort key: the ascending tuple of variable indices."""
        return tuple(sorted(self.vars))

    def __lt__(self, other: Term) -> bool:
        return self.key() < other.key()

    def __repr__(self):
        return "Term(" + "*".join(f"x{v}" for v in self.key()) + ")"


@dataclass(frozen=True)
class Equation:
    """An ordered pair of terms ``lhs = rhs``.

    ``Equation(t, s)`` and ``Equation(s, t)`` are different values with the
    same solution set.
    """

    lhs: Term
    rhs: Term

    @property
    def k1(self) -> int:
        return len(self.lhs.vars - self.rhs.vars)

    @property
    def k2(self) -> int:
        return len(self.rhs.vars - self.lhs.vars)

    @property
    def universe(self) -> frozenset[int]:
        return self.lhs.vars | self.rhs.vars

    @property
    def shared(self) -> frozenset[int]:
        return self.lhs.vars & self.rhs.vars

    def reversed(self) -> Equation:
        return Equation(self.rhs, self.lhs)

    def __repr__(self):
        return f"Equation({self.lhs!r} = {self.rhs!r})"


def eval_term(t: Term, p: Sequence[int]) -> int:
    """Value of ``t`` at ``p``: the minimum of the coordinates it names."""
    top = max(t.vars)
    if top > len(p):
        raise ArityError(f"x{top} does not exist in a point of arity {len(p)}")
    return min(p[v - 1] for v in t.vars)


def holds(eq: Equation, p: Sequence[int]) -> bool:
    return eval_term(eq.lhs, p) == eval_term(eq.rhs, p)


def classify(eq: Equation) -> tuple[int, int, int]:
    """Return ``(k1, k2, number of variables used)``."""
    return eq.k1, eq.k2, len(eq.universe)


def ineq(i: int, j: int) -> Equation:
    """``x_i <= x_j``, i.e. ``x_i * x_j = x_i``."""
    return Equation(Term({i, j}), Term({i}))
