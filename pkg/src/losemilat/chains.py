"""Irreducible decomposition of V(t = s) by orderings of the variables.

A permutation ``sigma`` (a tuple listing variable indices, ``sigma[0]`` being
the position-1 variable) sorts x1..xn.  Relative to an equation t = s it is

* of the first kind if its first variable occurs in both t and s;
* of the second kind if its first variable occurs only in t and its second
  only in s.

A first-kind sigma gives the chain ``x_sigma(1) <= ... <= x_sigma(n)``; a
second-kind sigma gives ``x_sigma(1) = x_sigma(2) <= ... <= x_sigma(n)``.
For n <= l the solution sets of these systems, one per permutation of either
kind, are exactly the irreducible components of V(t = s).

Second-kind permutations always put the t-only variable first.  Swapping
the first two positions yields the same system, so allowing both
orientations would list every such component twice.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from typing import Sequence

from .core import Equation, Point, SemilatticeContext, Term, ineq
from .engine import AlgebraicSet, solutions_of_system
from .errors import ContextError, UniverseMismatch, UnsupportedRegime

Permutation = tuple[int, ...]


def check_permutation(sigma: Sequence[int]) -> Permutation:
    sigma = tuple(sigma)
    if sorted(sigma) != list(range(1, len(sigma) + 1)):
        raise ContextError(f"{sigma} is not a permutation of 1..{len(sigma)}")
    return sigma


def _check_full(eq: Equation, n: int | None = None) -> int:
    top = max(eq.universe)
    if n is None:
        n = top
    if eq.universe != frozenset(range(1, n + 1)):
        raise UniverseMismatch(f"equation must use exactly x1..x{n}, uses {sorted(eq.universe)}")
    return n


@dataclass(frozen=True)
class ChainComponent:
    sigma: Permutation
    kind: int

    def __post_init__(self):
        object.__setattr__(self, "sigma", check_permutation(self.sigma))
        if self.kind not in (1, 2):
            raise ContextError(f"kind must be 1 or 2, got {self.kind!r}")
        if self.kind == 2 and len(self.sigma) < 2:
            raise ContextError("a second-kind component needs at least two variables")

    @property
    def n(self) -> int:
        return len(self.sigma)

    @property
    def constraints(self) -> list[Equation]:
        s = self.sigma
        if self.kind == 1:
            return [ineq(s[i], s[i + 1]) for i in range(len(s) - 1)]
        return [Equation(Term({s[0]}), Term({s[1]}))] + [
            ineq(s[i], s[i + 1]) for i in range(1, len(s) - 1)
        ]

    def constraint_texts(self) -> list[str]:
        """Constraints in the sugared form, e.g. ``["x2 = x3", "x3 <= x1"]``."""
        s = self.sigma
        out = []
        start = 0
        if self.kind == 2:
            out.append(f"x{s[0]} = x{s[1]}")
            start = 1
        out += [f"x{s[i]} <= x{s[i + 1]}" for i in range(start, len(s) - 1)]
        return out

    def chain_text(self) -> str:
        """Compact chain notation such as ``x2=x3<=x1``."""
        s = self.sigma
        if self.kind == 1:
            return "<=".join(f"x{v}" for v in s)
        head = f"x{s[0]}=x{s[1]}"
        return "<=".join([head] + [f"x{v}" for v in s[2:]])

    def to_dict(self) -> dict:
        return {"sigma": list(self.sigma), "kind": self.kind, "constraints": self.constraint_texts()}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: dict) -> ChainComponent:
        return cls(tuple(data["sigma"]), data["kind"])


def kind_of(sigma: Sequence[int], eq: Equation) -> int | None:
    sigma = check_permutation(sigma)
    _check_full(eq, len(sigma))
    first = sigma[0]
    if first in eq.shared:
        return 1
    if len(sigma) > 1 and first in eq.lhs.vars - eq.rhs.vars and sigma[1] in eq.rhs.vars - eq.lhs.vars:
        return 2
    return None


def first_kind_perms(eq: Equation) -> list[Permutation]:
    n = _check_full(eq)
    out = []
    for v in sorted(eq.shared):
        rest = [u for u in range(1, n + 1) if u != v]
        out += [(v, *p) for p in itertools.permutations(rest)]
    return out


def second_kind_perms(eq: Equation) -> list[Permutation]:
    n = _check_full(eq)
    out = []
    for a in sorted(eq.lhs.vars - eq.rhs.vars):
        for b in sorted(eq.rhs.vars - eq.lhs.vars):
            rest = [u for u in range(1, n + 1) if u not in (a, b)]
            out += [(a, b, *p) for p in itertools.permutations(rest)]
    return out


def _check_regime(eq: Equation, ctx: SemilatticeContext):
    _check_full(eq, ctx.n)
    if ctx.n > ctx.l:
        raise UnsupportedRegime(
            f"n={ctx.n} > l={ctx.l}: the chain decomposition only holds for n <= l "
            "(the n > l case needs a different method and is not supported)"
        )


def decompose(eq: Equation, ctx: SemilatticeContext) -> list[ChainComponent]:
    """Irreducible components of V(eq) as chain systems.

    First-kind components come first, then second-kind ones, each in
    lexicographic order of sigma.  No points are enumerated.
    """
    _check_regime(eq, ctx)
    return [ChainComponent(s, 1) for s in first_kind_perms(eq)] + [
        ChainComponent(s, 2) for s in second_kind_perms(eq)
    ]


def component_point_set(c: ChainComponent, ctx: SemilatticeContext, max_points: int | None = None) -> AlgebraicSet:
    if c.n > ctx.n:
        raise ContextError(f"component over {c.n} variables does not fit n={ctx.n}")
    return solutions_of_system(c.constraints, ctx, max_points)


def witness_point(c: ChainComponent, ctx: SemilatticeContext) -> Point:
    """A point of this component lying in no other component of the equation.

    Position sigma(i) gets a_i; for the second kind position sigma(1) gets a_2
    as well, so the glued pair shares the value a_2.
    """
    n = c.n
    if ctx.l < n:
        raise UnsupportedRegime(f"witness points need l >= n, got l={ctx.l}, n={n}")
    if n != ctx.n:
        raise ContextError(f"component over {n} variables, context has n={ctx.n}")
    p = [0] * n
    for i, v in enumerate(c.sigma, start=1):
        p[v - 1] = i
    if c.kind == 2:
        p[c.sigma[0] - 1] = 2
    return tuple(p)


def irr_count(eq: Equation) -> int:
    """Number of irreducible components of V(eq), assuming n <= l."""
    n = _check_full(eq)
    return len(decompose(eq, SemilatticeContext(l=n, n=n)))

