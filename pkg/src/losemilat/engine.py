"""Brute-force semantics over L_l^n.

Everything here works by enumerating points, so it is only meant for small
instances.  Each enumeration checks a cap first and raises
:class:`InstanceTooLarge` rather than truncating.  The cap defaults to
``10**7`` points and can be overridden with the ``LOSEMILAT_MAX_POINTS``
environment variable or a ``max_points`` argument.

Point sets inside the closed-set machinery are int bitmasks over the points of
the cube in lexicographic order.
"""

from __future__ import annotations

import itertools
import json
import os
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

from .core import Equation, Point, SemilatticeContext, Term, eval_term, holds
from .errors import (
    ContextError,
    EmptySetError,
    GuardError,
    InconsistencyError,
    InstanceTooLarge,
)

DEFAULT_MAX_POINTS = 10**7
DEFAULT_MAX_FAMILY = 200_000
MAX_CLOSURE_VARS = 6


def max_points(override: int | None = None) -> int:
    if override is not None:
        return override
    env = os.environ.get("LOSEMILAT_MAX_POINTS")
    if env:
        try:
            return int(env)
        except ValueError:
            raise ContextError(f"LOSEMILAT_MAX_POINTS is not an integer: {env!r}") from None
    return DEFAULT_MAX_POINTS


def _check_cap(ctx: SemilatticeContext, cap: int | None):
    limit = max_points(cap)
    if ctx.size > limit:
        raise InstanceTooLarge(
            f"L_{ctx.l}^{ctx.n} has {ctx.size} points, above the cap of {limit}"
        )


def cube(ctx: SemilatticeContext, cap: int | None = None) -> Iterator[Point]:
    """All points of L_l^n in lexicographic order."""
    _check_cap(ctx, cap)
    return itertools.product(range(1, ctx.l + 1), repeat=ctx.n)


@dataclass(frozen=True)
class AlgebraicSet:
    """A finite set of points of L_l^n.

    The name follows usage; nothing forces the points to form an algebraic
    set (see :func:`is_algebraic`).
    """

    ctx: SemilatticeContext
    points: frozenset[Point]

    def __init__(self, ctx: SemilatticeContext, points: Iterable[Sequence[int]] = ()):
        object.__setattr__(self, "ctx", ctx)
        object.__setattr__(self, "points", frozenset(ctx.check_point(p) for p in points))

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(sorted(self.points))

    def __contains__(self, p):
        return tuple(p) in self.points

    def __le__(self, other: AlgebraicSet) -> bool:
        return self.points <= other.points

    def __lt__(self, other: AlgebraicSet) -> bool:
        return self.points < other.points

    def __or__(self, other: AlgebraicSet) -> AlgebraicSet:
        return AlgebraicSet(self.ctx, self.points | other.points)

    def __and__(self, other: AlgebraicSet) -> AlgebraicSet:
        return AlgebraicSet(self.ctx, self.points & other.points)

    def sorted_points(self) -> list[Point]:
        return sorted(self.points)

    def to_json(self) -> str:
        return json.dumps([list(p) for p in self.sorted_points()])

    @classmethod
    def from_json(cls, ctx: SemilatticeContext, text: str) -> AlgebraicSet:
        data = json.loads(text)
        if not isinstance(data, list) or not all(isinstance(p, list) for p in data):
            raise ContextError("expected a JSON array of points")
        return cls(ctx, data)

    def __repr__(self):
        return f"AlgebraicSet(l={self.ctx.l}, n={self.ctx.n}, {self.sorted_points()})"


def _check_universe(eq: Equation, ctx: SemilatticeContext):
    top = max(eq.universe)
    if top > ctx.n:
        raise ContextError(f"x{top} is outside the ambient variables x1..x{ctx.n}")


def solutions(eq: Equation, ctx: SemilatticeContext, max_points: int | None = None) -> AlgebraicSet:
    _check_universe(eq, ctx)
    return AlgebraicSet(ctx, (p for p in cube(ctx, max_points) if holds(eq, p)))


def solutions_of_system(
    eqs: Sequence[Equation], ctx: SemilatticeContext, max_points: int | None = None
) -> AlgebraicSet:
    for eq in eqs:
        _check_universe(eq, ctx)
    pts = (p for p in cube(ctx, max_points) if all(holds(eq, p) for eq in eqs))
    return AlgebraicSet(ctx, pts)


def all_terms(n: int) -> list[Term]:
    """The 2^n - 1 nonempty terms over x1..xn, ordered by ascending index tuple."""
    terms = [
        Term(c) for k in range(1, n + 1) for c in itertools.combinations(range(1, n + 1), k)
    ]
    return sorted(terms, key=Term.key)


def all_ambient_equations(n: int) -> list[Equation]:
    """Every ordered pair of nonempty terms over x1..xn.

    Ordered by the left term, then the right term, each in :func:`all_terms`
    order.  Unlike :func:`losemilat.counting.enumerate_eq`, the pair need not
    mention every variable.
    """
    if n < 1:
        raise ContextError("n must be >= 1")
    terms = all_terms(n)
    return [Equation(t, s) for t in terms for s in terms]


def _check_closure_guard(ctx: SemilatticeContext):
    if ctx.n > MAX_CLOSURE_VARS:
        raise GuardError(f"closure enumerates all terms; needs n <= {MAX_CLOSURE_VARS}, got {ctx.n}")


def closure(z: AlgebraicSet, max_points: int | None = None) -> AlgebraicSet:
    """Smallest algebraic set containing ``z``.

    This is the intersection of V(e) over all ambient equations e that hold
    on every point of ``z``.  Those equations say exactly that certain terms
    agree on ``z``, so a point lies in the closure iff it is constant on each
    class of terms that agree on ``z``.  For empty ``z`` all terms agree and
    the closure is the diagonal of constant points.
    """
    ctx = z.ctx
    _check_closure_guard(ctx)
    terms = all_terms(ctx.n)
    zpts = z.sorted_points()
    groups: dict[tuple[int, ...], list[Term]] = {}
    for t in terms:
        groups.setdefault(tuple(eval_term(t, p) for p in zpts), []).append(t)
    classes = [g for g in groups.values() if len(g) > 1]

    def inside(p):
        for cls in classes:
            v = eval_term(cls[0], p)
            if any(eval_term(t, p) != v for t in cls[1:]):
                return False
        return True

    return AlgebraicSet(ctx, (p for p in cube(ctx, max_points) if inside(p)))


def is_algebraic(z: AlgebraicSet, max_points: int | None = None) -> bool:
    return closure(z, max_points) == z


@dataclass(frozen=True)
class CoordinateSemilattice:
    """Terms modulo agreement on a point set, with the pointwise order.

    ``classes[i]`` lists the terms of class i in ascending order, so
    ``classes[i][0]`` is its lexicographically least member.  Classes are
    sorted by that representative.  ``order`` holds the pairs ``(i, j)``
    with class i <= class j.
    """

    n: int
    classes: tuple[tuple[Term, ...], ...]
    order: frozenset[tuple[int, int]]

    def __len__(self):
        return len(self.classes)

    def representative(self, i: int) -> Term:
        return self.classes[i][0]

    def class_of(self, t: Term) -> int:
        for i, cls in enumerate(self.classes):
            if t in cls:
                return i
        raise ContextError(f"{t!r} is not a term over x1..x{self.n}")

    def leq(self, i: int, j: int) -> bool:
        return (i, j) in self.order

    def multiply(self, i: int, j: int) -> int:
        return self.class_of(self.representative(i) * self.representative(j))

    def is_chain(self) -> bool:
        k = len(self.classes)
        return all(self.leq(i, j) or self.leq(j, i) for i in range(k) for j in range(i + 1, k))

    def chain(self) -> list[int]:
        """Class indices from bottom to top; only meaningful for a chain."""
        return sorted(range(len(self)), key=lambda i: sum(self.leq(j, i) for j in range(len(self))))


def coordinate_semilattice(y: AlgebraicSet) -> CoordinateSemilattice:
    n = y.ctx.n
    _check_closure_guard(y.ctx)
    pts = y.sorted_points()
    groups: dict[tuple[int, ...], list[Term]] = {}
    for t in all_terms(n):
        groups.setdefault(tuple(eval_term(t, p) for p in pts), []).append(t)
    items = sorted(groups.items(), key=lambda kv: kv[1][0].key())
    classes = tuple(tuple(ts) for _, ts in items)
    vectors = [vec for vec, _ in items]
    order = frozenset(
        (i, j)
        for i, vi in enumerate(vectors)
        for j, vj in enumerate(vectors)
        if all(a <= b for a, b in zip(vi, vj))
    )
    return CoordinateSemilattice(n, classes, order)


def is_irreducible(y: AlgebraicSet) -> bool:
    """Irreducibility via the coordinate semilattice.

    An algebraic set is irreducible over L_l iff its coordinate semilattice
    embeds into L_l, i.e. it is a chain of at most l classes.
    """
    if not y.points:
        raise EmptySetError("irreducibility is undefined for the empty set")
    gamma = coordinate_semilattice(y)
    return gamma.is_chain() and len(gamma) <= y.ctx.l


# --- bitmask oracles -------------------------------------------------------


@dataclass(frozen=True)
class _Cube:
    points: tuple[Point, ...]
    index: dict
    full: int
    eq_masks: tuple[int, ...]  # V(e) for every ambient equation


@lru_cache(maxsize=32)
def _cube_masks(ctx: SemilatticeContext) -> _Cube:
    pts = tuple(cube(ctx))
    index = {p: i for i, p in enumerate(pts)}
    terms = all_terms(ctx.n)
    vals = [[eval_term(t, p) for p in pts] for t in terms]
    masks = set()
    for vt in vals:
        for vs in vals:
            m = 0
            for i, (a, b) in enumerate(zip(vt, vs)):
                if a == b:
                    m |= 1 << i
            masks.add(m)
    return _Cube(pts, index, (1 << len(pts)) - 1, tuple(sorted(masks)))


def _to_mask(c: _Cube, y: AlgebraicSet) -> int:
    m = 0
    for p in y.points:
        m |= 1 << c.index[p]
    return m


def _from_mask(ctx: SemilatticeContext, c: _Cube, m: int) -> AlgebraicSet:
    return AlgebraicSet(ctx, (p for i, p in enumerate(c.points) if m >> i & 1))


def _mask_closure(c: _Cube, z: int) -> int:
    out = c.full
    for v in c.eq_masks:
        if z & ~v == 0:
            out &= v
    return out


def _check_oracle_guard(ctx: SemilatticeContext):
    if ctx.n > 3 or ctx.l > 4:
        raise GuardError(f"closed-set enumeration needs n <= 3 and l <= 4, got n={ctx.n}, l={ctx.l}")


def is_irreducible_by_cover(y: AlgebraicSet) -> bool:
    """Irreducibility straight from the definition.

    Closes every proper subset of ``y``, keeps the closures that are proper
    subsets of ``y`` and asks whether their union is all of ``y``.  If it is,
    ``y`` is a finite union of proper algebraic subsets and hence reducible.
    """
    if not y.points:
        raise EmptySetError("irreducibility is undefined for the empty set")
    if len(y) > 12 or y.ctx.n > 3:
        raise GuardError(f"cover oracle needs |Y| <= 12 and n <= 3, got |Y|={len(y)}, n={y.ctx.n}")
    c = _cube_masks(y.ctx)
    bits = [1 << c.index[p] for p in y.sorted_points()]
    ymask = sum(bits)
    covered = 0
    for r in range(len(bits)):
        for combo in itertools.combinations(bits, r):
            cl = _mask_closure(c, sum(combo))
            if cl & ~ymask == 0 and cl != ymask:
                covered |= cl
    return covered != ymask


@lru_cache(maxsize=32)
def _closed_masks(ctx: SemilatticeContext, max_family: int) -> tuple[int, ...]:
    c = _cube_masks(ctx)
    family = {c.full}
    frontier = [c.full]
    while frontier:
        nxt = []
        for a in frontier:
            for v in c.eq_masks:
                b = a & v
                if b not in family:
                    family.add(b)
                    nxt.append(b)
                    if len(family) > max_family:
                        raise InstanceTooLarge(f"more than {max_family} closed sets over L_{ctx.l}^{ctx.n}")
        frontier = nxt
    return tuple(sorted(family, key=lambda m: (-bin(m).count("1"), m)))


def enumerate_closed_sets(ctx: SemilatticeContext, max_family: int = DEFAULT_MAX_FAMILY) -> list[AlgebraicSet]:
    """Every algebraic set over L_l^n, largest first.

    Built from the full cube and all V(e) by closing under intersection.
    """
    _check_oracle_guard(ctx)
    c = _cube_masks(ctx)
    return [_from_mask(ctx, c, m) for m in _closed_masks(ctx, max_family)]


@lru_cache(maxsize=None)
def _mask_irreducible(ctx: SemilatticeContext, m: int) -> bool:
    return is_irreducible(_from_mask(ctx, _cube_masks(ctx), m))


def brute_decompose(y: AlgebraicSet, max_family: int = DEFAULT_MAX_FAMILY) -> frozenset[AlgebraicSet]:
    """Irreducible components of ``y`` found by searching all closed sets.

    Returns the maximal irreducible algebraic subsets of ``y``.
    """
    ctx = y.ctx
    _check_oracle_guard(ctx)
    c = _cube_masks(ctx)
    ymask = _to_mask(c, y)
    cands = [
        m
        for m in _closed_masks(ctx, max_family)
        if m and m & ~ymask == 0 and _mask_irreducible(ctx, m)
    ]
    maximal = [m for m in cands if not any(o != m and m & ~o == 0 for o in cands)]
    union = 0
    for m in maximal:
        union |= m
    if union != ymask:
        raise InconsistencyError(f"components do not cover {y!r}; is it algebraic?")
    return frozenset(_from_mask(ctx, c, m) for m in maximal)
