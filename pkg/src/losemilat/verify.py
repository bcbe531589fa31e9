"""Cross-checks of the chain decomposition against the brute-force oracles.

Used by ``losemilat verify``.  Every check walks all of Eq(n) over L_l and
stops at its first counterexample.
"""

from __future__ import annotations

from dataclasses import dataclass

from .chains import component_point_set, decompose, witness_point
from .core import SemilatticeContext, classify
from .counting import avg_irr, avg_irr_by_sum, enumerate_eq, eq_count, eq_total, irr_formula, k_indices
from .engine import (
    brute_decompose,
    coordinate_semilattice,
    enumerate_closed_sets,
    is_irreducible,
    is_irreducible_by_cover,
    solutions,
)
from .errors import UnsupportedRegime
from .parser import render


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str = ""
    counterexample: str = ""


def _components(eq, ctx):
    comps = decompose(eq, ctx)
    return comps, [component_point_set(c, ctx) for c in comps]


def check_counts(n, ctx):
    for eq in enumerate_eq(n):
        k1, k2, _ = classify(eq)
        got = len(decompose(eq, ctx))
        if got != irr_formula(k1, k2, n):
            return CheckResult("component count formula", False, counterexample=f"{render(eq)}: {got} components")
    total = sum(eq_count(k.k1, k.k2, n) for k in k_indices(n))
    if total != eq_total(n) or len(enumerate_eq(n)) != eq_total(n):
        return CheckResult("component count formula", False, counterexample=f"|Eq({n})| mismatch")
    if n >= 2 and avg_irr(n) != avg_irr_by_sum(n):
        return CheckResult("component count formula", False, counterexample=f"average mismatch at n={n}")
    return CheckResult("component count formula", True, f"{eq_total(n)} equations")


def check_union(n, ctx):
    for eq in enumerate_eq(n):
        _, sets = _components(eq, ctx)
        union = frozenset().union(*(s.points for s in sets))
        if union != solutions(eq, ctx).points:
            return CheckResult("union of components", False, counterexample=render(eq))
    return CheckResult("union of components", True)


def check_separation(n, ctx):
    for eq in enumerate_eq(n):
        comps, sets = _components(eq, ctx)
        for i, (c, a) in enumerate(zip(comps, sets)):
            w = witness_point(c, ctx)
            if w not in a:
                return CheckResult("witness points", False, counterexample=f"{render(eq)}, sigma={c.sigma}: {w} not in own component")
            for j, b in enumerate(sets):
                if i == j:
                    continue
                if a <= b:
                    return CheckResult("witness points", False, counterexample=f"{render(eq)}: {c.sigma} inside {comps[j].sigma}")
                if w in b:
                    return CheckResult("witness points", False, counterexample=f"{render(eq)}, sigma={c.sigma}: {w} also in {comps[j].sigma}")
    return CheckResult("witness points", True)


def check_irreducible(n, ctx):
    for eq in enumerate_eq(n):
        comps, sets = _components(eq, ctx)
        for c, y in zip(comps, sets):
            want = n if c.kind == 1 else n - 1
            gamma = coordinate_semilattice(y)
            if not is_irreducible(y) or not gamma.is_chain() or len(gamma) != want:
                return CheckResult("components irreducible", False, counterexample=f"{render(eq)}, sigma={c.sigma}")
    return CheckResult("components irreducible", True)


def check_oracle(n, ctx):
    if n > 3 or ctx.l > 4:
        return CheckResult("brute-force decomposition", True, "skipped: needs n <= 3, l <= 4")
    for eq in enumerate_eq(n):
        _, sets = _components(eq, ctx)
        if frozenset(sets) != brute_decompose(solutions(eq, ctx)):
            return CheckResult("brute-force decomposition", False, counterexample=render(eq))
    return CheckResult("brute-force decomposition", True)


def check_cover_oracle(n, ctx):
    if n > 3 or ctx.l > 4:
        return CheckResult("irreducibility oracles agree", True, "skipped: needs n <= 3, l <= 4")
    checked = skipped = 0
    for y in enumerate_closed_sets(ctx):
        if len(y) > 12:
            skipped += 1
            continue
        checked += 1
        if is_irreducible(y) != is_irreducible_by_cover(y):
            return CheckResult("irreducibility oracles agree", False, counterexample=str(y.sorted_points()))
    return CheckResult("irreducibility oracles agree", True, f"{checked} closed sets, {skipped} too large")


CHECKS = [check_counts, check_union, check_separation, check_irreducible, check_oracle, check_cover_oracle]


def run(n: int, l: int) -> list[CheckResult]:
    """Run every check for Eq(n) over L_l; raises UnsupportedRegime if n > l."""
    if n > l:
        raise UnsupportedRegime(f"n={n} > l={l}: the chain decomposition needs n <= l")
    ctx = SemilatticeContext(l=l, n=n)
    return [check(n, ctx) for check in CHECKS]


def component_counts(n: int, l: int) -> list[int]:
    ctx = SemilatticeContext(l=l, n=n)
    return [len(decompose(eq, ctx)) for eq in enumerate_eq(n)]

