"""Command-line entry point: ``losemilat <command> ...``.

Exit codes: 0 success, 1 verification failure, 2 parse/usage error,
3 enumeration cap exceeded, 4 unsupported regime (n > l or an equation that
does not use exactly x1..xn).
"""

from __future__ import annotations

import argparse
import json
import sys

from . import counting, verify
from .chains import component_point_set, decompose, witness_point
from .core import SemilatticeContext, classify
from .engine import coordinate_semilattice, is_irreducible, max_points, solutions_of_system
from .errors import (
    ContextError,
    GuardError,
    InstanceTooLarge,
    ParseError,
    UniverseMismatch,
    UnsupportedRegime,
)
from .parser import parse_constraint, render, render_term

EXIT_OK, EXIT_FAIL, EXIT_PARSE, EXIT_CAP, EXIT_REGIME = 0, 1, 2, 3, 4
MAX_TABLE_VARS = 4


def _dump(obj):
    print(json.dumps(obj, sort_keys=True))


def _context(eqs, args):
    top = max(max(eq.universe) for eq in eqs) if eqs else 1
    n = args.n if args.n is not None else top
    if top > n:
        raise ContextError(f"x{top} appears but --n is {n}")
    return SemilatticeContext(l=args.l, n=n)


def _point_text(p):
    return "(" + ", ".join(f"a{v}" for v in p) + ")"


def cmd_solve(args):
    eqs = [parse_constraint(text) for text in args.constraints]
    ctx = _context(eqs, args)
    y = solutions_of_system(eqs, ctx, args.max_points)
    if args.json:
        print(y.to_json())
        return EXIT_OK
    if not args.quiet:
        for p in y:
            print(_point_text(p))
    print(f"{len(y)} points")
    return EXIT_OK


def _regime(ctx):
    if ctx.n > ctx.l:
        raise UnsupportedRegime(
            f"n={ctx.n} > l={ctx.l} is outside the supported regime: "
            "the decomposition holds only for n <= l"
        )


def cmd_decompose(args):
    eq = parse_constraint(args.constraint)
    ctx = _context([eq], args)
    _regime(ctx)
    comps = decompose(eq, ctx)
    k1, k2, n = classify(eq)
    formula = counting.irr_formula(k1, k2, n)
    rows = []
    for c in comps:
        row = c.to_dict()
        row["chain"] = c.chain_text()
        row["witness"] = list(witness_point(c, ctx))
        if args.points:
            row["points"] = len(component_point_set(c, ctx, args.max_points))
        rows.append(row)
    if args.json:
        _dump({
            "equation": render(eq), "l": ctx.l, "n": ctx.n, "k1": k1, "k2": k2,
            "components": rows, "count": len(comps), "formula": formula,
        })
    else:
        print(f"{render(eq)} over L_{ctx.l}, ({k1},{k2})-equation in {n} variables")
        for i, row in enumerate(rows, 1):
            line = (
                f"{i:3d}. {row['chain']:<24} kind {row['kind']}  "
                f"sigma=({','.join(map(str, row['sigma']))})  witness={_point_text(row['witness'])}"
            )
            if args.points:
                line += f"  points={row['points']}"
            print(line)
        print(f"{len(comps)} components; formula gives {formula}")
    return EXIT_OK if len(comps) == formula else EXIT_FAIL


def cmd_gamma(args):
    eqs = [parse_constraint(text) for text in args.constraints]
    ctx = _context(eqs, args)
    y = solutions_of_system(eqs, ctx, args.max_points)
    gamma = coordinate_semilattice(y)
    reps = [render_term(gamma.representative(i)) for i in range(len(gamma))]
    covers = sorted(
        (i, j)
        for (i, j) in gamma.order
        if i != j and not any(k not in (i, j) and gamma.leq(i, k) and gamma.leq(k, j) for k in range(len(gamma)))
    )
    irreducible = is_irreducible(y) if y.points else None
    if args.json:
        _dump({
            "points": len(y),
            "classes": [[render_term(t) for t in cls] for cls in gamma.classes],
            "covers": [[reps[i], reps[j]] for i, j in covers],
            "chain": gamma.is_chain(),
            "irreducible": irreducible,
        })
        return EXIT_OK
    print(f"{len(y)} points, {len(gamma)} classes")
    for rep, cls in zip(reps, gamma.classes):
        print(f"  [{rep}] = {{{', '.join(render_term(t) for t in cls)}}}")
    for i, j in covers:
        print(f"  [{reps[i]}] < [{reps[j]}]")
    print(f"chain: {'yes' if gamma.is_chain() else 'no'}")
    if irreducible is not None:
        print(f"irreducible over L_{ctx.l}: {'yes' if irreducible else 'no'}")
    return EXIT_OK


def cmd_table(args):
    n = args.n
    ctx = SemilatticeContext(l=args.l, n=n)
    _regime(ctx)
    if n > MAX_TABLE_VARS:
        raise GuardError(f"table is limited to n <= {MAX_TABLE_VARS}")
    rows = []
    for eq in counting.enumerate_eq(n):
        comps = decompose(eq, ctx)
        rows.append({"equation": render(eq), "components": [c.chain_text() for c in comps], "count": len(comps)})
    total = sum(r["count"] for r in rows)
    if args.json:
        _dump({"n": n, "l": args.l, "rows": rows, "total": total})
        return EXIT_OK
    width = max(len(r["equation"]) for r in rows)
    print(f"{'equation':<{width}}  count  irreducible components")
    for r in rows:
        print(f"{r['equation']:<{width}}  {r['count']:5d}  {' U '.join(r['components'])}")
    print(f"{len(rows)} equations, {total} components in total")
    return EXIT_OK


def cmd_stats(args):
    n = args.n
    s = counting.stats(n)
    if args.json:
        _dump(s)
        return EXIT_OK
    avg = counting.avg_irr(n)
    ratio = counting.asymptotic_ratio(n)
    print(f"n = {n}, |Eq(n)| = {s['total_equations']}")
    print(f"average components: {avg.numerator}/{avg.denominator} = {s['decimal']}")
    print(f"average / n! = {counting.decimal_string(ratio)} (limit 4/9 = {counting.decimal_string(counting.Fraction(4, 9))})")
    return EXIT_OK


def cmd_verify(args):
    results = verify.run(args.n, args.l)
    ok = True
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        if not args.quiet or not r.passed:
            print(f"{status}  {r.name}" + (f"  ({r.detail})" if r.detail else ""))
        if not r.passed:
            print(f"      counterexample: {r.counterexample}")
            ok = False
            break
    if ok:
        print(f"all checks passed for n={args.n}, l={args.l}")
    return EXIT_OK if ok else EXIT_FAIL


def cmd_enumerate(args):
    eqs = counting.enumerate_eq(args.n)
    if args.json:
        _dump([{"equation": render(eq), "k1": eq.k1, "k2": eq.k2} for eq in eqs])
        return EXIT_OK
    for eq in eqs:
        print(f"{render(eq):<40} ({eq.k1},{eq.k2})")
    if not args.quiet:
        print(f"{len(eqs)} equations")
    return EXIT_OK


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--quiet", action="store_true", help="less output")
    common.add_argument("--max-points", type=int, default=None,
                        help="enumeration cap (default: $LOSEMILAT_MAX_POINTS or 10^7)")

    p = argparse.ArgumentParser(prog="losemilat", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, func, help, l=True, n_required=False):
        sp = sub.add_parser(name, parents=[common], help=help)
        if l:
            sp.add_argument("--l", type=int, required=True, help="order of the semilattice L_l")
        sp.add_argument("--n", type=int, required=n_required, default=None, help="number of variables")
        sp.set_defaults(func=func)
        return sp

    add("solve", cmd_solve, "list the solutions of a system").add_argument("constraints", nargs="+")
    sp = add("decompose", cmd_decompose, "irreducible components of one equation")
    sp.add_argument("constraint")
    sp.add_argument("--points", action="store_true", help="also count points per component")
    add("gamma", cmd_gamma, "coordinate semilattice of a system's solution set").add_argument("constraints", nargs="+")
    add("table", cmd_table, "decompose every equation in Eq(n)", n_required=True)
    add("stats", cmd_stats, "average number of components", l=False, n_required=True)
    add("verify", cmd_verify, "cross-check decomposition against brute force", n_required=True)
    add("enumerate", cmd_enumerate, "list Eq(n)", l=False, n_required=True)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.max_points is None:
        args.max_points = max_points()
    try:
        return args.func(args)
    except (ParseError, ContextError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_PARSE
    except (InstanceTooLarge, GuardError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_CAP
    except (UnsupportedRegime, UniverseMismatch) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_REGIME


if __name__ == "__main__":
    sys.exit(main())
