import itertools
import json
from math import factorial

import pytest
from hypothesis import given
from hypothesis import strategies as st

from losemilat import SemilatticeContext, holds, parse_constraint
from losemilat.chains import (
    ChainComponent,
    component_point_set,
    decompose,
    first_kind_perms,
    irr_count,
    kind_of,
    second_kind_perms,
    witness_point,
)
from losemilat.counting import enumerate_eq
from losemilat.engine import (
    brute_decompose,
    coordinate_semilattice,
    is_irreducible,
    solutions,
    solutions_of_system,
)
from losemilat.errors import ContextError, UniverseMismatch, UnsupportedRegime

C = parse_constraint
L3 = SemilatticeContext(l=3, n=3)


def system(ctx, *texts):
    return solutions_of_system([C(t) for t in texts], ctx)


def test_kind_of_examples():
    eq = C("x1x2 = x1x3")
    assert kind_of((1, 2, 3), eq) == 1
    assert kind_of((2, 3, 1), eq) == 2
    assert kind_of((3, 2, 1), eq) is None
    with pytest.raises(UniverseMismatch):
        kind_of((1, 2, 3, 4), eq)
    with pytest.raises(ContextError):
        kind_of((1, 1, 3), eq)


def test_kind_of_matches_generated_lists():
    for eq in enumerate_eq(4):
        first, second = set(first_kind_perms(eq)), set(second_kind_perms(eq))
        for sigma in itertools.permutations(range(1, 5)):
            k = kind_of(sigma, eq)
            assert (k == 1) == (sigma in first)
            assert (k == 2) == (sigma in second)


def test_component_point_sets():
    c3 = ChainComponent((2, 3, 1), 2)
    assert component_point_set(c3, L3) == system(L3, "x2 = x3", "x3 <= x1")
    chain = component_point_set(ChainComponent((1, 2, 3), 1), L3)
    assert len(chain) == 10
    assert chain.points == {p for p in itertools.product(range(1, 4), repeat=3) if p[0] <= p[1] <= p[2]}


def test_diagonal_lies_in_every_component():
    for eq in enumerate_eq(3):
        for c in decompose(eq, L3):
            y = component_point_set(c, L3)
            assert all((a, a, a) in y for a in range(1, 4))


def test_constraints_rendering():
    c = ChainComponent((2, 3, 1), 2)
    assert c.constraint_texts() == ["x2 = x3", "x3 <= x1"]
    assert c.chain_text() == "x2=x3<=x1"
    assert ChainComponent((1, 3, 2), 1).chain_text() == "x1<=x3<=x2"
    data = json.loads(c.to_json())
    assert data == {"sigma": [2, 3, 1], "kind": 2, "constraints": ["x2 = x3", "x3 <= x1"]}
    assert ChainComponent.from_dict(data) == c


def test_component_validation():
    with pytest.raises(ContextError):
        ChainComponent((1, 2), 3)
    with pytest.raises(ContextError):
        ChainComponent((1,), 2)
    with pytest.raises(ContextError):
        ChainComponent((0, 1), 1)


@pytest.mark.parametrize(
    "text,first,second",
    [("x1x2 = x1x3", 2, 1), ("x1x2x3 = x1x2x3", 6, 0), ("x1 = x2x3", 0, 2)],
)
def test_perm_counts(text, first, second):
    eq = C(text)
    assert len(first_kind_perms(eq)) == first
    assert len(second_kind_perms(eq)) == second


def test_perm_lists_are_sorted_and_distinct():
    for eq in enumerate_eq(4):
        for perms in (first_kind_perms(eq), second_kind_perms(eq)):
            assert perms == sorted(set(perms))


def test_decompose_table_row():
    comps = decompose(C("x1x2 = x1x3"), L3)
    assert [(c.sigma, c.kind) for c in comps] == [((1, 2, 3), 1), ((1, 3, 2), 1), ((2, 3, 1), 2)]
    assert [component_point_set(c, L3) for c in comps] == [
        system(L3, "x1 <= x2", "x2 <= x3"),
        system(L3, "x1 <= x3", "x3 <= x2"),
        system(L3, "x2 = x3", "x3 <= x1"),
    ]


def test_decompose_counts_and_l_independence():
    assert len(decompose(C("x1x2x3 = x1"), L3)) == 2
    l5 = SemilatticeContext(l=5, n=3)
    assert [c for c in decompose(C("x1x2 = x1x3"), l5)] == decompose(C("x1x2 = x1x3"), L3)


def test_decompose_errors():
    with pytest.raises(UnsupportedRegime):
        decompose(C("x1x2x3 = x1x2x3"), SemilatticeContext(l=2, n=3))
    with pytest.raises(UniverseMismatch):
        decompose(C("x1 = x2"), L3)


def test_witness_points():
    assert witness_point(ChainComponent((1, 2, 3), 1), L3) == (1, 2, 3)
    assert witness_point(ChainComponent((2, 3, 1), 2), L3) == (3, 2, 2)
    assert witness_point(ChainComponent((1, 3, 2), 1), L3) == (1, 3, 2)
    with pytest.raises(UnsupportedRegime):
        witness_point(ChainComponent((1, 2, 3), 1), SemilatticeContext(l=2, n=3))


def test_witnesses_separate_example_components():
    comps = decompose(C("x1x2 = x1x3"), L3)
    sets = [component_point_set(c, L3) for c in comps]
    for i, c in enumerate(comps):
        w = witness_point(c, L3)
        assert [w in y for y in sets] == [j == i for j in range(3)]


@pytest.mark.parametrize("text,count", [("x1x2 = x1x3", 3), ("x1x2 = x1x2x3", 4), ("x1 = x1x2x3", 2)])
def test_irr_count(text, count):
    assert irr_count(C(text)) == count


@pytest.mark.parametrize("l", [3, 4])
def test_components_cover_the_solution_set(l):
    ctx = SemilatticeContext(l=l, n=3)
    for eq in enumerate_eq(3):
        union = set()
        for c in decompose(eq, ctx):
            union |= component_point_set(c, ctx).points
        assert union == solutions(eq, ctx).points


@pytest.mark.parametrize("n,l", [(2, 2), (3, 3), (3, 4)])
def test_components_are_pairwise_incomparable(n, l):
    ctx = SemilatticeContext(l=l, n=n)
    for eq in enumerate_eq(n):
        comps = decompose(eq, ctx)
        sets = [component_point_set(c, ctx) for c in comps]
        for i, j in itertools.permutations(range(len(comps)), 2):
            assert not sets[i] <= sets[j]
            assert witness_point(comps[i], ctx) not in sets[j]


@pytest.mark.parametrize("n,l", [(2, 2), (3, 3), (3, 4)])
def test_components_are_irreducible_chains(n, l):
    ctx = SemilatticeContext(l=l, n=n)
    for eq in enumerate_eq(n):
        for c in decompose(eq, ctx):
            y = component_point_set(c, ctx)
            gamma = coordinate_semilattice(y)
            assert is_irreducible(y)
            assert gamma.is_chain()
            assert len(gamma) == (n if c.kind == 1 else n - 1)


@pytest.mark.parametrize("n,l", [(2, 2), (2, 3), (2, 4), (3, 3)])
def test_matches_brute_force_decomposition(n, l):
    ctx = SemilatticeContext(l=l, n=n)
    for eq in enumerate_eq(n):
        chains = {component_point_set(c, ctx) for c in decompose(eq, ctx)}
        assert chains == brute_decompose(solutions(eq, ctx))


def test_reversed_equation_gives_same_components():
    for eq in enumerate_eq(3):
        a = {component_point_set(c, L3) for c in decompose(eq, L3)}
        b = {component_point_set(c, L3) for c in decompose(eq.reversed(), L3)}
        assert a == b


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_count_identity(n):
    for eq in enumerate_eq(n):
        k1, k2 = eq.k1, eq.k2
        second = k1 * k2 * factorial(n - 2) if k1 * k2 else 0
        assert irr_count(eq) == (n - k1 - k2) * factorial(n - 1) + second


@given(st.permutations(range(1, 6)), st.sampled_from(enumerate_eq(5)))
def test_kind_is_consistent_with_equation_semantics(sigma, eq):
    # a point sorted strictly by sigma solves eq iff sigma is of the first kind
    ctx = SemilatticeContext(l=5, n=5)
    p = [0] * 5
    for i, v in enumerate(sigma, start=1):
        p[v - 1] = i
    k = kind_of(sigma, eq)
    assert (k == 1) == holds(eq, p)
    if k is not None:
        assert holds(eq, witness_point(ChainComponent(tuple(sigma), k), ctx))


# Rows of Table 1 with their listed systems; the two misprinted chains
# ("x2<=x3<=x2", "x1<=x3<=x1") are replaced by the intended ones.
TABLE_1 = {
    "x1x2x3 = x1x2x3": [
        ["x1 <= x2", "x2 <= x3"], ["x1 <= x3", "x3 <= x2"], ["x2 <= x1", "x1 <= x3"],
        ["x2 <= x3", "x3 <= x1"], ["x3 <= x1", "x1 <= x2"], ["x3 <= x2", "x2 <= x1"],
    ],
    "x1 = x1x2x3": [["x1 <= x2", "x2 <= x3"], ["x1 <= x3", "x3 <= x2"]],
    "x1x2x3 = x1": [["x1 <= x2", "x2 <= x3"], ["x1 <= x3", "x3 <= x2"]],
    "x1 = x2x3": [["x1 = x2", "x2 <= x3"], ["x1 = x3", "x3 <= x2"]],
    "x2x3 = x1": [["x1 = x2", "x2 <= x3"], ["x1 = x3", "x3 <= x2"]],
    "x1x2 = x1x3": [["x1 <= x2", "x2 <= x3"], ["x1 <= x3", "x3 <= x2"], ["x2 = x3", "x3 <= x1"]],
    "x1x3 = x1x2": [["x1 <= x2", "x2 <= x3"], ["x1 <= x3", "x3 <= x2"], ["x2 = x3", "x3 <= x1"]],
    "x1x2 = x1x2x3": [
        ["x1 <= x2", "x2 <= x3"], ["x1 <= x3", "x3 <= x2"], ["x2 <= x1", "x1 <= x3"], ["x2 <= x3", "x3 <= x1"],
    ],
}


@pytest.mark.parametrize("text", sorted(TABLE_1))
def test_table_1_rows(text):
    want = {system(L3, *rows) for rows in TABLE_1[text]}
    got = {component_point_set(c, L3) for c in decompose(C(text), L3)}
    assert got == want == brute_decompose(solutions(C(text), L3))
