import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from tropuiseux.polynomial import is_tropical_zero
from tropuiseux.puiseux import (
    Affine,
    ExpressionError,
    Max,
    Min,
    Neg,
    QuotientForm,
    Scale,
    Sum,
    TermCapError,
    build_g_expr,
    build_g_expr_dual,
    constant,
    eval_expr,
    expr_from_json,
    expr_max,
    expr_min,
    expr_neg,
    expr_scale,
    expr_sum,
    expr_to_json,
    quotient_from_json,
    quotient_to_json,
    substitute,
    to_quotient_form,
    variable,
)
from tropuiseux.roots import RootIndexError, g_numeric
from tropuiseux.sampling import random_coeffs, random_expr

from conftest import F, rationals

h = Fraction(1, 2)


def leaf(*coeffs, const=0):
    return Affine(tuple(Fraction(c) for c in coeffs), Fraction(const))


X0, X1 = variable(0, 2), variable(1, 2)


def test_build_small_cases():
    assert build_g_expr(1, 1) == leaf(1, -1)
    assert build_g_expr(2, 1) == Min((Max((leaf(1, -1, 0), leaf(h, 0, -h))),))
    assert build_g_expr(2, 2) == Min((Max((leaf(h, 0, -h),)), Max((leaf(0, 1, -1),))))
    assert build_g_expr_dual(1, 1) == leaf(1, -1)
    assert build_g_expr_dual(2, 2) == Max((Min((leaf(h, 0, -h), leaf(0, 1, -1))),))


def test_build_dual_shape():
    e = build_g_expr_dual(3, 2)
    assert isinstance(e, Max) and len(e.args) == 2
    third = Fraction(1, 3)
    assert e.args[1] == Min((leaf(third, 0, 0, -third), leaf(0, h, 0, -h)))


@pytest.mark.parametrize("build", [build_g_expr, build_g_expr_dual])
def test_build_range(build):
    with pytest.raises(RootIndexError):
        build(3, 0)
    with pytest.raises(RootIndexError):
        build(3, 4)


def test_eval_examples():
    assert eval_expr(build_g_expr(3, 2), F(0, 0, 2, 1)) == -h == g_numeric(F(0, 0, 2, 1), 2)
    assert eval_expr(Scale(2, leaf(1)), F(3)) == 6
    assert eval_expr(Neg(Min((X0, X1))), F(1, 2)) == -1


def test_algebra_examples():
    assert eval_expr(expr_min([X0, X1]), F(5, 3)) == 3
    assert eval_expr(expr_max([X0, X1]), F(5, 3)) == 5
    assert eval_expr(expr_scale(h, leaf(1, 0, -1)), F(0, 9, 4)) == -2
    assert eval_expr(expr_sum([X0, X1, constant(1, 2)]), F(5, 3)) == 9
    assert eval_expr(expr_neg(X1), F(5, 3)) == -3


def test_constructor_errors():
    with pytest.raises(ExpressionError):
        expr_min([X0, leaf(1, 0, 0)])
    with pytest.raises(ExpressionError):
        expr_max([])
    with pytest.raises(ExpressionError):
        expr_scale(0, X0)
    with pytest.raises(ExpressionError):
        expr_scale(-1, X0)
    with pytest.raises(ExpressionError):
        eval_expr(X0, F(1, 2, 3))


def test_quotient_examples():
    q = to_quotient_form(leaf(1, -1))
    assert q.num == (leaf(1, -1),) and q.den == (leaf(0, 0),)

    q = to_quotient_form(Max((X0, X1)))
    assert q.num == (leaf(1, 1),)
    assert set(q.den) == {leaf(1, 0), leaf(0, 1)}
    assert q.evaluate(F(3, 5)) == 5

    q = to_quotient_form(build_g_expr(2, 1))
    assert q.num == (leaf(Fraction(3, 2), -1, -h),)
    assert set(q.den) == {leaf(1, -1, 0), leaf(h, 0, -h)}
    assert q.evaluate(F(0, 0, 1)) == 0


def test_quotient_collapses_duplicates_keeping_smaller_constant():
    q = QuotientForm(1, [leaf(1, const=3), leaf(1, const=-2), leaf(2)], [leaf(0)])
    assert q.num == (leaf(1, const=-2), leaf(2))


def test_quotient_lists_sorted():
    q = to_quotient_form(build_g_expr(4, 2))
    for side in (q.num, q.den):
        keys = [(a.coeffs, a.const) for a in side]
        assert keys == sorted(keys)
        assert len({a.coeffs for a in side}) == len(side)


def test_term_cap():
    with pytest.raises(TermCapError):
        to_quotient_form(build_g_expr(6, 3), cap=10)


@pytest.mark.parametrize("n", range(1, 9))
def test_pointwise_against_numeric(n):
    rng = random.Random(n)
    for k in range(1, n + 1):
        e = build_g_expr(n, k)
        for _ in range(40):
            x = random_coeffs(rng, n)
            assert eval_expr(e, x) == g_numeric(x, k)


@pytest.mark.parametrize("n", range(1, 7))
def test_primal_dual_and_quotient_agree(n):
    rng = random.Random(100 + n)
    for k in range(1, n + 1):
        e, d = build_g_expr(n, k), build_g_expr_dual(n, k)
        q = to_quotient_form(e)
        for _ in range(50):
            x = random_coeffs(rng, n)
            assert eval_expr(e, x) == eval_expr(d, x) == q.evaluate(x)


exprs = st.builds(
    lambda seed, nvars, depth: random_expr(random.Random(seed), nvars, depth),
    st.integers(0, 2**32), st.integers(1, 4), st.integers(0, 4),
)


@settings(max_examples=150, deadline=None)
@given(exprs, st.lists(rationals, min_size=4, max_size=4))
def test_quotient_soundness(e, pt):
    q = to_quotient_form(e)
    z = pt[: e.nvars]
    assert q.evaluate(z) == eval_expr(e, z)


@settings(max_examples=150)
@given(exprs, st.fractions(min_value=Fraction(1, 100), max_value=100), st.lists(rationals, min_size=4, max_size=4))
def test_scale_covariance(e, c, pt):
    z = pt[: e.nvars]
    assert eval_expr(expr_scale(c, e), z) == c * eval_expr(e, z)


def test_substitute_examples():
    assert eval_expr(substitute(leaf(1, -1), [X0, X0]), F(7, -2)) == 0
    s = substitute(build_g_expr(1, 1), [leaf(2, 0), leaf(0, 1)])
    assert eval_expr(s, F(1, 3)) == -1


def test_substitute_shape():
    s = substitute(leaf(2, 0, -3, const=5), [X0, X1, X0])
    assert s == Sum((Scale(2, X0), Neg(Scale(3, X0)), constant(5, 2)))


def test_substitute_arity():
    with pytest.raises(ExpressionError):
        substitute(leaf(1, -1), [X0])
    with pytest.raises(ExpressionError):
        substitute(leaf(1, -1), [X0, leaf(1, 0, 0)])


def test_substitute_homomorphism_and_closure():
    rng = random.Random(5)
    for m in range(1, 5):
        for r in range(0, 4):
            subs = [random_expr(rng, r + 1, 3) for _ in range(m + 1)]
            for k in range(1, m + 1):
                outer = build_g_expr(m, k)
                comp = substitute(outer, subs)
                for _ in range(15):
                    z = random_coeffs(rng, r)
                    cs = [eval_expr(s, z) for s in subs]
                    val = eval_expr(comp, z)
                    assert val == eval_expr(outer, cs) == g_numeric(cs, k)
                    assert is_tropical_zero(cs, val)


def test_json_roundtrip():
    rng = random.Random(9)
    for _ in range(50):
        e = random_expr(rng, 3, 4)
        doc = expr_to_json(e)
        assert expr_from_json(doc) == e
        q = to_quotient_form(e)
        assert quotient_from_json(quotient_to_json(q)) == q


def test_json_shape():
    doc = expr_to_json(Scale(h, Neg(Min((X0, X1)))))
    assert doc == {
        "vars": 2,
        "tree": {"scale": {"c": "1/2", "of": {"neg": {"min": [
            {"affine": {"coeffs": ["1", "0"], "const": "0"}},
            {"affine": {"coeffs": ["0", "1"], "const": "0"}},
        ]}}}},
    }


@pytest.mark.parametrize(
    "doc",
    [
        {"tree": {"affine": {"coeffs": ["1"], "const": "0"}}},
        {"vars": 2, "tree": {"affine": {"coeffs": ["1"], "const": "0"}}},
        {"vars": 1, "tree": {"pow": []}},
        {"vars": 1, "tree": {"min": []}},
        {"vars": 1, "tree": {"scale": {"c": "-1", "of": {"affine": {"coeffs": ["1"]}}}}},
    ],
)
def test_json_errors(doc):
    with pytest.raises(ExpressionError):
        expr_from_json(doc)
