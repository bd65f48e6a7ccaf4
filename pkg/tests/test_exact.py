from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given, settings, strategies as st

from conftest import gq_to_sympy, poly_to_sympy
from spinorlab.exact import (
    ExactMatrix,
    GaussianRational,
    MultiPoly,
    NoSolution,
    express_in_span,
    gq,
    parse_gaussian,
    proportionality,
    span_rank,
    variables,
)

small = st.fractions(min_value=-20, max_value=20, max_denominator=12)
gaussians = st.builds(GaussianRational, small, small)


@given(gaussians, gaussians)
def test_field_operations_agree_with_sympy(x, y):
    sx, sy = gq_to_sympy(x), gq_to_sympy(y)
    assert gq_to_sympy(x + y) == sp.expand(sx + sy)
    assert gq_to_sympy(x * y) == sp.expand(sx * sy)
    assert gq_to_sympy(x - y) == sp.expand(sx - sy)
    if y:
        assert sp.simplify(gq_to_sympy(x / y) - sx / sy) == 0


@given(gaussians)
def test_string_round_trip(x):
    assert parse_gaussian(str(x)) == x


@pytest.mark.parametrize(
    "text,value",
    [("3", gq(3)), ("-1/2", gq(Fraction(-1, 2))), ("1/2+1/3i", gq(Fraction(1, 2), Fraction(1, 3))), ("-i", gq(0, -1)), ("2-i", gq(2, -1))],
)
def test_literal_grammar(text, value):
    assert parse_gaussian(text) == value


@pytest.mark.parametrize("bad", ["0.5", "1e3", "x", "1/0.2", "", "1//2"])
def test_decimals_and_garbage_are_rejected(bad):
    with pytest.raises((ValueError, ZeroDivisionError)):
        parse_gaussian(bad)


def test_no_floats():
    with pytest.raises(TypeError):
        GaussianRational.coerce(1.5j)


coeff_lists = st.lists(st.integers(-5, 5), min_size=1, max_size=6)


def _poly(coeffs, names=("x", "y", "z")):
    x, y, z = variables(names)
    mons = [MultiPoly.constant(1, names), x, y, z, x * y, y * z * z]
    return sum((c * m for c, m in zip(coeffs, mons)), MultiPoly.constant(0, names))


@settings(max_examples=40, deadline=None)
@given(coeff_lists, coeff_lists)
def test_polynomial_product_matches_sympy(a, b):
    p, q = _poly(a), _poly(b)
    assert sp.expand(poly_to_sympy(p * q) - poly_to_sympy(p) * poly_to_sympy(q)) == 0


@settings(max_examples=40, deadline=None)
@given(coeff_lists)
def test_derivative_matches_sympy(a):
    p = _poly(a) ** 2
    x = sp.Symbol("x")
    assert sp.expand(poly_to_sympy(p.diff("x")) - sp.diff(poly_to_sympy(p), x)) == 0


def test_substitution_and_evaluation():
    x, y = variables("x y")
    p = x**3 - 2 * x * y + gq(0, 1) * y**2
    assert p.evaluate({"x": 2, "y": gq(1, 1)}) == gq(8) - gq(4, 4) + gq(0, 1) * gq(0, 2)
    sub = p.substitute({"x": y + 1})
    assert sp.expand(poly_to_sympy(sub) - poly_to_sympy(p).subs(sp.Symbol("x"), sp.Symbol("y") + 1)) == 0


def test_exact_division():
    x, y = variables("x y")
    f = (x - y) * (x**2 + 3 * y)
    assert f.exact_divide(x - y) == x**2 + 3 * y


matrices = st.lists(st.lists(st.integers(-4, 4), min_size=4, max_size=4), min_size=4, max_size=4)


@settings(max_examples=30, deadline=None)
@given(matrices)
def test_determinant_and_rank_match_sympy(rows):
    m = ExactMatrix([[gq(v, (v * 3) % 5 - 2) for v in r] for r in rows])
    ref = sp.Matrix([[gq_to_sympy(m[i, j]) for j in range(4)] for i in range(4)])
    assert sp.expand(gq_to_sympy(m.det()) - ref.det()) == 0
    assert m.rank() == ref.rank(simplify=True)


def test_char_poly_matches_sympy():
    rows = [[1, 2, 0], [0, 1, -1], [3, 0, 2]]
    lam = sp.Symbol("lambda")
    got = poly_to_sympy(ExactMatrix(rows).char_poly())
    assert sp.expand(got - sp.Matrix(rows).charpoly(lam).as_expr()) == 0


def test_inverse_and_solve():
    m = ExactMatrix([[2, 1], [1, gq(0, 1)]])
    assert m * m.inverse() == ExactMatrix.identity(2)
    sol = m.solve([3, 1])
    assert m.apply(sol) == [gq(3), gq(1)]
    with pytest.raises(NoSolution):
        ExactMatrix([[1, 1], [1, 1]]).solve([0, 1])


def test_span_helpers():
    x, y = variables("x y")
    basis = [x * x, x * y, y * y]
    assert span_rank(basis + [(x + y) ** 2]) == 3
    coords = express_in_span((x + y) ** 2, basis)
    assert [str(c) for c in coords] == ["1", "2", "1"]
    assert express_in_span(x**3, basis) is None
    assert proportionality(3 * (x + y), x + y) == gq(3)
    assert proportionality(x, y) is None
