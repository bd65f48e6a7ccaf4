import pytest
import sympy as sp
from hypothesis import given, settings, strategies as st

from conftest import poly_to_sympy
from spinorlab.exact import MultiPoly, variables
from spinorlab.groebner import BudgetExhausted, Ideal, buchberger, only_trivial_zero

NAMES = ("x", "y", "z")


def _sympy_gb(polys, order):
    syms = sp.symbols(NAMES)
    return sp.groebner([poly_to_sympy(p) for p in polys], *syms, order=order)


@pytest.mark.parametrize("order", ["grevlex", "lex"])
def test_reduced_basis_matches_sympy(order):
    x, y, z = variables(NAMES)
    polys = [x**2 + y * z - 1, x * y - z**2, y**3 - x * z]
    gb = buchberger(Ideal.of(polys, NAMES), order=order)
    ref = _sympy_gb(polys, order)
    syms = sp.symbols(NAMES)
    ours = {sp.Poly(poly_to_sympy(g), *syms).monic() for g in gb.polys}
    theirs = {sp.Poly(g, *syms).monic() for g in ref.exprs}
    assert ours == theirs


coeff = st.integers(-3, 3)


@settings(max_examples=25)
@given(st.lists(coeff, min_size=6, max_size=6), st.lists(coeff, min_size=6, max_size=6))
def test_membership_agrees_with_sympy(a, b):
    x, y, z = variables(NAMES)
    mons = [x * x, x * y, y * y, y * z, z * z, x * z]
    f = sum((c * m for c, m in zip(a, mons)), MultiPoly.constant(0, NAMES)) + x
    g = sum((c * m for c, m in zip(b, mons)), MultiPoly.constant(0, NAMES)) + y
    gb = buchberger(Ideal.of([f, g], NAMES))
    ref = _sympy_gb([f, g], "grevlex")
    probe = f * (x + 2 * z) - g * y * y
    assert gb.contains(probe)
    other = x * y * z + 1
    assert gb.contains(other) == ref.contains(poly_to_sympy(other))


def test_trivial_zero_detection():
    x, y, z = variables(NAMES)
    assert only_trivial_zero(Ideal.of([x * x, y * y, z * z], NAMES))
    assert not only_trivial_zero(Ideal.of([x * y, y * z, z * x], NAMES))
    assert not only_trivial_zero(Ideal.of([x * x + y * y + z * z], NAMES))


def test_budget_is_enforced():
    x, y, z = variables(NAMES)
    polys = [x**3 - y * z, y**3 - x * z, z**3 - x * y, x * y * z - 1]
    with pytest.raises(BudgetExhausted):
        buchberger(Ideal.of(polys, NAMES), budget=2)
