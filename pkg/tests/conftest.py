"""Shared helpers: a bridge from the exact types to sympy, which serves as the oracle."""

import pytest
import sympy as sp
from hypothesis import settings

settings.register_profile("exact", deadline=None, max_examples=50)
settings.load_profile("exact")

from spinorlab.exact import GaussianRational, MultiPoly


def gq_to_sympy(c: GaussianRational):
    return sp.Rational(c.re.numerator, c.re.denominator) + sp.I * sp.Rational(c.im.numerator, c.im.denominator)


def poly_to_sympy(p, symbols=None):
    """MultiPoly (or a bare number) -> sympy expression in symbols named after its variables."""
    if isinstance(p, GaussianRational):
        return gq_to_sympy(p)
    if not isinstance(p, MultiPoly):
        return sp.nsimplify(p)
    syms = symbols if symbols is not None else [sp.Symbol(n) for n in p.variables]
    out = sp.Integer(0)
    for exp, c in p.terms.items():
        term = gq_to_sympy(c)
        for s, k in zip(syms, exp):
            term *= s**k
        out += term
    return out


def sympy_is_zero(expr) -> bool:
    return sp.expand(expr) == 0


@pytest.fixture(scope="session")
def to_sympy():
    return poly_to_sympy


X, Y = sp.symbols("x y")


def binary_to_sympy(f, x=X, y=Y):
    """A BinaryForm as an expression in x, y (plain coefficients)."""
    d = f.degree
    return sum(poly_to_sympy(c) * x ** (d - k) * y**k for k, c in enumerate(f.plain()))


def cayley_omega(F, G, r, x=X, y=Y):
    """Omega^r applied to F(x1, y1) G(x2, y2), then restricted to the diagonal."""
    x1, y1, x2, y2 = sp.symbols("x1 y1 x2 y2")
    h = F.subs({x: x1, y: y1}) * G.subs({x: x2, y: y2})
    for _ in range(r):
        h = sp.diff(h, x1, y2) - sp.diff(h, y1, x2)
    return sp.expand(h.subs({x1: x, y1: y, x2: x, y2: y}))
