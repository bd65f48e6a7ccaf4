from fractions import Fraction

import sympy as sp
from hypothesis import given, strategies as st

from conftest import poly_to_sympy
from spinorlab.complexes import (
    PlueckerQuadric,
    f_invariance,
    fiber_contains_F_orbit,
    igusa_membership,
    igusa_quartic,
    pencil_discriminant,
    quartet_span,
    theta_coefficients,
    theta_coefficients_symbolic,
    theta_consistency,
)
from spinorlab.exact import gq

A = sp.symbols("a1 a2 a3 a4")


def test_theta_at_first_basis_vector():
    assert theta_coefficients((1, 0, 0, 0)) == (0, 0, gq(Fraction(2, 3)), 0, gq(Fraction(-1, 3)))


def test_theta_constant():
    r = theta_consistency()
    assert r.holds and r.constant == -1


def _igusa_sympy(t0, t1, t2, t3, t4):
    # typed independently of the package
    return (
        t0**4 + t1**4 + t3**4 + 2 * t0**2 * t1**2 + 2 * t0**2 * t3**2 - 2 * t1**2 * t3**2
        - (2 * t0**2 + t1**2 - 2 * t3**2) * t2**2
        - (5 * t0**2 + t1**2 + t3**2) * t2 * t4
        - (2 * t0**2 - 2 * t1**2 + t3**2) * t4**2
    )


def test_igusa_membership_with_sympy_oracle():
    ts = [poly_to_sympy(t, A) for t in theta_coefficients_symbolic()]
    assert sp.Poly(_igusa_sympy(*ts), *A).is_zero
    assert igusa_membership()


def test_igusa_quartic_matches_independent_transcription():
    T = sp.symbols("t0 t1 t2 t3 t4")
    assert sp.expand(poly_to_sympy(igusa_quartic(), T) - _igusa_sympy(*T)) == 0


@given(st.lists(st.integers(-6, 6), min_size=4, max_size=4).filter(any))
def test_theta_point_lies_on_igusa(a):
    t = theta_coefficients(a)
    assert igusa_quartic().evaluate(dict(zip(("t0", "t1", "t2", "t3", "t4"), t))) == 0


def test_theta_quadric_round_trip():
    t = theta_coefficients((1, 2, 3, 5))
    q = PlueckerQuadric.from_t(t)
    gram = q.gram()
    assert all(gram[i][j] == gram[j][i] for i in range(6) for j in range(6))


def test_heisenberg_fixes_t_projectively():
    chars = f_invariance()
    assert all(c is not None for c in chars.values())


def test_f_orbit_in_one_fiber():
    r = fiber_contains_F_orbit(seed=7)
    assert r["distinct_points"] == 16 and r["same_t"]


def test_quartets_span_the_five_space():
    r = quartet_span()
    assert r.ok and r.rank == 5


def test_pencil_discriminant_with_sympy_oracle():
    r = pencil_discriminant()
    assert r.block_diagonal and r.constant == -16 and not r.printed_reading_holds
    lam, mu = sp.symbols("lam mu")
    ring = A + (lam, mu)
    product = 1
    for d in r.quadratics.values():
        product *= sp.discriminant(poly_to_sympy(d, ring).subs(mu, 1), lam)
    a1, a2, a3, a4 = A
    expected = -16 * a1**2 * a2**2 * a3**2 * a4**2 * (a1**4 - a2**4) ** 2 * (a3**4 - a4**4) ** 2
    assert sp.expand(product - expected) == 0
