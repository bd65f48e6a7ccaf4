import pytest
import sympy as sp

from conftest import poly_to_sympy
from spinorlab import tables
from spinorlab.exact import gq
from spinorlab.kummer import (
    blocks_pentads_quintets,
    determinant_matches_closed_form,
    heisenberg_invariance,
    hudson_coeffs,
    hudson_comparison,
    joubert_relation_holds,
    kummer_in_c_gradient_at_a,
    kummer_in_c_vanishes_on_F_orbit,
    kummer_of,
    printed_rewriting_matches,
    residual_report,
    segre_certificate,
)

A = sp.symbols("a1 a2 a3 a4")


def test_A_at_sample_point_with_sympy_oracle():
    polyA = poly_to_sympy(tables.hudson_polynomials()["A"], A)
    assert polyA.subs(dict(zip(A, (1, 2, 3, 5)))) == 979200
    assert hudson_coeffs((1, 2, 3, 5)).A == 979200


def test_segre_cubic_with_sympy_oracle():
    P = {n: sp.Poly(poly_to_sympy(p, A), *A) for n, p in tables.hudson_polynomials().items()}
    a, b, c, d, e = (P[n] for n in "ABCDE")
    assert (4 * a**3 - (b**2 - c**2 - d**2 + e**2) * a + b * c * d).is_zero
    assert segre_certificate().paper_form["table"]


def test_determinant_route_equals_closed_form():
    assert determinant_matches_closed_form()
    assert printed_rewriting_matches()


def test_hudson_constants():
    r = hudson_comparison()
    assert r.global_constant == 1
    assert r.sign_flipped == ("B",)
    assert r.slot_constants == (gq(1), gq(-1), gq(1), gq(1), gq(1))


def test_heisenberg_fixes_hudson_quartics():
    assert heisenberg_invariance()


def test_kummer_in_c_singular_at_a():
    assert all(g.is_zero() for g in kummer_in_c_gradient_at_a())
    assert kummer_in_c_vanishes_on_F_orbit((1, 2, 3, 5))


def test_kummer_quartic_lies_in_hudson_span():
    assert kummer_of((1, 2, 3, 5)).coordinates() is not None


@pytest.mark.slow
def test_blocks_pentads_quintets():
    r = blocks_pentads_quintets()
    assert r.ok
    assert len(r.pentads_found) == 6 and len(r.quintets_found) == 6
    assert r.global_constant == 1


@pytest.mark.parametrize("pentad", [1, 4])
def test_joubert_relation_at_point(pentad):
    assert joubert_relation_holds(pentad, (1, 2, 3, 5))


def test_residual_decomposition():
    r = residual_report(1)
    assert r.decomposition_holds and r.thirty_two_identity
