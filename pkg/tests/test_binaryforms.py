from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import assume, given, strategies as st

from conftest import X, Y, binary_to_sympy as _sym, cayley_omega as _omega, gq_to_sympy
from spinorlab.binaryforms import (
    AP_map,
    BinaryForm,
    ap_from_pluecker,
    ap_map,
    apolarity_matrix,
    catalecticant,
    contract,
    discriminant_pairing,
    form,
    inversion_identities,
    j_invariant,
    jacobian,
    pluecker,
    pluecker_relation,
    resultant,
    resultant_from_pluecker,
    sylvester_resultant,
    transvectant,
)
from spinorlab.exact import gq

small = st.integers(-4, 4)


def forms(d):
    return st.lists(small, min_size=d + 1, max_size=d + 1).map(lambda c: BinaryForm.from_plain(c))


@given(forms(3), forms(4), st.integers(0, 3))
def test_raw_transvectant_matches_cayley_operator(f, g, r):
    got = _sym(transvectant(f, g, r, "raw"))
    assert sp.expand(got - _omega(_sym(f), _sym(g), r)) == 0


@given(forms(4), forms(4), st.integers(0, 4))
def test_transvectant_symmetry(f, g, r):
    assert transvectant(f, g, r) == transvectant(g, f, r).scale((-1) ** r)


@given(forms(3), forms(2), st.integers(0, 2), st.tuples(small, small, small, small))
def test_transvectant_equivariance(f, g, r, m):
    a, b, c, d = m
    det = a * d - b * c
    assume(det != 0)
    mat = ((a, b), (c, d))
    lhs = transvectant(f.substitute(mat), g.substitute(mat), r)
    rhs = transvectant(f, g, r).substitute(mat).scale(gq(det) ** r)
    assert lhs == rhs


def test_quadratic_normalizations():
    x2, y2, xy = form(1, 0, 0), form(0, 0, 1), form(0, Fraction(1, 2), 0)
    assert jacobian(x2, y2).plain() == (0, 2, 0)
    assert jacobian(x2, xy).plain() == (1, 0, 0)
    assert jacobian(xy, y2).plain() == (0, 0, 1)
    assert discriminant_pairing(x2).plain() == (0,)
    assert discriminant_pairing(x2, y2).plain() == (1,)
    assert discriminant_pairing(xy).plain() == (Fraction(-1, 2),)


@given(forms(3), forms(3))
def test_ap_is_apolar_to_both_cubics(c1, c2):
    kappa = ap_map(c1, c2)
    assert contract(c1, kappa).is_zero() and contract(c2, kappa).is_zero()
    rows = apolarity_matrix(c1, c2)
    assert all(sum((r[k] * kappa.coeffs[k] for k in range(5)), gq(0)) == 0 for r in rows)


@given(forms(4))
def test_AP_pencil_is_in_catalecticant_kernel(kappa):
    p = AP_map(kappa)
    assert pluecker_relation(p) == 0
    cat = catalecticant(kappa)
    # p_ij, read as a decomposable 2-vector, is annihilated by the catalecticant rows
    for row in cat:
        contraction = [sum((row[i] * (p.get((i, j)) or -p.get((j, i), 0)) for i in range(4) if i != j), gq(0)) for j in range(4)]
        assert all(v == 0 for v in contraction)


def test_inversion_constants():
    cert = inversion_identities()
    assert cert.holds
    assert (cert.resultant_constant, cert.j_constant) == (gq(1), gq(1))


@given(forms(3), forms(3))
def test_inversion_identities_numerically(c1, c2):
    p = pluecker(c1, c2)
    back = AP_map(ap_map(c1, c2))
    syl = sylvester_resultant(c1, c2)
    assert all(back[k] == p[k] * syl for k in p)


@given(forms(4))
def test_ap_after_AP_numerically(kappa):
    assert ap_from_pluecker(AP_map(kappa)) == kappa.scale(j_invariant(kappa))


def test_sylvester_values():
    x3, y3, x2y = (BinaryForm.from_plain(c) for c in ([1, 0, 0, 0], [0, 0, 0, 1], [0, 1, 0, 0]))
    assert sylvester_resultant(x3, y3) == -1
    assert sylvester_resultant(x3, x2y) == 0


@given(st.lists(small, min_size=4, max_size=4), st.lists(small, min_size=4, max_size=4))
def test_displayed_determinant_is_resultant_on_plain_coefficients(a, b):
    assume(a[0] and b[0])
    expected = sp.resultant(sp.Poly(a, X), sp.Poly(b, X))
    got = sylvester_resultant(BinaryForm(tuple(a)), BinaryForm(tuple(b)))
    assert gq_to_sympy(got) == -expected


@given(forms(3), forms(3))
def test_resultant_matches_sympy(c1, c2):
    assume(c1.plain()[0] and c2.plain()[0])
    ref = sp.resultant(sp.Poly(_sym(c1).subs(Y, 1), X), sp.Poly(_sym(c2).subs(Y, 1), X))
    assert gq_to_sympy(resultant(c1, c2)) == ref


def test_weighted_reading_is_not_a_resultant():
    """Under binomial weights the displayed determinant is not an invariant of the pencil."""
    pairs = [([1, -6, 11, -6], [1, 0, 0, 1]), ([2, 1, 0, 3], [1, -1, 1, 1])]
    ratios = set()
    for a, b in pairs:
        f, g = BinaryForm.from_plain(a), BinaryForm.from_plain(b)
        ratios.add(sylvester_resultant(f, g) / resultant(f, g))
    assert len(ratios) == 2


@given(forms(3), forms(3))
def test_resultant_is_cubic_in_pluecker_coordinates(c1, c2):
    assert resultant_from_pluecker(pluecker(c1, c2)) == sylvester_resultant(c1, c2)


def test_degree_errors():
    with pytest.raises(ValueError):
        transvectant(form(1, 0), form(1, 0, 0), 2)
    with pytest.raises(ValueError):
        sylvester_resultant(form(1, 0), form(1, 0, 0, 0))
