import sympy as sp
from hypothesis import assume, given, settings, strategies as st

from conftest import binary_to_sympy, cayley_omega
from spinorlab.binaryforms import BinaryForm, transvectant
from spinorlab.exact import gq
from spinorlab.models import (
    bolza_sextic,
    gl2_weight_check,
    pi_map,
    sextic_quartic_contraction,
    sl2sl2_equations,
    sl2sl2_model,
    SL2Constants,
    theta_degenerate,
    theta_generic,
    very_special_model,
)

sextics = st.lists(st.integers(-3, 3), min_size=7, max_size=7).map(BinaryForm.from_plain)


def test_bolza_sextic_is_killed_with_sympy_oracle():
    x, y = sp.symbols("x y")
    bolza = x * y * (x**4 + y**4)
    assert sp.expand(binary_to_sympy(bolza_sextic()) - bolza) == 0
    assert cayley_omega(bolza, bolza, 4) == 0
    assert pi_map(bolza_sextic()).is_zero()


@settings(max_examples=12)
@given(sextics)
def test_pi_is_the_fourth_transvectant(p):
    x = binary_to_sympy(p)
    assert sp.expand(binary_to_sympy(pi_map(p)) - cayley_omega(x, x, 4) / 16) == 0


@given(sextics, st.tuples(*[st.integers(-2, 2)] * 4))
def test_pi_equivariance(p, m):
    a, b, c, d = m
    det = a * d - b * c
    assume(det)
    mat = ((a, b), (c, d))
    assert pi_map(p.substitute(mat)) == pi_map(p).substitute(mat).scale(gq(det) ** 4)


@given(sextics)
def test_contraction_vanishes_on_the_pi_image(p):
    assert sextic_quartic_contraction(pi_map(p), p).is_zero()


def test_only_the_third_transvectant_vanishes_on_the_image():
    p = BinaryForm.from_plain([1, 2, 0, -1, 3, 0, 5])
    vanishing = [r for r in range(5) if transvectant(pi_map(p), p, r).is_zero()]
    assert vanishing == [3]


def test_very_special_record():
    r = very_special_model()
    assert r.ok
    assert r.pi_span_dimension == r.grassmannian_span_dimension == r.joint_span_dimension == 5


def test_sl2sl2_record():
    r = sl2sl2_model()
    assert r.ok
    assert r.constant_space_dimension == 2
    assert r.constants == (gq(1), gq(1), gq(-1), gq(1))
    assert r.product_relation == 0
    assert r.stabilizer_order == 10 and r.xi_order == 10
    assert (3, 1) in r.stabilizer_exponents


def test_equations_are_swap_robust():
    consts = SL2Constants(*sl2sl2_model().constants)
    for theta in (theta_generic(), theta_degenerate()):
        assert all(not v for vals in sl2sl2_equations(theta.swap(), consts).values() for v in vals)


def test_generic_theta_components():
    comps = theta_generic().components()
    assert set(comps) == {f"{x}{i}.{y}{m}" for x, y in (("a", "b"), ("b", "a")) for i in (1, 2) for m in ("11", "12", "22")}


def test_gl2_characters():
    r = gl2_weight_check()
    assert r.ok
    assert (r.invariants_even, r.invariants_odd) == (2, 2)
    assert r.total_dimension == 32
