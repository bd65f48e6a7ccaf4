import pytest
import sympy as sp

from conftest import poly_to_sympy
from spinorlab.cartan import (
    PRESET_NAMES,
    CartanPoint,
    abelian_failures,
    cartan_bases,
    conic_type,
    gamma_a,
    gamma_a_scale,
    preset_section,
    section_from_cartan,
    section_smooth,
    verify_cartan_abelian,
)
from spinorlab.spinor import is_pure, quadratic_value

SMOOTH_TABLE = {
    "codim2-1": True,
    "codim2-2": True,
    "codim3-1": True,
    "codim3-2": True,
    "codim3-3": True,
    "codim3-6": True,
    "codim3-4": False,
    "nil-n0": False,
    "nil-n1": True,
    "nil-n2": True,
    "nil-n3": True,
}


def test_both_cartan_subspaces_are_abelian():
    assert verify_cartan_abelian()


def test_uncalibrated_pairing_breaks_the_relations():
    plus, minus = cartan_bases()
    assert abelian_failures(plus, "plain") or abelian_failures(minus, "plain")


def test_cartan_basis_spinors_are_pure():
    plus, minus = cartan_bases()
    assert all(is_pure(d) for row in plus + minus for d in row)


def test_gamma_a_scale_is_two():
    assert gamma_a_scale() == 2


def test_gamma_a_quadrics_are_isotropic_for_sympy():
    """q(gamma_a(x)) vanishes identically: gamma_a lands in the quadric of V10."""
    q = quadratic_value(gamma_a())
    assert sp.expand(poly_to_sympy(q)) == 0


@pytest.mark.parametrize("name,expected", sorted(SMOOTH_TABLE.items()))
def test_smoothness_table(name, expected):
    assert section_smooth(preset_section(name)) is expected


@pytest.mark.parametrize("name,rank", [("codim3-1", 3), ("codim3-2", 2), ("codim3-3", 1), ("codim3-6", 0)])
def test_conic_ranks(name, rank):
    assert conic_type(preset_section(name)) == rank


def test_codimension_of_presets():
    for name in PRESET_NAMES:
        s = preset_section(name)
        expected = int(name[5]) if name.startswith("codim") else 4
        assert s.rank == expected


def test_unknown_preset():
    with pytest.raises(KeyError):
        preset_section("codim9-9")


def test_zero_point_is_rejected():
    with pytest.raises(ValueError):
        section_from_cartan((0, 0, 0, 0))
    with pytest.raises(ValueError):
        CartanPoint((1, 2, 3))


def test_generic_cartan_section_is_smooth():
    assert section_smooth(section_from_cartan((1, 2, 3, 5)))
