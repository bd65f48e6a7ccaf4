import pytest
import sympy as sp
from sympy.combinatorics import Permutation, PermutationGroup

from conftest import gq_to_sympy
from spinorlab.exact import ExactMatrix, gq
from spinorlab.reflection import (
    block_pentad_quintet_actions,
    commutation_table,
    cycle_notation,
    enumerate_flats,
    generators,
    heisenberg_generators,
    heisenberg_group,
    hyperplane_action,
    is_transitive,
    line_point_incidence,
    on_special_line,
    pentad_stabilizer,
    printed_generators,
    special_lines,
    valency_histogram,
    weyl_group,
)


def _perm(one_based):
    return Permutation([k - 1 for k in one_based])


def _sympy(m: ExactMatrix):
    return sp.Matrix(4, 4, lambda i, j: gq_to_sympy(m[i, j]))


@pytest.mark.parametrize("k", range(5))
def test_generators_are_unitary_reflections(k):
    s = _sympy(generators()[k])
    assert sp.simplify(s * s.H - sp.eye(4)) == sp.zeros(4)
    assert sp.expand(s * s) == sp.eye(4)
    assert (s - sp.eye(4)).rank() == 1


def test_printed_matrices_are_transposes():
    assert all(g == p.transpose() for g, p in zip(generators(), printed_generators()))


def test_group_order_and_center():
    W = weyl_group()
    assert W.order == 46080
    assert len(W.center(generators())) == 4


def test_hyperplane_permutation_group_order_with_sympy():
    """W acts on the 60 hyperplanes with kernel the four scalars."""
    perms = [_perm(hyperplane_action(s)) for s in generators()]
    assert PermutationGroup(perms).order() == 46080 // 4
    assert is_transitive([hyperplane_action(s) for s in generators()], 60)


def test_heisenberg_group():
    g = heisenberg_generators()
    assert heisenberg_group().order == 64
    assert g[0] * g[1] * g[2] * g[3] == ExactMatrix.identity(4) * gq(0, 1)
    table = commutation_table(g)
    anti = {k for k, v in table.items() if v == "anticommute"}
    assert anti == {(1, 5), (2, 3), (2, 4), (3, 4), (3, 5)}


def test_quintet_and_pentad_actions():
    acts = [block_pentad_quintet_actions(s) for s in generators()]
    assert [cycle_notation(a["quintets"]) for a in acts] == ["(12)", "(56)", "(34)", "(23)", "(46)"]
    assert [cycle_notation(a["pentads"]) for a in acts] == [
        "(12)(34)(56)",
        "(12)(36)(45)",
        "(12)(35)(46)",
        "(14)(25)(36)",
        "(16)(25)(34)",
    ]
    quint = PermutationGroup([_perm(a["quintets"]) for a in acts])
    assert quint.order() == 720


def test_pentad_stabilizer():
    r = pentad_stabilizer()
    assert (r.order, r.index, r.contains_center) == (7680, 6, True)


def test_special_lines():
    assert len(special_lines()) == 30
    assert on_special_line((0, 0, 1, 2))
    assert not on_special_line((1, 2, 3, 5))


@pytest.mark.slow
def test_flats_histogram_and_incidence():
    lines, points = enumerate_flats()
    assert valency_histogram(lines) == {2: 360, 3: 320, 6: 30}
    assert valency_histogram(points) == {4: 960, 6: 480, 15: 60}
    inc = line_point_incidence()
    assert inc["points_per_line"] == [6] and inc["lines_per_point"] == [3] and inc["points"] == 60
