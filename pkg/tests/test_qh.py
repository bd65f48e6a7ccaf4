import pytest
import sympy as sp
from hypothesis import given, strategies as st

from spinorlab.qh import (
    BASIS,
    CODIM,
    FIGURE_EDGES,
    PRINTED_CELL_DIMENSIONS,
    associativity_failures,
    cell_dimensions,
    classical_ring,
    figure_graph,
    full_graph,
    gkm_classes,
    gkm_divisible,
    gkm_record,
    gkm_solve_reports,
    multiply,
    poincare_matrix,
    printed_table,
    quantum_ring,
    quantum_table,
    sigma1_matrix,
    sigma1_matrix_spectrum,
    tangent_weights,
    vertex,
)

vectors = st.lists(st.integers(-3, 3), min_size=8, max_size=8).map(tuple)


def test_classical_ring():
    r = classical_ring()
    assert r.ok and r.poincare_determinant in (1, -1)


def test_poincare_pairing_is_unimodular_with_sympy():
    m = poincare_matrix(printed_table())
    assert abs(sp.Matrix(8, 8, lambda i, j: int(m[i, j].re)).det()) == 1


@given(vectors, vectors, vectors)
def test_classical_associativity_on_random_elements(u, v, w):
    t = printed_table()
    assert multiply(t, multiply(t, u, v), w) == multiply(t, u, multiply(t, v, w))


def test_classical_table_is_graded():
    t = printed_table()
    for (x, y), vec in t.items():
        for b, c in zip(BASIS, vec):
            assert not c or CODIM[b] == CODIM[x] + CODIM[y]


def test_graph_sizes():
    assert len(FIGURE_EDGES) == 12
    assert len(figure_graph().edges) == 12
    degrees = sorted(e.degree for e in full_graph().edges)
    assert len(degrees) == 24
    assert {d: degrees.count(d) for d in set(degrees)} == {1: 16, 2: 4, 3: 4}


def test_tangent_weights_at_base_vertex():
    weights = set(tangent_weights()[vertex("a1b1^2")])
    assert weights == {(2, 0), (0, 2), (-1, 1), (1, 1), (3, 1), (-1, 3)}


def test_cell_dimensions():
    dims = cell_dimensions()
    assert all(dims[vertex(n)] == d for n, d in PRINTED_CELL_DIMENSIONS.items())


def test_figure_edges_alone_underdetermine_the_classes():
    reports = gkm_solve_reports()
    assert any(r.kernel_dimension_figure > 0 for r in reports)
    assert all(r.kernel_dimension_full == 0 for r in reports)


def test_gkm_classes_are_divisible():
    classes = gkm_classes()
    assert all(gkm_divisible(c) for c in classes.values())


@pytest.mark.slow
def test_gkm_record():
    r = gkm_record()
    assert r.ok
    assert r.s3pp_s1_corrected and not r.s3pp_s1_as_printed


def test_quantum_ring():
    r = quantum_ring()
    assert r.ok and r.sigma1_fourth_is_12s4_plus_5q


def test_quantum_associativity_on_all_triples():
    table = quantum_table()
    zero = next(iter(table.values()))["s0"] * 0
    vecs = {k: tuple(v[b] for b in BASIS) for k, v in table.items()}
    assert not associativity_failures(vecs, zero)


def test_sigma1_matrix_with_sympy_oracle():
    m = sigma1_matrix(1)
    M = sp.Matrix(8, 8, lambda i, j: int(m[i, j].re))
    lam = sp.Symbol("l")
    chi = M.charpoly(lam).as_expr()
    assert sp.expand(chi - (lam**8 - 34 * lam**4 + 1)) == 0
    assert sp.gcd(chi, sp.diff(chi, lam)) == 1
    assert sigma1_matrix_spectrum().ok


def test_render_is_stable():
    text = sigma1_matrix_spectrum().render()
    assert text.splitlines()[-1] == "chi(l) = 1*l^8 + -34*l^4 + 1*l^0"
    assert len(text.splitlines()) == 9
