from itertools import combinations

import networkx as nx
import pytest
from hypothesis import given, strategies as st

from spinorlab.config16 import (
    automorphism_report,
    automorphisms,
    build_configuration,
    format_weight,
    grid_mismatches,
    incident,
    parse_weight,
    preserves_incidence,
    verify_grids,
    wd6_homomorphism,
    wd6_image,
    weights,
)


def _incidence_graph():
    cfg = build_configuration()
    g = nx.Graph()
    g.add_nodes_from(("P", i) for i in range(16))
    g.add_nodes_from(("H", j) for j in range(16))
    g.add_edges_from((("P", i), ("H", j)) for i in range(16) for j in range(16) if cfg.incidence[i][j])
    return g


def test_six_regular_and_non_degenerate():
    cfg = build_configuration()
    assert cfg.regular_degrees() == ({6}, {6})
    assert cfg.non_degenerate()


def test_pairs_share_two_planes_independently():
    pts, pls = weights(1), weights(-1)
    for p, q in combinations(pts, 2):
        assert sum(incident(p, h) and incident(q, h) for h in pls) == 2


@given(st.sampled_from(weights(1) + weights(-1)))
def test_weight_text_round_trip(w):
    assert parse_weight(format_weight(w)) == w


def test_grids():
    assert verify_grids()
    assert grid_mismatches() == []


def test_wd6_image():
    r = wd6_homomorphism()
    assert r.group_order == 23040 and r.image_order == 11520
    signs = sorted(k[1] for k in r.kernel)
    assert signs == [(-1,) * 6, (1,) * 6]


def test_incidence_graph_structure_with_networkx():
    g = _incidence_graph()
    for n in g.nodes:
        g.nodes[n]["side"] = n[0]
    assert nx.is_bipartite(g) and nx.is_connected(g)
    assert nx.diameter(g) == 3
    swapped = nx.relabel_nodes(g, {n: ("H" if n[0] == "P" else "P", n[1]) for n in g.nodes})
    for n in swapped.nodes:
        swapped.nodes[n]["side"] = n[0]
    assert nx.is_isomorphic(g, swapped, node_match=lambda a, b: a["side"] == b["side"])


@pytest.mark.slow
def test_automorphism_counts():
    r = automorphism_report()
    assert (r.side_preserving, r.side_swapping, r.point_orbit_size) == (11520, 11520, 16)


@pytest.mark.slow
def test_wd6_image_is_the_full_automorphism_group():
    autos = set(automorphisms())
    image = wd6_image()
    assert image <= autos and len(autos) == len(image)
    assert all(preserves_incidence(pp, qq) for pp, qq in list(image)[:200])
