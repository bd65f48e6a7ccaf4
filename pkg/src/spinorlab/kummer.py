"""Kummer quartics attached to Cartan points, and the block combinatorics.

The Kummer surface of a quadratic complex is the discriminant of the conic
cut on each plane of P^3; for complexes of the shape of Theta(a) it lands
in the five-dimensional space spanned by

    K1 = x^4+y^4-z^4-t^4,  K2 = x^2y^2-z^2t^2,  K3 = x^2z^2+y^2t^2,
    K4 = x^2t^2+y^2z^2,    K5 = 2xyzt,

with degree-12 coefficients A..E in a.  Those coefficients are tied to the
60 reflection hyperplanes through the 15 blocks (products of 12 forms) and
the 6 pentads (blocks partitioning the 60 forms).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, product
from typing import Dict, List, Optional, Sequence, Tuple

from . import tables
from .cartan import A_NAMES
from .complexes import T_NAMES, igusa_quartic, theta_coefficients_symbolic
from .exact import (
    ExactMatrix,
    GaussianRational,
    MultiPoly,
    generic_det,
    gq,
    proportionality,
)

XYZT: Tuple[str, ...] = ("x", "y", "z", "t")
COEFF_NAMES: Tuple[str, ...] = ("P", "Q", "R", "S", "T")
HUDSON_SLOTS = tables.HUDSON_NAMES


def _xyzt(ring: Sequence[str] = XYZT):
    return [MultiPoly.var(n, ring) for n in XYZT]


def basis_quartics(ring: Sequence[str] = XYZT) -> Tuple[MultiPoly, ...]:
    """(K1, .., K5)."""
    x, y, z, t = _xyzt(ring)
    return (
        x**4 + y**4 - z**4 - t**4,
        x**2 * y**2 - z**2 * t**2,
        x**2 * z**2 + y**2 * t**2,
        x**2 * t**2 + y**2 * z**2,
        2 * x * y * z * t,
    )


def hudson_quartics(ring: Sequence[str] = XYZT) -> Tuple[MultiPoly, ...]:
    """The Heisenberg-invariant quartics in Hudson's order (A, B, C, D, E slots)."""
    x, y, z, t = _xyzt(ring)
    return (
        x**2 * y**2 + z**2 * t**2,
        x**2 * z**2 + y**2 * t**2,
        x**2 * t**2 + y**2 * z**2,
        2 * x * y * z * t,
        x**4 + y**4 + z**4 + t**4,
    )


@dataclass(frozen=True)
class Quartic3:
    """A quartic in x, y, z, t; coefficients may involve a1..a4."""

    poly: MultiPoly

    def coordinates(self) -> Optional[Tuple[object, ...]]:
        """Coefficients on K1..K5, or None when the quartic is outside their span."""
        ring = self.poly.variables
        ks = basis_quartics(tuple(ring) + tuple(v for v in XYZT if v not in ring))
        # read coefficients of the five distinguished monomials
        reps = [(4, 0, 0, 0), (2, 2, 0, 0), (2, 0, 2, 0), (2, 0, 0, 2), (1, 1, 1, 1)]
        scale = [1, 1, 1, 1, 2]
        coords = [self._coeff_of(rep) * Fraction(1, s) for rep, s in zip(reps, scale)]
        rebuilt = sum((c * k for c, k in zip(coords, ks)), MultiPoly.constant(0, ks[0].variables))
        return tuple(coords) if (rebuilt - self.poly).is_zero() else None

    def _coeff_of(self, exps: Tuple[int, int, int, int]) -> MultiPoly:
        ring = self.poly.variables
        others = [v for v in ring if v not in XYZT]
        pos = [ring.index(v) if v in ring else None for v in XYZT]
        out: Dict[tuple, GaussianRational] = {}
        for e, c in self.poly.terms.items():
            if all((e[p] if p is not None else 0) == k for p, k in zip(pos, exps)):
                out[tuple(e[ring.index(v)] for v in others)] = c
        return MultiPoly(tuple(others), out)


# ---------------------------------------------------------------------------
# Kummer quartic of a quadratic complex
# ---------------------------------------------------------------------------

PQRST_RING = COEFF_NAMES + XYZT


def kummer_determinant(ring: Sequence[str] = PQRST_RING, values: Optional[Sequence[object]] = None) -> MultiPoly:
    """The conic discriminant over the plane orthogonal to (x, y, z, t), divided by t^2.

    The 3x3 matrix is the homogenization of the dehomogenized (t = 1) one;
    its determinant has degree 6 and is t^2 times the Kummer quartic.
    """
    x, y, z, t = _xyzt(ring)
    if values is None:
        P, Q, R, S, T = (MultiPoly.var(n, ring) for n in COEFF_NAMES)
    else:
        P, Q, R, S, T = values
    t2 = t * t
    m = [
        [P * t2 + Q * x * x + R * y * y, R * y * z - S * x * t, Q * x * z - (T - S) * y * t],
        [None, Q * t2 - P * x * x + R * z * z, P * x * y - T * z * t],
        [None, None, R * t2 - P * y * y + Q * z * z],
    ]
    for r in range(3):
        for c in range(r):
            m[r][c] = m[c][r]
    det = generic_det(m)
    return det.exact_divide(t2)


def kummer_closed_form(ring: Sequence[str] = PQRST_RING, values: Optional[Sequence[object]] = None) -> MultiPoly:
    """The five-term closed form of the Kummer quartic in terms of (P, Q, R, S, T)."""
    if values is None:
        P, Q, R, S, T = (MultiPoly.var(n, ring) for n in COEFF_NAMES)
    else:
        P, Q, R, S, T = values
    coeffs = quadric_to_kummer_coords(P, Q, R, S, T)
    ks = basis_quartics(ring)
    out = MultiPoly.constant(0, ring)
    for c, k in zip(coeffs, ks):
        out = out + k * c
    return out


def quadric_to_kummer_coords(P, Q, R, S, T) -> Tuple[object, ...]:
    """Coordinates of the Kummer quartic on K1..K5 (K5 = 2xyzt)."""
    return (
        -(P * Q * R),
        -(P * (Q * Q + R * R - T * T)),
        Q * (R * R - P * P - (S - T) * (S - T)),
        R * (Q * Q - P * P - S * S),
        S * (R * R - Q * Q) + T * (P * P + Q * Q) + S * T * (S - T),
    )


def kummer_from_quadric(P=None, Q=None, R=None, S=None, T=None) -> Quartic3:
    """Kummer quartic of P(p12^2-p34^2)+Q(p13^2+p24^2)+R(p14^2+p23^2)+2S p12p34+2T p14p23.

    With no arguments the result is symbolic in P..T.
    """
    if P is None:
        return Quartic3(kummer_closed_form())
    vals = [v if isinstance(v, MultiPoly) else GaussianRational.coerce(v) for v in (P, Q, R, S, T)]
    ring = XYZT
    for v in vals:
        if isinstance(v, MultiPoly):
            ring = tuple(v.variables) + tuple(n for n in XYZT if n not in v.variables)
    return Quartic3(kummer_closed_form(ring, vals))


def determinant_matches_closed_form() -> bool:
    return (kummer_determinant() - kummer_closed_form()).is_zero()


# ---------------------------------------------------------------------------
# Hudson coefficients of Theta(a)
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class HudsonCoeffs:
    A: object
    B: object
    C: object
    D: object
    E: object

    def as_tuple(self) -> Tuple[object, ...]:
        return (self.A, self.B, self.C, self.D, self.E)


def quadric_parameters_of_theta(ring: Sequence[str] = A_NAMES) -> Tuple[MultiPoly, ...]:
    """(P, Q, R, S, T) of Theta(a) after trading the p13 p24 term for the Pluecker relation."""
    t0, t1, t2, t3, t4 = theta_coefficients_symbolic(ring)
    half = Fraction(1, 2)
    return (t0, t1, t3, (t2 + 2 * t4) * half, (t4 - t2) * half)


def printed_rewriting_matches() -> bool:
    """The rewritten S, T agree with the closed forms in a."""
    a1, a2, a3, a4 = (MultiPoly.var(n, A_NAMES) for n in A_NAMES)
    _, _, _, S, T = quadric_parameters_of_theta()
    two_s = (a3**2 + a4**2) ** 2 + 4 * a1**2 * a2**2
    two_t = (a3**2 - a4**2) ** 2 - (a1**2 - a2**2) ** 2
    return (2 * S - two_s).is_zero() and (2 * T - two_t).is_zero()


@lru_cache(maxsize=None)
def hudson_from_theta() -> HudsonCoeffs:
    """Route (i): closed form applied to Theta(a)."""
    return HudsonCoeffs(*quadric_to_kummer_coords(*quadric_parameters_of_theta()))


@dataclass(frozen=True)
class HudsonComparison:
    """Per-slot constants c_k with (route i)_k = c_k * (tabulated)_k."""

    slot_constants: Tuple[Optional[GaussianRational], ...]
    global_constant: Optional[GaussianRational]
    sign_flipped: Tuple[str, ...]

    @property
    def agree_up_to_constant(self) -> bool:
        return self.global_constant is not None and not self.sign_flipped


@lru_cache(maxsize=None)
def hudson_comparison() -> HudsonComparison:
    """Compare the quadric route with the tabulated A..E slot by slot.

    The two agree up to one constant except for the sign of B; the
    tabulated B is the one that satisfies the printed Segre cubic.
    """
    mine = hudson_from_theta().as_tuple()
    table = tuple(tables.hudson_polynomials()[n] for n in HUDSON_SLOTS)
    consts = tuple(proportionality(m, t) for m, t in zip(mine, table))
    if any(c is None for c in consts):
        raise AssertionError("Kummer coefficients of Theta(a) are not proportional to the tabulated A..E")
    ref = consts[0]
    if any(c != ref and c != -ref for c in consts):
        return HudsonComparison(consts, None, ())
    flipped = tuple(n for n, c in zip(HUDSON_SLOTS, consts) if c == -ref)
    return HudsonComparison(consts, ref, flipped)


def hudson_coeffs(a=None, source: str = "table") -> HudsonCoeffs:
    """A..E, symbolic when a is None.

    ``source="table"`` evaluates the tabulated polynomials; ``"quadric"``
    uses the Kummer quartic of Theta(a) computed from the conic
    discriminant.  Both are certified against each other first.
    """
    hudson_comparison()
    if source == "table":
        polys = tuple(tables.hudson_polynomials()[n] for n in HUDSON_SLOTS)
    elif source == "quadric":
        polys = hudson_from_theta().as_tuple()
    else:
        raise ValueError(f"unknown source {source!r}; use 'table' or 'quadric'")
    if a is None:
        return HudsonCoeffs(*polys)
    vals = dict(zip(A_NAMES, (GaussianRational.coerce(v) for v in a)))
    return HudsonCoeffs(*(p.evaluate(vals) for p in polys))


def kummer_of(a=None, source: str = "table") -> Quartic3:
    """K(a) = A K1 + B K2 + C K3 + D K4 + E K5."""
    h = hudson_coeffs(a, source).as_tuple()
    ring = (A_NAMES + XYZT) if a is None else XYZT
    ks = basis_quartics(ring)
    out = MultiPoly.constant(0, ring)
    for c, k in zip(h, ks):
        out = out + k * (c.with_variables(ring) if isinstance(c, MultiPoly) else c)
    return Quartic3(out)


# ---------------------------------------------------------------------------
# Segre cubic and Hudson's form
# ---------------------------------------------------------------------------


def segre_cubic(A, B, C, D, E):
    """4A^3 - (B^2 - C^2 - D^2 + E^2)A + BCD (K1..K5 ordering)."""
    return 4 * A * A * A - (B * B - C * C - D * D + E * E) * A + B * C * D


def hudson_cubic(A, B, C, D, E):
    """4E^3 - (A^2 + B^2 + C^2 - D^2)E + ABC (Hudson ordering)."""
    return 4 * E * E * E - (A * A + B * B + C * C - D * D) * E + A * B * C


def segre_identity(a=None) -> bool:
    """The tabulated A..E satisfy the Segre cubic (symbolically, or at a point)."""
    h = hudson_coeffs(a).as_tuple()
    val = segre_cubic(*h)
    return val.is_zero() if isinstance(val, MultiPoly) else not val


def to_hudson_slots(coords: Sequence[object], zeta_sq: GaussianRational) -> Tuple[object, ...]:
    """Hudson coefficients of sum coords_k K_k after z -> zeta z, t -> zeta t (zeta^2 = zeta_sq, zeta^4 = -1).

    K1 -> x^4+y^4+z^4+t^4, K2 -> x^2y^2+z^2t^2, K3, K4, K5 pick up zeta^2.
    """
    A, B, C, D, E = coords
    return (B, C * zeta_sq, D * zeta_sq, E * zeta_sq, A)


@dataclass(frozen=True)
class SegreCertificate:
    """Which cubic each source of A..E satisfies.

    ``paper_form`` is 4A^3-(B^2-C^2-D^2+E^2)A+BCD; ``hudson_form`` is
    Hudson's cubic after z, t -> zeta z, zeta t, keyed by zeta^2.
    """

    paper_form: Dict[str, bool]
    hudson_form: Dict[str, Dict[str, bool]]


@lru_cache(maxsize=None)
def segre_certificate() -> SegreCertificate:
    paper, hud = {}, {}
    for source in ("table", "quadric"):
        h = hudson_coeffs(source=source).as_tuple()
        paper[source] = segre_cubic(*h).is_zero()
        hud[source] = {
            label: hudson_cubic(*to_hudson_slots(h, zs)).is_zero() for label, zs in (("+i", gq(0, 1)), ("-i", gq(0, -1)))
        }
    return SegreCertificate(paper, hud)


def heisenberg_matrices() -> Tuple[ExactMatrix, ...]:
    return (
        ExactMatrix([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, -1, 0], [0, 0, 0, -1]]),
        ExactMatrix([[1, 0, 0, 0], [0, -1, 0, 0], [0, 0, 1, 0], [0, 0, 0, -1]]),
        ExactMatrix([[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]]),
        ExactMatrix([[0, 0, 1, 0], [0, 0, 0, 1], [1, 0, 0, 0], [0, 1, 0, 0]]),
    )


def act_on_quartic(g: ExactMatrix, p: MultiPoly) -> MultiPoly:
    """p(g (x, y, z, t))."""
    return p.linear_substitute(list(XYZT), [[g[r, c] for c in range(4)] for r in range(4)])


def heisenberg_table() -> List[List[bool]]:
    """Rows: the four matrices; columns: the five Hudson quartics; entry: fixed?"""
    qs = hudson_quartics()
    return [[(act_on_quartic(g, q) - q).is_zero() for q in qs] for g in heisenberg_matrices()]


def heisenberg_invariance() -> bool:
    return all(all(row) for row in heisenberg_table())


# ---------------------------------------------------------------------------
# blocks, pentads, quintets
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class BlockData:
    blocks: Dict[int, Tuple[int, ...]]
    pentads: List[Tuple[int, ...]]
    quintets: List[Tuple[Tuple[int, ...], ...]]
    expressions: Dict[int, Tuple[GaussianRational, ...]]
    block_constants: Dict[int, Optional[GaussianRational]]
    global_constant: Optional[GaussianRational]
    expression_rank: int
    pentads_partition: bool
    pentads_found: List[Tuple[int, ...]]
    blocks_in_two_pentads: bool
    quintets_found: List[Tuple[Tuple[int, ...], ...]]
    triangle_partitions: int
    quintet_pair_intersections: Tuple[int, ...]

    @property
    def identities_hold(self) -> bool:
        return self.global_constant is not None

    @property
    def ok(self) -> bool:
        listed_q = {frozenset(map(frozenset, q)) for q in self.quintets}
        found_q = {frozenset(map(frozenset, q)) for q in self.quintets_found}
        return (
            self.identities_hold
            and self.expression_rank == 5
            and self.pentads_partition
            and sorted(self.pentads_found) == sorted(tuple(sorted(p)) for p in self.pentads)
            and self.blocks_in_two_pentads
            and listed_q == found_q
            and set(self.quintet_pair_intersections) == {3}
        )


def block_product(k: int) -> MultiPoly:
    return tables.product_of(tables.blocks()[k])


def block_expression_poly(k: int) -> MultiPoly:
    """The tabulated linear combination of A..E for block k, as a polynomial in a."""
    h = hudson_coeffs().as_tuple()
    out = MultiPoly.constant(0, A_NAMES)
    for c, p in zip(tables.block_expressions()[k], h):
        if c:
            out = out + p * c
    return out


def _search_pentads(blocks: Dict[int, Tuple[int, ...]]) -> List[Tuple[int, ...]]:
    full = set(range(1, 61))
    found = []
    for combo in combinations(sorted(blocks), 5):
        members = [set(blocks[b]) for b in combo]
        if sum(len(m) for m in members) == 60 and set().union(*members) == full:
            found.append(combo)
    return found


def _triple_partitions(items: Sequence[int], allowed) -> List[Tuple[Tuple[int, ...], ...]]:
    items = sorted(items)
    if not items:
        return [()]
    first, rest = items[0], items[1:]
    out = []
    for b, c in combinations(rest, 2):
        if allowed((first, b, c)):
            remaining = [x for x in rest if x not in (b, c)]
            for tail in _triple_partitions(remaining, allowed):
                out.append(((first, b, c),) + tail)
    return out


@lru_cache(maxsize=None)
def blocks_pentads_quintets() -> BlockData:
    blocks = tables.blocks()
    pentads = tables.pentads()
    quintets = tables.quintets()
    exprs = tables.block_expressions()
    consts = {k: proportionality(block_product(k), block_expression_poly(k)) for k in blocks}
    values = set(consts.values())
    global_c = next(iter(values)) if len(values) == 1 and None not in values else None
    rank = ExactMatrix([list(v) for v in exprs.values()]).rank()
    partition = all(
        sum(len(blocks[b]) for b in p) == 60 and set().union(*(set(blocks[b]) for b in p)) == set(range(1, 61))
        for p in pentads
    )
    found = _search_pentads(blocks)
    in_two = all(sum(b in p for p in pentads) == 2 for b in blocks)
    pent_of = {b: {i for i, p in enumerate(pentads) if b in p} for b in blocks}
    # a triple is admissible when no two of its blocks lie in a common pentad
    syntheme = lambda tr: all(not (pent_of[u] & pent_of[v]) for u, v in combinations(tr, 2))  # noqa: E731
    q_found = _triple_partitions(list(blocks), syntheme)
    # the literal reading (no pentad contains all three) admits more partitions
    not_copentad = lambda tr: not (pent_of[tr[0]] & pent_of[tr[1]] & pent_of[tr[2]])  # noqa: E731
    weak = len(_triple_partitions(list(blocks), not_copentad))
    inter = tuple(
        len(set().union(*map(set, [t for t in q1 if t in q2]))) if any(t in q2 for t in q1) else 0
        for q1, q2 in combinations([tuple(tuple(sorted(t)) for t in q) for q in quintets], 2)
    )
    return BlockData(
        blocks, pentads, quintets, exprs, consts, global_c, rank, partition, found, in_two, q_found, weak, inter
    )


# ---------------------------------------------------------------------------
# Joubert map and residual quartics
# ---------------------------------------------------------------------------


def _pentad_matrix(i: int) -> ExactMatrix:
    exprs = tables.block_expressions()
    return ExactMatrix([list(exprs[b]) for b in tables.pentads()[i - 1]])


def pentad_cubic(i: int, ring: Sequence[str] = ("y1", "y2", "y3", "y4", "y5")) -> MultiPoly:
    """The Segre cubic written in the coordinates (D_b / c) of pentad i's blocks."""
    inv = _pentad_matrix(i).inverse()
    ys = [MultiPoly.var(n, ring) for n in ring]
    hud = []
    for k in range(5):
        s = MultiPoly.constant(0, ring)
        for j in range(5):
            s = s + ys[j] * inv[k, j]
        hud.append(s)
    return segre_cubic(*hud)


def joubert_map(i: int, a=None) -> Tuple[object, ...]:
    """Five block products of pentad i, each divided by the global block constant."""
    c = blocks_pentads_quintets().global_constant
    inv_c = c.inverse()
    out = []
    for b in tables.pentads()[i - 1]:
        p = block_product(b) * inv_c
        out.append(p if a is None else p.evaluate(dict(zip(A_NAMES, (GaussianRational.coerce(v) for v in a)))))
    if a is not None and all(not v for v in out):
        raise ValueError("all five block products vanish: degenerate point")
    return tuple(out)


def joubert_relation_holds(i: int, a=None) -> bool:
    cubic = pentad_cubic(i)
    pt = joubert_map(i, a)
    if a is None:
        val = cubic.substitute(dict(zip(cubic.variables, pt)))
        return val.is_zero()
    return not cubic.evaluate(list(pt))


def residual_quartics(i: int) -> Dict[int, MultiPoly]:
    """S_i^b for the blocks b of pentad i, with K = sum_b (prod over D_b of l) S_i^b."""
    c = blocks_pentads_quintets().global_constant
    inv = _pentad_matrix(i).inverse()
    ks = basis_quartics()
    out = {}
    for j, b in enumerate(tables.pentads()[i - 1]):
        s = MultiPoly.constant(0, XYZT)
        for k in range(5):
            s = s + ks[k] * (inv[k, j] * c.inverse())
        out[b] = s
    return out


def residual_decomposition_holds(i: int) -> bool:
    """K(a) == sum_b D_b(a) S_i^b symbolically in (a, x)."""
    ring = A_NAMES + XYZT
    total = MultiPoly.constant(0, ring)
    for b, s in residual_quartics(i).items():
        total = total + block_product(b).with_variables(ring) * s.with_variables(ring)
    return (total - kummer_of().poly).is_zero()


def k0_prime(ring: Sequence[str] = XYZT) -> MultiPoly:
    x, y, z, t = _xyzt(ring)
    return x**4 + y**4 + z**4 + t**4 - 4 * x * y * z * t


def k0_double_prime(ring: Sequence[str] = XYZT) -> MultiPoly:
    x, y, z, t = _xyzt(ring)
    return x**2 * y**2 + z**2 * t**2 + x**2 * z**2 + y**2 * t**2 + x**2 * t**2 + y**2 * z**2 + 2 * x * y * z * t


def thirty_two_identity() -> bool:
    x, y, z, t = _xyzt()
    X, Y, Z, T = x + y + z + t, x - y - z + t, x - y + z - t, x + y - z - t
    lhs = X**4 + Y**4 + Z**4 + T**4 - 4 * X * Y * Z * T
    return (lhs - 32 * k0_double_prime()).is_zero()


def _omega_power(m: int) -> Optional[GaussianRational]:
    """omega^m for omega = exp(2 pi i / 8), when it lies in Q(i) (m even)."""
    if m % 2:
        return None
    return (gq(1), gq(0, 1), gq(-1), gq(0, -1))[(m // 2) % 4]


def scale_by_eighth_roots(p: MultiPoly, powers: Sequence[int]) -> Optional[MultiPoly]:
    """p(omega^k1 x, omega^k2 y, omega^k3 z, omega^k4 t), or None if it leaves Q(i)."""
    p = p.with_variables(XYZT)
    out = {}
    for e, c in p.terms.items():
        w = _omega_power(sum(k * x for k, x in zip(powers, e)))
        if w is None:
            return None
        out[e] = c * w
    return MultiPoly(XYZT, out)


def diagonal_witness(source: MultiPoly, target: MultiPoly) -> Optional[Tuple[int, ...]]:
    """Exponents (0, k2, k3, k4): scaling y, z, t by eighth roots of unity omega^k
    makes ``source`` proportional to ``target``; None if no such scaling exists."""
    for ks in product(range(8), repeat=3):
        powers = (0,) + ks
        image = scale_by_eighth_roots(source, powers)
        if image is not None and not image.is_zero() and proportionality(image, target) is not None:
            return powers
    return None


@dataclass(frozen=True)
class ResidualReport:
    decomposition_holds: bool
    witnesses: Dict[int, Dict[str, Optional[Tuple[int, ...]]]]
    thirty_two_identity: bool


def residual_report(i: int = 1) -> ResidualReport:
    """Which S_i^b reach K0' or K0'' by a diagonal scaling with eighth roots of unity."""
    wit = {}
    for b, s in residual_quartics(i).items():
        wit[b] = {"K0'": diagonal_witness(s, k0_prime()), "K0''": diagonal_witness(s, k0_double_prime())}
    return ResidualReport(residual_decomposition_holds(i), wit, thirty_two_identity())


# ---------------------------------------------------------------------------
# the Kummer surface inside P(c)
# ---------------------------------------------------------------------------

X_RING = ("x1", "x2", "x3", "x4")


def kummer_in_c(a=None) -> MultiPoly:
    """sum_i dF/dt_i(t(a)) t_i(x): a quartic in x1..x4 (coefficients in a when symbolic)."""
    F = igusa_quartic()
    ts_a = theta_coefficients_symbolic()
    ts_x = [p.substitute(dict(zip(A_NAMES, (MultiPoly.var(n, X_RING) for n in X_RING)))) for p in ts_a]
    grads = [F.diff(n) for n in T_NAMES]
    if a is None:
        sub = dict(zip(T_NAMES, ts_a))
        weights = [g.substitute(sub) for g in grads]
        ring = A_NAMES + X_RING
    else:
        vals = dict(zip(A_NAMES, (GaussianRational.coerce(v) for v in a)))
        tv = {n: t.evaluate(vals) for n, t in zip(T_NAMES, ts_a)}
        weights = [g.evaluate(tv) for g in grads]
        ring = X_RING
    out = MultiPoly.constant(0, ring)
    for w, q in zip(weights, ts_x):
        out = out + q.with_variables(ring) * (w.with_variables(ring) if isinstance(w, MultiPoly) else w)
    return out


def kummer_in_c_gradient_at_a() -> List[MultiPoly]:
    """dK_c/dx_j evaluated at x = a (symbolic); all four vanish."""
    k = kummer_in_c()
    back = dict(zip(X_RING, (MultiPoly.var(n, A_NAMES) for n in A_NAMES)))
    return [k.diff(n).substitute(back) for n in X_RING]


def kummer_in_c_vanishes_on_F_orbit(a: Sequence[object]) -> bool:
    from .reflection import heisenberg_group

    k = kummer_in_c(a)
    F = heisenberg_group()
    pt = [GaussianRational.coerce(v) for v in a]
    return all(not k.evaluate(F.element(j).apply(pt)) for j in range(F.order))


__all__ = [
    "XYZT",
    "basis_quartics",
    "hudson_quartics",
    "Quartic3",
    "kummer_determinant",
    "kummer_closed_form",
    "quadric_to_kummer_coords",
    "kummer_from_quadric",
    "determinant_matches_closed_form",
    "HudsonCoeffs",
    "quadric_parameters_of_theta",
    "printed_rewriting_matches",
    "hudson_from_theta",
    "hudson_comparison",
    "HudsonComparison",
    "to_hudson_slots",
    "hudson_coeffs",
    "kummer_of",
    "segre_cubic",
    "hudson_cubic",
    "segre_identity",
    "segre_certificate",
    "SegreCertificate",
    "heisenberg_matrices",
    "heisenberg_table",
    "heisenberg_invariance",
    "BlockData",
    "block_product",
    "blocks_pentads_quintets",
    "pentad_cubic",
    "joubert_map",
    "joubert_relation_holds",
    "residual_quartics",
    "residual_decomposition_holds",
    "k0_prime",
    "k0_double_prime",
    "thirty_two_identity",
    "diagonal_witness",
    "scale_by_eighth_roots",
    "residual_report",
    "ResidualReport",
    "kummer_in_c",
    "kummer_in_c_gradient_at_a",
    "kummer_in_c_vanishes_on_F_orbit",
]
