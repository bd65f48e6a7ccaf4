"""Quadratic line complexes attached to Cartan points.

Every a in the Cartan space gives a quadratic section Theta(a) of G(2,4),
a combination of five fixed Pluecker quadrics with quartic coefficients
t0(a)..t4(a).  This module builds it, checks it against gamma_a, and derives
the Igusa quartic relation, the tetrahedral quartets, the pencil
discriminant and the degree-8 Coble coordinates.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

from . import tables
from .cartan import A_NAMES, X_NAMES, CartanPoint, gamma_a
from .exact import (
    ExactMatrix,
    GaussianRational,
    MultiPoly,
    express_in_span,
    proportionality,
    span_rank,
    vectors_proportional,
)
from .spinor import bilinear

PAIRS: Tuple[Tuple[int, int], ...] = ((1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4))
PI_NAMES: Tuple[str, ...] = tuple(f"p{i}{j}" for i, j in PAIRS)
Y_NAMES = ("y1", "y2", "y3", "y4")

# Pluecker monomials are keyed by unordered pairs of PAIRS indices.
Mono = Tuple[int, int]


def _mono(p: Tuple[int, int], q: Tuple[int, int]) -> Mono:
    a, b = PAIRS.index(p), PAIRS.index(q)
    return (min(a, b), max(a, b))


# The five basis quadrics, as {monomial: coefficient}.
BASIS_QUADRICS: Tuple[Dict[Mono, int], ...] = (
    {_mono((1, 2), (1, 2)): 1, _mono((3, 4), (3, 4)): -1},
    {_mono((1, 3), (1, 3)): 1, _mono((2, 4), (2, 4)): 1},
    {_mono((1, 2), (3, 4)): 1, _mono((1, 4), (2, 3)): -1},
    {_mono((1, 4), (1, 4)): 1, _mono((2, 3), (2, 3)): 1},
    {_mono((1, 2), (3, 4)): 1, _mono((1, 3), (2, 4)): 1},
)

# pi12 pi34 - pi13 pi24 + pi14 pi23
PLUECKER_RELATION: Dict[Mono, int] = {
    _mono((1, 2), (3, 4)): 1,
    _mono((1, 3), (2, 4)): -1,
    _mono((1, 4), (2, 3)): 1,
}
# the pencil partner pi12 pi34 + pi14 pi23 - pi13 pi24 (same relation, listed in pencil order)
PENCIL_PARTNER = PLUECKER_RELATION


@dataclass(frozen=True)
class PlueckerQuadric:
    """sum over Pluecker monomials of coefficient * pi_ij pi_kl.

    Coefficients are GaussianRational or MultiPoly (when a is symbolic).
    """

    coeffs: Dict[Mono, object]
    t: Optional[Tuple[object, ...]] = None

    @classmethod
    def from_t(cls, t: Sequence[object]) -> "PlueckerQuadric":
        out: Dict[Mono, object] = {}
        for tk, quad in zip(t, BASIS_QUADRICS):
            for m, c in quad.items():
                out[m] = out[m] + tk * c if m in out else tk * c
        return cls(out, tuple(t))

    def coefficient(self, p: Tuple[int, int], q: Tuple[int, int]):
        return self.coeffs.get(_mono(p, q), 0)

    def gram(self) -> List[List[object]]:
        """Symmetric 6x6 matrix M with quadric = pi^T M pi (order of PAIRS)."""
        rows: List[List[object]] = [[0] * 6 for _ in range(6)]
        for (a, b), c in self.coeffs.items():
            if a == b:
                rows[a][a] = c
            else:
                half = c * Fraction(1, 2)
                rows[a][b] = half
                rows[b][a] = half
        return rows

    def on_line(self, x: Sequence[object], y: Sequence[object]):
        """Evaluate at the Pluecker coordinates pi_ij = x_i y_j - x_j y_i."""
        pis = [x[i - 1] * y[j - 1] - x[j - 1] * y[i - 1] for i, j in PAIRS]
        total = 0
        for (a, b), c in self.coeffs.items():
            total = total + c * pis[a] * pis[b]
        return total


# ---------------------------------------------------------------------------
# Theta
# ---------------------------------------------------------------------------


def _a_vars(ring: Sequence[str] = A_NAMES):
    return [MultiPoly.var(n, ring) for n in A_NAMES]


def theta_coefficients_symbolic(ring: Sequence[str] = A_NAMES) -> Tuple[MultiPoly, ...]:
    """(t0, .., t4) as quartics in a1..a4."""
    a1, a2, a3, a4 = _a_vars(ring)
    third = Fraction(1, 3)
    return (
        (a1**2 - a2**2) * (a3**2 - a4**2),
        -2 * (a1**2 + a2**2) * a3 * a4,
        (2 * a1**4 + 2 * a2**4 - a3**4 - a4**4 + 6 * a3**2 * a4**2) * third,
        2 * a1 * a2 * (a3**2 + a4**2),
        (2 * a3**4 + 2 * a4**4 - a1**4 - a2**4 + 6 * a1**2 * a2**2) * third,
    )


def theta_coefficients(a) -> Tuple[GaussianRational, ...]:
    if not isinstance(a, CartanPoint):
        a = CartanPoint.of(*a) if len(a) == 4 else CartanPoint.of(a)
    values = dict(zip(A_NAMES, a.coords))
    return tuple(t.evaluate(values) for t in theta_coefficients_symbolic())


def theta(a=None) -> PlueckerQuadric:
    """Theta(a); symbolic in a1..a4 when a is None."""
    if a is None:
        return PlueckerQuadric.from_t(theta_coefficients_symbolic())
    return PlueckerQuadric.from_t(theta_coefficients(a))


def _substituted(p: MultiPoly, g: ExactMatrix) -> MultiPoly:
    # a -> g a
    return p.linear_substitute(list(A_NAMES), [[g[r, c] for c in range(4)] for r in range(4)])


def t_transform(g: ExactMatrix) -> Tuple[MultiPoly, ...]:
    """t(g a) as quartics in a."""
    return tuple(_substituted(t, g) for t in theta_coefficients_symbolic())


def projective_character(g: ExactMatrix) -> Optional[GaussianRational]:
    """chi with t(g a) = chi t(a), or None when g moves P(U5)."""
    return vectors_proportional(list(t_transform(g)), list(theta_coefficients_symbolic()))


def acts_trivially_on_U5(g: ExactMatrix) -> bool:
    return projective_character(g) is not None


def f_invariance() -> Dict[str, Optional[GaussianRational]]:
    """Projective characters of g1..g5 on the t-vector."""
    from .reflection import heisenberg_generators

    return {f"g{k + 1}": projective_character(g) for k, g in enumerate(heisenberg_generators())}


def fiber_contains_F_orbit(a0: Optional[Sequence[object]] = None, seed: int = 0) -> dict:
    """Check that all 16 points F.a0 (projectively) share the t-vector of a0."""
    from .reflection import heisenberg_group

    if a0 is None:
        rng = random.Random(seed)
        a0 = [GaussianRational(rng.randint(-9, 9), rng.randint(-9, 9)) for _ in range(4)]
    a0 = [GaussianRational.coerce(x) for x in a0]
    F = heisenberg_group()
    base = theta_coefficients(a0)
    points = set()
    same = True
    for k in range(F.order):
        g = F.element(k)
        ga = g.apply(a0)
        points.add(tables.normalize(ga))
        if vectors_proportional(list(theta_coefficients(ga)), list(base)) is None:
            same = False
    return {"a0": tuple(a0), "distinct_points": len(points), "same_t": same}


# ---------------------------------------------------------------------------
# consistency with gamma_a
# ---------------------------------------------------------------------------

RING_AXY = A_NAMES + X_NAMES + Y_NAMES


@dataclass(frozen=True)
class ConsistencyRecord:
    holds: bool
    constant: Optional[GaussianRational]


@lru_cache(maxsize=None)
def theta_consistency() -> ConsistencyRecord:
    """Q(gamma_a(x), gamma_a(y)) against c * Theta(a)(pi(x, y)).

    With pi_ij = x_i y_j - x_j y_i the Pluecker relation vanishes
    identically, so the multiplier term drops out and the identity is an
    exact proportionality of polynomials in (a, x, y).
    """
    gx = gamma_a()
    lift = lambda p: p.with_variables(RING_AXY)  # noqa: E731
    rename = dict(zip(X_NAMES, (MultiPoly.var(n, RING_AXY) for n in Y_NAMES)))
    vx = [lift(c) for c in gx.coeffs]
    vy = [lift(c).substitute(rename) for c in gx.coeffs]
    from .spinor import Vector10

    lhs = bilinear(Vector10(tuple(vx)), Vector10(tuple(vy)))
    xs = [MultiPoly.var(n, RING_AXY) for n in X_NAMES]
    ys = [MultiPoly.var(n, RING_AXY) for n in Y_NAMES]
    th = PlueckerQuadric.from_t(theta_coefficients_symbolic(RING_AXY))
    rhs = th.on_line(xs, ys)
    c = proportionality(lhs, rhs)
    return ConsistencyRecord(c is not None, c)


# ---------------------------------------------------------------------------
# Igusa quartic
# ---------------------------------------------------------------------------

T_NAMES = ("t0", "t1", "t2", "t3", "t4")


def igusa_quartic(ring: Sequence[str] = T_NAMES) -> MultiPoly:
    t0, t1, t2, t3, t4 = (MultiPoly.var(n, ring) for n in T_NAMES)
    return (
        t0**4
        + t1**4
        + t3**4
        + 2 * t0**2 * t1**2
        + 2 * t0**2 * t3**2
        - 2 * t1**2 * t3**2
        - (2 * t0**2 + t1**2 - 2 * t3**2) * t2**2
        - (5 * t0**2 + t1**2 + t3**2) * t2 * t4
        - (2 * t0**2 - 2 * t1**2 + t3**2) * t4**2
    )


def igusa_of_theta() -> MultiPoly:
    """F_CR(t(a)) as a polynomial in a (zero when the membership holds)."""
    return igusa_quartic().substitute(dict(zip(T_NAMES, theta_coefficients_symbolic())))


def igusa_membership() -> bool:
    return igusa_of_theta().is_zero()


# ---------------------------------------------------------------------------
# quartets
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class QuartetRecord:
    members_in_span: Tuple[bool, ...]
    coordinates: Tuple[Optional[Tuple[GaussianRational, ...]], ...]
    rank: int
    partition_ok: bool

    @property
    def ok(self) -> bool:
        return all(self.members_in_span) and self.rank == 5 and self.partition_ok


def quartet_products() -> List[MultiPoly]:
    return [tables.product_of(h) for h, _ in tables.tetrahedra()]


def quartet_span() -> QuartetRecord:
    ts = list(theta_coefficients_symbolic())
    prods = quartet_products()
    coords = []
    for p in prods:
        sol = express_in_span(p, ts)
        coords.append(None if sol is None else tuple(sol))
    sets = [set(h) for h, _ in tables.tetrahedra()]
    union = set().union(*sets)
    disjoint = sum(len(s) for s in sets) == len(union)
    return QuartetRecord(
        tuple(c is not None for c in coords),
        tuple(coords),
        span_rank(prods),
        disjoint and union == set(range(1, 61)),
    )


# ---------------------------------------------------------------------------
# pencil discriminant
# ---------------------------------------------------------------------------

PENCIL_RING = A_NAMES + ("lam", "mu")
BLOCK_PAIRS = (((1, 2), (3, 4)), ((1, 3), (2, 4)), ((1, 4), (2, 3)))


@dataclass(frozen=True)
class PencilRecord:
    block_diagonal: bool
    quadratics: Dict[str, MultiPoly]
    discriminants: Dict[str, MultiPoly]
    constant: Optional[GaussianRational]
    printed_reading_holds: bool


def pencil_matrix() -> List[List[MultiPoly]]:
    """Gram matrix of lam*Theta(a) + mu*(pi12 pi34 + pi14 pi23 - pi13 pi24)."""
    lam = MultiPoly.var("lam", PENCIL_RING)
    mu = MultiPoly.var("mu", PENCIL_RING)
    th = PlueckerQuadric.from_t(theta_coefficients_symbolic(PENCIL_RING)).gram()
    partner = PlueckerQuadric(dict(PENCIL_PARTNER)).gram()
    zero = MultiPoly.constant(0, PENCIL_RING)
    return [[zero + lam * th[r][c] + mu * partner[r][c] for c in range(6)] for r in range(6)]


def _binary_disc(d: MultiPoly) -> MultiPoly:
    """B^2 - 4AC for d = A lam^2 + B lam mu + C mu^2, as a polynomial in a."""
    A = MultiPoly(A_NAMES, {}).with_variables(A_NAMES)
    parts = {(2, 0): A, (1, 1): A, (0, 2): A}
    li, mi = PENCIL_RING.index("lam"), PENCIL_RING.index("mu")
    for exp, c in d.terms.items():
        key = (exp[li], exp[mi])
        if key not in parts:
            raise ValueError("block determinant is not a binary quadratic")
        parts[key] = parts[key] + MultiPoly.monomial(A_NAMES, exp[:4], c)
    return parts[(1, 1)] ** 2 - 4 * parts[(2, 0)] * parts[(0, 2)]


def expected_discriminant(printed: bool = False) -> MultiPoly:
    a1, a2, a3, a4 = _a_vars()
    last = (a3**2 - a4**4) if printed else (a3**4 - a4**4)
    return a1**2 * a2**2 * a3**2 * a4**2 * (a1**4 - a2**4) ** 2 * last**2


@lru_cache(maxsize=None)
def pencil_discriminant() -> PencilRecord:
    M = pencil_matrix()
    idx = [[PAIRS.index(p), PAIRS.index(q)] for p, q in BLOCK_PAIRS]
    allowed = {(i, i) for i in range(6)} | {(p, q) for p, q in idx} | {(q, p) for p, q in idx}
    block_diag = all(M[r][c].is_zero() for r in range(6) for c in range(6) if (r, c) not in allowed)
    if not block_diag:
        raise AssertionError("pencil matrix is not block diagonal in the three Pluecker pairs")
    quads, discs = {}, {}
    product = MultiPoly.constant(1, A_NAMES)
    for (p, q), (i, j) in zip(BLOCK_PAIRS, idx):
        name = f"d{p[0]}{p[1]},{q[0]}{q[1]}"
        d = M[i][i] * M[j][j] - M[i][j] * M[j][i]
        quads[name] = d
        discs[name] = _binary_disc(d)
        product = product * discs[name]
    c = proportionality(product, expected_discriminant())
    printed = proportionality(product, expected_discriminant(printed=True)) is not None
    return PencilRecord(block_diag, quads, discs, c, printed)


# ---------------------------------------------------------------------------
# Coble coordinates
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CobleForm:
    """The nine coordinates [QR, PR, PQ, S^2+Q^2-R^2, ..., SU-RT]."""

    coords: Tuple[object, ...]


def coble_map(P, Q, R, S, T, U) -> CobleForm:
    total = S + T + U
    nonzero = not total.is_zero() if isinstance(total, MultiPoly) else bool(GaussianRational.coerce(total))
    if nonzero:
        raise ValueError("the Coble map needs S + T + U = 0")
    return CobleForm(
        (
            Q * R,
            P * R,
            P * Q,
            S * S + Q * Q - R * R,
            T * T + P * P - Q * Q,
            U * U + R * R - P * P,
            U * T - P * S,
            T * S - Q * U,
            S * U - R * T,
        )
    )


def coble_parameters(t: Sequence[object]) -> Tuple[object, ...]:
    """(P, Q, R, S, T, U) of the quadric with t-coordinates t."""
    t0, t1, t2, t3, t4 = t
    half = Fraction(1, 2)
    return (t0, t1, t3, (t2 + t4) * half, t2 * (-half), t4 * (-half))


def coble_of_theta() -> CobleForm:
    """Psi(Theta(a)): nine octics in a."""
    return coble_map(*coble_parameters(theta_coefficients_symbolic()))


def hyperplane_factors(p: MultiPoly) -> Tuple[int, ...]:
    """Indices j (with multiplicity) of the hyperplane forms dividing p, peeled off in order."""
    out = []
    rest = p
    for hp in tables.hyperplanes():
        form = hp.poly()
        while True:
            q, r = rest.divmod(form)
            if not r.is_zero():
                break
            out.append(hp.index)
            rest = q
    if rest.degree() != 0:
        raise ValueError("polynomial is not a product of hyperplane forms")
    return tuple(out)


@dataclass(frozen=True)
class U9Record:
    pq_indices: Tuple[int, ...]
    orbit_size: int
    span_dimension: int
    psi_coordinates_in_span: Tuple[bool, ...]


@lru_cache(maxsize=None)
def u9_span() -> U9Record:
    """W_c-orbit of the octic PQ, obtained by moving its hyperplane index set."""
    import numpy as np

    from .reflection import weyl_group

    pq = coble_of_theta().coords[2]
    idx = hyperplane_factors(pq)
    group = weyl_group()
    cols = np.array(idx, dtype=np.int64) - 1
    images = {tuple(sorted(row)) for row in (group.perms[:, cols] + 1).tolist()}
    polys = [tables.product_of(s) for s in sorted(images)]
    rank = span_rank(polys)
    # reported, not asserted: which Psi coordinates fall inside the orbit span
    in_span = tuple(span_rank(polys + [c]) == rank for c in coble_of_theta().coords)
    return U9Record(tuple(sorted(idx)), len(images), rank, in_span)


__all__ = [
    "PAIRS",
    "PlueckerQuadric",
    "BASIS_QUADRICS",
    "theta",
    "theta_coefficients",
    "theta_coefficients_symbolic",
    "t_transform",
    "projective_character",
    "acts_trivially_on_U5",
    "f_invariance",
    "fiber_contains_F_orbit",
    "theta_consistency",
    "ConsistencyRecord",
    "igusa_quartic",
    "igusa_of_theta",
    "igusa_membership",
    "quartet_products",
    "quartet_span",
    "QuartetRecord",
    "pencil_matrix",
    "pencil_discriminant",
    "expected_discriminant",
    "PencilRecord",
    "CobleForm",
    "coble_map",
    "coble_parameters",
    "coble_of_theta",
    "hyperplane_factors",
    "u9_span",
    "U9Record",
]
