"""Cartan subspaces of C^4 (x) Delta_+ and C^4* (x) Delta_-, and the sections they define.

A point a = (a1..a4) of the Cartan subspace gives four spinors
delta(a)_p = sum_i a_i delta_{ip} (one per tensor slot p); their span K is the
space of linear forms cutting the codimension-four section X_K.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Sequence, Tuple

from .exact import ZERO, ExactMatrix, GaussianRational, MultiPoly, vectors_proportional
from .groebner import DEFAULT_BUDGET, Ideal, only_trivial_zero
from .spinor import (
    DEFAULT_SIGN,
    Spinor,
    Vector10,
    basis_masks,
    gamma,
    parse_spinor_word,
    qr_value,
    spinor_rank,
)

# Rows p1..p4, columns = tensor slots a1..a4.
CARTAN_GRID: Tuple[Tuple[str, ...], ...] = (
    ("e53", "e1245", "e42", "e31"),
    ("e52", "e1345", "e34", "e12"),
    ("e1234", "1", "e1235", "e54"),
    ("e14", "e23", "e51", "e2345"),
)

# Dual basis of the second Cartan subspace; (sign, word) per slot.
DUAL_GRID: Tuple[Tuple[Tuple[int, str], ...], ...] = (
    ((1, "e124"), (1, "e3"), (1, "e153"), (1, "e254")),
    ((1, "e143"), (-1, "e2"), (1, "e152"), (1, "e354")),
    ((1, "e5"), (1, "e12345"), (-1, "e4"), (1, "e123")),
    ((1, "e253"), (1, "e154"), (1, "e243"), (1, "e1")),
)


def _coerce(x):
    return x if isinstance(x, MultiPoly) else GaussianRational.coerce(x)


@dataclass(frozen=True)
class CartanPoint:
    """Coordinates (a1, a2, a3, a4) on the basis p1..p4."""

    coords: tuple

    def __post_init__(self):
        if len(self.coords) != 4:
            raise ValueError("a Cartan point has four coordinates")
        object.__setattr__(self, "coords", tuple(_coerce(c) for c in self.coords))

    @classmethod
    def of(cls, *values) -> "CartanPoint":
        if len(values) == 1 and not isinstance(values[0], (int, str, GaussianRational, MultiPoly)):
            values = tuple(values[0])
        return cls(tuple(values))

    @classmethod
    def symbolic(cls, names: Sequence[str] = ("a1", "a2", "a3", "a4")) -> "CartanPoint":
        return cls(tuple(MultiPoly.var(n, names) for n in names))

    def is_zero(self) -> bool:
        return all(not c.terms if isinstance(c, MultiPoly) else not c for c in self.coords)


@dataclass(frozen=True)
class SectionDatum:
    """Four slot spinors x = sum_p a_p (x) slots[p]; K is their span."""

    slots: Tuple[Spinor, ...]
    label: str = ""

    @property
    def parity(self) -> int:
        for s in self.slots:
            if s.terms:
                return s.parity
        return 0

    @property
    def rank(self) -> int:
        return spinor_rank(self.slots)

    def basis(self) -> List[Spinor]:
        """Row-reduced basis of K (deterministic, so certificates are stable)."""
        masks = basis_masks(self.parity)
        rows = [s.coefficient_vector() for s in self.slots if s.terms]
        if not rows:
            return []
        reduced, pivots = ExactMatrix(rows).rref()
        return [Spinor({m: c for m, c in zip(masks, reduced[k]) if c}, self.parity) for k in range(len(pivots))]

    def to_records(self) -> List[dict]:
        return [{"slot": k + 1, "terms": s.to_records()} for k, s in enumerate(self.slots)]


@lru_cache(maxsize=None)
def cartan_bases() -> Tuple[Tuple[Tuple[Spinor, ...], ...], Tuple[Tuple[Spinor, ...], ...]]:
    """(delta_{ip}) for p1..p4 and (delta'_{ip}) for p'1..p'4, indexed [i][p]."""
    plus = tuple(tuple(parse_spinor_word(w) for w in row) for row in CARTAN_GRID)
    minus = tuple(tuple(parse_spinor_word(w) * s for s, w in row) for row in DUAL_GRID)
    return plus, minus


def _vectors_equal(v: Vector10, w: Vector10) -> bool:
    return (v - w).is_zero()


def abelian_failures(basis, convention: str = DEFAULT_SIGN) -> List[tuple]:
    """Index tuples (i, j, p, q) where gamma(d_ip, d_jq) != gamma(d_iq, d_jp)."""
    bad = []
    for i in range(4):
        for j in range(i + 1, 4):
            for p in range(4):
                for q in range(4):
                    lhs = gamma(basis[i][p], basis[j][q], convention)
                    rhs = gamma(basis[i][q], basis[j][p], convention)
                    if not _vectors_equal(lhs, rhs):
                        bad.append((i + 1, j + 1, p + 1, q + 1))
    return bad


def verify_cartan_abelian(convention: str = DEFAULT_SIGN) -> bool:
    """The bracket relations making both Cartan subspaces abelian."""
    plus, minus = cartan_bases()
    return not abelian_failures(plus, convention) and not abelian_failures(minus, convention)


def section_from_cartan(a) -> SectionDatum:
    if not isinstance(a, CartanPoint):
        a = CartanPoint.of(a)
    if a.is_zero():
        raise ValueError("the zero element of the Cartan subspace defines no section")
    plus, _ = cartan_bases()
    slots = []
    for p in range(4):
        s = Spinor({}, 0)
        for i in range(4):
            s = s + plus[i][p] * a.coords[i]
        slots.append(s)
    return SectionDatum(tuple(slots), "cartan")


# ---------------------------------------------------------------------------
# gamma_a
# ---------------------------------------------------------------------------

A_NAMES = ("a1", "a2", "a3", "a4")
X_NAMES = ("x1", "x2", "x3", "x4")


def _slot_spinors_symbolic() -> List[Spinor]:
    ring = A_NAMES + X_NAMES
    a = CartanPoint(tuple(MultiPoly.var(n, ring) for n in A_NAMES))
    return list(section_from_cartan(a).slots)


def gamma_a_raw() -> Vector10:
    """gamma(delta(x), delta(x)) with delta(x) = sum_p x_p delta(a)_p, symbolic in (a, x)."""
    ring = A_NAMES + X_NAMES
    xs = [MultiPoly.var(n, ring) for n in X_NAMES]
    slots = _slot_spinors_symbolic()
    d = Spinor({}, 0)
    for x, s in zip(xs, slots):
        d = d + s * x
    return gamma(d, d)


def gamma_a_closed_form() -> Vector10:
    """The closed form of gamma_a, coefficients on e1..e5, f1..f5."""
    ring = A_NAMES + X_NAMES
    a1, a2, a3, a4, x1, x2, x3, x4 = (MultiPoly.var(n, ring) for n in ring)
    e = [
        -((a1**2 + a2**2) * x2 * x4 + 2 * a3 * a4 * x1 * x3),
        -(a2 * a3 * x1**2 - a1 * a4 * x2**2 - a1 * a3 * x3**2 + a2 * a4 * x4**2),
        -(a1 * a3 * x1**2 - a2 * a4 * x2**2 + a2 * a3 * x3**2 - a1 * a4 * x4**2),
        -((a3**2 + a4**2) * x1 * x4 + 2 * a1 * a2 * x2 * x3),
        (a1**2 - a2**2) * x1 * x2 - (a3**2 - a4**2) * x3 * x4,
    ]
    f = [
        (a1**2 + a2**2) * x1 * x3 + 2 * a3 * a4 * x2 * x4,
        a1 * a4 * x1**2 - a2 * a3 * x2**2 - a2 * a4 * x3**2 + a1 * a3 * x4**2,
        -(a2 * a4 * x1**2 - a1 * a3 * x2**2 + a1 * a4 * x3**2 - a2 * a3 * x4**2),
        -((a3**2 + a4**2) * x2 * x3 + 2 * a1 * a2 * x1 * x4),
        (a1**2 - a2**2) * x3 * x4 + (a3**2 - a4**2) * x1 * x2,
    ]
    return Vector10.from_ef(e, f)


@lru_cache(maxsize=None)
def gamma_a_scale() -> GaussianRational:
    """Constant c with gamma(delta(x), delta(x)) = c * closed form; hard failure if none."""
    c = vectors_proportional(list(gamma_a_raw().coeffs), list(gamma_a_closed_form().coeffs))
    if c is None:
        raise AssertionError("gamma_a does not match the closed form up to a constant")
    return c


def gamma_a(a=None) -> Vector10:
    """gamma_a as a Vector10 of quadrics in x1..x4 (symbolic a when a is None)."""
    form = gamma_a_closed_form()
    gamma_a_scale()  # guard: the closed form is only used once it is certified
    if a is None:
        return form
    if not isinstance(a, CartanPoint):
        a = CartanPoint.of(a)
    return form.substitute(dict(zip(A_NAMES, a.coords)))


# ---------------------------------------------------------------------------
# presets
# ---------------------------------------------------------------------------


def _sp(text: str) -> Spinor:
    """'1+e1235', 'e23-e1345' -> Spinor."""
    out = None
    for sign, word in _split_terms(text):
        s = parse_spinor_word(word) * sign
        out = s if out is None else out + s
    return out


def _split_terms(text: str):
    text = text.replace(" ", "")
    pieces, sign, cur = [], 1, ""
    for ch in text:
        if ch in "+-":
            if cur:
                pieces.append((sign, cur))
            sign, cur = (1 if ch == "+" else -1), ""
        else:
            cur += ch
    if cur:
        pieces.append((sign, cur))
    return pieces


_PRESET_TEXT: Dict[str, Tuple[str, ...]] = {
    "codim2-1": ("1+e1235", "e45+e1234"),
    "codim2-2": ("1+e1235", "e35+e1234"),
    "codim3-1": ("1+e2345", "e12-e1345", "e23+e1245"),
    "codim3-2": ("1+e2345", "e12+e34", "e13+e45"),
    "codim3-3": ("1+e2345", "e12+e34", "e13+e1245"),
    "codim3-6": ("1+e2345", "e12+e34", "e45+e1234"),
    "codim3-4": ("1+e2345", "e23-e1345", "e12"),
    "nil-n0": ("e12+e1345", "e34-e1234", "e2345-e15", "-e23-e45"),
    # the fourth slot of n1..n3 is printed as a1; it is the a4 slot
    "nil-n1": ("e12+e1345", "e13+e24", "e15+e2345", "1+e1245"),
    "nil-n2": ("e12+e1345", "e13+e24", "e15+e23", "1+e1245"),
    "nil-n3": ("e12+e1345", "e13+e24", "e23+e45", "1+e1245"),
}

# Flat types: a basis (as coordinate vectors) and the valency of a generic member.
FLAT_TYPES: Dict[int, dict] = {
    1: {"basis": ((1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)), "valency": 0, "count": None},
    2: {"basis": ((1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0)), "valency": 1, "count": 60},
    3: {"basis": ((0, 1, 0, 0), (0, 0, 1, 0)), "valency": 3, "count": 360},
    4: {"basis": ((0, 1, -1, 0), (0, 0, 1, -1)), "valency": 2, "count": 320},
    5: {"basis": ((1, 1, 1, 0),), "valency": 15, "count": 960},
    6: {"basis": ((1, 0, 0, 0), (0, 1, 0, 0)), "valency": 6, "count": 30},
    7: {"basis": ((0, 1, 1, 0),), "valency": 6, "count": 480},
    8: {"basis": ((0, 0, 1, 1),), "valency": 4, "count": 60},
}

# Weights used to pick a generic member of a flat from its basis.
_GENERIC_WEIGHTS = (1, 3, 7, 19)


def flat_point(k: int) -> Tuple[GaussianRational, ...]:
    basis = FLAT_TYPES[k]["basis"]
    return tuple(
        GaussianRational.coerce(sum(w * b[j] for w, b in zip(_GENERIC_WEIGHTS, basis))) for j in range(4)
    )


PRESET_NAMES: Tuple[str, ...] = tuple(_PRESET_TEXT) + tuple(f"flat-{k}" for k in FLAT_TYPES)


def preset_section(name: str) -> SectionDatum:
    if name in _PRESET_TEXT:
        return SectionDatum(tuple(_sp(t) for t in _PRESET_TEXT[name]), name)
    if name.startswith("flat-"):
        try:
            k = int(name[5:])
        except ValueError:
            k = None
        if k in FLAT_TYPES:
            s = section_from_cartan(flat_point(k))
            return SectionDatum(s.slots, name)
    raise KeyError(f"unknown preset {name!r}; known presets: {', '.join(PRESET_NAMES)}")


# ---------------------------------------------------------------------------
# smoothness and conic type
# ---------------------------------------------------------------------------


def restricted_quadrics(section: SectionDatum) -> Tuple[Tuple[str, ...], List[MultiPoly]]:
    """The ten components of gamma(d(t), d(t)) for d(t) = sum t_j k_j over a basis of K."""
    basis = section.basis()
    names = tuple(f"t{j + 1}" for j in range(len(basis)))
    d = Spinor({}, section.parity)
    for j, k in enumerate(basis):
        d = d + k * MultiPoly.var(names[j], names)
    g = gamma(d, d)
    quads = [c for c in g.coeffs if isinstance(c, MultiPoly) and c.terms]
    return names, quads


def section_smooth(section: SectionDatum, budget: int = DEFAULT_BUDGET) -> bool:
    """X_K is smooth iff K contains no pure spinor."""
    if section.rank < 1:
        raise ValueError("a section needs a nonzero K")
    names, quads = restricted_quadrics(section)
    if not quads:
        return False
    return only_trivial_zero(Ideal.of(quads, names), budget=budget)


def conic_gram(section: SectionDatum) -> ExactMatrix:
    """Gram matrix of the quadratic complex on wedge^2 K in the basis k1^k2, k1^k3, k2^k3."""
    basis = section.basis()
    if len(basis) != 3:
        raise ValueError(f"conic type needs a rank-3 section, got rank {len(basis)}")
    k1, k2, k3 = basis
    # each element of wedge^2 of a 3-space is decomposable; use explicit factorizations
    w = [(k1, k2), (k1, k3), (k2, k3)]
    sums = {(0, 1): (k1, k2 + k3), (0, 2): (k1 - k3, k2), (1, 2): (k1 + k2, k3)}
    diag = [qr_value(*w[i]) for i in range(3)]
    gram = [[ZERO] * 3 for _ in range(3)]
    for i in range(3):
        gram[i][i] = diag[i]
    for (i, j), pair_ in sums.items():
        off = (qr_value(*pair_) - diag[i] - diag[j]) / 2
        gram[i][j] = gram[j][i] = off
    return ExactMatrix(gram)


def conic_type(section: SectionDatum) -> int:
    """Rank of c_K: 3 smooth conic, 2 line pair, 1 double line, 0 whole plane."""
    return conic_gram(section).rank()


def symbolic_conic(section: SectionDatum) -> MultiPoly:
    """qr_value on (s1 k1 + t1 k2 + u1 k3) ^ (s2 k1 + t2 k2 + u2 k3), as a polynomial."""
    ring = ("s1", "t1", "u1", "s2", "t2", "u2")
    v = {n: MultiPoly.var(n, ring) for n in ring}
    k = section.slots[:3]
    d1 = k[0] * v["s1"] + k[1] * v["t1"] + k[2] * v["u1"]
    d2 = k[0] * v["s2"] + k[1] * v["t2"] + k[2] * v["u2"]
    return qr_value(d1, d2)


def gamma_on_plane(section: SectionDatum) -> Vector10:
    """gamma(p, p) for p = s k1 + t k2 + u k3 (the slots of a rank-3 preset)."""
    ring = ("s", "t", "u")
    s, t, u = (MultiPoly.var(n, ring) for n in ring)
    k = section.slots[:3]
    p = k[0] * s + k[1] * t + k[2] * u
    return gamma(p, p)


__all__ = [
    "CARTAN_GRID",
    "DUAL_GRID",
    "CartanPoint",
    "SectionDatum",
    "cartan_bases",
    "abelian_failures",
    "verify_cartan_abelian",
    "section_from_cartan",
    "gamma_a",
    "gamma_a_raw",
    "gamma_a_closed_form",
    "gamma_a_scale",
    "PRESET_NAMES",
    "FLAT_TYPES",
    "flat_point",
    "preset_section",
    "restricted_quadrics",
    "section_smooth",
    "conic_gram",
    "conic_type",
    "symbolic_conic",
    "gamma_on_plane",
]
