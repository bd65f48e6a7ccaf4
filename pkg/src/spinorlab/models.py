"""Explicit models of three special sections.

* The very special codimension-three section, built from binary sextics
  and quartics (``very_special_model``).
* The SL2 x SL2 codimension-four section, in the tensor model
  A (x) S^2 B + B (x) S^2 A (``sl2sl2_model``).
* A character count for the GL2 codimension-four section
  (``gl2_weight_check``).
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, product
from math import factorial, gcd
from typing import Dict, List, Optional, Sequence, Tuple

from .binaryforms import BinaryForm, transvectant
from .exact import ONE, ZERO, ExactMatrix, GaussianRational, MultiPoly, span_rank, variables

# ---------------------------------------------------------------------------
# very special section: Delta_K = C + S^6 U + S^4 U
# ---------------------------------------------------------------------------


def pi_map(p: BinaryForm, q: Optional[BinaryForm] = None) -> BinaryForm:
    """The covariant S^2(S^6) -> S^4: fourth (scaled) transvectant, polarized when q is given."""
    return transvectant(p, p if q is None else q, 4)


def sextic_quartic_contraction(d4: BinaryForm, d6: BinaryForm) -> BinaryForm:
    """The equivariant S^4 x S^6 -> S^4 pairing: third transvectant."""
    return transvectant(d4, d6, 3)


def very_special_equations(d0, d6: BinaryForm, d4: BinaryForm) -> Tuple[BinaryForm, BinaryForm]:
    """(pi(d6) - d0 d4, d4 contracted with d6); both vanish on the section."""
    return pi_map(d6) - d4.scale(d0), sextic_quartic_contraction(d4, d6)


def additive_action(a: BinaryForm, point):
    """a.[d0 : d6 : d4] = [d0 : d6 + d0 a : d4 + d0 pi(a, a) + 2 pi(d6, a)]."""
    d0, d6, d4 = point
    return (
        d0,
        d6 + a.scale(d0),
        d4 + pi_map(a).scale(d0) + pi_map(d6, a).scale(2),
    )


def psi(z, p: BinaryForm):
    """[z : p] -> [z^2 : z p : pi(p)]."""
    return (z * z, p.scale(z), pi_map(p))


# wedge^2(S^4 U) on the basis e_i ^ e_j, e_i = x^(4-i) y^i


def _lower_wedge(v: Dict[Tuple[int, int], object]) -> Dict[Tuple[int, int], object]:
    """The derivation induced by y d/dx: e_i -> (4 - i) e_(i+1)."""
    out: Dict[Tuple[int, int], object] = {}

    def add(i, j, c):
        if i == j:
            return
        if i > j:
            i, j, c = j, i, -c
        out[(i, j)] = out.get((i, j), ZERO) + c

    for (i, j), c in v.items():
        if i < 4:
            add(i + 1, j, c * (4 - i))
        if j < 4:
            add(i, j + 1, c * (4 - j))
    return {k: c for k, c in out.items() if c}


@lru_cache(maxsize=None)
def sextic_in_wedge() -> Tuple[Dict[Tuple[int, int], GaussianRational], ...]:
    """Images of x^(6-k) y^k under the equivariant S^6 U -> wedge^2(S^4 U).

    The highest weight vector x^6 goes to e_0 ^ e_1 and the rest follows
    by lowering: x^(6-k) y^k -> (6-k)!/6! L^k(e_0 ^ e_1).
    """
    images = []
    v: Dict[Tuple[int, int], object] = {(0, 1): ONE}
    for k in range(7):
        scale = Fraction(factorial(6 - k), factorial(6))
        images.append({key: GaussianRational.coerce(c * scale) for key, c in v.items()})
        v = _lower_wedge(v)
    return tuple(images)


def wedge_image(d6: BinaryForm) -> Dict[Tuple[int, int], object]:
    plain = d6.plain()
    out: Dict[Tuple[int, int], object] = {}
    for k, image in enumerate(sextic_in_wedge()):
        for key, c in image.items():
            out[key] = out.get(key, ZERO) + plain[k] * c
    return out


def grassmannian_quadrics(q: Dict[Tuple[int, int], object]) -> List[object]:
    """The five Pluecker quadrics of G(2, 5), one per 4-subset of {0..4}."""
    def g(i, j):
        return q.get((i, j), ZERO)

    return [
        g(i, j) * g(k, l) - g(i, k) * g(j, l) + g(i, l) * g(j, k)
        for i, j, k, l in combinations(range(5), 4)
    ]


SEXTIC_NAMES = tuple(f"d{k}" for k in range(7))
SHIFT_NAMES = tuple(f"s{k}" for k in range(7))


def bolza_sextic() -> BinaryForm:
    """x y (x^4 + y^4)."""
    return BinaryForm.from_plain([0, 1, 0, 0, 0, 1, 0])


@dataclass(frozen=True)
class VerySpecialRecord:
    pi_span_dimension: int
    grassmannian_span_dimension: int
    joint_span_dimension: int
    sixth_power_killed: bool
    bolza_killed: bool
    contraction_vanishes_on_image: bool
    additive_action_preserves: bool
    normalization: str = "pi = scaled 4th transvectant, contraction = scaled 3rd transvectant"

    @property
    def spans_equal(self) -> bool:
        return self.pi_span_dimension == self.grassmannian_span_dimension == self.joint_span_dimension

    @property
    def ok(self) -> bool:
        return (
            self.spans_equal
            and self.sixth_power_killed
            and self.bolza_killed
            and self.contraction_vanishes_on_image
            and self.additive_action_preserves
        )


class SpanMismatch(AssertionError):
    pass


@lru_cache(maxsize=None)
def very_special_model(strict: bool = False) -> VerySpecialRecord:
    """Check the very special model; ``strict`` raises on a span mismatch."""
    ring = SEXTIC_NAMES + SHIFT_NAMES + ("z",)
    gens = variables(ring)
    p = BinaryForm(tuple(gens[:7]))
    a = BinaryForm(tuple(gens[7:14]))
    z = gens[14]

    pi_quadrics = list(pi_map(p).coeffs)
    grass = grassmannian_quadrics(wedge_image(p))
    dims = (span_rank(pi_quadrics), span_rank(grass), span_rank(pi_quadrics + grass))
    if strict and not (dims[0] == dims[1] == dims[2]):
        raise SpanMismatch(f"span dimensions pi={dims[0]} grassmannian={dims[1]} joint={dims[2]}")

    sixth = BinaryForm.linear_power(1, 0, 6)
    sixth_killed = pi_map(sixth).is_zero()
    bolza_killed = pi_map(bolza_sextic()).is_zero()

    on_image = sextic_quartic_contraction(pi_map(p), p).is_zero()

    moved = additive_action(a, psi(z, p))
    e1, e2 = very_special_equations(*moved)
    # boundary points d0 = 0: the polarized contraction must vanish as well
    polar = sextic_quartic_contraction(pi_map(p, a), p).scale(2) + sextic_quartic_contraction(pi_map(p), a)
    preserves = e1.is_zero() and e2.is_zero() and polar.is_zero()
    return VerySpecialRecord(dims[0], dims[1], dims[2], sixth_killed, bolza_killed, on_image, preserves)


# ---------------------------------------------------------------------------
# SL2 x SL2 section: Delta_K = A (x) S^2 B + B (x) S^2 A
# ---------------------------------------------------------------------------


def _q(*c) -> BinaryForm:
    return BinaryForm(tuple(c))


@dataclass(frozen=True)
class TensorPoint:
    """theta = a1 (x) beta1 + a2 (x) beta2 + b1 (x) alpha1 + b2 (x) alpha2.

    beta_i in S^2 B and alpha_j in S^2 A are quadratic forms with weighted
    coefficients (c0, c1, c2) meaning c0 u^2 + 2 c1 u v + c2 v^2.
    """

    beta: Tuple[BinaryForm, BinaryForm]
    alpha: Tuple[BinaryForm, BinaryForm]

    @classmethod
    def from_components(cls, a_part: Dict[Tuple[int, str], object], b_part: Dict[Tuple[int, str], object]):
        """Build from {(i, monomial): coeff} with monomials '11', '12', '22'.

        ``a_part[(i, '12')]`` is the coefficient of a_i (x) b1 b2, and so on.
        """
        def quad(part, i):
            return _q(part.get((i, "11"), 0), Fraction(1, 2) * GaussianRational.coerce(part.get((i, "12"), 0)), part.get((i, "22"), 0))

        return cls((quad(a_part, 1), quad(a_part, 2)), (quad(b_part, 1), quad(b_part, 2)))

    def components(self) -> Dict[str, object]:
        """Coordinates in the monomial basis a_i b_j b_k and b_i a_j a_k."""
        out = {}
        for i, q in enumerate(self.beta, 1):
            for name, c in zip(("11", "12", "22"), q.plain()):
                out[f"a{i}.b{name}"] = c
        for i, q in enumerate(self.alpha, 1):
            for name, c in zip(("11", "12", "22"), q.plain()):
                out[f"b{i}.a{name}"] = c
        return out

    def swap(self) -> "TensorPoint":
        """Simultaneous swap a1 <-> a2, b1 <-> b2."""
        def rev(q: BinaryForm) -> BinaryForm:
            return BinaryForm(tuple(reversed(q.coeffs)))

        return TensorPoint((rev(self.beta[1]), rev(self.beta[0])), (rev(self.alpha[1]), rev(self.alpha[0])))

    def act_diagonal(self, s, t) -> "TensorPoint":
        """Action of (diag(s, 1/s), diag(t, 1/t))."""
        s, t = GaussianRational.coerce(s), GaussianRational.coerce(t)

        def scale_quad(q: BinaryForm, w) -> BinaryForm:
            return BinaryForm((q.coeffs[0] * w * w, q.coeffs[1], q.coeffs[2] / (w * w)))

        beta = (scale_quad(self.beta[0], t).scale(s), scale_quad(self.beta[1], t).scale(ONE / s))
        alpha = (scale_quad(self.alpha[0], s).scale(t), scale_quad(self.alpha[1], s).scale(ONE / t))
        return TensorPoint(beta, alpha)


def _contract_linear(i: int, q: BinaryForm) -> Tuple[object, object]:
    """iota_{e_i}(q) where iota_{e'}(e^2) = (e ^ e') e, as a vector in the 2-space."""
    c = q.coeffs
    if i == 0:
        return (-c[1], -c[2])
    return (c[0], c[1])


@dataclass(frozen=True)
class SL2Constants:
    c1: object
    c2: object
    c1p: object
    c2p: object

    def as_tuple(self):
        return (self.c1, self.c2, self.c1p, self.c2p)


def _weighted_quad(d11, d12, d22) -> BinaryForm:
    """d11 u^2 + d22 v^2 + 2 d12 u v, i.e. weighted coefficients (d11, d12, d22)."""
    return BinaryForm((d11, d12, d22))


def sl2sl2_equations(theta: TensorPoint, constants: SL2Constants) -> Dict[str, List[object]]:
    """The three families of quadratic equations at theta."""
    b1, b2 = theta.beta
    al1, al2 = theta.alpha
    mixed = [[ZERO, ZERO], [ZERO, ZERO]]
    for i in range(2):
        for j in range(2):
            va = _contract_linear(i, theta.alpha[j])
            vb = _contract_linear(j, theta.beta[i])
            for r in range(2):
                for s in range(2):
                    mixed[r][s] = mixed[r][s] + va[r] * vb[s]

    def D(f, g):
        return transvectant(f, g, 2).coeffs[0]

    jac_a = transvectant(al1, al2, 1)
    jac_b = transvectant(b1, b2, 1)
    c1, c2, c1p, c2p = constants.as_tuple()
    s2a = _weighted_quad(D(b1, b1), D(b1, b2), D(b2, b2)).scale(c1) + jac_a.scale(c2p)
    s2b = _weighted_quad(D(al1, al1), D(al1, al2), D(al2, al2)).scale(c1p) + jac_b.scale(c2)
    return {
        "mixed": [mixed[0][0], mixed[0][1], mixed[1][0], mixed[1][1]],
        "S2A": list(s2a.coeffs),
        "S2B": list(s2b.coeffs),
    }


def _all_zero(eqs: Dict[str, List[object]]) -> bool:
    def z(x):
        return x.is_zero() if isinstance(x, MultiPoly) else not GaussianRational.coerce(x)

    return all(z(x) for v in eqs.values() for x in v)


def theta_generic() -> TensorPoint:
    """a1 (x) b1^2 + a2 (x) b2^2 + b1 (x) a2^2 + b2 (x) a1^2."""
    return TensorPoint((_q(1, 0, 0), _q(0, 0, 1)), (_q(0, 0, 1), _q(1, 0, 0)))


def theta_degenerate() -> TensorPoint:
    """a1 (x) b1^2 - 2 a2 (x) b1 b2 - 2 b1 (x) a1 a2 - b2 (x) a2^2."""
    return TensorPoint((_q(1, 0, 0), _q(0, -1, 0)), (_q(0, -1, 0), _q(0, 0, -1)))


def degenerate_family_point(u, v, w) -> TensorPoint:
    """theta_1 = a1^2 b1 + 2 a1 a2 b2, theta_2 = a1 (u b2^2 + v b1 b2) + w a2 b2^2."""
    half = Fraction(1, 2)
    return TensorPoint(
        (_q(0, GaussianRational.coerce(v) * half, u), _q(0, 0, w)),
        (_q(1, 0, 0), _q(0, 1, 0)),
    )


CONSTANT_NAMES = ("c1", "c2", "c1p", "c2p")


def solve_constants(theta: TensorPoint) -> List[List[GaussianRational]]:
    """Basis of constant vectors (c1, c2, c1', c2') for which theta satisfies every equation.

    The equations are linear in the constants, so this is a kernel computation.
    """
    gens = variables(CONSTANT_NAMES)
    eqs = sl2sl2_equations(theta, SL2Constants(*gens))
    rows = []
    for fam in ("mixed", "S2A", "S2B"):
        for e in eqs[fam]:
            if not isinstance(e, MultiPoly):
                if GaussianRational.coerce(e):
                    return []
                continue
            e = e.with_variables(CONSTANT_NAMES)
            if e.terms and e.degree() > 1:
                raise ValueError("equations are not linear in the constants")
            rows.append([e.coefficient({n: 1}) for n in CONSTANT_NAMES])
    if not rows:
        return [[ONE if i == j else ZERO for j in range(4)] for i in range(4)]
    return ExactMatrix(rows).kernel()


def torus_stabilizer(theta: TensorPoint) -> Tuple[int, Tuple[Tuple[int, int], ...]]:
    """Diagonal (diag(s,1/s), diag(t,1/t)) fixing [theta].

    Every nonzero coordinate is a torus eigenvector; [theta] is fixed when
    all their characters agree.  The solutions form a finite group when the
    difference lattice has rank two; it is returned as (N, exponents) with
    s = xi^e1, t = xi^e2 and xi a primitive N-th root of unity.
    """
    chars = []
    for i, q in enumerate(theta.beta):
        sa = 1 if i == 0 else -1
        for k, c in enumerate(q.coeffs):
            if c:
                chars.append((sa, 2 - 2 * k))
    for j, q in enumerate(theta.alpha):
        tb = 1 if j == 0 else -1
        for k, c in enumerate(q.coeffs):
            if c:
                chars.append((2 - 2 * k, tb))
    first = chars[0]
    diffs = [(c[0] - first[0], c[1] - first[1]) for c in chars[1:]]
    minors = [abs(u[0] * v[1] - u[1] * v[0]) for u, v in combinations(diffs, 2)]
    order = 0
    for m in minors:
        order = gcd(order, m)
    if order == 0:
        raise ValueError("stabilizer is not finite")
    sols = tuple(
        (e1, e2)
        for e1, e2 in product(range(order), repeat=2)
        if all((d[0] * e1 + d[1] * e2) % order == 0 for d in diffs)
    )
    return order, sols


def diagonal_pair_condition(theta: TensorPoint, a_exp: int = 3, b_exp: int = 1) -> int:
    """For the pair (diag(xi^a, xi^-a), diag(xi^b, xi^-b)), return the n with
    [theta] fixed iff xi^n = 1 (n = gcd of the character differences)."""
    order, sols = torus_stabilizer(theta)
    chars = []
    for i, q in enumerate(theta.beta):
        sa = 1 if i == 0 else -1
        chars += [sa * a_exp + (2 - 2 * k) * b_exp for k, c in enumerate(q.coeffs) if c]
    for j, q in enumerate(theta.alpha):
        tb = 1 if j == 0 else -1
        chars += [(2 - 2 * k) * a_exp + tb * b_exp for k, c in enumerate(q.coeffs) if c]
    n = 0
    for c in chars[1:]:
        n = gcd(n, c - chars[0])
    return n


@dataclass(frozen=True)
class SL2SL2Record:
    constant_space_dimension: int
    constants: Tuple[GaussianRational, ...]
    mixed_vanish_identically: bool
    theta_on_section: bool
    product_relation: GaussianRational  # c1 c1' + c2 c2'
    degenerate_on_section: bool
    degenerate_family_ok: bool
    stabilizer_order: int
    stabilizer_exponents: Tuple[Tuple[int, int], ...]
    xi_order: int  # (xi^3, xi) fixes [theta] iff xi^xi_order = 1

    @property
    def ok(self) -> bool:
        return (
            self.mixed_vanish_identically
            and self.theta_on_section
            and not self.product_relation
            and self.degenerate_on_section
            and self.degenerate_family_ok
            and self.stabilizer_order == 10
            and self.xi_order == 10
        )


class InconsistentConstants(AssertionError):
    pass


def _pick_constants(kernel: List[List[GaussianRational]]) -> Tuple[GaussianRational, ...]:
    """The kernel vector with c1 = c2 = 1 (c1 and c2 are free for the generic theta)."""
    rows = [[vec[0] for vec in kernel], [vec[1] for vec in kernel]]
    coeffs = ExactMatrix([[*r] for r in rows]).solve([ONE, ONE])
    return tuple(sum((c * vec[k] for c, vec in zip(coeffs, kernel)), ZERO) for k in range(4))


@lru_cache(maxsize=None)
def sl2sl2_model() -> SL2SL2Record:
    theta = theta_generic()
    kernel = solve_constants(theta)
    if not kernel:
        raise InconsistentConstants("no constants make theta satisfy the equations")
    consts = _pick_constants(kernel)
    constants = SL2Constants(*consts)

    gens = variables(CONSTANT_NAMES)
    mixed_free = all(
        not GaussianRational.coerce(x) if not isinstance(x, MultiPoly) else x.is_zero()
        for x in sl2sl2_equations(theta, SL2Constants(*gens))["mixed"]
    )
    on_section = _all_zero(sl2sl2_equations(theta, constants))
    c1, c2, c1p, c2p = consts
    relation = c1 * c1p + c2 * c2p
    degenerate = _all_zero(sl2sl2_equations(theta_degenerate(), constants))

    # the degenerate family: v + 2w = 0 with v^2 fixed by the constants
    v_sq = c2p * 4 / c1
    v = _rational_sqrt(v_sq)
    family_ok = v is not None and _all_zero(
        sl2sl2_equations(degenerate_family_point(7, v, -v / 2), constants)
    )

    order, sols = torus_stabilizer(theta)
    n = diagonal_pair_condition(theta)
    return SL2SL2Record(len(kernel), consts, mixed_free, on_section, relation, degenerate, family_ok, order, sols, n)


def _rational_sqrt(x: GaussianRational) -> Optional[GaussianRational]:
    if x.im:
        return None
    r = Fraction(x.re)
    if r < 0:
        root = _rational_sqrt(GaussianRational(-r))
        return None if root is None else root * GaussianRational(0, 1)
    num, den = r.numerator, r.denominator
    sn, sd = int(round(num ** 0.5)), int(round(den ** 0.5))
    if sn * sn == num and sd * sd == den:
        return GaussianRational(Fraction(sn, sd))
    return None


# ---------------------------------------------------------------------------
# GL2 section: characters
# ---------------------------------------------------------------------------

Weight2 = Tuple[Fraction, Fraction]  # (sl2 weight with U = {+1, -1}, G_m weight)


def sym_character(p: int, k: int) -> Counter:
    """Character of S^p U(k)."""
    return Counter({(Fraction(p - 2 * i), Fraction(k)): 1 for i in range(p + 1)})


def character_sum(*chars: Counter) -> Counter:
    total: Counter = Counter()
    for c in chars:
        total.update(c)
    return total


def character_product(c1: Counter, c2: Counter) -> Counter:
    out: Counter = Counter()
    for (w1, m1), (w2, m2) in product(c1.items(), c2.items()):
        out[(w1[0] + w2[0], w1[1] + w2[1])] += m1 * m2
    return out


def gl2_vector_weights() -> List[Weight2]:
    """The ten weights of V10 = S^2U(2) + S^2U(-2) + S^2U(0) + C(0)."""
    return sorted(character_sum(sym_character(2, 2), sym_character(2, -2), sym_character(2, 0), sym_character(0, 0)).elements())


def isotropic_halves(ws: Sequence[Weight2]) -> List[Weight2]:
    """Choose one weight from each of the five pairs {w, -w}."""
    remaining = Counter(ws)
    half = []
    for w in sorted(remaining):
        if remaining[w] == 0:
            continue
        neg = (-w[0], -w[1])
        remaining[w] -= 1
        if remaining[neg] <= 0:
            raise ValueError("weights are not symmetric")
        remaining[neg] -= 1
        half.append(w)
    return half


def half_spin_characters() -> Tuple[Counter, Counter]:
    """Characters of the two half-spin modules: half-sums with an even / odd number of minus signs."""
    half = isotropic_halves(gl2_vector_weights())
    even: Counter = Counter()
    odd: Counter = Counter()
    for signs in product((1, -1), repeat=len(half)):
        w = (
            sum((s * h[0] for s, h in zip(signs, half)), Fraction(0)) / 2,
            sum((s * h[1] for s, h in zip(signs, half)), Fraction(0)) / 2,
        )
        minus = signs.count(-1)
        (even if minus % 2 == 0 else odd)[w] += 1
    return even, odd


def invariant_multiplicity(char: Counter) -> int:
    """Multiplicity of the trivial SL2 x G_m module: m(0, 0) - m(2, 0)."""
    zero = (Fraction(0), Fraction(0))
    up = (Fraction(2), Fraction(0))
    return char.get(zero, 0) - char.get(up, 0)


@dataclass(frozen=True)
class GL2Record:
    invariants_even: int
    invariants_odd: int
    zero_weight_even: int
    zero_weight_odd: int
    delta_k_identity: Dict[str, bool] = field(default_factory=dict)
    total_dimension: int = 0

    @property
    def ok(self) -> bool:
        return 2 in (self.invariants_even, self.invariants_odd) and any(self.delta_k_identity.values()) and self.total_dimension == 32


def four_space_character() -> Counter:
    """C^4 = U(1) + U(-1)."""
    return character_sum(sym_character(1, 1), sym_character(1, -1))


def delta_k_character() -> Counter:
    """U(3) + S^3U(-1) + S^3U(1) + U(-3)."""
    return character_sum(sym_character(1, 3), sym_character(3, -1), sym_character(3, 1), sym_character(1, -3))


@lru_cache(maxsize=None)
def gl2_weight_check() -> GL2Record:
    even, odd = half_spin_characters()
    c4 = four_space_character()
    inv_even = invariant_multiplicity(character_product(c4, even))
    inv_odd = invariant_multiplicity(character_product(c4, odd))
    zero = (Fraction(0), Fraction(0))
    # Delta_K = (half-spin) minus K with K ~ C^4 (U is self-dual, so C^4 and its dual agree)
    dk = delta_k_character()
    identity = {
        "even": character_sum(dk, c4) == even,
        "odd": character_sum(dk, c4) == odd,
    }
    return GL2Record(
        inv_even,
        inv_odd,
        character_product(c4, even).get(zero, 0),
        character_product(c4, odd).get(zero, 0),
        identity,
        sum(even.values()) + sum(odd.values()),
    )


__all__ = [
    "pi_map",
    "sextic_quartic_contraction",
    "very_special_equations",
    "additive_action",
    "psi",
    "sextic_in_wedge",
    "wedge_image",
    "grassmannian_quadrics",
    "bolza_sextic",
    "VerySpecialRecord",
    "SpanMismatch",
    "very_special_model",
    "TensorPoint",
    "SL2Constants",
    "sl2sl2_equations",
    "theta_generic",
    "theta_degenerate",
    "degenerate_family_point",
    "solve_constants",
    "torus_stabilizer",
    "diagonal_pair_condition",
    "SL2SL2Record",
    "InconsistentConstants",
    "sl2sl2_model",
    "sym_character",
    "character_sum",
    "character_product",
    "gl2_vector_weights",
    "half_spin_characters",
    "invariant_multiplicity",
    "four_space_character",
    "delta_k_character",
    "GL2Record",
    "gl2_weight_check",
]
