"""Binary forms with binomially weighted coefficients.

A form of degree d is stored as (f_0, ..., f_d) meaning
``sum_k C(d, k) f_k x^(d-k) y^k``.  Coefficients are Gaussian rationals or
``MultiPoly`` objects; every routine here is written against ring
operations only, so the same code serves numeric and symbolic inputs.

Main pieces:

* ``transvectant``: the r-th transvectant through the Cayley operator.
* ``ap_map``: the quartic apolar to a pencil of cubics.
* ``AP_map``: the pencil of cubics apolar to a quartic.
* ``sylvester_resultant``, ``j_invariant`` and ``inversion_identities``.

The cubic-side matrices (``apolarity_matrix``, ``sylvester_matrix``) place the
stored tuple of each cubic verbatim.  They are SL2-equivariant, and the 6 x 6
determinant is a resultant, only when that tuple is read as the plain
coefficients of the cubic.  Under the weighted reading used for storage they
are neither.  ``resultant`` gives the true resultant of two forms for
comparison.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, combinations_with_replacement
from math import comb, factorial
from typing import Dict, List, Sequence, Tuple

from .exact import (
    ONE,
    ZERO,
    GaussianRational,
    MultiPoly,
    express_in_span,
    generic_det,
    proportionality,
    variables,
)

PAIRS = tuple(combinations(range(4), 2))  # (0,1) (0,2) (0,3) (1,2) (1,3) (2,3)


def _is_zero(x) -> bool:
    if isinstance(x, MultiPoly):
        return x.is_zero()
    return not GaussianRational.coerce(x)


def _coerce(x):
    return x if isinstance(x, MultiPoly) else GaussianRational.coerce(x)


@dataclass(frozen=True)
class BinaryForm:
    """``sum_k C(d,k) coeffs[k] x^(d-k) y^k``."""

    coeffs: Tuple[object, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(_coerce(c) for c in self.coeffs))
        if not self.coeffs:
            raise ValueError("a binary form needs at least one coefficient")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def from_plain(cls, plain: Sequence[object]) -> "BinaryForm":
        """From ordinary coefficients of x^(d-k) y^k."""
        d = len(plain) - 1
        return cls(tuple(_coerce(c) * Fraction(1, comb(d, k)) for k, c in enumerate(plain)))

    def plain(self) -> Tuple[object, ...]:
        d = self.degree
        return tuple(c * comb(d, k) for k, c in enumerate(self.coeffs))

    @classmethod
    def zero(cls, degree: int) -> "BinaryForm":
        return cls((ZERO,) * (degree + 1))

    @classmethod
    def linear_power(cls, p, q, degree: int) -> "BinaryForm":
        """(p x + q y)^degree; weighted coefficients are p^(d-k) q^k."""
        p, q = _coerce(p), _coerce(q)
        return cls(tuple(p ** (degree - k) * q ** k for k in range(degree + 1)))

    def is_zero(self) -> bool:
        return all(_is_zero(c) for c in self.coeffs)

    def __add__(self, other: "BinaryForm") -> "BinaryForm":
        if self.degree != other.degree:
            raise ValueError("degree mismatch")
        return BinaryForm(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "BinaryForm") -> "BinaryForm":
        return self + other.scale(-1)

    def scale(self, c) -> "BinaryForm":
        c = _coerce(c)
        return BinaryForm(tuple(x * c for x in self.coeffs))

    def __mul__(self, other: "BinaryForm") -> "BinaryForm":
        """Product of forms."""
        a, b = self.plain(), other.plain()
        out = [ZERO] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            for j, y in enumerate(b):
                out[i + j] = out[i + j] + x * y
        return BinaryForm.from_plain(out)

    def evaluate(self, x, y):
        d = self.degree
        x, y = _coerce(x), _coerce(y)
        total = ZERO
        for k, c in enumerate(self.plain()):
            total = total + c * x ** (d - k) * y ** k
        return total

    def to_poly(self, names: Sequence[str] = ("x", "y")) -> MultiPoly:
        x, y = variables(names)
        d = self.degree
        total = MultiPoly.constant(0, names)
        for k, c in enumerate(self.plain()):
            total = total + x ** (d - k) * y ** k * c
        return total

    @classmethod
    def from_poly(cls, poly: MultiPoly, names: Sequence[str] = ("x", "y")) -> "BinaryForm":
        """Read a homogeneous numeric polynomial in two named variables."""
        poly = poly.with_variables(tuple(names) + tuple(v for v in poly.variables if v not in names))
        d = poly.degree()
        plain = [ZERO] * (d + 1)
        for exp, c in poly.terms.items():
            if any(exp[2:]) or exp[0] + exp[1] != d:
                raise ValueError("not a homogeneous binary form in the given variables")
            plain[exp[1]] = c
        return cls.from_plain(plain)

    def substitute(self, matrix) -> "BinaryForm":
        """f(g^T (x, y)), i.e. x -> m00 x + m10 y, y -> m01 x + m11 y."""
        (m00, m01), (m10, m11) = matrix
        total = BinaryForm.zero(self.degree)
        d = self.degree
        for k, c in enumerate(self.plain()):
            if _is_zero(c):
                continue
            term = BinaryForm((ONE,))
            for _ in range(d - k):
                term = term * BinaryForm((m00, m10))
            for _ in range(k):
                term = term * BinaryForm((m01, m11))
            total = total + term.scale(c)
        return total


def form(*coeffs) -> BinaryForm:
    return BinaryForm(tuple(coeffs))


# ---------------------------------------------------------------------------
# transvectants
# ---------------------------------------------------------------------------

TRANSVECTANT_NORMALIZATIONS = ("scaled", "classical", "raw")


def _derivative_plain(plain: Sequence[object], dx: int, dy: int) -> List[object]:
    """Plain coefficients of d^dx/dx d^dy/dy applied to sum plain[k] x^(d-k) y^k."""
    d = len(plain) - 1
    out = []
    for k, c in enumerate(plain):
        ex, ey = d - k, k
        if ex < dx or ey < dy:
            continue
        factor = (factorial(ex) // factorial(ex - dx)) * (factorial(ey) // factorial(ey - dy))
        out.append((k - dy, c * factor))
    res = [ZERO] * (d - dx - dy + 1)
    for k, c in out:
        res[k] = res[k] + c
    return res


def transvectant(f: BinaryForm, g: BinaryForm, r: int, normalization: str = "scaled") -> BinaryForm:
    """r-th transvectant of two binary forms.

    ``raw`` is the Cayley operator Omega^r applied to f(x)g(y) and restricted
    to the diagonal.  ``scaled`` divides it by 2^r: on quadratics this gives
    Jac(x^2, y^2) = 2xy and D(x^2, y^2) = 1, D(xy, xy) = -1/2.
    ``classical`` is the usual (m-r)!(n-r)!/(m! n!) Omega^r.
    """
    m, n = f.degree, g.degree
    if r < 0 or r > min(m, n):
        raise ValueError(f"transvectant order {r} exceeds min degree {min(m, n)}")
    if normalization not in TRANSVECTANT_NORMALIZATIONS:
        raise ValueError(f"unknown normalization {normalization!r}")
    fp, gp = f.plain(), g.plain()
    out = [ZERO] * (m + n - 2 * r + 1)
    for i in range(r + 1):
        df = _derivative_plain(fp, r - i, i)
        dg = _derivative_plain(gp, i, r - i)
        sign = (-1) ** i * comb(r, i)
        for a, x in enumerate(df):
            if _is_zero(x):
                continue
            for b, y in enumerate(dg):
                if _is_zero(y):
                    continue
                out[a + b] = out[a + b] + x * y * sign
    if normalization == "scaled":
        factor = Fraction(1, 2 ** r)
    elif normalization == "classical":
        factor = Fraction(factorial(m - r) * factorial(n - r), factorial(m) * factorial(n))
    else:
        factor = Fraction(1)
    return BinaryForm.from_plain([c * factor for c in out])


def jacobian(f: BinaryForm, g: BinaryForm) -> BinaryForm:
    return transvectant(f, g, 1)


def discriminant_pairing(f: BinaryForm, g: BinaryForm | None = None) -> BinaryForm:
    """D(f, g): second scaled transvectant; D(f) = D(f, f)."""
    return transvectant(f, f if g is None else g, 2)


def contract(c: BinaryForm, f: BinaryForm) -> BinaryForm:
    """Apolarity contraction c ⌟ f in weighted coordinates.

    For deg c = p <= deg f = q the result has degree q - p with weighted
    coefficients sum_j c_j f_(j+s).  For cubics on quartics these are
    the rows of the matrix M(c1, c2).
    """
    p, q = c.degree, f.degree
    if p > q:
        raise ValueError("contraction needs deg c <= deg f")
    return BinaryForm(
        tuple(sum((c.coeffs[j] * f.coeffs[j + s] for j in range(p + 1)), ZERO) for s in range(q - p + 1))
    )


# ---------------------------------------------------------------------------
# pencils of cubics and apolar quartics
# ---------------------------------------------------------------------------


def pluecker(c1: BinaryForm, c2: BinaryForm) -> Dict[Tuple[int, int], object]:
    """p_ij = alpha_i beta_j - alpha_j beta_i on weighted coefficients."""
    a, b = c1.coeffs, c2.coeffs
    return {(i, j): a[i] * b[j] - a[j] * b[i] for i, j in PAIRS}


def pluecker_relation(p: Dict[Tuple[int, int], object]):
    return p[(0, 1)] * p[(2, 3)] - p[(0, 2)] * p[(1, 3)] + p[(0, 3)] * p[(1, 2)]


def _p(p, i: int, j: int):
    if i == j:
        return ZERO
    if i < j:
        return p[(i, j)]
    return -p[(j, i)]


def apolarity_matrix(c1: BinaryForm, c2: BinaryForm) -> List[List[object]]:
    """The 4 x 5 matrix whose kernel is the space of quartics apolar to c1, c2."""
    a, b = list(c1.coeffs), list(c2.coeffs)
    return [a + [ZERO], b + [ZERO], [ZERO] + a, [ZERO] + b]


def ap_from_pluecker(p: Dict[Tuple[int, int], object]) -> BinaryForm:
    """Signed maximal minors of M(c1, c2), written through Laplace expansion
    on the two row pairs, so they come out quadratic in the p_ij."""
    coeffs = []
    for j in range(5):
        cols = [c for c in range(5) if c != j]
        total = ZERO
        for s in combinations(range(4), 2):
            upper_cols = [cols[s[0]], cols[s[1]]]
            lower_cols = [cols[t] for t in range(4) if t not in s]
            if upper_cols[1] > 3 or lower_cols[0] < 1:
                continue
            up = _p(p, upper_cols[0], upper_cols[1])
            low = _p(p, lower_cols[0] - 1, lower_cols[1] - 1)
            if _is_zero(up) or _is_zero(low):
                continue
            sign = (-1) ** (1 + s[0] + s[1])  # rows (1,2), columns at 1-based positions s+1
            total = total + up * low * sign
        coeffs.append(total * (-1) ** j)
    return BinaryForm(tuple(coeffs))


def ap_map(c1: BinaryForm, c2: BinaryForm) -> BinaryForm:
    """The quartic apolar to the pencil <c1, c2>, from the maximal minors."""
    if c1.degree != 3 or c2.degree != 3:
        raise ValueError("ap_map takes two binary cubics")
    return ap_from_pluecker(pluecker(c1, c2))


def catalecticant(kappa: BinaryForm) -> List[List[object]]:
    k = kappa.coeffs
    return [list(k[0:4]), list(k[1:5])]


def catalecticant_minors(kappa: BinaryForm) -> Dict[Tuple[int, int], object]:
    """2 x 2 minors m_ij = k_i k_(j+1) - k_j k_(i+1) of the 2 x 4 catalecticant."""
    if kappa.degree != 4:
        raise ValueError("catalecticant minors are defined for quartics")
    k = kappa.coeffs
    return {(i, j): k[i] * k[j + 1] - k[j] * k[i + 1] for i, j in PAIRS}


_HODGE = {
    (0, 1): ((2, 3), 1),
    (0, 2): ((1, 3), -1),
    (0, 3): ((1, 2), 1),
    (1, 2): ((0, 3), 1),
    (1, 3): ((0, 2), -1),
    (2, 3): ((0, 1), 1),
}


def hodge_star(p: Dict[Tuple[int, int], object]) -> Dict[Tuple[int, int], object]:
    """(*p)_ij = sign(i j k l) p_kl: the row space's coordinates turned into the kernel's."""
    return {key: p[other] * s for key, (other, s) in _HODGE.items()}


def AP_map(kappa: BinaryForm) -> Dict[Tuple[int, int], object]:
    """Pluecker coordinates of the pencil of cubics apolar to kappa.

    The pencil is the kernel of the catalecticant, so its coordinates are
    the Hodge dual of the catalecticant's 2 x 2 minors.
    """
    return hodge_star(catalecticant_minors(kappa))


# ---------------------------------------------------------------------------
# invariants
# ---------------------------------------------------------------------------


def sylvester_matrix(c1: BinaryForm, c2: BinaryForm) -> List[List[object]]:
    a, b = list(c1.coeffs), list(c2.coeffs)
    z = ZERO
    return [
        a + [z, z],
        b + [z, z],
        [z] + a + [z],
        [z] + b + [z],
        [z, z] + a,
        [z, z] + b,
    ]


def sylvester_resultant(c1: BinaryForm, c2: BinaryForm):
    """Determinant of the displayed 6 x 6 Sylvester matrix on weighted coefficients."""
    if c1.degree != 3 or c2.degree != 3:
        raise ValueError("sylvester_resultant takes two binary cubics")
    return generic_det(sylvester_matrix(c1, c2), zero=ZERO)


def resultant(c1: BinaryForm, c2: BinaryForm):
    """Res(c1, c2) of two cubics as polynomials: the displayed determinant on plain coefficients, negated."""
    return -sylvester_resultant(BinaryForm(c1.plain()), BinaryForm(c2.plain()))


def j_invariant(kappa: BinaryForm):
    """det of the 3 x 3 Hankel matrix of a quartic (classical J)."""
    k = kappa.coeffs
    return generic_det([[k[0], k[1], k[2]], [k[1], k[2], k[3]], [k[2], k[3], k[4]]], zero=ZERO)


def i_invariant(kappa: BinaryForm):
    """k0 k4 - 4 k1 k3 + 3 k2^2."""
    k = kappa.coeffs
    return k[0] * k[4] - k[1] * k[3] * 4 + k[2] * k[2] * 3


# ---------------------------------------------------------------------------
# symbolic certificates
# ---------------------------------------------------------------------------

ALPHA = ("al0", "al1", "al2", "al3")
BETA = ("be0", "be1", "be2", "be3")
KAPPA = ("k0", "k1", "k2", "k3", "k4")
P_NAMES = tuple(f"p{i}{j}" for i, j in PAIRS)


def symbolic_cubics() -> Tuple[BinaryForm, BinaryForm]:
    ring = ALPHA + BETA
    gens = variables(ring)
    return BinaryForm(tuple(gens[:4])), BinaryForm(tuple(gens[4:]))


def symbolic_quartic() -> BinaryForm:
    return BinaryForm(tuple(variables(KAPPA)))


@dataclass(frozen=True)
class InversionCertificate:
    """AP(ap(c1^c2)) = resultant_constant * Syl(c1, c2) * (c1^c2) and
    ap(AP(k)) = j_constant * J(k) * k."""

    resultant_constant: GaussianRational
    j_constant: GaussianRational

    @property
    def holds(self) -> bool:
        return bool(self.resultant_constant) and bool(self.j_constant)


class IdentityFailure(ArithmeticError):
    pass


def _common_multiplier(lhs: Sequence[MultiPoly], rhs: Sequence[MultiPoly]) -> MultiPoly:
    """The polynomial m with lhs[k] = m * rhs[k] for all k (exact division)."""
    mult = None
    for x, y in zip(lhs, rhs):
        if y.is_zero():
            if not x.is_zero():
                raise IdentityFailure("left side nonzero where right side vanishes")
            continue
        q = x.exact_divide(y)
        if mult is None:
            mult = q
        elif q != mult:
            raise IdentityFailure("multipliers differ between components")
    if mult is None:
        raise IdentityFailure("right side is identically zero")
    return mult


@lru_cache(maxsize=None)
def inversion_identities() -> InversionCertificate:
    """Check both composites symbolically and record the two constants."""
    c1, c2 = symbolic_cubics()
    p = pluecker(c1, c2)
    back = AP_map(ap_map(c1, c2))
    mult_c = _common_multiplier([back[k] for k in PAIRS], [p[k] for k in PAIRS])
    res_const = proportionality(mult_c, sylvester_resultant(c1, c2))
    if res_const is None:
        raise IdentityFailure("AP(ap) multiplier is not proportional to the Sylvester resultant")

    kappa = symbolic_quartic()
    again = ap_from_pluecker(AP_map(kappa))
    mult_j = _common_multiplier(list(again.coeffs), list(kappa.coeffs))
    j_const = proportionality(mult_j, j_invariant(kappa))
    if j_const is None:
        raise IdentityFailure("ap(AP) multiplier is not proportional to J")
    return InversionCertificate(res_const, j_const)


@lru_cache(maxsize=None)
def resultant_in_pluecker() -> MultiPoly:
    """A cubic polynomial in p_ij equal to the Sylvester resultant.

    Found by linear algebra over the cubic monomials in the six
    coordinates; because of the Pluecker relation the answer is only
    unique modulo it, and the returned representative is the solver's.
    """
    c1, c2 = symbolic_cubics()
    p = pluecker(c1, c2)
    coords = [p[k] for k in PAIRS]
    monos = list(combinations_with_replacement(range(6), 3))
    basis = []
    for m in monos:
        term = coords[m[0]] * coords[m[1]] * coords[m[2]]
        basis.append(term)
    sol = express_in_span(sylvester_resultant(c1, c2), basis)
    if sol is None:
        raise IdentityFailure("the resultant is not a cubic in the Pluecker coordinates")
    gens = variables(P_NAMES)
    total = MultiPoly.constant(0, P_NAMES)
    for m, c in zip(monos, sol):
        if c:
            total = total + gens[m[0]] * gens[m[1]] * gens[m[2]] * c
    return total


def resultant_from_pluecker(p: Dict[Tuple[int, int], object]):
    """Evaluate ``resultant_in_pluecker`` at given coordinates."""
    return resultant_in_pluecker().evaluate([_coerce(p[k]) for k in PAIRS])


__all__ = [
    "BinaryForm",
    "form",
    "transvectant",
    "TRANSVECTANT_NORMALIZATIONS",
    "jacobian",
    "discriminant_pairing",
    "contract",
    "pluecker",
    "pluecker_relation",
    "apolarity_matrix",
    "ap_from_pluecker",
    "ap_map",
    "catalecticant",
    "catalecticant_minors",
    "hodge_star",
    "AP_map",
    "sylvester_matrix",
    "sylvester_resultant",
    "resultant",
    "j_invariant",
    "i_invariant",
    "symbolic_cubics",
    "symbolic_quartic",
    "InversionCertificate",
    "IdentityFailure",
    "inversion_identities",
    "resultant_in_pluecker",
    "resultant_from_pluecker",
    "PAIRS",
]
