"""Half-spin representations of Spin(10) as the exterior algebra of a 5-space.

V10 = E + F with E = <e1..e5>, F = <f1..f5> and B(e_i, f_j) = delta_ij.
Vectors of E act on the exterior algebra by wedge product, vectors of F by
contraction, so that v.(w.d) + w.(v.d) = B(v, w) d.  The even part is
Delta_+ and the odd part Delta_-.

Subsets of {1..5} are encoded as bitmasks (bit k-1 for e_k).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, Sequence

from .exact import ONE, ZERO, ExactMatrix, GaussianRational, MultiPoly

N = 5
TOP = (1 << N) - 1

#: "calibrated" multiplies the top coefficient of e_I ^ e_J by (-1)^(|I|/2),
#: I the even subset; "plain" uses the top coefficient as it is.
PAIRING_SIGNS = ("calibrated", "plain")
DEFAULT_SIGN = "calibrated"


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def mask_of(indices: Iterable[int]) -> int:
    m = 0
    for i in indices:
        m |= 1 << (i - 1)
    return m


def indices_of(mask: int) -> List[int]:
    return [k + 1 for k in range(N) if mask >> k & 1]


def _lower_count(mask: int, i: int) -> int:
    """Number of elements of the subset strictly below i."""
    return popcount(mask & ((1 << (i - 1)) - 1))


def wedge_sign(m1: int, m2: int) -> int:
    """Sign with e_{m1} ^ e_{m2} = sign * e_{m1|m2}; 0 if they overlap."""
    if m1 & m2:
        return 0
    s = 0
    for i in indices_of(m2):
        s += popcount(m1 >> i)  # elements of m1 above i jump over e_i
    return -1 if s % 2 else 1


def _is_zero(c) -> bool:
    if isinstance(c, MultiPoly):
        return not c.terms
    return not c


class Spinor:
    """Element of the exterior algebra on E with homogeneous parity."""

    __slots__ = ("terms", "parity")

    def __init__(self, terms: Dict[int, object] | None = None, parity: int | None = None):
        clean = {}
        for m, c in (terms or {}).items():
            if not isinstance(c, MultiPoly):
                c = GaussianRational.coerce(c)
            if not _is_zero(c):
                clean[m] = c
        pars = {popcount(m) % 2 for m in clean}
        if len(pars) > 1:
            raise ValueError("spinor mixes even and odd parts")
        if parity is None:
            parity = pars.pop() if pars else 0
        elif pars and pars.pop() != parity:
            raise ValueError("terms do not match declared parity")
        self.terms = clean
        self.parity = parity

    # algebra --------------------------------------------------------------
    def __add__(self, other: "Spinor") -> "Spinor":
        if not other.terms:
            return self
        if not self.terms:
            return other
        if other.parity != self.parity:
            raise ValueError("cannot add spinors of different parity")
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out[m] + c if m in out else c
        return Spinor(out, self.parity)

    def __neg__(self):
        return Spinor({m: -c for m, c in self.terms.items()}, self.parity)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, scalar) -> "Spinor":
        return Spinor({m: c * scalar for m, c in self.terms.items()}, self.parity)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, Spinor):
            return NotImplemented
        d = self - other if (self.parity == other.parity or not self.terms or not other.terms) else None
        return d is not None and not d.terms

    def __bool__(self):
        return bool(self.terms)

    def coefficient(self, mask: int):
        return self.terms.get(mask, ZERO)

    def coefficient_vector(self) -> List[object]:
        """Coefficients on the 16 basis subsets of this parity."""
        return [self.terms.get(m, ZERO) for m in basis_masks(self.parity)]

    def substitute(self, mapping) -> "Spinor":
        out = {}
        for m, c in self.terms.items():
            out[m] = c.substitute(mapping) if isinstance(c, MultiPoly) else c
        return Spinor(out, self.parity)

    def to_records(self) -> List[dict]:
        recs = []
        for m in sorted(self.terms, key=lambda m: (popcount(m), indices_of(m))):
            c = self.terms[m]
            if isinstance(c, MultiPoly):
                raise TypeError("only numeric spinors serialize to records")
            recs.append({"subset": indices_of(m), **c.to_record()})
        return recs

    @classmethod
    def from_records(cls, records: Sequence[dict]) -> "Spinor":
        out: Dict[int, GaussianRational] = {}
        for r in records:
            subset = r.get("subset", r.get("set"))
            base = e(*subset)
            c = GaussianRational.coerce(_frac(r.get("re", "0"))) + GaussianRational(0, _frac(r.get("im", "0")))
            sp = base * c
            for m, v in sp.terms.items():
                out[m] = out[m] + v if m in out else v
        return cls(out)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for m in sorted(self.terms, key=lambda m: (popcount(m), indices_of(m))):
            name = "e" + "".join(map(str, indices_of(m))) if m else "1"
            parts.append(f"({self.terms[m]})*{name}")
        return " + ".join(parts)

    __repr__ = __str__


def _frac(s):
    return Fraction(s)


def basis_masks(parity: int) -> List[int]:
    """The 16 subsets of the given parity, ordered by size then lexicographically."""
    ms = [m for m in range(1 << N) if popcount(m) % 2 == parity]
    return sorted(ms, key=lambda m: (popcount(m), indices_of(m)))


def e(*indices: int) -> Spinor:
    """Basis spinor e_{i1} ^ e_{i2} ^ ...  in the given index order (sign included)."""
    if len(set(indices)) != len(indices):
        return Spinor({}, len(indices) % 2)
    sign = 1
    idx = list(indices)
    for a in range(len(idx)):
        for b in range(a + 1, len(idx)):
            if idx[a] > idx[b]:
                sign = -sign
    return Spinor({mask_of(idx): sign}, len(idx) % 2)


def parse_spinor_word(word: str) -> Spinor:
    """'e53' -> e5 ^ e3, '1' -> unit spinor, 'e12345' -> top form."""
    word = word.strip()
    if word == "1":
        return e()
    if not word.startswith("e"):
        raise ValueError(f"bad spinor word {word!r}")
    return e(*[int(ch) for ch in word[1:]])


# ---------------------------------------------------------------------------
# V10 and the Clifford action
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Vector10:
    """Coefficients on e1..e5 (first five) and f1..f5 (last five)."""

    coeffs: tuple

    def __post_init__(self):
        if len(self.coeffs) != 2 * N:
            raise ValueError("a vector of V10 has ten coefficients")

    @classmethod
    def basis(cls, k: int) -> "Vector10":
        return cls(tuple(ONE if j == k else ZERO for j in range(2 * N)))

    @classmethod
    def from_ef(cls, e_part: Sequence[object], f_part: Sequence[object]) -> "Vector10":
        return cls(tuple(e_part) + tuple(f_part))

    def e_part(self):
        return self.coeffs[:N]

    def f_part(self):
        return self.coeffs[N:]

    def __add__(self, other):
        return Vector10(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other):
        return Vector10(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __mul__(self, scalar):
        return Vector10(tuple(c * scalar for c in self.coeffs))

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return all(_is_zero(c) for c in self.coeffs)

    def substitute(self, mapping) -> "Vector10":
        return Vector10(tuple(c.substitute(mapping) if isinstance(c, MultiPoly) else c for c in self.coeffs))

    def label(self, k: int) -> str:
        return f"e{k + 1}" if k < N else f"f{k - N + 1}"


def bilinear(v: Vector10, w: Vector10):
    """B(v, w) = sum_i v_{e_i} w_{f_i} + v_{f_i} w_{e_i}."""
    total = ZERO
    for i in range(N):
        total = total + v.coeffs[i] * w.coeffs[N + i] + v.coeffs[N + i] * w.coeffs[i]
    return total


def quadratic_value(v: Vector10):
    """q(v) = B(v, v)/2, so that v.(v.d) = q(v) d."""
    total = ZERO
    for i in range(N):
        total = total + v.coeffs[i] * v.coeffs[N + i]
    return total


def _wedge_e(i: int, d: Spinor) -> Spinor:
    bit = 1 << (i - 1)
    out = {}
    for m, c in d.terms.items():
        if not m & bit:
            out[m | bit] = -c if _lower_count(m, i) % 2 else c
    return Spinor(out, 1 - d.parity)


def _contract_f(i: int, d: Spinor) -> Spinor:
    bit = 1 << (i - 1)
    out = {}
    for m, c in d.terms.items():
        if m & bit:
            out[m ^ bit] = -c if _lower_count(m, i) % 2 else c
    return Spinor(out, 1 - d.parity)


def basis_act(k: int, d: Spinor) -> Spinor:
    """Action of the k-th basis vector (0..4 -> e1..e5, 5..9 -> f1..f5)."""
    return _wedge_e(k + 1, d) if k < N else _contract_f(k - N + 1, d)


def clifford_act(v: Vector10, d: Spinor) -> Spinor:
    """Clifford multiplication v.d (opposite parity)."""
    out = Spinor({}, 1 - d.parity)
    for k, c in enumerate(v.coeffs):
        if not _is_zero(c):
            out = out + basis_act(k, d) * c
    return out


# ---------------------------------------------------------------------------
# pairing, gamma, purity
# ---------------------------------------------------------------------------


def _sigma(even_size: int, convention: str) -> int:
    if convention == "plain":
        return 1
    if convention != "calibrated":
        raise ValueError(f"unknown pairing convention {convention!r}")
    return -1 if (even_size // 2) % 2 else 1


def pair(x: Spinor, y: Spinor, convention: str = DEFAULT_SIGN):
    """Duality Delta_+ x Delta_- -> scalars (argument order irrelevant).

    <e_I, e_J> = sigma(|I|) * lambda_{I,J} where e_I ^ e_J = lambda e_12345 and
    I is the even subset.
    """
    if x.terms and y.terms and x.parity == y.parity:
        raise ValueError("pairing needs one even and one odd spinor")
    if x.parity == 1:
        x, y = y, x
    total = ZERO
    for m, c in x.terms.items():
        comp = TOP ^ m
        d = y.terms.get(comp)
        if d is None:
            continue
        s = wedge_sign(m, comp) * _sigma(popcount(m), convention)
        total = total + (c * d if s > 0 else -(c * d))
    return total


def gamma(d1: Spinor, d2: Spinor, convention: str = DEFAULT_SIGN) -> Vector10:
    """gamma(d, d') = sum_i <e_i.d, d'> f_i + <f_i.d, d'> e_i."""
    if d1.terms and d2.terms and d1.parity != d2.parity:
        raise ValueError("gamma needs two spinors of the same parity")
    coeffs = [ZERO] * (2 * N)
    for i in range(N):
        coeffs[N + i] = pair(_wedge_e(i + 1, d1), d2, convention)
        coeffs[i] = pair(_contract_f(i + 1, d1), d2, convention)
    return Vector10(tuple(coeffs))


def is_pure(d: Spinor) -> bool:
    if not d.terms:
        raise ValueError("the zero spinor is not a point of the spinor variety")
    return gamma(d, d).is_zero()


def _numeric_matrix(rows: List[List[object]]) -> ExactMatrix:
    return ExactMatrix([[GaussianRational.coerce(x) for x in r] for r in rows])


def annihilator(d: Spinor) -> List[Vector10]:
    """Basis of U_d = {v in V10 : v.d = 0}; dimension 5 for pure d."""
    if not is_pure(d):
        raise ValueError("annihilator is only defined for pure spinors")
    images = [basis_act(k, d).coefficient_vector() for k in range(2 * N)]
    mat = _numeric_matrix([list(r) for r in zip(*images)])  # 16 x 10
    return [Vector10(tuple(v)) for v in mat.kernel()]


def spinor_rank(spinors: Sequence[Spinor]) -> int:
    spinors = [s for s in spinors if s.terms]
    if not spinors:
        return 0
    return _numeric_matrix([s.coefficient_vector() for s in spinors]).rank()


def clifford_span_dim(K: Sequence[Spinor]) -> int:
    """Dimension of V10.K inside the opposite half-spin space."""
    vecs = [basis_act(k, s).coefficient_vector() for s in K for k in range(2 * N)]
    return _numeric_matrix(vecs).rank()


def qr_value(d1: Spinor, d2: Spinor):
    """The spinor quadratic complex evaluated on d1 ^ d2.

    sum over dual bases (v_i, w_i) of V10 of
    <v_i d1, d2><w_i d1, d2> - <v_i d1, d1><w_i d2, d2>.
    """
    total = ZERO
    for k in range(2 * N):
        dual = k + N if k < N else k - N
        vd1 = basis_act(k, d1)
        wd1 = basis_act(dual, d1)
        wd2 = basis_act(dual, d2)
        total = total + pair(vd1, d2) * pair(wd1, d2) - pair(vd1, d1) * pair(wd2, d2)
    return total


def all_basis_spinors() -> List[Spinor]:
    return [Spinor({m: ONE}) for m in range(1 << N)]
