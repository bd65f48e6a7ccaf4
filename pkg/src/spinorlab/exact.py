"""Exact scalars, sparse polynomials and linear algebra over Q(i).

Everything here is exact.  Scalars are Gaussian rationals built on
``fractions.Fraction``; polynomials are sparse dictionaries from exponent
tuples to scalars; matrices are lists of rows.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import reduce
from typing import Callable, Dict, Iterable, List, Mapping, Sequence, Tuple

__all__ = [
    "GaussianRational",
    "gq",
    "I",
    "ZERO",
    "ONE",
    "parse_gaussian",
    "DivisionError",
    "MultiPoly",
    "variables",
    "ExactMatrix",
    "NoSolution",
    "generic_det",
    "span_rank",
    "express_in_span",
]


class GaussianRational:
    """A number re + i*im with re, im rational."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = re if type(re) is Fraction else Fraction(re)
        self.im = im if type(im) is Fraction else Fraction(im)

    # construction helpers -------------------------------------------------
    @classmethod
    def coerce(cls, x) -> "GaussianRational":
        if type(x) is cls:
            return x
        if isinstance(x, (int, Fraction)):
            return cls(x)
        if isinstance(x, complex):
            raise TypeError("floating point complex numbers are not exact")
        if isinstance(x, str):
            return parse_gaussian(x)
        raise TypeError(f"cannot coerce {x!r} to GaussianRational")

    # arithmetic -----------------------------------------------------------
    def __add__(self, other):
        if type(other) is not GaussianRational:
            if isinstance(other, (int, Fraction)):
                return GaussianRational(self.re + other, self.im)
            return NotImplemented
        return GaussianRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __sub__(self, other):
        if type(other) is not GaussianRational:
            if isinstance(other, (int, Fraction)):
                return GaussianRational(self.re - other, self.im)
            return NotImplemented
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        if isinstance(other, (int, Fraction)):
            return GaussianRational(other - self.re, -self.im)
        return NotImplemented

    def __mul__(self, other):
        if type(other) is not GaussianRational:
            if isinstance(other, (int, Fraction)):
                return GaussianRational(self.re * other, self.im * other)
            return NotImplemented
        a, b, c, d = self.re, self.im, other.re, other.im
        if not b:
            if not d:
                return GaussianRational(a * c)
            return GaussianRational(a * c, a * d)
        if not d:
            return GaussianRational(a * c, b * c)
        return GaussianRational(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def norm(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def inverse(self) -> "GaussianRational":
        n = self.norm()
        if not n:
            raise ZeroDivisionError("inverse of zero Gaussian rational")
        return GaussianRational(self.re / n, -self.im / n)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                raise ZeroDivisionError("division by zero")
            return GaussianRational(self.re / other, self.im / other)
        if type(other) is not GaussianRational:
            return NotImplemented
        if not other.im:
            if not other.re:
                raise ZeroDivisionError("division by zero")
            return GaussianRational(self.re / other.re, self.im / other.re)
        return self * other.inverse()

    def __rtruediv__(self, other):
        return GaussianRational.coerce(other) * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # comparisons ----------------------------------------------------------
    def __eq__(self, other):
        if type(other) is GaussianRational:
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Fraction)):
            return not self.im and self.re == other
        return NotImplemented

    def __hash__(self):
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def is_real(self) -> bool:
        return not self.im

    # display --------------------------------------------------------------
    def __str__(self):
        if not self.im:
            return str(self.re)
        if not self.re:
            return _imag_str(self.im)
        sign = "+" if self.im > 0 else "-"
        return f"{self.re}{sign}{_imag_str(abs(self.im))}"

    def __repr__(self):
        return f"GaussianRational({self})"

    def to_record(self) -> Dict[str, str]:
        return {"re": str(self.re), "im": str(self.im)}


def _imag_str(x: Fraction) -> str:
    if x == 1:
        return "i"
    if x == -1:
        return "-i"
    return f"{x}i"


def gq(re=0, im=0) -> GaussianRational:
    """Shorthand constructor; accepts ints, Fractions or 'p/q' strings."""
    if isinstance(re, str):
        re = Fraction(re)
    if isinstance(im, str):
        im = Fraction(im)
    return GaussianRational(re, im)


ZERO = GaussianRational(0)
ONE = GaussianRational(1)
I = GaussianRational(0, 1)

_RAT = r"[+-]?\d+(?:/\d+)?"
_GAUSS_RE = re.compile(rf"^\s*(?:({_RAT})(?:([+-])(\d+(?:/\d+)?)?i)?|([+-]?(?:\d+(?:/\d+)?)?)i)\s*$")


def parse_gaussian(text: str) -> GaussianRational:
    """Parse ``p/q``, ``p/q+r/si``, ``-i`` or ``3/2i``.  Decimals are rejected."""
    m = _GAUSS_RE.match(text)
    if not m:
        raise ValueError(f"malformed exact number: {text!r}")
    real, sign, imag, pure = m.groups()
    if real is not None:
        re_part = Fraction(real)
        if sign is None:
            return GaussianRational(re_part)
        im_part = Fraction(imag) if imag else Fraction(1)
        return GaussianRational(re_part, im_part if sign == "+" else -im_part)
    if pure in ("", "+"):
        return I
    if pure == "-":
        return -I
    return GaussianRational(0, Fraction(pure))


# ---------------------------------------------------------------------------
# polynomials
# ---------------------------------------------------------------------------

Exponent = Tuple[int, ...]


class DivisionError(ArithmeticError):
    """Raised by exact division when the remainder is nonzero."""

    def __init__(self, remainder: "MultiPoly", quotient: "MultiPoly"):
        super().__init__(f"division is not exact; remainder has {len(remainder.terms)} terms")
        self.remainder = remainder
        self.quotient = quotient


def _grlex_key(exp: Exponent):
    return (sum(exp), exp)


def _grevlex_key(exp: Exponent):
    return (sum(exp), tuple(-e for e in reversed(exp)))


class MultiPoly:
    """Sparse polynomial in named variables with Gaussian rational coefficients.

    ``terms`` maps exponent tuples (aligned with ``variables``) to nonzero
    coefficients.  Instances are treated as immutable.
    """

    __slots__ = ("variables", "terms")

    def __init__(self, variables: Sequence[str], terms: Mapping[Exponent, object] | None = None):
        self.variables = tuple(variables)
        clean: Dict[Exponent, GaussianRational] = {}
        if terms:
            n = len(self.variables)
            for exp, c in terms.items():
                c = GaussianRational.coerce(c)
                if c:
                    if len(exp) != n:
                        raise ValueError("exponent length does not match variables")
                    clean[tuple(exp)] = c
        self.terms = clean

    @classmethod
    def _raw(cls, variables: Tuple[str, ...], terms: Dict[Exponent, GaussianRational]) -> "MultiPoly":
        p = object.__new__(cls)
        p.variables = variables
        p.terms = terms
        return p

    # constructors ---------------------------------------------------------
    @classmethod
    def constant(cls, c, variables: Sequence[str] = ()) -> "MultiPoly":
        variables = tuple(variables)
        c = GaussianRational.coerce(c)
        if not c:
            return cls._raw(variables, {})
        return cls._raw(variables, {(0,) * len(variables): c})

    @classmethod
    def var(cls, name: str, variables: Sequence[str] | None = None) -> "MultiPoly":
        variables = tuple(variables) if variables is not None else (name,)
        if name not in variables:
            variables = variables + (name,)
        k = variables.index(name)
        exp = tuple(1 if j == k else 0 for j in range(len(variables)))
        return cls._raw(variables, {exp: ONE})

    @classmethod
    def monomial(cls, variables: Sequence[str], exp: Exponent, c=1) -> "MultiPoly":
        return cls(variables, {tuple(exp): c})

    # variable alignment ---------------------------------------------------
    def with_variables(self, variables: Sequence[str]) -> "MultiPoly":
        """Re-express over a superset of variables (order as given)."""
        variables = tuple(variables)
        if variables == self.variables:
            return self
        pos = []
        for v in self.variables:
            try:
                pos.append(variables.index(v))
            except ValueError:
                if any(e[len(pos)] for e in self.terms):
                    raise ValueError(f"variable {v} is used and missing from target")
                pos.append(None)
        n = len(variables)
        out = {}
        for exp, c in self.terms.items():
            new = [0] * n
            for k, e in enumerate(exp):
                if e:
                    new[pos[k]] = e
            out[tuple(new)] = c
        return MultiPoly._raw(variables, out)

    def _align(self, other: "MultiPoly"):
        if self.variables == other.variables:
            return self, other
        merged = self.variables + tuple(v for v in other.variables if v not in self.variables)
        return self.with_variables(merged), other.with_variables(merged)

    def _lift(self, other):
        if isinstance(other, MultiPoly):
            return self._align(other)
        c = GaussianRational.coerce(other)
        return self, MultiPoly.constant(c, self.variables)

    # ring operations ------------------------------------------------------
    def __add__(self, other):
        try:
            a, b = self._lift(other)
        except TypeError:
            return NotImplemented
        out = dict(a.terms)
        for exp, c in b.terms.items():
            s = out.get(exp)
            if s is None:
                out[exp] = c
            else:
                s = s + c
                if s:
                    out[exp] = s
                else:
                    del out[exp]
        return MultiPoly._raw(a.variables, out)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly._raw(self.variables, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, MultiPoly):
            return self + (-other)
        try:
            return self + (-GaussianRational.coerce(other))
        except TypeError:
            return NotImplemented

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "MultiPoly":
        c = GaussianRational.coerce(c)
        if not c:
            return MultiPoly._raw(self.variables, {})
        if c == ONE:
            return self
        return MultiPoly._raw(self.variables, {e: v * c for e, v in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, MultiPoly):
            try:
                return self.scale(other)
            except TypeError:
                return NotImplemented
        a, b = self._align(other)
        if len(a.terms) < len(b.terms):
            a, b = b, a
        out: Dict[Exponent, GaussianRational] = {}
        bt = list(b.terms.items())
        get = out.get
        for ea, ca in a.terms.items():
            for eb, cb in bt:
                e = tuple(x + y for x, y in zip(ea, eb))
                prod = ca * cb
                s = get(e)
                out[e] = prod if s is None else s + prod
        return MultiPoly._raw(a.variables, {e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = MultiPoly.constant(1, self.variables)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __truediv__(self, other):
        c = GaussianRational.coerce(other)
        return self.scale(c.inverse())

    # predicates -----------------------------------------------------------
    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            return not (self - other).terms
        try:
            return not (self - GaussianRational.coerce(other)).terms
        except TypeError:
            return NotImplemented

    def __hash__(self):
        items = sorted((tuple(zip(self.variables, e)), hash(c)) for e, c in self.terms.items())
        return hash(tuple(items))

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def constant_value(self) -> GaussianRational:
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        return next(iter(self.terms.values()), ZERO)

    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def degree_in(self, name: str) -> int:
        if name not in self.variables:
            return 0
        k = self.variables.index(name)
        return max((e[k] for e in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self.terms}) <= 1

    def homogeneous_component(self, d: int) -> "MultiPoly":
        return MultiPoly._raw(self.variables, {e: c for e, c in self.terms.items() if sum(e) == d})

    def used_variables(self) -> Tuple[str, ...]:
        used = [False] * len(self.variables)
        for e in self.terms:
            for k, x in enumerate(e):
                if x:
                    used[k] = True
        return tuple(v for v, u in zip(self.variables, used) if u)

    def coefficient(self, monomial: Mapping[str, int]) -> GaussianRational:
        exp = tuple(monomial.get(v, 0) for v in self.variables)
        unknown = set(monomial) - set(self.variables)
        if any(monomial[v] for v in unknown):
            return ZERO
        return self.terms.get(exp, ZERO)

    # term orders ----------------------------------------------------------
    def sorted_terms(self, order: str = "grlex") -> List[Tuple[Exponent, GaussianRational]]:
        key = _grlex_key if order == "grlex" else _grevlex_key
        return sorted(self.terms.items(), key=lambda t: key(t[0]), reverse=True)

    def leading_term(self, order: str = "grlex") -> Tuple[Exponent, GaussianRational]:
        key = _grlex_key if order == "grlex" else _grevlex_key
        exp = max(self.terms, key=key)
        return exp, self.terms[exp]

    # calculus and substitution ---------------------------------------------
    def diff(self, name: str) -> "MultiPoly":
        if name not in self.variables:
            return MultiPoly._raw(self.variables, {})
        k = self.variables.index(name)
        out = {}
        for e, c in self.terms.items():
            if e[k]:
                ne = list(e)
                ne[k] -= 1
                out[tuple(ne)] = c * e[k]
        return MultiPoly._raw(self.variables, out)

    def evaluate(self, values) -> GaussianRational:
        """Evaluate at scalars given as a mapping name -> value or a sequence."""
        if isinstance(values, Mapping):
            vals = [GaussianRational.coerce(values[v]) if v in values else None for v in self.variables]
        else:
            vals = [GaussianRational.coerce(x) for x in values]
            vals += [None] * (len(self.variables) - len(vals))
        powers: List[Dict[int, GaussianRational]] = [dict() for _ in vals]
        total = ZERO
        for e, c in self.terms.items():
            term = c
            for k, x in enumerate(e):
                if x:
                    if vals[k] is None:
                        raise ValueError(f"no value for variable {self.variables[k]}")
                    cache = powers[k]
                    p = cache.get(x)
                    if p is None:
                        p = vals[k] ** x
                        cache[x] = p
                    term = term * p
            total = total + term
        return total

    def substitute(self, mapping: Mapping[str, object]) -> "MultiPoly":
        """Ring homomorphism sending the named variables to polynomials/scalars.

        Variables not in ``mapping`` are kept.
        """
        images = {}
        for name, val in mapping.items():
            if isinstance(val, MultiPoly):
                images[name] = val
            else:
                images[name] = MultiPoly.constant(val)
        keep = [v for v in self.variables if v not in images]
        target: Tuple[str, ...] = tuple(keep)
        for img in images.values():
            for v in img.variables:
                if v not in target:
                    target = target + (v,)
        images = {k: v.with_variables(target) for k, v in images.items()}
        for v in keep:
            images[v] = MultiPoly.var(v, target)
        cols = [images[v] for v in self.variables]
        caches: List[Dict[int, MultiPoly]] = [dict() for _ in cols]

        def power(k, x):
            cache = caches[k]
            p = cache.get(x)
            if p is None:
                if x == 1:
                    p = cols[k]
                else:
                    p = power(k, x // 2) * power(k, x - x // 2)
                cache[x] = p
            return p

        acc: Dict[Exponent, GaussianRational] = {}
        one_exp = (0,) * len(target)
        for e, c in self.terms.items():
            term = None
            for k, x in enumerate(e):
                if x:
                    term = power(k, x) if term is None else term * power(k, x)
            if term is None:
                items = [(one_exp, c)]
            else:
                items = [(te, tc * c) for te, tc in term.terms.items()]
            for te, tc in items:
                s = acc.get(te)
                acc[te] = tc if s is None else s + tc
        return MultiPoly._raw(target, {e: c for e, c in acc.items() if c})

    def linear_substitute(self, names: Sequence[str], matrix: Sequence[Sequence[object]]) -> "MultiPoly":
        """Substitute names[i] -> sum_j matrix[i][j] * names[j]."""
        images = {}
        for i, n in enumerate(names):
            images[n] = reduce(
                lambda acc, j: acc + MultiPoly.var(names[j], self.variables) * matrix[i][j],
                range(len(names)),
                MultiPoly.constant(0, self.variables),
            )
        return self.substitute(images)

    # division -------------------------------------------------------------
    def divmod(self, divisor: "MultiPoly", order: str = "grlex"):
        """Single-divisor division; returns (quotient, remainder)."""
        if not divisor.terms:
            raise ZeroDivisionError("division by the zero polynomial")
        p, d = self._align(divisor)
        key = _grlex_key if order == "grlex" else _grevlex_key
        lt_exp, lt_c = d.leading_term(order)
        inv = lt_c.inverse()
        rem = dict(p.terms)
        quo: Dict[Exponent, GaussianRational] = {}
        out_rem: Dict[Exponent, GaussianRational] = {}
        dterms = list(d.terms.items())
        while rem:
            e = max(rem, key=key)
            c = rem[e]
            if all(x >= y for x, y in zip(e, lt_exp)):
                qe = tuple(x - y for x, y in zip(e, lt_exp))
                qc = c * inv
                quo[qe] = quo.get(qe, ZERO) + qc
                for de, dc in dterms:
                    te = tuple(x + y for x, y in zip(qe, de))
                    v = rem.get(te, ZERO) - dc * qc
                    if v:
                        rem[te] = v
                    else:
                        rem.pop(te, None)
            else:
                out_rem[e] = c
                del rem[e]
        return MultiPoly._raw(p.variables, quo), MultiPoly._raw(p.variables, out_rem)

    def exact_divide(self, divisor) -> "MultiPoly":
        if not isinstance(divisor, MultiPoly):
            return self / divisor
        q, r = self.divmod(divisor)
        if r.terms:
            raise DivisionError(r, q)
        return q

    # conversions ----------------------------------------------------------
    def coefficient_vector(self, monomials: Sequence[Exponent]) -> List[GaussianRational]:
        return [self.terms.get(m, ZERO) for m in monomials]

    def map_coefficients(self, fn: Callable[[GaussianRational], GaussianRational]) -> "MultiPoly":
        return MultiPoly(self.variables, {e: fn(c) for e, c in self.terms.items()})

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            mono = "*".join(
                v if x == 1 else f"{v}^{x}" for v, x in zip(self.variables, e) if x
            )
            if not mono:
                parts.append(f"({c})")
            elif c == ONE:
                parts.append(mono)
            else:
                parts.append(f"({c})*{mono}")
        return " + ".join(parts)

    def __repr__(self):
        return f"MultiPoly({self})"


def variables(names: str | Sequence[str]) -> List[MultiPoly]:
    """``variables('x y z')`` -> list of generator polynomials sharing one ring."""
    if isinstance(names, str):
        names = names.replace(",", " ").split()
    names = tuple(names)
    return [MultiPoly.var(n, names) for n in names]


# ---------------------------------------------------------------------------
# linear algebra
# ---------------------------------------------------------------------------


class NoSolution(ArithmeticError):
    """Raised by :meth:`ExactMatrix.solve` for an inconsistent system."""


class ExactMatrix:
    """Dense matrix over Q(i)."""

    __slots__ = ("rows", "nrows", "ncols")

    def __init__(self, rows: Iterable[Iterable[object]]):
        self.rows = [[GaussianRational.coerce(x) for x in r] for r in rows]
        self.nrows = len(self.rows)
        self.ncols = len(self.rows[0]) if self.rows else 0
        if any(len(r) != self.ncols for r in self.rows):
            raise ValueError("ragged matrix")

    @classmethod
    def identity(cls, n: int) -> "ExactMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, r: int, c: int) -> "ExactMatrix":
        return cls([[0] * c for _ in range(r)])

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other):
        return isinstance(other, ExactMatrix) and self.rows == other.rows

    def __hash__(self):
        return hash(tuple(tuple(r) for r in self.rows))

    def __add__(self, other):
        return ExactMatrix([[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __sub__(self, other):
        return ExactMatrix([[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __mul__(self, other):
        if isinstance(other, ExactMatrix):
            if self.ncols != other.nrows:
                raise ValueError("shape mismatch")
            cols = list(zip(*other.rows))
            return ExactMatrix(
                [[reduce(lambda acc, ab: acc + ab[0] * ab[1], zip(r, c), ZERO) for c in cols] for r in self.rows]
            )
        c = GaussianRational.coerce(other)
        return ExactMatrix([[x * c for x in r] for r in self.rows])

    __rmul__ = __mul__

    def apply(self, vec: Sequence[object]) -> List[GaussianRational]:
        return [reduce(lambda acc, ab: acc + ab[0] * GaussianRational.coerce(ab[1]), zip(r, vec), ZERO) for r in self.rows]

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix(list(map(list, zip(*self.rows))))

    def conjugate_transpose(self) -> "ExactMatrix":
        return ExactMatrix([[x.conjugate() for x in col] for col in zip(*self.rows)])

    # elimination ----------------------------------------------------------
    def rref(self) -> Tuple[List[List[GaussianRational]], List[int]]:
        m = [list(r) for r in self.rows]
        pivots: List[int] = []
        r = 0
        for c in range(self.ncols):
            p = next((i for i in range(r, self.nrows) if m[i][c]), None)
            if p is None:
                continue
            m[r], m[p] = m[p], m[r]
            inv = m[r][c].inverse()
            m[r] = [x * inv for x in m[r]]
            for i in range(self.nrows):
                if i != r and m[i][c]:
                    f = m[i][c]
                    m[i] = [x - f * y for x, y in zip(m[i], m[r])]
            pivots.append(c)
            r += 1
            if r == self.nrows:
                break
        return m, pivots

    def rank(self) -> int:
        return len(self.rref()[1])

    def kernel(self) -> List[List[GaussianRational]]:
        """Basis of the right null space (column vectors as lists)."""
        m, pivots = self.rref()
        free = [c for c in range(self.ncols) if c not in pivots]
        basis = []
        for f in free:
            v = [ZERO] * self.ncols
            v[f] = ONE
            for row, pc in enumerate(pivots):
                v[pc] = -m[row][f]
            basis.append(v)
        return basis

    def det(self) -> GaussianRational:
        if self.nrows != self.ncols:
            raise ValueError("determinant of a non-square matrix")
        m = [list(r) for r in self.rows]
        n = self.nrows
        det = ONE
        for c in range(n):
            p = next((i for i in range(c, n) if m[i][c]), None)
            if p is None:
                return ZERO
            if p != c:
                m[c], m[p] = m[p], m[c]
                det = -det
            det = det * m[c][c]
            inv = m[c][c].inverse()
            for i in range(c + 1, n):
                if m[i][c]:
                    f = m[i][c] * inv
                    m[i] = [x - f * y for x, y in zip(m[i], m[c])]
        return det

    def inverse(self) -> "ExactMatrix":
        n = self.nrows
        aug = ExactMatrix([r + [ONE if i == j else ZERO for j in range(n)] for i, r in enumerate(self.rows)])
        m, pivots = aug.rref()
        if pivots[:n] != list(range(n)):
            raise ZeroDivisionError("matrix is singular")
        return ExactMatrix([r[n:] for r in m])

    def solve(self, rhs: Sequence[object]) -> List[GaussianRational]:
        """One solution of self * x = rhs; raises :class:`NoSolution`."""
        aug = ExactMatrix([r + [GaussianRational.coerce(b)] for r, b in zip(self.rows, rhs)])
        m, pivots = aug.rref()
        if self.ncols in pivots:
            raise NoSolution("inconsistent linear system")
        x = [ZERO] * self.ncols
        for row, pc in enumerate(pivots):
            x[pc] = m[row][self.ncols]
        return x

    def char_poly(self, var: str = "lambda") -> MultiPoly:
        """det(var*I - self) via the Faddeev-LeVerrier recursion."""
        n = self.nrows
        if n != self.ncols:
            raise ValueError("characteristic polynomial of a non-square matrix")
        coeffs = [ONE]
        mk = ExactMatrix.zeros(n, n)
        ident = ExactMatrix.identity(n)
        for k in range(1, n + 1):
            mk = self * mk + ident * coeffs[-1]
            am = self * mk
            tr = reduce(lambda acc, i: acc + am.rows[i][i], range(n), ZERO)
            coeffs.append(-tr / k)
        return MultiPoly((var,), {(n - k,): c for k, c in enumerate(coeffs)})

    def __repr__(self):
        return "ExactMatrix([" + ", ".join("[" + ", ".join(str(x) for x in r) + "]" for r in self.rows) + "])"


def generic_det(rows: Sequence[Sequence[object]], zero=None):
    """Determinant over any commutative ring by expansion along subsets.

    Works for polynomial entries; cost is O(n * 2^n) ring products.
    """
    n = len(rows)
    if n == 0:
        return zero if zero is not None else ONE
    # minors[mask] = det of the top |mask| rows restricted to columns in mask
    minors = {0: None}
    for i in range(n):
        new = {}
        for mask, val in minors.items():
            sign_count = 0
            for c in range(n):
                bit = 1 << c
                if mask & bit:
                    sign_count += 1
                    continue
                entry = rows[i][c]
                if _is_zero(entry):
                    continue
                # sign: number of used columns greater than c
                higher = bin(mask >> (c + 1)).count("1")
                term = entry if val is None else val * entry
                if higher % 2:
                    term = -term
                key = mask | bit
                prev = new.get(key)
                new[key] = term if prev is None else prev + term
        minors = new
        if not minors:
            break
    full = (1 << n) - 1
    if full in minors:
        return minors[full]
    return zero if zero is not None else ZERO


def _is_zero(x) -> bool:
    if isinstance(x, MultiPoly):
        return not x.terms
    return not x


def _monomial_index(polys: Sequence[MultiPoly]):
    variables_: Tuple[str, ...] = ()
    for p in polys:
        for v in p.variables:
            if v not in variables_:
                variables_ += (v,)
    aligned = [p.with_variables(variables_) for p in polys]
    monos = sorted({e for p in aligned for e in p.terms}, key=_grlex_key, reverse=True)
    return aligned, monos


def span_rank(polys: Sequence[MultiPoly]) -> int:
    """Dimension of the linear span of polynomials."""
    aligned, monos = _monomial_index(polys)
    if not monos:
        return 0
    return ExactMatrix([p.coefficient_vector(monos) for p in aligned]).rank()


def express_in_span(target: MultiPoly, basis: Sequence[MultiPoly]):
    """Coefficients c with target = sum c_k basis_k, or None if not in the span."""
    aligned, monos = _monomial_index(list(basis) + [target])
    if not monos:
        return [ZERO] * len(basis)
    cols = [p.coefficient_vector(monos) for p in aligned[:-1]]
    mat = ExactMatrix([list(r) for r in zip(*cols)]) if cols else ExactMatrix.zeros(len(monos), 0)
    try:
        return mat.solve(aligned[-1].coefficient_vector(monos))
    except NoSolution:
        return None


def proportionality(p: MultiPoly, q: MultiPoly):
    """Return c with p == c*q, or None.  Zero p gives c = 0."""
    if not q.terms:
        return ZERO if not p.terms else None
    p, q = p._align(q)
    e, c = next(iter(q.terms.items()))
    ratio = p.terms.get(e, ZERO) / c
    if p == q.scale(ratio):
        return ratio
    return None


def vectors_proportional(u: Sequence[object], v: Sequence[object]):
    """Scalar c with u = c*v for scalar/polynomial sequences, or None."""
    ratio = None
    for x, y in zip(u, v):
        if _is_zero(y):
            if not _is_zero(x):
                return None
            continue
        if ratio is None:
            if isinstance(y, MultiPoly) or isinstance(x, MultiPoly):
                xm = x if isinstance(x, MultiPoly) else MultiPoly.constant(x)
                ym = y if isinstance(y, MultiPoly) else MultiPoly.constant(y)
                ratio = proportionality(xm, ym)
                if ratio is None:
                    return None
            else:
                ratio = GaussianRational.coerce(x) / GaussianRational.coerce(y)
        elif not _is_zero(x - y * ratio):
            return None
    if ratio is None:
        return ONE if all(_is_zero(x) for x in u) else None
    return ratio


__all__ += ["proportionality", "vectors_proportional"]


# ---------------------------------------------------------------------------
# parsing polynomial text
# ---------------------------------------------------------------------------


def parse_poly(text: str, ring: Sequence[str]) -> MultiPoly:
    """Parse '1/4*a1^10*a3^2 - i*a2 + (i+1)*a4' into a polynomial over ``ring``.

    Accepts + - * / ^ (or **), parentheses, integers, the imaginary unit ``i``
    and the variable names of ``ring``.  Division is only by scalars.
    """
    import ast

    ring = tuple(ring)
    tree = ast.parse(text.replace("^", "**"), mode="eval")

    def ev(node):
        if isinstance(node, ast.Expression):
            return ev(node.body)
        if isinstance(node, ast.Constant) and isinstance(node.value, int):
            return MultiPoly.constant(node.value, ring)
        if isinstance(node, ast.Name):
            if node.id == "i" and "i" not in ring:
                return MultiPoly.constant(I, ring)
            if node.id not in ring:
                raise ValueError(f"unknown symbol {node.id!r} in {text!r}")
            return MultiPoly.var(node.id, ring)
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
            v = ev(node.operand)
            return -v if isinstance(node.op, ast.USub) else v
        if isinstance(node, ast.BinOp):
            left, right = ev(node.left), ev(node.right)
            if isinstance(node.op, ast.Add):
                return left + right
            if isinstance(node.op, ast.Sub):
                return left - right
            if isinstance(node.op, ast.Mult):
                return left * right
            if isinstance(node.op, ast.Div):
                if not right.is_constant():
                    raise ValueError("division by a non-constant polynomial")
                return left.scale(right.constant_value().inverse())
            if isinstance(node.op, ast.Pow):
                if not right.is_constant() or not right.constant_value().is_real():
                    raise ValueError("exponents must be integer constants")
                n = right.constant_value().re
                if n.denominator != 1 or n < 0:
                    raise ValueError("exponents must be non-negative integers")
                return left ** int(n)
        raise ValueError(f"unsupported syntax in {text!r}")

    return ev(tree)


__all__ += ["parse_poly"]
