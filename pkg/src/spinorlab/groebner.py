"""A small Buchberger engine over Q(i).

Used to decide whether a homogeneous system has only the trivial zero:
that happens exactly when, for every variable, the leading-term ideal of a
Groebner basis contains a pure power of that variable.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Sequence, Tuple

from .exact import ONE, GaussianRational, MultiPoly

Exp = Tuple[int, ...]
Poly = Dict[Exp, GaussianRational]

DEFAULT_BUDGET = 50_000


def _key(order: str):
    if order == "grevlex":
        return lambda e: (sum(e), tuple(-x for x in reversed(e)))
    if order == "grlex":
        return lambda e: (sum(e), e)
    if order == "lex":
        return lambda e: e
    raise ValueError(f"unknown monomial order {order!r}")


class BudgetExhausted(RuntimeError):
    """The S-pair budget ran out before the basis was complete."""

    def __init__(self, stats: dict):
        super().__init__(f"Groebner budget exhausted after {stats['pairs_processed']} S-pairs")
        self.stats = stats


@dataclass
class Ideal:
    variables: Tuple[str, ...]
    generators: List[MultiPoly]

    @classmethod
    def of(cls, polys: Sequence[MultiPoly], variables: Sequence[str] | None = None) -> "Ideal":
        polys = [p for p in polys if p.terms]
        if variables is None:
            names: Tuple[str, ...] = ()
            for p in polys:
                for v in p.variables:
                    if v not in names:
                        names += (v,)
            variables = names
        variables = tuple(variables)
        return cls(variables, [p.with_variables(variables) for p in polys])

    @property
    def homogeneous(self) -> bool:
        return all(p.is_homogeneous() for p in self.generators)


@dataclass
class GroebnerBasis:
    order: str
    variables: Tuple[str, ...]
    polys: List[MultiPoly]
    stats: dict = field(default_factory=dict)

    def leading_exponents(self) -> List[Exp]:
        key = _key(self.order)
        return [max(p.terms, key=key) for p in self.polys]

    def normal_form(self, p: MultiPoly) -> MultiPoly:
        key = _key(self.order)
        basis = [(max(g.terms, key=key), g.terms) for g in self.polys]
        r = _reduce(dict(p.with_variables(self.variables).terms), basis, key)
        return MultiPoly(self.variables, r)

    def contains(self, p: MultiPoly) -> bool:
        return not self.normal_form(p).terms


def _divides(a: Exp, b: Exp) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _lcm(a: Exp, b: Exp) -> Exp:
    return tuple(max(x, y) for x, y in zip(a, b))


def _monic(p: Poly, key) -> Poly:
    lead = max(p, key=key)
    c = p[lead]
    if c == ONE:
        return p
    inv = c.inverse()
    return {e: v * inv for e, v in p.items()}


def _reduce(p: Poly, basis: List[Tuple[Exp, Poly]], key) -> Poly:
    """Full reduction of p modulo monic polynomials with given leading exponents."""
    rem: Poly = {}
    p = dict(p)
    while p:
        lead = max(p, key=key)
        c = p[lead]
        for g_lead, g in basis:
            if _divides(g_lead, lead):
                shift = tuple(x - y for x, y in zip(lead, g_lead))
                for e, v in g.items():
                    t = tuple(x + y for x, y in zip(e, shift))
                    nv = p.get(t)
                    nv = -(v * c) if nv is None else nv - v * c
                    if nv:
                        p[t] = nv
                    else:
                        p.pop(t, None)
                break
        else:
            rem[lead] = c
            del p[lead]
    return rem


def _spoly(f: Poly, fl: Exp, g: Poly, gl: Exp) -> Poly:
    lcm = _lcm(fl, gl)
    sf = tuple(x - y for x, y in zip(lcm, fl))
    sg = tuple(x - y for x, y in zip(lcm, gl))
    out: Poly = {}
    for e, v in f.items():
        out[tuple(x + y for x, y in zip(e, sf))] = v
    for e, v in g.items():
        t = tuple(x + y for x, y in zip(e, sg))
        nv = out.get(t)
        nv = -v if nv is None else nv - v
        if nv:
            out[t] = nv
        else:
            out.pop(t, None)
    return out


def buchberger(ideal: Ideal, order: str = "grevlex", budget: int = DEFAULT_BUDGET) -> GroebnerBasis:
    """Reduced Groebner basis; raises :class:`BudgetExhausted` past ``budget`` S-pairs."""
    if not ideal.generators:
        raise ValueError("an ideal needs at least one nonzero generator")
    key = _key(order)
    G: List[Tuple[Exp, Poly]] = []
    stats = {"pairs_processed": 0, "pairs_skipped": 0, "zero_reductions": 0, "max_basis_size": 0}

    def add(poly: Poly):
        poly = _monic(poly, key)
        lead = max(poly, key=key)
        idx = len(G)
        G.append((lead, poly))
        for j in range(idx):
            pairs.append((j, idx))
        stats["max_basis_size"] = max(stats["max_basis_size"], len(G))

    pairs: List[Tuple[int, int]] = []
    for p in ideal.generators:
        r = _reduce(dict(p.terms), G, key)
        if r:
            add(r)
    while pairs:
        # normal selection strategy: smallest lcm first
        pairs.sort(key=lambda ij: key(_lcm(G[ij[0]][0], G[ij[1]][0])), reverse=True)
        i, j = pairs.pop()
        fl, f = G[i]
        gl, g = G[j]
        lcm = _lcm(fl, gl)
        if all(not (x and y) for x, y in zip(fl, gl)):
            stats["pairs_skipped"] += 1  # coprime leading monomials
            continue
        if any(
            k not in (i, j)
            and _divides(G[k][0], lcm)
            and (min(i, k), max(i, k)) not in pairs
            and (min(j, k), max(j, k)) not in pairs
            for k in range(len(G))
        ):
            stats["pairs_skipped"] += 1  # chain criterion
            continue
        stats["pairs_processed"] += 1
        if stats["pairs_processed"] > budget:
            stats["basis_size"] = len(G)
            raise BudgetExhausted(dict(stats))
        r = _reduce(_spoly(f, fl, g, gl), G, key)
        if r:
            add(r)
        else:
            stats["zero_reductions"] += 1
    # minimalize and inter-reduce
    leads = [lead for lead, _ in G]
    keep = []
    for k, (lead, poly) in enumerate(G):
        redundant = any(
            m != k and _divides(leads[m], lead) and (leads[m] != lead or m < k) for m in range(len(G))
        )
        if not redundant:
            keep.append((lead, poly))
    reduced = []
    for k, (lead, poly) in enumerate(keep):
        others = [q for m, q in enumerate(keep) if m != k]
        tail = {e: v for e, v in poly.items() if e != lead}
        tail = _reduce(tail, others, key)
        tail[lead] = ONE
        reduced.append((lead, tail))
    reduced.sort(key=lambda lp: key(lp[0]), reverse=True)
    stats["basis_size"] = len(reduced)
    return GroebnerBasis(order, ideal.variables, [MultiPoly(ideal.variables, p) for _, p in reduced], stats)


def has_pure_powers(gb: GroebnerBasis) -> List[bool]:
    """For each variable, whether some leading monomial is a pure power of it."""
    n = len(gb.variables)
    found = [False] * n
    for lead in gb.leading_exponents():
        support = [k for k, x in enumerate(lead) if x]
        if len(support) == 1:
            found[support[0]] = True
    return found


def only_trivial_zero(ideal: Ideal, order: str = "grevlex", budget: int = DEFAULT_BUDGET) -> bool:
    """True iff the homogeneous ideal has no nonzero common zero over C."""
    if not ideal.homogeneous:
        raise ValueError("only_trivial_zero expects homogeneous generators")
    if not ideal.variables:
        return True
    if not ideal.generators:
        return False
    gb = buchberger(ideal, order, budget)
    return all(has_pure_powers(gb))
