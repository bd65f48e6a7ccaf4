"""Loader for the combinatorial data file (hyperplanes, Hudson polynomials, blocks).

The file ``data/printed_tables.json`` stores the tables as printed, plus an explicit
list of corrections.  Consumers should go through the accessors below so the
corrections are always applied.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from typing import Dict, List, Tuple

from .exact import GaussianRational, MultiPoly, parse_poly

A_VARS: Tuple[str, ...] = ("a1", "a2", "a3", "a4")
HUDSON_NAMES: Tuple[str, ...] = ("A", "B", "C", "D", "E")


@lru_cache(maxsize=None)
def raw() -> dict:
    with resources.files("spinorlab.data").joinpath("printed_tables.json").open("r", encoding="utf-8") as fh:
        return json.load(fh)


def data_version() -> str:
    return raw()["version"]


def hyperplane_text(index: int, corrected: bool = True) -> str:
    d = raw()
    key = str(index)
    if corrected and key in d["hyperplane_corrections"]:
        return d["hyperplane_corrections"][key]
    return d["hyperplanes_printed"][key]


@dataclass(frozen=True)
class HyperplaneForm:
    """A linear form sum c_k a_k, normalized so its first nonzero coefficient is 1."""

    index: int
    coeffs: Tuple[GaussianRational, ...]

    def poly(self) -> MultiPoly:
        return MultiPoly(A_VARS, {tuple(1 if j == k else 0 for j in range(4)): c for k, c in enumerate(self.coeffs) if c})

    def __call__(self, point) -> GaussianRational:
        total = GaussianRational(0)
        for c, x in zip(self.coeffs, point):
            if c:
                total = total + c * x
        return total


def _linear_coeffs(p: MultiPoly) -> Tuple[GaussianRational, ...]:
    p = p.with_variables(A_VARS)
    if not p.is_homogeneous() or p.degree() != 1:
        raise ValueError(f"{p} is not a linear form")
    return tuple(p.terms.get(tuple(1 if j == k else 0 for j in range(4)), GaussianRational(0)) for k in range(4))


def normalize(coeffs) -> Tuple[GaussianRational, ...]:
    lead = next(c for c in coeffs if c)
    inv = lead.inverse()
    return tuple(c * inv for c in coeffs)


@lru_cache(maxsize=None)
def hyperplanes(corrected: bool = True) -> Tuple[HyperplaneForm, ...]:
    out = []
    for k in range(1, 61):
        p = parse_poly(hyperplane_text(k, corrected), A_VARS)
        out.append(HyperplaneForm(k, normalize(_linear_coeffs(p))))
    return tuple(out)


@lru_cache(maxsize=None)
def hudson_polynomials() -> Dict[str, MultiPoly]:
    """The five degree-12 polynomials A..E as printed."""
    return {n: parse_poly(raw()["hudson"][n], A_VARS) for n in HUDSON_NAMES}


def blocks() -> Dict[int, Tuple[int, ...]]:
    return {int(k): tuple(v) for k, v in raw()["blocks"].items()}


@lru_cache(maxsize=None)
def block_expressions() -> Dict[int, Tuple[GaussianRational, ...]]:
    """Coefficient vectors of D_k on (A, B, C, D, E)."""
    out = {}
    for k, text in raw()["block_expressions"].items():
        p = parse_poly(text, HUDSON_NAMES)
        coeffs = []
        for j in range(5):
            coeffs.append(p.terms.get(tuple(1 if m == j else 0 for m in range(5)), GaussianRational(0)))
        out[int(k)] = tuple(coeffs)
    return out


def pentads() -> List[Tuple[int, ...]]:
    return [tuple(p) for p in raw()["pentads"]]


def tetrahedra() -> List[Tuple[Tuple[int, ...], Tuple[int, ...]]]:
    return [(tuple(t["hyperplanes"]), tuple(t["blocks"])) for t in raw()["tetrahedra"]]


def quintets() -> List[Tuple[Tuple[int, ...], ...]]:
    return [tuple(tuple(tr) for tr in q) for q in raw()["quintets"]]


def product_of(indices, corrected: bool = True) -> MultiPoly:
    """Product of the (normalized) hyperplane forms with the given indices."""
    forms = hyperplanes(corrected)
    out = MultiPoly.constant(1, A_VARS)
    for j in indices:
        out = out * forms[j - 1].poly()
    return out
