"""The little Weyl group W_c (Shephard-Todd G31) acting on the Cartan subspace.

Group elements are 4x4 matrices over Q(i) in the basis p1..p4.  For
enumeration they are stored as pairs of int64 arrays (real and imaginary part)
scaled by ``SCALE`` so that all entries are integers; every product is checked
for exact divisibility, so the encoding never loses information.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from . import tables
from .exact import ExactMatrix, GaussianRational, MultiPoly, gq

SCALE = 2  # entries of every element of W_c lie in (1/2) Z[i]
DEFAULT_GROUP_CAP = 100_000

h = Fraction(1, 2)


def _m(rows) -> ExactMatrix:
    return ExactMatrix([[GaussianRational.coerce(x) for x in r] for r in rows])


def _half(rows) -> ExactMatrix:
    return ExactMatrix([[GaussianRational.coerce(x) * GaussianRational(h) for x in r] for r in rows])


I_ = gq(0, 1)


def printed_generators() -> Tuple[ExactMatrix, ...]:
    """s1..s5 exactly as tabulated (with the two entry fixes noted inline).

    The table lists the image of p_j along row j; :func:`generators` returns
    the transposes, which act on column vectors of coordinates.
    """
    s1 = _m([[-1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]])
    s2 = _m([[0, -1, 0, 0], [-1, 0, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]])
    s3 = _m([[0, -I_, 0, 0], [I_, 0, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]])
    # printed with +1 in position (3,2); that matrix is not unitary.  The
    # reflection in a1+a2+a3+a4 has -1 there.
    s4 = _half([[1, -1, -1, -1], [-1, 1, -1, -1], [-1, -1, 1, -1], [-1, -1, -1, 1]])
    # The printed matrix carries an overall factor 1/2 but its (2,2) entry must
    # be 1 for s5 to be unitary; it is stored as 2 inside the half.
    s5 = _half(
        [
            [0, 0, gq(-1, -1), gq(-1, 1)],
            [0, 2, 0, 0],
            [gq(-1, 1), 0, 1, I_],
            [gq(-1, -1), 0, -I_, 1],
        ]
    )
    return s1, s2, s3, s4, s5


@lru_cache(maxsize=None)
def generators() -> Tuple[ExactMatrix, ...]:
    """s1..s5 acting on coordinate columns in the basis p1..p4.

    With this reading the induced permutations of quintets and pentads are
    exactly the tabulated ones; with the untransposed reading s5 acts on the
    quintets by (45) instead of (46).
    """
    return tuple(m.transpose() for m in printed_generators())


def heisenberg_generators() -> Tuple[ExactMatrix, ...]:
    """g1..g5, five involutions generating the Heisenberg-type subgroup F."""
    g1 = _m([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, -1, 0], [0, 0, 0, -1]])
    g2 = _m([[0, I_, 0, 0], [-I_, 0, 0, 0], [0, 0, 1, 0], [0, 0, 0, -1]])
    g3 = _m([[1, 0, 0, 0], [0, -1, 0, 0], [0, 0, 0, I_], [0, 0, -I_, 0]])
    g4 = _m([[0, -1, 0, 0], [-1, 0, 0, 0], [0, 0, 0, -1], [0, 0, -1, 0]])
    g5 = _half(
        [
            [0, 0, gq(1, 1), gq(1, -1)],
            [0, 0, gq(1, -1), gq(1, 1)],
            [gq(1, -1), gq(1, 1), 0, 0],
            [gq(1, 1), gq(1, -1), 0, 0],
        ]
    )
    return g1, g2, g3, g4, g5


# ---------------------------------------------------------------------------
# integer encoding
# ---------------------------------------------------------------------------


def encode(m: ExactMatrix) -> Tuple[np.ndarray, np.ndarray]:
    """(re, im) int64 arrays holding SCALE * m; raises if m is not in (1/SCALE) Z[i]."""
    re = np.zeros((4, 4), dtype=np.int64)
    im = np.zeros((4, 4), dtype=np.int64)
    for r in range(4):
        for c in range(4):
            x = m[r, c]
            a, b = x.re * SCALE, x.im * SCALE
            if a.denominator != 1 or b.denominator != 1:
                raise ValueError(f"entry {x} is outside (1/{SCALE}) Z[i]")
            re[r, c], im[r, c] = int(a), int(b)
    return re, im


def decode(re: np.ndarray, im: np.ndarray) -> ExactMatrix:
    return ExactMatrix(
        [[GaussianRational(Fraction(int(re[r, c]), SCALE), Fraction(int(im[r, c]), SCALE)) for c in range(4)] for r in range(4)]
    )


def _batch_mul(ar, ai, br, bi):
    """Products of stacked scaled matrices, divided back by SCALE exactly."""
    rr = ar @ br - ai @ bi
    ii = ar @ bi + ai @ br
    if np.any(rr % SCALE) or np.any(ii % SCALE):
        raise ValueError("product left (1/SCALE) Z[i]; increase SCALE")
    return rr // SCALE, ii // SCALE


def _keys(re: np.ndarray, im: np.ndarray) -> List[bytes]:
    flat = np.concatenate([re.reshape(len(re), -1), im.reshape(len(im), -1)], axis=1).astype(np.int8)
    return [row.tobytes() for row in flat]


# ---------------------------------------------------------------------------
# hyperplane permutations
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def _form_lookup() -> Dict[Tuple[GaussianRational, ...], int]:
    return {h.coeffs: h.index for h in tables.hyperplanes()}


class NotAPermutation(ValueError):
    """Some transformed form is not proportional to any listed hyperplane."""


def hyperplane_action(g: ExactMatrix) -> Tuple[int, ...]:
    """Images j -> k (1-based, as a tuple indexed by j-1) with l_j o g^-1 proportional to l_k."""
    ginv = g.inverse()
    lookup = _form_lookup()
    images = []
    for hp in tables.hyperplanes():
        row = [sum((hp.coeffs[r] * ginv[r, c] for r in range(4)), GaussianRational(0)) for c in range(4)]
        key = tables.normalize(row)
        if key not in lookup:
            raise NotAPermutation(f"image of hyperplane {hp.index} is not among the 60 forms")
        images.append(lookup[key])
    if sorted(images) != list(range(1, 61)):
        raise NotAPermutation("hyperplane images are not a bijection")
    return tuple(images)


def is_transitive(perms: Sequence[Sequence[int]], n: int) -> bool:
    seen, stack = {1}, [1]
    while stack:
        j = stack.pop()
        for p in perms:
            k = p[j - 1]
            if k not in seen:
                seen.add(k)
                stack.append(k)
    return len(seen) == n


def cycle_notation(perm: Sequence[int]) -> str:
    """(12)(34) style string for a 1-based permutation tuple; '()' for the identity."""
    seen, out = set(), []
    for start in range(1, len(perm) + 1):
        if start in seen or perm[start - 1] == start:
            continue
        cyc, j = [], start
        while j not in seen:
            seen.add(j)
            cyc.append(j)
            j = perm[j - 1]
        sep = "" if len(perm) < 10 else ","
        out.append("(" + sep.join(map(str, cyc)) + ")")
    return "".join(out) or "()"


def permutation_group_order(perms: Sequence[Tuple[int, ...]]) -> int:
    """Order of the group generated by small permutations (closure by BFS)."""
    ident = tuple(range(1, len(perms[0]) + 1))
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for g in frontier:
            for s in perms:
                h = tuple(g[s[j] - 1] for j in range(len(s)))
                if h not in seen:
                    seen.add(h)
                    nxt.append(h)
        frontier = nxt
    return len(seen)


# ---------------------------------------------------------------------------
# group enumeration
# ---------------------------------------------------------------------------


class GroupTooLarge(RuntimeError):
    pass


@dataclass
class MatrixGroup:
    """An explicitly enumerated finite matrix group."""

    re: np.ndarray
    im: np.ndarray
    index: Dict[bytes, int]
    perms: Optional[np.ndarray] = None  # (order, 60) zero-based hyperplane images
    parent: List[int] = field(default_factory=list)
    via: List[int] = field(default_factory=list)

    @property
    def order(self) -> int:
        return len(self.re)

    def element(self, k: int) -> ExactMatrix:
        return decode(self.re[k], self.im[k])

    def find(self, m: ExactMatrix) -> Optional[int]:
        re, im = encode(m)
        return self.index.get(_keys(re[None], im[None])[0])

    def word(self, k: int) -> List[int]:
        """Generator indices (0-based) w with element k = gens[w0] gens[w1] ..."""
        w = []
        while self.parent[k] >= 0:
            w.append(self.via[k])
            k = self.parent[k]
        return w[::-1]

    def hyperplane_perm(self, k: int) -> Tuple[int, ...]:
        return tuple(int(x) + 1 for x in self.perms[k])

    def scalar_elements(self) -> List[int]:
        """Indices of elements that are scalar multiples of the identity."""
        eye = np.eye(4, dtype=bool)
        out = []
        for k in range(self.order):
            re, im = self.re[k], self.im[k]
            if not re[~eye].any() and not im[~eye].any() and len(set(zip(np.diag(re), np.diag(im)))) == 1:
                out.append(k)
        return out

    def center(self, gens: Sequence[ExactMatrix]) -> List[int]:
        """Indices of elements commuting with every generator."""
        ok = np.ones(self.order, dtype=bool)
        for g in gens:
            gr, gi = encode(g)
            lr, li = _batch_mul(self.re, self.im, gr, gi)
            rr, ri = _batch_mul(np.broadcast_to(gr, self.re.shape), np.broadcast_to(gi, self.im.shape), self.re, self.im)
            ok &= np.all(lr == rr, axis=(1, 2)) & np.all(li == ri, axis=(1, 2))
        return [int(k) for k in np.nonzero(ok)[0]]


def generate_group(
    gens: Sequence[ExactMatrix], cap: int = DEFAULT_GROUP_CAP, track_hyperplanes: bool = False
) -> MatrixGroup:
    """Breadth-first closure of the generators under right multiplication."""
    enc = [encode(g) for g in gens]
    ident_r = np.eye(4, dtype=np.int64) * SCALE
    ident_i = np.zeros((4, 4), dtype=np.int64)
    res, ims = [ident_r], [ident_i]
    index = {_keys(ident_r[None], ident_i[None])[0]: 0}
    parent, via = [-1], [-1]
    gperms = [np.array(hyperplane_action(g), dtype=np.int64) - 1 for g in gens] if track_hyperplanes else None
    perms = [np.arange(60, dtype=np.int64)] if track_hyperplanes else None
    frontier = np.array([0])
    all_re = ident_r[None]
    all_im = ident_i[None]
    while len(frontier):
        fr, fi = all_re[frontier], all_im[frontier]
        fperm = np.stack([perms[k] for k in frontier]) if track_hyperplanes else None
        new_ids = []
        for s, (sr, si) in enumerate(enc):
            pr, pi = _batch_mul(fr, fi, sr, si)
            for row, key in enumerate(_keys(pr, pi)):
                if key in index:
                    continue
                k = len(res)
                if k >= cap:
                    raise GroupTooLarge(f"group exceeds the cap of {cap} elements")
                index[key] = k
                res.append(pr[row])
                ims.append(pi[row])
                parent.append(int(frontier[row]))
                via.append(s)
                if track_hyperplanes:
                    # perm(g s) = perm(g) o perm(s)
                    perms.append(fperm[row][gperms[s]])
                new_ids.append(k)
        all_re = np.stack(res)
        all_im = np.stack(ims)
        frontier = np.array(new_ids, dtype=np.int64)
    group = MatrixGroup(all_re, all_im, index, None, parent, via)
    if track_hyperplanes:
        group.perms = np.stack(perms)
    return group


@lru_cache(maxsize=None)
def weyl_group() -> MatrixGroup:
    """W_c with hyperplane permutations tracked for every element."""
    return generate_group(generators(), track_hyperplanes=True)


@lru_cache(maxsize=None)
def heisenberg_group() -> MatrixGroup:
    return generate_group(heisenberg_generators())


def commutation_table(mats: Sequence[ExactMatrix]) -> Dict[Tuple[int, int], str]:
    """For each pair (1-based): 'commute', 'anticommute' or 'neither'."""
    out = {}
    for a, b in combinations(range(len(mats)), 2):
        ab, ba = mats[a] * mats[b], mats[b] * mats[a]
        if ab == ba:
            out[(a + 1, b + 1)] = "commute"
        elif ab == ba * _m([[-1 if r == c else 0 for c in range(4)] for r in range(4)]):
            out[(a + 1, b + 1)] = "anticommute"
        else:
            out[(a + 1, b + 1)] = "neither"
    return out


# ---------------------------------------------------------------------------
# flats of the arrangement
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Flat:
    dimension: int  # projective: 1 = line, 0 = point
    hyperplanes: Tuple[int, ...]
    basis: Tuple[Tuple[GaussianRational, ...], ...]

    @property
    def valency(self) -> int:
        return len(self.hyperplanes)


def _rref_key(rows) -> Tuple[Tuple[GaussianRational, ...], ...]:
    reduced, pivots = ExactMatrix(rows).rref()
    return tuple(tuple(reduced[k]) for k in range(len(pivots)))


def _vanishing(point) -> Tuple[int, ...]:
    return tuple(hp.index for hp in tables.hyperplanes() if not hp(point))


def _order(fl: Flat):
    return (-fl.valency, fl.hyperplanes)


@lru_cache(maxsize=None)
def enumerate_lines() -> Tuple[Flat, ...]:
    """All pairwise intersections of the hyperplanes, as projective lines."""
    forms = tables.hyperplanes()
    lines: Dict[tuple, Flat] = {}
    for f, g in combinations(forms, 2):
        key = _rref_key([f.coeffs, g.coeffs])
        if key in lines:
            continue
        r1, r2 = key
        members = []
        p1 = next(j for j, c in enumerate(r1) if c)
        p2 = next(j for j, c in enumerate(r2) if c)
        for hp in forms:
            rest = [hp.coeffs[j] - hp.coeffs[p1] * r1[j] - hp.coeffs[p2] * r2[j] for j in range(4)]
            if not any(rest):
                members.append(hp.index)
        kernel = ExactMatrix([r1, r2]).kernel()
        lines[key] = Flat(1, tuple(members), tuple(tuple(v) for v in kernel))
    return tuple(sorted(lines.values(), key=_order))


@lru_cache(maxsize=None)
def enumerate_flats() -> Tuple[Tuple[Flat, ...], Tuple[Flat, ...]]:
    """(lines, points): the lines plus every point cut on a line by a further hyperplane."""
    forms = tables.hyperplanes()
    lines = enumerate_lines()
    points: Dict[tuple, Flat] = {}
    for line in lines:
        u, v = line.basis
        for hp in forms:
            if hp.index in line.hyperplanes:
                continue
            lu, lv = hp(u), hp(v)
            pt = tables.normalize([lv * x - lu * y for x, y in zip(u, v)])
            if pt not in points:
                points[pt] = Flat(0, _vanishing(pt), (pt,))
    return lines, tuple(sorted(points.values(), key=_order))


def valency_histogram(flats: Sequence[Flat]) -> Dict[int, int]:
    hist: Dict[int, int] = {}
    for fl in flats:
        hist[fl.valency] = hist.get(fl.valency, 0) + 1
    return dict(sorted(hist.items()))


def point_on_line(point: Flat, line: Flat) -> bool:
    return set(line.hyperplanes) <= set(point.hyperplanes)


def special_lines(valency: int = 6) -> Tuple[Flat, ...]:
    return tuple(l for l in enumerate_lines() if l.valency == valency)


def lies_on_line(point: Sequence[object], line: Flat) -> bool:
    rows = [list(v) for v in line.basis] + [[GaussianRational.coerce(x) for x in point]]
    return len(ExactMatrix(rows).rref()[1]) <= len(line.basis)


def on_special_line(point: Sequence[object], valency: int = 6) -> bool:
    """True when the Cartan point lies on one of the lines where ``valency`` hyperplanes meet."""
    return any(lies_on_line(point, l) for l in special_lines(valency))


def line_point_incidence(line_valency: int = 6, point_valency: Optional[int] = None) -> dict:
    """Incidence between the valency-``line_valency`` lines and a class of points.

    When ``point_valency`` is None the point class is the one whose incidence
    counts with those lines are uniform (the classical 60-point orbit).
    """
    lines, points = enumerate_flats()
    special = [l for l in lines if l.valency == line_valency]
    candidates = sorted({p.valency for p in points}) if point_valency is None else [point_valency]
    for pv in candidates:
        pts = [p for p in points if p.valency == pv]
        per_line = [sum(point_on_line(p, l) for p in pts) for l in special]
        per_point = [sum(point_on_line(p, l) for l in special) for p in pts]
        if point_valency is not None or (len(set(per_line)) == 1 and len(set(per_point)) == 1 and per_line[0]):
            return {
                "lines": len(special),
                "points": len(pts),
                "point_valency": pv,
                "points_per_line": sorted(set(per_line)),
                "lines_per_point": sorted(set(per_point)),
            }
    return {"lines": len(special), "points": 0, "point_valency": None, "points_per_line": [], "lines_per_point": []}


# ---------------------------------------------------------------------------
# blocks, pentads, quintets
# ---------------------------------------------------------------------------


def _block_sets() -> Dict[frozenset, int]:
    return {frozenset(v): k for k, v in tables.blocks().items()}


def block_action(hperm: Sequence[int]) -> Tuple[int, ...]:
    lookup = _block_sets()
    out = []
    for k, members in sorted(tables.blocks().items()):
        image = frozenset(hperm[j - 1] for j in members)
        if image not in lookup:
            raise NotAPermutation(f"block {k} is not mapped to a block")
        out.append(lookup[image])
    return tuple(out)


def pentad_action(hperm: Sequence[int]) -> Tuple[int, ...]:
    bperm = block_action(hperm)
    lookup = {frozenset(p): k + 1 for k, p in enumerate(tables.pentads())}
    return tuple(lookup[frozenset(bperm[b - 1] for b in p)] for p in tables.pentads())


def quintet_action(hperm: Sequence[int]) -> Tuple[int, ...]:
    bperm = block_action(hperm)
    qs = tables.quintets()
    lookup = {frozenset(frozenset(t) for t in q): k + 1 for k, q in enumerate(qs)}
    return tuple(lookup[frozenset(frozenset(bperm[b - 1] for b in t) for t in q)] for q in qs)


def block_pentad_quintet_actions(g: ExactMatrix) -> dict:
    hperm = hyperplane_action(g)
    return {"blocks": block_action(hperm), "pentads": pentad_action(hperm), "quintets": quintet_action(hperm)}


def pentad_from_blocks(bperm: Sequence[int]) -> Tuple[int, ...]:
    lookup = {frozenset(p): k + 1 for k, p in enumerate(tables.pentads())}
    return tuple(lookup[frozenset(bperm[b - 1] for b in p)] for p in tables.pentads())


def stabilizer_generators() -> Tuple[ExactMatrix, ...]:
    """s8, s6 s7 s8 s7 s6, s8 s5 s6 s5, s3 s7 s8 s7 s8 s7 with s6=s2s3, s7=s4s5, s8=s1s6."""
    s1, s2, s3, s4, s5 = generators()
    s6 = s2 * s3
    s7 = s4 * s5
    s8 = s1 * s6
    return (s8, s6 * s7 * s8 * s7 * s6, s8 * s5 * s6 * s5, s3 * s7 * s8 * s7 * s8 * s7)


@dataclass(frozen=True)
class StabilizerReport:
    order: int
    index: int
    fixed_pentads: Tuple[int, ...]
    contains_center: bool


def pentad_stabilizer() -> StabilizerReport:
    gens = stabilizer_generators()
    sub = generate_group(gens)
    full = weyl_group()
    actions = [pentad_action(hyperplane_action(g)) for g in gens]
    fixed = tuple(k for k in range(1, 7) if all(a[k - 1] == k for a in actions))
    center = [full.element(k) for k in full.center(generators())]
    contains = all(sub.find(c) is not None for c in center)
    return StabilizerReport(sub.order, full.order // sub.order, fixed, contains)


# ---------------------------------------------------------------------------
# kernel of the action on P(U5)
# ---------------------------------------------------------------------------


def _fixes_tetrahedra(perm_row: np.ndarray, tetra: List[np.ndarray]) -> bool:
    return all(set(perm_row[t].tolist()) == set(t.tolist()) for t in tetra)


def kernel_on_U5(confirm: bool = True) -> List[ExactMatrix]:
    """Elements of W_c acting trivially on P(U5).

    Candidates are the elements fixing each of the 15 tetrahedra (whose
    products span U5); with ``confirm`` each candidate is checked
    symbolically: t(g a) must be a scalar multiple of t(a).
    """
    group = weyl_group()
    tetra = [np.array(h, dtype=np.int64) - 1 for h, _ in tables.tetrahedra()]
    candidates = [k for k in range(group.order) if _fixes_tetrahedra(group.perms[k], tetra)]
    mats = [group.element(k) for k in candidates]
    if confirm:
        from .complexes import acts_trivially_on_U5

        mats = [m for m in mats if acts_trivially_on_U5(m)]
    return mats


def matrix_action_on_poly(p: MultiPoly, g: ExactMatrix, names: Sequence[str] = tables.A_VARS) -> MultiPoly:
    """p(g a): substitute a_r -> sum_c g[r, c] a_c."""
    return p.linear_substitute(list(names), [[g[r, c] for c in range(4)] for r in range(4)])


__all__ = [
    "generators",
    "heisenberg_generators",
    "hyperplane_action",
    "NotAPermutation",
    "is_transitive",
    "cycle_notation",
    "permutation_group_order",
    "MatrixGroup",
    "GroupTooLarge",
    "generate_group",
    "weyl_group",
    "heisenberg_group",
    "commutation_table",
    "Flat",
    "enumerate_lines",
    "enumerate_flats",
    "special_lines",
    "lies_on_line",
    "on_special_line",
    "valency_histogram",
    "line_point_incidence",
    "block_action",
    "pentad_action",
    "quintet_action",
    "block_pentad_quintet_actions",
    "pentad_from_blocks",
    "stabilizer_generators",
    "pentad_stabilizer",
    "StabilizerReport",
    "kernel_on_U5",
    "matrix_action_on_poly",
]
