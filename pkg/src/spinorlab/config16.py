"""The 16_6 configuration built from half-spin weights of Spin(10).

Weights are sign vectors of length five; P+ (even number of minus signs)
are the points and P- (odd) the planes.  A point and a plane are incident
when they are opposite or differ in exactly one sign.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations, product
from typing import FrozenSet, List, Optional, Sequence, Set, Tuple

Weight = Tuple[int, ...]


def parse_weight(text: str) -> Weight:
    """'--+++' -> (-1, -1, 1, 1, 1)."""
    signs = {"+": 1, "-": -1}
    return tuple(signs[ch] for ch in text.strip())


def format_weight(w: Weight) -> str:
    return "".join("+" if s > 0 else "-" for s in w)


def parity(w: Weight) -> int:
    out = 1
    for s in w:
        out *= s
    return out


def weights(sign: int, length: int = 5) -> List[Weight]:
    """Sign vectors of the given length whose product of entries is ``sign``."""
    return [w for w in product((1, -1), repeat=length) if parity(w) == sign]


def differences(u: Weight, v: Weight) -> int:
    return sum(a != b for a, b in zip(u, v))


def incident(point: Weight, plane: Weight) -> bool:
    d = differences(point, plane)
    return d == 1 or d == len(point)


@dataclass(frozen=True)
class Configuration:
    points: Tuple[Weight, ...]
    planes: Tuple[Weight, ...]
    incidence: Tuple[Tuple[bool, ...], ...]  # [point][plane]

    def planes_of(self, i: int) -> FrozenSet[int]:
        return frozenset(j for j, x in enumerate(self.incidence[i]) if x)

    def points_of(self, j: int) -> FrozenSet[int]:
        return frozenset(i for i in range(len(self.points)) if self.incidence[i][j])

    def regular_degrees(self) -> Tuple[Set[int], Set[int]]:
        return (
            {len(self.planes_of(i)) for i in range(len(self.points))},
            {len(self.points_of(j)) for j in range(len(self.planes))},
        )

    def non_degenerate(self) -> bool:
        """Two points share exactly two planes and two planes share exactly two points."""
        pts = all(len(self.planes_of(i) & self.planes_of(k)) == 2 for i, k in combinations(range(16), 2))
        pls = all(len(self.points_of(i) & self.points_of(k)) == 2 for i, k in combinations(range(16), 2))
        return pts and pls


@lru_cache(maxsize=None)
def build_configuration() -> Configuration:
    pts = tuple(weights(1))
    pls = tuple(weights(-1))
    inc = tuple(tuple(incident(p, q) for q in pls) for p in pts)
    return Configuration(pts, pls, inc)


# ---------------------------------------------------------------------------
# grids
# ---------------------------------------------------------------------------

GRID_PLUS = (
    ("--+++", "----+", "---+-", "--+--"),
    ("+++++", "++--+", "++-+-", "+++--"),
    ("+----", "+-++-", "+-+-+", "+--++"),
    ("-+---", "-+++-", "-++-+", "-+-++"),
)
GRID_MINUS = (
    ("-----", "--++-", "--+-+", "---++"),
    ("++---", "++++-", "+++-+", "++-++"),
    ("+-+++", "+---+", "+--+-", "+-+--"),
    ("-++++", "-+--+", "-+-+-", "-++--"),
)


def _cross(grid, r: int, c: int) -> Set[Weight]:
    out = {parse_weight(grid[r][k]) for k in range(4) if k != c}
    out |= {parse_weight(grid[k][c]) for k in range(4) if k != r}
    return out


def grid_mismatches() -> List[Tuple[str, int, int]]:
    """Cells whose row/column cross in the other grid is not the incident set."""
    bad = []
    for r, c in product(range(4), range(4)):
        wp = parse_weight(GRID_PLUS[r][c])
        if _cross(GRID_MINUS, r, c) != {q for q in weights(-1) if incident(wp, q)}:
            bad.append(("+", r + 1, c + 1))
        wm = parse_weight(GRID_MINUS[r][c])
        if _cross(GRID_PLUS, r, c) != {p for p in weights(1) if incident(p, wm)}:
            bad.append(("-", r + 1, c + 1))
    return bad


def verify_grids() -> bool:
    every = {parse_weight(w) for row in GRID_PLUS for w in row} == set(weights(1))
    every &= {parse_weight(w) for row in GRID_MINUS for w in row} == set(weights(-1))
    return every and not grid_mismatches()


# ---------------------------------------------------------------------------
# W(D6)
# ---------------------------------------------------------------------------


def wd6_elements():
    """Signed permutations (perm, signs) of six letters with an even number of -1 signs."""
    for perm in permutations(range(6)):
        for signs in product((1, -1), repeat=6):
            if parity(signs) == 1:
                yield perm, signs


def _apply_signed(perm, signs, w: Weight) -> Weight:
    out = [0] * 6
    for i in range(6):
        out[perm[i]] = signs[i] * w[i]
    return tuple(out)


def _lift(u: Weight) -> Weight:
    """Append a + sign: P+ -> Delta12+, P- -> Delta12-."""
    return tuple(u) + (1,)


def _pair_key(w: Weight) -> Weight:
    """Representative of {w, -w} with last sign +."""
    return w if w[-1] > 0 else tuple(-s for s in w)


@dataclass(frozen=True)
class WD6Report:
    group_order: int
    image_order: int
    kernel: Tuple[Tuple[Tuple[int, ...], Tuple[int, ...]], ...]


@lru_cache(maxsize=None)
def wd6_homomorphism() -> WD6Report:
    cfg = build_configuration()
    pt_index = {_pair_key(_lift(p)): i for i, p in enumerate(cfg.points)}
    pl_index = {_pair_key(_lift(q)): j for j, q in enumerate(cfg.planes)}
    images = set()
    kernel = []
    order = 0
    ident = (tuple(range(16)), tuple(range(16)))
    for perm, signs in wd6_elements():
        order += 1
        pp = tuple(pt_index[_pair_key(_apply_signed(perm, signs, _lift(p)))] for p in cfg.points)
        qq = tuple(pl_index[_pair_key(_apply_signed(perm, signs, _lift(q)))] for q in cfg.planes)
        images.add((pp, qq))
        if (pp, qq) == ident:
            kernel.append((tuple(perm), tuple(signs)))
    return WD6Report(order, len(images), tuple(kernel))


def wd6_image() -> Set[Tuple[Tuple[int, ...], Tuple[int, ...]]]:
    cfg = build_configuration()
    pt_index = {_pair_key(_lift(p)): i for i, p in enumerate(cfg.points)}
    pl_index = {_pair_key(_lift(q)): j for j, q in enumerate(cfg.planes)}
    out = set()
    for perm, signs in wd6_elements():
        pp = tuple(pt_index[_pair_key(_apply_signed(perm, signs, _lift(p)))] for p in cfg.points)
        qq = tuple(pl_index[_pair_key(_apply_signed(perm, signs, _lift(q)))] for q in cfg.planes)
        out.add((pp, qq))
    return out


def preserves_incidence(pp: Sequence[int], qq: Sequence[int]) -> bool:
    inc = build_configuration().incidence
    return all(inc[i][j] == inc[pp[i]][qq[j]] for i in range(16) for j in range(16))


# ---------------------------------------------------------------------------
# automorphisms by backtracking
# ---------------------------------------------------------------------------


class SearchBudgetExceeded(RuntimeError):
    pass


def _isomorphisms(src_blocks: List[FrozenSet[int]], dst_blocks: List[FrozenSet[int]], n: int, budget: int):
    """Bijections of n points carrying the block family src onto dst (yield point maps)."""
    src_set = set(src_blocks)
    dst_set = set(dst_blocks)
    # triples lying in a common block, used for pruning
    def triples(blocks):
        return {frozenset(t) for b in blocks for t in combinations(sorted(b), 3)}

    src_tri, dst_tri = triples(src_blocks), triples(dst_blocks)
    nodes = [0]
    image: List[Optional[int]] = [None] * n

    def consistent(k: int) -> bool:
        for i, j in combinations(range(k), 2):
            inside = frozenset((i, j, k)) in src_tri
            if inside != (frozenset((image[i], image[j], image[k])) in dst_tri):
                return False
        return True

    def rec(k: int, used: Set[int]):
        nodes[0] += 1
        if nodes[0] > budget:
            raise SearchBudgetExceeded(f"automorphism search exceeded {budget} nodes")
        if k == n:
            if {frozenset(image[i] for i in b) for b in src_set} == dst_set:
                yield tuple(image)
            return
        for v in range(n):
            if v in used:
                continue
            image[k] = v
            if consistent(k):
                used.add(v)
                yield from rec(k + 1, used)
                used.discard(v)
            image[k] = None

    yield from rec(0, set())


@dataclass(frozen=True)
class AutomorphismReport:
    side_preserving: int
    side_swapping: int
    point_orbit_size: int


DEFAULT_SEARCH_BUDGET = 5_000_000


@lru_cache(maxsize=None)
def automorphism_report(budget: int = DEFAULT_SEARCH_BUDGET) -> AutomorphismReport:
    cfg = build_configuration()
    planes = [cfg.points_of(j) for j in range(16)]
    dual = [cfg.planes_of(i) for i in range(16)]
    maps = list(_isomorphisms(planes, planes, 16, budget))
    swaps = sum(1 for _ in _isomorphisms(planes, dual, 16, budget))
    orbit = {m[0] for m in maps}
    return AutomorphismReport(len(maps), swaps, len(orbit))


def automorphism_count(budget: int = DEFAULT_SEARCH_BUDGET) -> int:
    """Side-preserving automorphisms (point map plus induced plane map)."""
    return automorphism_report(budget).side_preserving


def automorphisms(budget: int = DEFAULT_SEARCH_BUDGET) -> List[Tuple[Tuple[int, ...], Tuple[int, ...]]]:
    """All (point perm, plane perm) pairs; plane perms are induced because planes are distinct 6-sets."""
    cfg = build_configuration()
    planes = [cfg.points_of(j) for j in range(16)]
    index = {b: j for j, b in enumerate(planes)}
    out = []
    for pp in _isomorphisms(planes, planes, 16, budget):
        qq = tuple(index[frozenset(pp[i] for i in planes[j])] for j in range(16))
        out.append((pp, qq))
    return out


__all__ = [
    "Weight",
    "parse_weight",
    "format_weight",
    "weights",
    "incident",
    "Configuration",
    "build_configuration",
    "GRID_PLUS",
    "GRID_MINUS",
    "grid_mismatches",
    "verify_grids",
    "wd6_elements",
    "wd6_homomorphism",
    "wd6_image",
    "WD6Report",
    "preserves_incidence",
    "automorphism_count",
    "automorphism_report",
    "automorphisms",
    "AutomorphismReport",
    "SearchBudgetExceeded",
]
