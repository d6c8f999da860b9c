"""Planar regions of the (i, j)-plane, their subquotient complexes, and F2 homology.

Every region is a difference of two downward-closed subsets of Z², so the
induced differential on C{S} keeps exactly those terms whose target lattice
point lies in S.  Elements are pairs (generator id, n) standing for U^n·x at
(-n, A(x) - n); n may be negative.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from kfc import f2
from kfc.complex import CfkComplex
from kfc.errors import ChainMapError


class Region:
    def contains(self, i: int, j: int) -> bool:
        raise NotImplementedError

    def i_bounds(self, amin: int, amax: int) -> tuple[int, int]:
        """Range of i that can meet S for generators with A in [amin, amax]."""
        raise NotImplementedError


@dataclass(frozen=True)
class Column(Region):
    def contains(self, i, j):
        return i == 0

    def i_bounds(self, amin, amax):
        return 0, 0


@dataclass(frozen=True)
class CappedColumn(Region):
    s: int

    def contains(self, i, j):
        return i == 0 and j <= self.s

    def i_bounds(self, amin, amax):
        return 0, 0


@dataclass(frozen=True)
class Hook(Region):
    """{min(i, j - tau) = 0}"""
    tau: int

    def contains(self, i, j):
        return min(i, j - self.tau) == 0

    def i_bounds(self, amin, amax):
        return 0, max(0, self.tau - amin)


@dataclass(frozen=True)
class TruncatedHook(Region):
    """{min(i, j - tau) = 0, i <= s}"""
    tau: int
    s: int

    def contains(self, i, j):
        return min(i, j - self.tau) == 0 and i <= self.s

    def i_bounds(self, amin, amax):
        return 0, self.s


@dataclass(frozen=True)
class HookWithTail(Region):
    """{min(i, j - tau) = 0, i <= a1} ∪ {i = a1, tau - s <= j < tau}"""
    tau: int
    a1: int
    s: int

    def contains(self, i, j):
        if min(i, j - self.tau) == 0 and i <= self.a1:
            return True
        return i == self.a1 and self.tau - self.s <= j < self.tau

    def i_bounds(self, amin, amax):
        return 0, self.a1


@dataclass(frozen=True)
class MaxHook(Region):
    """{max(i, j - tau) = 0}"""
    tau: int

    def contains(self, i, j):
        return max(i, j - self.tau) == 0

    def i_bounds(self, amin, amax):
        return min(0, self.tau - amax), 0


@dataclass(frozen=True)
class Point(Region):
    i: int
    j: int

    def contains(self, i, j):
        return i == self.i and j == self.j

    def i_bounds(self, amin, amax):
        return self.i, self.i


@dataclass(frozen=True)
class RegionComplex:
    region: Region
    elements: tuple[tuple[str, int], ...]
    maslov: tuple[int, ...]
    points: tuple[tuple[int, int], ...]
    # columns[k] is ∂(elements[k]) as a bitset over element indices
    columns: tuple[int, ...]

    def __len__(self):
        return len(self.elements)

    def index(self) -> dict[tuple[str, int], int]:
        return {e: k for k, e in enumerate(self.elements)}


@dataclass(frozen=True)
class HomologySummary:
    dimension: int
    representatives: tuple[int, ...]
    gradings: tuple[int, ...]


@dataclass(frozen=True)
class InducedMap:
    # matrix[r][c]: coefficient of target class r in the image of source class c
    matrix: tuple[tuple[int, ...], ...]
    source_dim: int
    target_dim: int

    @property
    def trivial(self) -> bool:
        return not any(any(row) for row in self.matrix)


def extract_region(c: CfkComplex, region: Region) -> RegionComplex:
    if not c.generators:
        return RegionComplex(region, (), (), (), ())
    amin, amax = c.alexander_range()
    lo, hi = region.i_bounds(amin, amax)
    elements, maslov, points = [], [], []
    for g in c.generators:
        for i in range(lo, hi + 1):
            j = g.alexander + i
            if region.contains(i, j):
                elements.append((g.id, -i))
                maslov.append(g.maslov + 2 * i)
                points.append((i, j))
    index = {e: k for k, e in enumerate(elements)}
    columns = []
    for gid, n in elements:
        col = 0
        for a in c.out_arrows[gid]:
            k = index.get((a.target, n + a.u_power))
            if k is not None:
                col ^= 1 << k
        columns.append(col)
    return RegionComplex(region, tuple(elements), tuple(maslov), tuple(points), tuple(columns))


def homology(rc: RegionComplex) -> HomologySummary:
    """Homogeneous class representatives, computed degree by degree."""
    by_degree: dict[int, list[int]] = {}
    for k, m in enumerate(rc.maslov):
        by_degree.setdefault(m, []).append(k)
    reps, grads = [], []
    for m in sorted(by_degree):
        idx = by_degree[m]
        boundaries = f2.Echelon()
        for k in by_degree.get(m + 1, ()):
            boundaries.add(rc.columns[k])
        local = f2.kernel([rc.columns[k] for k in idx])
        for z in local:
            v = 0
            for b in f2.bits(z):
                v |= 1 << idx[b]
            if boundaries.add(v):
                reps.append(v)
                grads.append(m)
    return HomologySummary(len(reps), tuple(reps), tuple(grads))


def element_map(source: RegionComplex, target: RegionComplex) -> list[int]:
    """Identity on shared (generator, n) elements, zero elsewhere."""
    index = target.index()
    out = []
    for e in source.elements:
        k = index.get(e)
        out.append(0 if k is None else 1 << k)
    return out


def check_chain_map(source: RegionComplex, target: RegionComplex, fmap: Sequence[int]) -> None:
    for k, col in enumerate(source.columns):
        if f2.apply(fmap, col) != f2.apply(target.columns, fmap[k]):
            raise ChainMapError(
                f"element map {type(source.region).__name__} -> {type(target.region).__name__} "
                f"does not commute with the differential at {source.elements[k]}")


KINDS = ("quotient-then-include", "include")


def induced_map(source: RegionComplex, target: RegionComplex,
                kind: str = "quotient-then-include") -> InducedMap:
    """Matrix on homology of the element-level map (identity on common elements).

    Both kinds use the same element rule; the element map is checked to be a
    chain map before anything is computed.
    """
    if kind not in KINDS:
        raise ValueError(f"unknown map kind {kind!r}")
    fmap = element_map(source, target)
    check_chain_map(source, target, fmap)
    hs, ht = homology(source), homology(target)
    ech = f2.Echelon()
    for col in target.columns:
        ech.add(col)
    for r, rep in enumerate(ht.representatives):
        ech.add(rep, 1 << r)
    cols = []
    for rep in hs.representatives:
        residue, tag = ech.reduce(f2.apply(fmap, rep))
        if residue:
            raise ChainMapError("image of a cycle is not a cycle")
        cols.append(tag)
    matrix = tuple(tuple((cols[c] >> r) & 1 for c in range(hs.dimension))
                   for r in range(ht.dimension))
    return InducedMap(matrix, hs.dimension, ht.dimension)


def map_is_trivial(c: CfkComplex, source: Region, target: Region) -> bool:
    return induced_map(extract_region(c, source), extract_region(c, target)).trivial
