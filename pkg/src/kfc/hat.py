"""Z-filtered hat complexes with Alexander-shift-labelled arrows.

This is the shape of CFK-hat together with its higher differentials: an
arrow (x, y, s) means y appears in ∂x and A(y) = A(x) - s.  Gradings may be
absent ("relative-only"), which is how raw box-tensor output arrives.
"""

from __future__ import annotations

from collections import defaultdict, deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Mapping

from kfc import f2
from kfc.complex import Violation
from kfc.errors import KfcError, ValidationError


@dataclass(frozen=True, order=True)
class HatGenerator:
    id: str
    maslov: int | None = None
    alexander: int | None = None

    @property
    def absolute(self) -> bool:
        return self.maslov is not None and self.alexander is not None


@dataclass(frozen=True, order=True)
class HatArrow:
    source: str
    target: str
    shift: int


@dataclass(frozen=True, eq=False)
class HatComplex:
    name: str
    generators: tuple[HatGenerator, ...]
    arrows: tuple[HatArrow, ...] = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "generators", tuple(self.generators))
        object.__setattr__(self, "arrows", tuple(sorted(self.arrows)))
        seen = set()
        for g in self.generators:
            if g.id in seen:
                raise KfcError(f"duplicate generator id {g.id!r}")
            seen.add(g.id)
        pairs = set()
        for a in self.arrows:
            for end in (a.source, a.target):
                if end not in seen:
                    raise KfcError(f"arrow {a.source} -> {a.target} [{a.shift}]: unknown generator {end!r}")
            if (a.source, a.target) in pairs:
                raise KfcError(f"duplicate arrow {a.source} -> {a.target}")
            pairs.add((a.source, a.target))

    def __eq__(self, other):
        if not isinstance(other, HatComplex):
            return NotImplemented
        return (self.name == other.name
                and frozenset(self.generators) == frozenset(other.generators)
                and self.arrows == other.arrows)

    def __hash__(self):
        return hash((self.name, frozenset(self.generators), self.arrows))

    def __len__(self) -> int:
        return len(self.generators)

    @cached_property
    def by_id(self) -> dict[str, HatGenerator]:
        return {g.id: g for g in self.generators}

    @cached_property
    def out_arrows(self) -> dict[str, tuple[HatArrow, ...]]:
        out = defaultdict(list)
        for a in self.arrows:
            out[a.source].append(a)
        return {g.id: tuple(out[g.id]) for g in self.generators}

    @cached_property
    def in_arrows(self) -> dict[str, tuple[HatArrow, ...]]:
        inc = defaultdict(list)
        for a in self.arrows:
            inc[a.target].append(a)
        return {g.id: tuple(inc[g.id]) for g in self.generators}

    @property
    def absolute(self) -> bool:
        return all(g.absolute for g in self.generators)

    def with_gradings(self, gradings: Mapping[str, tuple[int, int]], name: str | None = None) -> "HatComplex":
        """Copy with absolute (M, A) assigned from gradings[id]."""
        gens = [HatGenerator(g.id, *gradings[g.id]) for g in self.generators]
        return HatComplex(name or self.name, gens, self.arrows)

    def relative_only(self) -> "HatComplex":
        return HatComplex(self.name, [HatGenerator(g.id) for g in self.generators], self.arrows)


def relative_gradings(h: HatComplex) -> tuple[dict[str, tuple[int, int]], list[Violation]]:
    """Offsets (M, A) per generator, relative to a root of its component.

    Walks arrows in both directions; every arrow must drop M by one and A by
    its shift.  Conflicting closed loops are returned as violations.
    """
    adj = defaultdict(list)
    for a in h.arrows:
        adj[a.source].append((a.target, -1, -a.shift))
        adj[a.target].append((a.source, 1, a.shift))
    offsets: dict[str, tuple[int, int]] = {}
    problems = []
    for g in h.generators:
        if g.id in offsets:
            continue
        offsets[g.id] = (0, 0)
        queue = deque([g.id])
        while queue:
            x = queue.popleft()
            mx, ax = offsets[x]
            for y, dm, da in adj[x]:
                want = (mx + dm, ax + da)
                have = offsets.get(y)
                if have is None:
                    offsets[y] = want
                    queue.append(y)
                elif have != want:
                    problems.append(Violation(
                        "relative-grading", f"{x} ~ {y}",
                        f"inconsistent relative (M, A): {have} vs {want}"))
    return offsets, problems


def validate_hat(h: HatComplex) -> list[Violation]:
    out = []
    for a in h.arrows:
        where = f"{a.source} -> {a.target} [{a.shift}]"
        if a.shift < 0:
            out.append(Violation("negative-shift", where, "shift must be >= 0"))
        s, t = h.by_id[a.source], h.by_id[a.target]
        if s.absolute and t.absolute:
            if t.alexander != s.alexander - a.shift:
                out.append(Violation("alexander-shift", where,
                                     f"A(target) = {t.alexander}, expected {s.alexander - a.shift}"))
            if t.maslov != s.maslov - 1:
                out.append(Violation("maslov-drop", where,
                                     f"M(target) = {t.maslov}, expected {s.maslov - 1}"))
    for x in h.generators:
        counts: dict[str, int] = defaultdict(int)
        for a in h.out_arrows[x.id]:
            for b in h.out_arrows[a.target]:
                counts[b.target] ^= 1
        for z, odd in sorted(counts.items()):
            if odd:
                out.append(Violation("d-squared", x.id, f"odd number of paths to {z}"))
    out.extend(relative_gradings(h)[1])
    return out


def require_valid_hat(h: HatComplex) -> None:
    report = validate_hat(h)
    if report:
        raise ValidationError(report)


def hat_signature(h: HatComplex):
    """Sorted (M, A) multiset and sorted (M_s, A_s, M_t, A_t, shift) arrow multiset."""
    if not h.absolute:
        raise KfcError("canonical signature needs absolute gradings")
    gens = tuple(sorted((g.maslov, g.alexander) for g in h.generators))
    arrows = []
    for a in h.arrows:
        s, t = h.by_id[a.source], h.by_id[a.target]
        arrows.append((s.maslov, s.alexander, t.maslov, t.alexander, a.shift))
    return gens, tuple(sorted(arrows))


def total_homology_rank(h: HatComplex) -> int:
    """Rank of the homology of h with the full (unfiltered) differential."""
    index = {g.id: k for k, g in enumerate(h.generators)}
    columns = [0] * len(h.generators)
    for a in h.arrows:
        columns[index[a.source]] ^= 1 << index[a.target]
    r = f2.rank(columns)
    return len(columns) - 2 * r
