"""Z⊕Z-filtered chain complexes over F2[U, U^-1] (the CFK∞ model).

A complex is stored over a basis of generators, each carrying a Maslov
grading M and an Alexander grading A.  An arrow (x, y, n) records the term
U^n·y in ∂x.  In the (i, j)-plane, U^n·x sits at (-n, A(x) - n).
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable

from kfc.errors import KfcError, ValidationError


@dataclass(frozen=True, order=True)
class Generator:
    id: str
    maslov: int
    alexander: int


@dataclass(frozen=True, order=True)
class Arrow:
    source: str
    target: str
    u_power: int = 0


@dataclass(frozen=True)
class Violation:
    kind: str
    where: str
    message: str

    def __str__(self) -> str:
        return f"{self.kind}: {self.where}: {self.message}"


@dataclass(frozen=True, eq=False)
class CfkComplex:
    name: str
    generators: tuple[Generator, ...]
    arrows: tuple[Arrow, ...] = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "generators", tuple(self.generators))
        object.__setattr__(self, "arrows", tuple(sorted(self.arrows)))
        seen = set()
        for g in self.generators:
            if g.id in seen:
                raise KfcError(f"duplicate generator id {g.id!r}")
            seen.add(g.id)
        triples = set()
        for a in self.arrows:
            for end in (a.source, a.target):
                if end not in seen:
                    raise KfcError(f"arrow {a.source} -> {a.target} U^{a.u_power}: unknown generator {end!r}")
            if a in triples:
                raise KfcError(f"duplicate arrow {a.source} -> {a.target} U^{a.u_power}")
            triples.add(a)

    # Equality ignores generator order.
    def __eq__(self, other):
        if not isinstance(other, CfkComplex):
            return NotImplemented
        return (self.name == other.name
                and frozenset(self.generators) == frozenset(other.generators)
                and self.arrows == other.arrows)

    def __hash__(self):
        return hash((self.name, frozenset(self.generators), self.arrows))

    def __len__(self) -> int:
        return len(self.generators)

    @cached_property
    def by_id(self) -> dict[str, Generator]:
        return {g.id: g for g in self.generators}

    @cached_property
    def out_arrows(self) -> dict[str, tuple[Arrow, ...]]:
        out = defaultdict(list)
        for a in self.arrows:
            out[a.source].append(a)
        return {g.id: tuple(out[g.id]) for g in self.generators}

    @cached_property
    def in_arrows(self) -> dict[str, tuple[Arrow, ...]]:
        inc = defaultdict(list)
        for a in self.arrows:
            inc[a.target].append(a)
        return {g.id: tuple(inc[g.id]) for g in self.generators}

    def alexander_range(self) -> tuple[int, int]:
        if not self.generators:
            raise KfcError("empty complex")
        values = [g.alexander for g in self.generators]
        return min(values), max(values)

    def hlen(self, a: Arrow) -> int:
        return a.u_power

    def vlen(self, a: Arrow) -> int:
        return self.by_id[a.source].alexander - self.by_id[a.target].alexander + a.u_power

    def rename(self, name: str) -> "CfkComplex":
        return CfkComplex(name, self.generators, self.arrows)


def validate(c: CfkComplex) -> list[Violation]:
    """List every violated grading, filtration and ∂²=0 condition."""
    out = []
    for a in c.arrows:
        where = f"{a.source} -> {a.target} U^{a.u_power}"
        src, tgt = c.by_id[a.source], c.by_id[a.target]
        if a.u_power < 0:
            out.append(Violation("negative-u-power", where, "u_power must be >= 0"))
        vlen = c.vlen(a)
        if vlen < 0:
            out.append(Violation("alexander-filtration", where,
                                 f"vertical length {vlen} < 0"))
        if tgt.maslov - 2 * a.u_power != src.maslov - 1:
            out.append(Violation(
                "maslov-drop", where,
                f"M(target) - 2n = {tgt.maslov - 2 * a.u_power}, expected M(source) - 1 = {src.maslov - 1}"))
    for x in c.generators:
        counts: dict[tuple[str, int], int] = defaultdict(int)
        for a in c.out_arrows[x.id]:
            for b in c.out_arrows[a.target]:
                counts[(b.target, a.u_power + b.u_power)] ^= 1
        for (z, m), odd in sorted(counts.items()):
            if odd:
                out.append(Violation("d-squared", x.id,
                                     f"odd number of paths to U^{m}·{z}"))
    return out


def require_valid(c: CfkComplex) -> None:
    report = validate(c)
    if report:
        raise ValidationError(report)


def tensor(c1: CfkComplex, c2: CfkComplex) -> CfkComplex:
    """Tensor product over F2[U, U^-1]; generator ids are "x|y"."""
    require_valid(c1)
    require_valid(c2)
    gens = [Generator(f"{x.id}|{y.id}", x.maslov + y.maslov, x.alexander + y.alexander)
            for x in c1.generators for y in c2.generators]
    arrows = []
    for x in c1.generators:
        for y in c2.generators:
            src = f"{x.id}|{y.id}"
            for a in c1.out_arrows[x.id]:
                arrows.append(Arrow(src, f"{a.target}|{y.id}", a.u_power))
            for b in c2.out_arrows[y.id]:
                arrows.append(Arrow(src, f"{x.id}|{b.target}", b.u_power))
    return CfkComplex(f"{c1.name}+{c2.name}", gens, arrows)


def dual(c: CfkComplex) -> CfkComplex:
    """Dual complex; x -> U^n y becomes y* -> U^n x*."""
    require_valid(c)
    gens = [Generator(f"{g.id}*", -g.maslov, -g.alexander) for g in c.generators]
    arrows = [Arrow(f"{a.target}*", f"{a.source}*", a.u_power) for a in c.arrows]
    if "+" in c.name:
        name = f"-({c.name})"
    elif c.name.startswith("-"):
        name = c.name[1:]
    else:
        name = f"-{c.name}"
    return CfkComplex(name, gens, arrows)


def canonical_signature(c: CfkComplex):
    """Isomorphism-insensitive fingerprint: sorted bigradings and arrow signatures."""
    gens = tuple(sorted((g.maslov, g.alexander) for g in c.generators))
    arrows = []
    for a in c.arrows:
        s, t = c.by_id[a.source], c.by_id[a.target]
        arrows.append((s.maslov, s.alexander, t.maslov, t.alexander, a.u_power))
    return gens, tuple(sorted(arrows))


def direct_sum(name: str, parts: Iterable[CfkComplex]) -> CfkComplex:
    gens, arrows = [], []
    for part in parts:
        gens.extend(part.generators)
        arrows.extend(part.arrows)
    return CfkComplex(name, gens, arrows)
