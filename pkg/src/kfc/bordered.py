"""Torus algebra, type A / type D structures and the box tensor product.

Algebra elements are written by their Reeb chord index: "1", "2", "3",
"12", "23", "123".  Idempotents are the integers 0 and 1.  The type A
structure CFA(p,1) of the (p,1)-cable pattern is held symbolically: its
operation families are matched against each input sequence, so no family
member is ever enumerated in advance.
"""

from __future__ import annotations

import logging
import warnings
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterator

from kfc.complex import Violation
from kfc.errors import CableOracleMismatch, InconclusiveError, KfcError, ValidationError
from kfc.hat import HatArrow, HatComplex, HatGenerator, total_homology_rank, validate_hat
from kfc.laurent import Laurent
from kfc.models import table1_gradings
from kfc.reduction import edge_reduce

log = logging.getLogger(__name__)

CHORDS = ("1", "2", "3", "12", "23", "123")

# chord -> (left idempotent, right idempotent)
IDEMPOTENTS = {
    "1": (0, 1), "2": (1, 0), "3": (0, 1),
    "12": (0, 0), "23": (1, 1), "123": (0, 1),
}

_PRODUCTS = {("1", "2"): "12", ("2", "3"): "23", ("1", "23"): "123", ("12", "3"): "123"}


def multiply(a: str | int, b: str | int) -> str | int | None:
    """Product in the torus algebra; ints are idempotents, None is zero."""
    if isinstance(a, int) and isinstance(b, int):
        return a if a == b else None
    if isinstance(a, int):
        return b if IDEMPOTENTS[b][0] == a else None
    if isinstance(b, int):
        return a if IDEMPOTENTS[a][1] == b else None
    return _PRODUCTS.get((a, b))


def _composable(x_idem: int, labels: tuple[str, ...]) -> bool:
    here = x_idem
    for lab in labels:
        left, right = IDEMPOTENTS[lab]
        if left != here:
            return False
        here = right
    return True


# --- type D -----------------------------------------------------------------

@dataclass(frozen=True)
class TypeD:
    name: str
    idempotents: tuple[tuple[str, int], ...]
    arrows: tuple[tuple[str, str, str], ...]  # (source, target, chord)

    @cached_property
    def idem(self) -> dict[str, int]:
        return dict(self.idempotents)

    @cached_property
    def out(self) -> dict[str, tuple[tuple[str, str], ...]]:
        out: dict[str, list] = {g: [] for g, _ in self.idempotents}
        for s, t, lab in self.arrows:
            out[s].append((t, lab))
        return {g: tuple(v) for g, v in out.items()}

    def violations(self) -> list[Violation]:
        found = []
        for s, t, lab in self.arrows:
            where = f"{s} -> {t} D{lab}"
            if s not in self.idem or t not in self.idem:
                found.append(Violation("dangling", where, "unknown generator"))
                continue
            if lab not in IDEMPOTENTS:
                found.append(Violation("label", where, f"unknown chord {lab!r}"))
                continue
            left, right = IDEMPOTENTS[lab]
            if (self.idem[s], self.idem[t]) != (left, right):
                found.append(Violation("idempotent", where,
                                       f"source/target idempotents {self.idem[s]}/{self.idem[t]} "
                                       f"do not match chord {left}->{right}"))
        if not found and self.longest_path() is None:
            found.append(Violation("unbounded", self.name, "delta graph has a cycle"))
        return found

    def longest_path(self) -> int | None:
        """Number of arrows on the longest delta path, or None if cyclic."""
        state: dict[str, int] = {}
        depth: dict[str, int] = {}

        def visit(g: str) -> bool:
            state[g] = 1
            best = 0
            for t, _ in self.out[g]:
                if state.get(t) == 1:
                    return False
                if t not in state and not visit(t):
                    return False
                best = max(best, depth[t] + 1)
            depth[g] = best
            state[g] = 2
            return True

        for g, _ in self.idempotents:
            if g not in state and not visit(g):
                return None
        return max(depth.values(), default=0)

    def paths(self, start: str) -> Iterator[tuple[tuple[str, ...], str]]:
        """All delta paths from start, including the empty one, as (chords, end)."""
        stack = [((), start)]
        while stack:
            labels, here = stack.pop()
            yield labels, here
            for t, lab in reversed(self.out[here]):
                stack.append((labels + (lab,), t))


def cfd_trefoil0() -> TypeD:
    """CFD of the 0-framed complement of the right-handed trefoil."""
    return TypeD(
        "CFD(RHT,0)",
        (("u1", 0), ("u2", 0), ("u3", 0), ("v1", 1), ("v2", 1), ("mu1", 1), ("mu2", 1)),
        (("v2", "u3", "2"), ("u2", "v2", "3"), ("u2", "v1", "1"), ("u1", "v1", "123"),
         ("u3", "mu1", "1"), ("mu2", "mu1", "23"), ("u1", "mu2", "3")))


# --- type A -----------------------------------------------------------------

@dataclass(frozen=True)
class TypeA:
    """Type A structure with a finite operation table.

    ops maps (x, chords) to a tuple of (output, shift) pairs; the empty chord
    tuple is m1.
    """
    name: str
    idempotents: tuple[tuple[str, int], ...]
    ops: dict = field(default_factory=dict, hash=False, compare=False)

    @cached_property
    def idem(self) -> dict[str, int]:
        return dict(self.idempotents)

    def operation(self, x: str, labels: tuple[str, ...]) -> tuple[tuple[str, int], ...]:
        return tuple(self.ops.get((x, labels), ()))


def _ones_tail(labels: tuple[str, ...], filler: str) -> int | None:
    """If labels == (filler,)*k + ("1",), return k."""
    if not labels or labels[-1] != "1":
        return None
    if any(lab != filler for lab in labels[:-1]):
        return None
    return len(labels) - 1


@dataclass(frozen=True)
class CableTypeA(TypeA):
    p: int = 2

    def operation(self, x, labels):
        p = self.p
        if x == "a":
            k = _ones_tail(labels, "12")
            if k is not None and k <= p - 2:
                return ((f"b{2 * p - k - 2}", 0),)
            if labels and labels[0] == "3":
                n = 1
                while n < len(labels) and labels[n] == "23":
                    n += 1
                i = n - 1
                if n < len(labels) and labels[n] == "2":
                    rest = labels[n + 1:]
                    if not rest:
                        return (("a", p * i + p),)
                    j = _ones_tail(rest, "12")
                    if j is not None and j <= p - 2:
                        return ((f"b{j + 1}", p * i + j + 1),)
            return ()
        j = int(x[1:])
        if not labels:
            if 1 <= j <= p - 1:
                return ((f"b{2 * p - j - 1}", p - j),)
            return ()
        if labels[0] == "2":
            i = _ones_tail(labels[1:], "12")
            if i is None:
                return ()
            if 1 <= j <= p - 2 and i <= p - j - 2:
                return ((f"b{j + i + 1}", i + 1),)
            if p + 1 <= j <= 2 * p - 2 and i <= j - p - 1:
                return ((f"b{j - i - 1}", 0),)
        return ()


def cfa_cable(p: int) -> CableTypeA:
    """CFA of the (p,1)-cable pattern in the solid torus: a, b1, ..., b_{2p-2}."""
    if p < 2:
        raise KfcError("p must be >= 2")
    gens = (("a", 0),) + tuple((f"b{j}", 1) for j in range(1, 2 * p - 1))
    return CableTypeA(f"CFA({p},1)", gens, p=p)


# --- box tensor -------------------------------------------------------------

def box_tensor(A: TypeA, D: TypeD) -> HatComplex:
    """CFA ⊠ CFD with relative-only gradings and Alexander-shift labels.

    For x⊗y and every delta path y -> ... -> y_k with chords rho_1..rho_k,
    m_{k+1}(x, rho_1, ..., rho_k) ⊗ y_k is added to ∂(x⊗y).
    """
    bad = D.violations()
    if any(v.kind == "unbounded" for v in bad):
        raise KfcError(f"type D structure {D.name} is not bounded")
    if bad:
        raise ValidationError(bad)
    gens = [(x, y) for x, xi in A.idempotents for y, yi in D.idempotents if xi == yi]
    if not gens:
        warnings.warn(f"{A.name} ⊠ {D.name}: no idempotent-compatible pairs", stacklevel=2)
    ids = {pair: f"{pair[0]}.{pair[1]}" for pair in gens}
    arrows = []
    for x, y in gens:
        terms: dict[str, int] = {}
        for labels, end in D.paths(y):
            for out, shift in A.operation(x, labels):
                assert _composable(A.idem[x], labels), (x, labels)
                assert A.idem[out] == D.idem[end], (x, labels, out, end)
                tgt = ids[(out, end)]
                if tgt in terms:
                    if terms[tgt] != shift:
                        raise KfcError(f"∂({ids[(x, y)]}): term {tgt} with shifts {terms[tgt]} and {shift}")
                    del terms[tgt]
                else:
                    terms[tgt] = shift
        arrows.extend(HatArrow(ids[(x, y)], t, s) for t, s in terms.items())
    if not isinstance(A, CableTypeA):
        log.warning("general type A/D input: output carries relative gradings only")
    return HatComplex(f"{A.name}⊠{D.name}", [HatGenerator(ids[g]) for g in gens], arrows)


def raw_cable(p: int) -> HatComplex:
    return box_tensor(cfa_cable(p), cfd_trefoil0())


def hat_cable(p: int) -> HatComplex:
    """Reduced CFK-hat of T(2,3;p,1) with absolute gradings from the table formulas."""
    reduced = edge_reduce(raw_cable(p))
    expected = table1_gradings(p)
    survivors = {g.id for g in reduced.generators}
    if survivors != set(expected):
        raise CableOracleMismatch(
            f"cable oracle mismatch at p={p}: extra {sorted(survivors - set(expected))}, "
            f"missing {sorted(set(expected) - survivors)}")
    h = reduced.with_gradings(expected, name=f"T23;{p},1")
    problems = validate_hat(h)
    if problems:
        raise ValidationError(problems)
    return h


# --- reading invariants off a reduced hat complex ------------------------------

def _distinguished(h: HatComplex) -> HatGenerator:
    if total_homology_rank(h) != 1:
        raise InconclusiveError("total homology of the hat complex is not one-dimensional")
    isolated = [g for g in h.generators if not h.out_arrows[g.id] and not h.in_arrows[g.id]]
    if len(isolated) != 1:
        raise InconclusiveError(f"expected one isolated generator, found {len(isolated)}")
    return isolated[0]


def tau_from_hat(h: HatComplex) -> int:
    """Alexander grading of the generator carrying the total homology."""
    if not h.absolute:
        raise KfcError("tau needs absolute gradings")
    return _distinguished(h).alexander


def deduce_a1_a2_from_hat(h: HatComplex, tau: int) -> tuple[int, int]:
    """Find the unique element of row tau one Maslov degree above x0.

    A generator x with A(x) < tau has its row-tau translate U^{A(x)-tau}·x at
    i = tau - A(x) with Maslov grading M(x) + 2·tau - 2·A(x).  Exactly one
    such translate must sit in Maslov grading M(x0) + 1; it is then the
    element whose horizontal boundary is x0, so a1 is its i-coordinate and a2
    the length of its vertical arrow.
    """
    if not h.absolute:
        raise KfcError("grading deduction needs absolute gradings")
    x0 = _distinguished(h)
    if x0.alexander != tau:
        raise InconclusiveError(f"distinguished generator {x0.id} has A={x0.alexander}, not tau={tau}")
    want = x0.maslov + 1
    candidates = [g for g in h.generators
                  if g.alexander < tau and g.maslov + 2 * tau - 2 * g.alexander == want]
    if len(candidates) != 1:
        raise InconclusiveError(
            f"grading argument inconclusive: {len(candidates)} candidates "
            f"{[g.id for g in candidates]} in row {tau} with Maslov grading {want}")
    x = candidates[0]
    out = h.out_arrows[x.id]
    if not out:
        raise InconclusiveError(f"a2 undefined by this method: {x.id} has no vertical arrow out")
    if len(out) > 1:
        raise InconclusiveError(f"{x.id} has {len(out)} vertical arrows out")
    return tau - x.alexander, out[0].shift


def euler_characteristic(h: HatComplex) -> Laurent:
    """Sum over generators of (-1)^M t^A."""
    if not h.absolute:
        raise KfcError("Euler characteristic needs absolute gradings")
    return Laurent.from_terms((g.alexander, -1 if g.maslov % 2 else 1) for g in h.generators)
