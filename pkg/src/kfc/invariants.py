"""Concordance invariants read off from maps between region homologies."""

from __future__ import annotations

from dataclasses import dataclass, field

from kfc.complex import CfkComplex, dual, require_valid, tensor
from kfc.errors import KfcError, NotKnotLikeError
from kfc.reduction import edge_reduce
from kfc.regions import (CappedColumn, Column, Hook, HookWithTail, MaxHook, Point,
                         TruncatedHook, extract_region, homology, map_is_trivial)

UNDEFINED = "undefined"


def _column_dimension(c: CfkComplex) -> int:
    return homology(extract_region(c, Column())).dimension


def _require_knot_like(c: CfkComplex) -> None:
    require_valid(c)
    if not c.generators:
        raise NotKnotLikeError("not a knot-like complex: empty")
    dim = _column_dimension(c)
    if dim != 1:
        raise NotKnotLikeError(f"not a knot-like complex: column homology has dimension {dim}")


def _scan_cap(c: CfkComplex) -> int:
    amin, amax = c.alexander_range()
    return amax - amin + 1


def tau(c: CfkComplex) -> int:
    """Least s such that C{i=0, j<=s} -> C{i=0} is nonzero on homology."""
    _require_knot_like(c)
    return _tau(c)


def _tau(c: CfkComplex) -> int:
    amin, amax = c.alexander_range()
    for s in range(amin, amax + 1):
        if not map_is_trivial(c, CappedColumn(s), Column()):
            return s
    raise KfcError("tau scan found no nontrivial inclusion")


def _epsilon(c: CfkComplex, t: int) -> int:
    f_trivial = map_is_trivial(c, Column(), Hook(t))
    g_trivial = map_is_trivial(c, MaxHook(t), Column())
    if f_trivial and g_trivial:
        raise KfcError("both F_* and G_* are trivial; input is not a knot-like complex")
    if f_trivial:
        return 1
    if g_trivial:
        return -1
    return 0


def epsilon(c: CfkComplex) -> int:
    _require_knot_like(c)
    return _epsilon(c, _tau(c))


def _a1(c: CfkComplex, t: int) -> int:
    cap = _scan_cap(c)
    for s in range(cap + 1):
        if map_is_trivial(c, Column(), TruncatedHook(t, s)):
            return s
    raise KfcError(f"a1 scan exceeded cap {cap}; inconsistent with epsilon = 1")


def _a2(c: CfkComplex, t: int, first: int) -> int | str:
    cap = _scan_cap(c)
    for s in range(1, cap + 1):
        if not map_is_trivial(c, Column(), HookWithTail(t, first, s)):
            return s
    return UNDEFINED


def _require_epsilon_one(c: CfkComplex) -> int:
    _require_knot_like(c)
    t = _tau(c)
    if _epsilon(c, t) != 1:
        raise KfcError("a1 defined only for epsilon=1")
    return t


def a1(c: CfkComplex) -> int:
    t = _require_epsilon_one(c)
    return _a1(c, t)


def a2(c: CfkComplex) -> int | str:
    """Least s >= 1 with H_{a1,s} nontrivial, or UNDEFINED."""
    t = _require_epsilon_one(c)
    return _a2(c, t, _a1(c, t))


def breadth(c: CfkComplex) -> int:
    """Largest j with nonzero homology at the lattice point (0, j)."""
    require_valid(c)
    if not c.generators:
        raise KfcError("breadth of an empty complex")
    r = edge_reduce(c)
    if not r.generators:
        raise KfcError("complex is acyclic")
    amin, amax = r.alexander_range()
    for j in range(amax, amin - 1, -1):
        if homology(extract_region(r, Point(0, j))).dimension:
            return j
    raise KfcError("no lattice point carries homology")


def epsilon_equivalent(c1: CfkComplex, c2: CfkComplex) -> bool:
    return epsilon(tensor(c1, dual(c2))) == 0


@dataclass(frozen=True)
class InvariantReport:
    tau: int
    epsilon: int
    a1: int | None
    a2: int | str | None
    breadth: int
    gamma_lower: int
    g4_lower: int
    gc_lower: int
    notes: tuple[str, ...] = field(default=())

    def line(self) -> str:
        a1 = "-" if self.a1 is None else str(self.a1)
        if self.a2 is None:
            a2 = "-"
        elif self.a2 == UNDEFINED:
            a2 = "undef"
        else:
            a2 = str(self.a2)
        return (f"tau={self.tau} epsilon={self.epsilon} a1={a1} a2={a2} "
                f"breadth={self.breadth} gamma_lb={self.gamma_lower} "
                f"g4_lb={self.g4_lower} gc_lb={self.gc_lower}")

    def pretty(self) -> str:
        rows = [("tau", self.tau), ("epsilon", self.epsilon),
                ("a1", "-" if self.a1 is None else self.a1),
                ("a2", "-" if self.a2 is None else self.a2),
                ("breadth", self.breadth),
                ("gamma lower bound", self.gamma_lower),
                ("g4 lower bound", self.g4_lower),
                ("gc lower bound", self.gc_lower)]
        width = max(len(k) for k, _ in rows)
        out = [f"{k.ljust(width)} : {v}" for k, v in rows]
        out.extend(f"note: {n}" for n in self.notes)
        return "\n".join(out)


def _refined(c: CfkComplex, t: int, eps: int):
    """(a1, a2, gamma bound, notes) following the epsilon branch."""
    if eps == 0:
        return None, None, 0, ("epsilon=0: gamma bound unavailable",)
    notes = ()
    if eps == -1:
        c = dual(c)
        t = -t
        notes = ("epsilon=-1: a1/a2 computed on the dual complex",)
    first = _a1(c, t)
    second = _a2(c, t, first)
    if second == UNDEFINED:
        return first, second, 0, notes + ("a2 undefined: gamma bound unavailable",)
    return first, second, abs(t - first - second), notes


def gamma_lower_bound(c: CfkComplex) -> int:
    """|tau - a1 - a2| when the hypotheses hold (via the dual for epsilon=-1), else 0."""
    _require_knot_like(c)
    t = _tau(c)
    return _refined(c, t, _epsilon(c, t))[2]


def report(c: CfkComplex) -> InvariantReport:
    _require_knot_like(c)
    t = _tau(c)
    eps = _epsilon(c, t)
    first, second, gamma, notes = _refined(c, t, eps)
    return InvariantReport(
        tau=t, epsilon=eps, a1=first, a2=second, breadth=breadth(c),
        gamma_lower=gamma, g4_lower=abs(t), gc_lower=max(abs(t), gamma), notes=notes)


def basis_witness(c: CfkComplex, tau_value: int, a1_value: int, a2_value: int):
    """Find x0, x1, x2 with x1 -> x0 horizontal of length a1 and x1 -> x2
    vertical of length a2, where A(x0) = tau.  Returns ids or None."""
    for x1 in c.generators:
        horizontal = [a for a in c.out_arrows[x1.id]
                      if c.vlen(a) == 0 and a.u_power == a1_value
                      and c.by_id[a.target].alexander == tau_value]
        vertical = [a for a in c.out_arrows[x1.id]
                    if a.u_power == 0 and c.vlen(a) == a2_value]
        if horizontal and vertical:
            return horizontal[0].target, x1.id, vertical[0].target
    return None
