"""Edge reduction: cancel filtration-preserving arrows until none remain."""

from __future__ import annotations

from typing import Callable, TypeVar

from kfc.complex import Arrow, CfkComplex, require_valid
from kfc.errors import KfcError
from kfc.hat import HatArrow, HatComplex, require_valid_hat

T = TypeVar("T", CfkComplex, HatComplex)


def _cancel_all(order: list[str], weights: dict[tuple[str, str], int],
                eligible: Callable[[str, str, int], bool]) -> tuple[list[str], dict[tuple[str, str], int]]:
    alive = list(order)
    weights = dict(weights)
    while True:
        candidates = [pair for pair, w in weights.items() if eligible(pair[0], pair[1], w)]
        if not candidates:
            return alive, weights
        xi, xj = min(candidates)
        preds = [(k, w) for (k, t), w in weights.items() if t == xj and k != xi]
        succs = [(l, w) for (s, l), w in weights.items() if s == xi and l != xj]
        for k, a in preds:
            for l, b in succs:
                key = (k, l)
                if key in weights:
                    if weights[key] != a + b:
                        raise KfcError(f"cancelling {xi} -> {xj}: arrow {k} -> {l} has weight "
                                       f"{weights[key]}, composite has {a + b}")
                    del weights[key]
                else:
                    weights[key] = a + b
        weights = {pair: w for pair, w in weights.items()
                   if xi not in pair and xj not in pair}
        alive = [x for x in alive if x != xi and x != xj]


def edge_reduce(c: T) -> T:
    """Iteratively cancel the lexicographically least filtration-preserving arrow.

    Cancelling x_i -> x_j deletes both generators and, for every x_k -> x_j
    (weight a) and x_i -> x_l (weight b), toggles x_k -> x_l with weight a+b.
    The weight is the U-power for CFK complexes and the Alexander shift for
    hat complexes.
    """
    if isinstance(c, CfkComplex):
        require_valid(c)
        alex = {g.id: g.alexander for g in c.generators}
        weights = {(a.source, a.target): a.u_power for a in c.arrows}
        if len(weights) != len(c.arrows):
            raise KfcError("parallel arrows with different U-powers")
        alive, weights = _cancel_all(
            [g.id for g in c.generators], weights,
            lambda s, t, n: n == 0 and alex[s] == alex[t])
        keep = set(alive)
        return CfkComplex(c.name, [g for g in c.generators if g.id in keep],
                          [Arrow(s, t, n) for (s, t), n in weights.items()])
    if isinstance(c, HatComplex):
        require_valid_hat(c)
        weights = {(a.source, a.target): a.shift for a in c.arrows}
        alive, weights = _cancel_all([g.id for g in c.generators], weights,
                                     lambda s, t, w: w == 0)
        keep = set(alive)
        return HatComplex(c.name, [g for g in c.generators if g.id in keep],
                          [HatArrow(s, t, w) for (s, t), w in weights.items()])
    raise TypeError(f"cannot reduce {type(c).__name__}")


def is_reduced(c: CfkComplex | HatComplex) -> bool:
    if isinstance(c, CfkComplex):
        return not any(a.u_power == 0 and c.vlen(a) == 0 for a in c.arrows)
    return not any(a.shift == 0 for a in c.arrows)
