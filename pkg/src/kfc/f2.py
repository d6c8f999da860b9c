"""GF(2) linear algebra on int bitsets.

A vector over F2^n is a Python int whose bit k is the k-th coordinate.
A linear map is a list of column vectors (the images of the basis vectors).
"""

from __future__ import annotations

from typing import Iterable, List, Sequence


def bits(v: int) -> List[int]:
    """Indices of the set bits of v, ascending."""
    out = []
    while v:
        low = v & -v
        out.append(low.bit_length() - 1)
        v ^= low
    return out


class Echelon:
    """Incrementally grown basis of a subspace, keyed by leading bit.

    Every stored row carries a tag (another bitset) that is XOR-accumulated
    during reduction, so callers can recover which inserted vectors a
    reduced vector is made of.
    """

    def __init__(self) -> None:
        self.rows: dict[int, tuple[int, int]] = {}

    def __len__(self) -> int:
        return len(self.rows)

    def reduce(self, v: int, tag: int = 0) -> tuple[int, int]:
        while v:
            top = v.bit_length() - 1
            row = self.rows.get(top)
            if row is None:
                break
            v ^= row[0]
            tag ^= row[1]
        return v, tag

    def add(self, v: int, tag: int = 0) -> bool:
        """Insert v; return False if it was already in the span."""
        v, tag = self.reduce(v, tag)
        if not v:
            return False
        self.rows[v.bit_length() - 1] = (v, tag)
        return True

    def contains(self, v: int) -> bool:
        return self.reduce(v)[0] == 0


def rank(vectors: Iterable[int]) -> int:
    ech = Echelon()
    for v in vectors:
        ech.add(v)
    return len(ech)


def kernel(columns: Sequence[int]) -> List[int]:
    """Basis of the kernel of the map whose j-th column is columns[j]."""
    ech = Echelon()
    out = []
    for j, col in enumerate(columns):
        residue, combo = ech.reduce(col, 1 << j)
        if residue:
            ech.rows[residue.bit_length() - 1] = (residue, combo)
        else:
            out.append(combo)
    return out


def apply(columns: Sequence[int], v: int) -> int:
    out = 0
    for j in bits(v):
        out ^= columns[j]
    return out


def compose(outer: Sequence[int], inner: Sequence[int]) -> List[int]:
    """Columns of outer∘inner."""
    return [apply(outer, col) for col in inner]
