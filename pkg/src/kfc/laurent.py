"""Integer Laurent polynomials in one variable t."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping


@dataclass(frozen=True)
class Laurent:
    # sorted (exponent, coefficient) pairs, zero coefficients dropped
    terms: tuple[tuple[int, int], ...]

    @classmethod
    def from_dict(cls, coeffs: Mapping[int, int]) -> "Laurent":
        return cls(tuple(sorted((e, c) for e, c in coeffs.items() if c)))

    @classmethod
    def from_terms(cls, pairs: Iterable[tuple[int, int]]) -> "Laurent":
        acc: dict[int, int] = {}
        for e, c in pairs:
            acc[e] = acc.get(e, 0) + c
        return cls.from_dict(acc)

    def as_dict(self) -> dict[int, int]:
        return dict(self.terms)

    def __add__(self, other: "Laurent") -> "Laurent":
        return Laurent.from_terms(self.terms + other.terms)

    def __neg__(self) -> "Laurent":
        return Laurent(tuple((e, -c) for e, c in self.terms))

    def __sub__(self, other: "Laurent") -> "Laurent":
        return self + (-other)

    def __mul__(self, other: "Laurent") -> "Laurent":
        return Laurent.from_terms((e1 + e2, c1 * c2)
                                  for e1, c1 in self.terms for e2, c2 in other.terms)

    def substitute_power(self, k: int) -> "Laurent":
        """f(t) -> f(t^k)."""
        return Laurent.from_dict({e * k: c for e, c in self.terms})

    def __call__(self, t):
        return sum(c * t ** e for e, c in self.terms)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        out = []
        for e, c in sorted(self.terms, reverse=True):
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                var = "t" if e == 1 else f"t^{e}"
                body = var if mag == 1 else f"{mag}*{var}"
            sign = "-" if c < 0 else "+"
            out.append((sign, body))
        first_sign, first = out[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, body in out[1:]:
            text += f" {sign} {body}"
        return text
