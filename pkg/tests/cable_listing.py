"""Independent transcription of the sixteen displayed raw box-tensor families.

Each entry is (source, target, Alexander shift), with ids "a.u1" and "b<j>.<y>"
to match the box tensor's "x.y" naming.
"""

from __future__ import annotations


def _b(j: int, y: str) -> str:
    return f"b{j}.{y}"


def raw_generators(p: int) -> set[str]:
    gens = {"a.u1", "a.u2", "a.u3"}
    gens |= {_b(j, y) for j in range(1, 2 * p - 1) for y in ("v1", "v2", "mu1", "mu2")}
    return gens


def raw_arrows(p: int) -> set[tuple[str, str, int]]:
    out = {("a.u2", "a.u3", p), ("a.u2", _b(1, "mu1"), 1), ("a.u2", _b(2 * p - 2, "v1"), 0),
           ("a.u3", _b(2 * p - 2, "mu1"), 0)}
    for j in range(1, p):
        out.add((_b(j, "v1"), _b(2 * p - j - 1, "v1"), p - j))
        out.add((_b(j, "mu1"), _b(2 * p - j - 1, "mu1"), p - j))
        out.add((_b(j, "mu2"), _b(2 * p - j - 1, "mu2"), p - j))
    for j in range(1, p - 1):
        out.add((_b(j, "v2"), _b(2 * p - j - 1, "v2"), p - j))
        out.add((_b(j, "v2"), _b(j + 1, "mu1"), 1))
    out.add((_b(p - 1, "v2"), _b(p, "v2"), 1))
    for j in range(p + 1, 2 * p - 1):
        out.add((_b(j, "v2"), _b(j - 1, "mu1"), 0))
    return out
