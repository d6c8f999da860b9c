"""Line-oriented text formats for CFK complexes, hat complexes and type D structures.

    complex <name>
    gen <id> M=<int> A=<int>          # hat files also allow M=? A=?
    d <src> -> <tgt> U^<n>            # CFK arrow: term U^n·tgt in ∂src
    d <src> -> <tgt> [<s>]            # hat arrow: Alexander drop s

    typed <name>                      # optional header
    gen <id> idem=<0|1>
    delta <src> -> <tgt> D<index>     # index in 1, 2, 3, 12, 23, 123
"""

from __future__ import annotations

import re
from pathlib import Path

from kfc.bordered import CHORDS, TypeD
from kfc.complex import Arrow, CfkComplex, Generator
from kfc.errors import KfcError, ParseError
from kfc.hat import HatArrow, HatComplex, HatGenerator

_TOKEN = r"([^\s#]+)"
_COMPLEX = re.compile(r"complex\s+(\S.*)$")
_GEN = re.compile(rf"gen\s+{_TOKEN}\s+M=(-?\d+|\?)\s+A=(-?\d+|\?)$")
_CFK_ARROW = re.compile(rf"d\s+{_TOKEN}\s+->\s+{_TOKEN}\s+U\^(\d+)$")
_HAT_ARROW = re.compile(rf"d\s+{_TOKEN}\s+->\s+{_TOKEN}\s+\[(\d+)\]$")
_TYPED = re.compile(r"typed\s+(\S.*)$")
_D_GEN = re.compile(rf"gen\s+{_TOKEN}\s+idem=([01])$")
_DELTA = re.compile(rf"delta\s+{_TOKEN}\s+->\s+{_TOKEN}\s+D(\d+)$")


def _lines(text: str):
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield number, line


def _read_graded(text: str, hat: bool):
    name = None
    gens: dict[str, tuple] = {}
    arrows: list[tuple] = []
    seen_arrows: set = set()
    arrow_re = _HAT_ARROW if hat else _CFK_ARROW
    for number, line in _lines(text):
        if m := _COMPLEX.match(line):
            if name is not None:
                raise ParseError("only one complex per file", number)
            name = m.group(1).strip()
            continue
        if name is None:
            raise ParseError("expected 'complex <name>' header", number)
        if m := _GEN.match(line):
            gid, ms, as_ = m.groups()
            if gid in gens:
                raise ParseError(f"duplicate generator id {gid!r}", number)
            if not hat and "?" in (ms, as_):
                raise ParseError("relative-only gradings are not allowed in CFK files", number)
            gens[gid] = (None if ms == "?" else int(ms), None if as_ == "?" else int(as_))
            continue
        if m := arrow_re.match(line):
            src, tgt, w = m.group(1), m.group(2), int(m.group(3))
            for end in (src, tgt):
                if end not in gens:
                    raise ParseError(f"dangling arrow endpoint {end!r}", number)
            key = (src, tgt) if hat else (src, tgt, w)
            if key in seen_arrows:
                raise ParseError(f"duplicate arrow {src} -> {tgt}", number)
            seen_arrows.add(key)
            arrows.append((src, tgt, w))
            continue
        raise ParseError(f"malformed line: {line!r}", number)
    if name is None:
        raise ParseError("missing 'complex <name>' header")
    return name, gens, arrows


def parse_cfk(text: str) -> CfkComplex:
    name, gens, arrows = _read_graded(text, hat=False)
    return CfkComplex(name, [Generator(g, m, a) for g, (m, a) in gens.items()],
                      [Arrow(*a) for a in arrows])


def parse_hat(text: str) -> HatComplex:
    name, gens, arrows = _read_graded(text, hat=True)
    return HatComplex(name, [HatGenerator(g, m, a) for g, (m, a) in gens.items()],
                      [HatArrow(*a) for a in arrows])


def serialize_cfk(c: CfkComplex) -> str:
    out = [f"complex {c.name}"]
    for g in sorted(c.generators, key=lambda g: g.id):
        out.append(f"gen {g.id} M={g.maslov} A={g.alexander}")
    for a in c.arrows:
        out.append(f"d {a.source} -> {a.target} U^{a.u_power}")
    return "\n".join(out) + "\n"


def serialize_hat(h: HatComplex) -> str:
    def grade(v):
        return "?" if v is None else str(v)

    out = [f"complex {h.name}"]
    for g in sorted(h.generators, key=lambda g: g.id):
        out.append(f"gen {g.id} M={grade(g.maslov)} A={grade(g.alexander)}")
    for a in h.arrows:
        out.append(f"d {a.source} -> {a.target} [{a.shift}]")
    return "\n".join(out) + "\n"


def parse_typed(text: str) -> TypeD:
    name = "D"
    idems: dict[str, int] = {}
    arrows = []
    for number, line in _lines(text):
        if m := _TYPED.match(line):
            name = m.group(1).strip()
        elif m := _D_GEN.match(line):
            if m.group(1) in idems:
                raise ParseError(f"duplicate generator id {m.group(1)!r}", number)
            idems[m.group(1)] = int(m.group(2))
        elif m := _DELTA.match(line):
            src, tgt, lab = m.groups()
            if lab not in CHORDS:
                raise ParseError(f"unknown coefficient D{lab}", number)
            for end in (src, tgt):
                if end not in idems:
                    raise ParseError(f"dangling arrow endpoint {end!r}", number)
            arrows.append((src, tgt, lab))
        else:
            raise ParseError(f"malformed line: {line!r}", number)
    return TypeD(name, tuple(idems.items()), tuple(arrows))


def serialize_typed(d: TypeD) -> str:
    out = [f"typed {d.name}"]
    out += [f"gen {g} idem={i}" for g, i in d.idempotents]
    out += [f"delta {s} -> {t} D{lab}" for s, t, lab in d.arrows]
    return "\n".join(out) + "\n"


def sniff_kind(text: str, path: str | Path | None = None) -> str:
    """'cfk' or 'hat', from the file suffix when present, else from arrow syntax."""
    if path is not None:
        suffix = Path(path).suffix.lower()
        if suffix in (".cfk", ".hat"):
            return suffix[1:]
    for _, line in _lines(text):
        if _HAT_ARROW.match(line) or (_GEN.match(line) and "?" in line):
            return "hat"
        if _CFK_ARROW.match(line):
            return "cfk"
    return "cfk"


def read_complex(path: str | Path) -> CfkComplex | HatComplex:
    text = Path(path).read_text(encoding="utf-8")
    kind = sniff_kind(text, path)
    try:
        return parse_hat(text) if kind == "hat" else parse_cfk(text)
    except KfcError:
        raise
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


def serialize(c: CfkComplex | HatComplex) -> str:
    return serialize_hat(c) if isinstance(c, HatComplex) else serialize_cfk(c)
