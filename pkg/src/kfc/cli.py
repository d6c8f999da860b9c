"""kfc command-line front-end.  Exit codes: 0 success, 1 domain error, 2 usage error."""

from __future__ import annotations

import argparse
import sys
from concurrent.futures import ProcessPoolExecutor
from functools import partial
from pathlib import Path

from kfc import invariants
from kfc.bordered import hat_cable, raw_cable
from kfc.complex import CfkComplex, dual, tensor, validate
from kfc.errors import KfcError, ValidationError
from kfc.formats import read_complex, serialize
from kfc.hat import HatComplex, validate_hat
from kfc.models import kp_pipeline, table1_rows
from kfc.reduction import edge_reduce
from kfc.render import FORMATS, RenderSpec, render


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(2)


def _read_cfk(path: str) -> CfkComplex:
    c = read_complex(path)
    if not isinstance(c, CfkComplex):
        raise KfcError(f"{path}: expected a CFK complex, got a hat complex")
    return c


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _p_range(args, parser) -> list[int]:
    if args.sweep:
        try:
            lo, hi = (int(v) for v in args.sweep.split(".."))
        except ValueError:
            parser.error(f"--sweep expects a..b, got {args.sweep!r}")
        if lo > hi:
            parser.error("--sweep range is empty")
        ps = list(range(lo, hi + 1))
    elif args.p is not None:
        ps = [args.p]
    else:
        parser.error("one of --p or --sweep is required")
    if min(ps) < 2:
        parser.error("p must be >= 2")
    return ps


def _ordered_map(fn, ps: list[int]) -> list:
    # Results come back in p order whatever the worker scheduling.
    if len(ps) == 1:
        return [fn(ps[0])]
    with ProcessPoolExecutor() as pool:
        return list(pool.map(fn, ps))


def cmd_validate(args, parser) -> int:
    c = read_complex(args.file)
    problems = validate_hat(c) if isinstance(c, HatComplex) else validate(c)
    if problems:
        raise ValidationError(problems)
    print(f"ok: {c.name} ({len(c.generators)} generators, {len(c.arrows)} arrows)")
    return 0


def cmd_invariants(args, parser) -> int:
    c = _read_cfk(args.file)
    rep = invariants.report(c)
    print(rep.pretty() if args.pretty else rep.line())
    if args.figure:
        from kfc.figures import plot_complex
        plot_complex(c, args.figure, tau=rep.tau)
    return 0


def cmd_tensor(args, parser) -> int:
    _emit(serialize(tensor(_read_cfk(args.file1), _read_cfk(args.file2))), args.output)
    return 0


def cmd_dual(args, parser) -> int:
    _emit(serialize(dual(_read_cfk(args.file))), args.output)
    return 0


def cmd_reduce(args, parser) -> int:
    _emit(serialize(edge_reduce(read_complex(args.file))), args.output)
    return 0


def _cable_text(p: int, stage: str) -> str:
    return serialize(raw_cable(p) if stage == "raw" else hat_cable(p))


def cmd_cable(args, parser) -> int:
    ps = _p_range(args, parser)
    texts = _ordered_map(partial(_cable_text, stage=args.stage), ps)
    _emit("".join(texts), args.output)
    if args.figure:
        from kfc.figures import plot_hat_grid
        if args.stage == "raw":
            raise KfcError("--figure needs absolute gradings; use --stage reduced")
        plot_hat_grid([hat_cable(p) for p in ps], args.figure)
    return 0


def table_text(p: int) -> str:
    h = hat_cable(p)
    rows = table1_rows(p)
    width = max(len("generator"), *(len(r[0]) for r in rows)) + 2
    out = [f"table p={p}: {len(h.generators)} generators (6p-5 = {6 * p - 5})",
           f"{'generator'.ljust(width)}{'(M, A)'.ljust(12)}{'M+2p-2A'.ljust(9)}index"]
    for gid, label, index, expected in rows:
        g = h.by_id[gid]
        if (g.maslov, g.alexander) != expected:
            raise KfcError(f"{gid}: computed ({g.maslov}, {g.alexander}) differs from table {expected}")
        cell = f"({g.maslov}, {g.alexander})"
        value = g.maslov + 2 * p - 2 * g.alexander
        out.append(f"{gid.ljust(width)}{cell.ljust(12)}{str(value).ljust(9)}{label}"
                   + (f" {index}" if index else ""))
    return "\n".join(line.rstrip() for line in out) + "\n"


def cmd_table(args, parser) -> int:
    ps = _p_range(args, parser)
    sys.stdout.write("\n".join(_ordered_map(table_text, ps)))
    return 0


def _kp_text(p: int) -> str:
    return kp_pipeline(p).render() + "\n"


def cmd_kp(args, parser) -> int:
    ps = _p_range(args, parser)
    sys.stdout.write("\n".join(_ordered_map(_kp_text, ps)))
    if args.figure:
        from kfc.figures import plot_hat_grid
        plot_hat_grid([hat_cable(p) for p in ps], args.figure)
    return 0


def cmd_render(args, parser) -> int:
    c = read_complex(args.file)
    overlay = None
    if args.overlay:
        if not isinstance(c, CfkComplex):
            raise KfcError("--overlay needs a CFK complex")
        overlay = invariants.tau(c)
    spec = RenderSpec(args.format, gradings=args.labels, arrows=not args.no_arrows, overlay_tau=overlay)
    _emit(render(c, spec), args.output)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="kfc", description="Knot Floer concordance invariants and the (p,1)-cable computation.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, fn, help_):
        p = sub.add_parser(name, help=help_)
        p.set_defaults(func=fn, subparser=p)
        return p

    p = add("validate", cmd_validate, "check gradings, filtration and d^2 = 0")
    p.add_argument("file")
    p = add("invariants", cmd_invariants, "print tau, epsilon, a1, a2, breadth and genus bounds")
    p.add_argument("file")
    p.add_argument("--pretty", action="store_true", help="aligned key/value table")
    p.add_argument("--figure", metavar="PATH", help="also plot the complex with the tau hook")
    p = add("tensor", cmd_tensor, "tensor product of two CFK complexes")
    p.add_argument("file1")
    p.add_argument("file2")
    p.add_argument("-o", "--output")
    p = add("dual", cmd_dual, "dual complex (mirror knot)")
    p.add_argument("file")
    p.add_argument("-o", "--output")
    p = add("reduce", cmd_reduce, "edge-reduce a CFK or hat complex")
    p.add_argument("file")
    p.add_argument("-o", "--output")
    for name, fn, help_ in (("cable", cmd_cable, "hat complex of the (p,1)-cable of the trefoil"),
                            ("table", cmd_table, "generator gradings of the reduced cable complex"),
                            ("kp", cmd_kp, "concordance genus report for D_{p,1} # -D_{p-1,1}")):
        p = add(name, fn, help_)
        p.add_argument("--p", type=int)
        p.add_argument("--sweep", metavar="A..B")
        if name == "cable":
            p.add_argument("--stage", choices=("raw", "reduced"), default="reduced")
            p.add_argument("-o", "--output")
        if name != "table":
            p.add_argument("--figure", metavar="PATH", help="plot the reduced complexes in the (A, M) plane")
    p = add("render", cmd_render, "draw a complex in the (i, j)-plane")
    p.add_argument("file")
    p.add_argument("--format", choices=FORMATS, default="text")
    p.add_argument("--labels", action="store_true", help="show Maslov gradings")
    p.add_argument("--overlay", action="store_true", help="shade the hook at j = tau")
    p.add_argument("--no-arrows", action="store_true")
    p.add_argument("-o", "--output")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, args.subparser)
    except ValidationError as exc:
        for v in exc.violations:
            print(f"violation: {v}", file=sys.stderr)
        return 1
    except KfcError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
