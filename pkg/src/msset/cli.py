"""Command-line interface: ``mss <command> ...``.

Exit status is 0 on pass, 1 on fail and 2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import sys

from .constructions import LoopSpace, StandardSpec, join, standard, suspend
from .core import CapExceeded, ComplexError, PointedComplex, hom_enumerate, validate
from .generators import cocycle_nerve, nerve_of_monoid
from .homotopy import NoFiller, tau, verify_loop_theorem
from .io import ParseError, parse_complex, read_complex, read_monoid, serialize_complex
from .lifting import check_complicial

PASS, FAIL, USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _emit(X, path: str | None) -> None:
    text = serialize_complex(X)
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _read(path: str):
    try:
        return read_complex(path)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    except ParseError as exc:
        raise UsageError(f"{path}: {exc}") from None


def _pointed(path: str) -> PointedComplex:
    X = _read(path)
    if not isinstance(X, PointedComplex):
        raise UsageError(f"{path} has no base point")
    return X


def cmd_validate(args) -> int:
    try:
        with open(args.file, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {args.file}: {exc.strerror}") from None
    try:
        X = parse_complex(text)
    except ParseError as exc:
        print(f"invalid: {exc}")
        for d in exc.diagnostics[1:]:
            print(f"  {d}")
        return FAIL
    problems = validate(X)
    if problems:
        for p in problems:
            print(p)
        return FAIL
    C = X.complex if isinstance(X, PointedComplex) else X
    print(f"valid: cells per dimension {C.counts()}, {len(C.marked)} marked, dim {C.dim_bound}")
    return PASS


def cmd_standard(args) -> int:
    try:
        spec = StandardSpec.parse(args.spec)
        X = standard(spec)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    _emit(X, args.output)
    return PASS


def cmd_join(args) -> int:
    A, B = _read(args.a), _read(args.b)
    A = A.complex if isinstance(A, PointedComplex) else A
    B = B.complex if isinstance(B, PointedComplex) else B
    _emit(join(A, B), args.output)
    return PASS


def cmd_suspend(args) -> int:
    _emit(suspend(_pointed(args.file)), args.output)
    return PASS


def cmd_loop(args) -> int:
    Z = _pointed(args.file)
    if Z.complex.dim_bound <= 0:
        print("warning: loop space of a 0-truncated complex is a point", file=sys.stderr)
        from .constructions import pointed_point

        _emit(pointed_point(), args.output)
    else:
        _emit(LoopSpace(Z).pointed, args.output)
    return PASS


def cmd_check(args) -> int:
    X = _read(args.file)
    try:
        report = check_complicial(X, level=args.trivial, bound=args.bound, cap=args.cap, workers=args.workers)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    except CapExceeded as exc:
        print(f"cap exceeded: {exc}")
        return FAIL
    print(report.format())
    return PASS if report.passed else FAIL


def cmd_tau(args) -> int:
    X = _pointed(args.file)
    try:
        T = tau(X, args.m, args.exhaustive)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    except NoFiller as exc:
        print(f"no filler: {exc}")
        return FAIL
    print(T.format())
    return PASS if T.product_well_defined is not False else FAIL


def cmd_verify_loop(args) -> int:
    X = _pointed(args.file)
    try:
        report = verify_loop_theorem(X, args.m, args.exhaustive)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    except NoFiller as exc:
        print(f"no filler: {exc}")
        return FAIL
    print(report.format())
    return PASS if report.passed else FAIL


def cmd_hom(args) -> int:
    A, B = _read(args.a), _read(args.b)
    if args.pointed:
        if not (isinstance(A, PointedComplex) and isinstance(B, PointedComplex)):
            raise UsageError("--pointed needs two pointed complexes")
    else:
        A = A.complex if isinstance(A, PointedComplex) else A
        B = B.complex if isinstance(B, PointedComplex) else B
    try:
        maps = hom_enumerate(A, B, cap=args.cap)
    except CapExceeded as exc:
        print(f"cap exceeded: {exc}")
        return FAIL
    print(f"maps: {len(maps)}")
    if args.list:
        for f in maps:
            print(f.describe())
    return PASS


def cmd_gen(args) -> int:
    try:
        M = read_monoid(args.monoid)
    except OSError as exc:
        raise UsageError(f"cannot read {args.monoid}: {exc.strerror}") from None
    except ParseError as exc:
        raise UsageError(f"{args.monoid}: {exc}") from None
    try:
        if args.kind == "nerve":
            X = nerve_of_monoid(M, args.dim, mark_all_1=args.mark_all_1)
        else:
            X = cocycle_nerve(M, args.dim)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    _emit(X, args.output)
    return PASS


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="mss", description="Finite simplicial sets with marking.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("validate", help="check a complex document")
    s.add_argument("file")
    s.set_defaults(func=cmd_validate)

    s = sub.add_parser("standard", help="write a standard object")
    s.add_argument("spec", help="delta:N, delta-t:N, complicial:K:N, horn:K:N, horn-prime:K:N, "
                   "complicial-prime:K:N, complicial-dprime:K:N, delta3eq, delta3sharp, sphere:N")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_standard)

    s = sub.add_parser("join", help="join of two complexes")
    s.add_argument("a")
    s.add_argument("b")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_join)

    for name, func in (("suspend", cmd_suspend), ("loop", cmd_loop)):
        s = sub.add_parser(name, help=f"{name} a pointed complex")
        s.add_argument("file")
        s.add_argument("-o", "--output")
        s.set_defaults(func=func)

    s = sub.add_parser("check", help="bounded complicial lifting check")
    s.add_argument("file")
    s.add_argument("--trivial", type=int, default=None, metavar="N")
    s.add_argument("--bound", type=int, required=True)
    s.add_argument("--cap", type=int, default=100_000)
    s.add_argument("--workers", type=int, default=1)
    s.set_defaults(func=cmd_check)

    s = sub.add_parser("tau", help="homotopy monoid at level M")
    s.add_argument("file")
    s.add_argument("--m", type=int, required=True)
    s.add_argument("--exhaustive", action="store_true")
    s.set_defaults(func=cmd_tau)

    s = sub.add_parser("verify-loop", help="compare tau_{M+1}(X) with tau_M(loop X)")
    s.add_argument("file")
    s.add_argument("--m", type=int, required=True)
    s.add_argument("--exhaustive", action="store_true")
    s.set_defaults(func=cmd_verify_loop)

    s = sub.add_parser("hom", help="enumerate maps A -> B")
    s.add_argument("a")
    s.add_argument("b")
    s.add_argument("--pointed", action="store_true")
    s.add_argument("--cap", type=int, default=100_000)
    s.add_argument("--list", action="store_true")
    s.set_defaults(func=cmd_hom)

    s = sub.add_parser("gen", help="generate a nerve or cocycle nerve")
    s.add_argument("kind", choices=("nerve", "cocycle"))
    s.add_argument("--monoid", required=True)
    s.add_argument("--dim", type=int, required=True)
    s.add_argument("--mark-all-1", action="store_true", help="mark every edge of a nerve")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_gen)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"mss: {exc}", file=sys.stderr)
        return USAGE
    except ComplexError as exc:
        print(f"mss: {exc}", file=sys.stderr)
        return USAGE


if __name__ == "__main__":
    sys.exit(main())
