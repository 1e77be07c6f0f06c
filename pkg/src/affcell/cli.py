"""Command-line entry point: ``affcell analyze | gen | lr | dstat | segments | tensor``.

Exit codes: 0 success, 1 a check failed (the report is still written),
2 usage or input error.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Optional, Sequence

from .analysis import analyze
from .based_algebra import TableError, ba_dump, ba_load
from .corpus.hecke import gen_hecke_kl
from .corpus.periodic import PeriodicMatrix, d_stat, row_col_sums
from .corpus.qschur import gen_qschur
from .corpus.segments import enumerate_segments, wp_partition
from .repring import lr_coefficient, tensor_decompose_gl

OK, CHECK_FAILED, USAGE = 0, 1, 2


class InputError(Exception):
    pass


def _int_list(text: str) -> tuple[int, ...]:
    text = text.strip()
    if text in ("", "0", "()", "[]"):
        return ()
    try:
        return tuple(int(x) for x in text.replace(" ", "").split(","))
    except ValueError:
        raise InputError(f"expected comma-separated integers, got {text!r}") from None


def _emit(text: str, out: Optional[str]) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text, encoding="utf-8")


def cmd_analyze(args) -> int:
    path = Path(args.table)
    if not path.is_file():
        raise InputError(f"no such table file: {path}")
    # associativity is reported as a verdict, not a load error
    alg = ba_load(path, check_assoc=False)
    report = analyze(alg, max_exhaustive_rank=args.max_exhaustive_rank, seed=args.seed)
    text = report.render_structured() if args.format == "structured" else report.render_text()
    _emit(text, args.out)
    if args.out is not None:
        status = "all checks passed" if report.passed else f"{len(report.failures())} check(s) failed"
        print(f"{alg.name or path.name}: {status}; report written to {args.out}")
        for v in report.failures():
            print("  " + v.line())
    return OK if report.passed else CHECK_FAILED


def cmd_gen(args) -> int:
    if args.kind == "hecke":
        if args.rank is None:
            raise InputError("gen hecke needs --rank")
        alg = gen_hecke_kl(args.rank)
    else:
        if args.n is None or args.r is None:
            raise InputError("gen qschur needs --n and --r")
        alg = gen_qschur(args.n, args.r)
    _emit(ba_dump(alg), args.out)
    if args.out is not None:
        print(f"{alg.name}: rank {alg.rank} written to {args.out}")
    return OK


def cmd_lr(args) -> int:
    print(lr_coefficient(_int_list(args.lam), _int_list(args.mu), _int_list(args.nu)))
    return OK


def cmd_dstat(args) -> int:
    path = Path(args.file)
    if not path.is_file():
        raise InputError(f"no such file: {path}")
    try:
        A = PeriodicMatrix.load(path)
    except (KeyError, TypeError, json.JSONDecodeError) as exc:
        raise InputError(f"malformed periodic matrix: {exc}") from None
    print(d_stat(A))
    if args.verbose:
        r, c = row_col_sums(A)
        print(f"r(A) = {list(r)}")
        print(f"c(A) = {list(c)}")
    return OK


def cmd_segments(args) -> int:
    alphabet = [a for a in args.alphabet.split(",") if a]
    if not alphabet:
        raise InputError("alphabet must name at least one center")
    found = enumerate_segments(args.r, args.n, alphabet)
    print(f"{len(found)} multisegment(s)")
    for ms in found:
        segs = [[s.center, s.length] for s in ms]
        print(f"{json.dumps(segs)}  partition {list(wp_partition(ms))}")
    return OK


def cmd_tensor(args) -> int:
    a, b = _int_list(args.a), _int_list(args.b)
    if len(a) != len(b) or not a:
        raise InputError("both weights must have the same positive length")
    for w, m in tensor_decompose_gl(a, b):
        print(f"{m} x {list(w)}")
    return OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="affcell", description="Cells, asymptotic rings and affine cellularity of based algebras.")
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", help="run the full pipeline on a table document")
    a.add_argument("table")
    a.add_argument("--out")
    a.add_argument("--format", choices=["text", "structured"], default="text")
    a.add_argument("--seed", type=int, default=0)
    a.add_argument("--max-exhaustive-rank", type=int, default=30)
    a.set_defaults(func=cmd_analyze)

    g = sub.add_parser("gen", help="write a corpus table")
    g.add_argument("kind", choices=["hecke", "qschur"])
    g.add_argument("--rank", type=int, help="Hecke algebra of S_{rank+1}")
    g.add_argument("--n", type=int)
    g.add_argument("--r", type=int)
    g.add_argument("--out")
    g.set_defaults(func=cmd_gen)

    lr = sub.add_parser("lr", help="Littlewood-Richardson coefficient c^nu_{lambda, mu}")
    lr.add_argument("--lambda", dest="lam", required=True)
    lr.add_argument("--mu", required=True)
    lr.add_argument("--nu", required=True)
    lr.set_defaults(func=cmd_lr)

    d = sub.add_parser("dstat", help="d_A of a periodic matrix file")
    d.add_argument("file")
    d.add_argument("--verbose", action="store_true", help="also print r(A) and c(A)")
    d.set_defaults(func=cmd_dstat)

    s = sub.add_parser("segments", help="enumerate multisegments of total length r with at most n segments")
    s.add_argument("--r", type=int, required=True)
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--alphabet", required=True, help="comma-separated center labels")
    s.set_defaults(func=cmd_segments)

    t = sub.add_parser("tensor", help="decompose V(a) (x) V(b) for GL_k")
    t.add_argument("--a", required=True)
    t.add_argument("--b", required=True)
    t.set_defaults(func=cmd_tensor)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE if exc.code else OK
    try:
        return args.func(args)
    except (InputError, TableError, ValueError, OSError) as exc:
        print(f"affcell: error: {exc}", file=sys.stderr)
        return USAGE


if __name__ == "__main__":
    sys.exit(main())
