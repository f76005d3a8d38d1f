"""
Command-line interface.

Exit status: 0 on success, 1 on a mathematical negative (not a
quasi-copula, not a copula, a failed check), 2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import contextlib
import io
import sys
from typing import IO, Sequence

from .core import (
    Classification, DiscopulaError, NotCopulaError, NotQuasiCopulaError, QuasiCopula,
    StructuralError, classify, format_qcm, frechet_lower, frechet_upper, parse_qcm,
    parse_qcm_rows, positions,
)
from .enumeration import DEFAULT_MAX_N, ResourceLimitError, enumerate_copulas, enumerate_quasi_copulas
from .irreducible import bigrassmannian_param_tuples, decompose, format_decomposition
from .matrixrep import (
    InvalidSignMatrixError, bigrassmannian_from_params, format_asm, format_perm,
    from_permutation, from_sign_matrix, parse_asm, parse_perm, to_permutation, to_sign_matrix,
)
from .order import HASSE_DEFAULT_MAX_N, format_dot, hasse, join, meet
from .stats import format_stats, stats_report
from .verify import MAX_VERIFY_N, SUITES, all_passed, format_table, run_suites

FORMATS = ("qcm", "asm", "perm")


class _Negative(Exception):
    """A mathematical negative verdict: exit status 1."""


def _build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="discopula",
                                description="Irreducible discrete (quasi-)copulas.")
    sub = p.add_subparsers(dest="verb", required=True, metavar="VERB")

    s = sub.add_parser("validate", help="classify a qcm matrix")
    s.add_argument("file")

    s = sub.add_parser("convert", help="convert between qcm, asm and perm")
    s.add_argument("--from", dest="src", choices=FORMATS, required=True)
    s.add_argument("--to", dest="dst", choices=FORMATS, required=True)
    s.add_argument("file")

    for verb in ("meet", "join"):
        s = sub.add_parser(verb, help=f"entrywise {verb} of two qcm matrices")
        s.add_argument("a")
        s.add_argument("b")

    s = sub.add_parser("decompose", help="meet-irreducible antichain decomposition")
    s.add_argument("file")

    s = sub.add_parser("mi-list", help="list all meet-irreducibles of order n")
    s.add_argument("--n", type=int, required=True)

    s = sub.add_parser("stats", help="rank statistics of a qcm matrix")
    s.add_argument("file")

    s = sub.add_parser("hasse", help="Hasse diagram of the lattice of order n")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--format", choices=("dot",), default="dot")
    s.add_argument("--allow-large", action="store_true",
                   help=f"allow n > {HASSE_DEFAULT_MAX_N}")

    s = sub.add_parser("frechet", help="Frechet-Hoeffding bound of order n")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--bound", choices=("upper", "lower"), required=True)

    s = sub.add_parser("enumerate", help="all quasi-copulas (or copulas) of order n")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--copulas", action="store_true", help="copulas only")
    s.add_argument("--limit", type=int, default=None,
                   help=f"largest n allowed (default {DEFAULT_MAX_N})")
    s.add_argument("--parallel", action="store_true")

    s = sub.add_parser("verify", help="run theorem-check suites")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--suite", choices=("all", *SUITES), default="all")
    s.add_argument("--parallel", action="store_true")
    return p


def _read(path: str, stdin: IO) -> str:
    if path == "-":
        data = stdin.read()
        return data.decode() if isinstance(data, bytes) else data
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _fmt_positions(ps) -> str:
    return " ".join(f"({i},{j})" for i, j in sorted(ps)) or "none"


def _validate(args, stdin, out):
    rows = parse_qcm_rows(_read(args.file, stdin))
    if not rows:
        raise StructuralError("empty matrix")
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise StructuralError(f"matrix is not square: row lengths {[len(r) for r in rows]}")
    grid = [[0] * (n + 1)] + [[0] + r for r in rows]
    verdict = classify(grid)
    out.write(f"{verdict}\n")
    if verdict is Classification.NOT_QUASI_COPULA:
        raise _Negative()
    ps = positions(QuasiCopula.from_interior(rows))
    out.write(f"positive: {_fmt_positions(ps.positive)}\n")
    out.write(f"negative: {_fmt_positions(ps.negative)}\n")


def _load(fmt: str, text: str):
    if fmt == "qcm":
        return parse_qcm(text)
    if fmt == "asm":
        return from_sign_matrix(parse_asm(text))
    return from_permutation(parse_perm(text))


def _convert(args, stdin, out):
    q = _load(args.src, _read(args.file, stdin))
    if args.dst == "qcm":
        out.write(format_qcm(q))
    elif args.dst == "asm":
        out.write(format_asm(to_sign_matrix(q)))
    else:
        out.write(format_perm(to_permutation(q)))


def _lattice_op(args, stdin, out):
    a = parse_qcm(_read(args.a, stdin))
    b = parse_qcm(_read(args.b, stdin))
    out.write(format_qcm((meet if args.verb == "meet" else join)(a, b)))


def _decompose(args, stdin, out):
    out.write(format_decomposition(decompose(parse_qcm(_read(args.file, stdin)))))


def _mi_list(args, stdin, out):
    if args.n < 1:
        raise StructuralError("n must be positive")
    blocks = []
    for p in bigrassmannian_param_tuples(args.n) if args.n > 1 else []:
        w = bigrassmannian_from_params(p)
        blocks.append(f"# w = {w}  (i1,i2,i3,i4) = ({','.join(map(str, p))})\n"
                      + format_qcm(from_permutation(w)))
    out.write("\n".join(blocks))


def _stats(args, stdin, out):
    out.write(format_stats(stats_report(parse_qcm(_read(args.file, stdin)))))


def _hasse(args, stdin, out):
    bound = max(args.n, HASSE_DEFAULT_MAX_N) if args.allow_large else HASSE_DEFAULT_MAX_N
    out.write(format_dot(hasse(args.n, max_n=bound)))


def _frechet(args, stdin, out):
    out.write(format_qcm((frechet_upper if args.bound == "upper" else frechet_lower)(args.n)))


def _enumerate(args, stdin, out):
    if args.copulas:
        stream = enumerate_copulas(args.n, **({"max_n": args.limit} if args.limit else {}))
    else:
        stream = enumerate_quasi_copulas(args.n, parallel=args.parallel,
                                         max_n=args.limit or DEFAULT_MAX_N)
    out.write("\n".join(format_qcm(q) for q in stream))


def _verify(args, stdin, out):
    if not 1 <= args.n <= MAX_VERIFY_N:
        raise ResourceLimitError(f"verify supports 1 <= n <= {MAX_VERIFY_N}, got {args.n}")
    names = None if args.suite == "all" else [args.suite]
    checks = run_suites(args.n, names, parallel=args.parallel)
    out.write(format_table(checks))
    if not all_passed(checks):
        raise _Negative()


_HANDLERS = {
    "validate": _validate, "convert": _convert, "meet": _lattice_op, "join": _lattice_op,
    "decompose": _decompose, "mi-list": _mi_list, "stats": _stats, "hasse": _hasse,
    "frechet": _frechet, "enumerate": _enumerate, "verify": _verify,
}


def run(argv: Sequence[str], stdin: IO | None = None) -> tuple[int, str, str]:
    """Run one command; returns ``(exit_status, stdout, stderr)``."""
    stdin = sys.stdin if stdin is None else stdin
    out, err = io.StringIO(), io.StringIO()
    parser = _build_parser()
    try:
        with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
            args = parser.parse_args(list(argv))
    except SystemExit as exc:
        return (exc.code if isinstance(exc.code, int) else 2), out.getvalue(), err.getvalue()
    try:
        _HANDLERS[args.verb](args, stdin, out)
    except _Negative:
        return 1, out.getvalue(), err.getvalue()
    except (NotQuasiCopulaError, NotCopulaError, InvalidSignMatrixError) as exc:
        err.write(f"discopula {args.verb}: {exc}\n")
        return 1, out.getvalue(), err.getvalue()
    except (StructuralError, ResourceLimitError, DiscopulaError, OSError) as exc:
        err.write(f"discopula {args.verb}: {exc}\n")
        return 2, out.getvalue(), err.getvalue()
    return 0, out.getvalue(), err.getvalue()


def main(argv: Sequence[str] | None = None) -> int:
    status, out, err = run(sys.argv[1:] if argv is None else argv, sys.stdin)
    sys.stdout.write(out)
    sys.stderr.write(err)
    return status


if __name__ == "__main__":
    sys.exit(main())
