"""Command-line front end.

Subcommands:
  compute     terms of a sequence with a chosen engine, b-file format
  crosscheck  run several engines and compare term by term
  tilings     dump a tiling weight enumerator as text
  fit         guess a recurrence operator from a b-file
  verify      check an operator file against a b-file
  extend      run an operator forward from seed terms
  bench       time engines on a common range

Data goes to stdout (or the file named by --bfile / --opfile); diagnostics
go to stderr.  Exit status is 0 only when nothing mismatched or failed.
"""

import argparse
import os
import sys
import time

from . import closed_forms, inclusion_exclusion, matsuo, oracle, recurrences, tilings
from .specs import ABSOLUTE, SIGNED, SequenceSpec

CACHE_ENV = "GAPPERMS_CACHE_DIR"

ENGINES = ("oracle", "ie", "navarrete", "riordan", "robbins", "r1fast", "matsuo", "auto")


def _inapplicable(engine: str, spec: SequenceSpec):
    """Reason the engine cannot serve this spec, or None if it can."""
    if engine == "navarrete" and not (spec.r == 1 and spec.mode == SIGNED):
        return "navarrete requires r=1 and signed mode"
    if engine in ("riordan", "robbins") and not (
        spec.r == 1 and spec.s == 1 and spec.mode == ABSOLUTE
    ):
        return f"{engine} requires r=1, s=1 and absolute mode"
    if engine == "r1fast" and spec.r != 1:
        return "r1fast requires r=1"
    if engine == "matsuo" and not (spec.r == 2 and spec.s == 2):
        return "matsuo requires r=2 and s=2"
    return None


def _resolve_auto(spec: SequenceSpec) -> str:
    for engine in ("navarrete", "riordan", "r1fast", "matsuo"):
        if _inapplicable(engine, spec) is None:
            return engine
    return "ie"


def _run_engine(engine: str, spec: SequenceSpec, n_max: int) -> list:
    if engine == "oracle":
        return [oracle.brute_count(spec, n) for n in range(1, n_max + 1)]
    if engine == "ie":
        return inclusion_exclusion.sequence(spec, n_max)
    if engine == "navarrete":
        return closed_forms.navarrete_recurrence(spec.s, n_max)
    if engine == "riordan":
        return closed_forms.riordan_sequence(n_max)
    if engine == "robbins":
        return [closed_forms.robbins(n) for n in range(1, n_max + 1)]
    if engine == "r1fast":
        return closed_forms.fast_r1(spec.s, spec.mode, n_max)
    if engine == "matsuo":
        return [matsuo.fast22(n, spec.mode) for n in range(1, n_max + 1)]
    raise ValueError(f"unknown engine {engine!r}")


def _mode(value: str) -> str:
    return ABSOLUTE if value in ("abs", "absolute") else SIGNED


def _bfile_text(values: list, offset: int) -> str:
    return "".join(f"{offset + i} {v}\n" for i, v in enumerate(values))


def read_bfile(path: str) -> recurrences.TermTable:
    offset = None
    values = []
    with open(path) as fh:
        for lineno, line in enumerate(fh, start=1):
            if not line.strip():
                continue
            parts = line.split()
            if len(parts) != 2:
                raise ValueError(f"{path}:{lineno}: expected 'n value', got {line!r}")
            try:
                n, v = int(parts[0]), int(parts[1])
            except ValueError:
                raise ValueError(f"{path}:{lineno}: non-integer field in {line!r}")
            if offset is None:
                offset = n
            elif n != offset + len(values):
                raise ValueError(f"{path}:{lineno}: index {n} breaks the run")
            values.append(v)
    if offset is None:
        raise ValueError(f"{path}: no terms found")
    return recurrences.TermTable(offset, values)


def _emit(text: str, path):
    if path:
        with open(path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _cache_path(cache_dir, spec: SequenceSpec, engine: str):
    if not cache_dir:
        cache_dir = os.environ.get(CACHE_ENV)
    if not cache_dir:
        return None
    os.makedirs(cache_dir, exist_ok=True)
    name = f"r{spec.r}_s{spec.s}_{spec.mode}_{engine}.bfile"
    return os.path.join(cache_dir, name)


def cmd_compute(args) -> int:
    spec = SequenceSpec(args.r, args.s, _mode(args.mode))
    engine = args.engine
    if engine == "auto":
        engine = _resolve_auto(spec)
    reason = _inapplicable(engine, spec)
    if reason:
        print(f"error: engine {engine!r} not applicable: {reason}", file=sys.stderr)
        return 2
    cache = _cache_path(args.cache_dir, spec, engine) if args.offset == 1 else None
    values = None
    if cache and os.path.exists(cache):
        cached = read_bfile(cache)
        if len(cached.values) >= args.n and cached.offset == 1:
            values = cached.values[: args.n]
    if values is None:
        values = _run_engine(engine, spec, args.n)
        if cache:
            with open(cache, "w") as fh:
                fh.write(_bfile_text(values, 1))
    _emit(_bfile_text(values, args.offset), args.bfile)
    return 0


def cmd_crosscheck(args) -> int:
    spec = SequenceSpec(args.r, args.s, _mode(args.mode))
    engines = [e.strip() for e in args.engines.split(",") if e.strip()]
    if len(engines) < 2:
        print("error: crosscheck needs at least two engines", file=sys.stderr)
        return 2
    for engine in engines:
        if engine not in ENGINES or engine == "auto":
            print(f"error: unknown engine {engine!r}", file=sys.stderr)
            return 2
        reason = _inapplicable(engine, spec)
        if reason:
            print(f"error: engine {engine!r} not applicable: {reason}", file=sys.stderr)
            return 2
    results = {e: _run_engine(e, spec, args.n) for e in engines}
    reference = engines[0]
    for other in engines[1:]:
        for n in range(1, args.n + 1):
            a, b = results[reference][n - 1], results[other][n - 1]
            if a != b:
                print(
                    f"mismatch at n={n}: {reference}={a}, {other}={b}",
                    file=sys.stderr,
                )
                return 1
    print(f"ok: {', '.join(engines)} agree for n=1..{args.n}")
    return 0


def cmd_tilings(args) -> int:
    poly = tilings.tiling_polynomial(args.r, args.n)
    _emit(tilings.format_polynomial(poly) + "\n", args.out)
    return 0


def cmd_fit(args) -> int:
    table = read_bfile(args.bfile)
    try:
        op = recurrences.fit(table, args.order, args.degree, args.holdout)
    except recurrences.InsufficientTermsError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except recurrences.UnderdeterminedError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if op is None:
        print(
            f"no recurrence of order {args.order}, degree {args.degree} fits",
            file=sys.stderr,
        )
        return 1
    _emit(recurrences.format_operator(op, table.offset), args.opfile)
    return 0


def cmd_verify(args) -> int:
    with open(args.opfile) as fh:
        op, _ = recurrences.parse_operator(fh.read())
    table = read_bfile(args.bfile)
    failing = recurrences.verify(op, table)
    if failing is None:
        print("ok")
        return 0
    print(f"fail {failing}")
    return 1


def cmd_extend(args) -> int:
    with open(args.opfile) as fh:
        op, _ = recurrences.parse_operator(fh.read())
    seeds = read_bfile(args.bfile)
    try:
        table = recurrences.extend(op, seeds, args.n)
    except (recurrences.SingularLeadingTermError, recurrences.InexactStepError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    _emit(_bfile_text(table.values, table.offset), args.out)
    return 0


def cmd_bench(args) -> int:
    spec = SequenceSpec(args.r, args.s, _mode(args.mode))
    for engine in args.engines.split(","):
        engine = engine.strip()
        reason = _inapplicable(engine, spec)
        if reason:
            print(f"error: engine {engine!r} not applicable: {reason}", file=sys.stderr)
            return 2
        start = time.perf_counter()
        _run_engine(engine, spec, args.n)
        print(f"{engine} {time.perf_counter() - start:.3f}s")
    return 0


def _add_spec_args(p):
    p.add_argument("--r", type=int, required=True, help="position gap")
    p.add_argument("--s", type=int, required=True, help="value gap")
    p.add_argument("--mode", choices=("signed", "abs", "absolute"), default="signed")
    p.add_argument("--n", type=int, required=True, help="number of terms")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gapperms",
        description="Count permutations where entries r apart never differ by s.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="compute terms with one engine")
    _add_spec_args(p)
    p.add_argument("--engine", choices=ENGINES, default="auto")
    p.add_argument("--bfile", help="write terms to this path instead of stdout")
    p.add_argument("--offset", type=int, default=1, help="b-file index of the first term")
    p.add_argument("--cache-dir", help=f"term cache directory (default ${CACHE_ENV})")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("crosscheck", help="compare several engines term by term")
    _add_spec_args(p)
    p.add_argument("--engines", required=True, help="comma-separated engine list")
    p.set_defaults(func=cmd_crosscheck)

    p = sub.add_parser("tilings", help="dump a tiling weight enumerator")
    p.add_argument("--r", type=int, required=True, help="tile gap")
    p.add_argument("--n", type=int, required=True, help="board size")
    p.add_argument("--out", help="write to this path instead of stdout")
    p.set_defaults(func=cmd_tilings)

    p = sub.add_parser("fit", help="fit a recurrence operator to a b-file")
    p.add_argument("--bfile", required=True)
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--holdout", type=int, default=5)
    p.add_argument("--opfile", help="write the operator here instead of stdout")
    p.set_defaults(func=cmd_fit)

    p = sub.add_parser("verify", help="check an operator against a b-file")
    p.add_argument("--opfile", required=True)
    p.add_argument("--bfile", required=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("extend", help="run an operator forward from seeds")
    p.add_argument("--opfile", required=True)
    p.add_argument("--bfile", required=True, help="seed terms")
    p.add_argument("--n", type=int, required=True, help="extend up to this index")
    p.add_argument("--out", help="write terms to this path instead of stdout")
    p.set_defaults(func=cmd_extend)

    p = sub.add_parser("bench", help="time engines on a common range")
    _add_spec_args(p)
    p.add_argument("--engines", required=True, help="comma-separated engine list")
    p.set_defaults(func=cmd_bench)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except oracle.EnumerationCapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
