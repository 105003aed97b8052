"""Command-line front end.

    brahmagupta unit D
    brahmagupta orbits D k
    brahmagupta seq D k --orbit I --variant t1 -N 100 [--unit-power P]
    brahmagupta enumerate D k -N 100 [--include-seeds]
    brahmagupta benford D k -N 100 -m 1 [--orbit I --variant t1] [--component x|y]
    brahmagupta benford --from-file terms.csv -m 2 --format json
    brahmagupta roots-check D [--unit-power P | --unit "x+y*sqrt(D)"]

Exit status is 0 on success, 1 on a domain error (square radicand, empty
norm class, ...) and 2 on a usage error.
"""

from __future__ import annotations

import argparse
import contextlib
import csv
import io
import json
import sys
from collections.abc import Iterator, Sequence
from typing import TextIO

from .benford import BenfordReport, benford_report
from .errors import BrahmaguptaError, EmptyNormClass
from .norm_class import orbit_partition, search_bounds
from .orbit_seq import (
    SequenceSpec,
    Variant,
    check_characteristic_roots,
    enumerate_norm_class,
    generate,
)
from .pell_unit import cf_sqrt, fundamental_unit
from .quadint import QuadInt, parse_quadint


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _digits(text: str) -> int:
    value = int(text)
    if not 1 <= value <= 3:
        raise argparse.ArgumentTypeError("pattern length must be 1, 2 or 3")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="brahmagupta", description=__doc__.split("\n\n")[0])
    parser.add_argument("-o", "--output", help="write to this file instead of stdout")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("unit", help="fundamental unit and continued fraction of sqrt(D)")
    p.add_argument("d", type=int)

    p = sub.add_parser("orbits", help="orbit fundamentals of x^2 - D y^2 = k")
    p.add_argument("d", type=int)
    p.add_argument("k", type=int)

    def seq_options(p: argparse.ArgumentParser) -> None:
        p.add_argument("--orbit", type=int, default=0, help="orbit index in the partition")
        p.add_argument("--variant", choices=[v.value for v in Variant], default="t1")
        p.add_argument("--unit-power", type=_positive, default=1, help="use the fundamental unit to this power")

    p = sub.add_parser("seq", help="one canonical orbit sequence as CSV n,x,y")
    p.add_argument("d", type=int)
    p.add_argument("k", type=int)
    p.add_argument("-N", dest="n", type=_positive, required=True)
    p.add_argument("--include-seeds", action="store_true", help="also emit the n=0 term")
    seq_options(p)

    p = sub.add_parser("enumerate", help="interleaved norm class enumeration as CSV m,X,Y")
    p.add_argument("d", type=int)
    p.add_argument("k", type=int)
    p.add_argument("-N", dest="n", type=_positive, required=True, help="terms per window")
    p.add_argument("--include-seeds", action="store_true")
    p.add_argument("--unit-power", type=_positive, default=1)

    p = sub.add_parser("benford", help="leading-digit report of a sequence")
    p.add_argument("d", type=int, nargs="?")
    p.add_argument("k", type=int, nargs="?")
    p.add_argument("-N", dest="n", type=_positive)
    p.add_argument("-m", dest="m", type=_digits, default=1)
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.add_argument("--component", choices=["x", "y"], default="x")
    p.add_argument("--from-file", help="CSV written by `seq` or `enumerate`")
    p.add_argument("--include-seeds", action="store_true")
    p.add_argument("--orbit", type=int, default=None, help="report on one canonical sequence instead of the class")
    p.add_argument("--variant", choices=[v.value for v in Variant], default="t1")
    p.add_argument("--unit-power", type=_positive, default=1)

    p = sub.add_parser("roots-check", help="check the characteristic roots are not +-10^m")
    p.add_argument("d", type=int, nargs="?")
    p.add_argument("--unit-power", type=_positive, default=1)
    p.add_argument("--unit", type=parse_quadint, help="explicit unit x+y*sqrt(D)")
    return parser


def _unit(d: int, power: int) -> QuadInt:
    return fundamental_unit(d).value ** power


def _spec(args: argparse.Namespace) -> SequenceSpec:
    partition = orbit_partition(args.d, args.k)
    if not partition.fundamentals:
        raise EmptyNormClass(f"norm class empty: no solutions of x^2 - {args.d}y^2 = {args.k}")
    if not 0 <= args.orbit < len(partition):
        raise BrahmaguptaError(f"orbit index {args.orbit} out of range 0..{len(partition) - 1}")
    alpha = partition.fundamentals[args.orbit].value
    return SequenceSpec(alpha, _unit(args.d, args.unit_power), Variant(args.variant))


def _seq_rows(args: argparse.Namespace) -> Iterator[tuple[int, int, int]]:
    spec = _spec(args)
    if args.include_seeds:
        yield 0, spec.seed.x, spec.seed.y
    for n, term in enumerate(generate(spec, args.n).terms, start=1):
        yield n, term.x, term.y


def _enum_rows(args: argparse.Namespace) -> Iterator[tuple[int, int, int]]:
    terms = enumerate_norm_class(
        args.d, args.k, args.n, _unit(args.d, args.unit_power), include_seeds=args.include_seeds
    )
    for m, term in enumerate(terms, start=1):
        yield m, term.x, term.y


def _write_csv(out: TextIO, header: Sequence[str], rows: Iterator[tuple[int, ...]]) -> None:
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)


def read_terms(path: str, component: str = "x") -> list[int]:
    """Read one coordinate column from a CSV produced by ``seq`` or ``enumerate``."""
    with open(path, newline="") as fh:
        reader = csv.reader(fh)
        header = next(reader, None)
        if header is None or len(header) != 3:
            raise BrahmaguptaError(f"{path}: expected a 3-column CSV with header")
        col = 1 if component == "x" else 2
        return [int(row[col]) for row in reader if row]


def _pattern_text(pattern: tuple[int, ...]) -> str:
    return "".join(map(str, pattern))


def write_report(out: TextIO, report: BenfordReport, fmt: str) -> None:
    if fmt == "json":
        payload = {
            "m": report.stats.m,
            "N": report.n,
            "rows": [
                {"pattern": _pattern_text(p), "count": c, "frequency": f, "expected": e, "deviation": dev}
                for p, c, f, e, dev in report.rows()
            ],
            "max_abs_dev": report.max_abs_deviation,
            "chi_square": report.chi_square,
            "star_discrepancy": report.star_discrepancy,
        }
        out.write(json.dumps(payload) + "\n")
        return
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["pattern", "count", "frequency", "expected", "deviation"])
    for p, c, f, e, dev in report.rows():
        writer.writerow([_pattern_text(p), c, repr(f), repr(e), repr(dev)])
    writer.writerow(["N", "max_abs_dev", "chi_square", "star_discrepancy"])
    writer.writerow([report.n, repr(report.max_abs_deviation), repr(report.chi_square), repr(report.star_discrepancy)])


def _cmd_unit(args: argparse.Namespace, out: TextIO) -> None:
    cf = cf_sqrt(args.d)
    fu = fundamental_unit(args.d)
    payload = {"d": args.d, "a0": cf.a0, "period": list(cf.period), "unit": {"x": str(fu.x), "y": str(fu.y)}}
    out.write(json.dumps(payload) + "\n")


def _cmd_orbits(args: argparse.Namespace, out: TextIO) -> None:
    partition = orbit_partition(args.d, args.k)
    if not partition.fundamentals:
        raise EmptyNormClass(f"norm class empty: no solutions of x^2 - {args.d}y^2 = {args.k}")
    box = search_bounds(args.d, args.k, partition.unit)
    payload = {
        "d": args.d,
        "k": args.k,
        "bounds": {"u_max": str(box.u_max), "v_max": str(box.v_max)},
        "orbits": [
            {"x": str(f.value.x), "y": str(f.value.y), "ambiguous": f.ambiguous, "conjugate_of": f.conjugate_index}
            for f in partition.fundamentals
        ],
    }
    out.write(json.dumps(payload) + "\n")


def _cmd_benford(args: argparse.Namespace, out: TextIO) -> None:
    if args.from_file:
        terms = read_terms(args.from_file, args.component)
    else:
        if args.d is None or args.k is None or args.n is None:
            raise _UsageError("benford needs D k -N n, or --from-file")
        rows = _seq_rows(args) if args.orbit is not None else _enum_rows(args)
        col = 1 if args.component == "x" else 2
        terms = [row[col] for row in rows]
    write_report(out, benford_report(terms, args.m), args.format)


def _cmd_roots(args: argparse.Namespace, out: TextIO) -> None:
    if args.unit is not None:
        unit = args.unit
    elif args.d is not None:
        unit = _unit(args.d, args.unit_power)
    else:
        raise _UsageError("roots-check needs D or --unit")
    out.write(json.dumps({"unit": str(unit), "u": str(unit.x), "ok": check_characteristic_roots(unit)}) + "\n")


class _UsageError(Exception):
    pass


def run(args: argparse.Namespace, out: TextIO) -> None:
    command = args.command
    if command == "unit":
        _cmd_unit(args, out)
    elif command == "orbits":
        _cmd_orbits(args, out)
    elif command == "seq":
        _write_csv(out, ("n", "x", "y"), _seq_rows(args))
    elif command == "enumerate":
        _write_csv(out, ("m", "X", "Y"), _enum_rows(args))
    elif command == "benford":
        _cmd_benford(args, out)
    elif command == "roots-check":
        _cmd_roots(args, out)


@contextlib.contextmanager
def _big_int_text() -> Iterator[None]:
    # terms easily exceed the interpreter's default int<->str digit limit
    get = getattr(sys, "get_int_max_str_digits", None)
    if get is None:
        yield
        return
    old = get()
    sys.set_int_max_str_digits(0)
    try:
        yield
    finally:
        sys.set_int_max_str_digits(old)


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    buf = io.StringIO()
    with _big_int_text():
        try:
            run(args, buf)
        except _UsageError as exc:
            print(f"brahmagupta: error: {exc}", file=sys.stderr)
            return 2
        except (BrahmaguptaError, OSError) as exc:
            print(f"brahmagupta: {exc}", file=sys.stderr)
            return 1
    if args.output:
        with open(args.output, "w", newline="") as fh:
            fh.write(buf.getvalue())
    else:
        sys.stdout.write(buf.getvalue())
    return 0


if __name__ == "__main__":
    sys.exit(main())
