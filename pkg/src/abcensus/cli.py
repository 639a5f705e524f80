"""``abcensus`` command line.

Subcommands::

    abcensus compute 4x2 c                 # cyclic subgroups of C4 x C2
    abcensus compute 4x2 o_delta --delta 4
    abcensus spectrum 6x6 --format json
    abcensus table s 1..4 1..4 --format csv
    abcensus table phi_r 1..6 --r 2
    abcensus verify all --seed 42

Exit codes: 0 ok, 1 verification failure, 2 parse error, 3 domain error,
4 cap exceeded, 5 overflow.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys
from contextlib import contextmanager
from fractions import Fraction
from itertools import product
from typing import Sequence

from . import config
from .arith import jordan_phi
from .errors import AbcensusError, CapExceededError, DomainError, NotADivisorError, SpecParseError
from .spectra import (
    GroupSpec,
    average_order,
    cyclic_total,
    cyclic_total_rank2,
    full_spectrum,
    order_count_moebius,
    parse_spec,
    subgroup_total_rank2,
)
from .verify import SUITES, Sizes

QUANTITIES = ("c", "c_rank2", "s", "A", "o_delta", "c_delta", "phi_r")
ORDER_SPECIFIC = ("o_delta", "c_delta")

_CAP_FLAGS = {
    "spectrum_cap": "ABCENSUS_SPECTRUM_CAP",
    "convolution_cap": "ABCENSUS_CONVOLUTION_CAP",
    "oracle_cap": "ABCENSUS_ORACLE_CAP",
    "pair_cap": "ABCENSUS_PAIR_CAP",
    "table_cap": "ABCENSUS_TABLE_CAP",
}


def render(value: int | Fraction) -> str:
    return str(value)


def _require_rank(spec: GroupSpec, rank: int, quantity: str) -> None:
    if spec.rank != rank:
        raise DomainError(f"{quantity} needs a rank-{rank} spec, got {spec}")


def evaluate(spec: GroupSpec, quantity: str, delta: int | None = None, r: int | None = None):
    """Exact value of ``quantity`` for ``spec``."""
    if quantity in ORDER_SPECIFIC and delta is None:
        raise SpecParseError(f"{quantity} needs --delta")
    if quantity not in ORDER_SPECIFIC and delta is not None:
        raise SpecParseError(f"--delta only applies to {', '.join(ORDER_SPECIFIC)}")
    if quantity == "phi_r" and r is None:
        raise SpecParseError("phi_r needs --r")
    if quantity != "phi_r" and r is not None:
        raise SpecParseError("--r only applies to phi_r")
    if quantity == "c":
        return cyclic_total(spec)
    if quantity == "c_rank2":
        _require_rank(spec, 2, quantity)
        return cyclic_total_rank2(*spec.orders)
    if quantity == "s":
        _require_rank(spec, 2, quantity)
        return subgroup_total_rank2(*spec.orders)
    if quantity == "A":
        return average_order(spec)
    if quantity == "o_delta":
        return order_count_moebius(spec, delta)
    if quantity == "c_delta":
        if delta < 1 or spec.exponent % delta:
            raise NotADivisorError(delta, spec.exponent)
        return full_spectrum(spec).c(delta)
    if quantity == "phi_r":
        _require_rank(spec, 1, quantity)
        return jordan_phi(r, spec.orders[0])
    raise SpecParseError(f"unknown quantity {quantity!r}")


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", newline="\n", encoding="utf-8") as fh:
            fh.write(text)


def _csv(rows: Sequence[Sequence[object]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerows(rows)
    return buf.getvalue()


def spectrum_csv(spec: GroupSpec) -> str:
    sp = full_spectrum(spec)
    rows = [("delta", "o_delta", "c_delta")]
    rows += [(d, o, c) for d, (o, c) in sp.entries.items()]
    rows.append(("total", sp.order_sum, sp.cyclic_total))
    return _csv(rows)


def spectrum_json(spec: GroupSpec) -> str:
    sp = full_spectrum(spec)
    doc = {
        "spec": list(spec.orders),
        "exponent": str(spec.exponent),
        "entries": [{"delta": str(d), "o": str(o), "c": str(c)} for d, (o, c) in sp.entries.items()],
        "totals": {"order_sum": str(sp.order_sum), "cyclic_total": str(sp.cyclic_total)},
    }
    return json.dumps(doc, indent=2) + "\n"


def parse_range(text: str) -> range:
    lo, sep, hi = text.partition("..")
    try:
        lo_i = int(lo)
        hi_i = int(hi) if sep else lo_i
    except ValueError:
        raise SpecParseError(f"malformed range {text!r}; expected A..B") from None
    if lo_i < 1 or hi_i < lo_i:
        raise SpecParseError(f"range {text!r} must satisfy 1 <= A <= B")
    return range(lo_i, hi_i + 1)


def table_cells(quantity: str, ranges: Sequence[range], delta: int | None, r: int | None):
    """Row-major (args, value) pairs.  o_delta and c_delta are 0 where delta does not divide."""
    if quantity not in QUANTITIES:
        raise SpecParseError(f"unknown quantity {quantity!r}")
    cap = config.table_cap()
    cells = math.prod(len(rg) for rg in ranges)
    if cells > cap:
        raise CapExceededError("table cells", cells, cap)
    for args in product(*ranges):
        spec = GroupSpec(args)
        if quantity in ORDER_SPECIFIC and delta is not None and delta >= 1 and spec.exponent % delta:
            value = 0
        else:
            value = evaluate(spec, quantity, delta, r)
        yield args, value


def table_csv(quantity, ranges, delta, r) -> str:
    names = ["n"] if len(ranges) == 1 else [f"n{i + 1}" for i in range(len(ranges))]
    rows = [(*names, quantity)]
    rows += [(*args, render(v)) for args, v in table_cells(quantity, ranges, delta, r)]
    return _csv(rows)


def table_json(quantity, ranges, delta, r) -> str:
    params = {}
    if delta is not None:
        params["delta"] = str(delta)
    if r is not None:
        params["r"] = str(r)
    doc = {
        "quantity": quantity,
        "ranges": [[str(rg.start), str(rg.stop - 1)] for rg in ranges],
        "params": params,
        "rows": [
            {"args": [str(a) for a in args], "value": render(v)}
            for args, v in table_cells(quantity, ranges, delta, r)
        ],
    }
    return json.dumps(doc, indent=2) + "\n"


def cmd_compute(args) -> int:
    spec = parse_spec(args.spec)
    value = evaluate(spec, args.quantity, args.delta, args.r)
    print(render(value))
    return 0


def cmd_spectrum(args) -> int:
    spec = parse_spec(args.spec)
    text = spectrum_json(spec) if args.format == "json" else spectrum_csv(spec)
    _emit(text, args.out)
    return 0


def cmd_table(args) -> int:
    ranges = [parse_range(t) for t in args.ranges]
    if args.quantity in ("s", "c_rank2") and len(ranges) != 2:
        raise SpecParseError(f"{args.quantity} needs exactly two ranges")
    if args.quantity == "phi_r" and len(ranges) != 1:
        raise SpecParseError("phi_r needs exactly one range")
    render_fn = table_json if args.format == "json" else table_csv
    _emit(render_fn(args.quantity, ranges, args.delta, args.r), args.out)
    return 0


def cmd_verify(args) -> int:
    names = list(SUITES) if args.suite == "all" else [args.suite]
    sizes = Sizes(args.max_n, args.max_r, args.max_order, args.seed)
    lines = []
    total = failed = 0
    for name in names:
        n = f = 0
        for report in SUITES[name](sizes):
            n += 1
            if not report.passed:
                f += 1
                lines.append(report.render())
        lines.append(f"{name}: {n} checks, {f} failed")
        total += n
        failed += f
    lines.append(f"{'PASS' if failed == 0 else 'FAIL'}: {total} checks, {failed} failed")
    _emit("\n".join(lines) + "\n", args.out)
    return 0 if failed == 0 else 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    for flag, env in _CAP_FLAGS.items():
        common.add_argument(f"--{flag.replace('_', '-')}", dest=flag, type=int, default=None,
                            help=f"overrides ${env}")
    common.add_argument("--out", default=None, help="write output to FILE instead of stdout")

    parser = argparse.ArgumentParser(prog="abcensus", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", parents=[common], help="one exact value")
    p.add_argument("spec", help="cyclic orders joined by x, e.g. 4x2x3")
    p.add_argument("quantity", choices=QUANTITIES)
    p.add_argument("--delta", type=int, default=None)
    p.add_argument("--r", type=int, default=None)
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("spectrum", parents=[common], help="table of (delta, o_delta, c_delta)")
    p.add_argument("spec")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("table", parents=[common], help="batch values over integer ranges")
    p.add_argument("quantity", choices=QUANTITIES)
    p.add_argument("ranges", nargs="+", help="one A..B range per cyclic factor")
    p.add_argument("--delta", type=int, default=None)
    p.add_argument("--r", type=int, default=None)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("verify", parents=[common], help="run identity suites")
    p.add_argument("suite", choices=(*SUITES, "all"))
    p.add_argument("--max-n", type=int, default=None)
    p.add_argument("--max-r", type=int, default=None)
    p.add_argument("--max-order", type=int, default=None)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify)
    return parser


@contextmanager
def _cap_overrides(args):
    """Flags beat the environment for the duration of one command."""
    saved = {env: os.environ.get(env) for env in _CAP_FLAGS.values()}
    try:
        for flag, env in _CAP_FLAGS.items():
            value = getattr(args, flag)
            if value is not None:
                os.environ[env] = str(value)
        yield
    finally:
        for env, value in saved.items():
            if value is None:
                os.environ.pop(env, None)
            else:
                os.environ[env] = value


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    for flag in _CAP_FLAGS:
        value = getattr(args, flag)
        if value is not None and value < 1:
            parser.error(f"--{flag.replace('_', '-')} must be positive")
    try:
        with _cap_overrides(args):
            return args.func(args)
    except AbcensusError as exc:
        print(f"abcensus: error: {exc}", file=sys.stderr)
        return exc.exit_code


if __name__ == "__main__":
    sys.exit(main())
