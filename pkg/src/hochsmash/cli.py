"""Command line entry point.

Exit codes: 0 success, 1 failed verification, 2 bad input.
"""

import argparse
import sys
import time

from . import closedform
from .catalog import CATALOG_PREFIX, catalog, catalog_group
from .errors import (
    GroupFileError,
    HochsmashError,
    NonInvertibleGenerator,
    OrderExceeded,
    SlotTooLarge,
)
from .groupfile import parse_group_file
from .groups import double
from .oracle import bar_dims, class_decomposition_dims
from .report import (
    compare_dims,
    duality_dict,
    make_report,
    render_table,
    table_dict,
    to_json,
)

EXIT_OK, EXIT_FAILED, EXIT_INPUT = 0, 1, 2

DEFAULT_TRUNC = 8
DEFAULT_ORACLE_TRUNC = 4
DEFAULT_BAR_N = 2
DEFAULT_BAR_DEGREE = 3

_SERIES_COMMANDS = {
    "homology": closedform.HOMOLOGY,
    "cohomology": closedform.COHOMOLOGY,
    "twisted-homology": closedform.TWISTED,
}


class InputError(Exception):
    pass


def load_group(source, doubled=False):
    if source is None:
        raise InputError("--group is required")
    try:
        if source.startswith(CATALOG_PREFIX):
            G = catalog_group(source[len(CATALOG_PREFIX):])
        else:
            G = parse_group_file(source)
    except KeyError as exc:
        raise InputError(exc.args[0]) from None
    except (GroupFileError, OrderExceeded, NonInvertibleGenerator) as exc:
        raise InputError(str(exc)) from None
    return double(G) if doubled else G


def _nonnegative(text):
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("must be >= 0")
    return value


def _positive(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return value


def build_parser():
    parser = argparse.ArgumentParser(
        prog="hochsmash",
        description="Graded Hochschild (co)homology dimensions of S(V)#G for finite matrix groups.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--group", help="catalog:NAME or path to a JSON group file")
    common.add_argument("--trunc", type=_nonnegative, help="highest internal degree")
    common.add_argument("--format", choices=("table", "machine"), default="table")
    common.add_argument("--double", action="store_true", help="act on V + V* instead of V")
    common.add_argument("--jobs", type=_positive, default=1, help="worker processes")

    for name in _SERIES_COMMANDS:
        p = sub.add_parser(name, parents=[common], help=f"{name} Poincare series")
        p.add_argument("--per-class", action="store_true", help="add the per-class breakdown")
    sub.add_parser("duality", parents=[common], help="twisted and untwisted duality check")
    sub.add_parser("oracle-check", parents=[common], help="closed forms vs Koszul oracle")
    p = sub.add_parser("bar-check", parents=[common], help="bar complex vs class decomposition")
    p.add_argument("--n-max", type=_nonnegative, default=DEFAULT_BAR_N)
    p.add_argument("--degree-max", type=_nonnegative, default=DEFAULT_BAR_DEGREE)
    p.add_argument("--slot-cap", type=_positive, default=None)
    sub.add_parser("catalog", parents=[common], help="list built-in groups")
    return parser


def _series(args, G, start):
    N = DEFAULT_TRUNC if args.trunc is None else args.trunc
    side = _SERIES_COMMANDS[args.command]
    table = closedform.series_table(G, side, N, per_class=args.per_class)
    body = {"series": table_dict(G, table)}
    window = {"trunc": N, "offset": table.offset}
    return make_report(args.command, G, body, time.perf_counter() - start, window), EXIT_OK


def _duality(args, G, start):
    N = DEFAULT_TRUNC if args.trunc is None else args.trunc
    if N < G.dim:
        raise InputError(f"duality needs --trunc >= dim V = {G.dim}")
    rep = closedform.duality_check(G, N)
    body = {
        "duality": duality_dict(rep),
        "verdict": "twisted duality holds" if rep.twisted_ok else "twisted duality FAILS",
    }
    code = EXIT_OK if rep.twisted_ok else EXIT_FAILED
    window = {"trunc": N, "offset": -G.dim}
    return make_report("duality", G, body, time.perf_counter() - start, window), code


def _oracle_check(args, G, start):
    N = DEFAULT_ORACLE_TRUNC if args.trunc is None else args.trunc
    checks = {}
    for side, fn, lo in (
        (closedform.HOMOLOGY, closedform.homology_series, 0),
        (closedform.COHOMOLOGY, closedform.cohomology_series_direct, -G.dim),
    ):
        table = fn(G, N)
        dims = class_decomposition_dims(G, side, N, jobs=args.jobs)
        bad = compare_dims(
            lambda n, D: int(table.coefficient(n, D)),
            lambda n, D: dims[n, D],
            (0, G.dim),
            (lo, N),
        )
        checks[side] = {"match": bad is None, "first_mismatch": bad, "degrees": [lo, N]}
    ok = all(c["match"] for c in checks.values())
    body = {"oracle": {"checks": checks}, "verdict": "match" if ok else "MISMATCH"}
    window = {"trunc": N}
    return make_report("oracle-check", G, body, time.perf_counter() - start, window), \
        EXIT_OK if ok else EXIT_FAILED


def _bar_check(args, G, start):
    n_max, D_max = args.n_max, args.degree_max
    if args.trunc is not None:
        D_max = args.trunc
    kwargs = {} if args.slot_cap is None else {"cap": args.slot_cap}
    try:
        bar = bar_dims(G, n_max, D_max, **kwargs)
    except SlotTooLarge as exc:
        raise InputError(f"{exc}; lower --n-max/--degree-max or raise --slot-cap") from None
    dims = class_decomposition_dims(G, closedform.HOMOLOGY, D_max, jobs=args.jobs)
    bad = compare_dims(lambda n, D: dims[n, D], lambda n, D: bar[n, D], (0, n_max), (0, D_max))
    checks = {"homology": {"match": bad is None, "first_mismatch": bad,
                           "rows": bar.rows()}}
    body = {"bar": {"checks": checks}, "verdict": "match" if bad is None else "MISMATCH"}
    window = {"n_max": n_max, "degree_max": D_max}
    return make_report("bar-check", G, body, time.perf_counter() - start, window), \
        EXIT_OK if bad is None else EXIT_FAILED


def _catalog(args, start):
    entries = [
        {
            "name": e.name,
            "description": e.description,
            "order": e.order,
            "classes": e.classes,
            "dim": e.data["dim"],
            "cyclotomic_order": e.data["cyclotomic_order"],
            "in_sl": e.in_sl,
        }
        for e in catalog()
    ]
    return make_report("catalog", None, {"catalog": entries}, time.perf_counter() - start), EXIT_OK


_HANDLERS = {
    "homology": _series,
    "cohomology": _series,
    "twisted-homology": _series,
    "duality": _duality,
    "oracle-check": _oracle_check,
    "bar-check": _bar_check,
}


def run(argv=None):
    """Parse ``argv`` and compute; returns ``((report, exit_code), args)``."""
    args = build_parser().parse_args(argv)
    start = time.perf_counter()
    if args.command == "catalog":
        return _catalog(args, start), args
    G = load_group(args.group, doubled=args.double)
    return _HANDLERS[args.command](args, G, start), args


def main(argv=None):
    try:
        (report, code), args = run(argv)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except HochsmashError as exc:
        print(f"verification error: {exc}", file=sys.stderr)
        return EXIT_FAILED
    out = to_json(report) if args.format == "machine" else render_table(report)
    sys.stdout.write(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
