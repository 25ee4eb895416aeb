"""Command-line front end.

Every subcommand prints its primary answer as a bare first line in the
1-based, 0-for-absent convention used throughout, followed by
``KEY value`` lines, so output is equally easy to eyeball and to parse.
Identical invocations produce byte-identical output.

Exit codes: 0 when the command's checks pass, 1 when a verification or
property fails, 2 for usage or input errors.
"""

from __future__ import annotations

import argparse
import re
import sys
from typing import Optional, Sequence

from . import ansv, cartesian, ghcsort, monotonic, parallel, properties, propcheck, spmv
from .errors import ConfigError, OracleKitError
from .propcheck import GenConfig
from .spmv import INT64_MAX, INT64_MIN, CooMatrix

__all__ = ["main", "run_cli"]

_INT_RE = re.compile(r"[+-]?[0-9]+")


def _bool(flag: bool) -> str:
    return "true" if flag else "false"


def _read_text(path: str) -> str:
    try:
        with open(path, "r", encoding="ascii") as fh:
            return fh.read()
    except UnicodeDecodeError:
        raise OracleKitError(f"{path} is not ASCII text") from None


def _load_sequence(path: str) -> list[int]:
    """Whitespace-separated signed decimals; empty file = empty sequence."""
    out = []
    for tok in _read_text(path).split():
        if not _INT_RE.fullmatch(tok):
            raise OracleKitError(
                f"sequence token {tok!r} is not a signed decimal integer"
            )
        v = int(tok)
        if not INT64_MIN <= v <= INT64_MAX:
            raise OracleKitError(f"sequence value {v} does not fit in 64 bits")
        out.append(v)
    return out


def _load_coo(path: str) -> CooMatrix:
    return spmv.coo_from_text(_read_text(path))


def _parse_policy(text: str) -> Optional[parallel.AllocationPolicy]:
    """seq, per-element, chunks:N, or steal:N; None means sequential."""
    if text == "seq":
        return None
    if text == "per-element":
        return parallel.AllocationPolicy.per_element()
    for prefix, ctor in (
        ("chunks:", parallel.AllocationPolicy.static_chunks),
        ("steal:", parallel.AllocationPolicy.dynamic_stealing),
    ):
        if text.startswith(prefix):
            arg = text[len(prefix) :]
            if not arg.isdigit():
                raise ConfigError(f"worker count {arg!r} is not a positive integer")
            return ctor(int(arg))
    raise ConfigError(
        f"unknown policy {text!r}; expected seq, per-element, chunks:N, or steal:N"
    )


def _one_based(indices) -> str:
    return " ".join("0" if i is None else str(i + 1) for i in indices)


def _cmd_cutpoints(args: argparse.Namespace) -> int:
    s = _load_sequence(args.file)
    cut = monotonic.compute_cutpoints(s)
    report = monotonic.check_cutpoints(s, cut)
    print(" ".join(map(str, cut)))
    for key in (
        "non_empty",
        "begin_to_end",
        "within_bounds",
        "monotonic",
        "right_maximal",
    ):
        print(f"{key} {_bool(getattr(report, key))}")
    return 0 if report.all_ok() else 1


def _cmd_sort(args: argparse.Namespace) -> int:
    s = _load_sequence(args.file)
    out = ghcsort.ghc_sort(s)
    print(" ".join(map(str, out)))
    if not args.verify:
        return 0
    is_sorted = all(out[i] <= out[i + 1] for i in range(len(out) - 1))
    is_perm = ghcsort.multiset_equal(out, s)
    print(f"sorted {_bool(is_sorted)}")
    print(f"permutation {_bool(is_perm)}")
    return 0 if is_sorted and is_perm else 1


def _cmd_ansv(args: argparse.Namespace) -> int:
    s = _load_sequence(args.file)
    if args.dir == "left":
        arr = ansv.left_neighbors(s)
    else:
        arr = ansv.right_neighbors(s)
    print(_one_based(arr.neighbors))
    return 0


def _cmd_cartesian(args: argparse.Namespace) -> int:
    s = _load_sequence(args.file)
    tree = cartesian.build_tree(s)
    report = cartesian.check_tree(s, tree)
    print(_one_based(tree.parent))
    for key in ("binary_ok", "heap_ok", "traversal_ok"):
        print(f"{key} {_bool(getattr(report, key))}")
    return 0 if report.all_ok() else 1


def _cmd_spmv(args: argparse.Namespace) -> int:
    x = _load_sequence(args.vector)
    m = _load_coo(args.matrix)
    policy = _parse_policy(args.policy)
    if policy is None:
        y = spmv.multiply_seq(x, m)
    else:
        y = parallel.multiply_parallel(x, m, policy)
    print(" ".join(map(str, y)))
    return 0


def _cmd_explore(args: argparse.Namespace) -> int:
    x = _load_sequence(args.vector)
    m = _load_coo(args.matrix)
    ts = parallel.build_model(x, m, args.workers, args.sync)
    report = parallel.explore(ts, max_states=args.max_states)
    print(f"states_visited {report.states_visited}")
    print(f"deadlock_found {_bool(report.deadlock_found)}")
    print(f"matches_sequential {_bool(report.matches_sequential)}")
    outputs = sorted(report.terminal_outputs)
    print(f"terminal_count {len(outputs)}")
    for out in outputs:
        print("terminal " + " ".join(map(str, out)))
    return 0 if report.matches_sequential else 1


def _render_example(value: object) -> str:
    if isinstance(value, tuple) and len(value) == 2 and isinstance(value[1], CooMatrix):
        x, m = value
        return f"x={x} matrix={m.rows}x{m.cols} triplets={list(m.to_triplets())}"
    return repr(value)


def _cmd_check(args: argparse.Namespace) -> int:
    if args.list:
        for name in properties.PROPERTY_NAMES:
            print(f"{name}  {properties.REGISTRY[name].summary}")
        return 0
    names = args.properties or list(properties.PROPERTY_NAMES)
    cfg = GenConfig(
        seed=args.seed,
        max_len=args.max_len,
        value_lo=args.value_lo,
        value_hi=args.value_hi,
        cases=args.cases,
    )
    results = propcheck.run_suite(names, cfg)
    failed = 0
    for r in results:
        print(f"{r.name} {r.status} cases={r.cases_run}")
        if not r.passed:
            failed += 1
            print(f"  reason: {r.message}")
            if r.counterexample is not None:
                original, shrunk = r.counterexample
                print(f"  counterexample: {_render_example(original)}")
                print(f"  shrunk: {_render_example(shrunk)}")
    print(f"total {len(results) - failed} passed, {failed} failed")
    return 1 if failed else 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="oraclekit",
        description="Checked sequence and sparse-matrix algorithms.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("cutpoints", help="split a sequence into maximal monotonic runs")
    p.add_argument("file", help="sequence file")
    p.set_defaults(func=_cmd_cutpoints)

    p = sub.add_parser("sort", help="sort by merging monotonic runs")
    p.add_argument("file", help="sequence file")
    p.add_argument("--verify", action="store_true", help="also check the output")
    p.set_defaults(func=_cmd_sort)

    p = sub.add_parser("ansv", help="nearest smaller values (1-based, 0 = none)")
    p.add_argument("file", help="sequence file")
    p.add_argument("--dir", choices=("left", "right"), default="left")
    p.set_defaults(func=_cmd_ansv)

    p = sub.add_parser("cartesian", help="Cartesian tree parents (1-based, 0 = root)")
    p.add_argument("file", help="sequence file, values must be distinct")
    p.set_defaults(func=_cmd_cartesian)

    p = sub.add_parser("spmv", help="sparse vector-matrix product")
    p.add_argument("vector", help="vector file")
    p.add_argument("matrix", help="COO matrix file")
    p.add_argument(
        "--policy",
        default="seq",
        help="seq, per-element, chunks:N, or steal:N (default: seq)",
    )
    p.set_defaults(func=_cmd_spmv)

    p = sub.add_parser("explore", help="enumerate interleavings of a small product")
    p.add_argument("vector", help="vector file")
    p.add_argument("matrix", help="COO matrix file")
    p.add_argument("--workers", type=int, default=2)
    p.add_argument("--sync", choices=parallel.SYNC_MODES, default="atomic_rmw")
    p.add_argument("--max-states", type=int, default=1_000_000)
    p.set_defaults(func=_cmd_explore)

    p = sub.add_parser("check", help="run named properties over random cases")
    p.add_argument(
        "properties",
        nargs="*",
        metavar="PROPERTY",
        help="property names (default: all)",
    )
    p.add_argument("--list", action="store_true", help="list properties and exit")
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--cases", type=int, default=100)
    p.add_argument("--max-len", type=int, default=50)
    p.add_argument("--value-lo", type=int, default=-1000)
    p.add_argument("--value-hi", type=int, default=1000)
    p.set_defaults(func=_cmd_check)

    return parser


def run_cli(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except SystemExit as exc:  # argparse has already printed its message
        return exc.code if isinstance(exc.code, int) else 2
    except (OracleKitError, OverflowError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run_cli(sys.argv[1:]))
