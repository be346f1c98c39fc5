"""Command line interface.

Exit codes: 0 on success or a completed report, 1 on a validation failure
(non-exact input to a constructive command, a failed verification, an
infeasible generation request), 2 on malformed input files or arguments.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from .chain import ChainBuildError, ChainError, ContinuousChain, build_chain, emit_dot, validate_chain
from .delta import NumericalData
from .generate import GenerationError, random_exact_lls
from .linalg import format_rational
from .oracle import degree_via_pluecker, limit_via_pluecker, sample_orbit_check
from .series import LimitLinearSeries, check_compatible, check_exact, numerical_data, reduce_minimal
from .serialize import SchemaError, SubspaceTask, dumps_instance, load_instance
from .torus import Direction, limit, orbit_degree


def _emit(text: str, output: str | None) -> None:
    if output:
        with open(output, "w") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def _pair_str(pair: tuple[Fraction, Fraction]) -> str:
    return f"({format_rational(pair[0])}, {format_rational(pair[1])})"


def _load_series(path: str) -> LimitLinearSeries:
    obj = load_instance(path)
    if not isinstance(obj, LimitLinearSeries):
        raise SchemaError(f"{path} does not hold a level-delta series")
    return obj


def _load_subspace_task(path: str) -> SubspaceTask:
    obj = load_instance(path)
    if not isinstance(obj, SubspaceTask):
        raise SchemaError(f"{path} does not hold a subspace task")
    return obj


def _cmd_check(args: argparse.Namespace) -> int:
    g = _load_series(args.file)
    compat = check_compatible(g)
    print(f"compatible: {str(compat.passed).lower()}")
    for failure in compat.failures:
        print(f"  incompatible pair {_pair_str((failure.left, failure.right))}: {failure.message}")
    exact = check_exact(g)
    if exact.passed:
        print("exact: true")
    else:
        pair = exact.first_failing_pair()
        print(f"exact: false, failing pair {_pair_str(pair)}")
        for failure in exact.failures:
            print(f"  {_pair_str((failure.left, failure.right))} [{failure.side}]: {failure.message}")
    return 0


def _numerical_json(data: NumericalData) -> str:
    import json

    return json.dumps(
        {
            "indices": [format_rational(i) for i in data.indices],
            "down_kernel": list(data.down_kernels),
            "up_kernel": list(data.up_kernels),
            "mobile": list(data.mobile),
            "total_mobile": data.total_mobile(),
            "exact": data.is_exact(),
            "minimal": data.is_minimal(),
        },
        indent=2,
    )


def _cmd_numerical_data(args: argparse.Namespace) -> int:
    g = _load_series(args.file)
    print(_numerical_json(numerical_data(g)))
    return 0


def _cmd_reduce(args: argparse.Namespace) -> int:
    g = _load_series(args.file)
    try:
        reduced = reduce_minimal(g)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    _emit(dumps_instance(reduced), args.output)
    return 0


def _cmd_build_chain(args: argparse.Namespace) -> int:
    g = _load_series(args.file)
    try:
        chain = build_chain(g)
    except ChainBuildError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    _emit(dumps_instance(chain), args.output)
    if args.dot:
        with open(args.dot, "w") as handle:
            handle.write(emit_dot(chain))
    return 0


def _cmd_limit(args: argparse.Namespace) -> int:
    task = _load_subspace_task(args.file)
    direction = Direction.ZERO if args.at == "zero" else Direction.INFINITY
    result = limit(task.split, task.subspace, direction)
    _emit(dumps_instance(SubspaceTask(task.split, result)), args.output)
    return 0


def _cmd_degree(args: argparse.Namespace) -> int:
    task = _load_subspace_task(args.file)
    print(orbit_degree(task.split, task.subspace))
    return 0


def _cmd_gen(args: argparse.Namespace) -> int:
    if args.delta:
        delta = tuple(int(part) for part in args.delta.split(","))
    else:
        delta = ()
    if not 0 <= args.d <= 8:
        # minor enumeration is exhaustive, so the CLI keeps instances desk-sized
        print("error: the generator handles degrees 0 through 8", file=sys.stderr)
        return 1
    try:
        g = random_exact_lls(args.d, args.r, delta, args.seed)
    except (GenerationError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    _emit(dumps_instance(g), args.output)
    return 0


def _verify_chain(chain: ContinuousChain, use_oracle: bool, samples: int) -> int:
    report = validate_chain(chain)
    print(report.summary())
    ok = report.passed
    if use_oracle:
        split = chain.model.split
        mismatch = []
        for comp in chain.components:
            for direction in (Direction.ZERO, Direction.INFINITY):
                if limit(split, comp.base_space, direction) != limit_via_pluecker(
                    split, comp.base_space, direction
                ):
                    mismatch.append(
                        f"limit mismatch at {format_rational(comp.index)} ({direction.value})"
                    )
            if orbit_degree(split, comp.base_space) != degree_via_pluecker(
                split, comp.base_space
            ):
                mismatch.append(f"degree mismatch at {format_rational(comp.index)}")
        print(f"oracle limits/degrees: {'pass' if not mismatch else 'FAIL'}")
        for line in mismatch:
            print(f"  - {line}")
        sample_report = sample_orbit_check(chain, samples, seed=0)
        print(f"oracle orbit sampling: {'pass' if sample_report.passed else 'FAIL'}")
        for line in sample_report.failures:
            print(f"  - {line}")
        ok = ok and not mismatch and sample_report.passed
    return 0 if ok else 1


def _cmd_verify(args: argparse.Namespace) -> int:
    obj = load_instance(args.file)
    if isinstance(obj, LimitLinearSeries):
        exact = check_exact(obj)
        data = numerical_data(obj)
        print(f"exact: {str(exact.passed).lower()}")
        print(f"minimal: {str(data.is_minimal()).lower()}")
        if not exact.passed or not data.is_minimal():
            return 1
        chain = build_chain(obj)
    elif isinstance(obj, ContinuousChain):
        chain = obj
    else:
        raise SchemaError(f"{args.file} holds neither a series nor a chain")
    return _verify_chain(chain, args.oracle, args.samples)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nodalseries",
        description=(
            "Exact computations with degenerations of linear series on a"
            " two-component nodal curve"
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="compatibility and exactness report for a series")
    p.add_argument("file")
    p.set_defaults(fn=_cmd_check)

    p = sub.add_parser("numerical-data", help="per-index kernel and mobile dimensions")
    p.add_argument("file")
    p.set_defaults(fn=_cmd_numerical_data)

    p = sub.add_parser("reduce", help="drop trivial non-integer slots of an exact series")
    p.add_argument("file")
    p.add_argument("-o", "--output")
    p.set_defaults(fn=_cmd_reduce)

    p = sub.add_parser("build-chain", help="assemble the chain of an exact minimal series")
    p.add_argument("file")
    p.add_argument("--dot", help="also write a DOT rendering here")
    p.add_argument("-o", "--output")
    p.set_defaults(fn=_cmd_build_chain)

    p = sub.add_parser("limit", help="orbit limit of a subspace task")
    p.add_argument("file")
    p.add_argument("--at", choices=("zero", "infty"), required=True)
    p.add_argument("-o", "--output")
    p.set_defaults(fn=_cmd_limit)

    p = sub.add_parser("degree", help="orbit degree of a subspace task")
    p.add_argument("file")
    p.set_defaults(fn=_cmd_degree)

    p = sub.add_parser("gen", help="generate a random exact minimal series")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--delta", default="", help="comma-separated subdivision counts")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("-o", "--output")
    p.set_defaults(fn=_cmd_gen)

    p = sub.add_parser("verify", help="validate a chain (or a series via its chain)")
    p.add_argument("file")
    p.add_argument("--oracle", action="store_true", help="also run the brute-force oracle")
    p.add_argument("--samples", type=int, default=20)
    p.set_defaults(fn=_cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except SchemaError as exc:
        print(f"malformed input: {exc}", file=sys.stderr)
        return 2
    except ChainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
