"""Command-line interface: ``chemtrees <command> [options]``.

Exit codes are 0 on success, 2 for usage, parse and validation errors, 3 when the conditions of a
constructive method do not hold, and 4 when a verification check finds a counterexample.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from collections.abc import Callable, Sequence
from dataclasses import asdict
from typing import Any

from .encoding import canonical_form, load_tree
from .enumeration import EnumerationRequest, enumerate_trees
from .extremal import (
    METHODS,
    OBJECTIVE_NAMES,
    PreconditionError,
    audit_conjecture_bp0,
    check_c_conditions,
    check_epsilon_reduction,
    get_objective,
    minimize_brute,
    minimize_theory,
)
from .huffman import (
    GeneratingTuple,
    PropertyReport,
    check_directed_identity,
    check_huffman_optimality,
    generalized_huffman,
    huffman_trees,
    lemma_property_suite,
)
from .indices import vertex_weighted_wiener
from .qspr import (
    PRESETS,
    REGRESSION_I,
    RegressionModel,
    descriptors,
    fit,
    load_dataset,
    load_model,
    parse_active,
    precision,
    predict,
    save_model,
)
from .trees import PendentRootedTree

logger = logging.getLogger(__name__)

SCHEMA_VERSION = 1

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_PRECONDITION = 3
EXIT_VERIFICATION = 4

INDEX_NAMES = ("m1", "m2", "c1", "c", "wiener", "wio", "s2", "s3", "s4")
_Handler = Callable[[argparse.Namespace], int]

CHECKS = (
    "c-conditions",
    "huffman-optimality",
    "conjecture-bp0",
    "lemma-suite",
    "directed-identity",
    "epsilon-reduction",
)


def _floats(text: str) -> list[float]:
    try:
        return [float(part) for part in text.split(",")]
    except ValueError:
        msg = f"Expected comma-separated numbers, but got {text!r}."
        raise argparse.ArgumentTypeError(msg) from None


def _ints(text: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",")]
    except ValueError:
        msg = f"Expected comma-separated integers, but got {text!r}."
        raise argparse.ArgumentTypeError(msg) from None


def _orders(text: str) -> list[int]:
    """Parse ``"4..14"`` (inclusive) or ``"4,5,8"``."""
    if ".." in text:
        low, _, high = text.partition("..")
        try:
            return list(range(int(low), int(high) + 1))
        except ValueError:
            msg = f"Expected a range such as 4..14, but got {text!r}."
            raise argparse.ArgumentTypeError(msg) from None
    return _ints(text)


def _costs(text: str) -> list[float]:
    values = _floats(text)
    if len(values) != 4:
        msg = f"Expected 4 degree costs c1,c2,c3,c4, but got {len(values)}."
        raise argparse.ArgumentTypeError(msg)
    return values


def _number(value: float) -> int | float:
    """Show integral values without a trailing ``.0``."""
    return int(value) if float(value).is_integer() else value


def _resolve_model(name: str) -> RegressionModel:
    return PRESETS[name] if name in PRESETS else load_model(name)


def _emit(args: argparse.Namespace, payload: dict[str, Any], lines: Sequence[str]) -> None:
    if args.json:
        document = {"schema_version": SCHEMA_VERSION, "command": args.command, **payload}
        print(json.dumps(document, indent=2, sort_keys=True))
    else:
        for line in lines:
            print(line)


def _cmd_enumerate(args: argparse.Namespace) -> int:
    request = EnumerationRequest(
        args.order,
        rooted=args.rooted,
        extremely_branched_only=args.extremely_branched,
        max_degree=args.max_degree,
    )
    codes = [canonical_form(tree) for tree in enumerate_trees(request)]
    payload: dict[str, Any] = {"order": args.order, "rooted": args.rooted, "count": len(codes)}
    if not args.count_only:
        payload["trees"] = codes
    _emit(args, payload, [str(len(codes))] if args.count_only else codes)
    return EXIT_OK


def _cmd_index(args: argparse.Namespace) -> int:
    tree = load_tree(args.tree)
    costs = REGRESSION_I.c.as_tuple() if args.coeffs is None else args.coeffs
    b3 = args.b3 if args.b3 is not None else REGRESSION_I.b3 if args.coeffs is None else 0.0
    model = RegressionModel.from_coefficients(0.0, {**{f"n{d}": c for d, c in enumerate(costs, 1)}, "m2": b3})
    value = _number(get_objective(args.index, model)(tree))
    _emit(args, {"tree": canonical_form(tree), "index": args.index, "value": value}, [str(value)])
    return EXIT_OK


def _rooted(text: str) -> PendentRootedTree:
    tree = load_tree(text)
    if not isinstance(tree, PendentRootedTree):
        msg = f"Expected an alcohol skeleton rooted at 'O', but got {text!r}."
        raise ValueError(msg)
    return tree


def _cmd_descriptors(args: argparse.Namespace) -> int:
    values = descriptors(_rooted(args.tree))
    payload = asdict(values)
    _emit(args, {"tree": args.tree, "descriptors": payload}, [f"{k}: {v}" for k, v in payload.items()])
    return EXIT_OK


def _cmd_predict(args: argparse.Namespace) -> int:
    tree = _rooted(args.tree)
    value = predict(_resolve_model(args.model), tree)
    payload = {"tree": canonical_form(tree), "model": args.model, "bp_celsius": value}
    _emit(args, payload, [f"{value:.3f}"])
    return EXIT_OK


def _cmd_minimize(args: argparse.Namespace) -> int:
    model = None if args.model is None else _resolve_model(args.model)
    if args.method == "theory":
        if args.rooted:
            msg = "Expected no --rooted with --method theory, which fixes the rootedness per objective."
            raise ValueError(msg)
        result = minimize_theory(args.order, args.objective, model)
    else:
        result = minimize_brute(args.order, args.objective, rooted=args.rooted, model=model)
    value = _number(result.value)
    header = (
        f"{result.objective} over order {result.order} ({result.method}): "
        f"minimum {value}, {len(result)} minimizer(s)"
    )
    _emit(args, {**result.to_dict(), "value": value}, [header, *result.members])
    return EXIT_OK


def _cmd_huffman(args: argparse.Namespace) -> int:
    tuple_ = GeneratingTuple(args.weights, args.degrees)
    weighted, directed, trace = generalized_huffman(tuple_)
    value = _number(vertex_weighted_wiener(weighted))
    edges = [list(edge) for edge in weighted.tree.edges]
    payload: dict[str, Any] = {
        "edges": edges,
        "parent": list(directed.parent),
        "terminal": directed.terminal,
        "vwwi": value,
    }
    lines = [
        "edges: " + " ".join(f"{u}-{v}" for u, v in edges),
        f"terminal: {directed.terminal}",
        f"vwwi: {value}",
    ]
    if args.trace:
        payload["trace"] = [
            {"vertex": s.vertex, "pendants": list(s.pendants), "weight": _number(s.weight)}
            for s in trace.steps
        ]
        lines += [
            f"step {i}: {s.vertex} <- {list(s.pendants)}, weight {_number(s.weight)}"
            for i, s in enumerate(trace.steps, 1)
        ]
    if args.all_ties:
        outputs = [[list(edge) for edge in tree.tree.edges] for tree in huffman_trees(tuple_)]
        payload["all_ties"] = outputs
        lines.append(f"tie-break outputs: {len(outputs)}")
        lines += [" ".join(f"{u}-{v}" for u, v in found) for found in outputs]
    _emit(args, payload, lines)
    return EXIT_OK


def _report_lines(check: str, report: PropertyReport) -> list[str]:
    lines = [f"check: {check}", f"seed: {report.seed}", f"trials: {report.trials}", f"cases: {report.checks}"]
    lines += [f"counterexample ({c.check}, trial {c.trial}): {c.witness}" for c in report.counterexamples]
    lines.append(f"result: {'pass' if report.passed else 'fail'}")
    return lines


def _verify_report(args: argparse.Namespace, report: PropertyReport) -> int:
    _emit(args, {"check": args.check, **report.to_dict()}, _report_lines(args.check, report))
    return EXIT_OK if report.passed else EXIT_VERIFICATION


def _verify_c_conditions(args: argparse.Namespace) -> int:
    model = _resolve_model(args.model or "reg1")
    report = check_c_conditions(model.c, model.b3).to_dict()
    lines = [f"{name}: {str(holds).lower()}" for name, holds in report.items()]
    _emit(args, {"check": args.check, "model": args.model or "reg1", "conditions": report}, lines)
    return EXIT_OK


def _verify_conjecture(args: argparse.Namespace) -> int:
    rows = audit_conjecture_bp0(args.orders or range(4, 15))
    lines = [
        f"n={row.order}: bp {row.value:.3f}, minimizers {', '.join(row.argmin)}, "
        f"extremely branched {'yes' if row.all_extremely_branched else 'no'}, "
        f"restricted agrees {'yes' if row.restricted_agrees else 'no'}, "
        f"intersection matches {'yes' if row.matches_intersection else 'no'}"
        for row in rows
    ]
    passed = all(row.all_extremely_branched for row in rows)
    lines.append(f"result: {'pass' if passed else 'fail'}")
    _emit(args, {"check": args.check, "passed": passed, "rows": [row.to_dict() for row in rows]}, lines)
    return EXIT_OK if passed else EXIT_VERIFICATION


def _verify_epsilon(args: argparse.Namespace) -> int:
    rows = check_epsilon_reduction(args.orders or range(4, 11), args.epsilon)
    lines = [f"n={row.order}: {'agrees' if row.agrees else 'differs'}" for row in rows]
    passed = all(row.agrees for row in rows)
    lines.append(f"result: {'pass' if passed else 'fail'}")
    _emit(args, {"check": args.check, "passed": passed, "rows": [row.to_dict() for row in rows]}, lines)
    return EXIT_OK if passed else EXIT_VERIFICATION


def _cmd_verify(args: argparse.Namespace) -> int:
    if args.check == "c-conditions":
        return _verify_c_conditions(args)
    if args.check == "conjecture-bp0":
        return _verify_conjecture(args)
    if args.check == "epsilon-reduction":
        return _verify_epsilon(args)
    if args.check == "huffman-optimality":
        report = check_huffman_optimality(args.max_order or 9, args.trials or 500, args.seed)
    elif args.check == "lemma-suite":
        report = lemma_property_suite(args.seed, args.trials or 1000, args.max_order or 9)
    else:
        report = check_directed_identity(args.max_order or 8, args.seed)
    return _verify_report(args, report)


def _cmd_fit(args: argparse.Namespace) -> int:
    records = load_dataset(args.data)
    model = fit(records, parse_active(args.active))
    stats = precision(model, records)
    if args.out is not None:
        save_model(model, args.out)
    payload = {"model": model.to_dict(), "n": len(records), "correlation": stats.correlation, "sd": stats.sd}
    lines = [f"{name}: {value}" for name, value in model.to_dict().items()]
    lines += [f"n: {len(records)}", f"correlation: {stats.correlation:.6f}", f"sd: {stats.sd:.6f}"]
    _emit(args, payload, lines)
    return EXIT_OK


def _cmd_stats(args: argparse.Namespace) -> int:
    records = load_dataset(args.data)
    stats = precision(_resolve_model(args.model), records)
    payload = {"model": args.model, "n": len(records), "correlation": stats.correlation, "sd": stats.sd}
    lines = [f"n: {len(records)}", f"correlation: {stats.correlation:.6f}", f"sd: {stats.sd:.6f}"]
    _emit(args, payload, lines)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    """Build the argument parser with one subcommand per operation."""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit a single JSON object")
    common.add_argument("-v", "--verbose", action="store_true", help="log debug messages to stderr")

    parser = argparse.ArgumentParser(prog="chemtrees", description="Topological indices of chemical trees.")
    commands = parser.add_subparsers(dest="command", required=True)

    def command(name: str, handler: _Handler, text: str) -> argparse.ArgumentParser:
        sub = commands.add_parser(name, parents=[common], help=text, description=text)
        sub.set_defaults(handler=handler)
        return sub

    sub = command("enumerate", _cmd_enumerate, "List trees of an order by canonical form.")
    sub.add_argument("--order", type=int, required=True)
    sub.add_argument("--rooted", action="store_true", help="pendent-rooted (alcohol) skeletons")
    sub.add_argument("--extremely-branched", action="store_true")
    sub.add_argument("--max-degree", type=int, default=None)
    sub.add_argument("--count-only", action="store_true")

    sub = command("index", _cmd_index, "Evaluate a topological index of one tree.")
    sub.add_argument("--tree", required=True, help="grammar form such as O(C(C)) or a JSON parent array")
    sub.add_argument("--index", choices=INDEX_NAMES, required=True)
    sub.add_argument("--coeffs", type=_costs, default=None, help="degree costs c1,c2,c3,c4 (default: reg1)")
    sub.add_argument("--b3", type=float, default=None, help="M2 weight of c (default: reg1; 0 with --coeffs)")

    sub = command("descriptors", _cmd_descriptors, "Print the regression descriptors of an alcohol skeleton.")
    sub.add_argument("--tree", required=True)

    sub = command("predict", _cmd_predict, "Predict the boiling point of an alcohol skeleton.")
    sub.add_argument("--model", default="basic", help="basic, reg1, reg2 or a model JSON file")
    sub.add_argument("--tree", required=True)

    sub = command("minimize", _cmd_minimize, "Find every tree minimizing an objective.")
    sub.add_argument("--order", type=int, required=True)
    sub.add_argument("--objective", choices=OBJECTIVE_NAMES, required=True)
    sub.add_argument("--method", choices=METHODS, default="brute")
    sub.add_argument("--rooted", action="store_true")
    sub.add_argument("--model", default=None, help="source of the costs of c and c1 (default: reg1)")

    sub = command("huffman", _cmd_huffman, "Run the generalized Huffman algorithm on a generating tuple.")
    sub.add_argument("--weights", type=_floats, required=True)
    sub.add_argument("--degrees", type=_ints, required=True)
    sub.add_argument("--trace", action="store_true", help="print every merge")
    sub.add_argument("--all-ties", action="store_true", help="list the outputs of every tie-break")

    sub = command("verify", _cmd_verify, "Run a verification check.")
    sub.add_argument("--check", choices=CHECKS, required=True)
    sub.add_argument("--model", choices=sorted(PRESETS), default=None)
    sub.add_argument("--max-order", type=int, default=None)
    sub.add_argument("--trials", type=int, default=None)
    sub.add_argument("--seed", type=int, default=0)
    sub.add_argument("--orders", type=_orders, default=None, help="4..14 or a comma-separated list")
    sub.add_argument("--epsilon", type=float, default=1e-3)

    sub = command("fit", _cmd_fit, "Fit a regression model to a boiling-point dataset.")
    sub.add_argument("--data", required=True)
    sub.add_argument("--active", required=True, help="comma-separated regressors such as wio3,n2,n3,s2,m2")
    sub.add_argument("--out", default=None, help="write the fitted model as JSON")

    sub = command("stats", _cmd_stats, "Correlation and standard deviation of a model on a dataset.")
    sub.add_argument("--model", required=True, help="basic, reg1, reg2 or a model JSON file")
    sub.add_argument("--data", required=True)
    return parser


def run(argv: Sequence[str] | None = None) -> int:
    """Run the command line and return its exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exit_:
        return exit_.code if isinstance(exit_.code, int) else EXIT_USAGE

    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
        force=True,
    )
    logger.debug("Running %s with %s", args.command, vars(args))
    try:
        return args.handler(args)
    except PreconditionError as error:
        print(f"chemtrees: precondition failed: {error}", file=sys.stderr)
        return EXIT_PRECONDITION
    except (ValueError, TypeError, OSError) as error:
        print(f"chemtrees: error: {error}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())
