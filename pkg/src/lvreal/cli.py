"""Command-line front door.

Every subcommand reads JSON from files (or stdin via "-"), runs one of the
library's machines or constructions with seeded, reproducible parameters and
emits a JSON (or CSV) payload whose numerics are exact rational strings or
integer counts; the global configuration is echoed into every payload.

Exit codes: 0 ok, 1 usage or malformed input, 2 recognized failure,
3 exhaustion.  The 2/3 distinction mirrors the run outcomes so that shell
scripts can branch on failure recognition versus fuel running out.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .choices import ldl_search, majority_vote
from .engine import lv_compose, lv_estimate_success, wwkl_machine
from .exact import format_rational, parse_rational
from .ivt import PwlFunction, Zero, ivt_probabilistic, ivt_trisect
from .machines import auc_machine, ivt_machine
from .nash import BimatrixGame, nash_solve, nash_verify
from .rdiv import rdiv, rdiv_stream
from .sampling import CANTOR, advice_sample
from .streams import BitStream, sds_from_rational
from .svc import SvcTable
from .trees import NegClosedUnit, product_amplify, tree_from_json_dict, tree_measure_exact

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_FAILED = 2
EXIT_EXHAUSTED = 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"error: {message}\n")
        sys.exit(EXIT_USAGE)


def _read_json(path: str) -> dict:
    try:
        if path == "-":
            return json.load(sys.stdin)
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        sys.stderr.write(f"error: cannot read {path}: {exc}\n")
        sys.exit(EXIT_USAGE)


def _emit(payload: dict, args) -> None:
    payload["config"] = {
        "seed": args.seed,
        "fuel": args.fuel,
        "precision_bits": args.precision_bits,
        "trials": args.trials,
    }
    if args.output == "csv":
        for key in sorted(_flatten(payload)):
            print(f"{key},{_flatten(payload)[key]}")
    else:
        print(json.dumps(payload, sort_keys=True, indent=2))


def _flatten(data, prefix=""):
    flat = {}
    if isinstance(data, dict):
        for key, value in data.items():
            flat.update(_flatten(value, f"{prefix}{key}."))
    elif isinstance(data, list):
        for i, value in enumerate(data):
            flat.update(_flatten(value, f"{prefix}{i}."))
    else:
        flat[prefix[:-1]] = data
    return flat


def _tree_arg(path: str):
    data = _read_json(path)
    try:
        return tree_from_json_dict(data)
    except (KeyError, ValueError) as exc:
        sys.stderr.write(f"error: malformed tree: {exc}\n")
        sys.exit(EXIT_USAGE)


def _wwkl_out_len(tree) -> int:
    longest = max((len(w) for w in tree.antichain()), default=0)
    return max(8, longest)


def cmd_wwkl(args) -> int:
    tree = _tree_arg(args.tree)
    estimate = lv_estimate_success(
        wwkl_machine(tree), tree, args.trials, args.seed, args.fuel, _wwkl_out_len(tree)
    )
    payload = estimate.to_json_dict()
    payload["exact"] = format_rational(tree_measure_exact(tree))
    _emit(payload, args)
    return EXIT_OK


def cmd_nash(args) -> int:
    data = _read_json(args.game)
    try:
        game = BimatrixGame.from_json_dict(data)
    except (KeyError, ValueError, TypeError, ZeroDivisionError) as exc:
        sys.stderr.write(f"error: malformed game: {exc}\n")
        return EXIT_USAGE
    pair = nash_solve(game)
    if pair is None:
        _emit({"found": False}, args)
        return EXIT_FAILED
    rows, cols = pair.support()
    _emit(
        {
            "x": [format_rational(v) for v in pair.x],
            "y": [format_rational(v) for v in pair.y],
            "verified": nash_verify(game, pair),
            "support": [list(rows), list(cols)],
        },
        args,
    )
    return EXIT_OK


def cmd_rdiv(args) -> int:
    try:
        x, y = parse_rational(args.x), parse_rational(args.y)
    except ValueError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE
    exact = rdiv(x, y)
    outcome = rdiv_stream(
        sds_from_rational(x), sds_from_rational(y), args.precision_bits, args.fuel
    )
    _emit(
        {
            "exact": format_rational(exact),
            "stream_value": format_rational(outcome.value),
            "mind_changes": outcome.mind_changes,
            "witness_precision": outcome.witness_precision,
            "outcome": "exhausted" if outcome.exhausted else "succeeding",
        },
        args,
    )
    return EXIT_EXHAUSTED if outcome.exhausted else EXIT_OK


def cmd_ivt(args) -> int:
    data = _read_json(args.function)
    try:
        f = PwlFunction.from_json_dict(data)
    except (KeyError, ValueError) as exc:
        sys.stderr.write(f"error: malformed function: {exc}\n")
        return EXIT_USAGE
    k = args.precision_bits
    if args.advice_b is None:
        result = ivt_trisect(f, k, args.fuel)
        if isinstance(result, Zero):
            _emit({"outcome": "succeeding", "zero": str(result.value)}, args)
            return EXIT_OK
        lo, hi = result.interval
        _emit(
            {"outcome": "exhausted", "interval": [format_rational(lo), format_rational(hi)]},
            args,
        )
        return EXIT_EXHAUSTED
    advice_bits = advice_sample(CANTOR, args.seed)
    advice = BitStream(lambda n: args.advice_b if n == 0 else advice_bits.bit(n))
    run = ivt_probabilistic(f, advice, k, args.fuel)
    payload = {"outcome": run.kind}
    if run.value is not None:
        payload["value"] = format_rational(run.value)
    if run.step is not None:
        payload["failed_at"] = run.step
    _emit(payload, args)
    return {"succeeding": EXIT_OK, "failed": EXIT_FAILED, "exhausted": EXIT_EXHAUSTED}[run.kind]


def cmd_svc(args) -> int:
    try:
        table = SvcTable(parse_rational(args.epsilon))
        if args.remaining is not None:
            value = table.remaining_length(args.remaining)
            _emit({"remaining_length": format_rational(value), "depth": args.remaining}, args)
            return EXIT_OK
        lo, hi = table.interval(args.word)
        _emit({"lo": format_rational(lo), "hi": format_rational(hi)}, args)
        return EXIT_OK
    except ValueError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE


def cmd_density(args) -> int:
    tree = _tree_arg(args.tree)
    witness = ldl_search(tree, args.k, args.fuel)
    if witness is None:
        _emit({"outcome": "exhausted"}, args)
        return EXIT_EXHAUSTED
    _emit(
        {
            "word": witness.word,
            "relative_measure": format_rational(witness.relative_measure),
            "rejected": witness.rejected,
        },
        args,
    )
    return EXIT_OK


def cmd_amplify(args) -> int:
    tree_a, tree_b = _tree_arg(args.tree_a), _tree_arg(args.tree_b)
    combined = product_amplify(tree_a, tree_b)
    mu_a, mu_b = tree_measure_exact(tree_a), tree_measure_exact(tree_b)
    _emit(
        {
            "excluded": list(combined.antichain()),
            "measure": format_rational(tree_measure_exact(combined)),
            "law": format_rational(1 - (1 - mu_a) * (1 - mu_b)),
        },
        args,
    )
    return EXIT_OK


def cmd_majority(args) -> int:
    data = _read_json(args.oracle)
    try:
        depth = int(data["depth"])
        k = int(data.get("k", args.precision_bits))
        centers = {w: parse_rational(v) for w, v in data["cylinders"].items()}
    except (KeyError, ValueError, TypeError) as exc:
        sys.stderr.write(f"error: malformed oracle: {exc}\n")
        return EXIT_USAGE
    radius = Fraction(1, 1 << (k + 2))

    def oracle(word: str):
        if len(word) < depth:
            return None
        center = centers.get(word[:depth])
        if center is None:
            return None
        return center - radius, center + radius

    value = majority_vote(oracle, k, max_depth=max(depth, args.max_depth))
    if value is None:
        _emit({"outcome": "exhausted"}, args)
        return EXIT_EXHAUSTED
    _emit({"value": str(value), "value_rational": format_rational(value.to_fraction())}, args)
    return EXIT_OK


def cmd_estimate(args) -> int:
    config = _read_json(args.config)
    k = args.precision_bits
    try:
        if args.machine == "wwkl":
            tree = tree_from_json_dict(config["tree"])
            machine, input_value = wwkl_machine(tree), tree
            out_len = int(config.get("out_len", _wwkl_out_len(tree)))
        elif args.machine == "rdiv":
            if config.get("full"):
                input_value = NegClosedUnit.full()
            else:
                input_value = NegClosedUnit.singleton(
                    parse_rational(config["singleton"]), int(config.get("neg_info_at", 4))
                )
            machine, out_len = auc_machine(k), k
        elif args.machine == "ivt":
            input_value = PwlFunction.from_json_dict(config["function"])
            machine, out_len = ivt_machine(k), k
        elif args.machine == "compose":
            tree_f = tree_from_json_dict(config["f_tree"])
            tree_g = tree_from_json_dict(config["g_tree"])
            g_len = int(config.get("g_out_len", _wwkl_out_len(tree_g)))
            machine = lv_compose(
                wwkl_machine(tree_f),
                wwkl_machine(tree_g),
                g_out_len=g_len,
                bridge=lambda _inp, _gout: tree_f,
            )
            input_value = tree_g
            out_len = int(config.get("out_len", _wwkl_out_len(tree_f)))
        else:
            raise ValueError(f"unknown machine {args.machine!r}")
    except (KeyError, ValueError, TypeError) as exc:
        sys.stderr.write(f"error: malformed estimate config: {exc}\n")
        return EXIT_USAGE
    estimate = lv_estimate_success(machine, input_value, args.trials, args.seed, args.fuel, out_len)
    _emit(estimate.to_json_dict(), args)
    return EXIT_OK


def build_parser() -> _Parser:
    parser = _Parser(prog="lvreal", description=__doc__)
    parser.add_argument("--seed", type=int, default=0, help="64-bit PRNG seed (default 0)")
    parser.add_argument("--fuel", type=int, default=10**6, help="step budget (default 1e6)")
    parser.add_argument(
        "--precision-bits", type=int, default=30, dest="precision_bits",
        help="output precision 2^-k (default 30)",
    )
    parser.add_argument("--trials", type=int, default=10000, help="Monte Carlo trials")
    parser.add_argument("--output", choices=("json", "csv"), default="json")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("wwkl", help="estimate the success measure of path sampling")
    p.add_argument("--tree", required=True, help='tree JSON: {"excluded": ["00", ...]}')
    p.set_defaults(func=cmd_wwkl)

    p = sub.add_parser("nash", help="solve a bimatrix game exactly")
    p.add_argument("--game", required=True, help='game JSON: {"A": [["1","-1"],...], "B": ...}')
    p.set_defaults(func=cmd_nash)

    p = sub.add_parser("rdiv", help="robust division, exact and via streams")
    p.add_argument("--x", required=True)
    p.add_argument("--y", required=True)
    p.set_defaults(func=cmd_rdiv)

    p = sub.add_parser("ivt", help="zero finding for a PWL function")
    p.add_argument("--function", required=True, help='PWL JSON: {"breakpoints": [["0","-1"],...]}')
    p.add_argument("--advice-b", type=int, choices=(0, 1), default=None, dest="advice_b")
    p.set_defaults(func=cmd_ivt)

    p = sub.add_parser("svc", help="fat-Cantor interval table queries")
    p.add_argument("--epsilon", required=True)
    p.add_argument("--word", default="")
    p.add_argument("--remaining", type=int, default=None, help="depth for the remaining length")
    p.set_defaults(func=cmd_svc)

    p = sub.add_parser("density", help="search a high-density cylinder")
    p.add_argument("--tree", required=True)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_density)

    p = sub.add_parser("amplify", help="parallel-sum product of two trees")
    p.add_argument("--tree-a", required=True, dest="tree_a")
    p.add_argument("--tree-b", required=True, dest="tree_b")
    p.set_defaults(func=cmd_amplify)

    p = sub.add_parser("majority", help="derandomize by majority vote")
    p.add_argument("--oracle", required=True, help='oracle JSON: {"depth": 3, "cylinders": {...}}')
    p.add_argument("--max-depth", type=int, default=8, dest="max_depth")
    p.set_defaults(func=cmd_majority)

    p = sub.add_parser("estimate", help="empirical success measure of a machine")
    p.add_argument("--machine", required=True, choices=("wwkl", "rdiv", "ivt", "compose"))
    p.add_argument("--config", required=True, help="machine-specific JSON config")
    p.set_defaults(func=cmd_estimate)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
