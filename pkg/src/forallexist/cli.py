"""Command-line front end.

Exit status: 0 valid (or resolved), 1 counterexample, 2 error or unresolved.
All numbers in and out are exact; rationals travel as ``"p/q"`` strings.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from typing import List, Optional

from .bodies import body_from_dict, body_to_dict
from .frobenius import NotPointedError, frobenius_report
from .generators import random_statement
from .linalg import DimensionError, RankDeficientError
from .oracle import decide_naive
from .orthant import solve as solve_orthant
from .pipeline import decide
from .polyhedra import BudgetExceeded, UnboundedError
from .statement import COUNTEREXAMPLE, InputStatement

EXIT_VALID, EXIT_COUNTEREXAMPLE, EXIT_ERROR = 0, 1, 2


class InputError(ValueError):
    pass


def _emit(obj) -> None:
    sys.stdout.write(json.dumps(obj, sort_keys=True) + "\n")


def _load(path: Optional[str]) -> dict:
    if path is None:
        raise InputError("--input is required")
    try:
        with open(path) as fh:
            data = json.load(fh)
    except json.JSONDecodeError as exc:
        raise InputError(f"malformed JSON in {path}: {exc}") from exc
    if not isinstance(data, dict):
        raise InputError("instance file must hold a JSON object")
    return data


def _int_matrix(rows) -> List[List[int]]:
    if not isinstance(rows, list) or not rows or not all(isinstance(r, list) for r in rows):
        raise InputError("W must be a non-empty list of rows")
    for r in rows:
        for x in r:
            if not isinstance(x, int) or isinstance(x, bool):
                raise InputError(f"W entries must be integers, got {x!r}")
    return rows


def load_statement(data: dict) -> InputStatement:
    if "W" not in data or "Q" not in data:
        raise InputError("instance needs both 'W' and 'Q'")
    W = _int_matrix(data["W"])
    Q = body_from_dict(data["Q"])
    return InputStatement(W, Q)


def _verdict_exit(status: str) -> int:
    return EXIT_COUNTEREXAMPLE if status == COUNTEREXAMPLE else EXIT_VALID


def cmd_decide(args) -> int:
    S = load_statement(_load(args.input))
    if args.oracle:
        v = decide_naive(S, budget=args.budget)
    else:
        v = decide(S, l1_cap=args.l1_cap, budget=args.budget)
    _emit(v.to_json())
    return _verdict_exit(v.status)


def cmd_oracle(args) -> int:
    args.oracle = True
    return cmd_decide(args)


def cmd_trace(args) -> int:
    S = load_statement(_load(args.input))
    v = decide(S, l1_cap=args.l1_cap, budget=args.budget)
    out = dict(v.trace)
    out["verdict"] = v.to_json()
    _emit(out)
    return _verdict_exit(v.status)


def cmd_eq3(args) -> int:
    data = _load(args.input)
    if "Q" not in data or "C" not in data:
        raise InputError("eq3 instance needs 'Q' and 'C'")
    Q = body_from_dict(data["Q"])
    C = [tuple(c) for c in data["C"]]
    if any(len(c) != Q.dim for c in C):
        raise DimensionError("shift vectors must match the dimension of Q")
    b = solve_orthant(Q, C)
    if b is None:
        _emit({"status": "valid"})
        return EXIT_VALID
    _emit({"status": "counterexample", "b": list(b), "verified": True})
    return EXIT_COUNTEREXAMPLE


def cmd_frobenius(args) -> int:
    data = _load(args.input)
    W = _int_matrix(data.get("W"))
    t_max = args.t_max if args.t_max is not None else data.get("t_max")
    z_box = args.z_box if args.z_box is not None else data.get("z_box", 200)
    report = frobenius_report(W, t_max=t_max, z_box=z_box)
    _emit(report.to_json())
    return EXIT_VALID if report.exact_t is not None else EXIT_ERROR


def cmd_suite(args) -> int:
    """Random instances from ``--seed``; pipeline and oracle side by side."""
    rng = random.Random(args.seed)
    results = []
    agree = True
    for i in range(args.count):
        kind = rng.choice(["box", "box", "box", "polytope", "ball"])
        S = random_statement(rng, kind=kind)
        v = decide(S, l1_cap=args.l1_cap, budget=args.budget)
        o = decide_naive(S, budget=args.budget)
        same = v.status == o.status
        agree &= same
        results.append({
            "index": i,
            "W": [list(r) for r in S.W],
            "Q": body_to_dict(S.Q),
            "decide": v.to_json(),
            "oracle": o.to_json(),
            "agree": same,
        })
    _emit({"seed": args.seed, "count": args.count, "all_agree": agree, "instances": results})
    return EXIT_VALID if agree else EXIT_ERROR


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", help="instance JSON file")
    common.add_argument("--l1-cap", type=int, default=None, help="override the proximity multiplicity cap")
    common.add_argument("--seed", type=int, default=0, help="seed for randomized suites")
    common.add_argument("--budget", type=int, default=2_000_000, help="enumeration size guard")

    parser = argparse.ArgumentParser(prog="forallexist", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("decide", parents=[common], help="decide a forall-exist statement")
    p.add_argument("--oracle", action="store_true", help="use the brute-force oracle instead")
    p.set_defaults(func=cmd_decide)

    p = sub.add_parser("oracle", parents=[common], help="brute-force decision")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("trace", parents=[common], help="per-stage reduction statistics")
    p.set_defaults(func=cmd_trace)

    p = sub.add_parser("eq3", parents=[common], help="decide a terminal orthant problem (Q, C)")
    p.set_defaults(func=cmd_eq3)

    p = sub.add_parser("frobenius", parents=[common], help="diagonal Frobenius report")
    p.add_argument("--t-max", type=int, default=None)
    p.add_argument("--z-box", type=int, default=None)
    p.set_defaults(func=cmd_frobenius)

    p = sub.add_parser("suite", parents=[common], help="seeded random agreement suite")
    p.add_argument("--count", type=int, default=20)
    p.set_defaults(func=cmd_suite)
    return parser


def run(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (InputError, KeyError, TypeError) as exc:
        msg = f"invalid instance: {exc}"
    except DimensionError as exc:
        msg = f"dimension mismatch: {exc}"
    except UnboundedError as exc:
        msg = f"unbounded Q: {exc}"
    except BudgetExceeded as exc:
        msg = f"budget exceeded: {exc}"
    except NotPointedError as exc:
        msg = f"cone not pointed: {exc}"
    except RankDeficientError as exc:
        msg = f"rank deficient: {exc}"
    except (OSError, ValueError) as exc:
        msg = f"error: {exc}"
    _emit({"status": "error", "message": msg})
    print(msg, file=sys.stderr)
    return EXIT_ERROR


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
