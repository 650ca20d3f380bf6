"""Command-line interface.

Every verb prints one JSON report on stdout.  Exit status is 0 whenever an
answer was computed (the answer itself lives in the payload), 1 on internal
errors and timeouts, 2 on invalid input.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import logging
import sys
import time
from fractions import Fraction
from pathlib import Path

from . import decision, groebner, hilbert, reduction
from .action import state
from .exterior import ExteriorVector
from .poly import parse_poly

log = logging.getLogger("semistab")

VERBS = ("reduce", "solve-sc", "solve-esc", "groebner", "state", "hull",
         "hilbert-point", "semistable", "gotzmann")


class InputError(Exception):
    """Invalid user input; maps to exit status 2."""


def _read(path: str, digests: dict, name: str) -> str:
    try:
        data = Path(path).read_bytes()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from exc
    digests[name] = hashlib.sha256(data).hexdigest()
    return data.decode("utf-8")


def _read_json(path: str, digests: dict, name: str) -> dict:
    try:
        return json.loads(_read(path, digests, name))
    except json.JSONDecodeError as exc:
        raise InputError(f"{path} is not valid JSON: {exc}") from exc


def load_ideal_text(text: str) -> list:
    """One polynomial per line; blank lines and ``#`` comments are skipped."""
    polys = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            polys.append(parse_poly(line))
    return polys


def _parse_rationals(text: str) -> list:
    try:
        return [Fraction(x.strip()) for x in text.split(",") if x.strip()]
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"bad rational list {text!r}") from exc


def _load_point(args, digests) -> ExteriorVector:
    return ExteriorVector.from_dict(_read_json(args.point, digests, "point"))


def _point_from_ideal(args, digests) -> tuple:
    gens = load_ideal_text(_read(args.ideal, digests, "ideal"))
    if not gens:
        raise InputError("the ideal file contains no polynomials")
    return hilbert.hilbert_point(gens, args.degree, args.nvars)


def _cmd_reduce(args, digests, deadline):
    system = reduction.PolySystem.from_dict(_read_json(args.system, digests, "system"))
    inst = reduction.reduce_sysal_to_sc(system)
    payload = inst.to_dict()
    if args.out:
        Path(args.out).write_text(json.dumps(payload, sort_keys=True, indent=1) + "\n")
    return payload


def _cmd_solve_sc(args, digests, deadline):
    inst = reduction.SCInstance.from_dict(_read_json(args.instance, digests, "instance"))
    return {"solvable": decision.solve_sc(inst, deadline)}


def _cmd_solve_esc(args, digests, deadline):
    inst = reduction.ESCInstance.from_dict(_read_json(args.instance, digests, "instance"))
    return {"solvable": decision.solve_esc(inst, deadline)}


def _cmd_groebner(args, digests, deadline):
    gens = load_ideal_text(_read(args.ideal, digests, "ideal"))
    basis = groebner.buchberger(gens, args.order, deadline)
    return {
        "basis": basis.strings(),
        "contains_one": basis.contains_one(),
        "order": args.order,
        "solvable": not basis.contains_one(),
    }


def _cmd_state(args, digests, deadline):
    v = _load_point(args, digests)
    return {"weights": [list(w) for w in sorted(state(v), reverse=True)]}


def _cmd_hull(args, digests, deadline):
    if args.point:
        v = _load_point(args, digests)
        weights = sorted(state(v), reverse=True)
        xi = decision.xi_point(v.d, v.b, v.r)
    else:
        data = _read_json(args.weights, digests, "weights")
        weights = [tuple(int(c) for c in w) for w in data["weights"]]
        xi = tuple(Fraction(str(c)) for c in data["xi"])
    return {"in_hull": decision.in_hull(weights, xi), "xi": [str(c) for c in xi]}


def _cmd_hilbert_point(args, digests, deadline):
    v, b = _point_from_ideal(args, digests)
    payload = v.to_dict()
    if args.out:
        Path(args.out).write_text(json.dumps(payload, sort_keys=True, indent=1) + "\n")
    return payload


def _cmd_semistable(args, digests, deadline):
    if args.point:
        v = _load_point(args, digests)
    elif args.ideal:
        if args.degree is None:
            raise InputError("--degree is required with --ideal")
        v, _ = _point_from_ideal(args, digests)
    else:
        raise InputError("give either --ideal or --point")
    return decision.is_semistable(v, jobs=args.jobs, deadline=deadline).to_dict()


def _cmd_gotzmann(args, digests, deadline):
    P = hilbert.upoly(_parse_rationals(args.hilbert_poly))
    exps = hilbert.gotzmann_decomposition(P)
    payload = {
        "decomposition": exps,
        "gotzmann_number": len(exps),
        "hilbert_poly": hilbert.format_upoly(P),
    }
    if args.nvars is not None and args.degree is not None:
        payload["Q"] = hilbert.q_of_d(P, args.nvars, args.degree)
    return payload


COMMANDS = {
    "reduce": _cmd_reduce,
    "solve-sc": _cmd_solve_sc,
    "solve-esc": _cmd_solve_esc,
    "groebner": _cmd_groebner,
    "state": _cmd_state,
    "hull": _cmd_hull,
    "hilbert-point": _cmd_hilbert_point,
    "semistable": _cmd_semistable,
    "gotzmann": _cmd_gotzmann,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--output", choices=("json", "text"), default="json")
    common.add_argument("--timeout", type=float, default=None, metavar="SECONDS",
                        help="abort Groebner computations after this many seconds")
    common.add_argument("--timing", action="store_true",
                        help="include wall time in the report")
    common.add_argument("-v", "--verbose", action="store_true")

    parser = argparse.ArgumentParser(prog="semistab", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="verb", required=True, metavar="VERB")

    p = sub.add_parser("reduce", parents=[common], help="polynomial system -> SC instance")
    p.add_argument("--system", required=True)
    p.add_argument("--out")

    p = sub.add_parser("solve-sc", parents=[common], help="decide an SC instance")
    p.add_argument("--instance", required=True)

    p = sub.add_parser("solve-esc", parents=[common], help="decide an ESC instance")
    p.add_argument("--instance", required=True)

    p = sub.add_parser("groebner", parents=[common], help="reduced Groebner basis")
    p.add_argument("--ideal", required=True)
    p.add_argument("--order", choices=groebner.ORDERS, default=groebner.LEX)

    p = sub.add_parser("state", parents=[common], help="weights of a rational point")
    p.add_argument("--point", required=True)

    p = sub.add_parser("hull", parents=[common], help="is xi in the convex hull of the weights")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--point")
    src.add_argument("--weights")

    p = sub.add_parser("hilbert-point", parents=[common], help="Hilbert point of an ideal")
    p.add_argument("--ideal", required=True)
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--nvars", type=int)
    p.add_argument("--out")

    p = sub.add_parser("semistable", parents=[common], help="GIT-semistability verdict")
    p.add_argument("--ideal")
    p.add_argument("--point")
    p.add_argument("--degree", type=int)
    p.add_argument("--nvars", type=int)
    p.add_argument("--jobs", type=int, default=1)

    p = sub.add_parser("gotzmann", parents=[common], help="Gotzmann number of a Hilbert polynomial")
    p.add_argument("--hilbert-poly", required=True, metavar="C0,C1,...",
                   help="coefficients in t, constant term first")
    p.add_argument("--nvars", type=int)
    p.add_argument("--degree", type=int)
    return parser


def parse_args(argv=None) -> argparse.Namespace:
    return build_parser().parse_args(argv)


def _emit(report: dict, mode: str, stream):
    if mode == "json":
        stream.write(json.dumps(report, sort_keys=True) + "\n")
        return
    for key in sorted(report):
        value = report[key]
        if isinstance(value, dict):
            stream.write(f"{key}:\n")
            for k in sorted(value):
                stream.write(f"  {k}: {_text(value[k])}\n")
        else:
            stream.write(f"{key}: {_text(value)}\n")


def _text(value) -> str:
    if isinstance(value, list) and value and all(isinstance(v, str) for v in value):
        return "; ".join(value)
    if isinstance(value, (dict, list)):
        return json.dumps(value, sort_keys=True)
    return str(value)


def run(args: argparse.Namespace, stream=None) -> int:
    stream = stream or sys.stdout
    digests: dict = {}
    deadline = decision.now_plus(args.timeout)
    started = time.perf_counter()
    report = {"verb": args.verb, "inputs": digests}
    try:
        report["result"] = COMMANDS[args.verb](args, digests, deadline)
        code = 0
    except groebner.GroebnerTimeout as exc:
        report["error"] = {"kind": "timeout", "message": str(exc)}
        code = 1
    except (InputError, ValueError, KeyError, TypeError) as exc:
        report["error"] = {"kind": "invalid-input", "message": str(exc)}
        code = 2
    except Exception as exc:  # noqa: BLE001
        log.exception("internal error")
        report["error"] = {"kind": "internal", "message": repr(exc)}
        code = 1
    elapsed = time.perf_counter() - started
    if args.timing:
        report["wall_time"] = round(elapsed, 6)
    log.info("%s finished in %.3fs", args.verb, elapsed)
    _emit(report, args.output, stream)
    return code


def main(argv=None) -> int:
    args = parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s", stream=sys.stderr)
    return run(args)


if __name__ == "__main__":
    sys.exit(main())
