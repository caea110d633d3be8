"""Command-line interface.

Every command prints exactly one JSON document (sorted keys) on stdout.
Exit codes: 0 success or a true answer, 1 a checked false answer or
malformed input, 2 internal errors, resource limits and usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import gkm, limits, ordinary, piecewise, stanley_reisner, suites, zlattice
from .errors import (
    ContractViolation,
    IncompatibleElementError,
    InvalidFanError,
    ResourceLimitError,
)
from .fan import Fan, require_valid, validate

EXIT_OK, EXIT_FALSE, EXIT_INTERNAL = 0, 1, 2


class UsageError(Exception):
    pass


class HelpRequested(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # keep stdout pure JSON: usage errors and help become payloads
    def error(self, message):
        raise UsageError(message)

    def print_help(self, file=None):
        raise HelpRequested(self.format_help())


def _emit(payload: dict) -> None:
    sys.stdout.write(json.dumps(payload, sort_keys=True) + "\n")


def _error(kind: str, message: str, **extra) -> dict:
    return {"error": {"type": kind, "message": message, **extra}}


def _read_json(path: str):
    with open(path, encoding="utf-8") as fh:
        return json.load(fh)


def _load_fan(path: str) -> Fan:
    return require_valid(Fan.from_dict(_read_json(path)))


def _load_element(fan: Fan, path: str) -> piecewise.PiecewiseElement:
    return piecewise.from_json(fan, _read_json(path))


# -- commands -------------------------------------------------------------------


def cmd_fan_validate(args) -> tuple[dict, int]:
    report = validate(Fan.from_dict(_read_json(args.fan)))
    return report.to_dict(), EXIT_OK if report.ok else EXIT_FALSE


def cmd_fan_smooth(args) -> tuple[dict, int]:
    fan = Fan.from_dict(_read_json(args.fan))
    report = validate(fan)
    if not report.checks.get("structure", False):
        raise InvalidFanError(report.issues[0].message, report)
    cones = []
    for c in fan.max_cones:
        rows = fan.ray_matrix(c)
        factors = list(zlattice.snf(rows, fan.rank).invariant_factors) if rows else []
        smooth = len(c) <= fan.rank and all(f == 1 for f in factors) and len(factors) == len(c)
        cones.append({"cone": list(c), "invariant_factors": factors, "smooth": smooth})
    ok = all(c["smooth"] for c in cones)
    return {"smooth": ok, "cones": cones}, EXIT_OK if ok else EXIT_FALSE


def cmd_fan_limits(args) -> tuple[dict, int]:
    res = limits.decide_limits(_load_fan(args.fan))
    return res.to_json(), EXIT_OK if res.enough_limits else EXIT_FALSE


def cmd_kt_member(args) -> tuple[dict, int]:
    fan = _load_fan(args.fan)
    elt = _load_element(fan, args.element)
    mode = {"all-pairs": "all_pairs", "adjacent": "adjacent_only"}[args.mode]
    bad = piecewise.first_incompatible_pair(fan, elt, mode)
    payload = {"compatible": bad is None, "failing_pair": None if bad is None else list(bad)}
    return payload, EXIT_OK if bad is None else EXIT_FALSE


def cmd_kt_express(args) -> tuple[dict, int]:
    fan = _load_fan(args.fan)
    elt = _load_element(fan, args.element)
    q = stanley_reisner.express(fan, elt)
    return {"nvars": fan.num_rays, "sr": q.to_json()}, EXIT_OK


def cmd_kt_relations(args) -> tuple[dict, int]:
    fan = _load_fan(args.fan)
    rels = [
        {"nonface": list(S), "generator": stanley_reisner.relation(fan, S).to_json()}
        for S in stanley_reisner.minimal_nonfaces(fan)
    ]
    return {"nvars": fan.num_rays, "relations": rels}, EXIT_OK


def cmd_kt_u_basis(args) -> tuple[dict, int]:
    res = piecewise.v_delta_basis_check(_load_fan(args.fan))
    payload = {
        "is_basis": res.is_basis,
        "rank": res.rank,
        "kernel_basis": [list(v) for v in res.kernel_basis],
        "witness": None if res.witness is None else [list(r) for r in res.witness],
    }
    return payload, EXIT_OK if res.is_basis else EXIT_FALSE


def cmd_kt_k0_rank(args) -> tuple[dict, int]:
    return ordinary.k0_report(_load_fan(args.fan)).to_json(), EXIT_OK


def cmd_gkm_export(args) -> tuple[dict, int]:
    return gkm.from_fan(_load_fan(args.fan)).to_dict(), EXIT_OK


def cmd_gkm_member(args) -> tuple[dict, int]:
    graph = gkm.GkmGraph.from_dict(_read_json(args.graph))
    elt = gkm.element_from_json(graph, _read_json(args.element))
    bad = gkm.first_failing_edge(graph, elt)
    return {"member": bad is None, "failing_edge": bad}, EXIT_OK if bad is None else EXIT_FALSE


def cmd_test_ideals(args) -> tuple[dict, int]:
    if args.count < 0:
        raise ValueError("--count must be nonnegative")
    reports = [
        suites.run_factorization_suite(args.seed, args.count),
        suites.run_intersection_suite(args.seed, args.count),
    ]
    if any(r.contract_violations for r in reports):
        code = EXIT_INTERNAL
    else:
        code = EXIT_OK if all(r.ok for r in reports) else EXIT_FALSE
    return {"seed": args.seed, "count": args.count, "suites": [r.to_json() for r in reports]}, code


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="toric-kt", description="Equivariant K-theory of smooth toric varieties.")
    groups = p.add_subparsers(dest="group", required=True, parser_class=_Parser)

    g = groups.add_parser("fan", help="fan checks").add_subparsers(dest="command", required=True)
    for name, fn in (("validate", cmd_fan_validate), ("smooth", cmd_fan_smooth), ("limits", cmd_fan_limits)):
        sp = g.add_parser(name)
        sp.add_argument("fan")
        sp.set_defaults(func=fn)

    k = groups.add_parser("kt", help="K-theory ring").add_subparsers(dest="command", required=True)
    sp = k.add_parser("member")
    sp.add_argument("fan")
    sp.add_argument("element")
    sp.add_argument("--mode", choices=("all-pairs", "adjacent"), default="all-pairs")
    sp.set_defaults(func=cmd_kt_member)
    sp = k.add_parser("express")
    sp.add_argument("fan")
    sp.add_argument("element")
    sp.set_defaults(func=cmd_kt_express)
    for name, fn in (("relations", cmd_kt_relations), ("u-basis", cmd_kt_u_basis), ("k0-rank", cmd_kt_k0_rank)):
        sp = k.add_parser(name)
        sp.add_argument("fan")
        sp.set_defaults(func=fn)

    m = groups.add_parser("gkm", help="moment graphs").add_subparsers(dest="command", required=True)
    sp = m.add_parser("export")
    sp.add_argument("fan")
    sp.set_defaults(func=cmd_gkm_export)
    sp = m.add_parser("member")
    sp.add_argument("graph")
    sp.add_argument("element")
    sp.set_defaults(func=cmd_gkm_member)

    t = groups.add_parser("test", help="randomized suites").add_subparsers(dest="command", required=True)
    sp = t.add_parser("ideals")
    sp.add_argument("--seed", type=int, default=suites.DEFAULT_SEED)
    sp.add_argument("--count", type=int, default=200)
    sp.set_defaults(func=cmd_test_ideals)
    return p


def run(argv: Sequence[str] | None = None) -> tuple[dict, int]:
    """Parse and execute; returns (payload, exit code) without printing."""
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        return _error("usage", str(exc)), EXIT_INTERNAL
    except HelpRequested as exc:
        return {"help": str(exc)}, EXIT_OK
    try:
        return args.func(args)
    except InvalidFanError as exc:
        extra = {"report": exc.report.to_dict()} if exc.report is not None else {}
        return _error("invalid_fan", str(exc), **extra), EXIT_FALSE
    except IncompatibleElementError as exc:
        return _error("incompatible", str(exc), failing_pair=list(exc.failing_pair)), EXIT_FALSE
    except (OSError, json.JSONDecodeError, ValueError, KeyError, TypeError) as exc:
        return _error("malformed_input", str(exc)), EXIT_FALSE
    except ResourceLimitError as exc:
        return _error("resource_limit", str(exc)), EXIT_INTERNAL
    except ContractViolation as exc:
        return _error("contract_violation", str(exc)), EXIT_INTERNAL
    except Exception as exc:  # noqa: BLE001 - every failure must still yield JSON
        return _error("internal", f"{type(exc).__name__}: {exc}"), EXIT_INTERNAL


def main(argv: Sequence[str] | None = None) -> int:
    payload, code = run(argv)
    if "error" in payload:
        print(f"toric-kt: {payload['error']['message']}", file=sys.stderr)
    _emit(payload)
    return code


if __name__ == "__main__":
    sys.exit(main())
