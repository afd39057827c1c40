"""Command-line front end.

Exit codes: 0 ok, 1 property failure, 2 malformed or mismatched input,
3 invalid Lorentz matrix, 4 degenerate momentum.
"""
from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from . import extended, oracle, poincare, reduction, twinfold, verify
from .errors import DegenerateMomentum, NotLorentzError, ValidationError
from .jsonio import GROUPS, PayloadError, dumps, lorentz_from_json, parse_element, parse_lie, parse_momentum, to_json
from .minkowski import DEFAULT_TOL
from .twinfold import ParticleState, TwinElement

EXIT_OK, EXIT_FAILED, EXIT_PARSE, EXIT_LORENTZ, EXIT_DEGENERATE = 0, 1, 2, 3, 4


class _Failure(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def _read_payload(args):
    try:
        if args.infile:
            with open(args.infile, encoding="utf-8") as fh:
                text = fh.read()
        else:
            text = sys.stdin.read()
        return json.loads(text)
    except (OSError, json.JSONDecodeError) as exc:
        raise _Failure(EXIT_PARSE, f"cannot read JSON input: {exc}") from None


def _guess_group(obj) -> str:
    if "mu" in obj or "L_o" in obj:
        return "twin"
    if "nu" in obj or "phi" in obj:
        return "eight" if obj.get("nu", 1) == -1 else "extended"
    return "poincare"


def _component_report(L) -> dict:
    return {
        "component": L.component.value,
        "mu": L.mu,
        "time_orientation": "orthochron" if L.orthochron else "antichron",
    }


def cmd_classify(args) -> tuple[dict, int]:
    payload = _read_payload(args)
    if isinstance(payload, list):
        L = lorentz_from_json(payload, args.tol)
        return {"command": "classify", "kind": "matrix", **_component_report(L)}, EXIT_OK
    if not isinstance(payload, dict):
        raise PayloadError("expected a matrix or an element object")
    group = args.group or _guess_group(payload)
    g = parse_element(group, payload, args.tol)
    report = {"command": "classify", "kind": "element", "group": group}
    if isinstance(g, TwinElement):
        report.update(_component_report(g.L))
        sym = twinfold.classify_symmetry(g)
        report.update(
            {
                "orthochron_part": g.L_o.component.value,
                "nu": g.nu,
                "symmetry": sym.tag.value,
                "parity": sym.parity.value,
            }
        )
    else:
        report.update(_component_report(g.L))
        if hasattr(g, "nu"):
            report["nu"] = g.nu
    return report, EXIT_OK


def _coadjoint_for(group: str):
    if group == "poincare":
        return poincare.coadjoint
    if group == "twin":
        return twinfold.coadjoint_twin
    return extended.coadjoint_ext


def cmd_coadjoint(args) -> tuple[dict, int]:
    payload = _read_payload(args)
    if not isinstance(payload, dict):
        raise PayloadError("expected an object with 'element' and 'momentum'")
    if "element" not in payload or "momentum" not in payload:
        raise PayloadError("payload needs 'element' and 'momentum'")
    g = parse_element(args.group, payload["element"], args.tol)
    J = parse_momentum(args.group, payload["momentum"])
    if args.group != "poincare" and g.n != J.n:
        raise PayloadError(f"element has {g.n} charge dimensions, momentum has {J.n}")
    out = _coadjoint_for(args.group)(g, J)
    report = {"command": "coadjoint", "group": args.group, "momentum": to_json(out)}
    if args.group == "twin" and "fold" in payload:
        state = twinfold.act_on_state(g, ParticleState(payload["fold"], J))
        report["fold"] = state.fold
    code = EXIT_OK
    if args.check:
        residual = float(np.max(np.abs(out.to_vector() - oracle.reconstruct_coadjoint(g, J).to_vector())))
        passed = residual <= args.tol
        report["check"] = {"oracle_residual": residual, "tol": args.tol, "passed": passed}
        code = EXIT_OK if passed else EXIT_FAILED
    return report, code


def cmd_adjoint(args) -> tuple[dict, int]:
    payload = _read_payload(args)
    if not isinstance(payload, dict) or "element" not in payload or "lie" not in payload:
        raise PayloadError("payload needs 'element' and 'lie'")
    g = parse_element(args.group, payload["element"], args.tol)
    d = parse_lie(args.group, payload["lie"])
    if args.group != "poincare" and g.n != d.n:
        raise PayloadError(f"element has {g.n} charge dimensions, Lie element has {d.n}")
    fn = {"poincare": poincare.adjoint, "twin": twinfold.adjoint_twin}.get(args.group, extended.adjoint_ext)
    return {"command": "adjoint", "group": args.group, "lie": to_json(fn(g, d))}, EXIT_OK


def cmd_reduce(args) -> tuple[dict, int]:
    payload = _read_payload(args)
    J = parse_momentum("poincare", {k: v for k, v in payload.items() if k != "q"} if isinstance(payload, dict) else payload)
    red = reduction.canonical_reduce(J, momentum=args.momentum, tol=args.tol)
    residual = float(
        np.max(np.abs(poincare.coadjoint(red.g_reducing, J).to_vector() - red.momentum().to_vector()))
    )
    return {"command": "reduce", "canonical": to_json(red), "residual": residual}, EXIT_OK


def cmd_symmetry_table(args) -> tuple[dict, int]:
    rows = twinfold.symmetry_effect_table(tol=args.tol)
    return {"command": "symmetry-table", "rows": [r.as_dict() for r in rows]}, EXIT_OK


def cmd_verify(args) -> tuple[dict, int]:
    results = verify.run_all(args.seed, args.scale, args.tol)
    passed = all(r.passed for r in results)
    report = {
        "command": "verify",
        "seed": args.seed,
        "scale": args.scale,
        "tol": args.tol,
        "passed": passed,
        "suites": [r.as_dict() for r in results],
    }
    return report, EXIT_OK if passed else EXIT_FAILED


# text renderings

def _text_table(rows: list[dict], columns: list[str]) -> str:
    cells = [[str(c) for c in columns]] + [[str(r[c]) for c in columns] for r in rows]
    widths = [max(len(row[i]) for row in cells) for i in range(len(columns))]
    return "\n".join("  ".join(v.ljust(w) for v, w in zip(row, widths)).rstrip() for row in cells)


def _num(x) -> str:
    # text is for people: shortest round-trip floats, JSON-style booleans
    if isinstance(x, bool):
        return "true" if x else "false"
    return repr(x) if isinstance(x, float) else str(x)


def render_text(report: dict) -> str:
    cmd = report["command"]
    if cmd == "classify":
        lines = [f"{report['component']}, {report['time_orientation']}"]
        for key in ("mu", "nu", "orthochron_part", "symmetry", "parity"):
            if key in report:
                lines.append(f"{key}: {report[key]}")
        return "\n".join(lines)
    if cmd == "verify":
        rows = [
            {
                "status": "PASS" if s["passed"] else "FAIL",
                "suite": s["name"],
                "cases": s["cases"],
                "failures": s["failures"],
                "max_residual": "n/a" if s["max_residual"] is None else f"{s['max_residual']:.3e}",
                "threshold": f"{s['threshold']:.0e}",
            }
            for s in report["suites"]
        ]
        errors = [f"{s['name']}: {s['error']}" for s in report["suites"] if "error" in s]
        head = f"seed {report['seed']}  scale {report['scale']}  {'PASSED' if report['passed'] else 'FAILED'}"
        table = _text_table(rows, ["status", "suite", "cases", "failures", "max_residual", "threshold"])
        return "\n".join([head, table, *errors])
    if cmd == "symmetry-table":
        cols = ["mu", "nu", "parity", "tag", "E", "p", "q", "spin", "fold", "mass2"]
        return _text_table(report["rows"], cols)
    lines: list[str] = []
    _text_lines({k: v for k, v in report.items() if k != "command"}, 0, lines)
    return "\n".join(lines)


def _text_lines(obj: dict, depth: int, lines: list[str]) -> None:
    pad = "  " * depth
    for key, value in obj.items():
        if isinstance(value, dict):
            lines.append(f"{pad}{key}:")
            _text_lines(value, depth + 1, lines)
        elif isinstance(value, list):
            lines.append(f"{pad}{key}: " + " ".join(_num(x) for x in value))
        else:
            lines.append(f"{pad}{key}: {_num(value)}")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tol", type=float, default=DEFAULT_TOL, help="numeric tolerance (default 1e-9)")
    common.add_argument("--seed", type=int, default=0, help="random seed (default 0)")
    common.add_argument("--in", dest="infile", metavar="PATH", help="read JSON input from PATH instead of stdin")
    fmt = common.add_mutually_exclusive_group()
    fmt.add_argument("--json", dest="fmt", action="store_const", const="json", help="JSON output (default)")
    fmt.add_argument("--text", dest="fmt", action="store_const", const="text", help="aligned text output")
    common.set_defaults(fmt="json")

    parser = argparse.ArgumentParser(
        prog="coadjoint",
        description="Coadjoint actions of the Poincare group and its charged and twin-fold extensions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", parents=[common], help="connected component / symmetry class of a matrix or element")
    p.add_argument("--group", choices=GROUPS, help="element schema (guessed from the keys when omitted)")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("coadjoint", parents=[common], help="apply a group element to a momentum")
    p.add_argument("--group", choices=GROUPS, default="poincare")
    p.add_argument("--check", action="store_true", help="cross-check against the duality oracle")
    p.set_defaults(func=cmd_coadjoint)

    p = sub.add_parser("adjoint", parents=[common], help="apply a group element to a Lie algebra element")
    p.add_argument("--group", choices=GROUPS, default="poincare")
    p.set_defaults(func=cmd_adjoint)

    p = sub.add_parser("reduce", parents=[common], help="reduce a massive momentum to its normal form")
    p.add_argument("--momentum", type=float, default=0.0, help="z-momentum of the normal form (default 0: rest frame)")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("symmetry-table", parents=[common], help="effect of each (mu, nu, parity) class on a probe particle")
    p.set_defaults(func=cmd_symmetry_table)

    p = sub.add_parser("verify", parents=[common], help="run every property suite")
    p.add_argument("--scale", type=float, default=1.0, help="multiply every suite's case count (default 1)")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        report, code = args.func(args)
    except _Failure as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except NotLorentzError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_LORENTZ
    except DegenerateMomentum as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DEGENERATE
    except (PayloadError, ValidationError, KeyError, TypeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    out = dumps(report) if args.fmt == "json" else render_text(report)
    sys.stdout.write(out + "\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
