"""Command-line front end for the library.

Verbs: verify, construct, solve, table, simulate, extremal.  Exit status is
0 on valid/agree, 1 on invalid/disagree, 2 on a usage error, 3 when a
resource cap stops the run.  --json replaces the stable text output with a
single structured document carrying the field names of the report types.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from pathlib import Path
from typing import Sequence

from .cycles import (
    ConstructionFailedError,
    CycleFamily,
    UnsupportedRegimeError,
    construct_code,
)
from .families import FamilySpec, Witness, WitnessKind
from .graphs import Graph, GraphParseError, cycle_order, graph_from_spec, parse_graph
from .rounds import DetectionMode, Scenario
from .solver import SearchLimitError, min_code, verify_theorem_table
from .verification import check_code

SYNOPSIS = (
    "idcode <verb> [--graph SPEC] [--family identifying|weak|light|general]"
    " [-r R] [-p P] [--radii LIST] [--code LIST] [--n RANGE] [--oracle]"
    " [--fault V|none] [--memory] [--include-no-fault] [--json] [--offset K]"
)

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3

# Exhaustive search grows as C(n, k); beyond these orders a single
# invocation stops being interactive.
ORACLE_CYCLE_LIMIT = 24
ORACLE_GENERAL_LIMIT = 16


class UsageError(Exception):
    """Bad command line; main() turns this into exit status 2."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse would sys.exit(2) with full usage
        raise UsageError(message)


def _parse_int_list(text: str, what: str) -> tuple[int, ...]:
    """Comma-separated integers; a token "a..b" expands inclusively."""
    out: list[int] = []
    for token in text.split(","):
        token = token.strip()
        span = re.fullmatch(r"(\d+)\.\.(\d+)", token)
        if span:
            lo, hi = int(span.group(1)), int(span.group(2))
            if hi < lo:
                raise UsageError(f"{what}: empty range {token!r}")
            out.extend(range(lo, hi + 1))
            continue
        try:
            out.append(int(token))
        except ValueError:
            raise UsageError(f"{what}: {token!r} is not an integer or a..b range")
    if not out:
        raise UsageError(f"{what}: empty list")
    return tuple(out)


def _load_graph(spec_text: str) -> Graph:
    if re.fullmatch(r"(cycle|path):\d+", spec_text):
        return graph_from_spec(spec_text)
    path = Path(spec_text)
    if not path.is_file():
        raise UsageError(
            f"graph spec {spec_text!r} is neither cycle:N, path:N nor an existing file"
        )
    return parse_graph(path.read_text())


def _family_spec(args) -> FamilySpec:
    if args.family is None:
        raise UsageError("this verb needs --family")
    if args.family == "general":
        if args.p is None:
            raise UsageError("--family general needs -p")
        if args.radii is not None:
            radii = _parse_int_list(args.radii, "--radii")
        elif args.r is not None:
            radii = tuple(range(args.r + 1))
        else:
            raise UsageError("--family general needs --radii or -r")
        return FamilySpec.general(args.p, radii)
    if args.r is None:
        raise UsageError(f"--family {args.family} needs -r")
    return getattr(FamilySpec, args.family)(args.r)


def _cycle_family(args) -> tuple[CycleFamily, int]:
    """Map --family to a closed-formula family for construct/table."""
    if args.family == "weak" or args.family == "light":
        if args.r is None:
            raise UsageError(f"--family {args.family} needs -r")
        return CycleFamily(args.family), args.r
    if args.family == "general":
        if args.p != 2:
            raise UsageError(
                "closed formulas cover the general family only at p=2 with radii 0..r"
            )
        if args.radii is not None:
            radii = tuple(sorted(set(_parse_int_list(args.radii, "--radii"))))
            if radii != tuple(range(radii[-1] + 1)):
                raise UsageError("general-family formulas need radii 0..r")
            return CycleFamily.TWO_RADII, radii[-1]
        if args.r is not None:
            return CycleFamily.TWO_RADII, args.r
        raise UsageError("--family general needs --radii or -r")
    raise UsageError("construct/table support --family weak, light or general -p 2")


def _describe_witness(w: Witness) -> str:
    radii = ",".join(str(rho) for rho in w.radii_tried)
    if w.kind is WitnessKind.NOT_DOMINATED:
        return f"vertex {w.vertices[0]} has no code vertex within radii {{{radii}}}"
    if w.kind is WitnessKind.PAIR_NOT_SEPARATED:
        x, y = w.vertices
        return f"vertices {x} and {y} see the same code at every radius in {{{radii}}}"
    x = w.vertices[0]
    line = f"vertex {x} has no allowed radius set telling it apart (radii {{{radii}}})"
    if w.blocking:
        blocks = "; ".join(f"radius {rho} blocked by v{y}" for rho, y in w.blocking)
        line += f": {blocks}"
    return line


def _graph_label(g: Graph) -> str:
    return g.label or f"graph on {g.n} vertices"


def _cmd_verify(args) -> int:
    g = _load_graph(args.graph)
    spec = _family_spec(args)
    code = _parse_int_list(args.code, "--code")
    report = check_code(g, code, spec)
    if args.json:
        print(json.dumps(report.to_dict(), indent=2))
        return EXIT_OK if report.valid else EXIT_FAIL
    size = len(set(code))
    if report.valid:
        print(f"valid: {spec.describe_code()} of size {size} on {_graph_label(g)}")
        print("certificate:")
        for v, radii in sorted(report.certificate.per_vertex.items()):
            print(f"  v{v}: {','.join(str(rho) for rho in radii)}")
        return EXIT_OK
    print(f"invalid: {spec.describe_code()} candidate of size {size} on {_graph_label(g)}")
    print(f"witness: {_describe_witness(report.witness)}")
    return EXIT_FAIL


def _cmd_construct(args) -> int:
    g = _load_graph(args.graph)
    n = cycle_order(g)
    if n is None:
        raise UsageError("construct needs --graph cycle:N (closed formulas are for cycles)")
    family, r = _cycle_family(args)
    code = construct_code(family, n, r)
    if args.offset:
        code = tuple(sorted((v + args.offset) % n for v in code))
    report = check_code(g, code, family.spec(r), with_certificate=False)
    if not report.valid:
        print(f"self-check failed: {_describe_witness(report.witness)}", file=sys.stderr)
        return EXIT_FAIL
    if args.json:
        print(
            json.dumps(
                {
                    "family": family.value,
                    "n": n,
                    "r": r,
                    "code": list(code),
                    "size": len(code),
                    "valid": True,
                },
                indent=2,
            )
        )
    else:
        print(",".join(str(v) for v in code))
    return EXIT_OK


def _cmd_solve(args) -> int:
    g = _load_graph(args.graph)
    spec = _family_spec(args)
    limit = ORACLE_CYCLE_LIMIT if cycle_order(g) is not None else ORACLE_GENERAL_LIMIT
    if g.n > limit:
        print(
            f"resource: exhaustive search is capped at {limit} vertices"
            f" for this graph shape, got {g.n}",
            file=sys.stderr,
        )
        return EXIT_RESOURCE
    result = min_code(g, spec)
    if args.json:
        print(json.dumps(result.to_dict(), indent=2))
        return EXIT_OK if result.feasible else EXIT_FAIL
    if result.feasible:
        print(f"optimum: {result.optimum}")
        print("witness: " + ",".join(str(v) for v in result.witness_code))
    else:
        print(f"optimum: infeasible ({spec.describe_code()} cannot exist on {_graph_label(g)})")
    stats = result.stats
    print(f"examined: {stats.examined} pruned: {stats.pruned} seconds: {stats.seconds:.3f}")
    return EXIT_OK if result.feasible else EXIT_FAIL


def _cmd_table(args) -> int:
    family, r = _cycle_family(args)
    if args.n is None:
        raise UsageError("table needs --n RANGE")
    ns = _parse_int_list(args.n, "--n")
    if args.oracle:
        over = [n for n in ns if n > ORACLE_CYCLE_LIMIT]
        if over:
            print(
                f"resource: --oracle is capped at n <= {ORACLE_CYCLE_LIMIT},"
                f" drop {','.join(map(str, over))}",
                file=sys.stderr,
            )
            return EXIT_RESOURCE
    rows = verify_theorem_table(family, (r,), ns, with_oracle=args.oracle)
    agree = all(row.agree for row in rows)
    if args.json:
        print(json.dumps({"rows": [row.to_dict() for row in rows], "agree": agree}, indent=2))
        return EXIT_OK if agree else EXIT_FAIL
    print(f"family={family.value} r={r}")
    header = f"{'n':>5} {'lower':>6} {'formula':>8} {'construct':>10}"
    if args.oracle:
        header += f" {'oracle':>7}"
    header += "  agree"
    print(header)
    for row in rows:
        line = (
            f"{row.n:>5} {row.lower if row.lower is not None else '-':>6}"
            f" {row.formula:>8} {row.construction:>10}"
        )
        if args.oracle:
            line += f" {row.oracle:>7}"
        line += f"  {'yes' if row.agree else 'NO'}"
        print(line)
    print(f"{sum(1 for row in rows if row.agree)}/{len(rows)} rows agree")
    return EXIT_OK if agree else EXIT_FAIL


def _format_alarms(alarms: tuple[int, ...]) -> str:
    return "{" + ",".join(str(v) for v in alarms) + "}"


def _cmd_simulate(args) -> int:
    g = _load_graph(args.graph)
    if args.code is None:
        raise UsageError("simulate needs --code")
    code = _parse_int_list(args.code, "--code")
    if args.r is None:
        raise UsageError("simulate needs -r (round horizon)")
    mode = DetectionMode.WITH_MEMORY if args.memory else DetectionMode.MEMORYLESS
    scenario = Scenario(g, code, args.r)
    if args.fault == "none":
        silent = tuple(o.fault for o in scenario.outcomes() if not o.detected)
        if not args.json:
            for i in range(args.r + 1):
                print(f"{i}: alarms={{}}")
            if silent:
                vs = ",".join(str(v) for v in silent)
                print(f"verdict: silence is ambiguous, fault at {{{vs}}} would also stay quiet")
            else:
                print(f"verdict: silence identifies no-fault by round {args.r}")
        else:
            print(
                json.dumps(
                    {
                        "fault": None,
                        "mode": mode.value,
                        "alarms": [[] for _ in range(args.r + 1)],
                        "identified": not silent,
                        "quiet_faults": list(silent),
                    },
                    indent=2,
                )
            )
        return EXIT_OK if not silent else EXIT_FAIL
    try:
        fault = int(args.fault)
    except ValueError:
        raise UsageError(f"--fault takes a vertex index or 'none', got {args.fault!r}")
    if not 0 <= fault < g.n:
        raise UsageError(f"fault vertex {fault} is outside 0..{g.n - 1}")
    outcome = scenario.outcome(fault, mode, args.include_no_fault)
    if args.json:
        print(json.dumps(outcome.to_dict(), indent=2))
        return EXIT_OK if outcome.located else EXIT_FAIL
    for i, alarms in enumerate(outcome.history.alarms):
        print(f"{i}: alarms={_format_alarms(alarms)}")
    if outcome.located:
        detail = (
            f"detected at round {outcome.detected_round}"
            if outcome.detected
            else "never detected"
        )
        print(f"verdict: fault {fault} located at round {outcome.located_round} ({detail})")
        return EXIT_OK
    print(f"verdict: fault {fault} not located by round {args.r}")
    return EXIT_FAIL


def _cmd_extremal(args) -> int:
    if args.r is None or args.k is None:
        raise UsageError("extremal needs -r and -k")
    from .extremal import build_extremal  # deferred: keeps CLI import light

    inst = build_extremal(args.r, args.k)
    report = inst.verify()
    if args.json:
        doc = {
            "r": args.r,
            "k": args.k,
            "order": inst.graph.n,
            "code": list(inst.code),
            "edges": [list(e) for e in inst.graph.edges],
            "valid": report.valid,
        }
        if report.certificate is not None:
            doc["certificate"] = report.certificate.to_dict()
        print(json.dumps(doc, indent=2))
    else:
        sys.stdout.write(inst.serialize())
        print(f"# self-check: {'valid' if report.valid else 'INVALID'}")
    return EXIT_OK if report.valid else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="idcode", description=__doc__, usage=SYNOPSIS)
    sub = parser.add_subparsers(dest="verb", metavar="<verb>", parser_class=_Parser)
    sub.required = True

    def family_flags(p: argparse.ArgumentParser) -> None:
        p.add_argument("--family", choices=["identifying", "weak", "light", "general"])
        p.add_argument("-r", type=int, default=None, help="radius / round horizon")
        p.add_argument("-p", type=int, default=None, help="radius budget per vertex")
        p.add_argument("--radii", default=None, help="allowed radii, e.g. 0,2 or 0..3")

    def json_flag(p: argparse.ArgumentParser) -> None:
        p.add_argument("--json", action="store_true", help="machine-readable output")

    p = sub.add_parser("verify", help="check a code against a family")
    p.add_argument("--graph", required=True)
    family_flags(p)
    p.add_argument("--code", required=True, help="comma-separated vertices")
    json_flag(p)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("construct", help="optimal cycle code by closed formula")
    p.add_argument("--graph", required=True)
    family_flags(p)
    p.add_argument("--offset", type=int, default=0, help="rotate the code by K")
    json_flag(p)
    p.set_defaults(func=_cmd_construct)

    p = sub.add_parser("solve", help="exhaustive minimum-code search")
    p.add_argument("--graph", required=True)
    family_flags(p)
    json_flag(p)
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser("table", help="formula vs construction (vs oracle) on cycles")
    family_flags(p)
    p.add_argument("--n", default=None, help="cycle lengths, e.g. 8..18")
    p.add_argument("--oracle", action="store_true", help="also run the exhaustive solver")
    json_flag(p)
    p.set_defaults(func=_cmd_table)

    p = sub.add_parser("simulate", help="round-by-round fault location")
    p.add_argument("--graph", required=True)
    p.add_argument("--code", required=True, help="monitoring code vertices")
    p.add_argument("-r", type=int, default=None, help="round horizon")
    p.add_argument("--fault", required=True, help="faulty vertex index, or 'none'")
    p.add_argument("--memory", action="store_true", help="monitor remembers all rounds")
    p.add_argument(
        "--include-no-fault",
        action="store_true",
        help="the quiet no-fault run competes as a hypothesis",
    )
    json_flag(p)
    p.set_defaults(func=_cmd_simulate)

    p = sub.add_parser("extremal", help="largest graph for a weak code of size k")
    p.add_argument("-r", type=int, default=None, help="radius")
    p.add_argument("-k", type=int, default=None, help="code size")
    json_flag(p)
    p.set_defaults(func=_cmd_extremal)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except UsageError as err:
        print(f"error: {err}", file=sys.stderr)
        print(f"usage: {SYNOPSIS}", file=sys.stderr)
        return EXIT_USAGE
    except (GraphParseError, UnsupportedRegimeError, ValueError) as err:
        print(f"error: {err}", file=sys.stderr)
        print(f"usage: {SYNOPSIS}", file=sys.stderr)
        return EXIT_USAGE
    except ConstructionFailedError as err:
        print(f"construction failed: {err}", file=sys.stderr)
        if err.witness is not None:
            print(f"witness: {_describe_witness(err.witness)}", file=sys.stderr)
        return EXIT_FAIL
    except SearchLimitError as err:
        print(f"resource: {err}", file=sys.stderr)
        return EXIT_RESOURCE
    except SystemExit as err:  # argparse -h/--help
        code = err.code
        return int(code) if code is not None else 0


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
