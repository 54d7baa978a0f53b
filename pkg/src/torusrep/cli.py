"""Command-line interface.

Subcommands: classify, solutions, represent, verify, loop-check, search.
Matrices come from --matrix (inline JSON), --file (JSON or whitespace rows),
or --type (named: A3, A2affine, B2, ...).  Exit codes: 0 success / all
checks pass, 1 input error, 2 verification failure, 3 internal invariant
violation.

Indexing note: generators and variables are labelled 1..r; for affine types
the affine node is label 1 (index 0 in the usual loop-algebra convention)
and the extension generator is called d.
"""

from __future__ import annotations

import argparse
import itertools
import json
import sys
from fractions import Fraction

from . import cartan, loop, oracle, representation, solution
from . import vectorfield as vf
from .errors import (
    ClosureDiverged,
    Decomposable,
    IdentityViolated,
    NormalizationImpossible,
    NotProportional,
    TorusRepError,
)

INTERNAL_ERRORS = (IdentityViolated, ClosureDiverged,
                   NormalizationImpossible, NotProportional)


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 on bad flags; 2 is reserved here
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _add_matrix_source(sub):
    sub.add_argument("--matrix", help="inline JSON array of integer rows")
    sub.add_argument("--file", help="path to JSON or whitespace-row matrix file")
    sub.add_argument("--type", dest="type_name", metavar="NAME",
                     help="named matrix, e.g. A3, A2affine, B2")


def _add_output(sub, formats=("text", "json")):
    sub.add_argument("--format", choices=formats, default="text")
    sub.add_argument("--out", help="write the report to this path")


def _load_gcm(args) -> cartan.GCM:
    sources = [s for s in (args.matrix, args.file, args.type_name) if s]
    if len(sources) != 1:
        raise ValueError("provide exactly one of --matrix, --file, --type")
    if args.type_name:
        return cartan.named_gcm(args.type_name)
    if args.matrix:
        return cartan.validate_gcm(json.loads(args.matrix))
    with open(args.file) as handle:
        text = handle.read()
    stripped = text.strip()
    if stripped.startswith("["):
        return cartan.validate_gcm(json.loads(stripped))
    rows = [[int(x) for x in line.split()] for line in stripped.splitlines()
            if line.strip()]
    return cartan.validate_gcm(rows)


def _emit(args, text: str) -> None:
    if not text.endswith("\n"):
        text += "\n"
    if getattr(args, "out", None):
        with open(args.out, "w") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def _ints(raw: str) -> list[int]:
    return [int(x) for x in raw.split(",")]


def _fractions(raw: str) -> list[Fraction]:
    return [Fraction(x) for x in raw.split(",")]


def _classify_payload(gcm) -> dict:
    ct = cartan.classify(gcm)
    payload = {
        "type": ct.label,
        "rank": gcm.r,
        "corank": gcm.corank,
        "edges": [[i + 1, j + 1, mult] for i, j, mult in ct.edges],
    }
    if ct.kind == "affine_a":
        payload["affine_node"] = 1
    return payload


def cmd_classify(args) -> int:
    gcm = _load_gcm(args)
    payload = _classify_payload(gcm)
    if args.format == "json":
        _emit(args, json.dumps(payload, indent=2))
    else:
        lines = [f"type: {payload['type']}",
                 f"rank: {payload['rank']}",
                 f"corank: {payload['corank']}",
                 "edges: " + ", ".join(
                     f"{i}-{j}" + (f" (x{m})" if m > 1 else "")
                     for i, j, m in payload["edges"])]
        if "affine_node" in payload:
            lines.append("affine node: 1 (loop-algebra index 0); "
                         "extension generator: d")
        _emit(args, "\n".join(lines))
    return 0


def cmd_solutions(args) -> int:
    gcm = _load_gcm(args)
    sms = solution.normalized_solution_matrices(gcm)
    if args.format == "json":
        _emit(args, json.dumps([solution.to_json(sm) for sm in sms], indent=2))
        return 0
    lines = [f"normalized solution matrices: {len(sms)}"]
    for idx, sm in enumerate(sms):
        lines.append(f"[{idx}] orientation {sm.orientation:+d}"
                     if sm.orientation else f"[{idx}] symmetric")
        for row in sm.entries:
            lines.append("    " + " ".join(f"{str(x):>4}" for x in row))
        lines.append("    incidence: " + (", ".join(
            f"({i + 1},{j + 1})" for i, j in sorted(sm.incidence)) or "(none)"))
    _emit(args, "\n".join(lines))
    return 0


def _build_rep(args):
    gcm = _load_gcm(args)
    rd = representation.build_root_data(gcm)
    sms = solution.normalized_solution_matrices(gcm)
    if not 0 <= args.sm < len(sms):
        raise ValueError(f"--sm must index the {len(sms)} normalized matrices")
    sm = sms[args.sm]
    if args.diag:
        sm = solution.scale(sm, _fractions(args.diag))
    n = _ints(args.n) if args.n else [1] * gcm.r
    return representation.build_representation(rd, sm, n)


def cmd_represent(args) -> int:
    rep = _build_rep(args)
    if args.format == "json":
        _emit(args, json.dumps(representation.to_json(rep), indent=2))
    elif args.format == "latex":
        _emit(args, representation.to_latex(rep))
    else:
        _emit(args, representation.to_text(rep))
    return 0


def _report_payload(rep) -> dict:
    report = representation.verify_relations(rep)
    kernel = representation.kernel_check(rep)
    by_relation = {}
    for label in "abcde":
        checks = report.by_relation(label)
        by_relation[label] = {
            "checks": len(checks),
            "failures": [
                {"indices": list(c.indices), "residual": vf.to_json(c.residual)}
                for c in checks if not c.passed
            ],
        }
    return {
        "relations": by_relation,
        "kernel": kernel,
        "passed": report.passed and all(kernel.values()),
    }


def cmd_verify(args) -> int:
    if args.rep:
        with open(args.rep) as handle:
            rep = representation.from_json(json.load(handle))
    else:
        rep = _build_rep(args)
    payload = _report_payload(rep)
    if args.format == "json":
        _emit(args, json.dumps(payload, indent=2))
    else:
        lines = []
        for label, block in payload["relations"].items():
            status = "PASS" if not block["failures"] else "FAIL"
            lines.append(f"relation ({label}): {status} "
                         f"({block['checks']} checks)")
            for failure in block["failures"]:
                lines.append(f"  fail at {tuple(failure['indices'])}")
        for name, ok in payload["kernel"].items():
            lines.append(f"kernel {name}: {'PASS' if ok else 'FAIL'}")
        lines.append("all relations hold" if payload["passed"]
                     else "verification FAILED")
        _emit(args, "\n".join(lines))
    return 0 if payload["passed"] else 2


def cmd_loop_check(args) -> int:
    rep = _build_rep(args)
    lo, hi = _ints(args.m_range)
    cert = loop.loop_certificate(rep, (lo, hi))
    payload = loop.to_json(cert)
    if args.format == "json":
        _emit(args, json.dumps(payload, indent=2))
    else:
        lines = [f"finite part dimension: {payload['dimension']}",
                 f"loop unit: {payload['loop_unit']}"]
        for name, ok in payload["checks"].items():
            lines.append(f"{name}: {'PASS' if ok else 'FAIL'}")
        _emit(args, "\n".join(lines))
    return 0 if cert.passed else 2


def cmd_search(args) -> int:
    if args.sweep:
        gcms = itertools.chain.from_iterable(
            oracle.sweep_gcms(r, args.min_entry) for r in range(1, args.sweep + 1))
        report = oracle.discrepancy_report(gcms)
    else:
        gcm = _load_gcm(args)
        report = oracle.discrepancy_report([gcm])
        if args.grid:
            report["grid"] = oracle.probe_validator_agreement(gcm)
            report["agree"] = report["agree"] and report["grid"]["agree"]
    _emit(args, json.dumps(report, indent=2))
    return 0 if report["agree"] else 2


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="torusrep", description=__doc__,
                     formatter_class=argparse.RawDescriptionHelpFormatter)
    subs = parser.add_subparsers(dest="command", required=True)

    sub = subs.add_parser("classify", help="classify a Cartan matrix")
    _add_matrix_source(sub)
    _add_output(sub)
    sub.set_defaults(func=cmd_classify)

    sub = subs.add_parser("solutions", help="enumerate normalized solution matrices")
    _add_matrix_source(sub)
    _add_output(sub)
    sub.set_defaults(func=cmd_solutions)

    for name, handler, formats in (
            ("represent", cmd_represent, ("text", "json", "latex")),
            ("verify", cmd_verify, ("text", "json")),
            ("loop-check", cmd_loop_check, ("text", "json"))):
        sub = subs.add_parser(name)
        _add_matrix_source(sub)
        sub.add_argument("--sm", type=int, default=0,
                         help="index into the normalized solution matrices")
        sub.add_argument("--diag", help="comma-separated nonzero rationals")
        sub.add_argument("--n", help="comma-separated nonzero integers")
        if name == "verify":
            sub.add_argument("--rep", help="re-verify a JSON representation file")
        if name == "loop-check":
            sub.add_argument("--m-range", default="-3,3",
                             help="inclusive loop-power range, e.g. -3,3")
        _add_output(sub, formats)
        sub.set_defaults(func=handler)

    sub = subs.add_parser("search", help="oracle vs structured discrepancy report")
    _add_matrix_source(sub)
    sub.add_argument("--grid", action="store_true",
                     help="also cross-check the rank-2 candidate grid")
    sub.add_argument("--sweep", type=int,
                     help="exhaustive sweep over all ranks up to this bound")
    sub.add_argument("--min-entry", type=int, default=-3,
                     help="lower bound for off-diagonal entries in the sweep")
    _add_output(sub, ("json",))
    sub.set_defaults(func=cmd_search)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except INTERNAL_ERRORS as exc:
        print(f"internal invariant violation: {exc}", file=sys.stderr)
        return 3
    except Decomposable:
        gcm = _load_gcm(args)
        parts = cartan.connected_components(gcm)
        print("error: matrix is decomposable; components "
              + ", ".join(str([v + 1 for v in part]) for part in parts),
              file=sys.stderr)
        return 1
    except (TorusRepError, ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
