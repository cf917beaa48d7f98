"""Command line interface.

Subcommands:

    check PATH        decide lifting for every automorphism in an instance
    normal-form       diagonalize a matrix over Z/p^k and print Q, T, s
    gen               emit a seeded random instance

Verdicts are data: ``check`` exits 0 whether or not automorphisms lift.
Exit 1 signals a parse or validation failure, exit 2 an oracle
disagreement with the criterion (which would mean a bug, and is exactly
what --oracle is for).
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ThreadPoolExecutor

from .errors import CoverliftError, OracleDisagreementError, ParseError
from .instance import Fixture, generate_instance, load_instance
from .lifting import LiftReport, lift_check
from .oracle import DEFAULT_BUDGET, kernel_oracle, lift_search_oracle
from .report import build_report, render_structured, render_text
from .voltage import build_voltage_matrices, gauge_reduce
from .zn_linalg import ModMatrix, normal_form


def _check_one(
    fixture: Fixture, vm, va, name: str, auto, oracle: str, budget: int
) -> tuple[LiftReport, dict | None]:
    rep = lift_check(fixture.basis, vm, auto, name=name)
    if oracle == "off":
        return rep, None
    doc: dict = {}
    if oracle in ("kernel", "both"):
        doc["kernel"] = kernel_oracle(vm, rep.homology, budget)
    if oracle in ("liftsearch", "both"):
        doc["lift_search"] = lift_search_oracle(
            fixture.graph, fixture.basis, va, auto, budget
        )[0]
    doc["agree"] = all(v == rep.lifts for v in doc.values())
    return rep, doc


def cmd_check(args: argparse.Namespace) -> int:
    fixture = load_instance(args.instance)
    va = fixture.assignment
    gauge_reduced = False
    if not va.t_reduced:
        va = gauge_reduce(fixture.graph, fixture.basis, va)
        gauge_reduced = True
    vm = build_voltage_matrices(fixture.basis, va)

    def work(item: tuple) -> tuple[LiftReport, dict | None]:
        name, auto = item
        return _check_one(fixture, vm, va, name, auto, args.oracle, args.budget)

    if args.jobs > 1 and len(fixture.automorphisms) > 1:
        with ThreadPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(work, fixture.automorphisms))
    else:
        results = [work(item) for item in fixture.automorphisms]

    reports = [rep for rep, _ in results]
    oracle_results = {rep.name: doc for rep, doc in results if doc is not None}
    report = build_report(
        fixture, reports, oracle_results or None, gauge_reduced=gauge_reduced
    )
    out = render_structured(report) if args.format == "structured" else render_text(report)
    sys.stdout.write(out)

    disagreements = [rep.name for rep, doc in results if doc and not doc["agree"]]
    if disagreements:
        raise OracleDisagreementError(
            f"oracle disagreement for automorphisms: {', '.join(disagreements)}"
        )
    return 0


def _parse_matrix_text(text: str) -> list[list[int]]:
    text = text.strip()
    if not text:
        raise ParseError("matrix input is empty")
    if text[0] in "[{":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"matrix is not valid JSON: {exc}") from exc
        if isinstance(data, dict):
            data = data.get("rows")
        if not isinstance(data, list):
            raise ParseError("JSON matrix must be a list of rows")
        rows = data
    else:
        chunks = text.split(";") if ";" in text else text.splitlines()
        rows = [chunk.replace(",", " ").split() for chunk in chunks if chunk.strip()]
    try:
        return [[int(x) for x in row] for row in rows]
    except (TypeError, ValueError) as exc:
        raise ParseError(f"matrix entries must be integers: {exc}") from exc


def cmd_normal_form(args: argparse.Namespace) -> int:
    if (args.file is None) == (args.rows is None):
        raise ParseError("provide exactly one of --file or --rows")
    if args.file is not None:
        with open(args.file, "r", encoding="utf-8") as fh:
            text = fh.read()
    else:
        text = args.rows
    rows = _parse_matrix_text(text)
    x = ModMatrix.from_rows(args.p, args.k, rows)
    nf = normal_form(x)
    product = nf.Q @ x @ nf.T
    verified = product.entries == nf.diagonal.entries

    doc = {
        "p": args.p,
        "k": args.k,
        "input": [list(r) for r in x.entries],
        "Q": [list(r) for r in nf.Q.entries],
        "Q_inv": [list(r) for r in nf.Q_inv.entries],
        "T": [list(r) for r in nf.T.entries],
        "diagonal": [list(r) for r in product.entries],
        "s": list(nf.exponents),
        "pivot_count": nf.pivot_count,
        "i0": nf.first_positive_index,
        "verified": verified,
    }
    if args.format == "structured":
        sys.stdout.write(json.dumps(doc, indent=2) + "\n")
    else:
        lines = [f"normal form over Z/{args.p}^{args.k}"]
        for label in ("input", "Q", "Q_inv", "T", "diagonal"):
            lines.append(f"{label}:")
            width = max(len(str(v)) for row in doc[label] for v in row)
            lines.extend(
                "  " + " ".join(str(v).rjust(width) for v in row) for row in doc[label]
            )
        lines.append(f"s = {tuple(doc['s'])}")
        lines.append(f"pivot count = {doc['pivot_count']}, i0 = {doc['i0']}")
        lines.append(f"QXT diagonal check: {'ok' if verified else 'FAILED'}")
        sys.stdout.write("\n".join(lines) + "\n")
    if not verified:
        raise CoverliftError("normal form self-check failed")
    return 0


def cmd_gen(args: argparse.Namespace) -> int:
    doc = generate_instance(
        args.seed,
        max_vertices=args.max_vertices,
        max_group_order=args.max_group_order,
    )
    sys.stdout.write(json.dumps(doc, indent=2) + "\n")
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="coverlift",
        description="Decide whether graph automorphisms lift to an abelian regular cover.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_check = sub.add_parser("check", help="check every automorphism in an instance file")
    p_check.add_argument("instance", help="path to the instance file")
    p_check.add_argument(
        "--oracle",
        choices=["off", "kernel", "liftsearch", "both"],
        default="off",
        help="cross-check the criterion against brute force",
    )
    p_check.add_argument(
        "--budget",
        type=int,
        default=DEFAULT_BUDGET,
        help="enumeration cap for the oracles (default 2^24)",
    )
    p_check.add_argument("--format", choices=["text", "structured"], default="text")
    p_check.add_argument(
        "--jobs", type=int, default=1, help="check automorphisms concurrently"
    )
    p_check.set_defaults(func=cmd_check)

    p_nf = sub.add_parser("normal-form", help="diagonalize a matrix over Z/p^k")
    p_nf.add_argument("--file", help="matrix file: JSON rows or whitespace rows")
    p_nf.add_argument("--rows", help="inline matrix, rows separated by ';'")
    p_nf.add_argument("--p", type=int, required=True, help="prime modulus base")
    p_nf.add_argument("--k", type=int, required=True, help="prime power exponent")
    p_nf.add_argument("--format", choices=["text", "structured"], default="text")
    p_nf.set_defaults(func=cmd_normal_form)

    p_gen = sub.add_parser("gen", help="emit a seeded random instance")
    p_gen.add_argument("--seed", type=int, required=True)
    p_gen.add_argument("--max-vertices", type=int, default=8)
    p_gen.add_argument("--max-group-order", type=int, default=64)
    p_gen.set_defaults(func=cmd_gen)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except OracleDisagreementError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except CoverliftError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
