"""Report assembly and rendering.

One report document describes a whole check run: an echo of the instance
(basis walks, cycle voltages in both coordinate systems, per-prime voltage
matrices) followed by one entry per automorphism with the verdict, the
homology action matrix, per-prime normal-form data, witness cells, and any
oracle cross-check results.  The structured rendering is the JSON dump of
that document; the text rendering prints the same data for humans.  Both
are deterministic functions of the document, byte for byte.

Rows, columns, and the index i0 are reported 1-based, matching the usual
matrix convention; API-level indices elsewhere in the package are 0-based.
"""

from __future__ import annotations

import json

from .abelian import element_to_cyclic
from .instance import Fixture
from .lifting import LiftReport, PrimeVerdict, Violation
from .zn_linalg import normal_form


def _violation_doc(v: Violation) -> dict:
    return {
        "row": v.row,
        "col": v.col,
        "degree": v.degree,
        "required": v.required,
        "entry": v.entry,
    }


def _prime_doc(pv: PrimeVerdict) -> dict:
    return {
        "prime": pv.prime,
        "exponent": pv.exponent,
        "s": list(pv.s),
        "i0": pv.first_positive_index,
        "conjugated": [list(row) for row in pv.conjugated.entries],
        "passed": pv.passed,
        "witness": _violation_doc(pv.witness) if pv.witness else None,
        "violations": [_violation_doc(v) for v in pv.violations],
    }


def build_report(
    fixture: Fixture,
    results: list[LiftReport],
    oracle_results: dict[str, dict] | None = None,
    gauge_reduced: bool = False,
) -> dict:
    """Assemble the full report document for one check run."""
    graph = fixture.graph
    basis = fixture.basis
    spec = fixture.spec
    vm = results[0].voltages if results else None

    instance_doc: dict = {
        "vertices": list(graph.vertices),
        "edges": [list(e) for e in graph.edges],
        "base": fixture.base,
        "tree": [list(e) for e in basis.tree_edges],
        "cotree_arcs": [[a.tail, a.head] for a in basis.cotree_arcs],
        "group": {
            "orders": list(fixture.orders),
            "canonical": spec.describe(),
            "moduli": list(spec.moduli),
        },
        "cycles": [str(c) for c in basis.cycles],
        "gauge_reduced": gauge_reduced,
    }
    if vm is not None:
        instance_doc["theta"] = {
            "canonical": [list(th.residues) for th in vm.theta],
            "original": [
                list(element_to_cyclic(spec, fixture.orders, th)) for th in vm.theta
            ],
        }
        instance_doc["voltage_matrices"] = [
            {
                "prime": b.p,
                "exponent": b.k,
                "rows": [list(row) for row in b.entries],
                "s": list(normal_form(b).exponents),
            }
            for b in vm.matrices
        ]

    checks = []
    for rep in results:
        doc: dict = {
            "name": rep.name,
            "mapping": {v: rep.automorphism(v) for v in graph.vertices},
            "lifts": rep.lifts,
            "homology_matrix": [list(row) for row in rep.homology.rows],
            "primes": [_prime_doc(pv) for pv in rep.verdicts],
        }
        if oracle_results and rep.name in oracle_results:
            doc["oracles"] = oracle_results[rep.name]
        checks.append(doc)

    return {"instance": instance_doc, "checks": checks}


def render_structured(report: dict) -> str:
    return json.dumps(report, indent=2) + "\n"


def _matrix_lines(rows: list[list[int]], indent: str) -> list[str]:
    if not rows:
        return [f"{indent}(empty)"]
    width = max(len(str(x)) for row in rows for x in row)
    return [indent + " ".join(str(x).rjust(width) for x in row) for row in rows]


def render_text(report: dict) -> str:
    """Human-readable rendering of the same report document."""
    inst = report["instance"]
    lines: list[str] = []
    lines.append(
        f"instance: {len(inst['vertices'])} vertices, {len(inst['edges'])} edges, "
        f"base {inst['base']}"
    )
    lines.append(f"group: {inst['group']['canonical']} "
                 f"(input orders {inst['group']['orders']})")
    if inst.get("gauge_reduced"):
        lines.append("voltages were not tree-reduced; a gauge reduction was applied")
    arcs = ", ".join(f"{a[0]}>{a[1]}" for a in inst["cotree_arcs"])
    lines.append(f"cotree arcs: {arcs}")
    for i, cyc in enumerate(inst["cycles"]):
        lines.append(f"  L{i + 1}: {cyc}")
    if "theta" in inst:
        for i, (canon, orig) in enumerate(
            zip(inst["theta"]["canonical"], inst["theta"]["original"])
        ):
            lines.append(f"  theta_{i + 1}: {tuple(orig)} in input orders, "
                         f"{tuple(canon)} canonical")
    for mat in inst.get("voltage_matrices", []):
        lines.append(f"voltage matrix mod {mat['prime']}^{mat['exponent']} "
                     f"(s = {tuple(mat['s'])}):")
        lines.extend(_matrix_lines(mat["rows"], "  "))

    for chk in report["checks"]:
        verdict = "lifts" if chk["lifts"] else "does not lift"
        lines.append("")
        lines.append(f"automorphism {chk['name']}: {verdict}")
        lines.append(f"  mapping: {chk['mapping']}")
        lines.append("  homology action:")
        lines.extend(_matrix_lines(chk["homology_matrix"], "    "))
        for pv in chk["primes"]:
            lines.append(
                f"  prime {pv['prime']}^{pv['exponent']}: s = {tuple(pv['s'])}, "
                f"i0 = {pv['i0']}, {'pass' if pv['passed'] else 'fail'}"
            )
            lines.append("    conjugated matrix:")
            lines.extend(_matrix_lines(pv["conjugated"], "      "))
            if pv["witness"]:
                w = pv["witness"]
                lines.append(
                    f"    witness cell ({w['row']},{w['col']}): entry {w['entry']} "
                    f"has degree {w['degree']}, needs {w['required']}"
                )
            if len(pv["violations"]) > 1:
                cells = ", ".join(f"({v['row']},{v['col']})" for v in pv["violations"])
                lines.append(f"    all violated cells: {cells}")
        if "oracles" in chk:
            lines.append(f"  oracles: {chk['oracles']}")
    return "\n".join(lines) + "\n"
