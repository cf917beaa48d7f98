"""Voltage assignments on graph arcs and their matrix form.

A voltage assignment maps every arc to a group element with opposite arcs
carrying opposite voltages.  Assignments vanishing on a spanning tree
(T-reduced) are the useful normal form: the voltage of any closed walk then
depends only on its signed cotree incidence, through the cycle voltages
theta_i.  Per prime p the embedded components of the theta vectors form the
matrix B fed to the lifting criterion.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .abelian import AbelianGroupSpec, GroupElement, embed, zero
from .errors import (
    InconsistentOppositesError,
    NotTReducedError,
    SpecMismatchError,
    UnknownArcError,
)
from .graphs import Arc, CycleBasis, Graph, Walk, tree_path
from .zn_linalg import ModMatrix


@dataclass(frozen=True, eq=False)
class VoltageAssignment:
    """Total arc-to-element map with antisymmetric opposites.

    ``arc_voltages`` holds both orientations of every edge.  ``t_reduced``
    records whether all tree arcs of the basis passed at validation carry
    zero voltage.
    """

    spec: AbelianGroupSpec
    graph: Graph
    arc_voltages: Mapping[Arc, GroupElement]
    t_reduced: bool

    def voltage(self, arc: Arc) -> GroupElement:
        try:
            return self.arc_voltages[arc]
        except KeyError:
            raise UnknownArcError(f"{arc} is not an arc of the graph") from None


def _tree_arc_set(cb: CycleBasis) -> set[Arc]:
    out: set[Arc] = set()
    for u, v in cb.tree_edges:
        out.add(Arc(u, v))
        out.add(Arc(v, u))
    return out


def validate_voltage(
    g: Graph,
    cb: CycleBasis,
    spec: AbelianGroupSpec,
    raw: Mapping[Arc, GroupElement],
) -> VoltageAssignment:
    """Complete a partial arc-voltage map into a full assignment.

    Opposite arcs are filled in by negation; when both orientations are
    given they must be negatives of each other.  Arcs absent from ``raw``
    default to zero, so T-reduced inputs may list cotree arcs only.
    """
    for arc, val in raw.items():
        if not g.has_edge(arc.tail, arc.head):
            raise UnknownArcError(f"{arc} is not an arc of the graph")
        if val.spec != spec:
            raise SpecMismatchError(f"voltage on {arc} belongs to a different group")

    volt: dict[Arc, GroupElement] = {}
    zero_el = zero(spec)
    for u, v in g.edges:
        fwd, bwd = Arc(u, v), Arc(v, u)
        has_f, has_b = fwd in raw, bwd in raw
        if has_f and has_b:
            if raw[bwd] != -raw[fwd]:
                raise InconsistentOppositesError(
                    f"voltages on {fwd} and {bwd} are not opposite"
                )
            volt[fwd] = raw[fwd]
        elif has_f:
            volt[fwd] = raw[fwd]
        elif has_b:
            volt[fwd] = -raw[bwd]
        else:
            volt[fwd] = zero_el
        volt[bwd] = -volt[fwd]

    tree_arcs = _tree_arc_set(cb)
    reduced = all(volt[a].is_zero() for a in tree_arcs)
    return VoltageAssignment(spec=spec, graph=g, arc_voltages=volt, t_reduced=reduced)


def walk_voltage(va: VoltageAssignment, w: Walk) -> GroupElement:
    """Sum of the arc voltages along ``w``; zero for the empty walk."""
    total = zero(va.spec)
    for arc in w.arcs:
        total = total + va.voltage(arc)
    return total


def gauge_reduce(g: Graph, cb: CycleBasis, va: VoltageAssignment) -> VoltageAssignment:
    """Re-voltage to vanish on the tree without changing any closed-walk
    voltage: phi'(u,v) = f(u) + phi(u,v) - f(v) with f(v) the voltage of
    the tree path from the base to v."""
    f = {v: walk_voltage(va, tree_path(cb, cb.base, v)) for v in g.vertices}
    volt: dict[Arc, GroupElement] = {}
    for u, v in g.edges:
        fwd = Arc(u, v)
        new = f[u] + va.voltage(fwd) - f[v]
        volt[fwd] = new
        volt[Arc(v, u)] = -new
    reduced = all(volt[a].is_zero() for a in _tree_arc_set(cb))
    return VoltageAssignment(spec=va.spec, graph=g, arc_voltages=volt, t_reduced=reduced)


@dataclass(frozen=True, eq=False)
class VoltageMatrices:
    """Cycle voltages theta_i plus, for each prime p with largest exponent
    k, the t x a_p matrix over Z/p^k whose (i,j) entry is theta_i's j-th
    p-component embedded into Z/p^k.

    ``matrices`` is aligned with ``spec.primes``; it is empty when t = 0
    (no rows to build, and nothing downstream needs it).
    """

    spec: AbelianGroupSpec
    theta: tuple[GroupElement, ...]
    matrices: tuple[ModMatrix, ...]

    @property
    def rank(self) -> int:
        return len(self.theta)


def build_voltage_matrices(cb: CycleBasis, va: VoltageAssignment) -> VoltageMatrices:
    """Assemble theta_i = voltage of the i-th fundamental cycle and the
    per-prime embedded matrices.  Requires a T-reduced assignment so that
    the theta vectors determine all closed-walk voltages."""
    if not va.t_reduced:
        raise NotTReducedError("voltage assignment does not vanish on the tree")
    spec = va.spec
    theta = tuple(walk_voltage(va, cycle) for cycle in cb.cycles)
    if not theta:
        return VoltageMatrices(spec=spec, theta=(), matrices=())

    matrices = []
    for gamma, p in enumerate(spec.primes):
        ks = spec.exponents[gamma]
        k = ks[-1]
        block = spec.block_slice(gamma)
        rows = [
            [embed(spec, gamma, eta, th.residues[block][eta]) for eta in range(len(ks))]
            for th in theta
        ]
        matrices.append(ModMatrix.from_rows(p, k, rows))
    return VoltageMatrices(spec=spec, theta=theta, matrices=tuple(matrices))
