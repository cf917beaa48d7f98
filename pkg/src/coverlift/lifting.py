"""Decision procedure for lifting a graph automorphism to a derived cover.

The automorphism acts on the fundamental-cycle basis through an integer
matrix S with determinant +-1.  For each prime p dividing the group order,
the embedded cycle voltages give a matrix B over Z/p^k; diagonalizing B as
Q B T = diag(p^(s_i)) reduces the lifting condition to degree inequalities
on the conjugated matrix Q S Q^(-1): every subdiagonal entry (i,j) must
have p-degree at least s_i - s_j.  The automorphism lifts exactly when the
inequalities hold for every prime.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import NotUnimodularError
from .graphs import Automorphism, CycleBasis, apply_automorphism_to_walk, signed_cotree_incidence
from .voltage import VoltageMatrices
from .zn_linalg import ModMatrix, normal_form, p_degree


def _det_bareiss(rows: Sequence[Sequence[int]]) -> int:
    """Exact integer determinant (fraction-free elimination)."""
    n = len(rows)
    if n == 0:
        return 1
    m = [list(r) for r in rows]
    sign = 1
    prev = 1
    for d in range(n - 1):
        if m[d][d] == 0:
            swap = next((r for r in range(d + 1, n) if m[r][d] != 0), None)
            if swap is None:
                return 0
            m[d], m[swap] = m[swap], m[d]
            sign = -sign
        for i in range(d + 1, n):
            for j in range(d + 1, n):
                m[i][j] = (m[i][j] * m[d][d] - m[i][d] * m[d][j]) // prev
            m[i][d] = 0
        prev = m[d][d]
    return sign * m[-1][-1]


@dataclass(frozen=True)
class HomologyMatrix:
    """Integer matrix of an automorphism's action on the cycle basis.

    Row i is the signed cotree incidence of the image of cycle i; the
    matrix is invertible over the integers because the automorphism
    permutes the cycle space.
    """

    rows: tuple[tuple[int, ...], ...]

    @property
    def size(self) -> int:
        return len(self.rows)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "HomologyMatrix":
        data = tuple(tuple(int(x) for x in row) for row in rows)
        if any(len(row) != len(data) for row in data):
            raise NotUnimodularError("homology matrix must be square")
        if _det_bareiss(data) not in (1, -1):
            raise NotUnimodularError("homology matrix determinant is not +-1")
        return cls(data)


def homology_matrix(cb: CycleBasis, a: Automorphism) -> HomologyMatrix:
    """S with S_{i,j} = net count of cotree arc j in the image of cycle i."""
    return HomologyMatrix.from_rows(
        [signed_cotree_incidence(cb, apply_automorphism_to_walk(a, cycle)) for cycle in cb.cycles]
    )


@dataclass(frozen=True)
class Violation:
    """One failed degree bound; row and col are 1-based as reported."""

    row: int
    col: int
    degree: int
    required: int
    entry: int


@dataclass(frozen=True)
class PrimeVerdict:
    """Outcome of the degree check at a single prime."""

    prime: int
    exponent: int
    s: tuple[int, ...]
    first_positive_index: int
    conjugated: ModMatrix
    passed: bool
    witness: Violation | None
    violations: tuple[Violation, ...]


def degree_check(m: ModMatrix, s: Sequence[int]) -> tuple[Violation, ...]:
    """All subdiagonal cells of ``m`` whose p-degree falls short of
    s_i - s_j, scanned in row-major order."""
    out: list[Violation] = []
    for i in range(1, m.rows):
        for j in range(i):
            required = s[i] - s[j]
            if required <= 0:
                continue
            entry = m[i, j]
            deg = p_degree(entry, m.p, m.k)
            if deg < required:
                out.append(Violation(i + 1, j + 1, deg, required, entry))
    return tuple(out)


def criterion_single_prime(b: ModMatrix, s_matrix: HomologyMatrix) -> PrimeVerdict:
    """Run the degree test for one prime: diagonalize the voltage matrix,
    conjugate S by the row-operation matrix Q, check the bounds."""
    nf = normal_form(b)
    s_mod = ModMatrix.from_rows(b.p, b.k, s_matrix.rows)
    conjugated = nf.Q @ s_mod @ nf.Q_inv
    violations = degree_check(conjugated, nf.exponents)
    return PrimeVerdict(
        prime=b.p,
        exponent=b.k,
        s=nf.exponents,
        first_positive_index=nf.first_positive_index,
        conjugated=conjugated,
        passed=not violations,
        witness=violations[0] if violations else None,
        violations=violations,
    )


@dataclass(frozen=True)
class LiftReport:
    """Full verdict for one automorphism: true iff every prime passes.

    Carries the basis and voltage data it was computed from so renderers
    can echo them without replumbing.
    """

    name: str | None
    automorphism: Automorphism
    lifts: bool
    homology: HomologyMatrix
    verdicts: tuple[PrimeVerdict, ...]
    basis: CycleBasis
    voltages: VoltageMatrices


def lift_check(
    cb: CycleBasis,
    vm: VoltageMatrices,
    a: Automorphism,
    name: str | None = None,
) -> LiftReport:
    """Decide whether ``a`` lifts to the cover described by ``vm``.

    A tree base graph has trivial cycle space, so everything lifts and no
    per-prime verdicts are produced.
    """
    s_matrix = homology_matrix(cb, a)
    if cb.rank == 0:
        return LiftReport(
            name=name,
            automorphism=a,
            lifts=True,
            homology=s_matrix,
            verdicts=(),
            basis=cb,
            voltages=vm,
        )
    verdicts = tuple(criterion_single_prime(b, s_matrix) for b in vm.matrices)
    return LiftReport(
        name=name,
        automorphism=a,
        lifts=all(v.passed for v in verdicts),
        homology=s_matrix,
        verdicts=verdicts,
        basis=cb,
        voltages=vm,
    )
