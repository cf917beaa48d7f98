"""Finite abelian groups in canonical prime-power component form.

A group given as a product of cyclic factors Z/n_1 x ... x Z/n_m is
decomposed by the Chinese remainder theorem into prime-power cyclic
components and canonicalized: primes ascending, exponents ascending within
each prime (ties keep the original factor order).  The canonical component
order fixes the column order of every matrix built downstream.

All arithmetic uses exact Python integers; residues are stored as canonical
representatives in [0, modulus).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import prod

from .errors import IndexOutOfRangeError, OrderTooSmallError, SpecMismatchError


def _factorize(n: int) -> list[tuple[int, int]]:
    """Prime factorization [(p, e), ...] with p ascending; trial division."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            out.append((d, e))
        d += 1 if d == 2 else 2
    if n > 1:
        out.append((n, 1))
    return out


@dataclass(frozen=True)
class AbelianGroupSpec:
    """Canonical decomposition: for each prime ``primes[g]`` a non-decreasing
    tuple ``exponents[g]`` of prime-power exponents."""

    primes: tuple[int, ...]
    exponents: tuple[tuple[int, ...], ...]

    @property
    def components(self) -> tuple[tuple[int, int], ...]:
        """Flattened (prime, exponent) pairs in canonical order."""
        return tuple((p, k) for p, ks in zip(self.primes, self.exponents) for k in ks)

    @property
    def moduli(self) -> tuple[int, ...]:
        return tuple(p**k for p, k in self.components)

    @property
    def order(self) -> int:
        return prod(self.moduli)

    @property
    def exponent(self) -> int:
        """lcm of the component orders: product of the top prime powers."""
        return prod(p ** ks[-1] for p, ks in zip(self.primes, self.exponents))

    def component_index(self, gamma: int, eta: int) -> int:
        """Flat position of component eta of prime block gamma (0-based)."""
        if not 0 <= gamma < len(self.primes):
            raise IndexOutOfRangeError(f"prime block {gamma} out of range")
        if not 0 <= eta < len(self.exponents[gamma]):
            raise IndexOutOfRangeError(f"component {eta} out of range for prime block {gamma}")
        return sum(len(ks) for ks in self.exponents[:gamma]) + eta

    def block_slice(self, gamma: int) -> slice:
        """Slice of the flat component list covered by prime block gamma."""
        start = sum(len(ks) for ks in self.exponents[:gamma])
        return slice(start, start + len(self.exponents[gamma]))

    def describe(self) -> str:
        return " x ".join(f"Z/{m}" for m in self.moduli)


@dataclass(frozen=True)
class GroupElement:
    """Element as a tuple of canonical residues, one per component."""

    spec: AbelianGroupSpec
    residues: tuple[int, ...]

    def __add__(self, other: "GroupElement") -> "GroupElement":
        if self.spec != other.spec:
            raise SpecMismatchError("elements belong to different groups")
        return GroupElement(
            self.spec,
            tuple((a + b) % m for a, b, m in zip(self.residues, other.residues, self.spec.moduli)),
        )

    def __neg__(self) -> "GroupElement":
        return GroupElement(
            self.spec, tuple((-a) % m for a, m in zip(self.residues, self.spec.moduli))
        )

    def __sub__(self, other: "GroupElement") -> "GroupElement":
        return self + (-other)

    def scaled(self, n: int) -> "GroupElement":
        return GroupElement(
            self.spec, tuple((n * a) % m for a, m in zip(self.residues, self.spec.moduli))
        )

    def is_zero(self) -> bool:
        return all(a == 0 for a in self.residues)

    def __str__(self) -> str:
        return "(" + ", ".join(str(a) for a in self.residues) + ")"


def _cyclic_slots(orders: tuple[int, ...]) -> tuple[AbelianGroupSpec, tuple[tuple[tuple[int, int], ...], ...]]:
    """CRT split of cyclic factors into canonically ordered slots.

    Returns the canonical spec plus, for every original factor, the list of
    (flat slot index, prime power) pairs its residues decompose into.
    """
    for n in orders:
        if n < 2:
            raise OrderTooSmallError(f"cyclic factor order {n} is below 2")
    slots = []  # (p, e, original factor position)
    for f, n in enumerate(orders):
        for p, e in _factorize(n):
            slots.append((p, e, f))
    slots.sort()
    primes: list[int] = []
    exponents: list[list[int]] = []
    for p, e, _ in slots:
        if not primes or primes[-1] != p:
            primes.append(p)
            exponents.append([])
        exponents[-1].append(e)
    spec = AbelianGroupSpec(tuple(primes), tuple(tuple(ks) for ks in exponents))
    per_factor: list[list[tuple[int, int]]] = [[] for _ in orders]
    for idx, (p, e, f) in enumerate(slots):
        per_factor[f].append((idx, p**e))
    return spec, tuple(tuple(fs) for fs in per_factor)


def parse_group_spec(cyclic_orders) -> AbelianGroupSpec:
    """Canonicalize a list of cyclic factor orders (each >= 2)."""
    return _cyclic_slots(tuple(cyclic_orders))[0]


def zero(spec: AbelianGroupSpec) -> GroupElement:
    return GroupElement(spec, (0,) * len(spec.moduli))


def element(spec: AbelianGroupSpec, residues) -> GroupElement:
    """Build an element, reducing each entry into its canonical range."""
    values = tuple(residues)
    if len(values) != len(spec.moduli):
        raise SpecMismatchError(
            f"expected {len(spec.moduli)} residues, got {len(values)}"
        )
    return GroupElement(spec, tuple(int(a) % m for a, m in zip(values, spec.moduli)))


def element_add(spec: AbelianGroupSpec, x: GroupElement, y: GroupElement) -> GroupElement:
    if x.spec != spec or y.spec != spec:
        raise SpecMismatchError("element does not belong to the given group")
    return x + y


def element_neg(spec: AbelianGroupSpec, x: GroupElement) -> GroupElement:
    if x.spec != spec:
        raise SpecMismatchError("element does not belong to the given group")
    return -x


def element_scale(spec: AbelianGroupSpec, n: int, x: GroupElement) -> GroupElement:
    if x.spec != spec:
        raise SpecMismatchError("element does not belong to the given group")
    return x.scaled(n)


def embed(spec: AbelianGroupSpec, gamma: int, eta: int, residue: int) -> int:
    """Monomorphism from component (gamma, eta) into the largest component
    of its prime block: multiply by the gap prime power.

    ``gamma`` and ``eta`` are 0-based; the residue must be a canonical
    representative of Z/p^k(gamma,eta).
    """
    spec.component_index(gamma, eta)  # range check
    p = spec.primes[gamma]
    k_eta = spec.exponents[gamma][eta]
    k_max = spec.exponents[gamma][-1]
    if not 0 <= residue < p**k_eta:
        raise IndexOutOfRangeError(
            f"residue {residue} outside [0, {p**k_eta}) for component ({gamma},{eta})"
        )
    return residue * p ** (k_max - k_eta)


def element_from_cyclic(spec: AbelianGroupSpec, orders, residues) -> GroupElement:
    """Convert residues given per original cyclic factor into canonical
    coordinates via the CRT slot map of ``orders``."""
    orders = tuple(orders)
    derived, per_factor = _cyclic_slots(orders)
    if derived != spec:
        raise SpecMismatchError("cyclic orders do not canonicalize to the given group")
    values = tuple(residues)
    if len(values) != len(orders):
        raise SpecMismatchError(
            f"expected {len(orders)} residues (one per cyclic factor), got {len(values)}"
        )
    out = [0] * len(spec.moduli)
    for r, n, fs in zip(values, orders, per_factor):
        r = int(r) % n
        for idx, pe in fs:
            out[idx] = r % pe
    return GroupElement(spec, tuple(out))


def element_to_cyclic(spec: AbelianGroupSpec, orders, x: GroupElement) -> tuple[int, ...]:
    """Inverse of :func:`element_from_cyclic`: CRT-reconstruct the residue
    of each original cyclic factor."""
    orders = tuple(orders)
    derived, per_factor = _cyclic_slots(orders)
    if derived != spec or x.spec != spec:
        raise SpecMismatchError("cyclic orders do not canonicalize to the given group")
    out = []
    for n, fs in zip(orders, per_factor):
        r = 0
        for idx, pe in fs:
            other = n // pe
            r = (r + x.residues[idx] * other * pow(other, -1, pe)) % n
        out.append(r)
    return tuple(out)


def all_elements(spec: AbelianGroupSpec) -> list[GroupElement]:
    """Every group element, in lexicographic residue order."""
    out = [()]
    for m in spec.moduli:
        out = [t + (r,) for t in out for r in range(m)]
    return [GroupElement(spec, t) for t in out]
