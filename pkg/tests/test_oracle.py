"""Brute-force oracles: kernel enumeration and explicit lift search."""

import json
import random

import pytest

from coverlift import (
    AbelianGroupSpec,
    Arc,
    BudgetExceededError,
    HomologyMatrix,
    build_derived_graph,
    build_spanning_tree,
    build_voltage_matrices,
    check_automorphism,
    element,
    generate_instance,
    homology_matrix,
    kernel_oracle,
    lift_check,
    lift_search_oracle,
    parse_group_spec,
    parse_instance,
    validate_graph,
    validate_voltage,
)

from conftest import EXPECTED_LIFTS, EXPECTED_S, assignment_from, cycle_graph


class TestKernelOracle:
    def test_pinned_verdicts(self, petersen_vm):
        for name, rows in EXPECTED_S.items():
            result = kernel_oracle(petersen_vm, HomologyMatrix.from_rows(rows))
            assert result == EXPECTED_LIFTS[name], name

    def test_identity_matrix_always_true(self, petersen_vm):
        ident = HomologyMatrix.from_rows(
            [[1 if i == j else 0 for j in range(6)] for i in range(6)]
        )
        assert kernel_oracle(petersen_vm, ident)

    def test_budget_exceeded(self, petersen_vm):
        with pytest.raises(BudgetExceededError):
            kernel_oracle(petersen_vm, HomologyMatrix.from_rows(EXPECTED_S["a1"]), budget=10)

    def test_trivial_cycle_space(self):
        g = validate_graph(["x", "y"], [("x", "y")])
        cb = build_spanning_tree(g, "x")
        spec = parse_group_spec([9])
        vm = build_voltage_matrices(cb, validate_voltage(g, cb, spec, {}))
        flip = check_automorphism(g, {"x": "y", "y": "x"})
        assert kernel_oracle(vm, homology_matrix(cb, flip))


class TestBuildDerivedGraph:
    def test_petersen_cover_size(self, petersen):
        derived = build_derived_graph(petersen.graph, petersen.assignment)
        assert derived.vertex_count == 160
        assert derived.edge_count == 240
        adjacency = derived.adjacency()
        assert all(len(nbrs) == 3 for nbrs in adjacency.values())

    def test_trivial_group_copies_base(self, petersen):
        g = petersen.graph
        cb = petersen.basis
        spec = AbelianGroupSpec(primes=(), exponents=())
        va = validate_voltage(g, cb, spec, {})
        derived = build_derived_graph(g, va)
        assert derived.vertex_count == len(g.vertices)
        assert derived.edge_count == g.edge_count
        assert all(derived.has_edge((u, ()), (v, ())) for u, v in g.edges)

    def test_single_edge_double_cover(self):
        # one edge with a nonzero Z/2 voltage: both derived edges cross fibers
        g = validate_graph(["x", "y"], [("x", "y")])
        cb = build_spanning_tree(g, "x")
        spec = parse_group_spec([2])
        va = validate_voltage(g, cb, spec, {Arc("x", "y"): element(spec, (1,))})
        derived = build_derived_graph(g, va)
        assert derived.vertex_count == 4
        assert derived.edge_count == 2
        assert derived.has_edge(("x", (0,)), ("y", (1,)))
        assert derived.has_edge(("x", (1,)), ("y", (0,)))
        assert not derived.has_edge(("x", (0,)), ("y", (0,)))

    def test_fibers_and_translations(self):
        g = cycle_graph(4)
        cb = build_spanning_tree(g, "0")
        spec = parse_group_spec([4])
        arc = cb.cotree_arcs[0]
        va = assignment_from(g, cb, spec, {(arc.tail, arc.head): (1,)})
        derived = build_derived_graph(g, va)
        fibers = {}
        for v, res in derived.vertices:
            fibers.setdefault(v, []).append(res)
        assert all(len(f) == spec.order for f in fibers.values())
        # every translation is an automorphism of the derived graph
        for shift in range(4):
            mapped = {
                (v, res): (v, ((res[0] + shift) % 4,)) for v, res in derived.vertices
            }
            for a, b in derived.edges:
                assert derived.has_edge(mapped[a], mapped[b])

    def test_voltage_one_cycle_cover_is_longer_cycle(self):
        # C_3 with voltage 1 over Z/4 unrolls to C_12
        g = cycle_graph(3)
        cb = build_spanning_tree(g, "0")
        spec = parse_group_spec([4])
        arc = cb.cotree_arcs[0]
        va = assignment_from(g, cb, spec, {(arc.tail, arc.head): (1,)})
        derived = build_derived_graph(g, va)
        assert derived.vertex_count == 12 and derived.edge_count == 12
        adjacency = derived.adjacency()
        assert all(len(nbrs) == 2 for nbrs in adjacency.values())
        seen = {("0", (0,))}
        frontier = ("0", (0,))
        prev = None
        for _ in range(11):
            nxt = [w for w in adjacency[frontier] if w != prev]
            prev, frontier = frontier, nxt[0]
            seen.add(frontier)
        assert len(seen) == 12  # single cycle through all vertices

    def test_budget(self, petersen):
        with pytest.raises(BudgetExceededError):
            build_derived_graph(petersen.graph, petersen.assignment, budget=10)


def verify_lift(derived, a, mapping) -> None:
    """Independent certificate check, written from the covering definition."""
    assert sorted(mapping) == sorted(derived.vertices)
    assert sorted(mapping.values()) == sorted(derived.vertices)
    for (v, _), (w, _) in mapping.items():
        assert w == a(v)
    for x, y in derived.edges:
        assert derived.has_edge(mapping[x], mapping[y])


class TestLiftSearchOracle:
    def test_pinned_verdicts_with_certificates(self, petersen, petersen_autos):
        g, cb, va = petersen.graph, petersen.basis, petersen.assignment
        derived = build_derived_graph(g, va)
        for name, auto in petersen_autos.items():
            found, cert = lift_search_oracle(g, cb, va, auto)
            assert found == EXPECTED_LIFTS[name], name
            if found:
                verify_lift(derived, auto, cert)
            else:
                assert cert is None

    def test_identity_uses_zero_offset(self, petersen):
        g, cb, va = petersen.graph, petersen.basis, petersen.assignment
        ident = check_automorphism(g, {v: v for v in g.vertices})
        found, cert = lift_search_oracle(g, cb, va, ident)
        assert found
        assert all(cert[x] == x for x in cert)

    def test_disconnected_cover_extension(self, petersen, petersen_autos):
        # zero voltages: 16 disjoint copies; every automorphism lifts and the
        # certificate must cover all components
        g, cb, spec = petersen.graph, petersen.basis, petersen.spec
        va = assignment_from(g, cb, spec, {})
        derived = build_derived_graph(g, va)
        for name, auto in petersen_autos.items():
            found, cert = lift_search_oracle(g, cb, va, auto)
            assert found, name
            verify_lift(derived, auto, cert)

    def test_two_component_cover(self):
        # C_4 with voltage 2 over Z/4: theta spans an index-2 subgroup
        g = cycle_graph(4)
        cb = build_spanning_tree(g, "0")
        spec = parse_group_spec([4])
        arc = cb.cotree_arcs[0]
        va = assignment_from(g, cb, spec, {(arc.tail, arc.head): (2,)})
        derived = build_derived_graph(g, va)
        rotate = check_automorphism(g, {"0": "1", "1": "2", "2": "3", "3": "0"})
        found, cert = lift_search_oracle(g, cb, va, rotate)
        assert found
        verify_lift(derived, rotate, cert)

    def test_budget(self, petersen, petersen_autos):
        with pytest.raises(BudgetExceededError):
            lift_search_oracle(
                petersen.graph, petersen.basis, petersen.assignment,
                petersen_autos["a1"], budget=10,
            )


class TestThreeWayAgreement:
    def test_randomized_instances(self):
        checked = 0
        for seed in range(40):
            doc = generate_instance(seed)
            fixture = parse_instance(json.dumps(doc))
            vm = build_voltage_matrices(fixture.basis, fixture.assignment)
            for _, auto in fixture.automorphisms:
                report = lift_check(fixture.basis, vm, auto)
                s_matrix = homology_matrix(fixture.basis, auto)
                kernel = kernel_oracle(vm, s_matrix)
                search, cert = lift_search_oracle(
                    fixture.graph, fixture.basis, fixture.assignment, auto
                )
                assert report.lifts == kernel == search, (seed, auto.mapping)
                checked += 1
        assert checked >= 40

    def test_nonreduced_assignments_agree_after_reduction(self):
        from coverlift import gauge_reduce

        rng = random.Random(211)
        for _ in range(15):
            n = rng.randint(4, 6)
            g = cycle_graph(n)
            cb = build_spanning_tree(g, "0")
            spec = parse_group_spec([rng.choice((2, 3, 4, 6))])
            volts = {
                (u, v): tuple(rng.randrange(m) for m in spec.moduli)
                for u, v in g.edges
            }
            va = assignment_from(g, cb, spec, volts)
            reduced = gauge_reduce(g, cb, va)
            vm = build_voltage_matrices(cb, reduced)
            flip = check_automorphism(
                g, {str(i): str((n - i) % n) for i in range(n)}
            )
            report = lift_check(cb, vm, flip)
            # the raw, non-reduced cover must behave identically
            found_raw, _ = lift_search_oracle(g, cb, va, flip)
            found_red, _ = lift_search_oracle(g, cb, reduced, flip)
            assert report.lifts == found_raw == found_red
