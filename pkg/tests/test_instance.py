"""Instance parsing, serialization round-trips, generation, enumeration."""

import json

import pytest

from coverlift import (
    Arc,
    ParseError,
    check_automorphism,
    enumerate_automorphisms,
    generate_instance,
    instance_document,
    parse_cycle_notation,
    parse_instance,
    serialize_instance,
)

from conftest import (
    PETERSEN_DOC,
    complete_graph,
    cycle_graph,
    path_graph,
    perm_key,
    petersen_document,
)


class TestParseCycleNotation:
    def test_compact_form(self, petersen):
        vertices = petersen.graph.vertices
        perm = parse_cycle_notation(vertices, "(0)(2)(13)(67)(49)(58)")
        assert perm["1"] == "3" and perm["3"] == "1" and perm["0"] == "0"

    def test_three_cycle(self, petersen):
        perm = parse_cycle_notation(petersen.graph.vertices, "(123)(468)(579)")
        assert perm["1"] == "2" and perm["2"] == "3" and perm["3"] == "1"
        # unmentioned vertices stay fixed
        assert perm["0"] == "0"

    def test_comma_separated_multichar_labels(self):
        vertices = ("alpha", "beta", "gamma")
        perm = parse_cycle_notation(vertices, "(alpha, beta)")
        assert perm == {"alpha": "beta", "beta": "alpha", "gamma": "gamma"}

    def test_errors(self, petersen):
        vertices = petersen.graph.vertices
        with pytest.raises(ParseError):
            parse_cycle_notation(vertices, "(0")
        with pytest.raises(ParseError):
            parse_cycle_notation(vertices, "(0z)")
        with pytest.raises(ParseError):
            parse_cycle_notation(vertices, "(00)")
        with pytest.raises(ParseError):
            parse_cycle_notation(vertices, "(01)(12)")


class TestParseInstance:
    def test_petersen_fixture_shape(self, petersen):
        assert len(petersen.graph.vertices) == 10
        assert petersen.base == "0"
        assert petersen.orders == (2, 2, 4)
        assert [a.tail + a.head for a in petersen.basis.cotree_arcs] == [
            "58", "78", "47", "49", "69", "56",
        ]
        assert dict(petersen.automorphisms)["a2"]("0") == "3"

    def test_mapping_and_cycle_forms_agree(self):
        doc = dict(PETERSEN_DOC)
        doc["automorphisms"] = {
            "cyc": "(0)(2)(13)(67)(49)(58)",
            "map": {
                "0": "0", "1": "3", "2": "2", "3": "1", "4": "9",
                "5": "8", "6": "7", "7": "6", "8": "5", "9": "4",
            },
        }
        fixture = parse_instance(json.dumps(doc))
        autos = dict(fixture.automorphisms)
        assert perm_key(fixture.graph, autos["cyc"]) == perm_key(fixture.graph, autos["map"])

    def test_voltages_in_original_cyclic_coordinates(self):
        # group [6]: one cyclic factor, voltage 5 splits to (1 mod 2, 2 mod 3)
        doc = {
            "vertices": ["0", "1", "2"],
            "edges": [["0", "1"], ["1", "2"], ["0", "2"]],
            "base": "0",
            "group": [6],
            "voltages": {"1>2": [5]},
            "automorphisms": {"rot": "(012)"},
        }
        fixture = parse_instance(json.dumps(doc))
        assert fixture.assignment.voltage(Arc("1", "2")).residues == (1, 2)

    def test_missing_sections(self):
        with pytest.raises(ParseError):
            parse_instance(json.dumps({"vertices": ["a"]}))
        with pytest.raises(ParseError):
            parse_instance("not json {")

    def test_bad_voltage_arc(self):
        doc = dict(PETERSEN_DOC)
        doc["voltages"] = {"0>5": [1, 0, 0]}
        with pytest.raises(Exception):
            parse_instance(json.dumps(doc))

    def test_tree_section_pins_tree(self):
        doc = {
            "vertices": ["0", "1", "2", "3"],
            "edges": [["0", "1"], ["1", "2"], ["2", "3"], ["3", "0"]],
            "base": "0",
            "tree": [["1", "2"], ["2", "3"], ["3", "0"]],
            "group": [2],
            "voltages": {"0>1": [1]},
            "automorphisms": {"id": {}},
        }
        fixture = parse_instance(json.dumps(doc))
        assert fixture.basis.cotree_arcs == (Arc("0", "1"),)
        assert fixture.assignment.t_reduced


class TestRoundTrip:
    def test_parse_serialize_parse(self, petersen):
        text = serialize_instance(petersen)
        again = parse_instance(text)
        assert serialize_instance(again) == text
        assert again.graph.vertices == petersen.graph.vertices
        assert again.basis.cotree_arcs == petersen.basis.cotree_arcs
        assert again.orders == petersen.orders
        for (n1, a1), (n2, a2) in zip(petersen.automorphisms, again.automorphisms):
            assert n1 == n2
            assert perm_key(petersen.graph, a1) == perm_key(again.graph, a2)

    def test_document_pins_basis_explicitly(self, petersen):
        doc = instance_document(petersen)
        assert doc["cotree_arcs"] == [list(p) for p in (
            ("5", "8"), ("7", "8"), ("4", "7"), ("4", "9"), ("6", "9"), ("5", "6"),
        )]
        assert len(doc["tree"]) == 9
        assert doc["voltages"]["5>8"] == [1, 1, 1]


class TestEnumerateAutomorphisms:
    def test_petersen_group_order(self, petersen):
        autos = enumerate_automorphisms(petersen.graph)
        assert len(autos) == 120
        keys = {perm_key(petersen.graph, a) for a in autos}
        assert len(keys) == 120

    def test_path_graph(self):
        g = path_graph(3)
        autos = enumerate_automorphisms(g)
        assert sorted(perm_key(g, a) for a in autos) == [
            ("0", "1", "2"), ("2", "1", "0"),
        ]

    def test_complete_graph_order(self):
        assert len(enumerate_automorphisms(complete_graph(4))) == 24

    def test_cycle_graph_dihedral(self):
        assert len(enumerate_automorphisms(cycle_graph(6))) == 12

    def test_limit(self, petersen):
        assert len(enumerate_automorphisms(petersen.graph, limit=5)) == 5


class TestGenerateInstance:
    def test_deterministic(self):
        assert generate_instance(7) == generate_instance(7)
        assert json.dumps(generate_instance(7)) == json.dumps(generate_instance(7))

    def test_seeds_vary(self):
        docs = {json.dumps(generate_instance(seed)) for seed in range(8)}
        assert len(docs) > 1

    def test_generated_instances_are_valid(self):
        for seed in range(25):
            doc = generate_instance(seed)
            fixture = parse_instance(json.dumps(doc))
            assert 3 <= len(fixture.graph.vertices) <= 8
            assert fixture.spec.order <= 64
            t = fixture.basis.rank
            assert fixture.spec.exponent**t <= 2**18
            assert fixture.assignment.t_reduced
            assert len(fixture.automorphisms) >= 1
            for _, auto in fixture.automorphisms:
                check_automorphism(fixture.graph, auto.mapping)

    def test_respects_bounds(self):
        for seed in range(10):
            doc = generate_instance(seed, max_vertices=5, max_group_order=8)
            fixture = parse_instance(json.dumps(doc))
            assert len(fixture.graph.vertices) <= 5
            assert fixture.spec.order <= 8
