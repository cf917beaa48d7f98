"""Instance files: parsing, serialization, and seeded generation.

An instance is a JSON document with sections

    vertices      list of distinct labels (order is significant)
    edges         list of [u, v] pairs
    base          vertex label
    tree          optional list of [u, v] tree edges
    cotree_arcs   optional ordered list of [tail, head] arcs
    group         list of cyclic factor orders (>= 2)
    voltages      map "tail>head" -> residues per original cyclic factor
    automorphisms map name -> vertex mapping object or cycle string

Cycle strings look like "(13)(67)(49)(58)": labels inside one pair of
parentheses are single characters unless separated by commas or
whitespace.  In both forms, vertices not mentioned are fixed.
Serialization always emits the mapping form and pins tree and cotree
arcs explicitly, so a parse/serialize round trip is stable byte for
byte.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from itertools import combinations
from typing import Iterator

from .abelian import (
    AbelianGroupSpec,
    GroupElement,
    element_from_cyclic,
    element_to_cyclic,
    parse_group_spec,
)
from .errors import ParseError
from .graphs import (
    Arc,
    Automorphism,
    CycleBasis,
    Graph,
    build_spanning_tree,
    check_automorphism,
    validate_graph,
)
from .voltage import VoltageAssignment, validate_voltage


@dataclass(frozen=True, eq=False)
class Fixture:
    """A fully validated instance ready for lift checks."""

    graph: Graph
    base: str
    basis: CycleBasis
    orders: tuple[int, ...]
    spec: AbelianGroupSpec
    assignment: VoltageAssignment
    automorphisms: tuple[tuple[str, Automorphism], ...]


def parse_cycle_notation(vertices: tuple[str, ...], text: str) -> dict[str, str]:
    """Permutation from disjoint-cycle notation; unmentioned vertices are
    fixed.  Labels are single characters unless commas or whitespace
    separate them."""
    mapping = {v: v for v in vertices}
    vertex_set = set(vertices)
    moved: set[str] = set()
    rest = text.strip()
    if not rest:
        raise ParseError("empty cycle notation")
    while rest:
        if rest[0] != "(":
            raise ParseError(f"expected '(' in cycle notation at {rest[:10]!r}")
        close = rest.find(")")
        if close < 0:
            raise ParseError("unbalanced parenthesis in cycle notation")
        body = rest[1:close]
        rest = rest[close + 1 :].strip()
        if any(c in body for c in ", \t"):
            labels = [x for x in body.replace(",", " ").split() if x]
        else:
            labels = list(body)
        if not labels:
            raise ParseError("empty cycle '()' in cycle notation")
        for lab in labels:
            if lab not in vertex_set:
                raise ParseError(f"cycle notation names unknown vertex {lab!r}")
            if lab in moved:
                raise ParseError(f"vertex {lab!r} appears in two cycles")
            moved.add(lab)
        for cur, nxt in zip(labels, labels[1:] + labels[:1]):
            mapping[cur] = nxt
    return mapping


def _require(doc: dict, key: str, kind: type, where: str = "instance") -> object:
    if key not in doc:
        raise ParseError(f"{where} is missing required section {key!r}")
    value = doc[key]
    if not isinstance(value, kind):
        raise ParseError(f"section {key!r} has wrong type, expected {kind.__name__}")
    return value


def _pair_list(raw: object, what: str) -> list[tuple[str, str]]:
    if not isinstance(raw, list):
        raise ParseError(f"{what} must be a list of pairs")
    out = []
    for item in raw:
        if not isinstance(item, list) or len(item) != 2:
            raise ParseError(f"{what} entry {item!r} is not a pair")
        out.append((str(item[0]), str(item[1])))
    return out


def parse_instance(text: str) -> Fixture:
    """Parse and fully validate an instance document."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"instance is not valid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise ParseError("instance must be a JSON object")

    raw_vertices = _require(doc, "vertices", list)
    vertices = [str(v) for v in raw_vertices]
    edges = _pair_list(_require(doc, "edges", list), "edges")
    graph = validate_graph(vertices, edges)

    if "base" not in doc:
        raise ParseError("instance is missing required section 'base'")
    if not isinstance(doc["base"], (str, int)):
        raise ParseError("section 'base' must be a vertex label")
    base = str(doc["base"])
    tree = _pair_list(doc["tree"], "tree") if "tree" in doc else None
    cotree = _pair_list(doc["cotree_arcs"], "cotree_arcs") if "cotree_arcs" in doc else None
    basis = build_spanning_tree(graph, base, tree_edges=tree, cotree_arcs=cotree)

    orders_raw = _require(doc, "group", list)
    if not all(isinstance(o, int) for o in orders_raw):
        raise ParseError("group orders must be integers")
    orders = tuple(int(o) for o in orders_raw)
    spec = parse_group_spec(orders)

    volt_raw = doc.get("voltages", {})
    if not isinstance(volt_raw, dict):
        raise ParseError("voltages must be an object keyed by 'tail>head'")
    raw_map: dict[Arc, GroupElement] = {}
    for key, residues in volt_raw.items():
        parts = key.split(">")
        if len(parts) != 2 or not parts[0] or not parts[1]:
            raise ParseError(f"voltage key {key!r} is not of the form 'tail>head'")
        if not isinstance(residues, list) or not all(isinstance(r, int) for r in residues):
            raise ParseError(f"voltage for {key!r} must be a list of integers")
        raw_map[Arc(parts[0], parts[1])] = element_from_cyclic(spec, orders, residues)
    assignment = validate_voltage(graph, basis, spec, raw_map)

    autos_raw = doc.get("automorphisms", {})
    if not isinstance(autos_raw, dict):
        raise ParseError("automorphisms must be an object keyed by name")
    autos: list[tuple[str, Automorphism]] = []
    for name, value in autos_raw.items():
        if isinstance(value, str):
            mapping = parse_cycle_notation(graph.vertices, value)
        elif isinstance(value, dict):
            mapping = {str(k): str(v) for k, v in value.items()}
            for v in graph.vertices:
                mapping.setdefault(v, v)
        else:
            raise ParseError(f"automorphism {name!r} must be a string or mapping object")
        autos.append((str(name), check_automorphism(graph, mapping)))

    return Fixture(
        graph=graph,
        base=base,
        basis=basis,
        orders=orders,
        spec=spec,
        assignment=assignment,
        automorphisms=tuple(autos),
    )


def load_instance(path: str) -> Fixture:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_instance(fh.read())


def instance_document(fixture: Fixture) -> dict:
    """Plain-dict form of a fixture, with every defaulted choice pinned."""
    graph = fixture.graph
    voltages = {}
    for u, v in graph.edges:
        el = fixture.assignment.voltage(Arc(u, v))
        if not el.is_zero():
            voltages[f"{u}>{v}"] = list(
                element_to_cyclic(fixture.spec, fixture.orders, el)
            )
    return {
        "vertices": list(graph.vertices),
        "edges": [list(e) for e in graph.edges],
        "base": fixture.base,
        "tree": [list(e) for e in fixture.basis.tree_edges],
        "cotree_arcs": [[a.tail, a.head] for a in fixture.basis.cotree_arcs],
        "group": list(fixture.orders),
        "voltages": voltages,
        "automorphisms": {
            name: {v: a(v) for v in graph.vertices} for name, a in fixture.automorphisms
        },
    }


def serialize_instance(fixture: Fixture) -> str:
    return json.dumps(instance_document(fixture), indent=2) + "\n"


def enumerate_automorphisms(g: Graph, limit: int | None = None) -> list[Automorphism]:
    """All automorphisms by backtracking, in lexicographic image order.

    Intended for small graphs (the generator caps at 8 vertices); the
    degree precheck and incremental adjacency pruning keep it quick there.
    """
    vertices = g.vertices
    n = len(vertices)
    degree = {v: len(g.neighbors(v)) for v in vertices}
    out: list[Automorphism] = []

    def extend(i: int, image: dict[str, str], used: set[str]) -> Iterator[dict[str, str]]:
        if i == n:
            yield dict(image)
            return
        v = vertices[i]
        for w in vertices:
            if w in used or degree[w] != degree[v]:
                continue
            ok = True
            for u in vertices[:i]:
                if g.has_edge(u, v) != g.has_edge(image[u], w):
                    ok = False
                    break
            if ok:
                image[v] = w
                used.add(w)
                yield from extend(i + 1, image, used)
                used.remove(w)
                del image[v]

    for mapping in extend(0, {}, set()):
        out.append(Automorphism(mapping))
        if limit is not None and len(out) >= limit:
            break
    return out


def generate_instance(
    seed: int,
    max_vertices: int = 8,
    max_group_order: int = 64,
    kernel_budget: int = 2**18,
    max_automorphisms: int = 4,
) -> dict:
    """Deterministic random instance within oracle-friendly bounds.

    The graph is a random spanning tree plus extra edges, capped so the
    group exponent to the power of the cycle rank stays within
    ``kernel_budget``.  Voltages vanish on the default tree.  Automorphisms
    are sampled from the brute-forced automorphism group.
    """
    rng = random.Random(seed)
    n = rng.randint(3, max_vertices)
    vertices = [str(i) for i in range(n)]

    tree_pairs = [(str(rng.randrange(i)), str(i)) for i in range(1, n)]
    edge_set = {frozenset(e) for e in tree_pairs}

    orders: list[int] = []
    product = 1
    for _ in range(rng.randint(1, 3)):
        o = rng.randint(2, 8)
        if product * o > max_group_order:
            break
        orders.append(o)
        product *= o
    if not orders:
        orders = [2]
    spec = parse_group_spec(orders)
    n_e = spec.exponent

    max_t = 0
    while n_e ** (max_t + 1) <= kernel_budget:
        max_t += 1
    non_edges = [
        (u, v)
        for u, v in combinations(vertices, 2)
        if frozenset((u, v)) not in edge_set
    ]
    rng.shuffle(non_edges)
    extra = rng.randint(0, min(max_t, len(non_edges)))
    edges = tree_pairs + non_edges[:extra]

    graph = validate_graph(vertices, edges)
    base = rng.choice(vertices)
    basis = build_spanning_tree(graph, base)

    voltages = {}
    for arc in basis.cotree_arcs:
        residues = [rng.randrange(o) for o in orders]
        voltages[f"{arc.tail}>{arc.head}"] = residues

    group_elements = enumerate_automorphisms(graph)
    count = rng.randint(1, min(max_automorphisms, len(group_elements)))
    chosen = rng.sample(group_elements, count)
    autos = {
        f"a{i + 1}": {v: a(v) for v in graph.vertices} for i, a in enumerate(chosen)
    }

    doc: dict = {
        "vertices": list(graph.vertices),
        "edges": [list(e) for e in graph.edges],
        "base": base,
    }
    if rng.random() < 0.3:
        doc["tree"] = [list(e) for e in basis.tree_edges]
        doc["cotree_arcs"] = [[a.tail, a.head] for a in basis.cotree_arcs]
    doc["group"] = list(orders)
    doc["voltages"] = voltages
    doc["automorphisms"] = autos
    return doc
