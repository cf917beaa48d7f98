"""Base-graph machinery: validated simple graphs, automorphisms, spanning
trees, fundamental cycles, and walk manipulation.

Vertices are opaque string labels ordered by their position in the input
list; they are never compared numerically.  All objects are immutable after
construction and all functions are pure, so concurrent read access is safe.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Mapping

from .errors import (
    BaseNotInGraphError,
    DisconnectedError,
    DuplicateEdgeError,
    DuplicateVertexError,
    LoopEdgeError,
    NotAdjacencyPreservingError,
    NotATreeError,
    NotBijectiveError,
    UnknownEndpointError,
    ValidationError,
)


@dataclass(frozen=True, order=True)
class Arc:
    """Directed traversal (tail -> head) of an undirected edge."""

    tail: str
    head: str

    def reverse(self) -> "Arc":
        return Arc(self.head, self.tail)

    def __str__(self) -> str:
        return f"({self.tail},{self.head})"


@dataclass(frozen=True)
class Walk:
    """Arc-consecutive walk.  An empty walk is anchored at ``start``."""

    arcs: tuple[Arc, ...]
    start: str

    def __post_init__(self) -> None:
        prev = self.start
        for arc in self.arcs:
            if arc.tail != prev:
                raise ValidationError(
                    f"walk is not arc-consecutive at {arc} (expected tail {prev!r})"
                )
            prev = arc.head

    @property
    def end(self) -> str:
        return self.arcs[-1].head if self.arcs else self.start

    def is_closed(self) -> bool:
        return self.start == self.end

    def __len__(self) -> int:
        return len(self.arcs)

    def concat(self, other: "Walk") -> "Walk":
        if other.start != self.end:
            raise ValidationError(
                f"cannot concatenate: walk ends at {self.end!r}, next starts at {other.start!r}"
            )
        return Walk(self.arcs + other.arcs, self.start)

    def reverse(self) -> "Walk":
        return Walk(tuple(a.reverse() for a in reversed(self.arcs)), self.end)

    def vertex_sequence(self) -> tuple[str, ...]:
        return (self.start,) + tuple(a.head for a in self.arcs)

    def __str__(self) -> str:
        return ">".join(self.vertex_sequence())


class Graph:
    """Finite simple undirected connected graph.

    Construct through :func:`validate_graph`; direct construction skips
    validation.  ``edges`` holds one canonical ordered pair per edge,
    oriented and sorted by vertex position.
    """

    __slots__ = ("vertices", "edges", "_pos", "_adj", "_edge_set")

    def __init__(self, vertices: tuple[str, ...], edges: tuple[tuple[str, str], ...]):
        self.vertices = vertices
        self.edges = edges
        self._pos = {v: i for i, v in enumerate(vertices)}
        self._edge_set = {frozenset(e) for e in edges}
        adj: dict[str, list[str]] = {v: [] for v in vertices}
        for u, v in edges:
            adj[u].append(v)
            adj[v].append(u)
        pos = self._pos
        self._adj = {v: tuple(sorted(ns, key=pos.__getitem__)) for v, ns in adj.items()}

    def index(self, v: str) -> int:
        return self._pos[v]

    def has_vertex(self, v: str) -> bool:
        return v in self._pos

    def has_edge(self, u: str, v: str) -> bool:
        return frozenset((u, v)) in self._edge_set

    def neighbors(self, v: str) -> tuple[str, ...]:
        """Neighbors of ``v`` in vertex-list order."""
        return self._adj[v]

    def canonical_arc(self, u: str, v: str) -> Arc:
        """The edge {u,v} oriented with the earlier-listed vertex first."""
        if not self.has_edge(u, v):
            raise UnknownEndpointError(f"{{{u},{v}}} is not an edge")
        return Arc(u, v) if self._pos[u] < self._pos[v] else Arc(v, u)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @property
    def cycle_rank(self) -> int:
        """t = |E| - |V| + 1, the rank of the cycle space."""
        return len(self.edges) - len(self.vertices) + 1

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Graph)
            and self.vertices == other.vertices
            and self.edges == other.edges
        )

    def __hash__(self) -> int:
        return hash((self.vertices, self.edges))

    def __repr__(self) -> str:
        return f"Graph({len(self.vertices)} vertices, {len(self.edges)} edges)"


class Automorphism:
    """Adjacency-preserving vertex bijection.

    Construct through :func:`check_automorphism`.  Calling the object
    applies the underlying permutation to a vertex label.
    """

    __slots__ = ("mapping",)

    def __init__(self, mapping: dict[str, str]):
        self.mapping = mapping

    def __call__(self, v: str) -> str:
        return self.mapping[v]

    def apply_arc(self, arc: Arc) -> Arc:
        return Arc(self.mapping[arc.tail], self.mapping[arc.head])

    def inverse(self) -> "Automorphism":
        return Automorphism({w: v for v, w in self.mapping.items()})

    def after(self, other: "Automorphism") -> "Automorphism":
        """Composition self o other: apply ``other`` first."""
        return Automorphism({v: self.mapping[w] for v, w in other.mapping.items()})

    def is_identity(self) -> bool:
        return all(v == w for v, w in self.mapping.items())

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Automorphism) and self.mapping == other.mapping

    def __hash__(self) -> int:
        return hash(frozenset(self.mapping.items()))

    def __repr__(self) -> str:
        return f"Automorphism({self.mapping!r})"


@dataclass(frozen=True, eq=False)
class CycleBasis:
    """Spanning tree with base vertex, ordered cotree arcs, and the
    fundamental closed walks through them.

    ``cycles[i]`` is the closed walk at ``base`` passing once through
    ``cotree_arcs[i]``: tree path to the arc's tail, the arc itself, tree
    path from the arc's head back to base.
    """

    graph: Graph
    base: str
    tree_edges: tuple[tuple[str, str], ...]
    cotree_arcs: tuple[Arc, ...]
    cycles: tuple[Walk, ...]
    parent: Mapping[str, str | None]

    @property
    def rank(self) -> int:
        return len(self.cotree_arcs)

    def cotree_index(self, arc: Arc) -> tuple[int, int] | None:
        """(position, sign) if ``arc`` is a cotree arc or its opposite."""
        for j, h in enumerate(self.cotree_arcs):
            if arc == h:
                return j, 1
            if arc == h.reverse():
                return j, -1
        return None


def validate_graph(raw_vertices: Iterable[str], raw_edges: Iterable[Iterable[str]]) -> Graph:
    """Validate vertex/edge lists into a simple connected :class:`Graph`.

    Vertex order is the input order.  Edges are stored canonically:
    oriented toward the later-listed vertex and sorted by endpoint
    positions.
    """
    vertices = tuple(raw_vertices)
    seen: set[str] = set()
    for v in vertices:
        if v in seen:
            raise DuplicateVertexError(f"duplicate vertex {v!r}")
        seen.add(v)
    pos = {v: i for i, v in enumerate(vertices)}

    canonical: list[tuple[str, str]] = []
    edge_set: set[frozenset[str]] = set()
    for e in raw_edges:
        pair = tuple(e)
        if len(pair) != 2:
            raise ValidationError(f"edge {pair!r} does not have two endpoints")
        u, v = pair
        if u == v:
            raise LoopEdgeError(f"loop edge at {u!r}")
        for x in (u, v):
            if x not in pos:
                raise UnknownEndpointError(f"edge endpoint {x!r} is not a vertex")
        key = frozenset((u, v))
        if key in edge_set:
            raise DuplicateEdgeError(f"duplicate edge {{{u},{v}}}")
        edge_set.add(key)
        canonical.append((u, v) if pos[u] < pos[v] else (v, u))
    canonical.sort(key=lambda e: (pos[e[0]], pos[e[1]]))

    graph = Graph(vertices, tuple(canonical))
    if vertices:
        reached = {vertices[0]}
        queue = deque([vertices[0]])
        while queue:
            u = queue.popleft()
            for w in graph.neighbors(u):
                if w not in reached:
                    reached.add(w)
                    queue.append(w)
        if len(reached) != len(vertices):
            missing = sorted(set(vertices) - reached, key=pos.__getitem__)
            raise DisconnectedError(f"graph is disconnected; unreachable: {missing}")
    return graph


def check_automorphism(g: Graph, perm: Mapping[str, str]) -> Automorphism:
    """Validate that ``perm`` is an adjacency-preserving vertex bijection."""
    if set(perm.keys()) != set(g.vertices):
        raise NotBijectiveError("mapping keys do not cover the vertex set exactly")
    values = set(perm.values())
    if values != set(g.vertices):
        raise NotBijectiveError("mapping is not a bijection onto the vertex set")
    # A bijection sending every edge to an edge permutes the (finite) edge
    # set, hence preserves non-adjacency as well.
    for u, v in g.edges:
        if not g.has_edge(perm[u], perm[v]):
            raise NotAdjacencyPreservingError(
                f"edge {{{u},{v}}} maps to non-edge {{{perm[u]},{perm[v]}}}"
            )
    return Automorphism(dict(perm))


def _root_tree(g: Graph, base: str, tree_edges: set[frozenset[str]]) -> dict[str, str | None]:
    """Parent map of the tree rooted at ``base`` (children via BFS in
    vertex-list order).  Raises if the edges do not span the graph."""
    parent: dict[str, str | None] = {base: None}
    queue = deque([base])
    while queue:
        u = queue.popleft()
        for w in g.neighbors(u):
            if frozenset((u, w)) in tree_edges and w not in parent:
                parent[w] = u
                queue.append(w)
    if len(parent) != len(g.vertices):
        raise NotATreeError("explicit tree does not reach every vertex")
    return parent


def _path_to_root(parent: Mapping[str, str | None], v: str) -> list[str]:
    path = [v]
    while parent[path[-1]] is not None:
        path.append(parent[path[-1]])  # type: ignore[arg-type]
    return path


def _tree_walk(parent: Mapping[str, str | None], v1: str, v2: str) -> Walk:
    p1 = _path_to_root(parent, v1)
    p2 = _path_to_root(parent, v2)
    while len(p1) > 1 and len(p2) > 1 and p1[-2] == p2[-2]:
        p1.pop()
        p2.pop()
    seq = p1 + list(reversed(p2[:-1]))
    return Walk(tuple(Arc(a, b) for a, b in zip(seq, seq[1:])), v1)


def build_spanning_tree(
    g: Graph,
    base: str,
    tree_edges: Iterable[Iterable[str]] | None = None,
    cotree_arcs: Iterable[Iterable[str]] | None = None,
) -> CycleBasis:
    """Choose a spanning tree and the fundamental cycle basis through it.

    Without ``tree_edges``, the tree is grown breadth-first from ``base``
    with neighbors visited in vertex-list order.  Cotree arcs default to
    the orientation (u,v) with u listed before v, ordered lexicographically
    by endpoint positions; pass ``cotree_arcs`` to pin a different
    orientation or order (the tree may then be given implicitly as the
    complement of those arcs).
    """
    if not g.has_vertex(base):
        raise BaseNotInGraphError(f"base vertex {base!r} is not in the graph")

    explicit_arcs: list[Arc] | None = None
    if cotree_arcs is not None:
        explicit_arcs = []
        for raw in cotree_arcs:
            pair = tuple(raw)
            if len(pair) != 2 or not g.has_edge(*pair):
                raise NotATreeError(f"cotree arc {pair!r} is not an arc of the graph")
            explicit_arcs.append(Arc(*pair))
        if len({frozenset((a.tail, a.head)) for a in explicit_arcs}) != len(explicit_arcs):
            raise NotATreeError("cotree arcs name the same edge twice")

    if tree_edges is not None:
        tset: set[frozenset[str]] = set()
        for raw in tree_edges:
            pair = tuple(raw)
            if len(pair) != 2 or not g.has_edge(*pair):
                raise NotATreeError(f"tree edge {pair!r} is not an edge of the graph")
            tset.add(frozenset(pair))
        if len(tset) != len(g.vertices) - 1:
            raise NotATreeError(
                f"explicit tree has {len(tset)} edges, expected {len(g.vertices) - 1}"
            )
    elif explicit_arcs is not None:
        excluded = {frozenset((a.tail, a.head)) for a in explicit_arcs}
        tset = {frozenset(e) for e in g.edges} - excluded
        if len(tset) != len(g.vertices) - 1:
            raise NotATreeError("complement of the cotree arcs is not a spanning tree")
    else:
        tset = set()
        visited = {base}
        queue = deque([base])
        while queue:
            u = queue.popleft()
            for w in g.neighbors(u):
                if w not in visited:
                    visited.add(w)
                    tset.add(frozenset((u, w)))
                    queue.append(w)

    parent = _root_tree(g, base, tset)

    cotree_edges = [e for e in g.edges if frozenset(e) not in tset]
    if explicit_arcs is not None:
        given = {frozenset((a.tail, a.head)) for a in explicit_arcs}
        if given != {frozenset(e) for e in cotree_edges}:
            raise NotATreeError("cotree arcs do not match the complement of the tree")
        arcs = tuple(explicit_arcs)
    else:
        arcs = tuple(Arc(u, v) for u, v in cotree_edges)  # g.edges is already sorted

    cycles = tuple(
        _tree_walk(parent, base, h.tail)
        .concat(Walk((h,), h.tail))
        .concat(_tree_walk(parent, h.head, base))
        for h in arcs
    )

    pos = g.index
    canonical_tree = tuple(
        sorted(
            (tuple(sorted(e, key=pos)) for e in tset),
            key=lambda e: (pos(e[0]), pos(e[1])),
        )
    )
    return CycleBasis(
        graph=g,
        base=base,
        tree_edges=canonical_tree,  # type: ignore[arg-type]
        cotree_arcs=arcs,
        cycles=cycles,
        parent=parent,
    )


def tree_path(cb: CycleBasis, v1: str, v2: str) -> Walk:
    """Unique reduced walk from v1 to v2 inside the spanning tree."""
    for v in (v1, v2):
        if not cb.graph.has_vertex(v):
            raise UnknownEndpointError(f"vertex {v!r} is not in the graph")
    return _tree_walk(cb.parent, v1, v2)


def apply_automorphism_to_walk(a: Automorphism, w: Walk) -> Walk:
    """Arcwise image of a walk; closed walks stay closed."""
    return Walk(tuple(a.apply_arc(arc) for arc in w.arcs), a(w.start))


def signed_cotree_incidence(cb: CycleBasis, w: Walk) -> tuple[int, ...]:
    """Net traversal count of each cotree arc along ``w``.

    Entry j counts traversals of cotree arc j minus traversals of its
    opposite; tree arcs contribute nothing.
    """
    index: dict[Arc, tuple[int, int]] = {}
    for j, h in enumerate(cb.cotree_arcs):
        index[h] = (j, 1)
        index[h.reverse()] = (j, -1)
    row = [0] * cb.rank
    for arc in w.arcs:
        hit = index.get(arc)
        if hit is not None:
            row[hit[0]] += hit[1]
    return tuple(row)
