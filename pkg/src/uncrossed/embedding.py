"""Combinatorial plane drawings: rotation systems, face tracing, planarity.

A drawing fixes a subset of host edges (the drawn ones) together with a
rotation system: for every vertex, the clockwise cyclic order of its drawn
neighbors. Faces are recovered purely combinatorially by dart tracing, so
every check here is exact and deterministic.

The face-successor convention is fixed once and used everywhere: the dart
after ``(u, v)`` is ``(v, w)`` where ``w`` follows ``u`` in the cyclic order
around ``v``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

import networkx as nx

from .errors import MalformedRotationError, NotOuterplanarError
from .graph import (
    Edge,
    Graph,
    connected_components,
    edges_connected,
    normalize_edge,
)

Dart = tuple[int, int]


@dataclass(frozen=True)
class Face:
    """One face of an embedded drawing: a closed walk of darts."""

    id: int
    walk: tuple  # tuple[Dart, ...]
    vertices: frozenset
    length: int


def _cyclic_successor(seq: tuple, item: int) -> int:
    i = seq.index(item)
    return seq[(i + 1) % len(seq)]


def trace_rotation(rotation: dict) -> list[Face]:
    """Trace all faces of a rotation system given as vertex -> neighbor tuple.

    Vertices with empty rotations contribute no darts (and no faces). Raises
    MalformedRotationError when darts are not symmetric or orders contain
    repeats.
    """
    succ: dict[Dart, Dart] = {}
    for v in sorted(rotation):
        order = tuple(rotation[v])
        if len(set(order)) != len(order):
            raise MalformedRotationError(f"repeated neighbor around vertex {v}", v)
        for u in order:
            if u == v:
                raise MalformedRotationError(f"self-dart at vertex {v}", v)
            if u not in rotation or v not in rotation[u]:
                raise MalformedRotationError(
                    f"dart ({v}, {u}) has no reverse in the rotation", v
                )
    for v in sorted(rotation):
        order = tuple(rotation[v])
        for u in order:
            # dart (u, v) continues to (v, successor of u around v)
            succ[(u, v)] = (v, _cyclic_successor(order, u))
    faces: list[Face] = []
    seen: set[Dart] = set()
    for v in sorted(rotation):
        for u in rotation[v]:
            start = (v, u)
            if start in seen:
                continue
            walk = []
            cur = start
            while True:
                walk.append(cur)
                seen.add(cur)
                cur = succ[cur]
                if cur == start:
                    break
            verts = frozenset(d[0] for d in walk)
            faces.append(Face(len(faces), tuple(walk), verts, len(walk)))
    return faces


@dataclass(frozen=True)
class PlaneDrawing:
    """A drawn edge subset of a host graph plus a rotation system.

    ``rotation`` is indexed by vertex id; entry v lists the drawn neighbors of
    v in clockwise order. ``outer_dart``, when set, designates the face whose
    boundary contains that dart as the outer one (used by rendering; face
    structure itself is spherical and needs no outer choice).

    Construction only checks cheap shape constraints so that structurally
    broken drawings can still be represented and then *reported* by the
    verifier.
    """

    host: Graph
    drawn: frozenset = field(default_factory=frozenset)
    rotation: tuple = ()  # tuple[tuple[int, ...], ...]
    outer_dart: tuple | None = None

    def __post_init__(self):
        object.__setattr__(
            self, "drawn", frozenset(normalize_edge(u, v) for u, v in self.drawn)
        )
        object.__setattr__(self, "rotation", tuple(tuple(r) for r in self.rotation))
        if len(self.rotation) != self.host.n:
            raise ValueError(
                f"rotation has {len(self.rotation)} entries for {self.host.n} vertices"
            )

    @property
    def undrawn(self) -> frozenset:
        return self.host.edges - self.drawn

    def rotation_map(self) -> dict:
        return {v: self.rotation[v] for v in range(self.host.n)}

    def structural_errors(self) -> list[str]:
        """Shape problems that make face tracing meaningless."""
        errs = []
        for u, v in sorted(self.drawn):
            if (u, v) not in self.host.edges:
                errs.append(f"drawn edge ({u}, {v}) is not a host edge")
        expected = [set() for _ in range(self.host.n)]
        for u, v in self.drawn:
            if u < self.host.n and v < self.host.n:
                expected[u].add(v)
                expected[v].add(u)
        for v in range(self.host.n):
            order = self.rotation[v]
            if len(set(order)) != len(order):
                errs.append(f"vertex {v}: repeated neighbor in rotation")
                continue
            if set(order) != expected[v]:
                errs.append(
                    f"vertex {v}: rotation lists {sorted(order)}, drawn edges give "
                    f"{sorted(expected[v])}"
                )
        return errs

    @cached_property
    def faces(self) -> tuple:
        return tuple(trace_rotation(self.rotation_map()))

    @cached_property
    def vertex_faces(self) -> dict:
        """vertex -> frozenset of incident face ids."""
        idx: dict[int, set[int]] = {v: set() for v in range(self.host.n)}
        for f in self.faces:
            for v in f.vertices:
                idx[v].add(f.id)
        return {v: frozenset(s) for v, s in idx.items()}

    def outer_face(self) -> Face | None:
        if self.outer_dart is None:
            return None
        for f in self.faces:
            if self.outer_dart in f.walk:
                return f
        raise ValueError(f"outer dart {self.outer_dart} lies on no face")


def trace_faces(d: PlaneDrawing) -> list[Face]:
    """All faces of the drawing, deterministically ordered."""
    return list(d.faces)


def is_planar_embedding(d: PlaneDrawing) -> bool:
    """Check that the rotation system describes a planar embedding.

    True iff the drawn subgraph is connected, spans every host vertex, and the
    traced faces satisfy V - E + F = 2.
    """
    if d.structural_errors():
        return False
    if not edges_connected(d.host.n, d.drawn):
        return False
    # a connected drawing with no darts is a lone vertex: one face
    face_count = len(d.faces) or 1
    return d.host.n - len(d.drawn) + face_count == 2


def cofacial(d: PlaneDrawing, u: int, v: int) -> bool:
    """True iff u and v lie on a common face of the drawing."""
    return bool(d.vertex_faces[u] & d.vertex_faces[v])


def _nx_graph(n: int, edges) -> nx.Graph:
    g = nx.Graph()
    g.add_nodes_from(range(n))
    g.add_edges_from(edges)
    return g


def is_planar_graph(g: Graph) -> tuple:
    """(True, embedding witness) or (False, None) for the abstract graph.

    The witness is a PlaneDrawing of g with every edge drawn; it is only
    produced for connected inputs (disconnected ones report planarity with a
    None witness).
    """
    ok, emb = nx.check_planarity(_nx_graph(g.n, g.edges))
    if not ok:
        return False, None
    if not edges_connected(g.n, g.edges):
        return True, None
    rotation = tuple(
        tuple(emb.neighbors_cw_order(v)) if g.degree(v) else () for v in range(g.n)
    )
    return True, PlaneDrawing(g, g.edges, rotation)


def _embed_component_outerplanar(vertices: list, edges: list) -> tuple:
    """Embed one connected edge set with all its vertices on a single face.

    Returns (rotation dict, outer walk darts). Raises NotOuterplanarError with
    a witness when impossible. Uses an apex vertex adjacent to everything: the
    component is outerplanar iff the augmented graph is planar, and the faces
    of the apex-free embedding then include one containing every vertex.
    """
    apex = max(vertices) + 1
    aug = _nx_graph(0, edges)
    aug.add_nodes_from(vertices)
    aug.add_edges_from((apex, v) for v in vertices)
    ok, emb = nx.check_planarity(aug, counterexample=False)
    if not ok:
        _, bad = nx.check_planarity(aug, counterexample=True)
        witness = [
            normalize_edge(u, v) for u, v in bad.edges() if apex not in (u, v)
        ]
        raise NotOuterplanarError(
            f"component {vertices} is not outerplanar", witness or None
        )
    rotation = {}
    for v in vertices:
        rotation[v] = tuple(u for u in emb.neighbors_cw_order(v) if u != apex)
    faces = trace_rotation(rotation)
    vset = set(vertices)
    for f in faces:
        if vset <= f.vertices:
            return rotation, list(f.walk)
    # single vertex, no edges: no darts at all
    if not edges:
        return rotation, []
    raise AssertionError("apex embedding produced no all-vertex face")


def is_outerplanar(g: Graph) -> tuple:
    """(True, witness drawing) or (False, None).

    Outerplanarity of the abstract graph: some planar embedding keeps every
    vertex on one face. The witness (for connected g) is a PlaneDrawing with
    all edges drawn and outer_dart set on the common face.
    """
    try:
        if not edges_connected(g.n, g.edges):
            # test each component separately; no single witness drawing
            for comp in connected_components(g.n, g.edges):
                comp_set = set(comp)
                sub = [e for e in g.sorted_edges if e[0] in comp_set]
                _embed_component_outerplanar(comp, sub)
            return True, None
        rotation_map, outer_walk = _embed_component_outerplanar(
            list(range(g.n)), list(g.sorted_edges)
        )
        rotation = tuple(tuple(rotation_map.get(v, ())) for v in range(g.n))
        outer = outer_walk[0] if outer_walk else None
        return True, PlaneDrawing(g, g.edges, rotation, outer_dart=outer)
    except NotOuterplanarError:
        return False, None


class OuterBuilder:
    """Incrementally grow a connected plane drawing inside one outer region.

    Components are placed with a designated outer walk; afterwards bridge
    edges may join distinct components through the outer region. A bridge
    never splits a face, so every dart previously on the merged outer face
    stays there, and the two new darts join it. The net effect: all placed
    components end up with all their outer-walk vertices on one shared face.
    """

    def __init__(self):
        self.rotation: dict[int, list[int]] = {}
        self.outer: dict[Dart, None] = {}  # insertion-ordered dart set
        self.anchor: dict[int, int] = {}  # v -> a with (a, v) on the outer face
        self._parent: dict[int, int] = {}
        self.drawn: set[Edge] = set()

    def _find(self, x: int) -> int:
        p = self._parent
        while p[x] != x:
            p[x] = p[p[x]]
            x = p[x]
        return x

    def _union(self, x: int, y: int):
        rx, ry = self._find(x), self._find(y)
        if rx != ry:
            self._parent[max(rx, ry)] = min(rx, ry)

    def add_vertex(self, v: int):
        if v in self.rotation:
            raise ValueError(f"vertex {v} already placed")
        self.rotation[v] = []
        self._parent[v] = v

    def add_component(self, rotation: dict, outer_walk: list):
        """Place a pre-embedded component; outer_walk darts face the shared region."""
        verts = sorted(rotation)
        for v in verts:
            if v in self.rotation:
                raise ValueError(f"vertex {v} already placed")
            self.rotation[v] = list(rotation[v])
            self._parent[v] = v
        for v in verts[1:]:
            self._union(verts[0], v)
        for a, b in outer_walk:
            self.outer[(a, b)] = None
            self.anchor.setdefault(b, a)
        for v in verts:
            for u in rotation[v]:
                self.drawn.add(normalize_edge(v, u))

    def components(self) -> list[list[int]]:
        groups: dict[int, list[int]] = {}
        for v in self.rotation:
            groups.setdefault(self._find(v), []).append(v)
        return [sorted(groups[r]) for r in sorted(groups)]

    def _insert_after_anchor(self, v: int, w: int):
        """Insert neighbor w into the rotation of v at an outer corner."""
        order = self.rotation[v]
        if not order:
            order.append(w)
            return
        a = self.anchor[v]
        order.insert(order.index(a) + 1, w)

    def add_bridge(self, u: int, v: int):
        """Draw edge {u, v} through the outer region, merging two components."""
        for x in (u, v):
            if x not in self.rotation:
                self.add_vertex(x)
        if self._find(u) == self._find(v):
            raise ValueError(f"bridge ({u}, {v}) would close a cycle")
        self._insert_after_anchor(u, v)
        self._insert_after_anchor(v, u)
        self._union(u, v)
        self.outer[(u, v)] = None
        self.outer[(v, u)] = None
        self.anchor[v] = u
        self.anchor[u] = v
        self.drawn.add(normalize_edge(u, v))

    def expand_edge(self, u: int, v: int, mids: list):
        """Replace drawn edge {u, v} by parallel length-2 paths through mids.

        The first path hugs the face left of dart (u, v), the last the face on
        the other side; paths in between bound new quadrilateral faces.
        """
        if normalize_edge(u, v) not in self.drawn:
            raise ValueError(f"edge ({u}, {v}) is not drawn")
        if not mids:
            raise ValueError("need at least one replacement path")
        ru, rv = self.rotation[u], self.rotation[v]
        i = ru.index(v)
        self.rotation[u] = ru[:i] + list(mids) + ru[i + 1 :]
        j = rv.index(u)
        self.rotation[v] = rv[:j] + list(reversed(mids)) + rv[j + 1 :]
        for x in mids:
            self.rotation[x] = [u, v]
            self._parent[x] = x
            self._union(u, x)
            self.drawn.add(normalize_edge(u, x))
            self.drawn.add(normalize_edge(x, v))
        self.drawn.discard(normalize_edge(u, v))
        first, last = mids[0], mids[-1]
        if (u, v) in self.outer:
            del self.outer[(u, v)]
            self.outer[(u, first)] = None
            self.outer[(first, v)] = None
            self.anchor[first] = u
            if self.anchor.get(v) == u:
                self.anchor[v] = first
        if (v, u) in self.outer:
            del self.outer[(v, u)]
            self.outer[(v, last)] = None
            self.outer[(last, u)] = None
            self.anchor[last] = v
            if self.anchor.get(u) == v:
                self.anchor[u] = last
        for x in (u, v):
            if self.anchor.get(x) in mids:
                continue
            a = self.anchor.get(x)
            if a is not None and (a, x) not in self.outer:
                # anchor dart vanished with the expansion; repair from outer set
                for aa, bb in self.outer:
                    if bb == x:
                        self.anchor[x] = aa
                        break

    def build(self, host: Graph) -> PlaneDrawing:
        rotation = tuple(tuple(self.rotation.get(v, ())) for v in range(host.n))
        outer = min(self.outer) if self.outer else None
        return PlaneDrawing(host, frozenset(self.drawn), rotation, outer_dart=outer)


def outerplanar_extension(host: Graph, edges) -> PlaneDrawing:
    """Draw an outerplanar edge subset of host with *every* host vertex on one face.

    Components of the subset are embedded with all vertices on the shared
    region, isolated host vertices are placed in it, and host edges are added
    as bridges until the drawing is connected and spanning. The result is an
    admissible drawing of host: any two vertices are cofacial via the shared
    face, so every undrawn edge has cofacial endpoints.

    Requires host to be connected. Raises NotOuterplanarError when the subset
    is not outerplanar.
    """
    edge_set = frozenset(normalize_edge(u, v) for u, v in edges)
    for e in edge_set:
        if e not in host.edges:
            raise ValueError(f"edge {e} is not a host edge")
    builder = OuterBuilder()
    touched = set()
    for e in edge_set:
        touched.update(e)
    comps = [c for c in connected_components(host.n, edge_set) if len(c) > 1]
    for comp in comps:
        comp_set = set(comp)
        sub = sorted(e for e in edge_set if e[0] in comp_set)
        rotation, outer_walk = _embed_component_outerplanar(comp, sub)
        builder.add_component(rotation, outer_walk)
    for v in range(host.n):
        if v not in touched:
            builder.add_vertex(v)
    # connect through the outer region using host edges
    changed = True
    while len(builder.components()) > 1 and changed:
        changed = False
        for u, v in host.sorted_edges:
            if builder._find(u) != builder._find(v):
                builder.add_bridge(u, v)
                changed = True
                if len(builder.components()) == 1:
                    break
    if len(builder.components()) > 1:
        raise ValueError("host graph is not connected")
    return builder.build(host)
