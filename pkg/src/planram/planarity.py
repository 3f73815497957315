"""Planarity testing, combinatorial embeddings, faces, and face-based checks.

An embedding is a rotation system: a cyclic ordering of the neighbours of
every vertex.  Faces are traced combinatorially (the successor of a directed
edge u->v is v->w where w follows u in the rotation at v), so everything here
is exact integer combinatorics; no coordinates are involved.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import networkx as nx

from . import errors
from .graphs import Graph, bits, contains_c4


@dataclass(frozen=True)
class Face:
    """A face boundary as a closed directed-edge walk."""

    boundary: tuple[tuple[int, int], ...]

    @property
    def length(self) -> int:
        return len(self.boundary)

    @cached_property
    def vertex_set(self) -> frozenset[int]:
        return frozenset(u for u, _ in self.boundary)

    @cached_property
    def edge_set(self) -> frozenset[tuple[int, int]]:
        return frozenset((min(u, v), max(u, v)) for u, v in self.boundary)


@dataclass(frozen=True)
class PlaneEmbedding:
    base: Graph
    rotation: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        for v, nbrs in enumerate(self.rotation):
            if set(nbrs) != set(bits(self.base.adj[v])) or len(nbrs) != self.base.degree(v):
                raise ValueError(f"rotation at {v} does not list its neighbours")

    @cached_property
    def faces(self) -> tuple[Face, ...]:
        """Orbits of the face-successor map; every dart lies on one face."""
        index = {
            (v, u): i
            for v, nbrs in enumerate(self.rotation)
            for i, u in enumerate(nbrs)
        }
        seen = set()
        faces = []
        for start in index:
            if start in seen:
                continue
            walk = []
            dart = start
            while dart not in seen:
                seen.add(dart)
                walk.append(dart)
                u, v = dart
                nbrs = self.rotation[v]
                dart = (v, nbrs[(index[(v, u)] + 1) % len(nbrs)])
            faces.append(Face(tuple(walk)))
        return tuple(faces)

    def face_census(self) -> dict[int, int]:
        census: dict[int, int] = {}
        for face in self.faces:
            census[face.length] = census.get(face.length, 0) + 1
        return census

    def euler_ok(self) -> bool:
        g = self.base
        return g.is_connected() and g.n - g.edge_count + len(self.faces) == 2

    def check_valid(self) -> None:
        if not self.euler_ok():
            raise errors.NotPlanar("face census violates Euler's formula")
        if sum(f.length for f in self.faces) != 2 * self.base.edge_count:
            raise errors.NotPlanar("face lengths do not cover every dart")


def is_planar(g: Graph) -> bool:
    return nx.check_planarity(_to_nx(g))[0]


def embed(g: Graph) -> PlaneEmbedding:
    """One valid combinatorial embedding (not canonical, but deterministic)."""
    if not g.is_connected():
        raise errors.Disconnected("embedding requires a connected graph")
    ok, emb = nx.check_planarity(_to_nx(g))
    if not ok:
        raise errors.NotPlanar("graph contains a K5 or K3,3 minor")
    rotation = tuple(
        tuple(emb.neighbors_cw_order(v)) if g.degree(v) else ()
        for v in range(g.n)
    )
    embedding = PlaneEmbedding(g, rotation)
    embedding.check_valid()
    return embedding


def _to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


# -- triangle cover ------------------------------------------------------


@dataclass(frozen=True)
class GammaReport:
    """Edges covered by no triangle, their count, and the endpoint subgraph."""

    gamma_edges: tuple[tuple[int, int], ...]
    induced: Graph | None
    endpoints: tuple[int, ...]

    @property
    def tau(self) -> int:
        return len(self.gamma_edges)


def gamma(g: Graph) -> GammaReport:
    """Triangle-free edge set; independent of any embedding."""
    edges = tuple(
        (u, v) for u, v in g.edges() if not g.adj[u] & g.adj[v]
    )
    endpoints = tuple(sorted({v for e in edges for v in e}))
    induced = g.induced(endpoints) if endpoints else None
    return GammaReport(edges, induced, endpoints)


def gamma_edge_subgraph(g: Graph) -> Graph | None:
    """The subgraph formed by exactly the triangle-free edges."""
    report = gamma(g)
    if not report.endpoints:
        return None
    index = {v: i for i, v in enumerate(report.endpoints)}
    return Graph.from_edges(
        len(report.endpoints),
        [(index[u], index[v]) for u, v in report.gamma_edges],
    )


# -- vertex-edge-dual ----------------------------------------------------


def vertex_edge_dual(e: PlaneEmbedding) -> Graph:
    """Graph on the faces of length >= 5.

    Two faces are adjacent iff they share exactly one edge, or share no edge
    and exactly one vertex.  (Faces sharing one edge necessarily share its
    two endpoints; the shared edge takes precedence in that reading.)
    """
    big = [f for f in e.faces if f.length >= 5]
    edges = []
    for i in range(len(big)):
        for j in range(i + 1, len(big)):
            shared_edges = len(big[i].edge_set & big[j].edge_set)
            shared_vertices = len(big[i].vertex_set & big[j].vertex_set)
            if shared_edges == 1 or (shared_edges == 0 and shared_vertices == 1):
                edges.append((i, j))
    return Graph.from_edges(len(big), edges)


# -- the C4-free edge identity -------------------------------------------


def edge_identity_residual(e: PlaneEmbedding) -> int:
    """Exact integer residual of the edge/face-count identity.

    For a connected C4-free plane graph, seven times the edge count equals
    15(n-2) - 2*tau - sum over k >= 6 of 3(k-5) f_k; the residual
    7*eps - [ ... ] is zero on every valid input.
    """
    g = e.base
    if not g.is_connected():
        raise errors.NotConnected("identity requires a connected base graph")
    if contains_c4(g):
        raise errors.NotC4Free("identity requires a C4-free base graph")
    tau = gamma(g).tau
    penalty = sum(
        3 * (f.length - 5) for f in e.faces if f.length >= 6
    )
    return 7 * g.edge_count - (15 * (g.n - 2) - 2 * tau - penalty)


def edge_bound_holds(g: Graph) -> bool:
    """The inequality form: 7*eps <= 15(n-2)."""
    return 7 * g.edge_count <= 15 * (g.n - 2)


def c4free_edge_cap(n: int) -> int:
    return 15 * (n - 2) // 7


# -- separating cycles ---------------------------------------------------


def separating_cycle(e: PlaneEmbedding, cycle) -> bool:
    """True iff the cycle has at least one vertex strictly on each side."""
    g = e.base
    cycle = list(cycle)
    length = len(cycle)
    if length < 3 or len(set(cycle)) != length:
        raise errors.NotACycle("vertex sequence is not a cycle")
    for i, v in enumerate(cycle):
        if not g.has_edge(v, cycle[(i + 1) % length]):
            raise errors.NotACycle(f"missing edge {v}-{cycle[(i + 1) % length]}")
    on_cycle = set(cycle)
    side_of: dict[int, int] = {}  # attachment dart -> side
    left_mask = 0
    right_mask = 0
    for i, u in enumerate(cycle):
        prev = cycle[(i - 1) % length]
        nxt = cycle[(i + 1) % length]
        rot = e.rotation[u]
        start = rot.index(nxt)
        stop = rot.index(prev)
        j = (start + 1) % len(rot)
        side = 0  # between nxt and prev: left; after prev: right
        while j != start:
            w = rot[j]
            if j == stop:
                side = 1
            elif w not in on_cycle:
                if side == 0:
                    left_mask |= 1 << w
                else:
                    right_mask |= 1 << w
            j = (j + 1) % len(rot)
    forbidden = 0
    for v in on_cycle:
        forbidden |= 1 << v
    left_vertices = 0
    right_vertices = 0
    remaining = ((1 << g.n) - 1) & ~forbidden
    while remaining:
        start = (remaining & -remaining).bit_length() - 1
        comp = g.component_mask(start, forbidden=forbidden)
        touches_left = bool(comp & left_mask)
        touches_right = bool(comp & right_mask)
        if touches_left and touches_right:
            raise errors.NotACycle("component attaches to both sides; invalid embedding")
        if touches_left:
            left_vertices += comp.bit_count()
        elif touches_right:
            right_vertices += comp.bit_count()
        remaining &= ~comp
    return left_vertices > 0 and right_vertices > 0
