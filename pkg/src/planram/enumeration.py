"""Isomorph-free exhaustive generation.

Two generators, both canonical-construction-path searches:

* C4-free planar graphs of a given order, by edge augmentation from the
  empty graph.  A child with edge e survives iff e lies in the canonical
  deletion orbit of the child, and per-parent duplicate children are
  removed by canonical form, which together give exactly-once emission.

* Simple planar triangulations, by vertex splitting from K4 with rotation
  systems maintained throughout.  The reverse operation is contraction of
  an edge whose endpoints have exactly two common neighbours; every simple
  triangulation on five or more vertices has such an edge, so the search
  tree is rooted at K4.

Work is split deterministically: the breadth-first frontier at a fixed
depth is partitioned by index modulo the worker count, so the union of the
workers' outputs equals the single-worker output exactly.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import errors
from .canon import canonical_form, marked_pair_form
from .graphs import Graph, adding_edge_creates_c4, bits, contains_c4
from .planarity import PlaneEmbedding, c4free_edge_cap, is_planar

DEFAULT_BUDGET = 50_000_000

# frontier depths at which the worker partition is applied
_SPLIT_EDGES = 5
_SPLIT_ORDER = 9


@dataclass(frozen=True)
class EnumerationTask:
    n: int
    mode: str  # c4free_planar | triangulation
    min_degree: int = 0
    maximal_only: bool = False
    connected_only: bool = False
    split: tuple[int, int] = (0, 1)

    def __post_init__(self):
        if self.mode not in ("c4free_planar", "triangulation"):
            raise ValueError(f"unknown mode {self.mode!r}")
        if not 0 <= self.min_degree <= 5:
            raise ValueError("min_degree must be in 0..5")
        if self.maximal_only and self.mode != "c4free_planar":
            raise ValueError("maximal_only applies to c4free_planar only")
        index, count = self.split
        if count < 1 or not 0 <= index < count:
            raise ValueError(f"bad split {self.split}")


@dataclass(frozen=True)
class EnumerationResult:
    count: int
    graphs: tuple[Graph, ...]
    embeddings: tuple[tuple[tuple[int, ...], ...], ...] | None
    exhaustive: bool
    nodes_visited: int


class _Budget:
    def __init__(self, limit):
        self.limit = limit if limit is not None else DEFAULT_BUDGET
        self.nodes = 0

    def tick(self, amount=1):
        self.nodes += amount
        if self.nodes > self.limit:
            raise errors.InfeasibleScale(
                f"search exceeded budget of {self.limit} nodes"
            )


def _take_split(frontier, split):
    index, count = split
    if count == 1:
        return frontier
    return [g for i, g in enumerate(frontier) if i % count == index]


# -- C4-free planar graphs ------------------------------------------------


def _edge_invariant(g: Graph, u: int, v: int):
    du, dv = g.degree(u), g.degree(v)
    return (min(du, dv), max(du, dv), (g.adj[u] & g.adj[v]).bit_count())


def _canonical_edge_forms(g: Graph):
    """Marked-pair forms of the edges achieving the minimal edge invariant."""
    best_inv = None
    candidates = []
    for u, v in g.edges():
        inv = _edge_invariant(g, u, v)
        if best_inv is None or inv < best_inv:
            best_inv = inv
            candidates = [(u, v)]
        elif inv == best_inv:
            candidates.append((u, v))
    best_form = min(marked_pair_form(g, u, v) for u, v in candidates)
    return best_inv, best_form


def _edge_is_canonical(g: Graph, u: int, v: int) -> bool:
    inv = _edge_invariant(g, u, v)
    best_inv, best_form = _canonical_edge_forms(g)
    if inv != best_inv:
        return False
    return marked_pair_form(g, u, v) == best_form


def enumerate_c4free_planar(
    task: EnumerationTask, budget_nodes: int | None = None
) -> EnumerationResult:
    """One representative per isomorphism class under the task constraints."""
    if task.mode != "c4free_planar":
        raise ValueError("task mode must be c4free_planar")
    n = task.n
    if not 1 <= n <= 64:
        raise ValueError("order must be in 1..64")
    budget = _Budget(budget_nodes)
    cap = c4free_edge_cap(n) if n >= 4 else n * (n - 1) // 2
    out: list[Graph] = []
    frontier = [Graph.empty(n)]
    depth = 0
    split_depth = min(_SPLIT_EDGES, max(cap - 1, 0))
    t = task.min_degree

    def hopeless(g, edges_used):
        # an edge repairs at most 2 units of min-degree deficiency
        if not t:
            return False
        deficit = sum(t - d for d in g.degrees() if d < t)
        return deficit > 2 * (cap - edges_used)

    if hopeless(frontier[0], 0):
        frontier = []
    while frontier:
        if depth == split_depth:
            frontier = _take_split(frontier, task.split)
        if depth >= split_depth or task.split[0] == 0:
            # graphs below the split depth belong to worker 0 alone, so a
            # union over workers partitions the classes exactly
            for g in frontier:
                _maybe_emit(g, task, out)
        if depth == cap:
            break
        nxt = []
        for g in frontier:
            seen = set()
            for u in range(n):
                for v in range(u + 1, n):
                    if g.has_edge(u, v):
                        continue
                    budget.tick()
                    if adding_edge_creates_c4(g, u, v):
                        continue
                    child = g.add_edge(u, v)
                    if hopeless(child, depth + 1):
                        continue
                    if not is_planar(child):
                        continue
                    if not _edge_is_canonical(child, u, v):
                        continue
                    form = canonical_form(child).form
                    if form in seen:
                        continue
                    seen.add(form)
                    nxt.append(child)
        frontier = nxt
        depth += 1
    out.sort(key=lambda g: canonical_form(g).form)
    return EnumerationResult(len(out), tuple(out), None, True, budget.nodes)


def _maybe_emit(g: Graph, task: EnumerationTask, out: list[Graph]) -> None:
    if g.n and g.min_degree() < task.min_degree:
        return
    if task.connected_only and not g.is_connected():
        return
    if task.maximal_only and not is_maximal_c4free_planar(g):
        return
    out.append(g)


def is_maximal_c4free_planar(g: Graph) -> bool:
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if g.has_edge(u, v) or adding_edge_creates_c4(g, u, v):
                continue
            if is_planar(g.add_edge(u, v)):
                return False
    return True


def max_edges_c4free_planar(n: int, budget_nodes: int | None = None) -> int:
    """M(n): the exact maximum edge count, from the full enumeration."""
    task = EnumerationTask(n=n, mode="c4free_planar")
    result = enumerate_c4free_planar(task, budget_nodes=budget_nodes)
    best = max(g.edge_count for g in result.graphs)
    if n >= 4 and best > c4free_edge_cap(n):
        raise AssertionError("edge bound violated; enumeration or bound is wrong")
    return best


# -- planar triangulations ------------------------------------------------
#
# State: (Graph, rotation system).  Splitting a vertex w whose rotation is
# [m0..m_{d-1}] at positions i < j keeps w with the neighbour arc
# m_i..m_j plus the new vertex, and gives the new vertex the complementary
# arc m_j..m_i plus w.  The arc endpoints m_i and m_j become common
# neighbours of the pair, so the inverse is contraction of an edge whose
# endpoints share exactly two neighbours.


def _k4_embedding():
    g = Graph.complete(4)
    rotation = ((1, 2, 3), (0, 3, 2), (0, 1, 3), (0, 2, 1))
    e = PlaneEmbedding(g, rotation)
    e.check_valid()
    return g, rotation


def _split_vertex(g: Graph, rotation, w: int, i: int, j: int):
    """Split w between rotation positions i and j; returns (graph, rotation).

    The new vertex takes label n.  Rotation updates keep the embedding a
    triangulation; validity is asserted by the census tests, not here.
    """
    n = g.n
    rot_w = rotation[w]
    d = len(rot_w)
    a, b = rot_w[i], rot_w[j]
    keep = tuple(rot_w[i : j + 1])          # stays with w
    move = tuple(rot_w[j:] + rot_w[: i + 1])  # goes to the new vertex
    new_rot_w = keep + (n,)
    new_rot_new = move + (w,)
    rows = list(g.adj)
    rows.append(0)
    for m in move[1:-1]:
        rows[w] &= ~(1 << m)
        rows[m] &= ~(1 << w)
    for m in move:
        rows[n] |= 1 << m
        rows[m] |= 1 << n
    rows[w] |= 1 << n
    rows[n] |= 1 << w
    new_rotation = []
    for v in range(n):
        if v == w:
            new_rotation.append(new_rot_w)
        elif v == a:
            # a keeps both halves; the new vertex slots in after w
            rv = rotation[v]
            k = rv.index(w)
            new_rotation.append(rv[: k + 1] + (n,) + rv[k + 1 :])
        elif v == b:
            # b gets the new vertex before w
            rv = rotation[v]
            k = rv.index(w)
            new_rotation.append(rv[:k] + (n,) + rv[k:])
        elif v in move:
            rv = rotation[v]
            new_rotation.append(tuple(n if x == w else x for x in rv))
        else:
            new_rotation.append(rotation[v])
    new_rotation.append(new_rot_new)
    return Graph(n + 1, tuple(rows)), tuple(new_rotation)


def _contractible_edges(g: Graph):
    """Edges whose contraction keeps the triangulation simple."""
    return [
        (u, v)
        for u, v in g.edges()
        if (g.adj[u] & g.adj[v]).bit_count() == 2
    ]


def _contraction_invariant(g: Graph, u: int, v: int):
    du, dv = g.degree(u), g.degree(v)
    common = g.adj[u] & g.adj[v]
    cdeg = sorted(g.degree(c) for c in bits(common))
    return (min(du, dv), max(du, dv), cdeg)


def _created_edge_is_canonical(g: Graph, u: int, v: int) -> bool:
    inv = _contraction_invariant(g, u, v)
    best_inv = None
    candidates = []
    for x, y in _contractible_edges(g):
        e_inv = _contraction_invariant(g, x, y)
        if best_inv is None or e_inv < best_inv:
            best_inv = e_inv
            candidates = [(x, y)]
        elif e_inv == best_inv:
            candidates.append((x, y))
    if inv != best_inv:
        return False
    best_form = min(marked_pair_form(g, x, y) for x, y in candidates)
    return marked_pair_form(g, u, v) == best_form


def _deficiency(degs) -> int:
    return sum(5 - d for d in degs if d < 5)


def enumerate_triangulations(
    task: EnumerationTask, budget_nodes: int | None = None
) -> EnumerationResult:
    """One representative per isomorphism class of simple triangulations.

    With min_degree = 5 the search is pruned by degree deficiency: a split
    lowers sum(max(0, 5 - deg)) by at most 2, so states needing more repair
    than the remaining splits allow are cut.  Smaller min_degree values are
    applied as an output filter only.
    """
    if task.mode != "triangulation":
        raise ValueError("task mode must be triangulation")
    n_target = task.n
    if not 4 <= n_target <= 18:
        raise errors.InfeasibleScale("triangulation orders supported: 4..18")
    budget = _Budget(budget_nodes)
    prune5 = task.min_degree == 5
    out: list[tuple[Graph, tuple]] = []
    frontier = [_k4_embedding()]
    order = 4
    split_depth = min(_SPLIT_ORDER, n_target)
    while frontier:
        if order == split_depth:
            frontier = _take_split(frontier, task.split)
        if order == n_target:
            for g, rot in frontier:
                if g.min_degree() >= task.min_degree:
                    out.append((g, rot))
            break
        nxt = []
        for g, rot in frontier:
            seen = set()
            for child in _children(g, rot, n_target, prune5, budget):
                form = canonical_form(child[0]).form
                if form in seen:
                    continue
                seen.add(form)
                nxt.append(child)
        frontier = nxt
        order += 1
    out.sort(key=lambda pair: canonical_form(pair[0]).form)
    graphs = tuple(g for g, _ in out)
    rotations = tuple(rot for _, rot in out)
    return EnumerationResult(len(out), graphs, rotations, True, budget.nodes)


def _children(g, rot, n_target, prune5, budget):
    n = g.n
    remaining = n_target - (n + 1)
    for w in range(n):
        rot_w = rot[w]
        d = len(rot_w)
        for i in range(d):
            for j in range(i + 1, d):
                arc = j - i  # halves get degrees arc+2 and d-arc+2, both >= 3
                budget.tick()
                if prune5:
                    # degree changes under this split, before building it
                    d1, d2 = arc + 2, d - arc + 2
                    degs = [d1, d2, g.degree(rot_w[i]) + 1,
                            g.degree(rot_w[j]) + 1]
                    old = [d, g.degree(rot_w[i]), g.degree(rot_w[j])]
                    delta = _deficiency(degs) - _deficiency(old)
                    base = _deficiency(g.degrees())
                    if base + delta > 2 * remaining:
                        continue
                child, child_rot = _split_vertex(g, rot, w, i, j)
                if not _created_edge_is_canonical(child, w, n):
                    continue
                yield child, child_rot


def triangulation_check(g: Graph, rotation) -> None:
    """Raise unless the rotation system is a simple triangulation embedding."""
    e = PlaneEmbedding(g, rotation)
    e.check_valid()
    if g.edge_count != 3 * g.n - 6:
        raise errors.NotPlanar("edge count is not 3n-6")
    if any(f.length != 3 for f in e.faces):
        raise errors.NotPlanar("non-triangular face")
