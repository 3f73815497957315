"""Seed graphs and the growth operations on plane embeddings.

Seeds are stored as plain-text rotation systems under data/seeds and are
re-verified against their claimed properties on every load, so a bad
transcription cannot survive silently.

The three operations grow a C4-free plane graph while controlling the
minimum degree:

* Operation A consumes a face of length >= 6, splits two degree-4 vertices
  at boundary distance 3 on it and drops a new degree-4 vertex inside.
  Net +3 vertices, +6 edges, minimum degree stays 4.
* Operation B splits one degree-4 vertex across two incident faces of
  length >= 5 and joins the halves by an edge.  Net +1 vertex; the two
  halves have degree 3.
* Operation C subdivides an edge shared by two faces of length >= 6 into a
  path of three edges and adds two chords.  Net +2 vertices; minimum
  degree stays 3 and the two chord targets gain a degree.

Every application re-checks C4-freeness, embedding validity and the degree
contract, raising PropertyViolation on any miss.
"""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources

from . import errors
from .graphs import Graph, contains_c4, contains_wheel
from .planarity import Face, PlaneEmbedding, edge_identity_residual

SEED_NAMES = (
    "fig8a", "fig8b", "fig8c", "fig8d", "fig8e",
    "fig10", "fig12a", "fig12b", "fig12c",
)

# claimed properties: order, min degree, 4-regular?, guaranteed face length,
# and for the fig12 family the wheel the complement must avoid
_CLAIMS = {
    "fig8a": dict(order=30, min_degree=4, regular=True),
    "fig8b": dict(order=36, min_degree=4, big_face=6),
    "fig8c": dict(order=44, min_degree=4),
    "fig8d": dict(order=46, min_degree=4, big_face=6),
    "fig8e": dict(order=47, min_degree=4, big_face=6),
    "fig10": dict(order=10, min_degree=3),
    "fig12a": dict(order=8, wheel_free=4),
    "fig12b": dict(order=9, wheel_free=5),
    "fig12c": dict(order=8, wheel_free=6),
}


@dataclass(frozen=True)
class SeedGraphRecord:
    name: str
    graph: Graph
    embedding: PlaneEmbedding
    claimed: dict


def _read_rotation(name: str):
    ref = resources.files("planram").joinpath(f"data/seeds/{name}.rot")
    rotation = {}
    for line in ref.read_text().splitlines():
        head, _, tail = line.partition(":")
        rotation[int(head)] = tuple(int(x) for x in tail.split())
    return tuple(rotation[v] for v in range(len(rotation)))


def load_seed(name: str) -> SeedGraphRecord:
    """Load a seed and fail loudly unless every claimed property holds."""
    if name not in SEED_NAMES:
        raise errors.UnknownSeed(f"no seed named {name!r}")
    rotation = _read_rotation(name)
    graph = Graph.from_edges(
        len(rotation),
        [(v, u) for v, nbrs in enumerate(rotation) for u in nbrs if v < u],
        label=name,
    )
    embedding = PlaneEmbedding(graph, rotation)
    claims = _CLAIMS[name]
    try:
        embedding.check_valid()
        if graph.n != claims["order"]:
            raise errors.PropertyCheckFailed(f"order {graph.n}")
        if contains_c4(graph):
            raise errors.PropertyCheckFailed("contains a C4")
        if "min_degree" in claims and graph.min_degree() != claims["min_degree"]:
            raise errors.PropertyCheckFailed(f"min degree {graph.min_degree()}")
        if claims.get("regular") and graph.max_degree() != graph.min_degree():
            raise errors.PropertyCheckFailed("not regular")
        if "big_face" in claims:
            longest = max(f.length for f in embedding.faces)
            if longest < claims["big_face"]:
                raise errors.PropertyCheckFailed(f"largest face {longest}")
        if edge_identity_residual(embedding) != 0:
            raise errors.PropertyCheckFailed("edge identity residual nonzero")
        if "wheel_free" in claims:
            m = claims["wheel_free"]
            if contains_wheel(graph.complement(), m) is not None:
                raise errors.PropertyCheckFailed(f"complement contains W{m}")
    except errors.PropertyCheckFailed as ex:
        raise errors.PropertyCheckFailed(f"seed {name}: {ex}") from None
    return SeedGraphRecord(name, graph, embedding, claims)


# -- shared helpers -------------------------------------------------------


def _face_map(e: PlaneEmbedding):
    """dart -> Face for every directed edge."""
    out = {}
    for face in e.faces:
        for dart in face.boundary:
            out[dart] = face
    return out


def _post_check(e: PlaneEmbedding, min_degree: int, op: str) -> PlaneEmbedding:
    try:
        e.check_valid()
    except errors.NotPlanar as ex:
        raise errors.PropertyViolation(f"{op}: {ex}") from None
    if contains_c4(e.base):
        raise errors.PropertyViolation(f"{op}: created a C4")
    if e.base.min_degree() != min_degree:
        raise errors.PropertyViolation(
            f"{op}: minimum degree {e.base.min_degree()} != {min_degree}"
        )
    return e


def _replace(rotation, vertex, old, new):
    rv = rotation[vertex]
    return tuple(new if x == old else x for x in rv)


# -- Operation A ----------------------------------------------------------


def operation_a(e: PlaneEmbedding, face: Face, u: int, v: int) -> PlaneEmbedding:
    """Split u and v on a >= 6 face and hang a new vertex between the halves.

    u and v must be degree-4 vertices at boundary distance 3 along the
    face.  The result keeps minimum degree 4 and must still have a face of
    length >= 6.
    """
    g = e.base
    if face not in e.faces:
        raise errors.BadFace("face does not belong to this embedding")
    if face.length < 6:
        raise errors.BadFace(f"face length {face.length} < 6")
    if g.degree(u) != 4 or g.degree(v) != 4:
        raise errors.BadVertex("u and v must have degree 4")
    walk = [a for a, _ in face.boundary]
    try:
        i = walk.index(u)
    except ValueError:
        raise errors.BadVertex("u is not on the face") from None
    k = face.length
    if walk[(i + 3) % k] != v:
        # try the other direction by swapping roles
        if walk[(i - 3) % k] == v:
            u, v = v, u
            i = walk.index(u)
        else:
            raise errors.BadDistance("u and v are not at boundary distance 3")
    p1, p2 = walk[(i + 1) % k], walk[(i + 2) % k]
    q = walk[(i - 1) % k]
    r = walk[(i + 4) % k]
    rot = e.rotation
    n = g.n
    u1, u2, v1, v2, w = u, n, v, n + 1, n + 2

    # at u the face corner is (q, u) -> (u, p1): rotation reads (q, p1, x1, x2)
    ru = rot[u]
    iq = ru.index(q)
    x1, x2 = ru[(iq + 2) % 4], ru[(iq + 3) % 4]
    # at v the corner is (p2, v) -> (v, r): rotation reads (p2, r, y1, y2)
    rv = rot[v]
    ip = rv.index(p2)
    y1, y2 = rv[(ip + 2) % 4], rv[(ip + 3) % 4]

    new_rot = list(rot)
    new_rot[u1] = (q, w, u2, x2)
    new_rot[v1] = (w, r, y1, v2)
    new_rot[p1] = _replace(new_rot, p1, u, u2)
    new_rot[x1] = _replace(new_rot, x1, u, u2)
    new_rot[p2] = _replace(new_rot, p2, v, v2)
    new_rot[y2] = _replace(new_rot, y2, v, v2)
    new_rot.append((w, p1, x1, u1))       # u2
    new_rot.append((p2, w, v1, y2))       # v2
    new_rot.append((u2, u1, v1, v2))      # w

    edges = set(g.edges())
    edges -= {tuple(sorted((u, p1))), tuple(sorted((u, x1))),
              tuple(sorted((v, p2))), tuple(sorted((v, y2)))}
    edges |= {(min(u2, a), max(u2, a)) for a in (p1, x1, u1, w)}
    edges |= {(min(v2, a), max(v2, a)) for a in (p2, y2, v1, w)}
    edges |= {(u1, w) if u1 < w else (w, u1), (v1, w) if v1 < w else (w, v1)}
    child = Graph.from_edges(n + 3, sorted(edges))
    result = PlaneEmbedding(child, tuple(new_rot))
    result = _post_check(result, 4, "operation A")
    if max(f.length for f in result.faces) < 6:
        raise errors.PropertyViolation("operation A: no face of length >= 6 left")
    return result


# -- Operation B and its inverse ------------------------------------------


def _corner_face(e: PlaneEmbedding, faces_by_dart, v: int, nbr_index: int):
    """The face at the corner between rotation neighbours nbr_index, nbr_index+1."""
    rv = e.rotation[v]
    return faces_by_dart[(rv[nbr_index], v)]


def operation_b(e: PlaneEmbedding, v: int) -> PlaneEmbedding:
    """Split a degree-4 vertex 2-2 and join the halves by a new edge.

    The two faces the new edge borders must have length >= 5; both ways of
    pairing the four neighbours are tried and the first valid one is used.
    """
    g = e.base
    if not 0 <= v < g.n or g.degree(v) != 4:
        raise errors.BadVertex("operation B needs a degree-4 vertex")
    faces_by_dart = _face_map(e)
    last = None
    for choice in (0, 1):
        f = _corner_face(e, faces_by_dart, v, choice)
        h = _corner_face(e, faces_by_dart, v, choice + 2)
        if f.length < 5 or h.length < 5:
            last = errors.BadVertex(
                f"operation B at {v}: crossed faces have lengths "
                f"{f.length}, {h.length}"
            )
            continue
        try:
            return _operation_b_apply(e, v, choice)
        except errors.PropertyViolation as ex:
            last = ex
    raise last if last is not None else errors.BadVertex(
        f"operation B is not applicable at {v}"
    )


def _operation_b_apply(e: PlaneEmbedding, v: int, choice: int) -> PlaneEmbedding:
    g = e.base
    if not 0 <= v < g.n or g.degree(v) != 4:
        raise errors.BadVertex("operation B needs a degree-4 vertex")
    rv = e.rotation[v]
    # the new edge crosses the corners (n0,n1) and (n2,n3)
    n0, n1, n2, n3 = (rv[(choice + i) % 4] for i in range(4))
    n = g.n
    v1, v2 = v, n
    new_rot = list(e.rotation)
    new_rot[v1] = (n0, v2, n3)
    new_rot[n1] = _replace(new_rot, n1, v, v2)
    new_rot[n2] = _replace(new_rot, n2, v, v2)
    new_rot.append((n1, n2, v1))  # v2
    edges = set(g.edges())
    edges -= {tuple(sorted((v, n1))), tuple(sorted((v, n2)))}
    edges |= {(min(v2, a), max(v2, a)) for a in (n1, n2, v1)}
    child = Graph.from_edges(n + 1, sorted(edges))
    return _post_check(PlaneEmbedding(child, tuple(new_rot)), 3, "operation B")


def operation_b_inverse(e: PlaneEmbedding, edge: tuple[int, int]) -> PlaneEmbedding:
    """Merge two adjacent degree-3 vertices back into one degree-4 vertex."""
    g = e.base
    v1, v2 = edge
    if not g.has_edge(v1, v2):
        raise errors.BadEdge(f"{edge} is not an edge")
    if g.degree(v1) != 3 or g.degree(v2) != 3:
        raise errors.BadEdge("both endpoints must have degree 3")
    if g.adj[v1] & g.adj[v2]:
        raise errors.BadEdge("merge would create a multiedge")
    r1 = e.rotation[v1]
    r2 = e.rotation[v2]
    i1, i2 = r1.index(v2), r2.index(v1)
    # splice v2's other neighbours into v1's rotation in place of v2
    spliced = (
        r1[:i1]
        + tuple(r2[(i2 + 1 + k) % 3] for k in range(2))
        + r1[i1 + 1 :]
    )
    new_rot = list(e.rotation)
    new_rot[v1] = spliced
    for x in r2:
        if x != v1:
            new_rot[x] = _replace(new_rot, x, v2, v1)
    del new_rot[v2]
    # compact labels: shift everything above v2 down by one
    def fix(x):
        return x - 1 if x > v2 else x
    new_rot = tuple(tuple(fix(x) for x in rw) for rw in new_rot)
    edges = set()
    for a, b in g.edges():
        if (a, b) == tuple(sorted((v1, v2))):
            continue
        a = v1 if a == v2 else a
        b = v1 if b == v2 else b
        if a != b:
            edges.add((min(fix(a), fix(b)), max(fix(a), fix(b))))
    child = Graph.from_edges(g.n - 1, sorted(edges))
    merged = PlaneEmbedding(child, new_rot)
    try:
        merged.check_valid()
    except errors.NotPlanar as ex:
        raise errors.PropertyViolation(f"operation B inverse: {ex}") from None
    if contains_c4(merged.base):
        raise errors.PropertyViolation("operation B inverse: created a C4")
    return merged


# -- Operation C ----------------------------------------------------------


def operation_c(e: PlaneEmbedding, edge: tuple[int, int]) -> PlaneEmbedding:
    """Subdivide an edge between two >= 6 faces and add two chords.

    The edge u-v becomes u-a-b-v; a is joined to the vertex three steps
    behind u on the face containing the dart (u, v), and b to the vertex
    two steps past u on the face containing (v, u).  All four resulting
    faces have length >= 5.
    """
    g = e.base
    u, v = edge
    if not g.has_edge(u, v):
        raise errors.BadEdge(f"{edge} is not an edge")
    faces_by_dart = _face_map(e)
    f = faces_by_dart[(u, v)]
    h = faces_by_dart[(v, u)]
    if f.length < 6 or h.length < 6:
        raise errors.BadEdge(
            f"faces at the edge have lengths {f.length}, {h.length}; need >= 6"
        )
    fwalk = [x for x, _ in f.boundary]
    hwalk = [x for x, _ in h.boundary]
    fi = next(i for i, d in enumerate(f.boundary) if d == (u, v))
    hi = next(i for i, d in enumerate(h.boundary) if d == (v, u))
    # on f, walking backwards from u, three steps away from v
    tf = fwalk[(fi - 3) % f.length]
    tf_prev = fwalk[(fi - 4) % f.length]
    # on h, walking forwards past u, two steps
    tg = hwalk[(hi + 3) % h.length]
    tg_prev = hwalk[(hi + 2) % h.length]
    n = g.n
    a, b = n, n + 1
    new_rot = list(e.rotation)
    new_rot[u] = _replace(new_rot, u, v, a)
    new_rot[v] = _replace(new_rot, v, u, b)
    # chord targets: the new neighbour goes right after the walk predecessor
    rtf = new_rot[tf]
    new_rot[tf] = _insert_after(rtf, tf_prev, a)
    rtg = new_rot[tg]
    new_rot[tg] = _insert_after(rtg, tg_prev, b)
    new_rot.append((u, tf, b))  # a
    new_rot.append((v, tg, a))  # b
    edges = set(g.edges()) - {tuple(sorted((u, v)))}
    edges |= {(min(a, x), max(a, x)) for x in (u, b, tf)}
    edges |= {(min(b, x), max(b, x)) for x in (v, tg)}
    child = Graph.from_edges(n + 2, sorted(edges))
    result = PlaneEmbedding(child, tuple(new_rot))
    return _post_check(result, g.min_degree(), "operation C")


def _insert_after(rotation: tuple, anchor: int, new: int) -> tuple:
    i = rotation.index(anchor)
    return rotation[: i + 1] + (new,) + rotation[i + 1 :]


# -- construction traces --------------------------------------------------


@dataclass(frozen=True)
class ConstructionTrace:
    """A seed name plus the exact operation schedule that was applied."""

    seed: str
    ops: tuple[tuple, ...]
    embedding: PlaneEmbedding

    def replay(self) -> PlaneEmbedding:
        e = resolve_seed(self.seed)
        for op in self.ops:
            e = apply_op(e, op)
        return e


def resolve_seed(name: str) -> PlaneEmbedding:
    if name.startswith("cycle"):
        k = int(name[len("cycle"):])
        g = Graph.cycle(k)
        rotation = tuple(
            ((v - 1) % k, (v + 1) % k) for v in range(k)
        )
        e = PlaneEmbedding(g, rotation)
        e.check_valid()
        return e
    return load_seed(name).embedding


def apply_op(e: PlaneEmbedding, op: tuple) -> PlaneEmbedding:
    kind = op[0]
    if kind == "A":
        _, u, v, boundary = op
        face = next(f for f in e.faces if f.boundary == boundary)
        return operation_a(e, face, u, v)
    if kind == "B":
        _, v, choice = op
        return _operation_b_apply(e, v, choice)
    if kind == "BINV":
        _, v1, v2 = op
        return operation_b_inverse(e, (v1, v2))
    if kind == "C":
        _, u, v = op
        return operation_c(e, (u, v))
    raise ValueError(f"unknown operation {kind!r}")


def _valid_b_moves(e: PlaneEmbedding):
    faces_by_dart = _face_map(e)
    for v in range(e.base.n):
        if e.base.degree(v) != 4:
            continue
        for choice in (0, 1):
            f = _corner_face(e, faces_by_dart, v, choice)
            h = _corner_face(e, faces_by_dart, v, choice + 2)
            if f.length >= 5 and h.length >= 5:
                yield ("B", v, choice)


def _valid_c_moves(e: PlaneEmbedding):
    faces_by_dart = _face_map(e)
    for u, v in e.base.edges():
        if faces_by_dart[(u, v)].length >= 6 and faces_by_dart[(v, u)].length >= 6:
            yield ("C", u, v)


def _valid_a_moves(e: PlaneEmbedding):
    for face in e.faces:
        if face.length < 6:
            continue
        walk = [a for a, _ in face.boundary]
        k = face.length
        for i in range(k):
            u, v = walk[i], walk[(i + 3) % k]
            if e.base.degree(u) == 4 and e.base.degree(v) == 4 and u != v:
                yield ("A", u, v, face.boundary)


def _grow_to(e: PlaneEmbedding, target: int, move_gen, node_cap: int = 20000):
    """Depth-first schedule search; returns the op list reaching the order."""
    nodes = 0

    def dfs(e, ops):
        nonlocal nodes
        if e.base.n == target:
            return ops, e
        if e.base.n > target:
            return None
        for op in move_gen(e):
            nodes += 1
            if nodes > node_cap:
                raise errors.InfeasibleScale("schedule search exceeded its cap")
            try:
                nxt = apply_op(e, op)
            except errors.PlanramError:
                continue
            found = dfs(nxt, ops + [op])
            if found is not None:
                return found
        return None

    found = dfs(e, [])
    if found is None:
        raise errors.UnsupportedOrder(f"no schedule found for order {target}")
    return found


def _moves_bc(e):
    yield from _valid_c_moves(e)
    yield from _valid_b_moves(e)


def delta_target(n: int) -> int:
    """The claimed maximum of the minimum degree at each order."""
    if n < 5:
        raise errors.UnsupportedOrder("orders below 5 are out of scope")
    if n <= 9:
        return 2
    if n >= 44 or n in (30, 36, 39, 42):
        return 4
    return 3


def build_delta_witness(n: int) -> ConstructionTrace:
    """A C4-free planar graph of order n with the claimed minimum degree."""
    if n < 5:
        raise errors.UnsupportedOrder(f"no witness for order {n}")
    if n <= 9:
        seed, ops = f"cycle{n}", []
        e = resolve_seed(seed)
    elif n <= 29:
        seed = "fig10"
        ops, e = _grow_to(resolve_seed(seed), n, _moves_bc)
    elif n == 30:
        seed, ops = "fig8a", []
        e = resolve_seed(seed)
    elif n <= 43 and n not in (36, 39, 42):
        seed = "fig8a"
        ops, e = _grow_to(resolve_seed(seed), n, _moves_bc)
    else:
        if n == 44:
            seed = "fig8c"
        elif n % 3 == 0:
            seed = "fig8b"
        elif n % 3 == 1:
            seed = "fig8d"
        else:
            seed = "fig8e"
        ops, e = _grow_to(resolve_seed(seed), n, _valid_a_moves)
    trace = ConstructionTrace(seed, tuple(ops), e)
    want = delta_target(n)
    got = e.base.min_degree()
    if got != want:
        raise errors.PropertyViolation(
            f"witness for {n} has minimum degree {got}, wanted {want}"
        )
    return trace


def pr_target(n_wheel: int) -> int:
    """The claimed planar Ramsey number against the wheel on n_wheel + 1 vertices."""
    if n_wheel < 3:
        raise errors.UnsupportedOrder("wheels start at W3")
    if n_wheel == 3:
        return 10
    if n_wheel in (4, 5):
        return n_wheel + 5
    if n_wheel == 6:
        return 9
    if n_wheel >= 40 or n_wheel in (26, 32, 35, 38):
        return n_wheel + 5
    return n_wheel + 4


def build_ramsey_lower_witness(n_wheel: int) -> Graph:
    """A C4-free planar graph on pr_target - 1 vertices whose complement
    avoids the wheel; re-verified by exact search before returning."""
    if n_wheel < 3:
        raise errors.UnsupportedOrder("wheels start at W3")
    order = pr_target(n_wheel) - 1
    if n_wheel == 3:
        g = _k4_free_complement_witness(order)
    elif n_wheel in (4, 5, 6):
        g = load_seed({4: "fig12a", 5: "fig12b", 6: "fig12c"}[n_wheel]).graph
    else:
        g = build_delta_witness(order).embedding.base
        # degree argument: complement degrees top out below the rim length
        if g.n - 1 - g.min_degree() >= n_wheel:
            raise errors.PropertyViolation(
                "witness degrees leave room for a hub; wrong schedule"
            )
    if contains_wheel(g.complement(), n_wheel) is not None:
        raise errors.PropertyViolation(
            f"complement of the order-{g.n} witness contains W{n_wheel}"
        )
    return g


def _k4_free_complement_witness(order: int) -> Graph:
    from .enumeration import EnumerationTask, enumerate_c4free_planar

    task = EnumerationTask(n=order, mode="c4free_planar", maximal_only=True)
    for g in enumerate_c4free_planar(task).graphs:
        if contains_wheel(g.complement(), 3) is None:
            return g
    raise errors.PropertyViolation(f"no order-{order} witness exists")
