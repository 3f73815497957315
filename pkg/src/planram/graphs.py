"""Compact simple-graph representation on at most 64 vertices.

Vertices are integers ``0..n-1`` and adjacency is stored as one bitmask per
vertex, so neighbourhood intersections, degree counts and subgraph masks are
single integer operations.  All operations are pure: graphs are immutable and
every mutation-like helper returns a new :class:`Graph`.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

MAX_VERTICES = 64


def bits(mask: int):
    """Iterate set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]
    label: str | None = None

    def __post_init__(self):
        if not 0 <= self.n <= MAX_VERTICES:
            raise ValueError(f"vertex count {self.n} outside 0..{MAX_VERTICES}")
        if len(self.adj) != self.n:
            raise ValueError("adjacency row count does not match n")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"row {v} references vertices >= n")
            if row >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
        for v, row in enumerate(self.adj):
            for u in bits(row):
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {u} and {v}")

    # -- construction ----------------------------------------------------

    @staticmethod
    def empty(n: int, label: str | None = None) -> "Graph":
        return Graph(n, (0,) * n, label)

    @staticmethod
    def from_edges(n: int, edges, label: str | None = None) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError("self-loop")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return Graph(n, tuple(rows), label)

    @staticmethod
    def cycle(n: int, label: str | None = None) -> "Graph":
        return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)], label)

    @staticmethod
    def path(n: int) -> "Graph":
        return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])

    @staticmethod
    def complete(n: int) -> "Graph":
        full = (1 << n) - 1
        return Graph(n, tuple(full ^ (1 << v) for v in range(n)))

    @staticmethod
    def wheel(m: int) -> "Graph":
        """Hub vertex ``m`` joined to every vertex of an m-cycle ``0..m-1``."""
        edges = [(i, (i + 1) % m) for i in range(m)] + [(i, m) for i in range(m)]
        return Graph.from_edges(m + 1, edges)

    # -- basic accessors -------------------------------------------------

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int):
        return bits(self.adj[v])

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    @property
    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def edges(self):
        for u in range(self.n):
            for v in bits(self.adj[u] >> (u + 1) << (u + 1)):
                yield (u, v)

    def min_degree(self) -> int:
        return min(self.degrees())

    def max_degree(self) -> int:
        return max(self.degrees())

    def degree_sequence(self) -> "DegreeSequence":
        return DegreeSequence.of(self)

    # -- derived graphs --------------------------------------------------

    def add_edge(self, u: int, v: int) -> "Graph":
        rows = list(self.adj)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        return Graph(self.n, tuple(rows), self.label)

    def remove_edge(self, u: int, v: int) -> "Graph":
        rows = list(self.adj)
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
        return Graph(self.n, tuple(rows), self.label)

    def complement(self) -> "Graph":
        full = (1 << self.n) - 1
        return Graph(
            self.n,
            tuple(full ^ row ^ (1 << v) for v, row in enumerate(self.adj)),
        )

    def relabel(self, perm) -> "Graph":
        """Apply ``perm`` (old label -> new label) to the vertex set."""
        rows = [0] * self.n
        for v, row in enumerate(self.adj):
            new = 0
            for u in bits(row):
                new |= 1 << perm[u]
            rows[perm[v]] = new
        return Graph(self.n, tuple(rows), self.label)

    def induced(self, vertices) -> "Graph":
        """Subgraph induced by ``vertices`` (relabelled to 0..k-1, order kept)."""
        vs = sorted(vertices)
        index = {v: i for i, v in enumerate(vs)}
        rows = [0] * len(vs)
        for v in vs:
            for u in bits(self.adj[v]):
                if u in index:
                    rows[index[v]] |= 1 << index[u]
        return Graph(len(vs), tuple(rows))

    # -- connectivity ----------------------------------------------------

    def component_mask(self, start: int, forbidden: int = 0) -> int:
        """Bitmask of the component of ``start`` avoiding ``forbidden`` vertices."""
        seen = 1 << start
        frontier = seen
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= self.adj[v]
            nxt &= ~seen & ~forbidden
            seen |= nxt
            frontier = nxt
        return seen

    def is_connected(self) -> bool:
        return self.component_mask(0).bit_count() == self.n


@dataclass(frozen=True)
class DegreeSequence:
    """Multiset of (degree, multiplicity) pairs, degrees ascending."""

    pairs: tuple[tuple[int, int], ...]

    @staticmethod
    def of(g: Graph) -> "DegreeSequence":
        counts: dict[int, int] = {}
        for d in g.degrees():
            counts[d] = counts.get(d, 0) + 1
        return DegreeSequence(tuple(sorted(counts.items())))

    def __str__(self) -> str:
        return " ".join(f"{d}^{m}" for d, m in self.pairs)

    @property
    def order(self) -> int:
        return sum(m for _, m in self.pairs)

    @property
    def edge_count(self) -> int:
        return sum(d * m for d, m in self.pairs) // 2


# -- subgraph detection ---------------------------------------------------


def contains_c4(g: Graph) -> bool:
    """True iff some four vertices carry a 4-cycle (not necessarily induced).

    Equivalent to: some vertex pair has at least two common neighbours.
    """
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if (g.adj[u] & g.adj[v]).bit_count() >= 2:
                return True
    return False


def adding_edge_creates_c4(g: Graph, u: int, v: int) -> bool:
    """For a C4-free ``g``, would adding edge ``uv`` close a 4-cycle?

    A new 4-cycle must pass through ``uv``, i.e. there is a path u-y-x-v of
    length 3 already present.
    """
    skip = (1 << u) | (1 << v)
    av = g.adj[v] & ~skip
    for y in bits(g.adj[u] & ~skip):
        if g.adj[y] & av & ~(1 << y):
            return True
    return False


def cycle_of_length(g: Graph, k: int):
    """Search for a k-cycle; returns a witness vertex list or None.

    Depth-first path extension anchored at the smallest cycle vertex, with
    bit-masked reachability pruning.  Vertices are tried in ascending id order
    so the witness is reproducible.
    """
    if not 3 <= k <= g.n:
        raise ValueError(f"cycle length {k} outside 3..{g.n}")
    for s in range(g.n - k + 1):
        allowed = ((1 << g.n) - 1) >> s << s  # only vertices >= s
        if (g.adj[s] & allowed).bit_count() < 2:
            continue
        witness = _find_cycle(g, k, s, allowed)
        if witness is not None:
            return witness

    return None


def _find_cycle(g: Graph, k: int, s: int, allowed: int):
    def extend(v: int, used: int, path: list[int], remaining: int):
        if remaining == 0:
            return list(path) if g.adj[v] >> s & 1 else None
        # keep the anchor s reachable: the path must close back to it
        blocked = (used & ~(1 << v) & ~(1 << s)) | (~allowed & ((1 << g.n) - 1))
        region = g.component_mask(v, forbidden=blocked)
        if not region >> s & 1 or region.bit_count() < remaining + 1:
            return None
        for w in bits(g.adj[v] & allowed & ~used):
            path.append(w)
            found = extend(w, used | (1 << w), path, remaining - 1)
            if found is not None:
                return found
            path.pop()
        return None

    return extend(s, 1 << s, [s], k - 1)


@dataclass(frozen=True)
class WheelWitness:
    hub: int
    rim: tuple[int, ...]

    def validates_in(self, g: Graph) -> bool:
        m = len(self.rim)
        if len(set(self.rim)) != m or self.hub in self.rim:
            return False
        for i, v in enumerate(self.rim):
            if not g.has_edge(self.hub, v):
                return False
            if not g.has_edge(v, self.rim[(i + 1) % m]):
                return False
        return True


class ShortcutStats:
    """Mutable tally of Hamiltonicity shortcut firings during wheel search."""

    def __init__(self):
        self.dirac = 0
        self.chvatal_erdos = 0

    def as_dict(self) -> dict[str, int]:
        return {"dirac": self.dirac, "chvatal_erdos": self.chvatal_erdos}


def contains_wheel(g: Graph, m: int, stats: ShortcutStats | None = None):
    """Search for a wheel with an m-cycle rim; returns a witness or None.

    For each hub candidate (descending degree, then ascending id) we look for
    an m-cycle inside the subgraph induced by its neighbourhood.  When the
    neighbourhood has exactly m vertices, two sufficient Hamiltonicity
    conditions are tried first: minimum degree >= half the order, and
    independence number <= connectivity.  Both only ever conclude "a rim
    exists"; the rim itself is still extracted by exact search so every
    positive answer carries a verifiable witness.
    """
    if m < 3:
        raise ValueError("rim length must be >= 3")
    if m + 1 > g.n:
        raise ValueError(f"wheel on {m + 1} vertices cannot fit in {g.n}")
    hubs = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
    for hub in hubs:
        if g.degree(hub) < m:
            continue
        nbrs = sorted(bits(g.adj[hub]))
        sub = g.induced(nbrs)
        if stats is not None and sub.n == m:
            if 2 * sub.min_degree() >= sub.n:
                stats.dirac += 1
            elif independence_number(sub) <= connectivity(sub):
                stats.chvatal_erdos += 1
        rim = cycle_of_length(sub, m)
        if rim is not None:
            return WheelWitness(hub, tuple(nbrs[i] for i in rim))
    return None


# -- independence and connectivity ----------------------------------------


def independence_number(g: Graph) -> int:
    """Exact maximum independent set size by branch and bound."""
    best = 0

    def grow(candidates: int, size: int):
        nonlocal best
        if size + candidates.bit_count() <= best:
            return
        if not candidates:
            best = max(best, size)
            return
        # branch on a highest-degree candidate: exclude it or include it
        v = max(bits(candidates), key=lambda u: (g.adj[u] & candidates).bit_count())
        grow(candidates & ~(1 << v), size)
        grow(candidates & ~(1 << v) & ~g.adj[v], size + 1)

    grow((1 << g.n) - 1, 0)
    return best


def connectivity(g: Graph) -> int:
    """Vertex connectivity; complete graphs have connectivity n - 1."""
    if g.n == 1:
        return 0
    if g.edge_count == g.n * (g.n - 1) // 2:
        return g.n - 1
    if not g.is_connected():
        return 0
    best = g.n - 1
    for s in range(g.n):
        for t in range(s + 1, g.n):
            if not g.has_edge(s, t):
                best = min(best, _local_connectivity(g, s, t, best))
    return best


def _local_connectivity(g: Graph, s: int, t: int, cap: int) -> int:
    """Number of internally vertex-disjoint s-t paths (unit-capacity flow)."""
    # split every vertex v into v_in (2v) and v_out (2v+1)
    size = 2 * g.n
    capacity = [[0] * size for _ in range(size)]
    for v in range(g.n):
        capacity[2 * v][2 * v + 1] = 1 if v not in (s, t) else g.n
        for u in bits(g.adj[v]):
            capacity[2 * v + 1][2 * u] = g.n
    flow = 0
    limit = min(g.degree(s), g.degree(t), cap)
    while flow < limit:
        # BFS augmenting path from s_out to t_in
        parent = [-1] * size
        parent[2 * s + 1] = 2 * s + 1
        queue = [2 * s + 1]
        while queue and parent[2 * t] == -1:
            x = queue.pop(0)
            for y in range(size):
                if parent[y] == -1 and capacity[x][y] > 0:
                    parent[y] = x
                    queue.append(y)
        if parent[2 * t] == -1:
            break
        y = 2 * t
        while parent[y] != y:
            x = parent[y]
            capacity[x][y] -= 1
            capacity[y][x] += 1
            y = x
        flow += 1
    return flow


def brute_force_isomorphic(a: Graph, b: Graph) -> bool:
    """Permutation search isomorphism test; oracle use only (small n)."""
    from itertools import permutations

    if a.n != b.n or a.edge_count != b.edge_count:
        return False
    if sorted(a.degrees()) != sorted(b.degrees()):
        return False
    for perm in permutations(range(a.n)):
        if all(
            a.has_edge(u, v) == b.has_edge(perm[u], perm[v])
            for u, v in combinations(range(a.n), 2)
        ):
            return True
    return False
