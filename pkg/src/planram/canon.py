"""Canonical forms by iterative degree refinement plus backtracking.

The canonical form of a graph is the lexicographically smallest serialization
(vertex count byte, then row-major upper-triangle bits) over all relabelings
compatible with an equitable ordered partition.  Two graphs are isomorphic iff
their forms are equal; the certifying permutation is returned alongside.

An optional vertex colouring constrains the search to colour-preserving
relabelings, which doubles as an edge-marking device: colouring the two
endpoints of an edge makes forms comparable per edge orbit.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Graph, bits


@dataclass(frozen=True)
class CanonicalForm:
    form: bytes
    permutation: tuple[int, ...]  # old label -> canonical label


def serialize(g: Graph) -> bytes:
    """Vertex count byte followed by packed row-major upper-triangle bits."""
    out = bytearray([g.n])
    acc = 0
    nbits = 0
    for u in range(g.n):
        for v in range(u + 1, g.n):
            acc = acc << 1 | (g.adj[u] >> v & 1)
            nbits += 1
            if nbits == 8:
                out.append(acc)
                acc = nbits = 0
    if nbits:
        out.append(acc << (8 - nbits))
    return bytes(out)


def _refine(adj, cells):
    """Equitable refinement of an ordered partition (cells are bitmasks)."""
    cells = list(cells)
    work = list(cells)
    while work:
        splitter = work.pop()
        i = 0
        while i < len(cells):
            cell = cells[i]
            if cell.bit_count() > 1:
                groups: dict[int, int] = {}
                for v in bits(cell):
                    key = (adj[v] & splitter).bit_count()
                    groups[key] = groups.get(key, 0) | 1 << v
                if len(groups) > 1:
                    new = [groups[k] for k in sorted(groups)]
                    cells[i : i + 1] = new
                    work.extend(new)
                    i += len(new) - 1
            i += 1
    return cells


def _leaf_key(g: Graph, cells):
    perm = [0] * g.n
    order = [0] * g.n  # canonical position -> old vertex
    for pos, cell in enumerate(cells):
        v = cell.bit_length() - 1
        perm[v] = pos
        order[pos] = v
    # relabelled upper-triangle bits, packed
    out = bytearray([g.n])
    acc = 0
    nbits = 0
    for i in range(g.n):
        row = g.adj[order[i]]
        for j in range(i + 1, g.n):
            acc = acc << 1 | (row >> order[j] & 1)
            nbits += 1
            if nbits == 8:
                out.append(acc)
                acc = nbits = 0
    if nbits:
        out.append(acc << (8 - nbits))
    return bytes(out), tuple(perm)


def canonical_form(g: Graph, colors=None) -> CanonicalForm:
    """Smallest serialization over relabelings refining the initial colouring.

    ``colors`` maps vertices to small integers; vertices of distinct colours
    are never interchanged.  Unlisted vertices default to colour 0.
    """
    if colors:
        groups: dict[int, int] = {}
        for v in range(g.n):
            c = colors.get(v, 0)
            groups[c] = groups.get(c, 0) | 1 << v
        initial = [groups[c] for c in sorted(groups)]
    else:
        initial = [(1 << g.n) - 1]
    adj = g.adj
    cells = _refine(adj, initial)
    best: list = [None, None]

    def descend(cells):
        for idx, cell in enumerate(cells):
            if cell.bit_count() > 1:
                tried: list[int] = []
                for v in bits(cell):
                    if any(_twins(adj, u, v) for u in tried):
                        continue
                    tried.append(v)
                    split = cells[:idx] + [1 << v, cell & ~(1 << v)] + cells[idx + 1 :]
                    descend(_refine(adj, split))
                return
        key, perm = _leaf_key(g, cells)
        if best[0] is None or key < best[0]:
            best[0], best[1] = key, perm

    descend(cells)
    return CanonicalForm(best[0], best[1])


def _twins(adj, u, v):
    mask = ~((1 << u) | (1 << v))
    return adj[u] & mask == adj[v] & mask


def marked_pair_form(g: Graph, u: int, v: int) -> bytes:
    """Canonical form with the vertex pair {u, v} distinguished.

    Equal marked forms certify an automorphism carrying one pair to the
    other, so edges can be compared per orbit.
    """
    return canonical_form(g, colors={u: 1, v: 1}).form


def are_isomorphic(a: Graph, b: Graph) -> bool:
    if a.n != b.n or a.edge_count != b.edge_count:
        return False
    return canonical_form(a).form == canonical_form(b).form
