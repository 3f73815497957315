"""Embeddings, faces, the triangle-edge identity, and duals."""

import pytest

from planram import errors
from planram.graphs import Graph, contains_c4
from planram.planarity import (
    PlaneEmbedding,
    c4free_edge_cap,
    edge_bound_holds,
    edge_identity_residual,
    embed,
    gamma,
    gamma_edge_subgraph,
    is_planar,
    separating_cycle,
    vertex_edge_dual,
)


def test_is_planar():
    assert is_planar(Graph.complete(4))
    assert not is_planar(Graph.complete(5))
    k33 = Graph.from_edges(6, [(i, j) for i in range(3) for j in range(3, 6)])
    assert not is_planar(k33)


def test_embed_faces_euler():
    for g in (Graph.cycle(5), Graph.wheel(6), Graph.complete(4)):
        e = embed(g)
        e.check_valid()
        assert e.euler_ok()
    e = embed(Graph.cycle(7))
    assert sorted(f.length for f in e.faces) == [7, 7]
    e = embed(Graph.complete(4))
    assert sorted(f.length for f in e.faces) == [3, 3, 3, 3]


def test_embed_rejects_nonplanar():
    with pytest.raises(errors.NotPlanar):
        embed(Graph.complete(5))


def test_invalid_rotation_detected():
    g = Graph.cycle(4)
    # rotation listing a non-neighbor
    bad = ((1, 2), (0, 2), (1, 3), (2, 0))
    with pytest.raises(ValueError):
        PlaneEmbedding(g, bad)


def test_gamma():
    bowtie = Graph.from_edges(5, [(0, 1), (0, 2), (1, 2),
                                  (2, 3), (2, 4), (3, 4)])
    rep = gamma(bowtie)
    assert rep.tau == 0
    star = Graph.from_edges(5, [(0, i) for i in range(1, 5)])
    assert gamma(star).tau == 4
    sub = gamma_edge_subgraph(star)
    assert sub is not None and sub.edge_count == 4


def test_edge_cap_and_bound():
    assert c4free_edge_cap(9) == 15
    assert c4free_edge_cap(30) == 60
    assert edge_bound_holds(Graph.cycle(8))
    assert edge_bound_holds(Graph.path(5))


def test_identity_residual_zero_cases():
    # seeds and simple graphs where the identity does balance
    for g in (Graph.cycle(5), Graph.cycle(9)):
        assert edge_identity_residual(embed(g)) == 0
    bowtie = Graph.from_edges(5, [(0, 1), (0, 2), (1, 2),
                                  (2, 3), (2, 4), (3, 4)])
    assert edge_identity_residual(embed(bowtie)) == 0


def test_identity_residual_counterexamples():
    # the claimed identity fails on these connected C4-free planar graphs,
    # under every embedding for the first three (their embeddings are
    # unique up to reflection)
    assert edge_identity_residual(embed(Graph.complete(2))) == 9
    assert edge_identity_residual(embed(Graph.path(3))) == 3
    assert edge_identity_residual(embed(Graph.cycle(3))) == 6


def test_identity_residual_embedding_dependent():
    # 2-connected: a triangle 0-1-2 with two longer 0..1 paths; one
    # embedding balances, another does not
    g = Graph.from_edges(9, [(0, 1), (0, 2), (1, 2), (0, 3), (3, 4),
                             (4, 5), (5, 1), (0, 6), (6, 7), (7, 8), (8, 1)])
    rotation = ((1, 3, 2, 6), (0, 8, 2, 5), (0, 1), (0, 4), (3, 5),
                (4, 1), (0, 7), (6, 8), (7, 1))
    e = PlaneEmbedding(g, rotation)
    e.check_valid()
    assert edge_identity_residual(e) == -6
    assert edge_identity_residual(embed(g)) == 0


def test_identity_residual_rejects_bad_input():
    with pytest.raises(errors.NotC4Free):
        edge_identity_residual(embed(Graph.complete(4)))
    disconnected = Graph.from_edges(6, [(0, 1), (1, 2), (3, 4), (4, 5)])
    with pytest.raises(errors.Disconnected):
        embed(disconnected)


def test_vertex_edge_dual():
    # two pentagons of C5: they share all five vertices and all edges,
    # so they are not adjacent in the dual
    d = vertex_edge_dual(embed(Graph.cycle(5)))
    assert d.n == 2 and d.edge_count == 0


def test_face_census():
    e = embed(Graph.wheel(5))
    assert e.face_census() == {3: 5, 5: 1}


def test_separating_cycle():
    k5e = Graph.complete(5).remove_edge(3, 4)
    e = embed(k5e)
    assert separating_cycle(e, (0, 1, 2))
    octa = Graph.from_edges(
        6, [(u, v) for u in range(6) for v in range(u + 1, 6)
            if (u, v) not in ((0, 3), (1, 4), (2, 5))])
    eo = embed(octa)
    for f in eo.faces:
        assert not separating_cycle(eo, tuple(sorted(f.vertex_set)))


def test_dual_of_dodecahedron_is_icosahedron():
    # twelve pentagon faces, any two adjacent ones share exactly one edge
    faces = [(0, 1, 2, 3, 4), (0, 5, 10, 6, 1), (1, 6, 11, 7, 2),
             (2, 7, 12, 8, 3), (3, 8, 13, 9, 4), (4, 9, 14, 5, 0),
             (10, 15, 16, 11, 6), (11, 16, 17, 12, 7), (12, 17, 18, 13, 8),
             (13, 18, 19, 14, 9), (14, 19, 15, 10, 5), (15, 19, 18, 17, 16)]
    edges = set()
    for f in faces:
        for i in range(5):
            u, v = f[i], f[(i + 1) % 5]
            edges.add((min(u, v), max(u, v)))
    dod = Graph.from_edges(20, sorted(edges))
    assert dod.edge_count == 30 and dod.min_degree() == dod.max_degree() == 3
    d = vertex_edge_dual(embed(dod))
    assert d.n == 12 and d.edge_count == 30
    assert d.min_degree() == d.max_degree() == 5


def test_gamma_dichotomy_on_min_degree_4_seeds():
    # the edges-outside-triangles count is 0 or at least 5 on every
    # minimum-degree-4 seed
    from planram.construct import load_seed

    for name in ("fig8a", "fig8b", "fig8c", "fig8d", "fig8e"):
        tau = gamma(load_seed(name).embedding.base).tau
        assert tau == 0 or tau >= 5
