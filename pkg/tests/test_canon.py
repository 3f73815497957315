"""Canonical forms: label invariance and isomorphism decisions."""

import random

from planram.canon import are_isomorphic, canonical_form, marked_pair_form
from planram.graphs import Graph, brute_force_isomorphic


def random_graph(n, p, rng):
    edges = [(u, v) for u in range(n) for v in range(u + 1, n)
             if rng.random() < p]
    return Graph.from_edges(n, edges)


def shuffle(g, rng):
    perm = list(range(g.n))
    rng.shuffle(perm)
    return g.relabel(perm)


def test_canonical_form_label_invariant():
    rng = random.Random(10)
    for _ in range(60):
        g = random_graph(rng.randint(1, 9), rng.random(), rng)
        assert canonical_form(g).form == canonical_form(shuffle(g, rng)).form


def test_are_isomorphic_agrees_with_brute_force():
    rng = random.Random(11)
    for _ in range(120):
        a = random_graph(6, 0.4, rng)
        b = random_graph(6, 0.4, rng)
        assert are_isomorphic(a, b) == brute_force_isomorphic(a, b)


def test_distinguishes_regular_cospectral_pair():
    # two 3-regular graphs on 8 vertices that plain degree counting cannot
    # tell apart: the cube and K3,3 plus a perfect matching arrangement
    cube = Graph.from_edges(8, [(0, 1), (1, 2), (2, 3), (3, 0),
                                (4, 5), (5, 6), (6, 7), (7, 4),
                                (0, 4), (1, 5), (2, 6), (3, 7)])
    k4_pair = Graph.from_edges(8, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3),
                                   (2, 3), (4, 5), (4, 6), (4, 7), (5, 6),
                                   (5, 7), (6, 7)])
    assert not are_isomorphic(cube, k4_pair)
    assert are_isomorphic(cube, shuffle(cube, random.Random(0)))


def test_marked_pair_form_orbit_invariance():
    # in C6 every edge is equivalent, so all marked forms agree
    g = Graph.cycle(6)
    forms = {marked_pair_form(g, u, v) for u, v in g.edges()}
    assert len(forms) == 1
    # in a path the end edge and middle edge are inequivalent
    p = Graph.path(4)
    assert marked_pair_form(p, 0, 1) != marked_pair_form(p, 1, 2)


def test_colors_split_orbits():
    g = Graph.cycle(6)
    colors = {0: 0, 1: 1, 2: 0, 3: 1, 4: 0, 5: 1}
    colored = canonical_form(g, colors=colors).form
    # colouring is label invariant when permuted along with the graph
    shifted = {1: 0, 2: 1, 3: 0, 4: 1, 5: 0, 0: 1}
    assert canonical_form(g.relabel([1, 2, 3, 4, 5, 0]),
                          colors=shifted).form == colored


def test_permutation_certifies_form():
    from planram.canon import serialize

    rng = random.Random(12)
    for _ in range(40):
        g = random_graph(7, 0.5, rng)
        cf = canonical_form(g)
        assert serialize(g.relabel(cf.permutation)) == cf.form
