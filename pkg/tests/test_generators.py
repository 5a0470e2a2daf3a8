import itertools
import math
from collections import Counter

import numpy as np
import pytest

from lapspec import generators as gen
from lapspec.generators import StarlikeSpec
from lapspec.graph import GraphError, build_graph, is_connected, is_tree


def test_path():
    assert gen.path(1).n == 1 and gen.path(1).m == 0
    assert gen.path(4).degrees == (1, 2, 2, 1)
    assert gen.path(2).edges == ((0, 1),)
    with pytest.raises(GraphError):
        gen.path(0)


def test_star():
    k13 = gen.star(3)
    assert k13.n == 4 and k13.degrees == (3, 1, 1, 1)
    assert gen.star(1).edges == ((0, 1),)
    assert gen.star(5).degrees[0] == 5
    with pytest.raises(GraphError):
        gen.star(0)


def test_starlike_spec_sorted_and_validated():
    spec = StarlikeSpec((1, 3, 2))
    assert spec.branch_lengths == (3, 2, 1)
    assert spec.k == 3 and spec.n == 7
    with pytest.raises(GraphError):
        StarlikeSpec((2, 1))
    with pytest.raises(GraphError):
        StarlikeSpec((2, 0, 1))


def test_starlike_examples():
    assert gen.starlike(StarlikeSpec((1, 1, 1))) == gen.star(3)
    g = gen.starlike((2, 2, 1, 1, 1, 1))
    assert g.n == 9 and g.degrees[0] == 6
    comet = gen.comet(6)
    assert comet.n == 14 and comet.degrees[0] == 8
    assert sorted(comet.degrees).count(2) == 5


def test_starlike_layout():
    g = gen.starlike((3, 1, 1))
    # long branch 1-2-3, then single leaves 4 and 5
    assert g.edges == ((0, 1), (0, 4), (0, 5), (1, 2), (2, 3))


@pytest.mark.parametrize("branches", [(1, 1, 1), (5, 4, 3), (7, 1, 1, 1, 1, 1, 1, 1), (4, 4, 4, 4)])
def test_starlike_single_high_degree_vertex(branches):
    g = gen.starlike(branches)
    assert is_tree(g)
    assert g.high_degree_vertices() == [0]
    assert g.degrees[0] == len(branches)


def test_claw_chain():
    assert gen.claw_chain(1) == gen.star(3)
    g5 = gen.claw_chain(5)
    assert g5.n == 20 and is_tree(g5)
    centres = [4 * i for i in range(5)]
    assert [g5.degrees[c] for c in centres] == [4, 5, 5, 5, 4]
    g2 = gen.claw_chain(2)
    assert g2.n == 8
    # vertex-disjoint claws by construction bookkeeping
    for i in range(2):
        assert set(g2.adjacency[4 * i]) >= {4 * i + 1, 4 * i + 2, 4 * i + 3}
    with pytest.raises(GraphError):
        gen.claw_chain(0)


def test_counterexample_graph():
    g = gen.counterexample_graph(5, 5)
    assert is_tree(g) and g.n == 3 * 5 + 5 + 5
    assert g.max_degree == 5
    assert [v for v, d in enumerate(g.degrees) if d == 5] == [3 * 5 + 5]
    assert sum(1 for d in g.degrees if d >= 3) == 6  # five chain centres and the comet centre
    small = gen.counterexample_graph(1, 1)
    assert small.n == 9 and is_tree(small)
    g23 = gen.counterexample_graph(2, 3)
    assert is_connected(g23) and g23.m == g23.n - 1
    with pytest.raises(GraphError):
        gen.counterexample_graph(0, 3)


def test_counterexample_blocks_partition():
    chain, link, head = gen.counterexample_blocks(5, 5)
    assert sorted(chain + link + head) == list(range(25))
    g = gen.counterexample_graph(5, 5)
    assert all(g.degrees[v] == 2 for v in link)
    assert g.degrees[head[0]] == 5


def test_cartesian_product_small():
    c4 = gen.cartesian_product(gen.path(2), gen.path(2))
    assert c4.degrees == (2, 2, 2, 2) and c4.m == 4
    cube = gen.lattice(2, 3)
    assert cube.n == 8 and cube.m == 12 and set(cube.degrees) == {3}
    assert gen.hypercube(3) == cube


def test_lattice_degrees_and_adjacency_rule():
    n = 4
    g = gen.lattice(n, 2)
    assert g.degrees[1 * n + 1] == 4
    for a, b in itertools.product(range(n), repeat=2):
        for a2, b2 in itertools.product(range(n), repeat=2):
            adj = (a == a2 and abs(b - b2) == 1) or (b == b2 and abs(a - a2) == 1)
            assert (a2 * n + b2 in g.adjacency[a * n + b]) == adj


def test_prufer_examples():
    assert gen.prufer_decode([], 2).edges == ((0, 1),)
    assert gen.prufer_decode([0, 0], 4) == gen.star(3)
    assert gen.prufer_decode([1, 2], 4) == gen.path(4)


def test_prufer_rejects():
    with pytest.raises(GraphError):
        gen.prufer_decode([0], 4)
    with pytest.raises(GraphError):
        gen.prufer_decode([0, 4], 4)
    with pytest.raises(GraphError):
        gen.prufer_decode([], 1)


def brute_force_trees(n):
    """Every spanning tree of K_n, found by testing all (n-1)-edge subsets."""
    pairs = list(itertools.combinations(range(n), 2))
    out = set()
    for sub in itertools.combinations(pairs, n - 1):
        g = build_graph(n, sub)
        if is_connected(g):
            out.add(g.edges)
    return out


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_prufer_bijection_against_brute_force(n):
    decoded = [gen.prufer_decode(gen.prufer_unrank(r, n), n) for r in range(n ** (n - 2))]
    assert all(is_tree(g) for g in decoded)
    edge_sets = {g.edges for g in decoded}
    assert len(edge_sets) == n ** (n - 2)
    assert edge_sets == brute_force_trees(n)


@pytest.mark.parametrize("n", [4, 5, 6])
def test_prufer_degree_sequence_counts(n):
    # labelled trees with degrees d_i: (n-2)! / prod (d_i - 1)!
    seen = Counter(gen.prufer_decode(gen.prufer_unrank(r, n), n).degrees for r in range(n ** (n - 2)))
    for degs, count in seen.items():
        expected = math.factorial(n - 2) // math.prod(math.factorial(d - 1) for d in degs)
        assert count == expected
    assert sum(seen.values()) == n ** (n - 2)
    if n == 4:
        assert sum(seen.values()) == 16


def test_prufer_encode_inverts_decode(rng):
    for _ in range(50):
        n = int(rng.integers(2, 15))
        seq = [int(x) for x in rng.integers(0, n, size=n - 2)]
        assert gen.prufer_encode(gen.prufer_decode(seq, n)) == seq


def test_prufer_unrank_lexicographic():
    seqs = [gen.prufer_unrank(r, 4) for r in range(16)]
    assert seqs == sorted(seqs)
    assert seqs[0] == [0, 0] and seqs[-1] == [3, 3]


def test_join_by_path():
    g, (b1, link, b3) = gen.join_by_path(gen.star(3), 1, 4, gen.star(2), 0)
    assert is_tree(g) and g.n == 4 + 4 + 3
    assert link == [4, 5, 6, 7]
    assert 1 in g.adjacency[4] and 8 in g.adjacency[7]


def test_random_prufer_tree_uniform_support():
    r = np.random.default_rng(0)
    trees = {gen.random_prufer_tree(4, r).edges for _ in range(400)}
    assert len(trees) == 16
