"""Constructors for the graph families under study.

Every generator numbers its vertices deterministically; the layout is given
in each docstring so that vertex indices in reports can be traced back.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .graph import Graph, GraphError, build_graph


@dataclass(frozen=True)
class StarlikeSpec:
    """Branch lengths ``n_1 >= ... >= n_k`` (each excluding the centre), ``k >= 3``."""

    branch_lengths: tuple[int, ...]

    def __post_init__(self):
        b = tuple(int(x) for x in self.branch_lengths)
        if len(b) < 3:
            raise GraphError(f"starlike tree needs k >= 3 branches, got {len(b)}")
        if any(x < 1 for x in b):
            raise GraphError(f"branch lengths must be positive, got {b}")
        object.__setattr__(self, "branch_lengths", tuple(sorted(b, reverse=True)))

    @property
    def k(self) -> int:
        return len(self.branch_lengths)

    @property
    def n(self) -> int:
        return 1 + sum(self.branch_lengths)


def _need_positive(name: str, value: int) -> int:
    if int(value) != value or value < 1:
        raise GraphError(f"{name} must be a positive integer, got {value!r}")
    return int(value)


def path(n: int) -> Graph:
    """P_n with vertex i adjacent to i+1."""
    n = _need_positive("n", n)
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def star(k: int) -> Graph:
    """K_{1,k}: centre 0, leaves 1..k."""
    k = _need_positive("k", k)
    return build_graph(k + 1, [(0, i) for i in range(1, k + 1)])


def starlike(spec: StarlikeSpec | Sequence[int]) -> Graph:
    """S(n_1, ..., n_k).

    Vertex 0 is the centre. Branches follow in non-increasing length order,
    each laid out consecutively from the vertex next to the centre to its leaf.
    """
    if not isinstance(spec, StarlikeSpec):
        spec = StarlikeSpec(tuple(spec))
    edges = []
    nxt = 1
    for length in spec.branch_lengths:
        prev = 0
        for _ in range(length):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return build_graph(spec.n, edges)


def comet(length: int, leaves: int = 7) -> Graph:
    """S(length, 1, ..., 1) with ``leaves`` unit branches besides the long one."""
    return starlike(StarlikeSpec((_need_positive("length", length),) + (1,) * leaves))


def claw_chain(m: int) -> Graph:
    """m copies of K_{1,3} whose centres form a path.

    Claw i occupies vertices 4i..4i+3 with its centre at 4i; centres 4i and
    4(i+1) are adjacent.
    """
    m = _need_positive("m", m)
    edges = []
    for i in range(m):
        c = 4 * i
        edges += [(c, c + 1), (c, c + 2), (c, c + 3)]
        if i:
            edges.append((c - 4, c))
    return build_graph(4 * m, edges)


def counterexample_graph(m: int, ell: int) -> Graph:
    """m chained copies of K_{1,2} followed by the comet S(ell, 1, 1, 1, 1).

    Layout (n = 3m + ell + 5):
      * copy i of K_{1,2} occupies 3i..3i+2, centre 3i; consecutive centres are adjacent;
      * the comet's long branch occupies 3m..3m+ell-1, running from the end
        joined to the last centre 3(m-1) toward the comet centre;
      * the comet centre is 3m+ell, its four leaves 3m+ell+1..3m+ell+4.
    """
    m = _need_positive("m", m)
    ell = _need_positive("ell", ell)
    edges = []
    for i in range(m):
        c = 3 * i
        edges += [(c, c + 1), (c, c + 2)]
        if i:
            edges.append((c - 3, c))
    prev = 3 * (m - 1)
    for j in range(ell):
        edges.append((prev, 3 * m + j))
        prev = 3 * m + j
    centre = 3 * m + ell
    edges.append((prev, centre))
    edges += [(centre, centre + t) for t in range(1, 5)]
    return build_graph(centre + 5, edges)


def counterexample_blocks(m: int, ell: int) -> tuple[list[int], list[int], list[int]]:
    """The (chain, path, comet head) vertex partition of :func:`counterexample_graph`."""
    chain = list(range(3 * m))
    link = list(range(3 * m, 3 * m + ell))
    head = list(range(3 * m + ell, 3 * m + ell + 5))
    return chain, link, head


def join_by_path(
    g1: Graph, attach1: int, ell: int, g3: Graph, attach3: int
) -> tuple[Graph, tuple[list[int], list[int], list[int]]]:
    """Connect ``g1`` and ``g3`` through a path of ``ell`` new vertices.

    Vertices of g1 keep their numbers, the path follows (from the g1 end),
    then g3 shifted by ``g1.n + ell``. Returns the graph and the three blocks.
    """
    ell = _need_positive("ell", ell)
    off = g1.n + ell
    edges = list(g1.edges)
    edges += [(u + off, v + off) for u, v in g3.edges]
    prev = attach1
    for j in range(ell):
        edges.append((prev, g1.n + j))
        prev = g1.n + j
    edges.append((prev, attach3 + off))
    blocks = (list(range(g1.n)), list(range(g1.n, off)), list(range(off, off + g3.n)))
    return build_graph(off + g3.n, edges), blocks


def cartesian_product(g: Graph, h: Graph) -> Graph:
    """g □ h with vertex (a, b) numbered a * h.n + b (row-major)."""
    N = h.n
    edges = []
    for a in range(g.n):
        for b1, b2 in h.edges:
            edges.append((a * N + b1, a * N + b2))
    for a1, a2 in g.edges:
        for b in range(N):
            edges.append((a1 * N + b, a2 * N + b))
    return build_graph(g.n * N, edges)


def lattice(n: int, d: int) -> Graph:
    """d-fold product P_n □ ... □ P_n in row-major coordinate order."""
    d = _need_positive("d", d)
    g = path(n)
    out = g
    for _ in range(d - 1):
        out = cartesian_product(out, g)
    return out


def hypercube(d: int) -> Graph:
    return lattice(2, d)


def prufer_decode(seq: Sequence[int], n: int) -> Graph:
    """Labelled tree on n vertices with Prüfer sequence ``seq``.

    Each step joins the smallest current leaf to the next sequence entry.
    """
    n = int(n)
    if n < 2:
        raise GraphError(f"Prüfer decoding needs n >= 2, got {n}")
    if len(seq) != n - 2:
        raise GraphError(f"Prüfer sequence for n={n} must have length {n - 2}, got {len(seq)}")
    if any(not 0 <= x < n for x in seq):
        raise GraphError(f"Prüfer entries must lie in [0, {n})")
    return build_graph(n, _prufer_edges(seq, n))


def _prufer_edges(seq: Sequence[int], n: int) -> list[tuple[int, int]]:
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    edges = []
    for x in seq:
        leaf = degree.index(1)
        edges.append((leaf, x))
        degree[leaf] = 0
        degree[x] -= 1
    u = degree.index(1)
    v = degree.index(1, u + 1)
    edges.append((u, v))
    return edges


def prufer_encode(g: Graph) -> list[int]:
    """Inverse of :func:`prufer_decode`; ``g`` must be a tree with n >= 2."""
    deg = list(g.degrees)
    removed = [False] * g.n
    seq = []
    for _ in range(g.n - 2):
        leaf = next(v for v in range(g.n) if deg[v] == 1 and not removed[v])
        removed[leaf] = True
        parent = next(w for w in g.adjacency[leaf] if not removed[w])
        seq.append(parent)
        deg[parent] -= 1
    return seq


def prufer_unrank(rank: int, n: int) -> list[int]:
    """The rank-th sequence of {0..n-1}^(n-2) in lexicographic order."""
    seq = []
    for _ in range(n - 2):
        rank, digit = divmod(rank, n)
        seq.append(digit)
    return seq[::-1]


def random_prufer_tree(n: int, rng) -> Graph:
    """Uniform random labelled tree on n vertices (``rng``: numpy Generator)."""
    if n == 1:
        return build_graph(1, [])
    return prufer_decode([int(x) for x in rng.integers(0, n, size=n - 2)], n)
