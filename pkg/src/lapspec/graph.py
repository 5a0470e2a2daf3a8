"""Undirected simple graphs, their Laplacians, and the edge-list text format.

Vertices are the contiguous integers ``0..n-1``. Any labels in an input file
are positional: the first column value ``u`` always means vertex ``u``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np


class GraphError(ValueError):
    """Invalid graph data (bad index, self-loop, malformed edge list)."""


@dataclass(frozen=True)
class Graph:
    """Immutable undirected simple graph on vertices ``0..n-1``.

    ``edges`` holds each edge once as ``(u, v)`` with ``u < v``, sorted
    lexicographically. Use :func:`build_graph` rather than the constructor
    so that input is validated and canonicalised.
    """

    n: int
    edges: tuple[tuple[int, int], ...]

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        nbrs: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
        return tuple(tuple(sorted(a)) for a in nbrs)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(a) for a in self.adjacency)

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def max_degree(self) -> int:
        return max(self.degrees) if self.n else 0

    def high_degree_vertices(self) -> list[int]:
        """Vertices of degree strictly greater than 2."""
        return [v for v, d in enumerate(self.degrees) if d > 2]

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def build_graph(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    """Validate ``edges`` on ``n`` vertices and return the canonical graph.

    Duplicate pairs (in either orientation) collapse to a single edge.
    Raises :class:`GraphError` on a self-loop or an out-of-range endpoint.
    """
    if int(n) != n or n < 1:
        raise GraphError(f"vertex count must be a positive integer, got {n!r}")
    n = int(n)
    canon: set[tuple[int, int]] = set()
    for pair in edges:
        if len(pair) != 2:
            raise GraphError(f"edge {tuple(pair)!r} is not a pair")
        u, v = int(pair[0]), int(pair[1])
        if not (0 <= u < n and 0 <= v < n):
            bad = u if not 0 <= u < n else v
            raise GraphError(f"edge ({u}, {v}): index {bad} out of range [0, {n})")
        if u == v:
            raise GraphError(f"edge ({u}, {v}) is a self-loop")
        canon.add((u, v) if u < v else (v, u))
    return Graph(n, tuple(sorted(canon)))


def laplacian(g: Graph) -> np.ndarray:
    """Integer Laplacian ``D - A`` as a dense ``(n, n)`` int64 array."""
    L = np.zeros((g.n, g.n), dtype=np.int64)
    if g.edges:
        e = np.asarray(g.edges, dtype=np.int64)
        L[e[:, 0], e[:, 1]] = -1
        L[e[:, 1], e[:, 0]] = -1
    L[np.diag_indices(g.n)] = g.degrees
    return L


def adjacency_matrix(g: Graph) -> np.ndarray:
    A = np.zeros((g.n, g.n), dtype=np.int64)
    for u, v in g.edges:
        A[u, v] = A[v, u] = 1
    return A


def components(g: Graph) -> list[list[int]]:
    """Connected components, each sorted, ordered by smallest vertex."""
    seen = [False] * g.n
    out = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.adjacency[u]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    queue.append(w)
        out.append(sorted(comp))
    return out


def is_connected(g: Graph) -> bool:
    return len(components(g)) == 1


def is_tree(g: Graph) -> bool:
    return g.m == g.n - 1 and is_connected(g)


def parse_edge_list(text: str) -> Graph:
    """Parse the edge-list format.

    Lines starting with ``#`` and blank lines are ignored. The first
    remaining line is ``n m``, followed by exactly ``m`` lines ``u v``.
    """
    header = None
    pairs: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        try:
            if len(fields) != 2:
                raise ValueError
            a, b = int(fields[0]), int(fields[1])
        except ValueError:
            raise GraphError(f"line {lineno}: expected two integers, got {raw!r}") from None
        if header is None:
            if a < 1 or b < 0:
                raise GraphError(f"line {lineno}: bad header {raw!r}")
            header = (a, b)
        else:
            pairs.append((a, b))
    if header is None:
        raise GraphError("missing 'n m' header line")
    n, m = header
    if len(pairs) != m:
        raise GraphError(f"header declares {m} edges but {len(pairs)} edge lines follow")
    return build_graph(n, pairs)


def serialize_edge_list(g: Graph, comment: str | None = None) -> str:
    lines = []
    if comment:
        lines.extend(f"# {c}" for c in comment.splitlines())
    lines.append(f"{g.n} {g.m}")
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def read_edge_list(path) -> Graph:
    with open(path, encoding="utf-8") as fh:
        return parse_edge_list(fh.read())


def write_edge_list(g: Graph, path, comment: str | None = None) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(serialize_edge_list(g, comment))
