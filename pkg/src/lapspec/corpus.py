"""Reproducible graph collections used by the verification suites."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import generators as gen
from .generators import StarlikeSpec
from .graph import Graph


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    graph: Graph
    family: str
    params: dict = field(default_factory=dict)


def generator_corpus() -> list[CorpusEntry]:
    """One or more members of every built-in family."""
    out = []
    for n in list(range(1, 13)) + [20, 50]:
        out.append(CorpusEntry(f"path({n})", gen.path(n), "path", {"n": n}))
    for k in range(1, 9):
        out.append(CorpusEntry(f"star({k})", gen.star(k), "star", {"k": k}))
    for b in [(1, 1, 1), (2, 2, 1, 1, 1, 1), (3, 1, 1), (5, 1, 1), (5, 4, 3), (4, 4, 4, 4)]:
        out.append(CorpusEntry(f"starlike{b}", gen.starlike(StarlikeSpec(b)), "starlike", {"branches": list(b)}))
    for length in (3, 6, 10):
        out.append(CorpusEntry(f"comet({length})", gen.comet(length), "comet", {"length": length}))
    for m in range(1, 7):
        out.append(CorpusEntry(f"claw_chain({m})", gen.claw_chain(m), "claw-chain", {"m": m}))
    for m, ell in [(1, 1), (2, 3), (5, 5), (6, 8)] + [(m, ell) for m in (5, 6, 7) for ell in (5, 6, 7)]:
        out.append(
            CorpusEntry(f"counterexample({m},{ell})", gen.counterexample_graph(m, ell), "counterexample", {"m": m, "l": ell})
        )
    for n, d in [(2, 2), (3, 2), (4, 2), (6, 2), (2, 3), (3, 3)]:
        out.append(CorpusEntry(f"lattice({n},{d})", gen.lattice(n, d), "lattice", {"n": n, "d": d}))
    for seq, n in [([], 2), ([0, 0], 4), ([1, 2], 4), ([3, 3, 4, 4], 6)]:
        out.append(CorpusEntry(f"prufer({seq},{n})", gen.prufer_decode(seq, n), "prufer", {"seq": seq, "n": n}))
    return out


def random_prufer_corpus(count: int = 500, max_n: int = 40, seed: int = 2012) -> list[CorpusEntry]:
    """``count`` uniform labelled trees with n drawn uniformly from 2..max_n."""
    rng = np.random.default_rng(seed)
    out = []
    for i in range(count):
        n = int(rng.integers(2, max_n + 1))
        seq = [int(x) for x in rng.integers(0, n, size=n - 2)]
        out.append(CorpusEntry(f"random_prufer[{i}](n={n})", gen.prufer_decode(seq, n), "prufer", {"seq": seq, "n": n}))
    return out


def random_starlike_specs(
    count: int = 200, k_range: tuple[int, int] = (3, 8), max_length: int = 12, seed: int = 31
) -> list[StarlikeSpec]:
    rng = np.random.default_rng(seed)
    specs = [StarlikeSpec((1, 1, 1))]
    while len(specs) < count:
        k = int(rng.integers(k_range[0], k_range[1] + 1))
        specs.append(StarlikeSpec(tuple(int(x) for x in rng.integers(1, max_length + 1, size=k))))
    return specs


def full_corpus(random_count: int = 500, max_n: int = 40, seed: int = 2012) -> list[CorpusEntry]:
    return generator_corpus() + random_prufer_corpus(random_count, max_n, seed)


@dataclass(frozen=True)
class JoinedGraph:
    name: str
    graph: Graph
    blocks: tuple[list[int], list[int], list[int]]


def random_path_joined(count: int = 50, seed: int = 6, l2_range: tuple[int, int] = (5, 30)) -> list[JoinedGraph]:
    """Starlike G1 (k >= 4), a path of l2 vertices, and a star G3, joined at random vertices.

    A centre of degree >= 4 in G1 guarantees the top-left block an eigenvalue >= 5.
    """
    rng = np.random.default_rng(seed)
    out = []
    for i in range(count):
        b = tuple(int(x) for x in rng.integers(1, 5, size=int(rng.integers(4, 7))))
        g1 = gen.starlike(StarlikeSpec(b))
        g3 = gen.star(int(rng.integers(3, 7)))
        l2 = int(rng.integers(l2_range[0], l2_range[1] + 1))
        a1 = int(rng.integers(0, g1.n))
        a3 = int(rng.integers(0, g3.n))
        g, blocks = gen.join_by_path(g1, a1, l2, g3, a3)
        out.append(JoinedGraph(f"joined[{i}](S{b}@{a1}, P{l2}, K1,{g3.n - 1}@{a3})", g, blocks))
    return out
