"""Exhaustive sweeps over all labelled trees on n vertices.

Trees are visited through their Prüfer sequences in lexicographic rank
order. Each chunk of sequences is decoded, assembled into a stack of
Laplacians, and solved in one batched Jacobi call. With ``jobs > 1`` the rank
range is split into contiguous pieces handled by worker processes, and the
results are merged back in rank order.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .analysis import count_in_interval
from .eigen import Spectrum, eig_symmetric_batch
from .graph import Graph
from .tolerance import eigen_equal, resolve
from .verify import is_claw_spanned

MIN_N, MAX_N = 2, 9
CHUNK = 16384

Predicate = Callable[[Graph, np.ndarray, float], bool]


def _has_eig4(lam: np.ndarray, tol: float) -> bool:
    return any(eigen_equal(float(x), 4.0, tol) for x in lam)


def has_eigenvalue_4(g: Graph, lam: np.ndarray, tol: float) -> bool:
    return _has_eig4(lam, tol)


def eig4_implies_claw_spanned(g: Graph, lam: np.ndarray, tol: float) -> bool:
    return not _has_eig4(lam, tol) or is_claw_spanned(g)


def eig4_iff_claw_spanned(g: Graph, lam: np.ndarray, tol: float) -> bool:
    return _has_eig4(lam, tol) == is_claw_spanned(g)


def count_bound(g: Graph, lam: np.ndarray, tol: float) -> bool:
    s = Spectrum(lam, np.empty((len(lam), 0)))
    return count_in_interval(s, 4.0, tol=tol) <= len(g.high_degree_vertices())


PREDICATES: dict[str, Predicate] = {
    "has-eig4": has_eigenvalue_4,
    "eig4-implies-claw-spanned": eig4_implies_claw_spanned,
    "eig4-iff-claw-spanned": eig4_iff_claw_spanned,
    "count-bound": count_bound,
}


@dataclass
class SweepReport:
    n: int
    predicate: str
    trees: int = 0
    satisfied: int = 0
    eig4_trees: int = 0
    violations: list[list[int]] = field(default_factory=list)
    elapsed_s: float = 0.0
    jobs: int = 1

    @property
    def violation_count(self) -> int:
        return self.trees - self.satisfied

    @property
    def passed(self) -> bool:
        return self.violation_count == 0


def prufer_sequences(lo: int, hi: int, n: int) -> np.ndarray:
    """Sequences of ranks lo..hi-1, shape (hi - lo, n - 2), most significant digit first."""
    ranks = np.arange(lo, hi, dtype=np.int64)
    out = np.empty((hi - lo, n - 2), dtype=np.int64)
    for pos in range(n - 3, -1, -1):
        ranks, out[:, pos] = np.divmod(ranks, n)
    return out


def decode_batch(seqs: np.ndarray, n: int) -> np.ndarray:
    """Vectorised Prüfer decoding; returns edge stacks of shape (B, n - 1, 2)."""
    B = seqs.shape[0]
    rows = np.arange(B)
    deg = np.ones((B, n), dtype=np.int64)
    for t in range(n - 2):
        deg[rows, seqs[:, t]] += 1
    edges = np.empty((B, n - 1, 2), dtype=np.int64)
    for t in range(n - 2):
        leaf = np.argmax(deg == 1, axis=1)
        edges[:, t, 0] = leaf
        edges[:, t, 1] = seqs[:, t]
        deg[rows, leaf] = 0
        deg[rows, seqs[:, t]] -= 1
    ones = deg == 1
    edges[:, n - 2, 0] = np.argmax(ones, axis=1)
    edges[:, n - 2, 1] = n - 1 - np.argmax(ones[:, ::-1], axis=1)
    return edges


def laplacian_batch(edges: np.ndarray, n: int) -> np.ndarray:
    B = edges.shape[0]
    L = np.zeros((B, n, n))
    r = np.repeat(np.arange(B), edges.shape[1])
    u = edges[:, :, 0].ravel()
    v = edges[:, :, 1].ravel()
    L[r, u, v] = -1.0
    L[r, v, u] = -1.0
    idx = np.arange(n)
    L[:, idx, idx] = -L.sum(axis=2)
    return L


def _graph_from_edges(n: int, e: np.ndarray) -> Graph:
    lo = np.minimum(e[:, 0], e[:, 1])
    hi = np.maximum(e[:, 0], e[:, 1])
    return Graph(n, tuple(sorted(zip(lo.tolist(), hi.tolist()))))


def _resolve_predicate(predicate) -> tuple[str, Predicate]:
    if isinstance(predicate, str):
        if predicate not in PREDICATES:
            raise ValueError(f"unknown predicate {predicate!r}; choose from {sorted(PREDICATES)}")
        return predicate, PREDICATES[predicate]
    return getattr(predicate, "__name__", repr(predicate)), predicate


def _sweep_range(n: int, predicate, lo: int, hi: int, tol: float):
    _, pred = _resolve_predicate(predicate)
    satisfied = eig4 = 0
    violations = []
    for start in range(lo, hi, CHUNK):
        stop = min(hi, start + CHUNK)
        seqs = prufer_sequences(start, stop, n)
        edges = decode_batch(seqs, n)
        lam, _ = eig_symmetric_batch(laplacian_batch(edges, n), vectors=False)
        near4 = np.abs(lam - 4.0) <= tol * np.maximum(1.0, np.abs(lam))
        eig4 += int(near4.any(axis=1).sum())
        for b in range(stop - start):
            if pred(_graph_from_edges(n, edges[b]), lam[b], tol):
                satisfied += 1
            else:
                violations.append(seqs[b].tolist())
    return satisfied, eig4, violations


def enumerate_prufer_sweep(
    n: int, predicate="eig4-iff-claw-spanned", jobs: int = 1, tol: float | None = None
) -> SweepReport:
    """Evaluate ``predicate(graph, eigenvalues, tol)`` on all n^(n-2) labelled trees."""
    if not MIN_N <= n <= MAX_N:
        raise ValueError(f"sweep supports {MIN_N} <= n <= {MAX_N}, got {n}")
    tol = resolve(tol)
    name, _ = _resolve_predicate(predicate)
    total = n ** (n - 2)
    t0 = time.perf_counter()
    report = SweepReport(n=n, predicate=name, trees=total, jobs=max(1, jobs))
    if jobs <= 1:
        parts = [_sweep_range(n, predicate, 0, total, tol)]
    else:
        cuts = np.linspace(0, total, jobs + 1).astype(np.int64).tolist()
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            futures = [
                pool.submit(_sweep_range, n, predicate, cuts[i], cuts[i + 1], tol)
                for i in range(jobs)
                if cuts[i] < cuts[i + 1]
            ]
            parts = [f.result() for f in futures]
    for satisfied, eig4, violations in parts:
        report.satisfied += satisfied
        report.eig4_trees += eig4
        report.violations.extend(violations)
    report.elapsed_s = time.perf_counter() - t0
    return report
