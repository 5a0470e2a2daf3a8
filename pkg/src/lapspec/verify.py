"""Mechanical checks of eigenvalue bounds and localisation statements.

Every inequality is reported as a :class:`BoundCheck` normalised to
``lhs <= rhs`` and judged with an absolute slack of 1e-9.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations

import numpy as np

from . import generators
from .analysis import (
    branching_paths,
    count_at_least_4,
    localization,
    multiplicity,
    verify_decay,
)
from .eigen import Spectrum, eig_symmetric, gerschgorin_disks, lattice_eigenvalues
from .generators import StarlikeSpec
from .graph import Graph, GraphError, is_connected, is_tree, laplacian
from .tolerance import BOUND_SLACK, eigen_equal, resolve


@dataclass(frozen=True)
class BoundCheck:
    name: str
    lhs: float
    rhs: float
    holds: bool
    margin: float
    context: str = ""


def make_check(name: str, lhs: float, rhs: float, context: str = "") -> BoundCheck:
    lhs, rhs = float(lhs), float(rhs)
    return BoundCheck(name, lhs, rhs, lhs <= rhs + BOUND_SLACK, rhs - lhs, context)


def check_starlike_bounds(spec: StarlikeSpec, s: Spectrum) -> list[BoundCheck]:
    """Das upper bound, Das sandwich on lambda_{n-2}, and the Grone-Merris lower bound."""
    if s.n != spec.n:
        raise ValueError(f"spectrum has {s.n} eigenvalues, starlike tree has {spec.n} vertices")
    k = spec.k
    n1, nk = spec.branch_lengths[0], spec.branch_lengths[-1]
    lam_max = float(s.eigenvalues[-1])
    second = float(s.eigenvalues[-2])
    ctx = f"S{spec.branch_lengths}"
    return [
        make_check("das-upper", lam_max, k + 1 + 1 / (k - 1), ctx),
        make_check("das-second-lower", 2 + 2 * math.cos(2 * math.pi / (2 * nk + 1)), second, ctx),
        make_check("das-second-upper", second, 2 + 2 * math.cos(2 * math.pi / (2 * n1 + 1)), ctx),
        make_check("grone-merris-lower", k + 1, lam_max, ctx),
    ]


def check_general_bounds(g: Graph, s: Spectrum, context: str = "") -> list[BoundCheck]:
    """Count bound m_G([4, inf)) <= #{d > 2} plus the max-degree bounds on lambda_max.

    The Stevanović upper bound is applied to trees with max degree >= 2 only.
    """
    if not is_connected(g):
        raise GraphError("general bounds need a connected graph")
    out = [make_check("count-bound", count_at_least_4(s), len(g.high_degree_vertices()), context)]
    if g.m == 0:
        return out
    d1 = g.max_degree
    lam_max = float(s.eigenvalues[-1])
    out.append(make_check("grone-merris-lower", d1 + 1, lam_max, context))
    if is_tree(g) and d1 >= 2:
        out.append(
            make_check("stevanovic-upper", lam_max, d1 + 2 * math.sqrt(d1 - 1), f"{context} tree-only bound".strip())
        )
    return out


def check_guo(s: Spectrum, n: int, context: str = "") -> list[BoundCheck]:
    """lambda_j <= ceil(n / (n - j)) for j = 0..n-1 (trees)."""
    return [
        make_check(f"guo[{j}]", float(s.eigenvalues[j]), -(-n // (n - j)), context)
        for j in range(n)
    ]


def check_localization(g: Graph, s: Spectrum, tol: float | None = None, context: str = "") -> list[BoundCheck]:
    """Gerschgorin containment for every eigenpair, and degree > 2 localisation above 4.

    The containment check has lhs = |lambda - d(v*)| and rhs = the disk radius of
    the argmax vertex v*. Above 4 the check is lhs = 3 - d(v*), rhs = 0.
    """
    tol = resolve(tol)
    disks = gerschgorin_disks(laplacian(g))
    out = []
    for k, lam in enumerate(map(float, s.eigenvalues)):
        v = localization(s, k).vertex
        disk = disks[v]
        out.append(make_check(f"gerschgorin[{k}]", abs(lam - disk.center), disk.radius, context))
        if lam > 4.0 and not eigen_equal(lam, 4.0, tol):
            out.append(make_check(f"degree-localization[{k}]", 3 - g.degrees[v], 0, context))
    return out


def decay_certificates(g: Graph, s: Spectrum, tol: float | None = None):
    """Certificates for every eigenpair with lambda >= 4 on every branching path."""
    tol = resolve(tol)
    paths = branching_paths(g)
    out = []
    for k, lam in enumerate(map(float, s.eigenvalues)):
        if lam >= 4.0 or eigen_equal(lam, 4.0, tol):
            out.extend(verify_decay(s, k, b, tol) for b in paths)
    return out


def verify_eigenvalue4_structure(g: Graph, s: Spectrum, tol: float | None = None) -> BoundCheck:
    """A tree with eigenvalue 4 has m_T(4) = 1 and 4 | n.

    Reported as lhs = (m_T(4) - 1) + (n mod 4) <= 0.
    """
    if not is_tree(g):
        raise GraphError("eigenvalue-4 structure applies to trees")
    m4 = multiplicity(s, 4.0, tol)
    if m4 == 0:
        raise ValueError("graph has no eigenvalue equal to 4")
    return make_check("eig4-structure", (m4 - 1) + g.n % 4, 0, f"n={g.n}, m(4)={m4}")


def is_claw_spanned(g: Graph) -> bool:
    """Whether the vertex set splits into vertex-disjoint K_{1,3} subgraphs.

    Exhaustive search: the smallest unassigned vertex is either a claw centre
    with three unassigned neighbours, or a leaf of an unassigned neighbour.
    """
    if g.n % 4:
        return False
    adj = [sum(1 << w for w in a) for a in g.adjacency]
    return _claw_search((1 << g.n) - 1, adj)


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def _claw_search(free: int, adj: list[int]) -> bool:
    if not free:
        return True
    v = (free & -free).bit_length() - 1
    rest = free & ~(1 << v)
    for trio in combinations(_bits(adj[v] & rest), 3):
        used = sum(1 << w for w in trio)
        if _claw_search(rest & ~used, adj):
            return True
    for c in _bits(adj[v] & rest):
        inner = rest & ~(1 << c)
        for pair in combinations(_bits(adj[c] & inner), 2):
            used = sum(1 << w for w in pair)
            if _claw_search(inner & ~used, adj):
                return True
    return False


@dataclass(frozen=True)
class PerturbationSetup:
    l1: int
    l2: int
    l3: int
    order: tuple[int, ...]  # vertex permutation realising the 3-block form
    side: str  # "upper": top-left (l1 + l2) block, "lower": bottom-right (l2 + l3)
    lam_tilde: float
    gamma_tilde: float
    bound: float
    tail_component: float  # |path-end component| of the block eigenvector
    lam: float
    gap: float
    holds: bool


def _block_order(g: Graph, blocks) -> tuple[list[int], list[int], list[int]]:
    b1, link, b3 = (list(map(int, b)) for b in blocks)
    if not b1 or not link or not b3:
        raise GraphError("all three blocks must be non-empty")
    every = b1 + link + b3
    if sorted(every) != list(range(g.n)):
        raise GraphError("blocks must partition the vertex set")
    s1, s3 = set(b1), set(b3)
    for a, b in zip(link, link[1:]):
        if b not in g.adjacency[a]:
            raise GraphError(f"path block is not a path: {a} and {b} are not adjacent")
    for v in link:
        if g.degrees[v] != 2:
            raise GraphError(f"path vertex {v} has degree {g.degrees[v]}, expected 2")
    cross13 = [(u, v) for u, v in g.edges if (u in s1 and v in s3) or (u in s3 and v in s1)]
    if cross13:
        raise GraphError(f"outer blocks are adjacent via {cross13[0]}")
    into1 = [w for w in g.adjacency[link[0]] if w in s1]
    into3 = [w for w in g.adjacency[link[-1]] if w in s3]
    if len(into1) != 1 or len(into3) != 1:
        raise GraphError("the path must meet each outer block in exactly one edge at its ends")
    for v in link[1:]:
        if any(w in s1 for w in g.adjacency[v]):
            raise GraphError(f"path vertex {v} touches the first block away from the path end")
    for v in link[:-1]:
        if any(w in s3 for w in g.adjacency[v]):
            raise GraphError(f"path vertex {v} touches the last block away from the path end")
    a1, a3 = into1[0], into3[0]
    b1 = [v for v in b1 if v != a1] + [a1]
    b3 = [a3] + [v for v in b3 if v != a3]
    return b1, link, b3


def perturbation_check(
    g: Graph, blocks, side: str = "upper", index: int | None = None, tol: float | None = None
) -> PerturbationSetup:
    """Compare an eigenvalue > 4 of a corner block with the nearest eigenvalue of L.

    ``blocks`` is (first, path, last); the path is listed from the first block
    toward the last. ``index`` selects an eigenvalue of the corner block by its
    ascending position; by default the largest one is used.
    """
    b1, link, b3 = _block_order(g, blocks)
    order = b1 + link + b3
    L = laplacian(g)[np.ix_(order, order)]
    l1, l2, l3 = len(b1), len(link), len(b3)
    E1 = L[l1:l1 + l2, :l1]
    E2 = L[l1 + l2:, l1:l1 + l2]
    if not (E1.sum() == E1[0, -1] == -1 and E2.sum() == E2[0, -1] == -1):
        raise GraphError("coupling blocks are not single -1 corner entries")
    if side == "upper":
        sub = L[:l1 + l2, :l1 + l2]
        tail_row = l1 + l2 - 1
    elif side == "lower":
        sub = L[l1:, l1:]
        tail_row = 0
    else:
        raise ValueError(f"side must be 'upper' or 'lower', got {side!r}")
    tol = resolve(tol)
    sub_spec = eig_symmetric(sub)
    if index is None:
        above = [k for k, x in enumerate(sub_spec.eigenvalues) if x > 4 and not eigen_equal(x, 4.0, tol)]
        if not above:
            raise ValueError("corner block has no eigenvalue greater than 4")
        index = above[-1]
    lam_t = float(sub_spec.eigenvalues[index])
    if not (lam_t > 4 and not eigen_equal(lam_t, 4.0, tol)):
        raise ValueError(f"selected block eigenvalue {lam_t} is not greater than 4")
    gamma = 2.0 / (lam_t - 2.0)
    bound = gamma**l2
    full = eig_symmetric(L).eigenvalues
    j = int(np.argmin(np.abs(full - lam_t)))
    gap = abs(float(full[j]) - lam_t)
    tail = abs(float(sub_spec.eigenvectors[tail_row, index]))
    return PerturbationSetup(
        l1, l2, l3, tuple(order), side, lam_t, gamma, bound, tail, float(full[j]), gap,
        gap <= bound + 1e-12,
    )


def lattice_multiplicity_4(n: int, d: int, cap: int = 5 * 10**7) -> int:
    """Number of tuples j in {0..n-1}^d with sum_i sin^2(j_i pi / 2n) = 1.

    Uses sin^2(x/2) = (1 - cos x)/2, so the condition is sum_i cos(j_i pi/n) = d - 2.
    The cosine table is built antisymmetric (cos(pi - x) = -cos x) so that
    complementary indices cancel exactly; other solutions are matched to 1e-12.
    """
    if n < 1 or d < 1:
        raise ValueError(f"need n >= 1 and d >= 1, got n={n}, d={d}")
    if n**d > cap:
        raise ValueError(f"{n}^{d} tuples exceed the enumeration cap {cap}")
    j = np.arange(n)
    c = np.cos(np.pi * np.minimum(j, n - j) / n)
    c = np.where(2 * j > n, -c, c)
    c[2 * j == n] = 0.0
    sums = c
    for _ in range(d - 1):
        sums = (sums[:, None] + c[None, :]).ravel()
    # |sum sin^2 - 1| <= 1e-12  <=>  |sum cos - (d - 2)| <= 2e-12
    return int(np.count_nonzero(np.abs(sums - (d - 2)) <= 2e-12))


def lattice_multiplicity_spectral(n: int, d: int, tol: float | None = None) -> int:
    """m_G(4) read off the closed-form lattice spectrum."""
    lam, _ = lattice_eigenvalues(n, d)
    return sum(1 for x in lam if eigen_equal(float(x), 4.0, tol))


def verify_counterexample(m: int, ell: int) -> BoundCheck:
    """Top eigenvector of the chain + comet tree peaks on a degree-4 vertex.

    lhs is the largest |component| on vertices whose degree is not 4, rhs
    the largest on degree-4 vertices (0 when there are none, e.g. m = 1).
    """
    g = generators.counterexample_graph(m, ell)
    s = eig_symmetric(laplacian(g))
    phi = np.abs(s.vector(s.n - 1))
    deg = np.array(g.degrees)
    v = localization(s, s.n - 1).vertex
    ctx = f"m={m}, ell={ell}, argmax vertex {v} (degree {g.degrees[v]})"
    on4 = phi[deg == 4]
    return make_check("counterexample", phi[deg != 4].max(), on4.max() if on4.size else 0.0, ctx)
