"""Quantities computed from a Laplacian spectrum.

Interval counts, starlikeliness, localisation vertices, pendant branching
paths, decay certificates along those paths, and the regime of the branch
recurrence phi_{j+1} + (lambda - 2) phi_j + phi_{j-1} = 0.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .eigen import Spectrum
from .graph import Graph, is_tree
from .tolerance import DECAY_SLACK, ZERO_COMPONENT, eigen_equal, resolve

# Components at or below this magnitude make a step ratio undefined.
RATIO_FLOOR = 1e-12


def _inside_low(x: float, lo: float, closed: bool, tol: float) -> bool:
    if math.isinf(lo):
        return lo < 0 or x == lo
    slack = tol * max(1.0, abs(lo))
    return x >= lo - slack if closed else x > lo + slack


def _inside_high(x: float, hi: float, closed: bool, tol: float) -> bool:
    if math.isinf(hi):
        return hi > 0 or x == hi
    slack = tol * max(1.0, abs(hi))
    return x <= hi + slack if closed else x < hi - slack


def count_in_interval(
    s: Spectrum,
    lo: float,
    hi: float = math.inf,
    closed_lo: bool = True,
    closed_hi: bool = False,
    tol: float | None = None,
) -> int:
    """m_G(I) for the interval with endpoints lo, hi.

    An eigenvalue within tolerance of a closed endpoint counts as inside; one
    within tolerance of an open endpoint counts as outside.
    """
    if lo > hi:
        raise ValueError(f"empty interval: lo={lo} > hi={hi}")
    tol = resolve(tol)
    return sum(
        1
        for x in map(float, s.eigenvalues)
        if _inside_low(x, lo, closed_lo, tol) and _inside_high(x, hi, closed_hi, tol)
    )


def multiplicity(s: Spectrum, lam: float, tol: float | None = None) -> int:
    return sum(1 for x in s.eigenvalues if eigen_equal(float(x), lam, tol))


def count_at_least_4(s: Spectrum, tol: float | None = None) -> int:
    return count_in_interval(s, 4.0, math.inf, closed_lo=True, tol=tol)


def starlikeliness(g: Graph, s: Spectrum, tol: float | None = None) -> float:
    """1 - (#{d > 2} - m_T([4, inf))) / n, defined for trees only."""
    if not is_tree(g):
        raise ValueError("starlikeliness is defined for trees only")
    return 1.0 - (len(g.high_degree_vertices()) - count_at_least_4(s, tol)) / g.n


@dataclass(frozen=True)
class Localization:
    vertex: int
    magnitude: float
    margin: float  # gap to the largest |component| elsewhere
    ties: tuple[int, ...]  # other vertices within TIE_TOL of the maximum


TIE_TOL = 1e-12


def localization(s: Spectrum, k: int) -> Localization:
    if not 0 <= k < s.n:
        raise IndexError(f"eigen index {k} out of range [0, {s.n})")
    a = np.abs(s.vector(k))
    j = int(np.argmax(a))  # first maximum, i.e. smallest index among exact ties
    top = float(a[j])
    rest = np.delete(a, j)
    runner = float(rest.max()) if rest.size else 0.0
    ties = tuple(int(i) for i in np.flatnonzero(top - a <= TIE_TOL) if i != j)
    return Localization(j, top, top - runner, ties)


def localization_vertex(s: Spectrum, k: int) -> int:
    """argmax_j |phi_{j,k}|, smallest index on ties."""
    return localization(s, k).vertex


@dataclass(frozen=True)
class BranchPath:
    """Pendant path i_1..i_k: i_1 hangs off ``junction`` (degree > 2), i_k is a leaf."""

    vertices: tuple[int, ...]
    junction: int

    @property
    def length(self) -> int:
        return len(self.vertices)

    @property
    def leaf(self) -> int:
        return self.vertices[-1]


def branching_paths(g: Graph) -> list[BranchPath]:
    """All maximal pendant paths ending at a junction, ordered by leaf index."""
    deg = g.degrees
    out = []
    for leaf in range(g.n):
        if deg[leaf] != 1:
            continue
        walk = [leaf]
        prev, cur = leaf, g.adjacency[leaf][0]
        while deg[cur] == 2:
            walk.append(cur)
            a, b = g.adjacency[cur]
            prev, cur = cur, (b if a == prev else a)
        if deg[cur] > 2:
            out.append(BranchPath(tuple(reversed(walk)), cur))
        # deg[cur] == 1: the whole component is a path, no junction.
    return out


@dataclass(frozen=True)
class DecayCertificate:
    eigenvalue: float
    branch: BranchPath
    gamma: float  # 2/(lambda-2); 1 at the lambda = 4 boundary
    ratios: tuple[float | None, ...]  # |phi_{i_{j+1}}| / |phi_{i_j}|, None where undefined
    junction_ratio: float | None  # |phi_{i_1}| / |phi_junction|
    at_four: bool
    zero_branch: bool
    strict: bool
    passed: bool
    failures: tuple[str, ...] = field(default=())


def _ratio(num: float, den: float) -> float | None:
    return None if den <= RATIO_FLOOR else num / den


def verify_decay(
    s: Spectrum, k: int, b: BranchPath, tol: float | None = None
) -> DecayCertificate:
    """Check the decay of eigenvector k along branch ``b``.

    For lambda > 4 every step must satisfy |phi_{j+1}| <= gamma |phi_j| + 1e-10
    with gamma = 2/(lambda-2), and |phi_{i_j}| <= gamma^(j-1) |phi_{i_1}| + 1e-10.
    At lambda = 4 (within tolerance) magnitudes must strictly decrease toward
    the leaf unless the whole branch vanishes. The step from the junction into
    i_1 obeys the same inequality and is checked too.
    """
    lam = float(s.eigenvalues[k])
    tol = resolve(tol)
    at_four = eigen_equal(lam, 4.0, tol)
    if lam < 4.0 and not at_four:
        raise ValueError(f"decay certificates need lambda >= 4, got lambda_{k} = {lam}")
    phi = np.abs(s.vector(k))
    comp = [float(phi[v]) for v in b.vertices]
    head = float(phi[b.junction])
    ratios = tuple(_ratio(comp[j + 1], comp[j]) for j in range(len(comp) - 1))
    jr = _ratio(comp[0], head)
    failures = []

    if at_four:
        gamma = 1.0
        zero = all(c < ZERO_COMPONENT for c in comp)
        seq = [head] + comp
        strict = all(seq[j + 1] < seq[j] for j in range(len(seq) - 1))
        if not zero and not strict:
            failures.append("magnitudes not strictly decreasing toward the leaf")
        passed = zero or strict
        return DecayCertificate(lam, b, gamma, ratios, jr, True, zero, strict, passed, tuple(failures))

    gamma = 2.0 / (lam - 2.0)
    seq = [head] + comp
    strict = True
    for j in range(len(seq) - 1):
        bound = gamma * seq[j]
        if seq[j + 1] > bound + DECAY_SLACK:
            where = "junction" if j == 0 else f"i_{j}"
            failures.append(f"step {where}: {seq[j + 1]:.3e} > gamma * {seq[j]:.3e}")
        if not seq[j + 1] < bound:
            strict = False
    for j, c in enumerate(comp):
        if c > gamma**j * comp[0] + DECAY_SLACK:
            failures.append(f"cumulative i_{j + 1}: {c:.3e} > gamma^{j} * {comp[0]:.3e}")
    zero = all(c < ZERO_COMPONENT for c in comp)
    return DecayCertificate(
        lam, b, gamma, ratios, jr, False, zero, strict, not failures, tuple(failures)
    )


@dataclass(frozen=True)
class BranchBehavior:
    eigenvalue: float
    discriminant: float  # (lambda - 2)^2 - 4 = lambda (lambda - 4)
    regime: str  # "oscillatory" | "boundary" | "exponential"
    roots: tuple[float, float] | None  # real roots r1, r2 (equal at the boundary)
    frequency: float | None  # omega in (0, pi) in the oscillatory regime


def branch_behavior(lam: float, tol: float | None = None) -> BranchBehavior:
    """Roots of r^2 + (lambda - 2) r + 1 = 0 and the resulting branch regime."""
    if lam < 0:
        raise ValueError(f"Laplacian eigenvalues are non-negative, got {lam}")
    disc = lam * (lam - 4.0)
    if eigen_equal(lam, 4.0, tol):
        return BranchBehavior(lam, disc, "boundary", (-1.0, -1.0), None)
    if eigen_equal(lam, 0.0, tol):
        return BranchBehavior(lam, disc, "boundary", (1.0, 1.0), None)
    if lam > 4.0:
        # r1 = (2 - lam + sqrt(disc)) / 2 cancels badly; r1 * r2 = 1 instead.
        r2 = (2.0 - lam - math.sqrt(disc)) / 2.0
        r1 = 1.0 / r2
        return BranchBehavior(lam, disc, "exponential", (r1, r2), None)
    omega = math.atan2(math.sqrt(lam * (4.0 - lam)), 2.0 - lam)
    return BranchBehavior(lam, disc, "oscillatory", None, omega)
