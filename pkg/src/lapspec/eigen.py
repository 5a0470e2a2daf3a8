"""Dense symmetric eigensolvers and closed-form Laplacian spectra.

``eig_symmetric`` reduces the matrix to tridiagonal form with Householder
reflections and then runs implicitly shifted QL with accumulated rotations.
``eig_symmetric_batch`` runs cyclic Jacobi on a stack of small matrices at
once, which is what the exhaustive tree sweeps use. Neither calls an external
eigensolver; numpy is used only for array arithmetic.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np

_EPS = np.finfo(float).eps


class ConvergenceError(RuntimeError):
    def __init__(self, n: int, residual: float, iterations: int):
        self.n = n
        self.residual = residual
        self.iterations = iterations
        super().__init__(
            f"eigensolver did not converge for n={n} after {iterations} iterations "
            f"(largest unreduced off-diagonal {residual:.3e})"
        )


@dataclass(frozen=True)
class Spectrum:
    """Ascending eigenvalues with unit eigenvectors as matching columns.

    ``eigenvectors[j, k]`` is the value of eigenvector k at vertex j.
    """

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray

    @property
    def n(self) -> int:
        return len(self.eigenvalues)

    def vector(self, k: int) -> np.ndarray:
        return self.eigenvectors[:, k]

    def __len__(self) -> int:
        return self.n


@dataclass(frozen=True)
class SpectrumHealth:
    max_residual: float
    max_orthogonality: float
    max_norm_defect: float
    min_eigenvalue: float
    trace_defect: float
    sorted: bool


def spectrum_health(L: np.ndarray, s: Spectrum) -> SpectrumHealth:
    """Residual, orthogonality and trace diagnostics of ``s`` against ``L``.

    The residual of pair k is scaled by ``max(1, |lambda_k|)``.
    """
    L = np.asarray(L, dtype=float)
    lam, V = s.eigenvalues, s.eigenvectors
    R = L @ V - V * lam
    res = np.linalg.norm(R, axis=0) / np.maximum(1.0, np.abs(lam))
    G = V.T @ V
    norms = np.abs(np.diag(G) - 1.0)
    off = np.abs(G - np.diag(np.diag(G)))
    return SpectrumHealth(
        max_residual=float(res.max(initial=0.0)),
        max_orthogonality=float(off.max(initial=0.0)),
        max_norm_defect=float(norms.max(initial=0.0)),
        min_eigenvalue=float(lam.min()),
        trace_defect=float(abs(lam.sum() - np.trace(L))),
        sorted=bool(np.all(np.diff(lam) >= 0)),
    )


def tridiagonalize(A: np.ndarray) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Householder reduction ``A = Q T Q^T``.

    Returns the diagonal ``d``, the sub-diagonal ``e`` (length n-1), and ``Q``.
    """
    A = np.array(A, dtype=float)
    n = A.shape[0]
    Q = np.eye(n)
    for k in range(n - 2):
        x = A[k + 1:, k]
        tail = np.linalg.norm(x[1:])
        if tail == 0.0:
            continue
        alpha = -math.copysign(math.hypot(x[0], tail), x[0])
        v = x.copy()
        v[0] -= alpha
        v /= np.linalg.norm(v)
        S = A[k + 1:, k + 1:]
        p = S @ v
        w = p - (v @ p) * v
        S -= 2.0 * (np.outer(v, w) + np.outer(w, v))
        A[k + 1, k] = A[k, k + 1] = alpha
        A[k + 2:, k] = 0.0
        A[k, k + 2:] = 0.0
        Qs = Q[:, k + 1:]
        Qs -= 2.0 * np.outer(Qs @ v, v)
    return np.diag(A).copy(), np.diag(A, -1).copy(), Q


def tridiagonal_ql(d, e, Z: np.ndarray, max_iter: int) -> tuple[np.ndarray, np.ndarray]:
    """Implicit QL on the symmetric tridiagonal (d, e), rotating the columns of Z.

    Returns unsorted eigenvalues and the rotated Z. ``max_iter`` bounds the
    total number of QL steps over all eigenvalues.
    """
    n = len(d)
    d = [float(x) for x in d]
    e = [float(x) for x in e] + [0.0]
    zt = np.array(Z, dtype=float).T.copy()  # rows of zt are columns of Z
    steps = 0
    for l in range(n):
        while True:
            m = l
            while m < n - 1:
                dd = abs(d[m]) + abs(d[m + 1])
                if abs(e[m]) <= _EPS * dd:
                    break
                m += 1
            if m == l:
                break
            steps += 1
            if steps > max_iter:
                raise ConvergenceError(n, max(abs(x) for x in e), steps - 1)
            g = (d[l + 1] - d[l]) / (2.0 * e[l])
            r = math.hypot(g, 1.0)
            g = d[m] - d[l] + e[l] / (g + math.copysign(r, g))
            s = c = 1.0
            p = 0.0
            underflow = False
            for i in range(m - 1, l - 1, -1):
                f = s * e[i]
                b = c * e[i]
                r = math.hypot(f, g)
                e[i + 1] = r
                if r == 0.0:
                    d[i + 1] -= p
                    e[m] = 0.0
                    underflow = True
                    break
                s = f / r
                c = g / r
                g = d[i + 1] - p
                r = (d[i] - g) * s + 2.0 * c * b
                p = s * r
                d[i + 1] = g + p
                g = c * r - b
                zt[i:i + 2] = np.array(((c, -s), (s, c))) @ zt[i:i + 2]
            if underflow:
                continue
            d[l] -= p
            e[l] = g
            e[m] = 0.0
    return np.array(d), zt.T.copy()


def eig_symmetric(L: np.ndarray) -> Spectrum:
    """Full eigendecomposition of a real symmetric matrix, eigenvalues ascending.

    Deterministic for a fixed input. Raises :class:`ConvergenceError` when the
    QL stage needs more than ``50 n`` steps.
    """
    A = np.asarray(L, dtype=float)
    if A.ndim != 2 or A.shape[0] != A.shape[1] or A.shape[0] < 1:
        raise ValueError(f"expected a non-empty square matrix, got shape {A.shape}")
    if not np.array_equal(A, A.T):
        raise ValueError("matrix is not symmetric")
    n = A.shape[0]
    if n == 1:
        return Spectrum(A.diagonal().copy(), np.ones((1, 1)))
    d, e, Q = tridiagonalize(A)
    w, V = tridiagonal_ql(d, e, Q, max_iter=50 * n)
    order = np.argsort(w, kind="stable")
    return Spectrum(w[order], V[:, order])


def eig_symmetric_batch(
    A: np.ndarray, vectors: bool = True, max_sweeps: int | None = None
) -> tuple[np.ndarray, np.ndarray | None]:
    """Cyclic Jacobi applied to a stack ``A`` of shape (B, n, n).

    Returns ascending eigenvalues (B, n) and, if ``vectors``, eigenvector
    stacks (B, n, n) with eigenvectors as columns. Meant for small n, where a
    single vectorised rotation over the whole batch is cheap.
    """
    A = np.asarray(A, dtype=float)
    if A.ndim != 3 or A.shape[1] != A.shape[2]:
        raise ValueError(f"expected shape (B, n, n), got {A.shape}")
    B, n, _ = A.shape
    # batch axis last so that every row/column slice is a contiguous (n, B) block
    W = np.ascontiguousarray(A.transpose(1, 2, 0))
    V = np.ascontiguousarray(np.broadcast_to(np.eye(n)[:, :, None], (n, n, B))) if vectors else None
    scale = np.maximum(np.sqrt((W * W).sum(axis=(0, 1))), 1.0)
    floor = _EPS * _EPS * scale
    budget = 50 * n if max_sweeps is None else max_sweeps
    iu = np.triu_indices(n, 1)
    pairs = list(zip(*iu))
    sweeps = 0
    while True:
        off = np.sqrt(2.0 * (W[iu[0], iu[1]] ** 2).sum(axis=0))
        worst = float((off / scale).max(initial=0.0))
        if worst <= 4 * _EPS:
            break
        if sweeps >= budget:
            raise ConvergenceError(n, worst, sweeps)
        sweeps += 1
        for p, q in pairs:
            apq = W[p, q].copy()
            live = np.abs(apq) > floor
            if not live.any():
                continue
            app = W[p, p].copy()
            aqq = W[q, q].copy()
            theta = (aqq - app) / (2.0 * np.where(live, apq, 1.0))
            t = np.sign(theta) / (np.abs(theta) + np.hypot(theta, 1.0))
            t[theta == 0.0] = 1.0
            t[~live] = 0.0
            c = 1.0 / np.sqrt(t * t + 1.0)
            s = t * c
            colp = W[:, p].copy()
            colq = W[:, q]
            W[:, p] = c * colp - s * colq
            W[:, q] = s * colp + c * colq
            rowp = W[p].copy()
            rowq = W[q]
            W[p] = c * rowp - s * rowq
            W[q] = s * rowp + c * rowq
            W[p, q] = 0.0
            W[q, p] = 0.0
            W[p, p] = app - t * apq
            W[q, q] = aqq + t * apq
            if vectors:
                vp = V[:, p].copy()
                vq = V[:, q]
                V[:, p] = c * vp - s * vq
                V[:, q] = s * vp + c * vq
    w = np.diagonal(W, axis1=0, axis2=1).copy()  # (B, n)
    order = np.argsort(w, axis=1, kind="stable")
    w = np.take_along_axis(w, order, axis=1)
    if vectors:
        V = np.take_along_axis(V.transpose(2, 0, 1), order[:, None, :], axis=2)
    return w, V


def path_spectrum_closed_form(n: int) -> Spectrum:
    """lambda_k = 4 sin^2(pi k / 2n), phi_{j,k} = cos(pi k (j + 1/2) / n), j 0-based."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    k = np.arange(n)
    lam = 4.0 * np.sin(np.pi * k / (2 * n)) ** 2
    j = np.arange(n)[:, None]
    V = np.cos(np.pi * k[None, :] * (j + 0.5) / n)
    V /= np.linalg.norm(V, axis=0)
    return Spectrum(lam, V)


DEFAULT_LATTICE_CAP = 4096


def lattice_eigenvalues(n: int, d: int, cap: int = 10**7) -> tuple[np.ndarray, np.ndarray]:
    """All n^d lattice eigenvalues in row-major tuple order (unsorted), with the tuples."""
    if n < 1 or d < 1:
        raise ValueError(f"need n >= 1 and d >= 1, got n={n}, d={d}")
    if n**d > cap:
        raise ValueError(f"lattice with {n}^{d} vertices exceeds the cap of {cap}")
    tuples = np.array(list(itertools.product(range(n), repeat=d)), dtype=np.int64).reshape(-1, d)
    s2 = np.sin(np.pi * np.arange(n) / (2 * n)) ** 2
    lam = 4.0 * s2[tuples].sum(axis=1)
    return lam, tuples


def lattice_spectrum_closed_form(n: int, d: int, cap: int = DEFAULT_LATTICE_CAP) -> Spectrum:
    """Eigenpairs of the d-fold product of P_n, vertices in row-major order.

    lambda_J = 4 sum_i sin^2(j_i pi / 2n); phi_J(x) = prod_i cos(j_i pi (x_i + 1/2) / n).
    Ties in the ascending sort keep row-major tuple order.
    """
    lam, tuples = lattice_eigenvalues(n, d, cap=cap)
    base = path_spectrum_closed_form(n).eigenvectors  # base[x, j]
    V = np.ones((1, 1))
    for _ in range(d):
        V = np.kron(V, base)
    order = np.argsort(lam, kind="stable")
    return Spectrum(lam[order], V[:, order])


@dataclass(frozen=True)
class GerschgorinDisk:
    vertex: int
    center: float
    radius: float

    def contains(self, z: float, tol: float = 0.0) -> bool:
        return abs(z - self.center) <= self.radius + tol

    @property
    def interval(self) -> tuple[float, float]:
        return (self.center - self.radius, self.center + self.radius)


def gerschgorin_disks(A: np.ndarray) -> list[GerschgorinDisk]:
    """One disk per row. Integer input keeps exact integer centres and radii."""
    A = np.asarray(A)
    exact = np.issubdtype(A.dtype, np.integer)
    out = []
    for i in range(A.shape[0]):
        row = A[i]
        radius = np.abs(row).sum() - abs(row[i])
        if exact:
            out.append(GerschgorinDisk(i, int(row[i]), int(radius)))
        else:
            out.append(GerschgorinDisk(i, float(row[i]), float(radius)))
    return out
