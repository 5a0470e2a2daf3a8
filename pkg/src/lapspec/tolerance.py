"""Numerical tolerances shared by every module.

The eigenvalue equality tolerance defaults to 1e-8 (relative, floored at 1)
and can be overridden with the ``LAPSPEC_TOL`` environment variable.
"""

import os

DEFAULT_EQ_TOL = 1e-8
BOUND_SLACK = 1e-9
DECAY_SLACK = 1e-10
ZERO_COMPONENT = 1e-10


def eq_tol() -> float:
    raw = os.environ.get("LAPSPEC_TOL")
    if not raw:
        return DEFAULT_EQ_TOL
    try:
        tol = float(raw)
    except ValueError:
        raise ValueError(f"LAPSPEC_TOL must be a float, got {raw!r}") from None
    if not tol > 0:
        raise ValueError(f"LAPSPEC_TOL must be positive, got {raw!r}")
    return tol


def resolve(tol: float | None) -> float:
    return eq_tol() if tol is None else float(tol)


def eigen_equal(a: float, b: float, tol: float | None = None) -> bool:
    """``|a - b| <= tol * max(1, |a|)``."""
    return abs(a - b) <= resolve(tol) * max(1.0, abs(a))
