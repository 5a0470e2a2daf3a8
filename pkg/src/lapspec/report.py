"""Machine-readable output: the analysis report, spectrum dumps, and plot data.

All floats are rounded to 12 significant digits and printed in shortest
round-trip form; JSON keys are sorted so that reports diff cleanly.
"""

from __future__ import annotations

import csv
import dataclasses
import hashlib
import io
import json
import math
from collections import Counter

import numpy as np

from . import analysis
from .eigen import Spectrum
from .graph import Graph, is_connected, is_tree, serialize_edge_list
from .tolerance import eigen_equal, resolve
from .verify import check_general_bounds, check_guo, check_localization, decay_certificates

SCHEMA_VERSION = 1


def round12(x: float) -> float:
    return float(f"{x:.12g}")


def fmt12(x: float) -> str:
    return repr(round12(float(x)))


def to_jsonable(obj):
    """Recursively convert dataclasses, numpy values and floats for JSON output."""
    if dataclasses.is_dataclass(obj) and not isinstance(obj, type):
        return {f.name: to_jsonable(getattr(obj, f.name)) for f in dataclasses.fields(obj)}
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(v) for v in obj]
    if isinstance(obj, np.ndarray):
        return [to_jsonable(v) for v in obj.tolist()]
    if isinstance(obj, (bool, np.bool_)):
        return bool(obj)
    if isinstance(obj, (int, np.integer)):
        return int(obj)
    if isinstance(obj, (float, np.floating)):
        x = float(obj)
        if math.isnan(x) or math.isinf(x):
            return None
        return round12(x)
    return obj


def dumps(obj) -> str:
    return json.dumps(to_jsonable(obj), sort_keys=True, indent=2) + "\n"


def graph_digest(g: Graph) -> str:
    return hashlib.sha256(serialize_edge_list(g).encode()).hexdigest()


def analysis_report(g: Graph, s: Spectrum, descriptor: str, tol: float | None = None) -> dict:
    """Summary of m_G counts, starlikeliness, localisation, decay, and bound checks."""
    tol = resolve(tol)
    lam = [float(x) for x in s.eigenvalues]
    tree = is_tree(g)
    localization = []
    for k, x in enumerate(lam):
        if x >= 4.0 or eigen_equal(x, 4.0, tol):
            loc = analysis.localization(s, k)
            localization.append(
                {
                    "index": k,
                    "eigenvalue": x,
                    "vertex": loc.vertex,
                    "degree": g.degrees[loc.vertex],
                    "margin": loc.margin,
                    "ties": list(loc.ties),
                }
            )
    bounds = []
    if is_connected(g):
        bounds += check_general_bounds(g, s, descriptor)
        bounds += check_localization(g, s, tol, descriptor)
    if tree:
        bounds += check_guo(s, g.n, descriptor)
    certificates = decay_certificates(g, s, tol)
    return {
        "schema": SCHEMA_VERSION,
        "graph": {
            "descriptor": descriptor,
            "digest": graph_digest(g),
            "n": g.n,
            "edges": g.m,
            "is_tree": tree,
            "degree_histogram": {str(d): c for d, c in sorted(Counter(g.degrees).items())},
        },
        "eigenvalues": lam,
        "counts": {
            "m_ge_4": analysis.count_at_least_4(s, tol),
            "m_eq_4": analysis.multiplicity(s, 4.0, tol),
            "high_degree_vertices": len(g.high_degree_vertices()),
        },
        "starlikeliness": analysis.starlikeliness(g, s, tol) if tree else None,
        "localization": localization,
        "decay": [certificate_record(c) for c in certificates],
        "bounds": bounds,
        "bounds_hold": all(b.holds for b in bounds),
        "decay_pass": all(c.passed for c in certificates),
    }


def certificate_record(c: analysis.DecayCertificate) -> dict:
    return {
        "eigenvalue": c.eigenvalue,
        "branch": list(c.branch.vertices),
        "junction": c.branch.junction,
        "gamma": c.gamma,
        "ratios": list(c.ratios),
        "junction_ratio": c.junction_ratio,
        "at_four": c.at_four,
        "zero_branch": c.zero_branch,
        "strict": c.strict,
        "passed": c.passed,
        "failures": list(c.failures),
    }


def spectrum_csv(s: Spectrum, vectors: bool = False) -> str:
    """Rows ``index,eigenvalue``; with ``vectors`` row j also carries phi_{j,0..n-1}."""
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    header = ["index", "eigenvalue"]
    if vectors:
        header += [f"phi_{k}" for k in range(s.n)]
    w.writerow(header)
    for j in range(s.n):
        row = [j, fmt12(s.eigenvalues[j])]
        if vectors:
            row += [fmt12(x) for x in s.eigenvectors[j]]
        w.writerow(row)
    return buf.getvalue()


def spectrum_json(s: Spectrum, vectors: bool = False) -> str:
    out = {"schema": SCHEMA_VERSION, "n": s.n, "eigenvalues": s.eigenvalues}
    if vectors:
        # eigenvectors[k] is the eigenvector paired with eigenvalues[k]
        out["eigenvectors"] = s.eigenvectors.T
    return dumps(out)


def plot_data_csv(s: Spectrum) -> str:
    return spectrum_csv(s, vectors=False)


def eigenvalue_svg(s: Spectrum, title: str = "", width: int = 640, height: int = 400) -> str:
    """Self-contained SVG line chart of the sorted eigenvalues against their index."""
    lam = np.asarray(s.eigenvalues, dtype=float)
    pad = 48
    top = max(float(lam.max(initial=0.0)), 4.0) * 1.05
    n = max(len(lam) - 1, 1)

    def xy(i, v):
        return pad + (width - 2 * pad) * i / n, height - pad - (height - 2 * pad) * v / top

    pts = " ".join(f"{x:.2f},{y:.2f}" for x, y in (xy(i, v) for i, v in enumerate(lam)))
    x0, y4 = xy(0, 4.0)
    x1, _ = xy(n, 4.0)
    return (
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">\n'
        f'<rect width="100%" height="100%" fill="white"/>\n'
        f'<text x="{width / 2:.0f}" y="20" text-anchor="middle" font-size="14">{title}</text>\n'
        f'<line x1="{pad}" y1="{height - pad}" x2="{width - pad}" y2="{height - pad}" stroke="black"/>\n'
        f'<line x1="{pad}" y1="{pad}" x2="{pad}" y2="{height - pad}" stroke="black"/>\n'
        f'<line x1="{x0:.2f}" y1="{y4:.2f}" x2="{x1:.2f}" y2="{y4:.2f}" stroke="gray" stroke-dasharray="4 3"/>\n'
        f'<text x="{pad - 6}" y="{y4 + 4:.2f}" text-anchor="end" font-size="11">4</text>\n'
        f'<text x="{width / 2:.0f}" y="{height - 12}" text-anchor="middle" font-size="12">index</text>\n'
        f'<polyline fill="none" stroke="steelblue" stroke-width="1.5" points="{pts}"/>\n'
        "</svg>\n"
    )
