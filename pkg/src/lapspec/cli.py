"""Command-line interface: ``lapspec generate | spectrum | analyze | verify``.

Exit codes: 0 success, 1 a verification failed, 2 usage or input error.
The environment variable LAPSPEC_TOL overrides the eigenvalue equality
tolerance (default 1e-8, relative).
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import corpus, report, sweep, verify
from . import generators as gen
from .eigen import ConvergenceError, eig_symmetric
from .generators import StarlikeSpec
from .graph import Graph, GraphError, is_connected, is_tree, laplacian, read_edge_list, serialize_edge_list
from .tolerance import eq_tol

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

FAMILIES = ("path", "star", "starlike", "comet", "claw-chain", "counterexample", "lattice", "prufer")
SUITES = (
    "starlike-bounds",
    "general-bounds",
    "guo",
    "decay",
    "perturbation",
    "prufer-sweep",
    "lattice-mult",
    "counterexample",
    "eig4-structure",
)


class UsageError(Exception):
    pass


def int_list(text: str) -> list[int]:
    text = text.strip()
    if not text:
        return []
    try:
        return [int(x) for x in text.replace(" ", "").split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _need(args, *names):
    missing = [f"--{n}" for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError(f"family {args.family!r} requires {', '.join(missing)}")


def build_family(args) -> tuple[Graph, str]:
    """Graph and descriptor for ``generate`` style arguments."""
    f = args.family
    if f == "path":
        _need(args, "n")
        return gen.path(args.n), f"path(n={args.n})"
    if f == "star":
        _need(args, "k")
        return gen.star(args.k), f"star(k={args.k})"
    if f == "starlike":
        _need(args, "branches")
        spec = StarlikeSpec(tuple(args.branches))
        return gen.starlike(spec), f"starlike(branches={','.join(map(str, spec.branch_lengths))})"
    if f == "comet":
        _need(args, "length")
        leaves = 7 if args.leaves is None else args.leaves
        return gen.comet(args.length, leaves), f"comet(length={args.length}, leaves={leaves})"
    if f == "claw-chain":
        _need(args, "m")
        return gen.claw_chain(args.m), f"claw-chain(m={args.m})"
    if f == "counterexample":
        _need(args, "m", "l")
        return gen.counterexample_graph(args.m, args.l), f"counterexample(m={args.m}, l={args.l})"
    if f == "lattice":
        _need(args, "n", "d")
        return gen.lattice(args.n, args.d), f"lattice(n={args.n}, d={args.d})"
    if f == "prufer":
        _need(args, "n", "seq")
        return gen.prufer_decode(args.seq, args.n), f"prufer(n={args.n}, seq={','.join(map(str, args.seq))})"
    raise UsageError(f"unknown family {f!r}")


def load_input(path: str) -> tuple[Graph, str]:
    p = Path(path)
    try:
        g = read_edge_list(p)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror or exc}") from None
    return g, f"file:{p.name} sha256:{report.graph_digest(g)[:16]}"


def emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


# generate / spectrum / analyze


def cmd_generate(args) -> int:
    g, desc = build_family(args)
    text = serialize_edge_list(g, comment=desc)
    if args.output:
        Path(args.output).write_text(text)
        print(f"n={g.n} m={g.m}")
    else:
        sys.stdout.write(text)
        print(f"n={g.n} m={g.m}", file=sys.stderr)
    return EXIT_OK


def cmd_spectrum(args) -> int:
    g, _ = load_input(args.input)
    s = eig_symmetric(laplacian(g))
    if args.format == "csv":
        emit(report.spectrum_csv(s, args.vectors), args.output)
    else:
        emit(report.spectrum_json(s, args.vectors), args.output)
    return EXIT_OK


def cmd_analyze(args) -> int:
    g, desc = load_input(args.input)
    s = eig_symmetric(laplacian(g))
    rep = report.analysis_report(g, s, desc)
    emit(report.dumps(rep), args.output)
    if args.plot_data:
        Path(args.plot_data).write_text(report.plot_data_csv(s))
    if args.svg:
        Path(args.svg).write_text(report.eigenvalue_svg(s, title=desc))
    return EXIT_OK


# verify


def _summarise(checks) -> dict:
    failures = [c for c in checks if not c.holds]
    by_name: dict[str, float] = {}
    for c in checks:
        key = c.name.split("[", 1)[0]
        by_name[key] = min(by_name.get(key, float("inf")), c.margin)
    return {
        "checks": len(checks),
        "failures": failures,
        "min_margin": by_name,
        "passed": not failures,
    }


def _graph_sources(args) -> list[tuple[str, Graph]]:
    if args.input:
        g, desc = load_input(args.input)
        return [(desc, g)]
    return [(e.name, e.graph) for e in corpus.full_corpus(args.count, args.max_n, args.seed)]


def suite_starlike_bounds(args) -> dict:
    specs = [StarlikeSpec(tuple(args.branches))] if args.branches else corpus.random_starlike_specs(args.count)
    checks = []
    for spec in specs:
        s = eig_symmetric(laplacian(gen.starlike(spec)))
        checks += verify.check_starlike_bounds(spec, s)
    return {"samples": len(specs), **_summarise(checks)}


def suite_general_bounds(args) -> dict:
    checks = []
    graphs = 0
    for desc, g in _graph_sources(args):
        if not is_connected(g):
            continue
        graphs += 1
        s = eig_symmetric(laplacian(g))
        checks += verify.check_general_bounds(g, s, desc)
        checks += verify.check_localization(g, s, context=desc)
    return {"graphs": graphs, **_summarise(checks)}


def suite_guo(args) -> dict:
    checks = []
    trees = 0
    for desc, g in _graph_sources(args):
        if not is_tree(g):
            continue
        trees += 1
        checks += verify.check_guo(eig_symmetric(laplacian(g)), g.n, desc)
    return {"trees": trees, **_summarise(checks)}


def suite_decay(args) -> dict:
    certs = []
    for desc, g in _graph_sources(args):
        s = eig_symmetric(laplacian(g))
        certs += [(desc, c) for c in verify.decay_certificates(g, s)]
    failed = [
        {"graph": d, **report.certificate_record(c)} for d, c in certs if not c.passed
    ]
    return {
        "certificates": len(certs),
        "zero_branch": sum(c.zero_branch for _, c in certs),
        "failures": failed,
        "passed": not failed,
    }


def suite_perturbation(args) -> dict:
    cases = [(j.name, j.graph, j.blocks) for j in corpus.random_path_joined(args.count, args.seed)]
    m = args.m if args.m is not None else 5
    ell = args.l if args.l is not None else 5
    cases.append(
        (f"counterexample(m={m}, l={ell})", gen.counterexample_graph(m, ell), gen.counterexample_blocks(m, ell))
    )
    rows, failed = [], []
    for name, g, blocks in cases:
        p = verify.perturbation_check(g, blocks)
        row = {
            "graph": name,
            "l2": p.l2,
            "lam_tilde": p.lam_tilde,
            "lam": p.lam,
            "gap": p.gap,
            "bound": p.bound,
            "holds": p.holds,
        }
        rows.append(row)
        if not p.holds:
            failed.append(row)
    return {"cases": rows, "failures": failed, "passed": not failed}


def suite_prufer_sweep(args) -> dict:
    if args.n is None:
        raise UsageError("prufer-sweep requires --n")
    try:
        rep = sweep.enumerate_prufer_sweep(args.n, args.predicate, jobs=args.jobs)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return {
        "n": rep.n,
        "predicate": rep.predicate,
        "trees": rep.trees,
        "satisfied": rep.satisfied,
        "eig4_trees": rep.eig4_trees,
        "violations": rep.violation_count,
        "offending_sequences": rep.violations[:100],
        "jobs": rep.jobs,
        "elapsed_s": round(rep.elapsed_s, 3),
        "passed": rep.passed if args.predicate != "has-eig4" else True,
    }


def suite_lattice_mult(args) -> dict:
    if args.n is None or args.d is None:
        raise UsageError("lattice-mult requires --n and --d")
    counted = verify.lattice_multiplicity_4(args.n, args.d)
    out = {"n": args.n, "d": args.d, "count": counted}
    ok = True
    if args.n**args.d <= 10**6:
        spectral = verify.lattice_multiplicity_spectral(args.n, args.d)
        out["spectral"] = spectral
        ok = spectral == counted
    if args.d == 1:
        out["expected"] = 0
    elif args.d == 2:
        out["expected"] = args.n - 1
    if "expected" in out:
        ok = ok and counted == out["expected"]
    out["passed"] = ok
    return out


def suite_counterexample(args) -> dict:
    m = 5 if args.m is None else args.m
    ell = 5 if args.l is None else args.l
    c = verify.verify_counterexample(m, ell)
    return {"m": m, "l": ell, "check": c, "passed": c.holds}


def suite_eig4_structure(args) -> dict:
    if args.input:
        g, desc = load_input(args.input)
    else:
        m = 3 if args.m is None else args.m
        g, desc = gen.claw_chain(m), f"claw-chain(m={m})"
    s = eig_symmetric(laplacian(g))
    try:
        c = verify.verify_eigenvalue4_structure(g, s)
    except (GraphError, ValueError) as exc:
        raise UsageError(f"{desc}: {exc}") from None
    return {"graph": desc, "check": c, "passed": c.holds}


SUITE_RUNNERS = {
    "starlike-bounds": suite_starlike_bounds,
    "general-bounds": suite_general_bounds,
    "guo": suite_guo,
    "decay": suite_decay,
    "perturbation": suite_perturbation,
    "prufer-sweep": suite_prufer_sweep,
    "lattice-mult": suite_lattice_mult,
    "counterexample": suite_counterexample,
    "eig4-structure": suite_eig4_structure,
}


def cmd_verify(args) -> int:
    result = SUITE_RUNNERS[args.suite](args)
    out = {"schema": report.SCHEMA_VERSION, "suite": args.suite, "tolerance": eq_tol(), **result}
    emit(report.dumps(out), args.output)
    return EXIT_OK if result["passed"] else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="lapspec", description="Graph Laplacian spectra and localisation checks.")
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("generate", help="write a generated graph as an edge list")
    g.add_argument("family", choices=FAMILIES)
    g.add_argument("--n", type=int)
    g.add_argument("--k", type=int)
    g.add_argument("--m", type=int)
    g.add_argument("--l", type=int, help="path length for the counterexample family")
    g.add_argument("--d", type=int)
    g.add_argument("--length", type=int)
    g.add_argument("--leaves", type=int)
    g.add_argument("--branches", type=int_list)
    g.add_argument("--seq", type=int_list)
    g.add_argument("-o", "--output")
    g.set_defaults(func=cmd_generate)

    s = sub.add_parser("spectrum", help="eigenvalues (and vectors) of the Laplacian")
    s.add_argument("input")
    s.add_argument("--format", choices=("csv", "json"), default="csv")
    s.add_argument("--vectors", action="store_true")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_spectrum)

    a = sub.add_parser("analyze", help="JSON analysis report")
    a.add_argument("input")
    a.add_argument("--plot-data", metavar="CSV")
    a.add_argument("--svg", metavar="FILE")
    a.add_argument("-o", "--output")
    a.set_defaults(func=cmd_analyze)

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("suite", choices=SUITES)
    v.add_argument("--input", help="edge-list file instead of the built-in corpus")
    v.add_argument("--n", type=int)
    v.add_argument("--d", type=int)
    v.add_argument("--m", type=int)
    v.add_argument("--l", type=int)
    v.add_argument("--branches", type=int_list)
    v.add_argument("--predicate", choices=sorted(sweep.PREDICATES), default="eig4-iff-claw-spanned")
    v.add_argument("--jobs", type=int, default=1)
    v.add_argument("--count", type=int, default=None, help="random sample count")
    v.add_argument("--max-n", type=int, default=40)
    v.add_argument("--seed", type=int, default=None)
    v.add_argument("-o", "--output")
    v.set_defaults(func=cmd_verify)
    return p


def _fill_defaults(args) -> None:
    # suite-specific defaults for the random corpora
    if getattr(args, "suite", None) is None:
        return
    if args.suite == "perturbation":
        args.count = 50 if args.count is None else args.count
        args.seed = 6 if args.seed is None else args.seed
    elif args.suite == "starlike-bounds":
        args.count = 200 if args.count is None else args.count
    else:
        args.count = 500 if args.count is None else args.count
        args.seed = 2012 if args.seed is None else args.seed


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    try:
        eq_tol()
        _fill_defaults(args)
        return args.func(args)
    except (UsageError, GraphError, ValueError) as exc:
        print(f"lapspec: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ConvergenceError as exc:
        print(f"lapspec: error: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
