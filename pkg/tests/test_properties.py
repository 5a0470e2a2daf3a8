import numpy as np
from hypothesis import given, settings
from hypothesis import strategies as st

from lapspec import generators as gen
from lapspec.analysis import branch_behavior, count_in_interval, localization_vertex
from lapspec.eigen import eig_symmetric, gerschgorin_disks, spectrum_health
from lapspec.graph import build_graph, is_connected, is_tree, laplacian, parse_edge_list, serialize_edge_list
from lapspec.verify import check_guo, decay_certificates

SETTINGS = settings(max_examples=60, deadline=None)


@st.composite
def trees(draw, max_n=30):
    n = draw(st.integers(2, max_n))
    seq = draw(st.lists(st.integers(0, n - 1), min_size=n - 2, max_size=n - 2))
    return gen.prufer_decode(seq, n)


@st.composite
def connected_graphs(draw, max_n=20):
    t = draw(trees(max_n))
    extra = draw(st.lists(st.tuples(st.integers(0, t.n - 1), st.integers(0, t.n - 1)), max_size=2 * t.n))
    return build_graph(t.n, list(t.edges) + [(u, v) for u, v in extra if u != v])


@SETTINGS
@given(connected_graphs())
def test_laplacian_invariants(g):
    L = laplacian(g)
    assert np.array_equal(L, L.T)
    assert not L.sum(axis=1).any()
    assert sum(g.degrees) == 2 * g.m


@SETTINGS
@given(connected_graphs())
def test_solver_health(g):
    L = laplacian(g)
    s = eig_symmetric(L)
    h = spectrum_health(L, s)
    assert h.max_residual <= 1e-8 and h.max_orthogonality <= 1e-8
    assert h.max_norm_defect <= 1e-10 and h.sorted
    assert h.min_eigenvalue >= -1e-9
    assert h.trace_defect <= 1e-8 * g.n
    assert count_in_interval(s, 0.0) == g.n


@SETTINGS
@given(connected_graphs())
def test_argmax_disk_contains_eigenvalue(g):
    s = eig_symmetric(laplacian(g))
    disks = gerschgorin_disks(laplacian(g))
    for k, lam in enumerate(s.eigenvalues):
        v = localization_vertex(s, k)
        assert disks[v].contains(float(lam), tol=1e-9)
        if lam > 4 + 1e-8:
            assert g.degrees[v] > 2


@SETTINGS
@given(trees())
def test_tree_spectral_facts(g):
    assert is_tree(g)
    s = eig_symmetric(laplacian(g))
    assert abs(s.eigenvalues[0]) <= 1e-9 and s.eigenvalues[1] > 1e-9
    assert count_in_interval(s, 4.0) <= len(g.high_degree_vertices())
    assert all(c.holds for c in check_guo(s, g.n))
    assert all(c.passed for c in decay_certificates(g, s))


@SETTINGS
@given(connected_graphs())
def test_edge_list_roundtrip(g):
    assert parse_edge_list(serialize_edge_list(g, comment="x")) == g
    assert is_connected(g)


@SETTINGS
@given(st.floats(0.0, 100.0, allow_nan=False))
def test_regime_matches_discriminant(lam):
    b = branch_behavior(lam)
    if b.regime == "exponential":
        assert b.discriminant > 0
        r1, r2 = b.roots
        assert abs(abs(r1) * abs(r2) - 1) <= 1e-12
    elif b.regime == "oscillatory":
        assert b.discriminant < 0 and 0 < b.frequency < np.pi
    else:
        assert abs(b.discriminant) <= 1e-6


@SETTINGS
@given(st.integers(1, 6), st.integers(1, 3))
def test_lattice_product_degrees(n, d):
    g = gen.lattice(n, d)
    assert g.n == n**d
    assert g.m == d * (n - 1) * n ** (d - 1)
