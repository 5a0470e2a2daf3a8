import numpy as np
import pytest

from lapspec import generators as gen
from lapspec.graph import laplacian
from lapspec.sweep import (
    PREDICATES,
    decode_batch,
    enumerate_prufer_sweep,
    laplacian_batch,
    prufer_sequences,
)


@pytest.mark.parametrize("n", [3, 5, 7])
def test_batch_decode_matches_scalar(n):
    total = n ** (n - 2)
    seqs = prufer_sequences(0, total, n)
    edges = decode_batch(seqs, n)
    Ls = laplacian_batch(edges, n)
    for r in range(0, total, max(1, total // 200)):
        assert seqs[r].tolist() == gen.prufer_unrank(r, n)
        g = gen.prufer_decode(seqs[r].tolist(), n)
        assert np.array_equal(Ls[r], laplacian(g))


def test_sequences_offset_range():
    assert prufer_sequences(5, 7, 4).tolist() == [[1, 1], [1, 2]]


def test_n4_only_claws_have_eigenvalue_4():
    rep = enumerate_prufer_sweep(4, "has-eig4")
    assert rep.trees == 16 and rep.satisfied == 4 and rep.eig4_trees == 4
    qualifying = [s for s in (gen.prufer_unrank(r, 4) for r in range(16)) if s not in rep.violations]
    assert sorted(qualifying) == [[0, 0], [1, 1], [2, 2], [3, 3]]


def test_n4_iff_claw_spanned():
    rep = enumerate_prufer_sweep(4)
    assert rep.passed and rep.violation_count == 0


def test_n5_count_bound():
    rep = enumerate_prufer_sweep(5, "count-bound")
    assert rep.trees == 125 and rep.passed


@pytest.mark.parametrize("n", [5, 6])
def test_no_eigenvalue_4_without_4_dividing_n(n):
    rep = enumerate_prufer_sweep(n, "has-eig4")
    assert rep.eig4_trees == 0


def test_parallel_matches_serial():
    a = enumerate_prufer_sweep(6, "count-bound", jobs=1)
    b = enumerate_prufer_sweep(6, "count-bound", jobs=3)
    assert (a.trees, a.satisfied, a.violations) == (b.trees, b.satisfied, b.violations)
    assert b.jobs == 3


def test_range_and_predicate_errors():
    with pytest.raises(ValueError):
        enumerate_prufer_sweep(10)
    with pytest.raises(ValueError):
        enumerate_prufer_sweep(1)
    with pytest.raises(ValueError):
        enumerate_prufer_sweep(4, "nope")
    assert set(PREDICATES) >= {"has-eig4", "count-bound"}
