import numpy as np
import pytest

from gridres import Explicit, Hypercube, Ring, SizeExceeded, Torus, build_laplacian


def test_single_edge():
    lap = build_laplacian(Explicit(2, [(0, 1)]))
    assert lap.matrix.tolist() == [[1.0, -1.0], [-1.0, 1.0]]


def test_hypercube2_is_four_cycle():
    lap = build_laplacian(Hypercube(2))
    assert lap.n == 4
    assert np.all(np.diag(lap.matrix) == 2.0)
    # the four-cycle: every node has exactly two -1 entries
    off = lap.matrix - np.diag(np.diag(lap.matrix))
    assert np.all(off.sum(axis=1) == -2.0)


def test_torus33_structure():
    lap = build_laplacian(Torus((3, 3)))
    assert lap.n == 9
    assert np.all(np.diag(lap.matrix) == 4.0)
    off = lap.matrix - np.diag(np.diag(lap.matrix))
    assert np.all((off == 0.0) | (off == -1.0))
    assert np.all((off == -1.0).sum(axis=1) == 4)


@pytest.mark.parametrize(
    "family,degree",
    [(Ring(5), 2), (Torus((3, 4, 5)), 6), (Hypercube(4), 4)],
)
def test_degrees(family, degree):
    lap = build_laplacian(family)
    assert np.all(np.diag(lap.matrix) == degree)


def test_invariants_hold():
    for family in (Ring(6), Torus((3, 5)), Hypercube(3), Explicit(4, [(0, 1), (1, 2), (2, 3)])):
        lap = build_laplacian(family)
        lap.validate()
        assert np.all(lap.matrix.sum(axis=1) == 0.0)
        assert np.array_equal(lap.matrix, lap.matrix.T)


def test_dense_limit():
    with pytest.raises(SizeExceeded):
        build_laplacian(Hypercube(13))
    with pytest.raises(SizeExceeded):
        build_laplacian(Torus((3, 3)), dense_limit=8)


def test_single_node():
    lap = build_laplacian(Hypercube(0))
    assert lap.matrix.tolist() == [[0.0]]
