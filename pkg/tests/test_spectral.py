import numpy as np
import pytest
from hypothesis import given, settings

from lecent.graph import Graph, complete, laplacian, path, star
from lecent.spectral import (DecompositionError, cumulative_fraction, cumulative_fractions,
                             eigendecompose, eigenvectors_csv, group_indices, spectral_gap_profile,
                             spectrum_csv, spectrum_of)

from conftest import graphs
from oracles import jacobi_eigenvalues


def test_star4_eigenvalues():
    lap = laplacian(star(4))
    # hand solver and trace identity (sum of eigenvalues = sum of degrees = 6)
    expected = jacobi_eigenvalues(lap)
    assert np.allclose(expected, [4, 1, 1, 0], atol=1e-12)
    s = spectrum_of(star(4))
    assert np.allclose(s.values, [4, 1, 1, 0], atol=1e-12)
    assert s.values.sum() == pytest.approx(np.trace(lap))


def test_star4_top_vector_is_hub_contrast():
    q = np.array([3, -1, -1, -1]) / np.sqrt(12)
    lap = laplacian(star(4))
    assert np.allclose(lap @ q, 4 * q)
    s = spectrum_of(star(4))
    assert np.allclose(np.abs(s.vectors[:, 0]), np.abs(q))


def test_complete3_eigenvalues():
    assert np.allclose(jacobi_eigenvalues(laplacian(complete(3))), [3, 3, 0], atol=1e-12)
    assert np.allclose(spectrum_of(complete(3)).values, [3, 3, 0])


@pytest.mark.parametrize("n", [2, 5, 9])
def test_complete_eigenvalues(n):
    s = spectrum_of(complete(n))
    assert np.allclose(s.values[:-1], n)
    assert s.values[-1] == 0
    assert s.groups == ((0, n - 1),)


def test_isolated_nodes_zero_multiplicity():
    g = Graph.from_edges(7, [(0, 1), (1, 2), (2, 3), (3, 4)])  # two isolated nodes
    s = spectrum_of(g)
    assert np.count_nonzero(s.values == 0) == 3
    for col in range(s.n - 3):
        assert s.vectors[5, col] == 0 and s.vectors[6, col] == 0


def test_constant_vector_exact():
    s = spectrum_of(path(5))
    assert np.array_equal(s.vectors[:, -1], np.full(5, 1 / np.sqrt(5)))


def test_cumulative_fraction_examples():
    s = spectrum_of(star(4))
    assert cumulative_fraction(s, 1) == pytest.approx(4 / 6, abs=1e-12)
    assert cumulative_fraction(s, 0) == 0
    assert cumulative_fraction(s, 3) == 1
    with pytest.raises(ValueError):
        cumulative_fraction(s, 4)
    k3 = spectrum_of(complete(3))
    assert np.allclose(cumulative_fractions(k3), [0, 0.5, 1])


def test_cumulative_fraction_edgeless():
    s = spectrum_of(Graph.from_edges(3, []))
    assert cumulative_fractions(s).tolist() == [0, 1, 1]


def test_gap_profile_examples():
    assert np.allclose(spectral_gap_profile(spectrum_of(star(4))), [3, 0, 1])
    assert np.allclose(spectral_gap_profile(spectrum_of(complete(3))), [0, 3])
    assert np.allclose(spectral_gap_profile(spectrum_of(path(2))), [2])


def test_rejects_non_laplacian():
    with pytest.raises(DecompositionError):
        eigendecompose(np.array([[1.0, 2.0], [0.0, 1.0]]))
    with pytest.raises(DecompositionError):
        eigendecompose(np.array([[1.0, 0.0], [0.0, 1.0]]))
    with pytest.raises(DecompositionError):
        eigendecompose(np.ones((2, 3)))


def test_group_indices():
    vals = np.array([5.0, 3.0, 3.0 + 1e-12, 3.0, 1.0, 0.0, 0.0])
    assert group_indices(vals[np.argsort(-vals)]) == ((0, 1), (1, 4), (4, 5), (5, 6))


@given(graphs(max_n=16))
@settings(max_examples=80, deadline=None)
def test_decomposition_invariants(g):
    s = spectrum_of(g)
    lap = laplacian(g)
    q, lam = s.vectors, s.values
    scale = max(1.0, lam[0])
    assert np.all(np.diff(lam) <= 0)
    assert lam[-1] == 0 and np.all(lam >= 0)
    assert np.abs(q.T @ q - np.eye(g.n)).max() <= 1e-8
    assert np.abs(lap @ q - q * lam).max() <= 1e-7 * scale
    assert np.abs(q @ np.diag(lam) @ q.T - lap).max() <= 1e-8 * scale
    # groups partition columns 0..n-2 with the stated spreads
    cols = [c for a, b in s.groups for c in range(a, b)]
    assert cols == list(range(g.n - 1))
    tol = 1e-8 * scale
    for a, b in s.groups:
        assert lam[a] - lam[b - 1] <= tol
    for (a, b), (c, _) in zip(s.groups, s.groups[1:]):
        assert lam[b - 1] - lam[c] > tol


def test_orthonormal_at_n600():
    from lecent.randnet import GenSpec

    g = GenSpec.er_avgdeg(600, 8, 11).generate()
    s = spectrum_of(g)
    assert np.abs(s.vectors.T @ s.vectors - np.eye(600)).max() <= 1e-8
    lap = laplacian(g)
    assert np.abs(lap @ s.vectors - s.vectors * s.values).max() <= 1e-7 * s.values[0]


def test_spectrum_is_immutable():
    s = spectrum_of(star(4))
    with pytest.raises(ValueError):
        s.values[0] = 1


def test_exports():
    s = spectrum_of(complete(3))
    text = spectrum_csv(s)
    lines = text.splitlines()
    assert lines[0] == "index,eigenvalue,cumulative_fraction"
    assert len(lines) == 4
    assert eigenvectors_csv(s, ["a", "b", "c"]).splitlines()[0] == "label,q1,q2,q3"
