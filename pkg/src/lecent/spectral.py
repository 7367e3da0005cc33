"""Dense Laplacian eigendecomposition in descending order with multiplicity groups.

Column ``k`` of ``Spectrum.vectors`` (0-based) is the eigenvector of the
``k+1``-th largest eigenvalue; the last column is always the exact constant
vector ``1/sqrt(n)``, which doubles as the order-0 layer of LEC.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass

import numpy as np
from scipy.sparse.csgraph import connected_components

from .graph import Graph, laplacian

DEFAULT_TOL = 1e-8
DEFAULT_GROUP_TOL = 1e-8


class DecompositionError(ValueError):
    """The input is not a Laplacian or the eigensolver failed."""


@dataclass(frozen=True)
class Spectrum:
    """Laplacian spectrum, eigenvalues descending.

    ``groups`` lists half-open column ranges ``(start, stop)`` over columns
    ``0..n-2`` (the non-constant eigenvectors); each range is a maximal run of
    numerically equal eigenvalues.
    """

    values: np.ndarray
    vectors: np.ndarray
    groups: tuple[tuple[int, int], ...]

    @property
    def n(self) -> int:
        return len(self.values)

    @property
    def lambda_max(self) -> float:
        return float(self.values[0]) if self.n else 0.0

    def group_of(self, col: int) -> tuple[int, int]:
        for start, stop in self.groups:
            if start <= col < stop:
                return start, stop
        raise IndexError(f"column {col} is not a non-constant eigenvector")

    def with_vectors(self, vectors: np.ndarray) -> Spectrum:
        """Same eigenvalues and grouping with a different eigenbasis."""
        return Spectrum(self.values, _frozen(vectors), self.groups)


def _frozen(a: np.ndarray) -> np.ndarray:
    a = np.array(a, dtype=float)
    a.setflags(write=False)
    return a


def group_indices(values: np.ndarray, group_tol: float = DEFAULT_GROUP_TOL) -> tuple[tuple[int, int], ...]:
    """Partition descending ``values[:-1]`` into runs of equal eigenvalues.

    A run is anchored at its first (largest) value and extends while the
    spread stays within ``group_tol * max(1, values[0])``.
    """
    m = len(values) - 1
    if m <= 0:
        return ()
    tol = group_tol * max(1.0, float(values[0]))
    groups = []
    start = 0
    for k in range(1, m):
        if values[start] - values[k] > tol:
            groups.append((start, k))
            start = k
    groups.append((start, m))
    return tuple(groups)


def _zero_space_basis(comps: list[np.ndarray], n: int) -> list[np.ndarray]:
    """Orthonormal basis of component indicators orthogonal to the constant vector.

    Helmert-style: vector ``k`` contrasts the union of components ``0..k-1``
    with component ``k``.
    """
    out = []
    prefix = np.zeros(n, dtype=bool)
    prefix[comps[0]] = True
    n_prefix = len(comps[0])
    for comp in comps[1:]:
        v = np.zeros(n)
        v[prefix] = len(comp)
        v[comp] = -n_prefix
        out.append(v / np.linalg.norm(v))
        prefix[comp] = True
        n_prefix += len(comp)
    return out


def eigendecompose(lap, tol: float = DEFAULT_TOL, group_tol: float = DEFAULT_GROUP_TOL) -> Spectrum:
    """Full eigendecomposition of a graph Laplacian.

    Each connected component is decomposed separately, so eigenvectors of
    nonzero eigenvalues vanish exactly outside their component and the zero
    eigenspace is spanned exactly by component indicators.

    Parameters
    ----------
    lap : array_like or Graph
        Symmetric matrix with zero row sums (a :class:`Graph` is converted).
    tol : float
        Relative tolerance for the validity checks and the clamp of small
        negative eigenvalues.
    group_tol : float
        Relative tolerance for multiplicity grouping.
    """
    if isinstance(lap, Graph):
        lap = laplacian(lap)
    lap = np.asarray(lap, dtype=float)
    if lap.ndim != 2 or lap.shape[0] != lap.shape[1]:
        raise DecompositionError(f"expected a square matrix, got shape {lap.shape}")
    n = lap.shape[0]
    if n == 0:
        raise DecompositionError("empty matrix")
    if not np.array_equal(lap, lap.T):
        raise DecompositionError("matrix is not symmetric")
    scale = max(1.0, float(np.abs(lap).max()))
    if np.abs(lap.sum(axis=1)).max() > tol * scale:
        raise DecompositionError("row sums are not zero; not a Laplacian")

    ncomp, label = connected_components(lap != 0, directed=False)
    comps = [np.flatnonzero(label == c) for c in range(ncomp)]

    vals, vecs = [], []
    for comp in comps:
        if len(comp) == 1:
            continue
        sub = lap[np.ix_(comp, comp)]
        try:
            w, v = np.linalg.eigh(sub)
        except np.linalg.LinAlgError as exc:
            raise DecompositionError(f"eigensolver failed: {exc}") from exc
        # a connected Laplacian has exactly one zero eigenvalue, the smallest
        limit = tol * max(1.0, float(w[-1]))
        if abs(w[0]) > limit:
            raise DecompositionError(f"smallest eigenvalue {w[0]:.3e} of a component is not zero")
        if w[1] < -limit:
            raise DecompositionError(f"negative eigenvalue {w[1]:.3e}")
        for k in range(1, len(comp)):
            full = np.zeros(n)
            full[comp] = v[:, k]
            vals.append(max(float(w[k]), 0.0))
            vecs.append(full)

    for z in _zero_space_basis(comps, n):
        vals.append(0.0)
        vecs.append(z)

    values = np.array(vals + [0.0])
    matrix = np.column_stack(vecs + [np.full(n, 1.0 / np.sqrt(n))])
    # stable sort keeps the constant vector last among the zero eigenvalues
    order = np.argsort(-values, kind="stable")
    values = values[order]
    matrix = matrix[:, order]
    return Spectrum(_frozen(values), _frozen(matrix), group_indices(values, group_tol))


def spectrum_of(g: Graph, **kwargs) -> Spectrum:
    return eigendecompose(laplacian(g), **kwargs)


def cumulative_fractions(s: Spectrum) -> np.ndarray:
    """Fractions for every order ``k = 0..n-1``.

    An all-zero spectrum (edgeless graph) saturates at 1 from ``k = 1``.
    """
    total = float(s.values.sum())
    if total <= 0.0:
        out = np.ones(s.n)
        out[0] = 0.0
        return out
    out = np.concatenate([[0.0], np.cumsum(s.values[:-1]) / total])
    out[-1] = 1.0
    return out


def cumulative_fraction(s: Spectrum, k: int) -> float:
    """Share of the eigenvalue total carried by the ``k`` largest eigenvalues."""
    if not (0 <= k <= s.n - 1):
        raise ValueError(f"order k must lie in [0, {s.n - 1}], got {k}")
    return float(cumulative_fractions(s)[k])


def spectral_gap_profile(s: Spectrum) -> np.ndarray:
    """Consecutive differences ``lambda_i - lambda_{i+1}``, length ``n-1``."""
    return np.clip(-np.diff(s.values), 0.0, None)


def spectrum_rows(s: Spectrum) -> list[tuple[int, float, float]]:
    """``(i, lambda_i, share of the i largest eigenvalues)`` for ``i = 1..n``."""
    fr = np.append(cumulative_fractions(s)[1:], 1.0)
    return [(i, float(lam), float(f)) for i, (lam, f) in enumerate(zip(s.values, fr), start=1)]


def spectrum_csv(s: Spectrum) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["index", "eigenvalue", "cumulative_fraction"])
    for i, lam, f in spectrum_rows(s):
        w.writerow([i, repr(lam), repr(f)])
    return buf.getvalue()


def eigenvectors_csv(s: Spectrum, labels=None) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["label"] + [f"q{i}" for i in range(1, s.n + 1)])
    labels = labels if labels is not None else [str(i) for i in range(s.n)]
    for lab, row in zip(labels, s.vectors):
        w.writerow([lab] + [repr(float(x)) for x in row])
    return buf.getvalue()
