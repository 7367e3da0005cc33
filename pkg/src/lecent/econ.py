"""Adaptation-versus-coordination network game.

Agents choose ``a`` to trade off tracking their state ``theta`` against
matching neighbours with strength ``beta``; the equilibrium solves
``(I + beta L) a = theta``. On top of it: shock attenuation along Laplacian
eigenvectors, the public-disclosure rule, and single-agent targeting.
"""

from __future__ import annotations

import json
import warnings
from dataclasses import dataclass

import numpy as np
from scipy.linalg import cho_factor, cho_solve

from .graph import Graph, adjacency, degrees, laplacian
from .lec import ScoreVector, weighted_layers
from .spectral import Spectrum, spectrum_of


@dataclass(frozen=True)
class EconScenario:
    beta: float
    theta: np.ndarray
    beta_tilde: float = 0.0
    feasible_targets: tuple[int, ...] | None = None

    def __post_init__(self):
        if self.beta < 0:
            raise ValueError(f"beta must be >= 0, got {self.beta}")
        if self.beta_tilde < 0:
            raise ValueError(f"beta_tilde must be >= 0, got {self.beta_tilde}")

    @classmethod
    def from_json(cls, text: str, g: Graph, spectrum: Spectrum | None = None) -> EconScenario:
        """Parse ``{"beta", "theta", "beta_tilde", "targets"}``.

        ``theta`` is a list of numbers or one of ``uniform``, ``eigvec:k``,
        ``unit:<label>``; ``targets`` are node labels (default: all nodes).
        """
        raw = json.loads(text)
        theta = named_shock(raw.get("theta", "uniform"), g, spectrum)
        targets = raw.get("targets")
        if targets is not None:
            targets = tuple(g.index(str(t)) for t in targets)
        return cls(float(raw["beta"]), theta, float(raw.get("beta_tilde", 0.0)), targets)


def named_shock(spec, g: Graph, spectrum: Spectrum | None = None) -> np.ndarray:
    """State vector from a list or a name (``uniform``, ``eigvec:k``, ``unit:<label>``)."""
    if not isinstance(spec, str):
        theta = np.asarray(spec, dtype=float)
        if theta.shape != (g.n,):
            raise ValueError(f"theta must have length {g.n}, got shape {theta.shape}")
        return theta
    name, _, arg = spec.partition(":")
    if name == "uniform":
        return np.ones(g.n)
    if name == "unit":
        e = np.zeros(g.n)
        e[g.index(arg)] = 1.0
        return e
    if name == "eigvec":
        s = spectrum if spectrum is not None else spectrum_of(g)
        k = int(arg)
        if not (1 <= k <= g.n):
            raise ValueError(f"eigvec index must lie in [1, {g.n}], got {k}")
        return np.array(s.vectors[:, k - 1])
    raise ValueError(f"unknown shock {spec!r}")


def _system(g: Graph, beta: float):
    if beta < 0:
        raise ValueError(f"beta must be >= 0, got {beta}")
    return cho_factor(np.eye(g.n) + beta * laplacian(g))


def equilibrium(g: Graph, beta: float, theta) -> np.ndarray:
    """Equilibrium actions ``(I + beta L)^{-1} theta`` via Cholesky."""
    theta = np.asarray(theta, dtype=float)
    if theta.shape != (g.n,):
        raise ValueError(f"theta must have length {g.n}, got shape {theta.shape}")
    return cho_solve(_system(g, beta), theta)


def best_responses(g: Graph, beta: float, a, theta) -> np.ndarray:
    a = np.asarray(a, dtype=float)
    theta = np.asarray(theta, dtype=float)
    return (theta + beta * (adjacency(g) @ a)) / (1.0 + beta * degrees(g))


def best_response_check(g: Graph, beta: float, a, theta) -> float:
    """Largest deviation of ``a`` from each agent's best response."""
    a = np.asarray(a, dtype=float)
    if a.shape != (g.n,):
        raise ValueError(f"a must have length {g.n}, got shape {a.shape}")
    return float(np.abs(a - best_responses(g, beta, a, theta)).max())


def attenuation_factors(s: Spectrum, beta: float) -> np.ndarray:
    """``1 / (1 + beta lambda_j)`` per eigenvector column."""
    return 1.0 / (1.0 + beta * s.values)


@dataclass(frozen=True)
class ShockResult:
    direction: np.ndarray
    value: float


def min_deviation_shock(s: Spectrum, beta: float) -> ShockResult:
    """Unit shock minimising equilibrium ``a'a``: the top Laplacian eigenvector."""
    factor = 1.0 / (1.0 + beta * s.values[0])
    return ShockResult(np.array(s.vectors[:, 0]), float(factor**2))


def disclosure_set(s: Spectrum, beta: float, beta_tilde: float) -> list[int]:
    """Statistics ``m_k = q_k' theta`` the principal discloses.

    ``m_k`` (``k = 1..n-1``) is disclosed when
    ``1/(2n) + beta lambda_k / n >= beta_tilde``; the constant statistic
    ``m_0`` joins whenever any other statistic is disclosed. The comparison
    allows ``1e-12`` relative slack for eigenvalue round-off.
    """
    n = s.n
    lhs = 1.0 / (2 * n) + beta * s.values[:-1] / n
    slack = 1e-12 * max(1.0, abs(beta_tilde))
    chosen = [k + 1 for k in np.flatnonzero(lhs >= beta_tilde - slack)]
    if 1.0 / (2 * n) >= beta_tilde - slack or chosen:
        chosen = [0] + chosen
    return chosen


def informativeness_matrix(s: Spectrum, r: int) -> np.ndarray:
    """``Qr (Qr' Qr)^{-1} Qr'`` for ``Qr = [q_0, q_1..q_r]``.

    If ``r`` splits a block of repeated eigenvalues the whole block is used
    (the projection is only basis-free at block boundaries) and a warning is
    issued.
    """
    n = s.n
    if not (0 <= r <= n - 1):
        raise ValueError(f"order must lie in [0, {n - 1}], got {r}")
    if 0 < r < n - 1:
        lo, hi = s.group_of(r - 1)
        if hi != r:
            warnings.warn(f"order {r} splits an eigenvalue block; using order {hi}", stacklevel=2)
            r = hi
    qr = np.column_stack([s.vectors[:, -1], s.vectors[:, :r]])
    gram = qr.T @ qr
    return qr @ np.linalg.solve(gram, qr.T)


def informativeness_diag(s: Spectrum, r: int) -> ScoreVector:
    m = informativeness_matrix(s, r)
    return ScoreVector("informativeness", np.diag(m).copy(), {"order": int(r)})


def targeting_weights(s: Spectrum, beta: float) -> np.ndarray:
    """``1 - (1 / (1 + beta lambda_j))^2`` per non-constant eigenvector column."""
    return 1.0 - attenuation_factors(s, beta)[:-1] ** 2


def targeting_scores(s: Spectrum, beta: float) -> ScoreVector:
    """Net loss reduction ``phi(i)`` from neutralising the shock at agent ``i``."""
    if beta < 0:
        raise ValueError(f"beta must be >= 0, got {beta}")
    phi = weighted_layers(s, 0.0, targeting_weights(s, beta))
    return ScoreVector("targeting", phi, {"beta": beta})


def quadratic_loss(g: Graph, beta: float, theta) -> float:
    """Social loss ``a'a`` at the equilibrium for state ``theta``."""
    a = equilibrium(g, beta, theta)
    return float(a @ a)


def social_loss_after_target(g: Graph, beta: float, i: int, spectrum: Spectrum | None = None,
                             method: str = "spectral") -> float:
    """Loss after a uniform unit shock with agent ``i`` neutralised.

    ``spectral`` evaluates ``n - 1 - phi(i)``; ``direct`` solves the
    equilibrium for ``1 - e_i`` and returns ``a'a``.
    """
    if not (0 <= i < g.n):
        raise IndexError(f"node index {i} out of range")
    if method == "direct":
        theta = np.ones(g.n)
        theta[i] = 0.0
        return quadratic_loss(g, beta, theta)
    if method != "spectral":
        raise ValueError(f"unknown method {method!r}")
    s = spectrum if spectrum is not None else spectrum_of(g)
    return float(g.n - 1 - targeting_scores(s, beta).scores[i])


def optimal_target(g: Graph, beta: float, targets=None, spectrum: Spectrum | None = None,
                   tie_tol: float = 1e-10) -> int:
    """Feasible node with the largest ``phi``; near-ties go to the smallest index."""
    targets = list(range(g.n)) if targets is None else sorted(int(t) for t in targets)
    if not targets:
        raise ValueError("feasible target set is empty")
    s = spectrum if spectrum is not None else spectrum_of(g)
    phi = targeting_scores(s, beta).scores
    best = max(phi[t] for t in targets)
    return next(t for t in targets if phi[t] >= best - tie_tol)
