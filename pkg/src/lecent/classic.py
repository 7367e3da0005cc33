"""Classical comparison centralities.

Decay-based measures take ``decay`` as a fraction of the adjacency spectral
radius ``mu``, so the default 0.8 means an attenuation of ``0.8 / mu``.
Zero-degree nodes are kept everywhere and score 0 on adjacency-based measures.
"""

from __future__ import annotations

from collections import deque

import numpy as np
from scipy.sparse.csgraph import shortest_path

from .graph import Graph, adjacency, degrees
from .lec import ScoreVector

DEFAULT_DECAY = 0.8


class CentralityError(ValueError):
    pass


def spectral_radius(a: np.ndarray) -> float:
    if a.size == 0:
        return 0.0
    return max(float(np.linalg.eigvalsh(a)[-1]), 0.0)


def _check_decay(decay: float) -> None:
    if not (0 <= decay < 1):
        raise CentralityError(f"decay must lie in [0, 1), got {decay}")


def degree_centrality(g: Graph) -> ScoreVector:
    return ScoreVector("degree", degrees(g).astype(float))


def eigenvector_centrality(g: Graph, normalize: str = "unit") -> ScoreVector:
    """Principal adjacency eigenvector, oriented nonnegative.

    When the top eigenvalue is shared by several components the result is
    the projection of the all-ones vector onto the top eigenspace (the limit
    of power iteration from a uniform start).

    ``normalize`` is ``unit`` (Euclidean norm 1) or ``mean_one`` (node average 1).
    """
    if normalize not in ("unit", "mean_one"):
        raise CentralityError(f"unknown normalization {normalize!r}")
    if g.n == 0 or g.n_edges == 0:
        raise CentralityError("graph has no edges; principal eigenvector undefined")
    a = adjacency(g)
    w, v = np.linalg.eigh(a)
    top = w[-1]
    block = v[:, w >= top - 1e-9 * max(1.0, top)]
    x = block @ (block.T @ np.ones(g.n))
    x = np.clip(x, 0.0, None)
    if normalize == "unit":
        x = x / np.linalg.norm(x)
    else:
        x = x * (g.n / x.sum())
    return ScoreVector("eigenvector", x, {"normalize": normalize})


def katz_bonacich(g: Graph, decay: float = DEFAULT_DECAY) -> ScoreVector:
    """``(I - alpha A)^{-1} 1`` with ``alpha = decay / mu``."""
    _check_decay(decay)
    a = adjacency(g)
    mu = spectral_radius(a)
    alpha = decay / mu if mu > 0 else 0.0
    x = np.linalg.solve(np.eye(g.n) - alpha * a, np.ones(g.n))
    return ScoreVector("katz", x, {"decay": decay, "alpha": alpha})


def bonacich_power(g: Graph, decay: float = DEFAULT_DECAY) -> ScoreVector:
    """Beta centrality ``(I - beta A)^{-1} A 1`` rescaled to ``sum x^2 = n``.

    On an edgeless graph the raw vector is zero; it is returned as is with
    ``params["degenerate"] = True``.
    """
    _check_decay(decay)
    a = adjacency(g)
    mu = spectral_radius(a)
    beta = decay / mu if mu > 0 else 0.0
    raw = np.linalg.solve(np.eye(g.n) - beta * a, a @ np.ones(g.n))
    norm2 = float(raw @ raw)
    params = {"decay": decay, "beta": beta, "degenerate": norm2 == 0.0}
    x = raw * np.sqrt(g.n / norm2) if norm2 > 0 else raw
    return ScoreVector("bonacich_power", x, params)


def diffusion_centrality(g: Graph, T: int, pass_prob: float | None = None) -> ScoreVector:
    """``sum_{t=1..T} (q A)^t 1``; ``q`` defaults to ``0.8 / mu``."""
    if T < 1:
        raise CentralityError(f"T must be >= 1, got {T}")
    a = adjacency(g)
    if pass_prob is None:
        mu = spectral_radius(a)
        pass_prob = DEFAULT_DECAY / mu if mu > 0 else 0.0
    step = np.ones(g.n)
    total = np.zeros(g.n)
    for _ in range(T):
        step = pass_prob * (a @ step)
        total += step
    return ScoreVector("diffusion", total, {"T": int(T), "pass_prob": float(pass_prob)})


def closeness_centrality(g: Graph) -> ScoreVector:
    """``(n_C - 1) / sum of distances`` within each node's component; isolated nodes 0."""
    dist = shortest_path(adjacency(g), unweighted=True, directed=False)
    out = np.zeros(g.n)
    for i in range(g.n):
        row = dist[i]
        reach = np.isfinite(row)
        total = row[reach].sum()
        if total > 0:
            out[i] = (reach.sum() - 1) / total
    return ScoreVector("closeness", out)


def betweenness_centrality(g: Graph) -> ScoreVector:
    """Unnormalized shortest-path betweenness (Brandes accumulation, unordered pairs)."""
    n = g.n
    nbrs = [[] for _ in range(n)]
    for i, j in g.sorted_edges():
        nbrs[i].append(j)
        nbrs[j].append(i)
    bc = np.zeros(n)
    for s in range(n):
        order = []
        preds = [[] for _ in range(n)]
        sigma = np.zeros(n)
        sigma[s] = 1.0
        dist = np.full(n, -1)
        dist[s] = 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            order.append(v)
            for w in nbrs[v]:
                if dist[w] < 0:
                    dist[w] = dist[v] + 1
                    queue.append(w)
                if dist[w] == dist[v] + 1:
                    sigma[w] += sigma[v]
                    preds[w].append(v)
        delta = np.zeros(n)
        for w in reversed(order):
            for v in preds[w]:
                delta[v] += sigma[v] / sigma[w] * (1.0 + delta[w])
            if w != s:
                bc[w] += delta[w]
    # each unordered pair was counted from both endpoints
    return ScoreVector("betweenness", bc / 2.0)
