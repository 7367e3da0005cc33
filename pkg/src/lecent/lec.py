"""Laplacian eigenvector centrality (LEC) and its proportional and generalized variants.

Orders follow the usual convention: order ``r`` sums the constant layer plus
the ``r`` eigenvectors with the largest eigenvalues, so scores add up to
``1 + r``. When ``r`` splits a block of repeated eigenvalues the block is
shared out pro rata, which keeps the scores independent of the eigenbasis.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .graph import Graph, degrees
from .spectral import DEFAULT_GROUP_TOL, Spectrum, cumulative_fractions, spectral_gap_profile


@dataclass(frozen=True)
class ScoreVector:
    """Per-node scores aligned with graph node order."""

    measure: str
    scores: np.ndarray
    params: dict = field(default_factory=dict)

    def __post_init__(self):
        arr = np.array(self.scores, dtype=float)
        if arr.ndim != 1:
            raise ValueError("scores must be one-dimensional")
        if not np.all(np.isfinite(arr)):
            raise ValueError(f"{self.measure}: non-finite score")
        arr.setflags(write=False)
        object.__setattr__(self, "scores", arr)

    def __len__(self):
        return len(self.scores)


def _check_order(s: Spectrum, r: int) -> int:
    if isinstance(r, bool) or int(r) != r:
        raise ValueError(f"order must be an integer, got {r!r}")
    r = int(r)
    if not (0 <= r <= s.n - 1):
        raise ValueError(f"order must lie in [0, {s.n - 1}], got {r}")
    return r


def _layer_sum(s: Spectrum, stop: int) -> np.ndarray:
    """Constant layer plus squared eigenvector columns ``0..stop-1``.

    Always summed from the head so rows that vanish on those columns (isolated
    nodes) stay exactly ``1/n``.
    """
    return 1.0 / s.n + np.square(s.vectors[:, :stop]).sum(axis=1)


def lec_scores(s: Spectrum, r: int) -> np.ndarray:
    r = _check_order(s, r)
    n = s.n
    if r == 0:
        return np.full(n, 1.0 / n)
    if r == n - 1:
        return np.ones(n)
    lo, hi = s.group_of(r - 1)  # columns of the block containing q_r
    if hi == r:
        return _layer_sum(s, r)
    # q_r lies strictly inside a repeated block: interpolate across the block
    before = _layer_sum(s, lo)
    after = _layer_sum(s, hi)
    frac = (r - lo) / (hi - lo)
    return before + frac * (after - before)


def lec(s: Spectrum, r: int) -> ScoreVector:
    """LEC of order ``r`` (basis-independent under eigenvalue multiplicity)."""
    return ScoreVector("lec", lec_scores(s, r), {"order": int(r)})


def proportional_order(n: int, pct: float) -> int:
    """Order ``ceil(pct/100 * n)`` capped at ``n - 1``."""
    if not (0 < pct <= 100):
        raise ValueError(f"percentage must lie in (0, 100], got {pct}")
    # rounding first keeps e.g. 20% of 200 at 40 despite binary fractions
    r = math.ceil(round(pct * n / 100.0, 9))
    return min(r, n - 1)


def plec_proportional(s: Spectrum, pct: float) -> ScoreVector:
    r = proportional_order(s.n, pct)
    return ScoreVector("plec", lec_scores(s, r), {"rule": "proportional", "pct": pct, "order": r})


def cumulative_order(s: Spectrum, threshold: float) -> int:
    """Smallest order whose cumulative eigenvalue share reaches ``threshold``.

    Shares within ``1e-12`` of the threshold count as reaching it; integer
    spectra hit round thresholds exactly.
    """
    if not (0 < threshold < 1):
        raise ValueError(f"threshold must lie in (0, 1), got {threshold}")
    fr = cumulative_fractions(s)
    return int(np.argmax(fr >= threshold - 1e-12))


def plec_cumulative(s: Spectrum, threshold: float) -> tuple[int, ScoreVector]:
    r = cumulative_order(s, threshold)
    sv = ScoreVector("plec", lec_scores(s, r), {"rule": "cumulative", "threshold": threshold, "order": r})
    return r, sv


# --- generalized LEC ---------------------------------------------------------

def group_mean_weights(s: Spectrum, weights) -> np.ndarray:
    """Average per-eigenvector weights inside each multiplicity block."""
    w = np.array(weights, dtype=float)
    for start, stop in s.groups:
        w[start:stop] = w[start:stop].mean()
    return w


def weighted_layers(s: Spectrum, constant_weight: float, weights) -> np.ndarray:
    """``constant_weight / n + sum_k w_k q_k(i)^2`` over non-constant columns.

    ``weights`` has length ``n - 1`` in column order and is block-averaged
    first; no monotonicity is required here.
    """
    w = group_mean_weights(s, weights)
    return constant_weight / s.n + np.square(s.vectors[:, :-1]) @ w


def glec(s: Spectrum, weights) -> ScoreVector:
    """Generalized LEC with weights ``(w_0, ..., w_{n-1})``.

    ``w_0`` weights the constant layer. Weights must be nonnegative and
    nonincreasing; inside a block of repeated eigenvalues they are replaced by
    the block mean.
    """
    w = np.asarray(weights, dtype=float)
    if w.shape != (s.n,):
        raise ValueError(f"expected {s.n} weights, got shape {w.shape}")
    if np.any(w < 0):
        raise ValueError("weights must be nonnegative")
    if np.any(np.diff(w) > 0):
        raise ValueError("weights must be nonincreasing")
    return ScoreVector("glec", weighted_layers(s, w[0], w[1:]), {"weights": w.tolist()})


def degree_weights(s: Spectrum) -> np.ndarray:
    """gLEC weights ``w_0 = 1, w_i = lambda_i / n`` that reproduce degree."""
    return np.concatenate([[1.0], s.values[:-1] / s.n])


def glec_degree_variant(g: Graph) -> ScoreVector:
    """``(1 + d_i) / n`` computed straight from degrees."""
    return ScoreVector("glec_degree", (1.0 + degrees(g)) / g.n, {})


# --- order selection ---------------------------------------------------------

@dataclass(frozen=True)
class OrderChoice:
    order: int
    policy: str
    rationale: dict


def largest_gap_order(s: Spectrum) -> tuple[int, float]:
    """Order ``k`` in ``1..n-2`` maximising ``lambda_k - lambda_{k+1}``; ties to smallest ``k``."""
    gaps = spectral_gap_profile(s)
    if s.n < 3:
        k = s.n - 1
        return k, float(gaps[0]) if len(gaps) else 0.0
    eligible = gaps[: s.n - 2]
    # gaps equal up to the grouping tolerance count as ties
    tol = DEFAULT_GROUP_TOL * max(1.0, s.lambda_max)
    k = int(np.flatnonzero(eligible >= eligible.max() - tol)[0]) + 1
    return k, float(gaps[k - 1])


def suggest_order(s: Spectrum, policy: str) -> OrderChoice:
    """Pick an LEC order.

    ``policy`` is ``largest_gap``, ``cumulative:<threshold>`` or
    ``proportional:<pct>``.
    """
    name, _, arg = policy.partition(":")
    if name == "largest_gap":
        k, gap = largest_gap_order(s)
        rationale = {"gap": gap, "cumulative_fraction": float(cumulative_fractions(s)[k])}
    elif name == "cumulative":
        threshold = float(arg or 0.5)
        k = cumulative_order(s, threshold)
        rationale = {"threshold": threshold, "cumulative_fraction": float(cumulative_fractions(s)[k])}
    elif name == "proportional":
        pct = float(arg or 20)
        k = proportional_order(s.n, pct)
        rationale = {"pct": pct, "cumulative_fraction": float(cumulative_fractions(s)[k])}
    else:
        raise ValueError(f"unknown order policy {policy!r}")
    return OrderChoice(k, name, rationale)
