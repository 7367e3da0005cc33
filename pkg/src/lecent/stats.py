"""Correlation coefficients, percentile curves and batch experiments over random graphs."""

from __future__ import annotations

import csv
import io
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np
from scipy.stats import rankdata

from .lec import ScoreVector
from .randnet import GenSpec


class UndefinedCorrelationError(ValueError):
    """A coefficient is undefined, e.g. for constant input."""


def _pair(x, y) -> tuple[np.ndarray, np.ndarray]:
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    if x.shape != y.shape or x.ndim != 1:
        raise ValueError(f"inputs must be 1-d of equal length, got {x.shape} and {y.shape}")
    if len(x) < 2:
        raise ValueError("need at least two observations")
    return x, y


def pearson(x, y) -> float:
    x, y = _pair(x, y)
    dx = x - x.mean()
    dy = y - y.mean()
    sxx = float(dx @ dx)
    syy = float(dy @ dy)
    if sxx == 0 or syy == 0:
        raise UndefinedCorrelationError("pearson is undefined for constant input")
    r = float(dx @ dy) / math.sqrt(sxx * syy)
    return max(-1.0, min(1.0, r))


def spearman(x, y) -> float:
    """Pearson correlation of average ranks."""
    x, y = _pair(x, y)
    return pearson(rankdata(x), rankdata(y))


def _tie_pairs(sorted_vals: np.ndarray) -> int:
    """Number of tied pairs in an already sorted array."""
    _, counts = np.unique(sorted_vals, return_counts=True)
    return int((counts * (counts - 1) // 2).sum())


def _count_inversions(a: list) -> int:
    """Strict inversions of ``a`` by bottom-up merge sort."""
    n = len(a)
    a = list(a)
    buf = [None] * n
    inv = 0
    width = 1
    while width < n:
        for lo in range(0, n, 2 * width):
            mid = min(lo + width, n)
            hi = min(lo + 2 * width, n)
            i, j, k = lo, mid, lo
            while i < mid and j < hi:
                if a[j] < a[i]:
                    buf[k] = a[j]
                    inv += mid - i
                    j += 1
                else:
                    buf[k] = a[i]
                    i += 1
                k += 1
            buf[k:hi] = a[i:mid] + a[j:hi]
        a, buf = buf, a
        width *= 2
    return inv


@dataclass(frozen=True)
class KendallCounts:
    """Pair counts behind tau-b: ``s`` is concordant minus discordant."""

    n_pairs: int
    ties_x: int
    ties_y: int
    s: int

    def tau_b(self) -> float:
        denom = (self.n_pairs - self.ties_x) * (self.n_pairs - self.ties_y)
        if denom == 0:
            raise UndefinedCorrelationError("kendall tau-b is undefined for constant input")
        return self.s / math.sqrt(denom)


def kendall_counts(x, y) -> KendallCounts:
    """Knight's O(n log n) pair counting."""
    x, y = _pair(x, y)
    n = len(x)
    order = np.lexsort((y, x))
    xs, ys = x[order], y[order]
    n0 = n * (n - 1) // 2
    n1 = _tie_pairs(xs)
    # pairs tied in both coordinates: runs of equal (x, y) in the lexsorted order
    same = np.flatnonzero((np.diff(xs) != 0) | (np.diff(ys) != 0))
    bounds = np.concatenate([[0], same + 1, [n]])
    runs = np.diff(bounds)
    n3 = int((runs * (runs - 1) // 2).sum())
    swaps = _count_inversions(ys.tolist())
    n2 = _tie_pairs(np.sort(ys))
    # concordant - discordant = untied-in-both pairs minus twice the discordant ones
    s = n0 - n1 - n2 + n3 - 2 * swaps
    return KendallCounts(n0, n1, n2, s)


def kendall_tau_b(x, y) -> float:
    return kendall_counts(x, y).tau_b()


# --- percentile curves -------------------------------------------------------

def percentile_curve(scores) -> list[tuple[float, float]]:
    """Scores sorted ascending, the ``k``-th (1-based) paired with ``k / n``."""
    vals = scores.scores if isinstance(scores, ScoreVector) else np.asarray(scores, dtype=float)
    vals = np.sort(vals)
    n = len(vals)
    return [((k + 1) / n, float(v)) for k, v in enumerate(vals)]


# --- batch experiments -------------------------------------------------------

TABLE_COLUMNS = ("spec_id", "model", "n", "param", "seed", "measure", "statistic", "key", "value")
SUMMARIES = ("cumulative", "percentile", "pearson_degree", "kendall_degree", "spearman_degree")


def _run_one(job):
    spec_id, spec, measures, summaries = job
    from .measures import compute_measure
    from .spectral import cumulative_fractions, spectrum_of

    base = (spec_id, spec.model, spec.n, spec.param, spec.seed)
    rows = []
    try:
        g = spec.generate()
        s = spectrum_of(g)
        deg = None
        if "cumulative" in summaries:
            for k, fr in enumerate(cumulative_fractions(s)):
                rows.append(base + ("spectrum", "cumulative_fraction", k, float(fr)))
        for name in measures:
            try:
                sv = compute_measure(name, g, s)
            except Exception as exc:  # row-level failure, keep going
                rows.append(base + (name, "error", "", repr(exc)))
                continue
            if "order" in sv.params:
                rows.append(base + (name, "order", "", sv.params["order"]))
            if "percentile" in summaries:
                for pct, val in percentile_curve(sv):
                    rows.append(base + (name, "percentile", pct, val))
            for summ, fn in (("pearson_degree", pearson), ("kendall_degree", kendall_tau_b),
                             ("spearman_degree", spearman)):
                if summ not in summaries:
                    continue
                if deg is None:
                    deg = compute_measure("degree", g, s).scores
                try:
                    val = fn(sv.scores, deg)
                except UndefinedCorrelationError as exc:
                    rows.append(base + (name, "error", summ, str(exc)))
                else:
                    rows.append(base + (name, summ, "", val))
    except Exception as exc:  # the whole graph failed
        rows.append(base + ("", "error", "", repr(exc)))
    return rows


def batch_experiment(specs: list[GenSpec], measures: list[str], summaries: list[str],
                     workers: int = 1) -> list[tuple]:
    """Long-format result rows, ordered by spec index.

    Each row is ``(spec_id, model, n, param, seed, measure, statistic, key, value)``.
    Failures become rows with ``statistic == "error"`` instead of aborting.
    """
    unknown = set(summaries) - set(SUMMARIES)
    if unknown:
        raise ValueError(f"unknown summaries: {sorted(unknown)}")
    jobs = [(i, spec, list(measures), list(summaries)) for i, spec in enumerate(specs)]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            chunks = list(pool.map(_run_one, jobs))
    else:
        chunks = [_run_one(job) for job in jobs]
    return [row for chunk in chunks for row in chunk]


def table_csv(rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(TABLE_COLUMNS)
    for row in rows:
        w.writerow([repr(v) if isinstance(v, float) else v for v in row])
    return buf.getvalue()


def select(rows, measure=None, statistic=None) -> list[tuple]:
    return [r for r in rows
            if (measure is None or r[5] == measure) and (statistic is None or r[6] == statistic)]
