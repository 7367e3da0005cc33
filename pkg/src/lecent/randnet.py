"""Seeded Erdős–Rényi, Barabási–Albert and clustered random graphs.

All generators draw from ``numpy.random.Generator(PCG64(seed))``. Batches
derive per-replicate seeds with :func:`spawn_seeds`, which uses
``SeedSequence(root).spawn`` so streams are independent and reproducible on
any platform.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass

import numpy as np

from .graph import Graph, GraphError


def rng_for(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(seed))


def spawn_seeds(root: int, count: int) -> list[int]:
    """Independent 64-bit child seeds of ``root``."""
    children = np.random.SeedSequence(root).spawn(count)
    return [int(c.generate_state(1, dtype=np.uint64)[0]) for c in children]


@dataclass(frozen=True)
class GenSpec:
    """Random graph recipe: ``param`` is ``p`` for ER and ``m`` for BA."""

    model: str
    n: int
    param: float
    seed: int

    def __post_init__(self):
        if self.model not in ("ER", "BA"):
            raise GraphError(f"unknown model {self.model!r}")
        if self.n < 1:
            raise GraphError(f"n must be >= 1, got {self.n}")
        if self.model == "ER" and not (0 <= self.param <= 1):
            raise GraphError(f"ER edge probability must lie in [0, 1], got {self.param}")
        if self.model == "BA" and (int(self.param) != self.param or not (1 <= self.param < self.n)):
            raise GraphError(f"BA needs integer 1 <= m < n, got m={self.param}, n={self.n}")

    @classmethod
    def er_avgdeg(cls, n: int, avgdeg: float, seed: int) -> GenSpec:
        """ER spec with ``p = avgdeg / (n - 1)``."""
        return cls("ER", n, min(1.0, avgdeg / (n - 1)) if n > 1 else 0.0, seed)

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> GenSpec:
        return cls(**json.loads(text))

    def generate(self) -> Graph:
        if self.model == "ER":
            return erdos_renyi(self)
        return barabasi_albert(self)


def erdos_renyi(spec: GenSpec) -> Graph:
    """Each unordered pair, in lexicographic order, kept with probability ``p``."""
    if spec.model != "ER":
        raise GraphError("erdos_renyi needs an ER spec")
    n = spec.n
    iu, ju = np.triu_indices(n, k=1)
    keep = rng_for(spec.seed).random(len(iu)) < spec.param
    return Graph.from_edges(n, zip(iu[keep].tolist(), ju[keep].tolist()))


def barabasi_albert(spec: GenSpec) -> Graph:
    """Preferential attachment grown from a clique on ``m + 1`` nodes."""
    if spec.model != "BA":
        raise GraphError("barabasi_albert needs a BA spec")
    n, m = spec.n, int(spec.param)
    rng = rng_for(spec.seed)
    edges = [(i, j) for i in range(m + 1) for j in range(i + 1, m + 1)]
    # each node appears once per incident edge, so uniform draws are degree-biased
    stubs = [v for e in edges for v in e]
    for new in range(m + 1, n):
        targets: list[int] = []
        while len(targets) < m:
            t = stubs[int(rng.integers(len(stubs)))]
            if t not in targets:
                targets.append(t)
        for t in targets:
            edges.append((t, new))
            stubs.extend((t, new))
    return Graph.from_edges(n, edges)


def clustered_er(k: int = 5, n_per: int = 50, p_in: float = 0.1, rewire: float = 0.05,
                 seed: int = 0, max_tries: int = 100) -> Graph:
    """``k`` ER clusters whose internal edges are rewired across clusters.

    Each within-cluster edge, visited in sorted order, is rewired with
    probability ``rewire``: one endpoint (chosen at random) is kept and the
    other is replaced by a uniform node from a different cluster. Targets
    that would duplicate an edge are redrawn up to ``max_tries`` times, after
    which the edge is left in place.
    """
    if k < 1 or n_per < 1:
        raise GraphError(f"need k >= 1 and n_per >= 1, got k={k}, n_per={n_per}")
    if not (0 <= p_in <= 1) or not (0 <= rewire <= 1):
        raise GraphError("probabilities must lie in [0, 1]")
    rng = rng_for(seed)
    n = k * n_per
    edges: set[tuple[int, int]] = set()
    iu, ju = np.triu_indices(n_per, k=1)
    for c in range(k):
        keep = rng.random(len(iu)) < p_in
        off = c * n_per
        edges.update(zip((iu[keep] + off).tolist(), (ju[keep] + off).tolist()))
    if k == 1:
        return Graph.from_edges(n, edges)
    for e in sorted(edges):
        if rng.random() >= rewire:
            continue
        anchor = e[int(rng.integers(2))]
        cluster = anchor // n_per
        for _ in range(max_tries):
            other = int(rng.integers(n - n_per))
            if other >= cluster * n_per:
                other += n_per
            new = (anchor, other) if anchor < other else (other, anchor)
            if new not in edges:
                edges.remove(e)
                edges.add(new)
                break
    return Graph.from_edges(n, edges)
