"""Undirected simple graphs, edge-list I/O, canonical families and derived matrices."""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

import numpy as np


class GraphError(ValueError):
    """Invalid graph construction or parameters."""


class GraphParseError(GraphError):
    """Malformed edge-list input; ``line`` is 1-based."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        prefix = f"line {line}: " if line is not None else ""
        super().__init__(prefix + message)


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph with string node labels.

    ``edges`` holds index pairs ``(i, j)`` with ``i < j``; labels map index to
    identifier and define node order for every derived vector and matrix.
    """

    labels: tuple[str, ...]
    edges: frozenset[tuple[int, int]]
    _index: dict[str, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        index = {lab: i for i, lab in enumerate(self.labels)}
        if len(index) != len(self.labels):
            raise GraphError("node labels must be unique")
        n = len(self.labels)
        for i, j in self.edges:
            if not (0 <= i < j < n):
                raise GraphError(f"edge ({i}, {j}) is not a canonical pair of node indices")
        object.__setattr__(self, "_index", index)

    @classmethod
    def from_edges(cls, n_or_labels, edges) -> Graph:
        """Build a graph from a node count (labels ``"0".."n-1"``) or a label list.

        ``edges`` are index pairs; orientation and duplicates are ignored, self-loops rejected.
        """
        if isinstance(n_or_labels, (int, np.integer)):
            labels = tuple(str(i) for i in range(int(n_or_labels)))
        else:
            labels = tuple(str(x) for x in n_or_labels)
        canon = set()
        for i, j in edges:
            i, j = int(i), int(j)
            if i == j:
                raise GraphError(f"self-loop on node {labels[i] if 0 <= i < len(labels) else i}")
            canon.add((i, j) if i < j else (j, i))
        return cls(labels, frozenset(canon))

    @property
    def n(self) -> int:
        return len(self.labels)

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise KeyError(f"unknown node {label!r}") from None

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def neighbors(self, i: int) -> set[int]:
        out = set()
        for a, b in self.edges:
            if a == i:
                out.add(b)
            elif b == i:
                out.add(a)
        return out

    def relabel(self, perm) -> Graph:
        """Return the graph whose node ``k`` is this graph's node ``perm[k]``."""
        perm = [int(p) for p in perm]
        inv = {old: new for new, old in enumerate(perm)}
        labels = [self.labels[p] for p in perm]
        return Graph.from_edges(labels, [(inv[i], inv[j]) for i, j in self.edges])


def degrees(g: Graph) -> np.ndarray:
    d = np.zeros(g.n, dtype=np.int64)
    for i, j in g.edges:
        d[i] += 1
        d[j] += 1
    return d


def adjacency(g: Graph, dtype=float) -> np.ndarray:
    a = np.zeros((g.n, g.n), dtype=dtype)
    if g.edges:
        idx = np.array(sorted(g.edges), dtype=np.intp)
        a[idx[:, 0], idx[:, 1]] = 1
        a[idx[:, 1], idx[:, 0]] = 1
    a.setflags(write=False)
    return a


def laplacian(g: Graph, dtype=float) -> np.ndarray:
    """Graph Laplacian ``D - A``, built in integer arithmetic before conversion."""
    a = adjacency(g, dtype=np.int64)
    lap = np.diag(a.sum(axis=1)) - a
    lap = lap.astype(dtype)
    lap.setflags(write=False)
    return lap


# --- edge-list I/O -----------------------------------------------------------

def parse_edge_list(text: str, delimiter: str | None = None, header: bool = False) -> Graph:
    """Parse an edge list.

    Parameters
    ----------
    text : str
        One edge per line as two node tokens. A line holding a single token
        declares a node (isolated unless it appears in an edge elsewhere).
        Blank lines and lines starting with ``#`` are skipped.
    delimiter : str, optional
        Token separator. By default a line containing a comma is split on
        commas, anything else on whitespace.
    header : bool
        Skip the first data line.

    Raises
    ------
    GraphParseError
        On self-loops or lines that do not hold one or two tokens.
    """
    labels: dict[str, int] = {}
    edges: set[tuple[int, int]] = set()
    seen_header = not header

    def node(tok: str) -> int:
        if tok not in labels:
            labels[tok] = len(labels)
        return labels[tok]

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if not seen_header:
            seen_header = True
            continue
        if delimiter is not None:
            tokens = [t.strip() for t in line.split(delimiter)]
        elif "," in line:
            tokens = [t.strip() for t in line.split(",")]
        else:
            tokens = re.split(r"\s+", line)
        tokens = [t for t in tokens if t]
        if len(tokens) == 1:
            node(tokens[0])
        elif len(tokens) == 2:
            u, v = tokens
            if u == v:
                raise GraphParseError(f"self-loop on node {u!r}", lineno)
            i, j = node(u), node(v)
            edges.add((i, j) if i < j else (j, i))
        else:
            raise GraphParseError(f"expected 1 or 2 node tokens, got {len(tokens)}", lineno)
    return Graph(tuple(labels), frozenset(edges))


def serialize_edge_list(g: Graph, delimiter: str = " ") -> str:
    """Inverse of :func:`parse_edge_list`.

    Every node is declared first in label order so that re-parsing restores
    the same node order, then edges follow in index order.
    """
    for lab in g.labels:
        if not lab or lab.startswith("#") or re.search(r"[\s,]", lab):
            raise GraphError(f"label {lab!r} cannot be written to an edge list")
    lines = list(g.labels)
    lines += [f"{g.labels[i]}{delimiter}{g.labels[j]}" for i, j in g.sorted_edges()]
    return "\n".join(lines) + "\n"


def read_edge_list(path, **kwargs) -> Graph:
    return parse_edge_list(Path(path).read_text(encoding="utf-8"), **kwargs)


def write_edge_list(g: Graph, path, **kwargs) -> None:
    Path(path).write_text(serialize_edge_list(g, **kwargs), encoding="utf-8")


# --- canonical families ------------------------------------------------------

def make_family(kind: str, n: int, k: int | None = None) -> Graph:
    """Star, complete, path or core-periphery graph on ``n`` nodes.

    ``core_periphery`` makes nodes ``0..k-1`` hubs adjacent to every node;
    the remaining nodes attach only to the hubs.
    """
    if n < 1:
        raise GraphError(f"n must be >= 1, got {n}")
    if kind == "star":
        edges = [(0, i) for i in range(1, n)]
    elif kind == "complete":
        edges = [(i, j) for i in range(n) for j in range(i + 1, n)]
    elif kind == "path":
        edges = [(i, i + 1) for i in range(n - 1)]
    elif kind == "core_periphery":
        if k is None or not (1 <= k < n):
            raise GraphError(f"core_periphery needs 1 <= k < n, got k={k}, n={n}")
        edges = [(i, j) for i in range(k) for j in range(i + 1, n)]
    else:
        raise GraphError(f"unknown graph family {kind!r}")
    return Graph.from_edges(n, edges)


def star(n: int) -> Graph:
    return make_family("star", n)


def complete(n: int) -> Graph:
    return make_family("complete", n)


def path(n: int) -> Graph:
    return make_family("path", n)


def core_periphery(n: int, k: int) -> Graph:
    return make_family("core_periphery", n, k)


def florentine() -> Graph:
    """Padgett's Florentine marriage network, 16 families including isolated Pucci."""
    text = resources.files("lecent").joinpath("data/florentine.edges").read_text(encoding="utf-8")
    return parse_edge_list(text)
