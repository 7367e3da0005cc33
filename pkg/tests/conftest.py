from __future__ import annotations

import time

import numpy as np
import pytest
from hypothesis import strategies as st

from lecent.graph import Graph
from lecent.randnet import GenSpec, spawn_seeds

# filled by test_acceptance.py, printed once at the end of the run
ACCEPTANCE_LINES: dict[int, str] = {}
SUITE_BUILD_SECONDS: list[float] = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[k])


@st.composite
def graphs(draw, min_n=2, max_n=14, isolated=True):
    """Small random simple graphs, optionally with extra isolated nodes."""
    n = draw(st.integers(min_n, max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    edges = [p for p, keep in zip(pairs, mask) if keep]
    if isolated:
        extra = draw(st.integers(0, 2))
        n += extra
    return Graph.from_edges(n, edges)


def suite_specs() -> list[GenSpec]:
    """The 100-graph property suite: 50 ER (n in {50, 200}, avgdeg in {4, 8}) and 50 BA (m in {2, 4})."""
    seeds = spawn_seeds(20240611, 100)
    specs = []
    er_cells = [(n, d) for n in (50, 200) for d in (4, 8)]
    for k in range(50):
        n, d = er_cells[k % 4]
        specs.append(GenSpec.er_avgdeg(n, d, seeds[k]))
    ba_cells = [(n, m) for n in (50, 200) for m in (2, 4)]
    for k in range(50):
        n, m = ba_cells[k % 4]
        specs.append(GenSpec("BA", n, m, seeds[50 + k]))
    return specs


@pytest.fixture(scope="session")
def suite():
    """``(spec, graph, spectrum)`` for every suite graph."""
    from lecent.spectral import spectrum_of

    t0 = time.perf_counter()
    out = []
    for spec in suite_specs():
        g = spec.generate()
        out.append((spec, g, spectrum_of(g)))
    SUITE_BUILD_SECONDS.append(time.perf_counter() - t0)
    return out


def random_rotation(rng: np.random.Generator, k: int) -> np.ndarray:
    q, r = np.linalg.qr(rng.standard_normal((k, k)))
    return q * np.sign(np.diag(r))


def rotate_groups(spectrum, rng):
    """Same spectrum with every multiplicity block re-based by a random rotation."""
    vecs = np.array(spectrum.vectors)
    for start, stop in spectrum.groups:
        if stop - start > 1:
            vecs[:, start:stop] = vecs[:, start:stop] @ random_rotation(rng, stop - start)
    return spectrum.with_vectors(vecs)
