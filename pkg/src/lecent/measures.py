"""Measure names used by the CLI and batch experiments.

A measure is written ``name[:arg]``:

    degree, closeness, betweenness, glec_degree
    eigenvector[:unit|mean_one]
    katz[:decay], bonacich_power[:decay]     decay as a fraction of mu, default 0.8
    diffusion:T[:q]                          q defaults to 0.8/mu
    lec:r, plec[:pct], plec_cum[:threshold]  pct default 20, threshold default 0.5
"""

from __future__ import annotations

from . import classic
from .graph import Graph
from .lec import ScoreVector, lec, plec_cumulative, plec_proportional, glec_degree_variant
from .spectral import Spectrum, spectrum_of

# default table for per-village leader averages
BUNDLE = (
    "degree",
    "eigenvector:unit",
    "eigenvector:mean_one",
    "katz",
    "bonacich_power",
    "diffusion:3",
    "diffusion:7",
    "diffusion:10",
    "closeness",
    "betweenness",
    "plec:20",
    "plec_cum:0.5",
)


def compute_measure(name: str, g: Graph, spectrum: Spectrum | None = None) -> ScoreVector:
    kind, _, arg = name.partition(":")
    args = arg.split(":") if arg else []

    def spec() -> Spectrum:
        return spectrum if spectrum is not None else spectrum_of(g)

    if kind == "degree":
        return classic.degree_centrality(g)
    if kind == "closeness":
        return classic.closeness_centrality(g)
    if kind == "betweenness":
        return classic.betweenness_centrality(g)
    if kind == "eigenvector":
        return classic.eigenvector_centrality(g, args[0] if args else "unit")
    if kind == "katz":
        return classic.katz_bonacich(g, float(args[0]) if args else classic.DEFAULT_DECAY)
    if kind == "bonacich_power":
        return classic.bonacich_power(g, float(args[0]) if args else classic.DEFAULT_DECAY)
    if kind == "diffusion":
        if not args:
            raise ValueError("diffusion needs T, e.g. diffusion:7")
        q = float(args[1]) if len(args) > 1 else None
        return classic.diffusion_centrality(g, int(args[0]), q)
    if kind == "glec_degree":
        return glec_degree_variant(g)
    if kind == "lec":
        if not args:
            raise ValueError("lec needs an order, e.g. lec:3")
        return lec(spec(), int(args[0]))
    if kind == "plec":
        return plec_proportional(spec(), float(args[0]) if args else 20.0)
    if kind == "plec_cum":
        return plec_cumulative(spec(), float(args[0]) if args else 0.5)[1]
    raise ValueError(f"unknown measure {name!r}")
