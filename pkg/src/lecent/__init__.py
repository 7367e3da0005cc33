"""Laplacian eigenvector centrality (LEC) and companion network analytics."""

from .graph import (Graph, GraphError, GraphParseError, adjacency, complete, core_periphery,
                    degrees, florentine, laplacian, make_family, parse_edge_list, path,
                    read_edge_list, serialize_edge_list, star, write_edge_list)
from .lec import (OrderChoice, ScoreVector, glec, glec_degree_variant, lec, plec_cumulative,
                  plec_proportional, suggest_order)
from .spectral import (DecompositionError, Spectrum, cumulative_fraction, eigendecompose,
                       spectral_gap_profile, spectrum_of)

__version__ = "0.1.0"
