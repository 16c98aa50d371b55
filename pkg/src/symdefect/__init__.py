"""Symbolic powers and symbolic defects of edge ideals of unicyclic graphs."""

from importlib import resources

from .covers import CoverCountTable, MinCover, brute_count, combined_counts, enumerate_min_covers
from .edge_ideal import (
    gamma_oracle,
    hilbert_oracle,
    hilbert_oracle_table,
    ordinary_power,
    sdefect_oracle,
    symbolic_power_formula,
    symbolic_power_oracle,
)
from .graph import (
    CycleParams,
    MarkedGraph,
    build_graph,
    closed_nbhd_condition,
    cycle_params,
    minimal_vertex_covers,
    parse_graph,
    serialize_graph,
)
from .hilbert import HilbertTable, gamma_closed, hilbert_closed
from .quasipoly import QuasiPolynomial, evaluate, fit
from .sdefect import SdefectReport, multichoose, script_g, sdefect_closed

__version__ = "0.1.0"

BUNDLED_GRAPHS = ("c3", "c5", "fig2", "w5", "fig3_g1", "fig3_g2", "fig4_g1", "fig4_g2")


def load_bundled(name: str) -> MarkedGraph:
    """One of the small reference graphs shipped in ``symdefect/data``."""
    if name not in BUNDLED_GRAPHS:
        raise KeyError(f"no bundled graph {name!r}; choose from {', '.join(BUNDLED_GRAPHS)}")
    return parse_graph(resources.files(__package__).joinpath("data", f"{name}.json").read_text())


__all__ = [
    "BUNDLED_GRAPHS",
    "CoverCountTable",
    "CycleParams",
    "HilbertTable",
    "MarkedGraph",
    "MinCover",
    "QuasiPolynomial",
    "SdefectReport",
    "brute_count",
    "build_graph",
    "closed_nbhd_condition",
    "combined_counts",
    "cycle_params",
    "enumerate_min_covers",
    "evaluate",
    "fit",
    "gamma_closed",
    "gamma_oracle",
    "hilbert_closed",
    "hilbert_oracle",
    "hilbert_oracle_table",
    "load_bundled",
    "minimal_vertex_covers",
    "multichoose",
    "ordinary_power",
    "parse_graph",
    "script_g",
    "sdefect_closed",
    "sdefect_oracle",
    "serialize_graph",
    "symbolic_power_formula",
    "symbolic_power_oracle",
]
