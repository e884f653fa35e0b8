"""Toric ideals of integer configurations and graphs, and their circuits."""

from .circuits import Circuit, SquarefreeClass, enumerate_circuits, is_circuit, is_fundamental, squarefree_class
from .config import (
    Configuration,
    format_configuration,
    graph_incidence,
    new_configuration,
    normalize_rows,
    parse_configuration,
    restrict,
    root_config,
    squarefree_veronese,
    veronese,
)
from .errors import ToricError
from .fibers import enumerate_fiber, generates, is_indispensable, is_redundant, minimal_generators
from .graphs import (
    Graph,
    WalkType,
    clique_sum_of_complete,
    enumerate_graph_circuits,
    find_pattern,
    format_graph,
    new_graph,
    normality_gap_witness,
    odd_cycle_condition,
    parse_graph,
    walk_binomial,
)
from .ideal import Binomial, GroebnerBasis, MonomialOrder, buchberger, parse_binomial, toric_groebner
from .verify import TheoremReport, check_graph_theorems, corpus_run

__version__ = "0.1.0"
