"""Combinatorial unmixedness and Cohen-Macaulayness checks for parity
binomial edge ideals of graphs."""

from .graphs import (
    Graph,
    GraphInputError,
    RemovalProfile,
    blocks,
    build_graph,
    connected_components,
    disjoint_union,
    from_labeled,
    is_connected,
    is_path,
    is_tree,
    removal_profile,
    strip_pendant_trees,
)
from .chordal import (
    CliqueDecomposition,
    DisconnectedError,
    NotChordalError,
    clique_sum_order,
    is_block_graph,
    is_chordal,
    is_generalized_block_graph,
    m_value,
    maximal_cliques_chordal,
)
from .spectrum import (
    DisconnectorRecord,
    OracleVerdict,
    Sign,
    SizeCapError,
    SpectrumReport,
    enumerate_sign_split_disconnectors,
    is_cut_set,
    is_disconnector,
    krull_dimension,
    minimal_prime_heights,
    sign_split_assignment,
    spectrum_report,
    unmixedness_oracle,
)
from .treealgo import (
    AlgorithmResult,
    IllegalChoiceError,
    RunPolicy,
    enumerate_runs,
    run_algorithm,
    split_S,
    verify_run,
)
from .classify import (
    CactusAnalysis,
    Classification,
    ClassifyOutcome,
    PatternMatch,
    classify,
    classify_cactus,
    classify_chordal,
    is_cactus,
    match_pattern,
    pendant_odd_cycles,
    pendant_split,
)
from .crosscheck import CrossCheckReport, cross_check
from .algebra import emit_m2_script
from .dot import emit_dot

__all__ = [name for name in dir() if not name.startswith("_")]

__version__ = "0.1.0"
