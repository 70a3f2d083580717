"""Exact toolkit for contracting graphs to bicliques and balanced bicliques.

Decide whether at most k edge contractions turn a graph into a complete
bipartite graph (optionally with equal sides), produce verifiable
certificates, kernelize the balanced variant, and generate hardness
instances with known answers.
"""

from .certify import (
    ContractionSolution,
    MalformedPartitionError,
    PartitionVerdict,
    check_valid_balanced_partition,
    check_valid_partition,
    partition_from_solution,
    solution_from_partition,
    verify_solution,
)
from .fpt import (
    CaseContext,
    Modulator,
    SolveCounters,
    Verdict,
    apply_branching_rule_1,
    apply_preprocessing_rule_1,
    find_biclique_modulator,
    fpt_bbc,
    fpt_bc,
)
from .graphs import (
    Bipartition,
    ContractionTrace,
    DisconnectedGraphError,
    Graph,
    GraphError,
    InvalidEdgeError,
    complement,
    components,
    contract_edge,
    contract_edges,
    find_forbidden,
    induced,
    is_balanced_biclique,
    is_biclique,
    is_connected,
    parse_edge_list,
    format_edge_list,
    sf_size,
)
from .kernel import (
    KernelState,
    Packing,
    greedy_packing,
    kernelize_bbc,
    rr1_trivial,
    rr2_size,
    rr3_contract,
    rr4_mark_delete,
)
from .oracle import (
    OracleResult,
    OracleSizeError,
    edge_subset_min_k,
    oracle_bbc,
    oracle_bc,
    oracle_min_k,
)
from .reductions import (
    BruteForceSizeError,
    GeneratorError,
    Hypergraph,
    RbdsInstance,
    gen_bbc_from_h2c,
    gen_bc_from_is,
    gen_bc_from_rbds,
    normalize_hypergraph,
    normalize_rbds,
    solve_h2c_brute,
    solve_is_brute,
    solve_rbds_brute,
)

__version__ = "0.1.0"
