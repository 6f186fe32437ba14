"""Solve win-move games by backward induction and explain position values
with potential, actual and primary provenance subgraphs."""

from .argumentation import (
    AfLabel,
    ArgumentationFramework,
    af_to_game,
    argument_provenance,
    grounded_labeling,
)
from .graph import (
    GameGraph,
    InvalidPositionId,
    UnknownPosition,
    build_graph,
    followers,
    induced_subgraph,
    reachable_closure,
)
from .provenance import (
    Kind,
    ProvenanceSubgraph,
    actual_provenance,
    match_rpq,
    potential_provenance,
    primary_provenance,
    standard_pattern,
)
from .rpq import compile_rpq, parse_rpq
from .solver import (
    INF,
    EdgeAnnotation,
    EdgeType,
    NodeLabel,
    SolvedGame,
    StepTrace,
    Value,
    classify_edge,
    solve,
    solve_fast,
    validate_solution,
)

__all__ = [name for name in dir() if not name.startswith("_")]
