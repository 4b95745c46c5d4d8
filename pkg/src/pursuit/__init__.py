"""Pursuit-evasion engine and verification toolkit for cops-and-robbers
games on reflexive graphs."""

from .errors import (
    CheckResult,
    EngineInvariantError,
    GeneratorContractError,
    GraphFormatError,
    InvalidOrderError,
    NontotalRetractionError,
    ProtectiveContradictionError,
    PursuitError,
    ScriptError,
    StrategyError,
    StrategyInapplicableError,
    StrategyUndefinedError,
    TranscriptFaultError,
)
from .graphs import (
    BallView,
    Graph,
    Induced,
    LazyGraph,
    ball,
    dominates,
    induced_subgraph,
    load_graph,
    save_graph,
)
from .orders import (
    DismantlingOrder,
    DominatingOrder,
    depth_table,
    find_dismantling_order,
    find_dominating_order,
    load_order,
    naturalize_order,
    save_order,
    verify_dismantling_order,
    verify_dominating_order,
)
from .retractions import (
    RetractionFamily,
    check_family_retraction,
    check_retraction,
    check_shifted_edge_property,
)
from .strategies import (
    ChainPursuitCop,
    CycleEvaderRobber,
    DismantlingPursuitCop,
    DistanceGreedyRobber,
    PrefixRecursiveCop,
    ProtectiveCop,
    RayRunnerRobber,
    ScriptedRobber,
    StationaryRobber,
    TableCop,
    TableRobber,
    chain_pursuit_move,
    dismantling_pursuit_move,
    prefix_recursive_move,
    protective_move,
)
from .engine import (
    GameConfig,
    Outcome,
    Transcript,
    check_pursuit_invariants,
    check_shadow,
    default_horizon,
    evaluate_classic,
    evaluate_cweak,
    evaluate_weak,
    play,
)
from .solver import (
    GameTable,
    SearchResult,
    TimingProfile,
    adversarial_search,
    decide_cop_win,
    estimate_timing,
    is_cop_win,
    order_from_protective,
)

__version__ = "0.1.0"
