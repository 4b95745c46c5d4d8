"""Exception types and the shared check-result record."""

from __future__ import annotations

from dataclasses import dataclass


class PursuitError(Exception):
    """Base class for all package-specific errors."""


class GraphFormatError(PursuitError):
    """Malformed graph, order, or transcript file."""


class GeneratorContractError(PursuitError):
    """A lazy-graph oracle broke its contract: asymmetric neighbourhoods,
    missing self-adjacency, unbounded neighbour sets, or clashing canonical
    ranks."""


class InvalidOrderError(PursuitError):
    """An order object violates its structural invariants (non-permutation
    sequence, dominator cycle, or a chain that never reaches its terminal)."""


class NontotalRetractionError(PursuitError):
    """A dismantling-flavoured projection was queried at a point where the
    dominator chain never reaches the requested suffix."""

    def __init__(self, cutoff: int, vertex: int):
        self.cutoff = cutoff
        self.vertex = vertex
        super().__init__(
            f"projection onto ranks >= {cutoff} is undefined at vertex {vertex}"
        )


class StrategyError(PursuitError):
    """Base class for strategy and policy failures."""


class StrategyInapplicableError(StrategyError):
    """A move rule has no legal target in the current configuration."""


class StrategyUndefinedError(StrategyError):
    """The prefix recursion bottomed out on a configuration it does not
    cover (unreachable under the standard start)."""


class ScriptError(StrategyError):
    """A scripted robber move is illegal from the current position."""


class TranscriptFaultError(PursuitError):
    """An evaluator was applied to an aborted transcript."""


class EngineInvariantError(PursuitError):
    """A pursuit invariant that should hold by construction failed during play."""


class ProtectiveContradictionError(PursuitError):
    """A timing profile contradicts the protective-strategy requirements,
    or the order recovered from one fails verification (horizon too small
    or the strategy is not protective)."""


@dataclass(frozen=True)
class CheckResult:
    """Outcome of a verification: `ok` plus the first offending location."""

    ok: bool
    where: object = None
    detail: str = ""

    def __bool__(self) -> bool:
        return self.ok
