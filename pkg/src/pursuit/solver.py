"""Independent game oracles: exact cop-win decision by backward induction,
bounded adversarial search, timing estimation against a fixed strategy,
and order recovery from protective timing profiles."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels
from .errors import ProtectiveContradictionError
from .graphs import Graph
from .orders import DominatingOrder, verify_dominating_order

_INF = float("inf")


class GameTable:
    """Backward-induction result: ply distances to capture from every
    (cop, robber, side-to-move) state; -1 marks states the cop cannot
    win. Write-once; safe to share."""

    def __init__(self, graph: Graph, cop_dist: np.ndarray, robber_dist: np.ndarray):
        self.graph = graph
        self.cop_dist = cop_dist
        self.robber_dist = robber_dist

    @property
    def cop_win(self) -> bool:
        n = self.graph.order
        for c in range(n):
            if all(r == c or self.cop_dist[c, r] >= 0 for r in range(n)):
                return True
        return False

    def best_cop_start(self) -> int:
        """Deterministic start: fewest safe robber replies, then smallest
        worst-case capture distance, then lowest id."""
        n = self.graph.order
        best = None
        for c in range(n):
            escapes = sum(1 for r in range(n) if r != c and self.cop_dist[c, r] < 0)
            finite = [int(self.cop_dist[c, r]) for r in range(n) if self.cop_dist[c, r] >= 0]
            worst = max(finite) if finite else 0
            key = (escapes, worst, c)
            if best is None or key < best:
                best = key
        return best[2]

    def _cop_value(self, cp: int, r: int) -> float:
        if cp == r:
            return 0.0
        d = self.robber_dist[cp, r]
        return _INF if d < 0 else float(d)

    def _robber_value(self, c: int, rp: int) -> float:
        if rp == c:
            return 0.0
        d = self.cop_dist[c, rp]
        return _INF if d < 0 else float(d)

    def cop_move(self, c: int, r: int) -> int:
        """Optimal cop move; on states with no forced capture, chase by
        BFS distance (deterministic fallback)."""
        options = sorted(self.graph.neighbors(c))
        vals = [(self._cop_value(cp, r), cp) for cp in options]
        best = min(vals)
        if best[0] < _INF:
            return best[1]
        dm = self.graph.distance_matrix()
        return min(options, key=lambda cp: (int(dm[cp, r]), cp))

    def robber_start(self, c0: int) -> int:
        n = self.graph.order
        safe = [r for r in range(n) if r != c0 and self.cop_dist[c0, r] < 0]
        if safe:
            return min(safe)
        candidates = [r for r in range(n) if r != c0]
        return max(candidates, key=lambda r: (int(self.cop_dist[c0, r]), -r))

    def robber_move(self, c: int, r: int) -> int:
        """Optimal robber move: safe if possible, else maximal delay."""
        options = sorted(self.graph.neighbors(r))
        best = max(options, key=lambda rp: (self._robber_value(c, rp), -rp))
        return best


def decide_cop_win(G: Graph) -> GameTable:
    """Exact verdict by iterated fixpoint over game states; the table
    exposes an optimal cop strategy and an optimal robber policy."""
    if not G.is_connected():
        raise ValueError("graph must be connected")
    dc, dr = _kernels.game_distance_tables(G.adjacency_matrix())
    return GameTable(G, dc, dr)


def is_cop_win(G: Graph) -> bool:
    return decide_cop_win(G).cop_win


# -- bounded adversarial search ---------------------------------------------


@dataclass(frozen=True)
class SearchResult:
    """value: True (robber guarantees the objective), False (cannot), or
    None (budget exceeded -- inconclusive, deliberately distinct from
    False)."""

    value: bool | None
    witness: object = None
    explored: int = 0

    def __bool__(self) -> bool:
        return self.value is True


@dataclass(frozen=True)
class SurviveWitness:
    """Replayable robber policy extracted from the survival DP layers."""

    graph: Graph
    layers: np.ndarray
    allowed: np.ndarray
    horizon: int

    def choose_start(self, c0: int) -> int | None:
        n = self.graph.order
        for r0 in range(n):
            if r0 != c0 and self.allowed[r0] and self.layers[2, c0, r0]:
                return r0
        return None

    def move(self, t: int, c: int, r: int) -> int:
        options = sorted(self.graph.neighbors(r))
        for rp in options:
            if rp == c or not self.allowed[rp]:
                continue
            if t + 1 > self.horizon or self.layers[t + 1, c, rp]:
                return rp
        raise LookupError(f"witness has no surviving move at round {t} from ({c}, {r})")


def _survive_search(
    G: Graph, horizon: int, allowed: np.ndarray, cop_allowed: np.ndarray, budget: int
):
    n = G.order
    if int(allowed.sum()) == 0:
        return SearchResult(False)
    if horizon < 2:
        # Game ends at or before the robber's placement.
        value = horizon < 1 or int(allowed.sum()) >= 2
        return SearchResult(bool(value))
    states = (horizon + 2) * n * n
    if budget is not None and states > budget:
        return SearchResult(None, explored=0)
    layers = _kernels.survive_layers(G.adjacency_matrix(), allowed, horizon, cop_allowed)
    ok = True
    for c0 in range(n):
        if not cop_allowed[c0]:
            continue
        if not any(layers[2, c0, r0] and allowed[r0] and r0 != c0 for r0 in range(n)):
            ok = False
            break
    witness = SurviveWitness(G, layers, allowed, horizon) if ok else None
    return SearchResult(ok, witness=witness, explored=states)


class _MemoSearch:
    """Exact minimax with objective memory (visited set + fresh-move
    streak) and an optional fixed cop strategy. Tri-state values: True,
    False, or None once the state budget is exhausted."""

    def __init__(self, G, horizon, allowed, cop_allowed, window, cop, budget):
        self.G = G
        self.h = horizon
        self.allowed = allowed
        self.cop_allowed = cop_allowed
        self.window = window
        self.cop = cop
        self.budget = budget
        self.memo = {}
        self.moves = {}

    def run(self):
        n = self.G.order
        if self.cop is not None:
            starts = [self.cop.start(self.G)]
        else:
            starts = [c for c in range(n) if self.cop_allowed[c]]
        verdict = True
        for c0 in starts:
            got = False
            unknown = False
            for r0 in range(n):
                if r0 == c0 or not self.allowed[r0]:
                    continue
                v = self._value(2, c0, r0, frozenset([r0]), 0)
                if v is True:
                    self.moves[(1, c0)] = r0
                    got = True
                    break
                if v is None:
                    unknown = True
            if not got:
                verdict = None if unknown else False
                break
        return SearchResult(
            verdict,
            witness=self.moves if verdict is True else None,
            explored=len(self.memo),
        )

    def _value(self, t, c, r, visited, streak):
        if t > self.h:
            return True
        key = (t, c, r, visited, streak)
        hit = self.memo.get(key, "miss")
        if hit != "miss":
            return hit
        if self.budget is not None and len(self.memo) >= self.budget:
            return None
        self.memo[key] = None  # cycle-safe placeholder; rounds strictly increase anyway
        if t % 2 == 0:
            if self.cop is not None:
                cp = self.cop.move(self.G, c, r, t)
                out = False if cp == r else self._value(t + 1, cp, r, visited, streak)
            else:
                out = True
                for cp in sorted(self.G.neighbors(c)):
                    if not self.cop_allowed[cp]:
                        continue
                    if cp == r:
                        out = False
                        break
                    v = self._value(t + 1, cp, r, visited, streak)
                    if v is False:
                        out = False
                        break
                    if v is None:
                        out = None
        else:
            out = False
            for rp in sorted(self.G.neighbors(r)):
                if rp == c or not self.allowed[rp]:
                    continue
                if rp in visited:
                    nv, ns = visited, 0
                else:
                    ns = streak + 1
                    if self.window is not None and ns >= self.window:
                        continue  # w fresh moves in a row: window violated
                    nv = visited | {rp}
                v = self._value(t + 1, c, rp, nv, ns)
                if v is True:
                    self.moves[(t, c, r, visited, streak)] = rp
                    out = True
                    break
                if v is None:
                    out = None
        self.memo[key] = out
        return out


def adversarial_search(
    G: Graph,
    horizon: int,
    *,
    forbidden=(),
    cop_forbidden=(),
    revisit_window: int | None = None,
    cop=None,
    budget: int | None = 2_000_000,
) -> SearchResult:
    """Can the robber guarantee survival (optionally avoiding ``forbidden``
    vertices, optionally revisiting at least once in every window of
    ``revisit_window`` consecutive moves) up to ``horizon``?

    Quantifies over every cop behaviour unless ``cop`` fixes a strategy;
    ``cop_forbidden`` restricts the quantification to cops that never
    occupy the given vertices. Exact within the budget; exceeding it
    yields an inconclusive result.
    """
    allowed = np.ones(G.order, dtype=np.bool_)
    for v in forbidden:
        allowed[v] = False
    cop_allowed = np.ones(G.order, dtype=np.bool_)
    for v in cop_forbidden:
        cop_allowed[v] = False
    if cop is not None and tuple(cop_forbidden):
        raise ValueError("cop_forbidden only applies when quantifying over all cops")
    if revisit_window is None and cop is None:
        return _survive_search(G, horizon, allowed, cop_allowed, budget)
    search = _MemoSearch(G, horizon, allowed, cop_allowed, revisit_window, cop, budget)
    return search.run()


# -- timing profiles ---------------------------------------------------------


@dataclass(frozen=True)
class TimingProfile:
    """Per-vertex timing against a fixed cop strategy, over every robber
    behaviour within the horizon.

    ``rob_latest[v]``: latest round at which the robber can occupy v,
    uncaptured, and survive the following round (-1: never observed).
    ``cop_earliest[v]``: earliest round the cop can be at v, minimised
    over robber behaviours (-1: unattained within the horizon).
    """

    rob_latest: tuple[int, ...]
    cop_earliest: tuple[int, ...]
    horizon: int
    truncated: bool = False
    cop_latest_first_arrival: tuple | None = None

    def to_text(self) -> str:
        lines = [f"horizon {self.horizon}"]
        for v, (tr, tc) in enumerate(zip(self.rob_latest, self.cop_earliest)):
            lines.append(f"{v} {tr} {tc}")
        return "\n".join(lines) + "\n"


def estimate_timing(
    G: Graph,
    cop,
    horizon: int,
    *,
    budget: int | None = None,
    worst_arrival: bool = False,
) -> TimingProfile:
    """Exact forward reachability of (cop, robber) states against the
    fixed strategy ``cop``, branching over all robber behaviours."""
    n = G.order
    rob_latest = [-1] * n
    cop_earliest = [-1] * n

    def see_cop(v, t):
        if cop_earliest[v] < 0:
            cop_earliest[v] = t

    c0 = cop.start(G)
    see_cop(c0, 0)
    layer = {(c0, r0) for r0 in range(n) if r0 != c0}
    truncated = False
    t = 1
    while t <= horizon and layer:
        if budget is not None and len(layer) > budget:
            truncated = True
            break
        if t % 2 == 1:
            for c, r in layer:
                if t + 1 <= horizon and cop.move(G, c, r, t + 1) != r:
                    rob_latest[r] = max(rob_latest[r], t)
        else:
            for c, r in layer:
                if t + 1 <= horizon:
                    rob_latest[r] = max(rob_latest[r], t)
        nxt = set()
        if t + 1 > horizon:
            break
        if (t + 1) % 2 == 0:
            for c, r in layer:
                m = cop.move(G, c, r, t + 1)
                see_cop(m, t + 1)
                if m != r:
                    nxt.add((m, r))
        else:
            for c, r in layer:
                for rp in G.neighbors(r):
                    if rp != c:
                        nxt.add((c, rp))
        layer = nxt
        t += 1

    worst = None
    if worst_arrival:
        worst = tuple(_worst_first_arrival(G, cop, horizon, v) for v in range(n))
    return TimingProfile(
        tuple(rob_latest), tuple(cop_earliest), horizon, truncated, worst
    )


def _worst_first_arrival(G: Graph, cop, horizon: int, target: int):
    """Latest first arrival of the cop at ``target`` over robber
    behaviours; -1 if some play avoids it entirely within the horizon.
    Diagnostic companion to ``cop_earliest`` (which takes the minimum)."""
    c0 = cop.start(G)
    if c0 == target:
        return 0
    n = G.order
    layer = {(c0, r0) for r0 in range(n) if r0 != c0}
    latest = None
    t = 1
    while t < horizon and layer:
        nxt = set()
        if (t + 1) % 2 == 0:
            for c, r in layer:
                m = cop.move(G, c, r, t + 1)
                if m == target:
                    latest = t + 1 if latest is None else max(latest, t + 1)
                    continue  # play counted; stop extending it
                if m != r:
                    nxt.add((m, r))
        else:
            for c, r in layer:
                for rp in G.neighbors(r):
                    if rp != c:
                        nxt.add((c, rp))
        layer = nxt
        t += 1
    if layer:
        return -1  # some play never reaches the target within the horizon
    return latest if latest is not None else -1


def order_from_protective(G: Graph, profile: TimingProfile) -> DominatingOrder:
    """Sort vertices by their latest-robbed round (never-robbed first,
    ties by id) and attach greedy dominators; the result must verify.

    Raises when the profile contradicts the protective requirements or
    the recovered order fails verification (horizon too small, or the
    strategy is not protective)."""
    n = G.order
    if profile.truncated:
        raise ProtectiveContradictionError("profile truncated: raise the budget")
    for v in range(n):
        tc = profile.cop_earliest[v]
        tr = profile.rob_latest[v]
        if tc < 0:
            raise ProtectiveContradictionError(
                f"cop never reaches vertex {v} within horizon {profile.horizon}"
            )
        if tr >= tc:
            raise ProtectiveContradictionError(
                f"vertex {v} robbed at round {tr}, at or after cop arrival {tc}"
            )
    sequence = tuple(sorted(range(n), key=lambda v: (profile.rob_latest[v], v)))
    region = {sequence[0]}
    dominator = {}
    for v in sequence[1:]:
        region.add(v)
        for u in sorted(region):
            if u != v and G.adjacent(u, v) and all(
                G.adjacent(u, w) for w in G.open_neighbors(v) if w in region
            ):
                dominator[v] = u
                break
        else:
            raise ProtectiveContradictionError(
                f"vertex {v} undominated in its recovered prefix"
            )
    order = DominatingOrder(sequence, dominator)
    check = verify_dominating_order(G, order)
    if not check:
        raise ProtectiveContradictionError(
            f"recovered order fails at rank {check.where}: {check.detail}"
        )
    return order
