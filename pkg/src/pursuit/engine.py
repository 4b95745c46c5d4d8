"""Alternating-move game loop, transcripts, and winning-criterion
evaluators.

Round convention: the cop places in round 0, the robber places in round
1, and thereafter the cop moves on even rounds and the robber on odd
rounds. Capture is checked after every move, so a robber stepping onto
the cop counts. A robber "visit" is recorded at his placement and at
every robber move, including moves along a loop (staying put).
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .errors import (
    CheckResult,
    EngineInvariantError,
    GraphFormatError,
    StrategyError,
    TranscriptFaultError,
)
from .graphs import Graph


@dataclass(frozen=True)
class Outcome:
    kind: str  # capture | horizon | fault
    round: int | None = None
    detail: str = ""


@dataclass(frozen=True)
class Transcript:
    """Full alternating move record of one play.

    ``stages`` holds, per cop move, the maximal cutoff k with
    ``retract(k, r) == c`` (only for constructing-family cops);
    ``chain_events`` holds (round, robber vertex, chain exponent) for the
    same moves.
    """

    moves: tuple  # (round, "cop" | "robber", vertex)
    outcome: Outcome
    visit_counts: tuple
    stages: tuple = ()
    chain_events: tuple = ()
    horizon: int = 0
    cop_kind: str = ""

    def positions(self, player: str):
        return [(t, v) for t, p, v in self.moves if p == player]

    def robber_moves(self):
        """Robber actions after placement: (round, previous, target)."""
        out = []
        prev = None
        for t, p, v in self.moves:
            if p != "robber":
                continue
            if prev is not None:
                out.append((t, prev, v))
            prev = v
        return out

    @property
    def captured(self) -> bool:
        return self.outcome.kind == "capture"


@dataclass
class GameConfig:
    arena: Graph
    cop: object
    robber: object
    max_rounds: int | None = None
    robber_start: int | None = None
    annotate: bool = True
    check_invariants: bool = True


def default_horizon(G: Graph, cop) -> int:
    family = getattr(cop, "family", None)
    if family is not None:
        depth = max(family.max_depth(), 1)
    else:
        depth = G.order
    return 10 * G.order * depth


def play(cfg: GameConfig) -> Transcript:
    """Run one game to capture, horizon, or abort. Pure given the arena,
    the strategies, the starts, and the horizon."""
    G = cfg.arena
    if not G.is_connected():
        raise ValueError("arena must be connected")
    n = G.order
    horizon = cfg.max_rounds if cfg.max_rounds is not None else default_horizon(G, cfg.cop)
    if horizon < 2:
        raise ValueError("max_rounds must be at least 2")

    family = getattr(cfg.cop, "family", None)
    annotate = cfg.annotate and family is not None and family.flavor == "constructing"

    moves = []
    visits = [0] * n
    stages = []
    chain_events = []

    c = cfg.cop.start(G)
    G._check(c)
    moves.append((0, "cop", c))

    if cfg.robber_start is not None:
        r = cfg.robber_start
        G._check(r)
    else:
        r = cfg.robber.start(G, c)
        G._check(r)
    moves.append((1, "robber", r))
    visits[r] += 1

    outcome = None
    if r == c:
        outcome = Outcome("capture", 1)

    t = 2
    while outcome is None and t <= horizon:
        mover = "cop" if t % 2 == 0 else "robber"
        try:
            if mover == "cop":
                m = cfg.cop.move(G, c, r, t)
            else:
                m = cfg.robber.move(G, c, r)
        except StrategyError as err:
            outcome = Outcome("fault", t, f"{mover}: {err}")
            break
        here = c if mover == "cop" else r
        if m not in G.neighbors(here):
            outcome = Outcome("fault", t, f"{mover}: illegal move {here} -> {m}")
            break
        moves.append((t, mover, m))
        if mover == "cop":
            c = m
            if annotate:
                chain = family.chain(r)
                if c in chain:
                    k = chain.index(c)
                    stage = n if k == 0 else family.rank(chain[k - 1])
                    stages.append((t, stage))
                    chain_events.append((t, r, k))
        else:
            r = m
            visits[r] += 1
        if c == r:
            outcome = Outcome("capture", t)
        t += 1

    if outcome is None:
        outcome = Outcome("horizon")

    transcript = Transcript(
        tuple(moves),
        outcome,
        tuple(visits),
        tuple(stages),
        tuple(chain_events),
        horizon,
        getattr(cfg.cop, "kind", ""),
    )
    if (
        annotate
        and cfg.check_invariants
        and transcript.cop_kind == "chain"
        and outcome.kind != "fault"
    ):
        check = check_pursuit_invariants(transcript)
        if not check:
            raise EngineInvariantError(check.detail)
    return transcript


def check_pursuit_invariants(T: Transcript) -> CheckResult:
    """Chain-pursuit transcript invariants: every cop move annotated, the
    stage sequence non-decreasing, and per-vertex chain exponents
    strictly decreasing."""
    cop_moves = [t for t, p, _ in T.moves if p == "cop" and t >= 2]
    if len(T.stages) != len(cop_moves):
        return CheckResult(False, detail="cop move without a chain annotation")
    last = None
    for t, stage in T.stages:
        if last is not None and stage < last:
            return CheckResult(False, where=t, detail=f"stage dropped to {stage} at round {t}")
        last = stage
    seen: dict[int, int] = {}
    for t, vertex, k in T.chain_events:
        if vertex in seen and k >= seen[vertex]:
            return CheckResult(
                False,
                where=t,
                detail=f"chain exponent at vertex {vertex} failed to decrease at round {t}",
            )
        seen[vertex] = k
    return CheckResult(True)


# -- winning-criterion evaluators -------------------------------------------


def _require_complete(T: Transcript) -> None:
    if T.outcome.kind == "fault":
        raise TranscriptFaultError(T.outcome.detail)


def evaluate_classic(T: Transcript) -> bool:
    """Capture happened."""
    _require_complete(T)
    return T.captured


def _bound_fn(bound, n: int):
    if isinstance(bound, int):
        return lambda v: bound
    if callable(bound):
        return bound
    seq = list(bound)
    if len(seq) != n:
        raise ValueError("bound table must cover every vertex")
    return lambda v: seq[v]


def evaluate_weak(T: Transcript, bound) -> CheckResult:
    """Capture, or every vertex's robber visit count within its bound.

    Reports the first vertex whose count crosses the bound, with the
    round at which it happened.
    """
    _require_complete(T)
    if T.captured:
        return CheckResult(True)
    n = len(T.visit_counts)
    limit = _bound_fn(bound, n)
    counts = [0] * n
    for t, p, v in T.moves:
        if p != "robber":
            continue
        counts[v] += 1
        if counts[v] > limit(v):
            return CheckResult(
                False, where=v, detail=f"vertex {v} visited {counts[v]} times by round {t}"
            )
    return CheckResult(True)


def evaluate_cweak(T: Transcript) -> CheckResult:
    """Capture, or the play has entered its fresh-escape phase: the final
    robber move enters a never-before-visited vertex.

    Finite surrogate for "from some round on, every move is fresh":
    revisits at the end of the observed play refute it, a fresh tail is
    consistent with it. ``where`` carries the last revisit round.
    """
    _require_complete(T)
    last_revisit = None
    visited = set()
    last_fresh = True
    for t, p, v in T.moves:
        if p != "robber":
            continue
        if visited:
            last_fresh = v not in visited
            if not last_fresh:
                last_revisit = t
        visited.add(v)
    if T.captured:
        return CheckResult(True, where=last_revisit)
    return CheckResult(last_fresh, where=last_revisit)


def check_shadow(T: Transcript, G: Graph, mapping) -> CheckResult:
    """Replay a transcript through a retraction: the mapped cop positions
    must form a legal walk, the robber must already be fixed by the map,
    and a capture must shadow to a capture at the same round."""
    f = dict(enumerate(mapping)) if not isinstance(mapping, dict) else mapping
    prev = None
    robber = None
    for t, p, v in T.moves:
        if p == "robber":
            if f[v] != v:
                return CheckResult(False, where=t, detail=f"robber at {v} not fixed by the map")
            robber = v
        else:
            img = f[v]
            if prev is not None and not G.adjacent(prev, img):
                return CheckResult(
                    False, where=t, detail=f"shadow step {prev} -> {img} is not an edge"
                )
            prev = img
    if T.captured:
        tc, _, cv = next(m for m in reversed(T.moves) if m[0] == T.outcome.round)
        if f[cv] != robber:
            return CheckResult(
                False, where=T.outcome.round, detail="capture does not shadow to a capture"
            )
    return CheckResult(True)


# -- serialisation -----------------------------------------------------------


def transcript_to_text(T: Transcript) -> str:
    return "\n".join(f"{t} {p} {v}" for t, p, v in T.moves) + "\n"


def transcript_to_json(T: Transcript) -> str:
    payload = {
        "horizon": T.horizon,
        "cop_kind": T.cop_kind,
        "moves": [[t, p, v] for t, p, v in T.moves],
        "outcome": {
            "kind": T.outcome.kind,
            "round": T.outcome.round,
            "detail": T.outcome.detail,
        },
        "visit_counts": list(T.visit_counts),
        "stages": [[t, s] for t, s in T.stages],
        "chain_events": [[t, v, k] for t, v, k in T.chain_events],
    }
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def transcript_from_json(text: str) -> Transcript:
    try:
        payload = json.loads(text)
        return Transcript(
            moves=tuple((t, p, v) for t, p, v in payload["moves"]),
            outcome=Outcome(
                payload["outcome"]["kind"],
                payload["outcome"]["round"],
                payload["outcome"].get("detail", ""),
            ),
            visit_counts=tuple(payload["visit_counts"]),
            stages=tuple((t, s) for t, s in payload.get("stages", [])),
            chain_events=tuple((t, v, k) for t, v, k in payload.get("chain_events", [])),
            horizon=payload.get("horizon", 0),
            cop_kind=payload.get("cop_kind", ""),
        )
    except (KeyError, TypeError, ValueError) as err:
        raise GraphFormatError(f"bad transcript file: {err}")


def load_transcript(path) -> Transcript:
    with open(path, "r", encoding="utf-8") as fh:
        return transcript_from_json(fh.read())


def save_transcript(path, T: Transcript) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(transcript_to_json(T))
