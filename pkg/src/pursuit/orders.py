"""Dominating and dismantling orders: construction, verification, depth.

A dominating order builds the graph one dominated vertex at a time; a
dismantling order tears it down the same way. Each order carries a
dominator map: the witness vertex that dominates each entry inside the
relevant prefix (dominating flavour) or suffix (dismantling flavour).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import CheckResult, InvalidOrderError
from .graphs import Graph, GraphFormatError


@dataclass(frozen=True)
class DominatingOrder:
    """Vertex permutation plus dominator map; rank 0 has no dominator."""

    sequence: tuple[int, ...]
    dominator: dict[int, int]
    _rank: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "sequence", tuple(self.sequence))
        object.__setattr__(self, "_rank", {v: i for i, v in enumerate(self.sequence)})

    def rank_of(self, v: int) -> int:
        return self._rank[v]

    def __len__(self) -> int:
        return len(self.sequence)

    @property
    def flavor(self) -> str:
        return "constructing"

    def terminal(self) -> int:
        return self.sequence[0]


@dataclass(frozen=True)
class DismantlingOrder:
    """Vertex permutation plus dominator map; the last vertex has no
    dominator. Truncations of infinite instances may leave further chain
    sinks without a dominator; verification reports those."""

    sequence: tuple[int, ...]
    dominator: dict[int, int]
    _rank: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "sequence", tuple(self.sequence))
        object.__setattr__(self, "_rank", {v: i for i, v in enumerate(self.sequence)})

    def rank_of(self, v: int) -> int:
        return self._rank[v]

    def __len__(self) -> int:
        return len(self.sequence)

    @property
    def flavor(self) -> str:
        return "dismantling"

    def terminal(self) -> int:
        return self.sequence[-1]


AnyOrder = DominatingOrder | DismantlingOrder


def _check_permutation(G: Graph, sequence) -> None:
    if sorted(sequence) != list(range(G.order)):
        raise InvalidOrderError("sequence is not a permutation of the vertex set")


def _greedy_peel(G: Graph):
    """Remove the lowest-id dominated vertex until stuck or one remains.

    Returns (removed, dominator_of, survivor) with dominator_of recording
    the lowest-id dominator alive at removal time, or None if peeling got
    stuck before reaching a single vertex.
    """
    alive = set(range(G.order))
    nbrs = {v: set(G.open_neighbors(v)) for v in alive}
    removed = []
    dominator_of = {}
    while len(alive) > 1:
        found = None
        for v in sorted(alive):
            closed_v = (nbrs[v] & alive) | {v}
            for u in sorted(nbrs[v] & alive):
                if closed_v <= (nbrs[u] & alive) | {u}:
                    found = (v, u)
                    break
            if found:
                break
        if found is None:
            return None
        v, u = found
        removed.append(v)
        dominator_of[v] = u
        alive.remove(v)
        for w in nbrs[v]:
            nbrs[w].discard(v)
    return removed, dominator_of, alive.pop()


def find_dominating_order(G: Graph) -> DominatingOrder | None:
    """Greedy peel-and-reverse; absent iff the graph is not constructible."""
    if not G.is_connected():
        raise ValueError("graph must be connected")
    peeled = _greedy_peel(G)
    if peeled is None:
        return None
    removed, dominator_of, survivor = peeled
    sequence = (survivor, *reversed(removed))
    return DominatingOrder(sequence, dominator_of)


def find_dismantling_order(G: Graph) -> DismantlingOrder | None:
    """Greedy removal sequence, first removed vertex at rank 0."""
    if not G.is_connected():
        raise ValueError("graph must be connected")
    peeled = _greedy_peel(G)
    if peeled is None:
        return None
    removed, dominator_of, survivor = peeled
    return DismantlingOrder((*removed, survivor), dominator_of)


def _dominates_within(G: Graph, region: set, u: int, v: int) -> bool:
    """Domination of v by u inside the subgraph induced on ``region``."""
    if u == v or u not in region or not G.adjacent(u, v):
        return False
    return all(G.adjacent(u, w) for w in G.open_neighbors(v) if w in region)


def _verify(G: Graph, order, suffix: bool, collect: bool):
    if isinstance(order, (DominatingOrder, DismantlingOrder)):
        sequence = order.sequence
        dom = order.dominator
    else:
        sequence = tuple(order)
        dom = None
    _check_permutation(G, sequence)
    n = len(sequence)
    ranks = range(0, n - 1) if suffix else range(1, n)
    region = set(sequence) if suffix else {sequence[0]}
    violations = []

    for rank in ranks:
        v = sequence[rank]
        if suffix:
            if rank > 0:
                region.discard(sequence[rank - 1])
        else:
            region.add(v)
        if dom is not None:
            d = dom.get(v)
            if d is None:
                violations.append((rank, f"vertex {v} has no dominator"))
            elif d not in region:
                side = "suffix" if suffix else "prefix"
                violations.append((rank, f"dominator {d} of {v} outside its {side}"))
            elif not _dominates_within(G, region, d, v):
                violations.append((rank, f"{d} does not dominate {v}"))
        else:
            candidates = (u for u in G.open_neighbors(v) if u in region)
            if not any(_dominates_within(G, region, u, v) for u in candidates):
                violations.append((rank, f"vertex {v} is undominated"))
        if violations and not collect:
            break

    if not violations:
        return CheckResult(True)
    rank, why = violations[0]
    detail = why if not collect else "; ".join(f"rank {r}: {w}" for r, w in violations)
    return CheckResult(False, where=rank, detail=detail)


def verify_dominating_order(G: Graph, order, collect: bool = False) -> CheckResult:
    """Check every rank is dominated within its prefix; reports the first
    offending rank. Accepts a bare sequence (dominator existence is then
    checked instead of a specific map)."""
    return _verify(G, order, suffix=False, collect=collect)


def verify_dismantling_order(G: Graph, order, collect: bool = False) -> CheckResult:
    return _verify(G, order, suffix=True, collect=collect)


def depth_table(order: AnyOrder, strict: bool = True) -> tuple:
    """Chain length from each vertex to the order's terminal vertex.

    Vertex-indexed. With ``strict=False`` stuck chains yield ``None``
    instead of raising (truncated orders have such sinks).
    """
    terminal = order.terminal()
    depth: dict[int, int | None] = {terminal: 0}

    def chase(v):
        trail = []
        cur = v
        while cur not in depth:
            if cur in trail:
                raise InvalidOrderError(f"dominator cycle through vertex {cur}")
            trail.append(cur)
            nxt = order.dominator.get(cur)
            if nxt is None:
                for w in trail:
                    depth[w] = None
                return
            cur = nxt
        base = depth[cur]
        for i, w in enumerate(reversed(trail), start=1):
            depth[w] = None if base is None else base + i

    for v in order.sequence:
        chase(v)
    if strict and any(depth[v] is None for v in order.sequence):
        stuck = [v for v in order.sequence if depth[v] is None]
        raise InvalidOrderError(f"dominator chain stuck at vertices {stuck}")
    return tuple(depth[v] for v in range(len(order.sequence)))


def naturalize_order(G: Graph, order: DominatingOrder):
    """Re-sort a dominating order by levels so ties in level keep the
    original rank; the same dominator map stays valid.

    Levels: the first vertex gets 0; every other vertex gets one more than
    the largest level among its earlier neighbours. Returns the new order
    and the vertex-indexed level table.
    """
    check = verify_dominating_order(G, order)
    if not check:
        raise InvalidOrderError(f"input order invalid at rank {check.where}: {check.detail}")
    sequence = order.sequence
    level: dict[int, int] = {sequence[0]: 0}
    rank = {v: i for i, v in enumerate(sequence)}
    for v in sequence[1:]:
        earlier = [u for u in G.open_neighbors(v) if rank[u] < rank[v]]
        if not earlier:
            raise InvalidOrderError(f"vertex {v} has no earlier neighbour")
        level[v] = max(level[u] for u in earlier) + 1
    new_seq = tuple(sorted(sequence, key=lambda v: (level[v], rank[v])))
    return (
        DominatingOrder(new_seq, dict(order.dominator)),
        tuple(level[v] for v in range(G.order)),
    )


# -- order file format ----------------------------------------------------
# line 1: `order v_0 v_1 ...`
# line 2: `delta v:d ...`   (omitted pairs mean "no dominator recorded")


def order_to_text(order: AnyOrder) -> str:
    head = "order " + " ".join(str(v) for v in order.sequence)
    pairs = " ".join(f"{v}:{d}" for v, d in sorted(order.dominator.items()))
    return f"{head}\ndelta {pairs}".rstrip() + "\n"


def order_from_text(text: str, flavor: str = "auto") -> AnyOrder:
    sequence = None
    dominator = {}
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if parts[0] == "order":
            sequence = tuple(int(x) for x in parts[1:])
        elif parts[0] == "delta":
            for pair in parts[1:]:
                v, d = pair.split(":")
                dominator[int(v)] = int(d)
        else:
            raise GraphFormatError(f"unexpected line in order file: {line!r}")
    if sequence is None:
        raise GraphFormatError("order file is missing its 'order' line")
    if flavor == "auto":
        rank = {v: i for i, v in enumerate(sequence)}
        ups = sum(1 for v, d in dominator.items() if rank[d] > rank[v])
        downs = len(dominator) - ups
        if ups and downs:
            raise GraphFormatError("mixed dominator directions; pass an explicit flavor")
        flavor = "dismantling" if ups else "constructing"
    if flavor in ("constructing", "dominating"):
        return DominatingOrder(sequence, dominator)
    if flavor == "dismantling":
        return DismantlingOrder(sequence, dominator)
    raise ValueError(f"unknown flavor {flavor!r}")


def load_order(path, flavor: str = "auto") -> AnyOrder:
    with open(path, "r", encoding="utf-8") as fh:
        return order_from_text(fh.read(), flavor=flavor)


def save_order(path, order: AnyOrder) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(order_to_text(order))
