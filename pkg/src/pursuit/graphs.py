"""Finite reflexive graphs, lazy infinite graphs, and finite balls.

Every graph here is undirected and reflexive: each vertex carries an
implicit loop, so ``v in G.neighbors(v)`` always holds even though loops
are never stored and never written to disk.
"""

from __future__ import annotations

from collections import deque
from collections.abc import Callable, Iterable
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .errors import GeneratorContractError, GraphFormatError

# Hard cap on the size of a single neighbour set returned by a lazy oracle.
NEIGHBOR_CAP = 100_000


class Graph:
    """Immutable undirected reflexive graph on vertices ``0 .. n-1``.

    Loops are implicit: the adjacency store never records ``(v, v)`` but
    every adjacency query treats a vertex as adjacent to itself.
    """

    __slots__ = ("_n", "_adj", "_labels", "_matrix", "_dist")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = (), labels=None):
        if n <= 0:
            raise ValueError("graph needs at least one vertex")
        adj = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for order {n}")
            if u == v:
                continue  # loops are implicit
            adj[u].add(v)
            adj[v].add(u)
        self._n = n
        self._adj = tuple(frozenset(s) for s in adj)
        if labels is not None:
            labels = tuple(labels)
            if len(labels) != n:
                raise ValueError("labels must match vertex count")
        self._labels = labels
        self._matrix = None
        self._dist = None

    @property
    def order(self) -> int:
        return self._n

    @property
    def labels(self):
        return self._labels

    def label(self, v: int) -> str:
        self._check(v)
        return self._labels[v] if self._labels else str(v)

    def vertex_by_label(self, name: str) -> int:
        if self._labels is None:
            raise KeyError(name)
        return self._labels.index(name)

    def vertices(self) -> range:
        return range(self._n)

    def _check(self, v: int) -> None:
        if not (isinstance(v, (int, np.integer)) and 0 <= v < self._n):
            raise ValueError(f"unknown vertex {v!r}")

    def adjacent(self, u: int, v: int) -> bool:
        self._check(u)
        self._check(v)
        return u == v or v in self._adj[u]

    def neighbors(self, v: int) -> frozenset[int]:
        """Closed neighbourhood of ``v`` (always contains ``v``)."""
        self._check(v)
        return self._adj[v] | {v}

    def open_neighbors(self, v: int) -> frozenset[int]:
        self._check(v)
        return self._adj[v]

    def degree(self, v: int) -> int:
        self._check(v)
        return len(self._adj[v])

    def edges(self):
        for u in range(self._n):
            for v in self._adj[u]:
                if u < v:
                    yield (u, v)

    def edge_count(self) -> int:
        return sum(len(s) for s in self._adj) // 2

    def is_connected(self) -> bool:
        seen = {0}
        todo = deque([0])
        while todo:
            u = todo.popleft()
            for v in self._adj[u]:
                if v not in seen:
                    seen.add(v)
                    todo.append(v)
        return len(seen) == self._n

    def distances_from(self, source: int) -> list[int]:
        """BFS distances; unreachable vertices get -1."""
        self._check(source)
        dist = [-1] * self._n
        dist[source] = 0
        todo = deque([source])
        while todo:
            u = todo.popleft()
            for v in self._adj[u]:
                if dist[v] < 0:
                    dist[v] = dist[u] + 1
                    todo.append(v)
        return dist

    def distance_matrix(self) -> np.ndarray:
        if self._dist is None:
            m = np.empty((self._n, self._n), dtype=np.int32)
            for v in range(self._n):
                m[v] = self.distances_from(v)
            self._dist = m
        return self._dist

    def distance(self, u: int, v: int) -> int:
        return int(self.distance_matrix()[u, v])

    def adjacency_matrix(self) -> np.ndarray:
        """Boolean closed-adjacency matrix (diagonal is True)."""
        if self._matrix is None:
            m = np.zeros((self._n, self._n), dtype=np.bool_)
            for u in range(self._n):
                m[u, u] = True
                for v in self._adj[u]:
                    m[u, v] = True
            self._matrix = m
        return self._matrix

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._adj == other._adj

    def __hash__(self):
        return hash((self._n, self._adj))

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, edges={self.edge_count()})"

    # -- serialisation --------------------------------------------------

    def to_text(self) -> str:
        lines = [str(self._n)]
        lines.extend(f"{u} {v}" for u, v in sorted(self.edges()))
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str, labels=None) -> "Graph":
        n = None
        edges = []
        for lineno, raw in enumerate(text.splitlines(), start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            if n is None:
                try:
                    n = int(line)
                except ValueError:
                    raise GraphFormatError(f"line {lineno}: expected vertex count")
                continue
            parts = line.split()
            if len(parts) != 2:
                raise GraphFormatError(f"line {lineno}: expected 'u v'")
            try:
                u, v = int(parts[0]), int(parts[1])
            except ValueError:
                raise GraphFormatError(f"line {lineno}: expected integers")
            if not (0 <= u < v < (n or 0)):
                raise GraphFormatError(
                    f"line {lineno}: edge ({u}, {v}) must satisfy 0 <= u < v < n"
                )
            edges.append((u, v))
        if n is None:
            raise GraphFormatError("empty graph file")
        return cls(n, edges, labels=labels)

    def to_dot(self, name: str = "G") -> str:
        lines = [f"graph {name} {{"]
        for v in range(self._n):
            lines.append(f'  {v} [label="{self.label(v)}"];')
        for u, v in sorted(self.edges()):
            lines.append(f"  {u} -- {v};")
        lines.append("}")
        return "\n".join(lines) + "\n"


def load_graph(path) -> Graph:
    with open(path, "r", encoding="utf-8") as fh:
        return Graph.from_text(fh.read())


def save_graph(path, graph: Graph) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(graph.to_text())


def dominates(G: Graph, u: int, v: int) -> bool:
    """True iff ``u != v``, ``u ~ v``, and every neighbour of ``v`` is
    adjacent to ``u`` (closed neighbourhood containment)."""
    if u == v:
        return False
    if not G.adjacent(u, v):
        return False
    return all(G.adjacent(u, w) for w in G.open_neighbors(v))


class Induced(NamedTuple):
    graph: Graph
    to_parent: tuple[int, ...]


def induced_subgraph(G: Graph, subset: Iterable[int]) -> Induced:
    """Subgraph induced on ``subset``, with dense re-indexed vertex ids.

    ``to_parent[new_id]`` recovers the original vertex id; new ids follow
    ascending original ids.
    """
    keep = sorted(set(subset))
    if not keep:
        raise ValueError("cannot induce on an empty vertex set")
    for v in keep:
        G._check(v)
    index = {v: i for i, v in enumerate(keep)}
    edges = [
        (index[u], index[v])
        for u, v in G.edges()
        if u in index and v in index
    ]
    labels = None
    if G.labels is not None:
        labels = tuple(G.labels[v] for v in keep)
    return Induced(Graph(len(keep), edges, labels=labels), tuple(keep))


# -- lazy graphs and balls ----------------------------------------------


@dataclass(frozen=True)
class LazyGraph:
    """Countable reflexive graph given by a root and a neighbour oracle.

    The oracle must be pure, symmetric, include each key in its own
    neighbour set, and return finite sets. ``canonical_order`` injectively
    maps keys to naturals; the optional hints give the dominator of each
    key under the generator's known orders (``None`` marks the terminal).
    """

    root: object
    neighbors: Callable[[object], Iterable[object]]
    canonical_order: Callable[[object], int]
    domination_hint: Callable[[object], object] | None = None
    dismantling_hint: Callable[[object], object] | None = None

    def neighbor_set(self, key) -> frozenset:
        out = set()
        for i, nb in enumerate(self.neighbors(key)):
            if i >= NEIGHBOR_CAP:
                raise GeneratorContractError(
                    f"neighbour set of {key!r} exceeds {NEIGHBOR_CAP} entries"
                )
            out.add(nb)
        if key not in out:
            raise GeneratorContractError(f"{key!r} missing from its own neighbour set")
        return frozenset(out)


@dataclass(frozen=True)
class BallView:
    """Finite ball of a lazy graph with the key/id bijection and the
    generator's order hints restricted to the ball."""

    graph: Graph
    keys: tuple            # id -> key
    id_of: dict            # key -> id
    dominator_hint: dict   # id -> id, constructing flavour
    dismantling_dominator_hint: dict

    def dominating_order(self):
        from .orders import DominatingOrder

        return DominatingOrder(tuple(range(self.graph.order)), dict(self.dominator_hint))

    def dismantling_order(self):
        from .orders import DismantlingOrder

        return DismantlingOrder(
            tuple(range(self.graph.order)), dict(self.dismantling_dominator_hint)
        )


def ball(L: LazyGraph, radius: int) -> BallView:
    """All keys within graph distance ``radius`` of the root, as a Graph.

    Vertex ids are assigned by ``canonical_order``, not by discovery
    order, so order hints stay valid after truncation.
    """
    if radius < 0:
        raise ValueError("radius must be non-negative")
    dist = {L.root: 0}
    frontier = deque([L.root])
    while frontier:
        key = frontier.popleft()
        if dist[key] == radius:
            continue
        for nb in L.neighbor_set(key):
            if nb not in dist:
                dist[nb] = dist[key] + 1
                frontier.append(nb)

    members = list(dist)
    ranks = {key: L.canonical_order(key) for key in members}
    if len(set(ranks.values())) != len(members):
        raise GeneratorContractError("canonical_order is not injective on the ball")
    members.sort(key=ranks.__getitem__)
    id_of = {key: i for i, key in enumerate(members)}

    edges = set()
    neigh = {key: L.neighbor_set(key) for key in members}
    for key in members:
        for nb in neigh[key]:
            if nb in id_of and nb != key:
                if key not in neigh[nb]:
                    raise GeneratorContractError(
                        f"asymmetric oracle: {nb!r} lists {key!r} but not vice versa"
                    )
                a, b = id_of[key], id_of[nb]
                edges.add((min(a, b), max(a, b)))

    labels = tuple(str(key) for key in members)
    graph = Graph(len(members), edges, labels=labels)

    def restrict(hint):
        out = {}
        if hint is None:
            return out
        for key in members:
            target = hint(key)
            if target is not None and target in id_of:
                out[id_of[key]] = id_of[target]
        return out

    return BallView(
        graph=graph,
        keys=tuple(members),
        id_of=id_of,
        dominator_hint=restrict(L.domination_hint),
        dismantling_dominator_hint=restrict(L.dismantling_hint),
    )
