import pytest
from hypothesis import given, settings, strategies as st

from pursuit import (
    GeneratorContractError,
    Graph,
    GraphFormatError,
    LazyGraph,
    ball,
    dominates,
    induced_subgraph,
)
from pursuit.generators import (
    complete_graph,
    cycle_graph,
    double_wheel,
    path_graph,
    random_connected_graph,
    ray,
)


def test_neighbors_are_closed():
    P3 = path_graph(3)
    assert P3.neighbors(1) == {0, 1, 2}
    assert P3.neighbors(0) == {0, 1}
    single = Graph(1)
    assert single.neighbors(0) == {0}


def test_neighbors_unknown_vertex():
    with pytest.raises(ValueError):
        path_graph(3).neighbors(5)


def test_block_hub_neighbors():
    G, _ = double_wheel()
    hub = G.vertex_by_label("c")
    expected = {hub} | {G.vertex_by_label(f"b_{i}") for i in range(5)}
    assert G.neighbors(hub) == expected


def test_dominates_complete_and_cycle():
    K3 = complete_graph(3)
    assert all(dominates(K3, u, v) for u in range(3) for v in range(3) if u != v)
    C4 = cycle_graph(4)
    assert not any(dominates(C4, u, v) for u in range(4) for v in range(4) if u != v)


def test_dominates_on_induced_pair():
    G, _ = double_wheel()
    a0, b4 = G.vertex_by_label("a_0"), G.vertex_by_label("b_4")
    sub, back = induced_subgraph(G, [a0, b4])
    local = {orig: i for i, orig in enumerate(back)}
    assert dominates(sub, local[a0], local[b4])


def test_dominates_never_reflexive():
    assert not dominates(path_graph(2), 0, 0)


def test_induced_identity_and_isolated():
    P3 = path_graph(3)
    whole, back = induced_subgraph(P3, range(3))
    assert whole == P3 and back == (0, 1, 2)
    iso, _ = induced_subgraph(P3, [0, 2])
    assert iso.edge_count() == 0 and iso.order == 2


def test_induced_block_prefix_is_path():
    G, order = double_wheel()
    sub, back = induced_subgraph(G, order.sequence[:3])
    # a_0 - b_4 - c in some local labelling: exactly two edges, a path
    assert sub.order == 3 and sub.edge_count() == 2
    labels = {sub.label(v) for v in sub.vertices()}
    assert labels == {"a_0", "b_4", "c"}
    assert not sub.adjacent(sub.vertex_by_label("a_0"), sub.vertex_by_label("c"))


def test_induced_empty_rejected():
    with pytest.raises(ValueError):
        induced_subgraph(path_graph(3), [])


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 9), st.integers(0, 10_000))
def test_induced_functoriality(n, seed):
    # inducing on a superset then a subset equals inducing directly
    import random

    G = random_connected_graph(n, seed)
    rng = random.Random(seed + 1)
    big = sorted(rng.sample(range(n), k=max(2, n - 1)))
    small = sorted(rng.sample(big, k=max(1, len(big) - 1)))
    mid, back1 = induced_subgraph(G, big)
    small_local = [back1.index(v) for v in small]
    twice, _ = induced_subgraph(mid, small_local)
    direct, _ = induced_subgraph(G, small)
    assert twice == direct


def test_text_roundtrip_and_comments():
    G = random_connected_graph(7, 42)
    text = G.to_text()
    again = Graph.from_text("# a comment\n" + text)
    assert again == G


def test_text_rejects_bad_edges():
    with pytest.raises(GraphFormatError):
        Graph.from_text("3\n2 1\n")  # u < v required
    with pytest.raises(GraphFormatError):
        Graph.from_text("3\n1 1\n")  # loops never listed
    with pytest.raises(GraphFormatError):
        Graph.from_text("")


def test_dot_export_mentions_labels():
    G, _ = double_wheel()
    dot = G.to_dot()
    assert 'label="a_0"' in dot and "--" in dot


def test_ball_radius_zero_and_path():
    view = ball(ray(), 0)
    assert view.graph.order == 1
    view3 = ball(ray(), 3)
    assert view3.graph == path_graph(4)


def test_ball_nesting():
    small = ball(ray(), 2)
    large = ball(ray(), 3)
    inner_ids = [large.id_of[k] for k in small.keys]
    sub, back = induced_subgraph(large.graph, inner_ids)
    assert sub == small.graph


def test_ball_rejects_asymmetric_oracle():
    bad = LazyGraph(
        root=0,
        neighbors=lambda k: {k, k + 1},  # k+1 never lists k back
        canonical_order=lambda k: k,
    )
    with pytest.raises(GeneratorContractError):
        ball(bad, 2)


def test_ball_rejects_missing_loop():
    bad = LazyGraph(root=0, neighbors=lambda k: {k + 1}, canonical_order=lambda k: k)
    with pytest.raises(GeneratorContractError):
        ball(bad, 1)


def test_ball_rejects_clashing_ranks():
    bad = LazyGraph(
        root=0,
        neighbors=lambda k: {max(k - 1, 0), k, k + 1},
        canonical_order=lambda k: k // 2,
    )
    with pytest.raises(GeneratorContractError):
        ball(bad, 2)
