import numpy as np
import pytest

from pursuit import _kernels as K
from pursuit.generators import cycle_graph, double_wheel, random_connected_graph


def _norm(dist, n):
    inf = 4 * n * n + 16
    out = np.array(dist, dtype=np.int64)
    out[out >= inf] = -1
    return out


@pytest.mark.parametrize("seed", range(15))
def test_backends_agree_on_tables(seed):
    G = random_connected_graph(2 + seed % 9, 1000 + seed)
    adj = G.adjacency_matrix()
    n = G.order
    a = K._tables_numba(adj)
    b = K._tables_numpy(adj)
    assert np.array_equal(_norm(a[0], n), _norm(b[0], n))
    assert np.array_equal(_norm(a[1], n), _norm(b[1], n))


@pytest.mark.parametrize("seed", range(10))
def test_backends_agree_on_survival(seed):
    G = random_connected_graph(2 + seed % 7, 2000 + seed)
    adj = G.adjacency_matrix()
    allowed = np.ones(G.order, dtype=np.bool_)
    cop_allowed = np.ones(G.order, dtype=np.bool_)
    if G.order > 2:
        allowed[seed % G.order] = False
        cop_allowed[(seed + 1) % G.order] = False
    a = K._survive_numba(adj, allowed, cop_allowed, 11)
    b = K._survive_numpy(adj, allowed, cop_allowed, 11)
    assert np.array_equal(a[2:], b[2:])


def test_distance_parity():
    # cop-to-move distances are odd, robber-to-move distances even
    G, _ = double_wheel()
    dc, dr = K.game_distance_tables(G.adjacency_matrix())
    n = G.order
    for c in range(n):
        for r in range(n):
            if c == r:
                continue
            if dc[c, r] >= 0:
                assert dc[c, r] % 2 == 1
            if dr[c, r] >= 0:
                assert dr[c, r] % 2 == 0


def test_c4_state_values():
    C4 = cycle_graph(4)
    dc, dr = K.game_distance_tables(C4.adjacency_matrix())
    off = ~np.eye(4, dtype=bool)
    # with the move, an adjacent cop captures; antipodal states are safe
    for c in range(4):
        for r in range(4):
            if c == r:
                continue
            assert dc[c, r] == (1 if C4.adjacent(c, r) else -1)
    # with the robber to move, every state escapes forever
    assert (dr[off] == -1).all()


def test_env_flag_selects_backend(monkeypatch):
    monkeypatch.setenv("PURSUIT_BACKEND", "numpy")
    assert K.backend() == "numpy"
    monkeypatch.setenv("PURSUIT_BACKEND", "numba")
    assert K.backend() == "numba"
    monkeypatch.setenv("PURSUIT_BACKEND", "nonsense")
    with pytest.raises(RuntimeError):
        K.backend()
    monkeypatch.delenv("PURSUIT_BACKEND")
    assert K.backend() in ("numba", "numpy")


def test_numpy_path_end_to_end(monkeypatch):
    monkeypatch.setenv("PURSUIT_BACKEND", "numpy")
    from pursuit import is_cop_win

    G, _ = double_wheel()
    assert is_cop_win(G)
    assert not is_cop_win(cycle_graph(5))
