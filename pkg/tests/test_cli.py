import json

import pytest

from pursuit.cli import _cmd_play, build_parser, main


def run(*argv):
    return main(list(argv))


def test_generate_order_solve_pipeline(tmp_path):
    prefix = str(tmp_path / "wheel")
    assert run("generate", "--family", "double_wheel", "--out", prefix) == 0
    assert (tmp_path / "wheel.graph").exists()
    assert (tmp_path / "wheel.order").exists()

    out = str(tmp_path / "found.order")
    assert run("order", "--graph", f"{prefix}.graph", "--out", out) == 0
    assert run("verify", "--graph", f"{prefix}.graph", "--order", out) == 0
    assert run("verify", "--graph", f"{prefix}.graph", "--order", f"{prefix}.order") == 0


def test_solve_c4_robber_win(tmp_path, capsys):
    prefix = str(tmp_path / "c4")
    run("generate", "--family", "cycle", "--n", "4", "--out", prefix)
    capsys.readouterr()
    assert run("solve", "--graph", f"{prefix}.graph") == 0
    assert "robber-win" in capsys.readouterr().out


def test_order_reports_not_constructible(tmp_path, capsys):
    prefix = str(tmp_path / "pet")
    run("generate", "--family", "petersen", "--out", prefix)
    capsys.readouterr()
    assert run("order", "--graph", f"{prefix}.graph") == 0
    assert "not constructible" in capsys.readouterr().out


def test_simulate_and_verify_transcript(tmp_path):
    prefix = str(tmp_path / "wheel")
    run("generate", "--family", "double_wheel", "--out", prefix)
    tj = str(tmp_path / "game.json")
    tt = str(tmp_path / "game.txt")
    assert run(
        "simulate", "--graph", f"{prefix}.graph", "--order", f"{prefix}.order",
        "--cop", "s_star", "--robber", "greedy", "--horizon", "500",
        "--out", tt, "--json-out", tj,
    ) == 0
    lines = open(tt).read().splitlines()
    assert lines[0].startswith("0 cop ")
    assert run(
        "verify", "--graph", f"{prefix}.graph", "--order", f"{prefix}.order",
        "--transcript", tj, "--criterion", "classic",
    ) == 0
    assert run(
        "verify", "--graph", f"{prefix}.graph", "--order", f"{prefix}.order",
        "--transcript", tj, "--criterion", "weak", "--bound", "default",
    ) == 0


def test_verify_cweak_fails_on_oscillation(tmp_path):
    prefix = str(tmp_path / "wheel")
    run("generate", "--family", "double_wheel", "--out", prefix)
    # hand-made transcript: robber oscillates a_1 <-> a_2 (ids 1, 2) while
    # the cop sits on the hub's cycle far away
    moves = [[0, "cop", 5], [1, "robber", 1]]
    pos = 1
    for i in range(20):
        moves.append([2 + 2 * i, "cop", 5])
        pos = 2 if pos == 1 else 1
        moves.append([3 + 2 * i, "robber", pos])
    counts = [0] * 11
    counts[1], counts[2] = 11, 10
    payload = {
        "horizon": 43,
        "moves": moves,
        "outcome": {"kind": "horizon", "round": None, "detail": ""},
        "visit_counts": counts,
        "stages": [],
        "chain_events": [],
    }
    path = tmp_path / "osc.json"
    path.write_text(json.dumps(payload))
    assert run(
        "verify", "--graph", f"{prefix}.graph", "--transcript", str(path),
        "--criterion", "cweak",
    ) == 1


def test_scripted_and_evader_robbers_via_cli(tmp_path, capsys):
    prefix = str(tmp_path / "wheel")
    run("generate", "--family", "double_wheel", "--out", prefix)
    script = tmp_path / "moves.txt"
    script.write_text("2 3 4\n")
    capsys.readouterr()
    assert run(
        "simulate", "--graph", f"{prefix}.graph", "--order", f"{prefix}.order",
        "--cop", "s_star", "--robber", f"script:{script}", "--horizon", "100",
    ) == 0
    assert "capture" in capsys.readouterr().out
    assert run(
        "simulate", "--graph", f"{prefix}.graph", "--order", f"{prefix}.order",
        "--cop", "optimal", "--robber", "h_evader", "--horizon", "200",
    ) == 0
    assert "capture" in capsys.readouterr().out


def test_verify_reports_bad_order(tmp_path, capsys):
    prefix = str(tmp_path / "hub")
    run("generate", "--family", "hubbed_path", "--n", "9", "--out", prefix)
    capsys.readouterr()
    code = run("verify", "--graph", f"{prefix}.graph", "--order", f"{prefix}.order")
    out = capsys.readouterr().out
    assert code == 1 and "rank 9" in out


def test_retraction_verification(tmp_path):
    prefix = str(tmp_path / "hub")
    run("generate", "--family", "hubbed_path", "--n", "9", "--out", prefix)
    lines = []
    for v in range(10):
        lines.append(f"{v} 0")
    for v in (10, 11, 12):
        lines.append(f"{v} {v}")
    rmap = tmp_path / "fold.map"
    rmap.write_text("\n".join(lines) + "\n")
    assert run("verify", "--graph", f"{prefix}.graph", "--retraction", str(rmap)) == 0


def test_timing_and_recovery(tmp_path, capsys):
    prefix = str(tmp_path / "p3")
    run("generate", "--family", "path", "--n", "3", "--out", prefix)
    capsys.readouterr()
    assert run(
        "timing", "--graph", f"{prefix}.graph", "--order", f"{prefix}.order",
        "--cop", "protective", "--horizon", "12", "--recover-order",
    ) == 0
    out = capsys.readouterr().out
    assert out.startswith("horizon 12")
    assert "recovered" in out


def test_outputs_are_byte_identical(tmp_path):
    a, b = str(tmp_path / "a"), str(tmp_path / "b")
    for prefix in (a, b):
        run("generate", "--family", "random_constructible", "--n", "9",
            "--seed", "13", "--out", prefix)
    assert open(f"{a}.graph").read() == open(f"{b}.graph").read()
    assert open(f"{a}.order").read() == open(f"{b}.order").read()


def test_bad_flags_exit_two():
    with pytest.raises(SystemExit) as err:
        main(["generate", "--family", "nonsense", "--out", "x"])
    assert err.value.code == 2
    with pytest.raises(SystemExit):
        main([])


def test_missing_file_is_reported(capsys):
    assert run("solve", "--graph", "/nonexistent/g.graph") == 1
    assert "error:" in capsys.readouterr().err


def test_interactive_play_rejects_illegal_moves(tmp_path):
    prefix = str(tmp_path / "p4")
    run("generate", "--family", "path", "--n", "4", "--out", prefix)
    parser = build_parser()
    args = parser.parse_args([
        "play", "--graph", f"{prefix}.graph", "--order", f"{prefix}.order",
        "--cop", "s_star", "--horizon", "20",
    ])
    feed = iter(["banana", "0", "7", "0", "1"])
    log = []
    code = _cmd_play(args, input_fn=lambda _: next(feed), output_fn=log.append)
    assert code == 0
    text = "\n".join(log)
    assert "not a vertex" in text
    assert "illegal move" in text
    assert "captured" in text
