import json

import pytest

from lvreal.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def write_json(tmp_path, name, payload):
    path = tmp_path / name
    path.write_text(json.dumps(payload))
    return str(path)


def test_svc_subcommand(capsys):
    code, out = run_cli(capsys, "svc", "--epsilon", "1/2", "--word", "0")
    assert code == 0
    payload = json.loads(out)
    assert payload["lo"] == "0" and payload["hi"] == "3/8"


def test_svc_remaining(capsys):
    code, out = run_cli(capsys, "svc", "--epsilon", "1/2", "--remaining", "10")
    assert code == 0
    assert json.loads(out)["remaining_length"] == "1025/2048"


def test_wwkl_subcommand(capsys, tmp_path):
    tree = write_json(tmp_path, "tree.json", {"excluded": ["00"]})
    code, out = run_cli(capsys, "--trials", "2000", "--seed", "42", "wwkl", "--tree", tree)
    assert code == 0
    payload = json.loads(out)
    assert payload["exact"] == "3/4"
    assert payload["succeeded"] + payload["failed"] == 2000
    assert payload["exhausted"] == 0
    lo, hi = payload["wilson99"]
    from fractions import Fraction

    assert Fraction(lo) < Fraction(3, 4) < Fraction(hi)


def test_wwkl_full_and_empty_trees(capsys, tmp_path):
    full = write_json(tmp_path, "full.json", {"excluded": []})
    code, out = run_cli(capsys, "--trials", "200", "wwkl", "--tree", full)
    assert json.loads(out)["estimate"] == "1"
    empty = write_json(tmp_path, "empty.json", {"excluded": ["0", "1"]})
    code, out = run_cli(capsys, "--trials", "200", "wwkl", "--tree", empty)
    assert json.loads(out)["estimate"] == "0"


def test_nash_subcommand(capsys, tmp_path):
    game = write_json(
        tmp_path,
        "game.json",
        {"A": [["1", "-1"], ["-1", "1/2"]], "B": [["-1", "1"], ["1", "-1"]]},
    )
    code, out = run_cli(capsys, "nash", "--game", game)
    assert code == 0
    payload = json.loads(out)
    assert payload["y"] == ["3/7", "4/7"]
    assert payload["x"] == ["1/2", "1/2"]
    assert payload["verified"] is True


def test_nash_malformed_input_exits_1(capsys, tmp_path):
    bad = write_json(tmp_path, "bad.json", {"A": [["1"]], "B": [["1", "2"]]})
    code, _ = run_cli(capsys, "nash", "--game", bad)
    assert code == 1


def test_rdiv_subcommand(capsys):
    code, out = run_cli(capsys, "rdiv", "--x", "1/2", "--y", "1/4")
    assert code == 0
    payload = json.loads(out)
    assert payload["exact"] == "1"
    assert payload["mind_changes"] == 1
    code, out = run_cli(capsys, "rdiv", "--x", "0", "--y", "0")
    assert code == 3  # exhausted: provisional value stands


def test_ivt_subcommand(capsys, tmp_path):
    flat = write_json(
        tmp_path,
        "flat.json",
        {"breakpoints": [["0", "-1"], ["2/5", "0"], ["3/5", "0"], ["1", "1"]]},
    )
    code, out = run_cli(capsys, "--seed", "5", "ivt", "--function", flat, "--advice-b", "1")
    assert code == 3  # trisection stalls on the plateau
    code, out = run_cli(capsys, "ivt", "--function", flat)
    assert code == 3
    line = write_json(tmp_path, "line.json", {"breakpoints": [["0", "-1"], ["1", "2"]]})
    code, out = run_cli(capsys, "ivt", "--function", line)
    assert code == 0
    assert json.loads(out)["outcome"] == "succeeding"


def test_density_subcommand(capsys, tmp_path):
    a3 = write_json(
        tmp_path, "a3.json", {"excluded": ["0" * j + "1" for j in range(21) if j != 3]}
    )
    code, out = run_cli(capsys, "density", "--tree", a3, "--k", "2")
    assert code == 0
    payload = json.loads(out)
    assert payload["word"].startswith("0001")
    from fractions import Fraction

    assert Fraction(payload["relative_measure"]) >= Fraction(3, 4)


def test_amplify_subcommand(capsys, tmp_path):
    a = write_json(tmp_path, "a.json", {"excluded": ["0"]})
    b = write_json(tmp_path, "b.json", {"excluded": ["0"]})
    code, out = run_cli(capsys, "amplify", "--tree-a", a, "--tree-b", b)
    assert code == 0
    payload = json.loads(out)
    assert payload["measure"] == "3/4" and payload["law"] == "3/4"


def test_majority_subcommand(capsys, tmp_path):
    oracle = write_json(
        tmp_path,
        "oracle.json",
        {
            "depth": 3,
            "k": 20,
            "cylinders": {
                "000": "1/3", "001": "1/3", "010": "1/3", "011": "1/3", "100": "1/3",
                "101": "2/3", "110": "2/3", "111": "2/3",
            },
        },
    )
    code, out = run_cli(capsys, "majority", "--oracle", oracle)
    assert code == 0
    from fractions import Fraction

    value = Fraction(json.loads(out)["value_rational"])
    assert abs(value - Fraction(1, 3)) <= Fraction(1, 2**20)


def test_estimate_compose(capsys, tmp_path):
    config = write_json(
        tmp_path,
        "compose.json",
        {"f_tree": {"excluded": ["00"]}, "g_tree": {"excluded": ["0"]}},
    )
    code, out = run_cli(
        capsys, "--trials", "4000", "--seed", "42", "estimate",
        "--machine", "compose", "--config", config,
    )
    assert code == 0
    payload = json.loads(out)
    assert abs(payload["succeeded"] / 4000 - 0.375) < 0.03


def test_byte_identical_reruns(capsys, tmp_path):
    tree = write_json(tmp_path, "tree.json", {"excluded": ["00"]})
    _, first = run_cli(capsys, "--trials", "500", "--seed", "9", "wwkl", "--tree", tree)
    _, second = run_cli(capsys, "--trials", "500", "--seed", "9", "wwkl", "--tree", tree)
    assert first == second


def test_payloads_contain_no_floats(capsys, tmp_path):
    tree = write_json(tmp_path, "tree.json", {"excluded": ["00"]})
    _, out = run_cli(capsys, "--trials", "300", "wwkl", "--tree", tree)

    def walk(node):
        if isinstance(node, dict):
            for v in node.values():
                walk(v)
        elif isinstance(node, list):
            for v in node:
                walk(v)
        else:
            assert not isinstance(node, float), node

    walk(json.loads(out))


def test_csv_output_mode(capsys, tmp_path):
    tree = write_json(tmp_path, "tree.json", {"excluded": ["00"]})
    code, out = run_cli(capsys, "--trials", "100", "--output", "csv", "wwkl", "--tree", tree)
    assert code == 0
    lines = out.strip().splitlines()
    assert any(line.startswith("exact,3/4") for line in lines)


def test_usage_error_exits_1(capsys):
    with pytest.raises(SystemExit) as info:
        main(["svc"])  # missing required --epsilon
    assert info.value.code == 1


def test_missing_file_exits_1(capsys):
    with pytest.raises(SystemExit) as info:
        main(["wwkl", "--tree", "/nonexistent/tree.json"])
    assert info.value.code == 1
