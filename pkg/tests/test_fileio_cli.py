import json

import pytest

import bimonoid_automata as ba
from bimonoid_automata import cli, fileio
from bimonoid_automata import trees as T
from bimonoid_automata import words as W
from bimonoid_automata.algebra import Semantics


@pytest.fixture
def b4_file(tmp_path):
    path = tmp_path / "b4.json"
    path.write_text(json.dumps(fileio.algebra_to_dict(ba.b4())))
    return str(path)


@pytest.fixture
def probe_file(tmp_path):
    automaton = W.probe_automaton(ba.b4(), 2, 2, 2)
    path = tmp_path / "probe.json"
    fileio.save_automaton(automaton, str(path))
    return str(path)


@pytest.fixture
def tree_probe_file(tmp_path):
    alph = T.RankedAlphabet({"alpha": 0, "sigma": 2})
    automaton = T.branching_probe_automaton(ba.b4(), 2, 2, 3, 2, alph)
    path = tmp_path / "tree_probe.json"
    fileio.save_automaton(automaton, str(path))
    return str(path)


def test_algebra_file_round_trip(b4_file):
    alg = fileio.load_algebra(b4_file)
    original = ba.b4()
    assert alg.names == original.names
    assert alg.add_table == original.add_table
    assert alg.mul_table == original.mul_table


def test_loader_refuses_invalid_tables(tmp_path):
    obj = fileio.algebra_to_dict(ba.b4())
    obj["add"][2][3] = "1"  # break associativity/commutativity
    path = tmp_path / "broken.json"
    path.write_text(json.dumps(obj))
    with pytest.raises(fileio.FileFormatError) as exc:
        fileio.load_algebra(str(path))
    assert "axioms fail" in str(exc.value) and "broken.json" in str(exc.value)
    alg = fileio.load_algebra(str(path), allow_invalid=True)
    assert not ba.validate_axioms(alg).ok


def test_loader_reports_unknown_table_entries(tmp_path):
    obj = fileio.algebra_to_dict(ba.boole())
    obj["mul"][0][1] = "7"
    path = tmp_path / "badnames.json"
    path.write_text(json.dumps(obj))
    with pytest.raises(fileio.FileFormatError) as exc:
        fileio.load_algebra(str(path))
    assert "unknown element" in str(exc.value)


def test_word_automaton_file_round_trip(probe_file):
    automaton = fileio.load_automaton(probe_file)
    assert isinstance(automaton, W.WordAutomaton)
    assert W.initial_semantics(automaton, ("gamma",)) == 2
    again = fileio.automaton_from_dict(fileio.automaton_to_dict(automaton))
    assert again.transitions == automaton.transitions
    assert again.initial == automaton.initial


def test_tree_automaton_file_round_trip(tree_probe_file):
    automaton = fileio.load_automaton(tree_probe_file)
    assert isinstance(automaton, T.TreeAutomaton)
    xi = T.doubled_probe_tree(automaton.alphabet)
    alg = automaton.algebra
    expected = alg.mul(alg.mul(2, alg.add(2, 3)), 2)
    assert alg.equal(T.initial_semantics(automaton, xi), expected)
    again = fileio.automaton_from_dict(fileio.automaton_to_dict(automaton))
    assert list(again.stored_transitions()) == list(automaton.stored_transitions())


def test_missing_keys_and_bad_json(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text("{not json")
    with pytest.raises(fileio.FileFormatError):
        fileio.load_automaton(str(path))
    path2 = tmp_path / "incomplete.json"
    path2.write_text(json.dumps({"algebra": "Boole"}))
    with pytest.raises(fileio.FileFormatError) as exc:
        fileio.load_automaton(str(path2))
    assert "alphabet" in str(exc.value)


def test_parse_word_input_forms(probe_file):
    automaton = fileio.load_automaton(probe_file)
    assert fileio.parse_word_input(automaton, "gamma") == ("gamma",)
    assert fileio.parse_word_input(automaton, "gamma gamma") == ("gamma", "gamma")
    assert fileio.parse_word_input(automaton, "gamma,gamma") == ("gamma", "gamma")
    assert fileio.parse_word_input(automaton, "") == ()
    with pytest.raises(ValueError):
        fileio.parse_word_input(automaton, "delta")
    chars = W.WordAutomaton(ba.boole(), ("a", "b"), ("q",), (1,), (1,), [])
    assert fileio.parse_word_input(chars, "abba") == ("a", "b", "b", "a")


def run_cli(args, capsys):
    code = cli.main(args)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_cli_eval_and_support(probe_file, capsys):
    code, out, _ = run_cli(
        ["eval", "--automaton", probe_file, "--input", "gamma", "--semantics", "init"], capsys
    )
    assert code == 0 and out.strip() == "2"
    code, out, _ = run_cli(
        ["eval", "--automaton", probe_file, "--input", "gamma", "--semantics", "run"], capsys
    )
    assert code == 0 and out.strip() == "0"
    code, out, _ = run_cli(
        ["support", "--automaton", probe_file, "--input", "gamma", "--semantics", "init"], capsys
    )
    assert code == 0 and out.strip() == "true"


def test_cli_eval_tree(tree_probe_file, capsys):
    code, out, _ = run_cli(
        [
            "eval",
            "--automaton",
            tree_probe_file,
            "--input",
            "sigma(alpha, sigma(alpha, alpha))",
            "--semantics",
            "init",
        ],
        capsys,
    )
    assert code == 0 and out.strip() == "0"  # 2*(2+3)*2 = 2*3*2 = 2*2 = 0 in B4


def test_cli_props_json(capsys):
    code, out, _ = run_cli(["props", "--algebra", "pentagon", "--format", "json"], capsys)
    assert code == 0
    data = json.loads(out)
    assert data["algebra"] == "PentagonN5"
    assert data["properties"]["strongly-zero-sum-free"]["holds"] is True
    assert data["properties"]["right-distributive"]["holds"] is False


def test_cli_props_rejects_infinite(capsys):
    code, _, err = run_cli(["props", "--algebra", "NatPlusMin"], capsys)
    assert code == 2 and "finite" in err


def test_cli_check_predicted_counterexample_exits_zero(capsys):
    code, out, _ = run_cli(
        ["check", "supports-words", "--algebra", "B4", "--trials", "5"], capsys
    )
    assert code == 0
    assert "counterexample" in out and "init-only" in out


def test_cli_check_consistent_exits_zero(capsys):
    code, out, _ = run_cli(
        ["check", "supports-trees", "--algebra", "pentagon", "--trials", "3"], capsys
    )
    assert code == 0 and "consistent" in out


def test_cli_check_unexpected_counterexample_exits_one(tmp_path, capsys):
    z2 = {
        "names": ["0", "1"],
        "add": [["0", "1"], ["1", "0"]],
        "mul": [["0", "0"], ["0", "1"]],
        "zero": "0",
        "one": "1",
    }
    path = tmp_path / "z2.json"
    path.write_text(json.dumps(z2))
    code, out, _ = run_cli(
        ["check", "supports-words", "--algebra", str(path), "--trials", "3"], capsys
    )
    assert code == 1
    assert "NOT AS PREDICTED" in out


def test_cli_usage_errors_exit_two(probe_file, capsys):
    code, _, err = run_cli(["props", "--algebra", "nosuch"], capsys)
    assert code == 2 and "nosuch" in err and "PentagonN5" in err
    code, _, err = run_cli(
        ["eval", "--automaton", probe_file, "--input", "delta"], capsys
    )
    assert code == 2 and "delta" in err
    code, _, err = run_cli(["eval", "--automaton", "missing.json", "--input", "x"], capsys)
    assert code == 2 and "missing.json" in err


def test_cli_convert_round_trip(probe_file, tmp_path, capsys):
    out_path = str(tmp_path / "as_tree.json")
    code, _, _ = run_cli(
        ["convert", "--automaton", probe_file, "--direction", "word-to-tree",
         "--output", out_path], capsys
    )
    assert code == 0
    converted = fileio.load_automaton(out_path)
    assert isinstance(converted, T.TreeAutomaton)
    back_path = str(tmp_path / "back.json")
    code, _, _ = run_cli(
        ["convert", "--automaton", out_path, "--direction", "tree-to-word",
         "--output", back_path], capsys
    )
    assert code == 0
    back = fileio.load_automaton(back_path)
    original = fileio.load_automaton(probe_file)
    assert back.transitions == original.transitions
    assert back.initial == original.initial and back.final == original.final


def test_cli_convert_with_custom_end_marker(probe_file, tmp_path, capsys):
    out_path = str(tmp_path / "marked.json")
    code, _, _ = run_cli(
        ["convert", "--automaton", probe_file, "--direction", "word-to-tree",
         "--end-marker", "bottom", "--output", out_path], capsys
    )
    assert code == 0
    converted = fileio.load_automaton(out_path)
    assert converted.alphabet.rank("bottom") == 0


def test_cli_profile_and_image(probe_file, capsys):
    code, out, _ = run_cli(
        ["profile", "--automaton", probe_file, "--input", "gamma", "--format", "json"],
        capsys,
    )
    assert code == 0
    data = json.loads(out)
    assert data["run"]["muls"] == 18 and data["init"]["muls"] == 12
    code, out, _ = run_cli(
        ["image", "--automaton", probe_file, "--max-len", "2", "--format", "json"], capsys
    )
    assert code == 0
    data = json.loads(out)
    assert data["images"]["run"] == ["0"]
    assert data["images"]["init"] == ["0", "2"]


def test_cli_eval_works_over_infinite_algebras(tmp_path, capsys):
    # tropical-style weights: run/init evaluation needs no enumeration
    automaton = {
        "algebra": "NatPlusMin",
        "alphabet": ["a"],
        "states": ["s", "t"],
        "initial": {"s": 2},
        "final": {"t": 5},
        "transitions": [
            {"from": "s", "symbol": "a", "to": "t", "weight": 3},
            {"from": "s", "symbol": "a", "to": "s", "weight": "inf"},
        ],
    }
    path = tmp_path / "tropical.json"
    path.write_text(json.dumps(automaton))
    code, out, _ = run_cli(
        ["eval", "--automaton", str(path), "--input", "a", "--semantics", "init"], capsys
    )
    # add=+, mul=min, omitted weights are 0: h(a) = (2, 2), init = min(2,0) + min(2,5) = 2
    assert code == 0 and out.strip() == "2"
    code, out, _ = run_cli(
        ["support", "--automaton", str(path), "--input", "a", "--semantics", "run"], capsys
    )
    assert code == 0 and out.strip() == "true"


def test_cli_check_rejects_infinite_algebra(capsys):
    code, _, err = run_cli(["check", "supports-words", "--algebra", "NatPlusMin"], capsys)
    assert code == 2 and "infinite" in err


def test_cli_allow_invalid_flag(tmp_path, capsys):
    obj = fileio.algebra_to_dict(ba.b4())
    obj["add"][2][3] = "1"
    path = tmp_path / "broken.json"
    path.write_text(json.dumps(obj))
    code, _, err = run_cli(["props", "--algebra", str(path)], capsys)
    assert code == 2 and "axioms fail" in err
    code, out, _ = run_cli(["props", "--algebra", str(path), "--allow-invalid"], capsys)
    assert code == 0


def test_cli_props_survives_hierarchy_breaking_table(tmp_path, capsys):
    # constant-zero mul with sum-free add: "strongly" holds vacuously while
    # plain zero-sum-freeness fails, contradicting an implication that only
    # holds for genuine strong bimonoids; the CLI must fail cleanly
    obj = {
        "names": ["0", "1"],
        "add": [["1", "1"], ["1", "1"]],
        "mul": [["0", "0"], ["0", "0"]],
        "zero": "0",
        "one": "1",
    }
    path = tmp_path / "degenerate.json"
    path.write_text(json.dumps(obj))
    code, _, err = run_cli(["props", "--algebra", str(path), "--allow-invalid"], capsys)
    assert code == 2 and "axioms" in err
