import json

import pytest

from sympcp.cli import run


def write(tmp_path, name, obj):
    path = tmp_path / name
    path.write_text(json.dumps(obj))
    return str(path)


@pytest.fixture
def files(tmp_path):
    return {
        "ce": write(tmp_path, "ce.json", {"alphabet": ["0", "1"], "pairs": [["00", "0"]]}),
        "cl": write(tmp_path, "cl.json", {"alphabet": ["0", "1"], "pairs": [["00", "0"], ["0", "00"]]}),
        "pres": write(tmp_path, "pres.json", {"letters": ["a", "b"], "relations": [["ab", "ba"]]}),
        "deriv": write(tmp_path, "d.json", {"steps": ["aab", "aba"]}),
        "r1": write(tmp_path, "r1.json", {"p": ["u:0", "eps2", "eps2", "vbar:0"], "q": ["eps2", "v:0", "ubar:0"]}),
        "bad": write(tmp_path, "bad.json", {"p": ["u:0"], "q": ["v:0"]}),
        "tmp": tmp_path,
    }


def call(capsys, *argv):
    code = run(list(argv))
    out = capsys.readouterr().out
    return code, (json.loads(out) if out.strip().startswith("{") else out)


def test_validate_and_symmetrize(files, capsys):
    code, rep = call(capsys, "validate", "--input", files["ce"])
    assert code == 0 and rep == {"valid": True, "k": 1, "alphabet_size": 2, "symmetric": False}
    code, rep = call(capsys, "symmetrize", "--input", files["ce"])
    assert rep["pairs"] == [["00", "0"], ["0", "00"]]


def test_solve_exit_codes(files, capsys):
    code, rep = call(capsys, "solve", "--input", files["ce"])
    assert code == 1 and rep["outcome"] == "unsolvable" and rep["reason"] == "length-monotone"
    code, rep = call(capsys, "solve", "--input", files["cl"])
    assert code == 0 and rep["indices"] == [0, 1]
    hard = write(files["tmp"], "hard.json", {"alphabet": ["0", "1"], "pairs": [["100", "1"], ["0", "100"], ["1", "0"]]})
    code, rep = call(capsys, "solve", "--input", hard, "--max-tiles", "4")
    assert code == 3 and rep["outcome"] == "exhausted"


def test_usage_errors(files, capsys):
    assert run(["solve"]) == 2
    assert run(["solve", "--input", files["cl"], "--max-tiles", "0"]) == 2
    assert run(["solve", "--input", str(files["tmp"] / "missing.json")]) == 2
    assert run(["nonsense"]) == 2
    bad = write(files["tmp"], "triv.json", {"alphabet": ["0", "1"], "pairs": [["0", "0"]]})
    assert run(["validate", "--input", bad]) == 2
    capsys.readouterr()


def test_enumerate(files, capsys):
    code, rep = call(capsys, "enumerate", "--input", files["cl"], "--max-tiles", "2")
    assert code == 0 and rep["solutions"] == [[0, 1], [1, 0]]


def test_reduce_translate(files, capsys):
    code, rep = call(capsys, "reduce", "--input", files["pres"], "--x", "aab", "--y", "aba")
    assert code == 0 and len(rep["pairs"]) == 14
    code, rep = call(capsys, "reduce", "--input", files["pres"], "--x", "aab", "--y", "aba", "--plain")
    assert len(rep["pairs"]) == 12
    code, rep = call(capsys, "translate", "--input", files["pres"], "--derivation", files["deriv"])
    assert code == 0
    indices = ",".join(map(str, rep["indices"]))
    code, rep = call(capsys, "translate", "--input", files["pres"], "--x", "aab", "--y", "aba", "--solution", indices)
    assert code == 0 and rep["steps"][0] == "aab" and rep["steps"][-1] == "aba"
    code, rep = call(capsys, "translate", "--input", files["pres"], "--x", "aab", "--y", "aba", "--solution", "0,1")
    assert code == 1


def test_encoding_commands(files, capsys):
    code, rep = call(capsys, "encode-pair", "--w", "00", "--j", "20")
    assert rep["rows"] == [["4", "0", "0"], ["0", "1", "0"], ["0", "2", "16"]]
    code, rep = call(capsys, "decode-matrix", "--rows", "8,0,0;0,1,0;0,866,1024")
    assert code == 0 and rep == {"w": "000", "J": "20213"}
    code, rep = call(capsys, "decode-matrix", "--rows", "3,0,0;0,1,0;0,0,1")
    assert code == 1
    code, rep = call(capsys, "matrices", "--input", files["cl"])
    assert rep["h"] == 1 and rep["matrices"]["eps2"] == [["1", "0", "0"], ["0", "1", "0"], ["0", "2", "4"]]
    code, rep = call(capsys, "verify-embedding", "--input", files["cl"], "--trials", "50")
    assert code == 0 and rep["failures"] == []
    abc = write(files["tmp"], "abc.json", {"alphabet": ["a", "b", "c"], "pairs": [["ab", "c"]]})
    code, rep = call(capsys, "encode-binary", "--input", abc)
    assert rep["width"] == 2 and rep["pairs"] == [["0001", "10"]]


def test_gamma_and_relations(files, capsys):
    code, rep = call(capsys, "gamma", "--input", files["ce"])
    assert [g["tag"] for g in rep["generators"]] == ["eps2", "u:0", "ubar:0", "v:0", "vbar:0"]
    code, rep = call(capsys, "gamma-reduced", "--input", files["ce"])
    assert len(rep["generators"]) == 3
    code, rep = call(capsys, "verify-relation", "--input", files["ce"], "--relation", files["r1"])
    assert code == 0 and rep["verified"]
    code, rep = call(capsys, "verify-relation", "--input", files["ce"], "--relation", files["bad"])
    assert code == 1
    code, rep = call(capsys, "factor-blocks", "--input", files["ce"], "--relation", files["r1"])
    assert code == 0 and rep["solution"] == [0, 1] and rep["solves_closure"] and rep["well_formed"]
    code, rep = call(capsys, "matrix-relation-check", "--input", files["ce"], "--relation", files["r1"])
    assert code == 0 and rep["equal"]
    code, rep = call(capsys, "relation-from-solution", "--input", files["cl"], "--solution", "0,1", "--symmetric")
    assert rep == {"p": ["u:0", "eps2", "eps2", "v:0"], "q": ["eps2", "v:0", "u:0", "eps2"]}
    code, rep = call(capsys, "relation-from-solution", "--input", files["cl"], "--solution", "0")
    assert code == 1
    code, rep = call(capsys, "find-relation", "--input", files["ce"], "--max-length", "12")
    assert code == 0 and rep["outcome"] == "solution"


def test_demo_and_text_output(files, capsys):
    code, rep = call(capsys, "demo-counterexample")
    assert code == 0 and rep["all_verified"]
    code, out = call(capsys, "solve", "--input", files["cl"], "--format", "text")
    assert "outcome: solution" in out and out.rstrip().endswith("exit: 0")
    target = files["tmp"] / "out.json"
    assert run(["validate", "--input", files["cl"], "--output", str(target)]) == 0
    assert json.loads(target.read_text())["symmetric"]
