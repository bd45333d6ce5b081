import json
import random

import pytest

from dgframes.cli import main
from dgframes.complexes import ChainComplex, GradedMap, random_chain_map, random_complex
from dgframes.dg_nerve import NerveSimplex, make_perturbed_2simplex, make_strict
from dgframes.exact_linalg import IntMatrix


def two_step(scalar, name="W"):
    return ChainComplex(
        name, {0: 1, 1: 1}, {1: IntMatrix.from_rows([[scalar]])}, {0: ("e0",), 1: ("e1",)}
    )


def write_json(path, obj):
    path.write_text(json.dumps(obj), encoding="utf-8")
    return str(path)


@pytest.fixture
def valid_simplex(tmp_path):
    w = two_step(2)
    e = GradedMap(w, w, 1, {0: IntMatrix.from_rows([[1]])})
    s = make_perturbed_2simplex(GradedMap.identity(w), GradedMap.identity(w), e)
    return write_json(tmp_path / "valid.json", s.to_json())


@pytest.fixture
def corrupt_simplex(tmp_path):
    w = two_step(2)
    e = GradedMap(w, w, 1, {0: IntMatrix.from_rows([[1]])})
    s = make_perturbed_2simplex(GradedMap.identity(w), GradedMap.identity(w), e)
    tampered = dict(s.maps)
    tampered[(0, 1, 2)] = e.scale(2)  # D(e) != 0, so the identity at 0,1,2 breaks
    bad = NerveSimplex(list(s.objects), tampered)
    return write_json(tmp_path / "corrupt.json", bad.to_json())


def test_validate_passes(valid_simplex, capsys):
    code = main(["validate", "--input", valid_simplex])
    assert code == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["command"] == "validate"
    assert payload["summary"] == {"pass": 4, "fail": 0}
    assert all(item["status"] == "pass" for item in payload["report"])


def test_validate_flags_the_corrupted_key(corrupt_simplex, capsys):
    code = main(["validate", "--input", corrupt_simplex])
    assert code == 1
    payload = json.loads(capsys.readouterr().out)
    failures = [item for item in payload["report"] if item["status"] == "fail"]
    assert failures and failures[0]["location"] == "0,1,2"
    assert "witness" in failures[0]


def test_exit_code_2_on_input_errors(tmp_path, valid_simplex, capsys):
    assert main(["validate", "--input", str(tmp_path / "missing.json")]) == 2
    bad = tmp_path / "broken.json"
    bad.write_text("{not json", encoding="utf-8")
    assert main(["validate", "--input", str(bad)]) == 2
    wrong = write_json(tmp_path / "wrong.json", {"n": 1})
    assert main(["validate", "--input", wrong]) == 2
    err = capsys.readouterr().err
    assert "error:" in err
    # incomplete simplex: drop one cochain
    obj = json.loads(open(valid_simplex).read())
    del obj["maps"]["0,2"]
    partial = write_json(tmp_path / "partial.json", obj)
    assert main(["validate", "--input", partial]) == 2
    assert "missing cochains" in capsys.readouterr().err
    assert main(["validate", "--input", valid_simplex, "--max-len", "-1"]) == 2
    assert main(["frame", "--input", valid_simplex, "--alpha", "0,5"]) == 2
    assert main(["frame", "--input", valid_simplex, "--alpha", "zebra"]) == 2


def test_argparse_errors_exit_2(valid_simplex):
    with pytest.raises(SystemExit) as e:
        main(["frame", "--input", valid_simplex])  # --alpha is required
    assert e.value.code == 2
    with pytest.raises(SystemExit) as e:
        main(["unknown-command"])
    assert e.value.code == 2
    with pytest.raises(SystemExit) as e:
        main([])
    assert e.value.code == 2


def test_frame_payload(valid_simplex, capsys):
    code = main(["frame", "--input", valid_simplex, "--alpha", "0,1", "--seed", "7"])
    assert code == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["alpha"] == "0,1"
    assert payload["metadata"] == {"seed": 7, "max_len": 3}
    # cylinder of the identity of W: ranks 2, 3, 1 in degrees 0, 1, 2
    assert payload["frame"]["degrees"] == {"0": 2, "1": 3, "2": 1}
    assert payload["frame"]["labels"]["0"] == ["0|e0", "1|e0"]
    assert payload["homology"] == {"0": "Z/2"}


def test_homology_command(tmp_path, capsys):
    path = write_json(tmp_path / "cx.json", two_step(2).to_json())
    code = main(["homology", "--input", path])
    assert code == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["name"] == "W"
    assert payload["homology"] == {"0": "Z/2"}


def test_check_command(valid_simplex, corrupt_simplex, capsys):
    code = main(["check", "--input", valid_simplex, "--max-len", "1"])
    assert code == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["summary"]["fail"] == 0
    checks = {item["check"] for item in payload["report"]}
    assert {
        "maurer-cartan",
        "frame-d2",
        "latching-closure",
        "latching-split",
        "latching-cokernel",
        "last-vertex-chain",
        "last-vertex-section",
        "last-vertex-homotopy",
        "homotopical",
        "simplicial-compat",
    } <= checks
    code = main(["check", "--input", corrupt_simplex, "--max-len", "1"])
    assert code == 1
    payload = json.loads(capsys.readouterr().out)
    assert payload["summary"]["fail"] > 0


def test_recover_command(tmp_path, capsys):
    x = ChainComplex("X", {0: 2}, {}, {0: ("x0", "x1")})
    y = ChainComplex("Y", {0: 2}, {}, {0: ("y0", "y1")})
    g = GradedMap(x, y, 0, {0: IntMatrix.from_rows([[2, 1], [0, 3]])})
    path = write_json(tmp_path / "edge.json", make_strict([g]).to_json())
    code = main(["recover", "--input", path])
    assert code == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["difference_is_boundary"] is True
    assert payload["exact_match"] is True
    assert payload["recovered"]["matrices"]["0"] == [[2, 1], [0, 3]]
    # a 2-simplex is rejected
    rng = random.Random(80)
    a = random_complex(rng, name="A")
    b = random_complex(rng, name="B")
    c = random_complex(rng, name="C")
    s2 = make_strict([random_chain_map(rng, a, b), random_chain_map(rng, b, c)])
    path2 = write_json(tmp_path / "two.json", s2.to_json())
    assert main(["recover", "--input", path2]) == 2


def test_byte_determinism(valid_simplex, tmp_path, capsys):
    args = ["validate", "--input", valid_simplex, "--seed", "3"]
    main(args)
    first = capsys.readouterr().out
    main(args)
    second = capsys.readouterr().out
    assert first == second
    assert first.endswith("\n")
    out_path = tmp_path / "report.json"
    main(args + ["--output", str(out_path)])
    assert capsys.readouterr().out == ""  # nothing on stdout when --output is set
    assert out_path.read_bytes() == first.encode("utf-8")
    # canonical form: sorted keys, two-space indent
    assert first == json.dumps(json.loads(first), sort_keys=True, indent=2) + "\n"


def test_text_format(valid_simplex, capsys):
    code = main(["validate", "--input", valid_simplex, "--format", "text"])
    assert code == 0
    out = capsys.readouterr().out
    assert "PASS maurer-cartan @ 0,1,2" in out
    assert "summary: 4 pass, 0 fail" in out
    main(["frame", "--input", valid_simplex, "--alpha", "0,0", "--format", "text"])
    out = capsys.readouterr().out
    assert "alpha: 0,0" in out and "degrees:" in out
