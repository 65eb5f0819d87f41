import json

import pytest

from skewchar import LaurentPoly, Partition, character, CharacterFamily, Method
from skewchar.cli import ContainmentError, ParseError, main, parse_shape


def test_parse_shape_examples():
    sh = parse_shape("4,4,4,2,1/3,1")
    assert sh.outer == Partition((4, 4, 4, 2, 1))
    assert sh.inner == Partition((3, 1))
    assert parse_shape("3").outer == Partition((3,))
    assert parse_shape("3").inner == Partition()
    assert parse_shape("0").outer == Partition()
    assert parse_shape("2,1/0").inner == Partition()


def test_parse_shape_errors():
    with pytest.raises(ParseError) as err:
        parse_shape("2,3")
    assert err.value.position == 2
    with pytest.raises(ParseError):
        parse_shape("a,1")
    with pytest.raises(ContainmentError):
        parse_shape("2,1/3")


def test_compute_text(capsys):
    rc = main(["compute", "--family", "sp", "--shape", "1", "--n", "1", "--m", "0", "--method", "dual-jt"])
    assert rc == 0
    assert capsys.readouterr().out.strip() == "x1 + x1^-1"


def test_compute_all_methods_agree(capsys):
    outs = []
    for meth in ("tableaux", "dual-jt", "jt", "giambelli", "lgv"):
        rc = main(
            ["compute", "--family", "so", "--shape", "2,1/1", "--n", "2", "--m", "1", "--method", meth]
        )
        assert rc == 0
        outs.append(capsys.readouterr().out)
    assert len(set(outs)) == 1


def test_compute_json_roundtrip(capsys):
    rc = main(
        ["compute", "--family", "o", "--shape", "2,1/1", "--n", "2", "--m", "1", "--format", "json"]
    )
    assert rc == 0
    blob = json.loads(capsys.readouterr().out)
    assert blob["family"] == "o" and blob["lambda"] == [2, 1] and blob["mu"] == [1]
    poly = LaurentPoly.from_json_terms(blob["n"], blob["terms"])
    want = character(
        CharacterFamily.O_EVEN, Partition((2, 1)), Partition((1,)), 2, 1, Method.DUAL_JT
    )
    assert poly == want
    exps = [tuple(t["exp"]) for t in blob["terms"]]
    assert exps == sorted(exps)


def test_count(capsys):
    rc = main(["count", "--family", "sp", "--shape", "1,1", "--n", "2", "--m", "0"])
    assert rc == 0
    assert capsys.readouterr().out.strip() == "5"


def test_usage_errors_exit_2(capsys):
    assert main(["compute", "--family", "sp", "--shape", "2,3", "--n", "1", "--m", "0"]) == 2
    capsys.readouterr()
    rc = main(["compute", "--family", "sp", "--shape", "1,1,1,1,1", "--n", "2", "--m", "2"])
    assert rc == 2
    assert "l(lambda) <= n+m fails: 5 > 4" in capsys.readouterr().err


def test_verify_four_way_and_determinism(capsys):
    args = ["verify", "--suite", "four-way", "--max-cells", "4", "--n", "1..2", "--m", "0..2"]
    assert main(args) == 0
    first = capsys.readouterr().out
    assert main(args) == 0
    second = capsys.readouterr().out
    assert first == second
    assert "failed=0" in first
    assert first.count("FAIL") == 0


def test_verify_reflection_and_eh(capsys):
    assert main(["verify", "--suite", "reflection"]) == 0
    capsys.readouterr()
    assert main(["verify", "--suite", "eh"]) == 0
    assert "failed=0" in capsys.readouterr().out


def test_verify_lgv_small(capsys):
    assert main(["verify", "--suite", "lgv", "--max-cells", "3", "--n", "1..2", "--m", "0..1"]) == 0
    assert "failed=0" in capsys.readouterr().out


def test_paths_rendering(tmp_path, capsys):
    out = str(tmp_path / "fam")
    rc = main(
        ["paths", "--family", "so", "--shape", "2,1/1", "--n", "2", "--m", "1",
         "--out", out, "--limit", "2"]
    )
    assert rc == 0
    files = capsys.readouterr().out.split()
    assert len(files) == 2
    body = open(files[0]).read()
    assert "o" in body and "*" in body
    rc = main(
        ["paths", "--family", "o", "--shape", "2,1/1", "--n", "2", "--m", "1",
         "--render", "svg", "--out", out, "--limit", "1"]
    )
    assert rc == 0
    svg = open(capsys.readouterr().out.split()[0]).read()
    assert svg.startswith("<svg") and svg.rstrip().endswith("</svg>")


def test_compute_writes_file(tmp_path):
    out = tmp_path / "poly.txt"
    rc = main(
        ["compute", "--family", "sp", "--shape", "2", "--n", "1", "--m", "0", "--out", str(out)]
    )
    assert rc == 0
    assert out.read_text().strip() == "x1^2 + 1 + x1^-2"
