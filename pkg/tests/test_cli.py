import json

import pytest

from minksum import __version__
from minksum.cli import main
from minksum.polytope import VPolytope


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_bound_table_and_formats(capsys, tmp_path):
    code, out, _ = run(capsys, "bound", "-d", "3", "-n1", "4", "-n2", "4")
    assert code == 0
    assert "face dim (k-1)" in out and "16" in out and "32" in out
    code, out, _ = run(capsys, "bound", "-d", "3", "-n1", "4", "-n2", "4", "--format", "json")
    assert [r["bound"] for r in json.loads(out)["rows"]] == [16, 32, 18]
    target = tmp_path / "b.csv"
    code, out, _ = run(capsys, "bound", "-d", "4", "-n1", "6", "-n2", "6", "--format", "csv", "--out", str(target))
    assert code == 0 and out == ""
    assert target.read_text().splitlines()[1:3] == ["0,1,36,,", "1,2,126,,"]


@pytest.mark.parametrize(
    "argv",
    [
        ["bound", "-d", "1", "-n1", "3", "-n2", "3"],
        ["bound", "-d", "8", "-n1", "9", "-n2", "9"],
        ["bound", "-d", "3", "-n1", "3", "-n2", "4"],
        ["witness", "-d", "3", "-n1", "13", "-n2", "13"],
    ],
)
def test_usage_errors(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and "error" in err


def test_override_guardrail(capsys):
    code, out, _ = run(capsys, "bound", "-d", "8", "-n1", "9", "-n2", "9", "--max-dim", "8", "--format", "json")
    assert code == 0 and json.loads(out)["rows"][0]["bound"] == 81


def test_argparse_errors(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["bound", "-d", "3"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["--version"])
    assert exc.value.code == 0
    assert __version__ in capsys.readouterr().out


def test_witness_then_sum_and_verify(capsys, tmp_path):
    out_dir = tmp_path / "w"
    code, out, _ = run(capsys, "witness", "-d", "3", "-n1", "4", "-n2", "4", "--out", str(out_dir))
    assert code == 0
    assert {p.name for p in out_dir.iterdir()} == {"P1.json", "P2.json", "certificate.json"}
    p1, p2 = str(out_dir / "P1.json"), str(out_dir / "P2.json")
    code, out, _ = run(capsys, "sum", p1, p2, "--format", "json")
    rep = json.loads(out)
    assert code == 0 and rep["cayley"] == rep["direct"] == [16, 32, 18] and rep["attains_bound"]
    code, out, _ = run(capsys, "verify", p1, p2)
    assert code == 0 and "ALL CHECKS PASSED" in out
    code, first, _ = run(capsys, "verify", p1, p2, "--format", "json", "--lambda", "1/3")
    code2, second, _ = run(capsys, "verify", p1, p2, "--format", "json", "--lambda", "1/3")
    assert code == code2 == 0 and first == second
    code, out, _ = run(capsys, "verify", p1, p2, "--format", "csv")
    assert out.startswith("check,status,detail")


def test_even_witness_has_no_certificate(capsys, tmp_path):
    code, _, _ = run(capsys, "witness", "-d", "2", "-n1", "3", "-n2", "4", "--out", str(tmp_path))
    assert code == 0 and not (tmp_path / "certificate.json").exists()


def test_random_is_seeded(capsys, tmp_path):
    a, b = tmp_path / "a", tmp_path / "b"
    run(capsys, "random", "-d", "3", "-n1", "5", "-n2", "6", "--seed", "3", "--out", str(a))
    run(capsys, "random", "-d", "3", "-n1", "5", "-n2", "6", "--seed", "3", "--out", str(b))
    assert (a / "P1.json").read_text() == (b / "P1.json").read_text()
    assert VPolytope.load(a / "P2.json").n == 6
    code, out, _ = run(capsys, "sum", str(a / "P1.json"), str(a / "P2.json"))
    assert code == 0 and "oracles agree: True" in out


def test_bad_inputs(capsys, tmp_path):
    good = tmp_path / "good.json"
    VPolytope.from_points([(0, 0), (1, 0), (0, 1)]).dump(good)
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    three = tmp_path / "three.json"
    VPolytope.from_points([(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1)]).dump(three)
    for args in ([str(good), str(bad)], [str(good), str(three)], [str(good), str(tmp_path / "missing.json")],
                 [str(good), str(good), "--lambda", "1"], [str(good), str(good), "--lambda", "x"]):
        code, _, err = run(capsys, "sum", *args)
        assert code == 2, args
        assert "error" in err
