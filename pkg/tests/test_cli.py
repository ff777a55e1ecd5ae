import json

import pytest

from hallforge import cli
from hallforge import field_linalg as fl


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_catalog_a1(capsys):
    code, out, _ = run(capsys, "catalog", "--quiver", "a1", "--q", "2", "--max-dim", "2")
    assert code == 0
    assert "3 classes" in out.splitlines()[0]
    assert len(out.strip().splitlines()) == 4


def test_catalog_a2_json(capsys):
    code, out, _ = run(capsys, "catalog", "--quiver", "a2:>", "--q", "2", "--max-dim", "1,1", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert len(data["classes"]) == 5
    assert data["quiver"] == "a2:>"
    names = [c["iso"] for c in data["classes"]]
    i, j = names.index("(1-1)x1"), names.index("(2-2)x1")
    assert data["ext"][i][j] == 1 and data["hom"][i][j] == 0


def test_catalog_limit_exit(capsys):
    code, _, err = run(capsys, "catalog", "--quiver", "a9", "--max-dim", "50")
    assert code == 3
    assert "limit" in err


def test_limit_flag_is_scoped(capsys):
    code, _, _ = run(capsys, "catalog", "--quiver", "a2", "--max-dim", "2", "--limit", "3")
    assert code == 3
    assert fl.get_limit() == fl.default_limit()


def test_limit_from_env(capsys, monkeypatch):
    monkeypatch.setenv("HALLFORGE_LIMIT", "10")
    code, _, _ = run(capsys, "catalog", "--quiver", "a2", "--max-dim", "2")
    assert code == 3


def test_product_dh2(capsys):
    code, out, _ = run(capsys, "product", "--algebra", "dh2", "--quiver", "a1", "--q", "2",
                       "--lhs", "u[(1-1)x1;0]", "--rhs", "u[0;(1-1)x1]")
    assert code == 0
    assert out.strip() == "u[(1-1)x1;(1-1)x1] + Ks[1]"


def test_product_rh(capsys):
    code, out, _ = run(capsys, "product", "--algebra", "rh", "--quiver", "a2:>", "--q", "2",
                       "--lhs", "u[(1-1)x1]", "--rhs", "u[(2-2)x1]")
    assert code == 0
    assert out.strip() == "(0,1/2)*u[(1-1)x1+(2-2)x1] + (0,1/2)*u[(1-2)x1]"


@pytest.mark.parametrize("algebra,unit", [("dh2", "u[0;0]"), ("rh", "u[0]"), ("dh1", "u[0]"),
                                          ("dhz1", "u[0]"), ("dh2red", "u[0;0]")])
def test_product_identity(capsys, algebra, unit):
    code, out, _ = run(capsys, "product", "--algebra", algebra, "--quiver", "a2", "--lhs", unit, "--rhs", unit)
    assert code == 0
    assert out.strip() == unit


def test_product_reduced(capsys):
    code, out, _ = run(capsys, "product", "--algebra", "dh2red", "--quiver", "a1",
                       "--lhs", "u[(1-1)x1;0]", "--rhs", "u[0;(1-1)x1]")
    assert code == 0
    assert out.strip() == "K[-1] + u[(1-1)x1;(1-1)x1]"
    code, out, _ = run(capsys, "product", "--algebra", "dh2red", "--quiver", "a1",
                       "--lhs", "u[0;(1-1)x1]", "--rhs", "u[(1-1)x1;0]")
    assert out.strip() == "u[(1-1)x1;(1-1)x1] + K[1]"


def test_product_json(capsys):
    code, out, _ = run(capsys, "product", "--algebra", "dh1", "--quiver", "a1", "--format", "json",
                       "--lhs", "u[(1-1)x1]", "--rhs", "u[(1-1)x1]")
    assert code == 0
    terms = json.loads(out)["terms"]
    assert [t["coeff"] for t in terms] == [{"rat": "0", "srt": "1/2"}] * 2


@pytest.mark.parametrize("argv,code", [
    (["product", "--quiver", "a1", "--lhs", "u[(1-1)x3;0]", "--rhs", "u[0;0]"], 4),
    (["product", "--quiver", "a1", "--lhs", "u[(1-1", "--rhs", "u[0;0]"], 2),
    (["catalog", "--q", "4"], 2),
    (["catalog", "--quiver", "b3"], 2),
    (["catalog", "--max-dim", "1,x"], 2),
    (["catalog", "--quiver", "a2", "--max-dim", "1,2,3"], 2),
    (["catalog", "--out", "/nonexistent-dir/x.txt"], 5),
    (["verify", "no-such-suite"], 2),
    (["frobnicate"], 2),
])
def test_exit_codes(capsys, argv, code):
    try:
        got = cli.main(argv)
    except SystemExit as exc:
        got = exc.code
    assert got == code


def test_verify_drinfeld(capsys):
    code, out, _ = run(capsys, "verify", "drinfeld", "--quiver", "a1", "--q", "2", "--max-dim", "2")
    assert code == 0
    assert out.startswith("PASS drinfeld")


def test_verify_json_report(capsys):
    code, out, _ = run(capsys, "verify", "rp-sum", "--quiver", "a2:<", "--max-dim", "1,1",
                       "--format", "json", "--samples", "5", "--seed", "7")
    assert code == 0
    rep = json.loads(out)
    assert rep["seed"] == 7 and rep["cases"] == 5 and rep["failed"] == 0


def test_verify_failure_exit(capsys, monkeypatch):
    from hallforge import verify
    real = verify.RUNNERS["grading"]

    def broken(*a, **kw):
        rep = real(*a, **kw)
        rep.record(False, "injected")
        return rep

    monkeypatch.setitem(verify.RUNNERS, "grading", broken)
    code, out, _ = run(capsys, "verify", "grading", "--quiver", "a1", "--max-dim", "1")
    assert code == 1
    assert out.startswith("FAIL") and "first-counterexample: injected" in out


def test_table_a1(capsys):
    code, out, _ = run(capsys, "table", "--quiver", "a1", "--q", "2", "--max-dim", "1", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert len(data["generators"]) == 4
    assert len(data["table"]) == 16


def test_table_empty_bound(capsys):
    code, out, _ = run(capsys, "table", "--quiver", "a1", "--max-dim", "0")
    assert code == 0
    assert out.strip() == "u[0;0] * u[0;0] = u[0;0]"


def test_table_deterministic(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    for f in (a, b):
        assert cli.main(["table", "--quiver", "a2:<", "--max-dim", "1,1", "--format", "json", "--out", str(f)]) == 0
    assert a.read_bytes() == b.read_bytes()
