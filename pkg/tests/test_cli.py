import json
from importlib import resources

import jsonschema
import pytest

from kummergaps import cli, semigroups, verify
from kummergaps.verify import HERMITIAN_REFERENCE_ROWS


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture(scope="module")
def schema():
    text = resources.files("kummergaps").joinpath("schema/output.schema.json").read_text()
    return json.loads(text)


def test_gaps_text(capsys):
    assert run(capsys, "gaps", "--m", "5", "--r", "4", "--place", "infty") == (0, "1 2 3 6 7 11\n", "")


def test_gaps_bad_curve(capsys):
    code, out, err = run(capsys, "gaps", "--m", "4", "--r", "2")
    assert code == 2 and out == ""
    assert "gcd(m,r) must be 1" in err


def test_gaps_json(capsys, schema):
    code, out, _ = run(capsys, "gaps", "--m", "3", "--r", "2", "--format", "json")
    doc = json.loads(out)
    jsonschema.validate(doc, schema)
    assert doc["payload"]["gaps"] == [1]
    assert doc["meta"]["m"] == 3


def test_bad_place(capsys):
    code, _, err = run(capsys, "gaps", "--m", "5", "--r", "4", "--place", "9")
    assert code == 2 and "not a totally ramified place" in err


def test_gamma(capsys):
    code, out, _ = run(capsys, "gamma", "--m", "5", "--r", "4", "--flavor", "ff")
    assert code == 0
    assert "(6, 6)" in out.splitlines()
    assert out.splitlines()[-1] == "count: 6"
    code, out, _ = run(capsys, "gamma", "--m", "3", "--r", "2", "--flavor", "inf")
    assert out == "(1, 1)\ncount: 1\n"


def test_gamma_csv(capsys):
    _, out, _ = run(capsys, "gamma", "--m", "5", "--r", "4", "--format", "csv")
    lines = out.splitlines()
    assert lines[0] == "a,b" and len(lines) == 7


def test_pure_modes(capsys):
    assert run(capsys, "pure", "--m", "5", "--r", "4", "--places", "infty,1", "--check", "7,1")[1] == "pure-gap: true\n"
    assert run(capsys, "pure", "--m", "5", "--r", "4", "--places", "1,infty", "--check", "1,7", "--oracle")[1] == \
        "pure-gap: true\n"
    _, out, _ = run(capsys, "pure", "--m", "5", "--r", "4", "--places", "1,2", "--families")
    assert "family iii: (6, 1) (7, 1)" in out
    _, out, _ = run(capsys, "pure", "--m", "5", "--r", "4", "--places", "1", "--enumerate")
    assert out.splitlines() == ["(1)", "(2)", "(3)", "(6)", "(7)", "(11)", "count: 6"]


def test_pure_families_follow_place_order(capsys):
    _, out, _ = run(capsys, "pure", "--m", "5", "--r", "4", "--places", "1,infty", "--families")
    assert "family i: (1, 7)" in out


def test_pure_errors(capsys):
    assert run(capsys, "pure", "--m", "5", "--r", "4", "--places", "1,2", "--check", "6")[0] == 2
    assert run(capsys, "pure", "--m", "7", "--r", "4", "--places", "1,2", "--families")[0] == 2
    assert run(capsys, "pure", "--m", "5", "--r", "4", "--places", "1,1", "--enumerate")[0] == 2
    with pytest.raises(SystemExit) as exc:
        cli.main(["pure", "--m", "5", "--r", "4", "--places", "1"])
    assert exc.value.code == 2


def test_design_hermitian(capsys):
    _, out, _ = run(capsys, "design", "--hermitian", "--q", "4", "--format", "csv")
    assert out == "q_sq,s,n,k,d_bound\n16,1,64,48,12\n16,2,63,55,6\n"
    _, out, _ = run(capsys, "design", "--hermitian", "--q", "8", "--format", "csv")
    assert "64,2,511,445,42" in out.splitlines()


def test_design_box(capsys, schema):
    code, out, _ = run(capsys, "design", "--m", "5", "--r", "4", "--box", "6,1..7,1", "--n", "63", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    jsonschema.validate(doc, schema)
    assert doc["payload"]["design"]["k"] == 55
    assert doc["payload"]["design"]["d_bound"] == 6


def test_design_box_with_infty_reordered(capsys):
    _, a, _ = run(capsys, "design", "--m", "5", "--r", "4", "--box", "7,1..7,1", "--places", "infty,1", "--n", "40")
    _, b, _ = run(capsys, "design", "--m", "5", "--r", "4", "--box", "1,7..1,7", "--places", "1,infty", "--n", "40")
    assert a == b and "with_infty: True" in a


def test_design_out_of_window(capsys):
    code, _, err = run(capsys, "design", "--m", "5", "--r", "4", "--box", "6,1..7,1", "--n", "13")
    assert code == 2 and "degree window violated" in err
    code, _, err = run(capsys, "design", "--m", "5", "--r", "4", "--box", "1,1..11,11", "--n", "100")
    assert code == 2


def test_verify_passes(capsys):
    code, out, _ = run(capsys, "verify", "--max-genus", "4", "--samples", "300")
    assert code == 0 and out.splitlines()[-1] == "all checks passed"


def test_verify_vacuous(capsys):
    code, out, _ = run(capsys, "verify", "--max-genus", "0")
    assert code == 0 and "all checks passed" in out


def test_verify_fault_injection(capsys, monkeypatch):
    real = semigroups.gamma_finite_finite

    def broken(curve):
        gs = real(curve)
        pairs = list(gs.pairs)
        if curve.genus >= 3:
            (a, b), (c, d) = pairs[0], pairs[1]
            pairs[0], pairs[1] = (a, d), (c, b)
        return semigroups.GammaSet(tuple(pairs), gs.flavor)

    monkeypatch.setattr(semigroups, "gamma_finite_finite", broken)
    code, out, _ = run(capsys, "verify", "--max-genus", "4", "--samples", "10")
    assert code == 3
    assert "FAIL gamma-sets" in out and "witness:" in out


def test_verify_reference_fault(monkeypatch):
    monkeypatch.setattr(verify, "HERMITIAN_REFERENCE_ROWS", HERMITIAN_REFERENCE_ROWS + ((16, 3, 62, 60, 2),))
    res = verify.check_hermitian_table(qs=(4,))
    assert not res.passed and res.failures[0]["s"] == 3


@pytest.mark.parametrize("argv", [
    ["gaps", "--m", "7", "--r", "3", "--format", "json"],
    ["gamma", "--m", "7", "--r", "3", "--flavor", "inf", "--format", "json"],
    ["pure", "--m", "7", "--r", "3", "--places", "infty,1", "--enumerate", "--format", "json"],
    ["pure", "--m", "7", "--r", "3", "--places", "infty,1", "--families", "--format", "json"],
    ["pure", "--m", "7", "--r", "3", "--places", "1,2", "--check", "1,1", "--format", "json"],
    ["design", "--hermitian", "--q", "5", "--format", "json"],
    ["verify", "--max-genus", "3", "--samples", "50", "--format", "json"],
])
def test_json_schema_and_determinism(capsys, schema, argv):
    code, first, _ = run(capsys, *argv)
    _, second, _ = run(capsys, *argv)
    assert code == 0
    assert first == second
    doc = json.loads(first)
    jsonschema.validate(doc, schema)
    assert json.loads(json.dumps(doc)) == doc
