import json

import pytest

from nakayama.cli import main
from nakayama.errors import SchemaError
from nakayama.fileio import algebra_from_dict, algebra_to_dict, dump_algebra, load_algebra
from nakayama.generators import FIXTURE_NAMES, fixture, generate


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.fixture
def fix_files(tmp_path):
    paths = {}
    for name in FIXTURE_NAMES:
        p = tmp_path / f"fix{name.replace(chr(39), 'p')}.json"
        dump_algebra(fixture(name), p)
        paths[name] = p
    return paths


@pytest.mark.parametrize("name", FIXTURE_NAMES)
def test_round_trip_is_identity(name):
    A = fixture(name)
    B, _ = algebra_from_dict(json.loads(json.dumps(algebra_to_dict(A))))
    assert B.structure_constants == A.structure_constants
    assert B.one == A.one and B.labels == A.labels
    assert [V for V in (B.simples or [])] == [V for V in (A.simples or [])]


def test_schema_errors_carry_location(tmp_path):
    p = tmp_path / "bad.json"
    p.write_text('{"field": "GF(7)", "dimension": 2,\n "structure_constants": [[0, 0, 5, "1"]]}')
    with pytest.raises(SchemaError, match="structure_constants\\[0\\]"):
        load_algebra(p)
    p.write_text('{"field": "GF(7)",,}')
    with pytest.raises(SchemaError, match=":1:"):
        load_algebra(p)
    with pytest.raises(SchemaError, match="missing key"):
        algebra_from_dict({"field": "QQ"})


def test_gen_and_check(capsys, tmp_path):
    out = tmp_path / "m2.json"
    code, _, _ = run(capsys, "gen", "matrix", "n=2", "field=GF(3)", "-o", out)
    assert code == 0
    code, text, _ = run(capsys, "check", out)
    assert code == 0 and json.loads(text)["dimension"] == 4
    code, text, _ = run(capsys, "gen", "product", "of=field:field=QQ;trunc_poly:n=2,field=QQ")
    assert code == 0 and json.loads(text)["dimension"] == 3


def test_gen_rejects_bad_input(capsys):
    assert run(capsys, "gen", "group", "table=[[0,1],[0,1]]")[0] == 2
    assert run(capsys, "gen", "nosuchfamily")[0] == 2
    assert run(capsys, "gen", "matrix", "n")[0] == 2


def test_check_missing_file(capsys, tmp_path):
    code, _, err = run(capsys, "check", tmp_path / "none.json")
    assert code == 2 and "SchemaError" in err


def test_analyze_fix_b(capsys, fix_files):
    code, text, _ = run(capsys, "analyze", fix_files["B"])
    assert code == 0
    rep = json.loads(text)
    assert rep["frobenius"]["verdict"] == "frobenius"
    assert rep["symmetry"]["verdict"] == "not_symmetric"
    assert rep["nakayama"]["images"] == {"1": "1", "x": "4*x", "y": "2*y", "xy": "xy"}
    assert "timing_seconds" not in rep


def test_analyze_fix_d_reports_identity(capsys, fix_files):
    rep = json.loads(run(capsys, "analyze", fix_files["D"])[1])
    assert rep["symmetry"]["verdict"] == "symmetric"
    assert rep["nakayama"]["is_identity"]


def test_analyze_recheck_modes(capsys, fix_files, tmp_path):
    report = tmp_path / "rep.json"
    assert run(capsys, "analyze", fix_files["G"], "-o", report)[0] == 0
    code, text, _ = run(capsys, "analyze", fix_files["G"], "--recheck", report)
    assert code == 0 and all(c["passed"] for c in json.loads(text)["recheck"])
    code, text, _ = run(capsys, "analyze", fix_files["C"], "--recheck")
    assert code == 0 and all(c["passed"] for c in json.loads(text)["recheck"])


def test_recheck_catches_tampering(capsys, fix_files, tmp_path):
    report = tmp_path / "rep.json"
    run(capsys, "analyze", fix_files["B"], "-o", report)
    data = json.loads(report.read_text())
    data["nakayama"]["matrix"][1][1] = "3"
    report.write_text(json.dumps(data))
    code, text, _ = run(capsys, "analyze", fix_files["B"], "--recheck", report)
    assert code == 2
    assert not all(c["passed"] for c in json.loads(text)["recheck"])


def test_timing_flag(capsys, fix_files):
    rep = json.loads(run(capsys, "analyze", fix_files["A"], "--timing")[1])
    assert rep["timing_seconds"] >= 0


def test_analyze_is_deterministic(capsys, fix_files):
    a = run(capsys, "analyze", fix_files["B"], "--seed", 5)[1]
    b = run(capsys, "analyze", fix_files["B"], "--seed", 5)[1]
    assert a == b


def test_inconclusive_exit_code(capsys, tmp_path):
    # T3 is not Frobenius; with no certified negatives allowed both checks stay open
    p = tmp_path / "t3.json"
    dump_algebra(generate("triangular", {"n": "3", "field": "QQ"}), p)
    code, text, _ = run(capsys, "analyze", p, "--sym-threshold", "0")
    rep = json.loads(text)
    assert rep["frobenius"]["verdict"] == "inconclusive" and rep["inconclusive"]
    assert code == 3
    code, text, _ = run(capsys, "analyze", p)
    assert code == 0 and json.loads(text)["frobenius"]["verdict"] == "not_frobenius"


def test_verify_independence(capsys, fix_files):
    code, text, _ = run(capsys, "verify-independence", fix_files["B'"])
    rep = json.loads(text)
    assert code == 0 and rep["status"] == "ok"
    assert rep["part1_exact"] and rep["part2_exact"]
    code, text, _ = run(capsys, "verify-independence", fix_files["F"], "--no-replay")
    assert code == 0 and json.loads(text)["part2_exact"] is None
    assert run(capsys, "verify-independence", fix_files["B"])[0] == 2


def test_lemma_suites(capsys):
    code, text, _ = run(capsys, "lemma-suite", "lemma6", "--n", 2, "--q", 3, "--trials", 20)
    assert code == 0 and json.loads(text)["passed"] == 20
    code, text, _ = run(capsys, "lemma-suite", "lemma5", "--two-element-instance")
    rep = json.loads(text)
    assert code == 0 and rep["field_too_small"] and rep["valid_hyperplanes"] == 0
    code, text, _ = run(capsys, "lemma-suite", "lemma5", "--trials", 20)
    assert code == 0 and json.loads(text)["failed"] == 0
    assert run(capsys, "lemma-suite", "lemma6", "--n", 9)[0] == 2


def test_theorem_violation_exit_code(capsys, fix_files, monkeypatch):
    import nakayama.scalars as scalars

    real = scalars.independence_experiment

    def broken(*args, **kw):
        rep = real(*args, **kw)
        rep.violations.append("injected disagreement")
        return rep

    monkeypatch.setattr(scalars, "independence_experiment", broken)
    code, text, _ = run(capsys, "verify-independence", fix_files["F"], "--no-replay")
    assert code == 4 and json.loads(text)["status"] == "THEOREM-VIOLATION"
