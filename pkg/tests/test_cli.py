import json

import pytest

from qstirling import verify
from qstirling.cli import main
from qstirling.verify import parse_multiset, parse_range, run_verify
from qstirling.words import Multiset


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out.rstrip("\n"), out.err


@pytest.mark.parametrize("text, ks", [
    ("1^2 2^2", (2, 2)),
    ("{1^2, 2^2}", (2, 2)),
    ("1^2 2^2 3", (2, 2, 1)),
    ("2,2,1", (2, 2, 1)),
    ("1,1,1,1,3,1,2", (1, 1, 1, 1, 3, 1, 2)),
    ("{1,2,3,4,5^3,6,7^2}", (1, 1, 1, 1, 3, 1, 2)),
    ("1 2 3", (1, 1, 1)),
])
def test_parse_multiset(text, ks):
    assert parse_multiset(text) == Multiset(ks)


@pytest.mark.parametrize("text", ["1^0 2", "", "1^2 3", "a^2", "2,0", "1^-1"])
def test_parse_multiset_errors(text):
    with pytest.raises(ValueError):
        parse_multiset(text)


def test_parse_range():
    assert len(parse_range("K<=3")) == 7
    assert len(parse_range("K<4")) == 7
    assert parse_range("n<=3") == [Multiset.of(2), Multiset.of(2, 2), Multiset.of(2, 2, 2)]
    assert parse_range("{1^2 2^2}") == [Multiset.of(2, 2)]


def test_poly_command(capsys):
    assert run(capsys, "poly", "--multiset", "1^2 2^2", "--family", "quasi")[:2] == (
        0, "2x^2y^2z + x^2yz^2 + xy^2z^2")
    code, out, _ = run(capsys, "poly", "-m", "2,2", "--format", "csv")
    assert out.splitlines() == ["x,y,z,coeff", "2,2,1,2", "2,1,2,1", "1,2,2,1"]
    code, out, _ = run(capsys, "poly", "-m", "2,2", "--format", "json")
    assert json.loads(out)["terms"][0] == {"x": 2, "y": 2, "z": 1, "coeff": 2}


def test_gamma_command(capsys):
    code, out, _ = run(capsys, "gamma", "--multiset", "1^2 2^2", "--family", "stirling", "--format", "csv")
    assert code == 0
    assert out.splitlines() == ["i,j,value", "1,2,1", "2,1,1"]
    code, out, _ = run(capsys, "gamma", "-m", "1^2 2^2", "--family", "trees", "--source", "trees", "--format", "json")
    assert json.loads(out)["gamma"] == [{"i": 1, "j": 2, "value": 2}, {"i": 2, "j": 1, "value": 1}]
    code, _, err = run(capsys, "gamma", "-m", "1^2 2^2", "--family", "quasi", "--source", "trees")
    assert code == 2 and "source" in err


def test_enumerate_command(capsys):
    code, out, _ = run(capsys, "enumerate", "--multiset", "1^2 2^2", "--kind", "quasi")
    assert out.splitlines() == ["1 1 2 2", "1 2 2 1", "2 1 1 2", "2 2 1 1"]
    code, out, _ = run(capsys, "enumerate", "-m", "1,1", "--kind", "trees")
    assert out.splitlines() == ["0(1,2)", "0(2,1)"]
    code, out, _ = run(capsys, "enumerate", "-m", "2,2", "--kind", "all", "--format", "json")
    assert len(json.loads(out)) == 6


def test_orbit_command(capsys):
    code, out, _ = run(capsys, "orbit", "-m", "1,1")
    assert out == "2\t0(1,2)\t1\t0\tx^2y + xy^2"
    code, out, _ = run(capsys, "orbit", "-m", "1^2 2^2", "--format", "json")
    records = json.loads(out)
    assert sum(r["size"] for r in records) == 4
    assert set(records[0]) == {"size", "representative", "cdes", "eleaf", "polynomial"}


def test_verify_command(capsys):
    code, out, _ = run(capsys, "verify", "mprime", "{1^2 2^2}")
    assert code == 0 and "PASS" in out
    code, out, _ = run(capsys, "verify", "equidist", "n<=3", "--format", "json")
    report = json.loads(out)
    assert code == 0 and report["failures"] == [] and report["checks"] == 9


def test_verify_ceiling(capsys, monkeypatch):
    code, _, err = run(capsys, "verify", "stats", "K<=10")
    assert code == 2 and "ceiling" in err
    monkeypatch.setenv("QSTIRLING_MAX_K", "2")
    assert run(capsys, "verify", "stats", "K<=3")[0] == 2
    assert run(capsys, "verify", "stats", "K<=3", "--max-K", "3")[0] == 0


def test_bad_input_exit_code(capsys):
    with pytest.raises(SystemExit) as info:
        main(["poly", "--multiset", "1^0 2"])
    assert info.value.code == 2
    with pytest.raises(SystemExit):
        main(["verify", "nosuch"])


def test_out_file(tmp_path, capsys):
    target = tmp_path / "p.txt"
    assert main(["poly", "-m", "1,1", "--family", "trees", "--out", str(target)]) == 0
    assert target.read_text() == "x^2y + xy^2\n"


def test_deterministic_output(capsys):
    first = run(capsys, "verify", "all", "K<=3")
    second = run(capsys, "verify", "all", "K<=3")
    assert first == second and first[0] == 0


def test_failure_reports_smallest_witness(capsys, monkeypatch):
    def broken(m, out):
        for t in range(3):
            out.check("planted", m.K < 3 or t == 0, m, f"object {t}")

    monkeypatch.setitem(verify.SUITES, "stats", broken)
    report = run_verify("stats", "K<=4")
    assert not report.passed
    (f,) = report.failures
    assert f.multiset == Multiset.of(1, 1, 1) and f.witness == "object 1"
    assert report.failure_counts["planted"] == 2 * (4 + 8)
    code, out, _ = run(capsys, "verify", "stats", "K<=4")
    assert code == 1 and "FAIL planted" in out


def test_parallel_matches_serial():
    a = run_verify("observation", "K<=5")
    b = run_verify("observation", "K<=5", jobs=2)
    assert (a.checks, a.failures) == (b.checks, b.failures)
