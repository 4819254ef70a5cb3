import json
import subprocess
import sys

import pytest

from kumcoh import cli


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_text_report(capsys):
    code, out, err = run(capsys, "--report", "gxi-orbits")
    assert code == 0 and err == ""
    lines = out.strip().splitlines()
    assert len(lines) == 4
    assert lines[0] == "PASS gxi-orbits: orbit sizes = [5, 30]"


def test_json_schema(capsys):
    code, out, _ = run(capsys, "--report", "bb-kprime", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["report"] == "bb-kprime"
    for c in doc["checks"]:
        assert set(c) == {"name", "status", "expected", "actual", "paper_ref"}
        assert c["status"] in ("pass", "fail")
    names = {c["name"]: c for c in doc["checks"]}
    assert names["c"]["actual"] == 8
    assert names["final block"]["actual"] == [[-5, -4], [-4, -5]]
    assert out == json.dumps(doc, sort_keys=True, indent=2) + "\n"


def test_bb_text_mentions_c_and_block(capsys):
    _, out, _ = run(capsys, "--report", "bb-kprime")
    assert "c = 8" in out
    assert "[[-5, -4], [-4, -5]]" in out


def test_failure_exit_code(capsys):
    code, out, err = run(capsys, "--report", "hilb3-theta")
    assert code == 1
    rec = json.loads(err.strip().splitlines()[0])
    assert rec == {"report": "hilb3-theta", "check": "odd Kummer pairing signs",
                   "expected": [1, -1], "actual": [-1, 1]}
    assert "FAIL hilb3-theta: odd Kummer pairing signs" in out


def test_bad_flag_exits_2(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["--report", "nope"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        cli.main(["--report", "symplectic-tables", "--q", "7"])
    assert exc.value.code == 2


def test_out_file(tmp_path, capsys):
    target = tmp_path / "r.json"
    code, out, _ = run(capsys, "--report", "torus-ring", "--format", "json", "--out", str(target))
    assert code == 0 and out == ""
    assert json.loads(target.read_text())["report"] == "torus-ring"


def test_seed_is_reproducible(capsys):
    _, a, _ = run(capsys, "--report", "hilb2-basis", "--seed", "3")
    _, b, _ = run(capsys, "--report", "hilb2-basis", "--seed", "3")
    assert a == b


def test_symplectic_single_q(capsys):
    code, out, _ = run(capsys, "--report", "symplectic-tables", "--q", "2")
    assert code == 0
    assert "PASS symplectic-tables: q=2 dim_N = 11" in out
    assert "q=3" not in out


def test_render_multiple_reports():
    a, b = cli.Report("appendix"), cli.Report("bb-kprime")
    a.check("x", 1, 1, "ref")
    b.check("y", [1, 2], (1, 3), "ref")
    doc = json.loads(cli.render([a, b], "json"))
    assert doc["report"] == "all"
    assert [r["report"] for r in doc["reports"]] == ["appendix", "bb-kprime"]
    assert doc["reports"][1]["checks"][0]["status"] == "fail"
    text = cli.render([a, b], "text").splitlines()
    assert text == ["PASS appendix: x = 1", "FAIL bb-kprime: y = [1, 3] (expected [1, 2])"]
    assert sorted(cli.REPORTS) == sorted(cli.BUILDERS)


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "kumcoh", "--report", "torus-ring"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert proc.stdout.startswith("PASS torus-ring:")
