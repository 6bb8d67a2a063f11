import json

import pytest

from loopsplit.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_verify_cp2_json(capsys):
    code, out, _ = run(capsys, "verify", "--space", "cpn", "--n", "2", "--max-degree", "40", "--format", "json")
    assert code == 0
    report = json.loads(out)
    assert report["verdict"] == "PASS"
    assert report["window"] == [0, 40]
    assert [s["index"] for s in report["strata"]] == [1, 5, 9, 13, 17, 21, 25, 29, 33, 37]
    assert report["total_poincare_splitting"] == report["total_poincare_bo"]
    for key in ("m", "index", "rank", "desuspension", "poincare"):
        assert key in report["strata"][0]
    assert all(set(c) == {"name", "pass", "detail"} for c in report["checks"])


def test_verify_op2_small_window(capsys):
    code, out, _ = run(capsys, "verify", "--space", "op2", "--max-degree", "6")
    assert code == 0
    report = json.loads(out)
    assert report["strata"] == [] and report["verdict"] == "PASS"


@pytest.mark.parametrize(
    "argv",
    [
        ["verify", "--space", "cpn", "--n", "1", "--max-degree", "4"],
        ["verify", "--space", "op2", "--n", "3", "--max-degree", "4"],
        ["verify", "--space", "rpn", "--max-degree", "4"],
        ["verify", "--space", "cpn", "--max-degree", "-1"],
        ["table", "--space", "cpn", "--max-winding", "0"],
        ["verify", "--space", "cpn"],
    ],
)
def test_usage_errors(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2
    assert "usage" in err


def test_bad_thread_count(capsys, monkeypatch):
    monkeypatch.setenv("LOOPSPLIT_THREADS", "many")
    code, _, _ = run(capsys, "verify", "--space", "cpn", "--max-degree", "4")
    assert code == 2


def test_threads_do_not_change_output(capsys, monkeypatch):
    args = ("verify", "--space", "hpn", "--n", "3", "--max-degree", "60")
    _, serial, _ = run(capsys, *args)
    monkeypatch.setenv("LOOPSPLIT_THREADS", "4")
    _, parallel, _ = run(capsys, *args)
    assert serial == parallel


def test_check_failure_exits_1(capsys, monkeypatch):
    import loopsplit.report as report

    monkeypatch.setattr(report, "check_sphere_euler", lambda entry: (False, "forced failure"))
    code, out, err = run(capsys, "verify", "--space", "cpn", "--max-degree", "10")
    assert code == 1
    assert json.loads(out)["verdict"] == "FAIL"
    assert "euler_characteristic_sphere_bundle" in err


def test_internal_error_exits_1(capsys, monkeypatch):
    import loopsplit.report as report

    def boom(*a, **k):
        raise RuntimeError("bad catalog")

    monkeypatch.setattr(report, "assemble_splitting", boom)
    code, _, err = run(capsys, "verify", "--space", "cpn", "--max-degree", "10")
    assert code == 1 and "bad catalog" in err


@pytest.mark.parametrize(
    "space,n,indices",
    [("cpn", 3, [1, 7, 13]), ("hpn", 2, [3, 13, 23]), ("op2", 2, [7, 29, 51])],
)
def test_table(capsys, space, n, indices):
    code, out, _ = run(capsys, "table", "--space", space, "--n", str(n), "--max-winding", "3")
    assert code == 0
    assert [s["index"] for s in json.loads(out)["strata"]] == indices


def test_text_format(capsys):
    code, out, _ = run(capsys, "verify", "--space", "hpn", "--max-degree", "30", "--format", "text")
    assert code == 0
    assert out.splitlines()[-1] == "verdict: PASS"
    assert "[PASS] witness: W2+eps extends to H^n" in out


@pytest.mark.parametrize("fmt", ["json", "text"])
def test_deterministic(capsys, fmt):
    args = ("verify", "--space", "op2", "--max-degree", "80", "--format", fmt)
    _, a, _ = run(capsys, *args)
    _, b, _ = run(capsys, *args)
    assert a == b


def test_json_round_trip(capsys):
    _, out, _ = run(capsys, "verify", "--space", "cpn", "--n", "4", "--max-degree", "50")
    assert json.dumps(json.loads(out), indent=2) + "\n" == out


def test_checks_sorted(capsys):
    _, out, _ = run(capsys, "verify", "--space", "cpn", "--max-degree", "10")
    names = [c["name"] for c in json.loads(out)["checks"]]
    assert names == sorted(names)
