import io
import json
import os
import subprocess
import sys

import pytest

from smashprod import cli


def run(*argv):
    out = io.StringIO()
    code = cli.main(list(argv), out=out)
    return code, out.getvalue()


def test_eval_text():
    code, out = run("eval", "X[1] # X[1]")
    assert code == 0 and out.strip() == "X[1] + X[1,1]"


def test_eval_json():
    code, out = run("eval", "pair(M[1].M[1], X[1,1])", "--format", "json")
    assert code == 0 and json.loads(out) == {"algebra": "scalar", "value": "2"}


def test_eval_syntax_error_is_usage(capsys):
    code, _ = run("eval", "h[2,1) ")
    assert code == 2
    assert "offset 6" in capsys.readouterr().err


def test_eval_degree_error_fails(capsys):
    code, _ = run("eval", "X[2] o X[1]")
    assert code == 1
    assert "offset 6" in capsys.readouterr().err


def test_bad_arguments_are_usage_errors():
    assert run("verify", "--suite", "nonsense", "--max-degree", "2")[0] == 2
    assert run("tables", "--op", "smash")[0] == 2
    assert run()[0] == 2


def test_verify_pass_and_json():
    code, out = run("verify", "--suite", "antipode", "--max-degree", "3", "--json")
    report = json.loads(out)
    assert code == 0 and report["passed"]
    assert report["notes"]["certified_convention"] == "per-letter-length"


def test_verify_failure_exit_code():
    code, out = run("verify", "--suite", "antipode", "--max-degree", "4")
    assert code == 1
    assert out.startswith("FAIL antipode")
    assert "'parity-strict': 'matches'" in out


def test_tables_binomial_display():
    code, out = run("tables", "--op", "smash", "--algebra", "nsym", "--degrees", "1", "1")
    table = json.loads(out)
    assert code == 0
    assert [(e["left"], e["right"], e["text"]) for e in table["entries"]] == [([1], [1], "X[1] + X[1,1]")]


def test_tables_sym_contains_paper_row():
    _, out = run("tables", "--op", "smash", "--algebra", "sym", "--degrees", "3", "3")
    rows = {(tuple(e["left"]), tuple(e["right"])): e["text"] for e in json.loads(out)["entries"]}
    assert rows[((2, 1), (3,))] == "h[1,1,1,1] + h[2,1] + h[2,1,1] + h[2,1,1,1] + h[2,2,1] + h[3,2,1]"


def test_tables_internal_is_the_descent_algebra():
    _, out = run("tables", "--op", "internal", "--algebra", "nsym", "--degrees", "2", "2")
    rows = {(tuple(e["left"]), tuple(e["right"])): e["text"] for e in json.loads(out)["entries"]}
    assert rows == {
        ((2,), (2,)): "X[2]",
        ((2,), (1, 1)): "X[1,1]",
        ((1, 1), (2,)): "X[1,1]",
        ((1, 1), (1, 1)): "2*X[1,1]",
    }


def test_tables_internal_needs_equal_degrees():
    assert run("tables", "--op", "internal", "--algebra", "nsym", "--degrees", "2", "1")[0] == 2


def test_module_entry_point_is_deterministic():
    outs = set()
    for seed in ("0", "1", "2"):
        env = dict(os.environ, PYTHONHASHSEED=seed)
        res = subprocess.run(
            [sys.executable, "-m", "smashprod", "eval", "coprod(X[2,1] # X[1,1])", "--format", "json"],
            env=env,
            capture_output=True,
            text=True,
            check=True,
        )
        outs.add(res.stdout)
    assert len(outs) == 1


@pytest.mark.parametrize("threads", ["1", "3"])
def test_verify_under_thread_counts(threads, monkeypatch):
    monkeypatch.setenv("SMASHPROD_THREADS", threads)
    code, out = run("verify", "--suite", "closure", "--max-degree", "4", "--json")
    assert code == 0 and json.loads(out)["cases"] == 17
