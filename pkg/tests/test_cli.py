import csv
import io
import json

import pytest

from hexavoid import published
from hexavoid.cli import main
from hexavoid.recurrences import SEQUENCE_NAMES, five_sequences


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_count_single_method(capsys):
    assert run(capsys, "count", "--family", "hex8", "--n", "12", "--method", "dp") == (0, "190787\n", "")


@pytest.mark.parametrize("method", ["oracle", "dp", "recurrence", "closedform"])
def test_count_methods_agree(capsys, method):
    code, out, _ = run(capsys, "count", "--family", "hex6", "--n", "9", "--method", method)
    assert code == 0 and out == "3572\n"


def test_count_all_methods_json(capsys):
    code, out, _ = run(capsys, "count", "--n", "10", "--all-methods", "--format", "json")
    data = json.loads(out)
    assert code == 0
    assert set(data["results"]["counts"]) == {"oracle", "dp", "recurrence", "closedform"}
    assert data["results"]["count"] == "16329"
    assert data["checks"][0]["passed"]


def test_count_all_methods_hex4_skips_closed_form(capsys):
    code, out, _ = run(capsys, "count", "--family", "hex4", "--n", "8", "--all-methods")
    assert code == 0
    assert "closedform" not in out and "recurrence: 50" in out


def test_closed_form_limit(capsys):
    code, _, err = run(capsys, "count", "--n", "41", "--method", "closedform")
    assert code == 3 and "40" in err


def test_oracle_budget(capsys):
    code, out, err = run(capsys, "count", "--n", "12", "--method", "oracle", "--budget-nodes", "1000")
    assert code == 3 and out == ""
    assert "last complete level 7" in err


def test_usage_errors(capsys):
    assert run(capsys, "count", "--family", "hex9", "--n", "3")[0] == 2
    assert run(capsys, "count", "--n", "0")[0] == 2
    assert run(capsys, "table", "--n-max", "4")[0] == 2
    assert run(capsys, "frobnicate")[0] == 2


def test_roots_hex4_degenerate(capsys):
    code, out, err = run(capsys, "roots", "--family", "hex4")
    assert code == 2 and out == ""
    assert "(x−1)³" in err


def test_roots_text(capsys):
    code, out, _ = run(capsys, "roots", "--family", "hex8")
    assert code == 0
    assert "R4 ≈ 3.43526  c4 ≈ 0.24149" in out
    assert "R5 ≈ 0.44375-1.07681i" in out


def test_table_csv_round_trip(capsys):
    code, out, _ = run(capsys, "table", "--n-max", "20", "--format", "csv")
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["sequence"] + [f"n{i}" for i in range(1, 21)]
    table = five_sequences(20)
    parsed = {r[0]: tuple(int(v) for v in r[1:]) for r in rows[1:]}
    assert list(parsed) == list(SEQUENCE_NAMES)
    assert parsed == table.rows()


def test_table_json_round_trip(capsys):
    code, out, _ = run(capsys, "table", "--n", "12", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["family"] == "hex8" and data["n_max"] == 12
    assert {k: tuple(int(v) for v in vals) for k, vals in data["sequences"].items()} == published.HEX8_TABLE
    assert all(isinstance(v, str) for vals in data["sequences"].values() for v in vals)


def test_table_json_keeps_big_values_exact(capsys):
    _, out, _ = run(capsys, "table", "--n-max", "40", "--format", "json")
    assert json.loads(out)["sequences"]["alpha"][-1] == "192890452763318240452"


def test_verify_deterministic_across_jobs(capsys):
    outputs = set()
    for jobs in ("1", "2", "8"):
        code, out, _ = run(capsys, "verify", "--level", "fast", "--jobs", jobs, "--format", "json")
        assert code == 0
        outputs.add(out)
    assert len(outputs) == 1
