import json
import pytest

from darbouxverifier.aux.arguments import process_arguments
from darbouxverifier.aux.config import BUDGET_VARIABLE


@pytest.fixture(autouse=True)
def clean_environment(monkeypatch):
    monkeypatch.delenv(BUDGET_VARIABLE, raising=False)


def run(tmp_path, *argv):
    output = tmp_path / "result.out"
    code = process_arguments(list(argv) + ["--output", str(output)])
    return code, output.read_text() if output.exists() else None


def test_enclose(tmp_path):
    code, text = run(tmp_path, "enclose", "--f", "poly:1,0", "--interval", "0", "1", "--tol", "1e-4")
    document = json.loads(text)
    assert code == 0
    assert document["schema"] == 1
    assert document["lo"] <= 0.5 <= document["hi"]
    assert document["hi"] - document["lo"] <= 1e-4
    assert document["rigor"] == "certified"
    assert document["closed_form"] == pytest.approx(0.5)


def test_enclose_csv(tmp_path):
    code, text = run(
        tmp_path, "enclose", "--f", "cos", "--interval", "0", "1", "--tol", "1e-3", "--format", "csv"
    )
    header, row = text.splitlines()
    assert code == 0
    assert header == "cells,lo,hi,width"
    assert float(row.split(",")[3]) <= 1e-3


def test_enclose_against_density(tmp_path):
    code, text = run(
        tmp_path,
        "enclose",
        "--f", "poly:1,0",
        "--phi", "poly:2,0",
        "--interval", "0", "1",
        "--tol", "1e-2",
    )
    document = json.loads(text)
    assert code == 0
    assert document["lo"] <= 2 / 3 <= document["hi"]


def test_budget_from_environment(tmp_path, monkeypatch):
    monkeypatch.setenv(BUDGET_VARIABLE, "16")
    code, text = run(tmp_path, "enclose", "--f", "poly:1,0", "--interval", "0", "1", "--tol", "1e-9")
    document = json.loads(text)
    assert code == 3
    assert document["converged"] is False
    assert document["lo"] <= 0.5 <= document["hi"]
    assert document["cells"] <= 16


def test_budget_from_config_file(tmp_path):
    config = tmp_path / "config.yaml"
    config.write_text("refinement:\n  strategy: bulk\n  budget: 16\n")
    code, _ = run(
        tmp_path,
        "enclose", "--f", "poly:1,0", "--interval", "0", "1", "--tol", "1e-9", "-c", str(config),
    )
    assert code == 3


def test_certify_thomae(tmp_path):
    code, text = run(tmp_path, "certify", "--f", "thomae:50", "--interval", "0", "1", "--eps", "0.5")
    document = json.loads(text)
    assert code == 0
    assert document["status"] == "certificate"
    assert document["osc_sum"] <= 0.5


def test_certify_dirichlet_is_inconclusive(tmp_path):
    code, text = run(
        tmp_path, "certify", "--f", "dirichlet", "--interval", "0", "1", "--eps", "0.5", "--budget", "32"
    )
    assert code == 3
    assert json.loads(text)["status"] == "inconclusive"


def test_converge_identity(tmp_path):
    code, text = run(
        tmp_path,
        "converge", "--f", "poly:1,0", "--interval", "0", "1", "--max-cells", "64", "--format", "csv",
    )
    lines = text.splitlines()
    assert code == 0
    assert lines[0] == "cells,lo,hi,width"
    cells = [int(line.split(",")[0]) for line in lines[1:]]
    widths = [float(line.split(",")[3]) for line in lines[1:]]
    assert cells == [2, 4, 8, 16, 32, 64]
    assert widths == pytest.approx([1 / n for n in cells])


def test_converge_constant(tmp_path):
    code, text = run(tmp_path, "converge", "--f", "const:3", "--interval", "0", "1", "--max-cells", "8")
    rows = json.loads(text)["rows"]
    assert code == 0
    assert all(row["width"] < 1e-12 for row in rows)


def test_converge_dirichlet_is_heuristic(tmp_path):
    code, text = run(tmp_path, "converge", "--f", "dirichlet", "--interval", "0", "1", "--max-cells", "8")
    rows = json.loads(text)["rows"]
    assert code == 2
    assert [row["width"] for row in rows] == pytest.approx([1.0, 1.0, 1.0])


def test_substitute(tmp_path):
    code, text = run(
        tmp_path,
        "substitute",
        "--f", "poly:1,0",
        "--phi", "poly:2,0",
        "--interval", "0", "1",
        "--tol", "1e-2",
        "--budget", "4096",
    )
    document = json.loads(text)
    assert code == 0
    assert document["overlap"] is True
    assert document["lhs"]["lo"] <= 0.5 <= document["lhs"]["hi"]
    assert document["rhs"]["lo"] <= 0.5 <= document["rhs"]["hi"]
    assert document["notes"]


def test_ledger(tmp_path):
    code, text = run(
        tmp_path,
        "ledger",
        "--f", "const:1",
        "--phi", "poly:1,-0.5",
        "--interval", "0", "1",
        "--eta", "0.1",
        "--tol", "1e-3",
    )
    document = json.loads(text)
    assert code == 0
    assert document["ledger"]["all_ok"] is True
    assert document["ledger"]["classes"]["U"] == 0
    assert document["converse"]["ok"] is True
    assert "transfer" not in document


def test_ledger_with_checks(tmp_path):
    code, text = run(
        tmp_path,
        "ledger",
        "--f", "poly:1,0",
        "--phi", "const:1",
        "--interval", "0", "1",
        "--eta", "0.1",
        "--tol", "1e-6",
        "--cells", "16",
    )
    document = json.loads(text)
    assert code == 0
    assert document["transfer"]["ok"] is True
    assert document["reduction"]["bound16_ok"] is True


def test_ledger_is_json_only(tmp_path):
    code, _ = run(
        tmp_path,
        "ledger",
        "--f", "const:1",
        "--phi", "const:1",
        "--interval", "0", "1",
        "--format", "csv",
    )
    assert code == 1


def test_reversed_interval_is_a_usage_error(tmp_path):
    code, _ = run(tmp_path, "enclose", "--f", "poly:1,0", "--interval", "1", "0")
    assert code == 1


@pytest.mark.parametrize(
    "argv",
    [
        ["enclose", "--f", "nope", "--interval", "0", "1"],
        ["enclose", "--f", "poly:1,0", "--interval", "0", "1", "--tol", "-1"],
        ["substitute", "--f", "poly:1,0", "--interval", "0", "1"],
        ["certify", "--f", "cos"],
    ],
)
def test_usage_errors(argv):
    with pytest.raises(SystemExit) as e:
        process_arguments(argv)
    assert e.value.code == 1
