import orjson
import pytest
from click.testing import CliRunner

from apps.cli.main import cli


@pytest.fixture
def run():
    runner = CliRunner()

    def _run(*args):
        return runner.invoke(cli, list(args))

    return _run


def test_expand_csv(run):
    r = run("expand", "d", "--order", "4", "--format", "csv")
    assert r.exit_code == 0
    assert r.stdout == "n,coefficient\n0,1\n1,-1\n2,1\n3,0\n"


def test_expand_table_single_row(run):
    r = run("expand", "A", "--order", "1")
    assert r.exit_code == 0
    lines = r.stdout.splitlines()
    assert len(lines) == 2
    assert lines[1].split() == ["0", "1"]


def test_expand_json(run):
    r = run("expand", "C", "--order", "1", "--format", "json")
    assert r.exit_code == 0
    assert orjson.loads(r.stdout) == {"name": "C", "coeffs": ["1"]}


def test_expand_usage_errors(run):
    assert run("expand", "E", "--order", "4").exit_code == 2
    assert run("expand", "d", "--order", "0").exit_code == 2


def test_coeff(run):
    r = run("coeff", "A", "10", "--format", "json")
    assert r.exit_code == 0
    assert orjson.loads(r.stdout) == {"name": "A", "index": 10, "value": "-175"}


def test_verify_exit_codes(run):
    assert run("verify", "B20", "--order", "50").exit_code == 0
    assert run("verify", "B20", "--order", "0").exit_code == 2
    assert run("verify", "B21").exit_code == 2


def test_verify_json_report(run):
    r = run("verify", "dissect-C0", "--order", "30", "--format", "json")
    assert r.exit_code == 0
    doc = orjson.loads(r.stdout)
    assert doc["subject"] == "dissect-C0"
    assert doc["status"] == "verified"
    assert doc["first_divergence"] is None


def test_verify_all_is_deterministic(run):
    first = run("verify", "all", "--order", "60", "--format", "json")
    second = run("verify", "all", "--order", "60", "--format", "json")
    assert first.exit_code == second.exit_code == 0
    assert first.stdout == second.stdout
    assert len(orjson.loads(first.stdout)) == 14


def test_scan_conjecture13_reproduces_falsification(run):
    r = run("scan", "conjecture13", "--n-max", "200", "--format", "json")
    assert r.exit_code == 0
    doc = orjson.loads(r.stdout)
    assert doc["status"] == "falsified"
    assert doc["falsified"] == {"A": [0], "B": [0], "D": []}


def test_scan_single_index(run):
    assert run("scan", "richmond-c", "--n-max", "0").exit_code == 0


def test_scan_csv_row(run):
    r = run("scan", "thm4", "--n-max", "200", "--format", "csv")
    assert r.exit_code == 0
    assert r.stdout == (
        "subject,order_checked,status,divergence_index,violations\n"
        "thm4,200,verified,,0\n"
    )


def test_scan_counterexamples(run):
    assert run("scan", "counterexamples").exit_code == 0


def test_scan_unknown_target(run):
    assert run("scan", "thm9").exit_code == 2


def test_scan_mismatch_goes_to_stderr(run, monkeypatch, tmp_path):
    # шаблон без перечисленных нулей: c(2) = 0: нарушение
    (tmp_path / "sign_patterns.csv").write_text(
        "scan,series,modulus,kind,residues\nrichmond-c,c,5,theorem,pos;pos;neg;neg;neg\n",
        encoding="utf-8",
    )
    (tmp_path / "sign_exceptions.csv").write_text("scan,index,value\n", encoding="utf-8")
    monkeypatch.setenv("QSER_CATALOGS_DIR", str(tmp_path))
    from domain.settings import get_settings

    get_settings.cache_clear()
    try:
        r = run("scan", "richmond-c", "--n-max", "5", "--format", "csv")
    finally:
        monkeypatch.delenv("QSER_CATALOGS_DIR")
        get_settings.cache_clear()
    assert r.exit_code == 1
    assert r.stdout.splitlines()[1] == "richmond-c,5,violated,,2"
    assert "c(2) = 0, expected neg" in r.stderr


@pytest.mark.slow
def test_verify_all_at_order_300(run):
    r = run("verify", "all", "--order", "300", "--format", "json")
    assert r.exit_code == 0
    assert all(doc["status"] == "verified" for doc in orjson.loads(r.stdout))


def test_log_level_must_be_known(run):
    assert run("--log-level", "loud", "expand", "d", "--order", "2").exit_code == 2
    assert run("--log-level", "error", "expand", "d", "--order", "2").exit_code == 0


def test_bad_log_level_in_environment_is_usage_error(run, monkeypatch):
    from domain.settings import get_settings

    monkeypatch.setenv("QSER_LOG_LEVEL", "loud")
    get_settings.cache_clear()
    try:
        r = run("expand", "d", "--order", "2")
    finally:
        monkeypatch.delenv("QSER_LOG_LEVEL")
        get_settings.cache_clear()
    assert r.exit_code == 2
    assert "QSER_" in r.stderr
