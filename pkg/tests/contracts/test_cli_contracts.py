from pathlib import Path

import orjson
import pytest
from jsonschema import Draft202012Validator, ValidationError

from domain.models.report import Divergence, Report, ReportStatus, Sign, Violation

CONTRACTS = Path(__file__).resolve().parents[2] / "contracts" / "cli"


def _validator(name: str) -> Draft202012Validator:
    schema = orjson.loads((CONTRACTS / name).read_bytes())
    Draft202012Validator.check_schema(schema)
    return Draft202012Validator(schema)


@pytest.mark.parametrize("name", ["report.v1.json", "expansion.v1.json", "coefficient.v1.json"])
def test_schemas_are_valid(name):
    _validator(name)


def test_violated_report_dump_matches_schema():
    report = Report(
        subject="B20",
        order_checked=10,
        status=ReportStatus.violated,
        first_divergence=Divergence(index=3, lhs=10**40, rhs=-(10**40)),
        violations=[Violation(index=3, value=-2, expected=Sign.pos, series="c")],
    )
    doc = report.model_dump(mode="json")
    _validator("report.v1.json").validate(doc)
    # большие целые: строками
    assert doc["first_divergence"]["lhs"] == "1" + "0" * 40
    assert doc["violations"][0]["value"] == "-2"


def test_falsified_report_dump_matches_schema():
    report = Report(
        subject="conjecture13",
        order_checked=5,
        status=ReportStatus.falsified,
        violations=[Violation(index=0, value=1, expected=Sign.neg, series="A")],
        falsified={"A": [0], "B": [0], "D": []},
    )
    _validator("report.v1.json").validate(report.model_dump(mode="json"))


def test_numeric_coefficients_rejected():
    with pytest.raises(ValidationError):
        _validator("expansion.v1.json").validate({"name": "C", "coeffs": [1]})
    with pytest.raises(ValidationError):
        _validator("report.v1.json").validate({
            "subject": "B20", "order_checked": 1, "status": "verified",
            "first_divergence": {"index": 0, "lhs": 1, "rhs": "2"}, "violations": [],
        })


def test_unknown_status_rejected():
    with pytest.raises(ValidationError):
        _validator("report.v1.json").validate({
            "subject": "B20", "order_checked": 1, "status": "ok",
            "first_divergence": None, "violations": [],
        })
