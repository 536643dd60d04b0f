from __future__ import annotations

import csv
import io
import logging
from functools import lru_cache
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence

import click
import orjson
from jsonschema import Draft202012Validator

from domain.models.report import Report
from domain.models.series import Series
from domain.settings import get_settings, repo_root

logger = logging.getLogger("qser.cli")

FORMATS = ("table", "csv", "json")


def _contracts_dir() -> Path:
    override = get_settings().contracts_dir
    if override is not None:
        return Path(override)
    return repo_root("contracts/cli") / "contracts" / "cli"


@lru_cache(maxsize=8)
def _validator(contract: str) -> Optional[Draft202012Validator]:
    path = _contracts_dir() / contract
    if not path.exists():
        logger.warning("contract %s not found, json output not validated", path)
        return None
    return Draft202012Validator(orjson.loads(path.read_bytes()))


def _json(doc: Any, contract: str, many: bool = False) -> str:
    if get_settings().validate_output:
        validator = _validator(contract)
        if validator is not None:
            for item in (doc if many else [doc]):
                validator.validate(item)
    return orjson.dumps(doc, option=orjson.OPT_INDENT_2 | orjson.OPT_APPEND_NEWLINE).decode("utf-8")


def _csv(header: Sequence[str], rows: Sequence[Sequence[Any]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _table(header: Sequence[str], rows: Sequence[Sequence[Any]]) -> str:
    cells = [[str(c) for c in header]] + [[str(c) for c in row] for row in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(header))]
    lines = ["  ".join(c.rjust(w) for c, w in zip(r, widths)) for r in cells]
    return "\n".join(lines) + "\n"


# ---- ряды и коэффициенты ----

def render_coefficients(name: str, series: Series, fmt: str) -> str:
    if fmt == "json":
        return _json({"name": name, "coeffs": [str(c) for c in series.coeffs]}, "expansion.v1.json")
    rows = list(enumerate(series.coeffs))
    if fmt == "csv":
        return _csv(("n", "coefficient"), rows)
    return _table(("n", "coefficient"), rows)


def render_coefficient(name: str, n: int, value: int, fmt: str) -> str:
    if fmt == "json":
        return _json({"name": name, "index": n, "value": str(value)}, "coefficient.v1.json")
    if fmt == "csv":
        return _csv(("n", "coefficient"), [(n, value)])
    return _table(("n", "coefficient"), [(n, value)])


# ---- отчёты ----

def _report_row(r: Report) -> List[Any]:
    div = r.first_divergence.index if r.first_divergence else ""
    return [r.subject, r.order_checked, r.status.value, div, len(r.violations)]


def _report_block(r: Report) -> str:
    lines = [
        f"subject:        {r.subject}",
        f"status:         {r.status.value}",
        f"order checked:  {r.order_checked}",
    ]
    if r.first_divergence:
        d = r.first_divergence
        lines.append(f"diverges at:    q^{d.index}  lhs={d.lhs}  rhs={d.rhs}")
    for part, ns in sorted(r.falsified.items()):
        lines.append(f"falsified {part}:    n = {ns}")
    if r.violations:
        rows = [(v.series or "", v.index, v.value, v.expected.value) for v in r.violations]
        lines.append(_table(("series", "index", "value", "expected"), rows).rstrip("\n"))
    lines.extend(f"note:           {n}" for n in r.notes)
    return "\n".join(lines) + "\n"


def render_reports(reports: Sequence[Report], fmt: str, *, many: bool = False) -> str:
    """Один отчёт: один json-документ; `many`: json-массив (verify all)."""
    if fmt == "json":
        docs: List[Dict[str, Any]] = [r.model_dump(mode="json") for r in reports]
        return _json(docs if many else docs[0], "report.v1.json", many=many)
    if fmt == "csv":
        header = ("subject", "order_checked", "status", "divergence_index", "violations")
        return _csv(header, [_report_row(r) for r in reports])
    return "\n".join(_report_block(r) for r in reports)


def echo(text: str) -> None:
    click.echo(text, nl=False)


def echo_diagnostics(reports: Sequence[Report]) -> None:
    """Расхождения: в stderr; stdout несёт только данные."""
    for r in reports:
        if r.first_divergence is not None:
            d = r.first_divergence
            click.echo(f"{r.subject}: first divergence at q^{d.index}: lhs={d.lhs} rhs={d.rhs}", err=True)
        for v in r.violations:
            click.echo(
                f"{r.subject}: {v.series or ''}({v.index}) = {v.value}, expected {v.expected.value}",
                err=True,
            )
