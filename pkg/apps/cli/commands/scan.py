from __future__ import annotations

from typing import Dict, List, Optional

import click

from apps.cli.middleware.logging import log_command
from apps.cli.render import FORMATS, echo, echo_diagnostics, render_reports
from domain.models.report import Report
from domain.services.verify.asymptotic import scan_asymptotic
from domain.services.verify.catalog import expected_falsification, sign_pattern
from domain.services.verify.signs import check_conjecture13, check_counterexamples, scan_signs
from domain.settings import get_settings

PATTERN_SCANS = ("richmond-c", "richmond-d", "thm2", "thm3", "thm4", "thm5")
SCAN_TARGETS = (*PATTERN_SCANS, "conjecture13", "asymptotic-c", "counterexamples")


def _conjecture_met(report: Report, n_max: int) -> bool:
    # успех: воспроизвести ровно ожидаемое опровержение, а не выполнение гипотезы
    expected: Dict[str, List[int]] = {
        part: [n for n in ns if n <= n_max]
        for part, ns in expected_falsification("conjecture13").items()
    }
    return report.falsified == expected


@click.command("scan")
@click.argument("target", type=click.Choice(SCAN_TARGETS))
@click.option("--n-max", "n_max", type=click.IntRange(min=0), default=None, help="Largest index checked.")
@click.option("--format", "fmt", type=click.Choice(FORMATS), default="table", show_default=True)
@log_command
def scan(target: str, n_max: Optional[int], fmt: str) -> None:
    """Scan coefficient signs; exit 0 iff the outcome matches the recorded expectation."""
    n_max = get_settings().scan_n_max if n_max is None else n_max
    if target == "conjecture13":
        report = check_conjecture13(n_max)
        met = _conjecture_met(report, n_max)
    elif target == "asymptotic-c":
        report = scan_asymptotic(n_max)
        met = report.ok
    elif target == "counterexamples":
        report = check_counterexamples()
        met = report.ok
    else:
        pattern = sign_pattern(target)
        report = scan_signs(pattern.series, pattern, n_max)
        met = report.ok
    echo(render_reports([report], fmt))

    if not met:
        echo_diagnostics([report])
    click.get_current_context().exit(0 if met else 1)
