from __future__ import annotations

from typing import Optional

import click

from apps.cli.middleware.logging import log_command
from apps.cli.render import FORMATS, echo, echo_diagnostics, render_reports
from domain.services.verify.identities import IDENTITY_TARGETS, verify_all, verify_target
from domain.settings import get_settings


@click.command("verify")
@click.argument("target", type=click.Choice([*IDENTITY_TARGETS, "all"]))
@click.option("--order", type=click.IntRange(min=1), default=None, help="Truncation order to check.")
@click.option("--format", "fmt", type=click.Choice(FORMATS), default="table", show_default=True)
@log_command
def verify(target: str, order: Optional[int], fmt: str) -> None:
    """Check an identity coefficient-wise; exit 0 iff verified."""
    order = order or get_settings().verify_order
    if target == "all":
        reports = verify_all(order)
    else:
        reports = [verify_target(target, order)]
    echo(render_reports(reports, fmt, many=target == "all"))

    failed = [r for r in reports if not r.ok]
    echo_diagnostics(failed)
    click.get_current_context().exit(1 if failed else 0)
