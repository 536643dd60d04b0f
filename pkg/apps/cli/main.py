from __future__ import annotations

import logging
import sys
from typing import Optional

import click
from pydantic import ValidationError

from apps.cli.commands.expand import coeff, expand
from apps.cli.commands.scan import scan
from apps.cli.commands.verify import verify
from domain.settings import LOG_LEVELS, get_settings


@click.group(name="qser")
@click.version_option("0.1.0", prog_name="qser")
@click.option(
    "--log-level",
    type=click.Choice(LOG_LEVELS, case_sensitive=False),
    default=None,
    help="Override QSER_LOG_LEVEL (stderr diagnostics).",
)
def cli(log_level: Optional[str]) -> None:
    """Exact q-series engine for the Rogers-Ramanujan continued fraction."""
    try:
        settings = get_settings()
    except ValidationError as exc:
        raise click.UsageError(f"invalid QSER_* environment: {exc}") from exc
    level = (log_level or settings.log_level).upper()
    logging.basicConfig(level=level, stream=sys.stderr)
    logging.getLogger("qser").setLevel(level)


# Команды
cli.add_command(expand)
cli.add_command(coeff)
cli.add_command(verify)
cli.add_command(scan)
