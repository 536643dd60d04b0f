from __future__ import annotations

from typing import Optional

import click

from apps.cli.middleware.logging import log_command
from apps.cli.render import FORMATS, echo, render_coefficient, render_coefficients
from domain.models.named import NamedSeries
from domain.services.rr_series.service import build, coefficient
from domain.settings import get_settings

NAMES = click.Choice([n.value for n in NamedSeries])


@click.command("expand")
@click.argument("name", type=NAMES)
@click.option("--order", type=click.IntRange(min=1), default=None, help="Number of coefficients.")
@click.option("--format", "fmt", type=click.Choice(FORMATS), default="table", show_default=True)
@log_command
def expand(name: str, order: Optional[int], fmt: str) -> None:
    """Print coefficients 0..order-1 of a named series."""
    order = order or get_settings().expand_order
    echo(render_coefficients(name, build(name, order), fmt))


@click.command("coeff")
@click.argument("name", type=NAMES)
@click.argument("n", type=click.IntRange(min=0))
@click.option("--format", "fmt", type=click.Choice(FORMATS), default="table", show_default=True)
@log_command
def coeff(name: str, n: int, fmt: str) -> None:
    """Print the exact coefficient of q^n."""
    echo(render_coefficient(name, n, coefficient(name, n), fmt))
