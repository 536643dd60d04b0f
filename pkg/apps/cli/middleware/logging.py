from __future__ import annotations

import functools
import logging
from time import perf_counter
from typing import Any, Callable, TypeVar

import click

from domain.services.series_core.errors import SeriesError
from domain.services.verify.catalog import CatalogError

logger = logging.getLogger("qser.cli")

F = TypeVar("F", bound=Callable[..., Any])


class EngineFailure(click.ClickException):
    """Ошибка движка или каталога: сообщение в stderr, код 2."""

    exit_code = 2


def log_command(func: F) -> F:
    """
    Оборачивает команду: одна строка лога на вызов (время, аргументы, код выхода),
    ошибки движка превращаются в EngineFailure.
    """

    @functools.wraps(func)
    def wrapper(*args: Any, **kwargs: Any) -> Any:
        t0 = perf_counter()
        code = 0
        try:
            return func(*args, **kwargs)
        except (SeriesError, CatalogError) as exc:
            code = EngineFailure.exit_code
            raise EngineFailure(str(exc)) from exc
        except click.exceptions.Exit as exc:
            code = exc.exit_code
            raise
        except click.ClickException as exc:
            code = exc.exit_code
            raise
        finally:
            logger.info(
                "CMD %s | %.1f ms | in=%s | out=exit %s",
                func.__name__,
                (perf_counter() - t0) * 1000.0,
                kwargs,
                code,
            )

    return wrapper  # type: ignore[return-value]
