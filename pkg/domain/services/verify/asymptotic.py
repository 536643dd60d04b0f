from __future__ import annotations

import math
from typing import List, Optional

from pydantic import BaseModel, ConfigDict, Field

from domain.models.named import NamedSeries
from domain.models.report import Report, ReportStatus, Sign, Violation
from domain.services.rr_series.service import SeriesRegistry, registry
from domain.settings import get_settings


def cos_factor(n: int) -> float:
    return math.cos(2 * math.pi / 5 * (n - 2 / 5))


def asymptotic_c(n: int) -> float:
    """Главный член асимптотики c(n): sqrt(2) (5n)^{-3/4} exp(4pi/25 sqrt(5n)) cos(2pi/5 (n - 2/5))."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    return math.sqrt(2) / (5 * n) ** 0.75 * math.exp(4 * math.pi / 25 * math.sqrt(5 * n)) * cos_factor(n)


class AsymptoticSummary(BaseModel):
    model_config = ConfigDict(extra="forbid")

    n_lo: int
    n_hi: int
    checked: int = Field(..., ge=0)
    skipped: int = Field(..., ge=0)
    mismatches: List[int] = Field(default_factory=list)
    window: int
    window_means: List[float] = Field(default_factory=list, description="mean relative error per window")

    @property
    def agreement(self) -> float:
        return 1.0 if not self.checked else (self.checked - len(self.mismatches)) / self.checked


def compare_asymptotic(
    n_lo: int,
    n_hi: int,
    *,
    window: int = 100,
    reg: Optional[SeriesRegistry] = None,
) -> AsymptoticSummary:
    """Сверка знака и относительной ошибки главного члена с точными c(n), n_lo <= n <= n_hi."""
    if n_lo < 1:
        raise ValueError(f"n_lo must be positive, got {n_lo}")
    reg = reg or registry
    cutoff = get_settings().asymptotic_cos_cutoff
    exact = reg.build(NamedSeries.c, max(n_hi + 1, 0))

    checked = skipped = 0
    mismatches: List[int] = []
    buckets: dict[int, List[float]] = {}
    for n in range(n_lo, n_hi + 1):
        # у нуля косинуса главный член знак не определяет
        if abs(cos_factor(n)) <= cutoff:
            skipped += 1
            continue
        checked += 1
        approx = asymptotic_c(n)
        value = exact[n]
        if Sign.of(value) is not Sign.of(int(math.copysign(1, approx))):
            mismatches.append(n)
        if value:
            buckets.setdefault((n - n_lo) // window, []).append(abs(approx - value) / abs(value))

    return AsymptoticSummary(
        n_lo=n_lo,
        n_hi=n_hi,
        checked=checked,
        skipped=skipped,
        mismatches=mismatches,
        window=window,
        window_means=[sum(v) / len(v) for _, v in sorted(buckets.items())],
    )


def scan_asymptotic(n_max: int, *, reg: Optional[SeriesRegistry] = None) -> Report:
    """
    Отчёт по асимптотике c(n) на [asymptotic_n_min, min(n_max, asymptotic_n_max)].
    Несовпадения знака всегда перечисляются; статус violated: только ниже порога согласия.
    """
    settings = get_settings()
    reg = reg or registry
    n_lo = settings.asymptotic_n_min
    n_hi = min(n_max, settings.asymptotic_n_max)
    if n_hi < n_lo:
        return Report(
            subject="asymptotic-c",
            order_checked=n_max,
            status=ReportStatus.verified,
            notes=[f"window [{n_lo}, {n_hi}] is empty"],
        )

    summary = compare_asymptotic(n_lo, n_hi, reg=reg)
    exact = reg.build(NamedSeries.c, n_hi + 1)
    violations = [
        Violation(
            index=n,
            value=exact[n],
            expected=Sign.of(int(math.copysign(1, asymptotic_c(n)))),
            series=NamedSeries.c.value,
        )
        for n in summary.mismatches
    ]
    ok = summary.agreement >= settings.asymptotic_agreement
    notes = [
        f"sign agreement {summary.agreement:.4f} over {summary.checked} indices "
        f"({summary.skipped} skipped near cosine zeros)",
    ]
    if summary.window_means:
        notes.append(
            f"mean relative error: first window {summary.window_means[0]:.3e}, "
            f"last window {summary.window_means[-1]:.3e}"
        )
    return Report(
        subject="asymptotic-c",
        order_checked=n_hi,
        status=ReportStatus.verified if ok else ReportStatus.violated,
        violations=violations[: settings.violations_cap],
        notes=notes,
    )
