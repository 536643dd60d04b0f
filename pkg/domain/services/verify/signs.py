from __future__ import annotations

import logging
from typing import Dict, List, Optional

from domain.models.named import NamedSeries
from domain.models.report import Report, ReportStatus, Sign, SignPattern, Violation
from domain.services.rr_series.service import NameLike, SeriesRegistry, registry
from domain.services.verify.catalog import sign_checks, sign_pattern
from domain.settings import get_settings

logger = logging.getLogger("qser.verify")

CONJECTURE13_PARTS = ("A", "B", "D")


def _cap(violations: List[Violation], notes: List[str]) -> List[Violation]:
    cap = get_settings().violations_cap
    if len(violations) > cap:
        notes.append(f"{len(violations)} violations, first {cap} listed")
        return violations[:cap]
    return violations


def _progression_n(violations: List[Violation], pattern: SignPattern) -> List[int]:
    """Опровержения гипотез хранятся как n прогрессии modulus*n + r, а не как индекс коэффициента."""
    return sorted({v.index // pattern.modulus for v in violations})


def _collect(name: NameLike, pattern: SignPattern, n_max: int, reg: SeriesRegistry) -> List[Violation]:
    label = NamedSeries(name).value
    series = reg.build(name, n_max + 1)
    out: List[Violation] = []
    for n in range(n_max + 1):
        value = series[n]
        exc = pattern.exception_at(n)
        if exc is not None:
            if value != exc.value:
                out.append(Violation(
                    index=n, value=value, expected=Sign.of(exc.value),
                    series=label, expected_value=exc.value,
                ))
            continue
        expected = pattern.expected_for(n)
        # ноль при строгом знаке: нарушение
        if not expected.admits(value):
            out.append(Violation(index=n, value=value, expected=expected, series=label))
    return out


def scan_signs(
    name: NameLike,
    pattern: SignPattern,
    n_max: int,
    *,
    reg: Optional[SeriesRegistry] = None,
) -> Report:
    """Сверяет знаки коэффициентов 0..n_max с шаблоном; исключения: с точными значениями."""
    if n_max < 0:
        raise ValueError(f"n_max must be nonnegative, got {n_max}")
    reg = reg or registry
    violations = _collect(name, pattern, n_max, reg)
    notes: List[str] = []
    if not violations:
        status = ReportStatus.verified
        falsified: Dict[str, List[int]] = {}
    elif pattern.kind == "conjecture":
        status = ReportStatus.falsified
        falsified = {NamedSeries(name).value: _progression_n(violations, pattern)}
    else:
        status = ReportStatus.violated
        falsified = {}
    logger.info("scan %s on %s to %d: %s (%d violations)",
                pattern.name, NamedSeries(name).value, n_max, status.value, len(violations))
    return Report(
        subject=pattern.name,
        order_checked=n_max,
        status=status,
        violations=_cap(violations, notes),
        falsified=falsified,
        notes=notes,
    )


def check_conjecture13(n_max: int, *, reg: Optional[SeriesRegistry] = None) -> Report:
    """
    A(5n) < 0, B(5n) < 0, D(5n+1) > 0 для 0 <= n <= n_max.
    Индексы опровержения: в терминах n, а не номера коэффициента.
    """
    if n_max < 0:
        raise ValueError(f"n_max must be nonnegative, got {n_max}")
    reg = reg or registry
    falsified: Dict[str, List[int]] = {}
    violations: List[Violation] = []
    notes: List[str] = []
    for part in CONJECTURE13_PARTS:
        pattern = sign_pattern(f"conjecture13-{part}")
        top = pattern.modulus * n_max + max(pattern.expected)
        found = _collect(pattern.series, pattern, top, reg)
        falsified[part] = _progression_n(found, pattern)
        violations.extend(found)
        if found:
            notes.append(f"{part}: fails at n = {falsified[part]}")
        else:
            notes.append(f"{part}: holds for 0 <= n <= {n_max}")

    violations.sort(key=lambda v: (v.index, v.series or ""))
    status = ReportStatus.falsified if violations else ReportStatus.verified
    return Report(
        subject="conjecture13",
        order_checked=n_max,
        status=status,
        violations=_cap(violations, notes),
        falsified=falsified,
        notes=notes,
    )


def check_counterexamples(*, reg: Optional[SeriesRegistry] = None) -> Report:
    """Отдельные строгие знаки: A(0)>0, A(10)<0, A(15)<0, B(0)>0, B(5)<0, D(1)>0."""
    reg = reg or registry
    violations: List[Violation] = []
    notes: List[str] = []
    top = 0
    for name, n, expected in sign_checks():
        value = reg.coefficient(name, n)
        top = max(top, n)
        notes.append(f"{name.value}({n}) = {value}")
        if not expected.admits(value):
            violations.append(Violation(index=n, value=value, expected=expected, series=name.value))
    return Report(
        subject="counterexamples",
        order_checked=top,
        status=ReportStatus.violated if violations else ReportStatus.verified,
        violations=violations,
        notes=notes,
    )
