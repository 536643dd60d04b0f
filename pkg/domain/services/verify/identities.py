from __future__ import annotations

import logging
from time import perf_counter
from typing import Callable, Dict, List, Literal, Optional, Tuple

from domain.models.named import NamedSeries
from domain.models.report import Divergence, Report, ReportStatus
from domain.models.series import Series
from domain.services.qproducts.service import eta_quotient, expand_product
from domain.services.rr_series.service import SeriesRegistry, build_sum_form, registry
from domain.services.series_core import service as sc

logger = logging.getLogger("qser.verify")

N = NamedSeries

# коэффициенты многочленов от x = q*R(q^5) из тождества для R^5(q)
PLUS_QUARTIC = (1, 3, 4, 2, 1)
MINUS_QUARTIC = (1, -2, 4, -3, 1)

GenfunTarget = Literal["A_full", "B_full", "D_full"]
DissectionTarget = Literal["A0", "B0", "D1", "C0"]
ConvolutionTarget = Literal["A0", "B0", "D1"]


def compare(subject: str, lhs: Series, rhs: Series, order: int) -> Report:
    """Точное покоэффициентное сравнение до min(order, lhs.prec, rhs.prec)."""
    checked = min(order, lhs.prec, rhs.prec)
    diffs = [n for n in range(checked) if lhs.coeffs[n] != rhs.coeffs[n]]
    if not diffs:
        return Report(subject=subject, order_checked=checked, status=ReportStatus.verified)
    n = diffs[0]
    return Report(
        subject=subject,
        order_checked=checked,
        status=ReportStatus.violated,
        first_divergence=Divergence(index=n, lhs=lhs.coeffs[n], rhs=rhs.coeffs[n]),
        notes=[f"{len(diffs)} mismatching coefficients below q^{checked}"],
    )


def _require_prec(prec: int) -> None:
    if prec < 1:
        raise ValueError(f"order must be at least 1, got {prec}")


def _x(reg: SeriesRegistry, prec: int) -> Series:
    """q * R(q^5)"""
    return sc.shift(reg.build_q5(N.R, prec), 1).truncate(prec)


def _euler_dissection_factor(reg: SeriesRegistry, prec: int) -> Series:
    """1/R(q^5) - q - q^2 R(q^5)  (= f_1 / f_25)"""
    rq5inv = reg.build_q5(N.Rinv, prec)
    rq5 = reg.build_q5(N.R, prec)
    return sc.sub(sc.sub(rq5inv, Series.monomial(1, 1, prec)), sc.shift(rq5, 2))


def _one_minus_25q_ratio(reg: SeriesRegistry, prec: int) -> Series:
    """1 - 25 q f_5^6 / f_1^6"""
    tail = sc.scale(sc.shift(reg.build(N.Fratio51, prec), 1), 25)
    return sc.sub(Series.one(prec), tail)


# ---- тождества ----

def verify_identity_B20(prec: int, *, reg: Optional[SeriesRegistry] = None) -> Report:
    """1/R^5(q) - q^2 R^5(q) = 11q + f_1^6/f_5^6"""
    _require_prec(prec)
    reg = reg or registry
    lhs = sc.sub(reg.build(N.R5inv, prec), sc.shift(reg.build(N.R5, prec), 2))
    rhs = sc.add(Series.monomial(1, 11, prec), reg.build(N.Fratio15, prec))
    return compare("B20", lhs, rhs, prec)


def verify_identity_R5(prec: int, *, reg: Optional[SeriesRegistry] = None) -> Report:
    """R^5(q) = R(q^5) * N(x) / P(x), x = q R(q^5)."""
    _require_prec(prec)
    reg = reg or registry
    x = _x(reg, prec)
    ratio = sc.div(sc.polynomial_in(x, MINUS_QUARTIC), sc.polynomial_in(x, PLUS_QUARTIC))
    rhs = sc.mul(reg.build_q5(N.R, prec), ratio)
    return compare("R5", reg.build(N.R5, prec), rhs, prec)


_GENFUN: Dict[str, Tuple[NamedSeries, int, Tuple[int, ...]]] = {
    # ряд, степень R(q^5) в знаменателе, квадрируемый многочлен
    "A_full": (N.A, 5, PLUS_QUARTIC),
    "B_full": (N.B, 3, MINUS_QUARTIC),
    "D_full": (N.D, 4, PLUS_QUARTIC),
}


def verify_genfun(which: GenfunTarget, prec: int, *, reg: Optional[SeriesRegistry] = None) -> Report:
    """
    sum X(n) q^n = f_25^6 / (f_5^6 R^k(q^5)) * Q(x)^2 * (1/R(q^5) - q - q^2 R(q^5))
    для X = A (k=5, Q=P), B (k=3, Q=N), D (k=4, Q=P).
    """
    _require_prec(prec)
    reg = reg or registry
    name, k, quartic = _GENFUN[which]
    front = expand_product(eta_quotient((25, 6), (5, -6)), prec)
    rhs = sc.mul(front, sc.pow(reg.build_q5(N.Rinv, prec), k))
    rhs = sc.mul(rhs, sc.pow(sc.polynomial_in(_x(reg, prec), quartic), 2))
    rhs = sc.mul(rhs, _euler_dissection_factor(reg, prec))
    return compare(which, reg.build(name, prec), rhs, prec)


def _dissected(reg: SeriesRegistry, name: NamedSeries, j: int, prec: int) -> Series:
    # все сравниваемые коэффициенты определены полностью: строим до 5*prec + 4
    return sc.dissect(reg.build(name, 5 * prec + 4), 5, j).truncate(prec)


def verify_dissection(which: DissectionTarget, prec: int, *, reg: Optional[SeriesRegistry] = None) -> Report:
    """
    A0: sum A(5n) q^n = (1/R(q)) (1 - 25q f_5^6/f_1^6)
    B0: sum B(5n) q^n = R(q) (1 - 25q f_5^6/f_1^6)
    D1: sum D(5n+1) q^n = (f_5^6/f_1^6) R(q) (5/R^5(q) - 40q)
    C0: sum C(5n) q^n = 1 - 25q f_5^6/f_1^6
    """
    _require_prec(prec)
    reg = reg or registry
    if which == "A0":
        lhs = _dissected(reg, N.A, 0, prec)
        rhs = sc.mul(reg.build(N.Rinv, prec), _one_minus_25q_ratio(reg, prec))
    elif which == "B0":
        lhs = _dissected(reg, N.B, 0, prec)
        rhs = sc.mul(reg.build(N.R, prec), _one_minus_25q_ratio(reg, prec))
    elif which == "D1":
        lhs = _dissected(reg, N.D, 1, prec)
        bracket = sc.sub(sc.scale(reg.build(N.R5inv, prec), 5), Series.monomial(1, 40, prec))
        rhs = sc.mul(sc.mul(reg.build(N.Fratio51, prec), reg.build(N.R, prec)), bracket)
    elif which == "C0":
        lhs = _dissected(reg, N.C, 0, prec)
        rhs = _one_minus_25q_ratio(reg, prec)
    else:
        raise ValueError(f"unknown dissection {which!r}")
    return compare(f"dissect-{which}", lhs, rhs, prec)


_CONVOLUTION: Dict[str, Tuple[NamedSeries, int, NamedSeries, NamedSeries, int]] = {
    # слева: (ряд, вычет); справа: множитель * диссекция (ряд, вычет)
    "A0": (N.A, 0, N.c, N.C, 0),
    "B0": (N.B, 0, N.d, N.C, 0),
    "D1": (N.D, 1, N.d, N.A, 1),
}


def verify_convolution(which: ConvolutionTarget, prec: int, *, reg: Optional[SeriesRegistry] = None) -> Report:
    """
    sum A(5n) q^n = sum c(n) q^n * sum C(5n) q^n, то же для B(5n) с d(n),
    и sum D(5n+1) q^n = sum d(n) q^n * sum A(5n+1) q^n.
    """
    _require_prec(prec)
    reg = reg or registry
    left, lj, factor, right, rj = _CONVOLUTION[which]
    lhs = _dissected(reg, left, lj, prec)
    rhs = sc.mul(reg.build(factor, prec), _dissected(reg, right, rj, prec))
    return compare(f"conv-{which}", lhs, rhs, prec)


def convolution_terms(which: ConvolutionTarget, n: int, *, reg: Optional[SeriesRegistry] = None) -> List[Tuple[int, int]]:
    """
    Слагаемые свёртки для коэффициента при q^n, напр. для A0 и n = 2:
    [(c(0), C(10)), (c(1), C(5)), (c(2), C(0))]: их сумма равна A(10).
    """
    reg = reg or registry
    _, _, factor, right, rj = _CONVOLUTION[which]
    return [(reg.coefficient(factor, k), reg.coefficient(right, 5 * (n - k) + rj)) for k in range(n + 1)]


def verify_rogers_ramanujan(which: Literal["G", "H"], prec: int, *, reg: Optional[SeriesRegistry] = None) -> Report:
    """Сумма sum q^{n^2(+n)}/(q;q)_n против формы-произведения."""
    _require_prec(prec)
    reg = reg or registry
    product = N(which)
    lhs = build_sum_form(N(f"{which}_sum"), prec)
    return compare(f"rr-{which}", lhs, reg.build(product, prec), prec)


IDENTITY_TARGETS: Dict[str, Callable[..., Report]] = {
    "B20": verify_identity_B20,
    "R5": verify_identity_R5,
    "A_full": lambda p, **kw: verify_genfun("A_full", p, **kw),
    "B_full": lambda p, **kw: verify_genfun("B_full", p, **kw),
    "D_full": lambda p, **kw: verify_genfun("D_full", p, **kw),
    "dissect-A0": lambda p, **kw: verify_dissection("A0", p, **kw),
    "dissect-B0": lambda p, **kw: verify_dissection("B0", p, **kw),
    "dissect-D1": lambda p, **kw: verify_dissection("D1", p, **kw),
    "dissect-C0": lambda p, **kw: verify_dissection("C0", p, **kw),
    "conv-A0": lambda p, **kw: verify_convolution("A0", p, **kw),
    "conv-B0": lambda p, **kw: verify_convolution("B0", p, **kw),
    "conv-D1": lambda p, **kw: verify_convolution("D1", p, **kw),
    "rr-G": lambda p, **kw: verify_rogers_ramanujan("G", p, **kw),
    "rr-H": lambda p, **kw: verify_rogers_ramanujan("H", p, **kw),
}


def verify_target(target: str, prec: int, *, reg: Optional[SeriesRegistry] = None) -> Report:
    if target not in IDENTITY_TARGETS:
        raise KeyError(f"unknown identity {target!r}")
    t0 = perf_counter()
    report = IDENTITY_TARGETS[target](prec, reg=reg)
    logger.info("verify %s to %d: %s in %.1f ms",
                target, prec, report.status.value, (perf_counter() - t0) * 1000.0)
    return report


def verify_all(prec: int, *, reg: Optional[SeriesRegistry] = None) -> List[Report]:
    return [verify_target(t, prec, reg=reg) for t in IDENTITY_TARGETS]
