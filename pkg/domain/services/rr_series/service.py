from __future__ import annotations

import logging
import threading
from time import perf_counter
from typing import Callable, Dict, Union

from domain.models.named import COEFFICIENT_ALIASES, NamedSeries
from domain.models.series import Series
from domain.services.qproducts.service import (
    G_PRODUCT,
    H_PRODUCT,
    eta_quotient,
    expand_product,
    pochhammer_inverse,
)
from domain.services.series_core import service as sc

logger = logging.getLogger("qser.registry")

NameLike = Union[NamedSeries, str]

_SUM_OFFSETS = {NamedSeries.G_sum: 0, NamedSeries.H_sum: 1}


def build_sum_form(name: NameLike, prec: int) -> Series:
    """
    Суммы Роджерса–Рамануджана: sum q^{n^2 + s*n} / (q;q)_n, s = 0 для G, 1 для H.
    Используются только как оракул для форм-произведений.
    """
    key = NamedSeries(name)
    if key not in _SUM_OFFSETS:
        raise ValueError(f"{key.value} has no sum form")
    if prec < 0:
        raise ValueError(f"prec must be nonnegative, got {prec}")
    s = _SUM_OFFSETS[key]
    total = Series.zero(prec)
    n = 0
    while n * n + s * n < prec:
        e = n * n + s * n
        total = sc.add(total, sc.shift(pochhammer_inverse(n, prec - e), e))
        n += 1
    return total


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


class SeriesRegistry:
    """
    Именованные ряды с кэшем по имени: хранится самый точный построенный ряд,
    запросы меньшей точности отдают его префикс.
    Под блокировкой только чтение/запись кэша; гонка двух сборок даёт одинаковые значения.
    """

    def __init__(self) -> None:
        self._cache: Dict[NamedSeries, Series] = {}
        self._lock = threading.Lock()
        self._recipes: Dict[NamedSeries, Callable[[int], Series]] = {
            NamedSeries.G: lambda p: expand_product(G_PRODUCT, p),
            NamedSeries.H: lambda p: expand_product(H_PRODUCT, p),
            NamedSeries.G_sum: lambda p: build_sum_form(NamedSeries.G_sum, p),
            NamedSeries.H_sum: lambda p: build_sum_form(NamedSeries.H_sum, p),
            NamedSeries.R: lambda p: sc.div(self.build(NamedSeries.H, p), self.build(NamedSeries.G, p)),
            NamedSeries.Rinv: lambda p: sc.inverse(self.build(NamedSeries.R, p)),
            NamedSeries.R5: lambda p: sc.pow(self.build(NamedSeries.R, p), 5),
            NamedSeries.R5inv: lambda p: sc.pow(self.build(NamedSeries.Rinv, p), 5),
            NamedSeries.Rq5: lambda p: self.build_q5(NamedSeries.R, p),
            NamedSeries.Cratio: lambda p: sc.div(self.build(NamedSeries.R5, p), self.build(NamedSeries.Rq5, p)),
            NamedSeries.Dratio: lambda p: sc.div(self.build(NamedSeries.Rq5, p), self.build(NamedSeries.R5, p)),
            NamedSeries.Fratio15: lambda p: expand_product(eta_quotient((1, 6), (5, -6)), p),
            NamedSeries.Fratio51: lambda p: expand_product(eta_quotient((5, 6), (1, -6)), p),
        }

    def build(self, name: NameLike, prec: int) -> Series:
        if prec < 0:
            raise ValueError(f"prec must be nonnegative, got {prec}")
        key = NamedSeries(name)
        key = COEFFICIENT_ALIASES.get(key, key)
        if prec == 0:
            return Series.zero(0)

        with self._lock:
            cached = self._cache.get(key)
        if cached is not None and cached.prec >= prec:
            return cached.truncate(prec)

        t0 = perf_counter()
        series = self._recipes[key](prec)
        logger.debug("built %s to prec %d in %.1f ms", key.value, prec, (perf_counter() - t0) * 1000.0)

        with self._lock:
            current = self._cache.get(key)
            if current is None or current.prec < series.prec:
                self._cache[key] = series
        return series.truncate(prec)

    def build_q5(self, name: NameLike, prec: int) -> Series:
        """Именованный ряд при q -> q^5, усечённый до prec."""
        base = self.build(name, _ceil_div(prec, 5))
        return sc.substitute_qm(base, 5).truncate(prec)

    def coefficient(self, name: NameLike, n: int) -> int:
        if n < 0:
            raise ValueError(f"index must be nonnegative, got {n}")
        return self.build(name, n + 1)[n]

    def clear(self) -> None:
        with self._lock:
            self._cache.clear()


registry = SeriesRegistry()


def build(name: NameLike, prec: int) -> Series:
    return registry.build(name, prec)


def coefficient(name: NameLike, n: int) -> int:
    return registry.coefficient(name, n)
