from __future__ import annotations

from typing import Iterator, List, Tuple

from domain.models.products import Factor, ProductSpec
from domain.models.series import Series
from domain.services.series_core import service as sc

# Произведения раскрываются множитель за множителем с немедленным усечением:
# умножение/деление на (1 - q^t) на месте стоит O(prec).


def _times_binomial(c: List[int], t: int) -> None:
    """c <- c * (1 - q^t)"""
    n = len(c)
    if t < n:
        c[t:] = [x - y for x, y in zip(c[t:], c[:n - t])]


def _over_binomial(c: List[int], t: int) -> None:
    """c <- c / (1 - q^t); блоками по t, каждый блок зависит от уже обновлённого предыдущего."""
    n = len(c)
    for start in range(t, n, t):
        stop = min(start + t, n)
        c[start:stop] = [x + y for x, y in zip(c[start:stop], c[start - t:stop - t])]


def _unit(prec: int) -> List[int]:
    out = [0] * prec
    if prec:
        out[0] = 1
    return out


def pochhammer_inf(a: int, m: int, prec: int) -> Series:
    """(q^a; q^m)_inf до q^prec: участвуют только множители с a + k*m < prec."""
    if a < 1 or m < 1:
        raise ValueError(f"need a >= 1 and m >= 1, got a={a}, m={m}")
    if prec < 0:
        raise ValueError(f"prec must be nonnegative, got {prec}")
    c = _unit(prec)
    for t in range(a, prec, m):
        _times_binomial(c, t)
    return Series(tuple(c), prec)


def pochhammer_inverse(n: int, prec: int) -> Series:
    """1 / (q; q)_n: деление на биномы (1 - q^t), t = 1..n."""
    c = _unit(prec)
    for t in range(1, n + 1):
        _over_binomial(c, t)
    return Series(tuple(c), prec)


def _pentagonal_terms(k: int, prec: int) -> Iterator[Tuple[int, int]]:
    # (q;q)_inf = sum_{j in Z} (-1)^j q^{j(3j-1)/2}
    yield 0, 1
    j = 1
    while True:
        g1 = k * j * (3 * j - 1) // 2
        if g1 >= prec:
            return
        sign = -1 if j % 2 else 1
        yield g1, sign
        g2 = k * j * (3 * j + 1) // 2
        if g2 < prec:
            yield g2, sign
        j += 1


def euler_f(k: int, prec: int) -> Series:
    """f_k = (q^k; q^k)_inf через пентагональную теорему Эйлера (разреженный ряд)."""
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    c = [0] * prec
    for g, s in _pentagonal_terms(k, prec):
        c[g] = s
    return Series(tuple(c), prec)


def _factor_power(f: Factor, prec: int) -> Series:
    if f.a == f.m:
        base = euler_f(f.a, prec)
        powered = sc.pow(base, abs(f.e))
        return powered if f.e > 0 else sc.inverse(powered)
    c = _unit(prec)
    step = _times_binomial if f.e > 0 else _over_binomial
    for t in range(f.a, prec, f.m):
        for _ in range(abs(f.e)):
            step(c, t)
    return Series(tuple(c), prec)


def expand_product(spec: ProductSpec, prec: int) -> Series:
    """prod (q^a; q^m)_inf^e; все множители имеют свободный член 1, коэффициенты целые."""
    if prec < 0:
        raise ValueError(f"prec must be nonnegative, got {prec}")
    result = Series.one(prec)
    for f in spec.factors:
        result = sc.mul(result, _factor_power(f, prec))
    return result


# ---- готовые спецификации ----

def eta_quotient(*powers: Tuple[int, int]) -> ProductSpec:
    """prod f_k^e по парам (k, e)."""
    return ProductSpec.of(*[(k, k, e) for k, e in powers])


RR_PRODUCT = ProductSpec.of((1, 5, 1), (4, 5, 1), (2, 5, -1), (3, 5, -1))
G_PRODUCT = ProductSpec.of((1, 5, -1), (4, 5, -1))
H_PRODUCT = ProductSpec.of((2, 5, -1), (3, 5, -1))
