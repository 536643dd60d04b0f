from __future__ import annotations

from typing import List, Sequence, Tuple

from domain.models.series import Series
from domain.services.series_core.errors import (
    NegativeShiftNonzeroLowTerms,
    NonUnitConstantTerm,
    NonUnitLeadingCoefficient,
    ValuationMismatch,
    ZeroDivisor,
)
from domain.settings import get_settings

# Все операции чистые: Series неизменяем, результат всегда новый объект.
# Точность результата: min(prec операндов), со сдвигами по правилам каждой операции.


# ---- аддитивная часть ----

def add(a: Series, b: Series) -> Series:
    prec = min(a.prec, b.prec)
    return Series(tuple(x + y for x, y in zip(a.coeffs, b.coeffs)), prec)


def sub(a: Series, b: Series) -> Series:
    prec = min(a.prec, b.prec)
    return Series(tuple(x - y for x, y in zip(a.coeffs, b.coeffs)), prec)


def neg(a: Series) -> Series:
    return Series(tuple(-x for x in a.coeffs), a.prec)


def scale(a: Series, c: int) -> Series:
    return Series(tuple(c * x for x in a.coeffs), a.prec)


def shift(a: Series, k: int) -> Series:
    """
    Умножение на q^k. При k < 0 младшие |k| коэффициентов обязаны быть известными нулями.
    """
    if k >= 0:
        return Series((0,) * k + a.coeffs, a.prec + k)
    drop = -k
    if a.prec < drop or any(a.coeffs[:drop]):
        raise NegativeShiftNonzeroLowTerms(
            f"cannot divide by q^{drop}: valuation {a.valuation()} at prec {a.prec}"
        )
    return Series(a.coeffs[drop:], a.prec - drop)


# ---- умножение ----

def _support(xs: Sequence[int]) -> List[Tuple[int, int]]:
    return [(i, c) for i, c in enumerate(xs) if c]


def _schoolbook(x: Sequence[int], y: Sequence[int], n: int) -> List[int]:
    sx, sy = _support(x), _support(y)
    if len(sx) > len(sy):
        x, y, sx, sy = y, x, sy, sx
    out = [0] * n
    if 2 * len(sy) < n:
        # оба множителя разреженные
        for i, ci in sx:
            for j, cj in sy:
                if i + j >= n:
                    break
                out[i + j] += ci * cj
        return out
    for i, ci in sx:
        out[i:] = [o + ci * v for o, v in zip(out[i:], y)]
    return out


def _pack(xs: Sequence[int], width: int) -> int:
    pos = b"".join((c if c > 0 else 0).to_bytes(width, "little") for c in xs)
    negs = b"".join((-c if c < 0 else 0).to_bytes(width, "little") for c in xs)
    return int.from_bytes(pos, "little") - int.from_bytes(negs, "little")


def _packed(x: Sequence[int], y: Sequence[int], n: int) -> List[int]:
    """
    Подстановка Кронекера: коэффициенты упаковываются в одно большое целое
    по `width` байт на разряд, и свёртка сводится к одному умножению int.
    Разряд произведения по модулю меньше 2^(8*width-1), поэтому распаковка со смещением точна.
    """
    lx = max(i for i, c in enumerate(x) if c) + 1
    ly = max(i for i, c in enumerate(y) if c) + 1
    x, y = x[:lx], y[:ly]
    bits = (
        max(abs(c) for c in x).bit_length()
        + max(abs(c) for c in y).bit_length()
        + min(lx, ly).bit_length()
    )
    width = (bits + 8) // 8
    length = lx + ly - 1
    half = 1 << (8 * width - 1)
    bias = int.from_bytes((b"\x00" * (width - 1) + b"\x80") * length, "little")
    raw = (_pack(x, width) * _pack(y, width) + bias).to_bytes(length * width, "little")
    digits = min(n, length)
    out = [
        int.from_bytes(raw[i * width:(i + 1) * width], "little") - half
        for i in range(digits)
    ]
    out.extend([0] * (n - digits))
    return out


def _convolve(x: Sequence[int], y: Sequence[int], n: int) -> List[int]:
    """Первые n коэффициентов произведения; x и y длины не меньше n не обязаны быть."""
    nx = sum(1 for c in x[:n] if c)
    ny = sum(1 for c in y[:n] if c)
    if not nx or not ny:
        return [0] * n
    x = list(x[:n]) + [0] * (n - len(x[:n]))
    y = list(y[:n]) + [0] * (n - len(y[:n]))
    if min(nx, ny) < get_settings().schoolbook_cutoff:
        return _schoolbook(x, y, n)
    return _packed(x, y, n)


def mul(a: Series, b: Series) -> Series:
    prec = min(a.prec, b.prec)
    return Series(tuple(_convolve(a.coeffs, b.coeffs, prec)), prec)


def pow(a: Series, k: int) -> Series:
    """Возведение в степень k >= 0 повторным возведением в квадрат."""
    if k < 0:
        raise ValueError(f"exponent must be nonnegative, got {k}")
    result = Series.one(a.prec)
    base = a
    while k:
        if k & 1:
            result = mul(result, base)
        k >>= 1
        if k:
            base = mul(base, base)
    return result


def polynomial_in(x: Series, coeffs: Sequence[int]) -> Series:
    """sum(coeffs[i] * x^i) по схеме Горнера; prec = x.prec."""
    result = Series.zero(x.prec)
    for c in reversed(coeffs):
        result = add(mul(result, x), Series.monomial(0, c, x.prec))
    return result


# ---- обращение и деление ----

def _inverse_recursive(x: Sequence[int]) -> List[int]:
    n = len(x)
    a0 = x[0]
    tail = [(k, c) for k, c in enumerate(x) if c and k > 0]
    out = [0] * n
    out[0] = a0
    for m in range(1, n):
        s = 0
        for k, c in tail:
            if k > m:
                break
            s += c * out[m - k]
        out[m] = -a0 * s
    return out


def _inverse_newton(x: Sequence[int]) -> List[int]:
    # b <- b * (2 - a*b): число верных коэффициентов удваивается на каждом шаге
    n = len(x)
    b: List[int] = [x[0]]
    p = 1
    while p < n:
        p = min(2 * p, n)
        t = _convolve(x, b, p)
        err = [-c for c in t]
        err[0] += 2
        b = _convolve(b, err, p)
    return b


def inverse(a: Series) -> Series:
    if a.prec == 0:
        return a
    if a.coeffs[0] not in (1, -1):
        raise NonUnitConstantTerm(f"constant term {a.coeffs[0]} is not a unit in Z")
    if a.prec < get_settings().newton_cutoff:
        coeffs = _inverse_recursive(a.coeffs)
    else:
        coeffs = _inverse_newton(a.coeffs)
    return Series(tuple(coeffs), a.prec)


def div(a: Series, b: Series) -> Series:
    """
    a / b при val(b) <= val(a) и старшем коэффициенте b, равном ±1.
    Сдвиг q^v сокращается, поэтому prec = min(a.prec, b.prec) - v.
    """
    v = b.valuation()
    if v is None:
        raise ZeroDivisor(f"divisor is zero to prec {b.prec}")
    if b.coeffs[v] not in (1, -1):
        raise NonUnitLeadingCoefficient(f"leading coefficient {b.coeffs[v]} at q^{v}")
    va = a.valuation()
    if va is not None and va < v:
        raise ValuationMismatch(f"dividend valuation {va} < divisor valuation {v}")
    prec = max(min(a.prec, b.prec) - v, 0)
    num = Series(a.coeffs[v:v + prec], prec)
    den = Series(b.coeffs[v:v + prec], prec)
    return mul(num, inverse(den))


# ---- подстановка и диссекция ----

def substitute_qm(a: Series, m: int) -> Series:
    """q -> q^m."""
    if m < 1:
        raise ValueError(f"m must be positive, got {m}")
    if m == 1:
        return a
    out = [0] * (a.prec * m)
    out[::m] = a.coeffs
    return Series(tuple(out), a.prec * m)


def dissect(a: Series, m: int, j: int) -> Series:
    """sum a[m*n + j] q^n; prec: число полностью известных извлечённых коэффициентов."""
    if m < 1:
        raise ValueError(f"m must be positive, got {m}")
    if not 0 <= j < m:
        raise ValueError(f"residue {j} out of range for modulus {m}")
    prec = max((a.prec - j + m - 1) // m, 0)
    return Series(a.coeffs[j::m], prec)
