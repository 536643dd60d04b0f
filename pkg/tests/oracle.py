"""
Независимый оракул: наивные списки коэффициентов, без движка.
Только для малых порядков (<= ~30).
"""
from __future__ import annotations

import random
from typing import List, Sequence, Tuple

from domain.models.series import Series


def poly_mul(a: Sequence[int], b: Sequence[int], n: int) -> List[int]:
    out = [0] * n
    for i in range(min(n, len(a))):
        for j in range(min(n - i, len(b))):
            out[i + j] += a[i] * b[j]
    return out


def geometric(t: int, n: int) -> List[int]:
    """1 / (1 - q^t)"""
    return [1 if k % t == 0 else 0 for k in range(n)]


def naive_product(factors: Sequence[Tuple[int, int, int]], n: int) -> List[int]:
    """prod (q^a; q^m)^e множитель за множителем, без пентагонального ускорения."""
    out = [1] + [0] * (n - 1)
    for a, m, e in factors:
        for t in range(a, n, m):
            binom = [1] + [0] * (n - 1)
            binom[t] = -1
            f = binom if e > 0 else geometric(t, n)
            for _ in range(abs(e)):
                out = poly_mul(out, f, n)
    return out


def finite_pochhammer(k: int, n: int) -> List[int]:
    """(q; q)_k"""
    out = [1] + [0] * (n - 1)
    for t in range(1, k + 1):
        binom = [1] + [0] * (n - 1)
        if t < n:
            binom[t] = -1
        out = poly_mul(out, binom, n)
    return out


def rr(n: int) -> List[int]:
    return naive_product([(1, 5, 1), (4, 5, 1), (2, 5, -1), (3, 5, -1)], n)


def rr_inverse(n: int) -> List[int]:
    return naive_product([(1, 5, -1), (4, 5, -1), (2, 5, 1), (3, 5, 1)], n)


def power(a: Sequence[int], k: int, n: int) -> List[int]:
    out = [1] + [0] * (n - 1)
    for _ in range(k):
        out = poly_mul(out, a, n)
    return out


def substitute(a: Sequence[int], m: int, n: int) -> List[int]:
    out = [0] * n
    for i, c in enumerate(a):
        if i * m < n:
            out[i * m] = c
    return out


def random_series(rng: random.Random, prec: int, *, unit: bool = False, bound: int = 9) -> Series:
    coeffs = [rng.randint(-bound, bound) for _ in range(prec)]
    if unit and prec:
        coeffs[0] = rng.choice((1, -1))
    return Series.from_coeffs(coeffs, prec)
