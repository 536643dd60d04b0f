from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Tuple


@dataclass(frozen=True, slots=True)
class Series:
    """
    Усечённый степенной ряд по q с точными целыми коэффициентами.
    coeffs[n]: коэффициент при q^n; известны ровно коэффициенты 0 <= n < prec.
    """

    coeffs: Tuple[int, ...]
    prec: int

    def __post_init__(self) -> None:
        if self.prec < 0:
            raise ValueError(f"prec must be nonnegative, got {self.prec}")
        if len(self.coeffs) != self.prec:
            raise ValueError(f"{len(self.coeffs)} coefficients for prec {self.prec}")

    # ---- конструкторы ----

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[int], prec: Optional[int] = None) -> "Series":
        """Коэффициенты дополняются нулями (или обрезаются) до prec; по умолчанию prec = len."""
        items = [int(c) for c in coeffs]
        if prec is None:
            prec = len(items)
        if len(items) < prec:
            items.extend([0] * (prec - len(items)))
        return cls(tuple(items[:prec]), prec)

    @classmethod
    def zero(cls, prec: int) -> "Series":
        return cls((0,) * prec, prec)

    @classmethod
    def one(cls, prec: int) -> "Series":
        return cls.monomial(0, 1, prec)

    @classmethod
    def monomial(cls, k: int, c: int, prec: int) -> "Series":
        """c·q^k, усечённый до prec."""
        items = [0] * prec
        if 0 <= k < prec:
            items[k] = c
        return cls(tuple(items), prec)

    # ---- доступ ----

    def __getitem__(self, n: int) -> int:
        if not 0 <= n < self.prec:
            raise IndexError(f"coefficient q^{n} unknown at prec {self.prec}")
        return self.coeffs[n]

    def __iter__(self) -> Iterator[int]:
        return iter(self.coeffs)

    def __len__(self) -> int:
        return self.prec

    def valuation(self) -> Optional[int]:
        """Индекс младшего ненулевого коэффициента; None для нулевого ряда."""
        for n, c in enumerate(self.coeffs):
            if c:
                return n
        return None

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def truncate(self, prec: int) -> "Series":
        if prec > self.prec:
            raise ValueError(f"cannot raise prec {self.prec} to {prec}")
        if prec == self.prec:
            return self
        return Series(self.coeffs[:prec], prec)

    def __repr__(self) -> str:
        head = ", ".join(str(c) for c in self.coeffs[:8])
        tail = ", ..." if self.prec > 8 else ""
        return f"Series([{head}{tail}], prec={self.prec})"
