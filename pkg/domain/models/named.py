from __future__ import annotations

from enum import Enum


class NamedSeries(str, Enum):
    """Имена рядов, которые умеет строить реестр. Регистр значим: C != c, D != d."""

    G = "G"
    H = "H"
    G_sum = "G_sum"
    H_sum = "H_sum"
    R = "R"
    Rinv = "Rinv"
    R5 = "R5"
    R5inv = "R5inv"
    Rq5 = "Rq5"
    Cratio = "Cratio"
    Dratio = "Dratio"
    Fratio15 = "Fratio15"
    Fratio51 = "Fratio51"
    A = "A"
    B = "B"
    C = "C"
    D = "D"
    c = "c"
    d = "d"


# семейства коэффициентов: это те же ряды под другими именами
COEFFICIENT_ALIASES = {
    NamedSeries.A: NamedSeries.R5inv,
    NamedSeries.B: NamedSeries.R5,
    NamedSeries.C: NamedSeries.Cratio,
    NamedSeries.D: NamedSeries.Dratio,
    NamedSeries.c: NamedSeries.Rinv,
    NamedSeries.d: NamedSeries.R,
}
