from __future__ import annotations


class SeriesError(ValueError):
    """Операция над рядом невозможна в целых числах."""


class NonUnitConstantTerm(SeriesError):
    pass


class NonUnitLeadingCoefficient(SeriesError):
    pass


class ValuationMismatch(SeriesError):
    pass


class ZeroDivisor(SeriesError):
    pass


class NegativeShiftNonzeroLowTerms(SeriesError):
    pass
