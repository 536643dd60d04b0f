from __future__ import annotations

from enum import Enum
from typing import Annotated, Dict, List, Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, PlainSerializer, model_validator

from domain.models.named import NamedSeries

# Коэффициенты быстро выходят за 64 бита: в json: только десятичные строки.
BigInt = Annotated[int, PlainSerializer(lambda v: str(v), return_type=str, when_used="json")]


class Sign(str, Enum):
    pos = "pos"
    neg = "neg"
    zero = "zero"
    any = "any"  # Unconstrained

    @classmethod
    def of(cls, value: int) -> "Sign":
        if value > 0:
            return cls.pos
        if value < 0:
            return cls.neg
        return cls.zero

    def admits(self, value: int) -> bool:
        return self is Sign.any or Sign.of(value) is self


class SignException(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True)

    index: int = Field(..., ge=0)
    value: BigInt  # ожидаемое точное значение; 0: перечисленный ноль


class SignPattern(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True)

    name: str
    series: NamedSeries
    modulus: int = Field(..., ge=1)
    expected: Dict[int, Sign]
    exceptions: List[SignException] = Field(default_factory=list)
    kind: Literal["theorem", "conjecture"] = "theorem"

    @model_validator(mode="after")
    def _check(self) -> "SignPattern":
        bad = [r for r in self.expected if not 0 <= r < self.modulus]
        if bad:
            raise ValueError(f"residues {bad} out of range for modulus {self.modulus}")
        idx = [e.index for e in self.exceptions]
        if len(idx) != len(set(idx)):
            raise ValueError(f"duplicate exception indices in {idx}")
        return self

    def expected_for(self, n: int) -> Sign:
        return self.expected.get(n % self.modulus, Sign.any)

    def exception_at(self, n: int) -> Optional[SignException]:
        for e in self.exceptions:
            if e.index == n:
                return e
        return None


class ReportStatus(str, Enum):
    verified = "verified"
    violated = "violated"
    falsified = "falsified"  # ConjectureFalsifiedAt(...)


class Divergence(BaseModel):
    model_config = ConfigDict(extra="forbid")

    index: int = Field(..., ge=0)
    lhs: BigInt
    rhs: BigInt


class Violation(BaseModel):
    model_config = ConfigDict(extra="forbid")

    index: int = Field(..., ge=0)
    value: BigInt
    expected: Sign
    series: Optional[str] = None
    expected_value: Optional[BigInt] = None


class Report(BaseModel):
    model_config = ConfigDict(extra="forbid")

    subject: str
    order_checked: int = Field(..., ge=0)
    status: ReportStatus
    first_divergence: Optional[Divergence] = None
    violations: List[Violation] = Field(default_factory=list)
    falsified: Dict[str, List[int]] = Field(
        default_factory=dict,
        description="per series: n of the falsified progression modulus*n + r (not the coefficient index)",
    )
    notes: List[str] = Field(default_factory=list)

    @model_validator(mode="after")
    def _evidence(self) -> "Report":
        if self.status is ReportStatus.violated and not (self.first_divergence or self.violations):
            raise ValueError("violated report without divergence or violations")
        if self.status is ReportStatus.falsified and not any(self.falsified.values()):
            raise ValueError("falsified report without falsifying indices")
        return self

    @property
    def ok(self) -> bool:
        return self.status is ReportStatus.verified
