from __future__ import annotations

from typing import List

from pydantic import BaseModel, ConfigDict, Field, field_validator


class Factor(BaseModel):
    """(q^a; q^m)_inf ** e."""

    model_config = ConfigDict(extra="forbid", frozen=True)

    a: int = Field(..., ge=1, description="offset, a >= 1 keeps the constant term 1")
    m: int = Field(..., ge=1, description="modulus")
    e: int = Field(..., description="nonzero exponent")

    @field_validator("e")
    @classmethod
    def _nonzero(cls, v: int) -> int:
        if v == 0:
            raise ValueError("exponent must be nonzero")
        return v


class ProductSpec(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True)

    factors: List[Factor] = Field(default_factory=list)

    @classmethod
    def of(cls, *triples: tuple[int, int, int]) -> "ProductSpec":
        return cls(factors=[Factor(a=a, m=m, e=e) for a, m, e in triples])
