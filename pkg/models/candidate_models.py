#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Pydantic models for recognised embeddings and candidate search rows
"""

from enum import Enum
from fractions import Fraction
from typing import Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, computed_field, field_validator

from config import DEFAULT_EXPANSION_ORDER, DEFAULT_MAX_WEIGHTS, PROJECTION_DEGREE_BOUND
from models.series_models import IntPolynomial, RationalSeries, WeightVector


# ==================== Enums ====================

class RowStatus(str, Enum):
    """Outcome of one search tuple"""
    OK = "ok"
    HIGH_CODIM = "codim>=5"
    NON_ARISING = "non-arising"
    FAILED = "failed"


# ==================== Recognition ====================

class RecognitionConfig(BaseModel):
    """Knobs of the weight-guessing loop"""
    model_config = ConfigDict(frozen=True)

    expansion_order: int = Field(DEFAULT_EXPANSION_ORDER, ge=1, description="Truncation order of the expansion")
    max_weights: int = Field(DEFAULT_MAX_WEIGHTS, ge=4, description="Weight budget")
    hint_weights: Tuple[int, ...] = Field(default=(), description="Weights cleared before the greedy loop")

    @field_validator("hint_weights")
    @classmethod
    def _positive_hints(cls, value: Tuple[int, ...]) -> Tuple[int, ...]:
        for w in value:
            if w < 1:
                raise ValueError(f"hint weight {w} is not positive")
        return tuple(value)

    def with_hints(self, hints: Tuple[int, ...]) -> "RecognitionConfig":
        return self.model_copy(update={"hint_weights": tuple(hints)})


class ShapeFit(BaseModel):
    """Equation and syzygy degrees read off a Gorenstein numerator"""
    model_config = ConfigDict(frozen=True)

    codim: int = Field(..., description="3 (Pfaffian) or 4 (9 x 16)")
    k: int = Field(..., description="Top degree of the numerator")
    equation_degrees: Tuple[int, ...] = Field(..., description="D, sorted")
    syzygy_degrees: Tuple[int, ...] = Field(..., description="E (codim 4) or k - D (codim 3), sorted")
    solutions: int = Field(1, ge=1, description="Number of fits; the reported one is centre-most")


class EmbeddingCandidate(BaseModel):
    """X in P(a_0, ..., a_n) proposed by a Hilbert series"""
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    weights: WeightVector = Field(..., description="Ambient weights")
    numerator: IntPolynomial = Field(..., description="Hilbert numerator over prod (1 - t^a)")
    k: int = Field(..., description="Top degree, sum of the weights")
    codim_estimate: int = Field(..., description="#weights - 4")
    equation_degrees: Tuple[int, ...] = Field(default=(), description="Degrees of minimal equations")
    syzygy_degrees: Tuple[int, ...] = Field(default=(), description="First syzygy degrees (codim 3 and 4)")
    degree_A3: Fraction = Field(..., description="A^3 from the pole at t = 1")
    sign_changes: int = Field(0, description="Raw sign alternations of the numerator")
    shape_solutions: int = Field(0, description="Number of shape fits (0 when no fit was attempted)")
    hints: Tuple[int, ...] = Field(default=(), description="Hint weights used")
    advisories: Tuple[str, ...] = Field(default=(), description="Non-fatal warnings")

    @computed_field
    @property
    def below_projection_bound(self) -> bool:
        """A^3 <= 1/15"""
        return self.degree_A3 <= PROJECTION_DEGREE_BOUND

    def series(self) -> RationalSeries:
        return RationalSeries(numerator=self.numerator, denominator=self.weights)

    def label(self) -> str:
        """X_{6,8} in P(1^3,3^2,5)"""
        degrees = WeightVector.of(self.equation_degrees).compact() if self.equation_degrees else ""
        return f"X_{{{degrees}}} in {self.weights}"


# ==================== Search ====================

class SearchRow(BaseModel):
    """One (P1, P2, n, m) tuple and what recognition made of it"""
    model_config = ConfigDict(frozen=True)

    P1: int = Field(..., ge=0)
    P2: int = Field(..., ge=0)
    n: int = Field(..., ge=0, description="Number of 1/3(1,1,1) points")
    m: int = Field(..., ge=0, description="Number of 1/5(1,1,3) points")
    status: RowStatus = Field(..., description="Outcome")
    candidate: Optional[EmbeddingCandidate] = Field(None, description="Recognised embedding")
    reason: str = Field("", description="Failure reason")
    hints_used: Tuple[int, ...] = Field(default=(), description="Hint set of the successful attempt")
    reference: Optional[str] = Field(None, description="Agreement with a printed table entry")

    @computed_field
    @property
    def codim(self) -> Optional[int]:
        return self.candidate.codim_estimate if self.candidate is not None else None

    def key(self) -> Tuple[int, int, int, int]:
        return (self.P1, self.P2, self.n, self.m)


# ==================== Printed tables ====================

class ReferenceEntry(BaseModel):
    """A printed candidate: X_{D} in P(weights) for (P1, P2, n, m)"""
    model_config = ConfigDict(frozen=True)

    P1: int = Field(..., ge=0)
    P2: int = Field(..., ge=0)
    n: int = Field(..., ge=0)
    m: int = Field(..., ge=0)
    codim: int = Field(..., ge=1)
    weights: WeightVector = Field(..., description="Printed ambient weights")
    equation_degrees: Tuple[int, ...] = Field(..., description="Printed equation degrees")
    families: int = Field(1, ge=1, description="Deformation families constructed")
    printed_p2: Optional[int] = Field(None, description="P2 as printed, when it differs")
    printed_n: Optional[int] = Field(None, description="n as printed, when it differs")
    note: str = Field("", description="Free text")

    @field_validator("equation_degrees")
    @classmethod
    def _sorted_degrees(cls, value: Tuple[int, ...]) -> Tuple[int, ...]:
        return tuple(sorted(value))

    def key(self) -> Tuple[int, int, int, int]:
        return (self.P1, self.P2, self.n, self.m)

    def label(self) -> str:
        return f"X_{{{WeightVector.of(self.equation_degrees).compact()}}} in {self.weights}"


class RecordedExample(BaseModel):
    """Example kept as data only; nothing is verified about it"""
    model_config = ConfigDict(frozen=True)

    name: str
    weights: WeightVector
    codim: int
    basket: str = Field("", description="Basket text, parse_basket syntax")
    note: str = ""


__all__ = [
    'RowStatus',
    'RecognitionConfig',
    'ShapeFit',
    'EmbeddingCandidate',
    'SearchRow',
    'ReferenceEntry',
    'RecordedExample',
]
