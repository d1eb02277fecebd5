#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Pydantic models for orbifold Riemann-Roch input: quotient singularities,
baskets and the initial data (P1, P2)
"""

from collections import Counter
from math import gcd
from typing import Dict, Iterable, List, Mapping, Tuple

from pydantic import BaseModel, ConfigDict, Field, computed_field, field_validator, model_validator


class QuotientSingularity(BaseModel):
    """Isolated cyclic quotient singularity 1/r(a,b,c)"""
    model_config = ConfigDict(frozen=True)

    index: int = Field(..., ge=2, description="Index r")
    weights: Tuple[int, int, int] = Field(..., description="Local weights (a,b,c), sorted")

    @field_validator("weights")
    @classmethod
    def _sorted(cls, value: Tuple[int, int, int]) -> Tuple[int, int, int]:
        if any(w < 1 for w in value):
            raise ValueError(f"local weights must be positive, got {value}")
        return tuple(sorted(value))

    @model_validator(mode="after")
    def _isolated(self) -> "QuotientSingularity":
        for w in self.weights:
            if gcd(w, self.index) != 1:
                raise ValueError(f"1/{self.index}{self.weights} is not isolated: gcd({w},{self.index}) != 1")
        return self

    @classmethod
    def of(cls, index: int, a: int, b: int, c: int) -> "QuotientSingularity":
        return cls(index=index, weights=(a, b, c))

    @computed_field
    @property
    def is_calabi_yau(self) -> bool:
        """a + b + c = 0 mod r (Gorenstein, canonical)"""
        return sum(self.weights) % self.index == 0

    @computed_field
    @property
    def label(self) -> str:
        a, b, c = self.weights
        return f"1/{self.index}({a},{b},{c})"

    def __str__(self) -> str:
        return self.label


class Basket(BaseModel):
    """Multiset of quotient singularities, stored in canonical order"""
    model_config = ConfigDict(frozen=True)

    entries: Tuple[QuotientSingularity, ...] = Field(default=(), description="Singularities with repetition")

    @field_validator("entries")
    @classmethod
    def _canonical_order(cls, value: Tuple[QuotientSingularity, ...]) -> Tuple[QuotientSingularity, ...]:
        return tuple(sorted(value, key=lambda q: (q.index, q.weights)))

    @classmethod
    def from_counts(cls, counts: Mapping[QuotientSingularity, int]) -> "Basket":
        return cls(entries=tuple(q for q, m in counts.items() for _ in range(m)))

    @classmethod
    def of(cls, *pairs: Tuple[int, QuotientSingularity]) -> "Basket":
        """Basket.of((4, q3), (1, q5))"""
        return cls(entries=tuple(q for m, q in pairs for _ in range(m)))

    def counts(self) -> Dict[QuotientSingularity, int]:
        """Distinct singularity -> multiplicity, in canonical order"""
        counter = Counter(self.entries)
        return {q: counter[q] for q in sorted(counter, key=lambda q: (q.index, q.weights))}

    def count_of(self, q: QuotientSingularity) -> int:
        return sum(1 for entry in self.entries if entry == q)

    def distinct(self) -> List[QuotientSingularity]:
        return list(self.counts())

    def __len__(self) -> int:
        return len(self.entries)

    def to_text(self) -> str:
        """Inverse of orbifold_rr.parse_basket"""
        return ",".join(f"{m}x{q.label}" for q, m in self.counts().items())

    def __str__(self) -> str:
        if not self.entries:
            return "{}"
        return "{" + ", ".join(f"{m} x {q.label}" for q, m in self.counts().items()) + "}"


class InitialData(BaseModel):
    """P1 = h^0(X,A) and P2 = h^0(X,2A)"""
    model_config = ConfigDict(frozen=True)

    P1: int = Field(..., ge=0, description="h^0(X,A)")
    P2: int = Field(..., ge=0, description="h^0(X,2A)")

    @classmethod
    def of(cls, p1: int, p2: int) -> "InitialData":
        return cls(P1=p1, P2=p2)


def standard_basket(n: int, m: int) -> Basket:
    """{n x 1/3(1,1,1), m x 1/5(1,1,3)}"""
    return Basket.of(
        (n, QuotientSingularity.of(3, 1, 1, 1)),
        (m, QuotientSingularity.of(5, 1, 1, 3)),
    )


__all__ = [
    'QuotientSingularity',
    'Basket',
    'InitialData',
    'standard_basket',
]
