#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Pydantic models for Hilbert series carriers: integer polynomials,
weight multisets, rational series over products of (1 - t^a), and
truncated power series.

Arithmetic is delegated to sympy's ZZ[t] ring; the models only hold
canonical data.
"""

from collections import Counter
from typing import Dict, Iterable, List, Mapping, Sequence, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field, computed_field, field_validator
from sympy.polys.domains import ZZ
from sympy.polys.rings import PolyElement, ring

# Univariate ring shared by every IntPolynomial
T_RING, T = ring("t", ZZ)


# ==================== Polynomials ====================

class IntPolynomial(BaseModel):
    """
    Sparse integer polynomial in t.
    Holds Hilbert numerators such as 1 - 6t^6 - 3t^8 + ... + t^20.
    """
    model_config = ConfigDict(frozen=True)

    coefficients: Dict[int, int] = Field(
        default_factory=dict,
        description="Exponent -> nonzero integer coefficient"
    )

    @field_validator("coefficients")
    @classmethod
    def _canonical(cls, value: Dict[int, int]) -> Dict[int, int]:
        for exponent in value:
            if exponent < 0:
                raise ValueError(f"negative exponent {exponent}")
        return {int(e): int(c) for e, c in sorted(value.items()) if c != 0}

    # ----- constructors -----

    @classmethod
    def from_terms(cls, terms: Mapping[int, int]) -> "IntPolynomial":
        return cls(coefficients=dict(terms))

    @classmethod
    def from_sequence(cls, coefficients: Sequence[int]) -> "IntPolynomial":
        """Dense coefficient list c_0, c_1, ... -> polynomial"""
        return cls(coefficients={i: c for i, c in enumerate(coefficients) if c})

    @classmethod
    def monomial(cls, exponent: int, coefficient: int = 1) -> "IntPolynomial":
        return cls(coefficients={exponent: coefficient})

    @classmethod
    def one(cls) -> "IntPolynomial":
        return cls(coefficients={0: 1})

    @classmethod
    def zero(cls) -> "IntPolynomial":
        return cls()

    @classmethod
    def from_ring(cls, element: PolyElement) -> "IntPolynomial":
        return cls(coefficients={monom[0]: int(c) for monom, c in element.items()})

    def to_ring(self) -> PolyElement:
        return T_RING.from_dict({(e,): c for e, c in self.coefficients.items()})

    # ----- queries -----

    @property
    def is_zero(self) -> bool:
        return not self.coefficients

    def degree(self) -> int:
        """Maximum exponent; 0 for the zero polynomial"""
        return max(self.coefficients) if self.coefficients else 0

    def low_degree(self) -> int:
        return min(self.coefficients) if self.coefficients else 0

    def coefficient(self, exponent: int) -> int:
        return self.coefficients.get(exponent, 0)

    def terms(self) -> List[Tuple[int, int]]:
        """Nonzero (exponent, coefficient) pairs in increasing exponent"""
        return list(self.coefficients.items())

    def value_at_one(self) -> int:
        return sum(self.coefficients.values())

    def dense(self, length: int) -> List[int]:
        """Coefficients c_0 .. c_{length-1}"""
        return [self.coefficient(i) for i in range(length)]

    def reflect(self, k: int) -> "IntPolynomial":
        """t^k * N(1/t)"""
        if self.coefficients and self.degree() > k:
            raise ValueError(f"degree {self.degree()} exceeds reflection degree {k}")
        return IntPolynomial(coefficients={k - e: c for e, c in self.coefficients.items()})

    # ----- arithmetic -----

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        return IntPolynomial.from_ring(self.to_ring() + other.to_ring())

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        return IntPolynomial.from_ring(self.to_ring() - other.to_ring())

    def __mul__(self, other: Union["IntPolynomial", int]) -> "IntPolynomial":
        if isinstance(other, int):
            return IntPolynomial(coefficients={e: c * other for e, c in self.coefficients.items()})
        return IntPolynomial.from_ring(self.to_ring() * other.to_ring())

    __rmul__ = __mul__

    def __neg__(self) -> "IntPolynomial":
        return self * -1

    def pretty(self, var: str = "t") -> str:
        """Human-readable form, e.g. '1 - 6t^6 + t^20'"""
        if self.is_zero:
            return "0"
        parts: List[str] = []
        for exponent, coeff in self.coefficients.items():
            magnitude = abs(coeff)
            if exponent == 0:
                body = str(magnitude)
            else:
                mono = var if exponent == 1 else f"{var}^{exponent}"
                body = mono if magnitude == 1 else f"{magnitude}{mono}"
            if not parts:
                parts.append(body if coeff > 0 else f"-{body}")
            else:
                parts.append(f"{'-' if coeff < 0 else '+'} {body}")
        return " ".join(parts)

    def __str__(self) -> str:
        return self.pretty()


# ==================== Weights ====================

class WeightVector(BaseModel):
    """Multiset of positive weights a_i, kept sorted ascending"""
    model_config = ConfigDict(frozen=True)

    weights: Tuple[int, ...] = Field(default=(), description="Weights a_0 <= a_1 <= ...")

    @field_validator("weights")
    @classmethod
    def _sorted_positive(cls, value: Tuple[int, ...]) -> Tuple[int, ...]:
        for w in value:
            if w < 1:
                raise ValueError(f"weight {w} is not positive")
        return tuple(sorted(value))

    @classmethod
    def of(cls, weights: Iterable[int]) -> "WeightVector":
        return cls(weights=tuple(weights))

    @classmethod
    def from_multiplicities(cls, counts: Mapping[int, int]) -> "WeightVector":
        return cls(weights=tuple(a for a, m in counts.items() for _ in range(m)))

    def multiplicities(self) -> Counter:
        return Counter(self.weights)

    def __len__(self) -> int:
        return len(self.weights)

    @computed_field
    @property
    def total(self) -> int:
        """Sum of weights"""
        return sum(self.weights)

    def product(self) -> int:
        result = 1
        for w in self.weights:
            result *= w
        return result

    def merged(self, other: "WeightVector") -> "WeightVector":
        return WeightVector(weights=self.weights + other.weights)

    def denominator(self) -> PolyElement:
        """prod (1 - t^a) as a ring element"""
        result = T_RING.one
        for a in self.weights:
            result *= (T_RING.one - T ** a)
        return result

    def compact(self) -> str:
        """Exponent notation, e.g. '1^3,3^4,5'"""
        counts = self.multiplicities()
        return ",".join(
            str(a) if counts[a] == 1 else f"{a}^{counts[a]}" for a in sorted(counts)
        )

    def __str__(self) -> str:
        return f"P({self.compact()})"


# ==================== Series ====================

class RationalSeries(BaseModel):
    """
    Exact rational function N(t) / prod (1 - t^a_i).
    Equality of values is cross-multiplication (series_core.equals), not
    field equality: two models may differ and still be the same series.
    """
    model_config = ConfigDict(frozen=True)

    numerator: IntPolynomial = Field(..., description="Numerator N(t)")
    denominator: WeightVector = Field(default_factory=WeightVector, description="Factors (1 - t^a)")

    @classmethod
    def of(
        cls,
        numerator: Union[IntPolynomial, Mapping[int, int], Sequence[int]],
        weights: Iterable[int] = (),
    ) -> "RationalSeries":
        """Build from a polynomial, a {exponent: coeff} map or a dense list"""
        if isinstance(numerator, IntPolynomial):
            poly = numerator
        elif isinstance(numerator, Mapping):
            poly = IntPolynomial.from_terms(numerator)
        else:
            poly = IntPolynomial.from_sequence(list(numerator))
        return cls(numerator=poly, denominator=WeightVector.of(weights))

    @classmethod
    def zero(cls) -> "RationalSeries":
        return cls(numerator=IntPolynomial.zero())

    def pretty(self) -> str:
        if not self.denominator.weights:
            return self.numerator.pretty()
        factors = []
        counts = self.denominator.multiplicities()
        for a in sorted(counts):
            base = "(1-t)" if a == 1 else f"(1-t^{a})"
            factors.append(base if counts[a] == 1 else f"{base}^{counts[a]}")
        return f"({self.numerator.pretty()}) / ({''.join(factors)})"

    def __str__(self) -> str:
        return self.pretty()


class TruncatedSeries(BaseModel):
    """Dense power series c_0 .. c_N, exact to order N"""
    model_config = ConfigDict(frozen=True)

    order: int = Field(..., ge=0, description="Truncation order N")
    coefficients: Tuple[int, ...] = Field(..., description="c_0 .. c_N")

    @field_validator("coefficients")
    @classmethod
    def _check_length(cls, value: Tuple[int, ...], info) -> Tuple[int, ...]:
        order = info.data.get("order")
        if order is not None and len(value) != order + 1:
            raise ValueError(f"expected {order + 1} coefficients, got {len(value)}")
        return tuple(int(c) for c in value)

    @classmethod
    def of(cls, coefficients: Sequence[int]) -> "TruncatedSeries":
        return cls(order=len(coefficients) - 1, coefficients=tuple(coefficients))

    def coefficient(self, exponent: int) -> int:
        return self.coefficients[exponent]

    def head(self, count: int) -> Tuple[int, ...]:
        return self.coefficients[:count]

    def first_nonzero(self, start: int = 1) -> Tuple[int, int]:
        """(exponent, coefficient) of the first nonzero term at or after start; (-1, 0) if none"""
        for exponent in range(start, self.order + 1):
            if self.coefficients[exponent]:
                return exponent, self.coefficients[exponent]
        return -1, 0

    def is_zero_between(self, low: int, high: int) -> bool:
        """True when every coefficient with low <= exponent <= high vanishes"""
        return not any(self.coefficients[max(low, 0):high + 1])

    def to_polynomial(self, up_to: int) -> IntPolynomial:
        return IntPolynomial.from_sequence(self.coefficients[:up_to + 1])


__all__ = [
    'T_RING',
    'T',
    'IntPolynomial',
    'WeightVector',
    'RationalSeries',
    'TruncatedSeries',
]
