#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Orbifold Riemann-Roch for polarised Calabi-Yau 3-folds.

P(t) = initial_series(P1, P2) + sum over the basket of orbifold_term(q).
Per-singularity contributions come from a YAML registry so new types can
be added without touching assemble().
"""

import logging
import re
from fractions import Fraction
from pathlib import Path
from typing import Dict, List, Optional, Tuple, Union

import yaml
from pydantic import ValidationError

from config import REGISTRY_FILE
from lib.exceptions import InputFormatError, RegistryMissError
from lib.series_core import leading_coefficient_at_one, scale, sum_series
from models.orbifold_models import Basket, InitialData, QuotientSingularity
from models.series_models import IntPolynomial, RationalSeries, WeightVector

logger = logging.getLogger(__name__)


class ContributionRegistry:
    """
    Registry of orbifold contributions keyed by 1/r(a,b,c).
    Read-only after loading unless register() is called explicitly.
    """

    def __init__(self, registry_path: Optional[Union[str, Path]] = None):
        """Load contributions from YAML file"""
        if registry_path is None:
            registry_path = REGISTRY_FILE

        with open(registry_path, 'r', encoding='utf-8') as f:
            data = yaml.safe_load(f) or {}

        self._terms: Dict[QuotientSingularity, RationalSeries] = {}
        self._notes: Dict[QuotientSingularity, str] = {}
        for label, entry in (data.get('contributions') or {}).items():
            q = QuotientSingularity(index=entry['index'], weights=tuple(entry['weights']))
            if q.label != label:
                raise ValueError(f"registry key {label} does not match its data {q.label}")
            term = RationalSeries(
                numerator=IntPolynomial.from_terms({int(e): int(c) for e, c in entry['numerator'].items()}),
                denominator=WeightVector.of(entry['denominator']),
            )
            if 'degree' in entry and Fraction(str(entry['degree'])) != orbifold_degree(term):
                raise ValueError(
                    f"registry entry {label}: degree {entry['degree']} but its term gives {orbifold_degree(term)}"
                )
            self.register(q, term, entry.get('note', ''))

        logger.debug("loaded %d orbifold contributions from %s", len(self._terms), registry_path)

    def register(self, q: QuotientSingularity, term: RationalSeries, note: str = "") -> None:
        self._terms[q] = term
        self._notes[q] = note

    def contribution(self, q: QuotientSingularity) -> RationalSeries:
        """
        Contribution of one singularity.

        Raises:
            RegistryMissError: if the type is not registered
        """
        try:
            return self._terms[q]
        except KeyError:
            raise RegistryMissError(q.label) from None

    def supports(self, q: QuotientSingularity) -> bool:
        return q in self._terms

    def types(self) -> List[QuotientSingularity]:
        return sorted(self._terms, key=lambda q: (q.index, q.weights))

    def note(self, q: QuotientSingularity) -> str:
        return self._notes.get(q, "")


# Singleton instance
_registry: Optional[ContributionRegistry] = None


def get_registry() -> ContributionRegistry:
    """Get singleton registry instance"""
    global _registry
    if _registry is None:
        _registry = ContributionRegistry()
    return _registry


# ==================== Riemann-Roch ====================

def initial_series(d: InitialData) -> RationalSeries:
    """(1 + (P1-4)t + (P2-4P1+6)t^2 + (P1-4)t^3 + t^4) / (1-t)^4"""
    numerator = IntPolynomial.from_sequence([
        1,
        d.P1 - 4,
        d.P2 - 4 * d.P1 + 6,
        d.P1 - 4,
        1,
    ])
    return RationalSeries(numerator=numerator, denominator=WeightVector.of([1, 1, 1, 1]))


def list_contributions(registry: Optional[ContributionRegistry] = None) -> List[Tuple[QuotientSingularity, RationalSeries]]:
    """Registered types with their contributions, in canonical order"""
    registry = registry or get_registry()
    return [(q, registry.contribution(q)) for q in registry.types()]


def orbifold_term(q: QuotientSingularity, registry: Optional[ContributionRegistry] = None) -> RationalSeries:
    return (registry or get_registry()).contribution(q)


def assemble(d: InitialData, b: Basket, registry: Optional[ContributionRegistry] = None) -> RationalSeries:
    """Hilbert series of a candidate (X, A) with initial data d and basket b"""
    registry = registry or get_registry()
    terms = [initial_series(d)]
    for q, multiplicity in b.counts().items():
        terms.append(scale(registry.contribution(q), multiplicity))
    return sum_series(terms)


def orbifold_degree(term: RationalSeries) -> Fraction:
    """Contribution of one term to A^3: its leading value at t = 1 when the pole has order 4"""
    pole, value = leading_coefficient_at_one(term)
    return value if pole == 4 else Fraction(0)


def basket_degree(b: Basket, registry: Optional[ContributionRegistry] = None) -> Fraction:
    """Orbifold part of A^3: sum of the pole-order-4 leading values of the terms"""
    registry = registry or get_registry()
    total = Fraction(0)
    for q, multiplicity in b.counts().items():
        total += multiplicity * orbifold_degree(registry.contribution(q))
    return total


# ==================== Basket syntax ====================

_ENTRY = r"(?:(\d+)x)?1/(\d+)\((\d+),(\d+),(\d+)\)"
_ENTRY_RE = re.compile(_ENTRY)
_BASKET_RE = re.compile(rf"{_ENTRY}(?:,{_ENTRY})*")


def parse_basket(text: str) -> Basket:
    """
    Parse '4x1/3(1,1,1),1x1/5(1,1,3)'. Whitespace is ignored; the
    multiplicity prefix defaults to 1; the empty string is the empty basket.

    Raises:
        InputFormatError: on malformed text or a non-isolated singularity
    """
    compact = re.sub(r"\s+", "", text or "")
    if not compact:
        return Basket()
    if not _BASKET_RE.fullmatch(compact):
        raise InputFormatError(f"cannot parse basket '{text}' (expected e.g. 4x1/3(1,1,1),1x1/5(1,1,3))")

    entries: List[QuotientSingularity] = []
    for match in _ENTRY_RE.finditer(compact):
        mult, r, a, b, c = match.groups()
        try:
            q = QuotientSingularity.of(int(r), int(a), int(b), int(c))
        except ValidationError as e:
            raise InputFormatError(f"invalid singularity in basket: {e.errors()[0]['msg']}") from None
        entries.extend([q] * int(mult if mult is not None else 1))
    return Basket(entries=tuple(entries))


__all__ = [
    'ContributionRegistry',
    'get_registry',
    'initial_series',
    'orbifold_term',
    'list_contributions',
    'orbifold_degree',
    'assemble',
    'basket_degree',
    'parse_basket',
]


if __name__ == "__main__":
    from lib.series_core import expand
    from models.orbifold_models import standard_basket

    series = assemble(InitialData.of(3, 6), standard_basket(4, 1))
    print("P =", series.pretty())
    print("expansion:", expand(series, 5).coefficients)
