#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Exact arithmetic on Hilbert series.

A RationalSeries keeps its denominator as a multiset of factors (1 - t^a)
and never expands it; numerators live in sympy's ZZ[t]. Truncated
expansions are dense integer lists.
"""

import logging
from collections import Counter
from fractions import Fraction
from typing import Iterable, Mapping, Tuple

from sympy.polys.rings import PolyElement

from lib.exceptions import SeriesError
from models.series_models import (
    T,
    T_RING,
    IntPolynomial,
    RationalSeries,
    TruncatedSeries,
    WeightVector,
)

logger = logging.getLogger(__name__)


# ==================== Helpers ====================

def factor_product(counts: Mapping[int, int]) -> PolyElement:
    """prod (1 - t^a)^m over a {a: m} map"""
    result = T_RING.one
    for a, m in counts.items():
        if m:
            result *= (T_RING.one - T ** a) ** m
    return result


def vanishing_order_at_one(poly: IntPolynomial) -> Tuple[int, PolyElement]:
    """
    Split N = (t - 1)^v * Q with Q(1) != 0 by repeated synthetic division.

    Returns:
        (v, Q)
    """
    if poly.is_zero:
        raise SeriesError("the zero polynomial vanishes to infinite order")
    quotient = poly.to_ring()
    divisor = T - 1
    order = 0
    while True:
        q, remainder = quotient.div(divisor)
        if remainder:
            return order, quotient
        quotient = q
        order += 1


# ==================== Truncated series ====================

def expand(r: RationalSeries, order: int) -> TruncatedSeries:
    """
    Power series of r up to t^order.

    Each 1/(1 - t^a) is applied as a running sum with stride a.
    """
    if order < 0:
        raise SeriesError(f"expansion order must be >= 0, got {order}")
    coeffs = r.numerator.dense(order + 1)
    for a in r.denominator.weights:
        for i in range(a, order + 1):
            coeffs[i] += coeffs[i - a]
    return TruncatedSeries(order=order, coefficients=tuple(coeffs))


def mul_factor(s: TruncatedSeries, a: int, m: int = 1) -> TruncatedSeries:
    """s * (1 - t^a)^m, truncated to the order of s"""
    if a < 1 or m < 1:
        raise SeriesError(f"factor (1 - t^{a})^{m} needs a >= 1 and m >= 1")
    coeffs = list(s.coefficients)
    for _ in range(m):
        for i in range(s.order, a - 1, -1):
            coeffs[i] -= coeffs[i - a]
    return TruncatedSeries(order=s.order, coefficients=tuple(coeffs))


# ==================== Rational series ====================

def add(r1: RationalSeries, r2: RationalSeries) -> RationalSeries:
    """
    Exact sum. The merged denominator takes, per factor value a, the larger
    multiplicity of the two; each term is multiplied through up to it.
    """
    c1 = r1.denominator.multiplicities()
    c2 = r2.denominator.multiplicities()
    lifted1 = multiply_through(r1, (c2 - c1).elements())
    lifted2 = multiply_through(r2, (c1 - c2).elements())
    return RationalSeries(
        numerator=IntPolynomial.from_ring(lifted1.numerator.to_ring() + lifted2.numerator.to_ring()),
        denominator=lifted1.denominator,
    )


def sum_series(terms: Iterable[RationalSeries]) -> RationalSeries:
    total = RationalSeries.zero()
    for term in terms:
        total = add(total, term)
    return total


def scale(r: RationalSeries, factor: int) -> RationalSeries:
    return RationalSeries(numerator=r.numerator * factor, denominator=r.denominator)


def multiply_through(r: RationalSeries, weights: Iterable[int]) -> RationalSeries:
    """Same series written over extra factors: N * prod(1 - t^w) / (D * prod(1 - t^w))"""
    extra = Counter(weights)
    return RationalSeries(
        numerator=IntPolynomial.from_ring(r.numerator.to_ring() * factor_product(extra)),
        denominator=r.denominator.merged(WeightVector.from_multiplicities(extra)),
    )


def equals(r1: RationalSeries, r2: RationalSeries) -> bool:
    """Cross-multiplication: N1 * D2 == N2 * D1"""
    left = r1.numerator.to_ring() * r2.denominator.denominator()
    right = r2.numerator.to_ring() * r1.denominator.denominator()
    return left == right


def canonical(r: RationalSeries) -> RationalSeries:
    """Cancel every factor (1 - t^a) that divides the numerator"""
    numerator = r.numerator.to_ring()
    if not numerator:
        return RationalSeries.zero()
    remaining = list(r.denominator.weights)
    for a in sorted(set(remaining), reverse=True):
        factor = T_RING.one - T ** a
        while a in remaining:
            quotient, remainder = numerator.div(factor)
            if remainder:
                break
            numerator = quotient
            remaining.remove(a)
    return RationalSeries(numerator=IntPolynomial.from_ring(numerator), denominator=WeightVector.of(remaining))


def numerator_over(r: RationalSeries, weights: Iterable[int]) -> IntPolynomial:
    """
    Numerator of r when written over prod(1 - t^w) for the given weights.

    Raises:
        SeriesError: if r does not have that denominator (division not exact)
    """
    target = WeightVector.of(weights)
    product = r.numerator.to_ring() * target.denominator()
    quotient, remainder = product.div(r.denominator.denominator())
    if remainder:
        raise SeriesError(f"series is not a polynomial over {target}")
    return IntPolynomial.from_ring(quotient)


def leading_coefficient_at_one(r: RationalSeries) -> Tuple[int, Fraction]:
    """
    Pole order p at t = 1 and the limit of (1 - t)^p * r(t).

    Writing N = (t - 1)^v Q and 1 - t^a = (1 - t)(1 + t + ... + t^(a-1)),
    p = #factors - v and the limit is (-1)^v Q(1) / prod(a).

    Raises:
        SeriesError: if r has no pole at t = 1
    """
    if r.numerator.is_zero:
        raise SeriesError("zero series has no pole at t = 1")
    v, quotient = vanishing_order_at_one(r.numerator)
    pole = len(r.denominator) - v
    if pole <= 0:
        raise SeriesError(f"no pole at t = 1: series is a polynomial (pole order {pole})")
    value = Fraction((-1) ** v * int(sum(quotient.values())), r.denominator.product())
    logger.debug("pole order %s, leading value %s", pole, value)
    return pole, value


__all__ = [
    'factor_product',
    'vanishing_order_at_one',
    'expand',
    'mul_factor',
    'add',
    'sum_series',
    'scale',
    'multiply_through',
    'equals',
    'canonical',
    'numerator_over',
    'leading_coefficient_at_one',
]
