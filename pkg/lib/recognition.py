#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Recognition of Hilbert series as weighted projective embeddings.

The basic game: expand P, multiply by (1 - t^a) for weights guessed one
at a time, and stop once what remains looks like a Gorenstein numerator.
Codimension 3 and 4 numerators are then split into equation and syzygy
degrees by fitting the Pfaffian and 9 x 16 resolution shapes.
"""

import logging
from collections import Counter
from fractions import Fraction
from itertools import combinations_with_replacement
from typing import Dict, List, Optional, Sequence, Tuple

from config import ASYMPTOTIC_CHECK_ORDER, HIGH_CODIM, PROJECTION_DEGREE_BOUND
from lib.exceptions import RecognitionError, SeriesError, ShapeFitError
from lib.series_core import equals, expand, leading_coefficient_at_one, mul_factor
from models.candidate_models import EmbeddingCandidate, RecognitionConfig, ShapeFit
from models.orbifold_models import Basket
from models.series_models import IntPolynomial, RationalSeries, TruncatedSeries, WeightVector

logger = logging.getLogger(__name__)

# Number of leading coefficients kept in a failure report
_HEAD = 16


# ==================== Numerator reading ====================

def sign_changes(n: IntPolynomial) -> int:
    """Sign alternations in the nonzero coefficients, by increasing exponent"""
    if n.is_zero:
        raise SeriesError("sign changes of the zero polynomial are undefined")
    signs = [c > 0 for _, c in n.terms()]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def leading_negative_block(n: IntPolynomial) -> Tuple[int, ...]:
    """Exponents of the first run of negative coefficients, with multiplicity"""
    block: List[int] = []
    for exponent, coeff in n.terms():
        if exponent == 0:
            continue
        if coeff < 0:
            block.extend([exponent] * -coeff)
        elif block:
            break
    return tuple(block)


# ==================== Shape fitting ====================

def _centre_distance(degrees: Sequence[int], k: int) -> int:
    return sum(abs(2 * d - k) for d in degrees)


def _fit_codim3(n: IntPolynomial, k: int) -> ShapeFit:
    # h = sum_D t^d - sum_D t^(k-d), antisymmetric under e -> k - e
    h = IntPolynomial.one() - IntPolynomial.monomial(k) - n
    if h.coefficient(0) or h.coefficient(k) or h.degree() > k:
        raise ShapeFitError("no shape fit: numerator is not 1 - ... - t^k", residual=h.pretty())
    for e, c in h.terms():
        if h.coefficient(k - e) != -c:
            raise ShapeFitError("no shape fit: numerator is not antisymmetric", residual=h.pretty())

    base: List[int] = []
    for e in range(1, (k + 1) // 2):
        c = h.coefficient(e)
        base.extend([e if c > 0 else k - e] * abs(c))
    spare = 5 - len(base)
    if spare < 0:
        raise ShapeFitError(f"no shape fit: needs {len(base)} equations, more than 5", residual=h.pretty())

    pair_slots = list(range(1, (k + 1) // 2))
    has_middle = k % 2 == 0
    options: List[Tuple[int, ...]] = []
    for pairs in range(spare // 2 + 1):
        middle = spare - 2 * pairs
        if middle and not has_middle:
            continue
        for chosen in combinations_with_replacement(pair_slots, pairs):
            extra = [d for e in chosen for d in (e, k - e)] + [k // 2] * middle
            options.append(tuple(sorted(base + extra)))
    if not options:
        raise ShapeFitError("no shape fit: cannot complete 5 Pfaffian degrees", residual=h.pretty())

    options.sort(key=lambda D: (_centre_distance(D, k), D))
    best = options[0]
    return ShapeFit(
        codim=3,
        k=k,
        equation_degrees=best,
        syzygy_degrees=tuple(sorted(k - d for d in best)),
        solutions=len(options),
    )


def unprojection_degree_sets(weights: WeightVector, basket: Basket) -> List[Tuple[int, ...]]:
    """
    Degrees s + deg(y_j) of the four unprojection equations, one set per
    basket point 1/r(a,b,c) whose plane P(a,b,c) fits in the ambient
    weights with s = r left over.
    """
    sets: List[Tuple[int, ...]] = []
    for q in basket.distinct():
        rest = list(weights.weights)
        if q.index not in rest:
            continue
        rest.remove(q.index)
        try:
            for a in q.weights:
                rest.remove(a)
        except ValueError:
            continue
        if len(rest) == 4:
            sets.append(tuple(sorted(q.index + w for w in rest)))
    return sets


def _contains(degrees: Sequence[int], subset: Sequence[int]) -> bool:
    have = Counter(degrees)
    return all(have[d] >= c for d, c in Counter(subset).items())


def _fit_codim4(n: IntPolynomial, k: int, unprojection_sets: Sequence[Tuple[int, ...]] = ()) -> ShapeFit:
    # g = -sum_D t^d + sum_E t^e - sum_D t^(k-d), symmetric under e -> k - e
    g = n - IntPolynomial.one() - IntPolynomial.monomial(k)
    if g.coefficient(0) or g.coefficient(k) or g.degree() > k:
        raise ShapeFitError("no shape fit: numerator is not 1 + ... + t^k", residual=g.pretty())
    for e, c in g.terms():
        if g.coefficient(k - e) != c:
            raise ShapeFitError("no shape fit: numerator is not symmetric", residual=g.pretty())
    if g.value_at_one() != -2:
        raise ShapeFitError("no shape fit: |E| would not be 16", residual=g.pretty())

    slots = list(range(1, (k + 1) // 2))
    base: Dict[int, int] = {e: max(0, -g.coefficient(e)) for e in slots}
    if k % 2 == 0:
        slots.append(k // 2)
        base[k // 2] = (max(0, -g.coefficient(k // 2)) + 1) // 2
    spare = 9 - sum(base.values())
    if spare < 0:
        raise ShapeFitError(f"no shape fit: needs {sum(base.values())} equations, more than 9", residual=g.pretty())

    options: List[Tuple[int, ...]] = []
    for chosen in combinations_with_replacement(slots, spare):
        degrees = [e for e, c in base.items() for _ in range(c)] + list(chosen)
        options.append(tuple(sorted(degrees)))

    # Unprojection from a 1/r(a,b,c) point with a+b+c = r gives sum(D) = 3k
    def preference(D: Tuple[int, ...]):
        unprojections = sum(1 for s in unprojection_sets if _contains(D, s))
        return (sum(D) != 3 * k, -unprojections, _centre_distance(D, k), D)

    options.sort(key=preference)
    best = options[0]

    syzygies = dict(g.coefficients)
    for d in best:
        syzygies[d] = syzygies.get(d, 0) + 1
        syzygies[k - d] = syzygies.get(k - d, 0) + 1
    if any(c < 0 for c in syzygies.values()):
        raise ShapeFitError("no shape fit: negative syzygy multiplicity", residual=g.pretty())
    E = tuple(e for e in sorted(syzygies) for _ in range(syzygies[e]))
    return ShapeFit(codim=4, k=k, equation_degrees=best, syzygy_degrees=E, solutions=len(options))


def fit_resolution_shape(
    n: IntPolynomial,
    k: int,
    codim: int,
    unprojection_sets: Sequence[Tuple[int, ...]] = (),
) -> ShapeFit:
    """
    Split a Gorenstein numerator into equation and syzygy degrees.

    Codim 3: n = 1 - sum t^d_i + sum t^(k-d_i) - t^k with five d_i.
    Codim 4: n = 1 - sum_D t^d + sum_E t^e - sum_D t^(k-d) + t^k with
    |D| = 9, |E| = 16. Every admissible D is enumerated. In codim 4 the
    reported fit prefers sum(D) = 3k, then a D containing as many of the
    unprojection degree sets as possible; remaining ties go to the smallest
    sum |2d - k| over D, then to D lexicographically.

    Args:
        n: Hilbert numerator
        k: top degree
        codim: 3 or 4
        unprojection_sets: see unprojection_degree_sets

    Returns:
        ShapeFit with the number of admissible fits in `solutions`

    Raises:
        ShapeFitError: with the residual when no fit exists
    """
    if codim == 3:
        fit = _fit_codim3(n, k)
    elif codim == 4:
        fit = _fit_codim4(n, k, unprojection_sets)
    else:
        raise ShapeFitError(f"no shape fit: codimension {codim} has no fixed resolution shape")
    logger.debug("codim %d fit D=%s (%d solutions)", codim, fit.equation_degrees, fit.solutions)
    return fit


# ==================== Advisories ====================

def basket_weight_advisories(weights: WeightVector, basket: Basket, degree_A3: Fraction) -> List[str]:
    """
    Weight rules a basket imposes: each 1/r(a,b,c) wants a weight divisible
    by r and weights congruent to a, b, c mod r. With a 1/5 point and
    A^3 > 1/15 some weight should be divisible by 3.
    """
    notes: List[str] = []
    ws = weights.weights
    for q in basket.distinct():
        r = q.index
        if not any(w % r == 0 for w in ws):
            notes.append(f"{q.label}: no weight divisible by {r}")
        for a in sorted(set(q.weights)):
            if not any(w % r == a % r for w in ws):
                notes.append(f"{q.label}: no weight congruent to {a} mod {r}")
    if any(q.index == 5 for q in basket.distinct()) and degree_A3 > PROJECTION_DEGREE_BOUND:
        if not any(w % 3 == 0 for w in ws):
            notes.append(f"A^3 = {degree_A3} > {PROJECTION_DEGREE_BOUND}: projection from a 1/5 point needs a weight divisible by 3")
    for note in notes:
        logger.warning(note)
    return notes


def asymptotic_degree(p: RationalSeries, m: int = ASYMPTOTIC_CHECK_ORDER) -> Fraction:
    """6 c_m / m^3, the growth estimate of A^3 from h^0(mA)"""
    if m < 1:
        raise SeriesError(f"asymptotic order must be >= 1, got {m}")
    return Fraction(6 * expand(p, m).coefficient(m), m ** 3)


# ==================== Recognition ====================

def _partial(weights: List[int], s: TruncatedSeries) -> Dict[str, tuple]:
    return {"weights": tuple(weights), "head": s.head(_HEAD)}


def _close(p: RationalSeries, s: TruncatedSeries, weights: List[int]) -> IntPolynomial:
    """Closure checks in order: residual tail, Gorenstein symmetry, exact equality"""
    k = sum(weights)
    if k >= s.order:
        raise RecognitionError(RecognitionError.RESIDUAL, _partial(weights, s), f"k={k} reaches expansion order {s.order}")
    if not s.is_zero_between(k + 1, s.order):
        tail, _ = s.first_nonzero(k + 1)
        raise RecognitionError(RecognitionError.RESIDUAL, _partial(weights, s), f"nonzero coefficient at t^{tail}")

    numerator = s.to_polynomial(k)
    sign = -1 if (len(weights) - 4) % 2 else 1
    if numerator.reflect(k) * sign != numerator:
        raise RecognitionError(RecognitionError.ASYMMETRIC, _partial(weights, s), f"k={k}")

    if not equals(p, RationalSeries(numerator=numerator, denominator=WeightVector.of(weights))):
        raise RecognitionError(RecognitionError.RESIDUAL, _partial(weights, s), "series differs beyond the expansion order")
    logger.debug("closed at k=%d with %d weights", k, len(weights))
    return numerator


def _degree_A3(p: RationalSeries) -> Fraction:
    try:
        pole, value = leading_coefficient_at_one(p)
    except SeriesError:
        return Fraction(0)
    return value if pole == 4 else Fraction(0)


def recognize(
    p: RationalSeries,
    cfg: Optional[RecognitionConfig] = None,
    basket: Optional[Basket] = None,
) -> EmbeddingCandidate:
    """
    Guess ambient weights for p and read off its numerator.

    Hint weights are cleared first. Then, repeatedly, the first nonzero
    coefficient c_d past the constant term decides: c_d > 0 takes weight d
    with multiplicity c_d; c_d < 0 closes.

    Args:
        p: Hilbert series with constant term 1
        cfg: expansion order, weight budget and hints
        basket: if given, basket_weight_advisories are attached

    Returns:
        EmbeddingCandidate

    Raises:
        RecognitionError: budget exceeded or a closure check failed
        SeriesError: if p does not start with 1
    """
    cfg = cfg or RecognitionConfig()
    s = expand(p, cfg.expansion_order)
    if s.coefficient(0) != 1:
        raise SeriesError(f"Hilbert series must start with 1, got {s.coefficient(0)}")

    weights: List[int] = []
    for h in cfg.hint_weights:
        s = mul_factor(s, h)
        weights.append(h)
    if weights:
        logger.debug("hints cleared: %s", weights)

    while True:
        d, c = s.first_nonzero(1)
        if d == -1 or c < 0:
            break
        if len(weights) + c > cfg.max_weights:
            raise RecognitionError(
                RecognitionError.BUDGET,
                _partial(weights, s),
                f"t^{d} asks for {c} more, budget {cfg.max_weights}",
            )
        s = mul_factor(s, d, c)
        weights.extend([d] * c)
        logger.debug("took weight %d x%d", d, c)

    numerator = _close(p, s, weights)
    k = sum(weights)
    codim = len(weights) - 4
    degree = _degree_A3(p)

    equation_degrees: Tuple[int, ...] = leading_negative_block(numerator)
    syzygy_degrees: Tuple[int, ...] = ()
    solutions = 0
    advisories: List[str] = []
    if codim in (3, 4):
        try:
            sets = unprojection_degree_sets(WeightVector.of(weights), basket) if basket is not None else []
            fit = fit_resolution_shape(numerator, k, codim, sets)
            equation_degrees, syzygy_degrees, solutions = fit.equation_degrees, fit.syzygy_degrees, fit.solutions
        except ShapeFitError as e:
            logger.warning("shape fit failed: %s", e)
            advisories.append(str(e))
    elif codim >= HIGH_CODIM:
        logger.info("codimension %d: no shape fit, equation degrees from the leading block", codim)

    if degree <= PROJECTION_DEGREE_BOUND:
        advisories.append(f"A^3 = {degree} <= {PROJECTION_DEGREE_BOUND}")
    if basket is not None:
        advisories.extend(basket_weight_advisories(WeightVector.of(weights), basket, degree))

    return EmbeddingCandidate(
        weights=WeightVector.of(weights),
        numerator=numerator,
        k=k,
        codim_estimate=codim,
        equation_degrees=tuple(sorted(equation_degrees)),
        syzygy_degrees=syzygy_degrees,
        degree_A3=degree,
        sign_changes=sign_changes(numerator),
        shape_solutions=solutions,
        hints=tuple(cfg.hint_weights),
        advisories=tuple(advisories),
    )


__all__ = [
    'sign_changes',
    'leading_negative_block',
    'fit_resolution_shape',
    'unprojection_degree_sets',
    'basket_weight_advisories',
    'asymptotic_degree',
    'recognize',
]
