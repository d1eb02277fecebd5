#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Degree calculus and symbolic algebra for antisymmetric 5x5 matrices.

- entry weights q with b_ab = q_a + q_b, Pfaffian degrees and the
  codimension 3 Hilbert numerator they predict
- the five maximal Pfaffians and their defining syzygies
- Tom and Jerry format checks against triangular ideals, where
  membership is decided by substituting each leading variable
"""

import logging
from collections import Counter
from fractions import Fraction
from itertools import combinations
from typing import Dict, List, Optional, Sequence, Tuple

from sympy.polys.rings import PolyElement

from lib.exceptions import InconsistentDegreeMatrixError, InputFormatError, SeriesError
from models.pfaffian_models import (
    ROW_LENGTHS,
    UPPER_PAIRS,
    EntryWeights,
    FormatVerdict,
    GradedRing,
    SkewDegreeMatrix5,
    SkewMatrix5,
    TriangularIdeal,
)
from models.series_models import IntPolynomial

logger = logging.getLogger(__name__)


# ==================== Degree matrices ====================

def parse_degree_matrix(text: str) -> SkewDegreeMatrix5:
    """
    'b12,b13,b14,b15;b23,b24,b25;b34,b35;b45'

    Raises:
        InputFormatError: wrong shape or non-integer entry
    """
    rows = [row.strip() for row in (text or "").strip().split(";")]
    try:
        parsed = [[int(item) for item in row.split(",")] for row in rows]
    except ValueError:
        raise InputFormatError(f"degree matrix '{text}' has a non-integer entry") from None
    if tuple(len(r) for r in parsed) != ROW_LENGTHS:
        raise InputFormatError(f"degree matrix '{text}' needs rows of 4, 3, 2 and 1 entries")
    return SkewDegreeMatrix5.from_rows(parsed)


def solve_entry_weights(d: SkewDegreeMatrix5) -> EntryWeights:
    """
    Solve b_ab = q_a + q_b.

    q_1 comes from b12, b13 and b23, the other q_a from row 1; the
    remaining entries are then checked. The Pfaffian omitting row i has
    degree sum(q) - q_i and the numerator has top degree 2 sum(q).

    Raises:
        InconsistentDegreeMatrixError: some b_ab differs from q_a + q_b
    """
    q1 = Fraction(d.entry(1, 2) + d.entry(1, 3) - d.entry(2, 3), 2)
    q = [q1] + [d.entry(1, a) - q1 for a in range(2, 6)]

    violations = []
    for a, b in UPPER_PAIRS:
        expected = q[a - 1] + q[b - 1]
        if d.entry(a, b) != expected:
            violations.append((a, b, d.entry(a, b), expected))
    if violations:
        raise InconsistentDegreeMatrixError(violations)

    total = sum(q)
    # q_a are all integers or all half-integers, so these are integral
    degrees = tuple(int(total - qi) for qi in q)
    k = int(2 * total)
    logger.debug("q=%s d=%s k=%d", [str(x) for x in q], degrees, k)
    return EntryWeights(q=tuple(q), pfaffian_degrees=degrees, k=k)


def pfaffian_numerator(d: Sequence[int], k: int) -> IntPolynomial:
    """
    1 - sum t^d_i + sum t^(k - d_i) - t^k with like terms combined.

    Raises:
        SeriesError: some d_i >= k
    """
    if any(di >= k for di in d):
        raise SeriesError(f"Pfaffian degrees {tuple(d)} must be below k={k}")
    terms: Dict[int, int] = {0: 1, k: -1}
    for di in d:
        terms[di] = terms.get(di, 0) - 1
        terms[k - di] = terms.get(k - di, 0) + 1
    return IntPolynomial.from_terms(terms)


def cancelled_terms(d: Sequence[int], k: int) -> Dict[int, int]:
    """Exponent -> number of equation/syzygy pairs that cancel in pfaffian_numerator"""
    equations = Counter(d)
    syzygies = Counter(k - di for di in d)
    return {e: min(equations[e], syzygies[e]) for e in sorted(equations) if syzygies[e]}


# ==================== Pfaffians ====================

def maximal_pfaffians(M: SkewMatrix5, degrees: Optional[SkewDegreeMatrix5] = None) -> Tuple[PolyElement, ...]:
    """
    Pf_i for i = 1..5, the Pfaffian of M with row and column i removed:
    m_jk m_lm - m_jl m_km + m_jm m_kl for the remaining j < k < l < m.

    Raises:
        InconsistentDegreeMatrixError: degrees given and some entry disagrees
    """
    if degrees is not None:
        violations = M.degree_violations(degrees)
        if violations:
            raise InconsistentDegreeMatrixError(violations)

    m = M.entry
    result = []
    for i in range(1, 6):
        a, b, c, e = (r for r in range(1, 6) if r != i)
        result.append(m(a, b) * m(c, e) - m(a, c) * m(b, e) + m(a, e) * m(b, c))
    return tuple(result)


def pfaffian_syzygies(M: SkewMatrix5, pf: Optional[Sequence[PolyElement]] = None) -> Tuple[PolyElement, ...]:
    """sum_a (-1)^a m_ab Pf_a for b = 1..5; all five vanish identically"""
    pf = pf if pf is not None else maximal_pfaffians(M)
    return tuple(
        sum(((-1) ** a * M.entry(a, b) * pf[a - 1] for a in range(1, 6)), M.ring.zero())
        for b in range(1, 6)
    )


# ==================== Ideals ====================

def triangular_ideal(graded: GradedRing, polys: Sequence[PolyElement]) -> TriangularIdeal:
    """
    Orient each generator as v - g with v a variable of coefficient +-1
    that occurs in no other term. Among candidates, variables mentioned
    by fewer of the other generators win, then declaration order.

    Raises:
        InputFormatError: no usable leading variable, or cyclic substitutions
    """
    names = graded.names()
    mentions = [set(graded.variables_of(p)) for p in polys]
    taken: List[str] = []
    generators: List[Tuple[str, PolyElement]] = []

    for index, p in enumerate(polys):
        candidates = []
        for i, name in enumerate(names):
            if name in taken:
                continue
            coeff = p.coeff(graded.gen(name))
            if coeff not in (1, -1):
                continue
            if sum(1 for monom in p.monoms() if monom[i]) != 1:
                continue
            shared = sum(1 for j, used in enumerate(mentions) if j != index and name in used)
            candidates.append((shared, i, name, int(coeff)))
        if not candidates:
            raise InputFormatError(f"generator {graded.format(p)} has no linear variable to solve for")
        _, _, name, coeff = min(candidates)
        v = graded.gen(name)
        # p = c v + rest with c = +-1, so v = -c rest modulo p
        generators.append((name, -coeff * (p - coeff * v)))
        taken.append(name)

    try:
        return TriangularIdeal(ring=graded, generators=tuple(generators))
    except ValueError as e:
        raise InputFormatError(f"ideal is not triangular: {e}") from e


def _substitutions(I: TriangularIdeal) -> List[Tuple[PolyElement, PolyElement]]:
    """(generator, fully reduced tail) pairs"""
    tails = dict(I.generators)
    reduced: Dict[str, PolyElement] = {}
    for v in I.substitution_order():
        done = [(I.ring.gen(w), reduced[w]) for w in reduced]
        tail = tails[v]
        reduced[v] = tail.compose(done) if done else tail
    return [(I.ring.gen(v), reduced[v]) for v in I.leading()]


def reduce(p: PolyElement, I: TriangularIdeal) -> PolyElement:
    """Normal form of p: every leading variable replaced by its reduced tail"""
    if not p or not I.generators:
        return p
    return p.compose(_substitutions(I))


def is_member(p: PolyElement, I: TriangularIdeal) -> bool:
    return not reduce(p, I)


def _tom_entries(i: int) -> List[Tuple[int, int]]:
    return [(a, b) for a, b in UPPER_PAIRS if i not in (a, b)]


def _jerry_entries(i: int, j: int) -> List[Tuple[int, int]]:
    return [(a, b) for a, b in UPPER_PAIRS if a in (i, j) or b in (i, j)]


def _check_index(*indices: int) -> None:
    for i in indices:
        if not 1 <= i <= 5:
            raise ValueError(f"row index {i} is not in 1..5")
    if len(set(indices)) != len(indices):
        raise ValueError(f"row indices {indices} must be distinct")


def _offending(M: SkewMatrix5, I: TriangularIdeal, entries: Sequence[Tuple[int, int]]) -> List[Tuple[int, int]]:
    return [(a, b) for a, b in entries if not is_member(M.entry(a, b), I)]


def is_tom(M: SkewMatrix5, I: TriangularIdeal, i: int) -> bool:
    """Every entry off row and column i lies in I"""
    _check_index(i)
    return not _offending(M, I, _tom_entries(i))


def is_jerry(M: SkewMatrix5, I: TriangularIdeal, i: int, j: int) -> bool:
    """Every entry of rows and columns i and j lies in I"""
    _check_index(i, j)
    return not _offending(M, I, _jerry_entries(i, j))


def membership_degree_advisories(
    M: SkewMatrix5,
    I: TriangularIdeal,
    degrees: Optional[SkewDegreeMatrix5] = None,
    i: int = 1,
    j: Optional[int] = None,
) -> List[str]:
    """
    Required entries of Tom_i (j None) or Jer_ij whose degree is below
    every generator degree of I. Such an entry is in I only if it is zero.

    Args:
        M: the matrix
        I: the ideal
        degrees: entry degrees; read off M when omitted
        i, j: format indices
    """
    if not I.generators:
        return []
    floor = min(I.generator_degrees())
    entries = _tom_entries(i) if j is None else _jerry_entries(i, j)
    advisories = []
    for a, b in entries:
        p = M.entry(a, b)
        degree = degrees.entry(a, b) if degrees is not None else M.ring.degree(p)
        if degree is None or degree >= floor:
            continue
        if p:
            message = f"m{a}{b} has degree {degree} < {floor} and is nonzero, so it cannot lie in I"
        else:
            message = f"m{a}{b} has degree {degree} < {floor} and must vanish"
        logger.warning(message)
        advisories.append(message)
    return advisories


def format_verdict(
    M: SkewMatrix5,
    I: TriangularIdeal,
    i: int,
    j: Optional[int] = None,
    degrees: Optional[SkewDegreeMatrix5] = None,
) -> FormatVerdict:
    """Tom_i when j is None, Jer_ij otherwise, with the offending entries"""
    if j is None:
        _check_index(i)
        kind, indices, entries = "tom", (i,), _tom_entries(i)
    else:
        _check_index(i, j)
        kind, indices, entries = "jerry", tuple(sorted((i, j))), _jerry_entries(i, j)
    offending = _offending(M, I, entries)
    return FormatVerdict(
        kind=kind,
        indices=indices,
        holds=not offending,
        offending=tuple(offending),
        advisories=tuple(membership_degree_advisories(M, I, degrees, i, j)),
    )


def check_formats(
    M: SkewMatrix5,
    I: TriangularIdeal,
    kinds: Sequence[str] = ("tom", "jerry"),
) -> List[FormatVerdict]:
    """All Tom_i and Jer_ij verdicts of the requested kinds"""
    verdicts = []
    if "tom" in kinds:
        verdicts.extend(format_verdict(M, I, i) for i in range(1, 6))
    if "jerry" in kinds:
        verdicts.extend(format_verdict(M, I, i, j) for i, j in combinations(range(1, 6), 2))
    return verdicts


# ==================== Unprojection ====================

def unprojection_equations(
    f_row: Sequence[PolyElement],
    g_row: Sequence[PolyElement],
    xs: Sequence[PolyElement],
    s: PolyElement,
) -> Tuple[PolyElement, PolyElement, PolyElement]:
    """
    For f = A x1 + B x2 + C x3 and g = D x1 + E x2 + F x3 the unprojection
    variable s satisfies s x_i = (2x2 minor) for the three minors of
    [[A, B, C], [D, E, F]]. Returns the relations s x_i - minor_i.
    """
    A, B, C = f_row
    D, E, F = g_row
    minors = (B * F - C * E, C * D - A * F, A * E - B * D)
    return tuple(s * x - minor for x, minor in zip(xs, minors))


def mount_unprojection_matrix(
    graded: GradedRing,
    f_row: Sequence[PolyElement],
    g_row: Sequence[PolyElement],
    xs: Sequence[PolyElement],
    s: PolyElement,
) -> SkewMatrix5:
    """
    The matrix (x1, x2, C, F; x3, -B, -E; A, D; s). Its Pfaffians are the
    three unprojection relations followed by g and f.
    """
    A, B, C = f_row
    D, E, F = g_row
    x1, x2, x3 = xs
    return SkewMatrix5.from_rows(graded, [[x1, x2, C, F], [x3, -B, -E], [A, D], [s]])


def verify_unprojection(
    graded: GradedRing,
    f_row: Sequence[PolyElement],
    g_row: Sequence[PolyElement],
    xs: Sequence[PolyElement],
    s: PolyElement,
) -> bool:
    """Each unprojection relation is +-Pf_i of the mounted matrix for i = 3, 2, 1, and Pf_4, Pf_5 are g, f"""
    pf = maximal_pfaffians(mount_unprojection_matrix(graded, f_row, g_row, xs, s))
    relations = unprojection_equations(f_row, g_row, xs, s)
    f = sum((a * x for a, x in zip(f_row, xs)), graded.zero())
    g = sum((a * x for a, x in zip(g_row, xs)), graded.zero())
    matches = all(rel in (pf[2 - n], -pf[2 - n]) for n, rel in enumerate(relations))
    return matches and pf[3] == g and pf[4] == f


__all__ = [
    'parse_degree_matrix',
    'solve_entry_weights',
    'pfaffian_numerator',
    'cancelled_terms',
    'maximal_pfaffians',
    'pfaffian_syzygies',
    'triangular_ideal',
    'reduce',
    'is_member',
    'is_tom',
    'is_jerry',
    'membership_degree_advisories',
    'format_verdict',
    'check_formats',
    'unprojection_equations',
    'mount_unprojection_matrix',
    'verify_unprojection',
]
