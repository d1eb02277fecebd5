#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Pydantic models for graded polynomial rings, antisymmetric 5x5 matrices
and triangular ideals.

Polynomials are sympy PolyElement values over ZZ in a ring whose
generators carry positive weights.
"""

import re
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

import networkx as nx
from pydantic import BaseModel, ConfigDict, Field, computed_field, field_validator, model_validator
from sympy.polys.domains import ZZ
from sympy.polys.rings import PolyElement, PolyRing, ring

# Multivariate polynomial with integer coefficients
SparsePoly = PolyElement

# Upper-triangle positions in storage order
UPPER_PAIRS: Tuple[Tuple[int, int], ...] = (
    (1, 2), (1, 3), (1, 4), (1, 5),
    (2, 3), (2, 4), (2, 5),
    (3, 4), (3, 5),
    (4, 5),
)
ROW_LENGTHS = (4, 3, 2, 1)

_NAME_RE = re.compile(r"^[A-Za-z_][A-Za-z0-9_]*$")


@lru_cache(maxsize=None)
def _sympy_ring(names: Tuple[str, ...]) -> Tuple[PolyRing, Tuple[PolyElement, ...]]:
    result = ring(list(names), ZZ)
    return result[0], tuple(result[1:])


# ==================== Ring ====================

class GradedVariable(BaseModel):
    """Homogeneous coordinate with a positive weight"""
    model_config = ConfigDict(frozen=True)

    name: str = Field(..., description="Identifier used in expressions")
    weight: int = Field(..., ge=1, description="Weighted degree")

    @field_validator("name")
    @classmethod
    def _identifier(cls, value: str) -> str:
        if not _NAME_RE.match(value):
            raise ValueError(f"'{value}' is not a valid variable name")
        return value


class GradedRing(BaseModel):
    """
    ZZ[x_1, ..., x_n] with weights.
    Elements are sympy PolyElement values of the ring returned by poly_ring().
    """
    model_config = ConfigDict(frozen=True)

    variables: Tuple[GradedVariable, ...] = Field(..., min_length=1, description="Generators in order")

    @field_validator("variables")
    @classmethod
    def _unique_names(cls, value: Tuple[GradedVariable, ...]) -> Tuple[GradedVariable, ...]:
        seen = set()
        for v in value:
            if v.name in seen:
                raise ValueError(f"variable '{v.name}' declared twice")
            seen.add(v.name)
        return value

    @classmethod
    def of(cls, **weights: int) -> "GradedRing":
        """GradedRing.of(x=1, y=1, s=3)"""
        return cls(variables=tuple(GradedVariable(name=n, weight=w) for n, w in weights.items()))

    @classmethod
    def from_pairs(cls, pairs: Sequence[Tuple[str, int]]) -> "GradedRing":
        return cls(variables=tuple(GradedVariable(name=n, weight=w) for n, w in pairs))

    def names(self) -> Tuple[str, ...]:
        return tuple(v.name for v in self.variables)

    def weights(self) -> Tuple[int, ...]:
        return tuple(v.weight for v in self.variables)

    def poly_ring(self) -> PolyRing:
        return _sympy_ring(self.names())[0]

    def gens(self) -> Dict[str, PolyElement]:
        return dict(zip(self.names(), _sympy_ring(self.names())[1]))

    def gen(self, name: str) -> PolyElement:
        try:
            return self.gens()[name]
        except KeyError:
            raise KeyError(f"unknown variable '{name}'") from None

    def weight_of(self, name: str) -> int:
        for v in self.variables:
            if v.name == name:
                return v.weight
        raise KeyError(f"unknown variable '{name}'")

    def zero(self) -> PolyElement:
        return self.poly_ring().zero

    # ----- grading -----

    def monomial_degree(self, monom: Tuple[int, ...]) -> int:
        return sum(e * w for e, w in zip(monom, self.weights()))

    def term_degrees(self, p: PolyElement) -> List[int]:
        return sorted({self.monomial_degree(monom) for monom in p.monoms()}) if p else []

    def is_homogeneous(self, p: PolyElement) -> bool:
        return len(self.term_degrees(p)) <= 1

    def degree(self, p: PolyElement) -> Optional[int]:
        """Weighted degree of a homogeneous polynomial; None for zero or mixed degrees"""
        degrees = self.term_degrees(p)
        return degrees[0] if len(degrees) == 1 else None

    def variables_of(self, p: PolyElement) -> List[str]:
        """Names of the generators occurring in p"""
        used = [False] * len(self.variables)
        for monom in p.monoms():
            for i, e in enumerate(monom):
                if e:
                    used[i] = True
        return [name for name, flag in zip(self.names(), used) if flag]

    def format(self, p: PolyElement) -> str:
        return str(p.as_expr()) if p else "0"


# ==================== Degree matrix ====================

class SkewDegreeMatrix5(BaseModel):
    """Degrees b_ab of the upper triangle, in UPPER_PAIRS order"""
    model_config = ConfigDict(frozen=True)

    entries: Tuple[int, ...] = Field(..., min_length=10, max_length=10, description="b12, b13, ..., b45")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "SkewDegreeMatrix5":
        if tuple(len(r) for r in rows) != ROW_LENGTHS:
            raise ValueError("degree matrix needs rows of 4, 3, 2 and 1 entries")
        return cls(entries=tuple(int(b) for r in rows for b in r))

    def entry(self, a: int, b: int) -> int:
        """b_ab for a != b (symmetric in a, b)"""
        if a == b:
            raise ValueError("diagonal has no degree")
        return self.entries[UPPER_PAIRS.index((min(a, b), max(a, b)))]

    def to_text(self) -> str:
        rows, i = [], 0
        for n in ROW_LENGTHS:
            rows.append(",".join(str(b) for b in self.entries[i:i + n]))
            i += n
        return ";".join(rows)


class EntryWeights(BaseModel):
    """Solution q of b_ab = q_a + q_b and the numerology it implies"""
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    q: Tuple[Fraction, ...] = Field(..., description="Row weights, possibly half-integral")
    pfaffian_degrees: Tuple[int, ...] = Field(..., description="d_i = sum(q) - q_i")
    k: int = Field(..., description="2 sum(q)")

    @computed_field
    @property
    def syzygy_degrees(self) -> Tuple[int, ...]:
        return tuple(self.k - d for d in self.pfaffian_degrees)


# ==================== Matrix ====================

class SkewMatrix5(BaseModel):
    """
    Antisymmetric 5x5 matrix stored by its strict upper triangle.
    m_ba = -m_ab and m_aa = 0.
    """
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    ring: GradedRing = Field(..., description="Ring of the entries")
    entries: Tuple[PolyElement, ...] = Field(..., min_length=10, max_length=10, description="m12, m13, ..., m45")

    @model_validator(mode="after")
    def _same_ring(self) -> "SkewMatrix5":
        target = self.ring.poly_ring()
        for p in self.entries:
            if p.ring != target:
                raise ValueError("matrix entry lives in a different polynomial ring")
        return self

    @classmethod
    def from_rows(cls, graded: GradedRing, rows: Sequence[Sequence[PolyElement]]) -> "SkewMatrix5":
        """Rows of the upper triangle: 4, 3, 2 and 1 entries"""
        if tuple(len(r) for r in rows) != ROW_LENGTHS:
            raise ValueError("matrix needs upper-triangle rows of 4, 3, 2 and 1 entries")
        R = graded.poly_ring()
        return cls(ring=graded, entries=tuple(R(p) for r in rows for p in r))

    @classmethod
    def zero(cls, graded: GradedRing) -> "SkewMatrix5":
        return cls(ring=graded, entries=(graded.zero(),) * 10)

    def entry(self, a: int, b: int) -> PolyElement:
        """m_ab for 1 <= a, b <= 5"""
        if a == b:
            return self.ring.zero()
        if a > b:
            return -self.entry(b, a)
        return self.entries[UPPER_PAIRS.index((a, b))]

    def rows(self) -> List[List[PolyElement]]:
        rows, i = [], 0
        for n in ROW_LENGTHS:
            rows.append(list(self.entries[i:i + n]))
            i += n
        return rows

    def degree_matrix(self) -> Optional[SkewDegreeMatrix5]:
        """Entry degrees when every entry is nonzero and homogeneous"""
        degrees = [self.ring.degree(p) for p in self.entries]
        if any(d is None for d in degrees):
            return None
        return SkewDegreeMatrix5(entries=tuple(degrees))

    def degree_violations(self, degrees: SkewDegreeMatrix5) -> List[Tuple[int, int, str, int]]:
        """(a, b, found, expected) for nonzero entries not homogeneous of degree b_ab"""
        violations = []
        for (a, b), p, want in zip(UPPER_PAIRS, self.entries, degrees.entries):
            if not p:
                continue
            found = self.ring.term_degrees(p)
            if found != [want]:
                violations.append((a, b, ",".join(str(d) for d in found), want))
        return violations

    def pretty(self) -> str:
        lines = []
        for indent, row in enumerate(self.rows()):
            cells = [self.ring.format(p) for p in row]
            lines.append("  " * indent + "  ".join(cells))
        return "\n".join(lines)


# ==================== Ideals ====================

class TriangularIdeal(BaseModel):
    """
    Ideal generated by v - g for pairs (v, g), where v is a variable and
    no tail depends on its own leading variable through the other
    generators. Reduction substitutes v -> g until no leading variable
    remains.
    """
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    ring: GradedRing = Field(..., description="Ambient ring")
    generators: Tuple[Tuple[str, PolyElement], ...] = Field(..., description="(leading variable, tail) pairs")

    @model_validator(mode="after")
    def _triangular(self) -> "TriangularIdeal":
        leading = [v for v, _ in self.generators]
        if len(set(leading)) != len(leading):
            raise ValueError(f"leading variables repeat: {leading}")
        for v, tail in self.generators:
            if v not in self.ring.names():
                raise ValueError(f"unknown leading variable '{v}'")
            if v in self.ring.variables_of(tail):
                raise ValueError(f"tail of '{v}' contains '{v}'")
        self.substitution_order()
        return self

    def leading(self) -> Tuple[str, ...]:
        return tuple(v for v, _ in self.generators)

    def generator_polys(self) -> List[PolyElement]:
        return [self.ring.gen(v) - tail for v, tail in self.generators]

    def generator_degrees(self) -> List[int]:
        return [self.ring.weight_of(v) for v, _ in self.generators]

    def dependency_graph(self) -> nx.DiGraph:
        """Edge w -> v when the tail of v mentions the leading variable w"""
        graph = nx.DiGraph()
        lead = set(self.leading())
        for v, tail in self.generators:
            graph.add_node(v)
            for w in self.ring.variables_of(tail):
                if w in lead:
                    graph.add_edge(w, v)
        return graph

    def substitution_order(self) -> List[str]:
        """Leading variables, dependencies first"""
        graph = self.dependency_graph()
        if not nx.is_directed_acyclic_graph(graph):
            cycle = nx.find_cycle(graph)
            raise ValueError(f"substitutions are cyclic: {cycle}")
        return list(nx.lexicographical_topological_sort(graph))

    def pretty(self) -> str:
        return "(" + ", ".join(self.ring.format(p) for p in self.generator_polys()) + ")"


class MatrixDocument(BaseModel):
    """Contents of a matrix file"""
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    ring: GradedRing
    polys: Dict[str, PolyElement] = Field(default_factory=dict, description="Named polynomials in definition order")
    matrix: Optional[SkewMatrix5] = None
    ideal: Optional[TriangularIdeal] = None


class FormatVerdict(BaseModel):
    """Outcome of a Tom_i or Jer_ij check"""
    model_config = ConfigDict(frozen=True)

    kind: str = Field(..., description="'tom' or 'jerry'")
    indices: Tuple[int, ...] = Field(..., description="(i,) or (i, j)")
    holds: bool
    offending: Tuple[Tuple[int, int], ...] = Field(default=(), description="Required entries outside the ideal")
    advisories: Tuple[str, ...] = Field(default=(), description="Degree-infeasible memberships")

    def label(self) -> str:
        return ("Tom_" if self.kind == "tom" else "Jer_") + "".join(str(i) for i in self.indices)


__all__ = [
    'SparsePoly',
    'UPPER_PAIRS',
    'GradedVariable',
    'GradedRing',
    'SkewDegreeMatrix5',
    'EntryWeights',
    'SkewMatrix5',
    'TriangularIdeal',
    'MatrixDocument',
    'FormatVerdict',
]
