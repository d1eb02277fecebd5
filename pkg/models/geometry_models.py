#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Pydantic models for node counting, Euler characteristic bookkeeping and
the web of projections between candidate families
"""

from enum import Enum
from typing import Dict, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, computed_field, field_validator, model_validator


# ==================== Planes and loci ====================

class WeightedPlane(BaseModel):
    """P(w1, w2, w3); P(1,1,1) is the ordinary plane"""
    model_config = ConfigDict(frozen=True)

    weights: Tuple[int, int, int] = Field(..., description="Weights w1 <= w2 <= w3")

    @field_validator("weights")
    @classmethod
    def _positive_sorted(cls, value: Tuple[int, int, int]) -> Tuple[int, int, int]:
        if any(w < 1 for w in value):
            raise ValueError(f"plane weights {value} must be positive")
        return tuple(sorted(value))

    @classmethod
    def of(cls, w1: int = 1, w2: int = 1, w3: int = 1) -> "WeightedPlane":
        return cls(weights=(w1, w2, w3))

    def product(self) -> int:
        w1, w2, w3 = self.weights
        return w1 * w2 * w3

    def __str__(self) -> str:
        return "P(" + ",".join(str(w) for w in self.weights) + ")"


class DeterminantalData(BaseModel):
    """
    2 x 3 matrix of forms on a weighted plane: entry (i, j) has degree
    row_degrees[i] + col_degrees[j].
    """
    model_config = ConfigDict(frozen=True)

    row_degrees: Tuple[int, int] = Field((0, 0), description="r1, r2")
    col_degrees: Tuple[int, int, int] = Field(..., description="c1, c2, c3")
    plane: WeightedPlane = Field(default_factory=WeightedPlane.of)

    @model_validator(mode="after")
    def _nonnegative_entries(self) -> "DeterminantalData":
        for r in self.row_degrees:
            for c in self.col_degrees:
                if r + c < 0:
                    raise ValueError(f"entry degree {r} + {c} is negative")
        return self


class NodeLocus(BaseModel):
    """
    Singular locus of Z along one divisor under the standard choice: a
    union of complete intersections of curves of degrees (d, e).
    """
    model_config = ConfigDict(frozen=True)

    name: str = Field(..., description="Divisor name, e.g. 'D'")
    plane: WeightedPlane = Field(default_factory=WeightedPlane.of)
    pairs: Tuple[Tuple[int, int], ...] = Field(..., min_length=1, description="(d, e) per piece")
    determinantal: Optional[DeterminantalData] = Field(None, description="Same locus as a rank-drop locus")


class NodeReport(BaseModel):
    """Nodes per divisor and in total"""
    model_config = ConfigDict(frozen=True)

    counts: Dict[str, int] = Field(..., description="Divisor name -> nodes on it")
    pieces: Dict[str, Tuple[int, ...]] = Field(default_factory=dict, description="Per-piece counts")
    shared: int = Field(0, ge=0, description="Nodes lying on two divisors")

    @computed_field
    @property
    def total(self) -> int:
        return sum(self.counts.values()) - self.shared


class Configuration(BaseModel):
    """Named divisor configuration D, E in Z"""
    model_config = ConfigDict(frozen=True)

    name: str
    description: str = ""
    loci: Tuple[NodeLocus, ...] = Field(..., min_length=1)
    shared: int = Field(0, ge=0, description="Declared nodes at the intersection of the divisors")
    unprojected: Optional[str] = Field(None, description="Divisor unprojected first")
    chi_smooth: Optional[int] = Field(None, description="Euler characteristic of the smooth Z")


class ConfigurationReport(BaseModel):
    """Evaluated configuration"""
    model_config = ConfigDict(frozen=True)

    name: str
    description: str = ""
    nodes: NodeReport
    determinantal: Dict[str, int] = Field(default_factory=dict, description="Locus -> rank-drop length")
    remaining: Optional[int] = Field(None, description="Nodes left after the first unprojection")
    chi_resolved: Optional[int] = Field(None, description="chi of the small resolution of Z")

    @computed_field
    @property
    def oracles_agree(self) -> bool:
        return all(self.nodes.counts.get(name) == length for name, length in self.determinantal.items())


# ==================== Euler characteristic ====================

class LedgerOperation(str, Enum):
    RESOLVE_NODES = "resolve_nodes"
    CREPANT_BLOWUP_THIRD = "crepant_blowup_third"
    CONTRACT_PLANE = "contract_plane"


class LedgerStep(BaseModel):
    model_config = ConfigDict(frozen=True)

    operation: LedgerOperation
    nodes: int = Field(0, ge=0, description="Nodes resolved (resolve_nodes only)")
    chi: int = Field(..., description="Euler characteristic after the step")


class ConifoldLedger(BaseModel):
    """
    Running Euler characteristic through small resolutions (+2 per node),
    crepant blowups of 1/3(1,1,1) (+2) and plane contractions (-2).
    Absolute values depend on these conventions; differences do not.
    """
    model_config = ConfigDict(frozen=True)

    chi_smooth: int = Field(..., description="Starting Euler characteristic")
    steps: Tuple[LedgerStep, ...] = Field(default=())
    label: str = ""

    @classmethod
    def start(cls, chi: int, label: str = "") -> "ConifoldLedger":
        return cls(chi_smooth=chi, label=label)

    @computed_field
    @property
    def chi(self) -> int:
        return self.steps[-1].chi if self.steps else self.chi_smooth

    def _then(self, operation: LedgerOperation, delta: int, nodes: int = 0) -> "ConifoldLedger":
        step = LedgerStep(operation=operation, nodes=nodes, chi=self.chi + delta)
        return self.model_copy(update={"steps": self.steps + (step,)})

    def resolve_nodes(self, n: int) -> "ConifoldLedger":
        return self._then(LedgerOperation.RESOLVE_NODES, 2 * n, n)

    def crepant_blowup_third(self) -> "ConifoldLedger":
        return self._then(LedgerOperation.CREPANT_BLOWUP_THIRD, 2)

    def contract_plane(self) -> "ConifoldLedger":
        return self._then(LedgerOperation.CONTRACT_PLANE, -2)


# ==================== Web ====================

class WebNode(BaseModel):
    model_config = ConfigDict(frozen=True)

    n: int = Field(..., ge=0)
    m: int = Field(..., ge=0)
    codim: int = Field(..., description="Codimension of the recognised embedding")
    families: int = Field(1, ge=1, description="Deformation families")

    def key(self) -> Tuple[int, int]:
        return (self.n, self.m)


class WebEdge(BaseModel):
    model_config = ConfigDict(frozen=True)

    source: Tuple[int, int]
    target: Tuple[int, int]
    label: str = Field(..., description="'project 1/3' or 'project 1/5'")


class WebGraph(BaseModel):
    """Families F(n,m) joined by projections from 1/3 and 1/5 points"""
    model_config = ConfigDict(frozen=True)

    nodes: Tuple[WebNode, ...] = Field(default=())
    edges: Tuple[WebEdge, ...] = Field(default=())
    connected: bool = Field(True, description="Underlying undirected graph is connected")

    def node(self, n: int, m: int) -> Optional[WebNode]:
        for node in self.nodes:
            if node.key() == (n, m):
                return node
        return None

    def to_records(self) -> Dict[str, object]:
        return {
            "nodes": [node.model_dump() for node in self.nodes],
            "edges": [
                {"source": list(e.source), "target": list(e.target), "label": e.label}
                for e in self.edges
            ],
            "connected": self.connected,
        }

    def to_dot(self) -> str:
        lines: List[str] = ["digraph web {"]
        for node in self.nodes:
            label = f"({node.n},{node.m})\\ncodim {node.codim}"
            if node.families > 1:
                label += f"\\n{node.families} families"
            lines.append(f'  "{node.n},{node.m}" [label="{label}"];')
        for e in self.edges:
            lines.append(f'  "{e.source[0]},{e.source[1]}" -> "{e.target[0]},{e.target[1]}" [label="{e.label}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


__all__ = [
    'WeightedPlane',
    'DeterminantalData',
    'NodeLocus',
    'NodeReport',
    'Configuration',
    'ConfigurationReport',
    'LedgerOperation',
    'LedgerStep',
    'ConifoldLedger',
    'WebNode',
    'WebEdge',
    'WebGraph',
]
