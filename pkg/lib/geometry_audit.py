#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Numerical geometry bookkeeping.

Node counts of divisor configurations (weighted Bezout and determinantal
lengths), the Hilbert series steps of unprojection, and Euler
characteristic ledgers through conifold transitions.
"""

import logging
from fractions import Fraction
from itertools import combinations
from pathlib import Path
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

import yaml
from pydantic import ValidationError

from config import CONFIGURATIONS_FILE
from lib.exceptions import InputFormatError, NonIntegralCountError, NotZeroDimensionalError
from lib.series_core import leading_coefficient_at_one, sum_series, vanishing_order_at_one
from models.geometry_models import (
    Configuration,
    ConfigurationReport,
    ConifoldLedger,
    DeterminantalData,
    LedgerOperation,
    NodeLocus,
    NodeReport,
    WeightedPlane,
)
from models.series_models import IntPolynomial, RationalSeries, WeightVector

logger = logging.getLogger(__name__)


# ==================== Node counts ====================

def weighted_bezout(d: int, e: int, p: WeightedPlane) -> Fraction:
    """Number of intersection points of general curves of degrees d, e on p"""
    if d < 1 or e < 1:
        raise ValueError(f"curve degrees ({d}, {e}) must be positive")
    return Fraction(d * e, p.product())


def determinantal_numerator(dd: DeterminantalData) -> IntPolynomial:
    """Hilbert-Burch numerator of the 2 x 2 minors of the 2 x 3 matrix"""
    r1, r2 = dd.row_degrees
    R = r1 + r2
    c = dd.col_degrees
    terms: Dict[int, int] = {0: 1}
    for ci, cj in combinations(c, 2):
        terms[R + ci + cj] = terms.get(R + ci + cj, 0) - 1
    for r in (r1, r2):
        top = R + sum(c) + r
        terms[top] = terms.get(top, 0) + 1
    return IntPolynomial.from_terms(terms)


def determinantal_length(dd: DeterminantalData) -> int:
    """
    Length of the rank-drop locus, read off the Hilbert-Burch resolution.

    Raises:
        NotZeroDimensionalError: pole order at t = 1 is not 1
        NonIntegralCountError: the leading value is fractional
    """
    numerator = determinantal_numerator(dd)
    weights = dd.plane.weights
    if numerator.is_zero:
        raise NotZeroDimensionalError(len(weights))
    vanishing, _ = vanishing_order_at_one(numerator)
    pole = len(weights) - vanishing
    if pole != 1:
        raise NotZeroDimensionalError(pole)
    _, value = leading_coefficient_at_one(RationalSeries.of(numerator, weights))
    if value.denominator != 1:
        raise NonIntegralCountError(f"determinantal length {value} on {dd.plane} is not an integer")
    return int(value)


def locus_count(locus: NodeLocus) -> Tuple[int, Tuple[int, ...]]:
    """
    Total and per-piece Bezout counts of a standard-choice locus.

    Raises:
        NonIntegralCountError: some piece has a fractional count
    """
    pieces = []
    for d, e in locus.pairs:
        count = weighted_bezout(d, e, locus.plane)
        if count.denominator != 1:
            raise NonIntegralCountError(f"{locus.name}: curves of degrees {d}, {e} on {locus.plane} meet in {count} points")
        pieces.append(int(count))
    return sum(pieces), tuple(pieces)


def standard_choice_nodes(loci: Sequence[NodeLocus], shared: int = 0) -> NodeReport:
    """
    Nodes of Z on each divisor, as the union of the standard-choice pieces,
    and in total with the declared shared nodes counted once.

    Raises:
        NonIntegralCountError: fractional Bezout number
        InputFormatError: repeated divisor name, or more shared nodes than
            the smallest divisor carries
    """
    counts: Dict[str, int] = {}
    pieces: Dict[str, Tuple[int, ...]] = {}
    for locus in loci:
        if locus.name in counts:
            raise InputFormatError(f"divisor '{locus.name}' given twice")
        counts[locus.name], pieces[locus.name] = locus_count(locus)
    if counts and shared > min(counts.values()):
        raise InputFormatError(
            f"{shared} shared nodes but divisor '{min(counts, key=counts.get)}' has only {min(counts.values())}"
        )
    report = NodeReport(counts=counts, pieces=pieces, shared=shared)
    logger.debug("nodes %s, shared %d, total %d", counts, shared, report.total)
    return report


def nodes_after_unprojection(report: NodeReport, unprojected: str) -> int:
    """Nodes left on the other divisors once unprojected is contracted"""
    if unprojected not in report.counts:
        raise KeyError(f"unknown divisor '{unprojected}' (known: {', '.join(report.counts)})")
    return sum(c for name, c in report.counts.items() if name != unprojected) - report.shared


# ==================== Hilbert series ====================

def unproject_term(p: WeightedPlane, s: int) -> RationalSeries:
    """t^s / ((1 - t^s) prod (1 - t^w_i)), added by unprojecting a divisor p with variable of degree s"""
    if s < 1:
        raise ValueError(f"unprojection degree {s} must be positive")
    return RationalSeries.of({s: 1}, (s,) + p.weights)


def ci_series(ambient: WeightVector, eq_degrees: Iterable[int]) -> RationalSeries:
    """prod (1 - t^d_j) / prod (1 - t^a_i)"""
    numerator = WeightVector.of(eq_degrees).denominator()
    return RationalSeries(numerator=IntPolynomial.from_ring(numerator), denominator=ambient)


def unprojection_route(
    ambient: WeightVector,
    eq_degrees: Iterable[int],
    steps: Sequence[Tuple[WeightedPlane, int]],
) -> RationalSeries:
    """Complete intersection followed by unprojections of (plane, s) in order"""
    return sum_series([ci_series(ambient, eq_degrees)] + [unproject_term(p, s) for p, s in steps])


# ==================== Euler characteristic ====================

def chi_conifold(chi: int, nodes: int) -> int:
    """Small resolution of nodes"""
    return chi + 2 * nodes


def chi_crepant_third(chi: int) -> int:
    """Crepant blowup of 1/3(1,1,1) with exceptional P^2"""
    return chi + 2


def chi_contract_plane(chi: int) -> int:
    return chi - 2


def ledger_difference(a: ConifoldLedger, b: ConifoldLedger) -> int:
    return a.chi - b.chi


def build_ledger(start: int, steps: Sequence[Sequence[Union[str, int]]], label: str = "") -> ConifoldLedger:
    """
    Replay [operation, argument] steps.

    Raises:
        InputFormatError: unknown operation or missing node count
    """
    ledger = ConifoldLedger.start(start, label)
    for step in steps:
        try:
            operation = LedgerOperation(step[0])
        except (ValueError, IndexError):
            raise InputFormatError(f"unknown ledger step {list(step)}") from None
        if operation == LedgerOperation.RESOLVE_NODES:
            if len(step) != 2:
                raise InputFormatError("resolve_nodes needs a node count")
            ledger = ledger.resolve_nodes(int(step[1]))
        elif operation == LedgerOperation.CREPANT_BLOWUP_THIRD:
            ledger = ledger.crepant_blowup_third()
        else:
            ledger = ledger.contract_plane()
    return ledger


# ==================== Configurations ====================

class ConfigurationRegistry:
    """
    Named divisor configurations and Euler ledgers from YAML
    """

    def __init__(self, configurations_path: Optional[Union[str, Path]] = None):
        """Load configurations from YAML file"""
        if configurations_path is None:
            configurations_path = CONFIGURATIONS_FILE

        with open(configurations_path, 'r', encoding='utf-8') as f:
            data = yaml.safe_load(f) or {}

        self.configurations: Dict[str, Configuration] = {}
        for name, item in (data.get('configurations') or {}).items():
            try:
                self.configurations[name] = self._configuration(name, item)
            except ValidationError as e:
                raise InputFormatError(f"configuration '{name}': {e.errors()[0]['msg']}") from None

        self.ledgers: Dict[str, ConifoldLedger] = {
            name: build_ledger(item['start'], item.get('steps') or [], label=name)
            for name, item in (data.get('ledgers') or {}).items()
        }
        logger.debug("loaded %d configurations, %d ledgers", len(self.configurations), len(self.ledgers))

    @staticmethod
    def _configuration(name: str, item: Dict) -> Configuration:
        loci = []
        for locus in item.get('loci') or []:
            plane = WeightedPlane(weights=tuple(locus.get('plane', (1, 1, 1))))
            determinantal = None
            if locus.get('determinantal'):
                det = locus['determinantal']
                determinantal = DeterminantalData(
                    row_degrees=tuple(det.get('row_degrees', (0, 0))),
                    col_degrees=tuple(det['col_degrees']),
                    plane=plane,
                )
            loci.append(NodeLocus(
                name=locus['name'],
                plane=plane,
                pairs=tuple(tuple(pair) for pair in locus['pairs']),
                determinantal=determinantal,
            ))
        return Configuration(
            name=name,
            description=item.get('description', ''),
            loci=tuple(loci),
            shared=item.get('shared', 0),
            unprojected=item.get('unprojected'),
            chi_smooth=item.get('chi_smooth'),
        )

    def names(self) -> List[str]:
        return list(self.configurations)

    def configuration(self, name: str) -> Configuration:
        if name not in self.configurations:
            raise KeyError(f"unknown configuration '{name}' (known: {', '.join(self.configurations)})")
        return self.configurations[name]

    def ledger(self, name: str) -> ConifoldLedger:
        if name not in self.ledgers:
            raise KeyError(f"unknown ledger '{name}' (known: {', '.join(self.ledgers)})")
        return self.ledgers[name]


# Singleton instance
_configurations: Optional[ConfigurationRegistry] = None


def get_configurations() -> ConfigurationRegistry:
    """Get singleton configuration registry instance"""
    global _configurations
    if _configurations is None:
        _configurations = ConfigurationRegistry()
    return _configurations


def evaluate_configuration(cfg: Configuration) -> ConfigurationReport:
    """Both node oracles, the count after the first unprojection and chi of the resolution"""
    report = standard_choice_nodes(cfg.loci, cfg.shared)
    determinantal = {
        locus.name: determinantal_length(locus.determinantal)
        for locus in cfg.loci if locus.determinantal is not None
    }
    for name, length in determinantal.items():
        if report.counts[name] != length:
            logger.warning("%s: Bezout count %d on %s disagrees with determinantal length %d",
                           cfg.name, report.counts[name], name, length)
    remaining = nodes_after_unprojection(report, cfg.unprojected) if cfg.unprojected else None
    chi = chi_conifold(cfg.chi_smooth, report.total) if cfg.chi_smooth is not None else None
    return ConfigurationReport(
        name=cfg.name,
        description=cfg.description,
        nodes=report,
        determinantal=determinantal,
        remaining=remaining,
        chi_resolved=chi,
    )


__all__ = [
    'weighted_bezout',
    'determinantal_numerator',
    'determinantal_length',
    'locus_count',
    'standard_choice_nodes',
    'nodes_after_unprojection',
    'unproject_term',
    'ci_series',
    'unprojection_route',
    'chi_conifold',
    'chi_crepant_third',
    'chi_contract_plane',
    'ledger_difference',
    'build_ledger',
    'ConfigurationRegistry',
    'get_configurations',
    'evaluate_configuration',
]


if __name__ == "__main__":
    registry = get_configurations()
    for name in registry.names():
        result = evaluate_configuration(registry.configuration(name))
        print(f"{name}: {result.nodes.counts} shared {result.nodes.shared} total {result.nodes.total}"
              f" remaining {result.remaining}")
    for name, ledger in registry.ledgers.items():
        print(f"{name}: chi {ledger.chi}")
