#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Exception hierarchy.

GradedRingError subclasses are domain failures (CLI exit code 1);
InputFormatError marks unparseable user input (CLI exit code 2).
"""

from typing import Any, Dict, List, Optional, Tuple


class GradedRingError(Exception):
    """Base class for domain errors"""


class InputFormatError(GradedRingError, ValueError):
    """Malformed basket string, range, degree matrix or matrix file"""

    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class SeriesError(GradedRingError):
    """Invalid operation on a rational series"""


class RegistryMissError(GradedRingError):
    """No orbifold contribution registered for a singularity type"""

    def __init__(self, label: str):
        self.label = label
        super().__init__(f"no registered contribution for {label}")


class RecognitionError(GradedRingError):
    """
    Recognition failed.

    Attributes:
        reason: one of the fixed failure reasons
        partial: weights taken so far and the head of the working series
    """

    BUDGET = "weight budget exceeded"
    ASYMMETRIC = "closure failed: asymmetric numerator"
    RESIDUAL = "closure failed: residual tail"

    def __init__(self, reason: str, partial: Optional[Dict[str, Any]] = None, detail: str = ""):
        self.reason = reason
        self.partial = partial or {}
        message = reason if not detail else f"{reason} ({detail})"
        weights = self.partial.get("weights")
        if weights:
            message += f"; weights so far {list(weights)}"
        super().__init__(message)

    @property
    def weight_count(self) -> int:
        return len(self.partial.get("weights", ()))


class ShapeFitError(GradedRingError):
    """Numerator does not fit the requested resolution shape"""

    def __init__(self, message: str, residual: Any = None):
        self.residual = residual
        if residual is not None:
            message = f"{message}; residual {residual}"
        super().__init__(message)


class InconsistentDegreeMatrixError(GradedRingError):
    """Degree matrix admits no q with b_ab = q_a + q_b"""

    def __init__(self, violations: List[Tuple[int, int, Any, Any]]):
        self.violations = violations
        parts = [f"b{a}{b}={got} expected {want}" for a, b, got, want in violations]
        super().__init__("inconsistent degree matrix: " + ", ".join(parts))


class NotZeroDimensionalError(GradedRingError):
    """Determinantal locus is not 0-dimensional by degree count"""

    def __init__(self, pole_order: int):
        self.pole_order = pole_order
        super().__init__(f"not zero-dimensional by degree count (pole order {pole_order})")


class NonIntegralCountError(GradedRingError):
    """A standard-choice piece has a fractional Bezout number"""


__all__ = [
    'GradedRingError',
    'InputFormatError',
    'SeriesError',
    'RegistryMissError',
    'RecognitionError',
    'ShapeFitError',
    'InconsistentDegreeMatrixError',
    'NotZeroDimensionalError',
    'NonIntegralCountError',
]
