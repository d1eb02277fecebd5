#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Data models for Hilbert series, orbifold data, recognised embeddings,
Pfaffian formats and geometry bookkeeping
"""

# Series
from .series_models import (
    T_RING,
    T,
    IntPolynomial,
    WeightVector,
    RationalSeries,
    TruncatedSeries,
)

# Orbifold data
from .orbifold_models import (
    QuotientSingularity,
    Basket,
    InitialData,
    standard_basket,
)

# Recognition and search
from .candidate_models import (
    RowStatus,
    RecognitionConfig,
    ShapeFit,
    EmbeddingCandidate,
    SearchRow,
    ReferenceEntry,
    RecordedExample,
)

# Pfaffian formats
from .pfaffian_models import (
    SparsePoly,
    UPPER_PAIRS,
    GradedVariable,
    GradedRing,
    SkewDegreeMatrix5,
    EntryWeights,
    SkewMatrix5,
    TriangularIdeal,
    MatrixDocument,
    FormatVerdict,
)

# Geometry
from .geometry_models import (
    WeightedPlane,
    DeterminantalData,
    NodeLocus,
    NodeReport,
    Configuration,
    ConfigurationReport,
    LedgerOperation,
    LedgerStep,
    ConifoldLedger,
    WebNode,
    WebEdge,
    WebGraph,
)

# Output
from .output_models import OutputFormat, OutputDocument

__all__ = [
    # Series
    'T_RING',
    'T',
    'IntPolynomial',
    'WeightVector',
    'RationalSeries',
    'TruncatedSeries',
    # Orbifold data
    'QuotientSingularity',
    'Basket',
    'InitialData',
    'standard_basket',
    # Recognition and search
    'RowStatus',
    'RecognitionConfig',
    'ShapeFit',
    'EmbeddingCandidate',
    'SearchRow',
    'ReferenceEntry',
    'RecordedExample',
    # Pfaffian formats
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
    # Geometry
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
    # Output
    'OutputFormat',
    'OutputDocument',
]
