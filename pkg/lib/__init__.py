#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Library for the graded rings method: series arithmetic, orbifold
Riemann-Roch, recognition, Pfaffian formats and geometry bookkeeping
"""

from .exceptions import (
    GradedRingError,
    InputFormatError,
    SeriesError,
    RegistryMissError,
    RecognitionError,
    ShapeFitError,
    InconsistentDegreeMatrixError,
    NotZeroDimensionalError,
    NonIntegralCountError,
)

# Series core
from .series_core import (
    expand,
    add,
    sum_series,
    scale,
    equals,
    canonical,
    numerator_over,
    leading_coefficient_at_one,
)

# Orbifold Riemann-Roch
from .orbifold_rr import (
    ContributionRegistry,
    get_registry,
    initial_series,
    orbifold_term,
    assemble,
    basket_degree,
    parse_basket,
)

# Recognition and search
from .recognition import recognize, fit_resolution_shape, asymptotic_degree
from .reference_tables import ReferenceTables, get_reference_data
from .candidate_search import search, search_table, evaluate_row, compare_with_reference

# Pfaffian calculus
from .pfaffian_calculus import (
    solve_entry_weights,
    pfaffian_numerator,
    maximal_pfaffians,
    triangular_ideal,
    reduce,
    is_member,
    is_tom,
    is_jerry,
    check_formats,
)
from .matrix_file import parse_matrix_file, load_matrix_file

# Geometry
from .geometry_audit import (
    weighted_bezout,
    determinantal_length,
    standard_choice_nodes,
    unproject_term,
    ci_series,
    chi_conifold,
    get_configurations,
    evaluate_configuration,
)
from .web_graph import build_web, web_from_reference

# Output
from .output_format import render

__all__ = [
    # Errors
    'GradedRingError',
    'InputFormatError',
    'SeriesError',
    'RegistryMissError',
    'RecognitionError',
    'ShapeFitError',
    'InconsistentDegreeMatrixError',
    'NotZeroDimensionalError',
    'NonIntegralCountError',
    # Series core
    'expand',
    'add',
    'sum_series',
    'scale',
    'equals',
    'canonical',
    'numerator_over',
    'leading_coefficient_at_one',
    # Orbifold Riemann-Roch
    'ContributionRegistry',
    'get_registry',
    'initial_series',
    'orbifold_term',
    'assemble',
    'basket_degree',
    'parse_basket',
    # Recognition and search
    'recognize',
    'fit_resolution_shape',
    'asymptotic_degree',
    'ReferenceTables',
    'get_reference_data',
    'search',
    'search_table',
    'evaluate_row',
    'compare_with_reference',
    # Pfaffian calculus
    'solve_entry_weights',
    'pfaffian_numerator',
    'maximal_pfaffians',
    'triangular_ideal',
    'reduce',
    'is_member',
    'is_tom',
    'is_jerry',
    'check_formats',
    'parse_matrix_file',
    'load_matrix_file',
    # Geometry
    'weighted_bezout',
    'determinantal_length',
    'standard_choice_nodes',
    'unproject_term',
    'ci_series',
    'chi_conifold',
    'get_configurations',
    'evaluate_configuration',
    'build_web',
    'web_from_reference',
    # Output
    'render',
]
