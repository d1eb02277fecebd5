#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Constants for the graded rings toolkit.

Everything here can be overridden by a CLI flag or a function argument;
nothing is read from the environment.
"""

from fractions import Fraction
from pathlib import Path

# ==================== Paths ====================

BASE_DIR = Path(__file__).resolve().parent.parent
DATA_DIR = BASE_DIR / "data"

REGISTRY_FILE = DATA_DIR / "singularity_contributions.yaml"
REFERENCE_FILE = DATA_DIR / "reference_candidates.yaml"
CONFIGURATIONS_FILE = DATA_DIR / "configurations.yaml"

# ==================== Recognition ====================

DEFAULT_EXPANSION_ORDER = 80
DEFAULT_MAX_WEIGHTS = 10

# Codimension at which shape fitting stops and search rows are flagged
HIGH_CODIM = 5

# Order used for the 6 c_m / m^3 estimate of A^3
ASYMPTOTIC_CHECK_ORDER = 200

# A 1/5(1,1,3) point projects to a 1/3(1,1,1) point unless A^3 <= 1/15
PROJECTION_DEGREE_BOUND = Fraction(1, 15)

# ==================== Search ====================

DEFAULT_SEARCH_WORKERS = 1

# ==================== Output ====================

SCHEMA_VERSION = "1"
OUTPUT_FORMATS = ("pretty", "json-records", "tsv", "dot")
TSV_COLUMNS = ("P1", "P2", "n", "m", "weights", "equation_degrees", "codim", "status")
