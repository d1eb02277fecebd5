#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Shared fixtures: the worked (P1, P2, basket) data and numerators used
across the test modules
"""

import sys
from pathlib import Path

import pytest

ROOT = Path(__file__).resolve().parent
if str(ROOT) not in sys.path:
    sys.path.insert(0, str(ROOT))

from config import DATA_DIR  # noqa: E402
from lib.orbifold_rr import assemble  # noqa: E402
from models.orbifold_models import InitialData, standard_basket  # noqa: E402
from models.series_models import IntPolynomial  # noqa: E402


@pytest.fixture
def codim4_series():
    """P1 = 3, P2 = 6 with four 1/3(1,1,1) points and one 1/5(1,1,3) point"""
    return assemble(InitialData.of(3, 6), standard_basket(4, 1))


@pytest.fixture
def codim4_numerator():
    return IntPolynomial.from_terms({0: 1, 6: -6, 8: -3, 9: 8, 11: 8, 12: -3, 14: -6, 20: 1})


@pytest.fixture
def two_planes_series():
    """P1 = 6, P2 = 21 with two 1/3(1,1,1) points"""
    return assemble(InitialData.of(6, 21), standard_basket(2, 0))


@pytest.fixture
def two_planes_numerator():
    """Numerator of the two-plane series over (1-t)^6 (1-t^3)^2"""
    return IntPolynomial.from_terms({0: 1, 3: -2, 4: -6, 5: 6, 6: 2, 7: 6, 8: -6, 9: -2, 12: 1})


@pytest.fixture
def matrices_dir():
    return DATA_DIR / "matrices"
