#!/usr/bin/env python3
# -*- coding: utf-8 -*-

import pytest

from lib.candidate_search import (
    compare_with_reference,
    evaluate_row,
    parse_range,
    retry_hints,
    search,
    search_keys,
    search_table,
)
from lib.exceptions import InputFormatError
from lib.recognition import fit_resolution_shape, unprojection_degree_sets
from lib.reference_tables import get_reference_data
from models.candidate_models import RowStatus, SearchRow
from models.orbifold_models import standard_basket
from models.series_models import WeightVector


@pytest.fixture(scope="module")
def web_rows():
    return search(range(3, 4), range(6, 7), range(0, 7), range(0, 4))


# ==================== Ranges and hints ====================

def test_parse_range():
    assert parse_range("0..6") == range(0, 7)
    assert parse_range(" 3 ") == range(3, 4)


@pytest.mark.parametrize("text", ["", "a..b", "3..1", "1..", "-1..2"])
def test_parse_range_rejects(text):
    with pytest.raises(InputFormatError):
        parse_range(text)


def test_retry_hints_order():
    assert retry_hints(standard_basket(4, 1)) == [(5,), (3, 5), (3,), (1, 3)]
    assert retry_hints(standard_basket(0, 0)) == []


# ==================== Rows ====================

def test_empty_basket_does_not_arise():
    row = evaluate_row((3, 6, 0, 0))
    assert row.status == RowStatus.NON_ARISING
    assert row.candidate is None


def test_worked_row():
    row = evaluate_row((3, 6, 4, 1))
    assert row.status == RowStatus.OK
    assert row.candidate.weights == WeightVector.of([1, 1, 1, 3, 3, 3, 3, 5])
    assert row.codim == 4
    assert row.hints_used == ()


@pytest.mark.parametrize(
    "key, printed, centre_most",
    [
        ((3, 7, 2, 1), (5, 5, 6, 6, 6, 6, 7, 8, 8), (5, 5, 6, 6, 6, 6, 7, 7, 9)),
        ((4, 11, 1, 1), (4, 4, 5, 5, 6, 6, 6, 7, 8), (4, 4, 5, 5, 5, 6, 6, 8, 8)),
    ],
)
def test_shape_fit_prefers_unprojection_degrees(key, printed, centre_most):
    candidate = evaluate_row(key).candidate
    assert candidate.equation_degrees == printed
    assert sum(printed) == 3 * candidate.k

    # without the unprojection sets the centre-most fit wins and misses the table
    plain = fit_resolution_shape(candidate.numerator, candidate.k, 4)
    assert plain.equation_degrees == centre_most
    assert sum(plain.equation_degrees) == 3 * candidate.k

    sets = unprojection_degree_sets(candidate.weights, standard_basket(*key[2:]))
    assert sets
    fit = fit_resolution_shape(candidate.numerator, candidate.k, 4, sets)
    assert fit.equation_degrees == printed
    assert fit.solutions == plain.solutions


def test_web_search_matches_printed_table(web_rows):
    marked = compare_with_reference(web_rows)
    table_keys = set(get_reference_data().table_keys("web"))
    assert len(table_keys) == 15

    by_key = {row.key(): row for row in marked}
    for key in table_keys:
        assert by_key[key].status == RowStatus.OK, key
        assert by_key[key].reference == "match", key
    assert by_key[(3, 6, 0, 0)].status == RowStatus.NON_ARISING
    for key, row in by_key.items():
        if key not in table_keys and key != (3, 6, 0, 0):
            assert row.status in (RowStatus.HIGH_CODIM, RowStatus.FAILED), key
            assert row.reference is None


def test_web_codimensions(web_rows):
    by_key = {row.key(): row for row in web_rows}
    assert by_key[(3, 6, 3, 0)].candidate.equation_degrees == (9,)
    assert by_key[(3, 6, 0, 2)].candidate.equation_degrees == (6, 10)
    assert by_key[(3, 6, 5, 0)].codim == 3
    assert by_key[(3, 6, 6, 0)].candidate.equation_degrees == (6,) * 9
    for n, m in ((0, 3), (2, 2), (4, 1), (6, 0)):
        assert by_key[(3, 6, n, m)].codim == 4


def test_search_order_is_row_major(web_rows):
    keys = [row.key() for row in web_rows]
    assert keys[:5] == [(3, 6, 0, 0), (3, 6, 0, 1), (3, 6, 0, 2), (3, 6, 0, 3), (3, 6, 1, 0)]
    assert len(keys) == 28


def test_parallel_search_is_deterministic():
    keys = [(3, 6, n, m) for n in range(3) for m in range(3)]
    assert search_keys(keys, workers=4) == search_keys(keys, workers=1)


def test_further_table():
    rows = search_table("further")
    assert len(rows) == 7
    for row in rows:
        assert row.reference == "match", (row.key(), row.reference)
    by_key = {row.key(): row for row in rows}
    assert by_key[(5, 15, 1, 1)].hints_used == (5,)
    assert by_key[(2, 3, 1, 3)].candidate.equation_degrees == (8,) * 3 + (9,) * 3 + (10,) * 3
    assert by_key[(2, 3, 1, 3)].candidate.k == 27


def test_compare_reports_mismatch():
    printed = get_reference_data().lookup((3, 6, 4, 1))
    good = evaluate_row((3, 6, 4, 1))
    bad = good.model_copy(update={"candidate": good.candidate.model_copy(update={"equation_degrees": (6,) * 9})})
    missing = SearchRow(P1=3, P2=6, n=4, m=1, status=RowStatus.FAILED, reason="test")
    unlisted = SearchRow(P1=9, P2=9, n=1, m=1, status=RowStatus.FAILED)

    marked = compare_with_reference([good, bad, missing, unlisted])
    assert marked[0].reference == "match"
    assert marked[1].reference == f"mismatch: printed {printed.label()}"
    assert marked[2].reference == f"missing: printed {printed.label()}"
    assert marked[3].reference is None
