#!/usr/bin/env python3
# -*- coding: utf-8 -*-

import json
from fractions import Fraction

import pytest

from lib.exceptions import InputFormatError
from lib.output_format import cell, exact, render
from models.output_models import OutputDocument
from models.series_models import IntPolynomial, WeightVector

QUINTIC = IntPolynomial.from_terms({0: 1, 5: -1})


def _document(fmt, **kwargs):
    records = [
        {"label": "X_5 in P(1^5)", "weights": WeightVector.of([1] * 5), "degree_A3": Fraction(5), "numerator": QUINTIC},
        {"label": "X_{6^6,8^3} in P(1^3,3^4,5)", "weights": WeightVector.of([1, 1, 1, 3, 3, 3, 3, 5]),
         "degree_A3": Fraction(26, 15), "numerator": None},
    ]
    return OutputDocument(command="demo", format=fmt, records=records, **kwargs)


def test_exact_values():
    assert exact(7) == "7"
    assert exact(Fraction(26, 15)) == "26/15"
    assert exact(Fraction(4, 2)) == "2"
    assert exact(True) is True
    assert exact(QUINTIC) == {"0": "1", "5": "-1"}
    assert exact({3: [1, Fraction(1, 2)]}) == {"3": ["1", "1/2"]}


def test_cells():
    assert cell(WeightVector.of([1, 1, 1, 3, 3, 3, 3, 5])) == "1^3,3^4,5"
    assert cell(QUINTIC) == "1 - t^5"
    assert cell((6, 6, 8)) == "6,6,8"
    assert cell(None) == ""
    assert cell(False) == "no"


def test_json_records():
    payload = json.loads(render(_document("json-records")))
    assert payload["schema_version"] == "1"
    assert payload["command"] == "demo"
    assert payload["records"][1]["degree_A3"] == "26/15"
    assert payload["records"][0]["weights"] == ["1"] * 5
    assert payload["records"][1]["numerator"] is None


def test_json_keys_sorted():
    text = render(_document("json-records"))
    assert text.index('"command"') < text.index('"records"') < text.index('"schema_version"')


def test_tsv():
    lines = render(_document("tsv", columns=("label", "weights", "degree_A3"))).splitlines()
    assert lines[0] == "label\tweights\tdegree_A3"
    assert lines[2] == "X_{6^6,8^3} in P(1^3,3^4,5)\t1^3,3^4,5\t26/15"


def test_tsv_columns_default_to_record_keys():
    header = render(_document("tsv")).splitlines()[0]
    assert header.split("\t") == ["label", "weights", "degree_A3", "numerator"]


def test_pretty_table_and_blocks():
    table = render(_document("pretty", columns=("label", "degree_A3"))).splitlines()
    assert table[0].split() == ["label", "degree_A3"]
    assert set(table[1].replace(" ", "")) == {"-"}
    assert table[3].endswith("26/15")

    blocks = render(_document("pretty"))
    assert "numerator  1 - t^5" in blocks
    assert "\n\n" in blocks
    assert render(OutputDocument(command="demo")) == "demo: no records\n"


def test_dot_only_for_web():
    with pytest.raises(InputFormatError, match="demo"):
        render(_document("dot"))
    assert render(OutputDocument(command="web", format="dot", dot="digraph web {\n}\n")) == "digraph web {\n}\n"
