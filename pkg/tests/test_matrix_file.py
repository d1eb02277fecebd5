#!/usr/bin/env python3
# -*- coding: utf-8 -*-

import pytest

from lib.exceptions import InputFormatError
from lib.matrix_file import load_matrix_file, parse_matrix_file, parse_poly
from models.pfaffian_models import GradedRing

HEADER = "var x y z 1\nvar s 3\n"
MATRIX = "matrix = [[x, y, z, 0], [0, 0, 0], [0, 0], [s]]\n"


@pytest.fixture
def graded():
    return GradedRing.of(x=1, y=1, E=2)


# ==================== Expressions ====================

def test_parse_poly(graded):
    g = graded.gens()
    assert parse_poly(graded, "x^2 - 3*x*y + E") == g["x"] ** 2 - 3 * g["x"] * g["y"] + g["E"]
    assert parse_poly(graded, "(x + y)*(x - y)") == g["x"] ** 2 - g["y"] ** 2


def test_parse_poly_with_named(graded):
    g = graded.gens()
    named = {"Q": g["x"] * g["y"]}
    assert parse_poly(graded, "2*Q + 1", named) == 2 * g["x"] * g["y"] + 1


@pytest.mark.parametrize(
    "text, message",
    [
        ("", "empty expression"),
        ("x / y", "unexpected character"),
        ("x + w", "unknown name"),
        ("x^(-1)", "cannot read"),
        ("x +", "cannot read"),
    ],
)
def test_parse_poly_rejects(graded, text, message):
    with pytest.raises(InputFormatError, match=message):
        parse_poly(graded, text, line=4)


def test_error_carries_line(graded):
    with pytest.raises(InputFormatError) as info:
        parse_poly(graded, "q", line=7)
    assert info.value.line == 7
    assert str(info.value).startswith("line 7:")


# ==================== Files ====================

def test_sample_files(matrices_dir):
    model = load_matrix_file(matrices_dir / "model_jer45.txt")
    assert model.ring.names() == ("x", "y", "z", "u", "v", "w", "s")
    assert model.ring.weight_of("s") == 3
    assert list(model.polys) == ["A", "B", "C", "D", "E", "F"]
    assert model.ideal.leading() == ("u", "v", "w", "s")
    assert model.matrix.entry(4, 5) == model.ring.gen("s")
    assert model.matrix.entry(5, 4) == -model.ring.gen("s")

    tom1 = load_matrix_file(matrices_dir / "tom1.txt")
    g = tom1.ring.gens()
    assert tom1.matrix.entry(1, 3) == g["y"] * g["z"] * (g["y"] - g["z"]) + g["u"]

    jer45 = load_matrix_file(matrices_dir / "jer45_codim4.txt")
    assert jer45.ring.weights() == (1, 1, 1, 3, 3, 3, 5)
    assert "p3" in jer45.polys


def test_matrix_spans_lines():
    doc = parse_matrix_file(HEADER + "matrix = [[x, y, z, 0],\n  [0, 0, 0],  # second row\n  [0, 0],\n  [s]]\n")
    assert doc.matrix.entry(1, 3) == doc.ring.gen("y")
    assert doc.matrix.entry(1, 4) == doc.ring.gen("z")
    assert doc.ideal is None


def test_file_without_matrix():
    doc = parse_matrix_file(HEADER + "ideal = s\n")
    assert doc.matrix is None
    assert doc.ideal.leading() == ("s",)


@pytest.mark.parametrize(
    "text, message",
    [
        ("", "no variables declared"),
        ("poly A = 1\n", "no variables declared"),
        (HEADER + "poly A = x\nvar t 1\n", "declared before polynomials"),
        (HEADER + "poly x = y\n", "already defined"),
        (HEADER + "poly A = x\npoly A = y\n", "already defined"),
        (HEADER + "poly A x\n", "expected 'poly NAME = EXPR'"),
        (HEADER + MATRIX + MATRIX, "matrix defined twice"),
        (HEADER + "matrix = [[x, y, z, 0], [0, 0, 0],\n", "unclosed"),
        (HEADER + "matrix = [[x, y, z], [0, 0, 0], [0, 0], [s]]\n", "4, 3, 2 and 1"),
        (HEADER + "ideal = x*y\n", "no linear variable"),
        (HEADER + "ideal = x - y, y - x\n", "not triangular"),
        (HEADER + "ideals = x\n", "expected 'ideal"),
        (HEADER + "let A = x\n", "unknown statement 'let'"),
        ("var x 1.5\n", "not an integer"),
        ("var x\n", "expected 'var NAME"),
        ("var x x 1\nideal = x\n", "bad variable declarations"),
    ],
)
def test_grammar_errors(text, message):
    with pytest.raises(InputFormatError, match=message):
        parse_matrix_file(text)


def test_line_numbers():
    with pytest.raises(InputFormatError) as info:
        parse_matrix_file(HEADER + "\n# comment\npoly A = x + w\n")
    assert info.value.line == 5


def test_missing_file(tmp_path):
    with pytest.raises(InputFormatError, match="cannot read"):
        load_matrix_file(tmp_path / "absent.txt")
