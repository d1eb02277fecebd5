#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Matrix file reader.

    # comment
    var x y z 1            names then weight
    var s 3
    poly A = u*x + v^2     named polynomial, usable later by name
    matrix = [[z, y, A, D],
              [x, B, E],
              [C, F],
              [s]]         strict upper triangle, may span lines
    ideal = u, v, w, s     generators, each solvable for one variable

Expressions use integers, declared names, + - * ^ and parentheses.
All variables are declared before the first poly, matrix or ideal line.
"""

import logging
import re
from pathlib import Path
from typing import Dict, List, Mapping, Optional, Tuple, Union

from pydantic import ValidationError
from sympy import Symbol
from sympy.parsing.sympy_parser import convert_xor, parse_expr, standard_transformations
from sympy.polys.rings import PolyElement

from lib.exceptions import InputFormatError
from lib.pfaffian_calculus import triangular_ideal
from models.pfaffian_models import GradedRing, MatrixDocument, SkewMatrix5, TriangularIdeal

logger = logging.getLogger(__name__)

_IDENT_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
_EXPR_CHARS_RE = re.compile(r"^[A-Za-z0-9_\s+\-*^()]*$")
_ROW_RE = re.compile(r"\[([^\[\]]*)\]")
_TRANSFORMS = standard_transformations + (convert_xor,)


def parse_poly(
    graded: GradedRing,
    text: str,
    named: Optional[Mapping[str, PolyElement]] = None,
    line: Optional[int] = None,
) -> PolyElement:
    """
    Parse an expression into the ring of graded.

    Args:
        graded: ring whose variable names are recognised
        text: expression text
        named: previously defined polynomials usable by name
        line: line number for error messages

    Raises:
        InputFormatError: bad characters, unknown names, non-polynomial result
    """
    named = dict(named or {})
    text = (text or "").strip()
    if not text:
        raise InputFormatError("empty expression", line)
    if not _EXPR_CHARS_RE.match(text):
        raise InputFormatError(f"unexpected character in '{text}'", line)

    known = set(graded.names()) | set(named)
    unknown = sorted({tok for tok in _IDENT_RE.findall(text) if tok not in known})
    if unknown:
        raise InputFormatError(f"unknown name(s) {', '.join(unknown)} in '{text}'", line)

    # Declared names shadow sympy's own (E, I, S, ...)
    local_dict = {name: Symbol(name) for name in graded.names()}
    for name, poly in named.items():
        local_dict[name] = poly.as_expr()
    try:
        expr = parse_expr(text, local_dict=local_dict, transformations=_TRANSFORMS)
        return graded.poly_ring().from_expr(expr)
    except Exception as e:
        raise InputFormatError(f"cannot read '{text}' as an integer polynomial ({e})", line) from e


def _balance(text: str) -> int:
    return text.count("[") - text.count("]")


def _logical_lines(text: str) -> List[Tuple[int, str]]:
    """(first line number, statement) with comments removed and matrix continuations joined"""
    statements: List[Tuple[int, str]] = []
    pending: Optional[Tuple[int, str]] = None
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if pending is not None:
            start, body = pending
            body = f"{body} {line}"
            if _balance(body) <= 0:
                statements.append((start, body))
                pending = None
            else:
                pending = (start, body)
            continue
        if not line:
            continue
        if _balance(line) > 0:
            pending = (number, line)
        else:
            statements.append((number, line))
    if pending is not None:
        raise InputFormatError("unclosed '[' in matrix", pending[0])
    return statements


def _parse_matrix(graded: GradedRing, body: str, polys: Mapping[str, PolyElement], line: int) -> SkewMatrix5:
    body = body.strip()
    if not (body.startswith("[") and body.endswith("]")):
        raise InputFormatError("matrix must be a bracketed list of rows", line)
    inner = body[1:-1]
    rows_text = _ROW_RE.findall(inner)
    if _ROW_RE.sub("", inner).replace(",", "").strip():
        raise InputFormatError("unexpected text between matrix rows", line)
    rows = [[parse_poly(graded, cell, polys, line) for cell in row.split(",")] for row in rows_text]
    try:
        return SkewMatrix5.from_rows(graded, rows)
    except ValueError as e:
        raise InputFormatError(str(e), line) from e


def parse_matrix_file(text: str) -> MatrixDocument:
    """
    Read variables, named polynomials, the matrix and the ideal.

    Raises:
        InputFormatError: any grammar violation, with its line number
    """
    declared: List[Tuple[str, int]] = []
    graded: Optional[GradedRing] = None
    polys: Dict[str, PolyElement] = {}
    matrix: Optional[SkewMatrix5] = None
    ideal: Optional[TriangularIdeal] = None

    def ring_for(line: Optional[int]) -> GradedRing:
        nonlocal graded
        if graded is None:
            if not declared:
                raise InputFormatError("no variables declared before first use", line)
            try:
                graded = GradedRing.from_pairs(declared)
            except ValidationError as e:
                raise InputFormatError(f"bad variable declarations: {e.errors()[0]['msg']}", line) from e
        return graded

    for line, statement in _logical_lines(text):
        keyword = statement.split(None, 1)[0]

        if keyword == "var":
            if graded is not None:
                raise InputFormatError("variables must be declared before polynomials", line)
            tokens = statement.split()[1:]
            if len(tokens) < 2:
                raise InputFormatError("expected 'var NAME [NAME ...] WEIGHT'", line)
            try:
                weight = int(tokens[-1])
            except ValueError:
                raise InputFormatError(f"weight '{tokens[-1]}' is not an integer", line) from None
            declared.extend((name, weight) for name in tokens[:-1])

        elif keyword == "poly":
            head, sep, expr = statement[len("poly"):].partition("=")
            name = head.strip()
            if not sep or not _IDENT_RE.fullmatch(name):
                raise InputFormatError("expected 'poly NAME = EXPR'", line)
            R = ring_for(line)
            if name in R.names() or name in polys:
                raise InputFormatError(f"name '{name}' already defined", line)
            polys[name] = parse_poly(R, expr, polys, line)

        elif keyword.startswith("matrix"):
            _, sep, body = statement.partition("=")
            if not sep or statement[:statement.index("=")].strip() != "matrix":
                raise InputFormatError("expected 'matrix = [[...], [...], [...], [...]]'", line)
            if matrix is not None:
                raise InputFormatError("matrix defined twice", line)
            matrix = _parse_matrix(ring_for(line), body, polys, line)

        elif keyword.startswith("ideal"):
            _, sep, body = statement.partition("=")
            if not sep or statement[:statement.index("=")].strip() != "ideal":
                raise InputFormatError("expected 'ideal = GEN, GEN, ...'", line)
            if ideal is not None:
                raise InputFormatError("ideal defined twice", line)
            R = ring_for(line)
            generators = [parse_poly(R, g, polys, line) for g in body.split(",")]
            try:
                ideal = triangular_ideal(R, generators)
            except InputFormatError as e:
                raise InputFormatError(str(e), line) from e

        else:
            raise InputFormatError(f"unknown statement '{keyword}'", line)

    if not declared:
        raise InputFormatError("no variables declared")
    document = MatrixDocument(ring=ring_for(None), polys=polys, matrix=matrix, ideal=ideal)
    logger.debug(
        "matrix file: %d variables, %d polys, matrix=%s, ideal=%s",
        len(document.ring.variables), len(polys), matrix is not None, ideal is not None,
    )
    return document


def load_matrix_file(path: Union[str, Path]) -> MatrixDocument:
    """
    Read a matrix file from disk.

    Raises:
        InputFormatError: unreadable file or grammar violation
    """
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise InputFormatError(f"cannot read {path}: {e.strerror}") from e
    return parse_matrix_file(text)


__all__ = [
    'parse_poly',
    'parse_matrix_file',
    'load_matrix_file',
]
