#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Rendering of output documents: pretty text, JSON records, TSV and DOT.

JSON carries every integer and rational as a decimal string so that
exact values survive any reader.
"""

import json
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence

from config import SCHEMA_VERSION
from lib.exceptions import InputFormatError
from models.output_models import OutputDocument
from models.series_models import IntPolynomial, WeightVector


# ==================== Values ====================

def exact(value: Any) -> Any:
    """Integers and fractions as decimal strings, recursively"""
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, int):
        return str(value)
    if isinstance(value, Fraction):
        return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"
    if isinstance(value, WeightVector):
        return [str(w) for w in value.weights]
    if isinstance(value, IntPolynomial):
        return {str(e): str(c) for e, c in value.terms()}
    if isinstance(value, dict):
        return {str(k): exact(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [exact(v) for v in value]
    return value


def cell(value: Any) -> str:
    """One table cell: weight multisets in exponent notation"""
    if value is None:
        return ""
    if isinstance(value, bool):
        return "yes" if value else "no"
    if isinstance(value, WeightVector):
        return value.compact()
    if isinstance(value, IntPolynomial):
        return value.pretty()
    if isinstance(value, Fraction):
        return exact(value)
    if isinstance(value, (list, tuple)):
        return ",".join(cell(v) for v in value)
    if isinstance(value, dict):
        return ", ".join(f"{k}={cell(v)}" for k, v in value.items())
    return str(value)


# ==================== Formats ====================

def render_json(document: OutputDocument) -> str:
    payload = {
        "schema_version": SCHEMA_VERSION,
        "command": document.command,
        "records": exact(document.records),
    }
    return json.dumps(payload, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def _columns(records: Sequence[Dict[str, Any]], columns: Optional[Sequence[str]]) -> List[str]:
    if columns:
        return list(columns)
    seen: List[str] = []
    for record in records:
        for key in record:
            if key not in seen:
                seen.append(key)
    return seen


def render_tsv(document: OutputDocument) -> str:
    columns = _columns(document.records, document.columns)
    lines = ["\t".join(columns)]
    for record in document.records:
        lines.append("\t".join(cell(record.get(c)) for c in columns))
    return "\n".join(lines) + "\n"


def render_pretty(document: OutputDocument) -> str:
    """Aligned table when columns are set, key: value blocks otherwise"""
    if not document.records:
        return f"{document.command}: no records\n"

    if document.columns:
        columns = list(document.columns)
        rows = [[cell(record.get(c)) for c in columns] for record in document.records]
        widths = [max(len(c), *(len(r[i]) for r in rows)) for i, c in enumerate(columns)]
        lines = ["  ".join(c.ljust(w) for c, w in zip(columns, widths)).rstrip()]
        lines.append("  ".join("-" * w for w in widths))
        for r in rows:
            lines.append("  ".join(v.ljust(w) for v, w in zip(r, widths)).rstrip())
        return "\n".join(lines) + "\n"

    blocks = []
    for record in document.records:
        width = max(len(k) for k in record)
        block = []
        for key, value in record.items():
            text = cell(value)
            if "\n" in text:
                indent = "\n" + " " * (width + 2)
                text = indent.join(text.splitlines())
            block.append(f"{key.ljust(width)}  {text}")
        blocks.append("\n".join(block))
    return "\n\n".join(blocks) + "\n"


def render_dot(document: OutputDocument) -> str:
    if document.dot is None:
        raise InputFormatError(f"format 'dot' is only available for web, not {document.command}")
    return document.dot


def render(document: OutputDocument) -> str:
    """Render in the document's format"""
    renderers = {
        "pretty": render_pretty,
        "json-records": render_json,
        "tsv": render_tsv,
        "dot": render_dot,
    }
    return renderers[document.format](document)


__all__ = [
    'exact',
    'cell',
    'render_json',
    'render_tsv',
    'render_pretty',
    'render_dot',
    'render',
]
