#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Printed candidate tables - lookup by (P1, P2, n, m) and family counts
"""

import logging
from pathlib import Path
from typing import Dict, List, Optional, Tuple, Union

import yaml

from config import REFERENCE_FILE
from models.candidate_models import RecordedExample, ReferenceEntry
from models.series_models import WeightVector

logger = logging.getLogger(__name__)

Key = Tuple[int, int, int, int]


class ReferenceTables:
    """
    Loads the printed tables and answers lookups.
    Tables are keyed by name ('web', 'further').
    """

    def __init__(self, reference_path: Optional[Union[str, Path]] = None):
        """Load tables from YAML file"""
        if reference_path is None:
            reference_path = REFERENCE_FILE

        with open(reference_path, 'r', encoding='utf-8') as f:
            data = yaml.safe_load(f) or {}

        self.tables: Dict[str, List[ReferenceEntry]] = {}
        for name, rows in (data.get('tables') or {}).items():
            self.tables[name] = [self._entry(row) for row in rows]

        self.examples: List[RecordedExample] = [
            RecordedExample(**{**item, 'weights': WeightVector.of(item['weights'])})
            for item in data.get('examples') or []
        ]

        self._by_key: Dict[Key, ReferenceEntry] = {}
        for rows in self.tables.values():
            for entry in rows:
                self._by_key[entry.key()] = entry
        logger.debug("loaded %d printed candidates from %s", len(self._by_key), reference_path)

    @staticmethod
    def _entry(row: Dict) -> ReferenceEntry:
        return ReferenceEntry(**{
            **row,
            'weights': WeightVector.of(row['weights']),
            'equation_degrees': tuple(row['equation_degrees']),
        })

    def table(self, name: str) -> List[ReferenceEntry]:
        """
        Rows of a named table.

        Raises:
            KeyError: unknown table name
        """
        if name not in self.tables:
            raise KeyError(f"unknown table '{name}' (known: {', '.join(sorted(self.tables))})")
        return self.tables[name]

    def lookup(self, key: Key) -> Optional[ReferenceEntry]:
        return self._by_key.get(key)

    def table_keys(self, name: str) -> List[Key]:
        return [entry.key() for entry in self.table(name)]

    def family_counts(self, name: str = 'web') -> Dict[Tuple[int, int], int]:
        """(n, m) -> number of deformation families, for entries with more than one"""
        return {(e.n, e.m): e.families for e in self.table(name) if e.families > 1}


# Singleton instance
_reference: Optional[ReferenceTables] = None


def get_reference_data() -> ReferenceTables:
    """Get singleton reference tables instance"""
    global _reference
    if _reference is None:
        _reference = ReferenceTables()
    return _reference


__all__ = [
    'ReferenceTables',
    'get_reference_data',
]


if __name__ == "__main__":
    tables = get_reference_data()
    for name, rows in tables.tables.items():
        print(f"{name}: {len(rows)} entries")
        for entry in rows:
            print(f"  {entry.key()} codim {entry.codim}: {entry.label()}")
    print("families:", tables.family_counts())
