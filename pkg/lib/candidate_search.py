#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Candidate search over (P1, P2, n, m) with basket {n x 1/3(1,1,1), m x 1/5(1,1,3)}.

Each tuple is assembled and recognised independently. Failed recognitions
are retried with hint weights derived from the basket. Rows come back in
input order whatever the number of workers.
"""

import logging
import re
from concurrent.futures import ThreadPoolExecutor, as_completed
from itertools import product
from typing import Iterable, List, Optional, Sequence, Tuple

from tqdm import tqdm

from config import DEFAULT_SEARCH_WORKERS, HIGH_CODIM
from lib.exceptions import GradedRingError, InputFormatError, RecognitionError
from lib.orbifold_rr import assemble
from lib.recognition import recognize
from lib.reference_tables import ReferenceTables, get_reference_data
from models.candidate_models import EmbeddingCandidate, RecognitionConfig, RowStatus, SearchRow
from models.orbifold_models import Basket, InitialData, standard_basket
from models.series_models import RationalSeries

logger = logging.getLogger(__name__)

Key = Tuple[int, int, int, int]

_RANGE_RE = re.compile(r"^\s*(\d+)\s*(?:\.\.\s*(\d+)\s*)?$")


def parse_range(text: str) -> range:
    """
    'A..B' (inclusive) or 'A'.

    Raises:
        InputFormatError: malformed or decreasing range
    """
    match = _RANGE_RE.match(text or "")
    if not match:
        raise InputFormatError(f"cannot parse range '{text}' (expected A..B or A)")
    low = int(match.group(1))
    high = int(match.group(2)) if match.group(2) is not None else low
    if high < low:
        raise InputFormatError(f"empty range '{text}'")
    return range(low, high + 1)


# ==================== Hints ====================

def retry_hints(basket: Basket) -> List[Tuple[int, ...]]:
    """
    Hint sets tried after a failed greedy pass, in order: for each basket
    type by decreasing index r, first {r} and then {r, c mod r} where c is
    its largest local weight.
    """
    hints: List[Tuple[int, ...]] = []
    for q in sorted(basket.distinct(), key=lambda q: (-q.index, q.weights)):
        r = q.index
        residue = q.weights[-1] % r or r
        for h in ((r,), tuple(sorted((r, residue)))):
            if h not in hints:
                hints.append(h)
    return hints


def _recognize_with_retries(
    basket: Basket,
    series: RationalSeries,
    cfg: RecognitionConfig,
) -> Tuple[EmbeddingCandidate, Tuple[int, ...]]:
    try:
        return recognize(series, cfg, basket), tuple(cfg.hint_weights)
    except RecognitionError as first:
        if cfg.hint_weights:
            raise
        for hints in retry_hints(basket):
            try:
                candidate = recognize(series, cfg.with_hints(hints), basket)
            except RecognitionError as e:
                logger.debug("hints %s failed: %s", hints, e.reason)
                continue
            logger.info("recognised with hints %s after: %s", hints, first.reason)
            return candidate, hints
        raise first


# ==================== Rows ====================

def evaluate_row(key: Key, cfg: Optional[RecognitionConfig] = None) -> SearchRow:
    """Assemble and recognise one (P1, P2, n, m); failures are returned as data"""
    cfg = cfg or RecognitionConfig()
    p1, p2, n, m = key
    if n == 0 and m == 0:
        return SearchRow(P1=p1, P2=p2, n=n, m=m, status=RowStatus.NON_ARISING, reason="empty basket does not arise")

    basket = standard_basket(n, m)
    try:
        series = assemble(InitialData.of(p1, p2), basket)
        candidate, hints = _recognize_with_retries(basket, series, cfg)
    except RecognitionError as e:
        high = e.reason == RecognitionError.BUDGET or e.weight_count >= HIGH_CODIM + 4
        return SearchRow(
            P1=p1, P2=p2, n=n, m=m,
            status=RowStatus.HIGH_CODIM if high else RowStatus.FAILED,
            reason=str(e),
        )
    except GradedRingError as e:
        return SearchRow(P1=p1, P2=p2, n=n, m=m, status=RowStatus.FAILED, reason=str(e))

    status = RowStatus.HIGH_CODIM if candidate.codim_estimate >= HIGH_CODIM else RowStatus.OK
    return SearchRow(P1=p1, P2=p2, n=n, m=m, status=status, candidate=candidate, hints_used=hints)


def search_keys(
    keys: Sequence[Key],
    cfg: Optional[RecognitionConfig] = None,
    workers: int = DEFAULT_SEARCH_WORKERS,
    progress: bool = False,
) -> List[SearchRow]:
    """
    Evaluate tuples, optionally on a thread pool.

    Args:
        keys: (P1, P2, n, m) tuples
        cfg: recognition settings shared by every row
        workers: thread count; 1 runs sequentially
        progress: show a tqdm bar on stderr

    Returns:
        Rows in the order of keys
    """
    cfg = cfg or RecognitionConfig()
    rows: List[Optional[SearchRow]] = [None] * len(keys)

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as executor:
            futures = {executor.submit(evaluate_row, key, cfg): i for i, key in enumerate(keys)}
            pbar = tqdm(as_completed(futures), total=len(keys), desc="Searching", unit="row", disable=not progress)
            for future in pbar:
                i = futures[future]
                rows[i] = future.result()
                if rows[i].status == RowStatus.FAILED:
                    tqdm.write(f"  ✗ {keys[i]}: {rows[i].reason}")
    else:
        pbar = tqdm(list(enumerate(keys)), desc="Searching", unit="row", disable=not progress)
        for i, key in pbar:
            pbar.set_postfix(row=str(key))
            rows[i] = evaluate_row(key, cfg)
            if rows[i].status == RowStatus.FAILED:
                tqdm.write(f"  ✗ {key}: {rows[i].reason}")

    done = [row for row in rows if row is not None]
    counts = {status: sum(1 for row in done if row.status == status) for status in RowStatus}
    logger.info("search: %s", ", ".join(f"{s.value}={c}" for s, c in counts.items() if c))
    return done


def search(
    P1_range: Iterable[int],
    P2_range: Iterable[int],
    n_range: Iterable[int],
    m_range: Iterable[int],
    cfg: Optional[RecognitionConfig] = None,
    workers: int = DEFAULT_SEARCH_WORKERS,
    progress: bool = False,
) -> List[SearchRow]:
    """All tuples of the product of the four ranges, P1 slowest, m fastest"""
    keys = list(product(P1_range, P2_range, n_range, m_range))
    return search_keys(keys, cfg, workers, progress)


# ==================== Printed tables ====================

def compare_with_reference(rows: Sequence[SearchRow], reference: Optional[ReferenceTables] = None) -> List[SearchRow]:
    """
    Mark each row against the printed entry with the same key.

    reference is 'match', 'mismatch: printed ...', 'missing: printed ...'
    (printed entry, no recognised candidate) or None when nothing is printed.
    """
    reference = reference or get_reference_data()
    marked: List[SearchRow] = []
    for row in rows:
        entry = reference.lookup(row.key())
        verdict: Optional[str] = None
        if entry is not None:
            candidate = row.candidate
            if candidate is None:
                verdict = f"missing: printed {entry.label()}"
            elif candidate.weights == entry.weights and tuple(candidate.equation_degrees) == entry.equation_degrees:
                verdict = "match"
            else:
                verdict = f"mismatch: printed {entry.label()}"
                logger.warning("%s: recognised %s, printed %s", row.key(), candidate.label(), entry.label())
        marked.append(row.model_copy(update={"reference": verdict}))
    return marked


def search_table(
    name: str,
    cfg: Optional[RecognitionConfig] = None,
    workers: int = DEFAULT_SEARCH_WORKERS,
    progress: bool = False,
    reference: Optional[ReferenceTables] = None,
) -> List[SearchRow]:
    """Run the tuples of a printed table and compare"""
    reference = reference or get_reference_data()
    rows = search_keys(reference.table_keys(name), cfg, workers, progress)
    return compare_with_reference(rows, reference)


__all__ = [
    'parse_range',
    'retry_hints',
    'evaluate_row',
    'search_keys',
    'search',
    'compare_with_reference',
    'search_table',
]
