#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Graded rings toolkit: Hilbert series of Calabi-Yau 3-folds from
orbifold Riemann-Roch, embedding recognition, Pfaffian formats and the
node and Euler characteristic bookkeeping of unprojection.

Usage:
    python graded_rings.py rr --p1 3 --p2 6 --basket "4x1/3(1,1,1),1x1/5(1,1,3)" --expand 5
    python graded_rings.py registry
    python graded_rings.py recognize --p1 6 --p2 21 --basket "2x1/3(1,1,1)" --hints 3,3
    python graded_rings.py --format tsv search --p1 3 --p2 6 --n 0..6 --m 0..3
    python graded_rings.py search --table further
    python graded_rings.py pfaffian --degrees "1,1,2,2;1,2,2;2,2;3"
    python graded_rings.py format --file data/matrices/model_jer45.txt --check all
    python graded_rings.py format --file data/matrices/model_jer45.txt --unprojection "A,B,C;D,E,F;x,y,z;s"
    python graded_rings.py nodes config codim4-tom1
    python graded_rings.py unproject --ambient 1,1,1,1,1,1 --equations 3,3 --step 1,1,1:3 --step 1,1,1:3
    python graded_rings.py chi --ledger model-jer45 --ledger model-tom1
    python graded_rings.py --format dot web

Exit codes: 0 success, 1 domain error, 2 usage or parse error.
"""

import sys
import argparse
import logging
from itertools import combinations
from typing import Any, Dict, List, Optional, Sequence, Tuple

from pydantic import ValidationError

from config import DEFAULT_EXPANSION_ORDER, DEFAULT_MAX_WEIGHTS, DEFAULT_SEARCH_WORKERS, OUTPUT_FORMATS, TSV_COLUMNS
from lib.candidate_search import parse_range, search, search_table
from lib.exceptions import GradedRingError, InputFormatError
from lib.geometry_audit import (
    build_ledger,
    determinantal_length,
    determinantal_numerator,
    evaluate_configuration,
    get_configurations,
    ledger_difference,
    standard_choice_nodes,
    unprojection_route,
    weighted_bezout,
)
from lib.matrix_file import load_matrix_file, parse_poly
from lib.orbifold_rr import assemble, basket_degree, get_registry, list_contributions, orbifold_degree, parse_basket
from lib.output_format import render
from lib.pfaffian_calculus import (
    cancelled_terms,
    format_verdict,
    maximal_pfaffians,
    mount_unprojection_matrix,
    parse_degree_matrix,
    pfaffian_numerator,
    solve_entry_weights,
    unprojection_equations,
    verify_unprojection,
)
from lib.recognition import recognize
from lib.reference_tables import get_reference_data
from lib.series_core import equals, expand, numerator_over
from lib.web_graph import build_web, web_from_reference
from models.candidate_models import RecognitionConfig, SearchRow
from models.geometry_models import ConifoldLedger, DeterminantalData, NodeLocus, WeightedPlane
from models.orbifold_models import Basket, InitialData
from models.output_models import OutputDocument
from models.pfaffian_models import MatrixDocument
from models.series_models import WeightVector

logger = logging.getLogger(__name__)


# ==================== Argument parsing helpers ====================

def _int_list(text: str, what: str) -> Tuple[int, ...]:
    """'3,3' -> (3, 3)"""
    try:
        values = tuple(int(v) for v in text.split(",") if v.strip())
    except ValueError:
        raise InputFormatError(f"cannot parse {what} '{text}' (expected comma-separated integers)") from None
    if not values:
        raise InputFormatError(f"empty {what}")
    return values


def _plane(text: str) -> WeightedPlane:
    weights = _int_list(text, "plane weights")
    if len(weights) != 3:
        raise InputFormatError(f"a weighted plane needs three weights, got '{text}'")
    return WeightedPlane(weights=weights)


def _pairs(text: str) -> Tuple[Tuple[int, int], ...]:
    """'3x3,3x5,5x3' -> ((3, 3), (3, 5), (5, 3))"""
    pairs = []
    for item in text.split(","):
        d, sep, e = item.strip().partition("x")
        if not sep or not d.isdigit() or not e.isdigit():
            raise InputFormatError(f"cannot parse curve degrees '{item}' (expected DxE)")
        pairs.append((int(d), int(e)))
    return tuple(pairs)


def _locus(text: str) -> NodeLocus:
    """'E:1,1,3:3x3,3x5,5x3'"""
    parts = text.split(":")
    if len(parts) != 3 or not parts[0]:
        raise InputFormatError(f"cannot parse locus '{text}' (expected NAME:W1,W2,W3:DxE,...)")
    return NodeLocus(name=parts[0], plane=_plane(parts[1]), pairs=_pairs(parts[2]))


def _step(text: str) -> Tuple[WeightedPlane, int]:
    """'1,1,3:5' -> (P(1,1,3), 5)"""
    plane, sep, s = text.partition(":")
    if not sep or not s.strip().isdigit():
        raise InputFormatError(f"cannot parse unprojection step '{text}' (expected W1,W2,W3:S)")
    return _plane(plane), int(s)


def _initial(args: argparse.Namespace) -> Tuple[InitialData, Basket]:
    return InitialData.of(args.p1, args.p2), parse_basket(args.basket)


def _recognition_config(args: argparse.Namespace) -> RecognitionConfig:
    hints = _int_list(args.hints, "hints") if args.hints else ()
    return RecognitionConfig(expansion_order=args.order, max_weights=args.max_weights, hint_weights=hints)


def _degrees(values: Sequence[int]) -> Optional[WeightVector]:
    return WeightVector.of(values) if values else None


# ==================== Commands ====================

def cmd_rr(args: argparse.Namespace) -> OutputDocument:
    data, basket = _initial(args)
    series = assemble(data, basket)
    record: Dict[str, Any] = {
        "P1": data.P1,
        "P2": data.P2,
        "basket": basket.to_text(),
        "basket_degree": basket_degree(basket),
        "series": series.pretty(),
        "numerator": series.numerator,
        "denominator": series.denominator,
    }
    if args.expand is not None:
        record["expansion"] = list(expand(series, args.expand).coefficients)
    return OutputDocument(command="rr", records=[record])


def cmd_registry(args: argparse.Namespace) -> OutputDocument:
    registry = get_registry()
    records = [
        {
            "type": q.label,
            "term": term.pretty(),
            "degree": orbifold_degree(term),
            "note": registry.note(q),
        }
        for q, term in list_contributions(registry)
    ]
    return OutputDocument(command="registry", records=records)


def cmd_recognize(args: argparse.Namespace) -> OutputDocument:
    data, basket = _initial(args)
    series = assemble(data, basket)
    candidate = recognize(series, _recognition_config(args), basket)
    for advisory in candidate.advisories:
        print(f"  ! {advisory}", file=sys.stderr)
    record = {
        "label": candidate.label(),
        "weights": candidate.weights,
        "numerator": candidate.numerator,
        "k": candidate.k,
        "codim": candidate.codim_estimate,
        "equation_degrees": _degrees(candidate.equation_degrees),
        "syzygy_degrees": _degrees(candidate.syzygy_degrees),
        "degree_A3": candidate.degree_A3,
        "sign_changes": candidate.sign_changes,
        "shape_solutions": candidate.shape_solutions,
        "hints": list(candidate.hints),
        "advisories": list(candidate.advisories),
        "round_trip": equals(candidate.series(), series),
    }
    return OutputDocument(command="recognize", records=[record])


def _search_record(row: SearchRow) -> Dict[str, Any]:
    candidate = row.candidate
    return {
        "P1": row.P1,
        "P2": row.P2,
        "n": row.n,
        "m": row.m,
        "weights": candidate.weights if candidate else None,
        "equation_degrees": _degrees(candidate.equation_degrees) if candidate else None,
        "codim": row.codim,
        "status": row.status.value,
        "hints": list(row.hints_used),
        "reference": row.reference,
        "reason": row.reason,
    }


def cmd_search(args: argparse.Namespace) -> OutputDocument:
    cfg = RecognitionConfig(expansion_order=args.order, max_weights=args.max_weights)
    progress = not args.quiet
    if args.table:
        rows = search_table(args.table, cfg, args.workers, progress)
    else:
        missing = [flag for flag in ("p1", "p2", "n", "m") if getattr(args, flag) is None]
        if missing:
            raise InputFormatError(f"search needs --table or all of --p1 --p2 --n --m (missing {', '.join('--' + f for f in missing)})")
        rows = search(
            parse_range(args.p1), parse_range(args.p2), parse_range(args.n), parse_range(args.m),
            cfg, args.workers, progress,
        )

    ok = sum(1 for row in rows if row.candidate is not None)
    print(f"✓ {ok}/{len(rows)} rows recognised", file=sys.stderr)
    mismatched = [row for row in rows if row.reference and row.reference != "match"]
    for row in mismatched:
        print(f"✗ {row.key()}: {row.reference}", file=sys.stderr)

    columns = TSV_COLUMNS if args.format == "tsv" else TSV_COLUMNS + ("hints", "reference")
    return OutputDocument(command="search", records=[_search_record(row) for row in rows], columns=columns)


def cmd_pfaffian(args: argparse.Namespace) -> OutputDocument:
    degrees = parse_degree_matrix(args.degrees)
    weights = solve_entry_weights(degrees)
    d, k = weights.pfaffian_degrees, weights.k
    record = {
        "degrees": degrees.to_text(),
        "q": list(weights.q),
        "pfaffian_degrees": list(d),
        "syzygy_degrees": list(weights.syzygy_degrees),
        "k": k,
        "numerator": pfaffian_numerator(d, k),
        "cancelled": cancelled_terms(d, k),
    }
    return OutputDocument(command="pfaffian", records=[record])


def _unprojection_record(document: MatrixDocument, text: str) -> Dict[str, Any]:
    """'A,B,C;D,E,F;x,y,z;s' names the rows f and g, the variables x_i and s"""
    groups = [part.split(",") for part in text.split(";")]
    if [len(g) for g in groups] != [3, 3, 3, 1]:
        raise InputFormatError(f"unprojection needs 'A,B,C;D,E,F;x1,x2,x3;s', got '{text}'")
    f_row, g_row, xs, (s,) = (
        [parse_poly(document.ring, name, document.polys) for name in group] for group in groups
    )
    ring = document.ring
    holds = verify_unprojection(ring, f_row, g_row, xs, s)
    print(f"{'✓' if holds else '✗'} unprojection relations are Pfaffians", file=sys.stderr)
    return {
        "relations": [ring.format(rel) for rel in unprojection_equations(f_row, g_row, xs, s)],
        "matrix": mount_unprojection_matrix(ring, f_row, g_row, xs, s).pretty(),
        "holds": holds,
    }


def cmd_format(args: argparse.Namespace) -> OutputDocument:
    document = load_matrix_file(args.file)
    if args.unprojection:
        return OutputDocument(command="format", records=[_unprojection_record(document, args.unprojection)])
    if document.matrix is None:
        raise InputFormatError(f"{args.file}: no matrix")
    if document.ideal is None:
        raise InputFormatError(f"{args.file}: no ideal")
    M, I, ring = document.matrix, document.ideal, document.ring

    degrees = M.degree_matrix()
    summary: Dict[str, Any] = {
        "matrix": M.pretty(),
        "ideal": I.pretty(),
        "degree_matrix": degrees.to_text() if degrees is not None else None,
    }
    if degrees is not None:
        try:
            weights = solve_entry_weights(degrees)
            summary["pfaffian_degrees"] = list(weights.pfaffian_degrees)
            summary["k"] = weights.k
        except GradedRingError as e:
            logger.info("entry weights not derivable: %s", e)
            degrees = None
    summary["pfaffians"] = "\n".join(ring.format(p) for p in maximal_pfaffians(M))

    if args.i is not None:
        if args.check == "jerry" and args.j is None:
            raise InputFormatError("Jer_ij needs --j")
        indices = [(args.i, args.j)]
    elif args.j is not None:
        raise InputFormatError("--j needs --i")
    else:
        indices = []
        if args.check in ("tom", "all"):
            indices.extend((i, None) for i in range(1, 6))
        if args.check in ("jerry", "all"):
            indices.extend(combinations(range(1, 6), 2))
    try:
        verdicts = [format_verdict(M, I, i, j, degrees) for i, j in indices]
    except ValueError as e:
        raise InputFormatError(str(e)) from None

    records: List[Dict[str, Any]] = [summary]
    for verdict in verdicts:
        mark = "✓" if verdict.holds else "✗"
        print(f"{mark} {verdict.label()}", file=sys.stderr)
        records.append({
            "format": verdict.label(),
            "holds": verdict.holds,
            "offending": [f"m{a}{b}" for a, b in verdict.offending],
            "advisories": list(verdict.advisories),
        })
    return OutputDocument(command="format", records=records)


def cmd_nodes(args: argparse.Namespace) -> OutputDocument:
    if args.nodes_command == "bezout":
        d, e = _pair(args.degrees)
        plane = _plane(args.plane)
        record = {"degrees": [d, e], "plane": str(plane), "count": weighted_bezout(d, e, plane)}
        return OutputDocument(command="nodes bezout", records=[record])

    if args.nodes_command == "determinantal":
        dd = DeterminantalData(
            row_degrees=_int_list(args.rows, "row degrees"),
            col_degrees=_int_list(args.cols, "column degrees"),
            plane=_plane(args.plane),
        )
        record = {
            "row_degrees": list(dd.row_degrees),
            "col_degrees": list(dd.col_degrees),
            "plane": str(dd.plane),
            "numerator": determinantal_numerator(dd),
            "length": determinantal_length(dd),
        }
        return OutputDocument(command="nodes determinantal", records=[record])

    if args.nodes_command == "standard-choice":
        report = standard_choice_nodes([_locus(text) for text in args.locus], args.shared)
        record = {
            "counts": report.counts,
            "pieces": {name: list(p) for name, p in report.pieces.items()},
            "shared": report.shared,
            "total": report.total,
        }
        return OutputDocument(command="nodes standard-choice", records=[record])

    registry = get_configurations()
    names = [args.name] if args.name else registry.names()
    records = []
    for name in names:
        result = evaluate_configuration(registry.configuration(name))
        if not result.oracles_agree:
            print(f"✗ {name}: node oracles disagree", file=sys.stderr)
        records.append({
            "name": result.name,
            "description": result.description,
            "counts": result.nodes.counts,
            "shared": result.nodes.shared,
            "total": result.nodes.total,
            "determinantal": result.determinantal,
            "oracles_agree": result.oracles_agree,
            "remaining": result.remaining,
            "chi_resolved": result.chi_resolved,
        })
    return OutputDocument(command="nodes config", records=records)


def _pair(text: str) -> Tuple[int, int]:
    values = _int_list(text, "curve degrees")
    if len(values) != 2:
        raise InputFormatError(f"expected two curve degrees, got '{text}'")
    return values


def cmd_unproject(args: argparse.Namespace) -> OutputDocument:
    ambient = WeightVector.of(_int_list(args.ambient, "ambient weights"))
    equations = _int_list(args.equations, "equation degrees")
    steps = [_step(text) for text in args.step or []]
    series = unprojection_route(ambient, equations, steps)
    weights = ambient.weights + tuple(s for _, s in steps)
    record: Dict[str, Any] = {
        "series": series.pretty(),
        "weights": WeightVector.of(weights),
        "numerator": numerator_over(series, weights),
    }
    if args.expand is not None:
        record["expansion"] = list(expand(series, args.expand).coefficients)
    if args.p1 is not None and args.p2 is not None:
        data, basket = _initial(args)
        matches = equals(series, assemble(data, basket))
        print(f"{'✓' if matches else '✗'} route {'equals' if matches else 'differs from'} the assembled series",
              file=sys.stderr)
        record["matches_assembled"] = matches
    return OutputDocument(command="unproject", records=[record])


def _ledger_record(ledger: ConifoldLedger) -> Dict[str, Any]:
    steps = []
    for step in ledger.steps:
        steps.append(f"{step.operation.value} {step.nodes}" if step.nodes else step.operation.value)
    return {"ledger": ledger.label, "start": ledger.chi_smooth, "steps": steps, "chi": ledger.chi}


def cmd_chi(args: argparse.Namespace) -> OutputDocument:
    if args.ledger:
        registry = get_configurations()
        ledgers = [registry.ledger(name) for name in args.ledger]
    else:
        if args.start is None:
            raise InputFormatError("chi needs --ledger or --start")
        steps: List[List[Any]] = []
        if args.resolve:
            steps.append(["resolve_nodes", args.resolve])
        steps.extend([["crepant_blowup_third"]] * args.blowup_third)
        steps.extend([["contract_plane"]] * args.contract)
        ledgers = [build_ledger(args.start, steps, label="custom")]

    records = [_ledger_record(ledger) for ledger in ledgers]
    if len(ledgers) == 2:
        records.append({"difference": ledger_difference(ledgers[0], ledgers[1])})
    return OutputDocument(command="chi", records=records)


def cmd_web(args: argparse.Namespace) -> OutputDocument:
    reference = get_reference_data()
    if args.printed:
        graph = web_from_reference(reference.table("web"))
    else:
        rows = search_table("web", workers=args.workers, progress=not args.quiet, reference=reference)
        graph = build_web(rows, reference.family_counts("web"))

    mark = "✓" if graph.connected else "✗"
    print(f"{mark} {len(graph.nodes)} nodes, {len(graph.edges)} edges, "
          f"{'connected' if graph.connected else 'not connected'}", file=sys.stderr)

    if args.format == "json-records":
        return OutputDocument(command="web", records=[graph.to_records()])

    records = []
    for node in graph.nodes:
        targets = [f"({e.target[0]},{e.target[1]})" for e in graph.edges if e.source == node.key()]
        records.append({"n": node.n, "m": node.m, "codim": node.codim, "families": node.families,
                        "projects_to": targets})
    return OutputDocument(command="web", records=records,
                          columns=("n", "m", "codim", "families", "projects_to"), dot=graph.to_dot())


COMMANDS = {
    "rr": cmd_rr,
    "registry": cmd_registry,
    "recognize": cmd_recognize,
    "search": cmd_search,
    "pfaffian": cmd_pfaffian,
    "format": cmd_format,
    "nodes": cmd_nodes,
    "unproject": cmd_unproject,
    "chi": cmd_chi,
    "web": cmd_web,
}


# ==================== Parser ====================

def _add_series_flags(parser: argparse.ArgumentParser, required: bool = True) -> None:
    parser.add_argument("--p1", type=int, required=required, help="P1 = h^0(X, A)")
    parser.add_argument("--p2", type=int, required=required, help="P2 = h^0(X, 2A)")
    parser.add_argument("--basket", default="", help='Basket, e.g. "4x1/3(1,1,1),1x1/5(1,1,3)"')


def _add_recognition_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--max-weights", type=int, default=DEFAULT_MAX_WEIGHTS,
                        help=f"Weight budget (default: {DEFAULT_MAX_WEIGHTS})")
    parser.add_argument("--order", type=int, default=DEFAULT_EXPANSION_ORDER,
                        help=f"Expansion order (default: {DEFAULT_EXPANSION_ORDER})")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=OUTPUT_FORMATS, default=argparse.SUPPRESS,
                        help="Output format (default: pretty)")
    common.add_argument("-v", "--verbose", action="count", default=argparse.SUPPRESS,
                        help="-v for INFO, -vv for DEBUG")

    parser = argparse.ArgumentParser(
        description="Hilbert series and graded ring constructions for Calabi-Yau 3-folds",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
    python graded_rings.py rr --p1 3 --p2 6 --basket "4x1/3(1,1,1),1x1/5(1,1,3)" --expand 5
    python graded_rings.py recognize --p1 3 --p2 6 --basket "4x1/3(1,1,1),1x1/5(1,1,3)"
    python graded_rings.py search --p1 3 --p2 6 --n 0..6 --m 0..3 --format tsv
    python graded_rings.py format --file data/matrices/tom1.txt --check tom
        """
    )
    parser.add_argument("--format", choices=OUTPUT_FORMATS, default="pretty", help="Output format (default: pretty)")
    parser.add_argument("-v", "--verbose", action="count", default=0, help="-v for INFO, -vv for DEBUG")
    sub = parser.add_subparsers(dest="command", required=True)

    rr = sub.add_parser("rr", parents=[common], help="Assemble a Hilbert series")
    _add_series_flags(rr)
    rr.add_argument("--expand", type=int, help="Print coefficients of t^0 .. t^N")

    sub.add_parser("registry", parents=[common], help="List the registered singularity contributions")

    rec = sub.add_parser("recognize", parents=[common], help="Guess the embedding of a Hilbert series")
    _add_series_flags(rec)
    _add_recognition_flags(rec)
    rec.add_argument("--hints", default="", help="Weights cleared first, e.g. 3,3")

    srch = sub.add_parser("search", parents=[common], help="Recognise every tuple of a range product")
    srch.add_argument("--p1", help="Range A..B")
    srch.add_argument("--p2", help="Range A..B")
    srch.add_argument("--n", help="Range of 1/3(1,1,1) counts")
    srch.add_argument("--m", help="Range of 1/5(1,1,3) counts")
    srch.add_argument("--table", choices=("web", "further"), help="Run the tuples of a printed table instead")
    srch.add_argument("--workers", type=int, default=DEFAULT_SEARCH_WORKERS,
                      help=f"Parallel workers (default: {DEFAULT_SEARCH_WORKERS})")
    srch.add_argument("--quiet", action="store_true", help="No progress bar")
    _add_recognition_flags(srch)

    pf = sub.add_parser("pfaffian", parents=[common], help="Degrees of a 5x5 Pfaffian format")
    pf.add_argument("--degrees", required=True, help='Entry degrees "b12,b13,b14,b15;b23,b24,b25;b34,b35;b45"')

    fmt = sub.add_parser("format", parents=[common], help="Tom and Jerry checks on a matrix file")
    fmt.add_argument("--file", required=True, help="Matrix file")
    fmt.add_argument("--check", choices=("tom", "jerry", "all"), default="all", help="Formats to test (default: all)")
    fmt.add_argument("--i", type=int, help="Tom_i, or Jer_ij with --j")
    fmt.add_argument("--j", type=int, help="Second index of Jer_ij")
    fmt.add_argument("--unprojection", help="Check the unprojection relations of named polys \"A,B,C;D,E,F;x,y,z;s\"")

    nodes = sub.add_parser("nodes", parents=[common], help="Node counts of divisor configurations")
    nodes_sub = nodes.add_subparsers(dest="nodes_command", required=True)
    bez = nodes_sub.add_parser("bezout", parents=[common], help="Weighted Bezout number")
    bez.add_argument("--degrees", required=True, help="Curve degrees D,E")
    bez.add_argument("--plane", default="1,1,1", help="Plane weights (default: 1,1,1)")
    det = nodes_sub.add_parser("determinantal", parents=[common], help="Length of a 2x3 rank-drop locus")
    det.add_argument("--cols", required=True, help="Column degrees c1,c2,c3")
    det.add_argument("--rows", default="0,0", help="Row degrees r1,r2 (default: 0,0)")
    det.add_argument("--plane", default="1,1,1", help="Plane weights (default: 1,1,1)")
    std = nodes_sub.add_parser("standard-choice", parents=[common], help="Nodes of standard-choice loci")
    std.add_argument("--locus", action="append", required=True, help="NAME:W1,W2,W3:DxE,... (repeatable)")
    std.add_argument("--shared", type=int, default=0, help="Nodes lying on two divisors")
    cfg = nodes_sub.add_parser("config", parents=[common], help="Evaluate a named configuration")
    cfg.add_argument("name", nargs="?", help="Configuration name (default: all)")

    unp = sub.add_parser("unproject", parents=[common], help="Hilbert series along an unprojection route")
    unp.add_argument("--ambient", required=True, help="Ambient weights of the complete intersection")
    unp.add_argument("--equations", required=True, help="Equation degrees")
    unp.add_argument("--step", action="append", help="W1,W2,W3:S unprojects a plane with variable of degree S")
    unp.add_argument("--expand", type=int, help="Print coefficients of t^0 .. t^N")
    _add_series_flags(unp, required=False)

    chi = sub.add_parser("chi", parents=[common], help="Euler characteristic ledgers")
    chi.add_argument("--ledger", action="append", help="Named ledger (repeatable; two print the difference)")
    chi.add_argument("--start", type=int, help="Starting Euler characteristic")
    chi.add_argument("--resolve", type=int, default=0, help="Nodes resolved")
    chi.add_argument("--blowup-third", type=int, default=0, help="Crepant blowups of 1/3(1,1,1) points")
    chi.add_argument("--contract", type=int, default=0, help="Planes contracted")

    web = sub.add_parser("web", parents=[common], help="Web of families joined by projections")
    web.add_argument("--printed", action="store_true", help="Use printed entries instead of a search")
    web.add_argument("--workers", type=int, default=DEFAULT_SEARCH_WORKERS, help="Parallel workers for the search")
    web.add_argument("--quiet", action="store_true", help="No progress bar")

    return parser


def _configure_logging(verbose: int) -> None:
    level = logging.WARNING if verbose == 0 else logging.INFO if verbose == 1 else logging.DEBUG
    logging.basicConfig(format="%(name)s:%(levelname)s:%(message)s", stream=sys.stderr, level=level)
    logging.getLogger().setLevel(level)


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Run one command; returns the exit code"""
    args = build_parser().parse_args(argv)
    _configure_logging(args.verbose)

    try:
        document = COMMANDS[args.command](args)
        sys.stdout.write(render(document.model_copy(update={"format": args.format})))
    except InputFormatError as e:
        print(f"✗ {e}", file=sys.stderr)
        return 2
    except ValidationError as e:
        print(f"✗ invalid input: {e.errors()[0]['msg']}", file=sys.stderr)
        return 2
    except KeyError as e:
        print(f"✗ {e.args[0]}", file=sys.stderr)
        return 2
    except GradedRingError as e:
        print(f"✗ {e}", file=sys.stderr)
        return 1
    return 0


__all__ = [
    'build_parser',
    'main',
]


if __name__ == "__main__":
    sys.exit(main())
