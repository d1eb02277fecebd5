#!/usr/bin/env python3
# -*- coding: utf-8 -*-

import json

import pytest

from config import TSV_COLUMNS
from graded_rings import build_parser, main

CODIM4_BASKET = "4x1/3(1,1,1),1x1/5(1,1,3)"


def _json(capsys, *argv):
    code = main(["--format", "json-records", *argv])
    out = capsys.readouterr()
    assert code == 0, out.err
    payload = json.loads(out.out)
    assert payload["schema_version"] == "1"
    return payload["records"]


def _exit_code(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().err


# ==================== Series ====================

def test_rr_expansion(capsys):
    (record,) = _json(capsys, "rr", "--p1", "3", "--p2", "6", "--basket", CODIM4_BASKET, "--expand", "5")
    assert record["expansion"] == ["1", "3", "6", "14", "27", "46"]
    assert record["basket_degree"] == "26/15"
    assert record["basket"] == CODIM4_BASKET


def test_recognize(capsys):
    (record,) = _json(capsys, "recognize", "--p1", "3", "--p2", "6", "--basket", CODIM4_BASKET)
    assert record["label"] == "X_{6^6,8^3} in P(1^3,3^4,5)"
    assert record["codim"] == "4"
    assert record["equation_degrees"] == ["6"] * 6 + ["8"] * 3
    assert record["degree_A3"] == "26/15"
    assert record["round_trip"] is True


def test_recognize_with_hints(capsys):
    (record,) = _json(capsys, "recognize", "--p1", "6", "--p2", "21", "--basket", "2x1/3(1,1,1)", "--hints", "3,3")
    assert record["weights"] == ["1"] * 6 + ["3", "3"]
    assert record["hints"] == ["3", "3"]


def test_recognize_failure_is_domain_error(capsys):
    code, err = _exit_code(capsys, "recognize", "--p1", "6", "--p2", "21", "--basket", "2x1/3(1,1,1)")
    assert code == 1
    assert "residual tail" in err


def test_registry_miss(capsys):
    code, err = _exit_code(capsys, "rr", "--p1", "3", "--p2", "6", "--basket", "1/7(1,2,4)")
    assert code == 1
    assert "1/7(1,2,4)" in err


def test_bad_basket(capsys):
    code, _ = _exit_code(capsys, "rr", "--p1", "3", "--p2", "6", "--basket", "4x1/3(1,1)")
    assert code == 2


def test_registry_listing(capsys):
    records = _json(capsys, "registry")
    assert [r["type"] for r in records] == ["1/3(1,1,1)", "1/5(1,1,3)"]
    assert [r["degree"] for r in records] == ["1/3", "2/5"]
    assert all(r["term"] for r in records)


def test_missing_required_flag():
    with pytest.raises(SystemExit) as info:
        build_parser().parse_args(["rr", "--p1", "3"])
    assert info.value.code == 2


# ==================== Search ====================

def test_search_tsv(capsys):
    code = main(["--format", "tsv", "search", "--p1", "3", "--p2", "6", "--n", "4", "--m", "0..1", "--quiet"])
    out = capsys.readouterr()
    assert code == 0
    lines = out.out.splitlines()
    assert lines[0].split("\t") == list(TSV_COLUMNS)
    assert lines[2].split("\t") == ["3", "6", "4", "1", "1^3,3^4,5", "6^6,8^3", "4", "ok"]
    assert "2/2 rows recognised" in out.err


def test_search_needs_ranges(capsys):
    code, err = _exit_code(capsys, "search", "--p1", "3", "--quiet")
    assert code == 2
    assert "--p2" in err


def test_search_printed_table(capsys):
    records = _json(capsys, "search", "--table", "further", "--quiet")
    assert len(records) == 7
    assert all(record["reference"] == "match" for record in records)


# ==================== Pfaffians ====================

def test_pfaffian(capsys):
    (record,) = _json(capsys, "pfaffian", "--degrees", "1,3,3,3;3,3,3;5,5;5")
    assert record["pfaffian_degrees"] == ["8", "8", "6", "6", "6"]
    assert record["k"] == "17"
    assert record["q"] == ["1/2", "1/2", "5/2", "5/2", "5/2"]
    assert record["numerator"] == {"0": "1", "6": "-3", "8": "-2", "9": "2", "11": "3", "17": "-1"}


def test_pfaffian_inconsistent(capsys):
    code, err = _exit_code(capsys, "pfaffian", "--degrees", "1,1,2,2;1,2,2;2,2;4")
    assert code == 1
    assert "b45=4 expected 3" in err


def test_format_jerry(capsys, matrices_dir):
    records = _json(capsys, "format", "--file", str(matrices_dir / "model_jer45.txt"), "--check", "jerry", "--i", "4", "--j", "5")
    summary, verdict = records
    assert summary["degree_matrix"] == "1,1,2,2;1,2,2;2,2;3"
    assert summary["k"] == "9"
    assert verdict == {"format": "Jer_45", "holds": True, "offending": [], "advisories": []}


def test_format_all_on_tom1(capsys, matrices_dir):
    code = main(["format", "--file", str(matrices_dir / "tom1.txt")])
    err = capsys.readouterr().err
    assert code == 0
    assert "✓ Tom_1" in err
    assert "✗ Jer_45" in err
    assert err.count("✓") == 1


@pytest.mark.parametrize(
    "extra",
    [["--check", "jerry", "--i", "4"], ["--j", "5"], ["--i", "6"]],
)
def test_format_bad_indices(capsys, matrices_dir, extra):
    code, _ = _exit_code(capsys, "format", "--file", str(matrices_dir / "tom1.txt"), *extra)
    assert code == 2


def test_format_unprojection(capsys, matrices_dir):
    code = main([
        "--format", "json-records", "format", "--file", str(matrices_dir / "model_jer45.txt"),
        "--unprojection", "A,B,C;D,E,F;x,y,z;s",
    ])
    out = capsys.readouterr()
    assert code == 0, out.err
    (record,) = json.loads(out.out)["records"]
    assert record["holds"] is True
    assert len(record["relations"]) == 3
    assert "✓ unprojection relations are Pfaffians" in out.err


@pytest.mark.parametrize("text", ["A,B;D,E,F;x,y,z;s", "A,B,C;D,E,F;x,y,z;s,u", "A,B,C;D,E,Q;x,y,z;s"])
def test_format_unprojection_rejects(capsys, matrices_dir, text):
    code, _ = _exit_code(capsys, "format", "--file", str(matrices_dir / "model_jer45.txt"), "--unprojection", text)
    assert code == 2


def test_format_missing_file(capsys, tmp_path):
    code, err = _exit_code(capsys, "format", "--file", str(tmp_path / "absent.txt"))
    assert code == 2
    assert "cannot read" in err


# ==================== Nodes, unprojection, chi ====================

def test_nodes_bezout_and_determinantal(capsys):
    (record,) = _json(capsys, "nodes", "bezout", "--degrees", "3,5", "--plane", "1,1,3")
    assert record["count"] == "5"
    (record,) = _json(capsys, "nodes", "determinantal", "--cols", "5,3,3", "--plane", "1,1,3")
    assert record["length"] == "13"


def test_nodes_standard_choice(capsys):
    (record,) = _json(
        capsys, "nodes", "standard-choice",
        "--locus", "D:1,1,1:3x3,3x3,3x3", "--locus", "E:1,1,3:3x3,3x5,5x3", "--shared", "3",
    )
    assert record["counts"] == {"D": "27", "E": "13"}
    assert record["total"] == "37"


def test_nodes_config(capsys):
    (record,) = _json(capsys, "nodes", "config", "codim4-tom1")
    assert record["remaining"] == "24"
    assert record["oracles_agree"] is True
    code, err = _exit_code(capsys, "nodes", "config", "missing")
    assert code == 2
    assert "unknown configuration" in err


def test_nodes_bad_locus(capsys):
    code, _ = _exit_code(capsys, "nodes", "standard-choice", "--locus", "D:1,1:3x3")
    assert code == 2


@pytest.mark.parametrize(
    "argv, message",
    [
        (["--locus", "D:1,1,1:2x2,2x2,2x2", "--locus", "D:1,1,1:2x2,2x2,2x2"], "given twice"),
        (["--locus", "D:1,1,1:1x1", "--shared", "5"], "5 shared nodes"),
    ],
)
def test_nodes_standard_choice_rejects(capsys, argv, message):
    code, err = _exit_code(capsys, "nodes", "standard-choice", *argv)
    assert code == 2
    assert message in err


def test_unproject_two_planes(capsys, two_planes_numerator):
    (record,) = _json(
        capsys, "unproject", "--ambient", "1,1,1,1,1,1", "--equations", "3,3",
        "--step", "1,1,1:3", "--step", "1,1,1:3", "--expand", "4",
        "--p1", "6", "--p2", "21", "--basket", "2x1/3(1,1,1)",
    )
    assert record["expansion"] == ["1", "6", "21", "56", "120"]
    assert record["matches_assembled"] is True
    assert record["numerator"] == {str(e): str(c) for e, c in two_planes_numerator.terms()}


def test_chi_ledgers(capsys):
    records = _json(capsys, "chi", "--ledger", "model-jer45", "--ledger", "model-tom1")
    assert [r["chi"] for r in records[:2]] == ["22", "20"]
    assert records[2] == {"difference": "2"}

    (record,) = _json(capsys, "chi", "--start", "-144", "--resolve", "24", "--contract", "2")
    assert record["chi"] == "-100"
    assert record["steps"] == ["resolve_nodes 24", "contract_plane", "contract_plane"]

    code, _ = _exit_code(capsys, "chi")
    assert code == 2


# ==================== Web and output ====================

def test_web_dot(capsys):
    code = main(["--format", "dot", "web", "--printed"])
    out = capsys.readouterr()
    assert code == 0
    assert out.out.startswith("digraph web {")
    assert "15 nodes, 20 edges, connected" in out.err


def test_web_records(capsys):
    (graph,) = _json(capsys, "web", "--printed")
    assert graph["connected"] is True
    assert len(graph["edges"]) == 20


def test_dot_rejected_outside_web(capsys):
    code, err = _exit_code(capsys, "--format", "dot", "rr", "--p1", "3", "--p2", "6")
    assert code == 2
    assert "only available for web" in err


def test_subcommand_format_flag(capsys):
    code = main(["pfaffian", "--degrees", "1,1,2,2;1,2,2;2,2;3", "--format", "tsv"])
    lines = capsys.readouterr().out.splitlines()
    assert code == 0
    assert lines[0].split("\t")[:3] == ["degrees", "q", "pfaffian_degrees"]
