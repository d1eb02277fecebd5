#!/usr/bin/env python3
# -*- coding: utf-8 -*-

from lib.candidate_search import evaluate_row
from lib.reference_tables import get_reference_data
from lib.web_graph import (
    PROJECT_FIFTH,
    PROJECT_THIRD,
    build_web,
    projection_targets,
    web_from_nodes,
    web_from_reference,
)
from models.geometry_models import WebNode


def test_projection_targets():
    assert projection_targets(4, 1) == [((3, 1), PROJECT_THIRD), ((5, 0), PROJECT_FIFTH)]
    assert projection_targets(0, 2) == [((1, 1), PROJECT_FIFTH)]
    assert projection_targets(0, 0) == []


def test_printed_web():
    web = web_from_reference(get_reference_data().table("web"))
    assert len(web.nodes) == 15
    assert web.connected
    assert sum(1 for e in web.edges if e.label == PROJECT_THIRD) == 11
    assert sum(1 for e in web.edges if e.label == PROJECT_FIFTH) == 9

    for e in web.edges:
        (n, m), target = e.source, e.target
        if e.label == PROJECT_THIRD:
            assert target == (n - 1, m)
        else:
            assert target == (n + 1, m - 1)

    families = {node.key(): node.families for node in web.nodes if node.families > 1}
    assert families == {(0, 3): 2, (4, 1): 2, (2, 2): 3, (6, 0): 2}
    assert web.node(4, 1).codim == 4
    assert web.node(0, 0) is None


def test_dot_and_records():
    web = web_from_reference(get_reference_data().table("web"))
    dot = web.to_dot()
    assert dot.startswith("digraph web {\n")
    assert dot.endswith("}\n")
    assert '"4,1" -> "5,0" [label="project 1/5"];' in dot
    assert "3 families" in dot

    records = web.to_records()
    assert len(records["nodes"]) == 15
    assert {"source": [1, 1], "target": [0, 1], "label": PROJECT_THIRD} in records["edges"]
    assert records["connected"] is True


def test_disconnected_web():
    web = web_from_nodes([WebNode(n=0, m=1, codim=1), WebNode(n=5, m=5, codim=4)])
    assert not web.connected
    assert web.edges == ()
    assert not web_from_nodes([]).connected


def test_web_from_search_rows():
    rows = [evaluate_row(key) for key in ((3, 6, 0, 0), (3, 6, 1, 1), (3, 6, 2, 0))]
    web = build_web(rows, {(2, 0): 2})
    assert [node.key() for node in web.nodes] == [(1, 1), (2, 0)]
    assert web.node(2, 0).families == 2
    assert [(e.source, e.target, e.label) for e in web.edges] == [((1, 1), (2, 0), PROJECT_FIFTH)]
    assert web.connected
