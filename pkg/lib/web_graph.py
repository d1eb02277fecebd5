#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Web of candidate families.

Nodes are the realised (n, m) of a search; projecting from a 1/3(1,1,1)
point gives (n, m) -> (n - 1, m) and projecting from a 1/5(1,1,3) point
gives (n, m) -> (n + 1, m - 1).
"""

import logging
from typing import Dict, Iterable, List, Mapping, Optional, Tuple

import networkx as nx

from models.candidate_models import ReferenceEntry, RowStatus, SearchRow
from models.geometry_models import WebEdge, WebGraph, WebNode

logger = logging.getLogger(__name__)

PROJECT_THIRD = "project 1/3"
PROJECT_FIFTH = "project 1/5"


def projection_targets(n: int, m: int) -> List[Tuple[Tuple[int, int], str]]:
    """Possible targets of projections out of (n, m)"""
    targets = []
    if n >= 1:
        targets.append(((n - 1, m), PROJECT_THIRD))
    if m >= 1:
        targets.append(((n + 1, m - 1), PROJECT_FIFTH))
    return targets


def _graph(nodes: Iterable[WebNode]) -> nx.DiGraph:
    graph = nx.DiGraph()
    for node in nodes:
        graph.add_node(node.key(), codim=node.codim, families=node.families)
    for n, m in list(graph.nodes):
        for target, label in projection_targets(n, m):
            if target in graph:
                graph.add_edge((n, m), target, label=label)
    return graph


def web_from_nodes(nodes: Iterable[WebNode]) -> WebGraph:
    graph = _graph(nodes)
    connected = graph.number_of_nodes() > 0 and nx.is_weakly_connected(graph)
    ordered_nodes = tuple(
        WebNode(n=n, m=m, codim=graph.nodes[(n, m)]["codim"], families=graph.nodes[(n, m)]["families"])
        for n, m in sorted(graph.nodes)
    )
    edges = tuple(
        WebEdge(source=u, target=v, label=graph.edges[u, v]["label"])
        for u, v in sorted(graph.edges)
    )
    if not connected:
        components = sorted(sorted(c) for c in nx.weakly_connected_components(graph))
        logger.warning("web is not connected: %s", components)
    return WebGraph(nodes=ordered_nodes, edges=edges, connected=connected)


def build_web(rows: Iterable[SearchRow], families: Optional[Mapping[Tuple[int, int], int]] = None) -> WebGraph:
    """
    Web on the rows recognised in codimension at most 4.

    Args:
        rows: rows of a completed search
        families: (n, m) -> number of deformation families, default 1
    """
    families = families or {}
    nodes: Dict[Tuple[int, int], WebNode] = {}
    for row in rows:
        if row.status != RowStatus.OK or row.candidate is None:
            continue
        key = (row.n, row.m)
        nodes[key] = WebNode(n=row.n, m=row.m, codim=row.candidate.codim_estimate, families=families.get(key, 1))
    return web_from_nodes(nodes.values())


def web_from_reference(entries: Iterable[ReferenceEntry]) -> WebGraph:
    """Web on printed entries, with their family counts"""
    return web_from_nodes(
        WebNode(n=e.n, m=e.m, codim=e.codim, families=e.families) for e in entries
    )


__all__ = [
    'PROJECT_THIRD',
    'PROJECT_FIFTH',
    'projection_targets',
    'web_from_nodes',
    'build_web',
    'web_from_reference',
]
