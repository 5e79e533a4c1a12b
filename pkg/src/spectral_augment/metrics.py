"""Evaluation of augmentation outcomes against a community structure.

Two views: the fraction of proposed edges that cross communities (how
aggressively the method bridges), and the fraction of hidden ground-truth
cross-community edges it re-created exactly (recovery).
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .augmentation import AugmentationResult
from .graph import Graph, canonical_edge, connected_components
from .partition import Partition


@dataclass(frozen=True)
class MetricsReport:
    """rho: inter-community fraction among new edges (None when there are
    no new edges); epsilon: exactly recovered fraction of the hidden set;
    m_dagger: component count of the augmented graph."""

    m_dagger: int
    rho: float | None
    epsilon: float
    intra_new: int
    inter_new: int
    hidden_total: int
    hidden_recovered: int
    no_new_edges: bool = False
    no_hidden_edges: bool = False

    def to_dict(self) -> dict:
        return {
            "m_dagger": self.m_dagger,
            "rho": self.rho,
            "epsilon": self.epsilon,
            "counts": {
                "intra_new": self.intra_new,
                "inter_new": self.inter_new,
                "hidden_total": self.hidden_total,
                "hidden_recovered": self.hidden_recovered,
            },
            "flags": {
                "no_new_edges": self.no_new_edges,
                "no_hidden_edges": self.no_hidden_edges,
            },
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def evaluate(g_before: Graph, result: AugmentationResult, part: Partition,
             hidden: tuple[tuple[int, int], ...] = ()) -> MetricsReport:
    """Classify each new edge as intra/inter under ``part`` and measure
    exact recovery of ``hidden``.

    ``hidden`` must be disjoint from the graph's current edges (they were
    removed before augmentation).  With no hidden set, epsilon is 0 and
    flagged; with no new edges, rho is None and flagged.
    """
    if part.n != g_before.n:
        raise ValueError("partition does not cover the graph's nodes")
    hidden_set = {canonical_edge(*e) for e in hidden}
    if hidden_set & set(g_before.edges):
        raise ValueError("hidden edges must be disjoint from current edges")
    intra = inter = recovered = 0
    for u, v in result.new_edges:
        if part.same_community(u, v):
            intra += 1
        else:
            inter += 1
        if canonical_edge(u, v) in hidden_set:
            recovered += 1
    total_new = intra + inter
    rho = inter / total_new if total_new else None
    epsilon = recovered / len(hidden_set) if hidden_set else 0.0
    m_dagger = connected_components(g_before.with_edges(result.new_edges)).count
    return MetricsReport(
        m_dagger=m_dagger,
        rho=rho,
        epsilon=epsilon,
        intra_new=intra,
        inter_new=inter,
        hidden_total=len(hidden_set),
        hidden_recovered=recovered,
        no_new_edges=(total_new == 0),
        no_hidden_edges=(not hidden_set),
    )
