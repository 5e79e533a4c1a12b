"""Node-to-community labelings, canonicalized like component labelings:
community ids are dense 0..k-1, ordered by size ascending with ties broken
by smallest contained node id."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .graph import order_groups


@dataclass(frozen=True)
class Partition:
    labels: tuple[int, ...]
    k: int

    def __post_init__(self):
        if self.k != (max(self.labels) + 1 if self.labels else 0):
            raise ValueError("community ids must be dense 0..k-1")

    @property
    def n(self) -> int:
        return len(self.labels)

    def communities(self) -> list[list[int]]:
        groups: list[list[int]] = [[] for _ in range(self.k)]
        for node, lab in enumerate(self.labels):
            groups[lab].append(node)
        return groups

    def same_community(self, u: int, v: int) -> bool:
        return self.labels[u] == self.labels[v]


def from_labels(raw_labels: Sequence) -> Partition:
    """Canonicalize an arbitrary labeling (any hashable label values)."""
    groups: dict = {}
    for node, lab in enumerate(raw_labels):
        groups.setdefault(lab, []).append(node)
    return from_groups(groups.values(), n=len(raw_labels))


def from_groups(groups: Iterable[Sequence[int]], n: int) -> Partition:
    """Canonicalize a community list; groups must cover 0..n-1 disjointly."""
    ordered = order_groups([list(g) for g in groups if len(g)])
    labels = [-1] * n
    for cid, members in enumerate(ordered):
        for node in members:
            if labels[node] != -1:
                raise ValueError(f"node {node} appears in two communities")
            labels[node] = cid
    if any(lab == -1 for lab in labels):
        missing = [i for i, lab in enumerate(labels) if lab == -1]
        raise ValueError(f"partition does not cover nodes {missing[:5]}")
    return Partition(tuple(labels), len(ordered))
