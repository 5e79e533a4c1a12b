"""Undirected simple graphs over dense integer node ids.

A :class:`Graph` is immutable: a node count plus a canonical, sorted tuple
of edges ``(i, j)`` with ``i < j``.  Matrix-facing code (Laplacians, kernel
bases) relies on node ids being exactly ``0..n-1``, so files with sparse
ids are remapped on ingestion and the mapping is kept for reporting.

Edge-list file format (ASCII):
    - one edge per line: two whitespace-separated integer node ids
    - ``#`` starts a comment; blank lines are ignored
    - an optional directive ``# nodes: <n>`` declares the node count so
      that isolated nodes survive a round trip
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

Edge = tuple[int, int]

_NODES_DIRECTIVE = re.compile(r"#\s*nodes\s*:\s*(\d+)")


class EdgeListParseError(ValueError):
    """Malformed edge-list input; carries the offending line number."""

    def __init__(self, message: str, line_no: int | None = None):
        if line_no is not None:
            message = f"line {line_no}: {message}"
        super().__init__(message)
        self.line_no = line_no


def canonical_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph with nodes ``0..n-1``."""

    n: int
    edges: tuple[Edge, ...]
    node_names: tuple | None = field(default=None, compare=False)

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("node count must be nonnegative")
        seen = set()
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"self-loop on node {u} is not allowed")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge ({u}, {v}) has endpoint outside 0..{self.n - 1}")
            if u > v:
                raise ValueError(f"edge ({u}, {v}) is not in canonical order")
            if (u, v) in seen:
                raise ValueError(f"duplicate edge ({u}, {v})")
            seen.add((u, v))

    @classmethod
    def from_pairs(cls, n: int | None, pairs: Iterable[tuple[int, int]],
                   node_names=None) -> "Graph":
        """Build from arbitrary (u, v) pairs; duplicates and reversed
        duplicates collapse, self-loops are rejected."""
        dedup = set()
        max_id = -1
        for u, v in pairs:
            if u == v:
                raise ValueError(f"self-loop on node {u} is not allowed")
            dedup.add(canonical_edge(int(u), int(v)))
            max_id = max(max_id, u, v)
        count = (max_id + 1) if n is None else n
        if max_id >= count:
            raise ValueError(f"node id {max_id} exceeds declared node count {count}")
        return cls(count, tuple(sorted(dedup)),
                   None if node_names is None else tuple(node_names))

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def degrees(self) -> np.ndarray:
        deg = np.zeros(self.n, dtype=np.int64)
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg

    def average_degree(self) -> float:
        return 2.0 * self.num_edges / self.n if self.n else 0.0

    def adjacency_sets(self) -> list[set[int]]:
        adj: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return adj

    def adjacency_matrix(self) -> np.ndarray:
        a = np.zeros((self.n, self.n), dtype=np.float64)
        for u, v in self.edges:
            a[u, v] = 1.0
            a[v, u] = 1.0
        return a

    def has_edge(self, u: int, v: int) -> bool:
        return canonical_edge(u, v) in set(self.edges)

    def with_edges(self, extra: Iterable[Edge]) -> "Graph":
        """New graph with additional edges (duplicates collapse)."""
        return Graph.from_pairs(self.n, list(self.edges) + list(extra),
                                node_names=self.node_names)


@dataclass(frozen=True)
class ComponentLabeling:
    """Connected components, ordered by size ascending (ties: smallest
    contained node id first).  ``labels[i]`` is node i's component id."""

    labels: tuple[int, ...]
    sizes: tuple[int, ...]

    @property
    def count(self) -> int:
        return len(self.sizes)

    def members(self) -> list[list[int]]:
        groups: list[list[int]] = [[] for _ in self.sizes]
        for node, lab in enumerate(self.labels):
            groups[lab].append(node)
        return groups


def order_groups(groups: Sequence[Sequence[int]]) -> list[list[int]]:
    """Canonical group order: size ascending, ties by smallest member id."""
    return [sorted(g) for g in sorted(groups, key=lambda g: (len(g), min(g)))]


def connected_components(g: Graph) -> ComponentLabeling:
    """Label components by iterative depth-first traversal."""
    comp = [-1] * g.n
    adj = g.adjacency_sets()
    groups = []
    for start in range(g.n):
        if comp[start] != -1:
            continue
        stack = [start]
        comp[start] = 0  # provisional; final ids assigned after ordering
        members = [start]
        while stack:
            u = stack.pop()
            for v in adj[u]:
                if comp[v] == -1:
                    comp[v] = 0
                    members.append(v)
                    stack.append(v)
        groups.append(members)
    ordered = order_groups(groups)
    labels = [0] * g.n
    for cid, members in enumerate(ordered):
        for node in members:
            labels[node] = cid
    return ComponentLabeling(tuple(labels), tuple(len(m) for m in ordered))


def laplacian(g: Graph) -> np.ndarray:
    """Dense Laplacian: degree matrix minus adjacency matrix."""
    lap = np.zeros((g.n, g.n), dtype=np.float64)
    for u, v in g.edges:
        lap[u, v] -= 1.0
        lap[v, u] -= 1.0
        lap[u, u] += 1.0
        lap[v, v] += 1.0
    return lap


def parse_edge_list(text: str, n_nodes: int | None = None) -> Graph:
    """Parse edge-list text into a Graph.

    Node ids need not be dense; they are remapped to 0..n-1 in ascending
    numeric order and the original ids are kept in ``node_names``.  The
    ``# nodes: <n>`` directive (or the ``n_nodes`` override) declares
    isolated nodes, which only makes sense for already-dense ids.
    """
    declared = n_nodes
    pairs: list[tuple[int, int]] = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            m = _NODES_DIRECTIVE.match(line)
            if m and declared is None:
                declared = int(m.group(1))
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise EdgeListParseError(
                f"expected two integer tokens, got {len(tokens)}", line_no)
        try:
            u, v = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise EdgeListParseError(
                f"non-integer token in {tokens!r}", line_no) from None
        if u < 0 or v < 0:
            raise EdgeListParseError("negative node id", line_no)
        if u == v:
            raise EdgeListParseError(f"self-loop on node {u}", line_no)
        pairs.append((u, v))

    ids = sorted({u for p in pairs for u in p})
    dense = bool(ids) and ids[-1] == len(ids) - 1
    if not dense and ids:
        if declared is not None:
            raise EdgeListParseError(
                "node-count declaration is only supported for dense 0..n-1 ids")
        remap = {orig: i for i, orig in enumerate(ids)}
        pairs = [(remap[u], remap[v]) for u, v in pairs]
        return Graph.from_pairs(len(ids), pairs, node_names=ids)

    n = declared
    if n is not None and ids and ids[-1] >= n:
        raise EdgeListParseError(
            f"node id {ids[-1]} exceeds declared node count {n}")
    return Graph.from_pairs(n, pairs)


def serialize_edge_list(g: Graph) -> str:
    """Canonical text form; parse(serialize(g)) == g."""
    lines = [f"# nodes: {g.n}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def load_edge_list(path, n_nodes: int | None = None) -> Graph:
    with open(path, "r", encoding="ascii") as fh:
        return parse_edge_list(fh.read(), n_nodes=n_nodes)


def save_edge_list(g: Graph, path) -> None:
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        fh.write(serialize_edge_list(g))
