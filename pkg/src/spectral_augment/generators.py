"""Seeded random-graph generators.

Bernoulli draws walk node pairs in fixed lexicographic order (i < j) using
the package's counter-based generator, so a seed pins the edge list byte
for byte on any platform.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graph import Graph
from .partition import Partition, from_labels
from .rng import uniform_stream


@dataclass(frozen=True)
class SbmSpec:
    """Planted-block model: intra-block pairs with p_in, inter with p_out."""

    block_sizes: tuple[int, ...]
    p_in: float
    p_out: float
    seed: int = 0

    def __post_init__(self):
        if any(s < 1 for s in self.block_sizes):
            raise ValueError("all block sizes must be >= 1")
        if not (0.0 <= self.p_out <= self.p_in <= 1.0):
            raise ValueError("need 0 <= p_out <= p_in <= 1")

    @property
    def n(self) -> int:
        return sum(self.block_sizes)


def _pair_arrays(n: int) -> tuple[np.ndarray, np.ndarray]:
    iu, ju = np.triu_indices(n, k=1)
    return iu, ju


def erdos_renyi(n: int, p: float, seed: int = 0) -> Graph:
    """Each of the n(n-1)/2 pairs is an edge independently with probability p."""
    if not (0.0 <= p <= 1.0):
        raise ValueError("edge probability must lie in [0, 1]")
    if n < 0:
        raise ValueError("node count must be nonnegative")
    iu, ju = _pair_arrays(n)
    draws = uniform_stream(seed, iu.size)
    keep = draws < p
    edges = [(int(u), int(v)) for u, v in zip(iu[keep], ju[keep])]
    return Graph(n, tuple(edges))


def sbm(spec: SbmSpec) -> tuple[Graph, Partition]:
    """Sample the block model; returns the graph and its ground-truth blocks."""
    n = spec.n
    block_of = np.empty(n, dtype=np.int64)
    start = 0
    for b, size in enumerate(spec.block_sizes):
        block_of[start:start + size] = b
        start += size
    iu, ju = _pair_arrays(n)
    draws = uniform_stream(spec.seed, iu.size)
    prob = np.where(block_of[iu] == block_of[ju], spec.p_in, spec.p_out)
    keep = draws < prob
    edges = [(int(u), int(v)) for u, v in zip(iu[keep], ju[keep])]
    return Graph(n, tuple(edges)), from_labels(block_of.tolist())


def hide_inter_edges(g: Graph, part: Partition) -> tuple[Graph, tuple[tuple[int, int], ...]]:
    """Remove every edge whose endpoints lie in different communities.

    Returns (graph with intra-community edges only, the removed edges).
    """
    if part.n != g.n:
        raise ValueError("partition does not cover the graph's nodes")
    kept = tuple(e for e in g.edges if part.same_community(*e))
    hidden = tuple(e for e in g.edges if not part.same_community(*e))
    return Graph(g.n, kept, node_names=g.node_names), hidden
