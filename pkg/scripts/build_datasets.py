#!/usr/bin/env python3
"""Regenerate the bundled edge-list datasets in src/spectral_augment/data/.

karate.edges and davis.edges are the classic Zachary karate club and Davis
southern women graphs, exported from networkx with nodes relabeled to dense
integer ids (insertion order; Davis keeps the 18 women first, then the 14
events, and is treated as a plain unipartite graph over all 32 nodes).

dolphins.edges and fb_tvshow.edges are committed SYNTHETIC STAND-INS: the
original social/network files are not redistributable here, so seeded
block-structured graphs with exactly the same node and edge counts
(62/159 and 3892/17239) take their place.  Every result computed on them
is therefore comparable in shape, not in value, to published numbers on
the real datasets.

Run from the repository root:  python3 scripts/build_datasets.py
"""

import sys
from pathlib import Path

import numpy as np

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from spectral_augment.graph import Graph, canonical_edge, connected_components, save_edge_list
from spectral_augment.rng import Rng, spawn_seed, uniform_stream

DATA = Path(__file__).resolve().parent.parent / "src" / "spectral_augment" / "data"

MASTER_SEED = 20240915


def export_networkx_graphs():
    import networkx as nx

    kg = nx.karate_club_graph()
    karate = Graph.from_pairs(kg.number_of_nodes(), list(kg.edges()))
    save_edge_list(karate, DATA / "karate.edges")
    print(f"karate.edges: n={karate.n} e={karate.num_edges}")

    dg = nx.davis_southern_women_graph()
    names = list(dg.nodes())  # women first, then events (insertion order)
    index = {name: i for i, name in enumerate(names)}
    davis = Graph.from_pairs(len(names), [(index[u], index[v]) for u, v in dg.edges()])
    save_edge_list(davis, DATA / "davis.edges")
    print(f"davis.edges: n={davis.n} e={davis.num_edges}")


def block_graph(block_sizes, p_in_list, p_out, seed):
    """Planted blocks with per-block intra densities (contiguous ids)."""
    n = sum(block_sizes)
    block_of = np.empty(n, dtype=np.int64)
    start = 0
    for b, size in enumerate(block_sizes):
        block_of[start:start + size] = b
        start += size
    iu, ju = np.triu_indices(n, k=1)
    same = block_of[iu] == block_of[ju]
    prob = np.full(iu.size, p_out)
    p_in_arr = np.asarray(p_in_list)
    prob[same] = p_in_arr[block_of[iu[same]]]
    draws = uniform_stream(seed, iu.size)
    keep = draws < prob
    return Graph(n, tuple((int(u), int(v)) for u, v in zip(iu[keep], ju[keep]))), block_of


def force_connected(g: Graph) -> Graph:
    """Join components with bridge edges between lowest-id representatives."""
    while True:
        comps = connected_components(g)
        if comps.count <= 1:
            return g
        members = comps.members()
        anchor = min(members[-1])
        extra = [canonical_edge(min(m), anchor) for m in members[:-1]]
        g = g.with_edges(extra)


def adjust_edge_count(g: Graph, target: int, seed: int, block_of=None) -> Graph:
    """Deterministically add/remove edges to hit an exact count while
    keeping the graph connected (removals skip bridges)."""
    rng = Rng(seed)
    edges = set(g.edges)
    if len(edges) < target:
        iu, ju = np.triu_indices(g.n, k=1)
        order = list(range(iu.size))
        rng.shuffle(order)
        for idx in order:
            if len(edges) >= target:
                break
            e = (int(iu[idx]), int(ju[idx]))
            if e in edges:
                continue
            if block_of is not None and block_of[e[0]] != block_of[e[1]]:
                continue  # keep the planted structure when adding
            edges.add(e)
    while len(edges) > target:
        candidates = sorted(edges, reverse=True)
        removed = False
        for e in candidates:
            trial = Graph(g.n, tuple(sorted(edges - {e})))
            if connected_components(trial).count == 1:
                edges.discard(e)
                removed = True
                break
        if not removed:
            raise RuntimeError("cannot remove edges without disconnecting")
    out = Graph(g.n, tuple(sorted(edges)))
    if connected_components(out).count != 1:
        raise RuntimeError("adjustment broke connectivity")
    return out


def build_dolphins_standin():
    sizes = [14, 15, 16, 17]
    g, block_of = block_graph(sizes, [0.30, 0.28, 0.26, 0.24], 0.018,
                              spawn_seed(MASTER_SEED, 1))
    g = force_connected(g)
    g = adjust_edge_count(g, 159, spawn_seed(MASTER_SEED, 2), block_of)
    save_edge_list(g, DATA / "dolphins.edges")
    print(f"dolphins.edges (stand-in): n={g.n} e={g.num_edges}")


def build_fb_tvshow_standin():
    rng = Rng(spawn_seed(MASTER_SEED, 3))
    sizes = []
    remaining = 3892
    while remaining > 0:
        # heavy-tailed block sizes in [12, 420]
        u = rng.uniform()
        size = int(12 + 408 * (u ** 2.5))
        size = min(size, remaining)
        if remaining - size < 12:
            size = remaining
        sizes.append(size)
        remaining -= size
    p_in = []
    for s in sizes:
        target_degree = 3.0 + 7.0 * rng.uniform()
        p_in.append(min(1.0, target_degree / max(s - 1, 1)))
    intra_expect = sum(p * s * (s - 1) / 2 for p, s in zip(p_in, sizes))
    n = sum(sizes)
    total_pairs = n * (n - 1) // 2
    intra_pairs = sum(s * (s - 1) // 2 for s in sizes)
    p_out = max(0.0, (17239 - intra_expect) * 0.95 / (total_pairs - intra_pairs))
    g, block_of = block_graph(sizes, p_in, p_out, spawn_seed(MASTER_SEED, 4))
    g = force_connected(g)
    g = adjust_edge_count(g, 17239, spawn_seed(MASTER_SEED, 5), block_of)
    save_edge_list(g, DATA / "fb_tvshow.edges")
    print(f"fb_tvshow.edges (stand-in): n={g.n} e={g.num_edges} blocks={len(sizes)}")


if __name__ == "__main__":
    DATA.mkdir(parents=True, exist_ok=True)
    export_networkx_graphs()
    build_dolphins_standin()
    build_fb_tvshow_standin()
