"""Community detection panel: five classic algorithms plus modularity.

All methods return a canonical :class:`~.partition.Partition` (dense ids,
size-ascending order).  The two stochastic methods (label propagation,
fluid) are deterministic per seed; the rest are deterministic outright,
with explicit tie-breaking rules noted inline.
"""

from __future__ import annotations

import heapq
from collections import Counter, deque

from .graph import Graph, canonical_edge, connected_components
from .partition import Partition, from_groups, from_labels
from .rng import Rng

_TIE_EPS = 1e-12


def modularity(g: Graph, part: Partition) -> float:
    """Q = sum over communities of [e_c/m - (d_c / 2m)^2] with e_c the
    intra-community edge count and d_c the community's total degree."""
    m = g.num_edges
    if m == 0:
        raise ValueError("modularity is undefined for an edgeless graph")
    if part.n != g.n:
        raise ValueError("partition does not cover the graph's nodes")
    intra = [0] * part.k
    degree = [0] * part.k
    for u, v in g.edges:
        cu, cv = part.labels[u], part.labels[v]
        degree[cu] += 1
        degree[cv] += 1
        if cu == cv:
            intra[cu] += 1
    return sum(ec / m - (dc / (2.0 * m)) ** 2 for ec, dc in zip(intra, degree))


# ---------------------------------------------------------------------------
# Girvan-Newman (first split)

def edge_betweenness(g: Graph, edges: set[tuple[int, int]] | None = None) -> dict:
    """Betweenness per edge by single-source breadth-first accumulation
    over all sources (unweighted shortest paths)."""
    adj: list[list[int]] = [[] for _ in range(g.n)]
    for u, v in (edges if edges is not None else g.edges):
        adj[u].append(v)
        adj[v].append(u)
    for neighbors in adj:
        neighbors.sort()
    scores: dict[tuple[int, int], float] = {}
    for source in range(g.n):
        stack: list[int] = []
        preds: list[list[int]] = [[] for _ in range(g.n)]
        sigma = [0.0] * g.n
        dist = [-1] * g.n
        sigma[source] = 1.0
        dist[source] = 0
        queue = deque([source])
        while queue:
            v = queue.popleft()
            stack.append(v)
            for w in adj[v]:
                if dist[w] < 0:
                    dist[w] = dist[v] + 1
                    queue.append(w)
                if dist[w] == dist[v] + 1:
                    sigma[w] += sigma[v]
                    preds[w].append(v)
        delta = [0.0] * g.n
        while stack:
            w = stack.pop()
            for v in preds[w]:
                contribution = sigma[v] / sigma[w] * (1.0 + delta[w])
                edge = canonical_edge(v, w)
                scores[edge] = scores.get(edge, 0.0) + contribution
                delta[v] += contribution
        # source endpoint contributes to paths but not to its own score
    return scores


def girvan_newman(g: Graph) -> Partition:
    """Remove highest-betweenness edges (recomputed after every removal)
    until the component count first increases, and return that split.

    A connected graph therefore yields exactly two communities; a graph
    that is already disconnected returns its components unchanged.
    Equal betweenness resolves to the smallest canonical edge.
    """
    comps = connected_components(g)
    if comps.count != 1:
        return from_groups(comps.members(), g.n)
    remaining = set(g.edges)
    baseline = comps.count
    while remaining:
        scores = edge_betweenness(g, remaining)
        target = min(scores, key=lambda e: (-scores[e], e))
        remaining.discard(target)
        comps = connected_components(Graph(g.n, tuple(sorted(remaining))))
        if comps.count > baseline:
            return from_groups(comps.members(), g.n)
    return from_groups([[i] for i in range(g.n)], g.n)


# ---------------------------------------------------------------------------
# Greedy modularity maximization (agglomerative)

def greedy_modularity(g: Graph, history: list | None = None) -> Partition:
    """Merge the community pair with the largest modularity gain until no
    merge improves modularity.

    Gains live on adjacent community pairs only (a merge across zero edges
    can never help).  Ties break to the lowest (id, id) pair.  When
    ``history`` is a list, modularity after each accepted merge is appended.
    """
    m = g.num_edges
    if m == 0:
        return from_groups([[i] for i in range(g.n)], g.n)
    members: dict[int, list[int]] = {i: [i] for i in range(g.n)}
    degree: dict[int, float] = {i: 0.0 for i in range(g.n)}
    intra: dict[int, float] = {i: 0.0 for i in range(g.n)}
    between: dict[tuple[int, int], float] = {}
    for u, v in g.edges:
        degree[u] += 1
        degree[v] += 1
        between[canonical_edge(u, v)] = between.get(canonical_edge(u, v), 0.0) + 1.0
    pair_neighbors: dict[int, set[int]] = {i: set() for i in range(g.n)}
    for a, b in between:
        pair_neighbors[a].add(b)
        pair_neighbors[b].add(a)

    def gain(a: int, b: int) -> float:
        return between.get((a, b), 0.0) / m - degree[a] * degree[b] / (2.0 * m * m)

    heap = [(-gain(a, b), a, b) for (a, b) in between]
    heapq.heapify(heap)
    q_running = sum(intra[c] / m - (degree[c] / (2.0 * m)) ** 2 for c in members)

    while heap:
        neg_dq, a, b = heapq.heappop(heap)
        if a not in members or b not in members:
            continue
        current = gain(a, b)
        if abs(-neg_dq - current) > 1e-12:
            continue  # stale entry; a fresh one exists
        if current <= _TIE_EPS:
            break
        # merge b into a (a < b by canonical pair order)
        q_running += current
        intra[a] += intra[b] + between.pop((a, b))
        degree[a] += degree[b]
        members[a].extend(members.pop(b))
        pair_neighbors[a].discard(b)
        pair_neighbors[b].discard(a)
        for c in pair_neighbors.pop(b):
            pair_neighbors[c].discard(b)
            old = between.pop(canonical_edge(b, c))
            key = canonical_edge(a, c)
            between[key] = between.get(key, 0.0) + old
            pair_neighbors[a].add(c)
            pair_neighbors[c].add(a)
        del intra[b], degree[b]
        for c in sorted(pair_neighbors[a]):
            heapq.heappush(heap, (-gain(*canonical_edge(a, c)), *canonical_edge(a, c)))
        if history is not None:
            history.append(q_running)
    return from_groups(members.values(), g.n)


# ---------------------------------------------------------------------------
# Label propagation (asynchronous)

def label_propagation(g: Graph, seed: int = 0, max_rounds: int = 1000) -> Partition:
    """Asynchronous label propagation in seeded random node order.

    A node keeps its label when it is already among its neighborhood's
    most frequent labels; otherwise it adopts one of the modes, ties
    resolved by a seeded draw.  Each switch strictly increases the number
    of label-agreeing edge endpoints, so the process terminates; it stops
    at the first full round without a change.
    """
    rng = Rng(seed)
    adj = [sorted(s) for s in g.adjacency_sets()]
    labels = list(range(g.n))
    for _ in range(max_rounds):
        order = list(range(g.n))
        rng.shuffle(order)
        changed = False
        for u in order:
            if not adj[u]:
                continue
            counts = Counter(labels[v] for v in adj[u])
            top = max(counts.values())
            modes = sorted(lab for lab, c in counts.items() if c == top)
            if labels[u] in modes:
                continue
            labels[u] = modes[0] if len(modes) == 1 else rng.choice(modes)
            changed = True
        if not changed:
            break
    return from_labels(labels)


# ---------------------------------------------------------------------------
# Louvain (two-phase local moves + aggregation)

def louvain(g: Graph, seed: int = 0, history: list | None = None) -> Partition:
    """Standard two-phase heuristic at resolution 1 with seeded node order.

    Local moves run in passes until a full pass yields no move; the level
    then aggregates communities into supernodes (intra weight becomes a
    self-loop) and repeats until aggregation stops shrinking the graph.
    """
    if g.num_edges == 0:
        return from_groups([[i] for i in range(g.n)], g.n)
    rng = Rng(seed)
    # weighted level graph: neighbor weights and self weights (self counts
    # twice-collapsed intra edges, so degrees stay consistent across levels)
    weights: list[dict[int, float]] = [dict() for _ in range(g.n)]
    selfw = [0.0] * g.n
    for u, v in g.edges:
        weights[u][v] = weights[u].get(v, 0.0) + 1.0
        weights[v][u] = weights[v].get(u, 0.0) + 1.0
    node_of: list[int] = list(range(g.n))  # original node -> current supernode
    two_m = 2.0 * g.num_edges

    level = 0
    while True:
        n_level = len(weights)
        k = [selfw[u] + sum(weights[u].values()) for u in range(n_level)]
        comm = list(range(n_level))
        tot = k[:]
        moved_any = False
        for _ in range(100):
            moved_pass = False
            order = list(range(n_level))
            rng.shuffle(order)
            for u in order:
                cu = comm[u]
                tot[cu] -= k[u]
                link: dict[int, float] = {}
                for v, w in weights[u].items():
                    link[comm[v]] = link.get(comm[v], 0.0) + w
                best_c, best_gain = cu, link.get(cu, 0.0) - k[u] * tot[cu] / two_m
                for c in sorted(link):
                    g_c = link[c] - k[u] * tot[c] / two_m
                    if g_c > best_gain + _TIE_EPS or (
                            abs(g_c - best_gain) <= _TIE_EPS and c < best_c):
                        best_c, best_gain = c, g_c
                comm[u] = best_c
                tot[best_c] += k[u]
                if best_c != cu:
                    moved_pass = True
                    moved_any = True
                    if history is not None:
                        history.append(_louvain_quality(
                            weights, selfw, comm, two_m))
            if not moved_pass:
                break
        groups: dict[int, list[int]] = {}
        for u in range(n_level):
            groups.setdefault(comm[u], []).append(u)
        if len(groups) == n_level or not moved_any:
            break
        # aggregate: new supernode ids in order of smallest member id
        ordered = sorted(groups.values(), key=lambda ms: min(ms))
        new_id = {}
        for cid, ms in enumerate(ordered):
            for u in ms:
                new_id[u] = cid
        new_weights: list[dict[int, float]] = [dict() for _ in range(len(ordered))]
        new_selfw = [0.0] * len(ordered)
        for u in range(n_level):
            cu = new_id[u]
            new_selfw[cu] += selfw[u]
            for v, w in weights[u].items():
                cv = new_id[v]
                if cu == cv:
                    new_selfw[cu] += w  # both directions add up to 2x intra
                elif cu < cv:
                    new_weights[cu][cv] = new_weights[cu].get(cv, 0.0) + w
        for a in range(len(ordered)):
            for b, w in list(new_weights[a].items()):
                new_weights[b][a] = w
        weights, selfw = new_weights, new_selfw
        node_of = [new_id[c] for c in (comm[x] for x in node_of)]
        level += 1
        if level > 50:
            break
    final = [comm[x] for x in node_of]
    return from_labels(final)


def _louvain_quality(weights, selfw, comm, two_m) -> float:
    """Weighted modularity of the current level assignment (for tracing)."""
    tot: dict[int, float] = {}
    inner: dict[int, float] = {}
    for u in range(len(weights)):
        cu = comm[u]
        k_u = selfw[u] + sum(weights[u].values())
        tot[cu] = tot.get(cu, 0.0) + k_u
        inner[cu] = inner.get(cu, 0.0) + selfw[u]
        for v, w in weights[u].items():
            if comm[v] == cu:
                inner[cu] = inner.get(cu, 0.0) + w
    return sum(inner.get(c, 0.0) / two_m - (tc / two_m) ** 2
               for c, tc in tot.items())


# ---------------------------------------------------------------------------
# Fluid communities

def fluid_communities(g: Graph, k: int, seed: int = 0,
                      max_sweeps: int = 200) -> Partition:
    """k density-weighted fluids expanding over seeded node-order sweeps.

    Each fluid's density is 1/|community|; a node joins the community with
    the highest density sum over itself and its neighbors (staying put on
    ties that include its current community).  A community's last member
    never leaves, so exactly k communities survive.  Disconnected graphs
    run per component with k apportioned by component size.
    """
    if not (1 <= k <= g.n):
        raise ValueError(f"k must lie in 1..{g.n} (got {k})")
    comps = connected_components(g)
    if comps.count > 1:
        return _fluid_disconnected(g, comps, k, seed)
    rng = Rng(seed)
    return from_labels(_fluid_connected(g.n, g.adjacency_sets(), k, rng, max_sweeps))


def _fluid_connected(n: int, adj_sets, k: int, rng: Rng,
                     max_sweeps: int) -> list[int]:
    adj = [sorted(s) for s in adj_sets]
    comm: list[int | None] = [None] * n
    size = [0] * k
    for cid, node in enumerate(rng.sample(range(n), k)):
        comm[node] = cid
        size[cid] = 1
    for _ in range(max_sweeps):
        order = list(range(n))
        rng.shuffle(order)
        changed = False
        for v in order:
            density: dict[int, float] = {}
            if comm[v] is not None:
                density[comm[v]] = density.get(comm[v], 0.0) + 1.0 / size[comm[v]]
            for u in adj[v]:
                if comm[u] is not None:
                    density[comm[u]] = density.get(comm[u], 0.0) + 1.0 / size[comm[u]]
            if not density:
                continue
            top = max(density.values())
            candidates = sorted(c for c, val in density.items()
                                if val >= top - _TIE_EPS)
            old = comm[v]
            if old in candidates:
                continue
            if old is not None:
                if size[old] == 1:
                    continue  # last member anchors its fluid
                size[old] -= 1
            new = candidates[0] if len(candidates) == 1 else rng.choice(candidates)
            comm[v] = new
            size[new] += 1
            changed = True
        if not changed and all(c is not None for c in comm):
            break
    if any(c is None for c in comm):
        raise RuntimeError("fluid expansion failed to cover a connected graph")
    return [int(c) for c in comm]


def _fluid_disconnected(g: Graph, comps, k: int, seed: int) -> Partition:
    """Apportion k over components by size (largest remainder, each
    component capped at its size); components granted zero fluids become
    single communities."""
    sizes = list(comps.sizes)
    m = len(sizes)
    n = g.n
    if k >= m:
        alloc = [max(1, min(s, int(k * s / n))) for s in sizes]
        ideal = [k * s / n for s in sizes]
        while sum(alloc) < k:
            room = [i for i in range(m) if alloc[i] < sizes[i]]
            i = max(room, key=lambda i: (ideal[i] - alloc[i], sizes[i], -i))
            alloc[i] += 1
        while sum(alloc) > k:
            room = [i for i in range(m) if alloc[i] > 1]
            i = min(room, key=lambda i: (ideal[i] - alloc[i], sizes[i], -i))
            alloc[i] -= 1
    else:
        alloc = [0] * m
        by_size = sorted(range(m), key=lambda i: (-sizes[i], i))
        for i in by_size[:k]:
            alloc[i] = 1
    rng = Rng(seed)
    groups: list[list[int]] = []
    adj = g.adjacency_sets()
    for cid, members in enumerate(comps.members()):
        if alloc[cid] <= 1:
            groups.append(members)
            continue
        local = {node: i for i, node in enumerate(members)}
        local_adj = [set(local[x] for x in adj[node] if x in local)
                     for node in members]
        sub = _fluid_connected(len(members), local_adj, alloc[cid],
                               rng.spawn(cid), 200)
        sub_groups: dict[int, list[int]] = {}
        for i, node in enumerate(members):
            sub_groups.setdefault(sub[i], []).append(node)
        groups.extend(sub_groups.values())
    return from_groups(groups, g.n)
