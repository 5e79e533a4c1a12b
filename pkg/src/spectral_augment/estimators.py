"""Estimator-style interface: fit/transform for augmentation, fit/predict
for community detection.

These wrap the functional core so the algorithms compose with standard
tooling (``get_params``/``set_params``, cloning, pipelines).  Estimators
accept a :class:`~.graph.Graph`, an iterable of edge pairs, or a square
symmetric 0/1 adjacency matrix; ``check_graph`` normalizes the input.
"""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, ClusterMixin, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from . import community as _community
from .augmentation import augment, augment_spillover
from .graph import Graph, connected_components
from .partition import Partition
from .spectral import BASIS_MODES, ElevationPlan


def check_graph(x) -> Graph:
    """Coerce supported graph representations into a Graph.

    Accepts a Graph (returned as-is), an iterable of (u, v) integer pairs,
    or a square symmetric adjacency matrix with zero diagonal (any nonzero
    entry counts as an edge).
    """
    if isinstance(x, Graph):
        return x
    if isinstance(x, np.ndarray) or hasattr(x, "toarray"):
        a = x.toarray() if hasattr(x, "toarray") else np.asarray(x)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise ValueError("adjacency matrix must be square")
        if np.any(a != a.T):
            raise ValueError("adjacency matrix must be symmetric")
        if np.any(np.diag(a) != 0):
            raise ValueError("adjacency matrix must have a zero diagonal")
        iu, ju = np.nonzero(np.triu(a, k=1))
        return Graph(a.shape[0], tuple((int(u), int(v)) for u, v in zip(iu, ju)))
    try:
        pairs = [(int(u), int(v)) for u, v in x]
    except (TypeError, ValueError) as exc:
        raise ValueError(
            "expected a Graph, an iterable of integer pairs, or a square "
            "adjacency matrix") from exc
    return Graph.from_pairs(None, pairs)


class SpectralEdgeAugmenter(TransformerMixin, BaseEstimator):
    """Propose new edges for a disconnected graph by elevating ``h`` of its
    zero Laplacian eigenvalues by ``w`` and realizing the implied per-node
    degree surplus greedily.

    Parameters
    ----------
    h : number of eigenvalues to elevate (must stay below the component
        count unless ``allow_spillover`` is set, in which case elevation
        continues into the lowest positive eigenvalues).
    w : elevation amplitude; ``None`` means the node count, a scale at
        which elevation comfortably reconnects components.
    basis_mode : null-space basis construction, one of
        ``indicator | mixed | solver``.
    seed : seed for the mixed-basis rotation.

    After ``fit``: ``result_`` (full outcome), ``new_edges_``, ``phi_``,
    ``theta_realized_``, ``m_dagger_``, ``components_``.
    """

    def __init__(self, h: int = 1, w: float | None = None,
                 basis_mode: str = "mixed", seed: int = 0,
                 allow_spillover: bool = False):
        self.h = h
        self.w = w
        self.basis_mode = basis_mode
        self.seed = seed
        self.allow_spillover = allow_spillover

    def _plan(self, g: Graph) -> ElevationPlan:
        w = float(g.n) if self.w is None else float(self.w)
        if self.basis_mode not in BASIS_MODES:
            raise ValueError(f"basis_mode must be one of {BASIS_MODES}")
        return ElevationPlan(h=int(self.h), w=w, basis_mode=self.basis_mode,
                             seed=int(self.seed))

    def fit(self, X, y=None):
        g = check_graph(X)
        plan = self._plan(g)
        run = augment_spillover if self.allow_spillover else augment
        result = run(g, plan)
        self.graph_ = g
        self.plan_ = plan
        self.components_ = connected_components(g)
        self.result_ = result
        self.new_edges_ = result.new_edges
        self.phi_ = result.phi
        self.theta_realized_ = result.theta_realized
        self.m_dagger_ = result.m_dagger
        return self

    def transform(self, X=None) -> Graph:
        """The augmented graph (original edges plus the proposed ones)."""
        check_is_fitted(self, "result_")
        if X is not None and check_graph(X) != self.graph_:
            raise ValueError(
                "augmentation is computed per graph; call fit_transform on "
                "the new graph instead")
        return self.graph_.with_edges(self.new_edges_)

    def fit_transform(self, X, y=None) -> Graph:
        return self.fit(X).transform()


class _GraphClusterer(ClusterMixin, BaseEstimator):
    """Shared fit/predict surface for the detection panel."""

    def _detect(self, g: Graph) -> Partition:
        raise NotImplementedError

    def fit(self, X, y=None):
        g = check_graph(X)
        part = self._detect(g)
        self.graph_ = g
        self.partition_ = part
        self.labels_ = np.asarray(part.labels, dtype=np.int64)
        self.k_ = part.k
        return self

    def predict(self, X=None) -> np.ndarray:
        check_is_fitted(self, "labels_")
        if X is not None and check_graph(X) != self.graph_:
            raise ValueError("detection is computed per graph; refit instead")
        return self.labels_


class GirvanNewman(_GraphClusterer):
    """First-split divisive detection: remove highest-betweenness edges
    until the component count increases."""

    def _detect(self, g: Graph) -> Partition:
        return _community.girvan_newman(g)


class GreedyModularity(_GraphClusterer):
    """Agglomerative modularity maximization (merge best pair until no
    positive gain)."""

    def _detect(self, g: Graph) -> Partition:
        return _community.greedy_modularity(g)


class LabelPropagation(_GraphClusterer):
    """Asynchronous label propagation; deterministic per seed."""

    def __init__(self, seed: int = 0):
        self.seed = seed

    def _detect(self, g: Graph) -> Partition:
        return _community.label_propagation(g, seed=int(self.seed))


class Louvain(_GraphClusterer):
    """Two-phase modularity optimization at resolution 1; deterministic
    per seed."""

    def __init__(self, seed: int = 0):
        self.seed = seed

    def _detect(self, g: Graph) -> Partition:
        return _community.louvain(g, seed=int(self.seed))


class FluidCommunities(_GraphClusterer):
    """Exactly-k density-driven fluids; deterministic per seed."""

    def __init__(self, k: int = 2, seed: int = 0):
        self.k = k
        self.seed = seed

    def _detect(self, g: Graph) -> Partition:
        return _community.fluid_communities(g, k=int(self.k), seed=int(self.seed))


DETECTORS = {
    "gn": GirvanNewman,
    "cnm": GreedyModularity,
    "lp": LabelPropagation,
    "louvain": Louvain,
    "fluid": FluidCommunities,
}


def make_detector(method: str, k: int | None = None, seed: int = 0) -> _GraphClusterer:
    """Instantiate a detector by CLI name (gn|cnm|lp|louvain|fluid)."""
    if method not in DETECTORS:
        raise ValueError(f"unknown method {method!r}; expected one of "
                         f"{sorted(DETECTORS)}")
    cls = DETECTORS[method]
    if cls is FluidCommunities:
        if k is None:
            raise ValueError("fluid detection needs --k (community count)")
        return cls(k=k, seed=seed)
    if cls in (LabelPropagation, Louvain):
        return cls(seed=seed)
    return cls()
