"""Closed-form limits on elevation amplitude and augmented edge density.

Conventions: n nodes, e edges, m connected components, h elevated
eigenvalues, w elevation amplitude.  All bounds are inclusive at the
boundary.  The density of an augmented edge set is measured relative to
the original: theta = |E'| / |E| >= 1.
"""

from __future__ import annotations

from dataclasses import dataclass, asdict


def projected_density(h: int, w: float, e: int) -> float:
    """Edge density implied by the trace identity: theta = 1 + h*w / (2e)."""
    if e <= 0:
        raise ValueError("edge density is undefined for an edgeless graph")
    return 1.0 + (h * w) / (2.0 * e)


def complete_graph_bounds(n: int, e: int, m: int, h: int) -> tuple[float, float]:
    """Loose bounds from completing the largest merged component.

    With h components merged into the largest and the remaining m-1-h left
    as isolates, the densest outcome is the complete graph on
    n - (m-1-h) nodes:

        theta_hat_h = [n-(m-1-h)] * [n-(m-1-h)-1] / (2e)
        w_hat_h     = [(n-m+1+h) * (n-m+h) - 2e] / h

    Returns (w_hat_h, theta_hat_h).  Requires 1 <= h <= m-1.
    """
    if e <= 0:
        raise ValueError("bounds are undefined for an edgeless graph")
    if not (1 <= h <= m - 1):
        raise ValueError(f"h must satisfy 1 <= h <= m-1 (h={h}, m={m})")
    block = n - (m - 1 - h)
    theta_hat = block * (block - 1) / (2.0 * e)
    w_hat = (block * (block - 1) - 2.0 * e) / h
    return w_hat, theta_hat


def complete_graph_maxima(n: int, e: int, m: int) -> tuple[float | None, float]:
    """Maxima of the complete-graph bounds over h (attained at h = m-1):

        w_hat_max     = [n(n-1) - 2e] / (m-1)    (undefined when m = 1)
        theta_hat_max = n(n-1) / (2e)
    """
    if e <= 0:
        raise ValueError("bounds are undefined for an edgeless graph")
    theta_hat_max = n * (n - 1) / (2.0 * e)
    if m <= 1:
        return None, theta_hat_max
    return (n * (n - 1) - 2.0 * e) / (m - 1), theta_hat_max


def amplitude_upper_bound(n: int, m: float, h: int) -> float:
    """Upper bound for the elevation amplitude w.

    Two regimes: for 0 < h < m-1 the degree-budget argument gives
    n*(n-m+h)/(2h), while the elevated value, as the top eigenvalue of a
    graph Laplacian, can never exceed n for any h.  The reported bound is
    the tighter of the two on the first branch and n from h >= m-1 on.
    """
    if h < 1:
        raise ValueError("amplitude bound needs h >= 1")
    if h < m - 1:
        return min(n * (n - m + h) / (2.0 * h), float(n))
    return float(n)


def density_upper_bound(n: int, e: int, m: int, h: int) -> tuple[float, float, bool]:
    """Upper bounds for density at a given h and over all h.

    theta_max_h = 1 + h*n/(2e) = 1 + h/k_ave, and over all h
    theta_max = 1 + (m-1)/k_ave.  Valid for common topologies with
    m < n/2; outside that regime the n-cap branch has a discontinuity, so
    the returned flag marks the report as caveated.
    """
    if e <= 0:
        raise ValueError("edge density is undefined for an edgeless graph")
    k_ave = 2.0 * e / n
    theta_max_h = 1.0 + h / k_ave
    theta_max = 1.0 + (m - 1) / k_ave
    extreme_topology = m >= n / 2
    return theta_max_h, theta_max, extreme_topology


def is_realizable(n: int, m: int, h: int, w: float) -> bool:
    """Whether an amplitude is within the inclusive upper bound.

    h = 0 elevates nothing and is always realizable.
    """
    if w <= 0 or h == 0:
        return True
    return w <= amplitude_upper_bound(n, m, h)


@dataclass(frozen=True)
class BoundReport:
    """All bound values for one (graph summary, h) query."""

    n: int
    e: int
    m: int
    h: int
    k_ave: float
    w_upper: float | None
    theta_upper_h: float | None
    theta_upper: float
    w_hat_max_h: float | None
    theta_hat_max_h: float | None
    w_hat_max: float | None
    theta_hat_max: float
    extreme_topology: bool

    def to_dict(self) -> dict:
        return asdict(self)


def bound_report(n: int, e: int, m: int, h: int) -> BoundReport:
    """Assemble every bound this module can state for one query.

    For h outside 1..m-1 the per-h complete-graph bounds are reported as
    null rather than raising; the amplitude cap w <= n applies to any
    h >= 1.
    """
    if e <= 0:
        raise ValueError("bound report is undefined for an edgeless graph")
    k_ave = 2.0 * e / n
    w_hat_max, theta_hat_max = complete_graph_maxima(n, e, m)
    if 1 <= h <= m - 1:
        w_hat_max_h, theta_hat_max_h = complete_graph_bounds(n, e, m, h)
    else:
        w_hat_max_h = theta_hat_max_h = None
    if h >= 1:
        w_upper = amplitude_upper_bound(n, m, h)
        theta_upper_h, theta_upper, extreme = density_upper_bound(n, e, m, h)
    else:
        w_upper = theta_upper_h = None
        _, theta_upper, extreme = density_upper_bound(n, e, m, 1)
    return BoundReport(
        n=n, e=e, m=m, h=h, k_ave=k_ave,
        w_upper=w_upper,
        theta_upper_h=theta_upper_h,
        theta_upper=theta_upper,
        w_hat_max_h=w_hat_max_h,
        theta_hat_max_h=theta_hat_max_h,
        w_hat_max=w_hat_max,
        theta_hat_max=theta_hat_max,
        extreme_topology=extreme,
    )
