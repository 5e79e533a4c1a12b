"""Dense symmetric eigendecomposition and zero-eigenvalue elevation.

The eigensolver is a cyclic Jacobi rotation sweep.  It is O(n^3) but
deterministic (fixed rotation order, fixed tie handling), accurate to a
few ulps for the positive-semidefinite Laplacians this package works on,
and it never mixes exactly-zero blocks, so disconnected graphs keep
component-local eigenvectors.

Elevation adds ``w`` to the eigenvalues at basis positions ``2..h+1``:

    L' = L + w * sum_{q=2..h+1} v_q v_q^T

Position 1 is always preserved at zero (for a mixed basis it is the
normalized constant direction, for an indicator basis the largest
component's indicator), so the graph-wide zero mode survives elevation.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graph import ComponentLabeling, Graph, connected_components, laplacian
from .rng import Rng


class JacobiConvergenceError(RuntimeError):
    """Rotation sweeps exhausted before the off-diagonal mass vanished."""

    def __init__(self, off_diagonal: float, threshold: float, sweeps: int):
        super().__init__(
            f"Jacobi failed to converge in {sweeps} sweeps: "
            f"off-diagonal norm {off_diagonal:.3e} > threshold {threshold:.3e}")
        self.off_diagonal = off_diagonal
        self.threshold = threshold


@dataclass(frozen=True)
class EigenSystem:
    """Full spectrum: ascending eigenvalues and aligned orthonormal columns."""

    values: np.ndarray
    vectors: np.ndarray

    @property
    def order(self) -> int:
        return self.values.shape[0]


def _check_symmetric(a: np.ndarray, tol: float = 1e-10) -> np.ndarray:
    a = np.asarray(a, dtype=np.float64)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError("matrix must be square")
    if a.size and np.max(np.abs(a - a.T)) > tol * max(1.0, np.max(np.abs(a))):
        raise ValueError("matrix is not symmetric")
    return a


def _off_diagonal_norm(a: np.ndarray) -> float:
    # summed directly (subtracting the diagonal from ||a||_F^2 cancels
    # catastrophically once the off-diagonal mass is tiny)
    off = a.copy()
    np.fill_diagonal(off, 0.0)
    return float(np.linalg.norm(off))


def jacobi_eigh(a: np.ndarray, rel_threshold: float = 1e-12,
                max_sweeps: int = 100) -> tuple[np.ndarray, np.ndarray]:
    """Cyclic Jacobi eigendecomposition of a symmetric matrix.

    Returns (eigenvalues ascending, eigenvector columns).  Sweeps stop when
    the off-diagonal Frobenius norm drops below ``rel_threshold * ||a||_F``.
    Rotations are applied in fixed row-major pair order; elements already
    below ``threshold / n`` are skipped, which cannot stall convergence
    because n*(n-1)/2 such elements still satisfy the stopping rule.
    """
    a = _check_symmetric(a)
    n = a.shape[0]
    if n == 0:
        return np.zeros(0), np.zeros((0, 0))
    work = a.copy()
    vectors = np.eye(n)
    fro = float(np.linalg.norm(work))
    if fro == 0.0:
        return np.zeros(n), vectors
    threshold = rel_threshold * fro
    skip = threshold / n
    converged = False
    for _ in range(max_sweeps):
        if _off_diagonal_norm(work) <= threshold:
            converged = True
            break
        for p in range(n - 1):
            row = work[p]
            for q in range(p + 1, n):
                apq = row[q]
                if abs(apq) <= skip:
                    continue
                tau = (work[q, q] - work[p, p]) / (2.0 * apq)
                if tau >= 0.0:
                    t = 1.0 / (tau + np.sqrt(1.0 + tau * tau))
                else:
                    t = -1.0 / (-tau + np.sqrt(1.0 + tau * tau))
                c = 1.0 / np.sqrt(1.0 + t * t)
                s = t * c
                wp = work[:, p].copy()
                wq = work[:, q].copy()
                work[:, p] = c * wp - s * wq
                work[:, q] = s * wp + c * wq
                wp = work[p, :].copy()
                wq = work[q, :].copy()
                work[p, :] = c * wp - s * wq
                work[q, :] = s * wp + c * wq
                work[p, q] = 0.0
                work[q, p] = 0.0
                vp = vectors[:, p].copy()
                vq = vectors[:, q].copy()
                vectors[:, p] = c * vp - s * vq
                vectors[:, q] = s * vp + c * vq
    else:
        converged = _off_diagonal_norm(work) <= threshold
    if not converged:
        raise JacobiConvergenceError(_off_diagonal_norm(work), threshold, max_sweeps)
    values = np.diag(work).copy()
    order = np.argsort(values, kind="stable")
    values = values[order]
    vectors = vectors[:, order]
    _normalize_signs(vectors)
    return values, vectors


def _normalize_signs(vectors: np.ndarray, tol: float = 1e-12) -> None:
    """Flip columns so the first above-tolerance coordinate is positive."""
    for j in range(vectors.shape[1]):
        col = vectors[:, j]
        nonzero = np.nonzero(np.abs(col) > tol)[0]
        if nonzero.size and col[nonzero[0]] < 0:
            vectors[:, j] = -col


def eigendecompose(lap: np.ndarray) -> EigenSystem:
    """Full eigensystem of a symmetric matrix, eigenvalues ascending."""
    values, vectors = jacobi_eigh(lap)
    return EigenSystem(values, vectors)


def reconstruction_residual(es: EigenSystem, lap: np.ndarray) -> float:
    approx = (es.vectors * es.values) @ es.vectors.T
    return float(np.max(np.abs(approx - lap))) if lap.size else 0.0


def orthonormality_residual(es: EigenSystem) -> float:
    n = es.order
    if n == 0:
        return 0.0
    gram = es.vectors @ es.vectors.T
    return float(np.max(np.abs(gram - np.eye(n))))


def zero_multiplicity(es: EigenSystem, tol: float | None = None) -> int:
    """Count eigenvalues at zero; equals the connected-component count."""
    if es.order == 0:
        return 0
    top = max(float(es.values[-1]), 0.0)
    if tol is None:
        tol = 1e-8 * (1.0 + top)
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    return int(np.sum(np.abs(es.values) <= tol))


@dataclass(frozen=True)
class KernelBasis:
    """Orthonormal vectors spanning (at least) the Laplacian null space.

    ``vectors`` holds one column per basis vector.  Column 0 is the
    position kept at zero during elevation; columns 1..h are the ones an
    ``h``-fold elevation raises.  ``mode`` records the construction.
    """

    vectors: np.ndarray
    mode: str
    seed: int = 0

    @property
    def size(self) -> int:
        return self.vectors.shape[1]


BASIS_MODES = ("indicator", "mixed", "solver")


def _indicator_columns(components: ComponentLabeling, n: int) -> np.ndarray:
    cols = np.zeros((n, components.count))
    for node, lab in enumerate(components.labels):
        cols[node, lab] = 1.0
    return cols / np.sqrt(np.asarray(components.sizes, dtype=np.float64))


def _orthonormal_completion(first: np.ndarray, rng: Rng) -> np.ndarray:
    """Orthogonal matrix whose first column is ``first`` and whose other
    columns come from seeded Gaussian draws (modified Gram-Schmidt, two
    orthogonalization passes)."""
    m = first.shape[0]
    cols = [first / np.linalg.norm(first)]
    while len(cols) < m:
        g = np.array([rng.normal() for _ in range(m)])
        for _ in range(2):
            for c in cols:
                g = g - np.dot(c, g) * c
        norm = np.linalg.norm(g)
        if norm < 1e-8:
            continue  # unlucky draw, take the next one
        cols.append(g / norm)
    return np.column_stack(cols)


def kernel_basis(g: Graph, mode: str = "mixed", seed: int = 0,
                 components: ComponentLabeling | None = None,
                 eigensystem: EigenSystem | None = None) -> KernelBasis:
    """Orthonormal null-space basis of the graph Laplacian.

    indicator: normalized component-membership vectors; the largest
        component comes first (the preserved position), the rest follow in
        component order (size ascending).
    mixed: the indicator basis rotated by a seeded random orthogonal
        matrix whose first column is pinned to the constant direction, so
        every elevated vector is generically supported on all components.
    solver: the eigensolver's own near-null eigenvectors, re-orthonormalized.
    """
    if mode not in BASIS_MODES:
        raise ValueError(f"unknown basis mode {mode!r}; expected one of {BASIS_MODES}")
    comps = components if components is not None else connected_components(g)
    m = comps.count
    if m == 0:
        return KernelBasis(np.zeros((0, 0)), mode, seed)

    if mode == "indicator":
        cols = _indicator_columns(comps, g.n)
        order = [m - 1] + list(range(m - 1))  # largest component first
        return KernelBasis(cols[:, order], mode, seed)

    if mode == "mixed":
        cols = _indicator_columns(comps, g.n)
        weights = np.sqrt(np.asarray(comps.sizes, dtype=np.float64) / g.n)
        rotation = _orthonormal_completion(weights, Rng(seed))
        return KernelBasis(cols @ rotation, mode, seed)

    es = eigensystem if eigensystem is not None else eigendecompose(laplacian(g))
    vecs = es.vectors[:, :m].copy()
    # re-orthonormalize against accumulated rounding
    for j in range(m):
        for prev in range(j):
            vecs[:, j] -= np.dot(vecs[:, prev], vecs[:, j]) * vecs[:, prev]
        vecs[:, j] /= np.linalg.norm(vecs[:, j])
    return KernelBasis(vecs, mode, seed)


def extended_basis(g: Graph, mode: str = "mixed", seed: int = 0,
                   min_vectors: int = 0,
                   components: ComponentLabeling | None = None,
                   eigensystem: EigenSystem | None = None) -> KernelBasis:
    """Kernel basis padded with the lowest positive-eigenvalue eigenvectors.

    Sweeps that raise more positions than the graph has zero eigenvalues
    need extra orthonormal directions; the natural continuation is the
    spectrum itself, ascending.  Requires a full eigendecomposition when
    padding is actually needed.
    """
    comps = components if components is not None else connected_components(g)
    base = kernel_basis(g, mode=mode, seed=seed, components=comps,
                        eigensystem=eigensystem)
    if min_vectors <= base.size:
        return base
    if min_vectors > g.n:
        raise ValueError(f"cannot build {min_vectors} orthonormal vectors in "
                         f"dimension {g.n}")
    es = eigensystem if eigensystem is not None else eigendecompose(laplacian(g))
    extra = es.vectors[:, comps.count:min_vectors].copy()
    # project out the kernel part and re-orthonormalize for safety
    for j in range(extra.shape[1]):
        col = extra[:, j]
        col -= base.vectors @ (base.vectors.T @ col)
        for prev in range(j):
            col -= np.dot(extra[:, prev], col) * extra[:, prev]
        col /= np.linalg.norm(col)
        extra[:, j] = col
    return KernelBasis(np.hstack([base.vectors, extra]),
                       f"{mode}+spectrum", seed)


@dataclass(frozen=True)
class ElevationPlan:
    """Control knobs: how many eigenvalues to raise, how far, which basis."""

    h: int
    w: float
    basis_mode: str = "mixed"
    seed: int = 0

    def __post_init__(self):
        if self.h < 0:
            raise ValueError("h must be nonnegative")
        if self.w < 0:
            raise ValueError("elevation amplitude must be nonnegative")
        if self.basis_mode not in BASIS_MODES:
            raise ValueError(f"unknown basis mode {self.basis_mode!r}")


def elevate(lap: np.ndarray, basis: KernelBasis, plan: ElevationPlan) -> np.ndarray:
    """Raise ``h`` zero eigenvalues by ``w``: adds w * v v^T for each of the
    basis vectors at positions 2..h+1 (position 1 stays at zero)."""
    if plan.h > basis.size - 1:
        raise ValueError(
            f"cannot elevate more than M-1 zero eigenvalues (h={plan.h}, M={basis.size})")
    if plan.h == 0:
        return lap.copy()
    sel = basis.vectors[:, 1:plan.h + 1]
    update = sel @ sel.T
    update = (update + update.T) / 2.0
    return lap + plan.w * update


def elevated_diagonal_gain(basis: KernelBasis, plan: ElevationPlan) -> np.ndarray:
    """diag(L' - L) without forming either matrix: w * sum of squares of the
    elevated basis vectors, row-wise."""
    if plan.h > basis.size - 1:
        raise ValueError(
            f"cannot elevate more than M-1 zero eigenvalues (h={plan.h}, M={basis.size})")
    sel = basis.vectors[:, 1:plan.h + 1]
    return plan.w * np.sum(sel * sel, axis=1)
