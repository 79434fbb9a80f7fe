"""Grounded Laplacian linear solves via an in-repo Cholesky factorization.

Grounding one node removes the null mode of a connected graph's Laplacian;
the remaining (n-1) x (n-1) system is symmetric positive definite and is
factored directly. Keeping the factorization in-repo makes the electrical
oracle independent of any external solver.
"""

from __future__ import annotations

import numpy as np

from .errors import SingularSystem
from .laplacian import DenseLaplacian
from .summation import EPS


class GroundedSolver:
    """Reusable factorization of a Laplacian with one grounded node."""

    def __init__(self, lap: DenseLaplacian, ground: int) -> None:
        n = lap.n
        if not (0 <= ground < n):
            raise ValueError(f"ground node {ground} outside [0, {n})")
        self.n = n
        self.ground = ground
        keep = np.arange(n) != ground
        self._keep = keep
        reduced = lap.matrix[np.ix_(keep, keep)]
        self._chol = _cholesky(reduced)

    def solve(self, b: np.ndarray) -> np.ndarray:
        """Potential vector W with W[ground] = 0 and L W = b off the ground row."""
        b = np.asarray(b, dtype=np.float64)
        if b.shape != (self.n,):
            raise ValueError(f"b must have shape ({self.n},)")
        y = _solve_lower(self._chol, b[self._keep])
        x = _solve_upper(self._chol, y)
        w = np.zeros(self.n)
        w[self._keep] = x
        return w

    def green_matrix(self) -> np.ndarray:
        """Inverse of the grounded system, embedded n x n with zero ground row/col.

        Column u equals the potential for a unit current injected at u and
        extracted at the ground node.
        """
        m = self.n - 1
        y = _solve_lower(self._chol, np.eye(m))
        x = _solve_upper(self._chol, y)
        g = np.zeros((self.n, self.n))
        g[np.ix_(self._keep, self._keep)] = x
        return g


def solve_grounded(lap: DenseLaplacian, b: np.ndarray, ground: int) -> np.ndarray:
    """One-shot grounded solve; see GroundedSolver for reuse across injections.

    Requires a balanced current injection (sum of b is zero). Raises
    SingularSystem when the graph is disconnected.
    """
    b = np.asarray(b, dtype=np.float64)
    scale = float(np.abs(b).sum())
    if abs(float(b.sum())) > 1e-9 * max(scale, 1.0):
        raise ValueError("current injection b must sum to zero")
    return GroundedSolver(lap, ground).solve(b)


def _cholesky(a: np.ndarray) -> np.ndarray:
    """Lower-triangular factor of an SPD matrix; column-wise elimination."""
    m = a.shape[0]
    c = np.array(a, dtype=np.float64)
    if m == 0:
        return c
    floor = max(float(np.max(np.diag(c))), 1.0) * m * EPS * 16.0
    for j in range(m):
        pivot = c[j, j] - c[j, :j] @ c[j, :j]
        if pivot <= floor:
            raise SingularSystem("grounded system is singular (disconnected graph)")
        d = np.sqrt(pivot)
        c[j, j] = d
        if j + 1 < m:
            c[j + 1 :, j] = (c[j + 1 :, j] - c[j + 1 :, :j] @ c[j, :j]) / d
    return np.tril(c)


def _solve_lower(c: np.ndarray, b: np.ndarray) -> np.ndarray:
    m = c.shape[0]
    y = np.array(b, dtype=np.float64)
    for j in range(m):
        y[j] = (y[j] - c[j, :j] @ y[:j]) / c[j, j]
    return y


def _solve_upper(c: np.ndarray, y: np.ndarray) -> np.ndarray:
    m = c.shape[0]
    x = np.array(y, dtype=np.float64)
    for j in range(m - 1, -1, -1):
        x[j] = (x[j] - c[j + 1 :, j] @ x[j + 1 :]) / c[j, j]
    return x
