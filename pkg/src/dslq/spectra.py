"""Distances, transmissions, the distance signless Laplacian and its spectrum."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels
from .errors import DistanceUndefinedError, InvalidMatrixError, InvalidParameterError
from .graph import Graph

DEFAULT_TOL = 1e-10
# full diagonalisation up to this order, power iteration above it
DENSE_LIMIT = 64
ASYMMETRY_LIMIT = 1e-12
MAX_SWEEPS = 100


def distance_matrix(g: Graph) -> np.ndarray:
    """All-pairs hop distances as an int64 matrix.

    Raises DistanceUndefinedError naming the first unreachable pair.
    """
    dist = _kernels.bfs_distances(np.ascontiguousarray(g.adjacency, dtype=np.uint8))
    if (dist < 0).any():
        u, v = np.argwhere(dist < 0)[0]
        raise DistanceUndefinedError(int(u), int(v))
    return dist


def transmissions(g: Graph) -> np.ndarray:
    return distance_matrix(g).sum(axis=1)


def dsl_matrix(g: Graph) -> np.ndarray:
    """Q(G) = Tr(G) + D(G), kept as an integer matrix."""
    d = distance_matrix(g)
    return d + np.diag(d.sum(axis=1))


def _checked_matrix(m) -> np.ndarray:
    a = np.asarray(m, dtype=np.float64)
    if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] == 0:
        raise InvalidMatrixError(f"expected a non-empty square matrix, got shape {a.shape}")
    if not np.isfinite(a).all():
        raise InvalidMatrixError("matrix has non-finite entries")
    asym = float(np.max(np.abs(a - a.T)))
    if asym > ASYMMETRY_LIMIT:
        raise InvalidMatrixError(f"matrix is not symmetric (max asymmetry {asym:.3g})")
    return np.ascontiguousarray(a)


@dataclass(frozen=True)
class Spectrum:
    eigenvalues: np.ndarray  # descending

    @property
    def radius(self) -> float:
        return float(self.eigenvalues[0])

    def __len__(self):
        return len(self.eigenvalues)


def _jacobi(a: np.ndarray) -> np.ndarray:
    vals, converged = _kernels.jacobi_eigenvalues(a, MAX_SWEEPS)
    if not converged:
        raise InvalidMatrixError("Jacobi iteration did not converge")
    return np.sort(vals)[::-1]


def full_spectrum(m, tol: float = DEFAULT_TOL) -> Spectrum:
    if tol <= 0:
        raise InvalidParameterError("tol must be positive")
    return Spectrum(_jacobi(_checked_matrix(m)))


def _gershgorin_shift(a: np.ndarray) -> float:
    """Smallest shift that makes ``a + shift*I`` diagonally dominant (hence PSD)."""
    off = np.abs(a).sum(axis=1) - np.abs(np.diag(a))
    return float(max(0.0, np.max(off - np.diag(a))))


def spectral_radius(m, tol: float = DEFAULT_TOL, max_iter: int = 1_000_000) -> float:
    """Largest eigenvalue of a symmetric matrix.

    Orders up to ``DENSE_LIMIT`` are fully diagonalised; larger ones use
    power iteration from the all-ones vector, shifted so that every
    eigenvalue of the iterated matrix is nonnegative. For Q(G) the shift is
    zero since Q(G) is diagonally dominant.
    """
    if tol <= 0:
        raise InvalidParameterError("tol must be positive")
    a = _checked_matrix(m)
    if a.shape[0] <= DENSE_LIMIT:
        return float(_jacobi(a)[0])
    value, _, converged = _kernels.power_iteration(a, _gershgorin_shift(a), tol, max_iter)
    if not converged:
        raise InvalidMatrixError(f"power iteration did not converge in {max_iter} steps")
    return float(value)


def eta(g: Graph) -> float:
    """Distance signless Laplacian spectral radius of a connected graph."""
    return spectral_radius(dsl_matrix(g), DEFAULT_TOL)
