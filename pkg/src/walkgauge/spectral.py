"""Dense symmetric eigendecomposition and stable matrix-exponential diagonals.

The eigensolver is cyclic Jacobi with a fixed row-major sweep order, so a
given matrix always produces bit-identical output. Everything downstream
of the eigenvalues is evaluated in shifted form exp(beta*(lam_j - lam_1)),
which keeps all quantities finite for arbitrarily large beta; true
exponential-scale values are recovered through an explicit log-scale shift.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .errors import TheoremViolationError

__all__ = [
    "ExpDiagonal",
    "LogScaledValue",
    "SpectralConvergenceError",
    "Spectrum",
    "eigendecompose",
    "exp_diagonal",
    "partition_function",
    "subgraph_centrality",
]

#: beta values beyond this are evaluated at the beta -> infinity limit
BETA_CAP = 1e4

_PERRON_CLAMP = 1e-10


class SpectralConvergenceError(RuntimeError):
    """Jacobi iteration failed to reach the convergence threshold."""


@dataclass(frozen=True, eq=False)
class Spectrum:
    """Eigenvalues in descending order with orthonormal eigenvector columns."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray

    @property
    def n(self) -> int:
        return self.eigenvalues.shape[0]

    @cached_property
    def perron(self) -> np.ndarray:
        """Unit eigenvector of the top eigenvalue, tiny negatives clamped to 0.

        For a connected graph this is the Perron vector (entrywise
        nonnegative). When the top eigenvalue is degenerate the returned
        column is basis-dependent; use top_projector_diagonal instead.
        """
        v = self.eigenvectors[:, 0].copy()
        v[(v < 0) & (v > -_PERRON_CLAMP)] = 0.0
        return v / np.linalg.norm(v)

    def top_multiplicity(self, gap: float = 1e-8) -> int:
        """Number of eigenvalues within ``gap`` of the largest."""
        lam = self.eigenvalues
        return int(np.sum(lam >= lam[0] - gap))

    def top_projector_diagonal(self, gap: float = 1e-8) -> np.ndarray:
        """Diagonal of the orthogonal projector onto the top eigenspace."""
        m = self.top_multiplicity(gap)
        q = self.eigenvectors[:, :m]
        return np.sum(q * q, axis=1)

    def uniform_in_top_eigenspace(self, gap: float = 1e-8, tol: float = 1e-8) -> bool:
        """True iff the constant vector lies in the top eigenspace.

        Equivalent to the graph being regular: the all-ones vector is an
        adjacency eigenvector exactly for constant degree, and its
        eigenvalue (the degree) is then the largest one.
        """
        m = self.top_multiplicity(gap)
        u = np.full(self.n, 1.0 / math.sqrt(self.n))
        q = self.eigenvectors[:, :m]
        residual = u - q @ (q.T @ u)
        return bool(np.abs(residual).max() <= tol)


def _offdiagonal_norm(a: np.ndarray) -> float:
    b = a.copy()
    np.fill_diagonal(b, 0.0)
    # direct sum of squares; the sqrt(|A|_F^2 - sum diag^2) form cancels
    # catastrophically near convergence
    return float(np.linalg.norm(b))


def eigendecompose(
    a: np.ndarray, *, tol_factor: float = 1e-13, max_sweeps: int = 50
) -> Spectrum:
    """Eigendecompose a real symmetric matrix by cyclic Jacobi rotations.

    Sweeps the strict upper triangle in fixed row-major order until the
    off-diagonal Frobenius norm drops below ``tol_factor`` times the
    Frobenius norm of the input. Deterministic: no pivot search, no
    randomness. Raises SpectralConvergenceError after ``max_sweeps``.
    """
    a = np.asarray(a, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError("matrix must be square")
    if not np.array_equal(a, a.T):
        raise ValueError("matrix must be symmetric")
    n = a.shape[0]
    work = a.copy()
    q = np.eye(n)
    norm_a = float(np.linalg.norm(a))
    threshold = tol_factor * norm_a
    converged = norm_a == 0.0
    if not converged:
        for _ in range(max_sweeps):
            if _offdiagonal_norm(work) <= threshold:
                converged = True
                break
            for p in range(n - 1):
                for r in range(p + 1, n):
                    apr = work[p, r]
                    if apr == 0.0:
                        continue
                    tau = (work[r, r] - work[p, p]) / (2.0 * apr)
                    t = math.copysign(1.0, tau) / (abs(tau) + math.hypot(1.0, tau))
                    c = 1.0 / math.hypot(1.0, t)
                    s = t * c
                    row_p = work[p, :].copy()
                    row_r = work[r, :].copy()
                    work[p, :] = c * row_p - s * row_r
                    work[r, :] = s * row_p + c * row_r
                    col_p = work[:, p].copy()
                    col_r = work[:, r].copy()
                    work[:, p] = c * col_p - s * col_r
                    work[:, r] = s * col_p + c * col_r
                    work[p, r] = 0.0
                    work[r, p] = 0.0
                    qp = q[:, p].copy()
                    qr = q[:, r].copy()
                    q[:, p] = c * qp - s * qr
                    q[:, r] = s * qp + c * qr
        else:
            converged = _offdiagonal_norm(work) <= threshold
    if not converged:
        raise SpectralConvergenceError(
            f"Jacobi did not converge in {max_sweeps} sweeps; "
            f"off-diagonal residual {_offdiagonal_norm(work):.3e} "
            f"(threshold {threshold:.3e})"
        )
    lam = np.diag(work).copy()
    order = np.argsort(-lam, kind="stable")
    lam = lam[order]
    q = q[:, order]
    # sign convention: largest-magnitude entry of each column is positive
    for j in range(n):
        col = q[:, j]
        if col[int(np.argmax(np.abs(col)))] < 0:
            q[:, j] = -col
    lam.setflags(write=False)
    q.setflags(write=False)
    return Spectrum(lam, q)


@dataclass(frozen=True)
class LogScaledValue:
    """A positive real carried as its natural logarithm."""

    log: float

    @property
    def value(self) -> float:
        try:
            return math.exp(self.log)
        except OverflowError:
            return math.inf


@dataclass(frozen=True, eq=False)
class ExpDiagonal:
    """Diagonal of exp(beta*A) in shifted form.

    ``scaled_y`` holds exp(-log_scale) * (e^{beta A})_ii with
    log_scale = beta*lam_1, so entries stay in (0, 1] for every beta.
    ``z`` is the vector ln (e^{beta A})_ii, which never overflows.
    """

    beta: float
    scaled_y: np.ndarray
    log_scale: float
    z: np.ndarray

    @property
    def y(self) -> np.ndarray:
        """True diagonal entries; +inf where they exceed float range."""
        with np.errstate(over="ignore"):
            return np.exp(self.z)

    @property
    def n(self) -> int:
        return self.scaled_y.shape[0]


def exp_diagonal(s: Spectrum, beta: float) -> ExpDiagonal:
    """Diagonal of exp(beta*A) from the spectrum, evaluated in shifted form.

    y_i = sum_j Q_ij^2 exp(beta*lam_j), computed as
    exp(beta*lam_1) * sum_j Q_ij^2 exp(beta*(lam_j - lam_1)) so nothing
    overflows. beta = 0 returns the all-ones diagonal; beta < 0 is
    rejected.
    """
    if beta < 0:
        raise ValueError("beta must be >= 0")
    lam = s.eigenvalues
    weights = np.exp(beta * (lam - lam[0]))
    scaled_y = (s.eigenvectors**2) @ weights
    # components orthogonal to the top eigenspace can underflow at huge
    # beta on disconnected graphs; clip so z and products of y stay finite
    tiny = np.finfo(float).tiny
    scaled_y = np.maximum(scaled_y, tiny)
    log_scale = beta * lam[0]
    z = log_scale + np.log(scaled_y)
    return ExpDiagonal(beta=beta, scaled_y=scaled_y, log_scale=log_scale, z=z)


def partition_function(s: Spectrum, beta: float) -> LogScaledValue:
    """Z = trace exp(beta*A) = sum_j exp(beta*lam_j), as a log-scaled value.

    ln Z = beta*lam_1 + ln sum_j exp(beta*(lam_j - lam_1)). Z >= n always,
    with equality at beta > 0 only for the edgeless graph.
    """
    if beta < 0:
        raise ValueError("beta must be >= 0")
    lam = s.eigenvalues
    log_z = beta * lam[0] + math.log(math.fsum(np.exp(beta * (lam - lam[0]))))
    if beta > 0 and log_z < math.log(s.n) - 1e-12:
        raise TheoremViolationError(
            f"partition function below vertex count: ln Z = {log_z!r}, n = {s.n}"
        )
    return LogScaledValue(log_z)


def subgraph_centrality(s: Spectrum) -> np.ndarray:
    """Subgraph centrality vector: (e^A)_ii, the beta = 1 diagonal."""
    return exp_diagonal(s, 1.0).y
