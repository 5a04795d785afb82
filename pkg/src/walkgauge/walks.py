"""Exact closed-walk counting and the walk-regularity decision procedure.

All arithmetic here is exact. Matrix powers run on numpy int64 while a
proven bound (entries of A^k are at most (n-1)^k, accumulated dot products
at most n*(n-1)^k) guarantees no overflow, and switch to object-dtype
Python integers beyond that, so (A^k)_ii is always the true walk count.

Checking diag(A^k) for k = 0..n-1 decides walk-regularity: the
characteristic polynomial expresses every higher power of A as an integer
combination of lower ones (Cayley-Hamilton), so a constant diagonal up to
n-1 forces a constant diagonal at every k.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

import numpy as np

from .graphs import Graph

__all__ = [
    "DiagonalSequence",
    "WalkCountError",
    "WalkRegularityDecision",
    "characteristic_polynomial",
    "diagonal_sequence",
    "distinct_eigenvalue_bound",
    "hamilton_reduction_check",
    "is_walk_regular_exact",
]

_INT64_LIMIT = 2**63 - 1


class WalkCountError(RuntimeError):
    """Internal inconsistency in exact arithmetic; indicates a bug."""


@dataclass(frozen=True)
class DiagonalSequence:
    """diag(A^k) for k = 0..K as exact non-negative integers."""

    n: int
    rows: tuple[tuple[int, ...], ...]

    @property
    def max_k(self) -> int:
        return len(self.rows) - 1

    def trace(self, k: int) -> int:
        """trace(A^k) = number of closed k-walks in the graph."""
        return sum(self.rows[k])


@dataclass(frozen=True)
class WalkRegularityDecision:
    """Outcome of the exact walk-regularity decision.

    ``witness_k`` is the smallest k with a non-constant diag(A^k) and
    ``witness_vertices`` a pair whose closed-walk counts differ there;
    both are None when the graph is walk-regular.
    """

    walk_regular: bool
    witness_k: int | None
    witness_vertices: tuple[int, int] | None
    max_k_checked: int

    def to_dict(self) -> dict:
        return {
            "walk_regular": self.walk_regular,
            "witness_k": self.witness_k,
            "witness_vertices": (
                list(self.witness_vertices) if self.witness_vertices else None
            ),
            "max_k_checked": self.max_k_checked,
        }


def _power_diagonals(g: Graph, max_k: int) -> Iterator[tuple[int, ...]]:
    """Yield diag(A^k) for k = 0..max_k, promoting int64 -> object on demand."""
    n = g.n
    yield (1,) * n
    if max_k == 0:
        return
    a64 = np.zeros((n, n), dtype=np.int64)
    for i, j in g.edges:
        a64[i, j] = 1
        a64[j, i] = 1
    a_obj = None
    power = a64  # A^k for the current k
    exact = False  # True once power holds Python ints
    for k in range(1, max_k + 1):
        yield tuple(int(x) for x in power.diagonal())
        if k == max_k:
            break
        if not exact and n * int(power.max()) > _INT64_LIMIT:
            power = power.astype(object)
            exact = True
        if exact:
            if a_obj is None:
                a_obj = a64.astype(object)
            power = np.dot(power, a_obj)
        else:
            power = power @ a64


def diagonal_sequence(g: Graph, max_k: int) -> DiagonalSequence:
    """Exact diag(A^k) for k = 0..max_k."""
    if max_k < 0:
        raise ValueError("max_k must be >= 0")
    rows = tuple(_power_diagonals(g, max_k))
    return DiagonalSequence(g.n, rows)


def is_walk_regular_exact(g: Graph) -> WalkRegularityDecision:
    """Decide walk-regularity exactly, stopping at the first witness.

    Scans diag(A^k) for k = 0..n-1; returns the minimal k at which the
    diagonal is non-constant together with a differing vertex pair. The
    n-1 bound is the authority; ``distinct_eigenvalue_bound`` offers a
    tighter optional cutoff for callers that can certify multiplicities.
    """
    max_k = g.n - 1
    for k, diag in enumerate(_power_diagonals(g, max_k)):
        first = diag[0]
        for j in range(1, g.n):
            if diag[j] != first:
                return WalkRegularityDecision(False, k, (0, j), max_k)
    return WalkRegularityDecision(True, None, None, max_k)


def distinct_eigenvalue_bound(eigenvalues: np.ndarray, gap: float = 1e-8) -> int | None:
    """Optional tighter decision cutoff: (number of distinct eigenvalues) - 1.

    Valid only when eigenvalue clusters are separated by at least ``gap``
    (the minimal polynomial of a symmetric matrix has one root per distinct
    eigenvalue). Returns None when clusters cannot be certified, i.e. when
    two consecutive eigenvalues differ by an amount inside (1e-12, gap).
    """
    lam = np.sort(np.asarray(eigenvalues, dtype=float))[::-1]
    distinct = 1
    for prev, cur in zip(lam[:-1], lam[1:]):
        d = prev - cur
        if d >= gap:
            distinct += 1
        elif d > 1e-12:
            return None
    return distinct - 1


def characteristic_polynomial(g: Graph) -> tuple[int, ...]:
    """Exact integer coefficients of det(T*I - A).

    Returns (p_0, ..., p_{n-1}, 1) indexed by power of T, computed by the
    Faddeev-LeVerrier recurrence in exact integer arithmetic (every
    division by k is exact and is asserted).
    """
    n = g.n
    a = np.zeros((n, n), dtype=object)
    for i, j in g.edges:
        a[i, j] = 1
        a[j, i] = 1
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    m = a.copy()
    for k in range(1, n + 1):
        tr = int(np.trace(m))
        if tr % k:
            raise WalkCountError(
                f"Faddeev-LeVerrier trace {tr} not divisible by {k}"
            )
        c_k = -(tr // k)
        coeffs[n - k] = c_k
        if k < n:
            m = np.dot(a, m + c_k * np.eye(n, dtype=object))
    return tuple(int(c) for c in coeffs)


def hamilton_reduction_check(g: Graph) -> bool:
    """Self-test of the n-1 decision bound.

    Verifies diag(A^n) = -sum_{k<n} p_k diag(A^k) entry by entry, with the
    p_k from the exact characteristic polynomial. This is a theorem, so a
    mismatch means broken arithmetic and raises WalkCountError.
    """
    n = g.n
    coeffs = characteristic_polynomial(g)
    seq = diagonal_sequence(g, n)
    for i in range(n):
        predicted = -sum(coeffs[k] * seq.rows[k][i] for k in range(n))
        if seq.rows[n][i] != predicted:
            raise WalkCountError(
                f"Cayley-Hamilton diagonal identity violated at vertex {i}: "
                f"diag(A^{n})[{i}] = {seq.rows[n][i]}, predicted {predicted}"
            )
    return True
