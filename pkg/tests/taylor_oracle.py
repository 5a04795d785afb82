"""Independent truncated-Taylor oracle for the diagonal of exp(beta*A).

Self-contained on purpose: integer matrix powers are computed here with
plain list arithmetic (not the library's), and the series
sum_k (beta*A)^k / k! is accumulated exactly over a common integer
denominator, so the oracle shares no code path with the spectral
evaluation it checks. beta must be rational. Terms are added until the
next term's largest entry falls below 1e-15 of the largest term seen
(term sizes are compared in log space to dodge float overflow on the
big-integer entries).
"""

from __future__ import annotations

import math
from fractions import Fraction

from walkgauge import Graph


def _int_matmul(a: list[list[int]], b: list[list[int]]) -> list[list[int]]:
    n = len(a)
    bt = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def taylor_exp_diagonal(g: Graph, beta: Fraction, max_terms: int = 400) -> list[float]:
    """Diagonal of exp(beta*A) by exact-rational series, rounded once at the end."""
    beta = Fraction(beta)
    if beta < 0:
        raise ValueError("beta must be >= 0")
    n = g.n
    a = [[0] * n for _ in range(n)]
    for i, j in g.edges:
        a[i][j] = 1
        a[j][i] = 1

    diags: list[list[int]] = [[1] * n]
    if beta > 0:
        log_beta = math.log(beta)
        best_log_term = 0.0
        power = [row[:] for row in a]
        for k in range(1, max_terms + 1):
            diags.append([power[i][i] for i in range(n)])
            mx = max(max(row) for row in power)
            if mx > 0:
                log_term = k * log_beta + math.log(mx) - math.lgamma(k + 1)
                best_log_term = max(best_log_term, log_term)
                if k > 3 and log_term < best_log_term + math.log(1e-15):
                    break
            elif k > 1:
                break  # nilpotent-free here: zero power means edgeless
            power = _int_matmul(power, a)

    kmax = len(diags) - 1
    p, q = beta.numerator, beta.denominator
    denom = (q**kmax) * math.factorial(kmax)
    sums = [0] * n
    for k in range(kmax + 1):
        # beta^k / k! == p^k * q^(kmax-k) * (kmax!/k!) / denom
        scale = (p**k) * (q ** (kmax - k)) * (math.factorial(kmax) // math.factorial(k))
        for i in range(n):
            sums[i] += diags[k][i] * scale
    return [float(Fraction(s, denom)) for s in sums]


def taylor_entropy(g: Graph, beta: Fraction) -> float:
    """Walk entropy computed from the oracle diagonal by direct summation."""
    y = taylor_exp_diagonal(g, beta)
    z = sum(y)
    p = [v / z for v in y]
    return -sum(v * math.log(v) for v in p)
