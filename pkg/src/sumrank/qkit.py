"""Exact q-analogue arithmetic.

Gaussian binomial coefficients, the count of fixed-rank matrices over F_q,
and point evaluation of q-Krawtchouk polynomials. Everything is computed
with Python integers, so results never overflow or round.
"""

from __future__ import annotations

import math
from functools import lru_cache


def _check_q(q: int) -> None:
    if q < 2:
        raise ValueError(f"q must be an integer >= 2, got {q}")


def binomial(n: int, k: int) -> int:
    """Ordinary binomial coefficient C(n, k); 0 when k > n."""
    if n < 0 or k < 0:
        raise ValueError("binomial arguments must be nonnegative")
    return math.comb(n, k)


@lru_cache(maxsize=None)
def gaussian_binomial(n: int, k: int, q: int) -> int:
    """Gaussian binomial [n choose k]_q: number of k-dim subspaces of F_q^n.

    Evaluated by the telescoping product prod_{i=1}^{k} (q^{n-k+i}-1)/(q^i-1),
    multiplying and dividing in index order so every intermediate stays
    integral (asserted). Returns 0 when k > n and 1 when k = 0.
    """
    _check_q(q)
    if n < 0 or k < 0:
        raise ValueError("gaussian_binomial arguments must be nonnegative")
    if k > n:
        return 0
    result = 1
    for i in range(1, k + 1):
        result *= q ** (n - k + i) - 1
        result, rem = divmod(result, q**i - 1)
        assert rem == 0, "gaussian binomial intermediate not integral"
    return result


@lru_cache(maxsize=None)
def num_matrices_rank(n: int, m: int, t: int, q: int) -> int:
    """Number of m x n matrices over F_q of rank exactly t.

    [n choose t]_q * prod_{i=0}^{t-1} (q^m - q^i); 0 when t > min(m, n).
    """
    _check_q(q)
    if t < 0:
        raise ValueError("rank must be nonnegative")
    if t > min(m, n):
        return 0
    count = gaussian_binomial(n, t, q)
    for i in range(t):
        count *= q**m - q**i
    return count


@lru_cache(maxsize=None)
def q_krawtchouk(j: int, i: int, n: int, m: int, q: int) -> int:
    """q-Krawtchouk polynomial K_j(i) for the m x n bilinear-forms scheme.

    K_j(i) = sum_{l=0}^{j} (-1)^{j-l} q^{lm + C(j-l,2)}
             [n-l choose n-j]_q [n-i choose l]_q

    with C(1,2) = C(0,2) = 0. Can be negative; the value is exact.
    """
    _check_q(q)
    if i > n or j > n:
        raise ValueError("q_krawtchouk requires i <= n and j <= n")
    total = 0
    for l in range(j + 1):
        term = (
            q ** (l * m + math.comb(j - l, 2))
            * gaussian_binomial(n - l, n - j, q)
            * gaussian_binomial(n - i, l, q)
        )
        if (j - l) % 2:
            term = -term
        total += term
    return total
