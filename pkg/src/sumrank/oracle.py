"""Brute-force ground truth over tiny prime fields.

Vectors of F_{q^m}^n are enumerated as ell matrices of size m x eta with
entries in F_q (q prime), ranks are computed by Gaussian elimination mod q,
and spheres, balls and intersections are counted directly. Enumeration cost
is q^{m*n}, so a hard budget guards every exhaustive count.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from sumrank.compositions import RankProfile
from sumrank.qkit import gaussian_binomial
from sumrank.volumes import Params

DEFAULT_BUDGET = 2**24

Matrix = tuple[tuple[int, ...], ...]


class OracleBudgetError(Exception):
    """The requested enumeration exceeds the configured budget."""

    def __init__(self, required: int, budget: int):
        super().__init__(
            f"enumeration needs {required} candidates, budget is {budget}"
        )
        self.required = required
        self.budget = budget


def _check_prime(q: int) -> None:
    if q < 2 or any(q % d == 0 for d in range(2, int(q**0.5) + 1)):
        raise ValueError(f"oracle requires a prime field size, got {q}")


def _check_budget(required: int, budget: int) -> None:
    if required > budget:
        raise OracleBudgetError(required, budget)


@dataclass(frozen=True)
class BlockVector:
    """A vector of F_{q^m}^n as ell matrices of size m x eta over prime F_q."""

    blocks: tuple[Matrix, ...]


@dataclass(frozen=True)
class CenterPair:
    """Two centers together with the per-block rank profile of their difference."""

    x: BlockVector
    y: BlockVector
    profile: RankProfile


def matrix_rank(mat: Matrix, q: int) -> int:
    """Rank of a matrix over F_q (q prime) by row reduction."""
    _check_prime(q)
    rows = [list(r) for r in mat]
    if not rows:
        return 0
    ncols = len(rows[0])
    rank = 0
    for col in range(ncols):
        pivot = next((r for r in range(rank, len(rows)) if rows[r][col] % q), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = pow(rows[rank][col], -1, q)
        rows[rank] = [(x * inv) % q for x in rows[rank]]
        for r in range(len(rows)):
            if r != rank and rows[r][col] % q:
                factor = rows[r][col]
                rows[r] = [(a - factor * b) % q for a, b in zip(rows[r], rows[rank])]
        rank += 1
        if rank == len(rows):
            break
    return rank


def sumrank_weight(v: BlockVector, q: int) -> int:
    """Sum of per-block ranks."""
    return sum(matrix_rank(block, q) for block in v.blocks)


def canonical_centers(p: Params, profile: RankProfile) -> CenterPair:
    """A representative center pair realizing a distance profile.

    The metric is translation invariant, so x = 0 and y with profile[i]
    leading diagonal ones in block i represent every pair with that profile.
    """
    _check_prime(p.q)
    if len(profile) != p.ell or any(t < 0 or t > p.mu for t in profile):
        raise ValueError(f"profile must have {p.ell} parts in 0..{p.mu}")
    zero = tuple(tuple(0 for _ in range(p.eta)) for _ in range(p.m))
    x = BlockVector(blocks=(zero,) * p.ell)
    yblocks = []
    for ti in profile:
        yblocks.append(
            tuple(
                tuple(1 if r == c and r < ti else 0 for c in range(p.eta))
                for r in range(p.m)
            )
        )
    return CenterPair(x=x, y=BlockVector(blocks=tuple(yblocks)), profile=tuple(profile))


def _all_block_matrices(p: Params) -> list[Matrix]:
    """Every m x eta matrix over F_q, enumerated as mixed-radix counters."""
    entries = p.m * p.eta
    out = []
    for flat in itertools.product(range(p.q), repeat=entries):
        out.append(tuple(flat[r * p.eta : (r + 1) * p.eta] for r in range(p.m)))
    return out


def count_sphere(p: Params, t: int, budget: int = DEFAULT_BUDGET) -> int:
    """Exhaustive count of vectors with sum-rank weight exactly t."""
    _check_prime(p.q)
    _check_budget(p.space_size, budget)
    mats = _all_block_matrices(p)
    ranks = [matrix_rank(mat, p.q) for mat in mats]
    return sum(
        1
        for combo in itertools.product(ranks, repeat=p.ell)
        if sum(combo) == t
    )


def count_intersection(
    p: Params, u: int, s: int, profile: RankProfile, budget: int = DEFAULT_BUDGET
) -> int:
    """Exhaustive count of vectors within distance u of x and s of y.

    Centers are the canonical pair for the given profile; by translation
    invariance the count applies to any pair with the same per-block
    distances.
    """
    _check_prime(p.q)
    _check_budget(p.space_size, budget)
    pair = canonical_centers(p, profile)
    mats = _all_block_matrices(p)
    dist_x = [matrix_rank(mat, p.q) for mat in mats]
    dist_y = []
    for yblock in pair.y.blocks:
        dist_y.append(
            [
                matrix_rank(
                    tuple(
                        tuple((a - b) % p.q for a, b in zip(mrow, yrow))
                        for mrow, yrow in zip(mat, yblock)
                    ),
                    p.q,
                )
                for mat in mats
            ]
        )
    count = 0
    for combo in itertools.product(range(len(mats)), repeat=p.ell):
        if sum(dist_x[k] for k in combo) <= u:
            if sum(dist_y[i][k] for i, k in enumerate(combo)) <= s:
                count += 1
    return count


def count_rank1_additive(
    n: int, m: int, r: int, q: int, budget: int = DEFAULT_BUDGET
) -> int:
    """Rank-1 vectors y with wt(x) + wt(y) = wt(x - y), counted exhaustively.

    x is the canonical rank-r representative; by rank-preserving symmetry the
    count is the same for any x of rank r.
    """
    p = Params(q=q, m=m, eta=n, ell=1)
    if r > p.mu:
        raise ValueError(f"rank {r} exceeds min(m, n) = {p.mu}")
    _check_budget(p.space_size, budget)
    x = canonical_centers(p, (r,)).y.blocks[0]
    count = 0
    for y in _all_block_matrices(p):
        if matrix_rank(y, q) != 1:
            continue
        diff = tuple(
            tuple((a - b) % q for a, b in zip(xrow, yrow))
            for xrow, yrow in zip(x, y)
        )
        if matrix_rank(diff, q) == r + 1:
            count += 1
    return count


def _span(vectors: list[tuple[int, ...]], q: int) -> frozenset[tuple[int, ...]]:
    dim_total = len(vectors[0])
    out = set()
    for coeffs in itertools.product(range(q), repeat=len(vectors)):
        v = tuple(
            sum(c * vec[i] for c, vec in zip(coeffs, vectors)) % q
            for i in range(dim_total)
        )
        out.add(v)
    return frozenset(out)


def _all_subspaces(dim_total: int, d: int, q: int) -> set[frozenset[tuple[int, ...]]]:
    """All d-dimensional F_q-subspaces of F_q^{dim_total}, by span enumeration."""
    zero = tuple(0 for _ in range(dim_total))
    if d == 0:
        return {frozenset({zero})}
    nonzero = [
        v for v in itertools.product(range(q), repeat=dim_total) if any(v)
    ]
    spaces = set()
    for combo in itertools.combinations(nonzero, d):
        span = _span(list(combo), q)
        if len(span) == q**d:
            spaces.add(span)
    return spaces


def els_pair_count_check(
    k: int, a: int, q: int, budget: int = DEFAULT_BUDGET
) -> tuple[int, int]:
    """Count ordered direct-sum pairs (A, B) of a fixed k-dim space by enumeration.

    A has dimension a, B has dimension k - a, and A + B = V with trivial
    intersection. Returns (enumerated count, closed form q^{a(k-a)} [k choose a]_q)
    so callers can compare the two.
    """
    _check_prime(q)
    if not 0 <= a <= k:
        raise ValueError("requires 0 <= a <= k")
    if k > 4:
        raise ValueError("ambient dimension capped at 4 for the subspace oracle")
    _check_budget(q**k, budget)
    zero = tuple(0 for _ in range(k))
    subspaces_a = _all_subspaces(k, a, q)
    subspaces_b = _all_subspaces(k, k - a, q)
    enumerated = sum(
        1
        for sa in subspaces_a
        for sb in subspaces_b
        if sa & sb == {zero}
    )
    closed_form = q ** (a * (k - a)) * gaussian_binomial(k, a, q)
    return enumerated, closed_form
