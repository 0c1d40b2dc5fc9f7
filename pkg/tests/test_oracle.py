import pytest

from sumrank import oracle
from sumrank.oracle import (
    BlockVector,
    OracleBudgetError,
    canonical_centers,
    count_intersection,
    count_sphere,
    els_pair_count_check,
    matrix_rank,
    sumrank_weight,
)
from sumrank.qkit import gaussian_binomial
from sumrank.volumes import Params

P221 = Params(q=2, m=2, eta=2, ell=1)
P222 = Params(q=2, m=2, eta=2, ell=2)


def test_matrix_rank_basics():
    assert matrix_rank(((1, 0), (0, 1)), 2) == 2
    assert matrix_rank(((0, 0), (0, 0)), 2) == 0
    assert matrix_rank(((1, 1), (1, 1)), 2) == 1
    assert matrix_rank(((1, 2), (2, 1)), 3) == 1  # second row = 2 * first mod 3


def test_matrix_rank_rejects_composite_q():
    with pytest.raises(ValueError):
        matrix_rank(((1, 0), (0, 1)), 4)


def test_matrix_rank_transpose_invariant():
    import itertools

    for flat in itertools.product(range(3), repeat=6):
        mat = (flat[0:3], flat[3:6])
        transposed = tuple(zip(*mat))
        assert matrix_rank(mat, 3) == matrix_rank(transposed, 3)


def test_sumrank_weight():
    zero = ((0, 0), (0, 0))
    eye = ((1, 0), (0, 1))
    rank1 = ((1, 1), (0, 0))
    assert sumrank_weight(BlockVector(blocks=(zero, zero)), 2) == 0
    assert sumrank_weight(BlockVector(blocks=(eye, zero)), 2) == 2
    assert sumrank_weight(BlockVector(blocks=(rank1, rank1)), 2) == 2


def test_canonical_centers():
    pair = canonical_centers(P222, (2, 1))
    assert pair.x.blocks == (((0, 0), (0, 0)),) * 2
    assert pair.y.blocks == (((1, 0), (0, 1)), ((1, 0), (0, 0)))
    # the constructed pair realizes its profile
    for profile in [(0, 0), (1, 0), (2, 2), (1, 2)]:
        pair = canonical_centers(P222, profile)
        diff = BlockVector(
            blocks=tuple(
                tuple(
                    tuple((a - b) % 2 for a, b in zip(xrow, yrow))
                    for xrow, yrow in zip(xb, yb)
                )
                for xb, yb in zip(pair.x.blocks, pair.y.blocks)
            )
        )
        ranks = tuple(matrix_rank(b, 2) for b in diff.blocks)
        assert ranks == profile


def test_count_sphere_examples():
    assert count_sphere(P221, 1) == 9
    assert count_sphere(P221, 0) == 1
    assert count_sphere(P221, 5) == 0


def test_count_sphere_exhaustive():
    assert sum(count_sphere(P222, t) for t in range(5)) == 256


def test_count_intersection_examples():
    assert count_intersection(P222, 4, 4, (1, 1)) == 256
    assert count_intersection(P222, 0, 1, (2, 0)) == 0
    assert count_intersection(P221, 1, 1, (2,)) == 6


def test_count_intersection_symmetry():
    for profile in [(2, 0), (1, 1)]:
        assert count_intersection(P222, 1, 2, profile) == count_intersection(
            P222, 2, 1, profile
        )
        assert count_intersection(P222, 1, 2, profile) == count_intersection(
            P222, 1, 2, profile[::-1]
        )


def test_budget_refusal():
    big = Params(q=2, m=5, eta=5, ell=2)
    with pytest.raises(OracleBudgetError) as exc:
        count_sphere(big, 1, budget=2**10)
    assert exc.value.required == big.space_size


def test_composite_q_rejected():
    with pytest.raises(ValueError):
        count_sphere(Params(q=4, m=2, eta=2, ell=1), 1)


def test_els_pair_count_examples():
    assert els_pair_count_check(2, 0, 2) == (1, 1)
    assert els_pair_count_check(3, 3, 2) == (1, 1)
    assert els_pair_count_check(2, 1, 2) == (6, 6)


@pytest.mark.parametrize("q", [2, 3])
def test_els_pair_count_matches_closed_form(q):
    for k in range(4):
        for a in range(k + 1):
            enumerated, closed = els_pair_count_check(k, a, q)
            assert enumerated == closed
            assert closed == q ** (a * (k - a)) * gaussian_binomial(k, a, q)


def test_rank1_additive_oracle():
    assert oracle.count_rank1_additive(2, 2, 1, 2) == 4
