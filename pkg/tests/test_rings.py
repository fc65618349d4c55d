from fractions import Fraction

import pytest

from superalg.rings import (
    QQ, ExactMatrix, Inconsistent, PLocalIntegers, PrimeField, Span,
    matrix_rank, nullspace, solve_linear,
)


@pytest.mark.parametrize("ring", [QQ, PrimeField(3), PrimeField(5), PLocalIntegers(3)])
def test_two_is_invertible(ring):
    two = ring.coerce(2)
    assert ring.mul(two, ring.inv(two)) == ring.one()


@pytest.mark.parametrize("ring", [QQ, PrimeField(5), PLocalIntegers(5)])
def test_distributivity_samples(ring):
    vals = [ring.coerce(x) for x in (-3, -1, 0, 2, 7)]
    for a in vals:
        for b in vals:
            for c in vals:
                lhs = ring.mul(a, ring.add(b, c))
                rhs = ring.add(ring.mul(a, b), ring.mul(a, c))
                assert lhs == rhs


def test_plocal_rejects_bad_denominator():
    Z3 = PLocalIntegers(3)
    assert Z3.coerce(Fraction(2, 5)) == Fraction(2, 5)
    with pytest.raises(ValueError):
        Z3.coerce(Fraction(1, 3))
    with pytest.raises(ValueError):
        Z3.coerce(Fraction(7, 12))


def test_identity_solve_returns_rhs():
    m = ExactMatrix.identity(QQ, 4)
    rhs = ExactMatrix(QQ, [[1], [2], [3], [4]])
    part, ker = solve_linear(m, rhs)
    assert part.rows == rhs.rows
    assert ker == []


def test_zero_matrix_inconsistent():
    m = ExactMatrix(QQ, [[0]])
    rhs = ExactMatrix(QQ, [[1]])
    assert isinstance(solve_linear(m, rhs), Inconsistent)


def test_known_kernel_rank_over_f3():
    # M = A*B with A 5x2, B 2x5 generic over F_3: rank 2, kernel rank 3
    F3 = PrimeField(3)
    a = ExactMatrix(F3, [[1, 2], [0, 1], [1, 1], [2, 0], [1, 0]])
    b = ExactMatrix(F3, [[1, 0, 2, 1, 1], [0, 1, 1, 2, 0]])
    m = a.mul(b)
    assert matrix_rank(m) == 2
    assert len(nullspace(m)) == 3


def test_solve_substitutes_back():
    m = ExactMatrix(QQ, [[2, 1, 0], [1, -1, 3]])
    rhs = ExactMatrix(QQ, [[5], [2]])
    part, ker = solve_linear(m, rhs)
    assert m.mul(part).rows == rhs.rows
    for v in ker:
        prod = m.mul(ExactMatrix(QQ, [[x] for x in v]))
        assert all(row == [0] for row in prod.rows)


def test_rank_trivial_cases():
    assert matrix_rank(ExactMatrix.zero(QQ, 3, 4)) == 0
    assert matrix_rank(ExactMatrix.identity(QQ, 6)) == 6


def test_gram_matrix_rank_ell2():
    # Gram matrix of the invariant form for ell = 2: the null root spans the
    # radical, so the rank is ell, one less than the size
    gram = ExactMatrix(QQ, [[2, -2, 0], [-2, 4, -4], [0, -4, 8]])
    assert matrix_rank(gram) == 2
    delta = ExactMatrix(QQ, [[2], [2], [1]])
    assert all(row == [0] for row in gram.mul(delta).rows)


def test_span_incremental():
    span = Span(QQ)
    assert span.add({0: Fraction(1), 2: Fraction(2)})
    assert span.add({1: Fraction(1)})
    assert not span.add({0: Fraction(2), 1: Fraction(3), 2: Fraction(4)})
    assert span.rank == 2
    assert span.contains({0: Fraction(-1), 2: Fraction(-2)})
