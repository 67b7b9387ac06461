import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ladderie.linalg import (ExactMatrix, Infeasible, canonical, kernel_basis,
                             lin_combine, matmul, rank, scalar_from_str,
                             scalar_to_str, solve_or_refute)


def test_scalar_strings():
    assert scalar_to_str(F(3, 2)) == "3/2"
    assert scalar_to_str(F(4, 2)) == "2"
    assert scalar_to_str(F(-1, 3)) == "-1/3"
    assert scalar_from_str("3/2") == F(3, 2)
    assert scalar_from_str("-7") == F(-7)
    assert scalar_from_str(scalar_to_str(F(-355, 113))) == F(-355, 113)


def test_lin_combine_examples():
    assert lin_combine([(1, {"a": 1}), (-1, {"a": 1})]) == {}
    assert lin_combine([(2, {"a": F(1, 2)})]) == {"a": F(1)}
    assert lin_combine([(1, {"a": 1}), (1, {"b": 2})]) == {"a": F(1), "b": F(2)}


def test_canonical_accumulates_duplicates():
    assert canonical([("a", 1), ("a", -1), ("b", F(1, 3))]) == {"b": F(1, 3)}


sparse_vectors = st.dictionaries(
    st.sampled_from("abcdef"),
    st.fractions(min_value=-5, max_value=5, max_denominator=6).filter(bool),
    max_size=5)
scalars = st.fractions(min_value=-5, max_value=5, max_denominator=6)


@settings(deadline=None)
@given(sparse_vectors, sparse_vectors, sparse_vectors)
def test_lin_combine_associative_commutative(u, v, w):
    left = lin_combine([(1, lin_combine([(1, u), (1, v)])), (1, w)])
    right = lin_combine([(1, u), (1, lin_combine([(1, v), (1, w)]))])
    assert left == right
    assert lin_combine([(1, u), (1, v)]) == lin_combine([(1, v), (1, u)])


@settings(deadline=None)
@given(scalars, sparse_vectors, sparse_vectors)
def test_lin_combine_distributive(c, u, v):
    assert (lin_combine([(c, lin_combine([(1, u), (1, v)]))])
            == lin_combine([(c, u), (c, v)]))


def test_rank_examples():
    assert rank(ExactMatrix.identity(2)) == 2
    assert rank(ExactMatrix(3, 4)) == 0
    assert rank(ExactMatrix.from_rows([[1, 2], [2, 4]])) == 1


def test_rank_transpose_random():
    rng = random.Random(2024)
    for trial in range(12):
        rows = rng.randint(1, 30)
        cols = rng.randint(1, 30)
        entries = {}
        for _ in range(rng.randint(0, rows * cols // 2)):
            entries[(rng.randrange(rows), rng.randrange(cols))] = \
                F(rng.randint(-5, 5), rng.randint(1, 4))
        m = ExactMatrix(rows, cols, entries)
        assert rank(m) == rank(m.transpose())


def test_solve_examples():
    sol = solve_or_refute(ExactMatrix.identity(2), [3, 5])
    assert sol == [F(3), F(5)]

    cert = solve_or_refute(ExactMatrix(1, 1), [1])
    assert isinstance(cert, Infeasible)

    m = ExactMatrix.from_rows([[1, 1]])
    sol = solve_or_refute(m, [2])
    assert not isinstance(sol, Infeasible)
    assert m.mul_vec(sol) == [F(2)]


def test_solve_solution_verifies_exactly():
    rng = random.Random(99)
    for _ in range(20):
        rows, cols = rng.randint(1, 8), rng.randint(1, 8)
        entries = {(r, c): F(rng.randint(-3, 3))
                   for r in range(rows) for c in range(cols) if rng.random() < 0.5}
        m = ExactMatrix(rows, cols, entries)
        x_true = [F(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(cols)]
        rhs = m.mul_vec(x_true)
        res = solve_or_refute(m, rhs)
        assert not isinstance(res, Infeasible)
        assert m.mul_vec(res) == rhs


def test_infeasible_certificate_is_a_farkas_witness():
    m = ExactMatrix.from_rows([[1, 2], [2, 4], [0, 0]])
    cert = solve_or_refute(m, [1, 3, 0])
    assert isinstance(cert, Infeasible)
    assert cert.rank_matrix < cert.rank_augmented
    y = cert.witness
    combo = {}
    for (r, c), v in m.entries.items():
        combo[c] = combo.get(c, F(0)) + y[r] * v
    assert all(v == 0 for v in combo.values())
    assert sum(yr * b for yr, b in zip(y, [F(1), F(3), F(0)])) != 0


def test_kernel_basis():
    m = ExactMatrix.from_rows([[1, 2, 3], [2, 4, 6]])
    basis = kernel_basis(m)
    assert len(basis) == 3 - rank(m)
    for vec in basis:
        dense = [vec.get(c, F(0)) for c in range(3)]
        assert m.mul_vec(dense) == [F(0), F(0)]


def test_matmul():
    a = ExactMatrix.from_rows([[1, 2], [0, 1]])
    b = ExactMatrix.from_rows([[1, 0], [3, 1]])
    assert matmul(a, b) == ExactMatrix.from_rows([[7, 2], [3, 1]])
    with pytest.raises(ValueError):
        matmul(a, ExactMatrix(3, 3))


def test_matrix_validation():
    with pytest.raises(ValueError):
        ExactMatrix(1, 1, {(1, 0): 1})
    with pytest.raises(ValueError):
        ExactMatrix.identity(2).mul_vec([1])
