from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

import coxbrick.ratlinalg as rl


def test_rref_basic():
    m = rl.mat([[2, 4], [1, 2]])
    reduced, pivots = rl.rref(m)
    assert pivots == (0,)
    assert reduced[0] == (Fraction(1), Fraction(2))
    assert all(x == 0 for x in reduced[1])


def test_nullspace_solves():
    m = rl.mat([[1, 2, 3], [4, 5, 6]])
    basis = rl.nullspace(m)
    assert len(basis) == 1
    (v,) = basis
    for row in m:
        assert sum(a * b for a, b in zip(row, v)) == 0


def test_solve_exact():
    m = rl.mat([[1, 1], [1, -1]])
    x = rl.solve_exact(m, (Fraction(3), Fraction(1)))
    assert x == (Fraction(2), Fraction(1))
    inconsistent = rl.mat([[1, 1], [2, 2]])
    assert rl.solve_exact(inconsistent, (Fraction(1), Fraction(3))) is None


def test_row_space_comparison():
    a = [(Fraction(1), Fraction(0)), (Fraction(1), Fraction(1))]
    b = [(Fraction(0), Fraction(2)), (Fraction(3), Fraction(0))]
    assert rl.same_row_space(a, b)
    assert not rl.same_row_space(a, [(Fraction(1), Fraction(1))])


small_entries = st.integers(min_value=-4, max_value=4)


@st.composite
def matrices(draw):
    rows = draw(st.integers(min_value=1, max_value=5))
    cols = draw(st.integers(min_value=1, max_value=5))
    data = [[draw(small_entries) for _ in range(cols)] for _ in range(rows)]
    return rl.mat(data)


@given(matrices())
@settings(max_examples=100, deadline=None)
def test_rank_nullity(m):
    assert rl.rank(m) + len(rl.nullspace(m)) == rl.shape(m)[1]


@given(matrices())
@settings(max_examples=100, deadline=None)
def test_nullspace_vectors_annihilate(m):
    for v in rl.nullspace(m):
        for row in m:
            assert sum(a * b for a, b in zip(row, v)) == 0


@given(matrices())
@settings(max_examples=100, deadline=None)
def test_rref_idempotent(m):
    reduced, _ = rl.rref(m)
    again, _ = rl.rref(reduced)
    assert again == reduced
