import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st
from sympy.matrices.normalforms import smith_normal_form

from lowcell import lattice

square = st.integers(1, 4).flatmap(
    lambda n: st.lists(st.lists(st.integers(-6, 6), min_size=n, max_size=n), min_size=n, max_size=n)
)


@given(square)
def test_smith_form_matches_sympy(a):
    u, d, v = lattice.smith_form(a)
    assert lattice.matmul(lattice.matmul(u, a), v) == d
    assert abs(lattice.det(u)) == 1 and abs(lattice.det(v)) == 1
    n = len(a)
    diag = [d[i][i] for i in range(n)]
    assert all(d[i][j] == 0 for i in range(n) for j in range(n) if i != j)
    assert all(x >= 0 for x in diag)
    for i in range(n - 1):
        if diag[i + 1]:
            assert diag[i] and diag[i + 1] % diag[i] == 0
    oracle = smith_normal_form(sympy.Matrix(a), domain=sympy.ZZ)
    assert sorted(diag) == sorted(abs(int(oracle[i, i])) for i in range(n))


@given(square)
def test_det_matches_sympy(a):
    assert lattice.det(a) == sympy.Matrix(a).det()


def test_solve_integral():
    rows = [[2, 0], [1, 3]]
    assert lattice.solve_integral(rows, [3, 3]) == [1, 1]
    assert lattice.solve_integral(rows, [1, 0]) is None


def test_hermite_rows_reduces_redundant_generators():
    basis = lattice.hermite_rows([[2, 0], [0, 2], [1, 1], [2, 2]])
    assert len(basis) == 2
    assert abs(lattice.det(basis)) == 2


@pytest.mark.parametrize("a", [[[2, -1], [-1, 2]], [[1, 2], [3, 4]]])
def test_inverse_fraction(a):
    inv = lattice.inverse_fraction(a)
    prod = lattice.matmul(a, inv)
    assert prod == lattice.identity(2)
