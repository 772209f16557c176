from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from bwkit.exact import (
    I,
    ONE,
    ZERO,
    DegenerateInputError,
    ExactMatrix,
    ExactPoly,
    ExactScalar,
    ShapeError,
    det,
    det_poly,
    frac_sqrt,
    rank,
    rank_nullspace,
    rational_root_masses,
)

from conftest import matrices, scalars


@given(scalars, scalars, scalars)
def test_field_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert (a * b) * c == a * (b * c)
    assert a - a == ZERO
    if b:
        assert (a / b) * b == a


@given(scalars)
def test_conjugation_and_modulus(a):
    assert a.conj().conj() == a
    assert a * a.conj() == ExactScalar(a.abs2())


def test_imaginary_unit_and_parse():
    assert I * I == -ONE
    assert ExactScalar.parse("3/4") == ExactScalar(Fraction(3, 4))
    assert ExactScalar.parse("-2i") == ExactScalar(0, -2)


def test_scalar_division_by_zero_raises():
    with pytest.raises(ZeroDivisionError):
        ONE / ZERO


@given(matrices(3), matrices(3), matrices(3))
def test_matrix_product_associative(a, b, c):
    assert (a @ b) @ c == a @ (b @ c)


@given(matrices(3), matrices(3))
def test_determinant_multiplicative(a, b):
    assert det(a @ b) == det(a) * det(b)


@given(matrices(2, 4))
def test_rank_nullity(m):
    cs = rank_nullspace(m)
    assert cs.rank + cs.nullity == 4
    assert cs.rank == rank(m)
    for v in cs.nullspace:
        assert cs.satisfied_by(v)


@given(matrices(3, 5))
def test_row_space_contains_own_rows(m):
    cs = rank_nullspace(m)
    for r in m.tolist():
        assert cs.contains_row(r)


def test_nullspace_labels_and_shape_errors():
    m = ExactMatrix([[1, -1, 0]])
    cs = rank_nullspace(m, ["a", "b", "c"])
    assert cs.nullity == 2
    assert {k for v in cs.labelled_nullspace() for k in v} == {"a", "b", "c"}
    with pytest.raises(ShapeError):
        rank_nullspace(m, ["a"])
    with pytest.raises(ShapeError):
        cs.contains_row([1, 2])
    with pytest.raises(ShapeError):
        ExactMatrix([[1, 2], [3]])


def test_kron_and_commutators():
    a = ExactMatrix([[0, 1], [1, 0]])
    b = ExactMatrix([[1, 0], [0, -1]])
    assert a.anticommutator(b).is_zero()
    assert a.kron(b).shape == (4, 4)
    assert a.kron(b) @ a.kron(b) == ExactMatrix.identity(4)


def test_det_poly_matches_pointwise_determinant():
    x = ExactPoly.x()
    m = [[x, ExactPoly.const(2)], [ExactPoly.const(3), x * x]]
    p = det_poly(m)
    for t in (-2, 0, Fraction(1, 3), 5):
        assert p(t) == det(ExactMatrix([[t, 2], [3, Fraction(t) ** 2]]))


def test_rational_roots_with_multiplicity():
    x = ExactPoly.x()
    p = (x - Fraction(4, 3)) ** 3 * (x - 1) * (x * x + 1)
    r = rational_root_masses(p)
    assert r.multiplicity(Fraction(4, 3)) == 3
    assert r.multiplicity(1) == 1
    assert not r.exact
    assert r.unresolved.degree == 2
    with pytest.raises(DegenerateInputError):
        rational_root_masses(ExactPoly())


@given(st.fractions(min_value=0, max_value=50, max_denominator=30))
def test_frac_sqrt(x):
    r = frac_sqrt(x * x)
    assert r == x
    s = frac_sqrt(x)
    assert s is None or s * s == x
    assert frac_sqrt(-1) is None
