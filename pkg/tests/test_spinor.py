from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, strategies as st

from bwkit.exact import I, ExactMatrix, ShapeError, rank
from bwkit.spinor import (
    barut_mass_ratio,
    build_dirac_set,
    classify_matrix_basis,
    clifford_ok,
    dirac_operator,
    duality_relations,
    expansion_matrix,
    generalized_dirac_spectrum,
    quarter_turn,
)

D = build_dirac_set()


def test_clifford_algebra_and_hermiticity():
    assert clifford_ok(D)
    for g in D.gamma:
        assert g.H == g


def test_gamma5_is_diagonal_chirality():
    assert D.gamma5 == ExactMatrix.diag([1, 1, -1, -1])
    for g in D.gamma:
        assert g.anticommutator(D.gamma5).is_zero()


def test_reflection_matrix_properties_at_quarter_turn():
    assert all(D.property_report().values())
    assert D.R_inv @ D.R == ExactMatrix.identity(4)


@pytest.mark.parametrize("phi", [Fraction(0), Fraction(1), Fraction(3, 2)])
def test_other_phases_keep_transposition_rules(phi):
    d = build_dirac_set(phi)
    rep = d.property_report()
    assert rep["R^T=-R"]
    assert rep["R^-1 g R=-g^T"]
    assert d.R_inv @ d.R == ExactMatrix.identity(4)


def test_quarter_turn_rejects_generic_phase():
    assert quarter_turn(Fraction(1, 2)) == I
    with pytest.raises(ValueError):
        quarter_turn(Fraction(1, 3))


def test_symmetric_and_antisymmetric_bases():
    basis = classify_matrix_basis(D)
    assert len(basis.symmetric) == 10
    assert len(basis.antisymmetric) == 6
    allm = list(basis.symmetric) + list(basis.antisymmetric)
    assert rank(expansion_matrix(allm)) == 16


def test_duality_pairs_are_complementary_and_unimodular():
    for (a, b), (c, d), coef in duality_relations(D):
        assert {a, b}.isdisjoint({c, d})
        assert coef.abs2() == 1
        assert D.gamma5 @ D.sig(a, b) == D.sig(c, d).scale(coef)


def test_sigma_antisymmetric_in_indices():
    for a, b in product(range(4), range(4)):
        assert D.sig(a, b) == -D.sig(b, a)


@given(
    st.fractions(min_value=-6, max_value=6, max_denominator=4),
    st.fractions(min_value=-6, max_value=6, max_denominator=4),
)
def test_generalized_dirac_mass(m1, m2):
    if m1 * m1 == m2 * m2:
        return
    s = generalized_dirac_spectrum(m1, m2, D)
    assert s.mass2 == m1 * m1 - m2 * m2
    assert s.multiplicity == 2
    assert s.tachyonic == (m2 * m2 > m1 * m1)


def test_dirac_operator_squares_to_klein_gordon():
    p = (Fraction(1), Fraction(2), Fraction(2), I * 5)
    m = 4
    plus = dirac_operator(D, p, (m, 0))
    minus = dirac_operator(D, p, (-m, 0))
    p2 = sum((x * x for x in p), I * 0)
    # (i g.p + m)(i g.p - m) = -(p.p + m^2)
    assert plus @ minus == ExactMatrix.identity(4).scale(-(p2 + m * m))


def test_barut_ratio():
    assert barut_mass_ratio(Fraction(1, 137)) == 1 + Fraction(3 * 137, 2)
    with pytest.raises(ZeroDivisionError):
        barut_mass_ratio(0)


def test_expansion_matrix_shape_check():
    with pytest.raises(ShapeError):
        expansion_matrix([ExactMatrix.identity(3)])
