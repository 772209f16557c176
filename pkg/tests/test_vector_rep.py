from fractions import Fraction
from itertools import product

from hypothesis import assume, given, strategies as st

from bwkit.exact import ExactMatrix, ExactScalar, I
from bwkit.momentum import FourMomentum
from bwkit.vector_rep import (
    WaveOperatorParams,
    dispersion_spectrum,
    gamma5_closed_form,
    lagrangian_consistency,
    parity_relations,
    printed_gamma,
    printed_gamma5,
    spin_split_operators,
    vector_rep,
    wave_operator,
)

V = vector_rep()
nonzero = st.fractions(min_value=-10, max_value=10, max_denominator=6)


def test_gamma_tables_match_formula_and_are_symmetric():
    for a, b in product(range(4), range(4)):
        g = V.gamma[(a, b)]
        assert g == printed_gamma(a, b)
        assert g == V.gamma[(b, a)]
        assert g.T == g


def test_gamma5_commutator_construction_matches_closed_form_and_table():
    for a, b in product(range(4), range(4)):
        assert V.gamma5[(a, b)] == gamma5_closed_form(a, b)
        assert V.gamma5[(a, b)] == printed_gamma5(a, b)


def test_parity_matrix():
    assert V.parity == ExactMatrix.diag([1, 1, 1, -1])
    rel = parity_relations(V)
    for (a, b), kind in rel.items():
        mixed = (a == 3) != (b == 3)
        assert kind == ("anticommute" if mixed else "commute")


def test_reference_spectrum():
    s = dispersion_spectrum(WaveOperatorParams(-7, -8))
    assert s.branch(1).mass2_ratio == Fraction(4, 3)
    assert s.branch(1).multiplicity == 3
    assert s.branch(0).mass2_ratio == 1
    assert s.branch(0).multiplicity == 1


@given(nonzero, nonzero)
def test_spectrum_closed_form(A, B):
    assume(A not in (1, -1) and B != 0)
    s = dispersion_spectrum(WaveOperatorParams(A, B))
    r1, r0 = B / (A + 1), B / (A - 1)
    assume(r1 != r0)
    assert s.branch(1).mass2_ratio == r1
    assert s.branch(0).mass2_ratio == r0
    assert s.branch(1).status == ("massive" if r1 > 0 else "tachyonic")


def test_degenerate_branch_when_spin1_coefficient_vanishes():
    s = dispersion_spectrum(WaveOperatorParams(-1, 2))
    assert s.branch(1).mass2_ratio is None
    assert s.branch(1).status == "degenerate"
    assert s.branch(0).mass2_ratio == -1


@given(nonzero)
def test_split_operators_and_parasites(B):
    assume(B not in (0, 2, -2))
    sp = spin_split_operators(B)
    assert sp.parasite_spin1_mass2 == B / (B + 2)
    assert sp.parasite_spin0_mass2 == B / (B - 2)


@given(st.tuples(nonzero, nonzero, nonzero, nonzero), nonzero, nonzero)
def test_wave_operator_is_symmetric_and_quadratic(p, A, B):
    params = WaveOperatorParams(A, B)
    pe = (p[0], p[1], p[2], I * p[3])
    m1 = wave_operator(pe, params)
    assert m1.T == m1
    m2 = wave_operator(tuple(ExactScalar.of(2) * x for x in pe), params)
    m0 = wave_operator((0, 0, 0, 0), params)
    assert m2 - m0 == (m1 - m0).scale(4)


def test_lagrangian_reproduces_wave_operator():
    params = WaveOperatorParams(-7, -8)
    momenta = [FourMomentum.on_shell(3, 4, 12, 84), FourMomentum.off_shell(1, 2, 3, 5)]
    rep = lagrangian_consistency(params, momenta)
    assert rep.matches_wave_operator
    assert rep.grouping_identity
    assert rep.samples == 2


def test_total_derivative_shifts_between_the_two_cross_terms():
    rep = lagrangian_consistency(WaveOperatorParams(-7, -8))
    assert rep.second_derivative_part_vanishes
    assert not rep.removable_by_total_derivative
    # adding the divergence leaves -2 (d.B*)(d.B); subtracting it leaves -2 (d_nu B*_mu)(d_mu B_nu)
    assert rep.residual_plus == {(m, m, n, n): ExactScalar(-2) for m in range(4) for n in range(4)}
    assert rep.residual_minus == {(n, m, m, n): ExactScalar(-2) for m in range(4) for n in range(4)}
