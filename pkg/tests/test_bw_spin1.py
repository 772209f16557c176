from fractions import Fraction

import pytest
from hypothesis import assume, given, strategies as st

from bwkit.bw_spin1 import (
    MappingUndefinedError,
    abcd_ast_operator,
    ast_dispersion,
    ast_elimination_check,
    ast_operator,
    ast_quartic,
    bw_system_spin1,
    chi_maxwell_grid_residual,
    chi_maxwell_residual,
    generalized_abcd_system,
    levi_civita,
    proca_reduction_check,
    restricted_standard_equal,
    sign_coefficients,
    sign_operator_enumeration,
    wth_mapping,
    wth_round_trip,
)
from bwkit.momentum import FourMomentum, rest_frame, sample_off_shell, sample_on_shell

P = FourMomentum.on_shell(3, 4, 12, 84)
Q = FourMomentum.off_shell(Fraction(1, 2), Fraction(-1, 3), 2, Fraction(5, 2))
coef = st.fractions(min_value=-4, max_value=4, max_denominator=3)


def test_levi_civita():
    assert levi_civita((0, 1, 2, 3)) == 1
    assert levi_civita((1, 0, 2, 3)) == -1
    assert levi_civita((0, 0, 2, 3)) == 0


@pytest.mark.parametrize("p", [P, rest_frame(3)] + sample_on_shell(4, seed=1), ids=str)
@pytest.mark.parametrize("sign", [-1, 1])
def test_on_shell_three_states_and_proca_relations(p, sign):
    ms = bw_system_spin1(p, p.mass, sign)
    assert ms.nullity == 3
    assert ms.all_relations_hold()


@pytest.mark.parametrize("pm", sample_off_shell(4, seed=2), ids=lambda pm: str(pm[0]))
def test_off_shell_only_trivial_solution(pm):
    p, m = pm
    assert bw_system_spin1(p, m).nullity == 0


def test_subtraction_constraints_and_expansion_redundancy():
    rep = proca_reduction_check(P, 84)
    assert rep.ok
    assert rep.redundancy["kernel_vectors_consistent"]
    assert rep.redundancy["expansion_rank"] == 10


def test_generalized_system_reduces_to_standard():
    assert restricted_standard_equal(P, 84)
    assert restricted_standard_equal(Q, 3)
    g = generalized_abcd_system(Q, 2, 1, Fraction(1, 2), 1)
    assert len(g.system.unknown_labels) == 16  # A, F, phi, phit, At


def test_ast_elimination_certificate():
    rep = ast_elimination_check(Q, 2, 1, Fraction(1, 2), 1)
    assert rep.quartic == Fraction(-113, 12)
    assert rep.ast_rows_in_span and rep.potential_free


@given(coef, coef, coef)
def test_wth_mapping_reproduces_abcd_operator(a, c, d):
    for b in (d, -d):
        first, second = wth_mapping(a, b, c, d)
        assert first.A + second.A == 0 and first.Bm2 + second.Bm2 == 0
        target = abcd_ast_operator(Q, a, b, c, d)
        assert ast_operator(Q, first.A, first.Bm2, 1) == target
        assert ast_operator(Q, second.A, second.Bm2, 2) == target


@given(coef, coef, coef)
def test_wth_round_trip_masses(a, c, d):
    k = a * d - c * d
    assume(k != 0 and 1 - 2 * k != 0)
    assert wth_round_trip(a, d, c, d).masses_equal


def test_mapping_needs_b_equal_plus_minus_d():
    with pytest.raises(MappingUndefinedError):
        wth_mapping(1, 2, 3, 1)


def test_ast_quartic_polynomial():
    # s = -p.p; (c^2-a^2) - 2(ab-cd)s + (d^2-b^2)s^2
    assert ast_quartic(-2, 1, 2, 3, 1) == (9 - 1) - 2 * (2 - 3) * 2 + (1 - 4) * 4


def test_ast_reference_spectrum():
    br = {(b.equation, b.sector): b.mass2_ratio for b in ast_dispersion(-7, -8)}
    assert br == {(1, "electric"): Fraction(4, 3), (1, "magnetic"): 1, (2, "electric"): 1, (2, "magnetic"): Fraction(4, 3)}


def test_sign_operator_enumeration():
    en = sign_operator_enumeration()
    assert en.distinct == 12 and en.duplicates == 4
    assert en.flip_isomorphic
    assert en.row_space_classes == 9
    assert sum(len(g) for g in en.groups) == 16
    sc = sign_coefficients((1, 1, -1, -1))
    assert (sc.A1, sc.A2, sc.B1, sc.B2) == (0, 0, 1, 1)


def test_maxwell_plane_wave_with_and_without_chi():
    assert chi_maxwell_residual((1, 0, 0), (0, 1, 0), 0, (0, 0, 1), 1).is_zero()
    r = chi_maxwell_residual((1, 0, 0), (0, 1, 0), 1, (0, 0, 1), 1)
    assert not r.is_zero()
    grid = chi_maxwell_grid_residual((1, 0, 0), (0, 1, 0), 1, (0, 0, 1), 1, n=8)
    assert grid["max_deviation"] < 1e-12
    with pytest.raises(ValueError):
        chi_maxwell_grid_residual((1, 0, 0), (0, 1, 0), 0, (0, 0, Fraction(1, 2)), 1)
