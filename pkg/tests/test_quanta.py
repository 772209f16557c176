from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, strategies as st

from bwkit.exact import ExactMatrix, ExactPoly, ExactScalar, I
from bwkit.momentum import FourMomentum
from bwkit.polarization import helicity_basis, standard_basis
from bwkit.quanta import (
    NormalizationError,
    PoleError,
    bivector_relation,
    dynamical_invariants,
    longitudinal_coefficient,
    propagator,
    spherical_view,
    spin1_matrices,
    spin_half_relation,
    vector_rep_relations,
    weak_lorentz_condition,
)
from bwkit.vector_rep import WaveOperatorParams

from conftest import scalars

DIRECTIONS = [
    (Fraction(3, 13), Fraction(4, 13), Fraction(12, 13)),
    (0, 0, 1),
    (Fraction(3, 5), 0, Fraction(-4, 5)),
    (Fraction(2, 3), Fraction(-1, 3), Fraction(2, 3)),
]
PARAMS = WaveOperatorParams(-7, -8, 1)
P = FourMomentum.on_shell(3, 4, 12, 84)


@pytest.mark.parametrize("n", DIRECTIONS, ids=str)
def test_operator_relations(n):
    assert spin_half_relation(n, Fraction(5, 2)).ok
    assert bivector_relation(n).ok


def test_spin1_algebra():
    Sx, Sy, Sz = spin1_matrices()
    assert Sx @ Sy - Sy @ Sx == Sz.scale(I)
    assert (Sx @ Sx + Sy @ Sy + Sz @ Sz) == ExactMatrix.identity(3).scale(2)


def test_bivector_relation_in_spherical_basis_along_z():
    view = spherical_view(bivector_relation((0, 0, 1)).matrix)
    assert np.allclose(view, np.diag([-1, 1, -1]), atol=1e-15)


def test_direction_must_be_unit():
    with pytest.raises(NormalizationError):
        spin_half_relation((1, 1, 0), 1)


@given(st.tuples(*[st.fractions(-6, 6, max_denominator=4)] * 4), st.fractions(1, 5, max_denominator=3), st.fractions(1, 5, max_denominator=3))
def test_propagator_contracted_with_momentum(kq, m, mu):
    k = [ExactScalar(kq[0]), ExactScalar(kq[1]), ExactScalar(kq[2]), ExactScalar(0, kq[3])]
    k2 = sum((x * x for x in k), ExactScalar(0))
    if not (k2 + m * m) or not (k2 + mu * mu):
        with pytest.raises(PoleError):
            propagator(k, m, mu)
        return
    D = propagator(k, m, mu)
    assert D.T == D
    # only the k k / (k^2 + m^2) part survives on the momentum
    kc = ExactMatrix.column(k)
    assert D @ kc == kc.scale(ExactScalar(m * m / (mu * mu)) / (k2 + m * m))
    if m == mu:
        assert D == ExactMatrix.identity(4).scale(1 / (k2 + m * m))


def test_longitudinal_coefficient():
    num, den = longitudinal_coefficient(3, 2)
    s = ExactPoly.x()
    assert num == ExactPoly.const(5)
    assert den == ExactPoly.const(4) * s * s + ExactPoly.const(52) * s + ExactPoly.const(144)
    num, _ = longitudinal_coefficient(2, 2)
    assert num.is_zero()


def test_propagator_rejects_zero_mu():
    with pytest.raises(PoleError):
        propagator([1, 0, 0, 0], 1, 0)


def test_printed_relations_match_for_momenta_in_the_xy_plane():
    k = FourMomentum.on_shell(-4, 3, 0, 12)
    b, a = vector_rep_relations(k)
    assert b.matches and b.pairing == "pauli-conjugate"
    assert a.matches and a.pairing == "bilinear"
    assert all(f is not None and f.abs2() == 1 for f in b.row_factors + a.row_factors)


def test_printed_relations_differ_for_generic_momentum():
    b, a = vector_rep_relations(P)
    assert not b.matches and not a.matches
    assert b.row_factors[0] is not None and a.row_factors[0] is not None


@given(scalars)
def test_invariants_are_sesquilinear(c):
    e = [x for x in helicity_basis(P)["0"].components]
    base = dynamical_invariants(P, e, PARAMS)
    scaled = dynamical_invariants(P, [c * x for x in e], PARAMS)
    w = ExactScalar(c.abs2())
    assert scaled.T == base.T.scale(w)
    assert scaled.J == tuple(w * x for x in base.J)


@pytest.mark.parametrize("label", ["+1", "-1", "0", "0t"])
def test_current_equals_its_expansion(label):
    e = [x for x in helicity_basis(P)[label].components]
    inv = dynamical_invariants(P, e, PARAMS)
    assert inv.J == inv.J_terms
    assert inv.transverse == (label != "0t")
    if inv.transverse:
        assert not any(inv.J_scalar_terms) and inv.T_scalar_terms.is_zero()
    else:
        assert any(inv.J_scalar_terms)


def test_standard_vectors_are_not_transverse_to_the_plane_wave():
    e = [x for x in standard_basis(P)["0"].components]
    assert not dynamical_invariants(P, e, PARAMS).transverse


def test_weak_lorentz_condition():
    assert weak_lorentz_condition({"0t": 2, "0": 2})
    assert not weak_lorentz_condition({"0t": 1})
    e = [x for x in helicity_basis(P)["0"].components]
    with pytest.raises(ValueError):
        dynamical_invariants(P, e, PARAMS, amplitudes={"0t": 1, "0": 0})


def test_amplitude_with_radical_is_rejected():
    with pytest.raises(ValueError):
        dynamical_invariants(P, helicity_basis(P)["+1"], PARAMS)
