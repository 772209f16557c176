import numpy as np
import pytest
from hypothesis import given, strategies as st

from bwkit.exact import ExactMatrix, ExactScalar
from bwkit.momentum import FourMomentum, sample_on_shell
from bwkit.polarization import (
    ETA,
    LABELS,
    DirectionUndefinedError,
    IrrationalError,
    NoMasslessLimitError,
    azimuthal_phase,
    change_of_basis,
    completeness,
    completeness_float,
    eb_from_potential,
    helicity_basis,
    helicity_basis_float,
    helicity_operator,
    notoph_tensor,
    notoph_wedge,
    parity_report,
    printed_eb,
    standard_basis,
    standard_basis_float,
)

MOMENTA = [FourMomentum.on_shell(*t) for t in ((3, 4, 12, 84), (0, 3, 4, 12), (-4, 3, 0, 12), (0, 0, 4, 3), (0, 0, -4, 3))]
G44 = ExactMatrix.diag([1, 1, 1, -1])


def _col(v):
    return ExactMatrix.column(v.components).scale(ExactScalar(v.normalization))



@pytest.mark.parametrize("p", MOMENTA, ids=lambda p: f"{p.p1},{p.p2},{p.p3}")
@pytest.mark.parametrize("kind", ["standard", "helicity"])
def test_completeness_and_pseudo_orthonormality(p, kind):
    basis = standard_basis(p) if kind == "standard" else helicity_basis(p)
    assert completeness(basis) == ExactMatrix.identity(4)
    for a in LABELS:
        for b in LABELS:
            u, v = basis[a], basis[b]
            if u.radical != v.radical:
                continue
            raw = (_col(u).H @ G44 @ _col(v))[0, 0] / u.radical
            assert raw == (ETA[a] if a == b else 0)


@pytest.mark.parametrize("p", MOMENTA, ids=lambda p: f"{p.p1},{p.p2},{p.p3}")
def test_helicity_vectors_transverse_and_eigen(p):
    hb = helicity_basis(p)
    pe = p.euclid()
    H = helicity_operator(p)
    for lab, s in (("+1", 1), ("-1", -1), ("0", 0)):
        col = ExactMatrix.column(hb[lab].components)
        assert sum((x * y for x, y in zip(pe, hb[lab].components)), ExactScalar(0)) == 0
        assert H @ col == col.scale(s)
    # the time-like vector is p/m itself
    assert [c * p.mass for c in hb["0t"].components] == list(pe)


@pytest.mark.parametrize("p", MOMENTA, ids=lambda p: f"{p.p1},{p.p2},{p.p3}")
def test_parity_standard_vs_helicity(p):
    std = parity_report(p, "standard")
    assert [std[k] for k in ("+1", "-1", "0", "0t")] == [1, 1, 1, -1]
    hel = parity_report(p, "helicity")
    assert hel["+1"] is None and hel["-1"] is None
    assert hel["0"] == -1 and hel["0t"] == -1
    assert hel["+1->-1"] == -1 and hel["-1->+1"] == -1


def test_azimuthal_phase_changes_cross_helicity_factor():
    p = MOMENTA[0]
    rep = parity_report(p, "helicity", ("azimuth", "azimuth"))
    e = azimuthal_phase(p)
    assert rep["+1->-1"] == e * e
    assert rep["-1->+1"] == rep["+1->-1"].conj()


@pytest.mark.parametrize("p", MOMENTA[:3], ids=lambda p: f"{p.p1},{p.p2},{p.p3}")
def test_closed_form_fields(p):
    hb = helicity_basis(p, ("azimuth", "azimuth"))
    for lab in ("+1", "-1", "0"):
        got, want = eb_from_potential(hb[lab]), printed_eb(p, lab)
        assert got.E == want.E and got.B == want.B and got.radical == want.radical
    f0 = eb_from_potential(hb["0"])
    assert all(not b for b in f0.B)


@pytest.mark.parametrize("p", MOMENTA, ids=lambda p: f"{p.p1},{p.p2},{p.p3}")
def test_notoph_tensor_equals_wedge_of_transverse_vectors(p):
    N = notoph_tensor(p)
    assert N == notoph_wedge(p)
    assert N.T == -N


def test_float_path_agrees_with_exact_and_change_of_basis_is_unitary():
    p = MOMENTA[0]
    ex = helicity_basis(p)
    fl = helicity_basis_float([3.0, 4.0, 12.0], 84.0)
    for lab in LABELS:
        assert np.allclose(ex[lab].values(), fl[lab], rtol=0, atol=1e-12)
    std = standard_basis(p)
    sf = standard_basis_float([3.0, 4.0, 12.0], 84.0)
    for lab in LABELS:
        assert np.allclose(std[lab].values(), sf[lab], rtol=0, atol=1e-12)
    C = change_of_basis([0.3, -1.7, 2.2], 1.3, (0.25, -0.5))
    assert np.allclose(C @ C.conj().T, np.eye(4), atol=1e-12)


@given(
    st.tuples(*[st.floats(-5, 5, allow_nan=False) for _ in range(3)]),
    st.floats(0.1, 5),
)
def test_float_completeness(p3, m):
    if np.hypot(p3[0], p3[1]) < 1e-6:
        return
    vecs = helicity_basis_float(p3, m)
    assert np.allclose(completeness_float(vecs), np.eye(4), atol=1e-9)


def test_error_cases():
    with pytest.raises(DirectionUndefinedError):
        helicity_basis(FourMomentum.on_shell(0, 0, 0, 1))
    with pytest.raises(DirectionUndefinedError):
        azimuthal_phase(MOMENTA[3])
    with pytest.raises(IrrationalError):
        helicity_basis(FourMomentum.off_shell(1, 1, 0, 3))
    with pytest.raises(NoMasslessLimitError):
        helicity_basis(FourMomentum(3, 4, 0, 5, 0))


def test_sampled_momenta_give_complete_helicity_bases():
    for p in sample_on_shell(8, seed=3, limit=8, need_abs_p=True, need_rho=True):
        assert completeness(helicity_basis(p)) == ExactMatrix.identity(4)
