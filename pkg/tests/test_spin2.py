from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from bwkit.exact import ExactMatrix, ExactScalar
from bwkit.momentum import FourMomentum, rest_frame
from bwkit.spin2 import (
    BLOCK_SIZE,
    BLOCKS,
    GENERIC,
    STANDARD,
    Spin2Coefficients,
    assemble_multispinor,
    block_structure,
    check_essential,
    check_families,
    dynamics_nullities,
    dynamics_system,
    g_second_order_check,
    multispinor_map,
    recover_standard_case,
    symmetry_constraint_system,
    transverse_traceless,
    two_stage_map,
)

from conftest import matrices, small_fractions


@pytest.fixture(scope="module")
def standard():
    return symmetry_constraint_system(STANDARD)


@pytest.fixture(scope="module")
def generic():
    return symmetry_constraint_system(GENERIC)


def _idx(a, b, c, d):
    return 64 * a + 16 * b + 4 * c + d


def test_coefficient_validation_and_weights():
    with pytest.raises(ValueError):
        Spin2Coefficients((1, 1), (1,) * 9)
    assert STANDARD.active() == ("G", "F", "T", "R")
    assert GENERIC.active() == BLOCKS
    assert STANDARD.scaled(2, -3).weight("R") == -6


block_values = st.fixed_dictionaries({"G": st.lists(small_fractions, min_size=16, max_size=16), "T": st.lists(small_fractions, min_size=24, max_size=24)})


@given(block_values, block_values, small_fractions)
def test_assembly_is_linear(x, y, c):
    sx, sy = assemble_multispinor(x), assemble_multispinor(y)
    both = assemble_multispinor({k: [u + c * v for u, v in zip(x[k], y[k])] for k in x})
    assert both == [u + ExactScalar(c) * v for u, v in zip(sx, sy)]


@settings(max_examples=10)
@given(st.lists(small_fractions, min_size=sum(BLOCK_SIZE.values()), max_size=sum(BLOCK_SIZE.values())))
def test_each_index_pair_is_symmetric(vals):
    values, k = {}, 0
    for b in BLOCKS:
        values[b] = vals[k : k + BLOCK_SIZE[b]]
        k += BLOCK_SIZE[b]
    psi = assemble_multispinor(values, GENERIC)
    for a, b, c, d in product(range(4), repeat=4):
        assert psi[_idx(a, b, c, d)] == psi[_idx(b, a, c, d)] == psi[_idx(a, b, d, c)]


def test_assembly_rejects_wrong_block_size():
    with pytest.raises(ValueError):
        assemble_multispinor({"G": [1, 2, 3]})


def test_standard_case_counts(standard):
    assert standard.constructions_agree
    assert standard.component_nullity == 35
    assert standard.image_nullity == 35
    assert standard.expansion_kernel == 0


def test_nullspace_vectors_give_totally_symmetric_multispinors(standard):
    mp = multispinor_map(STANDARD)
    for v in standard.system.nullspace[:6]:
        psi = mp.apply([v[i, 0] for i in range(mp.size)])
        assert any(psi)
        for a, b, c, d in product(range(4), repeat=4):
            assert psi[_idx(a, b, c, d)] == psi[_idx(a, c, b, d)]


def test_two_stage_construction_gives_same_system(standard):
    two = symmetry_constraint_system(STANDARD, two_stage_map())
    assert two.component_nullity == standard.component_nullity
    assert two.system.same_row_space(standard.system)


def test_bilinear_rescaling_keeps_row_space(standard):
    scaled = symmetry_constraint_system(STANDARD.scaled(2, -3))
    assert scaled.system.same_row_space(standard.system)


def test_constraint_families(standard):
    res = {f.family: f for f in check_families(standard.system, standard.system.unknown_labels)}
    for name, f in res.items():
        if name not in ("b1:metric", "f1:traces"):
            assert f.ok, name
    # the symmetric traceless part of G and the Ricci-like traces of R survive symmetrization
    assert res["b1:metric"].in_row_space == 0 and res["b1:metric"].members == 16
    assert res["f1:traces"].in_row_space == 1 and res["f1:traces"].members == 65


@pytest.mark.slow
def test_generic_case(generic):
    assert generic.constructions_agree
    assert (generic.component_nullity, generic.image_nullity, generic.expansion_kernel) == (191, 35, 156)
    ess = check_essential(generic.system, generic.system.unknown_labels, GENERIC)
    assert ess and all(e.holds for e in ess)


@pytest.mark.slow
def test_recover_standard_case():
    rec = recover_standard_case()
    assert rec.row_spaces_equal
    assert rec.standard_nullity == 35
    assert all(f.ok for f in rec.families if f.family not in ("b1:metric", "f1:traces"))


def test_dynamics_at_rest():
    p = rest_frame(3)
    assert dynamics_nullities(p, 3) == (5, 5)
    ms = dynamics_system(p, 3)
    assert ms.all_relations_hold()
    assert block_structure(ms.system.matrix) == [52, 48]


def test_dynamics_off_shell_has_no_solutions():
    p = FourMomentum.off_shell(0, 0, 4, 6)
    assert dynamics_nullities(p, 3)[0] == 0


P = FourMomentum.on_shell(0, 0, 4, 3)


@given(matrices(4).filter(lambda m: not m.is_zero()))
def test_second_order_equation_for_transverse_traceless_g(seed):
    G = transverse_traceless(P, seed)
    rep = g_second_order_check(P, 3, G)
    assert G.T == G and G.trace() == 0
    assert rep.residual_zero
    assert all(not f for f in rep.F)


@given(matrices(4))
def test_second_order_contraction_identity_holds_for_any_g(G):
    assert g_second_order_check(P, 3, G).contraction_identity


def test_longitudinal_g_violates_second_order_equation():
    pe = P.euclid()
    G = ExactMatrix.from_function(4, 4, lambda a, b: pe[a] * pe[b])
    rep = g_second_order_check(P, 3, G)
    assert not rep.residual_zero
    assert rep.p_dot_F == -81
