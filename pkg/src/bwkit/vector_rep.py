"""The (1/2,1/2) representation: gamma_{ab}, gamma_{5,ab}, the parity matrix and
the (A, B, m) wave operator

    [gamma_{ab} d_a d_b + A d^2 - B m^2] B = 0.

Momentum-space convention (plane wave e^{ipx}, d_mu -> i p_mu, p4 = iE):
the operator is taken as

    M(p) = gamma_{ab} p_a p_b + A p.p + B m^2,

which is minus the derivative form. With p.p = -mass^2 this gives the
transverse (spin-1) branch at mass^2 = B m^2/(A+1) and the longitudinal
(spin-0) branch at mass^2 = B m^2/(A-1).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product

from .exact import (
    ExactMatrix,
    ExactPoly,
    ExactScalar,
    I,
    ZERO,
    det_poly,
    rank,
    rank_nullspace,
    rational_root_masses,
)
from .momentum import FourMomentum

IDX = range(4)


def _d(a: int, b: int) -> int:
    return 1 if a == b else 0


# As printed, 1-based labels (time is 4). Only the upper triangle (a <= b) is
# listed; gamma_{ab} = gamma_{ba}.
PRINTED_GAMMA = {
    (4, 4): [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, -1]],
    (1, 4): [[0, 0, 0, -1], [0, 0, 0, 0], [0, 0, 0, 0], [-1, 0, 0, 0]],
    (2, 4): [[0, 0, 0, 0], [0, 0, 0, -1], [0, 0, 0, 0], [0, -1, 0, 0]],
    (3, 4): [[0, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, -1], [0, 0, -1, 0]],
    (1, 1): [[-1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]],
    (2, 2): [[1, 0, 0, 0], [0, -1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]],
    (3, 3): [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, -1, 0], [0, 0, 0, 1]],
    (1, 2): [[0, -1, 0, 0], [-1, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0]],
    (1, 3): [[0, 0, -1, 0], [0, 0, 0, 0], [-1, 0, 0, 0], [0, 0, 0, 0]],
    (2, 3): [[0, 0, 0, 0], [0, 0, -1, 0], [0, -1, 0, 0], [0, 0, 0, 0]],
}

# gamma_{5,ab} = i * table; listed for the printed orderings, the transposed
# label carries the opposite sign.
PRINTED_GAMMA5 = {
    (4, 1): [[0, 0, 0, -1], [0, 0, 0, 0], [0, 0, 0, 0], [1, 0, 0, 0]],
    (4, 2): [[0, 0, 0, 0], [0, 0, 0, -1], [0, 0, 0, 0], [0, 1, 0, 0]],
    (4, 3): [[0, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, -1], [0, 0, 1, 0]],
    (1, 2): [[0, 1, 0, 0], [-1, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0]],
    (3, 1): [[0, 0, -1, 0], [0, 0, 0, 0], [1, 0, 0, 0], [0, 0, 0, 0]],
    (2, 3): [[0, 0, 0, 0], [0, 0, 1, 0], [0, -1, 0, 0], [0, 0, 0, 0]],
}


@dataclass(frozen=True)
class VectorRepSet:
    gamma: dict  # (a, b) 0-based -> 4x4, all 16 ordered pairs
    gamma5: dict  # (a, b) 0-based -> 4x4, all 16 ordered pairs
    parity: ExactMatrix


def gamma_formula(a: int, b: int) -> ExactMatrix:
    return ExactMatrix.from_function(
        4, 4, lambda m, n: _d(m, n) * _d(a, b) - _d(m, a) * _d(n, b) - _d(m, b) * _d(n, a)
    )


def printed_gamma(a: int, b: int) -> ExactMatrix:
    key = (min(a, b) + 1, max(a, b) + 1)
    return ExactMatrix(PRINTED_GAMMA[key])


def printed_gamma5(a: int, b: int) -> ExactMatrix:
    if a == b:
        return ExactMatrix.zeros(4, 4)
    key = (a + 1, b + 1)
    if key in PRINTED_GAMMA5:
        return ExactMatrix(PRINTED_GAMMA5[key]).scale(I)
    return ExactMatrix(PRINTED_GAMMA5[(b + 1, a + 1)]).scale(-I)


def gamma5_closed_form(a: int, b: int) -> ExactMatrix:
    return ExactMatrix.from_function(
        4, 4, lambda m, n: I * (_d(a, m) * _d(b, n) - _d(a, n) * _d(b, m))
    )


def build_vector_rep() -> VectorRepSet:
    gamma = {}
    for a, b in product(IDX, IDX):
        g = gamma_formula(a, b)
        if g != printed_gamma(a, b):
            raise AssertionError(f"gamma_{a + 1}{b + 1} disagrees with the printed table")
        gamma[(a, b)] = g
    v = VectorRepSet(gamma, {}, gamma[(3, 3)])
    return VectorRepSet(gamma, build_gamma5(v), gamma[(3, 3)])


def build_gamma5(v: VectorRepSet) -> dict:
    """gamma_{5,ab} = (i/6) sum_k [gamma_{ak}, gamma_{bk}]."""
    sixth_i = ExactScalar(0, Fraction(1, 6))
    out = {}
    for a, b in product(IDX, IDX):
        acc = ExactMatrix.zeros(4, 4)
        for k in IDX:
            acc = acc + v.gamma[(a, k)].commutator(v.gamma[(b, k)])
        out[(a, b)] = acc.scale(sixth_i)
    return out


def parity_relations(v: VectorRepSet) -> dict:
    """For every (a, b): 'commute', 'anticommute' or 'neither' with gamma_44."""
    P = v.parity
    out = {}
    for key, g in v.gamma.items():
        if (P @ g) == (g @ P):
            out[key] = "commute"
        elif (P @ g) == -(g @ P):
            out[key] = "anticommute"
        else:
            out[key] = "neither"
    return out


# ---------------------------------------------------------------------------
# wave operator


@dataclass(frozen=True)
class WaveOperatorParams:
    A: Fraction
    B: Fraction
    m: Fraction = Fraction(1)

    def __post_init__(self):
        for name in ("A", "B", "m"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))
        if self.m < 0:
            raise ValueError("mass must be non-negative")


def wave_operator(p, params: WaveOperatorParams, v: VectorRepSet | None = None) -> ExactMatrix:
    """M(p) = gamma_{ab} p_a p_b + A p.p + B m^2 (p FourMomentum or Euclidean 4-tuple)."""
    v = v or _VREP
    pe = p.euclid() if isinstance(p, FourMomentum) else tuple(ExactScalar.of(x) for x in p)
    acc = ExactMatrix.zeros(4, 4)
    for a, b in product(IDX, IDX):
        c = pe[a] * pe[b]
        if c:
            acc = acc + v.gamma[(a, b)].scale(c)
    p2 = sum((x * x for x in pe), ZERO)
    diag = ExactScalar.of(params.A) * p2 + ExactScalar.of(params.B * params.m * params.m)
    return acc + ExactMatrix.identity(4).scale(diag)


def rest_frame_operator_poly(params: WaveOperatorParams) -> list[list[ExactPoly]]:
    """Wave operator / m^2 at rest with E^2 = x m^2, entries polynomial in x."""
    v = _VREP
    x = ExactPoly.x()
    p44 = -x  # p4 p4 / m^2
    rows = []
    for i in IDX:
        row = []
        for j in IDX:
            e = p44 * ExactPoly([v.gamma[(3, 3)][i, j]])
            if i == j:
                e = e + p44 * ExactPoly([params.A]) + ExactPoly([params.B])
            row.append(e)
        rows.append(row)
    return rows


def _eval_rows(rows, x) -> ExactMatrix:
    return ExactMatrix([[e(x) for e in r] for r in rows])


@dataclass(frozen=True)
class SpectrumBranch:
    spin: int
    mass2_ratio: Fraction | None  # mass^2 / m^2; None when the branch is absent
    multiplicity: int
    status: str  # "massive", "massless", "tachyonic", "degenerate"


@dataclass(frozen=True)
class Spectrum:
    params: WaveOperatorParams
    determinant: ExactPoly
    branches: tuple
    unresolved: ExactPoly = field(default_factory=lambda: ExactPoly([1]))

    def branch(self, spin: int) -> SpectrumBranch:
        return next(b for b in self.branches if b.spin == spin)


def _classify(r: Fraction) -> str:
    if r == 0:
        return "massless"
    return "massive" if r > 0 else "tachyonic"


def kernel_spin_content(op: ExactMatrix, time_index: int = 3) -> dict:
    """Split the kernel of a rest-frame operator into transverse and longitudinal parts."""
    ker = rank_nullspace(op)
    transverse = op.vstack(ExactMatrix([[1 if k == time_index else 0 for k in IDX]]))
    t_dim = 4 - rank(transverse)
    e_t = ExactMatrix.column([1 if k == time_index else 0 for k in IDX])
    longitudinal = 1 if (op @ e_t).is_zero() else 0
    return {"kernel": ker.nullity, "transverse": t_dim, "longitudinal": longitudinal}


def dispersion_spectrum(params: WaveOperatorParams) -> Spectrum:
    """Mass spectrum from the roots of det M at rest, spins from the kernels."""
    rows = rest_frame_operator_poly(params)
    det = det_poly(rows)
    branches = []
    found = {0: None, 1: None}
    if det.is_zero():
        return Spectrum(
            params, det, (SpectrumBranch(1, None, 0, "degenerate"), SpectrumBranch(0, None, 0, "degenerate"))
        )
    roots = rational_root_masses(det)
    for r, mult in roots.roots:
        content = kernel_spin_content(_eval_rows(rows, r))
        if content["kernel"] != mult:
            raise AssertionError(f"kernel dimension {content} disagrees with multiplicity {mult}")
        if content["transverse"]:
            found[1] = SpectrumBranch(1, r, content["transverse"], _classify(r))
        if content["longitudinal"]:
            found[0] = SpectrumBranch(0, r, content["longitudinal"], _classify(r))
    for spin in (1, 0):
        if found[spin] is None:
            found[spin] = SpectrumBranch(spin, None, 0, "degenerate")
    branches = (found[1], found[0])
    return Spectrum(params, det, branches, roots.unresolved)


@dataclass(frozen=True)
class SplitOperators:
    spin0_params: WaveOperatorParams
    spin1_params: WaveOperatorParams
    parasite_spin1_mass2: Fraction | None  # on the spin-0 equation
    parasite_spin0_mass2: Fraction | None  # on the spin-1 equation


def spin_split_operators(B, m=1) -> SplitOperators:
    """A = B+1 (spin 0 at mass m) and A = B-1 (spin 1 at mass m) with their parasites."""
    B = Fraction(B)
    p0 = WaveOperatorParams(B + 1, B, m)
    p1 = WaveOperatorParams(B - 1, B, m)
    s0 = dispersion_spectrum(p0)
    s1 = dispersion_spectrum(p1)
    if s0.branch(0).mass2_ratio != 1 or s1.branch(1).mass2_ratio != 1:
        raise AssertionError("split equations do not carry the nominal mass")
    return SplitOperators(p0, p1, s0.branch(1).mass2_ratio, s1.branch(0).mass2_ratio)


# ---------------------------------------------------------------------------
# Lagrangian


@dataclass(frozen=True)
class QuadraticLagrangian:
    """L = K[a][mu][b][nu] (d_a B*_mu)(d_b B_nu) + M[mu][nu] B*_mu B_nu."""

    K: dict  # (a, mu, b, nu) -> ExactScalar, zeros omitted
    M: dict  # (mu, nu) -> ExactScalar

    def euler_lagrange(self, p) -> ExactMatrix:
        """Variation with respect to B* at momentum p: [M + K p_a p_b] B."""
        pe = p.euclid() if isinstance(p, FourMomentum) else tuple(ExactScalar.of(x) for x in p)
        out = [[ZERO] * 4 for _ in IDX]
        for (mu, nu), c in self.M.items():
            out[mu][nu] = out[mu][nu] + c
        for (a, mu, b, nu), c in self.K.items():
            out[mu][nu] = out[mu][nu] + c * pe[a] * pe[b]
        return ExactMatrix(out)


def _add(dst: dict, key, c):
    c = ExactScalar.of(c)
    v = dst.get(key, ZERO) + c
    if v:
        dst[key] = v
    else:
        dst.pop(key, None)


def lagrangian_from_gamma(params: WaveOperatorParams, v: VectorRepSet | None = None) -> QuadraticLagrangian:
    v = v or _VREP
    K, M = {}, {}
    for a, b, mu, nu in product(IDX, IDX, IDX, IDX):
        g = v.gamma[(a, b)][mu, nu]
        if g:
            _add(K, (a, mu, b, nu), g)
    for a, mu in product(IDX, IDX):
        _add(K, (a, mu, a, mu), params.A)
    for mu in IDX:
        _add(M, (mu, mu), params.B * params.m * params.m)
    return QuadraticLagrangian(K, M)


def lagrangian_grouped(params: WaveOperatorParams) -> QuadraticLagrangian:
    """(A+1)(dB*)(dB) - (d_nu B*_mu)(d_mu B_nu) - (d.B*)(d.B) + B m^2 B*B."""
    K, M = {}, {}
    for a, mu in product(IDX, IDX):
        _add(K, (a, mu, a, mu), params.A + 1)
    for mu, nu in product(IDX, IDX):
        _add(K, (nu, mu, mu, nu), -1)
        _add(K, (mu, mu, nu, nu), -1)
    for mu in IDX:
        _add(M, (mu, mu), params.B * params.m * params.m)
    return QuadraticLagrangian(K, M)


def total_derivative_kernels() -> tuple[dict, dict]:
    """d_mu Gamma_mu with Gamma_mu = B*_nu d_nu B_mu - B*_mu d_nu B_nu.

    Returns (first-derivative bilinear kernel, symmetrized second-derivative
    kernel over (mu', a, b, nu) for B*_mu' d_a d_b B_nu).
    """
    K, S2 = {}, {}
    for mu, nu in product(IDX, IDX):
        _add(K, (mu, nu, nu, mu), 1)  # (d_mu B*_nu)(d_nu B_mu)
        _add(K, (mu, mu, nu, nu), -1)  # -(d_mu B*_mu)(d_nu B_nu)
        for a, b in ((mu, nu), (nu, mu)):
            _add(S2, (nu, a, b, mu), Fraction(1, 2))  # B*_nu d_mu d_nu B_mu
        for a, b in ((mu, nu), (nu, mu)):
            _add(S2, (mu, a, b, nu), Fraction(-1, 2))  # -B*_mu d_mu d_nu B_nu
    return K, S2


def _kernel_vector(K: dict) -> list[ExactScalar]:
    return [K.get(k, ZERO) for k in product(IDX, IDX, IDX, IDX)]


@dataclass(frozen=True)
class LagrangianReport:
    matches_wave_operator: bool
    grouping_identity: bool
    second_derivative_part_vanishes: bool
    removable_by_total_derivative: bool
    residual_plus: dict  # L + dGamma non-diagonal kernel
    residual_minus: dict  # L - dGamma non-diagonal kernel
    samples: int


def lagrangian_consistency(params: WaveOperatorParams, momenta=()) -> LagrangianReport:
    Lg = lagrangian_from_gamma(params)
    Lgrp = lagrangian_grouped(params)
    ok = True
    for p in momenta:
        if Lg.euler_lagrange(p) != wave_operator(p, params):
            ok = False
    grouping = Lg.K == Lgrp.K and Lg.M == Lgrp.M
    KG, S2 = total_derivative_kernels()
    # non-diagonal part of L: everything beyond (A+1) delta
    nd = dict(Lgrp.K)
    for a, mu in product(IDX, IDX):
        _add(nd, (a, mu, a, mu), -(params.A + 1))
    vg, vn = _kernel_vector(KG), _kernel_vector(nd)
    # is there c with nd + c KG = 0 ?
    removable = rank(ExactMatrix([vg, vn])) == rank(ExactMatrix([vg])) and any(vn)
    if not any(vn):
        removable = True
    plus, minus = dict(nd), dict(nd)
    for k, c in KG.items():
        _add(plus, k, c)
        _add(minus, k, -c)
    return LagrangianReport(
        ok, grouping, not S2, removable, plus, minus, len(momenta)
    )


_VREP = build_vector_rep()


def vector_rep() -> VectorRepSet:
    return _VREP
