"""Field-operator relations, the vector-field propagator and plane-wave invariants.

Plane waves use B_mu = e_mu exp(i k.x) with Euclidean k = (k, iE). The
conjugate field follows the Pauli-metric rule B*_4 = i (B^0)^*, so its
amplitude is gamma_44 e^* and d_mu B* -> -i k_mu B*.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import product

import numpy as np

from .exact import I, ONE, ZERO, ExactMatrix, ExactPoly, ExactScalar, frac_sqrt
from .momentum import FourMomentum
from .polarization import GAMMA44, PolarizationVector, helicity_basis, standard_basis
from .vector_rep import WaveOperatorParams, vector_rep


class NormalizationError(ValueError):
    pass


class PoleError(ZeroDivisionError):
    pass


class FrequencyError(ValueError):
    """Raised at k_0 = 0, where the split into positive and negative frequencies fails."""


def _unit(n) -> tuple[Fraction, Fraction, Fraction]:
    n = tuple(Fraction(x) for x in n)
    if len(n) != 3 or sum(x * x for x in n) != 1:
        raise NormalizationError(f"|n|^2 = {sum(x * x for x in n)} for n = {n}; need a unit vector")
    return n


def pauli_dot(n) -> ExactMatrix:
    nx, ny, nz = n
    return ExactMatrix([[nz, nx - I * ny], [nx + I * ny, -nz]])


def spin1_matrices() -> tuple[ExactMatrix, ...]:
    """Cartesian spin-1 matrices, (S_k)_{ij} = -i eps_{kij}."""
    from .bw_spin1 import levi_civita

    return tuple(
        ExactMatrix.from_function(3, 3, lambda i, j, k=k: -I * levi_civita((k, i, j))) for k in range(3)
    )


@dataclass(frozen=True)
class OperatorRelation:
    matrix: ExactMatrix
    representation: str
    direction: tuple
    note: str
    checks: dict

    @property
    def ok(self) -> bool:
        return all(self.checks.values())


def spin_half_relation(n, m) -> OperatorRelation:
    """Lambda = -i m (sigma.n) linking b^dagger(k) to a(-k)."""
    n = _unit(n)
    sn = pauli_dot(n)
    lam = sn.scale(-I * Fraction(m))
    b_from_a = sn.scale(I)  # b^dagger(k) = i (sigma.n) a(-k)
    a_from_b = sn.scale(-I)  # a(-k) = -i (sigma.n) b^dagger(k)
    eye = ExactMatrix.identity(2)
    checks = {
        "(sigma.n)^2=1": sn @ sn == eye,
        "composition=1": a_from_b @ b_from_a == eye,
        "-m b = Lambda a": lam == b_from_a.scale(-Fraction(m)),
    }
    return OperatorRelation(lam, "spin-half", n, "Lambda = -i m (sigma.n)", checks)


def bivector_relation(n) -> OperatorRelation:
    """[1 - 2 (S.n)^2], the (1,0)+(0,1) relation between a(k) and a(-k); Cartesian basis."""
    n = _unit(n)
    S = spin1_matrices()
    sn = S[0].scale(n[0]) + S[1].scale(n[1]) + S[2].scale(n[2])
    M = ExactMatrix.identity(3) - (sn @ sn).scale(2)
    checks = {
        "involution": M @ M == ExactMatrix.identity(3),
        "trace=-1": M.trace() == -ONE,
        "=2nn^T-1": M == ExactMatrix.from_function(3, 3, lambda i, j: 2 * n[i] * n[j] - (1 if i == j else 0)),
    }
    return OperatorRelation(M, "bivector", n, "Cartesian basis, (S_k)_ij = -i eps_kij", checks)


def spherical_view(M: ExactMatrix) -> np.ndarray:
    """The Cartesian 3x3 matrix in the S_z eigenbasis ordered (+1, 0, -1)."""
    r = 1 / math.sqrt(2)
    U = np.array([[-r, -1j * r, 0], [0, 0, 1], [r, -1j * r, 0]])
    return U @ M.to_numpy() @ U.conj().T


# ---------------------------------------------------------------------------
# (1/2,1/2) operator relations


@dataclass(frozen=True)
class RadicalEntry:
    """c / sqrt(r), r in {1, 2}: enough for products of helicity vectors."""

    c: ExactScalar
    r: int = 1

    def __eq__(self, o):
        if not self.c and not o.c:
            return True
        return self.r == o.r and self.c == o.c

    def __hash__(self):
        return hash((self.c, self.r)) if self.c else 0

    def value(self) -> complex:
        return complex(self.c) / math.sqrt(self.r)

    def ratio(self, o: "RadicalEntry"):
        """self / o as an exact scalar when the radicals agree, otherwise None."""
        if not o.c or self.r != o.r:
            return None
        return self.c / o.c


def _pair44(u: PolarizationVector, v: PolarizationVector, conjugate: bool) -> RadicalEntry:
    acc = ZERO
    for i, (a, b) in enumerate(zip(u.components, v.components)):
        acc = acc + (a.conj() if conjugate else a) * GAMMA44[i, i] * b
    acc = acc * (u.normalization * v.normalization)
    r = u.radical * v.radical
    s = frac_sqrt(Fraction(r))
    if s is not None:
        return RadicalEntry(acc / s, 1)
    return RadicalEntry(acc, r)


# printed ordering: a_00 (time-like), a_11, a_1-1, a_10
PRINTED_ORDER = ("0t", "+1", "-1", "0")


def _basis(k: FourMomentum, basis: str, phases):
    if basis == "standard":
        return standard_basis(k)
    if basis == "helicity":
        return helicity_basis(k, phases)
    raise ValueError(f"unknown basis {basis!r}")


def contraction_matrix(k: FourMomentum, conjugate: bool, basis: str = "standard", phases=(0, 0)) -> list[list[RadicalEntry]]:
    """sum_{nu mu} e_nu(k, s) [gamma_44]_{nu mu} e_mu(-k, l) (e(k) conjugated on request)."""
    if k.E <= 0:
        raise FrequencyError("operator relations need k_0 = E > 0")
    ek = _basis(k, basis, phases)
    emk = _basis(k.reversed(), basis, phases)
    return [[_pair44(ek[s], emk[l], conjugate) for l in PRINTED_ORDER] for s in PRINTED_ORDER]


def printed_bdagger(k: FourMomentum) -> list[list[RadicalEntry]]:
    """The printed b^dagger matrix (prefactor E^2/m^2 included), entries c/sqrt(r)."""
    E, m2 = k.E, k.invariant_mass2
    k2 = k.p_sq
    k3 = ExactScalar(k.spatial[2])
    kr, kl = k.p_r, k.p_l
    pre = E * E / m2

    def q(x):  # rational-or-complex entry
        return RadicalEntry(ExactScalar.of(x) * pre, 1)

    def s2(x):  # sqrt(2) * x = 2x / sqrt(2)
        return RadicalEntry(ExactScalar.of(x) * pre * 2, 2)

    cross = -ExactScalar(m2) * k3 * k3 / (E * E * k2) + kr * kl / (E * E)
    return [
        [q(1 + k2 / (E * E)), s2(kr / E), s2(-kl / E), q(-2 * k3 / E)],
        [s2(-kr / E), q(-kr * kr / k2), q(cross), s2(k3 * kr / k2)],
        [s2(kl / E), q(cross), q(-kl * kl / k2), s2(-k3 * kl / k2)],
        [q(2 * k3 / E), s2(k3 * kr / k2), s2(-k3 * kl / k2), q(ExactScalar(m2 / (E * E)) - 2 * k3 / k2)],
    ]


def printed_a_matrix(k: FourMomentum) -> list[list[RadicalEntry]]:
    k2 = k.p_sq
    k3 = ExactScalar(k.spatial[2])
    kr, kl = k.p_r, k.p_l

    def q(x):
        return RadicalEntry(ExactScalar.of(x), 1)

    def s2(x):
        return RadicalEntry(ExactScalar.of(x) * 2, 2)

    return [
        [q(-1), q(0), q(0), q(0)],
        [q(0), q(k3 * k3 / k2), q(kl * kl / k2), s2(k3 * kl / k2)],
        [q(0), q(kr * kr / k2), q(k3 * k3 / k2), s2(-k3 * kr / k2)],
        [q(0), s2(k3 * kr / k2), s2(-k3 * kl / k2), q(1 - 2 * k3 * k3 / k2)],
    ]


@dataclass(frozen=True)
class RelationDiff:
    """Printed matrix against a defining contraction.

    The contraction is fixed only up to the phase of each e(-k, l) and the
    sign of each row, so the report carries the column signs, the per-row
    factors (printed / computed, None when a row is not proportional) and the
    entries that still differ after the best row sign.
    """

    name: str
    pairing: str  # "bilinear" or "pauli-conjugate"
    computed: tuple  # rows of RadicalEntry, column signs applied
    printed: tuple
    column_signs: tuple
    row_factors: tuple
    mismatched_entries: tuple

    @property
    def matches(self) -> bool:
        return not self.mismatched_entries


def _row_factor(pr, cr):
    f = None
    for a, b in zip(pr, cr):
        if not b.c:
            if a.c:
                return None
            continue
        r = a.ratio(b)
        if r is None or (f is not None and r != f):
            return None
        f = r
    return f


def _row_mismatch(pr, cr) -> list[int]:
    best = None
    for s in (1, -1):
        bad = [j for j, (a, b) in enumerate(zip(pr, cr)) if a != RadicalEntry(b.c * s, b.r)]
        if best is None or len(bad) < len(best):
            best = bad
    return best


def _diff(name, pairing, C, P) -> RelationDiff:
    best = None
    for cs in product((1, -1), repeat=4):
        rows = [tuple(RadicalEntry(x.c * s, x.r) for x, s in zip(r, cs)) for r in C]
        factors = tuple(_row_factor(pr, cr) for pr, cr in zip(P, rows))
        bad = tuple((i, j) for i, f in enumerate(factors) if f is None for j in _row_mismatch(P[i], rows[i]))
        if best is None or len(bad) < len(best[3]):
            best = (cs, rows, factors, bad)
    cs, rows, factors, bad = best
    return RelationDiff(name, pairing, tuple(rows), tuple(tuple(r) for r in P), cs, factors, bad)


def vector_rep_relations(k: FourMomentum, basis: str = "standard", phases=(0, 0)) -> tuple[RelationDiff, RelationDiff]:
    """(b^dagger relation, a relation) recomputed from polarization vectors and compared to print.

    Each printed matrix is compared with both pairings and the closer one is
    returned; the pairing used is named in the report.
    """
    if k.invariant_mass2 <= 0:
        raise ValueError("the time-like polarization needs m > 0")
    out = []
    for name, P in (("bdagger", printed_bdagger(k)), ("a", printed_a_matrix(k))):
        cands = [
            _diff(name, pairing, contraction_matrix(k, conj, basis, phases), P)
            for pairing, conj in (("bilinear", False), ("pauli-conjugate", True))
        ]
        out.append(min(cands, key=lambda d: len(d.mismatched_entries)))
    return out[0], out[1]


# ---------------------------------------------------------------------------
# propagator


def _k_vec(k) -> tuple:
    if isinstance(k, FourMomentum):
        return k.euclid()
    return tuple(ExactScalar.of(x) for x in k)


def propagator(k, m, mu) -> ExactMatrix:
    """(delta + k k/mu^2)/(k^2 + mu^2) - (k k/mu^2)/(k^2 + m^2), Euclidean k."""
    kv = _k_vec(k)
    m, mu = Fraction(m), Fraction(mu)
    if mu == 0:
        raise PoleError("mu = 0")
    k2 = sum((x * x for x in kv), ZERO)
    d1, d2 = k2 + mu * mu, k2 + m * m
    for name, d in (("k^2 + mu^2", d1), ("k^2 + m^2", d2)):
        if not d:
            raise PoleError(f"{name} = 0 at the evaluation point")
    inv_mu2 = ExactScalar(1 / (mu * mu))
    return ExactMatrix.from_function(
        4,
        4,
        lambda a, b: ((1 if a == b else 0) + kv[a] * kv[b] * inv_mu2) / d1 - kv[a] * kv[b] * inv_mu2 / d2,
    )


def longitudinal_coefficient(m, mu) -> tuple[ExactPoly, ExactPoly]:
    """Numerator and denominator, in s = k^2, of the combined k_mu k_nu coefficient.

    1/(mu^2 (s + mu^2)) - 1/(mu^2 (s + m^2)) = (m^2 - mu^2) / (mu^2 (s + mu^2)(s + m^2)).
    """
    m2, mu2 = Fraction(m) ** 2, Fraction(mu) ** 2
    s = ExactPoly.x()
    num = ExactPoly.const(m2 - mu2)
    den = (s + ExactPoly.const(mu2)) * (s + ExactPoly.const(m2)) * ExactPoly.const(mu2)
    return num, den


# ---------------------------------------------------------------------------
# plane-wave invariants


@dataclass(frozen=True)
class Invariants:
    T: ExactMatrix
    J: tuple
    spin: dict  # (mu, alpha) 0-based, mu < alpha -> 4-vector over lambda
    J_scalar_terms: tuple  # the divergence (spin-0) part of J
    T_scalar_terms: ExactMatrix
    J_terms: tuple  # J from the expanded form, term by term
    transverse: bool  # k.e = 0 for the plane-wave k = (p, iE)


def _amplitudes(eps):
    if isinstance(eps, PolarizationVector):
        if eps.radical != 1:
            raise ValueError("use an amplitude without a 1/sqrt factor (scale by sqrt(radical))")
        e = [c * eps.normalization for c in eps.components]
    else:
        e = [ExactScalar.of(x) for x in eps]
    eb = [GAMMA44[i, i] * e[i].conj() for i in range(4)]
    return e, eb


def weak_lorentz_condition(amplitudes: dict) -> bool:
    """[a_0t - a_0]|phi> = 0 read as equality of the two scalar-like mode amplitudes."""
    return ExactScalar.of(amplitudes.get("0t", 0)) == ExactScalar.of(amplitudes.get("0", 0))


def dynamical_invariants(p: FourMomentum, eps, params: WaveOperatorParams, amplitudes: dict | None = None) -> Invariants:
    """T_{mu nu}, J_lambda and the spin density for B = eps exp(ikx).

    When mode amplitudes are given they must satisfy the weak Lorentz condition.
    """
    if amplitudes is not None and not weak_lorentz_condition(amplitudes):
        raise ValueError("mode amplitudes violate the weak Lorentz condition")
    k = p.euclid()
    A, Bm2 = ExactScalar.of(params.A), ExactScalar.of(params.B) * Fraction(params.m) ** 2
    e, eb = _amplitudes(eps)
    v = vector_rep()
    R4 = range(4)

    def dB(mu, a):  # d_mu B_a
        return I * k[mu] * e[a]

    def dBb(mu, a):  # d_mu B*_a
        return -I * k[mu] * eb[a]

    # Pi_{l k} = dL/d(d_l B_k), Pib_{l k} = dL/d(d_l B*_k), tabulated once
    dB_t = [[dB(mu, a) for a in R4] for mu in R4]
    dBb_t = [[dBb(mu, a) for a in R4] for mu in R4]
    Pi_t = [
        [sum((dBb_t[a][t] * v.gamma[(a, l)][t, kk] for a, t in product(R4, R4)), ZERO) + A * dBb_t[l][kk] for kk in R4]
        for l in R4
    ]
    Pib_t = [
        [sum((v.gamma[(l, a)][kk, t] * dB_t[a][t] for a, t in product(R4, R4)), ZERO) + A * dB_t[l][kk] for kk in R4]
        for l in R4
    ]

    def Pi(l, kk):
        return Pi_t[l][kk]

    def Pib(l, kk):
        return Pib_t[l][kk]

    L = (
        (A + 1) * sum((dBb(a, mu) * dB(a, mu) for a, mu in product(R4, R4)), ZERO)
        - sum((dBb(n, mu) * dB(mu, n) for n, mu in product(R4, R4)), ZERO)
        - sum((dBb(mu, mu) for mu in R4), ZERO) * sum((dB(n, n) for n in R4), ZERO)
        + Bm2 * sum((eb[mu] * e[mu] for mu in R4), ZERO)
    )
    T = ExactMatrix.from_function(
        4,
        4,
        lambda mu, nu: -sum((Pi(mu, a) * dB(nu, a) + dBb(nu, a) * Pib(mu, a) for a in R4), ZERO) + (L if mu == nu else ZERO),
    )
    J = tuple(-I * sum((Pi(l, kk) * e[kk] - eb[kk] * Pib(l, kk) for kk in R4), ZERO) for l in R4)
    divB = sum((dB(n, n) for n in R4), ZERO)
    divBb = sum((dBb(n, n) for n in R4), ZERO)
    J_scalar = tuple(
        -I
        * (
            sum((eb[kk] * dB(kk, l) - dBb(kk, l) * e[kk] for kk in R4), ZERO)
            + eb[l] * divB
            - divBb * e[l]
        )
        for l in R4
    )
    J_terms = tuple(
        -I * ((A + 1) * sum((dBb(l, kk) * e[kk] - eb[kk] * dB(l, kk) for kk in R4), ZERO))
        + J_scalar[l]
        for l in R4
    )
    T_scalar = ExactMatrix.from_function(
        4,
        4,
        lambda mu, nu: sum((dBb(a, mu) * dB(nu, a) + dBb(nu, a) * dB(a, mu) for a in R4), ZERO)
        + divBb * dB(nu, mu)
        + dBb(nu, mu) * divB
        + (
            -sum((dBb(n, r) * dB(r, n) for n, r in product(R4, R4)), ZERO) - divBb * divB
            if mu == nu
            else ZERO
        ),
    )
    spin = {}
    for mu, al in ((a, b) for a in R4 for b in R4 if a < b):
        g5 = v.gamma5[(mu, al)]
        spin[(mu, al)] = tuple(
            -I
            * (
                sum((Pi(l, kk) * g5[kk, t] * e[t] for kk, t in product(R4, R4)), ZERO)
                + sum((eb[t] * g5[kk, t] * Pib(l, kk) for kk, t in product(R4, R4)), ZERO)
            )
            for l in R4
        )
    transverse = not sum((k[i] * e[i] for i in R4), ZERO)
    return Invariants(T, J, spin, J_scalar, T_scalar, J_terms, transverse)
