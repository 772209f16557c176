"""Dirac-algebra objects of the (1/2,0)+(0,1/2) representation.

Euclidean gamma matrices ({g_mu, g_nu} = 2 delta) in the chiral layout:
g_k = [[0, -i s_k], [i s_k, 0]], g_4 = [[0, 1], [1, 0]], g5 = g1 g2 g3 g4
= diag(1, 1, -1, -1). sigma_{mu nu} = (i/2)[g_mu, g_nu].

The reflection matrix is R = e^{i phi} blockdiag(Theta, -Theta). The full
property list R^T = -R, R^dagger = R = R^-1 holds only for e^{i phi} = +-i,
so the default phase is phi = pi/2 (``phase_phi = 1/2`` in units of pi).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .exact import (
    I,
    ONE,
    ExactMatrix,
    ExactPoly,
    ExactScalar,
    ShapeError,
    det_poly,
    rank,
    rational_root_masses,
)

PAIRS: tuple[tuple[int, int], ...] = tuple(combinations(range(4), 2))  # 0-based (mu<nu)


class RepresentationError(RuntimeError):
    pass


def quarter_turn(phase_phi) -> ExactScalar:
    """e^{i pi phi} for phi a multiple of 1/2."""
    phi = Fraction(phase_phi) % 2
    table = {Fraction(0): ONE, Fraction(1, 2): I, Fraction(1): -ONE, Fraction(3, 2): -I}
    if phi not in table:
        raise ValueError("only phases that are multiples of pi/2 are exact")
    return table[phi]


def _pauli():
    s1 = [[0, 1], [1, 0]]
    s2 = [[0, -I], [I, 0]]
    s3 = [[1, 0], [0, -1]]
    return s1, s2, s3


def _block(a, b, c, d) -> ExactMatrix:
    rows = []
    for top, bot in ((a, b), (c, d)):
        for i in range(2):
            rows.append([top[i][0], top[i][1], bot[i][0], bot[i][1]])
    return ExactMatrix(rows)


def _scaled(m, c):
    return [[c * ExactScalar.of(x) for x in r] for r in m]


@dataclass(frozen=True)
class DiracSet:
    gamma: tuple  # gamma_1..gamma_4 (index 3 is time)
    gamma5: ExactMatrix
    sigma: dict  # (mu, nu) 0-based, mu<nu -> sigma_{mu nu}
    R: ExactMatrix
    phase_phi: Fraction

    def sig(self, mu: int, nu: int) -> ExactMatrix:
        if mu == nu:
            return ExactMatrix.zeros(4, 4)
        if mu < nu:
            return self.sigma[(mu, nu)]
        return -self.sigma[(nu, mu)]

    @property
    def R_inv(self) -> ExactMatrix:
        # R^2 = e^{2 i phi}(-1), so R^-1 = -e^{-2 i phi} R
        ph = quarter_turn(self.phase_phi)
        return self.R.scale(-(ONE / (ph * ph)))

    def slash(self, p) -> ExactMatrix:
        """gamma_mu p_mu for Euclidean components p."""
        out = ExactMatrix.zeros(4, 4)
        for g, x in zip(self.gamma, p):
            if x:
                out = out + g.scale(x)
        return out

    def property_report(self) -> dict:
        R, Ri = self.R, self.R_inv
        eye = ExactMatrix.identity(4)
        return {
            "R^T=-R": R.T == -R,
            "R^dagger=R": R.H == R,
            "R=R^-1": R @ R == eye,
            "R^-1 g5 R=g5^T": Ri @ self.gamma5 @ R == self.gamma5.T,
            "R^-1 g R=-g^T": all(Ri @ g @ R == -g.T for g in self.gamma),
            "R^-1 sigma R=-sigma^T": all(Ri @ s @ R == -s.T for s in self.sigma.values()),
        }


def build_dirac_set(phase_phi=Fraction(1, 2)) -> DiracSet:
    s = _pauli()
    z = [[0, 0], [0, 0]]
    one = [[1, 0], [0, 1]]
    gamma = tuple(_block(z, _scaled(sk, -I), _scaled(sk, I), z) for sk in s) + (
        _block(z, one, one, z),
    )
    g5 = gamma[0] @ gamma[1] @ gamma[2] @ gamma[3]
    half_i = ExactScalar(0, Fraction(1, 2))
    sigma = {(a, b): gamma[a].commutator(gamma[b]).scale(half_i) for a, b in PAIRS}
    theta = [[0, -1], [1, 0]]
    ph = quarter_turn(phase_phi)
    R = _block(theta, z, z, _scaled(theta, -1)).scale(ph)
    return DiracSet(gamma, g5, sigma, R, Fraction(phase_phi))


def clifford_ok(d: DiracSet) -> bool:
    eye2 = ExactMatrix.identity(4).scale(2)
    zero = ExactMatrix.zeros(4, 4)
    for a in range(4):
        for b in range(a, 4):
            want = eye2 if a == b else zero
            if d.gamma[a].anticommutator(d.gamma[b]) != want:
                return False
    return True


def vec(m: ExactMatrix) -> list[ExactScalar]:
    return m.flat()


@dataclass(frozen=True)
class SymmetricBasis:
    symmetric: tuple
    antisymmetric: tuple
    labels: tuple
    antisymmetric_labels: tuple
    duality: tuple  # ((mu,nu), (kappa,tau), c): g5 sigma_{mu nu} = c sigma_{kappa tau}


def symmetric_matrices(d: DiracSet) -> tuple[list[ExactMatrix], list[str]]:
    mats = [g @ d.R for g in d.gamma]
    labels = [f"gamma{mu + 1}R" for mu in range(4)]
    for a, b in PAIRS:
        mats.append(d.sigma[(a, b)] @ d.R)
        labels.append(f"sigma{a + 1}{b + 1}R")
    return mats, labels


def antisymmetric_matrices(d: DiracSet) -> tuple[list[ExactMatrix], list[str]]:
    Ri = d.R_inv
    mats = [Ri, Ri @ d.gamma5] + [Ri @ d.gamma5 @ g for g in d.gamma]
    labels = ["R^-1", "R^-1g5"] + [f"R^-1g5gamma{k + 1}" for k in range(4)]
    return mats, labels


def duality_relations(d: DiracSet) -> list[tuple]:
    """Exhaustive search: g5 sigma_{mu nu} = c sigma_{kappa tau}."""
    out = []
    for pair in PAIRS:
        target = d.gamma5 @ d.sigma[pair]
        hit = None
        for other in PAIRS:
            s = d.sigma[other]
            # find c from the first nonzero entry, then verify
            c = None
            for i in range(4):
                for j in range(4):
                    if s[i, j]:
                        c = target[i, j] / s[i, j]
                        break
                if c is not None:
                    break
            if c is not None and c and s.scale(c) == target:
                hit = (pair, other, c)
                break
        if hit is None:
            raise RepresentationError(f"no duality partner for sigma{pair}")
        out.append(hit)
    return out


def classify_matrix_basis(d: DiracSet) -> SymmetricBasis:
    sym, slab = symmetric_matrices(d)
    anti, alab = antisymmetric_matrices(d)
    for m, lab in zip(sym, slab):
        if m.T != m:
            raise RepresentationError(f"{lab} is not symmetric")
    for m, lab in zip(anti, alab):
        if m.T != -m:
            raise RepresentationError(f"{lab} is not antisymmetric")
    if rank(ExactMatrix([vec(m) for m in sym])) != 10:
        raise RepresentationError("symmetric expansion matrices are linearly dependent")
    if rank(ExactMatrix([vec(m) for m in anti])) != 6:
        raise RepresentationError("antisymmetric matrices are linearly dependent")
    dual = duality_relations(d)
    return SymmetricBasis(tuple(sym), tuple(anti), tuple(slab), tuple(alab), tuple(dual))


# ---------------------------------------------------------------------------
# generalized Dirac operators


def dirac_operator(d: DiracSet, p, mass_terms=(ExactScalar(0), ExactScalar(0))) -> ExactMatrix:
    """i gamma.p + m1 + m2 g5 in momentum space (p Euclidean components).

    The Minkowski i gamma^mu d_mu maps to the Euclidean gamma_mu d_mu, and
    d_mu -> i p_mu, which gives i gamma.p.
    """
    m1, m2 = (ExactScalar.of(x) for x in mass_terms)
    eye = ExactMatrix.identity(4)
    return d.slash(p).scale(I) + eye.scale(m1) + d.gamma5.scale(m2)


@dataclass(frozen=True)
class GeneralizedDiracSpectrum:
    mass2: Fraction
    multiplicity: int
    tachyonic: bool
    determinant: ExactPoly  # in the variable E^2 at rest


def generalized_dirac_spectrum(m1, m2, d: DiracSet | None = None) -> GeneralizedDiracSpectrum:
    """Squared mass at which [i gamma.p + m1 + m2 g5] is singular, from its determinant."""
    d = d or build_dirac_set()
    m1, m2 = Fraction(m1), Fraction(m2)
    # rest frame p = (0,0,0,iE): entries are linear polynomials in E
    E = ExactPoly.x()
    g4 = d.gamma[3]
    rows = []
    for i in range(4):
        row = []
        for j in range(4):
            c = ExactPoly([(I * I * g4[i, j])]) * E  # i * gamma4 * (iE)
            const = (m1 if i == j else 0) + m2 * d.gamma5[i, j]
            row.append(c + ExactPoly([const]))
        rows.append(row)
    det_E = det_poly(rows)
    det_s = det_E.in_square()
    roots = rational_root_masses(det_s)
    if len(roots.roots) != 1:
        raise RepresentationError(f"unexpected spectrum {roots}")
    (mass2, mult), = roots.roots
    return GeneralizedDiracSpectrum(mass2, mult, mass2 < 0, det_s)


def barut_mass_ratio(alpha) -> Fraction:
    """m2/m1 = 1 + 3/(2 alpha) for the anomalous-moment fixed Barut equation."""
    alpha = Fraction(alpha)
    if alpha == 0:
        raise ZeroDivisionError("alpha must be nonzero")
    return 1 + Fraction(3) / (2 * alpha)


def expansion_matrix(mats) -> ExactMatrix:
    """16 x k matrix whose columns are vectorized 4x4 matrices."""
    cols = [vec(m) for m in mats]
    if any(len(c) != 16 for c in cols):
        raise ShapeError("expected 4x4 matrices")
    return ExactMatrix([[c[r] for c in cols] for r in range(16)])
