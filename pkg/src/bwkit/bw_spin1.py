"""Spin-1 Bargmann-Wigner systems in momentum space.

The symmetric multispinor Psi_{ab} is expanded over symmetric matrices
(gamma_mu R, sigma_{mu nu} R), and the two Dirac conditions

    D Psi = 0,    Psi D^T = 0,    D = i gamma.p + s m

become a 32-row linear system on the expansion coefficients. The default
sign is s = -1.

Convention map used for every transcribed relation: d_mu -> i p_mu, and the
vector potential of the derivative-form relations equals -i times the
coefficient A_mu of gamma_mu R. With that map the reduced system carries
d_a F_{a mu} = (m/2) A_mu and 2 m F_{mu nu} = d_mu A_nu - d_nu A_mu exactly.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product

import numpy as np

from .exact import (
    I,
    ZERO,
    ConstraintSystem,
    DegenerateInputError,
    ExactMatrix,
    ExactPoly,
    ExactScalar,
    det_poly,
    rank,
    rank_nullspace,
    rational_root_masses,
)
from .momentum import FourMomentum
from .spinor import PAIRS, DiracSet, build_dirac_set, dirac_operator, vec

_D = build_dirac_set()
F_LABELS = tuple(f"F{a + 1}{b + 1}" for a, b in PAIRS)
A_LABELS = tuple(f"A{m + 1}" for m in range(4))


def pair_index(a: int, b: int) -> tuple[int | None, int]:
    """Position of F_{ab} among the six independent components, with its sign."""
    if a == b:
        return None, 0
    if a < b:
        return PAIRS.index((a, b)), 1
    return PAIRS.index((b, a)), -1


def levi_civita(idx) -> int:
    idx = tuple(idx)
    if len(set(idx)) < len(idx):
        return 0
    sign, seen = 1, list(idx)
    for i in range(len(seen)):
        while seen[i] != i:
            j = seen[i]
            seen[i], seen[j] = seen[j], seen[i]
            sign = -sign
    return sign


def _S(x) -> ExactScalar:
    return ExactScalar.of(x)


@dataclass(frozen=True)
class DerivedRelation:
    label: str
    form: tuple
    in_row_space: bool


@dataclass(frozen=True)
class MomentumSystem:
    momentum: FourMomentum
    system: ConstraintSystem
    derived_relations: tuple = ()

    @property
    def nullity(self) -> int:
        return self.system.nullity

    def all_relations_hold(self) -> bool:
        return all(r.in_row_space for r in self.derived_relations)


def two_sided_system(D1: ExactMatrix, D2: ExactMatrix, mats) -> ExactMatrix:
    """Rows of D1 Psi = 0 and Psi D2^T = 0 for Psi = sum_k x_k mats[k]."""
    cols = [vec(D1 @ M) + vec(M @ D2.T) for M in mats]
    return ExactMatrix([[c[r] for c in cols] for r in range(32)])


def spin1_matrices(d: DiracSet = _D) -> list[ExactMatrix]:
    """gamma_mu R (4) and 2 sigma_{mu nu} R for mu < nu (6)."""
    return [g @ d.R for g in d.gamma] + [d.sigma[pr].scale(2) @ d.R for pr in PAIRS]


def _check_mass(m) -> Fraction:
    m = Fraction(m)
    if m <= 0:
        raise ValueError("mass must be positive")
    return m


def proca_forms(p: FourMomentum, m, sign: int = -1) -> list[tuple[str, list]]:
    """The two Proca relations as linear forms on (A_1..A_4, F_12..F_34).

    Both are written in the derivative form mapped to momentum space
    (d -> i p, A_deriv = -i A). For sign = +1 the mass flips sign.
    """
    pe = p.euclid()
    mm = _S(-sign * Fraction(m))  # the relations are written for the default -m
    out = []
    for mu in range(4):
        row = [ZERO] * 10
        for a in range(4):
            k, s = pair_index(a, mu)
            if k is not None:
                row[4 + k] = row[4 + k] + I * pe[a] * s
        row[mu] = row[mu] - (mm / 2) * (-I)  # (m/2) A_deriv
        out.append((f"dF=(m/2)A [{mu + 1}]", row))
    for mu, nu in PAIRS:
        row = [ZERO] * 10
        row[4 + PAIRS.index((mu, nu))] = 2 * mm
        row[nu] = row[nu] - I * pe[mu] * (-I)
        row[mu] = row[mu] + I * pe[nu] * (-I)
        out.append((f"2mF=dA-dA [{mu + 1}{nu + 1}]", row))
    return out


def rescale_potential(v, m) -> list:
    """Map a reduced-system solution (A, F) to the textbook variables (A', F)."""
    m = Fraction(m)
    return [(-I * v[i]) / (2 * m) for i in range(4)] + list(v[4:])


def bw_system_spin1(p: FourMomentum, m, sign: int = -1, d: DiracSet = _D) -> MomentumSystem:
    m = _check_mass(m)
    D = dirac_operator(d, p.euclid(), (sign * m, 0))
    M = two_sided_system(D, D, spin1_matrices(d))
    cs = rank_nullspace(M, A_LABELS + F_LABELS)
    rels = tuple(DerivedRelation(lab, tuple(f), cs.contains_row(f)) for lab, f in proca_forms(p, m, sign))
    return MomentumSystem(p, cs, rels)


@dataclass(frozen=True)
class ProcaReport:
    momentum: FourMomentum
    coefficients: tuple
    nullity: int
    relations: tuple  # DerivedRelation
    redundancy: dict  # proportionality constants of the expansion kernel

    @property
    def ok(self) -> bool:
        return all(r.in_row_space for r in self.relations)


def _dual_table(d: DiracSet = _D) -> dict:
    """(mu, nu) -> ((kappa, tau), c) with gamma5 sigma_{mu nu} = c sigma_{kappa tau}."""
    from .spinor import duality_relations

    return {a: (b, c) for a, b, c in duality_relations(d)}


def coefficient_expansion_system(p: FourMomentum, m, coeffs, sign: int = -1, d: DiracSet = _D):
    """System for Psi = gamma R (c_a m A + c_f Fv) + c_A m gamma5 sigma R At + c_F sigma R F.

    Unknowns (20): A_mu, Fv_mu, At_{mu<nu}, F_{mu<nu}; the sums over (mu, nu)
    run over all ordered pairs, hence the factors 2.
    """
    m = _check_mass(m)
    ca, cf, cA, cF = (Fraction(c) for c in coeffs)
    mats = [(g @ d.R).scale(_S(ca * m)) for g in d.gamma]
    mats += [(g @ d.R).scale(_S(cf)) for g in d.gamma]
    mats += [(d.gamma5 @ d.sigma[pr] @ d.R).scale(_S(2 * cA * m)) for pr in PAIRS]
    mats += [(d.sigma[pr] @ d.R).scale(_S(2 * cF)) for pr in PAIRS]
    D = dirac_operator(d, p.euclid(), (sign * m, 0))
    labels = A_LABELS + tuple(f"Fv{k + 1}" for k in range(4)) + tuple("At" + s[1:] for s in F_LABELS) + F_LABELS
    return two_sided_system(D, D, mats), labels, mats


def generalized_proca_forms(p: FourMomentum, m, coeffs, sign: int = -1) -> list[tuple[str, list]]:
    """Sum and difference relations for the coefficient expansion (20 unknowns).

    With V = c_a m A + c_f Fv and T = c_F F + c_A m (dual At):
      sum:        2 m' T_{mu nu} = p_mu V_nu - p_nu V_mu,   p_a T_{a mu} = -(m'/2) V_mu
      difference: p.V = 0,   eps_{l a mu nu} p_a T_{mu nu} = 0
    where m' = -s m. These are the momentum-space forms of the new Proca pair
    and of the two subtraction constraints.
    """
    m = Fraction(m)
    mm = -sign * m
    ca, cf, cA, cF = (Fraction(c) for c in coeffs)
    pe = p.euclid()
    dual = _dual_table()

    def V(mu):
        row = [ZERO] * 20
        row[mu] = _S(ca * m)
        row[4 + mu] = _S(cf)
        return row

    def T(a, b):
        row = [ZERO] * 20
        k, s = pair_index(a, b)
        if k is None:
            return row
        row[14 + k] = _S(cF * s)
        # gamma5 sigma_{mu nu} At_{mu nu} contributes c * At_{mu nu} to T_{kappa tau}
        for src, (tgt, c) in dual.items():
            kk, ss = pair_index(*tgt)
            if kk == k:
                row[8 + PAIRS.index(src)] = row[8 + PAIRS.index(src)] + c * cA * m * s * ss
        return row

    def lin(*terms):
        out = [ZERO] * 20
        for c, r in terms:
            out = [x + _S(c) * y for x, y in zip(out, r)] if not isinstance(c, ExactScalar) else [x + c * y for x, y in zip(out, r)]
        return out

    forms = []
    for mu, nu in PAIRS:
        forms.append((f"pr1[{mu + 1}{nu + 1}]", lin((2 * mm, T(mu, nu)), (-pe[mu], V(nu)), (pe[nu], V(mu)))))
    for mu in range(4):
        terms = [(pe[a], T(a, mu)) for a in range(4)] + [(Fraction(mm, 2), V(mu))]
        forms.append((f"pr2[{mu + 1}]", lin(*terms)))
    forms.append(("p.V=0", lin(*[(pe[a], V(a)) for a in range(4)])))
    for lam in range(4):
        terms = []
        for a, mu, nu in product(range(4), repeat=3):
            e = levi_civita((lam, a, mu, nu))
            if e:
                terms.append((pe[a] * e, T(mu, nu)))
        forms.append((f"eps p T=0[{lam + 1}]", lin(*terms)))
    return forms


def proca_reduction_check(p: FourMomentum, m, coeffs=(1, 0, 0, Fraction(1, 2)), sign: int = -1) -> ProcaReport:
    """Row-space membership of the Proca pair and the subtraction constraints."""
    M, labels, mats = coefficient_expansion_system(p, m, coeffs, sign)
    cs = rank_nullspace(M, labels)
    rels = [DerivedRelation(lab, tuple(f), cs.contains_row(f)) for lab, f in generalized_proca_forms(p, m, coeffs, sign)]
    if tuple(Fraction(c) for c in coeffs) == (1, 0, 0, Fraction(1, 2)):
        std = bw_system_spin1(p, m, sign)
        rels += [DerivedRelation("textbook:" + r.label, r.form, r.in_row_space) for r in std.derived_relations]
    return ProcaReport(p, tuple(Fraction(c) for c in coeffs), cs.nullity, tuple(rels), expansion_redundancy(m, coeffs, mats))


def expansion_redundancy(m, coeffs, mats=None) -> dict:
    """Kernel of the coefficient expansion: which field combinations never enter Psi.

    Returns the ratios Fv_mu/A_mu and F/At (on dual pairs) shared by every
    kernel vector; they express Fv ~ m A and F ~ m (dual At).
    """
    m = Fraction(m)
    ca, cf, cA, cF = (Fraction(c) for c in coeffs)
    if mats is None:
        return {}
    E = ExactMatrix([[vec(M)[r] for M in mats] for r in range(16)])
    ker = rank_nullspace(E)
    out = {"expansion_rank": 20 - ker.nullity, "kernel_dim": ker.nullity}
    if cf:
        out["Fv/A"] = -ca * m / cf
    if cF:
        dual = _dual_table()
        out["F/dual(At)"] = {
            "".join(str(i + 1) for i in tgt): (-cA * m * c / cF) for src, (tgt, c) in dual.items()
        }
    dual = _dual_table()

    def killed(v) -> bool:
        for k in range(4):
            if ca * m * v[k, 0] + cf * v[4 + k, 0]:
                return False
        for k, pr in enumerate(PAIRS):
            t = cF * v[14 + k, 0]
            for src, (tgt, c) in dual.items():
                kk, ss = pair_index(*tgt)
                if kk == k:
                    t = t + c * cA * m * ss * v[8 + PAIRS.index(src), 0]
            if t:
                return False
        return True

    out["kernel_vectors_consistent"] = all(killed(v) for v in ker.nullspace)
    return out


# ---------------------------------------------------------------------------
# generalized (a, b, c, d) system
#
# The second-order terms are read as in the displayed Proca-like set,
# alpha = a + b d^2 and gamma = c + d d^2, so in momentum space
# alpha(p) = a - b p.p and gamma(p) = c - d p.p.

FULL_LABELS = A_LABELS + F_LABELS + ("phi", "phit") + tuple(f"At{k + 1}" for k in range(4))
PROCA_SECTOR = tuple(range(10))
DK_SECTOR = tuple(range(10, 16))


def full_matrices(d: DiracSet = _D) -> list[ExactMatrix]:
    """gamma R, 2 sigma R, R, gamma5 R, gamma5 gamma R: a basis of all 4x4 matrices."""
    return spin1_matrices(d) + [d.R, d.gamma5 @ d.R] + [d.gamma5 @ g @ d.R for g in d.gamma]


def abcd_scalars(p: FourMomentum, a, b, c, dd) -> tuple[ExactScalar, ExactScalar]:
    p2 = p.square()
    return _S(Fraction(a) - Fraction(b) * p2), _S(Fraction(c) - Fraction(dd) * p2)


@dataclass(frozen=True)
class GeneralizedSystem:
    momentum: FourMomentum
    coefficients: tuple
    system: ConstraintSystem
    coupling: ExactMatrix  # rows of the symmetric-sector equations restricted to DK unknowns, and vice versa
    coupling_zero: bool


def _project(M: ExactMatrix, basis_inv) -> list:
    return basis_inv(vec(M))


def _basis_solver(mats):
    """Coordinates of an arbitrary 4x4 matrix in the 16-element basis ``mats``."""
    E = ExactMatrix([[vec(M)[r] for M in mats] for r in range(16)])

    def solve(v):
        aug = ExactMatrix([list(E.row(r)) + [-v[r]] for r in range(16)])
        ns = rank_nullspace(aug).nullspace
        if len(ns) != 1 or not ns[0][16, 0]:
            raise DegenerateInputError("basis is not complete")
        t = ns[0][16, 0]
        return [ns[0][k, 0] / t for k in range(16)]

    return solve


def generalized_abcd_system(p: FourMomentum, a, b, c, dd) -> GeneralizedSystem:
    """Both generalized Dirac conditions on a general Psi, projected on the basis.

    Rows are labelled by (equation, basis element); the coupling block is the
    part linking the (A, F) sector with the (phi, phit, At) sector.
    """
    d = _D
    alpha, gamma = abcd_scalars(p, a, b, c, dd)
    pe = p.euclid()
    D1 = d.slash(pe).scale(I) + ExactMatrix.identity(4).scale(alpha) + d.gamma5.scale(gamma)
    D2 = d.slash(pe).scale(I) + ExactMatrix.identity(4).scale(alpha) - d.gamma5.scale(gamma)
    mats = full_matrices(d)
    solve = _basis_solver(mats)
    # sum and difference of the two conditions, expanded in the basis
    rows = []
    for M in mats:
        left, right = D1 @ M, M @ D2.T
        rows.append((solve(vec(left + right)), solve(vec(left - right))))
    nr = 16
    sum_rows = [[rows[k][0][r] for k in range(16)] for r in range(nr)]
    dif_rows = [[rows[k][1][r] for k in range(16)] for r in range(nr)]
    system = ExactMatrix(sum_rows + dif_rows)
    cs = rank_nullspace(system, FULL_LABELS)
    # the sum equations along symmetric elements and the difference equations
    # along antisymmetric ones are the Proca-like set; the remaining two blocks
    # are the spin-0 set. Coupling: Proca rows on DK columns and DK rows on Proca columns.
    proca_rows = [sum_rows[r] for r in PROCA_SECTOR] + [dif_rows[r] for r in DK_SECTOR]
    dk_rows = [dif_rows[r] for r in PROCA_SECTOR] + [sum_rows[r] for r in DK_SECTOR]
    coup = [[row[k] for k in DK_SECTOR] for row in proca_rows] + [[row[k] for k in PROCA_SECTOR] + [ZERO] * 0 for row in dk_rows]
    width = max(len(r) for r in coup)
    coup = ExactMatrix([list(r) + [ZERO] * (width - len(r)) for r in coup])
    return GeneralizedSystem(p, tuple(Fraction(x) for x in (a, b, c, dd)), cs, coup, coup.is_zero())


def restricted_standard_equal(p: FourMomentum, m=1) -> bool:
    """(a,b,c,d) = (m,0,0,0) restricted to (A, F) has the row space of bw_system_spin1 with +m."""
    d = _D
    alpha = _S(Fraction(m))
    pe = p.euclid()
    D = d.slash(pe).scale(I) + ExactMatrix.identity(4).scale(alpha)
    M = two_sided_system(D, D, spin1_matrices(d))
    return rank_nullspace(M).same_row_space(bw_system_spin1(p, m, sign=+1).system)


def displayed_abcd_forms(p: FourMomentum, a, b, c, dd, phi_reading: str = "separate"):
    """The displayed Proca-like set, its constraints and the spin-0 set as linear forms.

    Unknowns: FULL_LABELS. ``phi_reading`` picks how the constraint
    "eps d F = 0, (c + d d^2) phi = 0" is grouped: "separate" keeps the two
    statements apart, "joint" reads them as one combined row.
    """
    alpha, gamma = abcd_scalars(p, a, b, c, dd)
    pe = p.euclid()
    n = 16
    iA = lambda k: k
    iF = lambda x, y: pair_index(x, y)
    PHI, PHIT = 10, 11
    iAt = lambda k: 12 + k
    forms = []

    def new():
        return [ZERO] * n

    def addF(row, x, y, c_):
        k, s = iF(x, y)
        if k is not None:
            row[4 + k] = row[4 + k] + c_ * s

    for nu, lam in PAIRS:
        r = new()
        r[iA(lam)] = r[iA(lam)] + I * pe[nu]
        r[iA(nu)] = r[iA(nu)] - I * pe[lam]
        addF(r, nu, lam, -2 * alpha)
        forms.append((f"curlA[{nu + 1}{lam + 1}]", r))
    for lam in range(4):
        r = new()
        for mu in range(4):
            addF(r, mu, lam, I * pe[mu])
        r[iA(lam)] = r[iA(lam)] - alpha / 2
        r[iAt(lam)] = r[iAt(lam)] - gamma / 2
        forms.append((f"divF[{lam + 1}]", r))
    r = new()
    for lam in range(4):
        r[iA(lam)] = -pe[lam]
    r[PHIT] = gamma
    forms.append(("divA", r))
    eps_rows = []
    for mu in range(4):
        r = new()
        for lam, ka, ta in product(range(4), repeat=3):
            e = levi_civita((mu, lam, ka, ta))
            if e:
                addF(r, lam, ka, I * pe[ta] * e)
        eps_rows.append(r)
    if phi_reading == "joint":
        for k, r in enumerate(eps_rows):
            r = list(r)
            r[PHI] = r[PHI] + gamma
            forms.append((f"epsF+phi[{k + 1}]", r))
    else:
        for k, r in enumerate(eps_rows):
            forms.append((f"epsF[{k + 1}]", r))
        r = new()
        r[PHI] = gamma
        forms.append(("gamma phi", r))
    r = new()
    r[PHI] = alpha
    forms.append(("alpha phi", r))
    r = new()
    for mu in range(4):
        r[iAt(mu)] = I * I * pe[mu]
    r[PHIT] = -alpha
    forms.append(("divAt", r))
    for nu in range(4):
        r = new()
        r[iAt(nu)] = alpha
        r[iA(nu)] = gamma
        r[PHIT] = I * I * pe[nu]
        forms.append((f"DK[{nu + 1}]", r))
    for mu in range(4):
        r = new()
        r[PHI] = I * pe[mu]
        forms.append((f"dphi[{mu + 1}]", r))
    for nu, lam in PAIRS:
        r = new()
        r[iAt(lam)] = r[iAt(lam)] + I * pe[nu]
        r[iAt(nu)] = r[iAt(nu)] - I * pe[lam]
        addF(r, nu, lam, 2 * gamma)
        forms.append((f"curlAt[{nu + 1}{lam + 1}]", r))
    return forms


@dataclass(frozen=True)
class EliminationReport:
    momentum: FourMomentum
    coefficients: tuple
    quartic: ExactScalar  # gamma^2 - alpha^2 at this momentum
    ast_rows_in_span: bool
    potential_free: bool
    readings: dict  # phi_reading -> rank of the displayed system


def ast_quartic(p2, a, b, c, dd) -> Fraction:
    """(c^2 - a^2) - 2(ab - cd) s + (d^2 - b^2) s^2 with s the value of d^2 = -p.p."""
    a, b, c, dd = (Fraction(x) for x in (a, b, c, dd))
    s = -Fraction(p2)
    return (c * c - a * a) - 2 * (a * b - c * dd) * s + (dd * dd - b * b) * s * s


def ast_elimination_check(p: FourMomentum, a, b, c, dd) -> EliminationReport:
    """Eliminating the potentials gives [d d F - d d F] + quartic * F = 0.

    Certificate: for each (mu, l) the AST row equals
    i p_mu divF[l] - i p_l divF[mu] + (alpha/2) curlA[mu l] + (gamma/2) curlAt[mu l],
    it has no potential components, and it lies in the row space of the
    displayed equations.
    """
    pe = p.euclid()
    alpha, gamma = abcd_scalars(p, a, b, c, dd)
    q = _S(ast_quartic(p.square(), a, b, c, dd))
    forms = dict(displayed_abcd_forms(p, a, b, c, dd))
    span = rank_nullspace(ExactMatrix(list(forms.values())))
    ok, free = True, True
    for mu, lam in PAIRS:
        r = [ZERO] * 16
        for nu in range(4):
            k, s = pair_index(nu, lam)
            if k is not None:
                r[4 + k] = r[4 + k] - pe[mu] * pe[nu] * s
            k, s = pair_index(nu, mu)
            if k is not None:
                r[4 + k] = r[4 + k] + pe[lam] * pe[nu] * s
        k, s = pair_index(mu, lam)
        r[4 + k] = r[4 + k] + q * s
        tag = f"{mu + 1}{lam + 1}"
        comb = [
            I * pe[mu] * x - I * pe[lam] * y + (alpha / 2) * u + (gamma / 2) * v
            for x, y, u, v in zip(
                forms[f"divF[{lam + 1}]"], forms[f"divF[{mu + 1}]"], forms[f"curlA[{tag}]"], forms[f"curlAt[{tag}]"]
            )
        ]
        ok &= comb == r and span.contains_row(r)
        free &= not any(r[i] for i in range(4)) and not any(r[i] for i in range(10, 16))
    readings = {
        rd: rank(ExactMatrix([f for _, f in displayed_abcd_forms(p, a, b, c, dd, rd)])) for rd in ("separate", "joint")
    }
    return EliminationReport(p, tuple(Fraction(x) for x in (a, b, c, dd)), q, ok, free, readings)


# ---------------------------------------------------------------------------
# WTH mapping and AST dispersion


class MappingUndefinedError(ValueError):
    pass


@dataclass(frozen=True)
class WTHBranch:
    parity: int  # -1 for the first AST equation, +1 for the second
    A: Fraction
    Bm2: Fraction  # B m^2


def wth_mapping(a, b, c, dd) -> tuple[WTHBranch, WTHBranch]:
    """(A, B m^2) for both parity branches from the (a, b, c, d) quartic.

    first:  c^2 - a^2 = -B m^2/2,  -2(ab - cd) = (A - 1)/2
    second: c^2 - a^2 = +B m^2/2,  +2(ab - cd) = (A + 1)/2
    """
    a, b, c, dd = (Fraction(x) for x in (a, b, c, dd))
    if b != dd and b != -dd:
        raise MappingUndefinedError("the mapping needs b = +-d")
    k = a * b - c * dd
    first = WTHBranch(-1, 1 - 4 * k, -2 * (c * c - a * a))
    second = WTHBranch(+1, 4 * k - 1, 2 * (c * c - a * a))
    return first, second


def abcd_ast_operator(p, a, b, c, dd) -> ExactMatrix:
    """[d d F - d d F] + quartic(d^2) F in momentum space (6x6)."""
    pe = p.euclid() if isinstance(p, FourMomentum) else tuple(_S(x) for x in p)
    p2 = sum((x * x for x in pe), ZERO)
    if not p2.is_real:
        raise ValueError("p.p must be real")
    base = ast_operator(pe, 1, 0, 1)  # A = 1, B = 0 leaves exactly the pp part
    q = _S(ast_quartic(p2.re, a, b, c, dd))
    return base + ExactMatrix.identity(6).scale(q)


@dataclass(frozen=True)
class RoundTrip:
    coefficients: tuple
    operators_equal: bool  # both mapped WTH operators equal the (a,b,c,d) AST operator
    masses_equal: bool  # sector masses from ast_dispersion match the quartic prediction
    predicted: dict


def wth_round_trip(a, b, c, dd, samples=()) -> RoundTrip:
    """wth_mapping followed by the AST operators and their rest-frame spectrum (m = 1)."""
    first, second = wth_mapping(a, b, c, dd)
    a, b, c, dd = (Fraction(x) for x in (a, b, c, dd))
    ops = True
    for p in samples:
        target = abcd_ast_operator(p, a, b, c, dd)
        ops &= ast_operator(p, first.A, first.Bm2, 1) == target
        ops &= ast_operator(p, second.A, second.Bm2, 2) == target
    k = a * b - c * dd
    # at rest: magnetic rows give quartic(x) = 0, electric rows x + quartic(x) = 0
    c0 = c * c - a * a
    pred = {
        "magnetic": (c0 / (2 * k)) if k else None,
        "electric": (-c0 / (1 - 2 * k)) if 1 - 2 * k else None,
    }
    got = {}
    for br in ast_dispersion(first.A, first.Bm2):
        if br.equation == 1:
            got[br.sector] = br.mass2_ratio
    got2 = {}
    for br in ast_dispersion(second.A, second.Bm2):
        if br.equation == 2:
            got2[br.sector] = br.mass2_ratio
    return RoundTrip((a, b, c, dd), ops, got == pred == got2, pred)


def ast_operator(p, A, Bm2, which: int = 1) -> ExactMatrix:
    """6x6 momentum-space operator of the first (which=1) or second AST equation.

    d d -> -p p and d^2 -> -p.p. Rows and columns are the pairs mu < nu.
    """
    pe = p.euclid() if isinstance(p, FourMomentum) else tuple(_S(x) for x in p)
    A, Bm2 = Fraction(A), Fraction(Bm2)
    p2 = sum((x * x for x in pe), ZERO)
    if which == 1:
        diag = -_S(Fraction(A - 1, 2)) * p2 - _S(Bm2 / 2)
    else:
        diag = _S(Fraction(A + 1, 2)) * p2 + _S(Bm2 / 2)
    rows = []
    for al, be in PAIRS:
        row = [ZERO] * 6
        for mu in range(4):
            k, s = pair_index(mu, be)
            if k is not None:
                row[k] = row[k] - pe[al] * pe[mu] * s
            k, s = pair_index(mu, al)
            if k is not None:
                row[k] = row[k] + pe[be] * pe[mu] * s
        k, _ = pair_index(al, be)
        row[k] = row[k] + diag
        rows.append(row)
    return ExactMatrix(rows)


def proca_ast_operator(p, m2) -> ExactMatrix:
    """d_a d_mu F_{mu b} - d_b d_mu F_{mu a} - m^2 F_{ab} in momentum space."""
    return ast_operator(p, 1, 2 * Fraction(m2), 1)


@dataclass(frozen=True)
class ASTBranch:
    equation: int
    sector: str  # "electric" (F_{k4}) or "magnetic" (F_{jk})
    mass2_ratio: Fraction | None
    multiplicity: int
    status: str


def ast_dispersion(A, B) -> tuple[ASTBranch, ...]:
    """Mass^2/m^2 of both AST equations, per sector, from determinant roots at rest."""
    A, B = Fraction(A), Fraction(B)
    out = []
    for which in (1, 2):
        rows = [[_rest_entry(A, B, which, i, j) for j in range(6)] for i in range(6)]
        for sector, idx in (("electric", [2, 4, 5]), ("magnetic", [0, 1, 3])):
            sub = [[rows[i][j] for j in idx] for i in idx]
            sdet = det_poly(sub)
            if sdet.is_zero():
                out.append(ASTBranch(which, sector, None, 0, "degenerate"))
                continue
            roots = rational_root_masses(sdet)
            if not roots.roots:
                out.append(ASTBranch(which, sector, None, 0, "degenerate"))
                continue
            for r, mult in roots.roots:
                st = "massless" if r == 0 else ("causal" if r > 0 else "tachyonic")
                out.append(ASTBranch(which, sector, r, mult, st))
    return tuple(out)


def _rest_entry(A, B, which, i, j) -> ExactPoly:
    """Entry of the rest-frame AST operator / m^2 as a polynomial in x = E^2/m^2."""
    # p = (0,0,0,iE): p4 p4 = -x. Evaluate ast_operator symbolically in x.
    x = ExactPoly.x()
    al, be = PAIRS[i]
    p44 = -x
    acc = ExactPoly()
    for mu in range(4):
        k, s = pair_index(mu, be)
        if k == j and al == 3 and mu == 3:
            acc = acc - p44 * ExactPoly([s])
        k, s = pair_index(mu, al)
        if k == j and be == 3 and mu == 3:
            acc = acc + p44 * ExactPoly([s])
    if i == j:
        if which == 1:
            acc = acc - ExactPoly([Fraction(A - 1, 2)]) * p44 - ExactPoly([B / 2])
        else:
            acc = acc + ExactPoly([Fraction(A + 1, 2)]) * p44 + ExactPoly([B / 2])
    return acc


# ---------------------------------------------------------------------------
# sign operators


@dataclass(frozen=True)
class SignCombination:
    eps: tuple
    A1: Fraction
    A2: Fraction
    B1: Fraction
    B2: Fraction


@dataclass(frozen=True)
class SignEnumeration:
    combinations: tuple  # SignCombination, 16 entries
    groups: tuple  # tuples of eps sharing one Proca-like system
    distinct: int
    duplicates: int
    flip_isomorphic: bool  # eps -> -eps equals the F -> -F relabeling
    row_space_classes: int  # coarser grouping: systems with equal solution sets


def sign_coefficients(eps) -> SignCombination:
    e1, e2, e3, e4 = (Fraction(e) for e in eps)
    return SignCombination(tuple(int(e) for e in eps), (e1 + e3) / 2, (e2 + e4) / 2, (e1 - e3) / 2, (e2 - e4) / 2)


def sign_proca_system(p: FourMomentum, m1, m2, sc: SignCombination, flip_F: bool = False) -> ExactMatrix:
    """Displayed sign-operator Proca-like set on (A, F, At).

    i(p_mu A_l - p_l A_mu) + 2 m1 A1 F_{mu l} + i m2 A2 eps_{ab mu l} F_{ab} = 0
    i p_l F_{mu l} - (m1/2) A1 A_mu - (m2/2) B2 At_mu = 0
    """
    pe = p.euclid()
    m1, m2 = Fraction(m1), Fraction(m2)
    fs = -1 if flip_F else 1
    rows = []
    for mu, lam in PAIRS:
        r = [ZERO] * 14
        r[lam] = r[lam] + I * pe[mu]
        r[mu] = r[mu] - I * pe[lam]
        k, s = pair_index(mu, lam)
        r[4 + k] = r[4 + k] + _S(2 * m1 * sc.A1 * s * fs)
        for al, be in product(range(4), repeat=2):
            e = levi_civita((al, be, mu, lam))
            if e:
                k, s = pair_index(al, be)
                r[4 + k] = r[4 + k] + I * (m2 * sc.A2 * e * s * fs)
        rows.append(r)
    for mu in range(4):
        r = [ZERO] * 14
        for lam in range(4):
            k, s = pair_index(mu, lam)
            if k is not None:
                r[4 + k] = r[4 + k] + I * pe[lam] * (s * fs)
        r[mu] = r[mu] - _S(m1 * sc.A1 / 2)
        r[10 + mu] = r[10 + mu] - _S(m2 * sc.B2 / 2)
        rows.append(r)
    return ExactMatrix(rows)


def sign_operator_enumeration(p: FourMomentum | None = None, m1=Fraction(3), m2=Fraction(5)) -> SignEnumeration:
    """Group the 16 sign choices by the Proca-like system they produce."""
    p = p or FourMomentum.off_shell(Fraction(1, 2), Fraction(-2, 3), Fraction(3, 4), Fraction(7, 5))
    combos = [sign_coefficients(e) for e in product((1, -1), repeat=4)]
    mats = [sign_proca_system(p, m1, m2, sc) for sc in combos]
    groups = _group(range(len(combos)), lambda i, j: mats[i] == mats[j])
    systems = [rank_nullspace(M) for M in mats]
    classes = _group(range(len(combos)), lambda i, j: systems[i].same_row_space(systems[j]))
    flip_ok = True
    for sc in combos:
        neg = sign_coefficients(tuple(-e for e in sc.eps))
        a = rank_nullspace(sign_proca_system(p, m1, m2, neg))
        b = rank_nullspace(sign_proca_system(p, m1, m2, sc, flip_F=True))
        flip_ok &= a.same_row_space(b)
    return SignEnumeration(
        tuple(combos),
        tuple(tuple(combos[i].eps for i in g) for g in groups),
        len(groups),
        len(combos) - len(groups),
        flip_ok,
        len(classes),
    )


def _group(items, same) -> list[list[int]]:
    groups: list[list[int]] = []
    for i in items:
        for g in groups:
            if same(g[0], i):
                g.append(i)
                break
        else:
            groups.append([i])
    return groups


# ---------------------------------------------------------------------------
# Maxwell equations with a scalar gradient


@dataclass(frozen=True)
class ChiResidual:
    faraday: tuple  # i k x E - i w B - k chi
    ampere: tuple  # i k x B + i w E - i k chi
    gauss_e: ExactScalar  # i k.E - i w chi
    gauss_b: ExactScalar  # i k.B + w chi

    def is_zero(self) -> bool:
        return not any(self.faraday) and not any(self.ampere) and not self.gauss_e and not self.gauss_b

    def norms(self) -> tuple[float, float, float, float]:
        n = lambda v: float(np.sqrt(sum(abs(complex(x)) ** 2 for x in v)))
        return (n(self.faraday), n(self.ampere), abs(complex(self.gauss_e)), abs(complex(self.gauss_b)))


def _cross(a, b):
    return (a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0])


def chi_maxwell_residual(E0, B0, chi0, k, omega) -> ChiResidual:
    """Complex amplitudes of the four residuals for fields Re(X0 e^{i(k.x - w t)}), c = 1.

    curl E = -dB/dt + grad Im chi,  curl B = dE/dt + grad Re chi,
    div E = -d(Re chi)/dt,  div B = d(Im chi)/dt.
    """
    E0 = [_S(x) for x in E0]
    B0 = [_S(x) for x in B0]
    chi0 = _S(chi0)
    kk = [_S(x) for x in k]
    w = _S(omega)
    kxE, kxB = _cross(kk, E0), _cross(kk, B0)
    far = tuple(I * a - I * w * b - c * chi0 for a, b, c in zip(kxE, B0, kk))
    amp = tuple(I * a + I * w * b - I * c * chi0 for a, b, c in zip(kxB, E0, kk))
    ke = sum((a * b for a, b in zip(kk, E0)), ZERO)
    kb = sum((a * b for a, b in zip(kk, B0)), ZERO)
    return ChiResidual(far, amp, I * ke - I * w * chi0, I * kb + w * chi0)


def chi_maxwell_grid_residual(E0, B0, chi0, k, omega, n: int = 8, t: float = 0.0) -> dict:
    """Residuals of the real fields on an n^3 periodic grid of side 2 pi.

    Spatial derivatives are spectral (FFT), time derivatives analytic. Returns
    the largest deviation from the amplitude prediction Re(R e^{i(k.x - w t)}).
    """
    amp = chi_maxwell_residual(E0, B0, chi0, k, omega)
    k = np.array([float(x) for x in k])
    if not np.allclose(k, np.round(k)):
        raise ValueError("grid oracle needs integer wave numbers")
    w = float(omega)
    E0 = np.array([complex(x) for x in E0])
    B0 = np.array([complex(x) for x in B0])
    chi0 = complex(chi0)
    xs = np.arange(n) * (2 * np.pi / n)
    X = np.stack(np.meshgrid(xs, xs, xs, indexing="ij"))
    phase = np.exp(1j * (np.tensordot(k, X, axes=1) - w * t))
    E = np.real(E0[:, None, None, None] * phase)
    B = np.real(B0[:, None, None, None] * phase)
    dE = np.real(-1j * w * E0[:, None, None, None] * phase)
    dB = np.real(-1j * w * B0[:, None, None, None] * phase)
    re_chi, im_chi = np.real(chi0 * phase), np.imag(chi0 * phase)
    d_re_chi, d_im_chi = np.real(-1j * w * chi0 * phase), np.imag(-1j * w * chi0 * phase)
    freq = np.fft.fftfreq(n, d=1.0 / n)
    K = np.stack(np.meshgrid(freq, freq, freq, indexing="ij"))

    def grad(f):
        F = np.fft.fftn(f)
        return np.real(np.stack([np.fft.ifftn(1j * K[i] * F) for i in range(3)]))

    def div(v):
        return sum(grad(v[i])[i] for i in range(3))

    def curl(v):
        g = [grad(v[i]) for i in range(3)]  # g[i][j] = d_j v_i
        return np.stack([g[2][1] - g[1][2], g[0][2] - g[2][0], g[1][0] - g[0][1]])

    r1 = curl(E) + dB - grad(im_chi)
    r2 = curl(B) - dE - grad(re_chi)
    r3 = div(E) + d_re_chi
    r4 = div(B) - d_im_chi
    pred = [
        np.real(np.array([complex(x) for x in amp.faraday])[:, None, None, None] * phase),
        np.real(np.array([complex(x) for x in amp.ampere])[:, None, None, None] * phase),
        np.real(complex(amp.gauss_e) * phase),
        np.real(complex(amp.gauss_b) * phase),
    ]
    got = [r1, r2, r3, r4]
    return {"max_deviation": float(max(np.max(np.abs(g - q)) for g, q in zip(got, pred))),
            "max_residual": float(max(np.max(np.abs(g)) for g in got))}
