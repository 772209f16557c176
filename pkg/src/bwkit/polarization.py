"""Polarization vectors of the (1/2,1/2) field in the standard and helicity bases.

Vectors are Euclidean 4-columns (v1, v2, v3, v4) with v4 = i v^0. Vectors
that carry a 1/sqrt(2) are stored exactly as ``components / sqrt(radical)``.

Conventions worth knowing:

* Standard basis: u(p, s) = L(p) e(0, s). These vectors are orthogonal to
  (p, -iE) under the Euclidean pairing.
* Helicity basis: the printed helicity columns are orthogonal to (p, +iE).
  They coincide (up to the phases of the +-1 states) with the standard
  construction at -p, so the change of basis compares helicity(p) with
  standard(-p).
* Completeness: sum_s eta_s e(p,s) e(p,s)^dagger gamma_44 = 1 with
  eta = (+1, +1, +1, -1) for the labels (+1, -1, 0, 0t).
* Fields: F_{mu nu} = i(p_mu e_nu - p_nu e_mu), E_i = i F_{i4},
  B_i = -(1/2) eps_{ijk} F_{jk}. The sign of E is the one that gives
  E(p, 0) = (i m/p) p.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .exact import I, ONE, ZERO, ExactMatrix, ExactScalar, frac_sqrt
from .momentum import FourMomentum
from .spinor import quarter_turn

LABELS = ("+1", "-1", "0", "0t")
ETA = {"+1": 1, "-1": 1, "0": 1, "0t": -1}
GAMMA44 = ExactMatrix.diag([1, 1, 1, -1])


class BoostUndefinedError(ValueError):
    pass


class NoMasslessLimitError(ValueError):
    pass


class DirectionUndefinedError(ValueError):
    pass


class IrrationalError(ValueError):
    pass


@dataclass(frozen=True)
class PolarizationVector:
    components: tuple  # 4 ExactScalar (exact) or 4 complex (float path)
    label: str
    basis: str  # "standard" or "helicity"
    momentum: FourMomentum | None
    normalization: Fraction = Fraction(1)
    radical: int = 1  # value = normalization * components / sqrt(radical)

    @property
    def exact(self) -> bool:
        return all(isinstance(c, ExactScalar) for c in self.components)

    def values(self) -> np.ndarray:
        scale = float(self.normalization) / math.sqrt(self.radical)
        return np.array([complex(c) for c in self.components]) * scale

    def column(self) -> ExactMatrix:
        """Exact column of ``components`` (the 1/sqrt(radical) factor left out)."""
        return ExactMatrix.column(c * self.normalization for c in self.components)

    def scaled_equal(self, other: "PolarizationVector", factor=ONE) -> bool:
        """Exact test of self == factor * other, radicals included."""
        if self.radical != other.radical:
            return False
        f = ExactScalar.of(factor)
        return all(
            a * self.normalization == f * b * other.normalization
            for a, b in zip(self.components, other.components)
        )


def _pv(comps, label, basis, p, N, radical=1) -> PolarizationVector:
    comps = tuple(c if isinstance(c, (ExactScalar, complex)) else ExactScalar.of(c) for c in comps)
    return PolarizationVector(comps, label, basis, p, Fraction(N), radical)


def _rat(x, what: str) -> Fraction:
    if x is None:
        raise IrrationalError(f"{what} is irrational for this momentum; use the float path")
    return x


# ---------------------------------------------------------------------------
# standard basis


def rest_frame_basis(N=1) -> dict:
    """The four rest-frame columns, keyed by label."""
    return {
        "+1": _pv([-1, -I, 0, 0], "+1", "standard", None, N, 2),
        "-1": _pv([1, -I, 0, 0], "-1", "standard", None, N, 2),
        "0": _pv([0, 0, 1, 0], "0", "standard", None, N),
        "0t": _pv([0, 0, 0, I], "0t", "standard", None, N),
    }


def boost_matrix(p: FourMomentum) -> ExactMatrix:
    """L_44 = E/m, L_i4 = -L_4i = i p_i/m, L_ik = delta_ik + p_i p_k/(m(E+m))."""
    m = p.E * p.E - p.p_sq
    m = frac_sqrt(m) if m >= 0 else None
    if m is None or m == 0:
        raise BoostUndefinedError("boost needs a positive rational mass")
    k = m * (p.E + m)
    ps = p.spatial
    rows = []
    for i in range(3):
        rows.append([Fraction(int(i == j)) + ps[i] * ps[j] / k for j in range(3)] + [I * (ps[i] / m)])
    rows.append([-I * (ps[j] / m) for j in range(3)] + [p.E / m])
    return ExactMatrix(rows)


def boost_matrix_float(p3, m: float) -> np.ndarray:
    p3 = np.asarray(p3, dtype=float)
    if m <= 0:
        raise BoostUndefinedError("boost needs a positive mass")
    E = math.sqrt(p3 @ p3 + m * m)
    L = np.zeros((4, 4), dtype=complex)
    L[:3, :3] = np.eye(3) + np.outer(p3, p3) / (m * (E + m))
    L[:3, 3] = 1j * p3 / m
    L[3, :3] = -1j * p3 / m
    L[3, 3] = E / m
    return L


def standard_basis(p: FourMomentum, N=1) -> dict:
    L = boost_matrix(p)
    out = {}
    for lab, v in rest_frame_basis(N).items():
        col = L @ ExactMatrix.column(v.components)
        out[lab] = _pv([col[i, 0] for i in range(4)], lab, "standard", p, N, v.radical)
    return out


def printed_standard_vector(p: FourMomentum, label: str, N=1) -> PolarizationVector:
    """Closed-form standard-basis columns u(p, s)."""
    m = _rat(frac_sqrt(p.invariant_mass2), "mass")
    E, (p1, p2, p3) = p.E, p.spatial
    d = E + m
    pr, pl = p.p_r, p.p_l
    if label == "+1":
        c = [m + p1 * pr / d, I * m + p2 * pr / d, p3 * pr / d, -I * pr]
        return _pv([-x / m for x in c], label, "standard", p, N, 2)
    if label == "-1":
        c = [m + p1 * pl / d, -I * m + p2 * pl / d, p3 * pl / d, -I * pl]
        return _pv([x / m for x in c], label, "standard", p, N, 2)
    if label == "0":
        c = [ExactScalar.of(p1 * p3 / d), ExactScalar.of(p2 * p3 / d), ExactScalar.of(m + p3 * p3 / d), -I * p3]
        return _pv([x / m for x in c], label, "standard", p, N)
    if label == "0t":
        c = [ExactScalar.of(-p1), ExactScalar.of(-p2), ExactScalar.of(-p3), I * E]
        return _pv([x / m for x in c], label, "standard", p, N)
    raise ValueError(f"unknown label {label!r}")


# ---------------------------------------------------------------------------
# helicity basis


def helicity_operator(p: FourMomentum) -> ExactMatrix:
    a = _rat(p.abs_p, "|p|")
    if a == 0:
        raise DirectionUndefinedError("helicity needs a nonzero 3-momentum")
    px, py, pz = p.spatial
    rows = [
        [0, -I * pz, I * py, 0],
        [I * pz, 0, -I * px, 0],
        [-I * py, I * px, 0, 0],
        [0, 0, 0, 0],
    ]
    return ExactMatrix(rows).scale(ExactScalar(1 / a))


def helicity_operator_float(p3) -> np.ndarray:
    px, py, pz = (float(x) for x in p3)
    a = math.sqrt(px * px + py * py + pz * pz)
    if a == 0:
        raise DirectionUndefinedError("helicity needs a nonzero 3-momentum")
    return np.array(
        [[0, -1j * pz, 1j * py, 0], [1j * pz, 0, -1j * px, 0], [-1j * py, 1j * px, 0, 0], [0, 0, 0, 0]]
    ) / a


def azimuthal_phase(p: FourMomentum, sign: int = 1) -> ExactScalar:
    """e^{+-i phi} = p_r/rho or p_l/rho, phi the azimuth of p."""
    rho = _rat(p.rho, "sqrt(px^2 + py^2)")
    if rho == 0:
        raise DirectionUndefinedError("azimuth undefined on the z-axis")
    return (p.p_r if sign > 0 else p.p_l) / rho


def _phase(x, p: FourMomentum, sign: int) -> ExactScalar:
    if isinstance(x, str):
        if x != "azimuth":
            raise ValueError(f"unknown phase {x!r}")
        return azimuthal_phase(p, sign)
    if isinstance(x, ExactScalar):
        if x.abs2() != 1:
            raise ValueError("phase factor must have modulus 1")
        return x
    return quarter_turn(x)


def helicity_basis(p: FourMomentum, phases=(0, 0), N=1) -> dict:
    """Helicity eigenvectors e_{+1}, e_{-1}, e_0, e_{0t}.

    Each phase is a multiple of 1/2 (units of pi), a unimodular ExactScalar,
    or "azimuth" for e^{+i phi} on e_{+1} and e^{-i phi} on e_{-1}, phi being
    the azimuth of p. The closed-form helicity fields use the azimuthal choice.

    On the z-axis the printed transverse columns are 0/0; there the +-1 states
    fall back to the circular rest-frame vectors -(1, i, 0, 0)/sqrt2 and
    (1, -i, 0, 0)/sqrt2 (swapped when p_z < 0 so the helicity stays +-1).
    """
    a = _rat(p.abs_p, "|p|")
    if a == 0:
        raise DirectionUndefinedError("helicity needs a nonzero 3-momentum")
    px, py, pz = p.spatial
    ea, eb = _phase(phases[0], p, +1), _phase(phases[1], p, -1)
    rho2 = px * px + py * py
    out = {}
    if rho2 == 0:
        plus, minus = [-ONE, -I, ZERO, ZERO], [ONE, -I, ZERO, ZERO]
        if pz < 0:
            plus, minus = [-ONE, I, ZERO, ZERO], [ONE, I, ZERO, ZERO]
        out["+1"] = _pv([ea * c for c in plus], "+1", "helicity", p, N, 2)
        out["-1"] = _pv([eb * c for c in minus], "-1", "helicity", p, N, 2)
    else:
        rho = _rat(frac_sqrt(rho2), "sqrt(px^2 + py^2)")
        k = 1 / (a * rho)
        plus = [(-px * pz + I * py * a) * k, (-py * pz - I * px * a) * k, ExactScalar(rho / a), ZERO]
        minus = [(px * pz + I * py * a) * k, (py * pz - I * px * a) * k, ExactScalar(-rho / a), ZERO]
        out["+1"] = _pv([ea * c for c in plus], "+1", "helicity", p, N, 2)
        out["-1"] = _pv([eb * c for c in minus], "-1", "helicity", p, N, 2)
    if p.mass is None and p.invariant_mass2 <= 0:
        raise NoMasslessLimitError("longitudinal and time-like helicity vectors need m > 0")
    m2 = p.invariant_mass2
    if m2 <= 0:
        raise NoMasslessLimitError("longitudinal and time-like helicity vectors need m > 0")
    m = _rat(frac_sqrt(m2), "mass")
    E = p.E
    out["0"] = _pv([ExactScalar(E * px / (a * m)), ExactScalar(E * py / (a * m)), ExactScalar(E * pz / (a * m)), I * (a / m)], "0", "helicity", p, N)
    out["0t"] = _pv([ExactScalar(px / m), ExactScalar(py / m), ExactScalar(pz / m), I * (E / m)], "0t", "helicity", p, N)
    return out


def helicity_basis_float(p3, m: float, phases=(0.0, 0.0)) -> dict:
    """Float path for generic momenta (phases in units of pi)."""
    px, py, pz = (float(x) for x in p3)
    a = math.sqrt(px * px + py * py + pz * pz)
    if a == 0:
        raise DirectionUndefinedError("helicity needs a nonzero 3-momentum")
    if m <= 0:
        raise NoMasslessLimitError("longitudinal and time-like helicity vectors need m > 0")
    E = math.sqrt(a * a + m * m)
    rho = math.hypot(px, py)
    ea, eb = np.exp(1j * math.pi * phases[0]), np.exp(1j * math.pi * phases[1])
    s2 = math.sqrt(2)
    if rho == 0:
        sg = 1 if pz > 0 else -1
        plus = np.array([-1, -1j * sg, 0, 0]) / s2
        minus = np.array([1, -1j * sg, 0, 0]) / s2
    else:
        plus = np.array([(-px * pz + 1j * py * a) / rho, (-py * pz - 1j * px * a) / rho, rho, 0]) / (s2 * a)
        minus = np.array([(px * pz + 1j * py * a) / rho, (py * pz - 1j * px * a) / rho, -rho, 0]) / (s2 * a)
    return {
        "+1": ea * plus,
        "-1": eb * minus,
        "0": np.array([E * px / a, E * py / a, E * pz / a, 1j * a]) / m,
        "0t": np.array([px, py, pz, 1j * E]) / m,
    }


def standard_basis_float(p3, m: float) -> dict:
    L = boost_matrix_float(p3, m)
    s2 = math.sqrt(2)
    rest = {
        "+1": np.array([-1, -1j, 0, 0]) / s2,
        "-1": np.array([1, -1j, 0, 0]) / s2,
        "0": np.array([0, 0, 1, 0], dtype=complex),
        "0t": np.array([0, 0, 0, 1j]),
    }
    return {k: L @ v for k, v in rest.items()}


# ---------------------------------------------------------------------------
# checks


def parity_image(v: PolarizationVector) -> ExactMatrix:
    return GAMMA44 @ ExactMatrix.column(v.components)


def parity_report(p: FourMomentum, basis: str = "standard", phases=(0, 0)) -> dict:
    """For each label: the exact factor c with gamma_44 u(-p, s) = c u(p, s), or None.

    For the helicity +-1 states the cross-helicity factor c' with
    gamma_44 e_{s}(-p) = c' e_{-s}(p) is reported under '+1->-1' / '-1->+1'.
    """
    build = standard_basis if basis == "standard" else (lambda q: helicity_basis(q, phases))
    here, there = build(p), build(p.reversed())
    out = {}
    for lab in LABELS:
        out[lab] = _ratio(parity_image(there[lab]), here[lab])
    if basis == "helicity":
        out["+1->-1"] = _ratio(parity_image(there["+1"]), here["-1"])
        out["-1->+1"] = _ratio(parity_image(there["-1"]), here["+1"])
    return out


def _ratio(col: ExactMatrix, v: PolarizationVector):
    c = None
    for i in range(4):
        if v.components[i]:
            c = col[i, 0] / v.components[i]
            break
    if c is None:
        return None
    if all(col[i, 0] == c * v.components[i] for i in range(4)):
        return c
    return None


def euclid_pair(u: PolarizationVector, v: PolarizationVector, conjugate: bool = False):
    """sum_mu u_mu v_mu (u conjugated on request); exact when the radicals allow."""
    acc = ZERO
    for a, b in zip(u.components, v.components):
        acc = acc + (a.conj() if conjugate else a) * b
    acc = acc * (u.normalization * v.normalization)
    r = frac_sqrt(Fraction(u.radical * v.radical))
    if r is not None:
        return acc / r
    return complex(acc) / math.sqrt(u.radical * v.radical)


def completeness(basis: dict) -> ExactMatrix:
    """sum_s eta_s e(s) e(s)^dagger gamma_44; equals 1 for a complete basis."""
    acc = ExactMatrix.zeros(4, 4)
    for lab, v in basis.items():
        col = ExactMatrix.column(v.components).scale(ExactScalar(v.normalization))
        acc = acc + (col @ col.H).scale(ExactScalar(Fraction(ETA[lab], v.radical)))
    return acc @ GAMMA44


def completeness_float(vectors: dict) -> np.ndarray:
    g = np.diag([1, 1, 1, -1])
    return sum(ETA[k] * np.outer(v, v.conj()) for k, v in vectors.items()) @ g


def change_of_basis(p3, m: float, phases=(0.0, 0.0)) -> np.ndarray:
    """C with helicity(p) = standard(-p) C, using the pseudo-orthonormality of both bases."""
    std = standard_basis_float(-np.asarray(p3, dtype=float), m)
    hel = helicity_basis_float(p3, m, phases)
    g = np.diag([1, 1, 1, -1])
    C = np.zeros((4, 4), dtype=complex)
    for i, a in enumerate(LABELS):
        for j, b in enumerate(LABELS):
            C[i, j] = ETA[a] * (std[a].conj() @ g @ hel[b])
    return C


# ---------------------------------------------------------------------------
# fields


@dataclass(frozen=True)
class FieldStrengthPair:
    E: tuple
    B: tuple
    momentum: FourMomentum
    label: str
    radical: int = 1  # true fields are E/sqrt(radical), B/sqrt(radical)

    def values(self) -> tuple[np.ndarray, np.ndarray]:
        s = 1 / math.sqrt(self.radical)
        return (np.array([complex(x) for x in self.E]) * s, np.array([complex(x) for x in self.B]) * s)


def field_tensor(v: PolarizationVector) -> ExactMatrix:
    pe = v.momentum.euclid()
    e = [c * v.normalization for c in v.components]
    return ExactMatrix.from_function(4, 4, lambda a, b: I * (pe[a] * e[b] - pe[b] * e[a]))


def eb_from_potential(v: PolarizationVector) -> FieldStrengthPair:
    F = field_tensor(v)
    E = tuple(I * F[i, 3] for i in range(3))
    B = tuple(-F[(i + 1) % 3, (i + 2) % 3] for i in range(3))
    return FieldStrengthPair(E, B, v.momentum, v.label, v.radical)


def printed_eb(p: FourMomentum, label: str) -> FieldStrengthPair:
    """Closed-form helicity fields with p~ = (p_y, -p_x, -i p)."""
    a = _rat(p.abs_p, "|p|")
    m = _rat(frac_sqrt(p.invariant_mass2), "mass")
    E = p.E
    px, py, pz = p.spatial
    vec = [ExactScalar(x) for x in (px, py, pz)]
    pt = [ExactScalar(py), ExactScalar(-px), ExactScalar(0, -a)]
    if label == "0":
        return FieldStrengthPair(tuple(I * (m / a) * x for x in vec), (ZERO,) * 3, p, label)
    if label == "+1":
        pl = p.p_l
        Ev = [-(I * E * pz / a) / pl * x - (ExactScalar(E) / pl) * y for x, y in zip(vec, pt)]
        Bv = [(ExactScalar(pz) / pl) * x - (I * a) / pl * y for x, y in zip(vec, pt)]
        return FieldStrengthPair(tuple(Ev), tuple(Bv), p, label, 2)
    if label == "-1":
        pr = p.p_r
        Ev = [(I * E * pz / a) / pr * x - (ExactScalar(E) / pr) * y.conj() for x, y in zip(vec, pt)]
        Bv = [(ExactScalar(pz) / pr) * x + (I * a) / pr * y.conj() for x, y in zip(vec, pt)]
        return FieldStrengthPair(tuple(Ev), tuple(Bv), p, label, 2)
    raise ValueError(f"no closed form for label {label!r}")


# ---------------------------------------------------------------------------
# notoph


def notoph_tensor(p: FourMomentum, N=1) -> ExactMatrix:
    """The printed antisymmetric A^{mu nu}(p), indices in the order (0, 1, 2, 3)."""
    m2 = p.invariant_mass2
    if m2 <= 0:
        raise NoMasslessLimitError("notoph tensor needs m > 0")
    m = _rat(frac_sqrt(m2), "mass")
    p1, p2, p3 = p.spatial
    d = p.E + m
    rr = (p.p_r * p.p_l) / d
    rows = [
        [0, -p2, p1, 0],
        [p2, 0, m + rr, p2 * p3 / d],
        [-p1, -m - rr, 0, -p1 * p3 / d],
        [0, -p2 * p3 / d, p1 * p3 / d, 0],
    ]
    return ExactMatrix(rows).scale(I * (Fraction(N) ** 2 / m))


def transverse_minkowski(p: FourMomentum, k: int) -> list[Fraction]:
    """Contravariant (p_k/m, e_k + p_k p/(m(E+m))) for k = 0, 1, 2."""
    m = _rat(frac_sqrt(p.invariant_mass2), "mass")
    ps = p.spatial
    return [ps[k] / m] + [Fraction(int(i == k)) + ps[k] * ps[i] / (m * (p.E + m)) for i in range(3)]


def notoph_wedge(p: FourMomentum, N=1) -> ExactMatrix:
    """i N^2 (e1 e2 - e2 e1) built from the boosted Cartesian vectors."""
    e1, e2 = transverse_minkowski(p, 0), transverse_minkowski(p, 1)
    c = I * Fraction(N) ** 2
    return ExactMatrix.from_function(4, 4, lambda a, b: c * (e1[a] * e2[b] - e2[a] * e1[b]))
