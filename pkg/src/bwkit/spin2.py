"""Rank-4 symmetric multispinors for spin 2.

Psi_{ab,cd} is built from products of symmetric matrices in the pair (ab)
and in the pair (cd):

    Gamma_mu = gamma_mu R,  Sigma_{mu nu} = sigma_{mu nu} R,  Sigma5 = gamma5 sigma R.

Nine coefficient blocks multiply the products (Euclidean indices, all down,
eps_{1234} = +1):

    G_{k,mu}      a1 b1  Gamma_mu        x Gamma_k
    F_{kt,mu}     a1 b2  Gamma_mu        x Sigma_{kt}
    Ft_{kt,mu}    a1 b3  Gamma_mu        x Sigma5_{kt}
    T_{k,mu nu}   a2 b4  Sigma_{mu nu}   x Gamma_k
    Tt_{k,mu nu}  a3 b7  Sigma5_{mu nu}  x Gamma_k
    R_{kt,mu nu}  a2 b5  Sigma_{mu nu}   x Sigma_{kt}
    Rt_{kt,mu nu} a2 b6  Sigma_{mu nu}   x Sigma5_{kt}
    D_{kt,mu nu}  a3 b9  Sigma5_{mu nu}  x Sigma5_{kt}
    Dt_{kt,mu nu} a3 b8  Sigma5_{mu nu}  x Sigma_{kt}

Antisymmetric pairs are stored once (lexicographic mu < nu); sums over
ordered pairs contribute a factor 2 per pair.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from fractions import Fraction
from itertools import product

from .exact import (
    I,
    ZERO,
    ConstraintSystem,
    ExactMatrix,
    ExactScalar,
    rank_nullspace,
)
from .momentum import FourMomentum
from .spinor import PAIRS, DiracSet, build_dirac_set, dirac_operator

_D = build_dirac_set()

BLOCKS = ("G", "F", "Ft", "T", "Tt", "R", "Rt", "D", "Dt")
BLOCK_SIZE = {"G": 16, "F": 24, "Ft": 24, "T": 24, "Tt": 24, "R": 36, "Rt": 36, "D": 36, "Dt": 36}
# (alpha index, beta index) of each block
BLOCK_COEFF = {"G": (1, 1), "F": (1, 2), "Ft": (1, 3), "T": (2, 4), "Tt": (3, 7), "R": (2, 5), "Rt": (2, 6), "D": (3, 9), "Dt": (3, 8)}


@dataclass(frozen=True)
class Spin2Coefficients:
    alpha: tuple  # alpha_1..alpha_3
    beta: tuple  # beta_1..beta_9

    def __post_init__(self):
        object.__setattr__(self, "alpha", tuple(Fraction(x) for x in self.alpha))
        object.__setattr__(self, "beta", tuple(Fraction(x) for x in self.beta))
        if len(self.alpha) != 3 or len(self.beta) != 9:
            raise ValueError("need 3 alphas and 9 betas")

    def weight(self, block: str) -> Fraction:
        a, b = BLOCK_COEFF[block]
        return self.alpha[a - 1] * self.beta[b - 1]

    def active(self) -> tuple:
        return tuple(b for b in BLOCKS if self.weight(b))

    def scaled(self, s, t) -> "Spin2Coefficients":
        return Spin2Coefficients(tuple(a * s for a in self.alpha), tuple(b * t for b in self.beta))


STANDARD = Spin2Coefficients((1, 1, 0), (1, 1, 0, 1, 1, 0, 1, 1, 0))
GENERIC = Spin2Coefficients((1, 1, 1), (1,) * 9)


def unknown_labels(block: str) -> list[str]:
    p = [f"{a + 1}{b + 1}" for a, b in PAIRS]
    if block == "G":
        return [f"G{k + 1},{m + 1}" for k in range(4) for m in range(4)]
    if block in ("F", "Ft"):
        return [f"{block}{kt},{m + 1}" for kt in p for m in range(4)]
    if block in ("T", "Tt"):
        return [f"{block}{k + 1},{mn}" for k in range(4) for mn in p]
    return [f"{block}{kt},{mn}" for kt in p for mn in p]


def _block_products(d: DiracSet):
    Gam = [g @ d.R for g in d.gamma]
    Sig = [(d.sigma[pr] @ d.R).scale(2) for pr in PAIRS]
    Sig5 = [(d.gamma5 @ d.sigma[pr] @ d.R).scale(2) for pr in PAIRS]
    # (left matrix on (ab), right matrix on (cd)) per unknown, in label order
    return {
        "G": [(Gam[m], Gam[k]) for k in range(4) for m in range(4)],
        "F": [(Gam[m], Sig[kt]) for kt in range(6) for m in range(4)],
        "Ft": [(Gam[m], Sig5[kt]) for kt in range(6) for m in range(4)],
        "T": [(Sig[mn], Gam[k]) for k in range(4) for mn in range(6)],
        "Tt": [(Sig5[mn], Gam[k]) for k in range(4) for mn in range(6)],
        "R": [(Sig[mn], Sig[kt]) for kt in range(6) for mn in range(6)],
        "Rt": [(Sig[mn], Sig5[kt]) for kt in range(6) for mn in range(6)],
        "D": [(Sig5[mn], Sig5[kt]) for kt in range(6) for mn in range(6)],
        "Dt": [(Sig5[mn], Sig[kt]) for kt in range(6) for mn in range(6)],
    }


_PRODUCTS = _block_products(_D)


def _outer(L: ExactMatrix, Rm: ExactMatrix, w) -> dict:
    """Sparse 256-vector of w * L_{ab} R_{cd} at index 64a + 16b + 4c + d."""
    out = {}
    for a, b in product(range(4), repeat=2):
        x = L[a, b]
        if not x:
            continue
        for c, e in product(range(4), repeat=2):
            y = Rm[c, e]
            if y:
                out[64 * a + 16 * b + 4 * c + e] = x * y * w
    return out


@dataclass(frozen=True)
class MultispinorMap:
    columns: tuple  # sparse 256-vectors (dict index -> ExactScalar), one per unknown
    labels: tuple
    active_blocks: tuple

    @property
    def size(self) -> int:
        return len(self.columns)

    def matrix(self) -> ExactMatrix:
        rows = [[ZERO] * self.size for _ in range(256)]
        for j, col in enumerate(self.columns):
            for i, v in col.items():
                rows[i][j] = v
        return ExactMatrix(rows)

    def apply(self, x) -> list:
        out = [ZERO] * 256
        for xv, col in zip(x, self.columns):
            if xv:
                for i, v in col.items():
                    out[i] = out[i] + v * xv
        return out


def multispinor_map(coeffs: Spin2Coefficients = STANDARD, blocks=None) -> MultispinorMap:
    """Columns of the nine-term expansion for the active blocks."""
    return _cached_map(coeffs, tuple(blocks or coeffs.active()))


@lru_cache(maxsize=32)
def _cached_map(coeffs: Spin2Coefficients, blocks: tuple) -> MultispinorMap:
    cols, labels = [], []
    for b in blocks:
        w = ExactScalar.of(coeffs.weight(b))
        for (L, Rm), lab in zip(_PRODUCTS[b], unknown_labels(b)):
            cols.append(_outer(L, Rm, w))
            labels.append(lab)
    return MultispinorMap(tuple(cols), tuple(labels), tuple(blocks))


def two_stage_map(d: DiracSet = _D) -> MultispinorMap:
    """Standard-case map built in two stages: first pair, then second pair.

    Psi^mu_{cd} = Gamma_k G_{k,mu} + Sigma_{kt} F_{kt,mu},
    Psi^{mu nu}_{cd} = Gamma_k T_{k,mu nu} + Sigma_{kt} R_{kt,mu nu},
    Psi = Gamma_mu Psi^mu + Sigma_{mu nu} Psi^{mu nu}.
    """
    Gam = [g @ d.R for g in d.gamma]
    Sig = [(d.sigma[pr] @ d.R).scale(2) for pr in PAIRS]
    cols, labels = [], []
    for blk in ("G", "F", "T", "R"):
        for lab in unknown_labels(blk):
            head, tail = lab[len(blk):].split(",")
            if blk in ("G", "F"):
                inner = Gam[int(head) - 1] if blk == "G" else Sig[_pair_pos(head)]
                outer = Gam[int(tail) - 1]
            else:
                inner = Gam[int(head) - 1] if blk == "T" else Sig[_pair_pos(head)]
                outer = Sig[_pair_pos(tail)]
            cols.append(_outer(outer, inner, ExactScalar(1)))
            labels.append(lab)
    return MultispinorMap(tuple(cols), tuple(labels), ("G", "F", "T", "R"))


def _pair_pos(s: str) -> int:
    return PAIRS.index((int(s[0]) - 1, int(s[1]) - 1))


def assemble_multispinor(values: dict, coeffs: Spin2Coefficients = STANDARD) -> list:
    """256-vector for components given as {block: list of values in label order}."""
    mp = multispinor_map(coeffs, BLOCKS)
    x = []
    for b in BLOCKS:
        v = values.get(b, [0] * BLOCK_SIZE[b])
        if len(v) != BLOCK_SIZE[b]:
            raise ValueError(f"block {b} needs {BLOCK_SIZE[b]} values")
        x.extend(ExactScalar.of(t) for t in v)
    return mp.apply(x)


# ---------------------------------------------------------------------------
# symmetry constraints


def _swap_rows(mp: MultispinorMap) -> list[list]:
    """Psi_{abcd} - Psi_{acbd} = 0 for b < c (the b <-> c transposition)."""
    rows = []
    for a, b, c, e in product(range(4), repeat=4):
        if b >= c:
            continue
        i, j = 64 * a + 16 * b + 4 * c + e, 64 * a + 16 * c + 4 * b + e
        rows.append([col.get(i, ZERO) - col.get(j, ZERO) for col in mp.columns])
    return rows


def _contraction_rows(mp: MultispinorMap, d: DiracSet = _D) -> list[list]:
    """sum_{bc} Psi_{abcd} A_{bc} = 0 for A in R^-1, R^-1 g5, R^-1 g5 g_l."""
    Ri = d.R_inv
    anti = [Ri, Ri @ d.gamma5] + [Ri @ d.gamma5 @ g for g in d.gamma]
    rows = []
    for A in anti:
        for a, e in product(range(4), repeat=2):
            row = []
            for col in mp.columns:
                acc = ZERO
                for b, c in product(range(4), repeat=2):
                    x = A[b, c]
                    if x:
                        v = col.get(64 * a + 16 * b + 4 * c + e)
                        if v:
                            acc = acc + v * x
                row.append(acc)
            rows.append(row)
    return rows


@dataclass(frozen=True)
class SymmetryReport:
    coefficients: Spin2Coefficients
    system: ConstraintSystem
    contraction_system: ConstraintSystem
    constructions_agree: bool
    component_nullity: int
    image_nullity: int
    expansion_kernel: int


def symmetry_constraint_system(coeffs: Spin2Coefficients = STANDARD, mp: MultispinorMap | None = None) -> SymmetryReport:
    mp = mp or multispinor_map(coeffs)
    direct = rank_nullspace(ExactMatrix(_swap_rows(mp)), mp.labels)
    contr = rank_nullspace(ExactMatrix(_contraction_rows(mp)), mp.labels)
    agree = direct.same_row_space(contr)
    kernel = mp.size - _map_rank(mp)
    return SymmetryReport(coeffs, direct, contr, agree, direct.nullity, direct.nullity - kernel, kernel)


def _map_rank(mp: MultispinorMap) -> int:
    return rank_nullspace(mp.matrix()).rank


# ---------------------------------------------------------------------------
# the constraint families, as explicit linear forms


def _index(labels) -> dict:
    return {lab: i for i, lab in enumerate(labels)}


def _lev(*idx) -> int:
    from .bw_spin1 import levi_civita

    return levi_civita(idx)


class _Form:
    """Helper to accumulate a linear form over labelled unknowns."""

    def __init__(self, labels):
        self.idx = _index(labels)
        self.row = [ZERO] * len(labels)
        self.missing = False

    def add(self, block: str, first, second, c) -> None:
        """Add c * block[first, second]; pairs given as (i, j) with sign handling."""
        s = 1
        f = self._key(first)
        g = self._key(second)
        if f is None or g is None:
            return
        s *= f[1] * g[1]
        lab = f"{block}{f[0]},{g[0]}"
        if lab not in self.idx:
            self.missing = True
            return
        j = self.idx[lab]
        self.row[j] = self.row[j] + ExactScalar.of(c) * s

    @staticmethod
    def _key(x):
        if isinstance(x, int):
            return str(x + 1), 1
        a, b = x
        if a == b:
            return None
        if a < b:
            return f"{a + 1}{b + 1}", 1
        return f"{b + 1}{a + 1}", -1


R4 = range(4)


def constraint_families(labels) -> dict:
    """The standard-case families as lists of (name, form)."""
    fam: dict[str, list] = {k: [] for k in ("b1:trace+antisym", "b1:metric", "c1", "d1", "e1:F=T", "e1:eps", "f1:traces", "f1:eps")}

    def form():
        return _Form(labels)

    f = form()
    for m in R4:
        f.add("G", m, m, 1)
    fam["b1:trace+antisym"].append(("G_mm", f.row))
    for k, m in PAIRS:
        f = form()
        f.add("G", k, m, 1)
        f.add("G", m, k, -1)
        fam["b1:trace+antisym"].append((f"G[{k + 1}{m + 1}]", f.row))
    for k, m in product(R4, R4):
        f = form()
        f.add("G", k, m, 1)
        if k == m:
            for n in R4:
                f.add("G", n, n, Fraction(-1, 2))
        fam["b1:metric"].append((f"G{k + 1}{m + 1}=g G/2", f.row))
    for k in R4:
        f = form()
        for m in R4:
            f.add("F", (k, m), m, 1)
        fam["c1"].append((f"F_k{k + 1}m,m", f.row))
        f = form()
        for m in R4:
            f.add("F", (m, k), m, 1)
        fam["c1"].append((f"F_m k{k + 1},m", f.row))
    for n in R4:
        f = form()
        for k, t, m in product(R4, R4, R4):
            e = _lev(k, t, m, n)
            if e:
                f.add("F", (k, t), m, e)
        fam["c1"].append((f"epsF[{n + 1}]", f.row))
    for k in R4:
        f = form()
        for m in R4:
            f.add("T", m, (m, k), 1)
        fam["d1"].append((f"T_m,m k{k + 1}", f.row))
        f = form()
        for m in R4:
            f.add("T", m, (k, m), 1)
        fam["d1"].append((f"T_m,k{k + 1} m", f.row))
    for n in R4:
        f = form()
        for k, t, m in product(R4, R4, R4):
            e = _lev(k, t, m, n)
            if e:
                f.add("T", k, (t, m), e)
        fam["d1"].append((f"epsT[{n + 1}]", f.row))
    for (k, t), m in product(PAIRS, R4):
        f = form()
        f.add("F", (k, t), m, 1)
        f.add("T", m, (k, t), -1)
        fam["e1:F=T"].append((f"F{k + 1}{t + 1},{m + 1}=T", f.row))
    for lam in R4:
        f = form()
        for k, t, m in product(R4, R4, R4):
            e = _lev(k, t, m, lam)
            if e:
                f.add("F", (k, t), m, e)
                f.add("T", k, (t, m), e)
        fam["e1:eps"].append((f"eps(F+T)[{lam + 1}]", f.row))
    for k, m in product(R4, R4):
        for name, first, second in (
            ("R_kn,mn", lambda n: (k, n), lambda n: (m, n)),
            ("R_nk,mn", lambda n: (n, k), lambda n: (m, n)),
            ("R_kn,nm", lambda n: (k, n), lambda n: (n, m)),
            ("R_nk,nm", lambda n: (n, k), lambda n: (n, m)),
        ):
            f = form()
            for n in R4:
                f.add("R", first(n), second(n), 1)
            fam["f1:traces"].append((f"{name}[{k + 1}{m + 1}]", f.row))
    f = form()
    for m, n in product(R4, R4):
        f.add("R", (m, n), (m, n), 1)
    fam["f1:traces"].append(("R_mn,mn", f.row))
    for k, t in product(R4, R4):
        f = form()
        for m, n, a, b in product(R4, repeat=4):
            e = _lev(m, n, a, b)
            if not e:
                continue
            if b == k:
                f.add("R", (m, t), (n, a), e)
            if b == t:
                f.add("R", (n, a), (m, k), -e)
        fam["f1:eps"].append((f"eps(gR-gR)[{k + 1}{t + 1}]", f.row))
    f = form()
    for k, t, m, n in product(R4, repeat=4):
        e = _lev(k, t, m, n)
        if e:
            f.add("R", (k, t), (m, n), e)
    fam["f1:eps"].append(("eps R", f.row))
    return fam


@dataclass(frozen=True)
class FamilyResult:
    family: str
    members: int
    in_row_space: int
    failures: tuple  # names not in the row space

    @property
    def ok(self) -> bool:
        return self.in_row_space == self.members


def check_families(cs: ConstraintSystem, labels) -> list[FamilyResult]:
    out = []
    for name, forms in constraint_families(labels).items():
        bad = tuple(n for n, f in forms if not cs.contains_row(f))
        out.append(FamilyResult(name, len(forms), len(forms) - len(bad), bad))
    return out


def essential_constraints(labels, coeffs: Spin2Coefficients) -> list[tuple[str, list, list | None, ExactScalar | None]]:
    """Generalized-case constraints as (name, first form, second form, printed ratio).

    Single-term constraints have no second form. For two-term constraints the
    printed relative coefficient is carried through the Euclidean transcription
    only up to factors of i, so the ratio is fitted and reported.
    """
    a1, a2, a3 = coeffs.alpha
    b = coeffs.beta
    out = []

    def form():
        return _Form(labels)

    f = form()
    for m in R4:
        f.add("G", m, m, a1 * b[0])
    out.append(("a1b1 G_mm", f.row, None, None))
    for k, m in PAIRS:
        f = form()
        f.add("G", k, m, a1 * b[0])
        f.add("G", m, k, -a1 * b[0])
        out.append((f"a1b1 G[{k + 1}{m + 1}]", f.row, None, None))
    pairs = (("F", "Ft", a1 * b[1], a1 * b[2]), ("Ft", "F", a1 * b[2], a1 * b[1]))
    for tr, ep, ct, ce in pairs:
        for al in R4:
            f, g = form(), form()
            for m in R4:
                f.add(tr, (al, m), m, 2 * ct)
            for k, t, m in product(R4, R4, R4):
                e = _lev(k, t, m, al)
                if e:
                    g.add(ep, (k, t), m, ce * e)
            out.append((f"{tr}-trace/eps {ep}[{al + 1}]", f.row, g.row, I))
    pairs = (("T", "Tt", a2 * b[3], a3 * b[6]), ("Tt", "T", a3 * b[6], a2 * b[3]))
    for tr, ep, ct, ce in pairs:
        for al in R4:
            f, g = form(), form()
            for m in R4:
                f.add(tr, m, (m, al), 2 * ct)
            for k, t, m in product(R4, R4, R4):
                e = _lev(k, t, m, al)
                if e:
                    g.add(ep, k, (t, m), -ce * e)
            out.append((f"{tr}-trace/eps {ep}[{al + 1}]", f.row, g.row, I))
    return out


@dataclass(frozen=True)
class EssentialResult:
    name: str
    holds: bool  # a relation of the printed two-term shape exists on the nullspace
    fitted_ratio: ExactScalar | None  # c with first + c * second vanishing on the nullspace
    printed_ratio: ExactScalar | None


def check_essential(cs: ConstraintSystem, labels, coeffs: Spin2Coefficients) -> list[EssentialResult]:
    res = []
    ns = cs.nullspace
    for name, u, v, printed in essential_constraints(labels, coeffs):
        if v is None:
            res.append(EssentialResult(name, cs.contains_row(u), None, None))
            continue
        c, ok = None, True
        for n in ns:
            un = sum((x * n[i, 0] for i, x in enumerate(u)), ZERO)
            vn = sum((x * n[i, 0] for i, x in enumerate(v)), ZERO)
            if not vn:
                ok &= not un
                continue
            r = -un / vn
            if c is None:
                c = r
            elif c != r:
                ok = False
        res.append(EssentialResult(name, ok, c, printed))
    return res


# ---------------------------------------------------------------------------
# standard-case recovery


@dataclass(frozen=True)
class RecoveryReport:
    row_spaces_equal: bool
    families: tuple
    standard_nullity: int
    perturbed_nullity: int
    perturbed_changes: bool


def recover_standard_case() -> RecoveryReport:
    """Nine-term map at the standard coefficients versus the two-stage map."""
    gen = symmetry_constraint_system(STANDARD)
    two = symmetry_constraint_system(STANDARD, two_stage_map())
    equal = gen.system.unknown_labels == two.system.unknown_labels and gen.system.same_row_space(two.system)
    fams = tuple(check_families(gen.system, gen.system.unknown_labels))
    pert = Spin2Coefficients(STANDARD.alpha[:2] + (1,), STANDARD.beta[:8] + (1,))
    pr = symmetry_constraint_system(pert)
    return RecoveryReport(equal, fams, gen.component_nullity, pr.component_nullity, pr.component_nullity != gen.component_nullity)


# ---------------------------------------------------------------------------
# dynamics


def dynamics_system(p: FourMomentum, m, coeffs: Spin2Coefficients = STANDARD, sign: int = -1):
    """Dirac conditions on the first and third spinor index plus total symmetry.

    D = i gamma.p + sign m acts on index a (and on c); together with the pair
    symmetries and the b <-> c transposition this covers all four indices.
    """
    from .bw_spin1 import DerivedRelation, MomentumSystem

    m = Fraction(m)
    mp = multispinor_map(coeffs)
    D = dirac_operator(_D, p.euclid(), (sign * m, 0))
    rows = []
    for col_slot in ("first", "third"):
        for a, b, c, e in product(range(4), repeat=4):
            row = []
            for col in mp.columns:
                acc = ZERO
                for k in range(4):
                    x = D[a, k] if col_slot == "first" else D[c, k]
                    if not x:
                        continue
                    idx = 64 * k + 16 * b + 4 * c + e if col_slot == "first" else 64 * a + 16 * b + 4 * k + e
                    v = col.get(idx)
                    if v:
                        acc = acc + x * v
                row.append(acc)
            if any(row):
                rows.append(row)
    rows += _swap_rows(mp)
    cs = rank_nullspace(ExactMatrix(rows), mp.labels)
    rels = [DerivedRelation(n, tuple(f), cs.contains_row(f)) for n, f in dynamics_relations(p, m, mp.labels, sign)]
    return MomentumSystem(p, cs, tuple(rels))


def dynamics_nullities(p: FourMomentum, m, coeffs: Spin2Coefficients = STANDARD, sign: int = -1) -> tuple[int, int]:
    """(component-space, image-space) nullity of the dynamical system."""
    ms = dynamics_system(p, m, coeffs, sign)
    kernel = (lambda mp: mp.size - _map_rank(mp))(multispinor_map(coeffs))
    return ms.nullity, ms.nullity - kernel


def dynamics_relations(p: FourMomentum, m, labels, sign: int = -1) -> list:
    """First-order relations of the standard case in coefficient form (m' = -sign m).

    2m' T_{k,mu nu} = p_mu G_{k,nu} - p_nu G_{k,mu},  p_mu T_{k,mu nu} = -(m'/2) G_{k,nu},
    the same pair with (T, G) -> (R, F), transversality of G and F, and
    eps_{a b n mu} p_a T_{k,b n} = 0.
    """
    pe = p.euclid()
    mm = -sign * Fraction(m)
    out = []
    heads = [("T", "G", k, str(k + 1)) for k in R4] + [("R", "F", kt, f"{kt[0] + 1}{kt[1] + 1}") for kt in PAIRS]
    for hi, lo, key, tag in heads:
        for mu, nu in PAIRS:
            f = _Form(labels)
            f.add(hi, key, (mu, nu), 2 * mm)
            f.add(lo, key, nu, -pe[mu])
            f.add(lo, key, mu, pe[nu])
            out.append((f"{hi}{tag},{mu + 1}{nu + 1} curl {lo}", f))
        for nu in R4:
            f = _Form(labels)
            for mu in R4:
                f.add(hi, key, (mu, nu), pe[mu])
            f.add(lo, key, nu, mm / 2)
            out.append((f"div {hi}{tag}[{nu + 1}]", f))
        f = _Form(labels)
        for mu in R4:
            f.add(lo, key, mu, pe[mu])
        out.append((f"p.{lo}{tag}", f))
        for mu in R4:
            f = _Form(labels)
            for a, b, n in product(R4, R4, R4):
                e = _lev(a, b, n, mu)
                if e:
                    f.add(hi, key, (b, n), pe[a] * e)
            out.append((f"eps p {hi}{tag}[{mu + 1}]", f))
    return [(n, f.row) for n, f in out if not f.missing]


def block_structure(cs_matrix: ExactMatrix) -> list[int]:
    """Sizes (in unknowns) of the connected blocks of a sparse system."""
    n = cs_matrix.shape[1]
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for r in range(cs_matrix.shape[0]):
        nz = [j for j in range(n) if cs_matrix[r, j]]
        for j in nz[1:]:
            parent[find(j)] = find(nz[0])
    sizes: dict[int, int] = {}
    for j in range(n):
        sizes[find(j)] = sizes.get(find(j), 0) + 1
    return sorted(sizes.values(), reverse=True)


# ---------------------------------------------------------------------------
# the second-order equation for G


@dataclass(frozen=True)
class SecondOrderReport:
    residual: ExactMatrix  # 4x4, indices (k, mu)
    residual_zero: bool
    trace_residual: ExactScalar
    F: tuple  # F_k = i p_mu G_{mu k}
    p_dot_F: ExactScalar
    contraction_identity: bool  # trace of residual = (p.F - p.p tr G)/m^2 - tr G


def g_second_order_check(p: FourMomentum, m, G) -> SecondOrderReport:
    """(1/m^2)[-p_mu p_nu G_{k nu} - p.p G_{k mu}] - G_{k mu}.

    Transcription: d_nu d^mu -> -p_nu p_mu and the box operator -> p.p, so
    transverse G with p.p = -m^2 gives zero.
    """
    m = Fraction(m)
    pe = p.euclid()
    G = ExactMatrix(G) if not isinstance(G, ExactMatrix) else G
    p2 = sum((x * x for x in pe), ZERO)
    inv = ExactScalar(1 / (m * m))
    res = ExactMatrix.from_function(
        4,
        4,
        lambda k, mu: inv * (-sum((pe[mu] * pe[nu] * G[k, nu] for nu in R4), ZERO) - p2 * G[k, mu]) - G[k, mu],
    )
    F = tuple(sum((I * pe[mu] * G[mu, k] for mu in R4), ZERO) for k in R4)
    pF = sum((I * pe[k] * F[k] for k in R4), ZERO)
    tr = G.trace()
    ident = res.trace() == inv * (pF - p2 * tr) - tr
    return SecondOrderReport(res, res.is_zero(), res.trace(), F, pF, ident)


def transverse_traceless(p: FourMomentum, seed_matrix) -> ExactMatrix:
    """Project a 4x4 matrix onto symmetric, traceless, p-transverse tensors.

    P_{mu nu} = delta - p_mu p_nu / p.p; the spin-2 projector is
    (P P + P P)/2 - P P / 3 acting on the symmetrized seed.
    """
    pe = p.euclid()
    p2 = sum((x * x for x in pe), ZERO)
    P = ExactMatrix.from_function(4, 4, lambda a, b: (1 if a == b else 0) - pe[a] * pe[b] / p2)
    S = seed_matrix if isinstance(seed_matrix, ExactMatrix) else ExactMatrix(seed_matrix)
    S = (S + S.T).scale(ExactScalar(Fraction(1, 2)))
    X = P @ S @ P
    tr = sum((P[a, b] * X[a, b] for a, b in product(R4, R4)), ZERO)
    return X - P.scale(tr / 3)
