"""Exact complex-rational scalars, matrices, polynomials and linear systems.

Everything downstream of this module is exact unless a function says otherwise.
Values are immutable; all operations return new objects.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, isqrt
from typing import Iterable, Sequence

import numpy as np


class ShapeError(ValueError):
    pass


class DegenerateInputError(ValueError):
    pass


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, str)):
        return Fraction(x)
    if isinstance(x, float):
        raise TypeError("floats are not exact; pass a Fraction or 'p/q' string")
    return Fraction(x)


class ExactScalar:
    """Complex number with arbitrary-precision rational parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        if isinstance(re, ExactScalar):
            if im:
                raise TypeError("cannot combine ExactScalar with an extra imaginary part")
            object.__setattr__(self, "re", re.re)
            object.__setattr__(self, "im", re.im)
            return
        object.__setattr__(self, "re", _frac(re))
        object.__setattr__(self, "im", _frac(im))

    def __setattr__(self, name, value):
        raise AttributeError("ExactScalar is immutable")

    @staticmethod
    def of(x) -> "ExactScalar":
        if isinstance(x, ExactScalar):
            return x
        if isinstance(x, complex):
            raise TypeError("complex floats are not exact")
        return ExactScalar(x)

    @staticmethod
    def parse(text: str) -> "ExactScalar":
        """Parse 'p/q', 'p/q+r/si', 'i', '-3i' style strings."""
        s = text.replace(" ", "")
        if not s:
            raise ValueError("empty scalar")
        if not s.endswith("i"):
            return ExactScalar(Fraction(s))
        body = s[:-1]
        # split at the last sign that is not the leading one and not after '/'
        cut = -1
        for k in range(len(body) - 1, 0, -1):
            if body[k] in "+-" and body[k - 1] != "/":
                cut = k
                break
        if cut == -1:
            re_part, im_part = "0", body
        else:
            re_part, im_part = body[:cut], body[cut:]
        if im_part in ("", "+"):
            im_part = "1"
        elif im_part == "-":
            im_part = "-1"
        return ExactScalar(Fraction(re_part), Fraction(im_part))

    # arithmetic
    def __add__(self, o):
        o = _coerce(o)
        if o is NotImplemented:
            return o
        return ExactScalar(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, o):
        o = _coerce(o)
        if o is NotImplemented:
            return o
        return ExactScalar(self.re - o.re, self.im - o.im)

    def __rsub__(self, o):
        o = _coerce(o)
        if o is NotImplemented:
            return o
        return o - self

    def __mul__(self, o):
        o = _coerce(o)
        if o is NotImplemented:
            return o
        if not self.im and not o.im:
            return ExactScalar(self.re * o.re)
        return ExactScalar(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __truediv__(self, o):
        o = _coerce(o)
        if o is NotImplemented:
            return o
        d = o.re * o.re + o.im * o.im
        if d == 0:
            raise ZeroDivisionError("division by exact zero")
        return ExactScalar(
            (self.re * o.re + self.im * o.im) / d, (self.im * o.re - self.re * o.im) / d
        )

    def __rtruediv__(self, o):
        o = _coerce(o)
        if o is NotImplemented:
            return o
        return o / self

    def __neg__(self):
        return ExactScalar(-self.re, -self.im)

    def __pos__(self):
        return self

    def __pow__(self, n: int):
        if not isinstance(n, int):
            raise TypeError("only integer powers are exact")
        if n < 0:
            return ONE / (self ** (-n))
        out = ONE
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, o):
        o = _coerce(o)
        if o is NotImplemented:
            return False
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def conj(self) -> "ExactScalar":
        return ExactScalar(self.re, -self.im)

    def abs2(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    @property
    def is_real(self) -> bool:
        return self.im == 0

    @property
    def is_imag(self) -> bool:
        return self.re == 0

    def to_complex(self) -> complex:
        return complex(float(self.re), float(self.im))

    def __complex__(self):
        return self.to_complex()

    def __repr__(self):
        return f"ExactScalar({self})"

    def __str__(self):
        if not self.im:
            return str(self.re)
        if not self.re:
            return f"{self.im}i"
        sign = "+" if self.im > 0 else "-"
        return f"{self.re}{sign}{abs(self.im)}i"


def _coerce(o):
    if isinstance(o, ExactScalar):
        return o
    if isinstance(o, (int, Fraction)):
        return ExactScalar(o)
    return NotImplemented


ZERO = ExactScalar(0)
ONE = ExactScalar(1)
I = ExactScalar(0, 1)


def S(x) -> ExactScalar:
    """Shorthand constructor accepting ints, Fractions, 'p/q' or '3+2i' strings."""
    if isinstance(x, str):
        return ExactScalar.parse(x)
    return ExactScalar.of(x)


class ExactMatrix:
    """Dense immutable matrix over ExactScalar."""

    __slots__ = ("rows", "cols", "_e")

    def __init__(self, entries: Sequence[Sequence]):
        rows = tuple(tuple(ExactScalar.of(x) for x in row) for row in entries)
        if rows:
            n = len(rows[0])
            if any(len(r) != n for r in rows):
                raise ShapeError("ragged matrix rows")
        else:
            n = 0
        object.__setattr__(self, "_e", rows)
        object.__setattr__(self, "rows", len(rows))
        object.__setattr__(self, "cols", n)

    def __setattr__(self, name, value):
        raise AttributeError("ExactMatrix is immutable")

    @classmethod
    def _raw(cls, rows: tuple, ncols: int | None = None) -> "ExactMatrix":
        m = object.__new__(cls)
        object.__setattr__(m, "_e", rows)
        object.__setattr__(m, "rows", len(rows))
        object.__setattr__(m, "cols", len(rows[0]) if rows else (ncols or 0))
        return m

    @classmethod
    def zeros(cls, r: int, c: int) -> "ExactMatrix":
        return cls._raw(tuple((ZERO,) * c for _ in range(r)), c)

    @classmethod
    def identity(cls, n: int) -> "ExactMatrix":
        return cls._raw(tuple(tuple(ONE if i == j else ZERO for j in range(n)) for i in range(n)))

    @classmethod
    def diag(cls, values: Iterable) -> "ExactMatrix":
        v = [ExactScalar.of(x) for x in values]
        n = len(v)
        return cls._raw(tuple(tuple(v[i] if i == j else ZERO for j in range(n)) for i in range(n)))

    @classmethod
    def column(cls, values: Iterable) -> "ExactMatrix":
        return cls([[x] for x in values])

    @classmethod
    def from_function(cls, r: int, c: int, f) -> "ExactMatrix":
        return cls([[f(i, j) for j in range(c)] for i in range(r)])

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def __getitem__(self, ij):
        i, j = ij
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(f"index {ij} out of bounds for shape {self.shape}")
        return self._e[i][j]

    def row(self, i: int) -> tuple:
        return self._e[i]

    def tolist(self) -> list[list[ExactScalar]]:
        return [list(r) for r in self._e]

    def flat(self) -> list[ExactScalar]:
        """Row-major entries."""
        return [x for r in self._e for x in r]

    def __eq__(self, o):
        return isinstance(o, ExactMatrix) and self._e == o._e and self.shape == o.shape

    def __hash__(self):
        return hash(self._e)

    def _check_same(self, o):
        if self.shape != o.shape:
            raise ShapeError(f"shape mismatch {self.shape} vs {o.shape}")

    def __add__(self, o):
        self._check_same(o)
        return ExactMatrix._raw(
            tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(self._e, o._e)), self.cols
        )

    def __sub__(self, o):
        self._check_same(o)
        return ExactMatrix._raw(
            tuple(tuple(a - b for a, b in zip(r, s)) for r, s in zip(self._e, o._e)), self.cols
        )

    def __neg__(self):
        return ExactMatrix._raw(tuple(tuple(-a for a in r) for r in self._e), self.cols)

    def scale(self, c) -> "ExactMatrix":
        c = ExactScalar.of(c)
        return ExactMatrix._raw(tuple(tuple(c * a for a in r) for r in self._e), self.cols)

    def __mul__(self, o):
        if isinstance(o, ExactMatrix):
            return mat_mul(self, o)
        return self.scale(o)

    def __rmul__(self, c):
        return self.scale(c)

    def __matmul__(self, o):
        return mat_mul(self, o)

    @property
    def T(self) -> "ExactMatrix":
        return ExactMatrix._raw(tuple(zip(*self._e)) if self.rows else (), self.rows)

    def conj(self) -> "ExactMatrix":
        return ExactMatrix._raw(tuple(tuple(a.conj() for a in r) for r in self._e), self.cols)

    @property
    def H(self) -> "ExactMatrix":
        return self.T.conj()

    def trace(self) -> ExactScalar:
        if self.rows != self.cols:
            raise ShapeError("trace of non-square matrix")
        out = ZERO
        for i in range(self.rows):
            out = out + self._e[i][i]
        return out

    def is_zero(self) -> bool:
        return all(not a for r in self._e for a in r)

    def kron(self, o: "ExactMatrix") -> "ExactMatrix":
        rows = []
        for r in self._e:
            for s in o._e:
                rows.append(tuple(a * b for a in r for b in s))
        return ExactMatrix._raw(tuple(rows), self.cols * o.cols)

    def commutator(self, o: "ExactMatrix") -> "ExactMatrix":
        return self @ o - o @ self

    def anticommutator(self, o: "ExactMatrix") -> "ExactMatrix":
        return self @ o + o @ self

    def map(self, f) -> "ExactMatrix":
        return ExactMatrix([[f(a) for a in r] for r in self._e])

    def vstack(self, o: "ExactMatrix") -> "ExactMatrix":
        if self.rows and o.rows and self.cols != o.cols:
            raise ShapeError("vstack column mismatch")
        return ExactMatrix._raw(self._e + o._e, self.cols or o.cols)

    def to_numpy(self) -> np.ndarray:
        return np.array([[a.to_complex() for a in r] for r in self._e], dtype=complex).reshape(
            self.rows, self.cols
        )

    def __repr__(self):
        body = "; ".join(", ".join(str(a) for a in r) for r in self._e)
        return f"ExactMatrix[{body}]"


def mat_mul(a: ExactMatrix, b: ExactMatrix) -> ExactMatrix:
    if a.cols != b.rows:
        raise ShapeError(f"cannot multiply {a.shape} by {b.shape}")
    bt = b.T._e
    out = []
    for r in a._e:
        nz = [(k, x) for k, x in enumerate(r) if x]
        row = []
        for col in bt:
            acc = ZERO
            for k, x in nz:
                y = col[k]
                if y:
                    acc = acc + x * y
            row.append(acc)
        out.append(tuple(row))
    return ExactMatrix._raw(tuple(out), b.cols)


# ---------------------------------------------------------------------------
# fraction-free elimination over the Gaussian integers


def _gmul(a, b):
    return (a[0] * b[0] - a[1] * b[1], a[0] * b[1] + a[1] * b[0])


def _row_to_gauss(row: Sequence[ExactScalar]) -> dict:
    den = 1
    for x in row:
        if x:
            den = den * x.re.denominator // gcd(den, x.re.denominator)
            den = den * x.im.denominator // gcd(den, x.im.denominator)
    out = {}
    for j, x in enumerate(row):
        if x:
            out[j] = (int(x.re * den), int(x.im * den))
    return _primitive(out)


def _primitive(r: dict) -> dict:
    g = 0
    for a, b in r.values():
        g = gcd(g, gcd(a, b))
        if g == 1:
            return r
    if g > 1:
        return {j: (a // g, b // g) for j, (a, b) in r.items()}
    return r


def _echelon(rows: list[dict], ncols: int):
    """Gauss-Jordan reduction with fraction-free row updates.

    Pivot choice: first row (in stable order) with a nonzero entry in the
    current column. Returns (pivot_rows, pivot_cols) in pivot order.
    """
    rows = [r for r in rows if r]
    pivots: list[int] = []
    prow: list[dict] = []
    for c in range(ncols):
        idx = next((k for k, r in enumerate(rows) if c in r), None)
        if idx is None:
            continue
        piv = rows.pop(idx)
        p = piv[c]
        new_rows = []
        for r in rows:
            f = r.get(c)
            if f is None:
                new_rows.append(r)
                continue
            r2 = _combine(r, p, piv, f)
            if r2:
                new_rows.append(r2)
        rows = new_rows
        for k, r in enumerate(prow):
            f = r.get(c)
            if f is not None:
                prow[k] = _combine(r, p, piv, f)
        pivots.append(c)
        prow.append(piv)
    return prow, pivots


def _combine(r: dict, p, piv: dict, f) -> dict:
    # p*r - f*piv, then strip integer content
    out = {}
    for j, v in r.items():
        out[j] = _gmul(p, v)
    for j, v in piv.items():
        w = _gmul(f, v)
        if j in out:
            a = out[j]
            s = (a[0] - w[0], a[1] - w[1])
            if s == (0, 0):
                del out[j]
            else:
                out[j] = s
        else:
            out[j] = (-w[0], -w[1])
    return _primitive(out)


@dataclass(frozen=True)
class ConstraintSystem:
    """Exact linear system M·x = 0 with its rank and a reduced nullspace basis."""

    matrix: ExactMatrix
    rank: int
    nullspace: tuple
    unknown_labels: tuple
    pivots: tuple = field(default=(), repr=False)

    @property
    def unknowns(self) -> int:
        return self.matrix.cols

    @property
    def nullity(self) -> int:
        return len(self.nullspace)

    def nullspace_matrix(self) -> ExactMatrix:
        """Columns are the nullspace basis vectors."""
        if not self.nullspace:
            return ExactMatrix._raw((), 0) if self.unknowns == 0 else ExactMatrix.zeros(self.unknowns, 0)
        return ExactMatrix._raw(
            tuple(tuple(v[i, 0] for v in self.nullspace) for i in range(self.unknowns))
        )

    def satisfied_by(self, v) -> bool:
        col = v if isinstance(v, ExactMatrix) else ExactMatrix.column(v)
        return (self.matrix @ col).is_zero()

    def contains_row(self, form: Sequence) -> bool:
        """Row-space membership: the form annihilates every nullspace vector."""
        form = [ExactScalar.of(x) for x in form]
        if len(form) != self.unknowns:
            raise ShapeError("linear form length does not match unknown count")
        nz = [(j, x) for j, x in enumerate(form) if x]
        for v in self.nullspace:
            acc = ZERO
            for j, x in nz:
                y = v[j, 0]
                if y:
                    acc = acc + x * y
            if acc:
                return False
        return True

    def same_row_space(self, other: "ConstraintSystem") -> bool:
        if self.unknowns != other.unknowns or self.rank != other.rank:
            return False
        return all(other.satisfied_by(v) for v in self.nullspace)

    def labelled_nullspace(self) -> list[dict]:
        out = []
        for v in self.nullspace:
            out.append({lab: v[i, 0] for i, lab in enumerate(self.unknown_labels) if v[i, 0]})
        return out


def rank_nullspace(m: ExactMatrix, labels: Sequence[str] | None = None) -> ConstraintSystem:
    n = m.cols
    if labels is None:
        labels = tuple(f"x{j}" for j in range(n))
    elif len(labels) != n:
        raise ShapeError("label count does not match column count")
    rows = [_row_to_gauss(r) for r in m._e]
    prow, pivots = _echelon(rows, n)
    pivot_set = set(pivots)
    basis = []
    for f in range(n):
        if f in pivot_set:
            continue
        vre = [Fraction(0)] * n
        vim = [Fraction(0)] * n
        vre[f] = Fraction(1)
        for r, c in zip(prow, pivots):
            a = r.get(f)
            if a is None:
                continue
            p = r[c]
            # -a/p
            d = p[0] * p[0] + p[1] * p[1]
            num = _gmul(a, (p[0], -p[1]))
            vre[c] = Fraction(-num[0], d)
            vim[c] = Fraction(-num[1], d)
        basis.append(_integerize(vre, vim))
    return ConstraintSystem(m, len(pivots), tuple(basis), tuple(labels), tuple(pivots))


def _integerize(vre, vim) -> ExactMatrix:
    den = 1
    for x in vre + vim:
        if x:
            den = den * x.denominator // gcd(den, x.denominator)
    ints = [(int(a * den), int(b * den)) for a, b in zip(vre, vim)]
    g = 0
    for a, b in ints:
        g = gcd(g, gcd(a, b))
    if g > 1:
        ints = [(a // g, b // g) for a, b in ints]
    return ExactMatrix._raw(tuple((ExactScalar(a, b),) for a, b in ints), 1)


def rank(m: ExactMatrix) -> int:
    prow, _ = _echelon([_row_to_gauss(r) for r in m._e], m.cols)
    return len(prow)


def stack_rows(forms: Iterable[Sequence]) -> ExactMatrix:
    return ExactMatrix([list(f) for f in forms])


# ---------------------------------------------------------------------------
# polynomials


class ExactPoly:
    """Univariate polynomial with ExactScalar coefficients, ascending degree."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        c = [ExactScalar.of(x) for x in coeffs]
        while c and not c[-1]:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    def __setattr__(self, name, value):
        raise AttributeError("ExactPoly is immutable")

    @classmethod
    def x(cls) -> "ExactPoly":
        return cls([0, 1])

    @classmethod
    def const(cls, c) -> "ExactPoly":
        return cls([c])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> ExactScalar:
        return self.coeffs[-1] if self.coeffs else ZERO

    def __getitem__(self, k: int) -> ExactScalar:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else ZERO

    @staticmethod
    def _of(o) -> "ExactPoly":
        if isinstance(o, ExactPoly):
            return o
        return ExactPoly([o])

    def __add__(self, o):
        o = ExactPoly._of(o)
        n = max(len(self.coeffs), len(o.coeffs))
        return ExactPoly([self[k] + o[k] for k in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return ExactPoly([-c for c in self.coeffs])

    def __sub__(self, o):
        return self + (-ExactPoly._of(o))

    def __rsub__(self, o):
        return ExactPoly._of(o) - self

    def __mul__(self, o):
        o = ExactPoly._of(o)
        if self.is_zero() or o.is_zero():
            return ExactPoly()
        out = [ZERO] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(o.coeffs):
                if b:
                    out[i + j] = out[i + j] + a * b
        return ExactPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        out = ExactPoly([1])
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, o):
        if isinstance(o, (int, Fraction, ExactScalar)):
            o = ExactPoly([o])
        return isinstance(o, ExactPoly) and self.coeffs == o.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __call__(self, x):
        x = ExactScalar.of(x)
        acc = ZERO
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def divmod(self, d: "ExactPoly") -> tuple["ExactPoly", "ExactPoly"]:
        if d.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        q = [ZERO] * max(len(rem) - d.degree, 1)
        lead = d.leading
        while len(rem) - 1 >= d.degree and any(rem):
            shift = len(rem) - 1 - d.degree
            f = rem[-1] / lead
            q[shift] = f
            for k, c in enumerate(d.coeffs):
                rem[k + shift] = rem[k + shift] - f * c
            rem.pop()
            while rem and not rem[-1]:
                rem.pop()
        return ExactPoly(q), ExactPoly(rem)

    def monic(self) -> "ExactPoly":
        if self.is_zero():
            raise DegenerateInputError("zero polynomial has no leading coefficient")
        lead = self.leading
        return ExactPoly([c / lead for c in self.coeffs])

    def in_square(self) -> "ExactPoly":
        """Rewrite an even polynomial in E as a polynomial in E**2."""
        if any(self.coeffs[k] for k in range(1, len(self.coeffs), 2)):
            raise ValueError("polynomial is not even")
        return ExactPoly(self.coeffs[::2])

    def to_numpy_roots(self) -> np.ndarray:
        if self.degree < 1:
            return np.array([], dtype=complex)
        return np.roots([c.to_complex() for c in reversed(self.coeffs)])

    def __repr__(self):
        return f"ExactPoly({self})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            cs = f"({c})" if (c.re and c.im) else str(c)
            terms.append(cs if k == 0 else f"{cs}*x^{k}")
        return " + ".join(terms)


def det_poly(m: Sequence[Sequence]) -> ExactPoly:
    """Determinant of a square matrix of ExactPoly by memoized cofactor expansion."""
    n = len(m)
    if any(len(r) != n for r in m):
        raise ShapeError("det_poly needs a square matrix")
    if n == 0:
        return ExactPoly([1])
    rows = [[ExactPoly._of(x) for x in r] for r in m]
    memo: dict[int, ExactPoly] = {}

    def minor(i: int, mask: int) -> ExactPoly:
        # determinant of rows i.. with the columns in mask
        if i == n:
            return ExactPoly([1])
        got = memo.get(mask)
        if got is not None:
            return got
        acc = ExactPoly()
        sign = 1
        for j in range(n):
            if not (mask >> j) & 1:
                continue
            e = rows[i][j]
            if not e.is_zero():
                sub = minor(i + 1, mask & ~(1 << j))
                if not sub.is_zero():
                    term = e * sub
                    acc = acc + term if sign > 0 else acc - term
            sign = -sign
        memo[mask] = acc
        return acc

    return minor(0, (1 << n) - 1)


def det(m: ExactMatrix) -> ExactScalar:
    if m.rows != m.cols:
        raise ShapeError("determinant of non-square matrix")
    return det_poly([[ExactPoly([x]) for x in r] for r in m._e])[0]


# ---------------------------------------------------------------------------
# rational roots


def _divisors(n: int) -> list[int]:
    n = abs(n)
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


@dataclass(frozen=True)
class RootReport:
    roots: tuple  # ((Fraction root, multiplicity), ...)
    unresolved: ExactPoly  # exact cofactor without rational roots
    approximations: tuple  # complex floats for the unresolved roots; not exact

    @property
    def exact(self) -> bool:
        return self.unresolved.degree <= 0

    def multiplicity(self, r) -> int:
        r = Fraction(r)
        return next((m for x, m in self.roots if x == r), 0)


def _integer_coeffs(p: ExactPoly, part: str) -> list[int]:
    vals = [getattr(c, part) for c in p.coeffs]
    den = 1
    for v in vals:
        den = den * v.denominator // gcd(den, v.denominator)
    return [int(v * den) for v in vals]


def rational_root_masses(p: ExactPoly) -> RootReport:
    """All rational roots of p with multiplicity; the rest reported as an exact factor."""
    if p.is_zero():
        raise DegenerateInputError("zero polynomial")
    rest = p.monic()
    found: dict[Fraction, int] = {}
    while rest.degree >= 1:
        real_part = ExactPoly([c.re for c in rest.coeffs])
        imag_part = ExactPoly([c.im for c in rest.coeffs])
        guide = real_part if not real_part.is_zero() else imag_part
        ints = _integer_coeffs(guide, "re")
        root = None
        if not rest(0):
            root = Fraction(0)
        else:
            low = next(v for v in ints if v)
            for q in _divisors(ints[-1]):
                for pnum in _divisors(low):
                    for cand in (Fraction(pnum, q), Fraction(-pnum, q)):
                        if not rest(cand):
                            root = cand
                            break
                    if root is not None:
                        break
                if root is not None:
                    break
        if root is None:
            break
        rest, rem = rest.divmod(ExactPoly([-root, 1]))
        assert rem.is_zero()
        found[root] = found.get(root, 0) + 1
    roots = tuple(sorted(found.items()))
    approx = tuple(complex(z) for z in rest.to_numpy_roots())
    return RootReport(roots, rest, approx)


def frac_sqrt(x) -> Fraction | None:
    """Exact square root of a non-negative rational, or None when irrational."""
    x = Fraction(x)
    if x < 0:
        return None
    a, b = isqrt(x.numerator), isqrt(x.denominator)
    if a * a == x.numerator and b * b == x.denominator:
        return Fraction(a, b)
    return None
