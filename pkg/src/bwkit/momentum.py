"""Four-momenta in the Euclidean convention (p1, p2, p3, p4 = iE).

Index 4 is time throughout the package. Contractions use delta_{mu nu}, so
p.p = |p|^2 - E^2 = -mass^2 on shell.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .exact import ExactScalar, frac_sqrt


class OffShellError(ValueError):
    pass


@dataclass(frozen=True)
class FourMomentum:
    p1: Fraction
    p2: Fraction
    p3: Fraction
    E: Fraction
    mass: Fraction | None = None

    def __post_init__(self):
        for name in ("p1", "p2", "p3", "E"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))
        if self.mass is not None:
            m = Fraction(self.mass)
            object.__setattr__(self, "mass", m)
            if m < 0:
                raise ValueError("mass must be non-negative")
            if self.E * self.E - self.p_sq != m * m:
                raise OffShellError(
                    f"E^2 - |p|^2 = {self.E * self.E - self.p_sq} differs from mass^2 = {m * m}"
                )

    @classmethod
    def on_shell(cls, p1, p2, p3, mass) -> "FourMomentum":
        """Build an on-shell momentum; E must come out rational."""
        p1, p2, p3, mass = (Fraction(x) for x in (p1, p2, p3, mass))
        e = frac_sqrt(p1 * p1 + p2 * p2 + p3 * p3 + mass * mass)
        if e is None:
            raise OffShellError("energy is irrational for this momentum and mass")
        return cls(p1, p2, p3, e, mass)

    @classmethod
    def off_shell(cls, p1, p2, p3, E) -> "FourMomentum":
        return cls(p1, p2, p3, E, None)

    @property
    def spatial(self) -> tuple[Fraction, Fraction, Fraction]:
        return (self.p1, self.p2, self.p3)

    @property
    def p_sq(self) -> Fraction:
        return self.p1 * self.p1 + self.p2 * self.p2 + self.p3 * self.p3

    @property
    def abs_p(self) -> Fraction | None:
        return frac_sqrt(self.p_sq)

    @property
    def rho(self) -> Fraction | None:
        """sqrt(p1^2 + p2^2) when rational."""
        return frac_sqrt(self.p1 * self.p1 + self.p2 * self.p2)

    @property
    def invariant_mass2(self) -> Fraction:
        return self.E * self.E - self.p_sq

    @property
    def p4(self) -> ExactScalar:
        return ExactScalar(0, self.E)

    def euclid(self) -> tuple[ExactScalar, ...]:
        """Components (p1, p2, p3, iE)."""
        return (ExactScalar(self.p1), ExactScalar(self.p2), ExactScalar(self.p3), self.p4)

    def square(self) -> Fraction:
        """Euclidean p.p = |p|^2 - E^2."""
        return self.p_sq - self.E * self.E

    def reversed(self) -> "FourMomentum":
        """Same energy, opposite 3-momentum."""
        return FourMomentum(-self.p1, -self.p2, -self.p3, self.E, self.mass)

    @property
    def p_r(self) -> ExactScalar:
        return ExactScalar(self.p1, self.p2)

    @property
    def p_l(self) -> ExactScalar:
        return ExactScalar(self.p1, -self.p2)


def rest_frame(mass) -> FourMomentum:
    m = Fraction(mass)
    return FourMomentum(0, 0, 0, m, m)


def pythagorean_momenta(limit: int = 14, need_abs_p: bool = False, need_rho: bool = False):
    """Integer on-shell momenta with rational E (and optionally |p|, rho).

    Yields (p1, p2, p3, m) ordered deterministically.
    """
    out = []
    for p1 in range(-limit, limit + 1):
        for p2 in range(-limit, limit + 1):
            r2 = p1 * p1 + p2 * p2
            if need_rho and (r2 == 0 or frac_sqrt(r2) is None):
                continue
            for p3 in range(-limit, limit + 1):
                a2 = r2 + p3 * p3
                if need_abs_p and (a2 == 0 or frac_sqrt(a2) is None):
                    continue
                for m in range(1, 3 * limit):
                    if frac_sqrt(a2 + m * m) is not None:
                        out.append((p1, p2, p3, m))
    return out


def sample_on_shell(n: int, seed: int = 0, **kw) -> list[FourMomentum]:
    pool = pythagorean_momenta(**kw)
    rng = random.Random(seed)
    picks = rng.sample(pool, n)
    return [FourMomentum.on_shell(*t) for t in picks]


def sample_off_shell(n: int, seed: int = 0) -> list[tuple[FourMomentum, Fraction]]:
    """Random exact momenta paired with a mass they are not on shell for."""
    rng = random.Random(seed)
    out = []
    while len(out) < n:
        p = [Fraction(rng.randint(-6, 6), rng.randint(1, 3)) for _ in range(3)]
        E = Fraction(rng.randint(1, 12), rng.randint(1, 3))
        m = Fraction(rng.randint(1, 9), rng.randint(1, 3))
        if E * E - sum(x * x for x in p) != m * m:
            out.append((FourMomentum.off_shell(*p, E), m))
    return out
