"""Structure of Gamma_0(N): volume, cusps, elliptic points, genus."""
from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from . import _kernels
from .arith import divisors, euler_phi, factorize, residue_symbol

SQRT3 = math.sqrt(3.0)


@dataclass(frozen=True, order=True)
class Cusp:
    """Class representative m/n of a cusp of Gamma_0(N), with n | N.

    The class with n = 1 is the cusp 0 and the class with n = N is the cusp
    infinity (the two coincide when N = 1).
    """

    m: int
    n: int

    def __post_init__(self):
        if self.n < 1 or self.m < 0 or gcd(self.m, self.n) != 1:
            raise ValueError(f"invalid cusp representative {self.m}/{self.n}")

    def width_gcd(self, level: int) -> int:
        return gcd(self.n, level // self.n)

    def __str__(self) -> str:
        return f"{self.m}/{self.n}"

    @classmethod
    def parse(cls, text: str) -> "Cusp":
        m, n = text.split("/")
        return cls(int(m), int(n))


@dataclass(frozen=True)
class EllipticPoint:
    """Fixed point in H of an elliptic element of Gamma_0(N).

    ``x`` is exact; ``y`` is exact for order 2 and ``sqrt(y_sq)`` for order 3.
    """

    order: int
    n_index: int
    x: Fraction
    y_sq: Fraction

    @property
    def y(self) -> float:
        n = self.n_index
        if self.order == 2:
            return 1.0 / (n * n + 1)
        return SQRT3 / (2 * (n * n - n + 1))

    @property
    def z(self) -> complex:
        return complex(float(self.x), self.y)

    def stabilizer(self) -> tuple[int, int, int, int]:
        """An element (a, b, c, d) of Gamma_0(N) of the given order fixing z."""
        n = self.n_index
        if self.order == 2:
            return n, -1, n * n + 1, -n
        return n, -1, n * n - n + 1, 1 - n


@dataclass(frozen=True)
class Gamma0Profile:
    N: int
    volume: float
    volume_over_pi: Fraction
    genus: int
    cusp_count: int
    cusps: tuple[Cusp, ...]
    elliptic: tuple[EllipticPoint, ...]
    nu2: int
    nu3: int
    factorization: tuple[tuple[int, int], ...] = field(default=(), repr=False)

    def to_dict(self) -> dict:
        return {
            "n": self.N,
            "volume_over_pi": f"{self.volume_over_pi.numerator}/{self.volume_over_pi.denominator}",
            "genus": self.genus,
            "cusp_count": self.cusp_count,
            "nu2": self.nu2,
            "nu3": self.nu3,
            "cusps": [str(c) for c in self.cusps],
            "elliptic": [
                {"x": _fmt(float(e.x)), "y": _fmt(e.y), "order": e.order, "n_index": e.n_index}
                for e in self.elliptic
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


def _fmt(v: float) -> float:
    return float(f"{v:.12g}")


def volume_over_pi(N: int) -> Fraction:
    """v / pi = (N/3) prod_{p | N} (1 + 1/p), exactly."""
    out = Fraction(N, 3)
    for p in factorize(N).primes:
        out *= Fraction(p + 1, p)
    return out


def volume(N: int) -> float:
    return math.pi * float(volume_over_pi(N))


def cusp_count(N: int) -> int:
    return sum(euler_phi(gcd(d, N // d)) for d in divisors(N))


def cusp_set(N: int) -> list[Cusp]:
    """One representative per class, ordered by n then m.

    For each n | N and each unit r mod gcd(n, N/n), the representative is the
    least m >= 0 with m = r mod gcd(n, N/n) and gcd(m, n) = 1.
    """
    out = []
    for n in divisors(N):
        g = gcd(n, N // n)
        for r in range(g):
            if gcd(r, g) != 1:
                continue
            m = r
            while gcd(m, n) != 1:
                m += g
            out.append(Cusp(m, n))
    return out


def cusps_equivalent(a: Cusp, b: Cusp, N: int) -> bool:
    """m/n ~ m'/n' under Gamma_0(N) iff n = n' and m = m' mod gcd(n, N/n)."""
    if a.n != b.n:
        return False
    g = gcd(a.n, N // a.n)
    return (a.m - b.m) % g == 0


def zero_cusp(N: int) -> Cusp:
    return Cusp(0, 1)


def infinity_cusp(N: int) -> Cusp:
    return Cusp(1 if N > 1 else 0, N)


def elliptic_points(N: int) -> list[EllipticPoint]:
    """Order-2 points (n + i)/(n^2 + 1) and order-3 points (n + rho)/(n^2 - n + 1).

    Here rho = (-1 + i sqrt 3)/2 and n runs over [0, N) with the respective
    congruence mod N. Order-2 points come first.
    """
    two, three = _kernels.elliptic_roots(N)
    out = []
    for n in two.tolist():
        q = n * n + 1
        out.append(EllipticPoint(2, n, Fraction(n, q), Fraction(1, q * q)))
    for n in three.tolist():
        q = n * n - n + 1
        out.append(EllipticPoint(3, n, Fraction(2 * n - 1, 2 * q), Fraction(3, 4 * q * q)))
    return out


def elliptic_counts(N: int) -> tuple[int, int]:
    """(nu_2, nu_3) from the residue-symbol products."""
    fac = factorize(N).as_dict()
    nu2 = 0 if N % 4 == 0 else math.prod(1 + residue_symbol(-1, p) for p in fac)
    nu3 = 0 if N % 9 == 0 else math.prod(1 + residue_symbol(-3, p) for p in fac)
    return nu2, nu3


def _genus_from(vol_over_pi: Fraction, cusps: int, nu2: int, nu3: int) -> int:
    # v/2pi = 2g - 2 + p + nu2/2 + 2 nu3/3
    two_g = vol_over_pi / 2 + 2 - cusps - Fraction(nu2, 2) - Fraction(2 * nu3, 3)
    g = two_g / 2
    if g.denominator != 1 or g < 0:
        raise ArithmeticError(f"volume formula gives non-integral genus {g}")
    return int(g)


def genus(N: int) -> int:
    nu2, nu3 = elliptic_counts(N)
    return _genus_from(volume_over_pi(N), cusp_count(N), nu2, nu3)


def profile(N: int) -> Gamma0Profile:
    fac = factorize(N)
    vop = volume_over_pi(N)
    cusps = tuple(cusp_set(N))
    ell = tuple(elliptic_points(N))
    nu2 = sum(1 for e in ell if e.order == 2)
    nu3 = len(ell) - nu2
    if (nu2, nu3) != elliptic_counts(N):
        raise ArithmeticError(f"elliptic enumeration disagrees with the closed form at N = {N}")
    return Gamma0Profile(
        N=N,
        volume=math.pi * float(vop),
        volume_over_pi=vop,
        genus=_genus_from(vop, len(cusps), nu2, nu3),
        cusp_count=len(cusps),
        cusps=cusps,
        elliptic=ell,
        nu2=nu2,
        nu3=nu3,
        factorization=fac.pairs,
    )
