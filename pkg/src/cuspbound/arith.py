"""Exact multiplicative number theory on small positive integers."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt
from typing import Iterator


def _check_positive(n: int, name: str = "n") -> int:
    if isinstance(n, bool) or int(n) != n:
        raise TypeError(f"{name} must be an integer, got {n!r}")
    n = int(n)
    if n < 1:
        raise ValueError(f"{name} must be >= 1, got {n}")
    return n


@dataclass(frozen=True)
class PrimeFactorization:
    """Prime powers ``(p, e)`` in increasing ``p``."""

    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        last = 1
        for p, e in self.pairs:
            if p <= last or e < 1:
                raise ValueError(f"malformed factorization {self.pairs}")
            last = p

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.pairs)

    def value(self) -> int:
        out = 1
        for p, e in self.pairs:
            out *= p**e
        return out

    def as_dict(self) -> dict[int, int]:
        return dict(self.pairs)

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(self.pairs)

    def __len__(self) -> int:
        return len(self.pairs)


def factorize(n: int) -> PrimeFactorization:
    """Trial division; ``factorize(1)`` is the empty factorization."""
    n = _check_positive(n, "N")
    pairs = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            pairs.append((p, e))
        p += 1 if p == 2 else 2
    if n > 1:
        pairs.append((n, 1))
    return PrimeFactorization(tuple(pairs))


def prime_divisors(n: int) -> tuple[int, ...]:
    return factorize(n).primes


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    for d in range(3, isqrt(n) + 1, 2):
        if n % d == 0:
            return False
    return True


def primes_in_range(lo: int, hi: int) -> list[int]:
    """Primes ``p`` with ``lo <= p <= hi`` (sieve of Eratosthenes)."""
    if hi < 2:
        return []
    sieve = bytearray([1]) * (hi + 1)
    sieve[0] = sieve[1] = 0
    for p in range(2, isqrt(hi) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytearray(len(range(p * p, hi + 1, p)))
    return [p for p in range(max(lo, 2), hi + 1) if sieve[p]]


def euler_phi(n: int) -> int:
    n = _check_positive(n)
    out = n
    for p in factorize(n).primes:
        out -= out // p
    return out


def moebius(n: int) -> int:
    n = _check_positive(n)
    fac = factorize(n)
    if any(e > 1 for _, e in fac):
        return 0
    return -1 if len(fac) % 2 else 1


def divisors(n: int) -> list[int]:
    n = _check_positive(n)
    divs = [1]
    for p, e in factorize(n):
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return sorted(divs)


def residue_symbol(a: int, p: int) -> int:
    """(a/p) for a in {-1, -3}, with the ramified primes sent to 0.

    (-1/2) = 0 and (-3/3) = 0 so that the product formulas for the elliptic
    point counts of Gamma_0(N) agree with direct enumeration.
    """
    if not is_prime(p):
        raise ValueError(f"residue symbol needs a prime modulus, got {p}")
    if a == -1:
        if p == 2:
            return 0
        return 1 if p % 4 == 1 else -1
    if a == -3:
        if p == 3:
            return 0
        return 1 if p % 3 == 1 else -1
    raise ValueError(f"unsupported residue symbol numerator {a}; expected -1 or -3")


def moebius_sum(n: int, power: int = 1) -> Fraction:
    """sum_{d|n} mu(d) / d**power as an exact rational."""
    return sum((Fraction(moebius(d), d**power) for d in divisors(n)), Fraction(0))


def euler_product(n: int, factor) -> Fraction:
    """prod_{p|n} factor(p) for a function returning Fractions."""
    out = Fraction(1)
    for p in prime_divisors(n):
        out *= factor(p)
    return out


__all__ = [
    "PrimeFactorization",
    "factorize",
    "prime_divisors",
    "is_prime",
    "primes_in_range",
    "euler_phi",
    "moebius",
    "divisors",
    "residue_symbol",
    "moebius_sum",
    "euler_product",
    "gcd",
]
