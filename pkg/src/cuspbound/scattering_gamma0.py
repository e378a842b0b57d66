"""Scattering functions and constants of Gamma_0(N) for the pairs (0, inf), (a, inf), (a, 0).

Every constant has the shape (pi C / 3 + sum_p c_p log p) / v with rational
c_p. The coefficients are accumulated as Fractions per prime and only turned
into floats at the end, so algebraically equal constants come out bitwise
equal.
"""
from __future__ import annotations

import json
import math
from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from .arith import divisors, euler_phi, factorize, prime_divisors
from .eisenstein_level1 import scattering_constant_level1, scattering_phi_level1
from .gamma0 import Cusp, cusp_set, cusps_equivalent, infinity_cusp, volume, zero_cusp
from .oracles import constant_at_pole, residue_at_pole

LogCombination = dict  # prime -> Fraction coefficient of log p


def _add_log(acc: dict, value: Fraction | int, coeff: Fraction) -> None:
    """acc += coeff * log(value) for a positive rational value."""
    value = Fraction(value)
    for p, e in factorize(value.numerator):
        acc[p] += coeff * e
    for p, e in factorize(value.denominator):
        acc[p] -= coeff * e


def _eval_logs(acc: dict) -> float:
    return math.fsum(float(c) * math.log(p) for p, c in sorted(acc.items()) if c)


@dataclass(frozen=True)
class ScatteringReport:
    pair: tuple[Cusp, Cusp]
    N: int
    n: int
    constant: float
    terms: dict = field(default_factory=dict)
    residue_check: float | None = None
    limit: float | None = None
    limit_error: float | None = None

    def to_dict(self) -> dict:
        def r(v):
            return None if v is None else float(f"{v:.12g}")

        return {
            "pair": [str(c) for c in self.pair],
            "n": self.n,
            "constant": r(self.constant),
            "terms": {k: r(v) for k, v in self.terms.items()},
            "residue_check": r(self.residue_check),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


# --- scattering functions ----------------------------------------------------


def scattering_fn_0inf(s: float, N: int) -> float:
    """phi(s) N^-s prod_{p | N} (p^(2s) - p)/(p^(2s) - 1)."""
    out = scattering_phi_level1(s) * float(N) ** (-s)
    for p in prime_divisors(N):
        out *= (p ** (2 * s) - p) / (p ** (2 * s) - 1)
    return out


def scattering_fn_a_inf(s: float, n: int, N: int) -> float:
    """phi_{a inf}(s) for a cusp a = m/n: (phi(n)/phi(g)) phi(s) F(s), g = gcd(n, N/n)."""
    g = gcd(n, N // n)
    f = (g / (n * N)) ** s
    for p in prime_divisors(N):
        f /= 1.0 - float(p) ** (-2.0 * s)
    for q in prime_divisors(N // n):
        f *= 1.0 - float(q) ** (1.0 - 2.0 * s)
    return euler_phi(n) / euler_phi(g) * scattering_phi_level1(s) * f


def scattering_fn_a_0(s: float, n: int, N: int) -> float:
    """phi_{a0}(s) for a = m/n: (phi(N/n)/phi(g)) phi(s) G(s)."""
    g = gcd(n, N // n)
    f = (gcd(n * n, N) / N**2) ** s
    for p in prime_divisors(N):
        f /= 1.0 - float(p) ** (-2.0 * s)
    for q in prime_divisors(n):
        f *= 1.0 - float(q) ** (1.0 - 2.0 * s)
    return euler_phi(N // n) / euler_phi(g) * scattering_phi_level1(s) * f


# --- closed-form constants ------------------------------------------------------


def _logs_0inf(N: int) -> dict[str, dict]:
    level, primes = defaultdict(Fraction), defaultdict(Fraction)
    _add_log(level, N, Fraction(-1))
    for p in prime_divisors(N):
        primes[p] += Fraction(2 * p, p * p - 1)
    return {"log_term": level, "prime_sum": primes}


def _logs_a_inf(n: int, N: int) -> dict[str, dict]:
    g = gcd(n, N // n)
    level, neg, pos = defaultdict(Fraction), defaultdict(Fraction), defaultdict(Fraction)
    _add_log(level, Fraction(g, n * N), Fraction(1))
    for p in prime_divisors(N):
        neg[p] -= Fraction(2, p * p - 1)
    for p in prime_divisors(N // n):
        pos[p] += Fraction(2, p - 1)
    return {"log_term": level, "prime_sum_level": neg, "prime_sum_cusp": pos}


def _logs_a_0(n: int, N: int) -> dict[str, dict]:
    level, neg, pos = defaultdict(Fraction), defaultdict(Fraction), defaultdict(Fraction)
    _add_log(level, Fraction(gcd(n * n, N), N * N), Fraction(1))
    for p in prime_divisors(N):
        neg[p] -= Fraction(2, p * p - 1)
    for p in prime_divisors(n):
        pos[p] += Fraction(2, p - 1)
    return {"log_term": level, "prime_sum_level": neg, "prime_sum_cusp": pos}


def _combine(groups: dict[str, dict]) -> dict:
    total = defaultdict(Fraction)
    for acc in groups.values():
        for p, c in acc.items():
            total[p] += c
    return total


def _closed_form(groups: dict[str, dict], N: int) -> tuple[float, dict]:
    lead = math.pi / 3.0 * scattering_constant_level1()
    v = volume(N)
    terms = {"pi_over_3_C": lead}
    terms.update({name: _eval_logs(acc) for name, acc in groups.items()})
    return (lead + _eval_logs(_combine(groups))) / v, terms


def constant_0inf(N: int) -> float:
    return _closed_form(_logs_0inf(N), N)[0]


def constant_a_inf(n: int, N: int) -> float:
    _check_divisor(n, N)
    return _closed_form(_logs_a_inf(n, N), N)[0]


def constant_a_0(n: int, N: int) -> float:
    _check_divisor(n, N)
    return _closed_form(_logs_a_0(n, N), N)[0]


def _check_divisor(n: int, N: int) -> None:
    if n < 1 or N % n:
        raise ValueError(f"cusp denominator {n} does not divide N = {N}")


def _check_cusp(a: Cusp, N: int) -> None:
    _check_divisor(a.n, N)
    if not any(cusps_equivalent(a, b, N) for b in cusp_set(N)):
        raise ValueError(f"{a} is not a cusp of Gamma_0({N})")


# --- reports ------------------------------------------------------------------------


def _report(pair, N, n, groups, fn, check: bool) -> ScatteringReport:
    const, terms = _closed_form(groups, N)
    residue = limit = err = None
    if check:
        v = volume(N)
        residue = residue_at_pole(fn)[0] * v
        limit, err = constant_at_pole(fn, 1.0 / v)
    return ScatteringReport(pair, N, n, const, terms, residue, limit, err)


def scattering_const_0inf(N: int, check: bool = True) -> ScatteringReport:
    """C_{0 inf} = (pi C/3 - log N + sum_{p|N} 2 p log p/(p^2 - 1))/v."""
    return _report((zero_cusp(N), infinity_cusp(N)), N, 1, _logs_0inf(N),
                   lambda s: scattering_fn_0inf(s, N), check)


def scattering_const_a_inf(a: Cusp, N: int, check: bool = True) -> ScatteringReport:
    """C_{a inf}; depends on a = m/n only through n."""
    _check_cusp(a, N)
    return _report((a, infinity_cusp(N)), N, a.n, _logs_a_inf(a.n, N),
                   lambda s: scattering_fn_a_inf(s, a.n, N), check)


def scattering_const_a_0(a: Cusp, N: int, check: bool = True) -> ScatteringReport:
    """C_{a0}; depends on a = m/n only through n."""
    _check_cusp(a, N)
    return _report((a, zero_cusp(N)), N, a.n, _logs_a_0(a.n, N),
                   lambda s: scattering_fn_a_0(s, a.n, N), check)


def all_pair_reports(N: int, check: bool = True) -> list[ScatteringReport]:
    """The (0, inf) report followed by (a, inf) and (a, 0) for every cusp class a."""
    out = [scattering_const_0inf(N, check)]
    for a in cusp_set(N):
        out.append(scattering_const_a_inf(a, N, check))
    for a in cusp_set(N):
        out.append(scattering_const_a_0(a, N, check))
    return out


# --- cusp sums -------------------------------------------------------------------------


def _class_count(n: int, N: int) -> int:
    return euler_phi(gcd(n, N // n))


def cusp_sum_a_inf(N: int) -> float:
    """sum of C_{a inf} over cusp classes a other than infinity (n != N)."""
    return math.fsum(_class_count(n, N) * constant_a_inf(n, N) for n in divisors(N) if n != N)


def cusp_sum_a_0(N: int) -> float:
    """sum of C_{a0} over cusp classes a other than 0 (n != 1)."""
    return math.fsum(_class_count(n, N) * constant_a_0(n, N) for n in divisors(N) if n != 1)
