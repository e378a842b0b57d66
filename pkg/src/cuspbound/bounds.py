"""Canonical Green's function ledger at the cusps 0, infinity and the large-N sweep."""
from __future__ import annotations

import csv
import io
import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field

from .arith import is_prime
from .gamma0 import Gamma0Profile, profile
from .gamma0n_functions import klf_elliptic_weighted_sum
from .scattering_gamma0 import constant_0inf, cusp_sum_a_0, cusp_sum_a_inf

THREADS_ENV = "CUSPBOUND_THREADS"
PARABOLIC_CONST = math.pi + 4.0 * math.pi**2 / 3.0 + 1.0

SWEEP_COLUMNS = ("n", "genus", "volume", "main", "cusp_corr", "elliptic_corr",
                 "delta_bound", "total", "ratio", "abs_err")
SENSITIVITY_COLUMNS = ("total_cx_logn", "ratio_cx_logn")


class GenusError(ValueError):
    """Raised when a bound needs positive genus and the level has genus 0."""


@dataclass(frozen=True)
class BoundInputs:
    """d_x: sup of the canonical over the hyperbolic metric; lambda1: spectral gap;
    c_x: Selberg zeta constant. Only lambda1 has a published lower bound, so
    d_x and c_x are placeholders to be overridden."""

    d_x: float = 1.0
    lambda1: float = 0.21
    c_x: float = 0.0

    def __post_init__(self):
        if not self.d_x > 0:
            raise ValueError("d_x must be positive")
        if not self.lambda1 > 0:
            raise ValueError("lambda1 must be positive")


@dataclass(frozen=True)
class DeltaBound:
    total: float
    terms: dict

    def __float__(self) -> float:
        return self.total


def _require_genus(prof: Gamma0Profile) -> int:
    if prof.genus < 1:
        raise GenusError(f"genus of X_0({prof.N}) is 0; the bound needs genus >= 1")
    return prof.genus


def _orders(prof: Gamma0Profile) -> list[int]:
    return [e.order for e in prof.elliptic]


def delta_x_bound(prof: Gamma0Profile, inputs: BoundInputs = BoundInputs()) -> DeltaBound:
    """Upper bound for the error term, split into its six named pieces."""
    g = _require_genus(prof)
    v = prof.volume
    orders = _orders(prof)
    terms = {
        "elliptic_weight": 4.0 * math.pi / (v * g) * math.fsum(1.0 + 1.0 / k for k in orders),
        "elliptic_order": 4.0 * math.log(2.0) / (v * g) * math.fsum(k + 1.0 for k in orders),
        "spectral": 4.0 * math.pi * (inputs.d_x + 1.0) ** 2 / (inputs.lambda1 * v),
        "volume": 4.0 * math.pi / v,
        "log_4pi": 2.0 * math.log(4.0 * math.pi) / g,
        "parabolic": 2.0 * prof.cusp_count / (g * v) * PARABOLIC_CONST,
    }
    return DeltaBound(math.fsum(terms.values()), terms)


def c_hyp_bound(prof: Gamma0Profile, inputs: BoundInputs = BoundInputs()) -> float:
    """16 pi g^2 (d_x + 1)^2 / (lambda1 v)."""
    g = _require_genus(prof)
    return 16.0 * math.pi * g * g * (inputs.d_x + 1.0) ** 2 / (inputs.lambda1 * prof.volume)


def elliptic_integral_bound(prof: Gamma0Profile) -> float:
    """(4 pi log 2 / v) sum_j (ord e_j - 1)."""
    return 4.0 * math.pi * math.log(2.0) / prof.volume * sum(k - 1 for k in _orders(prof))


def parabolic_remainder_bound(prof: Gamma0Profile) -> float:
    """(4 pi^2/3 + 1) p / (g v)."""
    g = _require_genus(prof)
    return (4.0 * math.pi**2 / 3.0 + 1.0) * prof.cusp_count / (g * prof.volume)


@dataclass(frozen=True)
class BoundLedger:
    N: int
    genus: int
    volume: float
    main_scattering: float
    cusp_sums: float
    selberg_term: float
    elliptic_klf_term: float
    delta_x_bound: DeltaBound
    inputs: BoundInputs = field(default_factory=BoundInputs)

    @property
    def center(self) -> float:
        return math.fsum((self.main_scattering, self.cusp_sums, self.selberg_term, self.elliptic_klf_term))

    @property
    def total_upper(self) -> float:
        return self.center + self.delta_x_bound.total

    @property
    def total_lower(self) -> float:
        return self.center - self.delta_x_bound.total

    def to_dict(self) -> dict:
        def r(v):
            return float(f"{v:.12g}")

        return {
            "n": self.N,
            "genus": self.genus,
            "volume": r(self.volume),
            "inputs": asdict(self.inputs),
            "main_scattering": r(self.main_scattering),
            "cusp_sums": r(self.cusp_sums),
            "selberg_term": r(self.selberg_term),
            "elliptic_klf_term": r(self.elliptic_klf_term),
            "delta_x_bound": r(self.delta_x_bound.total),
            "delta_x_terms": {k: r(v) for k, v in self.delta_x_bound.terms.items()},
            "center": r(self.center),
            "total_lower": r(self.total_lower),
            "total_upper": r(self.total_upper),
        }


def green_can_ledger(N: int, inputs: BoundInputs = BoundInputs()) -> BoundLedger:
    """All terms of the expression for G_can(0, infinity) on X_0(N)."""
    prof = profile(N)
    g = _require_genus(prof)
    v = prof.volume
    return BoundLedger(
        N=N,
        genus=g,
        volume=v,
        main_scattering=4.0 * math.pi * constant_0inf(N),
        cusp_sums=2.0 * math.pi / g * (cusp_sum_a_0(N) + cusp_sum_a_inf(N)),
        selberg_term=4.0 * math.pi * inputs.c_x / (g * v),
        elliptic_klf_term=2.0 * math.pi / g * klf_elliptic_weighted_sum(N),
        delta_x_bound=delta_x_bound(prof, inputs),
        inputs=inputs,
    )


# --- sweep -----------------------------------------------------------------------------


@dataclass(frozen=True)
class SweepRow:
    n: int
    genus: int
    volume: float
    main: float
    cusp_corr: float
    elliptic_corr: float
    delta_bound: float
    total: float
    ratio: float
    abs_err: float
    delta_x: float
    total_cx_logn: float
    ratio_cx_logn: float


def sweep_row(N: int, inputs: BoundInputs = BoundInputs()) -> SweepRow | None:
    """2g(1-g) G_can(0, inf) split into its terms; None when g <= 1."""
    prof = profile(N)
    g = prof.genus
    if g <= 1:
        return None
    v = prof.volume
    scale = 4.0 * math.pi * (1.0 - g)
    main = 8.0 * math.pi * g * (1.0 - g) * constant_0inf(N)
    cusp = scale * (cusp_sum_a_inf(N) + cusp_sum_a_0(N))
    ell = scale * klf_elliptic_weighted_sum(N)
    selberg = 2.0 * scale * inputs.c_x / v
    delta = delta_x_bound(prof, inputs).total
    total = math.fsum((main, cusp, ell, selberg))
    norm = 2.0 * g * math.log(N)
    total_log = math.fsum((main, cusp, ell, 2.0 * scale * math.log(N) / v))
    return SweepRow(
        n=N, genus=g, volume=v, main=main, cusp_corr=cusp, elliptic_corr=ell,
        delta_bound=2.0 * g * (g - 1) * delta, total=total, ratio=total / norm,
        abs_err=abs(total / norm - 1.0), delta_x=delta,
        total_cx_logn=total_log, ratio_cx_logn=total_log / norm,
    )


def worker_count(requested: int | None = None) -> int:
    if requested is not None:
        return max(1, int(requested))
    env = os.environ.get(THREADS_ENV)
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


def _row_task(args):
    N, inputs = args
    return N, sweep_row(N, inputs)


@dataclass
class SweepResult:
    rows: list[SweepRow]
    skipped: list[int]


def large_level_sweep(n_values, inputs: BoundInputs = BoundInputs(), primes_only: bool = False,
                   workers: int | None = None) -> SweepResult:
    """Rows for every N in ``n_values`` with genus >= 2, in increasing N.

    Rows are independent; with more than one worker they are computed in a
    process pool and reassembled in input order, so output does not depend
    on the worker count.
    """
    ns = sorted({int(n) for n in n_values if not primes_only or is_prime(int(n))})
    jobs = [(n, inputs) for n in ns]
    nw = min(worker_count(workers), max(1, len(jobs)))
    if nw == 1:
        results = [_row_task(j) for j in jobs]
    else:
        with ProcessPoolExecutor(max_workers=nw) as pool:
            results = list(pool.map(_row_task, jobs, chunksize=max(1, len(jobs) // (8 * nw))))
    rows = [r for _, r in results if r is not None]
    skipped = [n for n, r in results if r is None]
    return SweepResult(rows, skipped)


def _fmt(v) -> str:
    if isinstance(v, int):
        return str(v)
    return f"{v + 0.0:.12g}"  # + 0.0 folds -0.0 into 0.0


def sweep_csv(rows, sensitivity: bool = False) -> str:
    cols = SWEEP_COLUMNS + (SENSITIVITY_COLUMNS if sensitivity else ())
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(cols)
    for row in rows:
        writer.writerow([_fmt(getattr(row, c)) for c in cols])
    return buf.getvalue()
