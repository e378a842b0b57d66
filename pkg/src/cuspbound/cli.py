"""Command-line front end.

Exit status: 0 on success, 1 on a domain error (named on stderr), 2 on a
usage error.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__
from .bounds import BoundInputs, green_can_ledger, sweep_csv, large_level_sweep
from .config import load_config, set_config
from .eisenstein_level1 import eisenstein_fourier, eisenstein_lattice
from .gamma0 import profile
from .gamma0n_functions import eisenstein_infty_gamma0, klf_infty_gamma0, klf_zero_gamma0
from .oracles import coset_sum_gamma0
from .scattering_gamma0 import all_pair_reports, scattering_const_0inf
from .verify import run_verify


def _point(text: str) -> complex:
    try:
        x, y = (float(part) for part in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected X,Y, got {text!r}") from None
    if y <= 0:
        raise argparse.ArgumentTypeError("Y must be positive")
    return complex(x, y)


def _positive_int(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}") from None
    if n < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {n}")
    return n


def _g6(v: float) -> str:
    return f"{v + 0.0:.6g}"


def _g12(v: float) -> float:
    return float(f"{v:.12g}")


def _dump(obj) -> str:
    return json.dumps(obj, indent=2)


def cmd_profile(args) -> str:
    prof = profile(args.N)
    if args.json:
        return prof.to_json()
    vop = prof.volume_over_pi
    lines = [
        f"N            {prof.N}",
        f"volume       {_g6(prof.volume)}  (= {vop.numerator}/{vop.denominator} pi)",
        f"genus        {prof.genus}",
        f"cusps        {prof.cusp_count}  [{', '.join(str(c) for c in prof.cusps)}]",
        f"nu2, nu3     {prof.nu2}, {prof.nu3}",
    ]
    for e in prof.elliptic:
        lines.append(f"  order {e.order}  n={e.n_index:<6d} z = {_g6(e.z.real)} + {_g6(e.z.imag)} i")
    return "\n".join(lines)


def cmd_eisenstein(args) -> str:
    z, s = args.z, args.s
    level = 1 if args.level1 or args.level is None else args.level
    method = args.method or ("fourier" if level == 1 else "relation")
    if level == 1:
        value = eisenstein_lattice(z, s) if method == "lattice" else eisenstein_fourier(z, s)
    elif method == "lattice":
        value = coset_sum_gamma0(z, s, level)
    else:
        value = eisenstein_infty_gamma0(z, s, level)
    if args.json:
        return _dump({"z": [z.real, z.imag], "s": s, "level": level, "method": method, "value": _g12(value)})
    return f"E_inf(z={z.real}+{z.imag}i, s={s}) level {level} [{method}] = {_g6(value)}"


def cmd_klf(args) -> str:
    fn = klf_infty_gamma0 if args.cusp == "inf" else klf_zero_gamma0
    value = fn(args.z, args.N)
    if args.json:
        return _dump({"n": args.N, "cusp": args.cusp, "z": [args.z.real, args.z.imag], "value": _g12(value)})
    return f"K_{args.cusp}(z={args.z.real}+{args.z.imag}i) on X_0({args.N}) = {_g6(value)}"


def cmd_scattering(args) -> str:
    reports = all_pair_reports(args.N) if args.all_pairs else [scattering_const_0inf(args.N)]
    if args.json:
        return _dump([r.to_dict() for r in reports])
    lines = [f"{'pair':<14}{'n':>6}  {'constant':>12}  {'residue':>10}"]
    for r in reports:
        pair = f"({r.pair[0]}, {r.pair[1]})"
        lines.append(f"{pair:<14}{r.n:>6}  {_g6(r.constant):>12}  {_g6(r.residue_check):>10}")
    return "\n".join(lines)


def cmd_bounds(args) -> str:
    inputs = BoundInputs(d_x=args.d_x, lambda1=args.lambda1, c_x=args.c_x)
    ledger = green_can_ledger(args.N, inputs)
    if args.json:
        return _dump(ledger.to_dict())
    d = ledger.to_dict()
    lines = [f"{'term':<22}{'value':>14}"]
    for key in ("main_scattering", "cusp_sums", "selberg_term", "elliptic_klf_term", "center", "delta_x_bound"):
        lines.append(f"{key:<22}{_g6(d[key]):>14}")
    for key, val in ledger.delta_x_bound.terms.items():
        lines.append(f"  {key:<20}{_g6(val):>14}")
    lines.append(f"{'interval':<22}[{_g6(ledger.total_lower)}, {_g6(ledger.total_upper)}]")
    return "\n".join(lines)


def cmd_sweep(args) -> str:
    if args.min > args.max:
        raise ValueError("--min must not exceed --max")
    inputs = BoundInputs(d_x=args.d_x, lambda1=args.lambda1, c_x=args.c_x)
    result = large_level_sweep(range(args.min, args.max + 1), inputs, args.primes_only, args.workers)
    if result.skipped:
        print(f"note: skipped {len(result.skipped)} levels with genus <= 1", file=sys.stderr)
    text = sweep_csv(result.rows, args.sensitivity)
    if args.out:
        Path(args.out).write_text(text)
        return ""
    return text.rstrip("\n")


def cmd_verify(args) -> str:
    lines = []
    ok = run_verify(fast=args.fast, emit=lines.append)
    args._failed = not ok
    return "\n".join(lines)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="cuspbound", description=__doc__.splitlines()[0])
    ap.add_argument("--config", type=Path, help="key = value file with truncation and tolerance settings")
    ap.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("profile", help="structure of Gamma_0(N)")
    p.add_argument("N", type=_positive_int)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_profile)

    p = sub.add_parser("eisenstein", help="evaluate E_inf(z, s)")
    p.add_argument("--z", type=_point, required=True, metavar="X,Y")
    p.add_argument("--s", type=float, required=True)
    grp = p.add_mutually_exclusive_group()
    grp.add_argument("--level1", action="store_true")
    grp.add_argument("--level", type=_positive_int)
    p.add_argument("--method", choices=("lattice", "fourier", "relation"))
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_eisenstein)

    p = sub.add_parser("klf", help="Kronecker limit function at the cusp 0 or infinity")
    p.add_argument("N", type=_positive_int)
    p.add_argument("--cusp", choices=("inf", "0"), required=True)
    p.add_argument("--z", type=_point, required=True, metavar="X,Y")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_klf)

    p = sub.add_parser("scattering", help="scattering constants")
    p.add_argument("N", type=_positive_int)
    p.add_argument("--all-pairs", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_scattering)

    def inputs_flags(p):
        p.add_argument("--d-x", type=float, default=1.0)
        p.add_argument("--lambda1", type=float, default=0.21)
        p.add_argument("--c-x", type=float, default=0.0)

    p = sub.add_parser("bounds", help="ledger for G_can(0, infinity)")
    p.add_argument("N", type=_positive_int)
    inputs_flags(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("sweep", help="CSV of the large-N asymptotic terms")
    p.add_argument("--min", type=_positive_int, required=True)
    p.add_argument("--max", type=_positive_int, required=True)
    p.add_argument("--primes-only", action="store_true")
    p.add_argument("--out", type=Path)
    p.add_argument("--sensitivity", action="store_true", help="add columns with c_x = log N")
    p.add_argument("--workers", type=_positive_int, help="overrides CUSPBOUND_THREADS")
    inputs_flags(p)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("verify", help="run the oracle suites")
    p.add_argument("--fast", action="store_true")
    p.set_defaults(func=cmd_verify)
    return ap


def run(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.config is not None:
            set_config(load_config(args.config))
        out = args.func(args)
    except (ValueError, ArithmeticError, OSError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    if out:
        print(out)
    return 1 if getattr(args, "_failed", False) else 0


def main() -> None:
    sys.exit(run())
