"""Truncation and tolerance knobs shared by every numerical routine.

A config file is plain ``key = value`` lines; ``#`` starts a comment.
"""
from __future__ import annotations

import dataclasses
from dataclasses import dataclass
from pathlib import Path


@dataclass(frozen=True)
class Config:
    lattice_cutoff: int = 400
    q_tol: float = 1e-18
    quad_tol: float = 1e-8
    richardson_kmin: int = 8
    richardson_kmax: int = 16
    fourier_nmax: int = 0  # 0 selects the mode count from the Bessel tail


_active = Config()


def get_config() -> Config:
    return _active


def set_config(cfg: Config) -> None:
    global _active
    _active = cfg


def parse_config(text: str, base: Config | None = None) -> Config:
    base = base or Config()
    fields = {f.name: f.type for f in dataclasses.fields(Config)}
    updates = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ValueError(f"config line {lineno}: expected 'key = value', got {raw!r}")
        key, value = (part.strip() for part in line.split("=", 1))
        if key not in fields:
            raise ValueError(f"config line {lineno}: unknown key {key!r}")
        kind = int if fields[key] in (int, "int") else float
        updates[key] = kind(value)
    cfg = dataclasses.replace(base, **updates)
    if cfg.richardson_kmin >= cfg.richardson_kmax:
        raise ValueError("richardson_kmin must be below richardson_kmax")
    if cfg.lattice_cutoff < 1 or cfg.q_tol <= 0 or cfg.quad_tol <= 0:
        raise ValueError("cutoffs and tolerances must be positive")
    return cfg


def load_config(path: str | Path) -> Config:
    return parse_config(Path(path).read_text())
