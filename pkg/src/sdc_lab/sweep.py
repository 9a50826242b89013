"""Capacity versus complementarity at several noise levels.

Noise is the single scalar ``1 - alpha * beta``; the sweep fixes
``alpha = 1`` and sets ``beta = 1 - noise``, which is equivalent because
depolarising channels compose multiplicatively.
"""

from __future__ import annotations

import csv
import io
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .encodings import hadamard_for_c, overlap_matrix
from .errors import RangeError
from .formulas import capacity_werner_depolarising
from .protocol import TOL_ADV, classical_strategy_bound

DEFAULT_NOISES = (0.0, 0.1, 0.2, 0.253, 0.4)
CSV_HEADER = ("c", "noise", "capacity", "classical_bound", "advantage")
THREADS_ENV = "SDC_LAB_THREADS"


@dataclass(frozen=True)
class SweepRow:
    c: float
    noise: float
    capacity: float
    classical_bound: float

    @property
    def advantage(self) -> bool:
        return self.capacity - self.classical_bound > TOL_ADV


@dataclass(frozen=True)
class SweepResult:
    d: int
    family: str
    rows: tuple
    overlaps: tuple  # (c, overlap matrix) per grid point

    def curve(self, noise: float) -> tuple[np.ndarray, np.ndarray]:
        pts = [(r.c, r.capacity) for r in self.rows if r.noise == noise]
        c, cap = zip(*pts)
        return np.array(c), np.array(cap)


def worker_count() -> int:
    default = min(8, os.cpu_count() or 1)
    try:
        cap = int(os.environ.get(THREADS_ENV, default))
    except ValueError:
        cap = default
    return max(1, cap)


def c_grid(d: int, steps: int) -> np.ndarray:
    if steps < 2:
        raise RangeError("need at least two c points")
    return np.linspace(1.0 / d, 1.0, steps)


def capacity_sweep(d: int = 2, noises: Sequence[float] = DEFAULT_NOISES, c_steps: int = 50,
                   family: str = "fractional-fourier", workers: int | None = None) -> SweepResult:
    """Closed-form capacity on a (noise, c) grid, rows sorted by (noise, c)."""
    noises = sorted(float(x) for x in noises)
    for x in noises:
        if not 0.0 <= x <= 1.0:
            raise RangeError(f"noise must lie in [0, 1], got {x!r}")
    cs = c_grid(d, c_steps)
    workers = workers or worker_count()
    with ThreadPoolExecutor(max_workers=workers) as pool:
        mats = list(pool.map(lambda c: overlap_matrix(hadamard_for_c(d, c, family)), cs))
    bound = classical_strategy_bound(d)
    rows = []
    for noise in noises:
        for c, m in zip(cs, mats):
            rows.append(SweepRow(float(c), noise, capacity_werner_depolarising(1.0, 1.0 - noise, m), bound))
    return SweepResult(d, family, tuple(rows), tuple((float(c), m.c) for c, m in zip(cs, mats)))


def _fmt(x: float) -> str:
    return f"{x:.12g}"


def to_csv(result: SweepResult) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for r in result.rows:
        w.writerow((_fmt(r.c), _fmt(r.noise), _fmt(r.capacity), _fmt(r.classical_bound),
                    "true" if r.advantage else "false"))
    return buf.getvalue()


def to_json_obj(result: SweepResult) -> dict:
    return {
        "schema": 1,
        "d": result.d,
        "family": result.family,
        "rows": [
            {"c": r.c, "noise": r.noise, "capacity": r.capacity,
             "classical_bound": r.classical_bound, "advantage": r.advantage}
            for r in result.rows
        ],
    }


def overlaps_json_obj(result: SweepResult) -> dict:
    return {
        "schema": 1,
        "d": result.d,
        "family": result.family,
        "points": [{"c": c, "c_kl": m.tolist()} for c, m in result.overlaps],
    }
