"""Sampled descent curves used as non-minimality witnesses.

A curve starts at the candidate point (t = 0) and stays on the constraint
set (a unitary orbit, a singular-value orbit, or a product of spheres).
Emitted witnesses are trimmed to a prefix whose sampled objective values
decrease monotonically (within a tiny slack) so the drop is verifiable.
"""

from dataclasses import dataclass, field, replace
from typing import Callable

import numpy as np

CURVE_SAMPLES = 64
DROP_TOL = 1e-10  # relative threshold for a verified drop
MONOTONE_SLACK = 1e-12


@dataclass
class DescentCurve:
    kind: str  # "givens" | "phase" | "gradient_flow" | "delta_search" | "escape"
    param: int | None
    ts: np.ndarray
    values: np.ndarray
    verified_drop: float
    point_fn: Callable = field(repr=False, compare=False)
    value_fn: Callable = field(repr=False, compare=False)

    def point(self, t: float):
        return self.point_fn(t)

    def sample(self, t: float):
        """Return (point on the constraint set, objective value) at t."""
        p = self.point_fn(t)
        return p, self.value_fn(p)


def log_grid(t_max: float, n: int = CURVE_SAMPLES, t_min_frac: float = 1e-6) -> np.ndarray:
    return np.geomspace(t_max * t_min_frac, t_max, n)


def build_curve(kind, param, point_fn, value_fn, ts) -> DescentCurve:
    """Evaluate the objective along [0] + ts and package the samples."""
    ts_full = np.concatenate([[0.0], np.asarray(ts, dtype=float)])
    values = np.array([value_fn(point_fn(t)) for t in ts_full])
    drop = float(values[0] - values.min())
    return DescentCurve(kind, param, ts_full, values, drop, point_fn, value_fn)


def trim_to_descent(curve: DescentCurve, drop_req: float, slack: float | None = None):
    """Restrict a curve to its monotone decreasing prefix.

    Returns the trimmed curve when the prefix verifies a drop larger than
    ``drop_req``, else None.  The emitted samples end at the prefix minimum,
    so they decrease monotonically within ``slack``.
    """
    vals = curve.values
    if slack is None:
        slack = MONOTONE_SLACK * (1.0 + abs(float(vals[0])))
    end = len(vals)
    for i in range(1, len(vals)):
        if vals[i] > vals[i - 1] + slack:
            end = i
            break
    prefix = vals[:end]
    am = int(np.argmin(prefix))
    if am < 1:
        return None
    drop = float(vals[0] - vals[am])
    if drop <= drop_req:
        return None
    return replace(
        curve,
        ts=curve.ts[: am + 1].copy(),
        values=vals[: am + 1].copy(),
        verified_drop=drop,
    )
