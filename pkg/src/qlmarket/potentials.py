"""Time-dependent diagonal potentials V(price, t).

Three kinds are supported:

* ``zero``          -- no interaction term;
* ``cosine_drive``  -- ``V(n, t) = beta * cos(omega * t) * n``, a periodic
                       external influence proportional to the price;
* ``table``         -- piecewise-constant diagonals given as rows
                       ``(breakpoint, values)``; row i applies on
                       ``[t_i, t_{i+1})`` and the final row at its own
                       breakpoint only, so the last breakpoint must not be
                       earlier than any time the potential is evaluated at.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatchError, TimeOutOfTableRangeError, ValidationError

KINDS = ("zero", "cosine_drive", "table")


@dataclass(frozen=True)
class PotentialSpec:
    """Description of a diagonal potential; build via the classmethods."""

    kind: str
    beta: float | None = None
    omega: float | None = None
    table: tuple[tuple[float, tuple[float, ...]], ...] | None = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValidationError(f"unknown potential kind {self.kind!r}")
        if self.kind == "cosine_drive":
            if self.beta is None or self.omega is None:
                raise ValidationError("cosine_drive requires beta and omega")
            if not (math.isfinite(self.beta) and math.isfinite(self.omega)):
                raise ValidationError("beta and omega must be finite")
        elif self.beta is not None or self.omega is not None:
            raise ValidationError(f"beta/omega are not valid for kind {self.kind!r}")
        if self.kind == "table":
            if not self.table:
                raise ValidationError("table potential requires at least one row")
            times = [row[0] for row in self.table]
            if any(b >= a for a, b in zip(times[1:], times)):
                raise ValidationError("table breakpoints must be strictly increasing")
            widths = {len(row[1]) for row in self.table}
            if len(widths) != 1:
                raise ValidationError("table rows must all have the same length")
        elif self.table is not None:
            raise ValidationError(f"table is not valid for kind {self.kind!r}")

    @classmethod
    def zero(cls) -> "PotentialSpec":
        return cls(kind="zero")

    @classmethod
    def cosine_drive(cls, beta: float, omega: float) -> "PotentialSpec":
        return cls(kind="cosine_drive", beta=float(beta), omega=float(omega))

    @classmethod
    def from_table(cls, rows) -> "PotentialSpec":
        frozen = tuple((float(t), tuple(float(v) for v in vals)) for t, vals in rows)
        return cls(kind="table", table=frozen)


def potential_values(p: PotentialSpec, t: float, n_sites: int) -> np.ndarray:
    """The diagonal of V at time t, as n_sites floats."""
    if p.kind == "zero":
        return np.zeros(n_sites)
    if p.kind == "cosine_drive":
        return p.beta * np.cos(p.omega * t) * np.arange(n_sites, dtype=np.float64)
    times = [row[0] for row in p.table]
    if t < times[0] or t > times[-1]:
        raise TimeOutOfTableRangeError(
            f"t={t!r} outside table range [{times[0]!r}, {times[-1]!r}]"
        )
    row = p.table[np.searchsorted(times, t, side="right") - 1][1]
    if len(row) != n_sites:
        raise DimensionMismatchError(
            f"table rows have {len(row)} values, lattice has {n_sites} sites"
        )
    return np.asarray(row, dtype=np.float64)
