"""Observables of states and trajectories in both pictures.

Each record carries the full price and ownership distributions plus their
means, variances, and modes. Modes break ties toward the lowest index so
repeated runs are regression-stable; variances are computed as
``sum(n^2 w) - mean^2`` with negative roundoff clipped to zero.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .evolve import Trajectory
from .fourier import dft
from .state import EXACT_TOL, Distribution, StateVector, probabilities


@dataclass(frozen=True)
class ObservationRecord:
    """Distributions and summary statistics of one state at one time."""

    time: float
    price_weights: Distribution
    owner_weights: Distribution
    mean_price: float
    mean_owner: float
    var_price: float
    var_owner: float
    mode_price: int
    mode_owner: int


def _summary(dist: Distribution) -> tuple[float, float, int]:
    sites = np.arange(dist.n_sites)
    mean = float(sites @ dist.weights)
    var = float((sites**2) @ dist.weights) - mean * mean
    if -EXACT_TOL < var < 0.0:
        var = 0.0
    return mean, var, int(np.argmax(dist.weights))


def observe_state(s: StateVector, time: float) -> ObservationRecord:
    """Full observation of a normalized state at the given time label."""
    price = probabilities(s)
    owner = probabilities(dft(s))
    mean_p, var_p, mode_p = _summary(price)
    mean_o, var_o, mode_o = _summary(owner)
    return ObservationRecord(
        time=float(time),
        price_weights=price,
        owner_weights=owner,
        mean_price=mean_p,
        mean_owner=mean_o,
        var_price=var_p,
        var_owner=var_o,
        mode_price=mode_p,
        mode_owner=mode_o,
    )


def observe_trajectory(tr: Trajectory) -> list[ObservationRecord]:
    """One record per snapshot, in snapshot order."""
    return [observe_state(state, t) for t, state in tr.samples]
