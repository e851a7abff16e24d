"""States on the price lattice {0..N-1} and their probability distributions.

Amplitudes are stored dense in double-precision complex; N is small in every
scenario of interest, so there is no sparse representation. All values are
immutable: every operation returns a new object and never mutates its inputs.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import (
    DimensionMismatchError,
    DuplicateIndexError,
    IndexOutOfRangeError,
    NotNormalizedError,
    ZeroVectorError,
)

# Library-wide exactness tolerance: equalities that hold in exact arithmetic
# are enforced and tested to within this bound.
EXACT_TOL = 1e-12

# Tolerance for quantities that have passed through a long unitary march,
# where roundoff accumulates beyond EXACT_TOL but stays physically exact.
PIPELINE_TOL = 1e-9


def _frozen_array(values, dtype) -> np.ndarray:
    arr = np.array(values, dtype=dtype)
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True)
class StateVector:
    """Complex amplitudes over the price lattice.

    ``amplitudes[n]`` is the amplitude for price n; ``|amplitudes[n]|**2`` is
    the probability of observing price n when the state is normalized. The
    ``normalized`` flag certifies unit norm to within EXACT_TOL; constructors
    that cannot certify it leave the flag False.
    """

    n_sites: int
    amplitudes: np.ndarray
    normalized: bool = False

    def __post_init__(self):
        if self.n_sites < 1:
            raise ValueError(f"n_sites must be positive, got {self.n_sites}")
        amps = _frozen_array(self.amplitudes, np.complex128)
        if amps.shape != (self.n_sites,):
            raise DimensionMismatchError(
                f"expected {self.n_sites} amplitudes, got shape {amps.shape}"
            )
        if not np.isfinite(amps.view(np.float64)).all():
            raise ValueError("amplitudes must be finite")
        object.__setattr__(self, "amplitudes", amps)
        if self.normalized:
            total = float(np.sum(np.abs(amps) ** 2))
            if abs(total - 1.0) > EXACT_TOL:
                raise NotNormalizedError(
                    f"state flagged normalized but sum of |amplitudes|^2 = {total!r}"
                )


@dataclass(frozen=True)
class Distribution:
    """Probability weights over the lattice: nonnegative, summing to one."""

    n_sites: int
    weights: np.ndarray = field(repr=False)

    def __post_init__(self):
        w = _frozen_array(self.weights, np.float64)
        if w.shape != (self.n_sites,):
            raise DimensionMismatchError(
                f"expected {self.n_sites} weights, got shape {w.shape}"
            )
        if w.min(initial=0.0) < 0.0 or w.max(initial=0.0) > 1.0 + EXACT_TOL:
            raise ValueError("weights must lie in [0, 1]")
        total = float(w.sum())
        if abs(total - 1.0) > PIPELINE_TOL:
            raise ValueError(f"weights must sum to 1, got {total!r}")
        object.__setattr__(self, "weights", w)


def make_state(n_sites: int, entries) -> StateVector:
    """Build a normalized state from (index, amplitude) pairs.

    Unlisted sites get amplitude zero. The vector is rescaled to unit norm,
    so entries may be given in any overall scale.
    """
    amps = np.zeros(n_sites, dtype=np.complex128)
    seen = set()
    for index, value in entries:
        if not 0 <= index < n_sites:
            raise IndexOutOfRangeError(
                f"index {index} outside lattice of {n_sites} sites"
            )
        if index in seen:
            raise DuplicateIndexError(f"index {index} listed twice")
        seen.add(index)
        amps[index] = value
    total = np.linalg.norm(amps)
    if total == 0.0:
        raise ZeroVectorError("all amplitudes are zero; cannot normalize")
    return StateVector(n_sites, amps / total, normalized=True)


def inner_product(a: StateVector, b: StateVector) -> complex:
    """Scalar product, conjugate-linear in the first argument."""
    if a.n_sites != b.n_sites:
        raise DimensionMismatchError(
            f"states live on different lattices: {a.n_sites} vs {b.n_sites}"
        )
    return complex(np.vdot(a.amplitudes, b.amplitudes))


def norm(s: StateVector) -> float:
    """Euclidean norm of the amplitude vector."""
    return float(np.linalg.norm(s.amplitudes))


def probabilities(s: StateVector) -> Distribution:
    """Site-occupation probabilities |amplitudes[n]|^2 of a normalized state.

    States certified by the ``normalized`` flag qualify, as do evolution
    snapshots whose actual norm sits within PIPELINE_TOL of one; the weights
    are reported raw, never rescaled.
    """
    weights = np.abs(s.amplitudes) ** 2
    if not s.normalized and abs(float(weights.sum()) - 1.0) > PIPELINE_TOL:
        raise NotNormalizedError("probabilities require a normalized state")
    return Distribution(s.n_sites, weights)
