"""Unitary finite Fourier transform between price and ownership pictures.

Convention (fixed, not configurable): forward transform
``out[k] = (1/sqrt(N)) * sum_n exp(-2*pi*i*n*k/N) * in[n]`` and the inverse
carries the opposite sign, with the symmetric 1/sqrt(N) factor on both
directions. The operator identities built on top of this module depend on
the sign choice, so it is pinned here once.

The implementation is the direct O(N^2) matrix-vector summation; N stays
small in every scenario and the direct form doubles as its own oracle.
Twiddle factors are computed from the exact reduced angle
``2*pi*((n*k) mod N)/N`` to keep phases from drifting at larger N.
"""
from __future__ import annotations

import numpy as np

from .state import StateVector


def dft_matrix(n_sites: int, inverse: bool = False) -> np.ndarray:
    """The N x N transform matrix; unitary, symmetric in its two indices."""
    idx = np.arange(n_sites)
    angles = 2.0 * np.pi * (np.outer(idx, idx) % n_sites) / n_sites
    sign = 1.0 if inverse else -1.0
    return np.exp(sign * 1j * angles) / np.sqrt(n_sites)


def dft(s: StateVector) -> StateVector:
    """Map a price-picture state to the ownership picture."""
    out = dft_matrix(s.n_sites) @ s.amplitudes
    return StateVector(s.n_sites, out, normalized=s.normalized)


def idft(s: StateVector) -> StateVector:
    """Map an ownership-picture state back to the price picture."""
    out = dft_matrix(s.n_sites, inverse=True) @ s.amplitudes
    return StateVector(s.n_sites, out, normalized=s.normalized)
