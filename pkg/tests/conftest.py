"""Shared fixtures and independent oracles.

The brute-force transforms here deliberately avoid the library's vectorized
code paths: they are term-by-term cmath summations, so any agreement between
them and the package is a genuine two-implementation check.
"""
import cmath
import math

import numpy as np
import pytest

from qlmarket import StateVector, make_state


def brute_dft(amps):
    """Direct O(N^2) forward transform, term by term."""
    n = len(amps)
    return [
        sum(amps[j] * cmath.exp(-2j * cmath.pi * j * k / n) for j in range(n))
        / math.sqrt(n)
        for k in range(n)
    ]


def brute_idft(amps):
    """Direct O(N^2) inverse transform, term by term."""
    n = len(amps)
    return [
        sum(amps[k] * cmath.exp(2j * cmath.pi * j * k / n) for k in range(n))
        / math.sqrt(n)
        for j in range(n)
    ]


def brute_dft_matrix(n):
    """Forward transform as a list-of-lists matrix, element by element."""
    return [
        [cmath.exp(-2j * cmath.pi * j * k / n) / math.sqrt(n) for j in range(n)]
        for k in range(n)
    ]


def random_state(n_sites: int, seed: int) -> StateVector:
    rng = np.random.default_rng(seed)
    amps = rng.normal(size=n_sites) + 1j * rng.normal(size=n_sites)
    return StateVector(n_sites, amps / np.linalg.norm(amps), normalized=True)


@pytest.fixture
def psi1() -> StateVector:
    """Sharp price 7 on 21 sites."""
    return make_state(21, [(7, 1)])


@pytest.fixture
def psi2() -> StateVector:
    """Price spread over {6, 7, 8} with probabilities 1/4, 1/2, 1/4."""
    return make_state(21, [(7, 1 / math.sqrt(2)), (6, 0.5), (8, 0.5)])
