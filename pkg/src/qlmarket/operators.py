"""Price and ownership operators on the lattice, and the driven Hamiltonian.

The price operator multiplies amplitude n by the price n. The ownership
operator is its conjugation into the ownership picture,
``idft . price . dft``, materialized once as a dense matrix: it is circulant,
Hermitian, and shares the spectrum {0..N-1}. The Hamiltonian at time t is
``ownership^2 / (2*mu) + diag(V(n, t))``.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatchError, NotHermitianError, NotNormalizedError, ValidationError
from .fourier import dft_matrix
from .potentials import PotentialSpec, potential_values
from .state import EXACT_TOL, StateVector

STRUCTURES = ("diagonal", "circulant", "dense")


@dataclass(frozen=True)
class LatticeOperator:
    """Dense N x N complex operator with a structure tag.

    The tag records what the constructor guarantees: ``diagonal`` means the
    off-diagonal entries are exactly zero, ``circulant`` means entry (i, j)
    depends only on (i - j) mod N to within EXACT_TOL.
    """

    n_sites: int
    entries: np.ndarray
    structure: str = "dense"

    def __post_init__(self):
        mat = np.array(self.entries, dtype=np.complex128)
        if mat.shape != (self.n_sites, self.n_sites):
            raise DimensionMismatchError(
                f"expected a {self.n_sites} x {self.n_sites} matrix, got {mat.shape}"
            )
        if self.structure not in STRUCTURES:
            raise ValidationError(f"unknown structure tag {self.structure!r}")
        if self.structure == "diagonal":
            off = mat[~np.eye(self.n_sites, dtype=bool)]
            if off.size and np.abs(off).max() != 0.0:
                raise ValidationError("diagonal structure tag with nonzero off-diagonals")
        elif self.structure == "circulant":
            first = mat[0]
            shifted = np.stack([np.roll(first, i) for i in range(self.n_sites)])
            if np.abs(mat - shifted).max() > EXACT_TOL:
                raise ValidationError("circulant structure tag but rows are not rotations")
        mat.setflags(write=False)
        object.__setattr__(self, "entries", mat)


@dataclass(frozen=True)
class HamiltonianParams:
    """Model parameters: the inertia-like mu and the interaction potential."""

    mu: float
    potential: PotentialSpec

    def __post_init__(self):
        if not self.mu > 0:
            raise ValidationError(f"mu must be positive, got {self.mu!r}")


def price_operator(n_sites: int) -> LatticeOperator:
    """diag(0, 1, ..., N-1): multiplication by the price."""
    return LatticeOperator(
        n_sites, np.diag(np.arange(n_sites, dtype=np.float64)), structure="diagonal"
    )


def ownership_operator(n_sites: int) -> LatticeOperator:
    """The price operator conjugated into the ownership picture."""
    w = dft_matrix(n_sites)
    w_inv = dft_matrix(n_sites, inverse=True)
    mat = w_inv @ (np.arange(n_sites)[:, None] * w)
    return LatticeOperator(n_sites, mat, structure="circulant")


def is_hermitian(op: LatticeOperator, tol: float = EXACT_TOL) -> bool:
    """Check entries == conj-transpose, relative to the largest magnitude."""
    mat = op.entries
    scale = max(float(np.abs(mat).max()), 1.0)
    return float(np.abs(mat - mat.conj().T).max()) <= tol * scale


def apply(op: LatticeOperator, s: StateVector) -> StateVector:
    """Matrix action of the operator; the result is not flagged normalized."""
    if op.n_sites != s.n_sites:
        raise DimensionMismatchError(
            f"operator on {op.n_sites} sites applied to state on {s.n_sites}"
        )
    return StateVector(s.n_sites, op.entries @ s.amplitudes, normalized=False)


def expectation(op: LatticeOperator, s: StateVector) -> float:
    """Mean value <s, op s> of a Hermitian operator in a normalized state."""
    if not s.normalized:
        raise NotNormalizedError("expectation requires a normalized state")
    if not is_hermitian(op):
        raise NotHermitianError("expectation requires a Hermitian operator")
    value = complex(np.vdot(s.amplitudes, op.entries @ s.amplitudes))
    if abs(value.imag) >= 1e-10:
        raise NotHermitianError(
            f"expectation has imaginary part {value.imag!r} despite Hermiticity check"
        )
    return value.real


def hamiltonian_at(t: float, params: HamiltonianParams, n_sites: int) -> LatticeOperator:
    """H(t) = ownership^2 / (2 mu) + diag(V(n, t))."""
    own = ownership_operator(n_sites).entries
    kinetic = (own @ own) / (2.0 * params.mu)
    diag = potential_values(params.potential, t, n_sites)
    return LatticeOperator(n_sites, kinetic + np.diag(diag), structure="dense")
