"""Numerical integration of i dPhi/dt = H(t) Phi with two independent schemes.

``split_step`` is the production integrator: Strang splitting with the
diagonal potential applied as half-step phases in the price picture and the
kinetic factor as exact phases in the ownership picture, every factor
unitary. ``expm_midpoint`` is the cross-validation reference: the exact
exponential of the midpoint Hamiltonian through a Hermitian
eigendecomposition. Both evaluate the potential at each step's midpoint
time, so both are second-order accurate for smooth drives, and they share
no stepping code.

Marching is at fixed dt; the last step into each snapshot time is shortened
so snapshot times are exact. Norm is never silently restored: snapshots that
drift beyond NORM_DRIFT_TOL are reported on the trajectory instead.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from ._kernels import run_split_steps
from .errors import (
    EigendecompositionError,
    NotNormalizedError,
    StepBudgetExceededError,
    ValidationError,
)
from .fourier import dft_matrix
from .operators import HamiltonianParams, ownership_operator
from .potentials import potential_values
from .state import EXACT_TOL, PIPELINE_TOL, StateVector

INTEGRATORS = ("split_step", "expm_midpoint")

# A snapshot whose norm strays from 1 by more than this is flagged on the
# trajectory (unitary steps keep drift orders of magnitude below it).
NORM_DRIFT_TOL = PIPELINE_TOL

DEFAULT_MAX_STEPS = 10_000_000


@dataclass(frozen=True)
class EvolutionConfig:
    """Integrator choice, stepping grid, and model parameters for one run."""

    integrator: str
    dt: float
    t_start: float
    t_end: float
    snapshot_every: float
    params: HamiltonianParams
    max_steps: int = DEFAULT_MAX_STEPS

    def __post_init__(self):
        if self.integrator not in INTEGRATORS:
            raise ValidationError(
                f"unknown integrator {self.integrator!r}; choose from {INTEGRATORS}"
            )
        if not self.dt > 0:
            raise ValidationError(f"dt must be positive, got {self.dt!r}")
        if not self.snapshot_every > 0:
            raise ValidationError(
                f"snapshot_every must be positive, got {self.snapshot_every!r}"
            )
        if self.t_end < self.t_start:
            raise ValidationError(
                f"t_end {self.t_end!r} earlier than t_start {self.t_start!r}"
            )
        if self.dt > self.snapshot_every:
            raise ValidationError("dt must not exceed snapshot_every")
        if (self.t_end - self.t_start) / self.dt > self.max_steps:
            raise StepBudgetExceededError(
                f"{(self.t_end - self.t_start) / self.dt:.3g} steps needed, "
                f"budget is {self.max_steps}"
            )


@dataclass(frozen=True)
class Trajectory:
    """Snapshots of one evolution run, in time order.

    ``norm_drift`` lists (time, norm) for any snapshot whose norm deviates
    from 1 beyond NORM_DRIFT_TOL; an empty tuple means the run stayed clean.
    """

    samples: tuple[tuple[float, StateVector], ...]
    terminal: StateVector
    norm_drift: tuple[tuple[float, float], ...] = field(default=())

    def __post_init__(self):
        times = [t for t, _ in self.samples]
        if any(b <= a for a, b in zip(times, times[1:])):
            raise ValidationError("snapshot times must be strictly increasing")


def _kinetic_phases(n_sites: int, dt: float, mu: float) -> np.ndarray:
    k = np.arange(n_sites, dtype=np.float64)
    return np.exp(-1j * dt * k**2 / (2.0 * mu))


def step_split(state: StateVector, t: float, dt: float, params: HamiltonianParams) -> StateVector:
    """One Strang step from t to t + dt.

    Half-step of the potential at the midpoint time, full kinetic step as
    ownership-picture phases, second potential half-step. Each factor is
    unitary, so the norm is preserved to roundoff.
    """
    if not state.normalized:
        raise NotNormalizedError("step_split requires a normalized state")
    n = state.n_sites
    v_mid = potential_values(params.potential, t + 0.5 * dt, n)
    half = np.exp(-0.5j * dt * v_mid)
    psi = half * state.amplitudes
    psi = dft_matrix(n, inverse=True) @ (_kinetic_phases(n, dt, params.mu) * (dft_matrix(n) @ psi))
    psi *= half
    return StateVector(n, psi, normalized=state.normalized)


def step_expm(state: StateVector, t: float, dt: float, params: HamiltonianParams) -> StateVector:
    """One exact-exponential step of the midpoint Hamiltonian."""
    if not state.normalized:
        raise NotNormalizedError("step_expm requires a normalized state")
    own = ownership_operator(state.n_sites).entries
    h_mid = (own @ own) / (2.0 * params.mu) + np.diag(
        potential_values(params.potential, t + 0.5 * dt, state.n_sites)
    )
    psi = _expm_advance(h_mid, state.amplitudes, dt)
    return StateVector(state.n_sites, psi, normalized=state.normalized)


def _expm_advance(h_mid: np.ndarray, psi: np.ndarray, dt: float) -> np.ndarray:
    try:
        energies, basis = np.linalg.eigh(h_mid)
    except np.linalg.LinAlgError as exc:
        raise EigendecompositionError(f"eigensolver failed: {exc}") from exc
    return basis @ (np.exp(-1j * dt * energies) * (basis.conj().T @ psi))


def _segment_steps(span: float, dt: float):
    """Number of full dt steps and the shortened tail landing exactly on span."""
    whole = int(math.floor(span / dt + 1e-9))
    tail = span - whole * dt
    if tail <= 1e-9 * dt:
        tail = 0.0
    return whole, tail


def _snapshot_times(cfg: EvolutionConfig) -> list[float]:
    times = [cfg.t_start]
    j = 1
    while True:
        t = cfg.t_start + j * cfg.snapshot_every
        if t >= cfg.t_end - 1e-9 * cfg.snapshot_every:
            break
        times.append(t)
        j += 1
    if cfg.t_end > cfg.t_start:
        times.append(cfg.t_end)
    return times


def evolve(initial: StateVector, config: EvolutionConfig) -> Trajectory:
    """March from t_start to t_end, recording snapshots on the snapshot grid.

    The terminal state is always the last snapshot. A zero-duration run
    returns just the initial state.
    """
    if not initial.normalized:
        raise NotNormalizedError("evolve requires a normalized initial state")
    n = initial.n_sites
    boundaries = _snapshot_times(config)

    planned = 0
    for a, b in zip(boundaries, boundaries[1:]):
        whole, tail = _segment_steps(b - a, config.dt)
        planned += whole + (1 if tail else 0)
    if planned > config.max_steps:
        raise StepBudgetExceededError(
            f"run needs {planned} steps, budget is {config.max_steps}"
        )

    potential = config.params.potential
    mu = config.params.mu
    use_kernel = config.integrator == "split_step" and potential.kind in ("zero", "cosine_drive")
    if use_kernel:
        w_fwd = dft_matrix(n)
        w_inv = dft_matrix(n, inverse=True)
        beta = potential.beta if potential.kind == "cosine_drive" else 0.0
        omega = potential.omega if potential.kind == "cosine_drive" else 0.0
    elif config.integrator == "expm_midpoint":
        own = ownership_operator(n).entries
        kinetic_mat = (own @ own) / (2.0 * mu)
    else:
        w_fwd = dft_matrix(n)
        w_inv = dft_matrix(n, inverse=True)

    def march(psi: np.ndarray, a: float, b: float) -> np.ndarray:
        whole, tail = _segment_steps(b - a, config.dt)
        if config.integrator == "split_step":
            if use_kernel:
                if whole:
                    psi = run_split_steps(psi, a, config.dt, whole, mu, beta, omega, w_fwd, w_inv)
                if tail:
                    psi = run_split_steps(psi, a + whole * config.dt, tail, 1, mu, beta, omega, w_fwd, w_inv)
            else:
                sizes = [config.dt] * whole + ([tail] if tail else [])
                t = a
                for h in sizes:
                    v_mid = potential_values(potential, t + 0.5 * h, n)
                    half = np.exp(-0.5j * h * v_mid)
                    psi = w_inv @ (_kinetic_phases(n, h, mu) * (w_fwd @ (half * psi)))
                    psi *= half
                    t += h
            return psi
        sizes = [config.dt] * whole + ([tail] if tail else [])
        t = a
        for h in sizes:
            h_mid = kinetic_mat + np.diag(potential_values(potential, t + 0.5 * h, n))
            psi = _expm_advance(h_mid, psi, h)
            t += h
        return psi

    samples: list[tuple[float, StateVector]] = [(boundaries[0], initial)]
    drift: list[tuple[float, float]] = []
    psi = np.array(initial.amplitudes, dtype=np.complex128)
    for a, b in zip(boundaries, boundaries[1:]):
        psi = march(psi, a, b)
        total = float(np.sum(np.abs(psi) ** 2))
        nrm = math.sqrt(total)
        if abs(nrm - 1.0) > NORM_DRIFT_TOL:
            drift.append((b, nrm))
        snap = StateVector(n, psi.copy(), normalized=abs(total - 1.0) <= EXACT_TOL)
        samples.append((b, snap))

    return Trajectory(samples=tuple(samples), terminal=samples[-1][1], norm_drift=tuple(drift))
