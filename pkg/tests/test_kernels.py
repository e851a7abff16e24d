"""Backend equivalence: compiled kernel vs numpy kernel vs public stepping."""
import numpy as np
import pytest

from qlmarket import HamiltonianParams, PotentialSpec, backend_name, dft_matrix, make_state, step_split
from qlmarket._kernels import HAVE_COMPILED, run_split_steps_py

if HAVE_COMPILED:
    from qlmarket._kernels import _run_split_steps_compiled


N = 21
BETA, OMEGA, MU = 0.1, 1e-4, 1.0


def march_with_public_steps(amps, t0, dt, n_steps):
    params = HamiltonianParams(mu=MU, potential=PotentialSpec.cosine_drive(BETA, OMEGA))
    state = make_state(N, [(i, a) for i, a in enumerate(amps) if a != 0])
    t = t0
    for _ in range(n_steps):
        state = step_split(state, t, dt, params)
        t += dt
    return state.amplitudes


def test_backend_name_matches_flag():
    assert backend_name() == ("cython" if HAVE_COMPILED else "python")


def test_python_kernel_matches_public_stepping():
    amps = np.zeros(N, complex)
    amps[7] = 1.0
    w, wi = dft_matrix(N), dft_matrix(N, inverse=True)
    kernel = run_split_steps_py(amps.copy(), 0.0, 0.02, 200, MU, BETA, OMEGA, w, wi)
    public = march_with_public_steps(amps, 0.0, 0.02, 200)
    assert np.abs(kernel - public).max() < 1e-12


@pytest.mark.skipif(not HAVE_COMPILED, reason="compiled kernel not built")
def test_compiled_kernel_matches_python_kernel():
    rng = np.random.default_rng(0)
    amps = rng.normal(size=N) + 1j * rng.normal(size=N)
    amps /= np.linalg.norm(amps)
    w, wi = dft_matrix(N), dft_matrix(N, inverse=True)
    fast = _run_split_steps_compiled(amps.copy(), 3.0, 0.01, 1000, MU, BETA, OMEGA, w, wi)
    slow = run_split_steps_py(amps.copy(), 3.0, 0.01, 1000, MU, BETA, OMEGA, w, wi)
    assert np.abs(fast - slow).max() < 1e-12


@pytest.mark.skipif(not HAVE_COMPILED, reason="compiled kernel not built")
def test_compiled_kernel_free_evolution_is_unitary():
    amps = np.zeros(N, complex)
    amps[0] = 1.0
    w, wi = dft_matrix(N), dft_matrix(N, inverse=True)
    out = _run_split_steps_compiled(amps, 0.0, 0.05, 5000, MU, 0.0, 0.0, w, wi)
    assert abs(np.linalg.norm(out) - 1.0) < 1e-11


def test_kernels_do_not_mutate_input():
    amps = np.zeros(N, complex)
    amps[7] = 1.0
    snapshot = amps.copy()
    w, wi = dft_matrix(N), dft_matrix(N, inverse=True)
    run_split_steps_py(amps, 0.0, 0.02, 10, MU, BETA, OMEGA, w, wi)
    assert np.array_equal(amps, snapshot)
    if HAVE_COMPILED:
        _run_split_steps_compiled(amps, 0.0, 0.02, 10, MU, BETA, OMEGA, w, wi)
        assert np.array_equal(amps, snapshot)
