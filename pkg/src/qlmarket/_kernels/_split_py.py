"""Pure-numpy split-step marching kernel (fallback backend).

Semantically identical to the compiled kernel in ``_split_cy.pyx``: both
march Strang steps of the driven Hamiltonian with the potential evaluated at
each step's midpoint time and the kinetic factor applied as ownership-picture
phases. Kept dependency-free of the rest of the package so the two backends
stay drop-in interchangeable.
"""
import numpy as np


def run_split_steps(amps, t0, dt, n_steps, mu, beta, omega, w_fwd, w_inv):
    """March ``n_steps`` Strang steps of size dt from time t0.

    The drive is ``V(n, t) = beta * cos(omega * t) * n`` (beta = 0 gives free
    evolution). Returns a fresh amplitude array; the input is not modified.
    """
    n = amps.shape[0]
    sites = np.arange(n, dtype=np.float64)
    kinetic = np.exp(-1j * dt * sites**2 / (2.0 * mu))
    psi = np.array(amps, dtype=np.complex128)
    for i in range(n_steps):
        t_mid = t0 + i * dt + 0.5 * dt
        half = np.exp(-0.5j * dt * beta * np.cos(omega * t_mid) * sites)
        psi = half * psi
        psi = w_inv @ (kinetic * (w_fwd @ psi))
        psi *= half
    return psi
