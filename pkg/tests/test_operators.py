"""Price/ownership operators, expectations, and the driven Hamiltonian."""
import math

import numpy as np
import pytest

from qlmarket import (
    EXACT_TOL,
    HamiltonianParams,
    LatticeOperator,
    NotHermitianError,
    NotNormalizedError,
    DimensionMismatchError,
    PotentialSpec,
    StateVector,
    ValidationError,
    apply,
    dft,
    expectation,
    hamiltonian_at,
    idft,
    is_hermitian,
    make_state,
    ownership_operator,
    price_operator,
    probabilities,
)

from conftest import brute_dft_matrix, random_state


def delta_owner_state(n, k):
    """Price-picture state that is sharp at index k in the ownership picture."""
    amps = np.zeros(n, complex)
    amps[k] = 1.0
    return idft(StateVector(n, amps, normalized=True))


class TestPriceOperator:
    def test_small_lattice_matrix(self):
        op = price_operator(3)
        assert op.structure == "diagonal"
        assert np.array_equal(op.entries, np.diag([0.0, 1.0, 2.0]))

    def test_sharp_state_is_eigenvector(self, psi1):
        out = apply(price_operator(21), psi1)
        assert out.amplitudes == pytest.approx(7.0 * psi1.amplitudes, abs=EXACT_TOL)
        assert not out.normalized

    def test_spread_state_expectation(self, psi2):
        # 0.25*6 + 0.5*7 + 0.25*8
        assert expectation(price_operator(21), psi2) == pytest.approx(7.0, abs=EXACT_TOL)


class TestOwnershipOperator:
    def test_two_site_closed_form(self):
        op = ownership_operator(2)
        expected = 0.5 * np.array([[1, -1], [-1, 1]], dtype=complex)
        assert np.abs(op.entries - expected).max() < EXACT_TOL
        assert op.structure == "circulant"

    @pytest.mark.parametrize("n", [2, 3, 8, 21])
    def test_matches_brute_force_conjugation(self, n):
        w = brute_dft_matrix(n)
        w_inv = [[w[j][i].conjugate() for j in range(n)] for i in range(n)]
        product = [
            [sum(w_inv[i][k] * k * w[k][j] for k in range(n)) for j in range(n)]
            for i in range(n)
        ]
        assert np.abs(ownership_operator(n).entries - np.array(product)).max() < 1e-11

    @pytest.mark.parametrize("n", [2, 3, 8, 21])
    def test_spectrum_is_the_price_ladder(self, n):
        eigenvalues = np.linalg.eigvalsh(ownership_operator(n).entries)
        assert np.abs(np.sort(eigenvalues) - np.arange(n)).max() < 1e-8

    def test_owner_delta_states_are_eigenvectors(self):
        n = 21
        op = ownership_operator(n)
        for k in (0, 1, 13, 20):
            s = delta_owner_state(n, k)
            out = apply(op, s)
            assert np.abs(out.amplitudes - k * s.amplitudes).max() < 1e-10

    def test_diagonal_entries_all_equal_mean_price(self):
        op = ownership_operator(21)
        assert np.abs(np.diag(op.entries) - 10.0).max() < 1e-9

    def test_hermitian(self):
        assert is_hermitian(ownership_operator(21))


class TestApply:
    def test_identity_passthrough(self, psi2):
        ident = LatticeOperator(21, np.eye(21, dtype=complex), structure="diagonal")
        assert apply(ident, psi2).amplitudes == pytest.approx(psi2.amplitudes, abs=0)

    def test_square_by_composition_matches_squared_matrix(self):
        n = 8
        op = ownership_operator(n)
        squared = LatticeOperator(n, op.entries @ op.entries)
        s = random_state(n, seed=3)
        twice = apply(op, apply(op, s))
        once = apply(squared, s)
        assert np.abs(twice.amplitudes - once.amplitudes).max() < 1e-10

    def test_dimension_mismatch(self, psi1):
        with pytest.raises(DimensionMismatchError):
            apply(price_operator(5), psi1)


class TestExpectation:
    def test_sharp_state_price(self, psi1):
        assert expectation(price_operator(21), psi1) == pytest.approx(7.0, abs=EXACT_TOL)

    def test_sharp_state_owner_mean_is_lattice_average(self, psi1):
        assert expectation(ownership_operator(21), psi1) == pytest.approx(10.0, abs=1e-9)

    def test_requires_normalized_state(self):
        raw = StateVector(3, np.array([1, 1, 0], complex))
        with pytest.raises(NotNormalizedError):
            expectation(price_operator(3), raw)

    def test_requires_hermitian_operator(self, psi1):
        skew = np.zeros((21, 21), complex)
        skew[0, 1] = 1.0
        with pytest.raises(NotHermitianError):
            expectation(LatticeOperator(21, skew), psi1)

    def test_matches_index_weighted_probabilities(self):
        for seed in range(10):
            s = random_state(21, seed)
            weights = probabilities(s).weights
            direct = float(np.arange(21) @ weights)
            assert expectation(price_operator(21), s) == pytest.approx(direct, abs=EXACT_TOL)

    def test_price_ownership_duality(self):
        own = ownership_operator(21)
        price = price_operator(21)
        for seed in range(10):
            s = random_state(21, seed)
            assert expectation(own, s) == pytest.approx(
                expectation(price, dft(s)), abs=1e-10
            )


class TestHamiltonian:
    def test_free_two_site_form(self):
        params = HamiltonianParams(mu=1.0, potential=PotentialSpec.zero())
        h = hamiltonian_at(0.0, params, 2)
        own = ownership_operator(2).entries
        oracle = [
            [sum(own[i][k] * own[k][j] for k in range(2)) / 2.0 for j in range(2)]
            for i in range(2)
        ]
        assert np.abs(h.entries - np.array(oracle)).max() < EXACT_TOL
        assert np.abs(h.entries - 0.25 * np.array([[1, -1], [-1, 1]])).max() < EXACT_TOL

    def test_cosine_drive_adds_price_ramp_at_t_zero(self):
        params = HamiltonianParams(mu=1.0, potential=PotentialSpec.cosine_drive(0.1, 1e-4))
        h = hamiltonian_at(0.0, params, 5)
        free = hamiltonian_at(0.0, HamiltonianParams(1.0, PotentialSpec.zero()), 5)
        ramp = np.diag(h.entries - free.entries).real
        assert ramp == pytest.approx(0.1 * np.arange(5), abs=EXACT_TOL)

    def test_drive_vanishes_at_quarter_period(self):
        omega = 1e-4
        params = HamiltonianParams(mu=1.0, potential=PotentialSpec.cosine_drive(0.1, omega))
        h = hamiltonian_at((math.pi / 2) / omega, params, 5)
        free = hamiltonian_at(0.0, HamiltonianParams(1.0, PotentialSpec.zero()), 5)
        assert np.abs(h.entries - free.entries).max() < 1e-14

    def test_hermitian_and_dense(self, psi1):
        params = HamiltonianParams(mu=2.0, potential=PotentialSpec.cosine_drive(0.1, 1e-4))
        h = hamiltonian_at(37.0, params, 21)
        assert h.structure == "dense"
        assert is_hermitian(h)

    def test_mu_must_be_positive(self):
        with pytest.raises(ValidationError):
            HamiltonianParams(mu=0.0, potential=PotentialSpec.zero())


class TestStructureTags:
    def test_diagonal_tag_rejects_off_diagonal(self):
        mat = np.eye(3, dtype=complex)
        mat[0, 1] = 1e-5
        with pytest.raises(ValidationError):
            LatticeOperator(3, mat, structure="diagonal")

    def test_circulant_tag_rejects_non_circulant(self):
        with pytest.raises(ValidationError):
            LatticeOperator(2, np.diag([0.0, 1.0]).astype(complex), structure="circulant")

    def test_unknown_tag_rejected(self):
        with pytest.raises(ValidationError):
            LatticeOperator(2, np.eye(2, dtype=complex), structure="sparse")

    def test_shape_mismatch(self):
        with pytest.raises(DimensionMismatchError):
            LatticeOperator(3, np.eye(2, dtype=complex))
