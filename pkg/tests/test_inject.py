"""State injection circuits and the 2-to-1 magic state reductions."""
import numpy as np
import pytest

from golaymsd.codes import norell_pair_reduction_code, strange_pair_reduction_code
from golaymsd.dense import dense_distill_oracle, magic_states, pauli_x, pauli_z, wigner_of
from golaymsd.inject import (clifford_equivalent, equatorial_state, fidelity,
                             group_order_mod_phase, inject_uz, is_third_level,
                             reduce_norell_pair, reduce_strange_pair,
                             repeated_injection_walk, uz_operator)

RNG = np.random.default_rng(8)


def rand_ket():
    v = RNG.normal(size=3) + 1j * RNG.normal(size=3)
    return v / np.linalg.norm(v)


def test_branch_probabilities_sum_to_one():
    uz = uz_operator(0.7, 2.1)
    outcomes = inject_uz(uz, rand_ket())
    assert abs(sum(o.probability for o in outcomes) - 1) < 1e-12


def test_identity_injection():
    outcomes = inject_uz(np.eye(3, dtype=complex), np.array([1, 0, 0], dtype=complex))
    m0 = outcomes[0]
    assert m0.probability > 0
    assert fidelity(m0.post_state, np.array([1, 0, 0])) > 1 - 1e-12


def test_clifford_injection_corrected_on_every_branch():
    uz = pauli_z(3)
    assert is_third_level(uz)
    for _ in range(3):
        psi = rand_ket()
        for o in inject_uz(uz, psi):
            if o.probability > 1e-12:
                assert o.corrected is not None
                assert fidelity(o.corrected, uz @ psi) > 1 - 1e-12


def test_non_third_level_branches():
    uz = uz_operator(0.0, np.pi)
    assert not is_third_level(uz)
    psi = rand_ket()
    x = pauli_x(3)
    for o in inject_uz(uz, psi):
        assert o.corrected is None
        m = o.measurement
        expected = np.linalg.matrix_power(x, m) @ uz @ np.linalg.matrix_power(x, (3 - m) % 3) @ psi
        expected /= np.linalg.norm(expected)
        assert fidelity(o.post_state, expected) > 1 - 1e-12


def test_inject_rejects_nondiagonal():
    with pytest.raises(ValueError, match="diagonal"):
        inject_uz(np.ones((3, 3), dtype=complex) / 3, rand_ket())


def test_reduce_strange_pair():
    st = magic_states()
    out, prob = reduce_strange_pair()
    assert abs(prob - 0.5) < 1e-12
    assert abs((st.norell.conj() @ out @ st.norell).real - 1) < 1e-10


def test_reduce_strange_pair_general_inputs():
    # alpha|1> + beta|2> succeeds with probability 2|alpha beta|^2
    t = np.pi / 6
    psi = np.array([0, np.cos(t), np.sin(t)], dtype=complex)
    out, prob = reduce_strange_pair(psi)
    assert abs(prob - 2 * (np.cos(t) * np.sin(t)) ** 2) < 1e-12
    assert abs(prob - 3 / 8) < 1e-12
    ket1 = np.array([0, 1, 0], dtype=complex)
    _, prob_zero = reduce_strange_pair(ket1)
    assert abs(prob_zero) < 1e-12


def test_reduce_strange_pair_rejects_bad_support():
    with pytest.raises(ValueError, match="supported"):
        reduce_strange_pair(np.array([1, 0, 0], dtype=complex))


def test_reduce_norell_pair():
    out, prob = reduce_norell_pair()
    assert abs(prob - 0.25) < 1e-12
    target = np.linalg.matrix_power(pauli_x(3), 2) @ equatorial_state(np.pi / 3, 2 * np.pi / 3)
    assert abs((target.conj() @ out @ target).real - 1) < 1e-10


def test_norell_reduction_output_clifford_equivalent_to_flat_equatorial():
    out, _ = reduce_norell_pair()
    evals, evecs = np.linalg.eigh(out)
    psi = evecs[:, int(np.argmax(evals))]
    assert clifford_equivalent(psi, equatorial_state(0.0, np.pi))


def test_reductions_agree_with_oracle():
    st = magic_states()
    rho_s = np.outer(st.strange, st.strange.conj())
    grid, p = dense_distill_oracle(strange_pair_reduction_code(), rho_s)
    out, prob = reduce_strange_pair()
    assert abs(p - prob) < 1e-12
    assert np.abs(grid - wigner_of(out)).max() < 1e-12

    rho_n = np.outer(st.norell, st.norell.conj())
    grid, p = dense_distill_oracle(norell_pair_reduction_code(), rho_n)
    out, prob = reduce_norell_pair()
    assert abs(p - prob) < 1e-12
    assert np.abs(grid - wigner_of(out)).max() < 1e-12


def test_conjugate_group_is_small_and_finite():
    uz = uz_operator(0.0, np.pi)
    x = pauli_x(3)
    gens = [np.linalg.matrix_power(x, m) @ uz @ np.linalg.matrix_power(x, (3 - m) % 3)
            for m in range(3)]
    order = group_order_mod_phase(gens)
    assert order == 4  # sign patterns of diag(+-1) with even parity, mod phase


def test_group_order_cap():
    # an irrational rotation never closes; the cap must trip
    theta = np.sqrt(2)
    gen = np.diag([1, np.exp(1j * theta), np.exp(-1j * theta)])
    with pytest.raises(RuntimeError, match="cap"):
        group_order_mod_phase([gen], cap=64)


def test_injection_walk_terminates_quickly():
    mean_rounds = repeated_injection_walk(trials=300, rng=np.random.default_rng(5))
    assert 1.0 <= mean_rounds < 10.0
