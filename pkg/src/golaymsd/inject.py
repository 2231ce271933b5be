"""State injection of diagonal qutrit unitaries and the 2-to-1 stabilizer
reductions that convert magic states into equatorial resources.

Dense two-qutrit circuit simulation: prepare the resource and target, apply
a controlled shift, measure, and report every branch with its probability and
post-state.  Whether the measurement correction is available depends on the
injected unitary sitting in the third level of the Clifford hierarchy.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .codes import norell_pair_reduction_code, strange_pair_reduction_code
from .dense import (
    clifford_group_mod_phase,
    dense_distill_oracle,
    is_clifford,
    magic_states,
    pauli_x,
    state_from_wigner,
)

ATOL = 1e-10


def equatorial_state(theta1: float, theta2: float) -> np.ndarray:
    """(|0> + e^{i theta1}|1> + e^{i theta2}|2>)/sqrt(3)."""
    return np.array([1, np.exp(1j * theta1), np.exp(1j * theta2)], dtype=complex) / np.sqrt(3)


def uz_operator(theta1: float, theta2: float) -> np.ndarray:
    return np.diag([1, np.exp(1j * theta1), np.exp(1j * theta2)]).astype(complex)


@dataclass(frozen=True)
class InjectionOutcome:
    measurement: int
    probability: float
    post_state: np.ndarray          # state of the resource qutrit after the branch
    corrected: np.ndarray | None    # U_Z|psi> recovery when the correction is Clifford


def is_third_level(uz: np.ndarray) -> bool:
    """Diagonal U is in the third level of the Clifford hierarchy iff
    U X U^dagger is Clifford."""
    return is_clifford(uz @ pauli_x(3) @ uz.conj().T)


def inject_uz(uz: np.ndarray, psi: np.ndarray) -> list[InjectionOutcome]:
    """Consume one copy of |U_Z> to (attempt to) apply the diagonal unitary uz.

    Circuit: resource |U_Z> on qutrit 1, target |psi> on qutrit 2, a
    controlled-X^2 with the target as target, then a Z-basis measurement of
    qutrit 2 with outcome m.  The modified variant (second controlled shift)
    leaves the resource qutrit in X^m U_Z X^{-m} |psi>; when uz is third
    level the Clifford correction U_Z X^m U_Z^dagger recovers U_Z|psi> on
    every branch.
    """
    uz = np.asarray(uz, dtype=complex)
    if not np.allclose(uz, np.diag(np.diag(uz)), atol=ATOL):
        raise ValueError("injected unitary must be diagonal")
    if not np.allclose(uz @ uz.conj().T, np.eye(3), atol=ATOL):
        raise ValueError("injected operator must be unitary")
    psi = np.asarray(psi, dtype=complex)
    resource = uz @ equatorial_state(0, 0)  # |U_Z> = U_Z H |0>
    state = np.kron(resource, psi).reshape(3, 3)
    # controlled-X^2: |c>|t> -> |c>|t + 2c>
    shifted = np.empty_like(state)
    for c in range(3):
        for t in range(3):
            shifted[c, (t + 2 * c) % 3] = state[c, t]
    third = is_third_level(uz)
    xm = pauli_x(3)
    outcomes = []
    for m in range(3):
        branch = shifted[:, m]
        prob = float(np.vdot(branch, branch).real)
        if prob > ATOL:
            post = branch / np.sqrt(prob)
        else:
            post = branch * 0
        # second controlled shift folds the known outcome back into the
        # resource qutrit: X^m U_Z X^{-m} |psi>
        post = np.linalg.matrix_power(xm, m) @ post
        corrected = None
        if third:
            xinv = np.linalg.matrix_power(xm, (3 - m) % 3)
            corr = uz @ np.linalg.matrix_power(xm, m) @ uz.conj().T
            corrected = corr @ xinv @ post
        outcomes.append(InjectionOutcome(m, prob, post, corrected))
    return outcomes


def fidelity(a: np.ndarray, b: np.ndarray) -> float:
    return float(abs(np.vdot(a, b)) ** 2)


def reduce_strange_pair(psi: np.ndarray | None = None) -> tuple[np.ndarray, float]:
    """2-to-1 reduction of a pair alpha|1> + beta|2> to the Norell state.

    Projects onto the Z1 Z2 code and decodes; succeeds with probability
    2|alpha*beta|^2 (1/2 for the strange state itself).  Returns the decoded
    density matrix and success probability.
    """
    if psi is None:
        psi = magic_states().strange
    psi = np.asarray(psi, dtype=complex)
    if abs(psi[0]) > ATOL:
        raise ValueError("input must be supported on |1>, |2>")
    if abs(np.vdot(psi, psi) - 1) > 1e-9:
        raise ValueError("input state must be normalized")
    rho = np.outer(psi, psi.conj())
    grid, prob = dense_distill_oracle(strange_pair_reduction_code(), rho)
    return state_from_wigner(grid), prob


def reduce_norell_pair() -> tuple[np.ndarray, float]:
    """2-to-1 reduction of a Norell pair to an equatorial state via the
    omega X1 X2 code; succeeds with probability 1/4."""
    st = magic_states()
    rho = np.outer(st.norell, st.norell.conj())
    grid, prob = dense_distill_oracle(norell_pair_reduction_code(), rho)
    return state_from_wigner(grid), prob


def clifford_equivalent(psi: np.ndarray, phi: np.ndarray) -> bool:
    """Search the 216-element mod-phase Clifford group for a unitary mapping
    psi onto phi (up to phase)."""
    for u in clifford_group_mod_phase():
        if fidelity(u @ psi, phi) > 1 - 1e-9:
            return True
    return False


def group_order_mod_phase(generators: list[np.ndarray], cap: int = 10_000) -> int:
    """Order of the group generated by `generators`, modulo global phase.

    Breadth-first closure; raises if the group exceeds `cap` elements (the
    injection walk only makes sense for small finite groups).
    """
    from .dense import canonical_mod_phase

    seen = {canonical_mod_phase(np.eye(3, dtype=complex))}
    frontier = [np.eye(3, dtype=complex)]
    while frontier:
        nxt = []
        for u in frontier:
            for g in generators:
                w = g @ u
                key = canonical_mod_phase(w)
                if key not in seen:
                    if len(seen) >= cap:
                        raise RuntimeError(f"group order exceeds cap {cap}")
                    seen.add(key)
                    nxt.append(w)
        frontier = nxt
    return len(seen)


def repeated_injection_walk(theta1: float = 0.0, theta2: float = np.pi,
                            trials: int = 1000, max_rounds: int = 200,
                            rng: np.random.Generator | None = None) -> float:
    """Empirical mean number of injection rounds until the accumulated
    operator is Clifford-equivalent to the target diagonal unitary.

    Models the non-third-level case: each round applies X^m U_Z X^{-m} for a
    measured m; the walk stops when (accumulated) * U_Z^dagger is Clifford.
    """
    rng = rng or np.random.default_rng(0)
    uz = uz_operator(theta1, theta2)
    xm = pauli_x(3)
    conjugates = [np.linalg.matrix_power(xm, m) @ uz @ np.linalg.matrix_power(xm, (3 - m) % 3)
                  for m in range(3)]
    total = 0
    for _ in range(trials):
        acc = np.eye(3, dtype=complex)
        for step in range(1, max_rounds + 1):
            m = int(rng.integers(0, 3))
            acc = conjugates[m] @ acc
            if is_clifford(acc @ uz.conj().T):
                total += step
                break
        else:
            total += max_rounds
    return total / trials
