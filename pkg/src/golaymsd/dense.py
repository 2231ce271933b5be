"""Explicit complex-matrix Pauli/Clifford operators, discrete Wigner functions,
magic states and twirls for small qudit systems (d odd prime, n <= 5).

This module is the numerical oracle: double precision with 1e-12 assertion
tolerances.  All exact headline results come from the symbolic engine in
`distill`; nothing here feeds a reported number directly.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache, reduce

import numpy as np

from .codes import StabilizerCode
from .fields import SympVec, check_prime, field_inv


def omega(d: int) -> complex:
    return np.exp(2j * np.pi / d)


@lru_cache(maxsize=None)
def pauli_x(d: int) -> np.ndarray:
    m = np.zeros((d, d), dtype=complex)
    for k in range(d):
        m[(k + 1) % d, k] = 1
    m.flags.writeable = False
    return m


@lru_cache(maxsize=None)
def pauli_z(d: int) -> np.ndarray:
    m = np.diag(omega(d) ** np.arange(d))
    m.flags.writeable = False
    return m


@lru_cache(maxsize=None)
def displacement(u: int, v: int, d: int = 3) -> np.ndarray:
    """Heisenberg-Weyl displacement omega^(uv/2) X^u Z^v (d odd prime)."""
    check_prime(d)
    if d == 2:
        raise ValueError("displacement phase needs 2^{-1} mod d; qubits are unsupported here")
    u %= d
    v %= d
    half = field_inv(2, d)
    phase = omega(d) ** ((half * u * v) % d)
    m = phase * np.linalg.matrix_power(pauli_x(d), u) @ np.linalg.matrix_power(pauli_z(d), v)
    m.flags.writeable = False
    return m


def displacement_vec(vec: SympVec) -> np.ndarray:
    """Tensor product of per-qudit displacements for a symplectic vector."""
    mats = [displacement(u, v, vec.d) for u, v in zip(vec.u, vec.v)]
    return reduce(np.kron, mats)


def symplectic_unitary(f, d: int = 3) -> np.ndarray:
    """Metaplectic unitary V_F for a 2x2 matrix F over Z_d with det F = 1.

    Conjugation sends the displacement at (u, v) to the one at F(u, v).
    """
    check_prime(d)
    if d == 2:
        raise ValueError("d = 2 unsupported")
    (a, b), (c, dd) = ((int(x) % d for x in row) for row in f)
    if (a * dd - b * c) % d != 1:
        raise ValueError("F must have determinant 1 mod d")
    w = omega(d)
    half = field_inv(2, d)
    out = np.zeros((d, d), dtype=complex)
    if b != 0:
        binv = field_inv(b, d)
        for j in range(d):
            for k in range(d):
                e = (half * binv * (a * k * k - 2 * j * k + dd * j * j)) % d
                out[j, k] = w**e
        out /= np.sqrt(d)
    else:
        for k in range(d):
            e = (half * a * c * k * k) % d
            out[(a * k) % d, k] = w**e
    return out


HADAMARD_SL2 = ((0, -1), (1, 0))
N_SL2 = ((-1, 0), (-1, -1))
HPRIME_SL2 = ((1, 1), (1, 2))


@lru_cache(maxsize=None)
def phase_point(u: int, v: int, d: int = 3) -> np.ndarray:
    """Hermitian phase-point operator A_(u,v)."""
    if (u % d, v % d) != (0, 0):
        dd = displacement(u, v, d)
        m = dd @ phase_point(0, 0, d) @ dd.conj().T
    else:
        m = sum(displacement(a, b, d) for a in range(d) for b in range(d)) / d
    m = np.asarray(m)
    m.flags.writeable = False
    return m


def wigner_of(rho: np.ndarray) -> np.ndarray:
    """d x d discrete Wigner function W(u,v) = Tr(rho A_(u,v)) / d."""
    rho = np.asarray(rho, dtype=complex)
    d = rho.shape[0]
    out = np.empty((d, d))
    for u in range(d):
        for v in range(d):
            out[u, v] = np.trace(rho @ phase_point(u, v, d)).real
    return out / d


def state_from_wigner(grid) -> np.ndarray:
    """Inverse transform: rho = sum W(u,v) A_(u,v)."""
    grid = np.asarray(grid, dtype=float)
    d = grid.shape[0]
    rho = np.zeros((d, d), dtype=complex)
    for u in range(d):
        for v in range(d):
            rho += grid[u, v] * phase_point(u, v, d)
    return rho


# -- qutrit magic states ----------------------------------------------------

@dataclass(frozen=True)
class MagicStates:
    strange: np.ndarray
    norell: np.ndarray
    h_plus: np.ndarray
    h_minus: np.ndarray
    zero: np.ndarray


@lru_cache(maxsize=None)
def magic_states() -> MagicStates:
    """The qutrit Clifford eigenstates used throughout: |S>, |N>, |H_+1>,
    |H_-1> and |0>.

    The Hadamard eigenstates live in the real span of |0> and |1>+|2>; the
    -1 eigenvector is the orthogonal complement of the +1 one there (the
    one-angle two-sign shorthand often written for the pair is not actually
    an eigenvector).
    """
    s = np.array([0, 1, -1], dtype=complex) / np.sqrt(2)
    n = np.array([0, 1, 1], dtype=complex) / np.sqrt(2)
    phi = 0.5 * np.arctan(np.sqrt(2))
    hp = np.array([np.cos(phi), np.sin(phi) / np.sqrt(2), np.sin(phi) / np.sqrt(2)], dtype=complex)
    hm = np.array([np.sin(phi), -np.cos(phi) / np.sqrt(2), -np.cos(phi) / np.sqrt(2)], dtype=complex)
    zero = np.array([1, 0, 0], dtype=complex)
    return MagicStates(s, n, hp, hm, zero)


def hadamard() -> np.ndarray:
    return symplectic_unitary(HADAMARD_SL2, 3)


def n_operator() -> np.ndarray:
    return symplectic_unitary(N_SL2, 3)


def hprime_operator() -> np.ndarray:
    """The Clifford unitary fixing |S> and swapping |H_+1> with |H_-1>."""
    st = magic_states()
    out = (-1j) * np.outer(st.strange, st.strange.conj())
    out -= np.exp(1j * np.pi / 4) * np.outer(st.h_plus, st.h_minus.conj())
    out += np.exp(3j * np.pi / 4) * np.outer(st.h_minus, st.h_plus.conj())
    return out


# -- twirls ------------------------------------------------------------------

def _check_density(rho: np.ndarray) -> np.ndarray:
    rho = np.asarray(rho, dtype=complex)
    if rho.shape != (3, 3):
        raise ValueError("expected a single-qutrit density matrix")
    if not np.allclose(rho, rho.conj().T, atol=1e-9) or abs(np.trace(rho) - 1) > 1e-9:
        raise ValueError("input is not a density matrix (Hermitian, trace 1)")
    return rho


def twirl_strange(rho) -> tuple[np.ndarray, float]:
    """Project onto the depolarized-strange-state family.

    Averages over powers of the Hadamard, then symmetrizes the two +-1
    eigenstate populations; returns the twirled state and its depolarizing
    parameter delta = 3*eps/2.
    """
    rho = _check_density(rho)
    h = hadamard()
    avg = sum(np.linalg.matrix_power(h, k) @ rho @ np.linalg.matrix_power(h, k).conj().T
              for k in range(4)) / 4
    hp = hprime_operator()
    out = (avg + hp @ avg @ hp.conj().T) / 2
    st = magic_states()
    eps = (st.h_plus.conj() @ out @ st.h_plus + st.h_minus.conj() @ out @ st.h_minus).real
    return out, 1.5 * eps


def twirl_norell(rho) -> tuple[np.ndarray, float, float]:
    """Project onto the triangle spanned by |N>, |0> and |S|; returns the
    twirled state and (eps0, epsS)."""
    rho = _check_density(rho)
    nop = n_operator()
    out = sum(np.linalg.matrix_power(nop, k) @ rho @ np.linalg.matrix_power(nop, k).conj().T
              for k in range(6)) / 6
    st = magic_states()
    eps0 = (st.zero.conj() @ out @ st.zero).real
    eps_s = (st.strange.conj() @ out @ st.strange).real
    return out, float(eps0), float(eps_s)


# -- Clifford group ----------------------------------------------------------

def canonical_mod_phase(u: np.ndarray, decimals: int = 6) -> bytes:
    """Hashable key for a unitary up to global phase: normalize by the phase
    of the first entry above tolerance, then round."""
    flat = u.ravel()
    idx = np.argmax(np.abs(flat) > 1e-8)
    phase = flat[idx] / abs(flat[idx])
    normed = np.round(u / phase, decimals) + 0.0  # kill -0.0
    return normed.tobytes()


@lru_cache(maxsize=None)
def clifford_group_mod_phase() -> tuple[np.ndarray, ...]:
    """Closure of {ZN, H} under multiplication, modulo global phase.

    216 elements for a qutrit: 9 displacement classes times the 24 symplectic
    rotations.
    """
    gens = [pauli_z(3) @ n_operator(), hadamard()]
    seen = {}
    frontier = [np.eye(3, dtype=complex)]
    seen[canonical_mod_phase(frontier[0])] = frontier[0]
    while frontier:
        nxt = []
        for u in frontier:
            for g in gens:
                w = g @ u
                key = canonical_mod_phase(w)
                if key not in seen:
                    seen[key] = w
                    nxt.append(w)
        frontier = nxt
    return tuple(seen.values())


def is_clifford(u: np.ndarray, d: int = 3) -> bool:
    """Conjugation test: u is Clifford iff it maps X and Z to
    phase times displacement."""
    for g in (pauli_x(d), pauli_z(d)):
        conj = u @ g @ u.conj().T
        if not _is_phase_times_displacement(conj, d):
            return False
    return True


def _is_phase_times_displacement(m: np.ndarray, d: int) -> bool:
    for a in range(d):
        for b in range(d):
            dd = displacement(a, b, d)
            # m = c * dd for some unit scalar c?
            idx = np.unravel_index(np.argmax(np.abs(dd)), dd.shape)
            c = m[idx] / dd[idx]
            if abs(abs(c) - 1) < 1e-8 and np.allclose(m, c * dd, atol=1e-8):
                return True
    return False


# -- brute-force distillation oracle ------------------------------------------

def code_projector(code: StabilizerCode) -> np.ndarray:
    """Product of the generator eigenprojectors (phases included)."""
    dim = code.d**code.n
    proj = np.eye(dim, dtype=complex)
    w = omega(code.d)
    for row, p in zip(code.stabilizer_rows(), code.phases):
        g = (w**p) * displacement_vec(row)
        term = np.eye(dim, dtype=complex)
        acc = np.eye(dim, dtype=complex)
        for _ in range(code.d - 1):
            acc = acc @ g
            term = term + acc
        proj = proj @ (term / code.d)
    return proj


def logical_displacements(code: StabilizerCode) -> dict[tuple[int, int], np.ndarray]:
    """Logical displacement operators built from the code's logical X/Z."""
    d = code.d
    half = field_inv(2, d)
    xl = displacement_vec(code.logical_x)
    zl = displacement_vec(code.logical_z)
    w = omega(d)
    out = {}
    for u in range(d):
        for v in range(d):
            op = (w ** ((half * u * v) % d)) * np.linalg.matrix_power(xl, u) @ np.linalg.matrix_power(zl, v)
            out[(u, v)] = op
    return out


def dense_distill_oracle(code: StabilizerCode, rho_in: np.ndarray) -> tuple[np.ndarray, float]:
    """Project rho_in^(x n) onto the codespace and decode one qudit.

    Returns (output Wigner grid, success probability).  Dense matrices limit
    this to n <= 5.
    """
    if code.n > 5:
        raise ValueError("oracle limited to n <= 5")
    if code.d != 3:
        raise ValueError("oracle implemented for qutrits")
    rho_in = np.asarray(rho_in, dtype=complex)
    proj = code_projector(code)
    rho = reduce(np.kron, [rho_in] * code.n)
    p = np.trace(proj @ rho).real
    rho_code = proj @ rho @ proj.conj().T / p
    d = code.d
    rho_out = np.zeros((d, d), dtype=complex)
    for (u, v), op in logical_displacements(code).items():
        rho_out += np.trace(rho_code @ op.conj().T) * displacement(u, v, d)
    rho_out /= d
    return wigner_of(rho_out), float(p)
