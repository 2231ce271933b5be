"""Exact T-state distillation curves for qubit codes.

The odd-prime phase-space machinery does not apply at d = 2, so these curves
come from direct stabilizer-group expectation sums: every group element
i^p X^a Z^b contributes sign * ((1-delta)/sqrt(3))^weight, and grouping
elements by (phase, weight) turns the 2^22-element Golay enumeration into a
signed weight-enumerator table.  All sqrt(3) powers are tracked as integer
exponents so the assembled curves stay rational.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from ._kernels import pauli_pair_tables
from .codes import golay_binary
from .distill import extract_factored_form
from .exactpoly import Poly, RationalFunction, isolate_fixed_point


@dataclass(frozen=True)
class PauliString:
    """n-qubit Pauli operator i^phase_pow * X^x Z^z with bit-packed supports."""

    n: int
    x: int
    z: int
    phase_pow: int = 0

    def __mul__(self, other: "PauliString") -> "PauliString":
        if self.n != other.n:
            raise ValueError("size mismatch")
        # moving other's X block past self's Z block: each overlap gives -1
        flips = (self.z & other.x).bit_count()
        return PauliString(
            self.n,
            self.x ^ other.x,
            self.z ^ other.z,
            (self.phase_pow + other.phase_pow + 2 * flips) % 4,
        )

    def weight(self) -> int:
        return (self.x | self.z).bit_count()

    def identity_like(self) -> bool:
        return self.x == 0 and self.z == 0


def identity_pauli(n: int) -> PauliString:
    return PauliString(n, 0, 0, 0)


def pauli_from_xz(n: int, xbits, zbits) -> PauliString:
    x = sum(1 << i for i, b in enumerate(xbits) if b % 2)
    z = sum(1 << i for i, b in enumerate(zbits) if b % 2)
    return PauliString(n, x, z)


def y_all(n: int) -> PauliString:
    """Hermitian Y^(x)n = i^n X^(1..1) Z^(1..1)."""
    ones = (1 << n) - 1
    return PauliString(n, ones, ones, n % 4)


def enumerate_group(generators: list[PauliString]) -> list[PauliString]:
    """All 2^k products of commuting involutive generators."""
    elements = [identity_pauli(generators[0].n)]
    for g in generators:
        elements += [e * g for e in elements]
    return elements


def t_expectation(p: PauliString) -> tuple[int, int]:
    """Expectation of p in the twirled T state as (phase_pow, weight):
    value = i^phase_pow * ((1-delta)/sqrt 3)^weight.

    Per qubit: <I> = 1, <X> = <Z> = t and <XZ> = <-iY> = -i t.
    """
    overlap = (p.x & p.z).bit_count()
    return (p.phase_pow - overlap) % 4, p.weight()


def signed_weight_tables(elements: list[PauliString], n: int) -> np.ndarray:
    """(4, n+1) table: count of group elements by (i-phase of the T-state
    expectation, Pauli weight)."""
    table = np.zeros((4, n + 1), dtype=np.int64)
    for p in elements:
        ph, w = t_expectation(p)
        table[ph, w] += 1
    return table


def _poly_from_table(table: np.ndarray, n: int, sqrt3_shift: int) -> Poly:
    """sum_w net[w] (1-delta)^w 3^{-w/2}, multiplied by 3^{sqrt3_shift/2}.

    The imaginary rows must cancel exactly and every surviving weight must
    make the net sqrt(3) exponent even; both are asserted.
    """
    assert (table[1] == table[3]).all(), "imaginary parts must cancel weight by weight"
    net = table[0] - table[2]
    acc = Poly(("delta",))
    one_minus = Poly.univariate("delta", [1, -1])
    for w in np.nonzero(net)[0]:
        w = int(w)
        if (w - sqrt3_shift) % 2:
            raise AssertionError(f"odd sqrt(3) power survives at weight {w}")
        acc = acc + one_minus**w * Fraction(int(net[w]), 3 ** ((w - sqrt3_shift) // 2))
    return acc


@dataclass(frozen=True)
class TCurve:
    """delta_out as an exact rational function, with the numerator split as
    delta^2 * p_poly / q_poly (integer polynomials, q(0) > 0)."""

    curve: RationalFunction
    p_poly: Poly
    q_poly: Poly

    def threshold(self) -> tuple[Fraction, Fraction, Fraction]:
        return isolate_fixed_point(self.curve)


def _curve_from_tables(t_identity, t_x, t_y, t_z, n: int) -> TCurve:
    s_proj = _poly_from_table(t_identity, n, 0)
    bloch = [_poly_from_table(t, n, 1) for t in (t_x, t_y, t_z)]
    assert bloch[0] == bloch[1] == bloch[2], "logical Bloch components must agree"
    # the decoded attractor may be the antipodal corner of the magic-state
    # octahedron (a Clifford image of the target); align the logical frame
    # once, by the sign of the Bloch components at zero noise
    zero = {"delta": Fraction(0)}
    sign = 1 if bloch[0].evaluate(zero) * s_proj.evaluate(zero) > 0 else -1
    # delta_out = 1 - sqrt(3) * mean of the aligned Bloch components
    num = s_proj * 3 - (bloch[0] + bloch[1] + bloch[2]) * sign
    den = s_proj * 3
    curve = RationalFunction(num, den)
    p_poly, q_poly = extract_factored_form(curve, "delta", 2)
    return TCurve(curve=curve, p_poly=p_poly, q_poly=q_poly)


@lru_cache(maxsize=None)
def distill_t_golay23() -> TCurve:
    """T-state curve of the 23-qubit code built on the binary Golay dual.

    The stabilizer group {X^a Z^b : a, b in C} is enumerated as codeword
    pairs; the kernel tabulates signed weights for the projector and the
    three transversal logical directions.
    """
    code = golay_binary()
    n = code.n
    words = np.array([_bits_to_int(row) for row in _span(code)], dtype=np.int64)
    tables = pauli_pair_tables(words, n)
    return _curve_from_tables(tables[0], tables[1], tables[2], tables[3], n)


def _span(code):
    gen = [_bits_to_int(r) for r in code.generator.rows]
    words = [0]
    for g in gen:
        words += [w ^ g for w in words]
    return [_int_to_bits(w, code.n) for w in words]


def _bits_to_int(bits) -> int:
    return sum(1 << i for i, b in enumerate(bits) if b % 2)


def _int_to_bits(word: int, n: int):
    return tuple((word >> i) & 1 for i in range(n))


@lru_cache(maxsize=None)
def distill_t_5qubit() -> TCurve:
    """T-state curve of the 5-qubit perfect code (direct group enumeration)."""
    n = 5
    gens = []
    for s in range(4):
        xb = [0] * n
        zb = [0] * n
        for offset, (gx, gz) in enumerate(((1, 0), (0, 1), (0, 1), (1, 0), (0, 0))):
            xb[(offset + s) % n] = gx
            zb[(offset + s) % n] = gz
        gens.append(pauli_from_xz(n, xb, zb))
    elements = enumerate_group(gens)
    assert len(elements) == 16
    ones = (1 << n) - 1
    lx = PauliString(n, ones, 0)
    lz = PauliString(n, 0, ones)
    ly = y_all(n)
    tables = [
        signed_weight_tables([e * obs for e in elements], n)
        for obs in (identity_pauli(n), lx, ly, lz)
    ]
    return _curve_from_tables(*tables, n)


def projector_trace_curve(elements: list[PauliString], n: int) -> Poly:
    """Tr(Pi rho(delta)^(x)n) as a polynomial: 2^{-k} times the sum of the
    group elements' T-state expectations (k = log2 of the group order)."""
    k = len(elements).bit_length() - 1
    table = signed_weight_tables(elements, n)
    return _poly_from_table(table, n, 0) * Fraction(1, 2**k)
