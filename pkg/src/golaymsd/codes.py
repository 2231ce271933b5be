"""Classical self-orthogonal codes and the qudit stabilizer codes built from them.

The main objects: the 5x11 ternary Golay-dual generator, its 11-qutrit CSS
code with transversal symmetries, the 23-bit binary Golay dual for the qubit
appendix, the cyclic 5-qutrit code, and the two 2-qutrit reduction codes used
for converting magic states.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product

import numpy as np

from .fields import FieldMatrix, SympVec, symplectic_product


@dataclass(frozen=True)
class ClassicalCode:
    """Linear code over Z_d presented by a full-row-rank generator matrix."""

    generator: FieldMatrix

    def __post_init__(self):
        if self.generator.rank() != self.generator.nrows:
            raise ValueError("generator matrix must have full row rank")

    @property
    def n(self) -> int:
        return self.generator.ncols

    @property
    def k(self) -> int:
        return self.generator.nrows

    @property
    def d(self) -> int:
        return self.generator.d

    def codewords(self):
        """Iterate all d**k codewords as numpy vectors (small k only)."""
        gen = self.generator.array()
        for coeffs in product(range(self.d), repeat=self.k):
            yield (np.array(coeffs) @ gen) % self.d


def is_self_orthogonal(code: ClassicalCode) -> bool:
    g = code.generator
    return (g @ g.transpose()).is_zero()


def weight_distribution(code: ClassicalCode) -> dict[int, int]:
    """Exhaustive weight enumerator of the row span (d**k words)."""
    counts: dict[int, int] = {}
    for w in code.codewords():
        wt = int(np.count_nonzero(w))
        counts[wt] = counts.get(wt, 0) + 1
    return counts


def minimum_weight(code: ClassicalCode) -> int:
    dist = weight_distribution(code)
    return min(w for w in dist if w > 0)


def golay_ternary() -> ClassicalCode:
    """Generator of the [11,5,6] dual of the ternary Golay code (entries mod 3)."""
    rows = [
        [-1,  1,  1, -1, -1,  0,  1,  0,  0,  0,  0],
        [-1,  1, -1,  1,  0, -1,  0,  1,  0,  0,  0],
        [-1, -1,  1,  0,  1, -1,  0,  0,  1,  0,  0],
        [-1, -1,  0,  1, -1,  1,  0,  0,  0,  1,  0],
        [-1,  0, -1, -1,  1,  1,  0,  0,  0,  0,  1],
    ]
    return ClassicalCode(FieldMatrix.from_array(rows, 3))


def _gf2_divmod(num: int, den: int) -> tuple[int, int]:
    # polynomials over GF(2) packed as ints, bit k = coefficient of x^k
    q = 0
    deg_den = den.bit_length() - 1
    while num and num.bit_length() - 1 >= deg_den:
        shift = num.bit_length() - 1 - deg_den
        q ^= 1 << shift
        num ^= den << shift
    return q, num


def golay_binary() -> ClassicalCode:
    """Generator of the [23,11,8] dual of the binary Golay code.

    Built cyclically: the [23,12,7] Golay code is generated by
    g(x) = x^11 + x^10 + x^6 + x^5 + x^4 + x^2 + 1, and its dual is the
    cyclic code generated by the reciprocal of (x^23 - 1)/g(x).
    """
    n = 23
    g = 0b110001110101
    h, rem = _gf2_divmod((1 << n) | 1, g)
    assert rem == 0, "generator polynomial must divide x^23 + 1"
    deg_h = h.bit_length() - 1
    hrev = 0
    for i in range(deg_h + 1):
        if (h >> i) & 1:
            hrev |= 1 << (deg_h - i)
    rows = []
    for i in range(n - deg_h):
        word = (hrev << i) & ((1 << n) - 1)
        rows.append(tuple((word >> j) & 1 for j in range(n)))
    return ClassicalCode(FieldMatrix(2, tuple(rows)))


@dataclass(frozen=True)
class StabilizerCode:
    """n-qudit stabilizer code with one logical qudit.

    The stabilizer group is generated by displacement operators whose
    symplectic vectors are the rows of `matrix`, each multiplied by
    omega**phase for the corresponding entry of `phases` (all zero for the
    codes built by the CSS construction).  Logical operators are the
    displacements of `logical_x` and `logical_z`.
    """

    n: int
    d: int
    matrix: FieldMatrix
    logical_x: SympVec
    logical_z: SympVec
    phases: tuple[int, ...] = ()

    def __post_init__(self):
        if not self.phases:
            object.__setattr__(self, "phases", (0,) * self.matrix.nrows)
        object.__setattr__(self, "phases", tuple(p % self.d for p in self.phases))
        if len(self.phases) != self.matrix.nrows:
            raise ValueError("one phase per stabilizer row required")
        if self.matrix.ncols != 2 * self.n or self.matrix.d != self.d:
            raise ValueError("stabilizer matrix must be (n-k) x 2n over Z_d")
        rows = self.stabilizer_rows()
        for i, a in enumerate(rows):
            for b in rows[i:]:
                if symplectic_product(a, b) != 0:
                    raise ValueError("stabilizer rows do not commute")
        for which, log in (("X", self.logical_x), ("Z", self.logical_z)):
            if log.d != self.d or log.n != self.n:
                raise ValueError(f"logical {which} has wrong shape")
            for r in rows:
                if symplectic_product(r, log) != 0:
                    raise ValueError(f"logical {which} does not commute with the stabilizer")
        if symplectic_product(self.logical_z, self.logical_x) == 0:
            raise ValueError("logical Z and X must not commute")

    @property
    def num_generators(self) -> int:
        return self.matrix.nrows

    def stabilizer_rows(self) -> list[SympVec]:
        return [SympVec.from_row(r, self.d) for r in self.matrix.rows]

    def is_phased(self) -> bool:
        return any(self.phases)

    def phase_offset(self) -> SympVec:
        """A symplectic vector t with <row_j, t> = phase_j for every row.

        Conjugating the canonical (phase-free) stabilizer group by the
        displacement of t produces this code's phased generators; the
        distillation map uses t to shift its evaluation points.
        """
        if not self.is_phased():
            return SympVec(self.d, (0,) * self.n, (0,) * self.n)
        # <row, t> = row_u . t_v - row_v . t_u: solve M' s = phases where
        # s = (t_u | t_v) and M' = (-row_v | row_u)
        coeffs = []
        for row in self.matrix.rows:
            ru, rv = row[: self.n], row[self.n:]
            coeffs.append(tuple((-x) % self.d for x in rv) + ru)
        sol = FieldMatrix(self.d, tuple(coeffs)).solve(self.phases)
        if sol is None:
            raise ValueError("inconsistent stabilizer phases")
        return SympVec(self.d, sol[: self.n], sol[self.n:])


def css_from_self_orthogonal(mc: ClassicalCode) -> StabilizerCode:
    """CSS code from a self-orthogonal classical code of odd length.

    Stabilizer matrix is block-diagonal (Mc|0 ; 0|Mc); the logical X is the
    all-ones X displacement and the logical Z is the displacement of
    (Z^n)^dagger, i.e. the symplectic vector (0|-1,...,-1).
    """
    if not is_self_orthogonal(mc):
        raise ValueError("CSS construction requires a self-orthogonal code")
    n = mc.n
    if n % 2 == 0:
        raise ValueError("CSS construction requires odd code length")
    ones = [1] * n
    gen = mc.generator
    for row in gen.rows:
        if sum(row) % mc.d != 0:
            raise ValueError("every generator row must be orthogonal to the all-ones vector")
    if 2 * mc.k != n - 1:
        raise ValueError(f"code dimension {mc.k} != (n-1)/2; the CSS code would not have one logical qudit")
    zeros = [[0] * n for _ in range(mc.k)]
    top = np.hstack([gen.array(), np.array(zeros)])
    bot = np.hstack([np.array(zeros), gen.array()])
    matrix = FieldMatrix.from_array(np.vstack([top, bot]), mc.d)
    logical_x = SympVec(mc.d, tuple(ones), (0,) * n)
    logical_z = SympVec(mc.d, (0,) * n, tuple(-1 for _ in range(n)))
    code = StabilizerCode(n=n, d=mc.d, matrix=matrix, logical_x=logical_x, logical_z=logical_z)
    assert matrix.rank() == n - 1
    return code


# SL(2,Z_d) transforms of the transversal symmetries: the Fourier-type map
# sends (u,v) -> (-v,u) and the N-type map sends (u,v) -> (-u,-u-v)
def _apply_sl2_rowwise(code: StabilizerCode, f) -> FieldMatrix:
    rows = []
    for r in code.stabilizer_rows():
        new_u, new_v = [], []
        for ui, vi in zip(r.u, r.v):
            a, b = f(ui, vi)
            new_u.append(a % code.d)
            new_v.append(b % code.d)
        rows.append(tuple(new_u) + tuple(new_v))
    return FieldMatrix(code.d, tuple(rows))


def transversal_invariance_check(code: StabilizerCode) -> bool:
    """True iff the code's row span is preserved by both transversal
    symplectic maps (the Hadamard-type and N-type single-qudit rotations
    applied to every qudit)."""
    h_image = _apply_sl2_rowwise(code, lambda u, v: (-v, u))
    n_image = _apply_sl2_rowwise(code, lambda u, v: (-u, -u - v))
    return (code.matrix.same_row_span(h_image)
            and code.matrix.same_row_span(n_image))


def golay_qutrit_code() -> StabilizerCode:
    """The [[11,1,5]] qutrit code from the ternary Golay dual."""
    return css_from_self_orthogonal(golay_ternary())


def five_qutrit_code() -> StabilizerCode:
    """Cyclic [[5,1,3]] qutrit code with transversal X and inverse-Z logicals."""
    base_u = (1, 0, 0, -1, 0)
    base_v = (0, 1, -1, 0, 0)
    rows = []
    for s in range(4):
        u = tuple(base_u[(i - s) % 5] for i in range(5))
        v = tuple(base_v[(i - s) % 5] for i in range(5))
        rows.append(u + v)
    return StabilizerCode(
        n=5, d=3,
        matrix=FieldMatrix(3, tuple(rows)),
        logical_x=SympVec(3, (1,) * 5, (0,) * 5),
        logical_z=SympVec(3, (0,) * 5, (-1,) * 5),
    )


def strange_pair_reduction_code() -> StabilizerCode:
    """2-to-1 reduction code with stabilizer Z1 Z2.

    Decodes with logical Z = Z2 and logical X = X1^2 X2; turns a pair of
    strange states into a Norell state with probability 1/2.
    """
    return StabilizerCode(
        n=2, d=3,
        matrix=FieldMatrix(3, ((0, 0, 1, 1),)),
        logical_x=SympVec(3, (2, 1), (0, 0)),
        logical_z=SympVec(3, (0, 0), (0, 1)),
    )


def norell_pair_reduction_code() -> StabilizerCode:
    """2-to-1 reduction code with stabilizer omega * X1 X2.

    Decodes with logical X = X2 and logical Z = Z1^2 Z2; turns a pair of
    Norell states into an equatorial state with probability 1/4.
    """
    return StabilizerCode(
        n=2, d=3,
        matrix=FieldMatrix(3, ((1, 1, 0, 0),)),
        logical_x=SympVec(3, (0, 1), (0, 0)),
        logical_z=SympVec(3, (0, 0), (2, 1)),
        phases=(1,),
    )


def has_low_weight_logical(code: StabilizerCode, max_weight: int) -> bool:
    """Search for a nonzero symplectic vector of weight <= max_weight that
    commutes with every stabilizer row but lies outside the stabilizer span.

    Exhaustive over supports and per-qudit values; vectorized so weight 4 on
    11 qutrits stays fast.  Returns True if such an (undetected-error)
    vector exists, i.e. the code distance is <= max_weight.
    """
    d, n = code.d, code.n
    mat = code.matrix.array()
    rr = code.matrix.row_reduce()
    # symplectic-pairing matrix: <row, x> = row . Omega x
    omega_rows = np.hstack([-mat[:, n:], mat[:, :n]]) % d
    cells = [(a, b) for a in range(d) for b in range(d) if a or b]
    for w in range(1, max_weight + 1):
        for support in combinations(range(n), w):
            vals = np.array(list(product(cells, repeat=w)), dtype=np.int64)
            cand = np.zeros((len(vals), 2 * n), dtype=np.int64)
            for j, q in enumerate(support):
                cand[:, q] = vals[:, j, 0]
                cand[:, q + n] = vals[:, j, 1]
            commuting = (cand @ omega_rows.T % d == 0).all(axis=1)
            for vec in cand[commuting]:
                if not rr.in_row_span(vec):
                    return True
    return False
