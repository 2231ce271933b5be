"""Backend parity: the compiled kernels and the NumPy fallback must produce
identical integer tables."""
import numpy as np
import pytest

from golaymsd._kernels import _core, backend_name, pure
from golaymsd.codes import golay_binary, golay_qutrit_code

RNG = np.random.default_rng(7)

needs_core = pytest.mark.skipif(_core is None, reason="compiled kernels not built")


def random_problem(n, m, n_classes, d=3):
    amat = RNG.integers(0, d, size=(n, m))
    bmat = RNG.integers(0, d, size=(n, m))
    az, bz, ax, bx = (RNG.integers(0, d, size=n) for _ in range(4))
    tables = RNG.integers(0, n_classes, size=(n, d, d))
    # every class id must appear somewhere to keep the count tuples aligned
    tables.ravel()[:n_classes] = np.arange(n_classes)
    return amat, bmat, az, bz, ax, bx, tables


@needs_core
@pytest.mark.parametrize("n,m,n_classes", [(4, 3, 2), (5, 4, 3), (7, 5, 4), (3, 0, 2)])
def test_pattern_counts_parity(n, m, n_classes):
    args = random_problem(n, m, n_classes)
    got_core = _core.pattern_counts(*args, n_classes, 3)
    got_pure = pure.pattern_counts(*args, n_classes, 3)
    assert got_core == got_pure


@needs_core
def test_pattern_counts_parity_golay():
    code = golay_qutrit_code()
    mat = code.matrix.array()
    amat, bmat = mat[:, :11].T.copy(), mat[:, 11:].T.copy()
    az, bz = np.array(code.logical_z.u), np.array(code.logical_z.v)
    ax, bx = np.array(code.logical_x.u), np.array(code.logical_x.v)
    base = np.zeros((3, 3), dtype=np.int64)
    base[0, 0] = 0
    base[0, 1:] = 1
    base[1:, :] = 2
    tables = np.repeat(base[None, :, :], 11, axis=0)
    got_core = _core.pattern_counts(amat, bmat, az, bz, ax, bx, tables, 3, 3)
    got_pure = pure.pattern_counts(amat, bmat, az, bz, ax, bx, tables, 3, 3)
    assert got_core == got_pure


def test_pattern_count_totals():
    code = golay_qutrit_code()
    mat = code.matrix.array()
    amat, bmat = mat[:, :11].T.copy(), mat[:, 11:].T.copy()
    az, bz = np.array(code.logical_z.u), np.array(code.logical_z.v)
    ax, bx = np.array(code.logical_x.u), np.array(code.logical_x.v)
    tables = np.zeros((11, 3, 3), dtype=np.int64)
    tables[:, 0, 0] = 1
    counts = pure.pattern_counts(amat, bmat, az, bz, ax, bx, tables, 2, 3)
    for patterns in counts.values():
        assert sum(patterns.values()) == 3**10


@needs_core
def test_pair_tables_parity():
    words = np.array([int(x) for x in RNG.integers(0, 2**23, size=128)], dtype=np.int64)
    assert (_core.pauli_pair_tables(words, 23) == pure.pauli_pair_tables(words, 23)).all()


@needs_core
def test_pair_tables_parity_golay_binary():
    code = golay_binary()
    words = []
    for bits in _spanned(code):
        words.append(bits)
    words = np.array(words, dtype=np.int64)
    assert (_core.pauli_pair_tables(words, 23) == pure.pauli_pair_tables(words, 23)).all()


def _spanned(code):
    gens = [sum(1 << i for i, b in enumerate(row) if b) for row in code.generator.rows]
    words = [0]
    for g in gens:
        words += [w ^ g for w in words]
    return words


def test_backend_name_reports_something():
    assert backend_name() in ("cython", "pure-python")
