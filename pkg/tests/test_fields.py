"""Prime field arithmetic, matrices, symplectic vectors."""
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from golaymsd.codes import golay_ternary
from golaymsd.fields import FieldMatrix, SympVec, field_inv, symplectic_product


@pytest.mark.parametrize("x,d,expected", [(2, 3, 2), (1, 3, 1), (3, 5, 2)])
def test_inverse_examples(x, d, expected):
    assert field_inv(x, d) == expected


@pytest.mark.parametrize("d", [2, 3, 5, 7])
def test_inverse_exhaustive(d):
    for x in range(1, d):
        assert (x * field_inv(x, d)) % d == 1


def test_inverse_of_zero_rejected():
    with pytest.raises(ZeroDivisionError, match="no inverse"):
        field_inv(0, 3)


def test_nonprime_modulus_rejected():
    with pytest.raises(ValueError):
        field_inv(1, 9)


def test_symplectic_canonical_pair():
    a = SympVec(3, (1, 0), (0, 0))
    b = SympVec(3, (0, 0), (1, 0))
    assert symplectic_product(a, b) == 1
    assert symplectic_product(b, a) == 2  # -1 mod 3


def test_symplectic_self_and_parallel():
    a = SympVec(3, (1,), (1,))
    assert symplectic_product(a, a) == 0
    assert symplectic_product(a, SympVec(3, (1,), (1,))) == 0


def test_symplectic_size_mismatch():
    with pytest.raises(ValueError):
        symplectic_product(SympVec(3, (1,), (0,)), SympVec(3, (1, 0), (0, 0)))


vecs = st.tuples(
    st.lists(st.integers(0, 2), min_size=3, max_size=3),
    st.lists(st.integers(0, 2), min_size=3, max_size=3),
).map(lambda uv: SympVec(3, tuple(uv[0]), tuple(uv[1])))


@given(vecs, vecs, vecs, st.integers(0, 2))
@settings(max_examples=60, deadline=None)
def test_symplectic_bilinear_antisymmetric(a, b, c, scale):
    assert symplectic_product(a, b) == (-symplectic_product(b, a)) % 3
    scaled = SympVec(3, tuple(scale * x for x in a.u), tuple(scale * x for x in a.v))
    assert symplectic_product(scaled, b) == (scale * symplectic_product(a, b)) % 3
    summed = SympVec(3, tuple(x + y for x, y in zip(a.u, c.u)),
                     tuple(x + y for x, y in zip(a.v, c.v)))
    assert symplectic_product(summed, b) == (
        symplectic_product(a, b) + symplectic_product(c, b)) % 3


def test_row_reduce_identity_fixed():
    m = FieldMatrix(3, ((1, 0), (0, 1)))
    assert m.row_reduce() == m


def test_row_reduce_duplicate_rows():
    m = FieldMatrix(3, ((1, 2, 0), (1, 2, 0)))
    rr = m.row_reduce()
    assert rr.rows[0] == (1, 2, 0)
    assert rr.rows[1] == (0, 0, 0)
    assert m.rank() == 1


matrices = st.lists(
    st.lists(st.integers(0, 2), min_size=4, max_size=4), min_size=1, max_size=4
).map(lambda rows: FieldMatrix(3, tuple(tuple(r) for r in rows)))


@given(matrices)
@settings(max_examples=60, deadline=None)
def test_row_reduce_idempotent_and_span_preserving(m):
    rr = m.row_reduce()
    assert rr.row_reduce() == rr
    assert rr.rank() == m.rank()
    for row in m.rows:
        assert rr.in_row_span(row)
    for row in rr.rows:
        assert m.in_row_span(row)


def test_golay_dual_rank():
    assert golay_ternary().generator.rank() == 5


def test_solve_linear_system():
    m = FieldMatrix(3, ((1, 2, 0), (0, 1, 1)))
    x = m.solve((2, 1))
    arr = m.array()
    assert tuple((arr @ x) % 3) == (2, 1)
    inconsistent = FieldMatrix(3, ((1, 1), (2, 2)))
    assert inconsistent.solve((1, 1)) is None


def test_text_round_trip():
    m = golay_ternary().generator
    text = m.to_text()
    assert text.splitlines()[0] == "3 5 11"
    assert FieldMatrix.from_text(text) == m


def test_text_format_errors():
    with pytest.raises(ValueError):
        FieldMatrix.from_text("3 2 2\n1 0\n")  # missing a row
    with pytest.raises(ValueError):
        FieldMatrix.from_text("3 1 3\n1 0\n")  # short row


def test_empty_matrix_needs_width():
    with pytest.raises(ValueError):
        FieldMatrix(3, ())
    m = FieldMatrix(3, (), 4)
    assert m.ncols == 4 and m.nrows == 0
    assert m.transpose().nrows == 4
    assert m.rank() == 0
