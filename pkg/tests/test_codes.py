"""Classical codes and stabilizer code construction."""
import pytest

from golaymsd.codes import (ClassicalCode, StabilizerCode, css_from_self_orthogonal,
                            five_qutrit_code, golay_binary, golay_qutrit_code,
                            golay_ternary, has_low_weight_logical, is_self_orthogonal,
                            minimum_weight, norell_pair_reduction_code,
                            strange_pair_reduction_code, transversal_invariance_check,
                            weight_distribution)
from golaymsd.fields import FieldMatrix, SympVec, symplectic_product


def test_golay_ternary_self_orthogonal():
    assert is_self_orthogonal(golay_ternary())


def test_golay_ternary_rank_and_minimum_weight():
    code = golay_ternary()
    assert code.k == 5 and code.n == 11
    # exhaustive over all 3^5 = 243 codewords
    assert minimum_weight(code) == 6


def test_all_ones_not_self_orthogonal():
    ones = ClassicalCode(FieldMatrix(3, ((1,) * 11,)))
    assert not is_self_orthogonal(ones)  # 11 = 2 mod 3


def test_empty_code_self_orthogonal():
    empty = ClassicalCode(FieldMatrix(3, (), 11))
    assert is_self_orthogonal(empty)


def test_golay_binary_properties():
    code = golay_binary()
    assert code.n == 23 and code.k == 11
    assert is_self_orthogonal(code)
    assert code.generator.rank() == 11
    assert weight_distribution(code) == {0: 1, 8: 506, 12: 1288, 16: 253}


def test_css_golay_structure():
    code = golay_qutrit_code()
    assert code.n == 11 and code.num_generators == 10
    assert code.matrix.rank() == 10  # one logical qutrit
    rows = code.stabilizer_rows()
    for i, a in enumerate(rows):
        for b in rows[i:]:
            assert symplectic_product(a, b) == 0
        assert symplectic_product(a, code.logical_x) == 0
        assert symplectic_product(a, code.logical_z) == 0
    # anticommutation value n mod 3 for these logicals (nonzero is what matters)
    assert symplectic_product(code.logical_z, code.logical_x) == 11 % 3 == 2


def test_css_preconditions_named():
    not_so = ClassicalCode(FieldMatrix(3, ((1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0),)))
    with pytest.raises(ValueError, match="self-orthogonal"):
        css_from_self_orthogonal(not_so)
    even_len = ClassicalCode(FieldMatrix(3, ((1, 1, 1, 0, 0, 0),
                                             (0, 0, 0, 1, 1, 1))))
    with pytest.raises(ValueError, match="odd"):
        css_from_self_orthogonal(even_len)
    # self-orthogonal but a row not orthogonal to all-ones (sum = 5 = 2 mod 3)
    bad_sum = ClassicalCode(FieldMatrix(3, ((1, 2, 2, 0, 0, 0, 0),)))
    with pytest.raises(ValueError, match="all-ones"):
        css_from_self_orthogonal(bad_sum)
    # wrong dimension for one logical qudit
    small = ClassicalCode(FieldMatrix(3, ((1, 1, 1, 0, 0, 0, 0, 0, 0),)))
    with pytest.raises(ValueError, match="dimension"):
        css_from_self_orthogonal(small)


def test_transversal_invariance_golay():
    assert transversal_invariance_check(golay_qutrit_code())


def test_transversal_invariance_fails_for_asymmetric_code():
    assert not transversal_invariance_check(strange_pair_reduction_code())


def test_stabilizer_code_validation():
    with pytest.raises(ValueError, match="commute"):
        StabilizerCode(
            n=2, d=3,
            matrix=FieldMatrix(3, ((1, 0, 0, 0), (0, 0, 1, 0))),  # X1 and Z1
            logical_x=SympVec(3, (0, 1), (0, 0)),
            logical_z=SympVec(3, (0, 0), (0, 1)),
        )
    with pytest.raises(ValueError, match="not commute"):
        StabilizerCode(
            n=2, d=3,
            matrix=FieldMatrix(3, ((0, 0, 1, 1),)),
            logical_x=SympVec(3, (1, 1), (0, 0)),
            logical_z=SympVec(3, (1, 1), (0, 0)),  # Z parallel to X
        )


def test_five_qutrit_code_structure():
    code = five_qutrit_code()
    assert code.n == 5 and code.num_generators == 4
    assert code.matrix.rank() == 4
    assert symplectic_product(code.logical_z, code.logical_x) != 0
    # distance 3: no undetected error of weight <= 2
    assert not has_low_weight_logical(code, 2)


def test_reduction_codes_valid():
    assert strange_pair_reduction_code().n == 2
    phased = norell_pair_reduction_code()
    assert phased.is_phased()
    t = phased.phase_offset()
    row = phased.stabilizer_rows()[0]
    assert symplectic_product(row, t) == phased.phases[0]


def test_golay_qutrit_distance_five():
    code = golay_qutrit_code()
    # no undetected error up to weight 4 confirms distance 5 at this scale
    assert not has_low_weight_logical(code, 4)


def test_phase_offset_trivial_for_unphased():
    t = golay_qutrit_code().phase_offset()
    assert t.u == (0,) * 11 and t.v == (0,) * 11
