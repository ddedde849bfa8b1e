from fractions import Fraction as F

import pytest

from secantzeta.exact import QuadExt
from secantzeta.modgroup import (A, B, GroupWord, Mat2Z, gamma2_membership, mobius_apply, pell_fundamental,
                                 stabilizer_in_gamma2, word_decompose)


@pytest.mark.parametrize("D, X, Y", [(2, 3, 2), (3, 2, 1), (6, 5, 2), (13, 649, 180), (61, 1766319049, 226153980)])
def test_pell_fundamental(D, X, Y):
    s = pell_fundamental(D)
    assert (s.X, s.Y) == (X, Y)


def test_pell_rejects_squares():
    with pytest.raises(ValueError):
        pell_fundamental(9)


@pytest.mark.parametrize("r", [2, 3, F(1, 2), F(2, 3), 6, F(5, 7), 17])
def test_stabilizer_fixes_sqrt(r):
    M = stabilizer_in_gamma2(r)
    assert gamma2_membership(M)
    x = QuadExt.sqrt(F(r))
    assert mobius_apply(M, x) == x


def test_stabilizer_of_two():
    assert stabilizer_in_gamma2(2) == Mat2Z(17, 24, 12, 17)


def test_word_decompose_known():
    w = word_decompose(A @ B.inverse() @ A)
    assert str(w) == "A^1 B^-1 A^1"
    assert str(word_decompose(-(B ** 3))) == "-B^3"


def test_parse_and_str():
    w = GroupWord.parse("-A^2 A^-1 B")
    assert str(w) == "-A^1 B^1"
    assert w.evaluate() == -(A @ B)


def test_bad_words():
    for text in ["C^2", "A^x"]:
        with pytest.raises(ValueError):
            GroupWord.parse(text)
    with pytest.raises(ValueError):
        word_decompose(Mat2Z(1, 1, 0, 1))
