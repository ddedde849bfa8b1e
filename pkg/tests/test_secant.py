from fractions import Fraction as F

import pytest

from secantzeta.exact import Poly, RationalFunction, euler_number, zeta_even
from secantzeta.modgroup import GroupWord, Mat2Z
from secantzeta.secant import (bernoulli_half_rhs, cocycle_at, cocycle_for_word, compose_cocycles,
                               eval_sqrt, fixed_point_tau, fixed_point_value, fixed_point_value_via_word,
                               generator_cocycle_B, h_function, inverse_cocycle, single_sum_rhs,
                               symmetric_rhs_double_sum, symmetric_rhs_series, trig_rhs_series)

X = Poly.x()


def test_eval_sqrt_two():
    v = eval_sqrt(1, 2)
    assert v.value == F(-1, 3)
    assert v.pretty == "-1/3*pi^2"
    assert v.to_json()["witness_word"]


@pytest.mark.parametrize("power", [1, 2])
def test_eval_sqrt_independent_of_stabilizer_power(power):
    assert eval_sqrt(2, 3, power).value == eval_sqrt(2, 3).value


def test_eval_sqrt_domain():
    with pytest.raises(ValueError):
        eval_sqrt(1, 4)
    with pytest.raises(ValueError):
        eval_sqrt(0, 2)
    with pytest.raises(ValueError):
        eval_sqrt(1, -2)


def _psi2_closed(k, mu):
    return F(1, 6) * (1 + F(3 * k, 2 * mu))


def _psi4_closed(k, mu):
    return F(1, 90) * (1 + F(5 * k, 2 * mu) - F(5 * k * k * (16 * mu * mu - 15), 8 * mu * mu * (4 * k * mu + 3)))


@pytest.mark.parametrize("k, mu", [(1, 1), (1, 2), (2, 1), (3, -1), (1, 5)])
def test_fixed_point_closed_forms(k, mu):
    assert fixed_point_value(1, k, mu) == _psi2_closed(k, mu)
    assert fixed_point_value(2, k, mu) == _psi4_closed(k, mu)
    assert fixed_point_value_via_word(3, k, mu) == fixed_point_value(3, k, mu)


def test_fixed_point_tau_is_fixed():
    from secantzeta.modgroup import mobius_apply
    w = GroupWord.from_letters([("A", 2), ("B", 3)])
    t = fixed_point_tau(2, 3)
    assert mobius_apply(w.evaluate(), t) == t


def test_cocycle_B_m1():
    phi = generator_cocycle_B(1)
    tau = F(1, 3)
    assert phi(tau) == trig_rhs_series(1)(tau) / (2 * tau + 1)


@pytest.mark.parametrize("m", range(1, 7))
def test_two_single_sums_agree(m):
    assert single_sum_rhs(m) == bernoulli_half_rhs(m)


@pytest.mark.parametrize("m", range(1, 6))
def test_symmetric_forms_agree(m):
    assert symmetric_rhs_series(m) == symmetric_rhs_double_sum(m)


def test_cocycle_A_is_zero():
    cd = cocycle_for_word(2, GroupWord.parse("A^3"))
    assert cd.phi == RationalFunction(0)


def test_cocycle_inverse_cancels():
    cd = cocycle_for_word(2, GroupWord.parse("B^1 A^1"))
    both = compose_cocycles(inverse_cocycle(cd), cd)
    assert both.matrix == Mat2Z(1, 0, 0, 1) and both.phi == RationalFunction(0)


def test_cocycle_at_matches_rational_function():
    w = GroupWord.parse("A^1 B^-2 A^-1 B^1")
    cd = cocycle_for_word(2, w)
    for x in (F(1, 5), F(7, 3)):
        assert cocycle_at(2, w, x) == cd.phi(x)


def test_signed_word_rejected():
    with pytest.raises(ValueError):
        cocycle_for_word(1, GroupWord.parse("-A^1"))


def test_h_function_is_rational():
    h = h_function(1)
    assert isinstance(h, RationalFunction)


def test_euler_bernoulli_identity_low():
    from secantzeta.dirichlet import generalized_bernoulli, kronecker_character
    chi = kronecker_character(-4)
    for m in range(0, 7):
        assert generalized_bernoulli(2 * m + 1, chi) == -F(2 * m + 1, 2) * euler_number(2 * m)


def test_zeta_even_used_in_constant_term():
    assert zeta_even(3).coefficient == F(1, 945)
