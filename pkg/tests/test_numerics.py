from fractions import Fraction as F

import mpmath
import pytest

from secantzeta.dirichlet import kronecker_character, principal_character
from secantzeta.numerics import (ConvergenceError, eichler_numeric, eval_exact, hurwitz_zeta, l_numeric,
                                 parse_complex, psi_numeric, to_mp, xi_direct, xi_numeric, zeta_numeric)

from helpers import close

ZETA3 = "1.20205690315959428539973816151144999076498629234049888179227"


def test_parse_complex():
    with mpmath.workprec(100):
        assert close(parse_complex("(1+3i)/7"), mpmath.mpc(1, 3) / 7, 90)
        assert close(parse_complex("sqrt(2)+i"), mpmath.mpc(mpmath.sqrt(2), 1), 90)
    with pytest.raises(ValueError):
        parse_complex("__import__('os')")


def test_to_mp_fraction():
    with mpmath.workprec(80):
        assert close(to_mp(F(1, 3)), mpmath.mpf(1) / 3, 75)


def test_zeta3_oracle():
    assert close(zeta_numeric(3, 200), ZETA3, 190)


def test_hurwitz_against_mpmath():
    # mpmath.zeta is an independent implementation
    with mpmath.workprec(150):
        a = mpmath.mpc("0.3", "0.7")
        assert close(hurwitz_zeta(5, a, 150), mpmath.zeta(5, a), 140)


def test_hurwitz_domain():
    with pytest.raises((ValueError, ConvergenceError)):
        hurwitz_zeta(1, mpmath.mpf(1), 64)


def test_l_at_one():
    # L(1, chi_-4) = pi/4
    with mpmath.workprec(120):
        assert close(l_numeric(1, kronecker_character(-4), 120), mpmath.pi / 4, 110)


def test_psi_modes_agree():
    tau = mpmath.mpc("0.3", "0.8")
    with mpmath.workprec(160):
        assert close(psi_numeric(2, tau, 160), psi_numeric(2, tau, 160, mode="direct"), 140)


def test_psi_odd_s_q_series():
    tau = mpmath.mpc("0.2", "1.1")
    with mpmath.workprec(120):
        assert close(psi_numeric(3, tau, 120), psi_numeric(3, tau, 120, mode="direct"), 100)


def test_psi_period_two():
    tau = mpmath.mpc("0.1", "0.6")
    with mpmath.workprec(140):
        assert close(psi_numeric(4, tau, 140), psi_numeric(4, tau + 2, 140), 120)


def test_psi_pole_rejected():
    with pytest.raises(ConvergenceError):
        psi_numeric(2, F(1, 2), 64, mode="direct")


def test_xi_two_routes():
    tau = mpmath.mpc("0.4", "0.7")
    with mpmath.workprec(140):
        assert close(xi_numeric(3, tau, 140), xi_direct(3, tau, 140), 110)


def test_eval_exact():
    from secantzeta.exact import Poly
    with mpmath.workprec(64):
        assert close(eval_exact(Poly.x() ** 2 + 1, mpmath.mpc(0, 1)), 0, 60)


def test_eichler_rejects_imprimitive():
    with pytest.raises(Exception):
        eichler_numeric(4, kronecker_character(-3), principal_character(4), mpmath.mpc(0, 1), 64)
