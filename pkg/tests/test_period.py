from fractions import Fraction as F

import pytest

from secantzeta.dirichlet import CharacterError, kronecker_character, parse_character, principal_character
from secantzeta.exact import Poly
from secantzeta.period import (R_gen, S_gen, parity_ok, ramanujan_classic, rho_hat, self_inversive_check,
                               slash_one_minus_R, unipotent_slash_difference)
from secantzeta.exact import RationalFunction

X = Poly.x()
ONE = principal_character(1)


def test_classic_R4():
    assert dict(ramanujan_classic(4).items()) == {-1: F(-1, 720), 1: F(1, 144), 3: F(-1, 720)}


@pytest.mark.parametrize("k", [4, 6, 8, 12])
def test_trivial_pair_gives_classic(k):
    assert R_gen(k, ONE, ONE) == ramanujan_classic(k)


def test_classic_rejects_odd():
    with pytest.raises(ValueError):
        ramanujan_classic(5)


def test_R7_one_chi35_frozen():
    p = R_gen(7, ONE, kronecker_character(-35))
    assert p.low == -1 and p.degree == 6
    c = dict(p.items())
    assert c[-1] == F(-1117023, 36765312500) and c[2] == F(45671, 2100875000)
    assert self_inversive_check(p, 7, -1)


@pytest.mark.parametrize("k, c, s", [(3, "k:-4", "k:5"), (4, "k:-3", "k:-4"), (6, "k:5", "k:8"), (5, "1", "k:-4")])
def test_self_inversive(k, c, s):
    chi, psi = parse_character(c), parse_character(s)
    assert parity_ok(k, chi, psi)
    assert self_inversive_check(R_gen(k, chi, psi), k, psi.parity)


def test_S_gen_trivial_is_reversed_classic():
    for k in (4, 6, 10):
        assert S_gen(k, ONE, ONE) == ramanujan_classic(k).reciprocal(k - 2)


def test_unipotent_slash_matches_rational_version():
    p = 3 * X ** 2 - X + 5
    a = unipotent_slash_difference(p, 4, 3)
    b = slash_one_minus_R(RationalFunction(p), 4, 3)
    assert RationalFunction(a) == b


def test_rho_hat_requirements():
    with pytest.raises(CharacterError):
        rho_hat(5, kronecker_character(-4), kronecker_character(-4))  # wrong parity: series vanishes
    with pytest.raises(CharacterError):
        rho_hat(4, parse_character("p:6"), kronecker_character(-3))


def test_rho_hat_epsilon_terms_only_for_trivial():
    r = rho_hat(5, kronecker_character(-4), kronecker_character(5))
    assert r.epsilon_terms == ()
    r1 = rho_hat(5, ONE, kronecker_character(-4))
    assert len(r1.epsilon_terms) == 1
