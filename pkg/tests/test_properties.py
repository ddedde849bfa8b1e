"""Randomized invariants.  The heavier ones run 10^3 derandomized examples."""
from fractions import Fraction as F
from math import factorial

import mpmath
import pytest
from hypothesis import HealthCheck, assume, given, settings
from hypothesis import strategies as st

from secantzeta.cli import RunConfig
from secantzeta.dirichlet import (characters_mod, gauss_sum, generalized_bernoulli, kronecker_character,
                                  principal_character)
from secantzeta.exact import Poly, QuadExt, RationalFunction, TruncatedSeries, bernoulli_polynomial, euler_number
from secantzeta.modgroup import GroupWord, gamma2_membership, mobius_apply, pell_fundamental, \
    stabilizer_in_gamma2, word_decompose
from secantzeta.period import R_gen, S_gen, parity_ok, unipotent_slash_difference
from secantzeta.roots import polynomial_roots
from secantzeta.scan import real_nonprincipal
from secantzeta.secant import cocycle_at, cocycle_for_word, eval_sqrt

THOUSAND = settings(max_examples=1000, deadline=None, derandomize=True,
                    suppress_health_check=[HealthCheck.too_slow])

X = Poly.x()
fractions = st.fractions(min_value=-50, max_value=50, max_denominator=40)
small_ints = st.integers(-5, 5).filter(lambda e: e != 0)


def words(max_len, max_exp=5):
    letter = st.tuples(st.sampled_from("AB"), st.integers(-max_exp, max_exp).filter(bool))
    return st.lists(letter, max_size=max_len).map(GroupWord.from_letters)


# --------------------------------------------------------------------- exact

@given(fractions, fractions, fractions, fractions, st.sampled_from([2, 3, 5, 6, 7, 10, 13]))
def test_quadext_norm_multiplicative_and_conjugation(a, b, c, e, d):
    x = QuadExt(a, b, d)
    y = QuadExt(c, e, d)
    assert (x * y).norm() == x.norm() * y.norm()
    assert (x * y).conjugate() == x.conjugate() * y.conjugate()
    assert (x + y).conjugate() == x.conjugate() + y.conjugate()
    if x != 0:
        assert x * x.inverse() == 1


poly_st = st.dictionaries(st.integers(0, 6), fractions, max_size=5).map(Poly)


@given(poly_st, poly_st, poly_st)
def test_poly_ring_axioms(p, q, r):
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert p - p == Poly()
    assert all(c != 0 for _, c in p.items())


@given(poly_st, poly_st.filter(lambda q: not q.is_zero()))
def test_rational_function_normal_form(p, q):
    f = RationalFunction(p, q)
    if not f.num.is_zero():
        assert f.num.gcd(f.den).degree == 0
    assert f.den.coeff(f.den.degree) == 1
    assert RationalFunction(f.num, f.den) == f


@given(st.integers(0, 20), fractions)
def test_bernoulli_polynomial_difference(n, x):
    Bn = bernoulli_polynomial(n)
    assert Bn(x + 1) - Bn(x) == (n * x ** (n - 1) if n else 0)


@given(st.integers(0, 40))
def test_euler_odd_vanish(k):
    assert euler_number(2 * k + 1) == 0


@given(st.lists(fractions, min_size=3, max_size=3), st.lists(fractions, min_size=3, max_size=3))
@settings(max_examples=50)
def test_series_product_is_convolution(a, b):
    order = 2
    sa = TruncatedSeries([Poly.const(c) for c in a], order)
    sb = TruncatedSeries([Poly.const(c) for c in b], order)
    prod = sa * sb
    for n in range(order + 1):
        assert prod[n] == Poly.const(sum(a[i] * b[n - i] for i in range(n + 1)))


# ----------------------------------------------------------------- dirichlet

all_chars = [c for M in range(1, 61) for c in characters_mod(M)]


@THOUSAND
@given(st.sampled_from(all_chars))
def test_gauss_sum_modulus(chi):
    assume(chi.is_primitive)
    g = gauss_sum(chi, 96).numeric
    with mpmath.workprec(96):
        assert abs(abs(g) ** 2 - chi.modulus) < mpmath.mpf(2) ** -80


@THOUSAND
@given(st.sampled_from(all_chars), st.integers(1, 10 ** 6), st.integers(1, 10 ** 6))
def test_character_multiplicative(chi, m, n):
    a, b, ab = chi.exponent(m), chi.exponent(n), chi.exponent(m * n)
    if a is None or b is None:
        assert ab is None
    else:
        assert ab == (a + b) % 1


real_chars = [c for c in all_chars if c.is_real]


@given(st.sampled_from(real_chars), st.integers(0, 12))
def test_generalized_bernoulli_parity(chi, n):
    if chi.modulus == 1 and n == 1:
        return
    if chi.parity != (-1) ** n:
        assert generalized_bernoulli(n, chi) == 0


@pytest.mark.parametrize("m", range(16))
def test_euler_bernoulli_chi4(m):
    lhs = F(euler_number(2 * m), 2 * factorial(2 * m))
    assert lhs == -generalized_bernoulli(2 * m + 1, kronecker_character(-4)) / factorial(2 * m + 1)


# ------------------------------------------------------------------ modgroup

@THOUSAND
@given(words(8), st.sampled_from([1, -1]))
def test_word_round_trip(w, sign):
    w = GroupWord(sign, w.letters)
    M = w.evaluate()
    assert M.det == 1 and gamma2_membership(M)
    back = word_decompose(M)
    assert back == w and back.evaluate() == M


@given(words(4), words(4))
def test_gamma2_closure(u, v):
    P = u.evaluate() @ v.evaluate().inverse()
    assert gamma2_membership(P)


@pytest.mark.parametrize("D", [d for d in range(2, 51) if int(d ** 0.5) ** 2 != d])
def test_pell_minimal(D):
    s = pell_fundamental(D)
    assert s.X ** 2 - D * s.Y ** 2 == 1
    for x in range(2, s.X):
        y2, rem = divmod(x * x - 1, D)
        assert rem or int(y2 ** 0.5) ** 2 != y2


@settings(max_examples=50)
@given(st.fractions(min_value=F(1, 30), max_value=30, max_denominator=30))
def test_stabilizer_fixes_random_sqrt(r):
    n, d = r.numerator, r.denominator
    assume(int((n * d) ** 0.5) ** 2 != n * d)
    x = QuadExt.sqrt(r)
    assert mobius_apply(stabilizer_in_gamma2(r), x) == x


# -------------------------------------------------------------------- secant

@THOUSAND
@given(st.integers(1, 3), words(4, 3), words(4, 3), st.integers(-200, 200), st.sampled_from([7, 11, 13, 1009]))
def test_cocycle_law(m, w1, w2, num, den):
    """Phi_{C1 C2}(t) = Phi_{C1}(C2 t) + j_{C1}(C2 t)^(1-2m) Phi_{C2}(t), by independent routes."""
    t = F(num, den)
    w = GroupWord.from_letters(w1.letters + w2.letters)
    C1, C2 = w1.evaluate(), w2.evaluate()
    try:
        direct = cocycle_for_word(m, w).phi(t)
        u = mobius_apply(C2, t)
        composed = cocycle_at(m, w1, u) + (C1.c * u + C1.d) ** (1 - 2 * m) * cocycle_at(m, w2, t)
    except ZeroDivisionError:
        assume(False)
    assert direct == composed


nonsquare_r = st.tuples(st.integers(1, 30), st.integers(1, 30)).map(lambda p: F(*p)).filter(
    lambda r: int((r.numerator * r.denominator) ** 0.5) ** 2 != r.numerator * r.denominator)


@THOUSAND
@given(st.integers(1, 3), nonsquare_r)
def test_eval_sqrt_irrational_part_cancels(m, r):
    # eval_sqrt raises if the sqrt component does not vanish exactly
    v = eval_sqrt(m, r)
    assert isinstance(v.value, F)


@settings(max_examples=25, deadline=None)
@given(st.integers(1, 3), nonsquare_r)
def test_eval_sqrt_stabilizer_power_independent(m, r):
    assert eval_sqrt(m, r, power=2).value == eval_sqrt(m, r).value


# -------------------------------------------------------------------- period

def _pairs(kmax, modmax):
    chars = real_nonprincipal(modmax) + [principal_character(1)]
    return [(k, c, p) for k in range(2, kmax + 1) for c in chars for p in chars if parity_ok(k, c, p)]


def test_S_to_R_slash_relation():
    """S_k |_(2-k) (1 - R^L) = R_k(LX + 1), exactly, wherever both are polynomials."""
    checked = 0
    for k, c, p in _pairs(10, 8):
        S, R = S_gen(k, c, p), R_gen(k, c, p)
        if S.is_zero() or R.is_zero() or S.low < 0 or R.low < 0:
            continue
        assert unipotent_slash_difference(S, k - 2, c.modulus) == R.compose(c.modulus * X + 1)
        checked += 1
    assert checked > 200


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([(k, c, p) for k, c, p in _pairs(12, 12) if not R_gen(k, c, p).is_zero()]))
def test_roots_stable_under_precision_doubling(item):
    k, c, p = item
    poly = R_gen(k, c, p)
    lo, hi = polynomial_roots(poly, 64).roots, polynomial_roots(poly, 128).roots
    assert len(lo) == len(hi)
    with mpmath.workprec(128):
        for z in lo:
            assert min(abs(z - w) for w in hi) < mpmath.mpf(2) ** -50


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([(k, c, p) for k, c, p in _pairs(12, 12) if not R_gen(k, c, p).is_zero()]))
def test_roots_pair_with_inverse_conjugate(item):
    k, c, p = item
    roots = polynomial_roots(R_gen(k, c, p), 128).roots
    with mpmath.workprec(128):
        for z in roots:
            t = 1 / mpmath.conj(z)
            assert min(abs(t - w) for w in roots) < mpmath.mpf(2) ** -60 * max(1, abs(t))


# ------------------------------------------------------------------ numerics

@settings(max_examples=30, deadline=None)
@given(st.floats(-1, 1), st.floats(0.3, 2), st.integers(1, 3))
def test_psi_period_and_precision_monotone(x, y, m):
    from secantzeta.numerics import psi_numeric
    from secantzeta.verify import verify_identity
    tau = mpmath.mpc(x, y)
    with mpmath.workprec(120):
        assert abs(psi_numeric(2 * m, tau, 120) - psi_numeric(2 * m, tau + 2, 120)) < mpmath.mpf(2) ** -100
    tstr = f"{x!r}+{y!r}i"
    r1 = verify_identity("functional_equation", {"m": m, "tau": tstr}, 96)
    r2 = verify_identity("functional_equation", {"m": m, "tau": tstr}, 192)
    assert r2.residual <= r1.residual + mpmath.mpf(2) ** -48


@settings(max_examples=20, deadline=None)
@given(st.floats(-1, 1), st.floats(0.3, 2))
def test_xi_period_one(x, y):
    from secantzeta.numerics import xi_numeric
    tau = mpmath.mpc(x, y)
    with mpmath.workprec(120):
        assert abs(xi_numeric(3, tau, 120) - xi_numeric(3, tau + 1, 120)) < mpmath.mpf(2) ** -100


# ----------------------------------------------------------------------- cli

@given(st.builds(RunConfig, command=st.sampled_from(["roots", "scan", "verify"]),
                 k=st.none() | st.integers(2, 50), chi=st.sampled_from(["1", "k:-4", "m:7:2"]),
                 precision=st.integers(53, 1024), tolerance=st.floats(1e-20, 1e-3), workers=st.integers(1, 64)))
def test_run_config_round_trip(cfg):
    assert RunConfig.from_json(cfg.to_json()) == cfg


@pytest.mark.parametrize("argv", [["roots", "--family", "R", "--k", "7", "--psi", "k:-35"],
                                  ["cocycle", "--m", "3", "--word", "B^2 A^-1"],
                                  ["eval-sqrt", "--m", "2", "--r", "7/3"]])
def test_cli_output_deterministic(argv, capsys):
    from secantzeta.cli import main
    outs = []
    for _ in range(2):
        main(argv)
        outs.append(capsys.readouterr().out)
    assert outs[0] == outs[1]
