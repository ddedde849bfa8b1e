"""Exact transformation data of the secant series psi_{2m}(tau) = sum sec(pi n tau)/n^{2m}.

For C in Gamma(2) without the -I factor we store the rational function Phi_C with

    psi(C tau) = (c tau + d)^(1-2m) psi(tau) + pi^(2m) Phi_C(tau).

Composition:  Phi_{C1 C2}(tau) = Phi_{C1}(C2 tau) + j_{C1}(C2 tau)^(1-2m) Phi_{C2}(tau),
where j_C(tau) = c tau + d.  Phi_A = 0 since psi has period 2.

All rational functions here are in the variable tau over Q; the factor
(pi i)^(2m) = (-1)^m pi^(2m) is folded into the sign.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import factorial

from .exact import (
    Poly, QuadExt, RationalFunction, TruncatedSeries, as_fraction, bernoulli_number,
    bernoulli_polynomial, euler_number, fraction_str, is_square,
)
from .modgroup import (
    GroupWord, Mat2Z, IDENTITY, gen_power, stabilizer_in_gamma2, word_decompose,
)

TAU = Poly.x()


def _check_m(m: int) -> None:
    if not isinstance(m, int) or m < 1:
        raise ValueError(f"m must be a positive integer, got {m!r}")


def _be_weight(m: int, n: int) -> Fraction:
    """B_{2n} E_{2m-2n} / ((2n)! (2m-2n)!)."""
    return bernoulli_number(2 * n) * euler_number(2 * m - 2 * n) / Fraction(
        factorial(2 * n) * factorial(2 * m - 2 * n))


# ---------------------------------------------------------------------------
# Right-hand sides of the B-functional equation

@lru_cache(maxsize=None)
def trig_rhs_series(m: int) -> RationalFunction:
    """[z^(2m-1)] sin(tau z) / (sin z sin((2 tau + 1) z)), exactly in tau.

    Equals (2 tau + 1)^(2m-1) psi(tau/(2 tau + 1)) - psi(tau), divided by pi^(2m).
    """
    _check_m(m)
    N = 2 * m
    b = 2 * TAU + 1
    ratio = TruncatedSeries.sinc(TAU, N) / (TruncatedSeries.sinc(1, N) * TruncatedSeries.sinc(b, N))
    return RationalFunction(TAU * ratio[N], b)


@lru_cache(maxsize=None)
def single_sum_rhs(m: int, mu: int = 1) -> RationalFunction:
    """(2 mu tau + 1)^(2m-1) psi(tau/(2 mu tau + 1)) - psi(tau), divided by pi^(2m).

    Single-sum form in Bernoulli and Euler numbers.
    """
    _check_m(m)
    lin = RationalFunction(2 * mu * TAU + 1)
    acc = RationalFunction(0)
    for n in range(m + 1):
        w = _be_weight(m, n) * Fraction(2) ** (2 * n - 1)
        if w:
            acc = acc + RationalFunction(TAU ** (2 * m - 2 * n) * w) * (1 - lin ** (2 * n - 1))
    return acc * (-1) ** m


@lru_cache(maxsize=None)
def bernoulli_half_rhs(m: int) -> RationalFunction:
    """Same rational function as single_sum_rhs(m), written with B_{2n}(1/2) and (tau+1)."""
    _check_m(m)
    lin = RationalFunction(2 * TAU + 1)
    shift = TAU + 1
    half = Fraction(1, 2)
    acc = RationalFunction(0)
    for n in range(m + 1):
        w = (bernoulli_polynomial(2 * n)(half) * euler_number(2 * m - 2 * n) * Fraction(2) ** (2 * n - 1)
             / (factorial(2 * n) * factorial(2 * m - 2 * n)))
        if w:
            acc = acc + RationalFunction(shift ** (2 * m - 2 * n) * w) * (1 - lin ** (2 * n - 1))
    return acc * (-1) ** m


@lru_cache(maxsize=None)
def generator_cocycle_B(m: int) -> RationalFunction:
    """Phi_B, so that psi(B tau) = (2 tau + 1)^(1-2m) psi(tau) + pi^(2m) Phi_B(tau)."""
    _check_m(m)
    return single_sum_rhs(m, 1) / RationalFunction(2 * TAU + 1) ** (2 * m - 1)


@lru_cache(maxsize=None)
def cocycle_B_power(m: int, mu: int) -> RationalFunction:
    """Phi_{B^mu} in closed form (zero for mu = 0)."""
    _check_m(m)
    if mu == 0:
        return RationalFunction(0)
    return single_sum_rhs(m, mu) / RationalFunction(2 * mu * TAU + 1) ** (2 * m - 1)


@lru_cache(maxsize=None)
def symmetric_rhs_series(m: int) -> RationalFunction:
    """[z^(2m-1)] sin(tau z) / (sin((1 - tau) z) sin((1 + tau) z)).

    Equals (1+tau)^(2m-1) psi(tau/(1+tau)) - (1-tau)^(2m-1) psi(tau/(1-tau)), over pi^(2m).
    """
    _check_m(m)
    N = 2 * m
    a, b = 1 - TAU, 1 + TAU
    ratio = TruncatedSeries.sinc(TAU, N) / (TruncatedSeries.sinc(a, N) * TruncatedSeries.sinc(b, N))
    return RationalFunction(TAU * ratio[N], a * b)


def symmetric_rhs_double_sum(m: int) -> RationalFunction:
    """The symmetric right-hand side as a triple-index sum with B_{2n}(1/2)."""
    _check_m(m)
    a, b = 1 - TAU, 1 + TAU
    half = Fraction(1, 2)
    acc = Poly()
    for k in range(m + 1):
        for n in range(m - k + 1):
            r = m - k - n
            c = (bernoulli_polynomial(2 * n)(half) * bernoulli_polynomial(2 * r)(half)
                 / (factorial(2 * k + 1) * factorial(2 * n) * factorial(2 * r)))
            if c:
                acc = acc + TAU ** (2 * k + 1) * (2 * a) ** (2 * n) * (2 * b) ** (2 * r) * c
    return RationalFunction(acc * (-1) ** m, a * b)


@lru_cache(maxsize=None)
def h_function(m: int) -> RationalFunction:
    """sum_n B_{2n} E_{2m-2n} / ((2n)! (2m-2n)!) (2 tau)^(2n-1); odd in tau.

    With the factor (pi i)^(2m) this is the rational correction in
    tau^(2m-1) psi(-1/tau) = psi_hat(tau) - (pi i)^(2m) h(tau).
    """
    _check_m(m)
    acc = RationalFunction(0)
    for n in range(m + 1):
        w = _be_weight(m, n)
        if w:
            acc = acc + RationalFunction(2 * TAU) ** (2 * n - 1) * w
    return acc


# ---------------------------------------------------------------------------
# Cocycles of words

@dataclass(frozen=True)
class CocycleData:
    m: int
    phi: RationalFunction
    matrix: Mat2Z
    word: GroupWord = field(default=GroupWord(1, ()), compare=False)

    def automorphy(self) -> Poly:
        return Poly.linear(self.matrix.c, self.matrix.d)


def _j(M: Mat2Z) -> RationalFunction:
    return RationalFunction(Poly.linear(M.c, M.d))


def compose_cocycles(left: CocycleData, right: CocycleData) -> CocycleData:
    """Cocycle of left.matrix @ right.matrix."""
    if left.m != right.m:
        raise ValueError("cocycles of different weight")
    m = left.m
    R = right.matrix
    j_left_at = _j(left.matrix @ R) / _j(R)  # j_left(R tau)
    phi = left.phi.mobius_substitute(R.a, R.b, R.c, R.d) + j_left_at ** (1 - 2 * m) * right.phi
    return CocycleData(m, phi, left.matrix @ R)


def inverse_cocycle(data: CocycleData) -> CocycleData:
    """Phi_{C^-1}(tau) = -j_C(C^-1 tau)^(2m-1) Phi_C(C^-1 tau)."""
    m = data.m
    Ci = data.matrix.inverse()
    j_at = RationalFunction(1) / _j(Ci)  # j_C(C^-1 tau) = 1/j_{C^-1}(tau)
    phi = -(j_at ** (2 * m - 1)) * data.phi.mobius_substitute(Ci.a, Ci.b, Ci.c, Ci.d)
    return CocycleData(m, phi, Ci)


@lru_cache(maxsize=None)
def _generator_data(m: int, g: str, sign: int) -> CocycleData:
    if g == "A":
        return CocycleData(m, RationalFunction(0), gen_power("A", sign))
    base = CocycleData(m, generator_cocycle_B(m), gen_power("B", 1))
    return base if sign == 1 else inverse_cocycle(base)


def cocycle_for_word(m: int, w: GroupWord) -> CocycleData:
    """Phi for an unsigned word, built from Phi_A = 0, Phi_B and Phi_{B^-1} letter by letter."""
    _check_m(m)
    if w.sign != 1:
        raise ValueError("the -I factor has no rational cocycle in odd weight; pass the unsigned word")
    acc = CocycleData(m, RationalFunction(0), IDENTITY)
    for g, e in reversed(w.letters):
        step = _generator_data(m, g, 1 if e > 0 else -1)
        for _ in range(abs(e)):
            acc = compose_cocycles(step, acc)
    return CocycleData(m, acc.phi, acc.matrix, w)


def cocycle_at(m: int, w: GroupWord, x):
    """Phi_w evaluated at a point x (QuadExt, Fraction, complex, mpc), letter-wise closed forms."""
    _check_m(m)
    if w.sign != 1:
        raise ValueError("pass the unsigned word")
    phi = 0
    y = x
    for g, e in reversed(w.letters):
        if g == "A":
            y = y + 2 * e
            continue
        j = 2 * e * y + 1
        phi = cocycle_B_power(m, e)(y) + phi / j ** (2 * m - 1)
        y = y / j
    return phi


# ---------------------------------------------------------------------------
# Exact values at quadratic irrationals

@dataclass(frozen=True)
class ExactSecantValue:
    r: Fraction
    m: int
    value: Fraction  # psi_{2m}(sqrt r) = value * pi^(2m)
    witness: GroupWord
    matrix: Mat2Z

    @property
    def pretty(self) -> str:
        return f"{fraction_str(self.value)}*pi^{2 * self.m}"

    def to_json(self) -> dict:
        return {
            "m": self.m,
            "r": fraction_str(self.r),
            "rational": fraction_str(self.value),
            "pretty": self.pretty,
            "witness_word": str(self.witness),
            "matrix": self.matrix.rows(),
        }


def _solve_fixed_point(m: int, word: GroupWord, M: Mat2Z, x: QuadExt) -> QuadExt:
    phi = cocycle_at(m, word, x)
    j = (M.c * x + M.d) ** (1 - 2 * m)
    assert j != 1
    return phi / (1 - j)


def eval_sqrt(m: int, r, power: int = 1) -> ExactSecantValue:
    """Exact q with psi_{2m}(sqrt r) = q pi^(2m).

    ``power`` selects the stabilizer (D^2)^power; the value does not depend on it.
    """
    _check_m(m)
    r = as_fraction(r)
    if r <= 0:
        raise ValueError("r must be a positive rational")
    if is_square(r.numerator * r.denominator):
        raise ValueError(
            f"sqrt({r}) is rational; the closed form needs an irrational square root "
            "(rational points with even denominator are poles, odd ones are only summable numerically)")
    if power < 1:
        raise ValueError("power must be >= 1")
    M = stabilizer_in_gamma2(r) ** power
    w = word_decompose(M)
    if w.sign == -1:
        M, w = -M, w.unsigned()
    assert M.c != 0
    q = _solve_fixed_point(m, w, M, QuadExt.sqrt(r))
    if q.b != 0:
        raise ArithmeticError(f"irrational part {q.b} did not cancel")
    return ExactSecantValue(r, m, q.a, w, M)


def fixed_point_tau(kappa: int, mu: int) -> QuadExt:
    """kappa + sqrt(kappa (1/mu + kappa)), a fixed point of A^kappa B^mu."""
    if mu == 0 or kappa == 0:
        raise ValueError("kappa and mu must be nonzero")
    rad = Fraction(kappa) * (Fraction(1, mu) + kappa)
    if rad <= 0:
        raise ValueError(f"kappa (1/mu + kappa) = {rad} is not positive; fixed point is not real")
    if is_square(rad.numerator * rad.denominator):
        raise ValueError(f"sqrt({rad}) is rational; fixed point is degenerate")
    return kappa + QuadExt.sqrt(rad)


def fixed_point_value(m: int, kappa: int, mu: int) -> Fraction:
    """psi_{2m}(kappa + sqrt(kappa(1/mu + kappa))) / pi^(2m) by the closed sum."""
    _check_m(m)
    fixed_point_tau(kappa, mu)  # validates
    alpha = 1 + Fraction(1, mu * kappa)

    def r_(n):
        if n == 0:
            return 1 / (1 - alpha)
        return sum(Fraction(factorial(2 * n - 1), factorial(2 * j) * factorial(2 * n - 1 - 2 * j)) * alpha ** j
                   for j in range(n))

    rm = r_(m)
    total = sum(Fraction(2) ** (2 * n - 1) / Fraction(mu) ** (2 * m - 2 * n) * _be_weight(m, n) * r_(n) / rm
                for n in range(m + 1))
    return -(-1) ** m * total


def fixed_point_value_via_word(m: int, kappa: int, mu: int) -> Fraction:
    """The same value from the general cocycle of A^kappa B^mu."""
    _check_m(m)
    x = fixed_point_tau(kappa, mu)
    w = GroupWord.from_letters([("A", kappa), ("B", mu)])
    q = _solve_fixed_point(m, w, w.evaluate(), x)
    if q.b != 0:
        raise ArithmeticError("irrational part did not cancel")
    return q.a
