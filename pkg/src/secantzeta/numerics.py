"""Arbitrary-precision numerics: the secant and cotangent series, Eichler
integrals of Eisenstein series, and Dirichlet L-values.

Every function takes an explicit ``precision`` in bits and returns mpmath
numbers; nothing relies on the global mpmath context.  Series in the upper
half-plane are truncated by explicit geometric tail bounds.
"""
from __future__ import annotations

import ast
import math
import operator
from fractions import Fraction
from math import factorial

import mpmath
import numpy as np

from .dirichlet import DirichletCharacter, gauss_sum
from .exact import QuadExt, RationalFunction, bernoulli_number

ComplexHP = mpmath.mpc

GUARD_BITS = 24
MAX_TERMS = 2_000_000


class ConvergenceError(ArithmeticError):
    """A series was asked for at a point where it does not converge."""


# ---------------------------------------------------------------------------
# Conversions

def to_mp(x):
    """Fraction / QuadExt / int / complex / str -> mpmath number (current precision)."""
    if isinstance(x, (mpmath.mpf, mpmath.mpc)):
        return x
    if isinstance(x, Fraction):
        return mpmath.mpf(x.numerator) / x.denominator
    if isinstance(x, QuadExt):
        return to_mp(x.a) + to_mp(x.b) * mpmath.sqrt(x.d)
    if isinstance(x, str):
        return parse_complex(x)
    if isinstance(x, complex):
        return mpmath.mpc(x.real, x.imag)
    return mpmath.mpmathify(x)


_BINOPS = {ast.Add: operator.add, ast.Sub: operator.sub, ast.Mult: operator.mul,
           ast.Div: operator.truediv, ast.Pow: operator.pow}
_FUNCS = {"sqrt": mpmath.sqrt, "exp": mpmath.exp}


def parse_complex(text: str):
    """Evaluate a small arithmetic expression such as ``"(1+3i)/7"`` or ``"sqrt(2)+i"``.

    Integers are exact until combined, so ``1/3`` is computed at the working
    precision rather than through a binary float.
    """
    src = text.strip().replace("^", "**")
    # "3i" -> "3*I", bare "i" -> "I"
    out, prev = [], ""
    for ch in src:
        if ch in "ij" and not prev.isalpha():
            out.append("*I" if (prev.isdigit() or prev == ")") else "I")
        else:
            out.append(ch)
        prev = ch
    tree = ast.parse("".join(out), mode="eval")

    def ev(node):
        if isinstance(node, ast.Expression):
            return ev(node.body)
        if isinstance(node, ast.Constant) and isinstance(node.value, (int, float)):
            if isinstance(node.value, float):
                return mpmath.mpf(repr(node.value))
            return mpmath.mpf(node.value)
        if isinstance(node, ast.Name):
            if node.id == "I":
                return mpmath.mpc(0, 1)
            if node.id == "pi":
                return +mpmath.pi
            raise ValueError(f"unknown name {node.id!r} in {text!r}")
        if isinstance(node, ast.BinOp) and type(node.op) in _BINOPS:
            return _BINOPS[type(node.op)](ev(node.left), ev(node.right))
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
            v = ev(node.operand)
            return -v if isinstance(node.op, ast.USub) else v
        if isinstance(node, ast.Call) and isinstance(node.func, ast.Name) and node.func.id in _FUNCS:
            return _FUNCS[node.func.id](*[ev(a) for a in node.args])
        raise ValueError(f"cannot parse {text!r}")

    return ev(tree)


def eval_exact(f, x):
    """Evaluate an exact Poly or RationalFunction at an mpmath number."""
    if isinstance(f, RationalFunction):
        return eval_exact(f.num, x) / eval_exact(f.den, x)
    acc = mpmath.mpc(0)
    for e, c in f.items():
        acc += to_mp(c) * x ** e
    return acc


def _terms_for(ratio, precision: int, scale=1) -> int:
    """Smallest N with scale * ratio^N / (1 - ratio) below 2^-(precision+4)."""
    if ratio >= 1:
        raise ConvergenceError("series ratio is not below 1")
    target = mpmath.log(mpmath.mpf(scale) / (1 - ratio)) + (precision + 4) * mpmath.log(2)
    n = int(mpmath.ceil(target / -mpmath.log(ratio))) + 1
    if n > MAX_TERMS:
        raise ConvergenceError(f"{n} terms needed; point too close to the real axis")
    return max(n, 1)


# ---------------------------------------------------------------------------
# Divisor-sum coefficients

def _twisted_divisor_sums(N: int, s: int, weight) -> list:
    """c[n] = sum_{d | n} weight(d) d^s for 1 <= n <= N (exact integers)."""
    c = [0] * (N + 1)
    for d in range(1, N + 1):
        w = weight(d)
        if w:
            v = w * d ** s
            for n in range(d, N + 1, d):
                c[n] += v
    return c


def _chi_m4(n: int) -> int:
    return (0, 1, 0, -1)[n % 4]


# ---------------------------------------------------------------------------
# Secant Dirichlet series

def psi_numeric(s: int, tau, precision: int = 128, mode: str = "q_series", terms: int | None = None):
    """psi_s(tau) = sum_{n>=1} sec(pi n tau) / n^s.

    ``q_series``: in the upper half-plane, 2 sum_N (sum_{d|N} chi_-4(d) d^s) Q^N / N^s
    with Q = e^(pi i tau), truncated by a geometric tail bound.
    ``direct``: the defining sum.  In the upper half-plane it converges
    geometrically and is summed to precision; on the real line it is a
    heuristic partial sum with ``terms`` terms (default 10^6), valid only when
    tau is not a rational with even denominator.
    """
    if mode == "q_series":
        return _psi_q(s, tau, precision)
    if mode == "direct":
        return _psi_direct(s, tau, precision, terms)
    raise ValueError(f"unknown mode {mode!r}")


def _psi_q(s: int, tau, precision: int):
    if s < 1:
        raise ValueError("s must be >= 1")
    with mpmath.workprec(precision + GUARD_BITS):
        tau = to_mp(tau)
        if mpmath.im(tau) <= 0:
            raise ConvergenceError("q-series needs Im(tau) > 0")
        Q = mpmath.expjpi(tau)
        # |c_N| / N^s <= sum_{d|N} (d/N)^s <= tau(N) <= 2 sqrt(N); fold sqrt(N) into a safety factor
        r = abs(Q)
        N = _terms_for(r, precision, scale=4)
        N = _terms_for(r, precision, scale=4 * math.isqrt(N) + 4)
        c = _twisted_divisor_sums(N, s, _chi_m4)
        acc = mpmath.mpc(0)
        Qn = mpmath.mpc(1)
        for n in range(1, N + 1):
            Qn *= Q
            if c[n]:
                acc += mpmath.mpf(c[n]) / mpmath.mpf(n) ** s * Qn
        acc *= 2
    with mpmath.workprec(precision):
        return +acc


def _psi_direct(s: int, tau, precision: int, terms):
    if isinstance(tau, (int, Fraction)) and Fraction(tau).denominator % 2 == 0:
        raise ConvergenceError(f"psi_s has a pole at {tau} (rational with even denominator)")
    with mpmath.workprec(precision + GUARD_BITS):
        tau = to_mp(tau)
        if mpmath.im(tau) > 0:
            Q = mpmath.expjpi(tau)
            N = terms or _terms_for(abs(Q), precision, scale=4)
            acc = mpmath.fsum(mpmath.sec(mpmath.pi * n * tau) / mpmath.mpf(n) ** s for n in range(1, N + 1))
            with mpmath.workprec(precision):
                return +acc
        if mpmath.im(tau) < 0:
            raise ConvergenceError("direct sum needs Im(tau) >= 0")
        x = mpmath.re(tau)
    return _psi_real_partial(s, x, terms or 10 ** 6)


def _psi_real_partial(s: int, x, terms: int):
    """Partial sum on the real line in double precision.

    n x mod 2 is formed from a double-double split of x so the angle error
    stays near 1e-16 even for n ~ 10^6.
    """
    frac = x - 2 * mpmath.floor(x / 2)
    hi = float(frac)
    lo = float(frac - hi)
    total = 0.0
    chunk = 1 << 16
    for start in range(1, terms + 1, chunk):
        n = np.arange(start, min(start + chunk, terms + 1), dtype=np.float64)
        a = np.fmod(n * hi, 2.0) + np.fmod(n * lo, 2.0)
        a = np.fmod(a, 2.0)
        c = np.cos(np.pi * a)
        if np.any(c == 0):
            raise ConvergenceError("a term of the secant sum is infinite")
        total += float(np.sum(1.0 / (c * n ** s)))
    return mpmath.mpf(total)


# ---------------------------------------------------------------------------
# Cotangent Dirichlet series

def xi_numeric(s: int, tau, precision: int = 128):
    """xi_s(tau) = sum cot(pi n tau)/n^s for odd s >= 3 and Im(tau) > 0, via
    (i/2) xi_s = zeta(s)/2 + sum_N sigma_s(N) N^-s q^N, q = e^(2 pi i tau)."""
    if s < 2:
        raise ValueError("s must be >= 2")
    with mpmath.workprec(precision + GUARD_BITS):
        tau = to_mp(tau)
        if mpmath.im(tau) <= 0:
            raise ConvergenceError("needs Im(tau) > 0")
        q = mpmath.expjpi(2 * tau)
        r = abs(q)
        # sigma_s(N)/N^s <= zeta(s) <= 2
        N = _terms_for(r, precision, scale=2)
        c = _twisted_divisor_sums(N, s, lambda d: 1)
        acc = mpmath.mpc(0)
        qn = mpmath.mpc(1)
        for n in range(1, N + 1):
            qn *= q
            acc += mpmath.mpf(c[n]) / mpmath.mpf(n) ** s * qn
        acc += zeta_numeric(s, precision + GUARD_BITS) / 2
        acc *= -2j
    with mpmath.workprec(precision):
        return +acc


def xi_direct(s: int, tau, precision: int = 128):
    """The defining cotangent sum, with cot -> -i split off and summed exactly."""
    with mpmath.workprec(precision + GUARD_BITS):
        tau = to_mp(tau)
        if mpmath.im(tau) <= 0:
            raise ConvergenceError("needs Im(tau) > 0")
        r = abs(mpmath.expjpi(2 * tau))
        N = _terms_for(r, precision, scale=4)
        acc = mpmath.fsum((mpmath.cot(mpmath.pi * n * tau) + 1j) / mpmath.mpf(n) ** s for n in range(1, N + 1))
        acc -= 1j * mpmath.zeta(s)
    with mpmath.workprec(precision):
        return +acc


def psi_hat_numeric(m: int, tau, precision: int = 128):
    """sum chi_-4(n) cot(pi n tau / 2) / (n/2)^(2m), Im(tau) > 0."""
    with mpmath.workprec(precision + GUARD_BITS):
        tau = to_mp(tau)
        if mpmath.im(tau) <= 0:
            raise ConvergenceError("needs Im(tau) > 0")
        r = abs(mpmath.expjpi(tau))
        N = _terms_for(r, precision, scale=4 ** (m + 1))
        acc = mpmath.mpc(0)
        for n in range(1, N + 1, 2):
            acc += _chi_m4(n) * (mpmath.cot(mpmath.pi * n * tau / 2) + 1j) / (mpmath.mpf(n) / 2) ** (2 * m)
        acc -= 1j * 4 ** m * l_numeric(2 * m, _CHI_M4, precision + GUARD_BITS)
    with mpmath.workprec(precision):
        return +acc


# ---------------------------------------------------------------------------
# Eichler integrals of Eisenstein series

def eichler_numeric(k: int, chi: DirichletCharacter, psi: DirichletCharacter, tau, precision: int = 128):
    """E~_k(tau; chi, psi) = -(4 pi i/(k-1)) (G(psi)/M) sum_n a_n e^(2 pi i n tau / M),
    a_n = sum_{d|n} conj(psi)(n/d) chi(d) d^(1-k)."""
    if k < 3:
        raise ValueError("k must be >= 3")
    if not psi.is_primitive:
        raise ValueError(f"{psi.name} is imprimitive; the Fourier expansion assumes a primitive psi")
    M = psi.modulus
    with mpmath.workprec(precision + GUARD_BITS):
        tau = to_mp(tau)
        if mpmath.im(tau) <= 0:
            raise ConvergenceError("needs Im(tau) > 0")
        q = mpmath.exp(2j * mpmath.pi * tau / M)
        # |a_n| <= zeta(k-1) <= zeta(2) < 2
        N = _terms_for(abs(q), precision, scale=2)
        pb = psi.conjugate()
        chi_v = [chi.numeric_value(d) for d in range(chi.modulus)]
        psi_v = [pb.numeric_value(d) for d in range(M)]
        a = [mpmath.mpc(0)] * (N + 1)
        for d in range(1, N + 1):
            cd = chi_v[d % chi.modulus]
            if cd == 0:
                continue
            w = cd * mpmath.mpf(d) ** (1 - k)
            for j, n in enumerate(range(d, N + 1, d), start=1):
                pv = psi_v[j % M]
                if pv != 0:
                    a[n] += w * pv
        acc = mpmath.mpc(0)
        qn = mpmath.mpc(1)
        for n in range(1, N + 1):
            qn *= q
            if a[n] != 0:
                acc += a[n] * qn
        G = gauss_sum(psi, precision + GUARD_BITS).numeric
        acc *= -4j * mpmath.pi / (k - 1) * G / M
    with mpmath.workprec(precision):
        return +acc


# ---------------------------------------------------------------------------
# Dirichlet L-values by Euler-Maclaurin

def hurwitz_zeta(s, a, precision: int = 128):
    """zeta(s, a) = sum_{n>=0} (n + a)^-s for Re(s) > 1 and Re(a) > 0, by Euler-Maclaurin.

    With shift N and p Bernoulli corrections the remainder is bounded by
    roughly |(s)_(2p+1)| / ((2 pi)^(2p+1) (N + a)^(Re s + 2p)); we take p = N
    and N large enough that this is below 2^-(precision + 8).
    """
    with mpmath.workprec(precision + GUARD_BITS + 16):
        s = to_mp(s)
        a = to_mp(a)
        if mpmath.re(s) <= 1:
            raise ValueError("Euler-Maclaurin branch needs Re(s) > 1")
        if mpmath.re(a) <= 0:
            raise ValueError("needs Re(a) > 0")
        sabs = abs(s)
        N = max(8, int(precision / 6) + 8, int(sabs) + 8)
        p = N
        while True:
            bound = _em_remainder_bound(s, a, N, p)
            if bound < mpmath.mpf(2) ** (-precision - 8):
                break
            N += 8
            p = N
        acc = mpmath.fsum((n + a) ** (-s) for n in range(N))
        x = N + a
        acc += x ** (1 - s) / (s - 1) + x ** (-s) / 2
        rising = s  # (s)_(2j-1)
        xp = x ** (-s - 1)
        x2 = x * x
        for j in range(1, p + 1):
            B = bernoulli_number(2 * j)
            acc += to_mp(B) / factorial(2 * j) * rising * xp
            rising *= (s + 2 * j - 1) * (s + 2 * j)
            xp /= x2
    with mpmath.workprec(precision):
        return +acc


def _em_remainder_bound(s, a, N, p):
    r = abs(mpmath.rf(s, 2 * p + 1))
    x = abs(N + a)
    return 4 * r / ((2 * mpmath.pi) ** (2 * p + 1) * x ** (mpmath.re(s) + 2 * p))


def zeta_numeric(s, precision: int = 128):
    return hurwitz_zeta(s, 1, precision)


def l_numeric(s, chi: DirichletCharacter, precision: int = 128):
    """L(s, chi) = M^-s sum_a chi(a) zeta(s, a/M) for Re(s) > 1.

    At s = 1 (nonprincipal chi) uses -(1/M) sum_a chi(a) digamma(a/M).
    Works for complex characters and either parity.
    """
    M = chi.modulus
    with mpmath.workprec(precision + GUARD_BITS):
        s = to_mp(s)
        if s == 1:
            if chi.is_principal:
                raise ValueError("L(s, chi) has a pole at s = 1 for principal chi")
            acc = -mpmath.fsum(chi.numeric_value(a) * mpmath.digamma(mpmath.mpf(a) / M)
                               for a in range(1, M + 1) if chi.exponent(a) is not None) / M
        else:
            acc = mpmath.mpc(0)
            for a in range(1, M + 1):
                if chi.exponent(a) is None:
                    continue
                acc += chi.numeric_value(a) * hurwitz_zeta(s, mpmath.mpf(a) / M, precision + GUARD_BITS)
            acc *= mpmath.mpf(M) ** (-s)
        if chi.is_real and mpmath.im(s) == 0:
            acc = mpmath.re(acc)
    with mpmath.workprec(precision):
        return +acc


def _make_chi_m4():
    from .dirichlet import kronecker_character
    return kronecker_character(-4)


_CHI_M4 = _make_chi_m4()


__all__ = [
    "ComplexHP", "ConvergenceError", "to_mp", "parse_complex", "eval_exact",
    "psi_numeric", "xi_numeric", "xi_direct", "psi_hat_numeric", "eichler_numeric",
    "hurwitz_zeta", "zeta_numeric", "l_numeric",
]
