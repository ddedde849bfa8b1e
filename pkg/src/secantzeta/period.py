"""Generalized Ramanujan polynomials and period polynomials of Eisenstein series.

Notation: chi is a character mod L, psi a character mod M, k the weight.
Polynomials are exact ``Poly`` objects in X (Laurent down to X^-1).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import factorial

import mpmath

from .dirichlet import CharacterError, DirichletCharacter, gauss_sum, generalized_bernoulli
from .exact import Poly, RationalFunction, bernoulli_number

X = Poly.x()


def _require_real(*chars: DirichletCharacter) -> None:
    for c in chars:
        if not c.is_real:
            raise CharacterError(f"{c.name} is complex; the exact polynomial path needs real characters")


def _bw(n: int, chi: DirichletCharacter) -> Fraction:
    """B_{n,chi}/n!"""
    return generalized_bernoulli(n, chi) / factorial(n)


def parity_ok(k: int, chi: DirichletCharacter, psi: DirichletCharacter) -> bool:
    return chi.parity * psi.parity == (-1) ** k


def ramanujan_classic(k: int) -> Poly:
    """sum_s B_s/s! B_{k-s}/(k-s)! X^(s-1) for even k >= 4."""
    if k < 4 or k % 2:
        raise ValueError("the classic polynomial is defined here for even k >= 4")
    acc = {}
    for s in range(k + 1):
        c = bernoulli_number(s) * bernoulli_number(k - s) / (factorial(s) * factorial(k - s))
        if c:
            acc[s - 1] = c
    return Poly(acc)


@lru_cache(maxsize=None)
def _shifted_power(M: int, e: int) -> Poly:
    """((X - 1)/M)^e"""
    return ((X - 1) * Fraction(1, M)) ** e


@lru_cache(maxsize=None)
def R_gen(k: int, chi: DirichletCharacter, psi: DirichletCharacter) -> Poly:
    """sum_s B_{s,chi}/s! B_{k-s,psi}/(k-s)! ((X-1)/M)^(k-s-1) (1 - X^(s-1))."""
    if k < 2:
        raise ValueError("k must be >= 2")
    _require_real(chi, psi)
    M = psi.modulus
    acc = Poly()
    for s in range(k + 1):
        c = _bw(s, chi) * _bw(k - s, psi)
        if not c:
            continue
        if s == k:
            # ((X-1)/M)^(-1) (1 - X^(k-1)) = -M (1 + X + ... + X^(k-2))
            term = Poly({i: -M for i in range(k - 1)})
        else:
            term = _shifted_power(M, k - s - 1) * (1 - Poly.monomial(s - 1))
        acc = acc + term * c
    return acc


@lru_cache(maxsize=None)
def S_gen(k: int, chi: DirichletCharacter, psi: DirichletCharacter) -> Poly:
    """sum_s B_{s,chi}/s! B_{k-s,psi}/(k-s)! (L X / M)^(k-s-1)."""
    if k < 2:
        raise ValueError("k must be >= 2")
    _require_real(chi, psi)
    ratio = Fraction(chi.modulus, psi.modulus)
    acc = {}
    for s in range(k + 1):
        c = _bw(s, chi) * _bw(k - s, psi)
        if c:
            e = k - s - 1
            acc[e] = c * ratio ** e
    return Poly(acc)


def unipotent_slash_difference(p: Poly, w: int, n: int) -> Poly:
    """p |_{-w} (1 - R^n): X^j -> X^j (1 - (nX+1)^(w-j))."""
    if w < 0:
        raise ValueError("w must be >= 0")
    lin = Poly.linear(n, 1)
    acc = Poly()
    for j, c in p.items():
        if j > w:
            raise ValueError(f"exponent {j} exceeds w = {w}; result would not be a polynomial")
        if j == w:
            continue
        acc = acc + Poly.monomial(j, c) * (1 - lin ** (w - j))
    return acc


def slash_one_minus_R(f: RationalFunction, w: int, n: int) -> RationalFunction:
    """f |_{-w} (1 - R^n) for a rational function f: f(X) - (nX+1)^w f(X/(nX+1))."""
    return f - RationalFunction(Poly.linear(n, 1) ** w) * f.mobius_substitute(1, 0, n, 1)


def self_inversive_check(p: Poly, k: int, epsilon: int) -> bool:
    """p(X) == epsilon X^(k-2) p(1/X), exactly."""
    return p == p.reciprocal(k - 2) * epsilon


# ---------------------------------------------------------------------------
# Period polynomials of E_k(tau; chi, psi)

@dataclass(frozen=True)
class PeriodPrefactor:
    """rational * (2 pi i)^two_pi_i_power * prod G(chi) over gauss_factors."""

    rational: Fraction
    two_pi_i_power: int
    gauss_factors: tuple
    sign_char_values: tuple  # (chi(-1), psi(-1))

    def numeric(self, precision: int = 128):
        with mpmath.workprec(precision + 32):
            v = mpmath.mpf(self.rational.numerator) / self.rational.denominator
            v = v * (2j * mpmath.pi) ** self.two_pi_i_power
            for c in self.gauss_factors:
                v *= gauss_sum(c, precision + 32).numeric
        return v

    def __str__(self):
        g = "".join(f"*G({c.name})" for c in self.gauss_factors)
        return f"{self.rational}*(2*pi*i)^{self.two_pi_i_power}{g}"


@dataclass(frozen=True)
class EpsilonTerm:
    """coefficient * pi * i * L(argument, character) * X^exponent, L left symbolic."""

    coefficient: Fraction
    argument: int
    character: DirichletCharacter
    exponent: int

    def numeric(self, precision: int = 128):
        from .numerics import l_numeric

        with mpmath.workprec(precision + 32):
            lv = l_numeric(self.argument, self.character, precision + 32)
            return mpmath.mpf(self.coefficient.numerator) / self.coefficient.denominator * mpmath.pi * 1j * lv


@dataclass(frozen=True)
class PeriodPolynomial:
    """prefactor * polynomial(X) + sum of epsilon terms."""

    k: int
    chi: DirichletCharacter
    psi: DirichletCharacter
    prefactor: PeriodPrefactor
    polynomial: Poly
    epsilon_terms: tuple = field(default=())

    def __call__(self, x, precision: int = 128):
        with mpmath.workprec(precision + 32):
            x = mpmath.mpc(x)
            v = self.prefactor.numeric(precision) * eval_poly(self.polynomial, x)
            for t in self.epsilon_terms:
                v += t.numeric(precision) * x ** t.exponent
        return v


def eval_poly(p: Poly, x):
    """Numeric evaluation of an exact (Laurent) polynomial at an mpmath number."""
    acc = mpmath.mpc(0)
    for e, c in p.items():
        acc += mpmath.mpf(c.numerator) / c.denominator * x ** e
    return acc


def rho_hat(k: int, chi: DirichletCharacter, psi: DirichletCharacter) -> PeriodPolynomial:
    """The period polynomial of E_k(tau; chi, psi) at the identity coset.

    Exact polynomial part (in generalized Bernoulli numbers over the parity-valid
    s), with the wrong-parity L-values of principal characters kept symbolic.
    """
    if k < 3:
        raise ValueError("k must be >= 3")
    _require_real(chi, psi)
    for c in (chi, psi):
        if not c.is_primitive:
            raise CharacterError(f"{c.name} is imprimitive")
    if not parity_ok(k, chi, psi):
        raise CharacterError(f"chi(-1) psi(-1) != (-1)^{k}: the Eisenstein series vanishes")
    L, M = chi.modulus, psi.modulus
    acc = {}
    for s in range(k + 1):
        if chi.parity != (-1) ** s:
            continue
        c = _bw(s, chi) * _bw(k - s, psi) / (Fraction(L) ** s * Fraction(M) ** (k - s))
        if c:
            acc[k - s - 1] = c
    gauss = tuple(c for c in (chi, psi) if not c.is_trivial)
    prefactor = PeriodPrefactor(Fraction(-chi.parity, k - 1), k, gauss, (chi.parity, psi.parity))
    eps = []
    base = Fraction(-2 * psi.parity, k - 1)
    if chi.is_trivial:
        eps.append(EpsilonTerm(base, k - 1, psi, k - 2))
    if psi.is_trivial:
        eps.append(EpsilonTerm(-base, k - 1, chi, 0))
    return PeriodPolynomial(k, chi, psi, prefactor, Poly(acc), tuple(eps))


__all__ = [
    "ramanujan_classic", "R_gen", "S_gen", "unipotent_slash_difference", "slash_one_minus_R",
    "self_inversive_check", "PeriodPrefactor", "EpsilonTerm", "PeriodPolynomial", "rho_hat",
    "parity_ok", "eval_poly",
]
