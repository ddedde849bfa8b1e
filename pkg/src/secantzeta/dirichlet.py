"""Dirichlet characters, Gauss sums, generalized Bernoulli numbers, exact L-values.

Characters are stored as a table of exponents ``e(n)`` in Q/Z, with
``chi(n) = exp(2 pi i e(n))`` (``None`` where ``gcd(n, M) > 1``).  Real
characters get exact arithmetic; complex ones only have numeric paths.

Character specs (CLI and config):

``"1"``      principal character mod 1
``"k:D"``    Kronecker character of the fundamental discriminant D
``"m:M:j"``  j-th character mod M in canonical order (0-based, principal is 0)
``"p:M"``    principal character mod M
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from math import factorial, gcd
from typing import Optional

import mpmath

from .exact import PiMultiple, bernoulli_polynomial, squarefree_decomposition


class CharacterError(ValueError):
    pass


# ---------------------------------------------------------------------------
# Kronecker symbol

def jacobi_symbol(a: int, n: int) -> int:
    if n <= 0 or n % 2 == 0:
        raise ValueError("Jacobi symbol needs odd n > 0")
    a %= n
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def kronecker_symbol(a: int, n: int) -> int:
    if n == 0:
        return 1 if abs(a) == 1 else 0
    result = 1
    if n < 0:
        n = -n
        if a < 0:
            result = -1
    v = 0
    while n % 2 == 0:
        n //= 2
        v += 1
    if v:
        if a % 2 == 0:
            return 0
        if v % 2 and a % 8 in (3, 5):
            result = -result
    return result * jacobi_symbol(a, n) if n > 1 else result


def check_fundamental_discriminant(d: int) -> None:
    """Raise CharacterError naming the failing condition."""
    if d == 0:
        raise CharacterError("0 is not a fundamental discriminant")
    if d == 1:
        return
    if d % 4 == 1:
        if squarefree_decomposition(abs(d))[0] != 1:
            raise CharacterError(f"{d} = 1 mod 4 but is not squarefree")
        return
    if d % 4 == 0:
        m = d // 4
        if m % 4 not in (2, 3):
            raise CharacterError(f"{d} = 4m with m = {m} not = 2, 3 mod 4")
        if squarefree_decomposition(abs(m))[0] != 1:
            raise CharacterError(f"{d} = 4m with m = {m} not squarefree")
        return
    raise CharacterError(f"{d} = {d % 4} mod 4; fundamental discriminants are 0 or 1 mod 4")


# ---------------------------------------------------------------------------
# Characters

@dataclass(frozen=True)
class DirichletCharacter:
    modulus: int
    exponents: tuple  # Fraction in [0, 1) or None, indexed by n mod M
    label: str = field(default="", compare=False)

    def __post_init__(self):
        if self.modulus < 1 or len(self.exponents) != self.modulus:
            raise CharacterError("character table must have length equal to the modulus")

    # -- values
    def exponent(self, n: int) -> Optional[Fraction]:
        return self.exponents[n % self.modulus]

    def __call__(self, n: int) -> int:
        """Exact value for real characters."""
        e = self.exponents[n % self.modulus]
        if e is None:
            return 0
        if e == 0:
            return 1
        if e == Fraction(1, 2):
            return -1
        raise CharacterError(f"{self.name} is complex; use numeric_value")

    def numeric_value(self, n: int):
        e = self.exponents[n % self.modulus]
        if e is None:
            return mpmath.mpc(0)
        if e == 0:
            return mpmath.mpc(1)
        if e == Fraction(1, 2):
            return mpmath.mpc(-1)
        return mpmath.expjpi(2 * mpmath.mpf(e.numerator) / e.denominator)

    def conjugate(self) -> "DirichletCharacter":
        if self.is_real:
            return self
        ex = tuple(None if e is None else (-e) % 1 for e in self.exponents)
        return DirichletCharacter(self.modulus, ex, f"conj({self.name})")

    # -- flags
    @cached_property
    def is_real(self) -> bool:
        return all(e is None or e in (0, Fraction(1, 2)) for e in self.exponents)

    @cached_property
    def is_principal(self) -> bool:
        return all(e is None or e == 0 for e in self.exponents)

    @cached_property
    def parity(self) -> int:
        """chi(-1) in {+1, -1}."""
        return 1 if self.exponents[(self.modulus - 1) % self.modulus] == 0 else -1

    @cached_property
    def conductor(self) -> int:
        M = self.modulus
        units = [n for n in range(1, M + 1) if gcd(n, M) == 1]
        for d in sorted(d for d in range(1, M + 1) if M % d == 0):
            if all(self.exponents[n % M] == 0 for n in units if (n - 1) % d == 0):
                return d
        return M

    @property
    def is_primitive(self) -> bool:
        return self.conductor == self.modulus

    @property
    def is_trivial(self) -> bool:
        """The principal character mod 1, written chi = 1."""
        return self.modulus == 1

    @property
    def name(self) -> str:
        return self.label or f"chi mod {self.modulus}"

    @property
    def real_label(self) -> str:
        """Conductor plus parity sign, e.g. '35-' (real characters)."""
        return f"{self.conductor}{'+' if self.parity == 1 else '-'}"

    def primitive(self) -> "DirichletCharacter":
        """The primitive character inducing this one."""
        f = self.conductor
        ex = [None] * f
        for n in range(1, self.modulus + 1):
            if gcd(n, self.modulus) == 1 and ex[n % f] is None:
                ex[n % f] = self.exponents[n % self.modulus]
        if f == 1:
            ex = [Fraction(0)]
        return DirichletCharacter(f, tuple(ex), f"prim({self.name})")

    def __repr__(self):
        return f"DirichletCharacter({self.name})"


def _primitive_root(q: int, p: int) -> int:
    """Smallest primitive root modulo q = p^e, p odd."""
    phi = q // p * (p - 1)
    primes = [r for r in range(2, phi + 1) if phi % r == 0 and all(r % s for s in range(2, int(r ** 0.5) + 1))]
    for g in range(2, q):
        if gcd(g, q) == 1 and all(pow(g, phi // r, q) != 1 for r in primes):
            return g
    raise ArithmeticError(f"no primitive root mod {q}")


@lru_cache(maxsize=None)
def _components(M: int):
    """[(q, orders, dlog)] over prime-power parts, 2-part first.

    dlog maps a unit residue mod q to its exponent vector w.r.t. the generators.
    """
    comps = []
    n, p = M, 2
    factors = []
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            factors.append((p, e))
        p += 1
    if n > 1:
        factors.append((n, 1))
    for p, e in factors:
        q = p ** e
        if p == 2:
            if e == 1:
                continue
            if e == 2:
                comps.append((q, (2,), {1: (0,), 3: (1,)}))
                continue
            o = 2 ** (e - 2)
            dlog = {}
            for a in range(2):
                for b in range(o):
                    dlog[((-1) ** a * pow(5, b, q)) % q] = (a, b)
            comps.append((q, (2, o), dlog))
        else:
            g = _primitive_root(q, p)
            o = q // p * (p - 1)
            dlog, x = {}, 1
            for k in range(o):
                dlog[x] = (k,)
                x = x * g % q
            comps.append((q, (o,), dlog))
    return comps


def _character_from_vector(M: int, vec: tuple, label: str) -> DirichletCharacter:
    comps = _components(M)
    ex = []
    for n in range(M):
        if gcd(n, M) != 1:
            ex.append(None)
            continue
        e = Fraction(0)
        i = 0
        for q, orders, dlog in comps:
            ks = dlog[n % q]
            for o, k in zip(orders, ks):
                e += Fraction(vec[i] * k, o)
                i += 1
        ex.append(e % 1)
    if M == 1:
        ex = [Fraction(0)]
    return DirichletCharacter(M, tuple(ex), label)


@lru_cache(maxsize=None)
def characters_mod(M: int, real_only: bool = False) -> tuple:
    """All characters mod M in canonical order (principal first).

    Canonical order: CRT components by increasing prime, generators the
    smallest primitive root (or -1, 5 for powers of 2), exponent vectors in
    lexicographic order.  With ``real_only`` the non-real ones are dropped but
    labels keep their canonical index.
    """
    if M < 1:
        raise CharacterError("modulus must be >= 1")
    orders = [o for _, os, _ in _components(M) for o in os]
    out = []
    for j, vec in enumerate(itertools.product(*[range(o) for o in orders])):
        if real_only and any((2 * v) % o for v, o in zip(vec, orders)):
            continue
        out.append(_character_from_vector(M, vec, f"m:{M}:{j}"))
    return tuple(out)


def principal_character(M: int) -> DirichletCharacter:
    return characters_mod(M)[0]


def kronecker_character(d: int) -> DirichletCharacter:
    """Real primitive character (d/.) of conductor |d|."""
    check_fundamental_discriminant(d)
    M = abs(d)
    ex = []
    for n in range(M):
        v = kronecker_symbol(d, n) if M > 1 else 1
        ex.append(None if v == 0 else (Fraction(0) if v == 1 else Fraction(1, 2)))
    return DirichletCharacter(M, tuple(ex), f"k:{d}")


def parse_character(spec: str) -> DirichletCharacter:
    s = spec.strip()
    try:
        if s == "1":
            return principal_character(1)
        head, _, rest = s.partition(":")
        if head == "k":
            return kronecker_character(int(rest))
        if head == "p":
            return principal_character(int(rest))
        if head == "m":
            M, j = (int(t) for t in rest.split(":"))
            chars = characters_mod(M)
            if not 0 <= j < len(chars):
                raise CharacterError(f"index {j} out of range for modulus {M} ({len(chars)} characters)")
            return chars[j]
    except CharacterError:
        raise
    except ValueError as exc:
        raise CharacterError(f"bad character spec {spec!r}: {exc}") from None
    raise CharacterError(f"bad character spec {spec!r}; expected 1, k:D, m:M:j or p:M")


def character_spec(chi: DirichletCharacter) -> str:
    """A spec string that parses back to chi."""
    if chi.label and (chi.label == "1" or chi.label[:2] in ("k:", "m:", "p:")):
        return chi.label
    for c in characters_mod(chi.modulus):
        if c == chi:
            return c.label
    raise CharacterError("character not found in canonical enumeration")


# ---------------------------------------------------------------------------
# Gauss sums

@dataclass(frozen=True)
class GaussSumValue:
    exact: Optional[tuple]  # (coefficient, radicand, imaginary)
    numeric: object          # mpmath.mpc

    def __str__(self):
        if self.exact is None:
            return mpmath.nstr(self.numeric, 20)
        c, r, im = self.exact
        return f"{'' if c == 1 else str(c) + '*'}{'i*' if im else ''}sqrt({r})"


def gauss_sum_exact(chi: DirichletCharacter) -> Optional[tuple]:
    """(1, M, odd?) for real primitive chi; None otherwise."""
    if chi.is_real and chi.is_primitive:
        return (1, chi.modulus, chi.parity == -1)
    return None


def gauss_sum(chi: DirichletCharacter, precision: int = 128) -> GaussSumValue:
    M = chi.modulus
    with mpmath.workprec(precision + 64):
        total = mpmath.mpc(0)
        for a in range(1, M + 1):
            e = chi.exponent(a)
            if e is None:
                continue
            total += mpmath.expjpi(2 * (mpmath.mpf(a) / M + mpmath.mpf(e.numerator) / e.denominator))
    exact = gauss_sum_exact(chi)
    if exact is not None:
        with mpmath.workprec(precision + 64):
            closed = mpmath.sqrt(M) * (1j if exact[2] else 1)
            if abs(closed - total) > mpmath.mpf(2) ** (-precision):
                raise ArithmeticError(f"Gauss sum closed form disagrees with direct sum for {chi.name}")
    with mpmath.workprec(precision):
        total = +total
    return GaussSumValue(exact, total)


# ---------------------------------------------------------------------------
# Generalized Bernoulli numbers

@lru_cache(maxsize=None)
def _gen_bernoulli_exact(n: int, chi: DirichletCharacter) -> Fraction:
    L = chi.modulus
    Bn = bernoulli_polynomial(n)
    total = Fraction(0)
    for a in range(1, L + 1):
        v = chi(a)
        if v:
            total += v * Bn(Fraction(a, L))
    return total * Fraction(L) ** (n - 1)


def generalized_bernoulli(n: int, chi: DirichletCharacter, precision: int = 128):
    """B_{n,chi} from sum chi(a) x e^{ax}/(e^{Lx} - 1) = sum B_{n,chi} x^n/n!.

    Exact Fraction for real chi; for complex chi a numeric mpc (the same
    formula at the requested precision).
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    if chi.is_real:
        return _gen_bernoulli_exact(n, chi)
    L = chi.modulus
    Bn = bernoulli_polynomial(n)
    with mpmath.workprec(precision + 32):
        total = mpmath.mpc(0)
        for a in range(1, L + 1):
            if chi.exponent(a) is not None:
                b = Bn(Fraction(a, L))
                total += chi.numeric_value(a) * mpmath.mpf(b.numerator) / b.denominator
        total *= mpmath.mpf(L) ** (n - 1)
    return total


# ---------------------------------------------------------------------------
# Exact L-values

@dataclass(frozen=True)
class SymbolicLValue:
    """rational_part * pi^pi_power * i^i_power * G(gauss_factor), = L(argument, character)."""

    rational_part: Fraction
    pi_power: int
    i_power: int
    gauss_factor: Optional[DirichletCharacter]
    character: DirichletCharacter
    argument: int

    def collapse(self) -> PiMultiple:
        """Exact real value as c * sqrt(r) * pi^p (needs an exactly known Gauss sum)."""
        ip = self.i_power % 4
        radicand = 1
        if self.gauss_factor is not None:
            g = gauss_sum_exact(self.gauss_factor)
            if g is None:
                raise CharacterError("Gauss sum not exactly known")
            _, radicand, imag = g
            ip = (ip + (1 if imag else 0)) % 4
        if ip % 2:
            raise ArithmeticError("value is not real")
        sign = 1 if ip == 0 else -1
        return PiMultiple(sign * self.rational_part, self.pi_power, radicand)

    def numeric(self, precision: int = 128):
        with mpmath.workprec(precision + 16):
            v = mpmath.mpf(self.rational_part.numerator) / self.rational_part.denominator
            v = v * mpmath.pi ** self.pi_power * mpmath.mpc(0, 1) ** (self.i_power % 4)
            if self.gauss_factor is not None:
                v *= gauss_sum(self.gauss_factor, precision + 16).numeric
        return v

    def __str__(self):
        try:
            return str(self.collapse())
        except (CharacterError, ArithmeticError):
            return f"{self.rational_part}*pi^{self.pi_power}*i^{self.i_power}*G({self.gauss_factor.name})"


def l_value_exact(s: int, chi: DirichletCharacter) -> SymbolicLValue:
    """L(s, chi) for integer s at which it is a known closed form.

    s >= 1 needs chi(-1) = (-1)^s and chi primitive; s <= 0 gives
    -B_{1-s,chi}/(1-s), which is 0 for the wrong parity.
    """
    if not chi.is_real:
        raise CharacterError("exact L-values are only implemented for real characters")
    if s <= 0:
        n = 1 - s
        return SymbolicLValue(-generalized_bernoulli(n, chi) / n, 0, 0, None, chi, s)
    if not chi.is_primitive:
        raise CharacterError(f"{chi.name} is imprimitive (conductor {chi.conductor})")
    if chi.parity != (-1) ** s:
        raise CharacterError(
            f"L({s}, {chi.name}) has the wrong parity for a closed form; use numerics.l_numeric")
    if chi.is_trivial and s == 1:
        raise CharacterError("L(1, 1) is the pole of zeta")
    L = chi.modulus
    B = generalized_bernoulli(s, chi.conjugate())
    rational = Fraction((-1) ** (s - 1) * 2 ** (s - 1)) * B / (factorial(s) * L ** s)
    return SymbolicLValue(rational, s, s % 4, chi, chi, s)
