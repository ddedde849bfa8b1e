"""2x2 integer matrices, Pell solutions and words in the generators of Gamma(2).

Gamma(2) is generated by ``A = (1 2; 0 1)``, ``B = (1 0; 2 1)`` and ``-I``;
A and B generate a free group, so every member is ``+-`` a unique reduced word.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

from .exact import as_fraction, is_square


@dataclass(frozen=True)
class Mat2Z:
    a: int
    b: int
    c: int
    d: int

    @property
    def det(self) -> int:
        return self.a * self.d - self.b * self.c

    def __matmul__(self, o: "Mat2Z") -> "Mat2Z":
        return Mat2Z(self.a * o.a + self.b * o.c, self.a * o.b + self.b * o.d,
                     self.c * o.a + self.d * o.c, self.c * o.b + self.d * o.d)

    def __neg__(self) -> "Mat2Z":
        return Mat2Z(-self.a, -self.b, -self.c, -self.d)

    def inverse(self) -> "Mat2Z":
        if self.det != 1:
            raise ValueError("inverse only implemented for determinant 1")
        return Mat2Z(self.d, -self.b, -self.c, self.a)

    def __pow__(self, n: int) -> "Mat2Z":
        base = self if n >= 0 else self.inverse()
        out = IDENTITY
        for _ in range(abs(n)):
            out = out @ base
        return out

    def rows(self) -> list:
        return [[self.a, self.b], [self.c, self.d]]

    def __str__(self):
        return f"(({self.a}, {self.b}), ({self.c}, {self.d}))"


IDENTITY = Mat2Z(1, 0, 0, 1)
A = Mat2Z(1, 2, 0, 1)
B = Mat2Z(1, 0, 2, 1)
T = Mat2Z(1, 1, 0, 1)
S = Mat2Z(0, -1, 1, 0)
GENERATORS = {"A": A, "B": B}


def gen_power(g: str, e: int) -> Mat2Z:
    if g == "A":
        return Mat2Z(1, 2 * e, 0, 1)
    if g == "B":
        return Mat2Z(1, 0, 2 * e, 1)
    raise ValueError(f"unknown generator {g!r}")


@dataclass(frozen=True)
class GroupWord:
    """sign * G1^e1 * G2^e2 * ... with Gi in {A, B}."""

    sign: int
    letters: tuple = ()

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        for (g, e), nxt in zip(self.letters, self.letters[1:] + ((None, None),)):
            if g not in GENERATORS or not isinstance(e, int) or e == 0:
                raise ValueError(f"bad letter {(g, e)!r}")
            if g == nxt[0]:
                raise ValueError("adjacent letters must use distinct generators")

    @classmethod
    def from_letters(cls, letters, sign: int = 1) -> "GroupWord":
        """Build a reduced word, merging adjacent powers of the same generator."""
        out: list = []
        for g, e in letters:
            if out and out[-1][0] == g:
                e += out.pop()[1]
            if e:
                out.append((g, e))
        return cls(sign, tuple(out))

    @classmethod
    def parse(cls, text: str) -> "GroupWord":
        """Parse e.g. ``"-A^1 B^-1 A"`` (whitespace separated, leading '-' for -I)."""
        s = text.strip()
        sign = 1
        if s.startswith("-"):
            sign, s = -1, s[1:].strip()
        letters = []
        for tok in s.split():
            m = re.fullmatch(r"([AB])(?:\^(-?\d+))?", tok)
            if not m:
                raise ValueError(f"bad word token {tok!r}")
            letters.append((m.group(1), int(m.group(2) or 1)))
        return cls.from_letters(letters, sign)

    def evaluate(self) -> Mat2Z:
        out = IDENTITY
        for g, e in self.letters:
            out = out @ gen_power(g, e)
        return out if self.sign == 1 else -out

    def unsigned(self) -> "GroupWord":
        return GroupWord(1, self.letters)

    def __str__(self):
        body = " ".join(f"{g}^{e}" for g, e in self.letters)
        return ("-" if self.sign == -1 else "") + (body or "I")


@dataclass(frozen=True)
class PellSolution:
    D: int
    X: int
    Y: int


def pell_fundamental(D: int) -> PellSolution:
    """Minimal positive solution of X^2 - D Y^2 = 1 from the continued fraction of sqrt(D)."""
    if D < 2 or is_square(D):
        raise ValueError(f"Pell equation needs a nonsquare D >= 2, got {D}")
    a0 = isqrt(D)
    m, q, a = 0, 1, a0
    p_prev, p = 1, a0
    r_prev, r = 0, 1
    while p * p - D * r * r != 1:
        m = q * a - m
        q = (D - m * m) // q
        a = (a0 + m) // q
        p_prev, p = p, a * p + p_prev
        r_prev, r = r, a * r + r_prev
    return PellSolution(D, p, r)


def stabilizer_in_gamma2(r) -> Mat2Z:
    """D^2 with D = (X aY; bY X) built from the Pell solution for a*b, r = a/b."""
    r = as_fraction(r)
    if r <= 0:
        raise ValueError("r must be positive")
    a, b = r.numerator, r.denominator
    if is_square(a * b):
        raise ValueError(f"sqrt({r}) is rational; no hyperbolic stabilizer")
    sol = pell_fundamental(a * b)
    D = Mat2Z(sol.X, a * sol.Y, b * sol.Y, sol.X)
    return D @ D


def gamma2_membership(M: Mat2Z) -> bool:
    if M.det != 1:
        raise ValueError(f"determinant {M.det} != 1")
    return M.a % 2 == 1 and M.d % 2 == 1 and M.b % 2 == 0 and M.c % 2 == 0


def _nearest(num: int, den: int) -> int:
    """Nearest integer to num/den, ties toward zero."""
    q, rem = divmod(num, den)
    # now num/den = q + rem/den with 0 <= rem/den < 1 (den may be negative)
    frac = Fraction(rem, den)
    if frac > Fraction(1, 2) or (frac == Fraction(1, 2) and q < 0):
        q += 1
    return q


def word_decompose(M: Mat2Z) -> GroupWord:
    """Write a member of Gamma(2) as sign * (reduced word in A, B)."""
    if not gamma2_membership(M):
        raise ValueError(f"{M} is not in Gamma(2)")
    letters = []
    cur = M
    while cur.c != 0:
        if abs(cur.a) > abs(cur.c):
            q = _nearest(cur.a, 2 * cur.c)
            g = "A"
        else:
            q = _nearest(cur.c, 2 * cur.a)
            g = "B"
        letters.append((g, q))
        cur = gen_power(g, -q) @ cur
    sign = cur.a  # cur = sign * A^n
    n = (cur.b * sign) // 2
    letters.append(("A", n))
    word = GroupWord.from_letters(letters, sign)
    assert word.evaluate() == M
    return word


def mobius_apply(M: Mat2Z, x):
    """(a x + b)/(c x + d) for QuadExt, rationals, complex or mpmath numbers."""
    if isinstance(x, int):
        x = Fraction(x)
    den = M.c * x + M.d
    if den == 0:
        raise ZeroDivisionError(f"{M} sends {x} to infinity")
    return (M.a * x + M.b) / den


def automorphy_factor(M: Mat2Z, x):
    return M.c * x + M.d


__all__ = [
    "Mat2Z", "GroupWord", "PellSolution", "IDENTITY", "A", "B", "T", "S",
    "gen_power", "pell_fundamental", "stabilizer_in_gamma2", "gamma2_membership",
    "word_decompose", "mobius_apply", "automorphy_factor",
]
