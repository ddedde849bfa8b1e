"""Exact arithmetic: rationals, real quadratic fields, (Laurent) polynomials,
rational functions, truncated power series, Bernoulli and Euler numbers.

Rationals are :class:`fractions.Fraction`.  Bernoulli numbers follow the
generating function ``z e^{xz} / (e^z - 1)``, so ``B_1 = -1/2``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial, gcd, isqrt
from numbers import Rational as _RationalABC

Rational = Fraction


def as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, _RationalABC)):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"cannot convert {type(x).__name__} to an exact rational")


def squarefree_decomposition(n: int) -> tuple[int, int]:
    """Return ``(s, d)`` with ``n = s**2 * d`` and ``d`` squarefree (n > 0)."""
    if n <= 0:
        raise ValueError("squarefree decomposition needs n > 0")
    s, d = 1, 1
    p = 2
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            s *= p ** (e // 2)
            if e % 2:
                d *= p
        p += 1 if p == 2 else 2
    return s, d * n


def is_square(n: int) -> bool:
    return n >= 0 and isqrt(n) ** 2 == n


# ---------------------------------------------------------------------------
# Real quadratic fields

class QuadExt:
    """Element ``a + b*sqrt(d)`` of Q(sqrt(d)), ``d > 1`` squarefree."""

    __slots__ = ("a", "b", "d")

    def __init__(self, a, b, d: int):
        if d <= 1 or squarefree_decomposition(d)[0] != 1:
            raise ValueError(f"d = {d} must be a squarefree integer > 1")
        self.a = as_fraction(a)
        self.b = as_fraction(b)
        self.d = d

    @classmethod
    def sqrt(cls, r) -> "QuadExt":
        """sqrt(r) for a positive rational r whose square root is irrational."""
        r = as_fraction(r)
        if r <= 0:
            raise ValueError("sqrt needs a positive rational")
        num, den = r.numerator, r.denominator
        s, d = squarefree_decomposition(num * den)
        if d == 1:
            raise ValueError(f"sqrt({r}) is rational")
        return cls(0, Fraction(s, den), d)

    def _coerce(self, other):
        if isinstance(other, QuadExt):
            if other.d != self.d:
                raise ValueError(f"mixed fields Q(sqrt {self.d}) and Q(sqrt {other.d})")
            return other
        if isinstance(other, (int, Fraction)):
            return QuadExt(other, 0, self.d)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return QuadExt(self.a + o.a, self.b + o.b, self.d)

    __radd__ = __add__

    def __neg__(self):
        return QuadExt(-self.a, -self.b, self.d)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return QuadExt(self.a - o.a, self.b - o.b, self.d)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return QuadExt(self.a * o.a + self.d * self.b * o.b,
                       self.a * o.b + self.b * o.a, self.d)

    __rmul__ = __mul__

    def conjugate(self) -> "QuadExt":
        return QuadExt(self.a, -self.b, self.d)

    def norm(self) -> Fraction:
        return self.a * self.a - self.d * self.b * self.b

    def inverse(self) -> "QuadExt":
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("inverse of zero in a quadratic field")
        return QuadExt(self.a / n, -self.b / n, self.d)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = QuadExt(1, 0, self.d)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def is_rational(self) -> bool:
        return self.b == 0

    def __eq__(self, other):
        if isinstance(other, QuadExt):
            return (self.a, self.b, self.d) == (other.a, other.b, other.d)
        if isinstance(other, (int, Fraction)):
            return self.b == 0 and self.a == other
        return NotImplemented

    def __hash__(self):
        return hash(self.a) if self.b == 0 else hash((self.a, self.b, self.d))

    def __bool__(self):
        return bool(self.a) or bool(self.b)

    def __float__(self):
        return float(self.a) + float(self.b) * self.d ** 0.5

    def sign(self) -> int:
        """Sign of the real number a + b sqrt(d), decided exactly."""
        sa = (self.a > 0) - (self.a < 0)
        sb = (self.b > 0) - (self.b < 0)
        if sa == sb or sb == 0:
            return sa
        if sa == 0:
            return sb
        # opposite signs: compare a^2 with d b^2
        cmp = self.a * self.a - self.d * self.b * self.b
        return sa if cmp > 0 else (sb if cmp < 0 else 0)

    def __repr__(self):
        return f"QuadExt({self.a}, {self.b}, {self.d})"

    def __str__(self):
        if self.b == 0:
            return str(self.a)
        tail = f"{abs(self.b)}*sqrt({self.d})" if abs(self.b) != 1 else f"sqrt({self.d})"
        if self.a == 0:
            return ("-" if self.b < 0 else "") + tail
        return f"{self.a} {'-' if self.b < 0 else '+'} {tail}"


# ---------------------------------------------------------------------------
# Polynomials (Laurent allowed)

class Poly:
    """Sparse polynomial in one variable; negative exponents make it Laurent.

    Coefficients are Fractions (or QuadExt).  Instances are immutable and no
    zero coefficient is ever stored.
    """

    __slots__ = ("_c",)

    def __init__(self, coeffs=None):
        c = {}
        if coeffs is None:
            pass
        elif isinstance(coeffs, dict):
            for e, v in coeffs.items():
                v = v if isinstance(v, (Fraction, QuadExt)) else as_fraction(v)
                if v:
                    c[int(e)] = v
        else:
            for e, v in enumerate(coeffs):
                v = v if isinstance(v, (Fraction, QuadExt)) else as_fraction(v)
                if v:
                    c[e] = v
        self._c = c

    @classmethod
    def _raw(cls, c: dict) -> "Poly":
        p = cls.__new__(cls)
        p._c = c
        return p

    @classmethod
    def x(cls) -> "Poly":
        return cls._raw({1: Fraction(1)})

    @classmethod
    def const(cls, v) -> "Poly":
        return cls({0: v})

    @classmethod
    def monomial(cls, e: int, v=1) -> "Poly":
        return cls({e: v})

    @classmethod
    def linear(cls, a, b) -> "Poly":
        """a*X + b"""
        return cls({1: a, 0: b})

    # -- structure
    def is_zero(self) -> bool:
        return not self._c

    def __bool__(self):
        return bool(self._c)

    @property
    def degree(self) -> int:
        if not self._c:
            raise ValueError("degree of the zero polynomial")
        return max(self._c)

    @property
    def low(self) -> int:
        """Lowest exponent with a nonzero coefficient."""
        if not self._c:
            raise ValueError("lowest exponent of the zero polynomial")
        return min(self._c)

    def is_laurent(self) -> bool:
        return bool(self._c) and self.low < 0

    def coeff(self, e: int):
        return self._c.get(e, Fraction(0))

    def items(self):
        return sorted(self._c.items())

    def coefficients(self) -> list:
        """Dense coefficient list from the lowest exponent to the degree."""
        if not self._c:
            return []
        return [self.coeff(e) for e in range(self.low, self.degree + 1)]

    @property
    def leading(self):
        return self._c[self.degree]

    # -- arithmetic
    @staticmethod
    def _lift(other):
        if isinstance(other, Poly):
            return other
        if isinstance(other, (int, Fraction, QuadExt)):
            return Poly.const(other)
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        c = dict(self._c)
        for e, v in o._c.items():
            s = c.get(e, 0) + v
            if s:
                c[e] = s
            else:
                c.pop(e, None)
        return Poly._raw(c)

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw({e: -v for e, v in self._c.items()})

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, QuadExt)):
            if not other:
                return Poly()
            return Poly._raw({e: v * other for e, v in self._c.items()})
        if not isinstance(other, Poly):
            return NotImplemented
        c: dict = {}
        for e1, v1 in self._c.items():
            for e2, v2 in other._c.items():
                e = e1 + e2
                c[e] = c.get(e, 0) + v1 * v2
        return Poly._raw({e: v for e, v in c.items() if v})

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            if len(self._c) == 1:
                (e, v), = self._c.items()
                return Poly._raw({e * n: Fraction(1) / v ** (-n)})
            raise ValueError("negative power of a non-monomial polynomial")
        result = Poly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def scale(self, v) -> "Poly":
        return self * v

    def shift(self, k: int) -> "Poly":
        """Multiply by X**k."""
        return Poly._raw({e + k: v for e, v in self._c.items()})

    def __eq__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self._c == o._c

    def __hash__(self):
        return hash(tuple(sorted(self._c.items())))

    def __call__(self, x):
        if not self._c:
            return Fraction(0) if isinstance(x, (int, Fraction)) else x * 0
        lo, hi = min(self.low, 0), self.degree
        acc = 0
        for e in range(hi, lo - 1, -1):
            acc = acc * x + self._c.get(e, 0)
        if lo < 0:
            acc = acc / x ** (-lo) if not isinstance(x, int) else Fraction(acc) / Fraction(x) ** (-lo)
        return acc

    def derivative(self) -> "Poly":
        return Poly._raw({e - 1: v * e for e, v in self._c.items() if e != 0})

    def compose(self, inner: "Poly") -> "Poly":
        """self(inner(X)); self must have no negative exponents."""
        if self._c and self.low < 0:
            raise ValueError("cannot compose a Laurent polynomial")
        result = Poly()
        for e in range(self.degree if self._c else -1, -1, -1):
            result = result * inner + self._c.get(e, 0)
        return result

    def reciprocal(self, n: int) -> "Poly":
        """X**n * p(1/X)."""
        return Poly._raw({n - e: v for e, v in self._c.items()})

    # -- Euclidean structure over Q (ordinary polynomials only)
    def _check_ordinary(self):
        if self._c and self.low < 0:
            raise ValueError("operation needs an ordinary (non-Laurent) polynomial")

    def monic(self) -> "Poly":
        return self * (Fraction(1) / self.leading)

    def __divmod__(self, other: "Poly"):
        self._check_ordinary()
        other._check_ordinary()
        if not other:
            raise ZeroDivisionError("polynomial division by zero")
        r = dict(self._c)
        q: dict = {}
        dd, lc = other.degree, other.leading
        while r:
            dr = max(r)
            if dr < dd:
                break
            f = r[dr] / lc
            q[dr - dd] = f
            for e, v in other._c.items():
                k = e + dr - dd
                s = r.get(k, 0) - f * v
                if s:
                    r[k] = s
                else:
                    r.pop(k, None)
        return Poly._raw(q), Poly._raw(r)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def gcd(self, other: "Poly") -> "Poly":
        """Monic gcd (zero if both are zero)."""
        a, b = self, other
        while b:
            a, b = b, a % b
        return a.monic() if a else a

    def squarefree_factorization(self) -> list[tuple["Poly", int]]:
        """Yun's algorithm: list of (monic squarefree factor, multiplicity)."""
        self._check_ordinary()
        f = self.monic()
        if f.degree == 0:
            return []
        out = []
        fp = f.derivative()
        a = f.gcd(fp)
        b = f // a
        c = fp // a
        i = 1
        while b.degree > 0:
            d = c - b.derivative()
            g = b.gcd(d)
            if g.degree > 0:
                out.append((g, i))
            b = b // g
            c = d // g
            i += 1
        return out

    # -- display
    def __repr__(self):
        return f"Poly({dict(self.items())!r})"

    def __str__(self):
        return self.to_string()

    def to_string(self, var: str = "X") -> str:
        if not self._c:
            return "0"
        parts = []
        for e, v in sorted(self._c.items(), reverse=True):
            mono = "" if e == 0 else (var if e == 1 else f"{var}^{e}")
            if isinstance(v, Fraction):
                neg = v < 0
                mag = -v if neg else v
                if mono:
                    body = mono if mag == 1 else f"{mag}*{mono}"
                else:
                    body = str(mag)
            else:
                neg = False
                body = f"({v})*{mono}" if mono else f"({v})"
            parts.append(("-" if neg else "+", body))
        s = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            s += f" {sign} {body}"
        return s


# ---------------------------------------------------------------------------
# Rational functions

class RationalFunction:
    """Reduced quotient num/den of polynomials over Q with monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        num = Poly._lift(num) if not isinstance(num, Poly) else num
        den = Poly.const(1) if den is None else (den if isinstance(den, Poly) else Poly._lift(den))
        if num is None or den is None:
            raise TypeError("rational function needs polynomial parts")
        if not den:
            raise ZeroDivisionError("rational function with zero denominator")
        # clear negative exponents
        shift = -min(num.low if num else 0, den.low, 0)
        if shift:
            num, den = num.shift(shift), den.shift(shift)
        if not num:
            self.num, self.den = Poly(), Poly.const(1)
            return
        g = num.gcd(den)
        if g.degree > 0:
            num, den = num // g, den // g
        lc = den.leading
        if lc != 1:
            inv = Fraction(1) / lc
            num, den = num * inv, den * inv
        self.num, self.den = num, den

    @staticmethod
    def _lift(other):
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, (Poly, int, Fraction)):
            return RationalFunction(other)
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return RationalFunction(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den)

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return RationalFunction(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        if not o.num:
            raise ZeroDivisionError("division by the zero rational function")
        return RationalFunction(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        return self._lift(other) / self

    def __pow__(self, n: int):
        if n < 0:
            return RationalFunction(self.den ** (-n), self.num ** (-n))
        return RationalFunction(self.num ** n, self.den ** n)

    def __eq__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        return hash((self.num, self.den))

    def is_zero(self) -> bool:
        return not self.num

    def __call__(self, x):
        d = self.den(x)
        if d == 0:
            raise ZeroDivisionError(f"pole of rational function at {x}")
        return self.num(x) / d

    def mobius_substitute(self, a, b, c, d) -> "RationalFunction":
        """f((a t + b)/(c t + d)) as a rational function of t."""
        lin_num = Poly.linear(a, b)
        lin_den = Poly.linear(c, d)

        def homog(p: Poly):
            n = p.degree if p else 0
            acc = Poly()
            for e, v in p.items():
                acc = acc + lin_num ** e * lin_den ** (n - e) * v
            return acc, n

        pn, nn = homog(self.num)
        pd, nd = homog(self.den)
        k = nd - nn
        if k >= 0:
            return RationalFunction(pn * lin_den ** k, pd)
        return RationalFunction(pn, pd * lin_den ** (-k))

    def __repr__(self):
        return f"RationalFunction({self.num!r}, {self.den!r})"

    def to_string(self, var: str = "t") -> str:
        if self.den == Poly.const(1):
            return self.num.to_string(var)
        return f"({self.num.to_string(var)})/({self.den.to_string(var)})"

    __str__ = to_string


# ---------------------------------------------------------------------------
# Truncated power series with coefficients in Q[t]

class TruncatedSeries:
    """Power series c_0 + c_1 z + ... + c_N z^N, each c_i a Poly in t."""

    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs, order: int):
        cs = [c if isinstance(c, Poly) else Poly.const(c) for c in list(coeffs)[: order + 1]]
        cs += [Poly()] * (order + 1 - len(cs))
        self.coeffs = tuple(cs)
        self.order = order

    @classmethod
    def sinc(cls, scale, order: int) -> "TruncatedSeries":
        """sin(scale*z)/(scale*z) as a series in z."""
        scale = Poly._lift(scale)
        s2 = scale * scale
        cs = [Poly()] * (order + 1)
        p = Poly.const(1)
        for j in range(order // 2 + 1):
            cs[2 * j] = p * Fraction((-1) ** j, factorial(2 * j + 1))
            p = p * s2
        return cls(cs, order)

    @classmethod
    def cos(cls, scale, order: int) -> "TruncatedSeries":
        scale = Poly._lift(scale)
        s2 = scale * scale
        cs = [Poly()] * (order + 1)
        p = Poly.const(1)
        for j in range(order // 2 + 1):
            cs[2 * j] = p * Fraction((-1) ** j, factorial(2 * j))
            p = p * s2
        return cls(cs, order)

    @classmethod
    def exp(cls, scale, order: int) -> "TruncatedSeries":
        scale = Poly._lift(scale)
        cs, p = [], Poly.const(1)
        for j in range(order + 1):
            cs.append(p * Fraction(1, factorial(j)))
            p = p * scale
        return cls(cs, order)

    def __getitem__(self, n: int) -> Poly:
        return self.coeffs[n]

    def _check(self, other):
        if not isinstance(other, TruncatedSeries):
            return TruncatedSeries([Poly._lift(other)], self.order)
        if other.order != self.order:
            raise ValueError("series truncated at different orders")
        return other

    def __add__(self, other):
        o = self._check(other)
        return TruncatedSeries([a + b for a, b in zip(self.coeffs, o.coeffs)], self.order)

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries([-a for a in self.coeffs], self.order)

    def __sub__(self, other):
        return self + (-self._check(other))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, Poly)):
            return TruncatedSeries([a * other for a in self.coeffs], self.order)
        o = self._check(other)
        n = self.order
        out = []
        for k in range(n + 1):
            acc = Poly()
            for i in range(k + 1):
                if self.coeffs[i] and o.coeffs[k - i]:
                    acc = acc + self.coeffs[i] * o.coeffs[k - i]
            out.append(acc)
        return TruncatedSeries(out, n)

    __rmul__ = __mul__

    def inverse(self) -> "TruncatedSeries":
        c0 = self.coeffs[0]
        if not c0 or c0.degree != 0 or c0.low != 0:
            raise ZeroDivisionError("series inverse needs a nonzero rational constant term")
        inv0 = Fraction(1) / c0.coeff(0)
        out = [Poly.const(inv0)]
        for k in range(1, self.order + 1):
            acc = Poly()
            for i in range(1, k + 1):
                if self.coeffs[i] and out[k - i]:
                    acc = acc + self.coeffs[i] * out[k - i]
            out.append(acc * (-inv0))
        return TruncatedSeries(out, self.order)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (Fraction(1) / other)
        return self * self._check(other).inverse()

    def substitute(self, t) -> "TruncatedSeries":
        """Specialise the auxiliary variable t to a rational value."""
        return TruncatedSeries([Poly.const(c(as_fraction(t))) for c in self.coeffs], self.order)

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.coeffs, self.order))


# ---------------------------------------------------------------------------
# Formal multiples of powers of pi

@dataclass(frozen=True)
class PiMultiple:
    """coefficient * sqrt(radicand) * pi**pi_power, kept formal."""

    coefficient: Fraction
    pi_power: int
    radicand: int = 1

    def __post_init__(self):
        object.__setattr__(self, "coefficient", as_fraction(self.coefficient))
        if self.pi_power < 0:
            raise ValueError("pi_power must be >= 0")
        if self.radicand < 1:
            raise ValueError("radicand must be positive")
        s, d = squarefree_decomposition(self.radicand)
        if s != 1:
            object.__setattr__(self, "coefficient", self.coefficient * s)
            object.__setattr__(self, "radicand", d)

    def __mul__(self, other):
        if isinstance(other, PiMultiple):
            return PiMultiple(self.coefficient * other.coefficient,
                              self.pi_power + other.pi_power,
                              self.radicand * other.radicand)
        if isinstance(other, (int, Fraction)):
            return PiMultiple(self.coefficient * other, self.pi_power, self.radicand)
        return NotImplemented

    __rmul__ = __mul__

    def __str__(self):
        s = str(self.coefficient)
        if self.radicand != 1:
            s += f"*sqrt({self.radicand})"
        if self.pi_power:
            s += "*pi" + (f"^{self.pi_power}" if self.pi_power != 1 else "")
        return s


# ---------------------------------------------------------------------------
# Bernoulli and Euler numbers

@lru_cache(maxsize=None)
def _bernoulli_table(n: int) -> tuple:
    # Akiyama–Tanigawa yields B_n with B_1 = +1/2; flipped below.
    out = []
    a = [Fraction(0)] * (n + 1)
    for m in range(n + 1):
        a[m] = Fraction(1, m + 1)
        for j in range(m, 0, -1):
            a[j - 1] = j * (a[j - 1] - a[j])
        out.append(a[0])
    if n >= 1:
        out[1] = -out[1]
    return tuple(out)


def bernoulli_number(n: int) -> Fraction:
    """B_n with the convention B_1 = -1/2."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if n >= 3 and n % 2:
        return Fraction(0)
    size = 64
    while size < n:
        size *= 2
    return _bernoulli_table(size)[n]


@lru_cache(maxsize=None)
def bernoulli_polynomial(n: int) -> Poly:
    """B_n(x) = sum_j C(n, j) B_j x^(n-j)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    return Poly({n - j: comb(n, j) * bernoulli_number(j) for j in range(n + 1)})


@lru_cache(maxsize=None)
def euler_number(n: int) -> int:
    """Euler (secant) numbers: sech x = sum E_n x^n / n!."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if n % 2:
        return 0
    if n == 0:
        return 1
    return -sum(comb(n, 2 * k) * euler_number(2 * k) for k in range(n // 2))


def zeta_even(m: int) -> PiMultiple:
    """zeta(2m) = (-1)^(m+1) B_2m (2 pi)^(2m) / (2 (2m)!)."""
    if m < 1:
        raise ValueError("m must be >= 1")
    c = Fraction((-1) ** (m + 1)) * bernoulli_number(2 * m) * 2 ** (2 * m) / (2 * factorial(2 * m))
    return PiMultiple(c, 2 * m)


def fraction_str(q: Fraction) -> str:
    """Serialise as 'p/q' (or 'p' for integers)."""
    q = as_fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


__all__ = [
    "Rational", "as_fraction", "squarefree_decomposition", "is_square", "gcd",
    "QuadExt", "Poly", "RationalFunction", "TruncatedSeries", "PiMultiple",
    "bernoulli_number", "bernoulli_polynomial", "euler_number", "zeta_even",
    "fraction_str",
]
