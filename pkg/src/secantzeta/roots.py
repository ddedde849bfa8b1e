"""Root finding and unit-circle classification for exact (Laurent) polynomials.

Pipeline: strip powers of X, split off repeated factors exactly (deflation
at +-1, then Yun), then per squarefree factor run Aberth iteration in double
precision from golden-angle guesses on the circle of radius 1.05, polish with
Newton steps at the target precision (gmpy2) and certify
``|f(z)| < 2^(-prec/2) * sum |c_i| |z|^i``.
If certification fails the whole factor is redone with multiprecision Aberth
at doubled precision, up to a cap.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

import gmpy2
import mpmath
import numpy as np

from .exact import Poly

GOLDEN_ANGLE = math.pi * (3 - math.sqrt(5))
PRECISION_CAP = 4096
_PRIME = (1 << 61) - 1


class RootFindingError(ArithmeticError):
    pass


def initial_guesses(n: int, radius: float = 1.05) -> np.ndarray:
    k = np.arange(n)
    return radius * np.exp(1j * (GOLDEN_ANGLE * k + 0.5))


# ---------------------------------------------------------------------------
# squarefree splitting

def _mod_p_coeffs(p: Poly):
    cs = p.coefficients()  # ascending from p.low == 0
    den = 1
    for c in cs:
        den = den * c.denominator // math.gcd(den, c.denominator)
    ints = [int(c * den) % _PRIME for c in cs]
    return ints


def _gcd_degree_mod_p(a: list, b: list) -> int:
    def trim(v):
        while v and v[-1] == 0:
            v.pop()
        return v

    a, b = trim(list(a)), trim(list(b))
    while b:
        inv = pow(b[-1], -1, _PRIME)
        while len(a) >= len(b):
            f = a[-1] * inv % _PRIME
            off = len(a) - len(b)
            for i, v in enumerate(b):
                a[off + i] = (a[off + i] - f * v) % _PRIME
            trim(a)
            if not a:
                break
        a, b = b, a
    return len(a) - 1


def is_squarefree(p: Poly) -> bool:
    """Exact test; fast modular certificate first, rational gcd if inconclusive."""
    if p.degree <= 1:
        return True
    f = _mod_p_coeffs(p)
    if f[-1] % _PRIME:
        df = [(i * c) % _PRIME for i, c in enumerate(f)][1:]
        if _gcd_degree_mod_p(f, df) == 0:
            return True
    return p.gcd(p.derivative()).degree == 0


def _deflate(p: Poly, r: int):
    """Divide out (X - r) as often as possible; returns (quotient, multiplicity)."""
    mult = 0
    while p.degree > 0 and p(Fraction(r)) == 0:
        p = p // Poly.linear(1, -r)
        mult += 1
    return p, mult


def squarefree_parts(p: Poly) -> list:
    """[(factor, multiplicity)] for an ordinary polynomial with p(0) != 0.

    Roots at +-1 are common here (self-inversive families) and are split off
    by exact deflation before the squarefree test.
    """
    parts = []
    for r in (1, -1):
        p, mult = _deflate(p, r)
        if mult:
            parts.append((Poly.linear(1, -r), mult))
    if p.degree > 0:
        parts.extend([(p, 1)] if is_squarefree(p) else p.squarefree_factorization())
    return parts


# ---------------------------------------------------------------------------
# numerics

def _aberth_double(coeffs_desc: np.ndarray, max_iter: int = 600):
    n = len(coeffs_desc) - 1
    dc = np.polyder(coeffs_desc)
    z = initial_guesses(n)
    for _ in range(max_iter):
        pv = np.polyval(coeffs_desc, z)
        dv = np.polyval(dc, z)
        with np.errstate(divide="ignore", invalid="ignore"):
            ratio = pv / dv
            diff = z[:, None] - z[None, :]
            np.fill_diagonal(diff, np.inf)
            s = (1.0 / diff).sum(axis=1)
            w = ratio / (1 - ratio * s)
        w = np.where(np.isfinite(w), w, 0)
        z = z - w
        if np.all(np.abs(w) <= 4e-16 * np.maximum(1, np.abs(z))):
            return z, True
    return z, False


def _mp_coeffs(p: Poly):
    return [mpmath.mpf(c.numerator) / c.denominator for c in p.coefficients()]


def _horner(cs, z):
    """p(z), p'(z) for ascending coefficients."""
    v = mpmath.mpc(0)
    d = mpmath.mpc(0)
    for c in reversed(cs):
        d = d * z + v
        v = v * z + c
    return v, d


def _certified(cs, z, precision: int) -> bool:
    v, _ = _horner(cs, z)
    az = abs(z)
    scale = mpmath.fsum(abs(c) * az ** i for i, c in enumerate(cs))
    return abs(v) <= mpmath.mpf(2) ** (-precision // 2) * scale


def _distinct(zs, precision: int) -> bool:
    eps = mpmath.mpf(2) ** (-precision // 4)
    for i in range(len(zs)):
        for j in range(i):
            if abs(zs[i] - zs[j]) <= eps * max(1, abs(zs[i])):
                return False
    return True


def _aberth_mp(cs, z, precision: int, max_iter: int = 2000):
    n = len(z)
    tol = mpmath.mpf(2) ** (-precision + 8)
    for _ in range(max_iter):
        done = True
        new = list(z)
        for i in range(n):
            v, d = _horner(cs, z[i])
            if v == 0:
                continue
            ratio = v / d if d != 0 else mpmath.mpc(0)
            s = mpmath.fsum(1 / (z[i] - z[j]) for j in range(n) if j != i)
            w = ratio / (1 - ratio * s)
            new[i] = z[i] - w
            if abs(w) > tol * max(1, abs(new[i])):
                done = False
        z = new
        if done:
            return z, True
    return z, False


def _gmp_to_mp(z) -> mpmath.mpc:
    re_m, re_e = z.real.as_mantissa_exp()
    im_m, im_e = z.imag.as_mantissa_exp()
    return mpmath.mpc(mpmath.mpf((int(re_m), int(re_e))), mpmath.mpf((int(im_m), int(im_e))))


def _polish(p: Poly, z0: np.ndarray, precision: int):
    """Newton polish in gmpy2 plus residual certificate; None if it fails."""
    steps = max(1, math.ceil(math.log2(precision / 45))) + 1
    with gmpy2.context(gmpy2.get_context(), precision=precision + 32):
        cs = [gmpy2.mpfr(gmpy2.mpq(c.numerator, c.denominator)) for c in p.coefficients()]
        rev = cs[::-1]
        zs = [gmpy2.mpc(complex(v)) for v in z0]
        for _ in range(steps):
            out = []
            for z in zs:
                v = d = gmpy2.mpc(0)
                for c in rev:
                    d = d * z + v
                    v = v * z + c
                out.append(z - v / d if d != 0 else z)
            zs = out
        bound = gmpy2.mpfr(2) ** (-(precision // 2))
        for z in zs:
            v = gmpy2.mpc(0)
            a = abs(z)
            scale = gmpy2.mpfr(0)
            for c in rev:
                v = v * z + c
                scale = scale * a + abs(c)
            if abs(v) > bound * scale:
                return None
        approx = np.array([complex(z) for z in zs])
        with mpmath.workprec(precision + 32):
            result = [_gmp_to_mp(z) for z in zs]
    diff = np.abs(approx[:, None] - approx[None, :])
    np.fill_diagonal(diff, np.inf)
    if np.any(diff <= 2.0 ** (-precision / 4) * np.maximum(1, np.abs(approx))[:, None]):
        return None
    return result


def _roots_squarefree(p: Poly, precision: int) -> list:
    n = p.degree
    if n == 1:
        r = -p.coeff(0) / p.coeff(1)
        with mpmath.workprec(precision):
            return [mpmath.mpc(mpmath.mpf(r.numerator) / r.denominator)]
    cs_exact = p.coefficients()
    scale = max(abs(c) for c in cs_exact)
    desc = np.array([float(c / scale) for c in reversed(cs_exact)], dtype=complex)
    z0, ok = _aberth_double(desc)
    if ok:
        res = _polish(p, z0, precision)
        if res is not None:
            return res
    prec = precision
    while prec <= PRECISION_CAP:
        with mpmath.workprec(prec + 32):
            cs = _mp_coeffs(p)
            zs, conv = _aberth_mp(cs, [mpmath.mpc(complex(v)) for v in z0], prec)
            if conv and _distinct(zs, prec) and all(_certified(cs, z, prec) for z in zs):
                return zs
        prec *= 2
    raise RootFindingError(f"roots of degree-{n} polynomial not certified up to {PRECISION_CAP} bits")


@dataclass
class RootSet:
    roots: list          # mpmath.mpc, each repeated per multiplicity
    zero_roots: int      # multiplicity of X = 0 as a genuine root
    shift: int           # power of X cleared (p.low)
    precision: int


def polynomial_roots(p: Poly, precision: int = 128) -> RootSet:
    """All nonzero complex roots of p (with multiplicity) to ``precision`` bits.

    A Laurent factor X^low is cleared first; for low > 0 those are roots at 0
    and are reported in ``zero_roots``.  Output order is deterministic
    (sorted by argument, then modulus).
    """
    if not p:
        raise ValueError("the zero polynomial has no finite root set")
    low = p.low
    q = p.shift(-low)
    roots = []
    if q.degree > 0:
        for factor, mult in squarefree_parts(q):
            if factor.degree == 0:
                continue
            rs = _roots_squarefree(factor, precision)
            roots.extend(r for r in rs for _ in range(mult))
    with mpmath.workprec(precision):
        roots.sort(key=lambda z: (float(mpmath.arg(z)), float(abs(z))))
    return RootSet(roots, max(low, 0), low, precision)


# ---------------------------------------------------------------------------
# unit-circle report

ON = "on_circle"
REAL_OFF = "real_off_circle"
NONREAL_OFF = "nonreal_off_circle"


def default_tolerance(precision: int) -> float:
    return 2.0 ** (-precision / 4)


@dataclass
class RootReport:
    polynomial_id: str
    precision: int
    tolerance: float
    degree: int
    lowest_exponent: int
    roots: list
    classification: list
    deviations: list
    zero_roots: int = 0
    quadruples: list = field(default_factory=list)
    self_inversive: bool | None = None
    epsilon: int | None = None

    @property
    def max_circle_deviation(self) -> float:
        return max(self.deviations, default=0.0)

    @property
    def counts(self) -> dict:
        out = {ON: 0, REAL_OFF: 0, NONREAL_OFF: 0}
        for c in self.classification:
            out[c] += 1
        return out

    @property
    def all_on_circle(self) -> bool:
        return all(c == ON for c in self.classification)

    def to_json(self, digits: int | None = None) -> dict:
        digits = digits or max(15, int(self.precision * 0.30103))
        return {
            "id": self.polynomial_id,
            "degree": self.degree,
            "lowest_exponent": self.lowest_exponent,
            "precision_bits": self.precision,
            "tolerance": self.tolerance,
            "zero_roots": self.zero_roots,
            "roots": [
                {
                    "re": mpmath.nstr(z.real, digits, min_fixed=-mpmath.inf, max_fixed=mpmath.inf),
                    "im": mpmath.nstr(z.imag, digits, min_fixed=-mpmath.inf, max_fixed=mpmath.inf),
                    "display": f"{float(z.real):+.6f}{float(z.imag):+.6f}i",
                    "abs_dev": float(d),
                    "class": c,
                }
                for z, d, c in zip(self.roots, self.deviations, self.classification)
            ],
            "classification_counts": self.counts,
            "max_circle_deviation": self.max_circle_deviation,
            "quadruples": self.quadruples,
            "self_inversive": self.self_inversive,
            "epsilon": self.epsilon,
        }


def _pair_quadruples(roots, idx, tol):
    """Group off-circle nonreal roots as {z, conj z, 1/z, 1/conj z}."""
    left = list(idx)
    quads = []
    while left:
        i = left.pop(0)
        z = roots[i]
        targets = [mpmath.conj(z), 1 / z, 1 / mpmath.conj(z)]
        group = [i]
        for t in targets:
            best = min(left, key=lambda j: abs(roots[j] - t), default=None)
            if best is not None and abs(roots[best] - t) < tol * max(1, abs(t)):
                group.append(best)
                left.remove(best)
        quads.append(sorted(group))
    return quads


def unimodularity_report(p: Poly, tolerance: float | None = None, precision: int = 128,
                         polynomial_id: str = "", k: int | None = None, epsilon: int | None = None,
                         rootset: RootSet | None = None) -> RootReport:
    tol = default_tolerance(precision) if tolerance is None else tolerance
    rs = rootset or polynomial_roots(p, precision)
    real_tol = mpmath.mpf(2) ** (-precision // 4)
    cls, devs = [], []
    with mpmath.workprec(precision):
        for z in rs.roots:
            dev = abs(abs(z) - 1)
            devs.append(float(dev))
            if dev < tol:
                cls.append(ON)
            elif abs(z.imag) <= real_tol * max(1, abs(z)):
                cls.append(REAL_OFF)
            else:
                cls.append(NONREAL_OFF)
        si = None
        if k is not None and epsilon is not None:
            from .period import self_inversive_check
            si = self_inversive_check(p, k, epsilon)
        off = [i for i, c in enumerate(cls) if c == NONREAL_OFF]
        quads = _pair_quadruples(rs.roots, off, mpmath.mpf(2) ** (-precision // 4)) if si else []
    return RootReport(polynomial_id, precision, tol, p.degree, p.low, rs.roots, cls, devs,
                      rs.zero_roots, quads, si, epsilon)
