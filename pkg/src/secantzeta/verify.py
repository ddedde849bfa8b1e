"""Numerical verification of the exact identities.

Each identity is a function ``params, precision -> (lhs, rhs)``.
The two sides are always computed by different routes (for instance a
q-series on one side and an exact rational cocycle on the other), so a small
residual is evidence for both.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial

import mpmath

from .dirichlet import (DirichletCharacter, gauss_sum, l_value_exact, parse_character,
                        principal_character)
from .exact import bernoulli_number, euler_number, zeta_even
from .modgroup import GroupWord, mobius_apply
from .numerics import (GUARD_BITS, eichler_numeric, eval_exact, hurwitz_zeta, l_numeric,
                       psi_hat_numeric, psi_numeric, to_mp, xi_numeric)
from .period import R_gen, S_gen, rho_hat
from .roots import polynomial_roots
from .secant import (cocycle_for_word, eval_sqrt, generator_cocycle_B, h_function,
                     symmetric_rhs_series)


def default_threshold(precision: int, wrong_parity: bool = False):
    """2^-(precision-56); 2^-(precision/2-28) when a wrong-parity L-value is involved."""
    bits = precision // 2 - 28 if wrong_parity else precision - 56
    return mpmath.mpf(2) ** (-bits)


@dataclass
class ResidualReport:
    identity: str
    params: dict
    precision: int
    lhs: object
    rhs: object
    residual: object
    threshold: object
    passed: bool
    note: str = ""

    def to_json(self, digits: int = 30) -> dict:
        return {
            "identity": self.identity,
            "params": self.params,
            "precision": self.precision,
            "lhs": mpmath.nstr(self.lhs, digits),
            "rhs": mpmath.nstr(self.rhs, digits),
            "residual": mpmath.nstr(self.residual, 6),
            "residual_log2": None if self.residual == 0 else float(mpmath.log(self.residual, 2)),
            "threshold": mpmath.nstr(self.threshold, 6),
            "passed": self.passed,
            "note": self.note,
        }


@dataclass(frozen=True)
class Identity:
    name: str
    evaluate: object
    description: str
    cases: tuple = field(default=())
    wrong_parity: bool = False
    relative: bool = False


def _chi(spec) -> DirichletCharacter:
    return spec if isinstance(spec, DirichletCharacter) else parse_character(str(spec))


def _f(x: Fraction):
    return mpmath.mpf(x.numerator) / x.denominator


# ---------------------------------------------------------------------------
# Secant series transformations

def _functional_equation(p, prec):
    """(2tau+1)^(2m-1) psi(tau/(2tau+1)) - psi(tau) = pi^(2m) (2tau+1)^(2m-1) Phi_B(tau).

    With ``word`` given, the general cocycle: psi(C tau) - j^(1-2m) psi(tau) = pi^(2m) Phi_C(tau).
    """
    m = int(p["m"])
    tau = to_mp(p["tau"])
    if "word" in p:
        w = GroupWord.parse(p["word"])
        cd = cocycle_for_word(m, w)
        M = cd.matrix
        j = M.c * tau + M.d
        lhs = psi_numeric(2 * m, mobius_apply(M, tau), prec) - j ** (1 - 2 * m) * psi_numeric(2 * m, tau, prec)
        rhs = mpmath.pi ** (2 * m) * eval_exact(cd.phi, tau)
        return lhs, rhs
    j = 2 * tau + 1
    lhs = j ** (2 * m - 1) * psi_numeric(2 * m, tau / j, prec) - psi_numeric(2 * m, tau, prec)
    rhs = mpmath.pi ** (2 * m) * j ** (2 * m - 1) * eval_exact(generator_cocycle_B(m), tau)
    return lhs, rhs


def _functional_equation_sym(p, prec):
    m = int(p["m"])
    tau = to_mp(p["tau"])
    lhs = ((1 + tau) ** (2 * m - 1) * psi_numeric(2 * m, tau / (1 + tau), prec)
           - (1 - tau) ** (2 * m - 1) * psi_numeric(2 * m, tau / (1 - tau), prec))
    rhs = mpmath.pi ** (2 * m) * eval_exact(symmetric_rhs_series(m), tau)
    return lhs, rhs


def _ramanujan_level1(p, prec):
    """alpha^-m {zeta(2m+1)/2 + sum n^(-2m-1)/(e^(2 alpha n)-1)} = (-beta)^-m {...beta...} - poly."""
    m = int(p["m"])
    if m == 0:
        raise ValueError("m must be nonzero")
    alpha = to_mp(p["alpha"])
    beta = mpmath.pi ** 2 / alpha
    z = _zeta_any(2 * m + 1, prec)

    def side(x):
        r = mpmath.exp(-2 * x)
        N = _geometric_terms(r, prec, abs(2 * m + 1))
        return z / 2 + mpmath.fsum(mpmath.mpf(n) ** (-2 * m - 1) / mpmath.expm1(2 * x * n) for n in range(1, N + 1))

    poly = mpmath.mpf(0)
    for n in range(0, m + 2):
        c = bernoulli_number(2 * n) * bernoulli_number(2 * m - 2 * n + 2) / (
            factorial(2 * n) * factorial(2 * m - 2 * n + 2)) if 2 * m - 2 * n + 2 >= 0 else Fraction(0)
        poly += (-1) ** n * _f(c) * alpha ** (m - n + 1) * beta ** n
    poly *= mpmath.mpf(2) ** (2 * m)
    lhs = alpha ** (-m) * side(alpha)
    rhs = (-beta) ** (-m) * side(beta) - poly
    return lhs, rhs


def _zeta_any(s: int, prec):
    """zeta at an integer s != 1: Euler-Maclaurin for s > 1, -B_(1-s)/(1-s) for s <= 0."""
    if s > 1:
        return l_numeric(s, principal_character(1), prec + GUARD_BITS)
    n = 1 - s
    return -_f(bernoulli_number(n)) / n if n != 1 else mpmath.mpf(-1) / 2


def _geometric_terms(r, prec, poly_degree=0):
    n = int(((prec + 8) * mpmath.log(2)) / -mpmath.log(r)) + 2
    # polynomial growth n^d in the terms: add a margin
    return n + int(poly_degree * mpmath.log(n + 2, 2) / -mpmath.log(r, 2)) + 4


def _ramanujan_level4(p, prec):
    """The sech/L(2m, chi_-4) identity; with ``tau`` instead of ``alpha`` its
    S-transformation form tau^(2m-1) psi(-1/tau) = psi_hat(tau) - (pi i)^(2m) h(tau)."""
    m = int(p["m"])
    if "tau" in p:
        tau = to_mp(p["tau"])
        lhs = tau ** (2 * m - 1) * psi_numeric(2 * m, -1 / tau, prec)
        rhs = psi_hat_numeric(m, tau, prec) - (-1) ** m * mpmath.pi ** (2 * m) * eval_exact(h_function(m), tau)
        return lhs, rhs
    alpha = to_mp(p["alpha"])
    beta = mpmath.pi ** 2 / alpha
    chi = _CHI4
    Lv = l_numeric(2 * m, chi, prec + GUARD_BITS)
    Na = _geometric_terms(mpmath.exp(-alpha), prec, 2 * m)
    Nb = _geometric_terms(mpmath.exp(-beta), prec, 2 * m)
    s1 = mpmath.fsum(chi(n) / (mpmath.mpf(n) ** (2 * m) * mpmath.expm1(alpha * n))
                     for n in range(1, Na + 1) if n % 2)
    lhs = alpha ** (-m + mpmath.mpf(1) / 2) * (Lv / 2 + s1)
    s2 = mpmath.fsum(mpmath.sech(beta * n) / mpmath.mpf(n) ** (2 * m) for n in range(1, Nb + 1))
    rhs = (-1) ** m * beta ** (-m + mpmath.mpf(1) / 2) / mpmath.mpf(2) ** (2 * m + 1) * s2
    acc = mpmath.mpf(0)
    for n in range(0, m + 1):
        c = euler_number(2 * n) * bernoulli_number(2 * m - 2 * n) / (factorial(2 * n) * factorial(2 * m - 2 * n))
        acc += (-1) ** n / mpmath.mpf(4) ** n * _f(c) * alpha ** (m - n) * beta ** (n + mpmath.mpf(1) / 2)
    return lhs, rhs + acc / 4


def _lemma_phiD(p, prec):
    """D^(2m) psi(tau/2) from the q-expansion against the weight 2m+1 lattice sum:
    (2m)!/pi sum' chi_-4(j)/(k tau + j)^(2m+1) - (-1)^m E_2m pi^2m / 2^(2m+1)."""
    m = int(p["m"])
    tau = to_mp(p["tau"])
    s = 2 * m + 1
    # left side: D = d/dtau applied termwise to 2 sum c_N e^(pi i N tau/2)/N^(2m)
    Q = mpmath.expjpi(tau / 2)
    N = _geometric_terms(abs(Q), prec, 2 * m + 2)
    from .numerics import _chi_m4, _twisted_divisor_sums
    c = _twisted_divisor_sums(N, 2 * m, _chi_m4)
    lhs = 2 * (-1) ** m * (mpmath.pi / 2) ** (2 * m) * mpmath.fsum(
        mpmath.mpf(c[n]) * Q ** n for n in range(1, N + 1) if c[n])
    # right side: k = 0 row plus rows k >= 1 by bilateral Hurwitz sums
    total = 2 * l_numeric(s, _CHI4, prec + GUARD_BITS)
    K = _geometric_terms(mpmath.exp(-mpmath.pi * mpmath.im(tau) / 2), prec, 0)
    for k in range(1, K + 1):
        total += 2 * _chi4_lattice_row(k * tau, s, prec)
    rhs = factorial(2 * m) / mpmath.pi * total - (-1) ** m * _f(euler_number(2 * m)) * mpmath.pi ** (2 * m) / mpmath.mpf(2) ** (2 * m + 1)
    return lhs, rhs


def _chi4_lattice_row(z, s: int, prec):
    """sum_{j in Z} chi_-4(j) / (z + j)^s via Hurwitz zeta in both directions."""
    acc = mpmath.mpc(0)
    for a, sign in ((1, 1), (3, -1)):
        w = (z + a) / 4
        acc += sign * _bilateral(w, s, prec)
    return acc / mpmath.mpf(4) ** s


def _bilateral(w, s: int, prec):
    """sum_{n in Z} (w + n)^-s for non-real w."""
    w = w - mpmath.floor(mpmath.re(w))  # 0 <= Re(w) < 1
    return w ** (-s) + hurwitz_zeta(s, w + 1, prec + 8) + (-1) ** s * hurwitz_zeta(s, 1 - w, prec + 8)


# ---------------------------------------------------------------------------
# L-values

def _lvalue_via_root(p, prec):
    """L(k-1, chi) as two Lambert series at a root alpha of R_k(X; conj chi, 1)."""
    k = int(p["k"])
    chi = _chi(p["chi"])
    if chi.parity != (-1) ** k:
        raise ValueError("needs chi(-1) = (-1)^k")
    L = chi.modulus
    poly = R_gen(k, chi.conjugate(), principal_character(1))
    rs = polynomial_roots(poly, prec + GUARD_BITS)
    tol = mpmath.mpf(2) ** (-(prec // 4))
    cands = [z for z in rs.roots if mpmath.im(z) > tol and abs(z ** (k - 2) - 1) > tol]
    if not cands:
        raise ValueError(f"R_{k}(X; {chi.name}, 1) has no usable root")
    alpha = max(cands, key=lambda z: mpmath.im(z))
    ak = alpha ** (k - 2)
    rate = mpmath.exp(-2 * mpmath.pi * min(mpmath.im(alpha), mpmath.im(alpha) / abs(alpha) ** 2) / L)
    N = _geometric_terms(rate, prec, 0)
    acc = mpmath.mpc(0)
    for n in range(1, N + 1):
        v = chi.numeric_value(n)
        if v == 0:
            continue
        t1 = 1 / (1 - mpmath.exp(2j * mpmath.pi * n * (1 - alpha) / L))
        t2 = ak / (1 - mpmath.exp(2j * mpmath.pi * n * (1 / alpha - 1) / L))
        acc += v / mpmath.mpf(n) ** (k - 1) * (t1 - t2)
    lhs = 2 / (1 - ak) * acc
    rhs = l_numeric(k - 1, chi, prec + GUARD_BITS)
    return lhs, rhs


def _katayama(p, prec):
    """1/2 L(k-1, chi) = F1(tau) - (-tau)^(k-2)/G(conj chi) F2(-1/tau)
    + (1/(pi i)) sum_j L(k-2j, chi) zeta(2j) tau^(2j-1)."""
    k = int(p["k"])
    chi = _chi(p["chi"])
    tau = to_mp(p["tau"])
    if chi.parity != (-1) ** k or chi.is_principal or not chi.is_primitive:
        raise ValueError("needs primitive nonprincipal chi with chi(-1) = (-1)^k")
    L = chi.modulus
    lhs = l_numeric(k - 1, chi, prec + GUARD_BITS) / 2

    q = mpmath.exp(2j * mpmath.pi * tau)
    N = _geometric_terms(abs(q), prec, 0)
    F1 = mpmath.fsum(chi.numeric_value(n) / mpmath.mpf(n) ** (k - 1) * q ** n / (q ** n - 1)
                     for n in range(1, N + 1) if chi.exponent(n) is not None)
    u = -1 / tau
    q2 = mpmath.exp(2j * mpmath.pi * u / L)
    N2 = _geometric_terms(abs(q2), prec, 0)
    cb = chi.conjugate()
    F2 = mpmath.mpc(0)
    for a in range(1, L + 1):
        if cb.exponent(a) is None:
            continue
        F2 += cb.numeric_value(a) * mpmath.fsum(
            q2 ** (a * n) / (mpmath.mpf(n) ** (k - 1) * (q2 ** (L * n) - 1)) for n in range(1, N2 + 1))
    G = gauss_sum(cb, prec + GUARD_BITS).numeric
    poly = mpmath.mpc(0)
    for j in range(0, k // 2 + 1):
        lv = l_value_exact(k - 2 * j, chi).numeric(prec + GUARD_BITS)
        z = _f(zeta_even(j).coefficient) * mpmath.pi ** (2 * j) if j else mpmath.mpf(-1) / 2
        poly += lv * z * tau ** (2 * j - 1)
    rhs = F1 - (-tau) ** (k - 2) / G * F2 + poly / (mpmath.pi * 1j)
    return lhs, rhs


# ---------------------------------------------------------------------------
# Exact values at quadratic irrationals

def _exact_sqrt(p, prec):
    """Closed form q pi^(2m) against a heuristic partial sum on the real line."""
    m = int(p["m"])
    r = Fraction(str(p["r"]))
    terms = int(p.get("terms", 10 ** 6))
    v = eval_sqrt(m, r)
    lhs = psi_numeric(2 * m, mpmath.sqrt(_f(r)), 53, mode="direct", terms=terms)
    rhs = _f(v.value) * mpmath.pi ** (2 * m)
    return lhs, rhs


# ---------------------------------------------------------------------------
# Period polynomials

def _rho_hat_eichler(p, prec):
    """E~(X; chi, psi) - psi(-1) X^(k-2) E~(-1/X; psi, chi) = rho_hat(X)."""
    k = int(p["k"])
    chi, psi = _chi(p["chi"]), _chi(p["psi"])
    tau = to_mp(p["tau"])
    lhs = eichler_numeric(k, chi, psi, tau, prec) - psi.parity * tau ** (k - 2) * eichler_numeric(k, psi, chi, -1 / tau, prec)
    rhs = rho_hat(k, chi, psi)(tau, prec)
    return lhs, rhs


def _period_slash(p, prec):
    """E~(X; chi, psi) |_(2-k) (1 - R^L) = -chi(-1) G(chi) G(psi) (2 pi i/L)^k/(k-1) (L/M) R_k(LX+1; conj chi, conj psi)."""
    k = int(p["k"])
    chi, psi = _chi(p["chi"]), _chi(p["psi"])
    if psi.is_trivial:
        raise ValueError("needs psi nontrivial")
    tau = to_mp(p["tau"])
    L, M = chi.modulus, psi.modulus
    j = L * tau + 1
    lhs = eichler_numeric(k, chi, psi, tau, prec) - j ** (k - 2) * eichler_numeric(k, chi, psi, tau / j, prec)
    pref = rho_hat(k, chi, psi).prefactor.numeric(prec) / mpmath.mpf(L) ** k * L / M
    rhs = pref * eval_exact(R_gen(k, chi.conjugate(), psi.conjugate()), j)
    return lhs, rhs


def _s_period(p, prec):
    """The S_k form of rho_hat: -chi(-1) G(chi) G(psi) (2 pi i/L)^k/(k-1) (L/M) S_k(X; conj chi, conj psi)."""
    k = int(p["k"])
    chi, psi = _chi(p["chi"]), _chi(p["psi"])
    if chi.is_trivial or psi.is_trivial:
        raise ValueError("needs nonprincipal characters")
    tau = to_mp(p["tau"])
    L, M = chi.modulus, psi.modulus
    lhs = eichler_numeric(k, chi, psi, tau, prec) - psi.parity * tau ** (k - 2) * eichler_numeric(k, psi, chi, -1 / tau, prec)
    pref = rho_hat(k, chi, psi).prefactor.numeric(prec) / mpmath.mpf(L) ** k * L / M
    rhs = pref * eval_exact(S_gen(k, chi.conjugate(), psi.conjugate()), tau)
    return lhs, rhs


def _secant_as_eichler(p, prec):
    """psi_2m(tau/2) = (2m/pi) E~_(2m+1)(tau; 1, chi_-4)."""
    m = int(p["m"])
    tau = to_mp(p["tau"])
    lhs = psi_numeric(2 * m, tau / 2, prec)
    rhs = 2 * m / mpmath.pi * eichler_numeric(2 * m + 1, principal_character(1), _CHI4, tau, prec)
    return lhs, rhs


def _lerch_cotangent(p, prec):
    """tau^(2m-2) xi_(2m-1)(-1/tau) - xi_(2m-1)(tau) = (-1)^m (2 pi)^(2m-1) sum B B tau^(2n-1), s = 2m-1."""
    s = int(p["s"])
    if s < 3 or s % 2 == 0:
        raise ValueError("s must be odd and >= 3")
    m = (s + 1) // 2
    tau = to_mp(p["tau"])
    lhs = tau ** (2 * m - 2) * xi_numeric(s, -1 / tau, prec) - xi_numeric(s, tau, prec)
    acc = mpmath.mpc(0)
    for n in range(m + 1):
        c = bernoulli_number(2 * n) * bernoulli_number(2 * m - 2 * n) / (factorial(2 * n) * factorial(2 * m - 2 * n))
        acc += _f(c) * tau ** (2 * n - 1)
    rhs = (-1) ** m * (2 * mpmath.pi) ** (2 * m - 1) * acc
    return lhs, rhs


def _make_chi4():
    from .dirichlet import kronecker_character
    return kronecker_character(-4)


_CHI4 = _make_chi4()

_T1 = "(1+3i)/7"
IDENTITIES = {
    i.name: i for i in [
        Identity("functional_equation", _functional_equation,
                 "(2t+1)^(2m-1) psi(t/(2t+1)) - psi(t) against the exact B-cocycle; with 'word', any word cocycle",
                 tuple([{"m": m, "tau": t} for m in (1, 2, 3) for t in (_T1, "i", "0.3+0.8i")]
                       + [{"m": 2, "tau": "0.25+1.1i", "word": "A^1 B^-1 A^1"},
                          {"m": 1, "tau": "0.1+0.9i", "word": "B^2 A^-1"}])),
        Identity("functional_equation_sym", _functional_equation_sym,
                 "(1+t)^(2m-1) psi(t/(1+t)) - (1-t)^(2m-1) psi(t/(1-t)) against the symmetric rational function",
                 tuple({"m": m, "tau": t} for m in (1, 2, 3) for t in ("(2+5i)/9", "1.5i"))),
        Identity("ramanujan_level1", _ramanujan_level1,
                 "the odd zeta value transformation with alpha beta = pi^2",
                 tuple({"m": m, "alpha": a} for m in (1, 2, 3, -1, -2) for a in ("pi", "2", "5"))),
        Identity("ramanujan_level4", _ramanujan_level4,
                 "the sech / L(2m, chi_-4) transformation, or its tau form for psi(-1/tau)",
                 tuple([{"m": m, "alpha": a} for m in (1, 2, 3) for a in ("pi", "2")]
                       + [{"m": m, "tau": "0.3+1.1i"} for m in (1, 2, 3)]), wrong_parity=True),
        Identity("lemma_phiD", _lemma_phiD,
                 "D^(2m) psi(tau/2) against the chi_-4 twisted lattice sum",
                 tuple({"m": m, "tau": t} for m in (1, 2) for t in ("2i", "0.5+1.5i")), wrong_parity=True),
        Identity("lvalue_via_root", _lvalue_via_root,
                 "L(k-1, chi) from Lambert series at a root of R_k(X; conj chi, 1)",
                 tuple({"k": k, "chi": c} for k, c in ((5, "k:-4"), (7, "k:-4"), (4, "k:5"), (4, "k:12"), (7, "k:-3"), (6, "k:8"))),
                 wrong_parity=True),
        Identity("katayama", _katayama,
                 "1/2 L(k-1, chi) as two Lambert series plus an explicit Laurent polynomial",
                 tuple({"k": k, "chi": c, "tau": t} for k, c in ((3, "k:-4"), (4, "k:5"), (5, "k:-3")) for t in ("i", "(1+2i)/3")),
                 wrong_parity=True),
        Identity("exact_sqrt", _exact_sqrt,
                 "closed form at sqrt(r) against a heuristic partial sum (loose, relative)",
                 ({"m": 1, "r": "2"}, {"m": 1, "r": "6"}), relative=True),
        Identity("rho_hat_eichler", _rho_hat_eichler,
                 "the period polynomial against numeric Eichler integrals",
                 tuple({"k": k, "chi": c, "psi": s, "tau": "0.3+1.2i"} for k, c, s in
                       ((3, "k:-4", "k:5"), (5, "k:-4", "k:5"), (4, "k:-3", "k:-4"), (5, "1", "k:-4"), (5, "k:-4", "1"), (4, "k:12", "1")))),
        Identity("period_slash", _period_slash,
                 "E~ |(1 - R^L) against the generalized Ramanujan polynomial at LX+1",
                 tuple({"k": k, "chi": c, "psi": s, "tau": "0.3+1.2i"} for k, c, s in
                       ((5, "k:-4", "k:5"), (3, "k:5", "k:-4"), (4, "k:-3", "k:-4"), (5, "1", "k:-4")))),
        Identity("s_period", _s_period,
                 "rho_hat in terms of S_k(X; conj chi, conj psi), including the factor L/M",
                 tuple({"k": k, "chi": c, "psi": s, "tau": "0.3+1.2i"} for k, c, s in
                       ((5, "k:-4", "k:5"), (3, "k:5", "k:-4"), (4, "k:-3", "k:-4")))),
        Identity("secant_as_eichler", _secant_as_eichler,
                 "psi_2m(tau/2) = (2m/pi) E~_(2m+1)(tau; 1, chi_-4)",
                 tuple({"m": m, "tau": "0.2+0.9i"} for m in (1, 2, 3))),
        Identity("lerch_cotangent", _lerch_cotangent,
                 "the cotangent series under tau -> -1/tau",
                 tuple({"s": s, "tau": t} for s in (3, 5, 7) for t in ("2i", "0.4+0.7i"))),
    ]
}

SUITES = tuple(IDENTITIES)


def verify_identity(name: str, params: dict, precision: int = 256, threshold=None) -> ResidualReport:
    """Evaluate both sides of an identity and compare.

    The residual is |lhs - rhs| / max(1, |rhs|) (relative for large values,
    absolute for small).  The default threshold is 2^-(precision-56), or
    2^-(precision/2-28) for identities that need a wrong-parity L-value;
    the heuristic real-line check uses 10^-5.
    """
    if name not in IDENTITIES:
        raise KeyError(f"unknown identity {name!r}; known: {', '.join(IDENTITIES)}")
    ident = IDENTITIES[name]
    with mpmath.workprec(precision + GUARD_BITS):
        lhs, rhs = ident.evaluate(params, precision)
        residual = abs(lhs - rhs) / max(mpmath.mpf(1), abs(rhs))
    if threshold is None:
        threshold = mpmath.mpf("1e-5") if ident.relative else default_threshold(precision, ident.wrong_parity)
    threshold = to_mp(threshold)
    note = "heuristic partial sum" if ident.relative else ""
    return ResidualReport(name, dict(params), precision, lhs, rhs, residual, threshold,
                          bool(residual < threshold), note)


def run_suite(names=None, precision: int = 256) -> list:
    out = []
    for name in names or SUITES:
        for case in IDENTITIES[name].cases:
            out.append(verify_identity(name, case, precision))
    return out


__all__ = ["ResidualReport", "Identity", "IDENTITIES", "SUITES", "verify_identity", "run_suite",
           "default_threshold"]
