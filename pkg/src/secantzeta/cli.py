"""Command-line front end.  Output is JSON (JSON lines for scans).

Exit codes: 0 success, 1 verification failure or numeric non-convergence,
2 usage error (bad flags or inputs outside a command's domain).
"""
from __future__ import annotations

import argparse
import dataclasses
import json
import os
import sys
from contextlib import contextmanager
from fractions import Fraction

from .dirichlet import CharacterError, character_spec, generalized_bernoulli, parse_character
from .exact import bernoulli_number, euler_number, fraction_str
from .modgroup import GroupWord
from .numerics import ConvergenceError
from .roots import RootFindingError

DEFAULT_PRECISION = 128
DEFAULT_TOLERANCE = 2.0 ** -32


class UsageError(Exception):
    pass


@dataclasses.dataclass
class RunConfig:
    command: str
    m: int | None = None
    r: str | None = None
    kappa: int | None = None
    mu: int | None = None
    word: str | None = None
    family: str | None = None
    k: int | None = None
    k_max: int | None = None
    modulus_max: int | None = None
    chi: str = "1"
    psi: str = "1"
    suite: str = "all"
    what: str | None = None
    n: int | None = None
    precision: int = DEFAULT_PRECISION
    tolerance: float = DEFAULT_TOLERANCE
    workers: int = dataclasses.field(default_factory=lambda: os.cpu_count() or 1)
    out: str | None = None
    seed: int | None = None

    def to_json(self) -> str:
        return json.dumps(dataclasses.asdict(self), sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "RunConfig":
        return cls(**json.loads(text))

    @classmethod
    def from_args(cls, ns: argparse.Namespace) -> "RunConfig":
        names = {f.name for f in dataclasses.fields(cls)}
        kw = {k: v for k, v in vars(ns).items() if k in names and v is not None}
        return cls(**kw)


def _fr(x) -> str:
    return fraction_str(Fraction(x))


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="secantzeta", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, precision=True):
        if precision:
            sp.add_argument("--precision", type=int, default=DEFAULT_PRECISION, help="working precision in bits")
        sp.add_argument("--out", help="write output here instead of stdout")
        sp.add_argument("--seed", type=int, help="only used when generating test data")

    sp = sub.add_parser("eval-sqrt", help="exact psi_2m(sqrt r) / pi^2m")
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--r", required=True, help="positive rational A/B")
    common(sp, precision=False)

    sp = sub.add_parser("family", help="value at the fixed point of A^kappa B^mu")
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--kappa", type=int, required=True)
    sp.add_argument("--mu", type=int, required=True)
    common(sp, precision=False)

    sp = sub.add_parser("cocycle", help="rational cocycle of a word in A, B")
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--word", required=True, help='e.g. "A^1 B^-1 A^1"')
    common(sp, precision=False)

    for name in ("polynomial", "roots"):
        sp = sub.add_parser(name, help="generalized Ramanujan polynomial" + (" roots" if name == "roots" else ""))
        sp.add_argument("--family", choices=["R", "S", "classic"], required=True)
        sp.add_argument("--k", type=int, required=True)
        sp.add_argument("--chi", default="1")
        sp.add_argument("--psi", default="1")
        if name == "roots":
            sp.add_argument("--tolerance", type=float, default=DEFAULT_TOLERANCE, help="on-circle tolerance")
        common(sp, precision=name == "roots")

    sp = sub.add_parser("scan", help="root-location scan, JSON lines plus a summary line")
    sp.add_argument("--family", required=True,
                    choices=["R-both-nonprincipal", "R-chi-1", "R-1-psi", "S-diagonal"])
    sp.add_argument("--kmax", dest="k_max", type=int, required=True)
    sp.add_argument("--modmax", dest="modulus_max", type=int, required=True)
    sp.add_argument("--tolerance", type=float, default=DEFAULT_TOLERANCE)
    sp.add_argument("--workers", type=int, default=os.cpu_count() or 1)
    common(sp)

    sp = sub.add_parser("verify", help="numerical identity suites")
    sp.add_argument("--suite", default="all")
    common(sp)
    sp.set_defaults(precision=256)

    sp = sub.add_parser("constants", help="exact Bernoulli, Euler and generalized Bernoulli numbers")
    sp.add_argument("--what", choices=["bernoulli", "euler", "genbernoulli"], required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--chi", default="1")
    common(sp, precision=False)
    return p


# ---------------------------------------------------------------------------
# Commands

def cmd_eval_sqrt(cfg: RunConfig, out):
    from .secant import eval_sqrt
    v = eval_sqrt(cfg.m, Fraction(cfg.r))
    _dump(v.to_json(), out)
    return 0


def cmd_family(cfg: RunConfig, out):
    from .secant import fixed_point_tau, fixed_point_value, fixed_point_value_via_word
    tau = fixed_point_tau(cfg.kappa, cfg.mu)
    q = fixed_point_value(cfg.m, cfg.kappa, cfg.mu)
    q2 = fixed_point_value_via_word(cfg.m, cfg.kappa, cfg.mu)
    _dump({"m": cfg.m, "kappa": cfg.kappa, "mu": cfg.mu, "tau0": str(tau),
           "rational": _fr(q), "pretty": f"{_fr(q)}*pi^{2 * cfg.m}", "via_word_agrees": q == q2}, out)
    return 0 if q == q2 else 1


def cmd_cocycle(cfg: RunConfig, out):
    from .secant import cocycle_for_word
    w = GroupWord.parse(cfg.word)
    cd = cocycle_for_word(cfg.m, w)
    _dump({"m": cfg.m, "word": str(w), "matrix": cd.matrix.rows(), "phi": cd.phi.to_string("tau"),
           "convention": "psi(C tau) = (c tau + d)^(1-2m) psi(tau) + pi^(2m) phi(tau)"}, out)
    return 0


def _build_polynomial(cfg: RunConfig):
    from .period import R_gen, S_gen, ramanujan_classic
    if cfg.family == "classic":
        return ramanujan_classic(cfg.k), None
    chi, psi = parse_character(cfg.chi), parse_character(cfg.psi)
    if cfg.family == "R":
        return R_gen(cfg.k, chi, psi), psi.parity
    return S_gen(cfg.k, chi, psi), None


def cmd_polynomial(cfg: RunConfig, out):
    p, _ = _build_polynomial(cfg)
    coeffs = [{"exponent": e, "coefficient": _fr(c)} for e, c in sorted(p.items())]
    _dump({"family": cfg.family, "k": cfg.k, "chi": cfg.chi, "psi": cfg.psi,
           "lowest_exponent": p.low if p else None, "degree": p.degree if p else None,
           "coefficients": coeffs, "string": p.to_string()}, out)
    return 0


def cmd_roots(cfg: RunConfig, out):
    from .roots import unimodularity_report
    p, eps = _build_polynomial(cfg)
    if not p:
        raise UsageError("the polynomial is identically zero")
    k = cfg.k if eps is not None else None
    rep = unimodularity_report(p, cfg.tolerance, cfg.precision, polynomial_id=f"{cfg.family}:{cfg.k}:{cfg.chi}:{cfg.psi}",
                               k=k, epsilon=eps)
    _dump(rep.to_json(), out)
    return 0


def cmd_scan(cfg: RunConfig, out):
    from .scan import scan_conjecture
    _, summary = scan_conjecture(cfg.k_max, cfg.modulus_max, cfg.tolerance, cfg.family, cfg.precision,
                                 cfg.workers, sink=out, keep_records=False)
    out.write(json.dumps(summary.to_json(), sort_keys=True) + "\n")
    return 0


def cmd_verify(cfg: RunConfig, out):
    from .verify import IDENTITIES, run_suite
    names = None if cfg.suite == "all" else [s.strip() for s in cfg.suite.split(",")]
    for n in names or ():
        if n not in IDENTITIES:
            raise UsageError(f"unknown suite {n!r}; known: {', '.join(IDENTITIES)}")
    reports = run_suite(names, cfg.precision)
    ok = all(r.passed for r in reports)
    _dump({"precision": cfg.precision, "passed": ok, "count": len(reports),
           "failures": sum(not r.passed for r in reports),
           "reports": [r.to_json() for r in reports]}, out)
    return 0 if ok else 1


def cmd_constants(cfg: RunConfig, out):
    if cfg.n < 0:
        raise UsageError("n must be >= 0")
    if cfg.what == "bernoulli":
        v = bernoulli_number(cfg.n)
    elif cfg.what == "euler":
        v = euler_number(cfg.n)
    else:
        chi = parse_character(cfg.chi)
        if not chi.is_real:
            raise UsageError("exact generalized Bernoulli numbers need a real character")
        v = generalized_bernoulli(cfg.n, chi)
    res = {"what": cfg.what, "n": cfg.n, "value": _fr(v)}
    if cfg.what == "genbernoulli":
        res["chi"] = character_spec(parse_character(cfg.chi))
    _dump(res, out)
    return 0


COMMANDS = {
    "eval-sqrt": cmd_eval_sqrt, "family": cmd_family, "cocycle": cmd_cocycle,
    "polynomial": cmd_polynomial, "roots": cmd_roots, "scan": cmd_scan,
    "verify": cmd_verify, "constants": cmd_constants,
}


def _dump(obj, out):
    out.write(json.dumps(obj, indent=2, sort_keys=True) + "\n")


@contextmanager
def _output(path):
    if path is None:
        yield sys.stdout
    else:
        with open(path, "w", encoding="utf-8") as fh:
            yield fh


def main(argv=None) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    cfg = RunConfig.from_args(ns)
    try:
        with _output(cfg.out) as out:
            return COMMANDS[cfg.command](cfg, out)
    except (UsageError, CharacterError, ValueError, ZeroDivisionError, KeyError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except (ConvergenceError, RootFindingError, ArithmeticError) as e:
        print(f"numeric failure: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
