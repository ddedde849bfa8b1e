"""Exact and numerical toolkit for the secant Dirichlet series
psi_s(tau) = sum sec(pi n tau)/n^s, its rational cocycles on Gamma(2),
generalized Ramanujan polynomials and their roots.
"""
from .dirichlet import (CharacterError, DirichletCharacter, characters_mod, gauss_sum,
                        generalized_bernoulli, kronecker_character, l_value_exact, parse_character,
                        principal_character)
from .exact import (PiMultiple, Poly, QuadExt, RationalFunction, TruncatedSeries, bernoulli_number,
                    euler_number)
from .modgroup import GroupWord, Mat2Z, pell_fundamental, stabilizer_in_gamma2, word_decompose
from .numerics import eichler_numeric, l_numeric, psi_numeric, xi_numeric
from .period import R_gen, S_gen, ramanujan_classic, rho_hat, self_inversive_check
from .roots import polynomial_roots, unimodularity_report
from .scan import scan_conjecture
from .secant import (cocycle_for_word, eval_sqrt, fixed_point_value, generator_cocycle_B,
                     trig_rhs_series)
from .verify import verify_identity

__version__ = "0.1.0"

__all__ = [
    "CharacterError", "DirichletCharacter", "characters_mod", "gauss_sum", "generalized_bernoulli",
    "kronecker_character", "l_value_exact", "parse_character", "principal_character",
    "PiMultiple", "Poly", "QuadExt", "RationalFunction", "TruncatedSeries", "bernoulli_number",
    "euler_number", "GroupWord", "Mat2Z", "pell_fundamental", "stabilizer_in_gamma2", "word_decompose",
    "eichler_numeric", "l_numeric", "psi_numeric", "xi_numeric", "R_gen", "S_gen",
    "ramanujan_classic", "rho_hat", "self_inversive_check", "polynomial_roots",
    "unimodularity_report", "scan_conjecture", "cocycle_for_word", "eval_sqrt", "fixed_point_value",
    "generator_cocycle_B", "trig_rhs_series", "verify_identity",
]
