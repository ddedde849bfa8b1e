import mpmath
import pytest

from secantzeta.exact import Poly
from secantzeta.roots import (NONREAL_OFF, ON, REAL_OFF, is_squarefree, polynomial_roots, squarefree_parts,
                              unimodularity_report)

X = Poly.x()


def test_cyclotomic_roots():
    rs = polynomial_roots(X ** 6 - 1, 128)
    assert len(rs.roots) == 6
    with mpmath.workprec(128):
        for z in rs.roots:
            assert abs(z ** 6 - 1) < mpmath.mpf(2) ** -110


def test_repeated_roots_keep_multiplicity():
    p = (X - 2) ** 3 * (X + 1)
    assert not is_squarefree(p)
    rs = polynomial_roots(p, 100)
    assert len(rs.roots) == 4
    assert sum(1 for z in rs.roots if abs(z - 2) < 1e-20) == 3
    assert sorted(m for _, m in squarefree_parts(p)) == [1, 3]


def test_laurent_shift_and_zero_roots():
    rs = polynomial_roots(Poly({-2: 1, 0: -1}), 64)
    assert rs.shift == -2 and rs.zero_roots == 0 and len(rs.roots) == 2
    rs = polynomial_roots(X ** 2 * (X - 3), 64)
    assert rs.zero_roots == 2 and len(rs.roots) == 1


def test_zero_polynomial_rejected():
    with pytest.raises(ValueError):
        polynomial_roots(Poly(), 64)


def test_report_classification():
    # 1, -1 on the circle; 2, 1/2 real off it; a nonreal quadruple from the quartic
    p = (X ** 2 - 1) * (X - 2) * (2 * X - 1) * (X ** 2 - X + 4) * (4 * X ** 2 - X + 1)
    rep = unimodularity_report(p, 2.0 ** -32, 128)
    c = rep.counts
    assert c[ON] == 2 and c[REAL_OFF] == 2 and c[NONREAL_OFF] == 4
    assert not rep.all_on_circle
    js = rep.to_json()
    assert js["classification_counts"] == c and len(js["roots"]) == 8


def test_quadruples_paired_when_self_inversive():
    q = (X ** 2 - X + 4) * (4 * X ** 2 - X + 1)
    rep = unimodularity_report(q, 2.0 ** -32, 128, k=6, epsilon=1)
    assert rep.self_inversive
    assert len(rep.quadruples) == 1 and len(rep.quadruples[0]) == 4


def test_high_degree_on_circle():
    p = sum((X ** i for i in range(41)), Poly())
    rep = unimodularity_report(p, 2.0 ** -32, 128)
    assert rep.all_on_circle and len(rep.roots) == 40
