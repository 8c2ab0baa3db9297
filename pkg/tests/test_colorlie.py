from __future__ import annotations

import random

import pytest

from relpbf.colorlie import (
    ColorAlgebra,
    Element,
    check_all,
    check_antisymmetry,
    check_grading,
    check_jacobi,
    check_theta,
)
from relpbf.core import G00, G01, G10, G11, Coefficient, theta
from relpbf.pbf import build, super_subalgebra


def _corrupt(alg: ColorAlgebra, x: str, y: str) -> ColorAlgebra:
    table = {k: dict(v) for k, v in alg.table.items()}
    table[(x, y)] = {z: -c for z, c in table[(x, y)].items()}
    return ColorAlgebra(alg.basis, alg.grades, table, alg.theta)


def test_bracket_of_self():
    p = build(1, 1)
    alg = p.exported
    # theta = -1 on B1+: the bracket is an anticommutator and need not vanish
    assert alg.bracket("B1+", "B1+") == Element({"{B1+,B1+}": 1})
    # theta = +1 on F1+: commutator of equal elements
    assert alg.bracket("F1+", "F1+") == 0
    assert alg.bracket(Element(), "B1+") == 0


def test_bracket_unknown_symbol():
    with pytest.raises(KeyError):
        build(1, 0).exported.bracket("B1+", "Q")


def test_table_with_unknown_symbol_rejected():
    with pytest.raises(KeyError):
        ColorAlgebra(["x"], {"x": G00}, {("x", "y"): {"x": 1}})


@pytest.mark.parametrize("mn", [(1, 0), (0, 1), (1, 1), (2, 1), (1, 2), (2, 2)])
def test_pbf_passes_axioms(mn):
    alg = build(*mn).exported
    for r in check_all(alg):
        assert r.passed, (r.name, r.violations[:3])


def test_triple_counts():
    assert check_jacobi(build(1, 1).exported).checked == 12**3


def test_abelian_and_empty():
    single = ColorAlgebra(["x"], {"x": G10}, {})
    assert all(r.passed for r in check_all(single))
    empty = ColorAlgebra([], {}, {})
    assert check_grading(empty).passed and check_jacobi(empty).passed


def test_flipped_sign_reports_exactly_that_pair():
    alg = build(1, 1).exported
    bad = _corrupt(alg, "B1+", "B1-")
    res = check_antisymmetry(bad)
    assert {v.where for v in res.violations} == {("B1+", "B1-"), ("B1-", "B1+")}
    assert all(v.residual != "0" for v in res.violations)


def test_flipped_sign_breaks_jacobi():
    alg = build(1, 1).exported
    bad = _corrupt(alg, "{B1+,B1-}", "B1+")
    assert not check_jacobi(bad).passed


def test_misgraded_entry_reported():
    alg = ColorAlgebra(["b", "f"], {"b": G10, "f": G11}, {("b", "b"): {"f": 1}})
    res = check_grading(alg)
    assert [v.where for v in res.violations] == [("b", "b", "f")]


def test_theta_axioms_and_corrupted_theta():
    assert check_theta().passed

    def bad(a, b):
        t = theta(a, b)
        return -t if (a, b) == (G10, G01) else t

    assert not check_theta(bad).passed


def test_super_restriction_passes_axioms():
    for mn in [(1, 1), (2, 1), (1, 2)]:
        sub = super_subalgebra(build(*mn))
        assert all(r.passed for r in check_all(sub))
        assert set(sub.grades.values()) <= {G00, G01}


def test_checks_independent_of_basis_order():
    alg = build(1, 1).exported
    order = list(alg.basis)
    random.Random(7).shuffle(order)
    shuffled = ColorAlgebra(order, alg.grades, alg.table)
    for a, b in zip(check_all(alg), check_all(shuffled)):
        assert (a.passed, a.checked) == (b.passed, b.checked)


def test_json_roundtrip():
    alg = build(1, 1).exported
    back = ColorAlgebra.from_json(alg.to_json())
    assert back.basis == alg.basis and back.table == alg.table


def test_element_arithmetic():
    x = Element({"a": 1, "b": Coefficient(0, 1)})
    assert x - x == 0
    assert 2 * x == x + x
    assert Element({"a": 0}) == 0
