from __future__ import annotations

import pytest

from relpbf.core import G01, G10, theta
from relpbf.hopf import Hopf, TensorElement, antipode, braided_multiply, check_hopf_axioms, check_primitive, coproduct, counit
from relpbf.pbf import build
from relpbf.uea import UeaElement, normalize

ALG = build(1, 1).exported
W = UeaElement.word


def T(left, right, c=1):
    return TensorElement({(tuple(left), tuple(right)): c})


def test_braided_product_examples():
    assert braided_multiply(ALG, T([], ["F1+"]), T(["B1+"], [])) == T(["B1+"], ["F1+"], -1)
    z_w = T(["B1-"], ["F1+"])
    assert braided_multiply(ALG, TensorElement.one(), z_w) == z_w
    assert braided_multiply(ALG, T(["B1+"], []), T(["B1-"], [])) == T(["B1+", "B1-"], [])


def test_coproduct_examples():
    assert coproduct(ALG, W("B1+")) == T([], ["B1+"]) + T(["B1+"], [])
    assert coproduct(ALG, UeaElement.one()) == TensorElement.one()


def test_primitivity_of_fb_bilinear():
    e = W("F1-", "B1+") + W("B1+", "F1-")
    d = coproduct(ALG, e)
    h = Hopf(ALG)
    expected = T([], ["{F1-,B1+}"]) + T(["{F1-,B1+}"], [])
    normalized = TensorElement(
        {
            (a, b): c * ca * cb
            for (w1, w2), c in d.terms.items()
            for a, ca in h.st.normal_word(w1).items()
            for b, cb in h.st.normal_word(w2).items()
        }
    )
    assert normalized == expected


def test_antipode_examples():
    assert antipode(ALG, W("B1+")) == -W("B1+")
    assert antipode(ALG, UeaElement.one()) == UeaElement.one()
    alg2 = build(0, 2).exported
    assert antipode(alg2, W("F1+", "F2+")) == normalize(alg2, W("F2+", "F1+"))


def test_counit_examples():
    assert counit(ALG, UeaElement.one()) == 1
    assert counit(ALG, W("B1+")) == 0
    assert counit(ALG, 3 * UeaElement.one() + W("B1+", "B1-")) == 3


def test_hopf_axioms_build11():
    records = check_hopf_axioms(ALG, 2)
    assert len(records) == 9
    for r in records:
        assert r.passed, (r.name, r.violations[:2])


def test_max_len_bounds():
    with pytest.raises(ValueError):
        check_hopf_axioms(ALG, 7)


def test_all_symbols_primitive():
    for mn in [(1, 1), (2, 1)]:
        assert check_primitive(build(*mn).exported).passed


@pytest.mark.parametrize("mn", [(1, 1), (2, 1), (1, 2), (3, 0), (0, 3)])
def test_coproduct_multiplicative(mn):
    alg = build(*mn).exported
    mult = check_hopf_axioms(alg, 0)[-1]
    assert mult.name.startswith("coproduct multiplicative")
    assert mult.passed


def test_corrupted_theta_detected():
    def bad(a, b):
        t = theta(a, b)
        return -t if {a, b} == {G10, G01} else t

    records = check_hopf_axioms(ALG.with_theta(bad), 1)
    relation = [r for r in records if "kills" in r.name]
    assert any(not r.passed for r in relation)
    assert all(v.residual != "0" for r in relation for v in r.violations)
