from __future__ import annotations

import pytest

from relpbf.colorlie import Element, check_all
from relpbf.core import G00, G01, G10, G11
from relpbf.fock import FockSpace, OperatorMatrix
from relpbf.pbf import (
    MIXED_RELATIONS,
    Bilinear,
    ConsistencyError,
    Gen,
    bracket_bil_bil,
    bracket_bil_gen,
    bracket_gen_gen,
    build,
    check_factorization_independence,
    check_super_pattern,
    expected_dimension,
    parse_mixed_relations,
    super_subalgebra,
    trilinear_coverage,
)

Bp, Bm = Gen("B", 1, 1), Gen("B", 1, -1)
B2p, B2m = Gen("B", 2, 1), Gen("B", 2, -1)
Fp, Fm = Gen("F", 1, 1), Gen("F", 1, -1)


def E(**kw):
    return Element(kw)


def test_generator_brackets():
    assert bracket_gen_gen(Bp, B2m) == Element({"{B1+,B2-}": 1})
    assert bracket_gen_gen(Fp, Fp) == 0
    assert bracket_gen_gen(Fm, B2p) == Element({"{F1-,B2+}": 1})
    assert bracket_gen_gen(Fm, Fp) == Element({"[F1+,F1-]": -1})


def test_grades():
    assert Bp.grade == G10 and Fp.grade == G11
    assert Bilinear("BB", Bp, Bm).grade == G00
    assert Bilinear("FF", Fp, Fm).grade == G00
    assert Bilinear("FB", Fm, Bp).grade == G01


def test_bilinear_generator_brackets():
    # listed mixed relations
    assert bracket_bil_gen(Bilinear("FB", Fm, Bp), Bm) == Element({"F1-": -2})
    assert bracket_bil_gen(Bilinear("BB", Bp, B2p), Fm) == 0
    assert bracket_bil_gen(Bilinear("FB", Fp, Bm), Fm) == Element({"B1-": 2})
    # paraboson relation with xi=+, eta=-, eps=-
    assert bracket_bil_gen(Bilinear("BB", Bp, Bm), Bm) == Element({"B1-": -2})


def test_bilinear_bilinear_brackets():
    lhs = bracket_bil_bil(Bilinear("FB", Fm, Bp), Bilinear("FB", Fp, Bm))
    assert lhs == Element({"{B1+,B1-}": 2, "[F1+,F1-]": 2})
    assert bracket_bil_bil(Bilinear("BB", Bp, Bp), Bilinear("FF", Fp, Fm)) == 0
    p = build(2, 2)
    for b in p.bilinears:
        if b.grade == G00:
            assert bracket_bil_bil(b, b) == 0


def test_dimensions():
    assert build(1, 1).dimension == 12
    assert build(1, 0).dimension == 5
    assert build(2, 2).dimension == 40
    for m in range(4):
        for n in range(4):
            if m + n:
                assert build(m, n).dimension == expected_dimension(m, n)
    with pytest.raises(ValueError):
        build(0, 0)


def test_mixed_relation_table_is_complete():
    assert len(MIXED_RELATIONS) == 28
    assert trilinear_coverage() == []


def test_mixed_relation_parser_rejects_garbage():
    with pytest.raises(ValueError):
        parse_mixed_relations("[{F-m,B+k},B-l] = banana")


def test_super_subalgebra():
    p = build(1, 1)
    sub = super_subalgebra(p)
    assert sub.dimension == 8
    assert check_super_pattern(p).passed
    assert all(r.passed for r in check_all(sub))


def test_super_subalgebra_closure_failure_raises():
    p = build(1, 1)
    table = {k: dict(v) for k, v in p.exported.table.items()}
    table[("{B1+,B1-}", "{F1-,B1+}")] = {"B1+": 1}
    from relpbf.colorlie import ColorAlgebra
    from relpbf.pbf import PbfAlgebra

    bad = PbfAlgebra(1, 1, p.symbols, ColorAlgebra(p.exported.basis, p.exported.grades, table))
    with pytest.raises(ConsistencyError):
        super_subalgebra(bad)


@pytest.mark.parametrize("mn", [(m, n) for m in range(5) for n in range(5) if 1 <= m + n <= 4])
def test_axioms_and_factorization(mn):
    p = build(*mn)
    assert check_factorization_independence(p).passed
    assert all(r.passed for r in check_all(p.exported))


def _matrix_of(fs: FockSpace, p, e: Element) -> OperatorMatrix:
    acc = OperatorMatrix(fs.dimension)
    for z, c in e.terms.items():
        acc = acc + c * fs.matrix(p.symbols[z])
    return acc


def test_examples_against_fock_matrices():
    # oracle route: the derived bracket values as matrix identities
    p = build(1, 1)
    fs = FockSpace(1, 1, 6)
    safe = fs.safe_columns(4)
    x, y = fs.matrix(Bilinear("FB", Fm, Bp)), fs.matrix(Bilinear("FB", Fp, Bm))
    lhs = x @ y + y @ x
    rhs = _matrix_of(fs, p, Element({"{B1+,B1-}": 2, "[F1+,F1-]": 2}))
    assert (lhs - rhs).restricted_is_zero(safe)
    g = fs.matrix(Bm)
    b = fs.matrix(Bilinear("BB", Bp, Bm))
    assert (b @ g - g @ b - (-2) * g).restricted_is_zero(safe)
