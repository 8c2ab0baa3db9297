from __future__ import annotations

from math import comb

import pytest

from relpbf.colorlie import ColorAlgebra
from relpbf.fock import FockSpace, OperatorMatrix, check_bracket_table, check_relations, realize_generators, vacuum_expectation
from relpbf.pbf import Bilinear, Gen, PbfAlgebra, build

Bp, Bm, Fp, Fm = Gen("B", 1, 1), Gen("B", 1, -1), Gen("F", 1, 1), Gen("F", 1, -1)


@pytest.mark.parametrize("m,n,N", [(1, 1, 5), (2, 1, 4), (1, 2, 3), (3, 0, 3)])
def test_dimension(m, n, N):
    assert FockSpace(m, n, N).dimension == comb(N + m, m) * 2**n


def test_cutoff_too_small():
    with pytest.raises(ValueError):
        FockSpace(1, 1, 2)


def test_ladder_basics():
    fs = FockSpace(1, 1, 5)
    assert vacuum_expectation(fs, Bilinear("BB", Bp, Bm)) == 1
    f = fs.generator(Fp)
    assert (f @ f).is_zero()
    assert set(realize_generators(fs)) == {Bp, Bm, Fp, Fm}
    # canonical commutator [B-, B+] = 1 away from the truncation edge
    b, bd = fs.generator(Bm), fs.generator(Bp)
    ident = OperatorMatrix(fs.dimension, {j: {j: 1} for j in range(fs.dimension)})
    assert (b @ bd - bd @ b - ident).restricted_is_zero(fs.safe_columns(1))
    assert not (b @ bd - bd @ b - ident).restricted_is_zero(range(fs.dimension))


@pytest.mark.parametrize("mn", [(1, 1), (2, 1), (1, 2)])
def test_relations_and_table(mn):
    fs = FockSpace(*mn, 5)
    rel = check_relations(fs)
    assert rel.passed and rel.checked > 0
    assert check_bracket_table(fs, build(*mn)).passed


def test_named_relation_instance():
    fs = FockSpace(1, 1, 5)
    fb = fs.matrix(Bilinear("FB", Fm, Bp))
    g = fs.generator(Bm)
    lhs = fb @ g - g @ fb + 2 * fs.generator(Fm)
    assert lhs.restricted_is_zero(fs.safe_columns(3))


def test_gl11_key_identity():
    fs = FockSpace(1, 1, 5)
    x, y = fs.matrix(Bilinear("FB", Fm, Bp)), fs.matrix(Bilinear("FB", Fp, Bm))
    rhs = 2 * fs.matrix(Bilinear("BB", Bp, Bm)) + 2 * fs.matrix(Bilinear("FF", Fp, Fm))
    assert (x @ y + y @ x - rhs).restricted_is_zero(fs.safe_columns(4))


def test_equal_parafermion_commutator_is_zero():
    fs = FockSpace(1, 1, 4)
    f = fs.generator(Fp)
    assert (f @ f - f @ f).is_zero()


def test_anticommuting_sectors_fail():
    fs = FockSpace(1, 1, 5, anticommuting_sectors=True)
    rel = check_relations(fs)
    assert not rel.passed
    assert all(v.residual for v in rel.violations)
    assert not check_bracket_table(fs, build(1, 1)).passed


def test_size_mismatch():
    with pytest.raises(ValueError):
        check_bracket_table(FockSpace(1, 1, 4), build(2, 1))


def _corrupted(p: PbfAlgebra) -> PbfAlgebra:
    table = {k: dict(v) for k, v in p.exported.table.items()}
    key = ("{F1-,B1+}", "{F1+,B1-}")
    table[key] = {z: -c for z, c in table[key].items()}
    alg = ColorAlgebra(p.exported.basis, p.exported.grades, table)
    return PbfAlgebra(p.m, p.n, p.symbols, alg)


def test_flipped_table_sign_caught_by_oracle():
    bad = _corrupted(build(1, 1))
    res = check_bracket_table(FockSpace(1, 1, 5), bad)
    assert [v.where for v in res.violations] == [("{F1-,B1+}", "{F1+,B1-}")]


def test_larger_cutoff_keeps_verdicts():
    for p in (build(1, 1), _corrupted(build(1, 1))):
        verdicts = [
            {v.where for v in check_bracket_table(FockSpace(1, 1, N), p).violations} for N in (5, 6, 7)
        ]
        assert verdicts[0] == verdicts[1] == verdicts[2]
