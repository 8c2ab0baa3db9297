"""Order-1 oracle: ordinary bosons and fermions on a truncated Fock space.

Parabosons map to boson ladder operators, parafermions to Jordan-Wigner
fermions, and the two sectors commute. The boson basis is left
unnormalized (B+|b> = |b+1>, B-|b> = b|b-1>) so all entries are integers.
Truncation at total boson number N is handled by comparing only columns of
states with enough headroom for the number of raising steps involved.
"""

from __future__ import annotations

from itertools import product
from typing import Iterable, Mapping

from .core import ONE, Coefficient, theta
from .pbf import Bilinear, Gen, PbfAlgebra, Symbol, trilinear_relations
from .report import CheckResult

State = tuple  # (boson occupations, fermion occupations)


class OperatorMatrix:
    """Sparse square matrix stored by columns: cols[j] = {i: Coefficient}."""

    __slots__ = ("dim", "cols")

    def __init__(self, dim: int, cols: Mapping[int, Mapping[int, object]] | None = None):
        self.dim = dim
        clean: dict[int, dict[int, Coefficient]] = {}
        for j, col in (cols or {}).items():
            c = {i: Coefficient.coerce(v) for i, v in col.items()}
            c = {i: v for i, v in c.items() if v}
            if c:
                clean[j] = c
        self.cols = clean

    def column(self, j: int) -> dict[int, Coefficient]:
        return self.cols.get(j, {})

    def apply(self, vec: Mapping[int, Coefficient]) -> dict[int, Coefficient]:
        out: dict[int, Coefficient] = {}
        for k, v in vec.items():
            for i, a in self.cols.get(k, {}).items():
                out[i] = out.get(i, 0) + a * v
        return {i: v for i, v in out.items() if v}

    def __matmul__(self, other: "OperatorMatrix") -> "OperatorMatrix":
        return OperatorMatrix(self.dim, {j: self.apply(col) for j, col in other.cols.items()})

    def __add__(self, other: "OperatorMatrix") -> "OperatorMatrix":
        cols = {j: dict(c) for j, c in self.cols.items()}
        for j, col in other.cols.items():
            tgt = cols.setdefault(j, {})
            for i, v in col.items():
                tgt[i] = tgt.get(i, 0) + v
        return OperatorMatrix(self.dim, cols)

    def __rmul__(self, scalar) -> "OperatorMatrix":
        c = Coefficient.coerce(scalar)
        return OperatorMatrix(self.dim, {j: {i: c * v for i, v in col.items()} for j, col in self.cols.items()})

    def __neg__(self) -> "OperatorMatrix":
        return -1 * self

    def __sub__(self, other: "OperatorMatrix") -> "OperatorMatrix":
        return self + (-other)

    def is_zero(self) -> bool:
        return not self.cols

    def entry(self, i: int, j: int) -> Coefficient:
        return self.cols.get(j, {}).get(i, Coefficient(0))

    def restricted_is_zero(self, columns: Iterable[int]) -> bool:
        return all(not self.cols.get(j) for j in columns)


def commutator(a: OperatorMatrix, b: OperatorMatrix) -> OperatorMatrix:
    return a @ b - b @ a


def anticommutator(a: OperatorMatrix, b: OperatorMatrix) -> OperatorMatrix:
    return a @ b + b @ a


def _bracket(kind: str, a: OperatorMatrix, b: OperatorMatrix) -> OperatorMatrix:
    return commutator(a, b) if kind == "comm" else anticommutator(a, b)


def boson_states(m: int, cutoff: int) -> list[tuple[int, ...]]:
    return [b for b in product(range(cutoff + 1), repeat=m) if sum(b) <= cutoff]


class FockSpace:
    """Truncated space: m boson modes with total occupation <= cutoff, n fermion modes."""

    def __init__(self, m: int, n: int, cutoff: int, anticommuting_sectors: bool = False):
        if cutoff < 3:
            raise ValueError(f"boson cutoff must be >= 3, got {cutoff}")
        if m < 0 or n < 0 or m + n < 1:
            raise ValueError(f"need m, n >= 0 with m + n >= 1, got m={m}, n={n}")
        self.m, self.n, self.cutoff = m, n, cutoff
        self.anticommuting_sectors = anticommuting_sectors
        self.basis: list[State] = [
            (b, f) for b in boson_states(m, cutoff) for f in product((0, 1), repeat=n)
        ]
        self.index = {s: i for i, s in enumerate(self.basis)}
        self._gen_cache: dict[Gen, OperatorMatrix] = {}

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def safe_columns(self, depth: int) -> list[int]:
        """States whose total boson number leaves room for ``depth`` raising steps."""
        limit = self.cutoff - depth
        return [i for i, (b, _) in enumerate(self.basis) if sum(b) <= limit]

    def _boson(self, k: int, sign: int) -> OperatorMatrix:
        cols = {}
        for j, (b, f) in enumerate(self.basis):
            occ = list(b)
            if sign > 0:
                if sum(b) + 1 > self.cutoff:
                    continue
                occ[k - 1] += 1
                amp = 1
            else:
                if b[k - 1] == 0:
                    continue
                amp = b[k - 1]
                occ[k - 1] -= 1
            if self.anticommuting_sectors and sum(f) % 2:
                amp = -amp
            cols[j] = {self.index[(tuple(occ), f)]: amp}
        return OperatorMatrix(self.dimension, cols)

    def _fermion(self, a: int, sign: int) -> OperatorMatrix:
        cols = {}
        for j, (b, f) in enumerate(self.basis):
            if f[a - 1] == (0 if sign > 0 else 1):
                occ = list(f)
                occ[a - 1] = 1 - occ[a - 1]
                amp = -1 if sum(f[: a - 1]) % 2 else 1
                cols[j] = {self.index[(b, tuple(occ))]: amp}
        return OperatorMatrix(self.dimension, cols)

    def generator(self, g: Gen) -> OperatorMatrix:
        mat = self._gen_cache.get(g)
        if mat is None:
            limit = self.m if g.kind == "B" else self.n
            if not 1 <= g.index <= limit:
                raise KeyError(f"{g.name} is out of range for (m,n)=({self.m},{self.n})")
            mat = self._boson(g.index, g.sign) if g.kind == "B" else self._fermion(g.index, g.sign)
            self._gen_cache[g] = mat
        return mat

    def matrix(self, s: Symbol) -> OperatorMatrix:
        if isinstance(s, Gen):
            return self.generator(s)
        a, b = self.generator(s.first), self.generator(s.second)
        return commutator(a, b) if s.kind == "FF" else anticommutator(a, b)


def symbol_degree(s: Symbol) -> int:
    return 1 if isinstance(s, Gen) else 2


def realize_generators(fs: FockSpace) -> dict[Gen, OperatorMatrix]:
    gens = [Gen("B", k, s) for k in range(1, fs.m + 1) for s in (1, -1)]
    gens += [Gen("F", a, s) for a in range(1, fs.n + 1) for s in (1, -1)]
    return {g: fs.generator(g) for g in gens}


def _residual_text(fs: FockSpace, mat: OperatorMatrix, columns: list[int], limit: int = 4) -> str:
    parts = []
    for j in columns:
        for i, v in mat.column(j).items():
            parts.append(f"<{fs.basis[i]}|.|{fs.basis[j]}>={v}")
            if len(parts) >= limit:
                return "; ".join(parts) + " ..."
    return "; ".join(parts)


def check_relations(fs: FockSpace) -> CheckResult:
    """Every trilinear relation as a matrix identity on states with boson number <= N-3."""
    res = CheckResult(f"trilinear relations as matrices (N={fs.cutoff})")
    safe = fs.safe_columns(3)
    for rel in trilinear_relations(fs.m, fs.n):
        res.checked += 1
        inner = _bracket(rel.inner, fs.generator(rel.left), fs.generator(rel.right))
        lhs = _bracket(rel.outer, inner, fs.generator(rel.gen))
        rhs = OperatorMatrix(fs.dimension)
        for g, c in rel.rhs.items():
            rhs = rhs + c * fs.generator(g)
        diff = lhs - rhs
        if not diff.restricted_is_zero(safe):
            res.fail((rel.text,), _residual_text(fs, diff, safe))
    res.info["safe_states"] = len(safe)
    return res


def check_bracket_table(fs: FockSpace, p: PbfAlgebra) -> CheckResult:
    """M(x)M(y) - theta M(y)M(x) == sum c_z M(z) for every table entry, on safe states."""
    if (fs.m, fs.n) != (p.m, p.n):
        raise ValueError(f"Fock space is ({fs.m},{fs.n}) but algebra is ({p.m},{p.n})")
    res = CheckResult(f"bracket table against Fock matrices (N={fs.cutoff})")
    alg = p.exported
    mats = {name: fs.matrix(sym) for name, sym in p.symbols.items()}
    safe_by_depth = {d: fs.safe_columns(d) for d in range(2, 5)}
    for x in alg.basis:
        sx = p.symbols[x]
        for y in alg.basis:
            sy = p.symbols[y]
            res.checked += 1
            cols = safe_by_depth[symbol_degree(sx) + symbol_degree(sy)]
            t = theta(sx.grade, sy.grade)
            bad = []
            for j in cols:
                e = {j: ONE}
                xy = mats[x].apply(mats[y].apply(e))
                yx = mats[y].apply(mats[x].apply(e))
                acc = dict(xy)
                for i, v in yx.items():
                    acc[i] = acc.get(i, 0) - t * v
                for z, cz in alg.bracket_symbols(x, y).items():
                    for i, v in mats[z].apply(e).items():
                        acc[i] = acc.get(i, 0) - cz * v
                acc = {i: v for i, v in acc.items() if v}
                if acc:
                    bad.append((j, acc))
            if bad:
                j, acc = bad[0]
                res.fail((x, y), f"{len(bad)} safe columns differ, e.g. at {fs.basis[j]}: {acc}")
    return res


def vacuum_expectation(fs: FockSpace, s: Symbol) -> Coefficient:
    vac = fs.index[((0,) * fs.m, (0,) * fs.n)]
    return fs.matrix(s).entry(vac, vac)


__all__ = [
    "Bilinear",
    "FockSpace",
    "OperatorMatrix",
    "check_bracket_table",
    "check_relations",
    "realize_generators",
    "vacuum_expectation",
]
