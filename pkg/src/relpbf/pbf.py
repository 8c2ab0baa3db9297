"""The color Lie algebra whose enveloping algebra is the relative parabose set.

Basis: paraboson generators B_k^+-, parafermion generators F_a^+-, and the
canonical bilinears {B,B}, [F,F], {F,B}. Brackets of bilinears with
generators come from the trilinear relations; brackets of two bilinears are
derived from those with the braided derivation rule.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import product
from typing import Iterator, Union

from .colorlie import ColorAlgebra, Element
from .core import G00, G01, G10, G11, Grade, theta, theta_sign
from .report import CheckResult


class ConsistencyError(RuntimeError):
    """An internal algebraic invariant failed (table or subalgebra inconsistency)."""


def _sign_char(s: int) -> str:
    return "+" if s > 0 else "-"


@dataclass(frozen=True)
class Gen:
    kind: str  # "B" or "F"
    index: int
    sign: int  # +1 or -1

    @property
    def name(self) -> str:
        return f"{self.kind}{self.index}{_sign_char(self.sign)}"

    @property
    def grade(self) -> Grade:
        return G10 if self.kind == "B" else G11

    @property
    def slot_key(self) -> tuple:
        # + sorts before -
        return (self.index, 0 if self.sign > 0 else 1)

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True)
class Bilinear:
    """Canonical bilinear <first, second>.

    kind "BB": {B,B} with slots sorted; "FF": [F,F] with slots sorted and
    distinct; "FB": {F,B} with the F slot first.
    """

    kind: str
    first: Gen
    second: Gen

    @property
    def name(self) -> str:
        if self.kind == "FF":
            return f"[{self.first.name},{self.second.name}]"
        return "{" + f"{self.first.name},{self.second.name}" + "}"

    @property
    def grade(self) -> Grade:
        return G01 if self.kind == "FB" else G00

    def __str__(self) -> str:
        return self.name


Symbol = Union[Gen, Bilinear]


def canonical_bilinear(g: Gen, h: Gen) -> tuple[int, Bilinear | None]:
    """<g, h> for two generators as (coefficient, canonical bilinear).

    Two parabosons or a paraboson/parafermion pair bracket with an
    anticommutator, two parafermions with a commutator.
    """
    if g.kind == "B" and h.kind == "B":
        a, b = sorted((g, h), key=lambda x: x.slot_key)
        return 1, Bilinear("BB", a, b)
    if g.kind == "F" and h.kind == "F":
        if g == h:
            return 0, None
        if g.slot_key < h.slot_key:
            return 1, Bilinear("FF", g, h)
        return -1, Bilinear("FF", h, g)
    f, b = (g, h) if g.kind == "F" else (h, g)
    return 1, Bilinear("FB", f, b)


# ---------------------------------------------------------------------------
# Trilinear relations


def paraboson_relation(i: int, xi: int, j: int, eta: int, k: int, eps: int) -> dict[Gen, int]:
    """[{B_i^xi, B_j^eta}, B_k^eps] = (eps-eta) d_jk B_i^xi + (eps-xi) d_ik B_j^eta."""
    out: dict[Gen, int] = {}
    if j == k and eps != eta:
        g = Gen("B", i, xi)
        out[g] = out.get(g, 0) + (eps - eta)
    if i == k and eps != xi:
        g = Gen("B", j, eta)
        out[g] = out.get(g, 0) + (eps - xi)
    return {g: c for g, c in out.items() if c}


def parafermion_relation(i: int, xi: int, j: int, eta: int, k: int, eps: int) -> dict[Gen, int]:
    """[[F_i^xi, F_j^eta], F_k^eps] = 1/2(eps-eta)^2 d_jk F_i^xi - 1/2(eps-xi)^2 d_ik F_j^eta."""
    out: dict[Gen, int] = {}
    if j == k:
        g = Gen("F", i, xi)
        out[g] = out.get(g, 0) + (eps - eta) ** 2 // 2
    if i == k:
        g = Gen("F", j, eta)
        out[g] = out.get(g, 0) - (eps - xi) ** 2 // 2
    return {g: c for g, c in out.items() if c}


# Mixed relations, one row per relation exactly as listed for the relative
# parabose set. Notation: outer/inner bracket, operands <kind><sign><index>,
# right-hand side either 0 or "<c> d(x,y) <generator>".
MIXED_RELATIONS_TEXT = """
[{B+k,B-l},F-m] = 0
[[F+k,F-l],B-m] = 0
[{B-k,B-l},F-m] = 0
[[F-k,F-l],B-m] = 0
[{B+k,B+l},F-m] = 0
[[F+k,F+l],B-m] = 0
[{F-m,B+k},B-l] = -2 d(k,l) F-m
{{B-m,F+k},F-l} = 2 d(k,l) B-m
[{B-l,F-m},B+k] = 2 d(k,l) F-m
{{F-l,B-m},F+k} = 2 d(k,l) B-m
[{B-k,B+l},F+m] = 0
[[F-k,F+l],B+m] = 0
[{F+m,B-k},B+l] = 2 d(k,l) F+m
{{B+m,F-k},F+l} = 2 d(k,l) B+m
[{B+l,F+m},B-k] = -2 d(k,l) F+m
{{F+l,B+m},F-k} = 2 d(k,l) B+m
[{F-m,B-k},B-l] = 0
{{B-m,F-k},F-l} = 0
[{B+k,B+l},F+m] = 0
[[F+k,F+l],B+m] = 0
[{F+m,B+k},B+l] = 0
{{B+m,F+k},F+l} = 0
[{F-m,B+k},B+l] = 0
{{B-m,F+k},F+l} = 0
[{B-k,B-l},F+m] = 0
[[F-k,F-l],B+m] = 0
[{F+m,B-k},B-l] = 0
{{B+m,F-k},F-l} = 0
"""

_OPERAND = r"([BF])([+-])([a-z])"
_REL_RE = re.compile(
    r"^([\[{])([\[{])" + _OPERAND + "," + _OPERAND + r"[\]}]," + _OPERAND + r"[\]}]\s*=\s*(.+)$"
)
_RHS_RE = re.compile(r"^(-?\d+)\s+d\(([a-z]),([a-z])\)\s+" + _OPERAND + "$")


@dataclass(frozen=True)
class Operand:
    kind: str
    sign: int
    var: str

    def bind(self, env: dict[str, int]) -> Gen:
        return Gen(self.kind, env[self.var], self.sign)


@dataclass(frozen=True)
class MixedRelation:
    text: str
    outer: str  # "comm" or "acomm"
    inner: str
    left: Operand
    right: Operand
    gen: Operand
    coeff: int = 0
    delta: tuple[str, str] | None = None
    result: Operand | None = None

    @property
    def bilinear_kind(self) -> str:
        kinds = {self.left.kind, self.right.kind}
        if kinds == {"B"}:
            return "BB"
        if kinds == {"F"}:
            return "FF"
        return "FB"

    def rhs(self, env: dict[str, int]) -> dict[Gen, int]:
        if not self.coeff:
            return {}
        a, b = self.delta
        if env[a] != env[b]:
            return {}
        return {self.result.bind(env): self.coeff}


def _parse_operand(kind: str, sign: str, var: str) -> Operand:
    return Operand(kind, 1 if sign == "+" else -1, var)


def parse_mixed_relations(text: str = MIXED_RELATIONS_TEXT) -> list[MixedRelation]:
    rels = []
    for line in text.strip().splitlines():
        line = line.strip()
        m = _REL_RE.match(line)
        if not m:
            raise ValueError(f"cannot parse relation {line!r}")
        g = m.groups()
        left = _parse_operand(*g[2:5])
        right = _parse_operand(*g[5:8])
        gen = _parse_operand(*g[8:11])
        rhs = g[11].strip()
        rel = dict(
            text=line,
            outer="comm" if g[0] == "[" else "acomm",
            inner="comm" if g[1] == "[" else "acomm",
            left=left,
            right=right,
            gen=gen,
        )
        if rhs != "0":
            r = _RHS_RE.match(rhs)
            if not r:
                raise ValueError(f"cannot parse right-hand side {rhs!r}")
            rel.update(coeff=int(r.group(1)), delta=(r.group(2), r.group(3)), result=_parse_operand(*r.groups()[3:6]))
        rels.append(MixedRelation(**rel))
    return rels


MIXED_RELATIONS = parse_mixed_relations()


def _bracket_type(a: Grade, b: Grade) -> str:
    return "comm" if theta_sign(a, b) == 1 else "acomm"


def _validate_relation(rel: MixedRelation) -> None:
    kind = rel.bilinear_kind
    expected_inner = "comm" if kind == "FF" else "acomm"
    if rel.inner != expected_inner:
        raise ConsistencyError(f"{rel.text}: inner bracket disagrees with the color function")
    bil_grade = G01 if kind == "FB" else G00
    gen_grade = G10 if rel.gen.kind == "B" else G11
    if rel.outer != _bracket_type(bil_grade, gen_grade):
        raise ConsistencyError(f"{rel.text}: outer bracket disagrees with the color function")


def _signature(kind: str, a: int, b: int) -> tuple[int, int]:
    # FB keeps (F sign, B sign); symmetric kinds use the sorted sign pair
    if kind == "FB":
        return (a, b)
    return tuple(sorted((a, b), reverse=True))


def _relation_index(rels: list[MixedRelation]) -> dict[tuple, MixedRelation]:
    index: dict[tuple, MixedRelation] = {}
    for rel in rels:
        _validate_relation(rel)
        kind = rel.bilinear_kind
        if kind == "FB":
            f, b = (rel.left, rel.right) if rel.left.kind == "F" else (rel.right, rel.left)
            sig = (f.sign, b.sign)
        else:
            sig = _signature(kind, rel.left.sign, rel.right.sign)
        key = (kind, sig, rel.gen.kind, rel.gen.sign)
        if key in index:
            raise ConsistencyError(f"duplicate mixed relation for {key}: {rel.text}")
        index[key] = rel
    return index


MIXED_INDEX = _relation_index(MIXED_RELATIONS)


def _bind_mixed(rel: MixedRelation, bil: Bilinear, g: Gen) -> tuple[int, dict[str, int]]:
    """Match the canonical bilinear to the relation's operand order.

    Returns the factor picked up by reordering (only [F,F] is antisymmetric)
    and the variable binding.
    """
    slots = (bil.first, bil.second)
    for order, factor in (((0, 1), 1), ((1, 0), -1 if bil.kind == "FF" else 1)):
        p, q = slots[order[0]], slots[order[1]]
        if (p.kind, p.sign) == (rel.left.kind, rel.left.sign) and (q.kind, q.sign) == (
            rel.right.kind,
            rel.right.sign,
        ):
            env = {rel.left.var: p.index, rel.right.var: q.index, rel.gen.var: g.index}
            return factor, env
    raise ConsistencyError(f"relation {rel.text} does not match {bil.name}")


def lookup_mixed(bil: Bilinear, g: Gen) -> tuple[MixedRelation, dict[Gen, int]]:
    if bil.kind == "FB":
        sig = (bil.first.sign, bil.second.sign)
    else:
        sig = _signature(bil.kind, bil.first.sign, bil.second.sign)
    key = (bil.kind, sig, g.kind, g.sign)
    rel = MIXED_INDEX.get(key)
    if rel is None:
        raise ConsistencyError(f"no trilinear relation covers <{bil.name}, {g.name}>")
    factor, env = _bind_mixed(rel, bil, g)
    return rel, {h: factor * c for h, c in rel.rhs(env).items()}


def trilinear_coverage() -> list[tuple]:
    """Every (bilinear kind, sign pattern, generator) combination lacking a rule.

    Pure-boson and pure-fermion combinations are covered by closed formulas;
    the mixed ones must each hit exactly one listed relation.
    """
    missing = []
    pm = (1, -1)
    for kind, gkind in (("BB", "F"), ("FF", "B"), ("FB", "B"), ("FB", "F")):
        for s1, s2, gs in product(pm, pm, pm):
            sig = (s1, s2) if kind == "FB" else _signature(kind, s1, s2)
            if (kind, sig, gkind, gs) not in MIXED_INDEX:
                missing.append((kind, s1, s2, gkind, gs))
    return missing


# ---------------------------------------------------------------------------
# Brackets on structured symbols


def _gens_to_element(coeffs: dict[Gen, int]) -> Element:
    return Element({g.name: c for g, c in coeffs.items()})


def bracket_gen_gen(g: Gen, h: Gen) -> Element:
    c, bil = canonical_bilinear(g, h)
    if bil is None or not c:
        return Element()
    return Element({bil.name: c})


def bracket_bil_gen_coeffs(b: Bilinear, g: Gen) -> dict[Gen, int]:
    if b.kind == "BB" and g.kind == "B":
        x, y = b.first, b.second
        return paraboson_relation(x.index, x.sign, y.index, y.sign, g.index, g.sign)
    if b.kind == "FF" and g.kind == "F":
        x, y = b.first, b.second
        return parafermion_relation(x.index, x.sign, y.index, y.sign, g.index, g.sign)
    return lookup_mixed(b, g)[1]


def bracket_bil_gen(b: Bilinear, g: Gen) -> Element:
    return _gens_to_element(bracket_bil_gen_coeffs(b, g))


def bracket_gen_bil(g: Gen, b: Bilinear) -> Element:
    return -theta(g.grade, b.grade) * bracket_bil_gen(b, g)


def bracket_bil_bil(b1: Bilinear, b2: Bilinear) -> Element:
    """<b1, <g, h>> = <<b1, g>, h> + theta(deg b1, deg g) <g, <b1, h>>, with (g, h) = b2's slots."""
    g, h = b2.first, b2.second
    c, check = canonical_bilinear(g, h)
    if c != 1 or check != b2:
        raise ConsistencyError(f"{b2.name} is not <{g.name},{h.name}>")
    out = Element()
    for u, cu in bracket_bil_gen_coeffs(b1, g).items():
        out = out + cu * bracket_gen_gen(u, h)
    t = theta(b1.grade, g.grade)
    for v, cv in bracket_bil_gen_coeffs(b1, h).items():
        out = out + (t * cv) * bracket_gen_gen(g, v)
    return out


def bracket_symbols(x: Symbol, y: Symbol) -> Element:
    if isinstance(x, Gen) and isinstance(y, Gen):
        return bracket_gen_gen(x, y)
    if isinstance(x, Bilinear) and isinstance(y, Gen):
        return bracket_bil_gen(x, y)
    if isinstance(x, Gen):
        return bracket_gen_bil(x, y)
    return bracket_bil_bil(x, y)


def bracket_kind(x: Symbol, y: Symbol) -> str:
    """"commutator" or "anticommutator": how <x,y> is realized inside the enveloping algebra."""
    return "commutator" if theta_sign(x.grade, y.grade) == 1 else "anticommutator"


# ---------------------------------------------------------------------------
# The algebra


def generators(m: int, n: int) -> list[Gen]:
    gens = [Gen("B", k, s) for k in range(1, m + 1) for s in (1, -1)]
    gens += [Gen("F", a, s) for a in range(1, n + 1) for s in (1, -1)]
    return gens


def bilinears(m: int, n: int) -> list[Bilinear]:
    bs = [Gen("B", k, s) for k in range(1, m + 1) for s in (1, -1)]
    fs = [Gen("F", a, s) for a in range(1, n + 1) for s in (1, -1)]
    out = [Bilinear("BB", bs[i], bs[j]) for i in range(len(bs)) for j in range(i, len(bs))]
    out += [Bilinear("FF", fs[i], fs[j]) for i in range(len(fs)) for j in range(i + 1, len(fs))]
    out += [Bilinear("FB", f, b) for f in fs for b in bs]
    return out


def expected_dimension(m: int, n: int) -> int:
    return 2 * m + 2 * n + m * (2 * m + 1) + n * (2 * n - 1) + 4 * m * n


@dataclass
class PbfAlgebra:
    m: int
    n: int
    symbols: dict[str, Symbol]
    exported: ColorAlgebra

    @property
    def dimension(self) -> int:
        return self.exported.dimension

    @property
    def generators(self) -> list[Gen]:
        return [s for s in self.symbols.values() if isinstance(s, Gen)]

    @property
    def bilinears(self) -> list[Bilinear]:
        return [s for s in self.symbols.values() if isinstance(s, Bilinear)]

    def symbol(self, name: str) -> Symbol:
        return self.symbols[name]


def build(m: int, n: int) -> PbfAlgebra:
    if m < 0 or n < 0 or m + n < 1:
        raise ValueError(f"need m, n >= 0 and m + n >= 1, got m={m}, n={n}")
    syms: list[Symbol] = [*generators(m, n), *bilinears(m, n)]
    table = {}
    for x in syms:
        for y in syms:
            val = bracket_symbols(x, y)
            if val:
                table[(x.name, y.name)] = val.terms
    alg = ColorAlgebra(
        [s.name for s in syms],
        {s.name: s.grade for s in syms},
        table,
        name=f"L(Z2xZ2)({m},{n})",
    )
    if alg.dimension != expected_dimension(m, n):
        raise ConsistencyError("basis size disagrees with the dimension formula")
    return PbfAlgebra(m, n, {s.name: s for s in syms}, alg)


def super_subalgebra(p: PbfAlgebra) -> ColorAlgebra:
    """Restriction to grades (0,0) and (0,1): a Lie superalgebra."""
    sub, closure = p.exported.restrict([G00, G01])
    if not closure.passed:
        raise ConsistencyError(f"L00 + L01 is not closed: {closure.violations[:3]}")
    sub.name = f"L00+L01({p.m},{p.n})"
    return sub


def check_super_pattern(p: PbfAlgebra) -> CheckResult:
    """<L00,L00> and <L00,L01> are commutators into L00 / L01, <L01,L01> anticommutators into L00."""
    expected = {
        (G00, G00): ("commutator", G00),
        (G00, G01): ("commutator", G01),
        (G01, G00): ("commutator", G01),
        (G01, G01): ("anticommutator", G00),
    }
    res = CheckResult("super-subalgebra bracket pattern")
    sub = super_subalgebra(p)
    for x in sub.basis:
        for y in sub.basis:
            res.checked += 1
            sx, sy = p.symbols[x], p.symbols[y]
            kind, target = expected[(sx.grade, sy.grade)]
            if bracket_kind(sx, sy) != kind:
                res.fail((x, y), f"realized as {bracket_kind(sx, sy)}, expected {kind}")
            for z in sub.bracket_symbols(x, y):
                if sub.grades[z] != target:
                    res.fail((x, y, z), f"lands in {sub.grades[z]}, expected {target}")
    return res


def check_factorization_independence(p: PbfAlgebra) -> CheckResult:
    """<b1,b2> from the derivation rule equals -theta <b2,b1> from the same rule."""
    res = CheckResult("bilinear bracket factorization independence")
    bils = p.bilinears
    for b1 in bils:
        for b2 in bils:
            res.checked += 1
            lhs = bracket_bil_bil(b1, b2)
            rhs = -theta(b1.grade, b2.grade) * bracket_bil_bil(b2, b1)
            diff = lhs - rhs
            if diff:
                res.fail((b1.name, b2.name), diff.render())
    return res


@dataclass(frozen=True)
class TrilinearRelation:
    """A concrete instance <<g, h>, k> = rhs with the bracket types spelled out."""

    text: str
    inner: str
    left: Gen
    right: Gen
    outer: str
    gen: Gen
    rhs: dict


def trilinear_relations(m: int, n: int) -> Iterator[TrilinearRelation]:
    """All paraboson, parafermion and mixed relations with indices in range."""
    pm = (1, -1)
    for i, j, k in product(range(1, m + 1), repeat=3):
        for xi, eta, eps in product(pm, repeat=3):
            rhs = paraboson_relation(i, xi, j, eta, k, eps)
            left, right, gen = Gen("B", i, xi), Gen("B", j, eta), Gen("B", k, eps)
            yield TrilinearRelation(
                f"[{{{left},{right}}},{gen}]", "acomm", left, right, "comm", gen, rhs
            )
    for i, j, k in product(range(1, n + 1), repeat=3):
        for xi, eta, eps in product(pm, repeat=3):
            rhs = parafermion_relation(i, xi, j, eta, k, eps)
            left, right, gen = Gen("F", i, xi), Gen("F", j, eta), Gen("F", k, eps)
            yield TrilinearRelation(f"[[{left},{right}],{gen}]", "comm", left, right, "comm", gen, rhs)
    ranges = {"B": range(1, m + 1), "F": range(1, n + 1)}
    for rel in MIXED_RELATIONS:
        ops = (rel.left, rel.right, rel.gen)
        for idx in product(*(ranges[o.kind] for o in ops)):
            env = dict(zip((o.var for o in ops), idx))
            if len(env) < 3:
                raise ConsistencyError(f"relation {rel.text} reuses an index variable")
            yield TrilinearRelation(
                f"{rel.text} @ " + ",".join(f"{v}={env[v]}" for v in sorted(env)),
                rel.inner,
                rel.left.bind(env),
                rel.right.bind(env),
                rel.outer,
                rel.gen.bind(env),
                rel.rhs(env),
            )


__all__ = [
    "Bilinear",
    "ConsistencyError",
    "Gen",
    "MIXED_RELATIONS",
    "PbfAlgebra",
    "bracket_bil_bil",
    "bracket_bil_gen",
    "bracket_gen_bil",
    "bracket_gen_gen",
    "bracket_kind",
    "build",
    "canonical_bilinear",
    "check_factorization_independence",
    "check_super_pattern",
    "expected_dimension",
    "super_subalgebra",
    "trilinear_coverage",
    "trilinear_relations",
]
