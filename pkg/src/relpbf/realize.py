"""Realizing a Lie superalgebra inside the relative parabose set.

Given a graded matrix representation x -> [[A, B], [C, D]] (even generators
block diagonal, odd generators block off-diagonal) the map

    J(X) = 1/2 sum A_kl {B_k+, B_l-} + 1/2 sum D_ab [F_a+, F_b-]
    J(Y) = 1/2 sum (B_ka {B_k+, F_a-} + C_ak {F_a+, B_k-})

sends each generator to a bilinear combination. Everything here is verified
per input by exact computation: the input algebra and representation first,
then the bracket compatibility of J, then compatibility with the Hopf maps.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Sequence

from .colorlie import ColorAlgebra, Element, check_all
from .core import G00, G01, HALF, ONE, ZERO, Coefficient
from .hopf import Hopf, TensorElement
from .pbf import Bilinear, Gen, PbfAlgebra, bracket_gen_gen, build, super_subalgebra
from .report import CheckResult
from .uea import UeaElement

Matrix = list  # list[list[Coefficient]]
MODES = ("mixed", "paraboson", "parafermion")


class InputError(ValueError):
    """Malformed algebra input: bad dimensions, unknown names, wrong mode."""


def zeros(rows: int, cols: int) -> Matrix:
    return [[ZERO] * cols for _ in range(rows)]


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    inner = len(b)
    cols = len(b[0]) if b else 0
    return [[sum((row[k] * b[k][j] for k in range(inner)), ZERO) for j in range(cols)] for row in a]


def mat_add(a: Matrix, b: Matrix, scale=ONE) -> Matrix:
    s = Coefficient.coerce(scale)
    return [[x + s * y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def is_zero_matrix(a: Matrix) -> bool:
    return all(not x for row in a for x in row)


@dataclass
class RepBlocks:
    A: Matrix
    B: Matrix
    C: Matrix
    D: Matrix

    def full(self) -> Matrix:
        top = [ra + rb for ra, rb in zip(self.A, self.B)]
        bottom = [rc + rd for rc, rd in zip(self.C, self.D)]
        return top + bottom


@dataclass
class SuperAlgebraInput:
    """Finite-dimensional Lie superalgebra with a graded matrix representation.

    ``brackets`` maps ordered pairs to {symbol: coefficient}. Pairs whose
    reverse is not listed are completed by super antisymmetry; pairs listed
    both ways are taken as given and checked.
    """

    name: str
    even_basis: tuple[str, ...]
    odd_basis: tuple[str, ...]
    brackets: dict[tuple[str, str], dict[str, Coefficient]]
    rep: dict[str, RepBlocks]
    m: int
    n: int

    @property
    def basis(self) -> tuple[str, ...]:
        return self.even_basis + self.odd_basis

    def parity(self, x: str) -> int:
        return 1 if x in self.odd_basis else 0

    def algebra(self) -> ColorAlgebra:
        """The input as a color algebra on grades (0,0) and (0,1)."""
        grades = {x: (G01 if self.parity(x) else G00) for x in self.basis}
        return ColorAlgebra(self.basis, grades, self.completed_brackets(), name=self.name)

    def completed_brackets(self) -> dict[tuple[str, str], dict[str, Coefficient]]:
        table = {k: dict(v) for k, v in self.brackets.items()}
        for (x, y), res in self.brackets.items():
            if (y, x) not in self.brackets:
                sign = -1 if self.parity(x) * self.parity(y) else 1
                table[(y, x)] = {z: -sign * c for z, c in res.items()}
        return table

    def rep_matrix(self, x: str) -> Matrix:
        return self.rep[x].full()


def _matrix(data, rows: int, cols: int, where: str) -> Matrix:
    if data is None:
        return zeros(rows, cols)
    if len(data) != rows or any(len(r) != cols for r in data):
        shape = (len(data), len(data[0]) if data else 0)
        raise InputError(f"{where}: expected a {rows}x{cols} matrix, got {shape[0]}x{shape[1]}")
    return [[Coefficient.from_json(v) for v in r] for r in data]


def parse_input(data: Mapping) -> SuperAlgebraInput:
    """Build a SuperAlgebraInput from the JSON algebra format."""
    try:
        even = tuple(data.get("even_basis", []))
        odd = tuple(data.get("odd_basis", []))
        dims = data.get("dims", {})
        m, n = int(dims.get("m", 0)), int(dims.get("n", 0))
    except (TypeError, ValueError, AttributeError) as exc:
        raise InputError(f"malformed header: {exc}") from exc
    if m < 0 or n < 0 or m + n < 1:
        raise InputError(f"dims must satisfy m, n >= 0 and m + n >= 1, got m={m}, n={n}")
    names = even + odd
    if not names:
        raise InputError("empty basis")
    if len(set(names)) != len(names):
        raise InputError("duplicate basis names")
    known = set(names)
    brackets: dict[tuple[str, str], dict[str, Coefficient]] = {}
    for rec in data.get("brackets", []):
        x, y = rec["left"], rec["right"]
        entry = brackets.setdefault((x, y), {})
        for term in rec.get("result", []):
            z = term["basis"]
            for s in (x, y, z):
                if s not in known:
                    raise InputError(f"bracket references undeclared name {s!r}")
            try:
                c = Coefficient.from_json(term["coeff"])
            except (ValueError, TypeError, ZeroDivisionError, KeyError) as exc:
                raise InputError(f"bad coefficient in <{x},{y}>: {exc}") from exc
            entry[z] = entry.get(z, ZERO) + c
        if x not in known or y not in known:
            raise InputError(f"bracket references undeclared name in <{x},{y}>")
    rep_data = data.get("rep", {})
    for x in rep_data:
        if x not in known:
            raise InputError(f"rep given for undeclared name {x!r}")
    rep = {}
    for x in names:
        blocks = rep_data.get(x, {})
        try:
            rep[x] = RepBlocks(
                _matrix(blocks.get("A"), m, m, f"{x}.A"),
                _matrix(blocks.get("B"), m, n, f"{x}.B"),
                _matrix(blocks.get("C"), n, m, f"{x}.C"),
                _matrix(blocks.get("D"), n, n, f"{x}.D"),
            )
        except (ValueError, TypeError, ZeroDivisionError) as exc:
            if isinstance(exc, InputError):
                raise
            raise InputError(f"bad representation entry for {x}: {exc}") from exc
    return SuperAlgebraInput(data.get("name", ""), even, odd, brackets, rep, m, n)


def validate_input(s: SuperAlgebraInput) -> list[CheckResult]:
    """Block pattern, super antisymmetry and Jacobi, and the representation property."""
    pattern = CheckResult("representation block pattern")
    for x in s.basis:
        pattern.checked += 1
        r = s.rep[x]
        off = ("B", "C") if s.parity(x) == 0 else ("A", "D")
        bad = [b for b in off if not is_zero_matrix(getattr(r, b))]
        if bad:
            kind = "even" if s.parity(x) == 0 else "odd"
            pattern.fail((x,), f"{kind} generator has nonzero {'/'.join(bad)} block")

    records = [pattern]
    try:
        alg = s.algebra()
    except KeyError as exc:
        raise InputError(str(exc)) from exc
    records.extend(check_all(alg))

    rep = CheckResult("representation P(<x,y>) = P(x)P(y) - (-1)^{|x||y|} P(y)P(x)")
    size = s.m + s.n
    mats = {x: s.rep_matrix(x) for x in s.basis}
    for x in s.basis:
        for y in s.basis:
            rep.checked += 1
            sign = -1 if s.parity(x) * s.parity(y) else 1
            rhs = mat_add(mat_mul(mats[x], mats[y]), mat_mul(mats[y], mats[x]), -sign)
            lhs = zeros(size, size)
            for z, c in alg.bracket_symbols(x, y).items():
                lhs = mat_add(lhs, mats[z], c)
            diff = mat_add(lhs, rhs, -1)
            if not is_zero_matrix(diff):
                entries = [
                    f"({i + 1},{j + 1})={v}" for i, row in enumerate(diff) for j, v in enumerate(row) if v
                ]
                rep.fail((x, y), ", ".join(entries[:4]))
    records.append(rep)
    return records


@dataclass
class RealizationMap:
    images: dict[str, Element]
    mode: str = "mixed"
    algebra: PbfAlgebra | None = field(default=None, repr=False)

    def render(self, order: Sequence[str] | None = None) -> dict[str, str]:
        return {x: img.render(order) for x, img in self.images.items()}


def _half_bracket(g: Gen, h: Gen, coeff: Coefficient) -> Element:
    return (HALF * coeff) * bracket_gen_gen(g, h)


def _image(s: SuperAlgebraInput, x: str, use_a: bool, use_d: bool) -> Element:
    r = s.rep[x]
    img = Element()
    for k in range(s.m):
        for l in range(s.m):
            if use_a and r.A[k][l]:
                img = img + _half_bracket(Gen("B", k + 1, 1), Gen("B", l + 1, -1), r.A[k][l])
        for a in range(s.n):
            if r.B[k][a]:
                img = img + _half_bracket(Gen("B", k + 1, 1), Gen("F", a + 1, -1), r.B[k][a])
            if r.C[a][k]:
                img = img + _half_bracket(Gen("F", a + 1, 1), Gen("B", k + 1, -1), r.C[a][k])
    if use_d:
        for a in range(s.n):
            for b in range(s.n):
                if r.D[a][b]:
                    img = img + _half_bracket(Gen("F", a + 1, 1), Gen("F", b + 1, -1), r.D[a][b])
    return img


def target_dims(s: SuperAlgebraInput, mode: str) -> tuple[int, int]:
    if mode == "mixed":
        return s.m, s.n
    if mode == "paraboson":
        if s.m < 1:
            raise InputError("paraboson mode needs a nonempty A block (m >= 1)")
        return s.m, 0
    if mode == "parafermion":
        if s.n < 1:
            raise InputError("parafermion mode needs a nonempty D block (n >= 1)")
        return 0, s.n
    raise InputError(f"unknown mode {mode!r}; choose from {', '.join(MODES)}")


def build_realization(s: SuperAlgebraInput, mode: str = "mixed") -> RealizationMap:
    m, n = target_dims(s, mode)
    if mode != "mixed" and s.odd_basis:
        raise InputError(f"{mode} mode realizes Lie algebras only; input has odd generators")
    use_a, use_d = mode != "parafermion", mode != "paraboson"
    images = {x: _image(s, x, use_a, use_d) for x in s.basis}
    return RealizationMap(images, mode, build(m, n))


def realize_lie_algebra(s: SuperAlgebraInput, mode: str) -> RealizationMap:
    """Realization of a purely even input by the selected blocks only."""
    if s.odd_basis:
        raise InputError("input has odd generators; use the mixed superalgebra realization")
    return build_realization(s, mode)


def _target(j: RealizationMap) -> PbfAlgebra:
    if j.algebra is None:
        raise InputError("realization carries no target algebra")
    return j.algebra


def check_grading(s: SuperAlgebraInput, j: RealizationMap) -> CheckResult:
    """Even images lie on BB/FF symbols, odd images on FB symbols."""
    p = _target(j)
    res = CheckResult("images respect the grading")
    for x in s.basis:
        res.checked += 1
        want = ("FB",) if s.parity(x) else ("BB", "FF")
        for z in j.images[x].terms:
            sym = p.symbols.get(z)
            if not isinstance(sym, Bilinear) or sym.kind not in want:
                res.fail((x, z), f"expected a {'/'.join(want)} symbol")
    return res


def check_homomorphism(s: SuperAlgebraInput, j: RealizationMap, p: PbfAlgebra | None = None) -> CheckResult:
    """J(<x,y>) == <J(x), J(y)> for every ordered basis pair."""
    p = p or _target(j)
    if j.algebra is not None and (p.m, p.n) != (j.algebra.m, j.algebra.n):
        raise InputError(f"target algebra ({p.m},{p.n}) does not match realization ({j.algebra.m},{j.algebra.n})")
    for x in s.basis:
        for z in j.images[x].terms:
            if z not in p.exported.index:
                raise InputError(f"image symbol {z} is not in the ({p.m},{p.n}) algebra")
    alg = s.algebra()
    res = CheckResult("J(<x,y>) = <J(x),J(y)>")
    for x in s.basis:
        for y in s.basis:
            res.checked += 1
            lhs = Element()
            for z, c in alg.bracket_symbols(x, y).items():
                lhs = lhs + c * j.images[z]
            rhs = p.exported.bracket(j.images[x], j.images[y])
            diff = lhs - rhs
            if diff:
                res.fail((x, y), diff.render(p.exported.basis))
    return res


class _Extension:
    """J extended to words of U(L) as an algebra map into U of the super-subalgebra."""

    def __init__(self, j: RealizationMap, target: Hopf):
        self.j = j
        self.h = target

    def word(self, w) -> UeaElement:
        acc = UeaElement.one()
        for letter in w:
            acc = self.h.multiply(acc, UeaElement.from_lie(self.j.images[letter]))
        return acc

    def __call__(self, e: UeaElement) -> UeaElement:
        acc = UeaElement()
        for w, c in e.terms.items():
            acc = acc + c * self.word(w)
        return acc


def check_hopf_compat(s: SuperAlgebraInput, j: RealizationMap, p: PbfAlgebra | None = None) -> list[CheckResult]:
    """Delta J = (J (x) J) Delta_L, eps J = eps_L, S J = J S_L on every generator."""
    p = p or _target(j)
    target = Hopf(super_subalgebra(p))
    source = Hopf(s.algebra())
    ext = _Extension(j, target)

    delta = CheckResult("coproduct: D(J(x)) = (J (x) J)(D_L(x))")
    eps = CheckResult("counit: eps(J(x)) = eps_L(x)")
    anti = CheckResult("antipode: S(J(x)) = J(S_L(x))")
    for x in s.basis:
        jx = UeaElement.from_lie(j.images[x])
        lx = UeaElement.word(x)
        for r in (delta, eps, anti):
            r.checked += 1
        lhs = target.coproduct(jx)
        rhs = TensorElement(target.tensor_apply(source.coproduct(lx), ext, ext).terms)
        if lhs != rhs:
            delta.fail((x,), (lhs - rhs).render())
        e1, e2 = target.counit(jx), source.counit(lx)
        if e1 != e2:
            eps.fail((x,), f"{e1} != {e2}")
        s1 = target.antipode(jx)
        s2 = ext(source.antipode(lx))
        if s1 != s2:
            anti.fail((x,), (s1 - s2).render())
    return [delta, eps, anti]


def conjugate(s: SuperAlgebraInput, g: Matrix, g_inv: Matrix) -> SuperAlgebraInput:
    """Equivalent representation x -> G P(x) G^-1 for an even (block diagonal) G."""
    size = s.m + s.n
    if len(g) != size or len(g_inv) != size:
        raise InputError("conjugating matrix has the wrong size")
    ident = mat_mul(g, g_inv)
    for i in range(size):
        for k in range(size):
            if ident[i][k] != (1 if i == k else 0):
                raise InputError("g_inv is not the inverse of g")
    rep = {}
    for x in s.basis:
        full = mat_mul(mat_mul(g, s.rep_matrix(x)), g_inv)
        m = s.m
        rep[x] = RepBlocks(
            [row[:m] for row in full[:m]],
            [row[m:] for row in full[:m]],
            [row[:m] for row in full[m:]],
            [row[m:] for row in full[m:]],
        )
    return SuperAlgebraInput(s.name, s.even_basis, s.odd_basis, s.brackets, rep, s.m, s.n)
