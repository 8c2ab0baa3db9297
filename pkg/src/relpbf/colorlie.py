"""Finite-dimensional color Lie algebras over Z2 x Z2 given by structure constants."""

from __future__ import annotations

from typing import Callable, Iterable, Mapping, Sequence

from .core import ALL_GRADES, Coefficient, Grade, theta as standard_theta
from .report import CheckResult

ColorFunction = Callable[[Grade, Grade], Coefficient]


class Element:
    """Sparse linear combination: map key -> Coefficient with no stored zeros.

    Keys are basis symbols here; subclasses reuse it with words or word pairs.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[object, object] | None = None):
        clean = {}
        for s, c in (terms or {}).items():
            c = Coefficient.coerce(c)
            if c:
                clean[s] = c
        self.terms: dict = clean

    @classmethod
    def basis(cls, symbol) -> "Element":
        return cls({symbol: 1})

    def __add__(self, other: "Element") -> "Element":
        out = dict(self.terms)
        for s, c in other.terms.items():
            out[s] = out.get(s, 0) + c
        return type(self)(out)

    def __sub__(self, other: "Element") -> "Element":
        return self + (-other)

    def __neg__(self) -> "Element":
        return type(self)({s: -c for s, c in self.terms.items()})

    def __rmul__(self, scalar) -> "Element":
        c = Coefficient.coerce(scalar)
        return type(self)({s: c * v for s, v in self.terms.items()})

    def scale(self, scalar) -> "Element":
        return self.__rmul__(scalar)

    def __eq__(self, other) -> bool:
        if isinstance(other, int) and other == 0:
            return not self.terms
        return isinstance(other, Element) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def support(self) -> set:
        return set(self.terms)

    def _key_str(self, key) -> str:
        return str(key)

    def render(self, order: Sequence | None = None) -> str:
        if not self.terms:
            return "0"
        keys = list(self.terms)
        if order is not None:
            pos = {s: i for i, s in enumerate(order)}
            keys.sort(key=lambda s: pos.get(s, len(pos)))
        else:
            keys.sort(key=lambda k: (self._key_str(k)))
        return " + ".join(f"{self.terms[k]}*{self._key_str(k)}" for k in keys)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.render()})"


ZERO_ELEMENT = Element()


class ColorAlgebra:
    """Graded basis, color function and bracket table.

    ``table[(x, y)]`` maps symbols to coefficients; absent pairs bracket to
    zero. The basis order given at construction is the PBW order used by
    :mod:`relpbf.uea`.
    """

    def __init__(
        self,
        basis: Sequence[str],
        grades: Mapping[str, Grade],
        table: Mapping[tuple[str, str], Mapping[str, object]],
        theta: ColorFunction = standard_theta,
        name: str = "",
    ):
        self.basis = tuple(basis)
        if len(set(self.basis)) != len(self.basis):
            raise ValueError("duplicate basis symbols")
        self.grades = {s: Grade(*grades[s]) for s in self.basis}
        self.theta = theta
        self.name = name
        known = set(self.basis)
        clean: dict[tuple[str, str], dict[str, Coefficient]] = {}
        for (x, y), res in table.items():
            for s in (x, y, *res):
                if s not in known:
                    raise KeyError(f"unknown symbol {s!r} in bracket table")
            entry = {z: Coefficient.coerce(c) for z, c in res.items()}
            entry = {z: c for z, c in entry.items() if c}
            if entry:
                clean[(x, y)] = entry
        self.table = clean
        self.index = {s: i for i, s in enumerate(self.basis)}

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def grade(self, symbol: str) -> Grade:
        return self.grades[symbol]

    def theta_of(self, x: str, y: str) -> Coefficient:
        return self.theta(self.grades[x], self.grades[y])

    def bracket_symbols(self, x: str, y: str) -> dict[str, Coefficient]:
        return self.table.get((x, y), {})

    def bracket(self, x: Element | str, y: Element | str) -> Element:
        if isinstance(x, str):
            x = Element.basis(x)
        if isinstance(y, str):
            y = Element.basis(y)
        for s in (*x.terms, *y.terms):
            if s not in self.index:
                raise KeyError(f"symbol {s!r} is not in the algebra basis")
        out: dict[str, Coefficient] = {}
        for a, ca in x.terms.items():
            for b, cb in y.terms.items():
                entry = self.table.get((a, b))
                if not entry:
                    continue
                cab = ca * cb
                for z, cz in entry.items():
                    out[z] = out.get(z, 0) + cab * cz
        return Element(out)

    def with_theta(self, theta: ColorFunction) -> "ColorAlgebra":
        return ColorAlgebra(self.basis, self.grades, self.table, theta=theta, name=self.name)

    def restrict(self, grades: Iterable[Grade]) -> tuple["ColorAlgebra", CheckResult]:
        """Subalgebra on the symbols whose grade lies in ``grades``.

        The returned CheckResult records every bracket that leaves the span.
        """
        keep_grades = {Grade(*g) for g in grades}
        keep = [s for s in self.basis if self.grades[s] in keep_grades]
        keep_set = set(keep)
        closure = CheckResult("closure")
        table = {}
        for x in keep:
            for y in keep:
                closure.checked += 1
                entry = self.table.get((x, y), {})
                outside = {z: c for z, c in entry.items() if z not in keep_set}
                if outside:
                    closure.fail((x, y), Element(outside).render())
                if entry:
                    table[(x, y)] = {z: c for z, c in entry.items() if z in keep_set}
        sub = ColorAlgebra(keep, {s: self.grades[s] for s in keep}, table, self.theta, self.name)
        return sub, closure

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "basis": list(self.basis),
            "grades": {s: list(self.grades[s]) for s in self.basis},
            "brackets": [
                {
                    "left": x,
                    "right": y,
                    "result": [
                        {"basis": z, "coeff": c.to_json()}
                        for z, c in sorted(entry.items(), key=lambda kv: self.index[kv[0]])
                    ],
                }
                for (x, y), entry in sorted(
                    self.table.items(), key=lambda kv: (self.index[kv[0][0]], self.index[kv[0][1]])
                )
            ],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "ColorAlgebra":
        basis = list(data["basis"])
        grades = {s: Grade(*data["grades"][s]) for s in basis}
        table: dict[tuple[str, str], dict[str, Coefficient]] = {}
        for rec in data.get("brackets", []):
            entry = table.setdefault((rec["left"], rec["right"]), {})
            for term in rec["result"]:
                entry[term["basis"]] = entry.get(term["basis"], 0) + Coefficient.from_json(term["coeff"])
        return cls(basis, grades, table, name=data.get("name", ""))


def check_grading(alg: ColorAlgebra) -> CheckResult:
    res = CheckResult("grading")
    for (x, y), entry in alg.table.items():
        target = alg.grades[x] + alg.grades[y]
        for z in entry:
            res.checked += 1
            if alg.grades[z] != target:
                res.fail((x, y, z), f"grade {alg.grades[z]} != {target}")
    return res


def check_antisymmetry(alg: ColorAlgebra) -> CheckResult:
    """<x,y> + theta(a,b) <y,x> == 0 for every ordered basis pair."""
    res = CheckResult("braided antisymmetry")
    for x in alg.basis:
        for y in alg.basis:
            res.checked += 1
            lhs = Element(alg.bracket_symbols(x, y))
            rhs = alg.theta_of(x, y) * Element(alg.bracket_symbols(y, x))
            residual = lhs + rhs
            if residual:
                res.fail((x, y), residual.render(alg.basis))
    return res


def check_jacobi(alg: ColorAlgebra) -> CheckResult:
    """Cyclic braided Jacobi sum for every ordered basis triple."""
    res = CheckResult("braided Jacobi")
    basis = alg.basis
    grades = alg.grades
    table = alg.table
    th = alg.theta

    inner: dict[tuple[str, str], dict[str, Coefficient]] = {}
    for y in basis:
        for z in basis:
            inner[(y, z)] = table.get((y, z), {})

    def outer(x: str, vec: Mapping[str, Coefficient], scale: Coefficient, acc: dict) -> None:
        for w, cw in vec.items():
            entry = table.get((x, w))
            if entry:
                f = scale * cw
                for z, cz in entry.items():
                    acc[z] = acc.get(z, 0) + f * cz

    for x in basis:
        a = grades[x]
        for y in basis:
            b = grades[y]
            t_ab = th(a, b)
            for z in basis:
                c = grades[z]
                res.checked += 1
                acc: dict[str, Coefficient] = {}
                outer(x, inner[(y, z)], th(c, a), acc)
                outer(z, inner[(x, y)], th(b, c), acc)
                outer(y, inner[(z, x)], t_ab, acc)
                residual = Element(acc)
                if residual:
                    res.fail((x, y, z), residual.render(basis))
    return res


def check_theta(theta: ColorFunction = standard_theta, grades: Sequence[Grade] = ALL_GRADES) -> CheckResult:
    """Bicharacter and skew-symmetry laws of a color function, exhaustively."""
    res = CheckResult("color function axioms")
    for a in grades:
        for b in grades:
            res.checked += 1
            if theta(a, b) * theta(b, a) != 1:
                res.fail((a, b), "theta(a,b)theta(b,a) != 1")
            for c in grades:
                res.checked += 1
                if theta(a + b, c) != theta(a, c) * theta(b, c):
                    res.fail((a, b, c), "theta(a+b,c) != theta(a,c)theta(b,c)")
                if theta(a, b + c) != theta(a, b) * theta(a, c):
                    res.fail((a, b, c), "theta(a,b+c) != theta(a,b)theta(a,c)")
    return res


def check_all(alg: ColorAlgebra) -> list[CheckResult]:
    return [check_grading(alg), check_antisymmetry(alg), check_jacobi(alg)]
