"""Free associative algebra over opaque integer symbols.

Words are tuples of ints, polynomials are sparse maps word -> Coefficient.
Used to expand nested (anti)commutators and to confirm the four
quadruple-bracket identities that break outer brackets of bilinears.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from .core import ONE, Coefficient

FreeWord = tuple  # tuple[int, ...]; () is the unit


class FreePoly:
    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[FreeWord, Coefficient] | None = None):
        clean: dict[FreeWord, Coefficient] = {}
        for w, c in (terms or {}).items():
            c = Coefficient.coerce(c)
            if c:
                clean[tuple(w)] = c
        self.terms = clean

    @classmethod
    def symbol(cls, s: int) -> "FreePoly":
        return cls({(s,): ONE})

    @classmethod
    def scalar(cls, c) -> "FreePoly":
        return cls({(): c})

    @classmethod
    def one(cls) -> "FreePoly":
        return cls({(): ONE})

    def __add__(self, other: "FreePoly") -> "FreePoly":
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out.get(w, 0) + c
        return FreePoly(out)

    def __neg__(self) -> "FreePoly":
        return FreePoly({w: -c for w, c in self.terms.items()})

    def __sub__(self, other: "FreePoly") -> "FreePoly":
        return self + (-other)

    def __mul__(self, other) -> "FreePoly":
        if not isinstance(other, FreePoly):
            c = Coefficient.coerce(other)
            return FreePoly({w: c * v for w, v in self.terms.items()})
        out: dict[FreeWord, Coefficient] = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = w1 + w2
                out[w] = out.get(w, 0) + c1 * c2
        return FreePoly(out)

    def __rmul__(self, scalar) -> "FreePoly":
        c = Coefficient.coerce(scalar)
        return FreePoly({w: c * v for w, v in self.terms.items()})

    def __eq__(self, other) -> bool:
        return isinstance(other, FreePoly) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        return max((len(w) for w in self.terms), default=-1)

    def substitute(self, images: Mapping[int, "FreePoly"]) -> "FreePoly":
        """Algebra map sending each symbol s to ``images[s]`` (identity if absent)."""
        out = FreePoly()
        for w, c in self.terms.items():
            term = FreePoly.scalar(c)
            for s in w:
                term = term * images.get(s, FreePoly.symbol(s))
            out = out + term
        return out

    def render(self, names: Sequence[str] | Mapping[int, str] | None = None) -> str:
        if not self.terms:
            return "0"

        def name(s):
            return names[s] if names is not None else f"x{s}"

        parts = []
        for w in sorted(self.terms, key=lambda w: (len(w), w)):
            c = self.terms[w]
            mono = "*".join(name(s) for s in w) or "1"
            parts.append(f"{c}*{mono}" if w else str(c))
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"FreePoly({self.render()})"


def commutator(x: FreePoly, y: FreePoly) -> FreePoly:
    return x * y - y * x


def anticommutator(x: FreePoly, y: FreePoly) -> FreePoly:
    return x * y + y * x


# (description, lhs, rhs); each side is a function of four operands.
QUADRUPLE_IDENTITIES = (
    (
        "{{A1,A2},{A3,A4}} = {A1,{A2,{A3,A4}}} + [A2,[A1,{A3,A4}]]",
        lambda a1, a2, a3, a4: anticommutator(anticommutator(a1, a2), anticommutator(a3, a4)),
        lambda a1, a2, a3, a4: anticommutator(a1, anticommutator(a2, anticommutator(a3, a4)))
        + commutator(a2, commutator(a1, anticommutator(a3, a4))),
    ),
    (
        "[{A1,A2},[A3,A4]] = {A1,[A2,[A3,A4]]} + {A2,[A1,[A3,A4]]}",
        lambda a1, a2, a3, a4: commutator(anticommutator(a1, a2), commutator(a3, a4)),
        lambda a1, a2, a3, a4: anticommutator(a1, commutator(a2, commutator(a3, a4)))
        + anticommutator(a2, commutator(a1, commutator(a3, a4))),
    ),
    (
        "[{A1,A2},{A3,A4}] = {A1,[A2,{A3,A4}]} + {A2,[A1,{A3,A4}]}",
        lambda a1, a2, a3, a4: commutator(anticommutator(a1, a2), anticommutator(a3, a4)),
        lambda a1, a2, a3, a4: anticommutator(a1, commutator(a2, anticommutator(a3, a4)))
        + anticommutator(a2, commutator(a1, anticommutator(a3, a4))),
    ),
    (
        "[[A1,A2],[A3,A4]] = [A1,[A2,[A3,A4]]] - [A2,[A1,[A3,A4]]]",
        lambda a1, a2, a3, a4: commutator(commutator(a1, a2), commutator(a3, a4)),
        lambda a1, a2, a3, a4: commutator(a1, commutator(a2, commutator(a3, a4)))
        - commutator(a2, commutator(a1, commutator(a3, a4))),
    ),
)

SYMBOL_NAMES = ("A1", "A2", "A3", "A4")


@dataclass(frozen=True)
class IdentityResult:
    description: str
    lhs: FreePoly
    rhs: FreePoly
    difference: FreePoly

    @property
    def passed(self) -> bool:
        return self.difference.is_zero()


def verify_quadruple_identities(operands: Sequence[FreePoly] | None = None) -> list[IdentityResult]:
    """Expand both sides of each identity and return lhs - rhs.

    ``operands`` defaults to four distinct free symbols; passing repeated or
    composite polynomials specializes the identities.
    """
    if operands is None:
        operands = [FreePoly.symbol(i) for i in range(4)]
    results = []
    for desc, lhs_fn, rhs_fn in QUADRUPLE_IDENTITIES:
        lhs = lhs_fn(*operands)
        rhs = rhs_fn(*operands)
        results.append(
            IdentityResult(
                description=desc,
                lhs=lhs,
                rhs=rhs,
                difference=lhs - rhs,
            )
        )
    return results
