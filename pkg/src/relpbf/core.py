"""Z2 x Z2 grades, the color function and exact Gaussian-rational scalars."""

from __future__ import annotations

from fractions import Fraction
from typing import NamedTuple, Union


class Grade(NamedTuple):
    """Element (a1, a2) of Z2 x Z2."""

    a1: int
    a2: int

    def __add__(self, other: "Grade") -> "Grade":  # type: ignore[override]
        return Grade((self.a1 + other.a1) & 1, (self.a2 + other.a2) & 1)

    def __str__(self) -> str:
        return f"({self.a1},{self.a2})"


G00 = Grade(0, 0)
G01 = Grade(0, 1)
G10 = Grade(1, 0)
G11 = Grade(1, 1)
ALL_GRADES = (G00, G01, G10, G11)
SUPER_GRADES = (G00, G01)


def grade_add(a: Grade, b: Grade) -> Grade:
    return a + b


Rationalish = Union[int, Fraction, str]


class Coefficient:
    """Exact complex number ``re + im*i`` with rational parts.

    Instances are immutable and hashable; ints and Fractions coerce
    automatically in arithmetic.
    """

    __slots__ = ("re", "im", "_hash")

    def __init__(self, re: Rationalish = 0, im: Rationalish = 0):
        object.__setattr__(self, "re", Fraction(re))
        object.__setattr__(self, "im", Fraction(im))
        object.__setattr__(self, "_hash", None)

    @classmethod
    def _raw(cls, re: Fraction, im: Fraction) -> "Coefficient":
        obj = object.__new__(cls)
        object.__setattr__(obj, "re", re)
        object.__setattr__(obj, "im", im)
        object.__setattr__(obj, "_hash", None)
        return obj

    def __setattr__(self, name, value):
        raise AttributeError("Coefficient is immutable")

    @staticmethod
    def coerce(x: "Coefficient | Rationalish") -> "Coefficient":
        if isinstance(x, Coefficient):
            return x
        return Coefficient(x)

    def __add__(self, other):
        if not isinstance(other, Coefficient):
            if isinstance(other, (int, Fraction)):
                return Coefficient._raw(self.re + other, self.im)
            return NotImplemented
        return Coefficient._raw(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __neg__(self):
        return Coefficient._raw(-self.re, -self.im)

    def __sub__(self, other):
        if not isinstance(other, Coefficient):
            if isinstance(other, (int, Fraction)):
                return Coefficient._raw(self.re - other, self.im)
            return NotImplemented
        return Coefficient._raw(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Coefficient):
            if isinstance(other, (int, Fraction)):
                return Coefficient._raw(self.re * other, self.im * other)
            return NotImplemented
        if not self.im and not other.im:
            return Coefficient._raw(self.re * other.re, self.im)
        return Coefficient._raw(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def conjugate(self) -> "Coefficient":
        return Coefficient._raw(self.re, -self.im)

    def __truediv__(self, other):
        other = Coefficient.coerce(other)
        norm = other.re * other.re + other.im * other.im
        if not norm:
            raise ZeroDivisionError("division by zero coefficient")
        num = self * other.conjugate()
        return Coefficient._raw(num.re / norm, num.im / norm)

    def __rtruediv__(self, other):
        return Coefficient.coerce(other) / self

    def __bool__(self) -> bool:
        return bool(self.re) or bool(self.im)

    def __eq__(self, other) -> bool:
        if isinstance(other, Coefficient):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Fraction)):
            return not self.im and self.re == other
        return NotImplemented

    def __hash__(self) -> int:
        h = self._hash
        if h is None:
            h = hash(self.re) if not self.im else hash((self.re, self.im))
            object.__setattr__(self, "_hash", h)
        return h

    def __repr__(self) -> str:
        return f"Coefficient({self})"

    def __str__(self) -> str:
        if not self.im:
            return str(self.re)
        if not self.re:
            return f"{self.im}i"
        sign = "+" if self.im > 0 else "-"
        return f"({self.re}{sign}{abs(self.im)}i)"

    def to_json(self) -> dict:
        return {
            "re_num": self.re.numerator,
            "re_den": self.re.denominator,
            "im_num": self.im.numerator,
            "im_den": self.im.denominator,
        }

    @classmethod
    def from_json(cls, data) -> "Coefficient":
        """Accepts the four-integer object form, or a bare int / "p/q" string."""
        if isinstance(data, dict):
            re_den = int(data.get("re_den", 1))
            im_den = int(data.get("im_den", 1))
            if re_den == 0 or im_den == 0:
                raise ValueError(f"zero denominator in coefficient {data!r}")
            return cls(
                Fraction(int(data.get("re_num", 0)), re_den),
                Fraction(int(data.get("im_num", 0)), im_den),
            )
        if isinstance(data, bool) or isinstance(data, float):
            raise ValueError(f"coefficient must be exact, got {data!r}")
        return cls(Fraction(data))


ZERO = Coefficient(0)
ONE = Coefficient(1)
MINUS_ONE = Coefficient(-1)
HALF = Coefficient(Fraction(1, 2))
I = Coefficient(0, 1)


def theta(a: Grade, b: Grade) -> Coefficient:
    """Color function (-1)**(a1*b1 + a2*b2)."""
    return MINUS_ONE if (a[0] * b[0] + a[1] * b[1]) & 1 else ONE


def theta_sign(a: Grade, b: Grade) -> int:
    """Same as :func:`theta` but as a plain int, for inner loops."""
    return -1 if (a[0] * b[0] + a[1] * b[1]) & 1 else 1


def parity(a: Grade) -> int:
    """Z2 parity of a grade in the subgroup {(0,0), (0,1)}."""
    if a not in SUPER_GRADES:
        raise ValueError(f"grade {a} lies outside the subgroup {{(0,0),(0,1)}}")
    return a[1]


def theta_restricted_is_super(a: Grade, b: Grade) -> bool:
    """True iff theta agrees with the super sign (-1)**(p(a)p(b)) on (a, b)."""
    pa, pb = parity(a), parity(b)
    return theta(a, b) == (-1) ** (pa * pb)
