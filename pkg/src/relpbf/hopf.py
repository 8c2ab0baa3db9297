"""Braided tensor product, coproduct, counit and antipode on U(L).

All maps act on words letter by letter (generators are primitive,
S(x) = -x, eps(x) = 0) and results are brought to PBW normal form, so an
identity holds in U(L) exactly when both sides have equal normal forms.
"""

from __future__ import annotations

from typing import Callable

from .colorlie import ColorAlgebra, Element
from .core import ONE, ZERO, Coefficient
from .report import CheckResult
from .uea import DEFAULT_WORD_CAP, UeaElement, Word, defining_relation, straightener, word_grade


class TensorElement(Element):
    """Sparse map (word, word) -> Coefficient, factors in normal form."""

    __slots__ = ()

    @classmethod
    def pure(cls, left: UeaElement, right: UeaElement) -> "TensorElement":
        return cls(
            {(w1, w2): c1 * c2 for w1, c1 in left.terms.items() for w2, c2 in right.terms.items()}
        )

    @classmethod
    def one(cls) -> "TensorElement":
        return cls({((), ()): ONE})

    def _key_str(self, key) -> str:
        return " (x) ".join("*".join(w) if w else "1" for w in key)


class Hopf:
    """Structure maps of U(L) for one color algebra, with caching."""

    def __init__(self, alg: ColorAlgebra, word_cap: int = DEFAULT_WORD_CAP):
        self.alg = alg
        self.word_cap = word_cap
        self.st = straightener(alg, word_cap)
        self._delta_cache: dict[Word, TensorElement] = {}

    def normalize(self, e) -> UeaElement:
        return self.st.normalize(e)

    def multiply(self, a: UeaElement, b: UeaElement) -> UeaElement:
        return self.st.multiply(a, b)

    def grade(self, word: Word):
        return word_grade(self.alg, word)

    # -- braided tensor product ------------------------------------------

    def braided_multiply(self, t1: TensorElement, t2: TensorElement) -> TensorElement:
        """(x (x) y)(z (x) w) = theta(deg y, deg z) xz (x) yw."""
        acc: dict[tuple[Word, Word], Coefficient] = {}
        nw = self.st.normal_word
        th = self.alg.theta
        for (x, y), c1 in t1.terms.items():
            gy = self.grade(y)
            for (z, w), c2 in t2.terms.items():
                c = c1 * c2 * th(gy, self.grade(z))
                left = nw(x + z)
                right = nw(y + w)
                for lw, lc in left.items():
                    for rw, rc in right.items():
                        key = (lw, rw)
                        acc[key] = acc.get(key, 0) + c * lc * rc
        return TensorElement(acc)

    # -- coproduct -------------------------------------------------------

    def coproduct_word(self, word: Word) -> TensorElement:
        word = tuple(word)
        cached = self._delta_cache.get(word)
        if cached is not None:
            return cached
        if not word:
            result = TensorElement.one()
        elif len(word) == 1:
            s = word[0]
            if s not in self.alg.index:
                raise KeyError(f"symbol {s!r} is not in the algebra basis")
            result = TensorElement({((), (s,)): ONE, ((s,), ()): ONE})
        else:
            result = self.braided_multiply(self.coproduct_word(word[:-1]), self.coproduct_word(word[-1:]))
        self._delta_cache[word] = result
        return result

    def coproduct(self, e: UeaElement) -> TensorElement:
        acc = TensorElement()
        for w, c in e.terms.items():
            if len(w) > self.word_cap:
                raise ValueError(f"word of length {len(w)} exceeds cap {self.word_cap}")
            acc = acc + c * self.coproduct_word(w)
        return acc

    # -- antipode and counit --------------------------------------------

    def antipode_word(self, word: Word) -> UeaElement:
        """S(x1...xk) = (-1)^k prod_{i<j} theta(g_i, g_j) xk...x1."""
        grades = [self.alg.grades[s] for s in word]
        sign = ONE if len(word) % 2 == 0 else -ONE
        for i in range(len(word)):
            for j in range(i + 1, len(word)):
                sign = sign * self.alg.theta(grades[i], grades[j])
        return self.normalize({tuple(reversed(word)): sign})

    def antipode(self, e: UeaElement) -> UeaElement:
        acc = UeaElement()
        for w, c in e.terms.items():
            acc = acc + c * self.antipode_word(w)
        return acc

    def counit(self, e: UeaElement) -> Coefficient:
        """Coefficient of the empty word in the normal form."""
        return self.normalize(e).terms.get((), ZERO)

    # -- tensor maps -----------------------------------------------------

    def tensor_apply(
        self,
        t: TensorElement,
        left: Callable[[UeaElement], Element],
        right: Callable[[UeaElement], Element],
    ) -> Element:
        """(f (x) g)(t) for even maps f, g; keys are tuples of words."""
        acc: dict = {}
        for (w1, w2), c in t.terms.items():
            a = left(UeaElement({w1: ONE}))
            b = right(UeaElement({w2: ONE}))
            for ka, ca in _as_terms(a).items():
                for kb, cb in _as_terms(b).items():
                    key = ka + kb
                    acc[key] = acc.get(key, 0) + c * ca * cb
        return Element(acc)

    def mult_after(self, t: TensorElement, left: Callable[[UeaElement], UeaElement]) -> UeaElement:
        """m((f (x) id)(t))."""
        acc = UeaElement()
        for (w1, w2), c in t.terms.items():
            acc = acc + c * self.multiply(left(UeaElement({w1: ONE})), UeaElement({w2: ONE}))
        return acc


def _as_terms(x) -> dict:
    """Terms keyed by tuples of words: scalar -> (), U(L) -> (w,), tensor -> (w1, w2)."""
    if isinstance(x, TensorElement):
        return x.terms
    if isinstance(x, UeaElement):
        return {(w,): c for w, c in x.terms.items()}
    c = Coefficient.coerce(x)
    return {(): c} if c else {}


def braided_multiply(alg: ColorAlgebra, t1: TensorElement, t2: TensorElement) -> TensorElement:
    return Hopf(alg).braided_multiply(t1, t2)


def coproduct(alg: ColorAlgebra, e: UeaElement) -> TensorElement:
    return Hopf(alg).coproduct(e)


def antipode(alg: ColorAlgebra, e: UeaElement) -> UeaElement:
    return Hopf(alg).antipode(e)


def counit(alg: ColorAlgebra, e: UeaElement) -> Coefficient:
    return Hopf(alg).counit(e)


def check_hopf_axioms(alg: ColorAlgebra, max_len: int, word_cap: int = DEFAULT_WORD_CAP) -> list[CheckResult]:
    """Coassociativity, counit, antipode and relation compatibility on normal words."""
    if max_len < 0 or max_len > word_cap:
        raise ValueError(f"max_len must lie in [0, {word_cap}], got {max_len}")
    h = Hopf(alg, word_cap)
    words = list(h.st.normal_words(max_len))

    coassoc = CheckResult("coassociativity (D (x) id) D = (id (x) D) D")
    counit_l = CheckResult("left counit (eps (x) id) D = id")
    counit_r = CheckResult("right counit (id (x) eps) D = id")
    anti_l = CheckResult("antipode m(S (x) id) D = eps 1")
    anti_r = CheckResult("antipode m(id (x) S) D = eps 1")
    s_squared = CheckResult("S o S = id")

    for w in words:
        e = UeaElement({w: ONE})
        d = h.coproduct(e)
        for r in (coassoc, counit_l, counit_r, anti_l, anti_r, s_squared):
            r.checked += 1
        lhs = h.tensor_apply(d, h.coproduct, lambda u: u)
        rhs = h.tensor_apply(d, lambda u: u, h.coproduct)
        diff = lhs - rhs
        if diff:
            coassoc.fail((_w(w),), diff.render())
        left = h.tensor_apply(d, h.counit, lambda u: u)
        right = h.tensor_apply(d, lambda u: u, h.counit)
        target = Element({(w,): ONE})
        if left != target:
            counit_l.fail((_w(w),), (left - target).render())
        if right != target:
            counit_r.fail((_w(w),), (right - target).render())
        unit = UeaElement.scalar(h.counit(e))
        a1 = h.mult_after(d, h.antipode)
        if a1 != unit:
            anti_l.fail((_w(w),), (a1 - unit).render())
        a2 = UeaElement()
        for (w1, w2), c in d.terms.items():
            a2 = a2 + c * h.multiply(UeaElement({w1: ONE}), h.antipode_word(w2))
        if a2 != unit:
            anti_r.fail((_w(w),), (a2 - unit).render())
        ss = h.antipode(h.antipode(e))
        if ss != e:
            s_squared.fail((_w(w),), (ss - e).render())

    rel_delta = CheckResult("coproduct kills x y - theta y x - <x,y>")
    rel_s = CheckResult("antipode kills x y - theta y x - <x,y>")
    mult = CheckResult("coproduct multiplicative on basis pairs")
    for x in alg.basis:
        for y in alg.basis:
            rel = defining_relation(alg, x, y)
            rel_delta.checked += 1
            rel_s.checked += 1
            mult.checked += 1
            dr = h.coproduct(rel)
            if dr:
                rel_delta.fail((x, y), dr.render())
            sr = h.antipode(rel)
            if sr:
                rel_s.fail((x, y), sr.render())
            lhs = h.coproduct(h.multiply(UeaElement.word(x), UeaElement.word(y)))
            rhs = h.braided_multiply(h.coproduct_word((x,)), h.coproduct_word((y,)))
            if lhs != rhs:
                mult.fail((x, y), (lhs - rhs).render())
    return [coassoc, counit_l, counit_r, anti_l, anti_r, s_squared, rel_delta, rel_s, mult]


def check_primitive(alg: ColorAlgebra, symbols=None) -> CheckResult:
    """D(x) = 1 (x) x + x (x) 1, S(x) = -x, eps(x) = 0 for basis symbols."""
    h = Hopf(alg)
    res = CheckResult("primitive generators")
    for s in symbols or alg.basis:
        res.checked += 1
        x = UeaElement.word(s)
        target = TensorElement({((), (s,)): ONE, ((s,), ()): ONE})
        d = h.coproduct(x)
        if d != target:
            res.fail((s,), "coproduct: " + (d - target).render())
        if h.antipode(x) != -x:
            res.fail((s,), "antipode: " + (h.antipode(x) + x).render())
        if h.counit(x):
            res.fail((s,), f"counit {h.counit(x)}")
    return res


def _w(word: Word) -> str:
    return "*".join(word) if word else "1"
