"""Element expressions: parsing, evaluation, printing and JSON.

Grammar::

    element := term ('+' term)*  |  '0'
    term    := [coeff '*'] factor+
    coeff   := '(' rat [',' rat] ')'          # a or a + b*sqrt(q)
    factor  := 'K[' ints ']' | 'Ks[' ints ']' | 'u[' iso [';' iso] ']'

A term is the product of its factors in the chosen algebra, so
``u[M]K[1]`` and ``K[1]u[M]`` differ by a power of v where the algebra
says they should.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from . import dh1 as D1
from . import dh2 as D2
from . import hall_classical as HC
from .catalog import Catalog
from .coeff import Coeff
from .element import LinComb
from .errors import ParseError, ValidationError
from .rep import ZERO, IsoClass, parse_isoclass

ALGEBRAS = ("rh", "dh2", "dh2red", "dh1", "dhz1")

_RAT = re.compile(r"\s*(-?\d+(?:/\d+)?)\s*")
_INT = re.compile(r"\s*(-?\d+)\s*")


@dataclass(frozen=True)
class Factor:
    kind: str  # "K", "Ks" or "u"
    vec: tuple = ()
    m0: IsoClass = ZERO
    m1: IsoClass | None = None


@dataclass(frozen=True)
class Term:
    coeff: tuple  # (a, b) rationals
    factors: tuple


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, msg: str, pos: int | None = None):
        raise ParseError(msg, self.text, self.pos if pos is None else pos)

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self, s: str) -> bool:
        self.skip()
        return self.text.startswith(s, self.pos)

    def expect(self, s: str):
        if not self.peek(s):
            self.error(f"expected {s!r}")
        self.pos += len(s)

    def element(self) -> list:
        self.skip()
        if self.text[self.pos:].strip() == "0":
            return []
        terms = [self.term()]
        while self.peek("+"):
            self.pos += 1
            terms.append(self.term())
        self.skip()
        if self.pos != len(self.text):
            self.error("unexpected trailing input")
        return terms

    def term(self) -> Term:
        coeff = (Fraction(1), Fraction(0))
        if self.peek("("):
            coeff = self.coeff()
            self.expect("*")
        factors = []
        while True:
            self.skip()
            if self.peek("Ks["):
                self.pos += 3
                factors.append(Factor("Ks", self.ints()))
            elif self.peek("K["):
                self.pos += 2
                factors.append(Factor("K", self.ints()))
            elif self.peek("u["):
                self.pos += 2
                factors.append(self.ufactor())
            else:
                break
        if not factors:
            self.error("expected a factor K[..], Ks[..] or u[..]")
        return Term(coeff, tuple(factors))

    def coeff(self) -> tuple:
        self.expect("(")
        a = self.rat()
        b = Fraction(0)
        if self.peek(","):
            self.pos += 1
            b = self.rat()
        self.expect(")")
        return a, b

    def rat(self) -> Fraction:
        m = _RAT.match(self.text, self.pos)
        if not m:
            self.error("expected a rational number")
        self.pos = m.end()
        try:
            return Fraction(m.group(1))
        except ZeroDivisionError:
            self.error("zero denominator", m.start(1))

    def ints(self) -> tuple:
        out = []
        while True:
            m = _INT.match(self.text, self.pos)
            if not m:
                self.error("expected an integer")
            out.append(int(m.group(1)))
            self.pos = m.end()
            if self.peek(","):
                self.pos += 1
                continue
            self.expect("]")
            return tuple(out)

    def _iso_until(self, stops: str) -> tuple[IsoClass, int]:
        start = self.pos
        depth = 0
        while self.pos < len(self.text):
            ch = self.text[self.pos]
            if ch == "(":
                depth += 1
            elif ch == ")":
                depth -= 1
            elif depth == 0 and ch in stops:
                break
            self.pos += 1
        else:
            self.error("unterminated u[...] factor", start)
        chunk = self.text[start:self.pos]
        try:
            return parse_isoclass(chunk), start
        except ParseError:
            self.error(f"malformed iso-class literal {chunk.strip()!r}", start)

    def ufactor(self) -> Factor:
        m0, _ = self._iso_until(";]")
        m1 = None
        if self.text[self.pos] == ";":
            self.pos += 1
            m1, _ = self._iso_until("]")
        self.expect("]")
        return Factor("u", (), m0, m1)


def parse_element(text: str) -> list:
    """Parse an element expression into a list of :class:`Term`."""
    return _Parser(text).element()


# -- evaluation ---------------------------------------------------------------

def _check_vec(cat: Catalog, vec, what: str, text: str):
    if len(vec) != cat.quiver.n:
        raise ValidationError(f"{what}[...] needs {cat.quiver.n} entries in {text!r}")


def _check_class(cat: Catalog, c: IsoClass):
    if c.max_vertex() > cat.quiver.n:
        raise ValidationError(f"{c} does not live on {cat.quiver}")
    cat.require(c)


def _factor_element(cat: Catalog, algebra: str, f: Factor, text: str) -> LinComb:
    p = cat.p
    z = cat.quiver.zero()
    if f.kind in ("K", "Ks"):
        _check_vec(cat, f.vec, f.kind, text)
        if algebra in ("dh1", "dhz1"):
            raise ValidationError(f"{algebra} has no {f.kind} generators")
        if algebra == "rh":
            if f.kind == "Ks":
                raise ValidationError("rh has no Ks generators")
            return LinComb.monomial(p, (ZERO, f.vec))
        if algebra == "dh2red":
            g = f.vec if f.kind == "K" else tuple(-x for x in f.vec)
            return LinComb.monomial(p, (g, ZERO, ZERO))
        key = (f.vec, z, ZERO, ZERO) if f.kind == "K" else (z, f.vec, ZERO, ZERO)
        return LinComb.monomial(p, key)
    _check_class(cat, f.m0)
    if f.m1 is not None:
        _check_class(cat, f.m1)
    if algebra in ("rh", "dh1", "dhz1"):
        if f.m1 is not None:
            raise ValidationError(f"{algebra} has no degree-1 part; write u[M]")
        return LinComb.monomial(p, (f.m0, z) if algebra == "rh" else f.m0)
    m1 = ZERO if f.m1 is None else f.m1
    if algebra == "dh2red":
        return LinComb.monomial(p, (z, f.m0, m1))
    return LinComb.monomial(p, (z, z, f.m0, m1))


def product(cat: Catalog, algebra: str, x: LinComb, y: LinComb) -> LinComb:
    if algebra == "rh":
        return HC.rh_product(cat, x, y)
    if algebra == "dh2":
        return D2.dh2_product(cat, x, y)
    if algebra == "dh2red":
        return D2.reduced_product(cat, x, y)
    if algebra == "dh1":
        return D1.dh1_product(cat, x, y)
    if algebra == "dhz1":
        return D1.dhz1_product(cat, x, y)
    raise ValidationError(f"unknown algebra {algebra!r}")


def unit(cat: Catalog, algebra: str) -> LinComb:
    z = cat.quiver.zero()
    keys = {"rh": (ZERO, z), "dh2": (z, z, ZERO, ZERO), "dh2red": (z, ZERO, ZERO), "dh1": ZERO, "dhz1": ZERO}
    return LinComb.monomial(cat.p, keys[algebra])


def evaluate(cat: Catalog, algebra: str, terms, text: str = "") -> LinComb:
    if algebra not in ALGEBRAS:
        raise ValidationError(f"unknown algebra {algebra!r}")
    out = LinComb(cat.p)
    for t in terms:
        val = unit(cat, algebra)
        for f in t.factors:
            val = product(cat, algebra, val, _factor_element(cat, algebra, f, text))
        out = out + val.scale(Coeff(t.coeff[0], t.coeff[1], cat.p))
    return out


def parse_and_evaluate(cat: Catalog, algebra: str, text: str) -> LinComb:
    return evaluate(cat, algebra, parse_element(text), text)


# -- printing -------------------------------------------------------------------

def _vec(v) -> str:
    return ",".join(str(x) for x in v)


def _coeff_prefix(c: Coeff) -> str:
    if c == 1:
        return ""
    return f"{c}*"


def format_key(algebra: str, key) -> str:
    if algebra in ("dh1", "dhz1"):
        return f"u[{key}]"
    if algebra == "rh":
        m, alpha = key
        parts = []
        if m or not any(alpha):
            parts.append(f"u[{m}]")
        if any(alpha):
            parts.append(f"K[{_vec(alpha)}]")
        return "".join(parts)
    if algebra == "dh2red":
        gamma, m0, m1 = key
        alpha, beta = gamma, tuple(0 for _ in gamma)
    else:
        alpha, beta, m0, m1 = key
    parts = []
    if any(alpha):
        parts.append(f"K[{_vec(alpha)}]")
    if any(beta):
        parts.append(f"Ks[{_vec(beta)}]")
    if m0 or m1 or not parts:
        parts.append(f"u[{m0};{m1}]")
    return "".join(parts)


def format_element(algebra: str, x: LinComb) -> str:
    if not x:
        return "0"
    return " + ".join(_coeff_prefix(c) + format_key(algebra, k) for k, c in x.items())


# -- JSON -------------------------------------------------------------------------

def key_to_json(algebra: str, key) -> dict:
    if algebra in ("dh1", "dhz1"):
        return {"m0": key.to_json()}
    if algebra == "rh":
        m, alpha = key
        return {"k": list(alpha), "m0": m.to_json()}
    if algebra == "dh2red":
        gamma, m0, m1 = key
        return {"k": list(gamma), "m0": m0.to_json(), "m1": m1.to_json()}
    alpha, beta, m0, m1 = key
    return {"k": list(alpha), "ks": list(beta), "m0": m0.to_json(), "m1": m1.to_json()}


def key_from_json(algebra: str, data: dict):
    m0 = IsoClass.from_json(data["m0"])
    if algebra in ("dh1", "dhz1"):
        return m0
    if algebra == "rh":
        return (m0, tuple(data["k"]))
    m1 = IsoClass.from_json(data["m1"])
    if algebra == "dh2red":
        return (tuple(data["k"]), m0, m1)
    return (tuple(data["k"]), tuple(data["ks"]), m0, m1)


def element_to_json(algebra: str, x: LinComb) -> dict:
    terms = []
    for k, c in x.items():
        t = key_to_json(algebra, k)
        t["coeff"] = c.to_json()
        terms.append(t)
    return {"terms": terms}


def element_from_json(algebra: str, data: dict, q: int) -> LinComb:
    out = LinComb(q)
    for t in data["terms"]:
        out.add_term(key_from_json(algebra, t), Coeff.from_json(t["coeff"], q))
    return out


def generators(cat: Catalog, algebra: str) -> list:
    """Standard basis keys without K-parts, for multiplication tables."""
    z = cat.quiver.zero()
    cl = cat.classes
    if algebra in ("dh1", "dhz1"):
        return list(cl)
    if algebra == "rh":
        return [(m, z) for m in cl]
    if algebra == "dh2red":
        return [(z, a, b) for a in cl for b in cl]
    return [(z, z, a, b) for a in cl for b in cl]
