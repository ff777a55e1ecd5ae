"""Finitely supported linear combinations with Coeff values.

The three algebra modules use the same container with different key
shapes: (M, alpha) for the Hall algebra, (alpha, beta, m0, m1) for the
2-periodic algebra and a bare IsoClass for the 1-periodic ones.
"""

from __future__ import annotations

from .coeff import Coeff


class LinComb:
    __slots__ = ("q", "terms")

    def __init__(self, q: int, terms=None):
        self.q = q
        self.terms: dict = {}
        if terms:
            for k, c in (terms.items() if isinstance(terms, dict) else terms):
                self.add_term(k, c)

    @classmethod
    def monomial(cls, q: int, key, coeff=1) -> "LinComb":
        return cls(q, [(key, coeff)])

    def add_term(self, key, c) -> None:
        """In-place ``self += c * key``; zero results are dropped."""
        if not isinstance(c, Coeff):
            c = Coeff(c, 0, self.q)
        if not c:
            return
        old = self.terms.get(key)
        new = c if old is None else old + c
        if new:
            self.terms[key] = new
        else:
            del self.terms[key]

    def copy(self) -> "LinComb":
        out = LinComb(self.q)
        out.terms = dict(self.terms)
        return out

    def items(self):
        return sorted(self.terms.items(), key=lambda kv: kv[0])

    def keys(self):
        return sorted(self.terms)

    def coeff(self, key) -> Coeff:
        return self.terms.get(key, Coeff(0, 0, self.q))

    def __len__(self):
        return len(self.terms)

    def __bool__(self):
        return bool(self.terms)

    def __add__(self, other: "LinComb") -> "LinComb":
        out = self.copy()
        for k, c in other.terms.items():
            out.add_term(k, c)
        return out

    def __neg__(self) -> "LinComb":
        return LinComb(self.q, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other: "LinComb") -> "LinComb":
        return self + (-other)

    def scale(self, c) -> "LinComb":
        out = LinComb(self.q)
        for k, x in self.terms.items():
            out.add_term(k, x * c)
        return out

    def __rmul__(self, c):
        return self.scale(c)

    def __eq__(self, other):
        if not isinstance(other, LinComb):
            return NotImplemented
        return self.q == other.q and self.terms == other.terms

    def __hash__(self):
        return hash(tuple(self.items()))

    def __repr__(self):
        inner = ", ".join(f"{k!r}: {c}" for k, c in self.items())
        return f"LinComb(q={self.q}, {{{inner}}})"

    def map_keys(self, fn) -> "LinComb":
        out = LinComb(self.q)
        for k, c in self.terms.items():
            out.add_term(fn(k), c)
        return out


def bilinear(f, x: LinComb, y: LinComb) -> LinComb:
    """Extend ``f(key_x, key_y) -> LinComb`` bilinearly."""
    out = LinComb(x.q)
    for kx, cx in x.terms.items():
        for ky, cy in y.terms.items():
            c = cx * cy
            for k, z in f(kx, ky).terms.items():
                out.add_term(k, z * c)
    return out
