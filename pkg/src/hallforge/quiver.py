"""Type-A quivers, dimension vectors and the Euler forms.

The Grothendieck group of rep(Q) is identified with Z^n through dimension
vectors, so classes alpha, beta used for the K-elements are plain integer
tuples of length n.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import ParseError, ValidationError

_SPEC = re.compile(r"a(\d+)(?::([<>]*))?\Z")


@dataclass(frozen=True)
class Quiver:
    """A_n line with vertices 1..n and one arrow between i and i+1.

    ``arrows[i]`` is the (source, target) pair for the edge {i+1, i+2}.
    """

    n: int
    arrows: tuple

    def __post_init__(self):
        if self.n < 1:
            raise ValidationError("quiver needs at least one vertex")
        if len(self.arrows) != self.n - 1:
            raise ValidationError("type A_n needs exactly n-1 arrows")
        for i, (s, t) in enumerate(self.arrows, start=1):
            if {s, t} != {i, i + 1}:
                raise ValidationError(f"arrow {s}->{t} does not join consecutive vertices {i}, {i + 1}")

    @property
    def dirs(self) -> str:
        return "".join(">" if s < t else "<" for s, t in self.arrows)

    @property
    def spec(self) -> str:
        return f"a{self.n}:{self.dirs}" if self.n > 1 else "a1"

    def is_equioriented(self) -> bool:
        return len(set(self.dirs)) <= 1

    def zero(self) -> tuple:
        return (0,) * self.n

    def simple(self, i: int) -> tuple:
        return tuple(int(j == i) for j in range(1, self.n + 1))

    def __str__(self):
        return self.spec


def parse_quiver(spec: str) -> Quiver:
    """Parse ``a<n>`` or ``a<n>:<dirs>``; ``>`` is i -> i+1, ``<`` is i <- i+1."""
    text = spec.strip()
    m = _SPEC.match(text)
    if not m:
        raise ParseError("malformed quiver spec", text, 0)
    n = int(m.group(1))
    if n < 1:
        raise ValidationError(f"quiver needs at least one vertex, got a{n}")
    dirs = m.group(2)
    if dirs is None or dirs == "":
        dirs = ">" * (n - 1)
    if len(dirs) != n - 1:
        raise ParseError(f"a{n} needs {n - 1} arrow directions, got {len(dirs)}", text, len(text))
    arrows = tuple((i, i + 1) if d == ">" else (i + 1, i) for i, d in enumerate(dirs, start=1))
    return Quiver(n, arrows)


def _check(q: Quiver, d, e):
    if len(d) != q.n or len(e) != q.n:
        raise ValidationError(f"dimension vectors must have length {q.n}")


def euler_form(q: Quiver, d, e) -> int:
    """<d, e> = sum_i d_i e_i - sum_{s->t} d_s e_t."""
    _check(q, d, e)
    out = sum(x * y for x, y in zip(d, e))
    for s, t in q.arrows:
        out -= d[s - 1] * e[t - 1]
    return out


def symmetric_form(q: Quiver, d, e) -> int:
    return euler_form(q, d, e) + euler_form(q, e, d)


def vadd(*vs) -> tuple:
    return tuple(sum(xs) for xs in zip(*vs))


def vsub(a, b) -> tuple:
    return tuple(x - y for x, y in zip(a, b))


def vneg(a) -> tuple:
    return tuple(-x for x in a)


def vle(a, b) -> bool:
    return all(x <= y for x, y in zip(a, b))


def nonneg(a) -> bool:
    return all(x >= 0 for x in a)
