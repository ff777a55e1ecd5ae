"""Exact linear algebra over prime fields F_p.

Matrices are plain lists of rows with entries in ``range(p)``; vectors are
lists (or tuples) of residues.  Subspaces are stored by their reduced
row-echelon basis, which makes equality a bit-exact comparison.

Every exhaustive loop checks the global enumeration limit first, see
:func:`get_limit`.
"""

from __future__ import annotations

import contextlib
import itertools
import os
from dataclasses import dataclass

from .errors import ResourceLimitError, ValidationError

DEFAULT_LIMIT = 2**20

_limit_override: int | None = None


def default_limit() -> int:
    env = os.environ.get("HALLFORGE_LIMIT")
    if env:
        return int(env)
    return DEFAULT_LIMIT


def get_limit() -> int:
    """Current cap on the number of elements any exhaustive loop may visit."""
    if _limit_override is not None:
        return _limit_override
    return default_limit()


def set_limit(limit: int | None) -> None:
    """Set the global enumeration cap; ``None`` restores the default."""
    global _limit_override
    if limit is not None and limit < 1:
        raise ValidationError("enumeration limit must be positive")
    _limit_override = limit


@contextlib.contextmanager
def enumeration_limit(limit: int):
    global _limit_override
    saved = _limit_override
    set_limit(limit)
    try:
        yield
    finally:
        _limit_override = saved


def check_limit(count: int, what: str) -> None:
    limit = get_limit()
    if count > limit:
        raise ResourceLimitError(f"{what}: {count} elements exceeds enumeration limit {limit}")


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class PrimeField:
    """The field F_p; only prime orders are supported."""

    p: int

    def __post_init__(self):
        if not isinstance(self.p, int) or not is_prime(self.p):
            raise ValidationError(f"field order must be prime, got {self.p!r}")

    def inv(self, x: int) -> int:
        return pow(x % self.p, -1, self.p)

    def gl_order(self, n: int) -> int:
        """|GL_n(F_p)|."""
        out = 1
        for i in range(n):
            out *= self.p**n - self.p**i
        return out


@dataclass(frozen=True)
class Subspace:
    ambient_dim: int
    basis: tuple  # rows of the reduced row-echelon basis, no zero rows

    @property
    def dim(self) -> int:
        return len(self.basis)

    def pivots(self) -> list[int]:
        return [_leading(row) for row in self.basis]


def _leading(row) -> int:
    for j, x in enumerate(row):
        if x:
            return j
    return -1


def zeros(rows: int, cols: int) -> list[list[int]]:
    return [[0] * cols for _ in range(rows)]


def identity(n: int) -> list[list[int]]:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def mat_mul(a, b, p: int, inner: int | None = None) -> list[list[int]]:
    """Product of an r x k and a k x c matrix mod p.

    ``inner`` gives k explicitly, which matters when ``a`` has no rows.
    """
    k = len(b) if inner is None else inner
    cols = len(b[0]) if b else 0
    out = []
    for row in a:
        new = [0] * cols
        for t in range(k):
            x = row[t]
            if x:
                brow = b[t]
                for j in range(cols):
                    new[j] += x * brow[j]
        out.append([y % p for y in new])
    return out


def mat_vec(a, x, p: int) -> list[int]:
    return [sum(r * y for r, y in zip(row, x)) % p for row in a]


def transpose(m, cols: int | None = None) -> list[list[int]]:
    if not m:
        return [[] for _ in range(cols or 0)]
    return [list(col) for col in zip(*m)]


def rref(m, p: int) -> tuple[list[list[int]], int]:
    """Reduced row-echelon form of ``m`` over F_p and its rank.

    The output keeps the row count of ``m``; zero rows sit at the bottom.
    """
    a = [[x % p for x in row] for row in m]
    if not a:
        return a, 0
    rows, cols = len(a), len(a[0])
    r = 0
    for c in range(cols):
        if r == rows:
            break
        piv = None
        for i in range(r, rows):
            if a[i][c]:
                piv = i
                break
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = pow(a[r][c], -1, p)
        if inv != 1:
            a[r] = [x * inv % p for x in a[r]]
        pr = a[r]
        for i in range(rows):
            if i != r:
                f = a[i][c]
                if f:
                    a[i] = [(x - f * y) % p for x, y in zip(a[i], pr)]
        r += 1
    return a, r


def rank(m, p: int) -> int:
    return rref(m, p)[1]


def span(vectors, dim: int, p: int) -> Subspace:
    """Subspace of F_p^dim spanned by ``vectors`` in canonical form."""
    if not vectors:
        return Subspace(dim, ())
    red, r = rref(vectors, p)
    return Subspace(dim, tuple(tuple(row) for row in red[:r]))


def nullspace_basis(m, p: int, cols: int | None = None) -> list[list[int]]:
    """Basis of {x : m x = 0}; its size is cols - rank.

    ``cols`` is needed only when ``m`` has no rows.
    """
    if not m:
        n = cols or 0
        return [[int(i == j) for j in range(n)] for i in range(n)]
    n = len(m[0])
    red, r = rref(m, p)
    pivots = [_leading(row) for row in red[:r]]
    pivset = set(pivots)
    basis = []
    for free in range(n):
        if free in pivset:
            continue
        x = [0] * n
        x[free] = 1
        for i, pc in enumerate(pivots):
            x[pc] = (-red[i][free]) % p
        basis.append(x)
    return basis


def is_invertible(m, p: int) -> bool:
    n = len(m)
    if n == 0:
        return True
    if len(m[0]) != n:
        return False
    return rank(m, p) == n


def reduce_mod(vec, sub: Subspace, p: int) -> list[int]:
    """Representative of ``vec`` modulo ``sub`` with zeros at its pivots."""
    v = [x % p for x in vec]
    for row in sub.basis:
        c = _leading(row)
        f = v[c]
        if f:
            v = [(x - f * y) % p for x, y in zip(v, row)]
    return v


def coordinates(vec, sub: Subspace) -> list[int]:
    """Coordinates of ``vec`` (assumed to lie in ``sub``) in its rref basis."""
    return [vec[_leading(row)] for row in sub.basis]


def complement_columns(sub: Subspace) -> list[int]:
    """Non-pivot columns; the matching unit vectors complete the rref basis."""
    piv = set(sub.pivots())
    return [j for j in range(sub.ambient_dim) if j not in piv]


def _rref_matrices(n: int, r: int, p: int):
    """Yield every rank-r reduced row-echelon r x n matrix over F_p."""
    for pivots in itertools.combinations(range(n), r):
        pivset = set(pivots)
        free = [(i, j) for i, c in enumerate(pivots) for j in range(c + 1, n) if j not in pivset]
        for values in itertools.product(range(p), repeat=len(free)):
            rows = [[0] * n for _ in range(r)]
            for i, c in enumerate(pivots):
                rows[i][c] = 1
            for (i, j), x in zip(free, values):
                rows[i][j] = x
            yield tuple(tuple(row) for row in rows)


def enumerate_subspaces(ambient_dim: int, p: int, dim: int | None = None) -> list[Subspace]:
    """Every subspace of F_p^ambient_dim exactly once, optionally of one dimension.

    Ordered by dimension, then by pivot pattern.
    """
    check_limit(p**ambient_dim, f"subspaces of F_{p}^{ambient_dim}")
    dims = range(ambient_dim + 1) if dim is None else [dim]
    out = []
    for r in dims:
        if 0 <= r <= ambient_dim:
            out.extend(Subspace(ambient_dim, rows) for rows in _rref_matrices(ambient_dim, r, p))
    return out


def subspaces_within(sub: Subspace, p: int, dim: int | None = None) -> list[Subspace]:
    """Subspaces of ``sub`` (as subspaces of the ambient space)."""
    out = []
    base = [list(row) for row in sub.basis]
    for small in enumerate_subspaces(sub.dim, p, dim):
        if not small.basis:
            out.append(Subspace(sub.ambient_dim, ()))
            continue
        vecs = mat_mul([list(r) for r in small.basis], base, p, inner=sub.dim)
        out.append(span(vecs, sub.ambient_dim, p))
    return out


def superspaces_of(sub: Subspace, p: int, dim: int | None = None) -> list[Subspace]:
    """Subspaces of the ambient space that contain ``sub``."""
    n = sub.ambient_dim
    comp = complement_columns(sub)
    rel = None if dim is None else dim - sub.dim
    out = []
    if rel is not None and rel < 0:
        return out
    for small in enumerate_subspaces(len(comp), p, rel):
        vecs = [list(row) for row in sub.basis]
        for row in small.basis:
            v = [0] * n
            for j, x in zip(comp, row):
                v[j] = x
            vecs.append(v)
        out.append(span(vecs, n, p))
    return out


def image(a, sub: Subspace, target_dim: int, p: int) -> Subspace:
    """Image of ``sub`` under the matrix ``a`` (target_dim x ambient)."""
    vecs = [mat_vec(a, row, p) for row in sub.basis]
    return span([v for v in vecs if any(v)], target_dim, p)


def preimage(a, sub: Subspace, source_dim: int, p: int) -> Subspace:
    """{x : a x in sub} for the matrix ``a`` (sub.ambient_dim x source_dim)."""
    comp = complement_columns(sub)
    if not comp or source_dim == 0:
        return span([[int(i == j) for j in range(source_dim)] for i in range(source_dim)], source_dim, p)
    # x -> (a x mod sub) read off on the complement columns
    rows = []
    cols = [list(c) for c in zip(*a)] if a and a[0] else [[0] * sub.ambient_dim for _ in range(source_dim)]
    reduced_cols = [reduce_mod(c, sub, p) for c in cols]
    for j in comp:
        rows.append([rc[j] for rc in reduced_cols])
    return span(nullspace_basis(rows, p, cols=source_dim), source_dim, p)


def count_units(algebra_basis, p: int) -> int:
    """Number of invertible matrices in the F_p-span of ``algebra_basis``.

    The span is assumed to be a unital matrix algebra, so the count is the
    order of its unit group.
    """
    k = len(algebra_basis)
    check_limit(p**k, "unit count")
    if k == 0:
        return 0
    n = len(algebra_basis[0])
    if n == 0:
        return 1
    count = 0
    for coeffs in itertools.product(range(p), repeat=k):
        m = [[0] * n for _ in range(n)]
        for c, b in zip(coeffs, algebra_basis):
            if c:
                for i in range(n):
                    row, brow = m[i], b[i]
                    for j in range(n):
                        row[j] += c * brow[j]
        if is_invertible(m, p):
            count += 1
    return count


def gaussian_binomial(n: int, d: int, q: int) -> int:
    """[n choose d]_q by the product formula."""
    if d < 0 or d > n:
        return 0
    num, den = 1, 1
    for i in range(d):
        num *= q ** (n - i) - 1
        den *= q ** (d - i) - 1
    return num // den
