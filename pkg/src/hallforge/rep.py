"""Representations of type-A quivers over F_p.

Indecomposables are the interval modules M[lo, hi]; an isomorphism class is
a sorted multiset of intervals.  Concrete representations carry one matrix
per arrow (shape dim_target x dim_source) and are what Hom spaces,
subrepresentations and automorphism counts are computed from.
"""

from __future__ import annotations

import functools
import itertools
import re
from dataclasses import dataclass, field
from fractions import Fraction

from . import field_linalg as fl
from .errors import InternalError, ParseError, ValidationError
from .quiver import Quiver


@dataclass(frozen=True, order=True)
class Interval:
    lo: int
    hi: int

    def __post_init__(self):
        if not 1 <= self.lo <= self.hi:
            raise ValidationError(f"bad interval [{self.lo}, {self.hi}]")

    def contains(self, i: int) -> bool:
        return self.lo <= i <= self.hi

    def dim_vector(self, n: int) -> tuple:
        return tuple(int(self.lo <= i <= self.hi) for i in range(1, n + 1))


@dataclass(frozen=True, order=True)
class IsoClass:
    """Isomorphism class as a sorted tuple of (lo, hi, multiplicity)."""

    parts: tuple = ()

    def __post_init__(self):
        merged: dict[tuple[int, int], int] = {}
        for lo, hi, m in self.parts:
            Interval(lo, hi)
            if m < 1:
                raise ValidationError("interval multiplicities must be positive")
            merged[(lo, hi)] = merged.get((lo, hi), 0) + m
        canon = tuple((lo, hi, m) for (lo, hi), m in sorted(merged.items()))
        object.__setattr__(self, "parts", canon)

    @classmethod
    def from_intervals(cls, intervals) -> "IsoClass":
        return cls(tuple((iv.lo, iv.hi, 1) for iv in intervals))

    @classmethod
    def interval(cls, lo: int, hi: int, mult: int = 1) -> "IsoClass":
        return cls(((lo, hi, mult),))

    def __bool__(self):
        return bool(self.parts)

    def __add__(self, other: "IsoClass") -> "IsoClass":
        return IsoClass(self.parts + other.parts)

    def items(self):
        return [(Interval(lo, hi), m) for lo, hi, m in self.parts]

    def max_vertex(self) -> int:
        return max((hi for _, hi, _ in self.parts), default=0)

    def dim_vector(self, n: int) -> tuple:
        d = [0] * n
        for lo, hi, m in self.parts:
            for i in range(lo, hi + 1):
                d[i - 1] += m
        return tuple(d)

    def __str__(self):
        if not self.parts:
            return "0"
        return "+".join(f"({lo}-{hi})x{m}" for lo, hi, m in self.parts)

    def __repr__(self):
        return f"IsoClass({self})"

    def to_json(self) -> list:
        return [list(t) for t in self.parts]

    @classmethod
    def from_json(cls, data) -> "IsoClass":
        return cls(tuple(tuple(int(x) for x in t) for t in data))


ZERO = IsoClass()

_PART = re.compile(r"\s*\(\s*(\d+)\s*-\s*(\d+)\s*\)\s*x\s*(\d+)\s*")


def parse_isoclass(text: str, n: int | None = None) -> IsoClass:
    """Parse ``0`` or ``(lo-hi)xM`` terms joined by ``+``."""
    s = text.strip()
    if s == "0":
        return ZERO
    parts = []
    pos = 0
    raw = text
    for chunk in s.split("+"):
        m = _PART.fullmatch(chunk)
        if not m:
            raise ParseError("malformed iso-class literal", raw, raw.find(chunk, pos))
        pos += len(chunk) + 1
        lo, hi, mult = (int(g) for g in m.groups())
        if not 1 <= lo <= hi or mult < 1:
            raise ParseError(f"bad interval term ({lo}-{hi})x{mult}", raw, raw.find(chunk))
        if n is not None and hi > n:
            raise ValidationError(f"interval ({lo}-{hi}) exceeds quiver size {n}")
        parts.append((lo, hi, mult))
    return IsoClass(tuple(parts))


def intervals(q: Quiver) -> list[Interval]:
    return [Interval(lo, hi) for lo in range(1, q.n + 1) for hi in range(lo, q.n + 1)]


def isoclasses_with_dim(q: Quiver, d) -> list[IsoClass]:
    """All interval multisets with dimension vector exactly ``d``."""
    return [c for c in isoclasses_up_to(q, d) if c.dim_vector(q.n) == tuple(d)]


def isoclasses_up_to(q: Quiver, dmax) -> list[IsoClass]:
    """All interval multisets with dimension vector <= ``dmax``, sorted."""
    ivs = intervals(q)
    out = []

    def rec(k, remaining, parts):
        if k == len(ivs):
            out.append(IsoClass(tuple(parts)))
            return
        iv = ivs[k]
        cap = min(remaining[i - 1] for i in range(iv.lo, iv.hi + 1))
        for m in range(cap + 1):
            if m:
                rem = list(remaining)
                for i in range(iv.lo, iv.hi + 1):
                    rem[i - 1] -= m
                rec(k + 1, rem, parts + [(iv.lo, iv.hi, m)])
            else:
                rec(k + 1, remaining, parts)

    rec(0, list(dmax), [])
    return sorted(set(out))


def count_isoclasses_up_to(q: Quiver, dmax) -> int:
    """Number of classes with dim <= dmax, without listing them."""
    ivs = intervals(q)

    @functools.lru_cache(maxsize=None)
    def rec(k, remaining):
        if k == len(ivs):
            return 1
        iv = ivs[k]
        cap = min(remaining[i - 1] for i in range(iv.lo, iv.hi + 1))
        total = 0
        for m in range(cap + 1):
            rem = list(remaining)
            for i in range(iv.lo, iv.hi + 1):
                rem[i - 1] -= m
            total += rec(k + 1, tuple(rem))
        return total

    return rec(0, tuple(dmax))


@dataclass
class Representation:
    quiver: Quiver
    p: int
    dim: tuple
    mats: tuple  # one matrix per arrow, aligned with quiver.arrows

    def __post_init__(self):
        self.dim = tuple(self.dim)
        if len(self.dim) != self.quiver.n or any(x < 0 for x in self.dim):
            raise ValidationError("dimension vector has wrong length or negative entries")
        if len(self.mats) != len(self.quiver.arrows):
            raise ValidationError("need one matrix per arrow")
        mats = []
        for (s, t), a in zip(self.quiver.arrows, self.mats):
            a = [[x % self.p for x in row] for row in a]
            if len(a) != self.dim[t - 1] or any(len(row) != self.dim[s - 1] for row in a):
                raise ValidationError(f"matrix for arrow {s}->{t} must be {self.dim[t - 1]}x{self.dim[s - 1]}")
            mats.append(a)
        self.mats = tuple(mats)

    @property
    def total_dim(self) -> int:
        return sum(self.dim)


def zero_rep(q: Quiver, p: int) -> Representation:
    return Representation(q, p, q.zero(), tuple([] for _ in q.arrows))


def realize(c: IsoClass, q: Quiver, p: int) -> Representation:
    """Block-diagonal direct sum of interval modules in sorted order."""
    if c.max_vertex() > q.n:
        raise ValidationError(f"{c} does not live on {q}")
    copies = [Interval(lo, hi) for lo, hi, m in c.parts for _ in range(m)]
    # position of each copy in the basis at each vertex
    index = [{} for _ in range(q.n + 1)]
    for k, iv in enumerate(copies):
        for i in range(iv.lo, iv.hi + 1):
            index[i][k] = len(index[i])
    dim = tuple(len(index[i]) for i in range(1, q.n + 1))
    mats = []
    for s, t in q.arrows:
        a = fl.zeros(dim[t - 1], dim[s - 1])
        for k, iv in enumerate(copies):
            if iv.contains(s) and iv.contains(t):
                a[index[t][k]][index[s][k]] = 1
        mats.append(a)
    return Representation(q, p, dim, tuple(mats))


def _hom_system(m: Representation, n: Representation):
    """Linear system whose kernel is Hom(m, n); returns (rows, nvars, offsets)."""
    q, p = m.quiver, m.p
    offsets = []
    nvars = 0
    for i in range(q.n):
        offsets.append(nvars)
        nvars += n.dim[i] * m.dim[i]

    def var(i, r, c):  # entry (r, c) of f_i, a dim_n[i] x dim_m[i] matrix
        return offsets[i] + r * m.dim[i] + c

    rows = []
    for (s, t), ma, na in zip(q.arrows, m.mats, n.mats):
        s0, t0 = s - 1, t - 1
        # (na f_s - f_t ma)[r][c] = 0 for r < dim_n[t], c < dim_m[s]
        for r in range(n.dim[t0]):
            for c in range(m.dim[s0]):
                row = [0] * nvars
                for k in range(n.dim[s0]):
                    if na[r][k]:
                        row[var(s0, k, c)] += na[r][k]
                for k in range(m.dim[t0]):
                    if ma[k][c]:
                        row[var(t0, r, k)] -= ma[k][c]
                rows.append([x % p for x in row])
    return rows, nvars, offsets


def _check_compatible(m: Representation, n: Representation):
    if m.quiver != n.quiver or m.p != n.p:
        raise ValidationError("representations live on different quivers or fields")


def hom_basis(m: Representation, n: Representation) -> list[tuple]:
    """Basis of Hom(m, n); each element is a tuple of per-vertex matrices."""
    _check_compatible(m, n)
    rows, nvars, offsets = _hom_system(m, n)
    sols = fl.nullspace_basis(rows, m.p, cols=nvars)
    q = m.quiver
    out = []
    for x in sols:
        mats = []
        for i in range(q.n):
            rr, cc = n.dim[i], m.dim[i]
            o = offsets[i]
            mats.append([x[o + r * cc: o + (r + 1) * cc] for r in range(rr)])
        out.append(tuple(mats))
    return out


def hom_dim(m: Representation, n: Representation) -> int:
    _check_compatible(m, n)
    rows, nvars, _ = _hom_system(m, n)
    if not rows:
        return nvars
    return nvars - fl.rank(rows, m.p)


def ext1_dim(m: Representation, n: Representation) -> int:
    from .quiver import euler_form

    e = hom_dim(m, n) - euler_form(m.quiver, m.dim, n.dim)
    if e < 0:
        raise InternalError(f"negative Ext^1 dimension {e}")
    return e


def _block_diag(mats) -> list[list[int]]:
    size = sum(len(a) for a in mats)
    out = fl.zeros(size, size)
    o = 0
    for a in mats:
        for r, row in enumerate(a):
            out[o + r][o:o + len(row)] = row
        o += len(a)
    return out


def aut_count_bruteforce(m: Representation) -> int:
    """|Aut m| by scanning End(m) for invertible elements."""
    basis = hom_basis(m, m)
    if m.total_dim == 0:
        return 1
    return fl.count_units([_block_diag(f) for f in basis], m.p)


def aut_count_closed(c: IsoClass, q: Quiver, p: int, end_dim: int) -> int:
    """p^(dim End - sum m_i^2) * prod |GL_{m_i}(F_p)| for c = sum X_i^{m_i}."""
    field_ = fl.PrimeField(p)
    out = p ** (end_dim - sum(m * m for _, _, m in c.parts))
    for _, _, m in c.parts:
        out *= field_.gl_order(m)
    return out


def aut_count(m: Representation, method: str = "closed") -> int:
    if method == "brute":
        return aut_count_bruteforce(m)
    if method == "closed":
        return aut_count_closed(iso_class(m), m.quiver, m.p, hom_dim(m, m))
    raise ValueError(f"unknown method {method!r}")


@dataclass
class Subrep:
    spaces: tuple  # one fl.Subspace per vertex
    sub: Representation
    quotient: Representation

    @property
    def dim(self) -> tuple:
        return self.sub.dim


def _induced(rep: Representation, spaces) -> tuple[Representation, Representation]:
    q, p = rep.quiver, rep.p
    sub_mats, quo_mats = [], []
    for (s, t), a in zip(q.arrows, rep.mats):
        us, ut = spaces[s - 1], spaces[t - 1]
        cols = []
        for b in us.basis:
            w = fl.mat_vec(a, b, p)
            cols.append(fl.coordinates(w, ut))
        sub_mats.append(fl.transpose(cols, ut.dim) if cols else [[] for _ in range(ut.dim)])
        cs, ct = fl.complement_columns(us), fl.complement_columns(ut)
        qcols = []
        for j in cs:
            col = [row[j] for row in a]
            red = fl.reduce_mod(col, ut, p)
            qcols.append([red[k] for k in ct])
        quo_mats.append(fl.transpose(qcols, len(ct)) if qcols else [[] for _ in range(len(ct))])
    sub_dim = tuple(u.dim for u in spaces)
    quo_dim = tuple(d - u.dim for d, u in zip(rep.dim, spaces))
    return (Representation(q, p, sub_dim, tuple(sub_mats)),
            Representation(q, p, quo_dim, tuple(quo_mats)))


def subspace_tuples(rep: Representation, sub_dim=None):
    """Yield every tuple (U_1..U_n) closed under the arrow maps."""
    q, p = rep.quiver, rep.p
    n = q.n
    want = [None] * n if sub_dim is None else list(sub_dim)
    if sub_dim is not None and any(not 0 <= w <= d for w, d in zip(want, rep.dim)):
        return
    for d in rep.dim:
        fl.check_limit(p**d, "subrepresentation enumeration")

    def rec(i, chosen):
        if i == n:
            yield tuple(chosen)
            return
        d = rep.dim[i]
        if i == 0:
            cands = fl.enumerate_subspaces(d, p, want[0])
        else:
            s, t = q.arrows[i - 1]
            a = rep.mats[i - 1]
            prev = chosen[-1]
            if s < t:  # i -> i+1: U_{i+1} must contain a(U_i)
                cands = fl.superspaces_of(fl.image(a, prev, d, p), p, want[i])
            else:  # i+1 -> i: U_{i+1} inside the preimage of U_i
                cands = fl.subspaces_within(fl.preimage(a, prev, d, p), p, want[i])
        for u in cands:
            chosen.append(u)
            yield from rec(i + 1, chosen)
            chosen.pop()

    yield from rec(0, [])


def subreps(rep: Representation, sub_dim=None) -> list[Subrep]:
    """All subrepresentations with their induced sub and quotient modules."""
    out = []
    for spaces in subspace_tuples(rep, sub_dim):
        sub, quo = _induced(rep, spaces)
        out.append(Subrep(spaces, sub, quo))
    return out


# -- classification -------------------------------------------------------

def _composite_rank(rep: Representation, i: int, j: int) -> int:
    """Rank of the composite map between vertices i < j (either direction)."""
    q, p = rep.quiver, rep.p
    forward = q.arrows[i - 1][0] < q.arrows[i - 1][1]
    if forward:  # V_i -> V_{i+1} -> ... -> V_j
        m = fl.identity(rep.dim[i - 1])
        for k in range(i, j):
            m = fl.mat_mul(rep.mats[k - 1], m, p, inner=rep.dim[k - 1])
    else:  # V_j -> ... -> V_i
        m = fl.identity(rep.dim[j - 1])
        for k in range(j - 1, i - 1, -1):
            m = fl.mat_mul(rep.mats[k - 1], m, p, inner=rep.dim[k])
    if not m or not m[0]:
        return 0
    return fl.rank(m, p)


def iso_class_ranks(rep: Representation) -> IsoClass:
    """Rank-invariant classification; equioriented quivers only."""
    q = rep.quiver
    if not q.is_equioriented():
        raise ValidationError("rank-invariant classification needs an equioriented quiver")
    n = q.n
    r = {}
    for i in range(1, n + 1):
        r[(i, i)] = rep.dim[i - 1]
        for j in range(i + 1, n + 1):
            r[(i, j)] = _composite_rank(rep, i, j)

    def rk(i, j):
        if i < 1 or j > n:
            return 0
        return r[(i, j)]

    parts = []
    for i in range(1, n + 1):
        for j in range(i, n + 1):
            m = rk(i, j) - rk(i - 1, j) - rk(i, j + 1) + rk(i - 1, j + 1)
            if m < 0:
                raise InternalError("negative interval multiplicity")
            if m:
                parts.append((i, j, m))
    return IsoClass(tuple(parts))


@functools.lru_cache(maxsize=None)
def _interval_data(q: Quiver, p: int):
    ivs = intervals(q)
    reps = [realize(IsoClass.interval(iv.lo, iv.hi), q, p) for iv in ivs]
    h = [[hom_dim(x, y) for y in reps] for x in reps]
    # invert H over Q: h_M[x] = sum_y H[x][y] m_y
    size = len(ivs)
    aug = [[Fraction(v) for v in row] + [Fraction(int(i == j)) for j in range(size)] for i, row in enumerate(h)]
    for c in range(size):
        piv = next(i for i in range(c, size) if aug[i][c] != 0)
        aug[c], aug[piv] = aug[piv], aug[c]
        f = aug[c][c]
        aug[c] = [x / f for x in aug[c]]
        for i in range(size):
            if i != c and aug[i][c] != 0:
                g = aug[i][c]
                aug[i] = [x - g * y for x, y in zip(aug[i], aug[c])]
    hinv = [row[size:] for row in aug]
    return ivs, reps, h, hinv


def interval_hom_matrix(q: Quiver, p: int):
    """(intervals, H) with H[x][y] = dim Hom(M_x, M_y)."""
    ivs, _, h, _ = _interval_data(q, p)
    return ivs, h


def iso_class_hom(rep: Representation) -> IsoClass:
    """Classification by the Hom dimensions from every interval module.

    Finite-dimensional modules over a representation-finite algebra are
    determined by these dimensions, and the interval Hom matrix is
    invertible, so the multiplicities are recovered by one linear solve.
    """
    ivs, reps, _, hinv = _interval_data(rep.quiver, rep.p)
    h = [hom_dim(x, rep) for x in reps]
    parts = []
    for iv, row in zip(ivs, hinv):
        m = sum(c * v for c, v in zip(row, h))
        if m.denominator != 1 or m < 0:
            raise InternalError(f"non-integral multiplicity {m} for {iv}")
        if m:
            parts.append((iv.lo, iv.hi, int(m)))
    return IsoClass(tuple(parts))


def is_isomorphism(f, p: int) -> bool:
    return all(fl.is_invertible(a, p) for a in f)


def find_isomorphism(src: Representation, dst: Representation):
    """An invertible element of Hom(src, dst), or None."""
    if src.dim != dst.dim:
        return None
    basis = hom_basis(src, dst)
    p = src.p
    fl.check_limit(p ** len(basis), "isomorphism search")
    if src.total_dim == 0:
        return tuple([] for _ in range(src.quiver.n))
    for coeffs in itertools.product(range(p), repeat=len(basis)):
        f = []
        for i in range(src.quiver.n):
            rr, cc = dst.dim[i], src.dim[i]
            a = [[0] * cc for _ in range(rr)]
            for c, b in zip(coeffs, basis):
                if c:
                    for r in range(rr):
                        for k in range(cc):
                            a[r][k] += c * b[i][r][k]
            f.append([[x % p for x in row] for row in a])
        if is_isomorphism(f, p):
            return tuple(f)
    return None


def iso_class_search(rep: Representation) -> IsoClass:
    """Classification by exhibiting an isomorphism from a candidate class."""
    for cand in isoclasses_with_dim(rep.quiver, rep.dim):
        if find_isomorphism(realize(cand, rep.quiver, rep.p), rep) is not None:
            return cand
    raise InternalError("no interval decomposition found")


def iso_class(rep: Representation, method: str = "auto") -> IsoClass:
    """Canonical interval multiset of ``rep``.

    ``auto`` uses ranks of composite arrow maps on equioriented quivers and
    the Hom-dimension fingerprint otherwise; ``search`` scans Hom spaces for
    an isomorphism from each candidate class.
    """
    if rep.total_dim == 0:
        return ZERO
    if method == "auto":
        method = "ranks" if rep.quiver.is_equioriented() else "hom"
    if method == "ranks":
        return iso_class_ranks(rep)
    if method == "hom":
        return iso_class_hom(rep)
    if method == "search":
        return iso_class_search(rep)
    raise ValueError(f"unknown method {method!r}")
