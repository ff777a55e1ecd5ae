"""Finite tables of isomorphism classes with cached invariants.

A catalog holds every class whose dimension vector is bounded by ``dmax``.
Hom, Ext and Aut data are filled eagerly; Hall numbers are filled lazily
per (L, sub-dimension) since most products only touch a few of them.
"""

from __future__ import annotations

import itertools
import threading
from collections import Counter

from . import field_linalg as fl
from . import rep as R
from .errors import OutOfCatalogError, ValidationError
from .quiver import Quiver, euler_form, vle


class Catalog:
    def __init__(self, quiver: Quiver, p: int, dmax):
        fl.PrimeField(p)
        dmax = tuple(int(x) for x in dmax)
        if len(dmax) != quiver.n or any(x < 0 for x in dmax):
            raise ValidationError(f"dmax must be {quiver.n} nonnegative integers")
        for d in dmax:
            fl.check_limit(p**d, "catalog vertex space")
        # sums of simples realize every dimension vector, so this bounds the size below
        lower = 1
        for d in dmax:
            lower *= d + 1
        fl.check_limit(lower, "catalog size")
        fl.check_limit(R.count_isoclasses_up_to(quiver, dmax), "catalog size")
        self.quiver = quiver
        self.p = p
        self.dmax = dmax
        self.classes: list = R.isoclasses_up_to(quiver, dmax)
        self.index = {c: i for i, c in enumerate(self.classes)}
        n = quiver.n
        self.dims = {c: c.dim_vector(n) for c in self.classes}
        self._by_dim: dict = {}
        for c in self.classes:
            self._by_dim.setdefault(self.dims[c], []).append(c)

        ivs, h = R.interval_hom_matrix(quiver, p)
        pos = {(iv.lo, iv.hi): i for i, iv in enumerate(ivs)}
        vecs = {}
        for c in self.classes:
            v = [0] * len(ivs)
            for lo, hi, m in c.parts:
                v[pos[(lo, hi)]] = m
            vecs[c] = v
        nz = {c: [(i, m) for i, m in enumerate(vecs[c]) if m] for c in self.classes}
        self.hom: dict = {}
        self.ext: dict = {}
        for a in self.classes:
            for b in self.classes:
                hd = sum(ma * mb * h[i][j] for i, ma in nz[a] for j, mb in nz[b])
                self.hom[(a, b)] = hd
                self.ext[(a, b)] = hd - euler_form(quiver, self.dims[a], self.dims[b])
        self.aut = {c: R.aut_count_closed(c, quiver, p, self.hom[(c, c)]) for c in self.classes}

        self._lock = threading.Lock()
        self._hall: dict = {}  # (L, sub_dim) -> Counter {(quotient, sub): count}
        self._subs: dict = {}
        self._quots: dict = {}

    def __repr__(self):
        return f"Catalog({self.quiver}, p={self.p}, dmax={self.dmax}, {len(self.classes)} classes)"

    def __len__(self):
        return len(self.classes)

    def __contains__(self, c) -> bool:
        return c in self.index

    def fits(self, d) -> bool:
        return all(0 <= x for x in d) and vle(d, self.dmax)

    def require(self, *cs) -> None:
        for c in cs:
            if c not in self.index:
                raise OutOfCatalogError(f"{c} is outside the catalog bound {self.dmax}")

    def require_dim(self, d) -> None:
        if not self.fits(d):
            raise OutOfCatalogError(f"dimension {tuple(d)} is outside the catalog bound {self.dmax}")

    def dim(self, c) -> tuple:
        d = self.dims.get(c)
        if d is None:
            self.require(c)
        return d

    def classes_with_dim(self, d) -> list:
        d = tuple(d)
        if any(x < 0 for x in d):
            return []
        self.require_dim(d)
        return self._by_dim.get(d, [])

    def euler(self, a, b) -> int:
        return euler_form(self.quiver, self.dim(a), self.dim(b))

    def realize(self, c) -> R.Representation:
        return R.realize(c, self.quiver, self.p)

    # -- Hall numbers ---------------------------------------------------

    def _hall_table(self, L, sub_dim) -> Counter:
        key = (L, sub_dim)
        tab = self._hall.get(key)
        if tab is not None:
            return tab
        tab = Counter()
        rep = self.realize(L)
        for spaces in R.subspace_tuples(rep, sub_dim):
            sub, quo = R._induced(rep, spaces)
            tab[(R.iso_class(quo), R.iso_class(sub))] += 1
        with self._lock:
            self._hall.setdefault(key, tab)
        return self._hall[key]

    def hall(self, L, M, N) -> int:
        """g^L_{M,N}: subobjects X of L with X ~ N and L/X ~ M."""
        self.require(L, M, N)
        dl, dm, dn = self.dims[L], self.dims[M], self.dims[N]
        if tuple(x + y for x, y in zip(dm, dn)) != dl:
            return 0
        return self._hall_table(L, dn).get((M, N), 0)

    def hall_pairs(self, L, sub_dim=None) -> dict:
        """{(M, N): g^L_{M,N}} over all (or one) sub-dimension vectors."""
        self.require(L)
        dl = self.dims[L]
        if sub_dim is not None:
            if not all(0 <= x <= y for x, y in zip(sub_dim, dl)):
                return {}
            return dict(self._hall_table(L, tuple(sub_dim)))
        out = {}
        for d in _box(dl):
            out.update(self._hall_table(L, d))
        return out

    def subs(self, L) -> frozenset:
        s = self._subs.get(L)
        if s is None:
            s = frozenset(n for (_, n) in self.hall_pairs(L))
            with self._lock:
                self._subs[L] = s
        return s

    def quotients(self, L) -> frozenset:
        s = self._quots.get(L)
        if s is None:
            s = frozenset(m for (m, _) in self.hall_pairs(L))
            with self._lock:
                self._quots[L] = s
        return s

    def extensions(self, M, N) -> dict:
        """{L: g^L_{M,N}} over all middle terms L (quotient M, sub N)."""
        self.require(M, N)
        d = tuple(x + y for x, y in zip(self.dims[M], self.dims[N]))
        out = {}
        for L in self.classes_with_dim(d):
            g = self.hall(L, M, N)
            if g:
                out[L] = g
        return out


def _box(d):
    return itertools.product(*(range(x + 1) for x in d))


_CACHE: dict = {}
_CACHE_LOCK = threading.Lock()


def get_catalog(quiver: Quiver, p: int, dmax) -> Catalog:
    """Shared catalog per (quiver, p, dmax)."""
    key = (quiver, p, tuple(dmax), fl.get_limit())
    cat = _CACHE.get(key)
    if cat is None:
        cat = Catalog(quiver, p, dmax)
        with _CACHE_LOCK:
            cat = _CACHE.setdefault(key, cat)
    return cat


def clear_cache() -> None:
    with _CACHE_LOCK:
        _CACHE.clear()


def dim_sum(cat: Catalog, *cs) -> tuple:
    out = cat.quiver.zero()
    for c in cs:
        out = tuple(x + y for x, y in zip(out, cat.dim(c)))
    return out
