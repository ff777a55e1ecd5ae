"""Verification suites for the algebra identities.

Each suite takes a quiver, a prime and a bound ``dmax`` on the classes it
draws inputs from.  Sums that produce larger middle terms are computed in
a catalog at twice the bound, so every case is decided exactly.  Suites
with very large grids draw ``samples`` cases from a seeded generator; the
seed is stored in the report.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field

from . import dh1 as D1
from . import dh2 as D2
from . import field_linalg as fl
from . import hall_classical as HC
from . import rep as R
from .catalog import Catalog, get_catalog
from .coeff import v_pow
from .element import LinComb
from .errors import InternalError
from .quiver import Quiver, symmetric_form, vadd, vle, vsub
from .rep import ZERO

SUITES = (
    "green", "assoc-dh2", "assoc-dh1", "assoc-dhz1", "drinfeld", "phi", "prop32",
    "rp-sum", "triangular", "k-relations", "grading", "aut-crosscheck", "embeddings",
    "gaussian",
)


@dataclass
class Report:
    suite: str
    quiver: str
    p: int
    dmax: tuple
    seed: int
    cases: int = 0
    failures: int = 0
    counterexample: str | None = None
    notes: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.failures == 0 and self.cases > 0

    def record(self, ok: bool, case) -> None:
        self.cases += 1
        if not ok:
            self.failures += 1
            if self.counterexample is None:
                self.counterexample = case() if callable(case) else str(case)

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "quiver": self.quiver,
            "p": self.p,
            "dmax": list(self.dmax),
            "seed": self.seed,
            "cases": self.cases,
            "passed": self.cases - self.failures,
            "failed": self.failures,
            "ok": self.passed,
            "counterexample": self.counterexample,
            "notes": list(self.notes),
        }

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        line = (f"{status} {self.suite} quiver={self.quiver} p={self.p} dmax={','.join(map(str, self.dmax))} "
                f"seed={self.seed} cases={self.cases} failed={self.failures}")
        if self.counterexample:
            line += f" first-counterexample: {self.counterexample}"
        return line


def _double(d) -> tuple:
    return tuple(2 * x for x in d)


def _unit_bound(d) -> tuple:
    return tuple(min(x, 1) for x in d)


def small_vectors(n: int) -> list:
    """All 0/1 vectors of length n: 0, e_i and their sums."""
    return [tuple(v) for v in itertools.product((0, 1), repeat=n)]


def _sample(rng: random.Random, seq: list, k: int | None) -> list:
    if k is None or k >= len(seq):
        return seq
    return rng.sample(seq, k)


def _fmt(*cs) -> str:
    return "(" + ", ".join(str(c) for c in cs) + ")"


# -- individual suites --------------------------------------------------------

def suite_green(q: Quiver, p: int, dmax, samples=None, seed=0) -> Report:
    rep = Report("green", q.spec, p, tuple(dmax), seed)
    small = get_catalog(q, p, dmax)
    big = get_catalog(q, p, _double(dmax))
    cl = small.classes
    rng = random.Random(seed)
    if samples is None:
        cases = itertools.product(cl, repeat=4)
    else:
        cases = [_random_green_case(rng, small) for _ in range(samples)]
        rep.notes.append("cases drawn with matching total dimension")
    for M, N, M2, N2 in cases:
        lhs, rhs = HC.green_sides(big, M, N, M2, N2)
        rep.record(lhs == rhs, lambda: f"{_fmt(M, N, M2, N2)} lhs={lhs} rhs={rhs}")
    return rep


def _random_green_case(rng, cat: Catalog):
    cl = cat.classes
    while True:
        M, N = rng.choice(cl), rng.choice(cl)
        total = vadd(cat.dim(M), cat.dim(N))
        firsts = [c for c in cl if vle(cat.dim(c), total) and cat.fits(vsub(total, cat.dim(c)))]
        M2 = rng.choice(firsts)
        seconds = cat.classes_with_dim(vsub(total, cat.dim(M2)))
        if seconds:
            return M, N, M2, rng.choice(seconds)


def _dh2_generators(cat: Catalog, bound) -> list:
    out = []
    for A0 in cat.classes:
        for A1 in cat.classes:
            if vle(vadd(cat.dim(A0), cat.dim(A1)), bound):
                out.append(D2.generator(cat, A0, A1))
    return out


def _assoc_dh2_case(cat, x, y, z) -> bool:
    left = D2.dh2_product(cat, D2.dh2_product(cat, x, y), z)
    right = D2.dh2_product(cat, x, D2.dh2_product(cat, y, z))
    return left == right


def _key_str(x: LinComb) -> str:
    return " + ".join(f"{c}*{k}" for k, c in x.items())


def suite_assoc_dh2(q: Quiver, p: int, dmax, samples=None, seed=0) -> Report:
    """Exhaustive over generators with A0^ + A1^ <= unit bound, then seeded triples."""
    rep = Report("assoc-dh2", q.spec, p, tuple(dmax), seed)
    unit = _unit_bound(dmax)
    cat_small = get_catalog(q, p, tuple(3 * x for x in unit))
    gens = _dh2_generators(cat_small, unit)
    for x, y, z in itertools.product(gens, repeat=3):
        rep.record(_assoc_dh2_case(cat_small, x, y, z),
                   lambda: f"{_key_str(x)} | {_key_str(y)} | {_key_str(z)}")
    rep.notes.append(f"{len(gens)} generators exhaustive")
    n_random = 100 if samples is None else samples
    cat = get_catalog(q, p, dmax)
    rng = random.Random(seed)
    ks = small_vectors(q.n)
    cl = cat.classes
    done = 0
    while done < n_random:
        parts = [(rng.choice(cl), rng.choice(cl)) for _ in range(3)]
        s0 = vadd(*(cat.dim(a) for a, _ in parts))
        s1 = vadd(*(cat.dim(b) for _, b in parts))
        if not (cat.fits(s0) and cat.fits(s1)):
            continue
        xs = [D2.dh2_monomial(cat, rng.choice(ks), rng.choice(ks), a, b) for a, b in parts]
        x, y, z = xs
        rep.record(_assoc_dh2_case(cat, x, y, z),
                   lambda: f"{_key_str(x)} | {_key_str(y)} | {_key_str(z)}")
        done += 1
    rep.notes.append(f"{n_random} seeded triples with degree-wise sums <= dmax")
    return rep


def _triples_fitting(small: Catalog, big: Catalog):
    for A, B, C in itertools.product(small.classes, repeat=3):
        if big.fits(vadd(small.dim(A), small.dim(B), small.dim(C))):
            yield A, B, C


def _suite_assoc_1(name, prod, q, p, dmax, samples, seed, identity=None) -> Report:
    """Associativity on triples; with ``identity``, also its H-number form per triple."""
    rep = Report(name, q.spec, p, tuple(dmax), seed)
    small = get_catalog(q, p, dmax)
    big = get_catalog(q, p, _double(dmax))
    triples = _sample(random.Random(seed), list(_triples_fitting(small, big)), samples)
    for A, B, C in triples:
        x, y, z = (D1.dh1_monomial(big, c) for c in (A, B, C))
        ok = prod(big, prod(big, x, y), z) == prod(big, x, prod(big, y, z))
        failed = [] if ok else ["associativity"]
        if identity is not None:
            lhs, rhs = identity(big, A, B, C)
            if lhs != rhs:
                failed.append("H-number identity")
        rep.record(not failed, lambda: f"{_fmt(A, B, C)} failed: {', '.join(failed)}")
    if identity is not None:
        rep.notes.append("each triple checked as associativity and as the equivalent H-number identity")
    return rep


def suite_assoc_dh1(q, p, dmax, samples=None, seed=0) -> Report:
    return _suite_assoc_1("assoc-dh1", D1.dh1_product, q, p, dmax, samples, seed,
                          identity=D1.associativity_sums)


def suite_assoc_dhz1(q, p, dmax, samples=None, seed=0) -> Report:
    return _suite_assoc_1("assoc-dhz1", D1.dhz1_product, q, p, dmax, samples, seed)


def suite_drinfeld(q: Quiver, p: int, dmax, samples=None, seed=0) -> Report:
    rep = Report("drinfeld", q.spec, p, tuple(dmax), seed)
    cat = get_catalog(q, p, dmax)
    ks = small_vectors(q.n)
    cases = list(itertools.product(cat.classes, cat.classes, ks, ks))
    for X0, X1, a, b in _sample(random.Random(seed), cases, samples):
        ok, lhs, rhs = D2.drinfeld_check(cat, X0, a, X1, b)
        rep.record(ok, lambda: f"X0={X0} alpha={a} X1={X1} beta={b}")
    return rep


def suite_phi(q, p, dmax, samples=None, seed=0) -> Report:
    rep = Report("phi", q.spec, p, tuple(dmax), seed)
    small = get_catalog(q, p, dmax)
    big = get_catalog(q, p, _double(dmax))
    pairs = list(itertools.product(small.classes, repeat=2))
    for A, B in _sample(random.Random(seed), pairs, samples):
        rep.record(D1.phi_check(big, A, B), lambda: _fmt(A, B))
    return rep


def suite_prop32(q, p, dmax, samples=None, seed=0) -> Report:
    rep = Report("prop32", q.spec, p, tuple(dmax), seed)
    small = get_catalog(q, p, dmax)
    big = get_catalog(q, p, _double(dmax))
    quads = list(itertools.product(small.classes, repeat=4))
    for A0, A1, B0, B1 in _sample(random.Random(seed), quads, samples):
        lhs, rhs = D2.prop32_sides(big, A0, A1, B0, B1)
        rep.record(lhs == rhs, lambda: f"{_fmt(A0, A1, B0, B1)} lhs={lhs} rhs={rhs}")
    return rep


def suite_rp_sum(q, p, dmax, samples=None, seed=0) -> Report:
    rep = Report("rp-sum", q.spec, p, tuple(dmax), seed)
    small = get_catalog(q, p, dmax)
    big = get_catalog(q, p, _double(dmax))
    pairs = list(itertools.product(small.classes, repeat=2))
    for M, N in _sample(random.Random(seed), pairs, samples):
        total, expect = HC.rp_sum(big, M, N)
        rep.record(total == expect, lambda: f"{_fmt(M, N)} sum={total} expected={expect}")
    return rep


def suite_triangular(q, p, dmax, samples=None, seed=0) -> Report:
    """Round trips in both directions on every basis key (0, 0, M0, M1)."""
    rep = Report("triangular", q.spec, p, tuple(dmax), seed)
    cat = get_catalog(q, p, dmax)
    z = q.zero()
    pairs = list(itertools.product(cat.classes, repeat=2))
    for M0, M1 in _sample(random.Random(seed), pairs, samples):
        key = LinComb.monomial(p, (z, z, M0, M1))
        try:
            back = D2.from_triangular(cat, D2.to_triangular(cat, key))
            tri = LinComb.monomial(p, (z, z, M0, M1))
            again = D2.to_triangular(cat, D2.from_triangular(cat, tri))
            ok = back == key and again == tri
        except InternalError as exc:
            ok = False
            rep.notes.append(str(exc))
        rep.record(ok, lambda: _fmt(M0, M1))
    return rep


def _klist(cat: Catalog, alpha=None, beta=None) -> LinComb:
    return D2.dh2_monomial(cat, alpha, beta)


def suite_k_relations(q, p, dmax, samples=None, seed=0) -> Report:
    rep = Report("k-relations", q.spec, p, tuple(dmax), seed)
    cat = get_catalog(q, p, dmax)
    ks = small_vectors(q.n)
    prod = lambda x, y: D2.dh2_product(cat, x, y)
    # K_a K_b = K_{a+b}, K*_a K*_b = K*_{a+b}, K*_a K_b = K_b K*_a
    for a, b in itertools.product(ks, repeat=2):
        ab = vadd(a, b)
        rep.record(prod(_klist(cat, a), _klist(cat, b)) == _klist(cat, ab), f"K{a}K{b}")
        rep.record(prod(_klist(cat, None, a), _klist(cat, None, b)) == _klist(cat, None, ab), f"Ks{a}Ks{b}")
        rep.record(prod(_klist(cat, None, a), _klist(cat, b)) == prod(_klist(cat, b), _klist(cat, None, a)),
                   f"Ks{a}K{b}")
    cases = list(itertools.product(cat.classes, cat.classes, ks))
    for A0, A1, b in _sample(random.Random(seed), cases, samples):
        u = D2.generator(cat, A0, A1)
        da = vsub(cat.dim(A0), cat.dim(A1))
        kb, ksb = _klist(cat, b), _klist(cat, None, b)
        lhs = prod(u, kb)
        rhs = prod(kb, u).scale(v_pow(-symmetric_form(q, b, da), p))
        rep.record(lhs == rhs, lambda: f"u[{A0};{A1}]K{b}")
        lhs = prod(u, ksb)
        rhs = prod(ksb, u).scale(v_pow(symmetric_form(q, b, da), p))
        rep.record(lhs == rhs, lambda: f"u[{A0};{A1}]Ks{b}")
        # keys are K_alpha K*_beta u read left to right
        full = prod(prod(kb, _klist(cat, None, b)), u)
        rep.record(full == D2.dh2_monomial(cat, b, b, A0, A1), lambda: f"K{b}Ks{b}u[{A0};{A1}]")
    return rep


def suite_grading(q, p, dmax, samples=None, seed=0) -> Report:
    rep = Report("grading", q.spec, p, tuple(dmax), seed)
    cat = get_catalog(q, p, dmax)
    ks = small_vectors(q.n)
    gens = [(A0, A1) for A0 in cat.classes for A1 in cat.classes]
    pairs = [(x, y) for x in gens for y in gens
             if cat.fits(vadd(cat.dim(x[0]), cat.dim(y[0]))) and cat.fits(vadd(cat.dim(x[1]), cat.dim(y[1])))]
    rng = random.Random(seed)
    for (A0, A1), (B0, B1) in _sample(rng, pairs, samples):
        a, b = rng.choice(ks), rng.choice(ks)
        kx = (a, b, A0, A1)
        ky = (b, a, B0, B1)
        g = vadd(D2.grade(cat, kx), D2.grade(cat, ky))
        prod = D2.dh2_product(cat, LinComb.monomial(p, kx), LinComb.monomial(p, ky))
        ok = all(D2.grade(cat, k) == g for k in prod.terms)
        rep.record(ok, lambda: f"{kx} * {ky}")
    return rep


def suite_aut_crosscheck(q, p, dmax, samples=None, seed=0) -> Report:
    rep = Report("aut-crosscheck", q.spec, p, tuple(dmax), seed)
    cat = get_catalog(q, p, dmax)
    for c in _sample(random.Random(seed), list(cat.classes), samples):
        m = cat.realize(c)
        brute = R.aut_count_bruteforce(m)
        rep.record(brute == cat.aut[c], lambda: f"{c} brute={brute} closed={cat.aut[c]}")
    return rep


def suite_embeddings(q, p, dmax, samples=None, seed=0) -> Report:
    """Both embeddings multiply like the Hall algebra and are injective on monomials."""
    rep = Report("embeddings", q.spec, p, tuple(dmax), seed)
    small = get_catalog(q, p, dmax)
    big = get_catalog(q, p, _double(dmax))
    ks = small_vectors(q.n)
    monos = [(M, a) for M in small.classes for a in ks]
    pairs = list(itertools.product(monos, repeat=2))
    for (M, a), (N, b) in _sample(random.Random(seed), pairs, samples):
        x, y = HC.rh_monomial(big, M, a), HC.rh_monomial(big, N, b)
        xy = HC.rh_product(big, x, y)
        for name, emb in (("i+", D2.embed_plus), ("i-", D2.embed_minus)):
            ok = D2.dh2_product(big, emb(big, x), emb(big, y)) == emb(big, xy)
            rep.record(ok, lambda: f"{name} on u[{M}]K{a} * u[{N}]K{b}")
    for name, emb in (("i+", D2.embed_plus), ("i-", D2.embed_minus)):
        images = {tuple(emb(small, HC.rh_monomial(small, M, a)).keys()) for M, a in monos}
        rep.record(len(images) == len(monos), f"{name} not injective on monomials")
    return rep


def suite_gaussian(q, p, dmax, samples=None, seed=0) -> Report:
    """g^{k^n}_{k^{n-d}, k^d} against the Gaussian binomial on a single vertex."""
    rep = Report("gaussian", q.spec, p, tuple(dmax), seed)
    if q.n != 1:
        rep.notes.append("gaussian suite needs the quiver a1")
        return rep
    cat = get_catalog(q, p, dmax)
    for n in range(dmax[0] + 1):
        for d in range(n + 1):
            k = lambda m: R.IsoClass.interval(1, 1, m) if m else ZERO
            g = cat.hall(k(n), k(n - d), k(d))
            expect = fl.gaussian_binomial(n, d, p)
            rep.record(g == expect, lambda: f"n={n} d={d} g={g} expected={expect}")
    return rep


RUNNERS = {
    "green": suite_green,
    "assoc-dh2": suite_assoc_dh2,
    "assoc-dh1": suite_assoc_dh1,
    "assoc-dhz1": suite_assoc_dhz1,
    "drinfeld": suite_drinfeld,
    "phi": suite_phi,
    "prop32": suite_prop32,
    "rp-sum": suite_rp_sum,
    "triangular": suite_triangular,
    "k-relations": suite_k_relations,
    "grading": suite_grading,
    "aut-crosscheck": suite_aut_crosscheck,
    "embeddings": suite_embeddings,
    "gaussian": suite_gaussian,
}


def run_suite(name: str, q: Quiver, p: int, dmax, samples=None, seed=0) -> Report:
    try:
        runner = RUNNERS[name]
    except KeyError:
        raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}") from None
    return runner(q, p, tuple(dmax), samples=samples, seed=seed)
