"""Generators of small categories, functors, natural transformations,
covers, and point surjections used across the test suite.

Everything is deterministic: exhaustive enumerations are ordered, and
randomized families take an explicit seed.
"""

from __future__ import annotations

import random
from itertools import combinations

from thma.core import (CatFunctor, FinCat, NatTrans, codisc, disc, product,
                       validate_category, validate_functor,
                       validate_nat_trans)
from thma.constructions import CoverData, fatten


# ---------------------------------------------------------------------------
# individual categories


def preorder_category(points, leq) -> FinCat:
    """Category of a preorder: at most one morphism a -> b, named
    le(a,b); leq is a set of ordered pairs, assumed reflexive and
    transitive."""
    points = tuple(points)
    mors = tuple(f"le({a},{b})" for a, b in sorted(leq))
    src = {f"le({a},{b})": a for a, b in leq}
    tgt = {f"le({a},{b})": b for a, b in leq}
    ident = {a: f"le({a},{a})" for a in points}
    comp = {}
    rel = set(leq)
    for a, b in rel:
        for c in points:
            if (b, c) in rel:
                comp[(f"le({b},{c})", f"le({a},{b})")] = f"le({a},{c})"
    return FinCat(points, mors, src, tgt, ident, comp)


def walking_arrow() -> FinCat:
    return preorder_category(("0", "1"), {("0", "0"), ("1", "1"),
                                          ("0", "1")})


def chain_poset(n: int) -> FinCat:
    pts = tuple(str(i) for i in range(n))
    leq = {(str(i), str(j)) for i in range(n) for j in range(i, n)}
    return preorder_category(pts, leq)


def square_poset() -> FinCat:
    """The poset 0 < a, b < 1 with a, b incomparable."""
    pts = ("0", "a", "b", "1")
    leq = {(p, p) for p in pts} | {("0", "a"), ("0", "b"), ("0", "1"),
                                   ("a", "1"), ("b", "1")}
    return preorder_category(pts, leq)


def cyclic_group_category(n: int) -> FinCat:
    mors = tuple(f"g{k}" for k in range(n))
    comp = {(f"g{a}", f"g{b}"): f"g{(a + b) % n}"
            for a in range(n) for b in range(n)}
    return FinCat(("*",), mors, {m: "*" for m in mors},
                  {m: "*" for m in mors}, {"*": "g0"}, comp)


def idempotent_monoid_category() -> FinCat:
    """One object, morphisms {e, z} with z.z = z."""
    comp = {("e", "e"): "e", ("e", "z"): "z",
            ("z", "e"): "z", ("z", "z"): "z"}
    return FinCat(("*",), ("e", "z"), {"e": "*", "z": "*"},
                  {"e": "*", "z": "*"}, {"*": "e"}, comp)


# ---------------------------------------------------------------------------
# exhaustive enumerations


def all_preorders(points) -> list[FinCat]:
    """Every reflexive-transitive relation on the given labels."""
    points = tuple(points)
    diag = {(p, p) for p in points}
    off = [(a, b) for a in points for b in points if a != b]
    out = []
    for r in range(len(off) + 1):
        for extra in combinations(off, r):
            rel = diag | set(extra)
            if all((a, d) in rel
                   for a, b in rel for c, d in rel if b == c):
                out.append(preorder_category(points, rel))
    return out


def exhaustive_small_categories(max_objects=3, max_morphisms=8):
    """Labeled preorders on <= max_objects points plus the small groups
    and monoids, filtered by size."""
    cats = []
    for k in range(1, max_objects + 1):
        cats.extend(all_preorders(tuple(f"p{i}" for i in range(k))))
    cats.extend([cyclic_group_category(2), cyclic_group_category(3),
                 cyclic_group_category(4), idempotent_monoid_category()])
    cats = [C for C in cats if len(C.objects) <= max_objects
            and len(C.morphisms) <= max_morphisms]
    for C in cats:
        assert validate_category(C).ok
    return cats


# ---------------------------------------------------------------------------
# randomized pools


def category_pool() -> list[FinCat]:
    """Small, named categories for randomized functor generation."""
    pool = [
        disc(("x",)), disc(("x", "y")), disc(("x", "y", "z")),
        codisc(("a", "b")),
        walking_arrow(), chain_poset(3), chain_poset(4), square_poset(),
        preorder_category(("u", "v", "w"),
                          {("u", "u"), ("v", "v"), ("w", "w"),
                           ("u", "w"), ("v", "w")}),
        cyclic_group_category(2), cyclic_group_category(3),
        idempotent_monoid_category(),
    ]
    for C in pool:
        assert validate_category(C).ok
    return pool


def _monotone_functor(rng, P: FinCat, Q: FinCat) -> CatFunctor | None:
    """Random monotone map between preorder categories (unique-morphism
    categories), if one exists from a few random attempts."""
    for _ in range(8):
        obj_map = {a: rng.choice(Q.objects) for a in P.objects}
        mor_map = {}
        ok = True
        for m in P.morphisms:
            hom = Q.hom(obj_map[P.src[m]], obj_map[P.tgt[m]])
            if len(hom) != 1:
                ok = False
                break
            mor_map[m] = hom[0]
        if ok:
            return CatFunctor(P, Q, obj_map, mor_map)
    return None


def _is_thin(C: FinCat) -> bool:
    return all(len(C.hom(a, b)) <= 1 for a in C.objects for b in C.objects)


def _group_hom(rng, G: FinCat, H: FinCat) -> CatFunctor:
    """Random monoid homomorphism between cyclic group categories."""
    m, n = len(G.morphisms), len(H.morphisms)
    ts = [t for t in range(n) if (t * m) % n == 0]
    t = rng.choice(ts)
    mor_map = {f"g{k}": f"g{(k * t) % n}" for k in range(m)}
    return CatFunctor(G, H, {"*": "*"}, mor_map)


def _constant_functor(rng, X: FinCat, Y: FinCat) -> CatFunctor:
    c = rng.choice(Y.objects)
    return CatFunctor(X, Y, {o: c for o in X.objects},
                      {m: Y.ident[c] for m in X.morphisms})


def _to_codisc_functor(rng, X: FinCat, pts) -> CatFunctor:
    Y = codisc(pts)
    obj_map = {o: rng.choice(pts) for o in X.objects}
    mor_map = {m: f"({obj_map[X.src[m]]},{obj_map[X.tgt[m]]})"
               for m in X.morphisms}
    return CatFunctor(X, Y, obj_map, mor_map)


def _from_disc_functor(rng, pts, Y: FinCat) -> CatFunctor:
    X = disc(pts)
    obj_map = {o: rng.choice(Y.objects) for o in X.objects}
    mor_map = {X.ident[o]: Y.ident[obj_map[o]] for o in X.objects}
    return CatFunctor(X, Y, obj_map, mor_map)


def functor_family(count: int, seed: int,
                   max_mor: int = 10) -> list[CatFunctor]:
    """Deterministic mixed family of validated functors between
    categories of at most 4 objects and at most max_mor morphisms
    on each side (bisimplicial constructions grow with the fourth
    power of the out-degree)."""
    rng = random.Random(seed)
    pool = category_pool()
    groups = [C for C in pool if len(C.objects) == 1
              and C.morphisms[0].startswith("g")]
    thin = [C for C in pool if _is_thin(C) and len(C.hom(
        C.objects[0], C.objects[0])) == 1]
    out: list[CatFunctor] = []
    while len(out) < count:
        kind = rng.randrange(6)
        if kind == 0:
            P, Q = rng.choice(thin), rng.choice(thin)
            f = _monotone_functor(rng, P, Q)
            if f is None:
                continue
        elif kind == 1:
            f = _group_hom(rng, rng.choice(groups), rng.choice(groups))
        elif kind == 2:
            f = _constant_functor(rng, rng.choice(pool), rng.choice(pool))
        elif kind == 3:
            k = rng.randrange(1, 4)
            f = _to_codisc_functor(rng, rng.choice(pool),
                                   tuple(f"c{i}" for i in range(k)))
        elif kind == 4:
            k = rng.randrange(1, 4)
            f = _from_disc_functor(rng, tuple(f"d{i}" for i in range(k)),
                                   rng.choice(pool))
        else:
            Y = rng.choice(pool)
            extra = rng.randrange(0, 2 if len(Y.objects) == 1 else 3)
            pts = tuple(f"q{i}" for i in range(len(Y.objects) + extra))
            p = _random_surjection(rng, pts, Y.objects)
            _, f = fatten(Y, p)
        if (len(f.dom.morphisms) > max_mor
                or len(f.cod.morphisms) > max_mor):
            continue
        assert validate_functor(f).ok
        out.append(f)
    return out


def _random_surjection(rng, pts, objs) -> dict[str, str]:
    objs = list(objs)
    pts = list(pts)
    assert len(pts) >= len(objs)
    rng.shuffle(pts)
    p = {pt: objs[i] for i, pt in enumerate(pts[:len(objs)])}
    for pt in pts[len(objs):]:
        p[pt] = rng.choice(objs)
    return p


def fatten_family(count: int, seed: int):
    """(base, surjection, functor) triples over poset, group, and mixed
    bases."""
    rng = random.Random(seed)
    bases = [walking_arrow(), chain_poset(3), square_poset(),
             cyclic_group_category(2), cyclic_group_category(3),
             idempotent_monoid_category(),
             product(walking_arrow(), cyclic_group_category(2)),
             disc(("x", "y"))]
    out = []
    while len(out) < count:
        Y = rng.choice(bases)
        # keep one-object bases to few points: their nerves grow fastest
        extra = rng.randrange(0, 2 if len(Y.objects) == 1 else 3)
        pts = tuple(f"q{i}" for i in range(len(Y.objects) + extra))
        p = _random_surjection(rng, pts, Y.objects)
        _, f = fatten(Y, p)
        out.append((Y, p, f))
    return out


def nat_trans_family(count: int, seed: int) -> list[NatTrans]:
    """Validated natural transformations: pointwise-<= pairs of monotone
    maps into preorders, and arbitrary pairs of functors into codiscrete
    categories."""
    rng = random.Random(seed)
    pool = category_pool()
    thin = [C for C in pool if _is_thin(C) and len(C.hom(
        C.objects[0], C.objects[0])) == 1]
    out: list[NatTrans] = []
    while len(out) < count:
        if rng.randrange(2):
            P, Q = rng.choice(thin), rng.choice(thin)
            F = _monotone_functor(rng, P, Q)
            G = _monotone_functor(rng, P, Q)
            if F is None or G is None:
                continue
            comps = {}
            ok = True
            for a in P.objects:
                hom = Q.hom(F.obj_map[a], G.obj_map[a])
                if not hom:
                    ok = False
                    break
                comps[a] = hom[0]
            if not ok:
                continue
            alpha = NatTrans(F, G, comps)
        else:
            X = rng.choice(pool)
            pts = tuple(f"c{i}" for i in range(rng.randrange(1, 4)))
            F = _to_codisc_functor(rng, X, pts)
            G = _to_codisc_functor(rng, X, pts)
            comps = {o: f"({F.obj_map[o]},{G.obj_map[o]})"
                     for o in X.objects}
            alpha = NatTrans(F, G, comps)
        assert validate_nat_trans(alpha).ok
        out.append(alpha)
    return out


def cover_family(count: int, seed: int) -> list[CoverData]:
    """Random covers of a base set of <= 6 points by <= 4 pieces."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        base = tuple(str(i) for i in range(1, rng.randrange(2, 7)))
        k = rng.randrange(1, 5)
        pieces = {}
        for i in range(k):
            size = rng.randrange(1, len(base) + 1)
            pieces[f"U{i}"] = tuple(sorted(rng.sample(base, size)))
        covered = set().union(*pieces.values())
        missing = [b for b in base if b not in covered]
        if missing:
            pieces["U0"] = tuple(sorted(set(pieces["U0"]) | set(missing)))
        cover = CoverData(base, pieces)
        assert cover.is_cover()
        out.append(cover)
    return out
