"""Derived categories: triangle and twisted-arrow categories, slices,
Cech categories of covers, and the codiscrete fattening generator.

Element names in every derived category are canonical renderings of the
defining tuples, so two runs (or two construction routes) that build the
same category produce bit-identical tables.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import (CatFunctor, FinCat, NatTrans, codisc, disc,
                   identity_functor, is_isomorphism_of_categories, opposite,
                   render_pair, render_triple, strict_pullback,
                   validate_nat_trans)


@dataclass(frozen=True)
class AdjointSectionWitness:
    """A section s of p together with the comparison transformation.

    p . s = id on the nose; eta is a natural transformation from s . p
    to the identity of the total category whose whiskering with p is the
    identity transformation of p.  direction records on which side s is
    adjoint to p.
    """

    projection: CatFunctor
    section: CatFunctor
    direction: str  # "left" | "right"
    eta: NatTrans

    def validate(self) -> bool:
        from .core import compose_functors
        p, s = self.projection, self.section
        if compose_functors(p, s) != identity_functor(p.cod):
            return False
        if not validate_nat_trans(self.eta).ok:
            return False
        sp = compose_functors(s, p)
        E = p.dom
        pair = (self.eta.source, self.eta.target)
        if pair not in ((sp, identity_functor(E)),
                        (identity_functor(E), sp)):
            return False
        # whiskering with p must give the identity transformation of p
        return all(p.mor_map[self.eta.components[e]]
                   == p.cod.ident[p.obj_map[e]]
                   for e in E.objects)


@dataclass(frozen=True)
class SpanDiagram:
    """The two commuting squares relating S(f) to the twisted arrows."""

    f: CatFunctor
    S: FinCat
    Q_f: CatFunctor       # S(f) -> X
    fhat: CatFunctor      # S(f) -> twisted_arrow(Y)
    P_f: CatFunctor       # S(f) -> Y^op
    cod_nat: CatFunctor   # twisted_arrow(Y) -> Y
    dom_nat: CatFunctor   # twisted_arrow(Y) -> Y^op

    def squares_commute(self) -> bool:
        from .core import compose_functors
        left = compose_functors(self.f, self.Q_f) == compose_functors(
            self.cod_nat, self.fhat)
        right = self.P_f == compose_functors(self.dom_nat, self.fhat)
        return left and right


@dataclass(frozen=True)
class CoverData:
    base: tuple[str, ...]
    pieces: dict[str, tuple[str, ...]]

    def is_cover(self) -> bool:
        covered = set()
        for part in self.pieces.values():
            covered.update(part)
        return set(self.base) == covered and all(
            set(part) <= set(self.base) for part in self.pieces.values())


def t_category(Y: FinCat):
    """Triangle category TY: objects are morphisms of Y, a morphism
    g -> g' is an h with g' = h . g.

    Returns (TY, dom_T, cod_T, sigma) where sigma witnesses the
    left-adjoint section a -> id_a of dom_T.
    """
    objs = tuple(Y.morphisms)
    mors = []
    src = {}
    tgt = {}
    data = {}
    for g in Y.morphisms:
        for h in Y.morphisms:
            if Y.src[h] != Y.tgt[g]:
                continue
            name = render_pair(g, h)
            mors.append(name)
            src[name] = g
            tgt[name] = Y.comp[(h, g)]
            data[name] = (g, h)
    comp = {}
    for n2, (g2, h2) in data.items():
        for n1, (g1, h1) in data.items():
            if tgt[n1] != g2:
                continue
            comp[(n2, n1)] = render_pair(g1, Y.comp[(h2, h1)])
    TY = FinCat(
        objects=objs,
        morphisms=tuple(mors),
        src=src,
        tgt=tgt,
        ident={g: render_pair(g, Y.ident[Y.tgt[g]]) for g in objs},
        comp=comp,
    )
    base = disc(Y.objects)
    dom_T = CatFunctor(TY, base,
                       {g: Y.src[g] for g in objs},
                       {n: Y.src[data[n][0]] for n in TY.morphisms})
    cod_T = CatFunctor(TY, Y,
                       {g: Y.tgt[g] for g in objs},
                       {n: data[n][1] for n in TY.morphisms})
    sigma_f = CatFunctor(base, TY,
                         {a: Y.ident[a] for a in Y.objects},
                         {a: TY.ident[Y.ident[a]] for a in Y.objects})
    from .core import compose_functors
    # counit (sigma . dom_T) => id_TY; at g it is the triangle id_a -> g
    eta = NatTrans(compose_functors(sigma_f, dom_T), identity_functor(TY),
                   {g: render_pair(Y.ident[Y.src[g]], g) for g in objs})
    sigma = AdjointSectionWitness(dom_T, sigma_f, "left", eta)
    return TY, dom_T, cod_T, sigma


def twisted_arrow(Y: FinCat):
    """Twisted arrow category: objects are morphisms of Y, a morphism
    g -> g' is a pair (h, k) with g' = h . g . k.

    Returns (TwY, cod_nat, dom_nat, incl_T) where dom_nat lands in Y^op
    and incl_T embeds the triangle category TY.
    """
    objs = tuple(Y.morphisms)
    mors = []
    src = {}
    tgt = {}
    data = {}
    for g in Y.morphisms:
        for h in Y.morphisms:
            if Y.src[h] != Y.tgt[g]:
                continue
            for k in Y.morphisms:
                if Y.tgt[k] != Y.src[g]:
                    continue
                name = render_triple(g, h, k)
                mors.append(name)
                src[name] = g
                tgt[name] = Y.comp[(Y.comp[(h, g)], k)]
                data[name] = (g, h, k)
    comp = {}
    for n2, (g2, h2, k2) in data.items():
        for n1, (g1, h1, k1) in data.items():
            if tgt[n1] != g2:
                continue
            comp[(n2, n1)] = render_triple(
                g1, Y.comp[(h2, h1)], Y.comp[(k1, k2)])
    TwY = FinCat(
        objects=objs,
        morphisms=tuple(mors),
        src=src,
        tgt=tgt,
        ident={g: render_triple(g, Y.ident[Y.tgt[g]], Y.ident[Y.src[g]])
               for g in objs},
        comp=comp,
    )
    Yop = opposite(Y)
    cod_nat = CatFunctor(TwY, Y,
                         {g: Y.tgt[g] for g in objs},
                         {n: data[n][1] for n in TwY.morphisms})
    dom_nat = CatFunctor(TwY, Yop,
                         {g: Y.src[g] for g in objs},
                         {n: data[n][2] for n in TwY.morphisms})
    TY = t_category(Y)[0]
    incl_T = CatFunctor(
        TY, TwY,
        {g: g for g in TY.objects},
        {render_pair(g, h): render_triple(g, h, Y.ident[Y.src[g]])
         for g in Y.morphisms for h in Y.morphisms
         if Y.src[h] == Y.tgt[g]})
    return TwY, cod_nat, dom_nat, incl_T


def t_op_category(Y: FinCat):
    """T-op category: objects are morphisms of Y, a morphism g -> g' is
    a k with g' = g . k.  Computed as the triangle category of Y^op and
    re-oriented; returns (ToY, cod_To, tau, incl) with the wide
    embedding into the twisted arrow category.
    """
    Yop = opposite(Y)
    Top, dom_op, _, sigma_op = t_category(Yop)
    # dom in Y^op reads off tgt in Y, so dom_op is the wanted projection
    ToY = Top
    base = disc(Y.objects)
    cod_To = CatFunctor(ToY, base, dict(dom_op.obj_map), dict(dom_op.mor_map))
    tau_f = CatFunctor(base, ToY, dict(sigma_op.section.obj_map),
                       dict(sigma_op.section.mor_map))
    from .core import compose_functors
    eta = NatTrans(compose_functors(tau_f, cod_To), identity_functor(ToY),
                   dict(sigma_op.eta.components))
    tau = AdjointSectionWitness(cod_To, tau_f, "right", eta)
    TwY = twisted_arrow(Y)[0]
    incl = CatFunctor(
        ToY, TwY,
        {g: g for g in ToY.objects},
        {render_pair(g, k): render_triple(g, Y.ident[Y.tgt[g]], k)
         for g in Y.morphisms for k in Y.morphisms
         if Y.tgt[k] == Y.src[g]})
    return ToY, cod_To, tau, incl


def comma_slice(f: CatFunctor):
    """The slice of f: objects are pairs (eta: a -> f(b), b).

    Built as the strict pullback of cod_T: TY -> Y against f, per its
    definition.  Returns (slice, rho, proj_X) with rho landing in
    disc(Y_0).
    """
    Y = f.cod
    TY, dom_T, cod_T, _ = t_category(Y)
    P, p_T, p_X = strict_pullback(cod_T, f)
    base = disc(Y.objects)
    from .core import compose_functors
    rho = compose_functors(dom_T, p_T)
    rho = CatFunctor(P, base, dict(rho.obj_map), dict(rho.mor_map))
    return P, rho, p_X


def comma_fiber(y: str, f: CatFunctor) -> FinCat:
    """Full subcategory of the slice on objects with src(eta) = y."""
    Y = f.cod
    if y not in set(Y.objects):
        raise ValueError(f"{y} is not an object of the codomain")
    P, rho, _ = comma_slice(f)
    objs = tuple(o for o in P.objects if rho.obj_map[o] == y)
    keep = set(objs)
    mors = tuple(m for m in P.morphisms
                 if P.src[m] in keep and P.tgt[m] in keep)
    morset = set(mors)
    return FinCat(
        objects=objs,
        morphisms=mors,
        src={m: P.src[m] for m in mors},
        tgt={m: P.tgt[m] for m in mors},
        ident={o: P.ident[o] for o in objs},
        comp={(g, h): v for (g, h), v in P.comp.items()
              if g in morset and h in morset},
    )


def s_category(f: CatFunctor) -> SpanDiagram:
    """S(f): strict pullback of cod over the twisted arrows of the
    codomain, assembled into the commuting span diagram."""
    X, Y = f.dom, f.cod
    TwY, cod_nat, dom_nat, _ = twisted_arrow(Y)
    S, fhat, Q_f = strict_pullback(cod_nat, f)
    from .core import compose_functors
    P_f = compose_functors(dom_nat, fhat)
    span = SpanDiagram(f=f, S=S, Q_f=Q_f, fhat=fhat, P_f=P_f,
                       cod_nat=cod_nat, dom_nat=dom_nat)
    if not span.squares_commute():
        raise RuntimeError("span diagram fails to commute (construction bug)")
    return span


def cech_category(cover: CoverData):
    """Cech category of a cover: objects (i, m) with m in U_i, and a
    unique morphism (i, m) -> (j, m) whenever m lies in both pieces.

    Returns (U2, pi) with pi the projection to disc(base).
    """
    if not cover.is_cover():
        raise ValueError("pieces do not cover the base")
    piece_names = tuple(cover.pieces)
    objs = []
    for i in piece_names:
        for m in cover.base:
            if m in cover.pieces[i]:
                objs.append(render_pair(i, m))
    carrier = {render_pair(i, m): (i, m)
               for i in piece_names for m in cover.pieces[i]}
    mors = []
    src = {}
    tgt = {}
    data = {}
    for o1 in objs:
        i, m = carrier[o1]
        for o2 in objs:
            j, m2 = carrier[o2]
            if m != m2:
                continue
            name = render_triple(i, j, m)
            mors.append(name)
            src[name] = o1
            tgt[name] = o2
            data[name] = (i, j, m)
    comp = {}
    for n2, (j2, k2, m2) in data.items():
        for n1, (i1, j1, m1) in data.items():
            if m1 != m2 or j1 != j2:
                continue
            comp[(n2, n1)] = render_triple(i1, k2, m1)
    U2 = FinCat(
        objects=tuple(objs),
        morphisms=tuple(mors),
        src=src,
        tgt=tgt,
        ident={o: render_triple(carrier[o][0], carrier[o][0], carrier[o][1])
               for o in objs},
        comp=comp,
    )
    base = disc(cover.base)
    pi = CatFunctor(U2, base,
                    {o: carrier[o][1] for o in objs},
                    {n: data[n][2] for n in U2.morphisms})
    return U2, pi


def codisc_functor(p: dict[str, str], S, T) -> CatFunctor:
    """codisc(S) -> codisc(T) induced by a point map p: S -> T."""
    CS, CT = codisc(S), codisc(T)
    return CatFunctor(
        CS, CT,
        {s: p[s] for s in CS.objects},
        {render_pair(a, b): render_pair(p[a], p[b])
         for a in CS.objects for b in CS.objects})


def to_codisc(Y: FinCat) -> CatFunctor:
    """Canonical functor Y -> codisc(Y_0), identity on objects."""
    CY = codisc(Y.objects)
    return CatFunctor(
        Y, CY,
        {o: o for o in Y.objects},
        {m: render_pair(Y.src[m], Y.tgt[m]) for m in Y.morphisms})


def fatten(Y: FinCat, p: dict[str, str]):
    """Pull Y back along a surjection of object sets.

    p maps a fresh point set onto the objects of Y; the result is the
    strict pullback of codisc(points) -> codisc(Y_0) <- Y together with
    the projection functor, which is fully faithful and essentially
    surjective by construction.
    """
    if set(p.values()) != set(Y.objects):
        raise ValueError("point map must be a surjection onto the objects")
    left = codisc_functor(p, tuple(p), Y.objects)
    right = to_codisc(Y)
    X, _, proj = strict_pullback(left, right)
    f = CatFunctor(X, Y, dict(proj.obj_map), dict(proj.mor_map))
    return X, f


def codisc_decomposition_check(f: CatFunctor) -> bool:
    """For a fully faithful f, the domain is isomorphic to the pullback
    of codisc(X_0) -> codisc(Y_0) <- Y; checks the canonical comparison
    functor is an isomorphism of categories."""
    X, Y = f.dom, f.cod
    left = codisc_functor(dict(f.obj_map), X.objects, Y.objects)
    right = to_codisc(Y)
    P, _, _ = strict_pullback(left, right)
    obj_map = {x: render_pair(x, f.obj_map[x]) for x in X.objects}
    mor_map = {m: render_pair(render_pair(X.src[m], X.tgt[m]), f.mor_map[m])
               for m in X.morphisms}
    if not (set(obj_map.values()) <= set(P.objects)
            and set(mor_map.values()) <= set(P.morphisms)):
        return False
    comparison = CatFunctor(X, P, obj_map, mor_map)
    return is_isomorphism_of_categories(comparison)


def slice_decomposition_check(f: CatFunctor) -> bool:
    """For fully faithful f, the slice of f is isomorphic to the
    pullback of codisc(X_0) -> codisc(Y_0) <- TY (over tgt)."""
    X, Y = f.dom, f.cod
    TY, _, cod_T, _ = t_category(Y)
    from .core import compose_functors
    q = compose_functors(to_codisc(Y), cod_T)
    left = codisc_functor(dict(f.obj_map), X.objects, Y.objects)
    RHS, _, _ = strict_pullback(left, q)
    P, p_T, p_X = strict_pullback(cod_T, f)  # the slice with both legs
    # slice objects are pairs (eta, b); the comparison sends one to
    # the pullback pair (b, eta) on the other side
    obj_map = {o: render_pair(p_X.obj_map[o], p_T.obj_map[o])
               for o in P.objects}
    mor_map = {}
    for m in P.morphisms:
        h = p_X.mor_map[m]
        mor_map[m] = render_pair(
            render_pair(X.src[h], X.tgt[h]), p_T.mor_map[m])
    if not (set(obj_map.values()) <= set(RHS.objects)
            and set(mor_map.values()) <= set(RHS.morphisms)):
        return False
    comparison = CatFunctor(P, RHS, obj_map, mor_map)
    return is_isomorphism_of_categories(comparison)
