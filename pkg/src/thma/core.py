"""Finite categories, functors and natural transformations.

A finite category is stored as explicit tables: object and morphism
identifier lists, source/target/identity assignments, and a full
composition table keyed by composable pairs.  All values are immutable
after construction and every operation here is a pure function.
"""

from __future__ import annotations

from dataclasses import dataclass, field


def render_pair(a: str, b: str) -> str:
    """Canonical name for a derived element built from two parts."""
    return f"({a},{b})"


def render_triple(a: str, b: str, c: str) -> str:
    return f"({a},{b},{c})"


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    violations: tuple[str, ...] = ()

    def __bool__(self) -> bool:
        return self.ok


@dataclass(frozen=True)
class FinCat:
    """A finite category given by explicit tables.

    comp is keyed by (g, f) with tgt(f) = src(g) and holds g after f.
    """

    objects: tuple[str, ...]
    morphisms: tuple[str, ...]
    src: dict[str, str]
    tgt: dict[str, str]
    ident: dict[str, str]
    comp: dict[tuple[str, str], str]
    _hom: dict[tuple[str, str], tuple[str, ...]] = field(
        init=False, repr=False, compare=False, default_factory=dict)

    def __post_init__(self):
        hom: dict[tuple[str, str], list[str]] = {}
        for m in self.morphisms:
            hom.setdefault((self.src[m], self.tgt[m]), []).append(m)
        object.__setattr__(
            self, "_hom", {k: tuple(v) for k, v in hom.items()})

    def hom(self, a: str, b: str) -> tuple[str, ...]:
        return self._hom.get((a, b), ())

    def compose(self, g: str, f: str) -> str:
        """g after f; KeyError on a non-composable pair."""
        return self.comp[(g, f)]

    def id_of(self, obj: str) -> str:
        return self.ident[obj]

    def is_identity(self, m: str) -> bool:
        return self.ident[self.src[m]] == m

    def non_identity_morphisms(self) -> tuple[str, ...]:
        return tuple(m for m in self.morphisms if not self.is_identity(m))


@dataclass(frozen=True)
class CatFunctor:
    dom: FinCat
    cod: FinCat
    obj_map: dict[str, str]
    mor_map: dict[str, str]

    def on_obj(self, o: str) -> str:
        return self.obj_map[o]

    def on_mor(self, m: str) -> str:
        return self.mor_map[m]

    def is_identity(self) -> bool:
        return (self.dom == self.cod
                and all(v == k for k, v in self.obj_map.items())
                and all(v == k for k, v in self.mor_map.items()))


@dataclass(frozen=True)
class NatTrans:
    source: CatFunctor
    target: CatFunctor
    components: dict[str, str]


def validate_category(C: FinCat) -> ValidationReport:
    """Check all category axioms; failures are reported, not raised."""
    bad: list[str] = []
    objset = set(C.objects)
    for m in C.morphisms:
        if C.src.get(m) not in objset or C.tgt.get(m) not in objset:
            bad.append(f"morphism {m}: src/tgt not declared objects")
    for o in C.objects:
        e = C.ident.get(o)
        if e is None or e not in set(C.morphisms):
            bad.append(f"object {o}: missing identity")
        elif C.src[e] != o or C.tgt[e] != o:
            bad.append(f"object {o}: identity {e} is not an endomorphism")
    # composition defined exactly on composable pairs, with correct typing
    for g in C.morphisms:
        for f in C.morphisms:
            defined = (g, f) in C.comp
            composable = C.tgt[f] == C.src[g]
            if composable and not defined:
                bad.append(f"missing composite for ({g},{f})")
            elif defined and not composable:
                bad.append(f"spurious composite for ({g},{f})")
            elif defined:
                gf = C.comp[(g, f)]
                if gf not in set(C.morphisms):
                    bad.append(f"composite of ({g},{f}) undeclared: {gf}")
                elif C.src[gf] != C.src[f] or C.tgt[gf] != C.tgt[g]:
                    bad.append(f"composite of ({g},{f}) badly typed")
    if bad:
        return ValidationReport(False, tuple(bad))
    for f in C.morphisms:
        if C.comp[(C.ident[C.tgt[f]], f)] != f:
            bad.append(f"left unit law fails at {f}")
        if C.comp[(f, C.ident[C.src[f]])] != f:
            bad.append(f"right unit law fails at {f}")
    for h in C.morphisms:
        for g in C.morphisms:
            if C.src[h] != C.tgt[g]:
                continue
            for f in C.morphisms:
                if C.src[g] != C.tgt[f]:
                    continue
                if C.comp[(h, C.comp[(g, f)])] != C.comp[(C.comp[(h, g)], f)]:
                    bad.append(f"associativity fails at ({h},{g},{f})")
    return ValidationReport(not bad, tuple(bad))


def validate_functor(F: CatFunctor) -> ValidationReport:
    bad: list[str] = []
    C, D = F.dom, F.cod
    for o in C.objects:
        if F.obj_map.get(o) not in set(D.objects):
            bad.append(f"object {o}: image undeclared")
    for m in C.morphisms:
        fm = F.mor_map.get(m)
        if fm not in set(D.morphisms):
            bad.append(f"morphism {m}: image undeclared")
            continue
        if D.src[fm] != F.obj_map[C.src[m]]:
            bad.append(f"morphism {m}: src not preserved")
        if D.tgt[fm] != F.obj_map[C.tgt[m]]:
            bad.append(f"morphism {m}: tgt not preserved")
    if bad:
        return ValidationReport(False, tuple(bad))
    for o in C.objects:
        if F.mor_map[C.ident[o]] != D.ident[F.obj_map[o]]:
            bad.append(f"identity at {o} not preserved")
    for (g, f), gf in C.comp.items():
        if D.comp[(F.mor_map[g], F.mor_map[f])] != F.mor_map[gf]:
            bad.append(f"composition not preserved at ({g},{f})")
    return ValidationReport(not bad, tuple(bad))


def validate_nat_trans(alpha: NatTrans) -> ValidationReport:
    F, G = alpha.source, alpha.target
    if F.dom != G.dom or F.cod != G.cod:
        raise ValueError("natural transformation requires parallel functors")
    C, D = F.dom, F.cod
    bad: list[str] = []
    for c in C.objects:
        a = alpha.components.get(c)
        if a not in set(D.morphisms):
            bad.append(f"component at {c} undeclared")
        elif D.src[a] != F.obj_map[c] or D.tgt[a] != G.obj_map[c]:
            bad.append(f"component at {c} badly typed")
    if bad:
        return ValidationReport(False, tuple(bad))
    for h in C.morphisms:
        c, c2 = C.src[h], C.tgt[h]
        lhs = D.comp[(G.mor_map[h], alpha.components[c])]
        rhs = D.comp[(alpha.components[c2], F.mor_map[h])]
        if lhs != rhs:
            bad.append(f"naturality fails at {h}")
    return ValidationReport(not bad, tuple(bad))


def identity_functor(C: FinCat) -> CatFunctor:
    return CatFunctor(C, C, {o: o for o in C.objects},
                      {m: m for m in C.morphisms})


def compose_functors(G: CatFunctor, F: CatFunctor) -> CatFunctor:
    """G after F."""
    if F.cod != G.dom:
        raise ValueError("functors not composable")
    return CatFunctor(F.dom, G.cod,
                      {o: G.obj_map[v] for o, v in F.obj_map.items()},
                      {m: G.mor_map[v] for m, v in F.mor_map.items()})


def identity_nat_trans(F: CatFunctor) -> NatTrans:
    comps = {o: F.cod.ident[F.obj_map[o]] for o in F.dom.objects}
    return NatTrans(F, F, comps)


def disc(S) -> FinCat:
    """Discrete category: only identity morphisms."""
    objs = tuple(S)
    return FinCat(
        objects=objs,
        morphisms=objs,
        src={o: o for o in objs},
        tgt={o: o for o in objs},
        ident={o: o for o in objs},
        comp={(o, o): o for o in objs},
    )


def codisc(S) -> FinCat:
    """Codiscrete (pair) category: one morphism per ordered pair."""
    objs = tuple(S)
    mors = tuple(render_pair(a, b) for a in objs for b in objs)
    comp = {}
    for a in objs:
        for b in objs:
            for c in objs:
                comp[(render_pair(b, c), render_pair(a, b))] = render_pair(a, c)
    return FinCat(
        objects=objs,
        morphisms=mors,
        src={render_pair(a, b): a for a in objs for b in objs},
        tgt={render_pair(a, b): b for a in objs for b in objs},
        ident={a: render_pair(a, a) for a in objs},
        comp=comp,
    )


def opposite(C: FinCat) -> FinCat:
    return FinCat(
        objects=C.objects,
        morphisms=C.morphisms,
        src=dict(C.tgt),
        tgt=dict(C.src),
        ident=dict(C.ident),
        comp={(g, f): C.comp[(f, g)] for (f, g) in C.comp},
    )


def product(C: FinCat, D: FinCat) -> FinCat:
    objs = tuple(render_pair(c, d) for c in C.objects for d in D.objects)
    mors = tuple(render_pair(m, n) for m in C.morphisms for n in D.morphisms)
    src = {}
    tgt = {}
    for m in C.morphisms:
        for n in D.morphisms:
            mn = render_pair(m, n)
            src[mn] = render_pair(C.src[m], D.src[n])
            tgt[mn] = render_pair(C.tgt[m], D.tgt[n])
    comp = {}
    for (g1, f1), h1 in C.comp.items():
        for (g2, f2), h2 in D.comp.items():
            comp[(render_pair(g1, g2), render_pair(f1, f2))] = render_pair(h1, h2)
    return FinCat(
        objects=objs,
        morphisms=mors,
        src=src,
        tgt=tgt,
        ident={render_pair(c, d): render_pair(C.ident[c], D.ident[d])
               for c in C.objects for d in D.objects},
        comp=comp,
    )


def product_projections(C: FinCat, D: FinCat):
    P = product(C, D)
    pr1 = CatFunctor(P, C,
                     {render_pair(c, d): c for c in C.objects for d in D.objects},
                     {render_pair(m, n): m
                      for m in C.morphisms for n in D.morphisms})
    pr2 = CatFunctor(P, D,
                     {render_pair(c, d): d for c in C.objects for d in D.objects},
                     {render_pair(m, n): n
                      for m in C.morphisms for n in D.morphisms})
    return P, pr1, pr2


def arrow_category(C: FinCat):
    """The category of morphisms and commuting squares of C.

    Objects are morphisms g of C; a morphism g -> g' is a pair (k, h)
    with k: src g -> src g', h: tgt g -> tgt g' and g' . k = h . g.
    Returned with the domain and codomain projection functors.
    """
    objs = tuple(C.morphisms)
    mors = []
    src = {}
    tgt = {}
    data = {}  # name -> (g, k, h)
    for g in C.morphisms:
        for g2 in C.morphisms:
            for k in C.hom(C.src[g], C.src[g2]):
                for h in C.hom(C.tgt[g], C.tgt[g2]):
                    if C.comp[(g2, k)] == C.comp[(h, g)]:
                        name = render_triple(g, k, h)
                        mors.append(name)
                        src[name] = g
                        tgt[name] = g2
                        data[name] = (g, k, h)
    comp = {}
    for n2, (g2, k2, h2) in data.items():
        for n1, (g1, k1, h1) in data.items():
            if tgt[n1] != g2:
                continue
            comp[(n2, n1)] = render_triple(
                g1, C.comp[(k2, k1)], C.comp[(h2, h1)])
    A = FinCat(
        objects=objs,
        morphisms=tuple(mors),
        src=src,
        tgt=tgt,
        ident={g: render_triple(g, C.ident[C.src[g]], C.ident[C.tgt[g]])
               for g in objs},
        comp=comp,
    )
    dom_f = CatFunctor(A, C, {g: C.src[g] for g in objs},
                       {n: data[n][1] for n in A.morphisms})
    cod_f = CatFunctor(A, C, {g: C.tgt[g] for g in objs},
                       {n: data[n][2] for n in A.morphisms})
    return A, dom_f, cod_f


def strict_pullback(F: CatFunctor, G: CatFunctor):
    """Strict pullback of F: A -> E against G: B -> E.

    Elements are pairs agreeing in E, named canonically as pairs.
    Returns (P, proj_A, proj_B).
    """
    if F.cod != G.cod:
        raise ValueError("pullback requires a common codomain")
    A, B = F.dom, G.dom
    objs = []
    oleft = {}
    oright = {}
    for a in A.objects:
        for b in B.objects:
            if F.obj_map[a] == G.obj_map[b]:
                name = render_pair(a, b)
                objs.append(name)
                oleft[name] = a
                oright[name] = b
    mors = []
    mleft = {}
    mright = {}
    for m in A.morphisms:
        for n in B.morphisms:
            if F.mor_map[m] == G.mor_map[n]:
                name = render_pair(m, n)
                mors.append(name)
                mleft[name] = m
                mright[name] = n
    src = {w: render_pair(A.src[mleft[w]], B.src[mright[w]]) for w in mors}
    tgt = {w: render_pair(A.tgt[mleft[w]], B.tgt[mright[w]]) for w in mors}
    comp = {}
    for w2 in mors:
        for w1 in mors:
            if tgt[w1] != src[w2]:
                continue
            comp[(w2, w1)] = render_pair(
                A.comp[(mleft[w2], mleft[w1])],
                B.comp[(mright[w2], mright[w1])])
    P = FinCat(
        objects=tuple(objs),
        morphisms=tuple(mors),
        src=src,
        tgt=tgt,
        ident={o: render_pair(A.ident[oleft[o]], B.ident[oright[o]])
               for o in objs},
        comp=comp,
    )
    pa = CatFunctor(P, A, oleft, mleft)
    pb = CatFunctor(P, B, oright, mright)
    return P, pa, pb


def pullback_mediator(P: FinCat, pa: CatFunctor, pb: CatFunctor,
                      qa: CatFunctor, qb: CatFunctor) -> CatFunctor:
    """Mediating functor for a test cone (qa, qb) into a strict pullback.

    qa: T -> A and qb: T -> B must share a domain; the returned functor
    u: T -> P satisfies pa.u = qa and pb.u = qb, which is checked.
    """
    if qa.dom != qb.dom:
        raise ValueError("cone legs must share a domain")
    T = qa.dom
    obj_map = {o: render_pair(qa.obj_map[o], qb.obj_map[o]) for o in T.objects}
    mor_map = {m: render_pair(qa.mor_map[m], qb.mor_map[m])
               for m in T.morphisms}
    u = CatFunctor(T, P, obj_map, mor_map)
    if not validate_functor(u).ok:
        raise ValueError("test cone does not factor through the pullback")
    if compose_functors(pa, u) != qa or compose_functors(pb, u) != qb:
        raise ValueError("mediating functor fails to commute")
    return u


def iso_part(C: FinCat) -> FinCat:
    """Wide subcategory of invertible morphisms."""
    invertible = set()
    for g in C.morphisms:
        a, b = C.src[g], C.tgt[g]
        for h in C.hom(b, a):
            if (C.comp[(h, g)] == C.ident[a]
                    and C.comp[(g, h)] == C.ident[b]):
                invertible.add(g)
                break
    mors = tuple(m for m in C.morphisms if m in invertible)
    return FinCat(
        objects=C.objects,
        morphisms=mors,
        src={m: C.src[m] for m in mors},
        tgt={m: C.tgt[m] for m in mors},
        ident=dict(C.ident),
        comp={(g, f): h for (g, f), h in C.comp.items()
              if g in invertible and f in invertible},
    )


def relabel(C: FinCat, obj_names: dict[str, str],
            mor_names: dict[str, str]) -> FinCat:
    """Rename elements along bijections; the tables are carried over."""
    if len(set(obj_names.values())) != len(C.objects):
        raise ValueError("object renaming is not injective")
    if len(set(mor_names.values())) != len(C.morphisms):
        raise ValueError("morphism renaming is not injective")
    return FinCat(
        objects=tuple(obj_names[o] for o in C.objects),
        morphisms=tuple(mor_names[m] for m in C.morphisms),
        src={mor_names[m]: obj_names[C.src[m]] for m in C.morphisms},
        tgt={mor_names[m]: obj_names[C.tgt[m]] for m in C.morphisms},
        ident={obj_names[o]: mor_names[C.ident[o]] for o in C.objects},
        comp={(mor_names[g], mor_names[f]): mor_names[h]
              for (g, f), h in C.comp.items()},
    )


def is_isomorphism_of_categories(F: CatFunctor) -> bool:
    """Bijective on objects and morphisms, and a valid functor."""
    return (validate_functor(F).ok
            and len(set(F.obj_map.values())) == len(F.cod.objects)
            and len(F.obj_map) == len(F.cod.objects)
            and len(set(F.mor_map.values())) == len(F.cod.morphisms)
            and len(F.mor_map) == len(F.cod.morphisms))


def connected_components(C: FinCat) -> dict[str, int]:
    """Component index per object, joining src and tgt of every morphism.

    Components are numbered by first appearance in object order, so the
    labelling is deterministic.
    """
    parent = {o: o for o in C.objects}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for m in C.morphisms:
        a, b = find(C.src[m]), find(C.tgt[m])
        if a != b:
            parent[a] = b
    index: dict[str, int] = {}
    out = {}
    for o in C.objects:
        r = find(o)
        if r not in index:
            index[r] = len(index)
        out[o] = index[r]
    return out
