"""Theorem-level checkers.

Each checker certifies the hypotheses of one of the theorem statements
(fiber contractibility, full faithfulness + essential surjectivity,
cover nondegeneracy) and then independently confirms the conclusion
with the homology engine.  Negative examples are first-class: verdicts
always carry the conclusion check, whether or not the hypothesis holds.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .constructions import (AdjointSectionWitness, CoverData, cech_category,
                            codisc_decomposition_check, comma_fiber,
                            slice_decomposition_check)
from .core import (CatFunctor, FinCat, NatTrans, connected_components,
                   compose_functors, identity_functor, iso_part)
from .homology import (EquivalenceVerdict, chain_homotopy_from_simplicial,
                       chain_maps_equal, chain_map, homology,
                       identity_chain_map, is_homology_equivalence,
                       normalized_chains, verify_chain_homotopy)
from .simplicial import (DEFAULT_BUDGET, nat_trans_to_homotopy, nerve,
                         nerve_map)


@dataclass(frozen=True)
class ContractibilityCertificate:
    kind: str            # "initial-object" | "terminal-object" | "acyclic-and-connected"
    strength: str        # "strong" | "weak"
    witness: str | None = None
    report: object = None

    @property
    def ok(self) -> bool:
        return True


@dataclass(frozen=True)
class ContractibilityRefusal:
    report: object

    @property
    def ok(self) -> bool:
        return False


def find_initial_object(C: FinCat) -> str | None:
    for i in C.objects:
        if all(len(C.hom(i, c)) == 1 for c in C.objects):
            return i
    return None


def find_terminal_object(C: FinCat) -> str | None:
    for t in C.objects:
        if all(len(C.hom(c, t)) == 1 for c in C.objects):
            return t
    return None


def certify_contractible(C: FinCat, N: int, budget: int = DEFAULT_BUDGET):
    """Strong certificate from an initial or terminal object, else the
    homology proxy (connected and acyclic through degree N-1)."""
    witness = find_initial_object(C)
    if witness is not None:
        return ContractibilityCertificate("initial-object", "strong", witness)
    witness = find_terminal_object(C)
    if witness is not None:
        return ContractibilityCertificate("terminal-object", "strong", witness)
    if not C.objects:
        return ContractibilityRefusal(None)  # empty category is not contractible
    rep = homology(normalized_chains(nerve(C, N, budget)))
    acyclic = (rep.betti[0] == 1 and rep.torsion[0] == () and all(
        rep.betti[k] == 0 and rep.torsion[k] == ()
        for k in range(1, N)))
    if acyclic:
        return ContractibilityCertificate("acyclic-and-connected", "weak",
                                          None, rep)
    return ContractibilityRefusal(rep)


@dataclass(frozen=True)
class TheoremVerdict:
    theorem: str                       # "A" | "A-prime" | "Morita" | "Segal-cover"
    hypothesis_ok: bool
    hypothesis_detail: dict
    conclusion_ok: bool
    equivalence: EquivalenceVerdict | None
    pi0_bijection: bool
    through_degree: int
    extras: dict = field(default_factory=dict)

    @property
    def sound(self) -> bool:
        """Hypothesis implies conclusion; vacuously true otherwise."""
        return (not self.hypothesis_ok) or self.conclusion_ok

    def exit_code(self) -> int:
        if self.hypothesis_ok and self.conclusion_ok:
            return 0
        if not self.hypothesis_ok:
            return 4
        return 5


def is_fully_faithful(f: CatFunctor) -> bool:
    """Bijection on every hom-set, cross-checked against the set-level
    pullback of (src, tgt) tables."""
    X, Y = f.dom, f.cod
    for a in X.objects:
        for b in X.objects:
            dom_hom = X.hom(a, b)
            cod_hom = Y.hom(f.obj_map[a], f.obj_map[b])
            images = {f.mor_map[m] for m in dom_hom}
            if len(images) != len(dom_hom) or images != set(cod_hom):
                return False
    # the same condition as a pullback of morphism tables
    pullback = {(a, b, m) for a in X.objects for b in X.objects
                for m in Y.morphisms
                if Y.src[m] == f.obj_map[a] and Y.tgt[m] == f.obj_map[b]}
    canonical = {(X.src[m], X.tgt[m], f.mor_map[m]) for m in X.morphisms}
    return len(canonical) == len(X.morphisms) and canonical == pullback


def is_essentially_surjective(f: CatFunctor) -> bool:
    """Surjectivity of rho0: X_0 x_{Y_0} Y1_iso -> Y_0 built from the
    invertible part of the codomain.  Over a discrete object set every
    surjection splits and every cover is numerable, so surjectivity is
    the whole condition."""
    Y = f.cod
    iso = iso_part(Y)
    reachable = set()
    fixed = set(f.obj_map.values())
    for m in iso.morphisms:
        if iso.src[m] in fixed:
            reachable.add(iso.tgt[m])
    return reachable == set(Y.objects)


def pi0_bijection(f: CatFunctor) -> bool:
    cx = connected_components(f.dom)
    cy = connected_components(f.cod)
    mapping = {}
    for o in f.dom.objects:
        mapping.setdefault(cx[o], set()).add(cy[f.obj_map[o]])
    if any(len(v) != 1 for v in mapping.values()):
        return False  # would indicate broken component data
    image = {next(iter(v)) for v in mapping.values()}
    return (len(mapping) == len(set(cx.values()))
            and len(image) == len(mapping)
            and image == set(cy.values()))


def _conclusion(f: CatFunctor, N: int, budget: int):
    """Shared conclusion check: homology equivalence certified through
    N-2 (cone acyclic through N-1) plus a pi0 bijection."""
    equiv = is_homology_equivalence(nerve_map(f, N, budget), N - 1)
    pi0 = pi0_bijection(f)
    return equiv, pi0, equiv.passed and pi0, N - 2


def theorem_a_check(f: CatFunctor, N: int,
                    budget: int = DEFAULT_BUDGET) -> TheoremVerdict:
    """Fiberwise contractibility hypothesis against the homology
    conclusion.  Strong certificates everywhere report under the
    shrinkable reading; any weak certificate downgrades the verdict to
    the acyclic-fibration reading."""
    Y = f.cod
    certificates = {}
    all_ok = True
    any_weak = False
    for y in Y.objects:
        cert = certify_contractible(comma_fiber(y, f), N, budget)
        certificates[y] = cert
        if not cert.ok:
            all_ok = False
        elif cert.strength == "weak":
            any_weak = True
    equiv, pi0, concl, bound = _conclusion(f, N, budget)
    return TheoremVerdict(
        theorem="A-prime" if any_weak else "A",
        hypothesis_ok=all_ok,
        hypothesis_detail={"fibers": certificates},
        conclusion_ok=concl,
        equivalence=equiv,
        pi0_bijection=pi0,
        through_degree=bound,
    )


def morita_check(f: CatFunctor, N: int,
                 budget: int = DEFAULT_BUDGET) -> TheoremVerdict:
    ff = is_fully_faithful(f)
    eso = is_essentially_surjective(f)
    equiv, pi0, concl, bound = _conclusion(f, N, budget)
    extras = {}
    extras["codisc_decomposition"] = ff and codisc_decomposition_check(f)
    if ff:
        extras["slice_decomposition"] = slice_decomposition_check(f)
    return TheoremVerdict(
        theorem="Morita",
        hypothesis_ok=ff and eso,
        hypothesis_detail={"fully_faithful": ff,
                           "essentially_surjective": eso},
        conclusion_ok=concl,
        equivalence=equiv,
        pi0_bijection=pi0,
        through_degree=bound,
        extras=extras,
    )


def segal_cover_check(cover: CoverData, N: int,
                      budget: int = DEFAULT_BUDGET) -> TheoremVerdict:
    U2, pi = cech_category(cover)
    certificates = {}
    all_ok = True
    for m in cover.base:
        objs = tuple(o for o in U2.objects if pi.obj_map[o] == m)
        keep = set(objs)
        mors = tuple(w for w in U2.morphisms
                     if U2.src[w] in keep and U2.tgt[w] in keep)
        morset = set(mors)
        fiber = FinCat(
            objects=objs, morphisms=mors,
            src={w: U2.src[w] for w in mors},
            tgt={w: U2.tgt[w] for w in mors},
            ident={o: U2.ident[o] for o in objs},
            comp={(g, h): v for (g, h), v in U2.comp.items()
                  if g in morset and h in morset})
        cert = certify_contractible(fiber, N, budget)
        certificates[m] = cert
        if not (cert.ok and cert.strength == "strong"):
            all_ok = False
    equiv, pi0, concl, bound = _conclusion(pi, N, budget)
    return TheoremVerdict(
        theorem="Segal-cover",
        hypothesis_ok=all_ok,
        hypothesis_detail={"fibers": certificates},
        conclusion_ok=concl,
        equivalence=equiv,
        pi0_bijection=pi0,
        through_degree=bound,
    )


def shrinkable_witness_check(w: AdjointSectionWitness, N: int,
                             budget: int = DEFAULT_BUDGET) -> bool:
    """Section-retraction on the nose, exact chain-homotopy identity
    for the comparison transformation, and fiberwise support of the
    homotopy when the base is discrete."""
    if not w.validate():
        return False
    p, s = w.projection, w.section
    if compose_functors(p, s) != identity_functor(p.cod):
        return False
    try:
        hom = nat_trans_to_homotopy(w.eta, N, budget)
        h = chain_homotopy_from_simplicial(hom)
    except RuntimeError:
        return False
    # endpoints must be (s p)_* and the identity, in either order
    sp_star = chain_map(nerve_map(compose_functors(s, p), N, budget))
    ident = identity_chain_map(h.source)
    ends = (h.start_map, h.end_map)
    if not ((chain_maps_equal(ends[0], sp_star)
             and chain_maps_equal(ends[1], ident))
            or (chain_maps_equal(ends[0], ident)
                and chain_maps_equal(ends[1], sp_star))):
        return False
    if not verify_chain_homotopy(h):
        return False
    base = p.cod
    if all(base.is_identity(m) for m in base.morphisms):
        if not _homotopy_is_fiberwise(w, h, N):
            return False
    return True


def _homotopy_is_fiberwise(w: AdjointSectionWitness, h, N: int) -> bool:
    """h must preserve the direct-sum decomposition of the chains of
    the total category by base object."""
    p = w.projection
    E = p.dom
    NE = nerve(E, N)
    chains = h.source

    def base_object(n: int, x) -> str:
        vertex = x if n == 0 else E.src[x[0]]
        return p.obj_map[vertex]

    labels = [tuple(base_object(n, x) for x in chains.basis[n])
              for n in range(N + 1)]
    del NE
    for n in range(N):
        M = h.mats[n]
        for j in range(len(labels[n])):
            for i in range(len(labels[n + 1])):
                if M[i][j] and labels[n + 1][i] != labels[n][j]:
                    return False
    return True


def corrupt_witness(w: AdjointSectionWitness, obj: str,
                    replacement: str) -> AdjointSectionWitness:
    """Negative control: replace one component of the comparison
    transformation."""
    comps = dict(w.eta.components)
    comps[obj] = replacement
    eta = NatTrans(w.eta.source, w.eta.target, comps)
    return AdjointSectionWitness(w.projection, w.section, w.direction, eta)
