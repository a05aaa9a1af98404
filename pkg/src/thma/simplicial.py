"""Truncated simplicial and bisimplicial sets.

Simplex keys are opaque hashable values: nerve level 0 uses object
identifiers, nerve level n uses tuples of n composable morphism
identifiers (left to right along the string), and derived objects use
tuples of keys.  Degenerate simplices are stored explicitly and flagged
rather than quotiented away, so all structure maps stay total.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .core import CatFunctor, FinCat, NatTrans, opposite, product, render_pair

DEFAULT_BUDGET = 200_000


class BudgetExceeded(RuntimeError):
    """A simplicial level grew beyond the configured size budget."""


@dataclass(frozen=True)
class SimplicialSet:
    trunc: int
    levels: tuple[tuple, ...]                 # levels[n] = keys of n-simplices
    faces: dict[tuple[int, int], dict]        # (n, i) -> mapping to level n-1
    degens: dict[tuple[int, int], dict]       # (n, i) -> mapping to level n+1
    degenerate: tuple[frozenset, ...] = field(init=False, compare=False,
                                              repr=False, default=())

    def __post_init__(self):
        flags = [frozenset()]
        for n in range(1, self.trunc + 1):
            image = set()
            for i in range(n):
                image.update(self.degens[(n - 1, i)].values())
            flags.append(frozenset(image))
        object.__setattr__(self, "degenerate", tuple(flags))

    def face(self, n: int, i: int, x):
        return self.faces[(n, i)][x]

    def degen(self, n: int, i: int, x):
        return self.degens[(n, i)][x]

    def is_degenerate(self, n: int, x) -> bool:
        return x in self.degenerate[n]

    def nondegenerate(self, n: int) -> tuple:
        return tuple(x for x in self.levels[n] if not self.is_degenerate(n, x))


def validate_simplicial(X: SimplicialSet) -> list[str]:
    """All simplicial identities inside the truncation window."""
    bad = []
    N = X.trunc
    for n in range(2, N + 1):
        for j in range(n + 1):
            for i in range(j):
                for x in X.levels[n]:
                    if (X.face(n - 1, j - 1, X.face(n, i, x))
                            != X.face(n - 1, i, X.face(n, j, x))):
                        bad.append(f"d{i} d{j} at level {n}")
    for n in range(N):
        for j in range(n + 1):
            for i in range(n + 2):
                for x in X.levels[n]:
                    y = X.face(n + 1, i, X.degen(n, j, x))
                    if i < j:
                        want = (X.degen(n - 1, j - 1, X.face(n, i, x))
                                if n >= 1 else None)
                        if n >= 1 and y != want:
                            bad.append(f"d{i} s{j} at level {n}")
                    elif i in (j, j + 1):
                        if y != x:
                            bad.append(f"d{i} s{j} at level {n}")
                    else:
                        want = (X.degen(n - 1, j, X.face(n, i - 1, x))
                                if n >= 1 else None)
                        if n >= 1 and y != want:
                            bad.append(f"d{i} s{j} at level {n}")
    for n in range(N - 1):
        for j in range(n + 1):
            for i in range(j + 1):
                for x in X.levels[n]:
                    if (X.degen(n + 1, j + 1, X.degen(n, i, x))
                            != X.degen(n + 1, i, X.degen(n, j, x))):
                        bad.append(f"s{i} s{j} at level {n}")
    return bad


@dataclass(frozen=True)
class SimplicialMap:
    source: SimplicialSet
    target: SimplicialSet
    maps: dict[int, dict]

    def apply(self, n: int, x):
        return self.maps[n][x]


def validate_simplicial_map(F: SimplicialMap) -> list[str]:
    X, Y = F.source, F.target
    if X.trunc != Y.trunc:
        return ["truncation mismatch"]
    bad = []
    for n in range(X.trunc + 1):
        for x in X.levels[n]:
            if F.maps[n].get(x) not in set(Y.levels[n]):
                bad.append(f"level {n}: image of {x!r} undeclared")
    if bad:
        return bad
    for n in range(1, X.trunc + 1):
        for i in range(n + 1):
            for x in X.levels[n]:
                if (F.maps[n - 1][X.face(n, i, x)]
                        != Y.face(n, i, F.maps[n][x])):
                    bad.append(f"face d{i} at level {n} not respected")
    for n in range(X.trunc):
        for i in range(n + 1):
            for x in X.levels[n]:
                if (F.maps[n + 1][X.degen(n, i, x)]
                        != Y.degen(n, i, F.maps[n][x])):
                    bad.append(f"degeneracy s{i} at level {n} not respected")
    return bad


def compose_simplicial_maps(G: SimplicialMap, F: SimplicialMap) -> SimplicialMap:
    return SimplicialMap(F.source, G.target,
                         {n: {x: G.maps[n][y] for x, y in F.maps[n].items()}
                          for n in F.maps})


def identity_simplicial_map(X: SimplicialSet) -> SimplicialMap:
    return SimplicialMap(X, X, {n: {x: x for x in X.levels[n]}
                                for n in range(X.trunc + 1)})


def nerve(C: FinCat, N: int, budget: int = DEFAULT_BUDGET) -> SimplicialSet:
    """Nerve truncated at N: n-simplices are composable n-strings."""
    if N < 1:
        raise ValueError("truncation must be at least 1")
    levels = [tuple(C.objects)]
    levels.append(tuple((m,) for m in C.morphisms))
    for n in range(2, N + 1):
        nxt = []
        for chain in levels[n - 1]:
            for m in C.morphisms:
                if C.src[m] == C.tgt[chain[-1]]:
                    nxt.append(chain + (m,))
            if len(nxt) > budget:
                raise BudgetExceeded(f"nerve level {n} exceeds {budget}")
        levels.append(tuple(nxt))
    if len(levels[1]) > budget:
        raise BudgetExceeded(f"nerve level 1 exceeds {budget}")
    faces = {}
    degens = {}
    faces[(1, 0)] = {(m,): C.tgt[m] for m in C.morphisms}
    faces[(1, 1)] = {(m,): C.src[m] for m in C.morphisms}
    for n in range(2, N + 1):
        for i in range(n + 1):
            table = {}
            for chain in levels[n]:
                if i == 0:
                    table[chain] = chain[1:]
                elif i == n:
                    table[chain] = chain[:-1]
                else:
                    table[chain] = (chain[:i - 1]
                                    + (C.comp[(chain[i], chain[i - 1])],)
                                    + chain[i + 1:])
            faces[(n, i)] = table
    degens[(0, 0)] = {o: (C.ident[o],) for o in C.objects}
    for n in range(1, N):
        for i in range(n + 1):
            table = {}
            for chain in levels[n]:
                vertex = C.src[chain[0]] if i == 0 else C.tgt[chain[i - 1]]
                table[chain] = chain[:i] + (C.ident[vertex],) + chain[i:]
            degens[(n, i)] = table
    return SimplicialSet(N, tuple(levels), faces, degens)


def nerve_map(F: CatFunctor, N: int,
              budget: int = DEFAULT_BUDGET) -> SimplicialMap:
    NX = nerve(F.dom, N, budget)
    NY = nerve(F.cod, N, budget)
    maps = {0: {o: F.obj_map[o] for o in F.dom.objects}}
    for n in range(1, N + 1):
        maps[n] = {chain: tuple(F.mor_map[m] for m in chain)
                   for chain in NX.levels[n]}
    return SimplicialMap(NX, NY, maps)


def sset_product(A: SimplicialSet, B: SimplicialSet) -> SimplicialSet:
    """Levelwise product; simplices are pairs, structure maps act
    componentwise."""
    if A.trunc != B.trunc:
        raise ValueError("truncation mismatch")
    N = A.trunc
    levels = tuple(tuple((a, b) for a in A.levels[n] for b in B.levels[n])
                   for n in range(N + 1))
    faces = {}
    degens = {}
    for n in range(1, N + 1):
        for i in range(n + 1):
            faces[(n, i)] = {(a, b): (A.face(n, i, a), B.face(n, i, b))
                             for (a, b) in levels[n]}
    for n in range(N):
        for i in range(n + 1):
            degens[(n, i)] = {(a, b): (A.degen(n, i, a), B.degen(n, i, b))
                              for (a, b) in levels[n]}
    return SimplicialSet(N, levels, faces, degens)


def interval_category() -> FinCat:
    """The poset category 0 -> 1, the combinatorial 1-simplex."""
    return FinCat(
        objects=("0", "1"),
        morphisms=("id0", "id1", "u"),
        src={"id0": "0", "id1": "1", "u": "0"},
        tgt={"id0": "0", "id1": "1", "u": "1"},
        ident={"0": "id0", "1": "id1"},
        comp={("id0", "id0"): "id0", ("id1", "id1"): "id1",
              ("u", "id0"): "u", ("id1", "u"): "u"},
    )


@dataclass(frozen=True)
class BiSimplicialSet:
    """p indexes the vertical direction, q the horizontal one."""

    trunc: int
    levels: dict[tuple[int, int], tuple]
    faces_v: dict[tuple[int, int, int], dict]   # (p,q,i): level -> (p-1,q)
    faces_h: dict[tuple[int, int, int], dict]   # (p,q,i): level -> (p,q-1)
    degens_v: dict[tuple[int, int, int], dict]  # (p,q,i): level -> (p+1,q)
    degens_h: dict[tuple[int, int, int], dict]  # (p,q,i): level -> (p,q+1)

    def is_degenerate(self, p: int, q: int, x) -> bool:
        for i in range(p):
            if x in self._degen_image_v(p, q, i):
                return True
        for i in range(q):
            if x in self._degen_image_h(p, q, i):
                return True
        return False

    def _degen_image_v(self, p, q, i):
        return self.degens_v[(p - 1, q, i)].values()

    def _degen_image_h(self, p, q, i):
        return self.degens_h[(p, q - 1, i)].values()

    def nondegenerate(self, p: int, q: int) -> tuple:
        degen = set()
        for i in range(p):
            degen.update(self._degen_image_v(p, q, i))
        for i in range(q):
            degen.update(self._degen_image_h(p, q, i))
        return tuple(x for x in self.levels[(p, q)] if x not in degen)


def validate_bisimplicial(T: BiSimplicialSet) -> list[str]:
    """Row/column simplicial identities plus commutation of the two
    directions on every simplex."""
    bad = []
    N = T.trunc
    for q in range(N + 1):
        row = _strip(T, "v", q)
        bad += [f"vertical ({q}): {msg}" for msg in validate_simplicial(row)]
    for p in range(N + 1):
        col = _strip(T, "h", p)
        bad += [f"horizontal ({p}): {msg}" for msg in validate_simplicial(col)]
    for p in range(N + 1):
        for q in range(N + 1):
            for x in T.levels[(p, q)]:
                if p >= 1 and q >= 1:
                    for i in range(p + 1):
                        for j in range(q + 1):
                            a = T.faces_h[(p - 1, q, j)][
                                T.faces_v[(p, q, i)][x]]
                            b = T.faces_v[(p, q - 1, i)][
                                T.faces_h[(p, q, j)][x]]
                            if a != b:
                                bad.append(f"dv{i}/dh{j} at ({p},{q})")
                if p >= 1 and q < N:
                    for i in range(p + 1):
                        for j in range(q + 1):
                            a = T.degens_h[(p - 1, q, j)][
                                T.faces_v[(p, q, i)][x]]
                            b = T.faces_v[(p, q + 1, i)][
                                T.degens_h[(p, q, j)][x]]
                            if a != b:
                                bad.append(f"dv{i}/sh{j} at ({p},{q})")
                if p < N and q >= 1:
                    for i in range(p + 1):
                        for j in range(q + 1):
                            a = T.degens_v[(p, q - 1, i)][
                                T.faces_h[(p, q, j)][x]]
                            b = T.faces_h[(p + 1, q, j)][
                                T.degens_v[(p, q, i)][x]]
                            if a != b:
                                bad.append(f"sv{i}/dh{j} at ({p},{q})")
                if p < N and q < N:
                    for i in range(p + 1):
                        for j in range(q + 1):
                            a = T.degens_v[(p, q + 1, i)][
                                T.degens_h[(p, q, j)][x]]
                            b = T.degens_h[(p + 1, q, j)][
                                T.degens_v[(p, q, i)][x]]
                            if a != b:
                                bad.append(f"sv{i}/sh{j} at ({p},{q})")
    return bad


def _strip(T: BiSimplicialSet, direction: str, fixed: int) -> SimplicialSet:
    """The simplicial set along one direction at a fixed other index."""
    N = T.trunc
    if direction == "v":
        levels = tuple(T.levels[(n, fixed)] for n in range(N + 1))
        faces = {(n, i): T.faces_v[(n, fixed, i)]
                 for n in range(1, N + 1) for i in range(n + 1)}
        degens = {(n, i): T.degens_v[(n, fixed, i)]
                  for n in range(N) for i in range(n + 1)}
    else:
        levels = tuple(T.levels[(fixed, n)] for n in range(N + 1))
        faces = {(n, i): T.faces_h[(fixed, n, i)]
                 for n in range(1, N + 1) for i in range(n + 1)}
        degens = {(n, i): T.degens_h[(fixed, n, i)]
                  for n in range(N) for i in range(n + 1)}
    return SimplicialSet(N, levels, faces, degens)


def constant_bisimplicial(X: SimplicialSet, constant_in: str) -> BiSimplicialSet:
    """Spread a simplicial set out as a bisimplicial set constant in the
    named direction ('q' keeps X vertical, 'p' keeps it horizontal)."""
    N = X.trunc
    levels = {}
    faces_v = {}
    faces_h = {}
    degens_v = {}
    degens_h = {}
    for p in range(N + 1):
        for q in range(N + 1):
            n = p if constant_in == "q" else q
            levels[(p, q)] = X.levels[n]
            ident = {x: x for x in X.levels[n]}
            if constant_in == "q":
                for i in range(p + 1) if p >= 1 else ():
                    faces_v[(p, q, i)] = dict(X.faces[(p, i)])
                for i in range(q + 1) if q >= 1 else ():
                    faces_h[(p, q, i)] = ident
                if p < N:
                    for i in range(p + 1):
                        degens_v[(p, q, i)] = dict(X.degens[(p, i)])
                if q < N:
                    for i in range(q + 1):
                        degens_h[(p, q, i)] = ident
            else:
                for i in range(q + 1) if q >= 1 else ():
                    faces_h[(p, q, i)] = dict(X.faces[(q, i)])
                for i in range(p + 1) if p >= 1 else ():
                    faces_v[(p, q, i)] = ident
                if q < N:
                    for i in range(q + 1):
                        degens_h[(p, q, i)] = dict(X.degens[(q, i)])
                if p < N:
                    for i in range(p + 1):
                        degens_v[(p, q, i)] = ident
    return BiSimplicialSet(N, levels, faces_v, faces_h, degens_v, degens_h)


def _anchor(S: SimplicialSet, n: int, chain):
    """Vertex 0 of a nerve simplex."""
    del S
    if n == 0:
        return chain
    return chain[0]


def bisimplicial_D(f: CatFunctor, N: int,
                   budget: int = DEFAULT_BUDGET) -> BiSimplicialSet:
    """The two-sided bar object of a functor f: X -> Y.

    A (p, q)-simplex is (y-chain, eta, x-chain): a p-simplex of the
    nerve of Y^op anchored at y_0, a morphism eta: y_0 -> f(x_0) of Y,
    and a q-simplex of the nerve of X starting at x_0.  d_0 in each
    direction composes into eta; everything else leaves eta alone.
    """
    X, Y = f.dom, f.cod
    Yop = opposite(Y)
    NYop = nerve(Yop, N, budget)
    NX = nerve(X, N, budget)

    def y_anchor(p, yc):
        # vertex 0 of the Y^op chain, i.e. the Y-target of its first leg
        return yc if p == 0 else Yop.src[yc[0]]

    def x_anchor(q, xc):
        return xc if q == 0 else X.src[xc[0]]

    eta_by_anchor: dict[str, list[str]] = {}
    for m in Y.morphisms:
        eta_by_anchor.setdefault(Y.src[m], []).append(m)

    levels = {}
    for p in range(N + 1):
        for q in range(N + 1):
            cell = []
            for yc in NYop.levels[p]:
                y0 = y_anchor(p, yc)
                for eta in eta_by_anchor.get(y0, ()):
                    for xc in NX.levels[q]:
                        if Y.tgt[eta] == f.obj_map[x_anchor(q, xc)]:
                            cell.append((yc, eta, xc))
                if len(cell) > budget:
                    raise BudgetExceeded(
                        f"bisimplicial level ({p},{q}) exceeds {budget}")
            levels[(p, q)] = tuple(cell)

    faces_v = {}
    faces_h = {}
    degens_v = {}
    degens_h = {}
    for p in range(N + 1):
        for q in range(N + 1):
            cell = levels[(p, q)]
            for i in range(q + 1) if q >= 1 else ():
                table = {}
                for (yc, eta, xc) in cell:
                    if i == 0:
                        nu = xc[0]
                        table[(yc, eta, xc)] = (
                            yc, Y.comp[(f.mor_map[nu], eta)],
                            NX.face(q, 0, xc))
                    else:
                        table[(yc, eta, xc)] = (yc, eta, NX.face(q, i, xc))
                faces_h[(p, q, i)] = table
            for i in range(p + 1) if p >= 1 else ():
                table = {}
                for (yc, eta, xc) in cell:
                    if i == 0:
                        kappa = yc[0]  # in Y: y_1 -> y_0
                        table[(yc, eta, xc)] = (
                            NYop.face(p, 0, yc), Y.comp[(eta, kappa)], xc)
                    else:
                        table[(yc, eta, xc)] = (NYop.face(p, i, yc), eta, xc)
                faces_v[(p, q, i)] = table
            if q < N:
                for i in range(q + 1):
                    degens_h[(p, q, i)] = {
                        (yc, eta, xc): (yc, eta, NX.degen(q, i, xc))
                        for (yc, eta, xc) in cell}
            if p < N:
                for i in range(p + 1):
                    degens_v[(p, q, i)] = {
                        (yc, eta, xc): (NYop.degen(p, i, yc), eta, xc)
                        for (yc, eta, xc) in cell}
    return BiSimplicialSet(N, levels, faces_v, faces_h, degens_v, degens_h)


def diagonal(T: BiSimplicialSet) -> SimplicialSet:
    N = T.trunc
    levels = tuple(T.levels[(n, n)] for n in range(N + 1))
    faces = {}
    degens = {}
    for n in range(1, N + 1):
        for i in range(n + 1):
            fh = T.faces_h[(n, n, i)]
            fv = T.faces_v[(n, n - 1, i)]
            faces[(n, i)] = {x: fv[fh[x]] for x in levels[n]}
    for n in range(N):
        for i in range(n + 1):
            sh = T.degens_h[(n, n, i)]
            sv = T.degens_v[(n, n + 1, i)]
            degens[(n, i)] = {x: sv[sh[x]] for x in levels[n]}
    return SimplicialSet(N, levels, faces, degens)


@dataclass(frozen=True)
class BiSimplicialMap:
    source: BiSimplicialSet
    target: BiSimplicialSet
    maps: dict[tuple[int, int], dict]


def validate_bisimplicial_map(F: BiSimplicialMap) -> list[str]:
    S, T = F.source, F.target
    N = S.trunc
    bad = []
    for p in range(N + 1):
        for q in range(N + 1):
            for x in S.levels[(p, q)]:
                if F.maps[(p, q)].get(x) not in set(T.levels[(p, q)]):
                    bad.append(f"({p},{q}): image of {x!r} undeclared")
    if bad:
        return bad
    for p in range(N + 1):
        for q in range(N + 1):
            for x in S.levels[(p, q)]:
                y = F.maps[(p, q)][x]
                for i in range(p + 1) if p >= 1 else ():
                    if (F.maps[(p - 1, q)][S.faces_v[(p, q, i)][x]]
                            != T.faces_v[(p, q, i)][y]):
                        bad.append(f"dv{i} at ({p},{q})")
                for i in range(q + 1) if q >= 1 else ():
                    if (F.maps[(p, q - 1)][S.faces_h[(p, q, i)][x]]
                            != T.faces_h[(p, q, i)][y]):
                        bad.append(f"dh{i} at ({p},{q})")
                for i in range(p + 1) if p < N else ():
                    if (F.maps[(p + 1, q)][S.degens_v[(p, q, i)][x]]
                            != T.degens_v[(p, q, i)][y]):
                        bad.append(f"sv{i} at ({p},{q})")
                for i in range(q + 1) if q < N else ():
                    if (F.maps[(p, q + 1)][S.degens_h[(p, q, i)][x]]
                            != T.degens_h[(p, q, i)][y]):
                        bad.append(f"sh{i} at ({p},{q})")
    return bad


def projection_beta(f: CatFunctor, N: int,
                    budget: int = DEFAULT_BUDGET) -> BiSimplicialMap:
    """Projection from the bar object of f onto the nerve of Y^op,
    viewed as a bisimplicial set constant in the horizontal direction."""
    D = bisimplicial_D(f, N, budget)
    NYop = nerve(opposite(f.cod), N, budget)
    target = constant_bisimplicial(NYop, "q")
    maps = {(p, q): {x: x[0] for x in D.levels[(p, q)]}
            for p in range(N + 1) for q in range(N + 1)}
    beta = BiSimplicialMap(D, target, maps)
    bad = validate_bisimplicial_map(beta)
    if bad:
        raise RuntimeError(f"projection fails to be bisimplicial: {bad[:3]}")
    return beta


def check_diag_equals_nerve_S(f: CatFunctor, N: int,
                              budget: int = DEFAULT_BUDGET) -> SimplicialMap:
    """Canonical isomorphism from the diagonal of the bar object of f
    to the nerve of S(f); raises if any level fails to biject or any
    structure square fails."""
    from .constructions import s_category
    from .core import render_triple

    X, Y = f.dom, f.cod
    D = bisimplicial_D(f, N, budget)
    dD = diagonal(D)
    span = s_category(f)
    NS = nerve(span.S, N, budget)
    maps: dict[int, dict] = {}
    maps[0] = {}
    for (y0, eta, x0) in dD.levels[0]:
        maps[0][(y0, eta, x0)] = render_pair(eta, x0)
    for n in range(1, N + 1):
        table = {}
        for (yc, eta, xc) in dD.levels[n]:
            eta_j = eta
            x_j = X.src[xc[0]]
            string = []
            for j in range(n):
                nu = xc[j]
                kappa = yc[j]
                tw = render_triple(eta_j, f.mor_map[nu], kappa)
                string.append(render_pair(tw, nu))
                eta_j = Y.comp[(Y.comp[(f.mor_map[nu], eta_j)], kappa)]
                x_j = X.tgt[nu]
            table[(yc, eta, xc)] = tuple(string)
        maps[n] = table
    iso = SimplicialMap(dD, NS, maps)
    for n in range(N + 1):
        images = set(maps[n].values())
        if len(images) != len(dD.levels[n]) or images != set(NS.levels[n]):
            raise RuntimeError(f"level {n} fails to biject "
                               f"({len(dD.levels[n])} vs {len(NS.levels[n])})")
    bad = validate_simplicial_map(iso)
    if bad:
        raise RuntimeError(f"structure squares fail: {bad[:3]}")
    return iso


@dataclass(frozen=True)
class SimplicialHomotopy:
    """A simplicial map out of (source x interval) with its endpoints."""

    hmap: SimplicialMap            # source_sset x delta1 -> target sset
    source_sset: SimplicialSet
    delta1: SimplicialSet
    h0: SimplicialMap
    h1: SimplicialMap


def vertex_inclusion(X: SimplicialSet, delta1: SimplicialSet,
                     vertex: str) -> SimplicialMap:
    """X -> X x delta1 at a vertex of the interval ('0' or '1')."""
    I = interval_category()
    prod = sset_product(X, delta1)
    const = {0: vertex}
    for n in range(1, X.trunc + 1):
        const[n] = (I.ident[vertex],) * n
    maps = {n: {x: (x, const[n]) for x in X.levels[n]}
            for n in range(X.trunc + 1)}
    return SimplicialMap(X, prod, maps)


def nat_trans_to_homotopy(alpha: NatTrans, N: int,
                          budget: int = DEFAULT_BUDGET) -> SimplicialHomotopy:
    """Realize a natural transformation F => G as a simplicial homotopy
    from the nerve of F to the nerve of G."""
    F, G = alpha.source, alpha.target
    C, Dcat = F.dom, F.cod
    I = interval_category()
    CI = product(C, I)
    obj_map = {}
    for c in C.objects:
        obj_map[render_pair(c, "0")] = F.obj_map[c]
        obj_map[render_pair(c, "1")] = G.obj_map[c]
    mor_map = {}
    for m in C.morphisms:
        mor_map[render_pair(m, "id0")] = F.mor_map[m]
        mor_map[render_pair(m, "id1")] = G.mor_map[m]
        c2 = C.tgt[m]
        mor_map[render_pair(m, "u")] = Dcat.comp[
            (alpha.components[c2], F.mor_map[m])]
    H = CatFunctor(CI, Dcat, obj_map, mor_map)
    NC = nerve(C, N, budget)
    D1 = nerve(I, N, budget)
    prod = sset_product(NC, D1)
    NH = nerve_map(H, N, budget)
    # reindex the product of nerves as the nerve of the product
    glue = {0: {(c, v): render_pair(c, v) for (c, v) in prod.levels[0]}}
    for n in range(1, N + 1):
        glue[n] = {(a, b): tuple(render_pair(a[i], b[i]) for i in range(n))
                   for (a, b) in prod.levels[n]}
    hmaps = {n: {x: NH.maps[n][glue[n][x]] for x in prod.levels[n]}
             for n in range(N + 1)}
    hmap = SimplicialMap(prod, NH.target, hmaps)
    h0 = compose_simplicial_maps(hmap, vertex_inclusion(NC, D1, "0"))
    h1 = compose_simplicial_maps(hmap, vertex_inclusion(NC, D1, "1"))
    return SimplicialHomotopy(hmap, NC, D1, h0, h1)
