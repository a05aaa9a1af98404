"""Integer homology of truncated simplicial sets.

Normalized chains over Z, Smith normal form with verified unimodular
witnesses, mapping cones, total complexes of bisimplicial sets, and
chain homotopies extracted from simplicial homotopies.  All arithmetic
is exact; torsion is the signal, so no floating point appears anywhere.
"""

from __future__ import annotations

from math import gcd

from dataclasses import dataclass

from .simplicial import BiSimplicialSet, SimplicialHomotopy, SimplicialMap, \
    SimplicialSet

Matrix = tuple[tuple[int, ...], ...]


def zeros(rows: int, cols: int) -> list[list[int]]:
    return [[0] * cols for _ in range(rows)]


def identity_matrix(n: int) -> list[list[int]]:
    M = zeros(n, n)
    for i in range(n):
        M[i][i] = 1
    return M


def freeze(M) -> Matrix:
    return tuple(tuple(row) for row in M)


def mat_mul(A, B) -> list[list[int]]:
    rows, inner = len(A), len(B)
    cols = len(B[0]) if B else 0
    out = zeros(rows, cols)
    for i in range(rows):
        Ai = A[i]
        Oi = out[i]
        for k in range(inner):
            a = Ai[k]
            if a:
                Bk = B[k]
                for j in range(cols):
                    Oi[j] += a * Bk[j]
    return out


def mat_mul_shaped(A, B, rows: int, inner: int,
                   cols: int) -> list[list[int]]:
    """Product with explicit dimensions, robust when any of them is 0."""
    out = zeros(rows, cols)
    for i in range(rows):
        Ai = A[i]
        Oi = out[i]
        for k in range(inner):
            a = Ai[k]
            if a:
                Bk = B[k]
                for j in range(cols):
                    Oi[j] += a * Bk[j]
    return out


def mat_sub(A, B) -> list[list[int]]:
    return [[a - b for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]

def mat_add(A, B) -> list[list[int]]:
    return [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def is_zero_matrix(A) -> bool:
    return all(all(v == 0 for v in row) for row in A)


@dataclass(frozen=True)
class SNFResult:
    """U . A . V = S with U, V unimodular and S diagonal with a
    divisibility chain; verified at construction time."""

    S: Matrix
    U: Matrix
    V: Matrix
    factors: tuple[int, ...]

    @property
    def rank(self) -> int:
        return len(self.factors)


def smith_normal_form(A) -> SNFResult:
    m = len(A)
    n = len(A[0]) if m else 0
    S = [list(row) for row in A]
    U = identity_matrix(m)
    V = identity_matrix(n)

    def swap_rows(i, j):
        S[i], S[j] = S[j], S[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in S:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, c):
        S[dst] = [a + c * b for a, b in zip(S[dst], S[src])]
        U[dst] = [a + c * b for a, b in zip(U[dst], U[src])]

    def add_col(dst, src, c):
        for row in S:
            row[dst] += c * row[src]
        for row in V:
            row[dst] += c * row[src]

    t = 0
    while t < min(m, n):
        # smallest-magnitude pivot keeps coefficient growth in check
        pivot = None
        best = None
        for i in range(t, m):
            for j in range(t, n):
                v = S[i][j]
                if v and (best is None or abs(v) < best):
                    best = abs(v)
                    pivot = (i, j)
        if pivot is None:
            break
        swap_rows(t, pivot[0])
        swap_cols(t, pivot[1])
        while True:
            cleared = True
            for i in range(t + 1, m):
                if S[i][t]:
                    q = S[i][t] // S[t][t]
                    add_row(i, t, -q)
                    if S[i][t]:
                        swap_rows(t, i)
                        cleared = False
            for j in range(t + 1, n):
                if S[t][j]:
                    q = S[t][j] // S[t][t]
                    add_col(j, t, -q)
                    if S[t][j]:
                        swap_cols(t, j)
                        cleared = False
            if not cleared:
                continue
            # fold in any entry the pivot does not yet divide
            offender = None
            for i in range(t + 1, m):
                for j in range(t + 1, n):
                    if S[i][j] % S[t][t]:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            add_row(t, offender, 1)
        if S[t][t] < 0:
            S[t] = [-v for v in S[t]]
            U[t] = [-v for v in U[t]]
        t += 1

    check = mat_mul(mat_mul(U, A), V) if m and n else S
    if m and n and [list(r) for r in check] != S:
        raise RuntimeError("SNF witness verification failed")
    factors = tuple(S[i][i] for i in range(min(m, n)) if S[i][i])
    for a, b in zip(factors, factors[1:]):
        if b % a:
            raise RuntimeError("SNF divisibility chain broken")
    return SNFResult(freeze(S), freeze(U), freeze(V), factors)


@dataclass(frozen=True)
class ChainComplex:
    """Integer chain complex supported in degrees 0..top."""

    top: int
    ranks: tuple[int, ...]
    boundaries: dict[int, Matrix]   # n -> matrix ranks[n-1] x ranks[n]
    basis: tuple[tuple, ...]        # labels; () entries for synthetic bases

    def boundary(self, n: int) -> Matrix:
        return self.boundaries[n]


def make_chain_complex(top, ranks, boundaries, basis=None) -> ChainComplex:
    if basis is None:
        basis = tuple(tuple(range(r)) for r in ranks)
    C = ChainComplex(top, tuple(ranks), dict(boundaries), tuple(basis))
    for n in range(2, top + 1):
        if C.ranks[n] == 0 or C.ranks[n - 2] == 0:
            continue
        if not is_zero_matrix(mat_mul(C.boundaries[n - 1], C.boundaries[n])):
            raise RuntimeError(f"boundary squared nonzero in degree {n}")
    return C


def normalized_chains(X: SimplicialSet) -> ChainComplex:
    """Basis: nondegenerate simplices; faces landing on degenerate
    simplices are dropped."""
    N = X.trunc
    basis = tuple(X.nondegenerate(n) for n in range(N + 1))
    index = [{x: i for i, x in enumerate(level)} for level in basis]
    ranks = tuple(len(level) for level in basis)
    boundaries = {}
    for n in range(1, N + 1):
        M = zeros(ranks[n - 1], ranks[n])
        for j, x in enumerate(basis[n]):
            for i in range(n + 1):
                y = X.face(n, i, x)
                row = index[n - 1].get(y)
                if row is not None:
                    M[row][j] += (-1) ** i
        boundaries[n] = freeze(M)
    return make_chain_complex(N, ranks, boundaries, basis)


@dataclass(frozen=True)
class HomologyReport:
    """Betti numbers and invariant-factor torsion per degree.

    Degrees up to certified_through are exact; the top degree can lose
    boundaries to the truncation and is flagged unreliable.
    """

    top: int
    certified_through: int
    betti: tuple[int, ...]
    torsion: tuple[tuple[int, ...], ...]

    def group(self, n: int) -> tuple[int, tuple[int, ...]]:
        return self.betti[n], self.torsion[n]

    def certified_groups(self) -> tuple:
        return tuple((self.betti[n], self.torsion[n])
                     for n in range(self.certified_through + 1))

    def describe(self, n: int) -> str:
        parts = ["Z"] * self.betti[n] + [f"Z/{t}" for t in self.torsion[n]]
        return " + ".join(parts) if parts else "0"

    def to_dict(self) -> dict:
        return {
            "certified_through": self.certified_through,
            "degrees": {
                str(n): {"betti": self.betti[n],
                         "torsion": list(self.torsion[n]),
                         "certified": n <= self.certified_through}
                for n in range(self.top + 1)},
        }


def invariant_factors(A) -> tuple[int, ...]:
    """Invariant factors of an integer matrix by sparse elimination.

    Diagonalizes with integer row/column operations, preferring unit
    pivots (boundary matrices are sparse with entries mostly +-1), then
    restores the divisibility chain with pairwise gcd/lcm exchanges —
    diag(a, b) is equivalent to diag(gcd(a, b), lcm(a, b)).
    """
    rows: dict[int, dict[int, int]] = {}
    col_index: dict[int, set[int]] = {}
    units: list[tuple[int, int]] = []
    for i, row in enumerate(A):
        entries = {j: v for j, v in enumerate(row) if v}
        if entries:
            rows[i] = entries
            for j, v in entries.items():
                col_index.setdefault(j, set()).add(i)
                if v in (1, -1):
                    units.append((i, j))

    def set_entry(i, j, v):
        if v:
            rows.setdefault(i, {})[j] = v
            col_index.setdefault(j, set()).add(i)
            if v in (1, -1):
                units.append((i, j))
        else:
            r = rows.get(i)
            if r and j in r:
                del r[j]
                if not r:
                    del rows[i]
            c = col_index.get(j)
            if c and i in c:
                c.discard(i)
                if not c:
                    del col_index[j]

    def row_axpy(k, i, c):
        """row_k += c * row_i"""
        for j, v in list(rows.get(i, {}).items()):
            set_entry(k, j, rows.get(k, {}).get(j, 0) + c * v)

    def col_axpy(l, j, c):
        """col_l += c * col_j"""
        for i in list(col_index.get(j, set())):
            set_entry(i, l, rows.get(i, {}).get(l, 0) + c * rows[i][j])

    def pick_pivot():
        while units:
            i, j = units.pop()
            if rows.get(i, {}).get(j) in (1, -1):
                return i, j
        best = None
        for i, r in rows.items():
            for j, v in r.items():
                if best is None or abs(v) < abs(best[2]):
                    best = (i, j, v)
                    if abs(v) == 1:
                        return i, j
        return (best[0], best[1]) if best else None

    diag = []
    while rows:
        i, j = pick_pivot()
        while True:
            v = rows[i][j]
            moved = False
            for k in list(col_index.get(j, set())):
                if k == i:
                    continue
                a = rows[k][j]
                q = a // v
                row_axpy(k, i, -q)
                if rows.get(k, {}).get(j):      # remainder: smaller pivot
                    i, moved = k, True
                    break
            if moved:
                continue
            v = rows[i][j]
            for l in list(rows.get(i, {})):
                if l == j:
                    continue
                b = rows[i][l]
                q = b // v
                col_axpy(l, j, -q)
                if rows.get(i, {}).get(l):
                    j, moved = l, True
                    break
            if moved:
                continue
            # both the row and the column of the pivot are clear
            if len(col_index.get(j, set())) == 1 and len(rows[i]) == 1:
                break
        diag.append(abs(rows[i][j]))
        set_entry(i, j, 0)
    # restore the divisibility chain
    diag.sort()
    changed = True
    while changed:
        changed = False
        for a in range(len(diag)):
            for b in range(a + 1, len(diag)):
                if diag[b] % diag[a]:
                    g = gcd(diag[a], diag[b])
                    diag[a], diag[b] = g, diag[a] * diag[b] // g
                    changed = True
        diag.sort()
    return tuple(diag)


def homology(C: ChainComplex) -> HomologyReport:
    N = C.top
    factors = {}
    for n in range(1, N + 1):
        if C.ranks[n] == 0 or C.ranks[n - 1] == 0:
            factors[n] = ()
        else:
            factors[n] = invariant_factors(C.boundaries[n])

    def rank_of(n):
        if n < 1 or n > N:
            return 0
        return len(factors[n])

    betti = []
    torsion = []
    for n in range(N + 1):
        cycles = C.ranks[n] - rank_of(n)
        betti.append(cycles - rank_of(n + 1))
        if n + 1 <= N:
            torsion.append(tuple(t for t in factors[n + 1] if t > 1))
        else:
            torsion.append(())
    return HomologyReport(N, N - 1, tuple(betti), tuple(torsion))


@dataclass(frozen=True)
class ChainMapData:
    source: ChainComplex
    target: ChainComplex
    mats: dict[int, Matrix]


def verify_chain_map(phi: ChainMapData) -> bool:
    A, B = phi.source, phi.target
    for n in range(1, min(A.top, B.top) + 1):
        lhs = mat_mul_shaped(B.boundaries[n], phi.mats[n],
                             B.ranks[n - 1], B.ranks[n], A.ranks[n])
        rhs = mat_mul_shaped(phi.mats[n - 1], A.boundaries[n],
                             B.ranks[n - 1], A.ranks[n - 1], A.ranks[n])
        if [list(r) for r in lhs] != [list(r) for r in rhs]:
            return False
    return True


def chain_map(F: SimplicialMap) -> ChainMapData:
    """Induced map on normalized chains; degenerate images count zero."""
    A = normalized_chains(F.source)
    B = normalized_chains(F.target)
    index = [{x: i for i, x in enumerate(level)} for level in B.basis]
    mats = {}
    for n in range(A.top + 1):
        M = zeros(B.ranks[n], A.ranks[n])
        for j, x in enumerate(A.basis[n]):
            row = index[n].get(F.maps[n][x])
            if row is not None:
                M[row][j] = 1
        mats[n] = freeze(M)
    phi = ChainMapData(A, B, mats)
    if not verify_chain_map(phi):
        raise RuntimeError("simplicial map fails to induce a chain map")
    return phi


def identity_chain_map(C: ChainComplex) -> ChainMapData:
    return ChainMapData(C, C, {n: freeze(identity_matrix(C.ranks[n]))
                               for n in range(C.top + 1)})


def chain_maps_equal(phi: ChainMapData, psi: ChainMapData) -> bool:
    return all(phi.mats[n] == psi.mats[n]
               for n in range(min(phi.source.top, psi.source.top) + 1))


def mapping_cone(phi: ChainMapData) -> ChainComplex:
    """cone_n = target_n (+) source_{n-1} with the usual differential
    (db + phi a, -da)."""
    if not verify_chain_map(phi):
        raise RuntimeError("mapping cone of a non-chain-map")
    A, B = phi.source, phi.target
    N = min(A.top, B.top)
    ranks = [B.ranks[0]]
    for n in range(1, N + 1):
        ranks.append(B.ranks[n] + A.ranks[n - 1])
    boundaries = {}
    for n in range(1, N + 1):
        rows = ranks[n - 1]
        cols = ranks[n]
        M = zeros(rows, cols)
        dB = B.boundaries[n]
        for i in range(B.ranks[n - 1]):
            for j in range(B.ranks[n]):
                M[i][j] = dB[i][j]
        ph = phi.mats[n - 1]
        for i in range(B.ranks[n - 1]):
            for j in range(A.ranks[n - 1]):
                M[i][B.ranks[n] + j] = ph[i][j]
        if n >= 2:
            dA = A.boundaries[n - 1]
            for i in range(A.ranks[n - 2]):
                for j in range(A.ranks[n - 1]):
                    M[B.ranks[n - 1] + i][B.ranks[n] + j] = -dA[i][j]
        boundaries[n] = freeze(M)
    return make_chain_complex(N, ranks, boundaries)


@dataclass(frozen=True)
class EquivalenceVerdict:
    """Homology-equivalence certificate for a simplicial map.

    Acyclicity of the cone through degree d certifies isomorphism on
    H_k for k < d and surjectivity in degree d; this is a homology
    proxy, not a fundamental-group statement.
    """

    passed: bool
    through_degree: int
    cone_report: HomologyReport

    @property
    def note(self) -> str:
        return ("cone acyclic through degree "
                f"{self.through_degree}: H_k iso for k < "
                f"{self.through_degree}, surjective there"
                if self.passed else
                f"cone not acyclic within degree {self.through_degree}")


def is_homology_equivalence(F: SimplicialMap,
                            through_degree: int) -> EquivalenceVerdict:
    if through_degree > F.source.trunc - 1:
        raise ValueError("degree bound exceeds certified range")
    cone = mapping_cone(chain_map(F))
    rep = homology(cone)
    ok = all(rep.betti[k] == 0 and rep.torsion[k] == ()
             for k in range(through_degree + 1))
    return EquivalenceVerdict(ok, through_degree, rep)


def total_complex(T: BiSimplicialSet) -> ChainComplex:
    """Normalized total complex: basis (p, q, x) with x nondegenerate in
    both directions; differential d_h + (-1)^q d_v."""
    N = T.trunc
    nondeg = {(p, q): T.nondegenerate(p, q)
              for p in range(N + 1) for q in range(N + 1)}
    index = {(p, q): {x: i for i, x in enumerate(nondeg[(p, q)])}
             for p in range(N + 1) for q in range(N + 1)}
    basis = []
    offsets = {}
    for n in range(N + 1):
        level = []
        for p in range(n + 1):
            q = n - p
            offsets[(p, q)] = len(level)
            level.extend((p, q, x) for x in nondeg[(p, q)])
        basis.append(tuple(level))
    ranks = tuple(len(level) for level in basis)
    boundaries = {}
    for n in range(1, N + 1):
        M = zeros(ranks[n - 1], ranks[n])
        col = 0
        for p in range(n + 1):
            q = n - p
            for x in nondeg[(p, q)]:
                if q >= 1:
                    for i in range(q + 1):
                        y = T.faces_h[(p, q, i)][x]
                        row = index[(p, q - 1)].get(y)
                        if row is not None:
                            M[offsets[(p, q - 1)] + row][col] += (-1) ** i
                if p >= 1:
                    sgn = (-1) ** q
                    for i in range(p + 1):
                        y = T.faces_v[(p, q, i)][x]
                        row = index[(p - 1, q)].get(y)
                        if row is not None:
                            M[offsets[(p - 1, q)] + row][col] += \
                                sgn * (-1) ** i
                col += 1
        boundaries[n] = freeze(M)
    return make_chain_complex(N, ranks, boundaries, basis)


@dataclass(frozen=True)
class ChainHomotopyData:
    """h with boundary h + h boundary = end_map - start_map exactly."""

    source: ChainComplex
    target: ChainComplex
    start_map: ChainMapData   # (H at vertex 0)_*
    end_map: ChainMapData     # (H at vertex 1)_*
    mats: dict[int, Matrix]   # n -> matrix ranks_target[n+1] x ranks_source[n]


def verify_chain_homotopy(h: ChainHomotopyData) -> bool:
    A, B = h.source, h.target
    for n in range(A.top):
        lhs = mat_mul_shaped(B.boundaries[n + 1], h.mats[n],
                             B.ranks[n], B.ranks[n + 1], A.ranks[n])
        if n >= 1:
            lhs = mat_add(lhs, mat_mul_shaped(
                h.mats[n - 1], A.boundaries[n],
                B.ranks[n], A.ranks[n - 1], A.ranks[n]))
        rhs = mat_sub(h.end_map.mats[n], h.start_map.mats[n])
        if [list(r) for r in lhs] != [list(r) for r in rhs]:
            return False
    return True


def chain_homotopy_from_simplicial(H: SimplicialHomotopy) -> ChainHomotopyData:
    """Prism decomposition of (X x interval) with shuffle signs.

    h_n is defined for n < truncation; the identity
    d h + h d = (H1)_* - (H0)_* is verified in those degrees.
    """
    X = H.source_sset
    Z = H.hmap.target
    N = X.trunc
    I_arrows = {"zero": "id0", "one": "id1", "flip": "u"}
    A = normalized_chains(X)
    B = normalized_chains(Z)
    index = [{x: i for i, x in enumerate(level)} for level in B.basis]
    phi0 = chain_map(H.h0)
    phi1 = chain_map(H.h1)
    mats = {}
    for n in range(N):
        M = zeros(B.ranks[n + 1], A.ranks[n])
        for j, a in enumerate(A.basis[n]):
            for i in range(n + 1):
                prism_x = X.degen(n, i, a)
                # interval chain with the flip at position i+1
                chain = tuple(I_arrows["zero"] if k <= i - 1 else
                              I_arrows["flip"] if k == i else
                              I_arrows["one"] for k in range(n + 1))
                image = H.hmap.maps[n + 1][(prism_x, chain)]
                row = index[n + 1].get(image)
                if row is not None:
                    M[row][j] += (-1) ** i
        mats[n] = freeze(M)
    h = ChainHomotopyData(A, B, phi0, phi1, mats)
    if not verify_chain_homotopy(h):
        raise RuntimeError("prism operator fails the homotopy identity")
    return h
