"""Nerves, simplicial identities, bisimplicial objects, homotopies."""

import pytest

import families as fam
from thma.core import NatTrans, identity_functor, validate_nat_trans
from thma.simplicial import (BudgetExceeded, bisimplicial_D,
                             check_diag_equals_nerve_S, diagonal,
                             interval_category, nat_trans_to_homotopy, nerve,
                             nerve_map, projection_beta, sset_product,
                             validate_bisimplicial, validate_bisimplicial_map,
                             validate_simplicial, validate_simplicial_map)


@pytest.fixture(scope="module")
def two():
    return fam.walking_arrow()


def test_nerve_levels_of_walking_arrow(two):
    X = nerve(two, 3)
    assert tuple(len(X.levels[n]) for n in range(4)) == (2, 3, 4, 5)
    assert validate_simplicial(X) == []


def test_nerve_levels_of_z2():
    X = nerve(fam.cyclic_group_category(2), 4)
    assert tuple(len(X.levels[n]) for n in range(5)) == (1, 2, 4, 8, 16)
    assert validate_simplicial(X) == []
    # nondegenerate simplices: the alternating words in the flip
    assert tuple(len(X.nondegenerate(n)) for n in range(5)) == (1,) * 5


def test_nerve_respects_budget(two):
    with pytest.raises(BudgetExceeded):
        nerve(two, 4, budget=3)


def test_simplicial_identities_across_family():
    for C in fam.exhaustive_small_categories()[:12]:
        assert validate_simplicial(nerve(C, 3)) == []


def test_nerve_map_is_simplicial():
    for f in fam.functor_family(20, 7):
        F = nerve_map(f, 3)
        assert validate_simplicial_map(F) == []


def test_sset_product_validates(two):
    I = nerve(interval_category(), 3)
    P = sset_product(nerve(two, 3), I)
    assert validate_simplicial(P) == []
    assert len(P.levels[0]) == 4


def test_bisimplicial_D_of_identity(two):
    D = bisimplicial_D(identity_functor(two), 3)
    assert validate_bisimplicial(D) == []
    assert len(D.levels[(0, 0)]) == 3
    assert len(D.levels[(1, 1)]) == 5


def test_diagonal_of_D_identity_matches_twisted_nerve(two):
    D = bisimplicial_D(identity_functor(two), 3)
    d = diagonal(D)
    assert validate_simplicial(d) == []
    assert tuple(len(d.levels[n]) for n in range(4)) == (3, 5, 7, 9)


def test_diag_equals_nerve_of_span_category():
    for f in fam.functor_family(25, 9):
        check_diag_equals_nerve_S(f, 3)


def test_diag_check_raises_on_wrong_truncation_budget(two):
    with pytest.raises(BudgetExceeded):
        check_diag_equals_nerve_S(identity_functor(two), 3, budget=2)


def test_projection_beta_is_bisimplicial(two):
    beta = projection_beta(identity_functor(two), 3)
    assert validate_bisimplicial_map(beta) == []


def test_nat_trans_to_homotopy_endpoints(two):
    G = fam.cyclic_group_category(2)
    # the two constant functors at the ends of the arrow, compared by u
    from thma.core import CatFunctor
    F0 = CatFunctor(G, two, {"*": "0"}, {m: "le(0,0)" for m in G.morphisms})
    F1 = CatFunctor(G, two, {"*": "1"}, {m: "le(1,1)" for m in G.morphisms})
    alpha = NatTrans(F0, F1, {"*": "le(0,1)"})
    assert validate_nat_trans(alpha).ok
    H = nat_trans_to_homotopy(alpha, 3)
    assert validate_simplicial_map(H.hmap) == []
    assert H.h0.maps == nerve_map(F0, 3).maps
    assert H.h1.maps == nerve_map(F1, 3).maps
