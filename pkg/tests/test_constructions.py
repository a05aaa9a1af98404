"""Derived categories: triangle, twisted-arrow, slice, span, covers."""

import pytest

import families as fam
from thma.core import (CatFunctor, disc, identity_functor,
                       validate_category, validate_functor)
from thma.constructions import (CoverData, cech_category, comma_fiber,
                                comma_slice, codisc_decomposition_check,
                                fatten, s_category, slice_decomposition_check,
                                t_category, t_op_category, twisted_arrow)
from thma.verifiers import is_essentially_surjective, is_fully_faithful


@pytest.fixture(scope="module")
def two():
    return fam.walking_arrow()


def test_triangle_category_of_walking_arrow(two):
    T, domT, codT, sigma = t_category(two)
    assert len(T.objects) == 3           # the three morphisms of the arrow
    assert len(T.morphisms) == 4         # three identities + one triangle
    assert validate_category(T).ok
    assert validate_functor(domT).ok and validate_functor(codT).ok
    assert sigma.validate()
    assert sigma.direction == "left"


def test_twisted_arrow_of_walking_arrow(two):
    Tw, cod_nat, dom_nat, inclT = twisted_arrow(two)
    assert len(Tw.objects) == 3
    assert len(Tw.morphisms) == 5        # one extra factorization through u
    assert validate_category(Tw).ok
    assert validate_functor(inclT).ok
    assert dom_nat.cod.objects == cod_nat.cod.objects


def test_t_op_category_of_walking_arrow(two):
    To, codTo, tau, incl = t_op_category(two)
    assert len(To.objects) == 3
    assert len(To.morphisms) == 4
    assert validate_category(To).ok
    assert tau.validate()
    assert tau.direction == "right"
    assert validate_functor(incl).ok


def test_triangle_of_group_is_codiscrete():
    G = fam.cyclic_group_category(3)
    T, *_ = t_category(G)
    assert len(T.objects) == 3
    assert all(len(T.hom(a, b)) == 1 for a in T.objects for b in T.objects)


def test_comma_slice_of_identity_matches_triangle_sizes(two):
    P, rho, pX = comma_slice(identity_functor(two))
    T, *_ = t_category(two)
    assert len(P.objects) == len(T.objects)
    assert len(P.morphisms) == len(T.morphisms)
    assert set(rho.cod.objects) == set(two.objects)


def test_comma_fiber_of_object_selection(two):
    pt = disc(("*",))
    sel = CatFunctor(pt, two, {"*": "1"}, {"le(*,*)": "le(1,1)"}) \
        if "le(*,*)" in pt.morphisms else CatFunctor(
            pt, two, {"*": "1"}, {pt.ident["*"]: "le(1,1)"})
    fib0 = comma_fiber("0", sel)
    fib1 = comma_fiber("1", sel)
    # both fibers have a single object (one arrow into f(*) = 1 from each)
    assert len(fib0.objects) == 1 and len(fib1.objects) == 1
    assert validate_category(fib0).ok and validate_category(fib1).ok


def test_span_diagram_squares_commute():
    for f in fam.functor_family(20, 5):
        span = s_category(f)
        assert validate_category(span.S).ok
        assert span.squares_commute()


def test_cech_category_is_a_connected_groupoid_fiberwise():
    cover = CoverData(("1", "2"), {"U": ("1", "2"), "V": ("2",)})
    U2, pi = cech_category(cover)
    assert validate_category(U2).ok
    assert validate_functor(pi).ok
    # fiber over 2 has two objects (from U and V) and is codiscrete
    over2 = [o for o in U2.objects if pi.obj_map[o] == "2"]
    assert len(over2) == 2
    for a in over2:
        for b in over2:
            assert len(U2.hom(a, b)) == 1


def test_cech_rejects_non_cover():
    bad = CoverData(("1", "2"), {"U": ("1",)})
    assert not bad.is_cover()
    with pytest.raises(ValueError):
        cech_category(bad)


def test_fatten_is_fully_faithful_and_essentially_surjective(two):
    X, f = fatten(two, {"a": "0", "b": "0", "c": "1"})
    assert len(X.objects) == 3
    assert len(X.morphisms) == 7
    assert validate_category(X).ok
    assert validate_functor(f).ok
    assert is_fully_faithful(f)
    assert is_essentially_surjective(f)


def test_fatten_rejects_non_surjection(two):
    with pytest.raises(ValueError):
        fatten(two, {"a": "0", "b": "0"})


def test_decomposition_checks_on_fatten(two):
    _, f = fatten(two, {"a": "0", "b": "0", "c": "1"})
    assert codisc_decomposition_check(f)
    assert slice_decomposition_check(f)


def test_decomposition_check_rejects_non_thickening(two):
    # the object selection 1: not fully faithful onto a 2-object domain
    D2 = disc(("x", "y"))
    f = CatFunctor(D2, two, {"x": "1", "y": "1"},
                   {D2.ident["x"]: "le(1,1)", D2.ident["y"]: "le(1,1)"})
    assert not codisc_decomposition_check(f)
