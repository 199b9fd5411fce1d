import pytest

from catv.base import LiftError, NotASectionError, NotNaturalError
from catv.comma import (
    algebra_category,
    build_comma,
    classical_comma,
    componentwise_lift,
    forgetful,
    require_section,
    section_to_transformation,
    transformation_to_section,
)
from catv.fincat import PlainFunctor, Subgraph, cyclic_group, is_faithful, validate_category, validate_functor
from catv.mixfun import MixedFunctor, SetMap, SetValuedMixedFunctor, hom_functor
from catv.natural import diagonal_span, identity_family, product_span


@pytest.fixture(scope="module")
def powers(arrow, arrow_cov):
    """P: a ↦ 2, b ↦ 3, u ↦ [0, 2] and its identity transformation."""
    P = SetValuedMixedFunctor(arrow_cov, [2, 3], [SetMap.identity(2), SetMap.identity(3), SetMap.of([0, 2], 3)], name="P")
    return P, identity_family(P)


def test_comma_of_identity(powers):
    P, t = powers
    cc = build_comma(P, P, t.span)
    assert validate_category(cc).ok
    U = forgetful(cc)
    assert validate_functor(U).ok
    assert is_faithful(U)
    # 2^2 self-maps over a, 3^3 over b
    assert cc.n_objects == 4 + 27


def test_section_round_trip(powers):
    P, t = powers
    cc = build_comma(P, P, t.span)
    S = transformation_to_section(t, cc)
    require_section(cc, S)
    assert validate_functor(S).ok
    back = section_to_transformation(cc, S)
    assert back.components == t.components


def test_non_natural_family_has_no_section(powers):
    P, t = powers
    broken = t.replace(1, SetMap.of([0, 1, 1], 3))
    with pytest.raises(NotNaturalError) as info:
        transformation_to_section(broken)
    assert info.value.witness == ("u",)


def test_foreign_functor_is_not_a_section(powers):
    P, t = powers
    cc = build_comma(P, P, t.span)
    with pytest.raises(NotASectionError):
        require_section(cc, PlainFunctor.identity(cc))


def test_classical_comma_matches(arrow):
    b = arrow.find_object("b")
    ib = arrow.identity(b)
    F = PlainFunctor.identity(arrow)
    G = PlainFunctor(arrow, arrow, [b, b], [ib, ib, ib], name="B")
    ordinary = classical_comma(F, G)
    general = build_comma(MixedFunctor.from_plain(F), MixedFunctor.from_plain(G), product_span(arrow, arrow))
    assert ordinary.same_structure(general)
    assert validate_category(ordinary).ok


def test_algebras_are_diagonal_comma(arrow):
    b = arrow.find_object("b")
    ib = arrow.identity(b)
    F = PlainFunctor.identity(arrow)
    G = PlainFunctor(arrow, arrow, [b, b], [ib, ib, ib], name="B")
    alg = algebra_category(F, G)
    general = build_comma(MixedFunctor.from_plain(F), MixedFunctor.from_plain(G), diagonal_span(arrow))
    assert (alg.n_objects, alg.n_morphisms) == (general.n_objects, general.n_morphisms)


@pytest.fixture(scope="module")
def hom_z2():
    return hom_functor(cyclic_group(2))


def test_componentwise_lift(hom_z2):
    t = identity_family(hom_z2)
    cc = build_comma(hom_z2, hom_z2, t.span)
    S = transformation_to_section(t, cc)
    R = t.apex
    U = forgetful(cc)
    gens = Subgraph(R, frozenset([R.index_of([1, 0]), R.index_of([0, 1])]))
    lifted = componentwise_lift(
        U, PlainFunctor.identity(R), gens,
        {f: S.on_morphism(f) for f in gens}, S.obj_map,
    )
    assert lifted.same_as(S)


def test_lift_needs_generators(hom_z2):
    t = identity_family(hom_z2)
    cc = build_comma(hom_z2, hom_z2, t.span)
    S = transformation_to_section(t, cc)
    R = t.apex
    with pytest.raises(LiftError):
        componentwise_lift(forgetful(cc), PlainFunctor.identity(R), Subgraph(R, frozenset()), {}, S.obj_map)


def test_lift_rejects_wrong_values(powers):
    P, t = powers
    cc = build_comma(P, P, t.span)
    S = transformation_to_section(t, cc)
    R = t.apex
    u = R.find_morphism("u")
    gens = Subgraph.everything(R)
    values = {f: S.on_morphism(f) for f in R.morphisms()}
    values[u] = S.on_morphism(R.identity(0))
    with pytest.raises(LiftError):
        componentwise_lift(forgetful(cc), PlainFunctor.identity(R), gens, values, S.obj_map)
