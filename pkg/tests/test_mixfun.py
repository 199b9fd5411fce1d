import gc

import pytest
from hypothesis import given, settings, strategies as st

from catv.base import CompatibilityError, NotInvertibleError, StructuralError
from catv.fincat import PlainFunctor, chain, cyclic_group, generated_morphisms, validate_functor, walking_arrow
from catv.mixfun import (
    FINSET,
    CompatiblePair,
    MixedFunctor,
    SetMap,
    SetValuedMixedFunctor,
    assemble_covariant,
    assemble_mixed,
    as_target,
    check_compatible_pair,
    constant_functor,
    covariant_from_inverted,
    e_projection_is_homomorphism,
    e_projection_report,
    e_subcategory,
    external_product,
    hom_functor,
    invert_contravariant,
    m_subcategory,
    mixed_from_opposite,
    mixed_to_opposite,
    restrict_to_pair,
    set_hom_functor,
    starting_equals_terminating_e,
    validate_mixed_functor,
)
from catv.mixfun.targets import _TARGETS
from catv.variance import build_variance, contravariant_variance, covariant_variance, semidirect_variance

from conftest import arrow_functor, permutation_order, permutation_power


def _cyclic_action(data):
    """Z_o acting on {0..k-1} through a random permutation of order o."""
    k = data.draw(st.integers(1, 4), label="k")
    perm = data.draw(st.permutations(range(k)), label="perm")
    o = permutation_order(perm)
    c = cyclic_group(o)
    contravariant = data.draw(st.booleans(), label="contravariant")
    v = contravariant_variance(c) if contravariant else covariant_variance(c)
    maps = [SetMap.of(permutation_power(perm, i), k) for i in range(o)]
    return SetValuedMixedFunctor(v, [k], maps, name="act")


def _s4_variance(s4):
    E = generated_morphisms(s4, [s4.find_morphism("(1234)"), s4.find_morphism("(13)")])
    M = generated_morphisms(s4, [s4.find_morphism("(123)")])
    return build_variance(s4, E, M, name="V")


def test_hom_functor_is_a_functor(s3, chain3):
    for c in (s3, chain3):
        H = hom_functor(c)
        assert H.variance.index_flags == (1, 0)
        assert validate_mixed_functor(H).ok
    assert hom_functor(s3).obj_map == (6,)


def test_constant_functor(z4):
    v = contravariant_variance(z4)
    K = constant_functor(v, 3)
    assert validate_mixed_functor(K).ok
    assert K.size(0) == 3


def test_broken_functor_is_reported(arrow, arrow_cov):
    ids = [SetMap.identity(2), SetMap.identity(2), SetMap.of([1, 0], 2)]
    assert validate_mixed_functor(SetValuedMixedFunctor(arrow_cov, [2, 2], ids)).ok
    wrong = [SetMap.of([1, 0], 2), SetMap.identity(2), SetMap.of([1, 0], 2)]
    report = validate_mixed_functor(SetValuedMixedFunctor(arrow_cov, [2, 2], wrong))
    assert not report.ok
    assert report.witnesses("identity")


@settings(max_examples=200, deadline=None)
@given(st.data())
def test_decomposition_round_trip(data):
    F = _cyclic_action(data) if data.draw(st.booleans(), label="cyclic") else arrow_functor(
        data, covariant_variance(walking_arrow()), name="P"
    )
    assert validate_mixed_functor(F).ok
    pair = restrict_to_pair(F)
    assert check_compatible_pair(pair).ok
    G = assemble_mixed(pair)
    assert G.same_as(F)
    assert restrict_to_pair(G).same_as(pair)


def test_hom_round_trip(s3):
    H = hom_functor(s3)
    assert assemble_mixed(restrict_to_pair(H)).same_as(H)


def test_incompatible_pair_is_rejected(z4):
    v = covariant_variance(z4)
    swap = SetMap.of([1, 0], 2)
    # G(1) = id but G(3) = swap, so G(3)∘G(1) != G(0)
    g_map = {f: swap if z4.morphism_label(f) == "3" else SetMap.identity(2) for f in v.E}
    pair = CompatiblePair(v, FINSET, (2,), (2,), g_map, {z4.identity(0): SetMap.identity(2)})
    assert not check_compatible_pair(pair).ok
    with pytest.raises(CompatibilityError):
        assemble_mixed(pair)


def test_pair_must_cover_the_subcategories(z4):
    v = covariant_variance(z4)
    with pytest.raises(StructuralError):
        CompatiblePair(v, z4, (0,), (0,), {}, {z4.identity(0): z4.identity(0)})


def test_assemble_covariant_from_inclusions(s4):
    v = _s4_variance(s4)
    G, H = e_subcategory(v).inclusion, m_subcategory(v).inclusion
    F = assemble_covariant(G, H, v)
    assert F.same_as(PlainFunctor.identity(s4))
    with pytest.raises(StructuralError):
        assemble_covariant(H, G, v)


def test_inverting_contravariant_images(s4):
    v = _s4_variance(s4)
    F = PlainFunctor.identity(s4)
    G = invert_contravariant(F, v)
    assert validate_mixed_functor(G).ok
    assert covariant_from_inverted(G).same_as(F)


def test_non_invertible_image():
    c = chain(2)
    with pytest.raises(NotInvertibleError) as info:
        invert_contravariant(PlainFunctor.identity(c), contravariant_variance(c))
    assert info.value.witness == ("p01",)


def test_opposite_round_trip(z4):
    F = MixedFunctor(contravariant_variance(z4), z4, [0], list(z4.morphisms()), name="inv")
    assert validate_mixed_functor(F).ok
    P = mixed_to_opposite(F)
    assert validate_functor(P).ok
    assert mixed_from_opposite(P, z4).images() == F.images()


def test_external_product(arrow, z4):
    H = hom_functor(z4)
    K = constant_functor(covariant_variance(arrow), 2)
    X = external_product(K, H)
    assert validate_mixed_functor(X).ok
    assert set(X.obj_map) == {8}


def test_set_hom_functor(arrow, arrow_cov):
    P = SetValuedMixedFunctor(arrow_cov, [2, 3], [SetMap.identity(2), SetMap.identity(3), SetMap.of([0, 2], 3)])
    Q = constant_functor(arrow_cov, 2)
    H = set_hom_functor(P, Q)
    assert validate_mixed_functor(H).ok
    assert list(H.obj_map) == [4, 4, 8, 8]
    with pytest.raises(StructuralError):
        set_hom_functor(P, constant_functor(contravariant_variance(arrow), 2))


def test_e_projection(klein, s4):
    split = build_variance(klein, [klein.find_morphism("a")], [klein.find_morphism("b")])
    assert e_projection_is_homomorphism(split)
    assert starting_equals_terminating_e(split)
    for v in (split, _s4_variance(s4), semidirect_variance(3, 2, 2)):
        assert e_projection_report(v).ok


def test_target_cache_does_not_keep_targets_alive():
    c = chain(2)
    t = as_target(c)
    assert as_target(c) is t
    assert _TARGETS.get(id(c)) is t
    del t
    gc.collect()
    assert id(c) not in _TARGETS
    assert as_target(c).category is c
