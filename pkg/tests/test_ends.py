import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from catv.base import PreconditionError, StructuralError
from catv.ends import (
    EndResult,
    Wedge,
    check_cowedge,
    check_wedge,
    compute_coend,
    compute_end,
    count_cowedges_into_two,
    decode_family,
    fubini_check,
    nat_set,
    oracle_coend_size,
    oracle_end,
    oracle_nat_set,
    parameter_functor,
)
from catv.mixfun import SetMap, constant_functor, external_product, hom_functor, validate_mixed_functor
from catv.natural import (
    build_span_from_partition,
    derive_partition,
    diagonal_leg,
    identity_span,
    single_class_generators,
)
from catv.variance import contravariant_variance, covariant_variance

from conftest import arrow_functor


@pytest.mark.parametrize("name, size", [("s3", 1), ("z4", 4), ("klein", 4)])
def test_end_of_hom_is_the_centre(request, name, size):
    c = request.getfixturevalue(name)
    H = hom_functor(c)
    result = compute_end(H, diagonal_leg(c))
    assert result.size == size
    assert result.tuples() == oracle_end(H, diagonal_leg(c))
    assert result.jointly_monic()


def test_jointly_monic_detects_repeated_elements(z4):
    result = compute_end(hom_functor(z4), diagonal_leg(z4))
    assert result.jointly_monic()
    doubled = EndResult(result.functor, result.leg, np.vstack([result.elements, result.elements[:1]]), result.generators)
    assert doubled.size == 5
    assert not doubled.jointly_monic()


def test_end_renders_elements(s3, hom_s3):
    result = compute_end(hom_s3, diagonal_leg(s3))
    assert [result.render_element(i) for i in range(result.size)] == ["(e)"]
    assert result.to_dict()["size"] == 1


def test_universal_wedge(z4):
    H = hom_functor(z4)
    span = diagonal_leg(z4)
    result = compute_end(H, span)
    w = result.universal_wedge()
    assert check_wedge(H, span, w).ok
    assert list(result.mediating_map(w).values) == list(range(result.size))


def test_non_wedge_is_reported(s3, hom_s3):
    span = diagonal_leg(s3)
    result = compute_end(hom_s3, span)
    swap = s3.find_morphism("(12)")
    w = Wedge(1, [SetMap.of([s3.hom_position(swap)], 6)])
    assert not check_wedge(hom_s3, span, w).ok
    with pytest.raises(PreconditionError):
        result.mediating_map(w)


@pytest.mark.parametrize("flags_expr", ["F(x) -> G(y)", "F(x) -> G(x)"])
def test_generators_give_the_same_end(chain3, flags_expr):
    H = hom_functor(chain3)
    p = derive_partition(flags_expr).bind([chain3], [chain3])
    span = build_span_from_partition(p)
    for F in (H, constant_functor(H.variance, 2)):
        full = compute_end(F, span.paired)
        restricted = compute_end(F, span.paired, gens=single_class_generators(span))
        assert full.tuples() == restricted.tuples()


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_nat_set_matches_enumeration(arrow, data):
    v = covariant_variance(arrow)
    F = arrow_functor(data, v, "F", max_size=2)
    G = arrow_functor(data, v, "G", max_size=3)
    result = nat_set(F, G)
    assert result.tuples() == oracle_nat_set(F, G)
    for element in result.tuples():
        eta = decode_family(F, G, element)
        u = arrow.find_morphism("u")
        assert G(u).after(eta[0]) == eta[1].after(F(u))


def test_nat_set_needs_covariant_functors(arrow):
    K = constant_functor(contravariant_variance(arrow), 2)
    with pytest.raises(StructuralError):
        nat_set(K, K)


@pytest.mark.parametrize("name, size", [("s3", 3), ("z4", 4), ("klein", 4)])
def test_coend_of_hom_counts_conjugacy_classes(request, name, size):
    c = request.getfixturevalue(name)
    H = hom_functor(c)
    result = compute_coend(H, diagonal_leg(c))
    assert result.size == size
    assert oracle_coend_size(H, diagonal_leg(c)) == size
    assert count_cowedges_into_two(H, diagonal_leg(c)) == 2 ** size
    assert check_cowedge(H, diagonal_leg(c), result.universal_cowedge()).ok


def test_coend_classes_of_s3(s3, hom_s3):
    result = compute_coend(hom_s3, diagonal_leg(s3))
    sizes = sorted(len(cls) for cls in result.classes())
    assert sizes == [1, 2, 3]


def test_parameter_functor(s3, z4):
    F = external_product(hom_functor(s3), hom_functor(z4))
    P = parameter_functor(F, diagonal_leg(s3))
    assert validate_mixed_functor(P).ok
    assert set(P.obj_map) == {4}


def test_fubini_on_hom_product(s3, z4):
    F = external_product(hom_functor(s3), hom_functor(z4))
    witness = fubini_check(F, diagonal_leg(s3), diagonal_leg(z4))
    assert witness.ok
    assert witness.total.size == witness.iterated.size == 4
    assert sorted(witness.mapping.tolist()) == list(range(4))


@settings(max_examples=50, deadline=None)
@given(st.data())
def test_fubini_on_random_functors(arrow, data):
    v = covariant_variance(arrow)
    F1 = arrow_functor(data, v, "F1", max_size=2)
    F2 = arrow_functor(data, v, "F2", max_size=2)
    F = external_product(F1, F2)
    witness = fubini_check(F, identity_span(arrow), identity_span(arrow))
    assert witness.ok
    assert witness.total.size == compute_end(F1, identity_span(arrow)).size * compute_end(F2, identity_span(arrow)).size


def test_fubini_needs_a_binary_product(s3):
    with pytest.raises(StructuralError):
        fubini_check(constant_functor(covariant_variance(s3), 2), identity_span(s3), identity_span(s3))
