import gc

import pytest
from hypothesis import given, settings, strategies as st

from catv.base import ConfigError, SizeCapError, StructuralError
from catv.config import CAP_ENV_VAR, DEFAULT_CAP, resolve_cap, set_cap
from catv.fincat import (
    FinCategory,
    PlainFunctor,
    chain,
    cyclic_group,
    diagonal,
    disjoint_union,
    finset_skeleton,
    generated_morphisms,
    is_faithful,
    is_generating,
    klein_four,
    opposite_category,
    pairing,
    product_category,
    projection,
    semidirect_product,
    subcategory,
    symmetric_group,
    validate_category,
    validate_functor,
    walking_arrow,
)
from catv.fincat.products import _PRODUCTS


@pytest.mark.parametrize(
    "build",
    [
        walking_arrow,
        lambda: chain(4),
        lambda: cyclic_group(5),
        klein_four,
        lambda: symmetric_group(3),
        lambda: semidirect_product(3, 2, 2),
        lambda: finset_skeleton(2),
    ],
)
def test_builtins_are_categories(build):
    assert validate_category(build()).ok


def test_symmetric_group_labels(s3):
    assert s3.n_objects == 1
    assert s3.n_morphisms == 6
    assert s3.morphism_label(s3.identity(0)) == "e"
    assert {s3.morphism_label(f) for f in s3.morphisms()} == {"e", "(12)", "(13)", "(23)", "(123)", "(132)"}
    assert s3.is_one_object
    assert s3.is_groupoid()


def test_finset_skeleton_counts():
    c = finset_skeleton(2)
    # 1^1 + 2^1 + 1^2 + 2^2 functions
    assert c.n_morphisms == 8
    assert not c.is_groupoid()


def test_declare_rejects_duplicates():
    with pytest.raises(StructuralError):
        FinCategory.declare("bad", ["a", "a"], [])
    with pytest.raises(StructuralError):
        FinCategory.declare("bad", ["a"], [("f", "a", "b")])


def test_missing_composite_is_reported():
    c = FinCategory.declare("C", ["x", "y", "z"], [("f", "x", "y"), ("g", "y", "z")])
    assert c.missing_composites() == [(c.find_morphism("g"), c.find_morphism("f"))]
    assert not validate_category(c).ok


def test_find_unknown_label(arrow):
    with pytest.raises(StructuralError):
        arrow.find_morphism("nope")
    with pytest.raises(StructuralError):
        arrow.find_object("c")


def test_chain_composites(chain3):
    p01, p12, p02 = (chain3.find_morphism(m) for m in ("p01", "p12", "p02"))
    assert chain3.compose(p12, p01) == p02
    assert chain3.compose_path(p12, p01, chain3.identity(0)) == p02


def test_product_is_cached(s3, z4):
    assert product_category([s3, z4]) is product_category([s3, z4])
    p = product_category([s3, z4])
    assert p.n_morphisms == 24
    assert validate_category(p).ok


def test_cached_product_still_checks_cap(s3):
    p = product_category([s3, s3])
    with pytest.raises(SizeCapError) as info:
        product_category([s3, s3], cap=10)
    assert (info.value.count, info.value.cap) == (36, 10)
    assert product_category([s3, s3], cap=36) is p


def test_cap_resolution_order(monkeypatch):
    monkeypatch.delenv(CAP_ENV_VAR, raising=False)
    assert resolve_cap() == DEFAULT_CAP
    monkeypatch.setenv(CAP_ENV_VAR, "1_000")
    assert resolve_cap() == 1000
    try:
        set_cap(20)
        assert resolve_cap() == 20
        assert resolve_cap(7) == 7
    finally:
        set_cap(None)
    assert resolve_cap() == 1000


@pytest.mark.parametrize("raw", ["lots", "0", "-5"])
def test_bad_env_cap(monkeypatch, raw):
    monkeypatch.setenv(CAP_ENV_VAR, raw)
    with pytest.raises(ConfigError):
        resolve_cap()


def test_env_cap_applies_to_products(monkeypatch, s3, z4):
    product_category([s3, z4])
    monkeypatch.setenv(CAP_ENV_VAR, "10")
    with pytest.raises(SizeCapError):
        product_category([s3, z4])
    with pytest.raises(SizeCapError):
        diagonal(z4)


def test_product_cache_does_not_keep_products_alive():
    a, b = chain(2), chain(3)
    key = (id(a), id(b))
    p = product_category([a, b])
    assert _PRODUCTS.get(key) is p
    del a, b, p
    gc.collect()
    assert key not in _PRODUCTS


def test_pairing_of_projections_is_identity(arrow, z4):
    p = product_category([arrow, z4])
    paired = pairing([projection(p, 0), projection(p, 1)])
    assert paired.same_as(PlainFunctor.identity(p))


def test_diagonal_then_projection(s3):
    d = diagonal(s3)
    assert validate_functor(d).ok
    assert d.then(projection(d.target, 1)).mor_map == PlainFunctor.identity(s3).mor_map


def test_opposite_swaps_ends(chain3):
    op = opposite_category(chain3)
    assert validate_category(op).ok
    for f in chain3.morphisms():
        assert (op.dom(f), op.cod(f)) == (chain3.cod(f), chain3.dom(f))


def test_disjoint_union(arrow, s3):
    u, injections = disjoint_union([arrow, s3])
    assert u.n_objects == 3
    assert u.n_morphisms == arrow.n_morphisms + s3.n_morphisms
    assert all(validate_functor(i).ok and is_faithful(i) for i in injections)


def test_generation(s3):
    t, r = s3.find_morphism("(12)"), s3.find_morphism("(123)")
    assert len(generated_morphisms(s3, [r])) == 3
    assert is_generating(s3, [t, r])
    assert not is_generating(s3, [t])


def test_subcategory_must_be_closed(s3):
    r = s3.find_morphism("(123)")
    with pytest.raises(StructuralError):
        subcategory(s3, [r])
    sub = subcategory(s3, generated_morphisms(s3, [r]))
    assert sub.n_morphisms == 3
    assert validate_functor(sub.inclusion).ok


@settings(max_examples=50, deadline=None)
@given(st.data())
def test_composition_is_associative(data):
    c = data.draw(st.sampled_from([chain(4), cyclic_group(6), klein_four(), finset_skeleton(2)]))
    f = data.draw(st.sampled_from(list(c.morphisms())))
    g = data.draw(st.sampled_from(list(c.out_of(c.cod(f)))))
    h = data.draw(st.sampled_from(list(c.out_of(c.cod(g)))))
    assert c.compose(h, c.compose(g, f)) == c.compose(c.compose(h, g), f)
