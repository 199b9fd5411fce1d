import numpy as np
import pytest

from catv.base import InheritanceError, StructuralError, VarianceError
from catv.fincat import (
    PlainFunctor,
    chain,
    cyclic_group,
    generated_morphisms,
    klein_four,
    product_category,
    subcategory,
    symmetric_group,
    validate_category,
)
from catv.variance import (
    build_variance,
    check_sfs,
    check_variance,
    composite_equations_report,
    contravariant_variance,
    coproduct_variance,
    covariant_variance,
    discrete_intersection_report,
    enumerate_variances,
    enumerate_wide_subcategories,
    equalizer_variance,
    factor_identities_report,
    factor_positive_integer,
    index_variance,
    inherited_variance,
    is_normal_subgroup,
    path_component_variance,
    preserves_variance,
    product_variance,
    relative_cancellation_report,
    semidirect_variance,
)


def _laws_hold(v):
    return all(
        r.ok
        for r in (
            composite_equations_report(v),
            discrete_intersection_report(v),
            factor_identities_report(v),
            relative_cancellation_report(v),
        )
    )


def _s4_variance(s4):
    E = generated_morphisms(s4, [s4.find_morphism("(1234)"), s4.find_morphism("(13)")])
    M = generated_morphisms(s4, [s4.find_morphism("(123)")])
    return build_variance(s4, E, M, name="V")


def test_covariant_factorization(chain3):
    v = covariant_variance(chain3)
    p02 = chain3.find_morphism("p02")
    fac = v.factor(p02)
    assert fac.term_e == p02 and fac.start_e == p02
    assert fac.term_m == chain3.identity(2)
    assert fac.start_m == chain3.identity(0)
    assert v.role(p02) == "e"
    assert check_variance(chain3, v.E, v.M).ok


def test_contravariant_roles(chain3):
    v = contravariant_variance(chain3)
    assert all(v.role(f) in ("m", "id") for f in chain3.morphisms())
    assert _laws_hold(v)


def test_s4_subgroups(s4):
    subs, complete = enumerate_wide_subcategories(s4)
    assert complete
    assert len(subs) == 30
    assert sum(1 for s in subs if len(s) == 8) == 3
    assert sum(1 for s in subs if len(s) == 3) == 4


def test_s4_variances_of_order_eight_and_three(s4):
    search = enumerate_variances(s4, e_size=8, m_size=3)
    assert search.complete
    assert len(search.pairs) == 12
    for E, M in search.pairs:
        assert not is_normal_subgroup(s4, E)
        assert not is_normal_subgroup(s4, M)
        assert check_variance(s4, E, M).ok


def test_s4_factorization(s4):
    v = _s4_variance(s4)
    assert _laws_hold(v)
    r = s4.find_morphism("(1234)")
    assert v.factor(r).term_e == r
    assert v.role(s4.find_morphism("(123)")) == "m"
    mixed = [f for f in s4.morphisms() if v.role(f) == "mixed"]
    assert len(mixed) == 24 - 8 - 3 + 1
    for f in mixed:
        fac = v.factor(f)
        assert s4.compose(fac.term_m, fac.term_e) == f
        assert s4.compose(fac.start_e, fac.start_m) == f


def test_z4_has_only_trivial_variances(z4):
    search = enumerate_variances(z4)
    assert search.complete
    assert len(search.pairs) == 2


def test_invalid_pair_raises(z4):
    two = generated_morphisms(z4, [z4.find_morphism("2")])
    with pytest.raises(VarianceError) as info:
        build_variance(z4, two, two)
    assert not info.value.report.ok


def test_not_closed_raises(s3):
    with pytest.raises(StructuralError):
        build_variance(s3, [s3.find_morphism("(123)")], [])


def test_normality(s3):
    rotations = generated_morphisms(s3, [s3.find_morphism("(123)")])
    swap = generated_morphisms(s3, [s3.find_morphism("(12)")])
    assert is_normal_subgroup(s3, rotations)
    assert not is_normal_subgroup(s3, swap)


def test_factor_positive_integer():
    assert factor_positive_integer(360, [2]) == (8, 45)
    assert factor_positive_integer(360, [3, 5]) == (45, 8)
    assert factor_positive_integer(1, [2]) == (1, 1)
    with pytest.raises(StructuralError):
        factor_positive_integer(0, [2])


def test_index_variance(z4):
    v = index_variance([z4, z4], (1, 0))
    p = product_category([z4, z4])
    assert v.owner is p
    assert v.index_flags == (1, 0)
    assert _laws_hold(v)
    one = z4.find_morphism("1")
    f = p.index_of([one, one])
    fac = v.factor(f)
    assert fac.term_e == p.index_of([z4.identity(0), one])
    assert fac.term_m == p.index_of([one, z4.identity(0)])
    with pytest.raises(StructuralError):
        index_variance([z4, z4], (2, 0))


def test_product_variance(arrow, chain3):
    v = product_variance([(arrow, covariant_variance(arrow)), (chain3, contravariant_variance(chain3))])
    assert len(v.factor_variances) == 2
    assert _laws_hold(v)


def test_inherited_variance(s4):
    v = _s4_variance(s4)
    whole = subcategory(s4, list(s4.morphisms()))
    assert inherited_variance(s4, v, whole).owner is whole
    rotations = subcategory(s4, generated_morphisms(s4, [s4.find_morphism("(1234)")]))
    # (1234) factors inside E, so only E-morphisms are touched
    assert inherited_variance(s4, v, rotations).owner is rotations


def test_inheritance_failure():
    c = chain(2)
    p = product_category([c, c])
    v = index_variance([c, c], (0, 1))
    diag = subcategory(p, [p.index_of([f, f]) for f in c.morphisms()])
    with pytest.raises(InheritanceError):
        inherited_variance(p, v, diag)


def test_semidirect_variance():
    v = semidirect_variance(3, 2, 2)
    assert len(v.E) == 3 and len(v.M) == 2
    assert _laws_hold(v)


TABLES = ("term_e", "term_m", "start_m", "start_e", "start_obj", "term_obj")


def _same_tables(v, w):
    return all(np.array_equal(getattr(v, key), getattr(w, key)) for key in TABLES)


def test_path_component_variance(arrow, s3):
    union, injections, v = coproduct_variance([(arrow, covariant_variance(arrow)), (s3, contravariant_variance(s3))])
    assert _laws_hold(v)
    J = [injections[0].on_object(x) for x in arrow.objects()]
    w = path_component_variance(union, J)
    assert set(w.E) == {injections[0].on_morphism(f) for f in arrow.morphisms()}
    assert check_variance(union, w.E, w.M).ok
    assert _laws_hold(w)
    assert _same_tables(w, v)
    u = injections[0].on_morphism(arrow.find_morphism("u"))
    with pytest.raises(StructuralError):
        path_component_variance(union, [union.dom(u)])


def test_path_component_extremes(arrow, s3):
    union, _, _ = coproduct_variance([(arrow, covariant_variance(arrow)), (s3, covariant_variance(s3))])
    nothing = path_component_variance(union, [])
    assert set(nothing.E) == set(contravariant_variance(union).E)
    assert _same_tables(nothing, contravariant_variance(union))
    everything = path_component_variance(union, union.objects())
    assert set(everything.M) == set(covariant_variance(union).M)
    assert _same_tables(everything, covariant_variance(union))
    for w in (nothing, everything):
        assert check_variance(union, w.E, w.M).ok
        assert _laws_hold(w)


@pytest.mark.parametrize(
    "build",
    [
        lambda: symmetric_group(3),
        lambda: symmetric_group(4),
        lambda: cyclic_group(4),
        lambda: cyclic_group(6),
        klein_four,
    ],
    ids=["S3", "S4", "Z4", "Z6", "Klein"],
)
def test_strict_factorization_of_groups_is_a_variance(build):
    c = build()
    subs, complete = enumerate_wide_subcategories(c)
    assert complete
    found = 0
    for E in subs:
        for M in subs:
            if len(E) * len(M) != c.n_morphisms:
                assert not check_sfs(c, E, M).ok
                continue
            if check_sfs(c, E, M).ok:
                found += 1
                assert check_variance(c, E, M).ok
    # (G, 1) and (1, G) at least
    assert found >= 2


def _retraction(chain3):
    """x0 ↦ x0, x1 ↦ x1, x2 ↦ x1 on the 3-chain."""
    m = chain3.find_morphism
    images = {"p01": m("p01"), "p02": m("p01"), "p12": chain3.identity(1)}
    obj_map = [0, 1, 1]
    mor_map = [
        chain3.identity(obj_map[chain3.dom(f)]) if chain3.is_identity(f) else images[chain3.morphism_label(f)]
        for f in chain3.morphisms()
    ]
    return PlainFunctor(chain3, chain3, obj_map, mor_map, name="R")


def test_preserves_variance(chain3):
    R = _retraction(chain3)
    cov, contra = covariant_variance(chain3), contravariant_variance(chain3)
    assert preserves_variance(R, cov, cov).ok
    assert preserves_variance(R, contra, contra).ok
    broken = preserves_variance(PlainFunctor.identity(chain3), cov, contra)
    assert sorted(broken.witnesses("covariant-image")) == [("p01",), ("p02",), ("p12",)]


@pytest.mark.parametrize("make", [covariant_variance, contravariant_variance])
def test_equalizer_variance(chain3, make):
    v = make(chain3)
    eq, w = equalizer_variance(PlainFunctor.identity(chain3), _retraction(chain3), v, v)
    assert validate_category(eq).ok
    assert (eq.n_objects, eq.n_morphisms) == (2, 3)
    assert w.owner is eq
    assert check_variance(eq, w.E, w.M).ok
    assert _laws_hold(w)
    p01 = eq.to_local(chain3.find_morphism("p01"))
    assert w.role(p01) == v.role(chain3.find_morphism("p01"))


def test_equalizer_needs_preserving_functors(chain3):
    cov, contra = covariant_variance(chain3), contravariant_variance(chain3)
    ident = PlainFunctor.identity(chain3)
    with pytest.raises(StructuralError):
        equalizer_variance(ident, _retraction(chain3), cov, contra)
