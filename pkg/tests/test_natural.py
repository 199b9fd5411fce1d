import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from catv.base import DSLSyntaxError, PreconditionError, StructuralError
from catv.fincat import PlainFunctor, Subgraph
from catv.mixfun import MixedFunctor, SetMap, constant_functor, hom_functor
from catv.natural import (
    TransformationFamily,
    build_span_from_partition,
    check_classical_naturality,
    check_heuristic_naturality,
    check_twisted_naturality,
    derive_partition,
    diagonal_span,
    evaluation_family,
    identity_family,
    is_generalized_extranatural,
    is_natural,
    partition_from_classes,
    single_class_generators,
    to_dinatural,
)
from catv.variance import contravariant_variance, covariant_variance

from conftest import arrow_functor


@pytest.fixture(scope="module")
def ev():
    return evaluation_family(3)


def _random_map(data, n, size, label):
    return SetMap.of(data.draw(st.lists(st.integers(0, size - 1), min_size=n, max_size=n), label=label), size)


def _random_family(data, F, G, span, name="eta"):
    R = span.apex
    comps = []
    for x in R.objects():
        n = F.on_object(span.left.on_object(x))
        size = G.on_object(span.right.on_object(x))
        comps.append(_random_map(data, n, size, f"{name}[{R.object_label(x)}]"))
    return TransformationFamily(F, G, span, comps, name=name)


@pytest.mark.parametrize(
    "expr, rendered",
    [
        ("F(x,y,y) -> G(x,x,y)", "{1,4,5} {2,3,6}"),
        ("F(x,x,x,y,z) -> G(x,z,z)", "{1,2,3,6} {4} {5,7,8}"),
        ("F(a,b,a) -> G(b)", "{1,3} {2,4}"),
    ],
)
def test_derive_partition(expr, rendered):
    p = derive_partition(expr)
    assert p.render() == rendered
    assert partition_from_classes(p.n_domain, p.n_codomain, p.classes) == p


def test_partition_syntax_error():
    with pytest.raises(DSLSyntaxError):
        derive_partition("F(x,y -> G(x)")


def test_partition_binding_needs_equal_factors(s3, z4):
    p = derive_partition("F(x) -> G(x)")
    with pytest.raises(StructuralError):
        p.bind([s3], [z4])
    with pytest.raises(StructuralError):
        p.bind([s3, s3], [s3])


def test_partition_from_classes_fills_singletons():
    p = partition_from_classes(2, 2, [[1, 4]])
    assert p.render() == "{1,4} {2} {3}"
    with pytest.raises(StructuralError):
        partition_from_classes(1, 1, [[1, 3]])


def test_generalized_extranatural():
    p = derive_partition("F(x,y) -> G(y,x)")
    assert is_generalized_extranatural(p, [1, 0, 0, 1])
    assert not is_generalized_extranatural(p, [1, 0, 1, 0])
    assert not is_generalized_extranatural(derive_partition("F(x,x) -> G(y)"), [1, 0, 0])
    assert is_generalized_extranatural(derive_partition("F(x,x) -> G(y,y)"), [1, 0, 0, 1])
    with pytest.raises(StructuralError):
        is_generalized_extranatural(p, [1, 0])


def test_partition_span_shape(chain3):
    p = derive_partition("F(x,y,y) -> G(x,x,y)").bind([chain3] * 3, [chain3] * 3)
    span = build_span_from_partition(p)
    assert span.apex.n_objects == 9
    assert span.left.target.n_objects == 27
    assert span.embed_object(0) == (0, 0, 0, 0, 0, 0)


def test_evaluation_is_natural(ev):
    assert check_heuristic_naturality(ev).ok
    assert is_natural(ev, single_class_generators(ev.span))


@settings(max_examples=25, deadline=None)
@given(st.data())
def test_evaluation_detects_every_change(ev, data):
    R = ev.apex
    candidates = [x for x in R.objects() if ev[x].size > 1 and ev[x].domain_size > 0]
    x = data.draw(st.sampled_from(candidates), label="component")
    comp = ev[x]
    j = data.draw(st.integers(0, comp.domain_size - 1), label="entry")
    shift = data.draw(st.integers(1, comp.size - 1), label="shift")
    values = np.array(comp.values, copy=True)
    values[j] = (values[j] + shift) % comp.size
    mutated = ev.replace(x, SetMap.of(values, comp.size))
    assert not is_natural(mutated)
    assert not is_natural(mutated, single_class_generators(ev.span))


def test_identity_family(hom_s3):
    t = identity_family(hom_s3)
    assert check_heuristic_naturality(t).ok


def test_typing_is_checked_first(arrow, arrow_cov):
    F = constant_functor(arrow_cov, 2)
    G = constant_functor(arrow_cov, 3)
    span = diagonal_span(arrow)
    t = TransformationFamily(F, G, span, [SetMap.identity(2), SetMap.of([0, 1], 3)])
    report = check_heuristic_naturality(t)
    assert report.witnesses("typing") == [("a",)]


def test_generators_must_generate(ev):
    R = ev.apex
    with pytest.raises(PreconditionError):
        check_heuristic_naturality(ev, Subgraph(R, frozenset()))


def test_arrow_transformation(arrow):
    F = MixedFunctor.from_plain(PlainFunctor.identity(arrow))
    b = arrow.find_object("b")
    ib = arrow.identity(b)
    G = MixedFunctor.from_plain(PlainFunctor(arrow, arrow, [b, b], [ib, ib, ib]))
    eta = [arrow.find_morphism("u"), ib]
    assert check_classical_naturality(F, G, eta).ok
    t = TransformationFamily(F, G, diagonal_span(arrow), eta, name="alpha")
    assert is_natural(t)
    with pytest.raises(StructuralError):
        check_classical_naturality(F, MixedFunctor(contravariant_variance(arrow), arrow, [b, b], [ib, ib, ib]), eta)


@settings(max_examples=200, deadline=None)
@given(st.data())
def test_classical_naturality_is_diagonal_naturality(arrow, data):
    v = covariant_variance(arrow)
    F = arrow_functor(data, v, "F")
    G = arrow_functor(data, v, "G")
    t = _random_family(data, F, G, diagonal_span(arrow))
    assert check_classical_naturality(F, G, t.components).ok == is_natural(t)


@settings(max_examples=200, deadline=None)
@given(st.data())
def test_twisted_naturality_is_diagonal_naturality(arrow, data):
    F = arrow_functor(data, covariant_variance(arrow), "F")
    G = arrow_functor(data, contravariant_variance(arrow), "G")
    t = _random_family(data, F, G, diagonal_span(arrow))
    assert check_twisted_naturality(F, G, t.components).ok == is_natural(t)


@settings(max_examples=100, deadline=None)
@given(st.data())
def test_dinatural_form_agrees(chain3, s3, data):
    c = data.draw(st.sampled_from([chain3, s3]), label="category")
    H = hom_functor(c)
    K = constant_functor(H.variance, 2)
    span = diagonal_span(H.source)
    # chain3 has empty hom-sets, so only Hom ⇒ 2 has families there
    F, G = (K, H) if c is s3 and data.draw(st.booleans(), label="hom second") else (H, K)
    form = to_dinatural(F, G, span)
    t = _random_family(data, F, G, span)
    dinatural, natural = form.agrees(t)
    assert dinatural == natural
