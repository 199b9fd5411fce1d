import pytest

from catv.base import DSLSemanticError, DSLSyntaxError
from catv.dsl import (
    check_workspace,
    load_workspace,
    parse_program,
    parse_workspace,
    print_workspace,
    same_declarations,
)
from catv.ends import compute_end
from catv.natural import PartitionSpan, is_natural

from conftest import FIXTURES

ALL_FIXTURES = sorted(FIXTURES.glob("*.catv"))


@pytest.mark.parametrize("path", ALL_FIXTURES, ids=lambda p: p.stem)
def test_fixture_checks(path):
    ws = load_workspace(path)
    report = check_workspace(ws)
    assert report.ok, report.render()


@pytest.mark.parametrize("path", ALL_FIXTURES, ids=lambda p: p.stem)
def test_printed_fixture_reparses(path):
    ws = load_workspace(path)
    again = parse_workspace(print_workspace(ws))
    assert same_declarations(ws, again)


def test_two_fixture_contents():
    ws = load_workspace(FIXTURES / "two.catv")
    two = ws.category("Two")
    assert (two.n_objects, two.n_morphisms) == (2, 3)
    assert ws.variance("Cov").role(two.find_morphism("u")) == "e"
    assert is_natural(ws.transformation("alpha"))
    assert ws.functor("P").obj_map == (2, 3)


def test_s3_end_through_workspace():
    ws = load_workspace(FIXTURES / "s3hom.catv")
    result = compute_end(ws.functor("Hom"), ws.span("Diag"))
    assert result.size == 1


def test_partition_declaration():
    ws = load_workspace(FIXTURES / "extranatural.catv")
    span = ws.span("P")
    assert isinstance(span, PartitionSpan)
    assert ws.partitions["P"].render() == "{1,2,3}"


def test_quoted_labels_round_trip():
    text = '''
category "My Cat" {
    objects: "x 0", y
    mor "f'": "x 0" -> y
}
'''
    with pytest.raises(DSLSyntaxError):
        parse_program(text)
    text = '''
category Q {
    objects: "x 0", y
    mor "the map": "x 0" -> y
}
variance V on Q { E: "the map" ; M: }
'''
    ws = parse_workspace(text)
    assert ws.category("Q").find_morphism("the map") == 2
    assert same_declarations(ws, parse_workspace(print_workspace(ws)))


def test_unknown_morphism_has_a_position():
    text = """category T {
    objects: a
}

variance V on T { E: nope ; M: }
"""
    with pytest.raises(DSLSemanticError) as info:
        parse_workspace(text, source="t.catv")
    assert info.value.line == 5
    assert "nope" in info.value.message
    assert str(info.value).startswith("t.catv:5:")


def test_unknown_name_lists_declared():
    text = "builtin A = arrow()\nhom H on B\n"
    with pytest.raises(DSLSemanticError) as info:
        parse_workspace(text)
    assert info.value.line == 2
    assert "A" in info.value.message


def test_syntax_error_has_a_position():
    text = "builtin A = arrow()\ncategory {\n"
    with pytest.raises(DSLSyntaxError) as info:
        parse_program(text)
    assert info.value.line == 2


def test_duplicate_names_are_rejected():
    with pytest.raises(DSLSemanticError):
        parse_workspace("builtin A = arrow()\nbuiltin A = chain(2)\n")


def test_missing_composite_is_rejected():
    text = """category C {
    objects: x, y, z
    mor f: x -> y
    mor g: y -> z
}
"""
    with pytest.raises(DSLSemanticError) as info:
        parse_workspace(text)
    assert info.value.line == 1


def test_invalid_variance_is_rejected():
    text = "builtin Z = cyclic(4)\nvariance V on Z { E: 2 ; M: 2 }\n"
    with pytest.raises(DSLSemanticError) as info:
        parse_workspace(text)
    assert info.value.line == 2


def test_non_natural_transformation_fails_check():
    text = """builtin C = arrow()
setfunctor P : C {
    obj a => 2 ; obj b => 3
    mor u => [0, 2]
}
span D : C => C * C { diagonal }
transformation t : P => P along D {
    at a => [0, 1]
    at b => [0, 1, 1]
}
"""
    ws = parse_workspace(text)
    report = check_workspace(ws)
    assert not report.ok
    assert report.witnesses("transformation t: naturality") == [("u",)]


def test_builtin_arity():
    with pytest.raises(DSLSemanticError):
        parse_workspace("builtin A = chain()\n")


def test_missing_file(tmp_path):
    with pytest.raises(DSLSemanticError):
        load_workspace(tmp_path / "absent.catv")


def test_span_head_names_both_targets():
    text = "builtin C = arrow()\nspan D : C => C * C { diagonal }\n"
    ws = parse_workspace(text)
    span = ws.span("D")
    assert span.two_sided
    assert span.left.target is ws.category("C")
    assert span.right.target is ws.category("C")
    assert "span D : C => C * C" in print_workspace(ws)


def test_comma_in_span_head_is_a_syntax_error():
    with pytest.raises(DSLSyntaxError) as info:
        parse_program("builtin C = arrow()\nspan D : C => C, C { diagonal }\n")
    assert info.value.line == 2


def test_one_legged_span_into_declared_power():
    text = "builtin C = arrow()\nproduct P = C * C\nspan D : C => P { diagonal }\n"
    ws = parse_workspace(text)
    span = ws.span("D")
    assert not span.two_sided
    assert span.left.target is ws.category("P")


def test_product_declarations_share_without_renaming():
    text = "builtin Z = cyclic(4)\nproduct A = Z * Z\nproduct B = Z * Z\n"
    ws = parse_workspace(text)
    assert ws.category("A") is ws.category("B")
    assert ws.category("A").name not in ("A", "B")
