import pytest

from modules.errors import InputError
from modules.groups import (
    FiniteGroup,
    analyze,
    build_group,
    cycle_string,
    dual_abelian,
    linear_characters,
    parse_cycles,
    parse_group_expr,
    quotient,
    render_group_expr,
)


def test_parse_and_render_group_expr():
    assert parse_group_expr("D(3) x D(5)") == [("D", (3,)), ("D", (5,))]
    assert render_group_expr(parse_group_expr("SD(7,3)xSD(13,3)")) == "SD(7,3)xSD(13,3)"
    with pytest.raises(InputError):
        parse_group_expr("Q(8)")
    with pytest.raises(InputError) as excinfo:
        parse_group_expr("S(4)y")
    assert excinfo.value.position == 4


def test_cycles():
    perm = parse_cycles("(1 2)(3 4 5)", 5)
    assert perm == (1, 0, 3, 4, 2)
    assert cycle_string(perm) == "(1 2)(3 4 5)"
    assert cycle_string(tuple(range(3))) == "()"
    with pytest.raises(InputError):
        parse_cycles("(1 1)", 3)
    with pytest.raises(InputError):
        parse_cycles("(1 7)", 3)


def test_group_orders():
    assert build_group("S(4)").order == 24
    assert build_group("A(5)").order == 60
    assert build_group("D(4)").order == 8
    assert build_group("C(6)").order == 6
    assert build_group("SD(7,3)").order == 21
    assert build_group("D(3)xD(5)").order == 60
    with pytest.raises(InputError):
        build_group("SD(7,2)xSD(5,3)")


def test_composition_convention():
    group = build_group("S(3)")
    a = group.parse_element("(1 2)")
    b = group.parse_element("(2 3)")
    # (pq)(x) = p(q(x)): (1 2)(2 3) sends 3 -> 2 -> 1
    assert group.name(group.mul(a, b)) == "(1 2 3)"
    assert group.conj(a, b) == group.mul(group.mul(a, b), group.inv[a])


def test_rejects_non_permutation():
    with pytest.raises(InputError):
        FiniteGroup([(0, 0, 1)], 3, "bad")


def test_center_and_classes():
    s4 = build_group("S(4)")
    assert s4.center.order == 1
    assert sorted(len(c) for c in s4.conjugacy_classes) == [1, 3, 6, 6, 8]
    d4 = build_group("D(4)")
    assert d4.center.order == 2
    assert d4.is_nilpotent
    assert not s4.is_nilpotent


def test_subgroups_and_cosets():
    s4 = build_group("S(4)")
    H = s4.subgroup("gens:(1 2),(3 4)")
    assert H.order == 4
    assert H.is_abelian
    assert not H.is_normal()
    assert s4.normalizer(H).order == 8
    cosets = s4.double_cosets(H)
    assert sum(len(m) for _, m in cosets) == 24
    assert len(s4.left_cosets(H)) == 6
    assert len(s4.subgroup_classes()) == 11


def test_derived_subgroup_and_quotient():
    s4 = build_group("S(4)")
    assert s4.derived_subgroup().order == 12
    V = s4.subgroup("gens:(1 2)(3 4),(1 3)(2 4)")
    image, projection = quotient(s4, V)
    assert image.order == 6
    assert len(projection) == 24
    for a in s4.generators:
        for b in s4.generators:
            assert projection[s4.mul(a, b)] == image.mul(projection[a], projection[b])
    with pytest.raises(InputError):
        quotient(s4, s4.subgroup("gens:(1 2)"))


def test_analyze_records():
    d4 = build_group("D(4)")
    H = d4.subgroup("gens:(1 2)(3 4),(1 4)(2 3)")
    record = analyze(d4, H)
    assert record["normalizer_order"] == 8
    assert record["class_sizes"] == [1, 1, 2, 2, 2]
    assert record["nilpotent"]
    assert record["subnormal_chain"] == [4, 8]
    s4 = build_group("S(4)")
    assert analyze(s4, s4.subgroup("gens:(1 2),(3 4)"))["subnormal_chain"] == "not nilpotent"


def test_dual_abelian():
    s4 = build_group("S(4)")
    H = s4.subgroup("gens:(1 2),(3 4)")
    dual = dual_abelian(s4, H)
    assert dual.orders == (2, 2)
    assert dual.characters() == [(0, 0), (0, 1), (1, 0), (1, 1)]
    a, b = dual.basis
    assert dual.pairing((1, 0), a) == 1
    assert dual.pairing((1, 0), b) == 0
    for chi in dual.characters():
        assert dual.from_character(dual.as_character(chi)) == chi
    with pytest.raises(InputError):
        dual_abelian(s4, s4.subgroup("gens:(1 2),(2 3)"))


def test_linear_characters():
    assert len(linear_characters(build_group("S(5)"))) == 2
    assert len(linear_characters(build_group("A(5)"))) == 1
    chars = linear_characters(build_group("D(4)"))
    assert len(chars) == 4
    assert chars[0].is_trivial()
