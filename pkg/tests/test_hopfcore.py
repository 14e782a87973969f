from fractions import Fraction

import pytest

import config
from modules.cohomology import AbelianGroup, TwoCocycle
from modules.errors import InputError
from modules.exactnum import ONE, root_of_unity
from modules.groups import build_group, quotient
from modules.hopfcore import (
    alg_mul,
    build_twist,
    check_twist_equation,
    coinvariants,
    cocommutativity,
    counit,
    minimal_subgroup,
    pushforward_twist,
    r_matrix,
    swap,
    tensor_mul,
    twisted_structure,
    unit,
    verify_hopf_axioms,
    verify_twist_axioms,
)


def test_untwisted_algebra_is_kG(untwisted_s3):
    T = untwisted_s3
    assert T.J == unit(T.group, 2)
    for g in range(T.group.order):
        assert T.coproduct(g) == {(g, g): ONE}
        assert T.antipode(g) == {T.group.inv[g]: ONE}
    assert cocommutativity(T)["cocommutative"]


def test_twist_inverse_and_drinfeld_element(twisted_s4):
    T = twisted_s4
    group = T.group
    assert tensor_mul(group, T.J, T.Jinv) == unit(group, 2)
    assert alg_mul(group, T.v, T.vinv) == unit(group)
    assert counit(T.v) == 1


def test_twist_support_and_values(twisted_s4):
    T = twisted_s4
    H = set(T.subgroup.elements)
    assert all(a in H and b in H for a, b in T.J)
    assert T.conductor == 2
    # four terms with coefficients +-1/2
    assert len(T.J) == 4
    assert all(abs(c.to_fraction()) == Fraction(1, 2) for c in T.J.values())


def test_twisted_axioms_hold(twisted_s4):
    assert verify_twist_axioms(twisted_s4)["passed"]
    report = verify_hopf_axioms(twisted_s4)
    assert report["passed"]
    assert [c["name"] for c in report["checks"]] == ["coassociativity", "counit", "antipode"]


def test_r_matrix_is_triangular(twisted_s4):
    R, report = r_matrix(twisted_s4)
    assert report["passed"]
    names = [c["name"] for c in report["checks"]]
    assert names == ["closed_form", "triangular", "hexagon_left", "hexagon_right", "quasi_cocommutative"]
    assert tensor_mul(twisted_s4.group, swap(R), R) == unit(twisted_s4.group, 2)


def test_coproduct_on_the_subgroup_is_untwisted(twisted_s4):
    T = twisted_s4
    for h in T.subgroup.elements:
        assert T.coproduct(h) == {(h, h): ONE}


def test_coproduct_is_multiplicative(twisted_s4):
    T = twisted_s4
    group = T.group
    a, b = group.generators[:2]
    lhs = T.coproduct(group.mul(a, b))
    rhs = tensor_mul(group, T.coproduct(a), T.coproduct(b))
    assert lhs == rhs


def test_twisted_structure_counit(twisted_s4):
    T = twisted_s4
    a = {T.group.generators[0]: ONE, T.group.identity: 2 * ONE}
    structure = twisted_structure(T, a)
    assert structure["counit"] == 3
    assert counit(structure["antipode"]) == 3


def test_cocommutativity_criterion(twisted_s4, twisted_d4, twisted_a4):
    s4 = cocommutativity(twisted_s4)
    assert not s4["cocommutative"]
    assert s4["minimal_subgroup_order"] == 4
    assert cocommutativity(twisted_d4)["cocommutative"]
    assert cocommutativity(twisted_a4)["cocommutative"]


def test_degenerate_twist_has_smaller_support():
    group = build_group("C(2)xC(2)xC(2)")
    sub = group.whole
    domain = AbelianGroup((2, 2, 2))
    table = [[(x[0] * y[1]) % 2 for y in domain.elements] for x in domain.elements]
    T = build_twist(group, sub, TwoCocycle(domain, table, 2))
    assert minimal_subgroup(T).order == 4
    assert cocommutativity(T)["cocommutative"]


def test_check_twist_equation_reports_normalization():
    group = build_group("S(3)")
    report = check_twist_equation(group, {(group.identity, group.identity): 2 * ONE})
    assert not report["passed"]
    equation, normalization = report["checks"]
    assert equation["passed"]
    assert normalization["witness"] == "()"


def test_build_twist_rejects_bad_input():
    group = build_group("S(3)")
    with pytest.raises(InputError):
        build_twist(group, group.subgroup("gens:(1 2)"), TwoCocycle.trivial(AbelianGroup((3,))))
    with pytest.raises(InputError):
        build_twist(group, group.whole, TwoCocycle.trivial(AbelianGroup((6,))))


def test_coinvariants_of_klein_quotient(twisted_s4):
    T = twisted_s4
    group = T.group
    V = group.subgroup("gens:(1 2)(3 4),(1 3)(2 4)")
    target, projection = quotient(group, V)
    basis = coinvariants(T, target, projection)
    assert len(basis) == 4
    pushed, report = pushforward_twist(T, target, projection)
    assert report["passed"]
    assert pushed.group.order == 6
    assert pushed.subgroup.order == 2


def test_pushforward_along_sign(twisted_s4):
    T = twisted_s4
    group = T.group
    target, projection = quotient(group, group.derived_subgroup())
    pushed, report = pushforward_twist(T, target, projection)
    assert report["passed"]
    assert report["intertwining"]["passed"]
    assert target.order == 2
    assert pushed.subgroup.order == 2


def test_root_values_at_higher_conductor():
    group = build_group("C(4)xC(4)")
    sub = group.whole
    domain = AbelianGroup((4, 4))
    table = [[(x[0] * y[1]) % 4 for y in domain.elements] for x in domain.elements]
    T = build_twist(group, sub, TwoCocycle(domain, table, 4))
    assert T.conductor == 4
    # coefficients i^(-g_0 h_1) / 4 on sixteen terms
    assert len(T.J) == 16
    assert root_of_unity(4) / 4 in T.J.values() or -root_of_unity(4) / 4 in T.J.values()
    assert verify_hopf_axioms(T)["passed"]


def test_corrupted_cocycle_breaks_the_twist_equation():
    group = build_group("C(3)")
    domain = AbelianGroup((3,))
    corrupted = TwoCocycle(domain, [[0, 0, 0], [0, 1, 0], [0, 0, 0]], 3, check=False)
    assert corrupted.failing_triple() is not None
    T = build_twist(group, group.whole, corrupted, validate=False)
    report = verify_twist_axioms(T)
    assert not report["passed"]
    equation = report["checks"][0]
    assert equation["name"] == "twist_equation"
    assert equation["witness"] is not None


def test_budget_skipped_checks_are_reported(twisted_s4, monkeypatch):
    monkeypatch.setattr(config, "TENSOR_BUDGET", 0)
    report = verify_hopf_axioms(twisted_s4)
    assert not report["complete"]
    assert report["skipped"] == ["coassociativity"]
    coassociativity = report["checks"][0]
    assert not coassociativity["passed"]
    assert "witness" not in coassociativity
    _, triangular = r_matrix(twisted_s4)
    assert triangular["skipped"] == ["quasi_cocommutative"]
    assert not triangular["complete"]


def test_full_checks_are_complete(twisted_s4):
    report = verify_hopf_axioms(twisted_s4)
    assert report["complete"]
    assert report["skipped"] == []
