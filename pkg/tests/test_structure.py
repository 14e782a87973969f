import pytest

import config
from modules.errors import InputError, NotHopfSubalgebra
from modules.exactnum import ONE
from modules.groups import quotient
from modules.hopfcore import alg_mul, coinvariants, r_matrix, unit
from modules.repdecide import one_dimensional_count
from modules.structure import (
    adjoint_action,
    adjoint_stability,
    central_dual_group_likes,
    central_group_likes,
    check_hopf_subalgebra,
    discrepancy,
    dual_group_likes,
    group_algebra_basis,
    group_like_summary,
    group_likes,
    inside_group_likes,
    is_normal_hopf_subalgebra,
    prime_quotient_normality,
    radford_images,
)
from tests.conftest import make_twist


@pytest.fixture(scope="module")
def s4_likes(twisted_s4):
    return group_likes(twisted_s4, one_dimensional_count(twisted_s4))


def test_group_likes_of_twisted_s4(twisted_s4, s4_likes):
    assert len(s4_likes) == 8
    assert s4_likes[0].element == unit(twisted_s4.group)
    summary = group_like_summary(twisted_s4, s4_likes)
    assert summary == {"order": 8, "abelian": False, "orders": {1: 1, 2: 5, 4: 2}}


def test_group_likes_live_over_the_normalizer(twisted_s4, s4_likes):
    group = twisted_s4.group
    normalizer = group.normalizer(twisted_s4.subgroup)
    for like in s4_likes:
        assert set(like.element) <= set(normalizer.elements)


def test_discrepancy_is_trivial_on_the_subgroup(twisted_s4):
    for h in twisted_s4.subgroup.elements:
        assert discrepancy(twisted_s4, h).is_trivial()


def test_untwisted_group_likes_are_the_group(untwisted_s3):
    likes = group_likes(untwisted_s3, one_dimensional_count(untwisted_s3))
    assert len(likes) == 6
    assert len(central_group_likes(untwisted_s3, likes)) == 1


def test_central_group_likes_with_trivial_center(twisted_s4, s4_likes):
    central = central_group_likes(twisted_s4, s4_likes)
    assert len(central) == 1
    assert central[0].element == unit(twisted_s4.group)


def test_central_dual_group_likes(twisted_s4, untwisted_s3):
    report = central_dual_group_likes(twisted_s4)
    assert len(report["etas"]) == 2
    assert report["central"] == [0]
    assert report["criterion_applied"]
    assert report["nondegenerate"]
    assert central_dual_group_likes(untwisted_s3)["central"] == [0, 1]


def test_radford_images(twisted_s4):
    T = twisted_s4
    R, _ = r_matrix(T)
    etas = dual_group_likes(T)
    images = radford_images(T, R, etas)
    assert images[0] == unit(T.group)
    sign = images[1]
    assert sign != unit(T.group)
    assert set(sign) <= set(T.subgroup.elements)
    assert alg_mul(T.group, sign, sign) == unit(T.group)


def test_subgroup_algebra_is_a_hopf_subalgebra(twisted_s4):
    T = twisted_s4
    basis = group_algebra_basis(T.group, T.subgroup)
    span = check_hopf_subalgebra(T, basis)
    assert span.dim == 4
    report = is_normal_hopf_subalgebra(T, basis)
    assert report["dim"] == 4
    assert report["normal"] == (report["witness"] is None)


def test_adjoint_action_of_group_likes_on_the_unit(twisted_s4):
    T = twisted_s4
    for g in T.group.generators:
        assert adjoint_action(T, g, unit(T.group)) == unit(T.group)


def test_rejects_non_subalgebras(twisted_s4):
    T = twisted_s4
    group = T.group
    three_cycle = group.parse_element("(1 2 3)")
    with pytest.raises(NotHopfSubalgebra):
        check_hopf_subalgebra(T, [unit(group), {three_cycle: ONE}])
    with pytest.raises(NotHopfSubalgebra):
        check_hopf_subalgebra(T, [{three_cycle: ONE}])


def test_klein_coinvariants_are_normal_group_likes(twisted_s4, s4_likes):
    T = twisted_s4
    V = T.group.subgroup("gens:(1 2)(3 4),(1 3)(2 4)")
    target, projection = quotient(T.group, V)
    basis = coinvariants(T, target, projection)
    assert inside_group_likes(T, basis, s4_likes)
    assert is_normal_hopf_subalgebra(T, basis)["normal"]


def test_sign_quotient_normality(twisted_s4):
    T = twisted_s4
    target, projection = quotient(T.group, T.group.derived_subgroup())
    report = prime_quotient_normality(T, target, projection)
    assert not report["normal"]
    assert report["oracle"] == "adjoint"
    assert report["restrictions"][1] == [1, 1]
    assert report["witness"] is not None

    even = make_twist("S(4)", "gens:(1 2)(3 4),(1 3)(2 4)")
    target, projection = quotient(even.group, even.group.derived_subgroup())
    assert prime_quotient_normality(even, target, projection)["normal"]


def test_prime_quotient_needs_least_prime(twisted_s4):
    V = twisted_s4.group.subgroup("gens:(1 2)(3 4),(1 3)(2 4)")
    target, projection = quotient(twisted_s4.group, V)
    with pytest.raises(InputError):
        prime_quotient_normality(twisted_s4, target, projection)


def test_coinvariants_of_a_non_normal_quotient(twisted_s4):
    T = twisted_s4
    target, projection = quotient(T.group, T.group.derived_subgroup())
    kernel = coinvariants(T, target, projection)
    with pytest.raises(NotHopfSubalgebra):
        check_hopf_subalgebra(T, kernel)
    stability = adjoint_stability(T, kernel)
    assert not stability["normal"]
    assert not stability["antipode_stable"]
    assert stability["witness"]["acting"] in [T.group.name(g) for g in T.group.generators]


def test_closure_failures_are_not_input_errors():
    assert not issubclass(NotHopfSubalgebra, InputError)


def test_centrality_oracle_above_the_enumeration_bound(twisted_s4, monkeypatch):
    monkeypatch.setattr(config, "MAX_ENUM_DIM", 10)
    T = twisted_s4
    target, projection = quotient(T.group, T.group.derived_subgroup())
    report = prime_quotient_normality(T, target, projection)
    assert report["oracle"] == "centrality"
    assert not report["normal"]
    assert report["witness"] == {"eta": 1}


@pytest.mark.slow
def test_sign_quotient_of_twisted_s5():
    T = make_twist("S(5)", "gens:(1 2),(3 4)")
    target, projection = quotient(T.group, T.group.derived_subgroup())
    report = prime_quotient_normality(T, target, projection)
    assert report["oracle"] == "adjoint"
    assert not report["normal"]

    even = make_twist("S(5)", "gens:(1 2)(3 4),(1 3)(2 4)")
    target, projection = quotient(even.group, even.group.derived_subgroup())
    assert prime_quotient_normality(even, target, projection)["normal"]


@pytest.mark.slow
def test_sign_quotient_of_twisted_s8():
    T = make_twist("S(8)", "gens:(1 2),(3 4),(5 6),(7 8)", [[0, 1, 1, 1], [0, 0, 1, 1], [0, 0, 0, 1], [0, 0, 0, 0]])
    target, projection = quotient(T.group, T.group.derived_subgroup())
    report = prime_quotient_normality(T, target, projection)
    assert report["oracle"] == "centrality"
    assert not report["normal"]
    assert not report["criterion"]
