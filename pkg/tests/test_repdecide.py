import pytest

from modules.errors import InputError, UnavailableError
from modules.groups import build_group, quotient
from modules.repdecide import (
    algebra_type,
    alternating_degrees,
    cached_blocks,
    character_degrees,
    coalgebra_type,
    dihedral_degrees,
    dual_irrep_descriptors,
    enumerate_hopf_subalgebras,
    extension_dim_analyzer,
    is_simple,
    projective_degree_sets,
    self_duality_evidence,
    semisolvable_series,
    sn_simplicity_certificate,
    symmetric_degrees,
    twisted_group_algebra_degrees,
)
from tests.conftest import make_twist


def test_degree_tables():
    assert symmetric_degrees(4) == [1, 1, 2, 3, 3]
    assert symmetric_degrees(5) == [1, 1, 4, 4, 5, 5, 6]
    assert alternating_degrees(5) == [1, 3, 3, 4, 5]
    assert alternating_degrees(4) == [1, 1, 1, 3]
    assert dihedral_degrees(4) == [1, 1, 1, 1, 2]
    assert dihedral_degrees(5) == [1, 1, 2, 2]


def test_character_degrees_of_products():
    degrees = character_degrees(build_group("D(3)xD(5)"))
    assert sum(d * d for d in degrees) == 60
    assert degrees.count(4) == 2
    assert character_degrees(build_group("SD(7,3)")) == [1, 1, 1, 3, 3]
    s4 = build_group("S(4)")
    image, _ = quotient(s4, s4.subgroup("gens:(1 2)(3 4),(1 3)(2 4)"))
    with pytest.raises(UnavailableError):
        character_degrees(image)


def test_descriptors_of_twisted_s4(twisted_s4):
    descriptors = dual_irrep_descriptors(twisted_s4)
    assert sorted(d.size for d in descriptors) == [4, 4, 16]
    assert coalgebra_type(twisted_s4, descriptors) == {1: 8, 4: 1}
    big = next(d for d in descriptors if d.size == 16)
    assert big.as_dict(twisted_s4.group)["stabilizer_order"] == 1


def test_types_and_self_duality(twisted_s4, untwisted_s3):
    assert algebra_type(twisted_s4) == {1: 2, 2: 1, 3: 2}
    evidence = self_duality_evidence(twisted_s4)
    assert not evidence["equal"]
    assert evidence["group_likes"] == 8
    assert evidence["dual_group_likes"] == 2
    assert coalgebra_type(untwisted_s3) == {1: 6}


def test_block_decomposition_matches_coalgebra_type(twisted_s4):
    decomposition = cached_blocks(twisted_s4)
    assert decomposition.block_dims == {1: 8, 4: 1}
    assert len(decomposition.blocks) == 9
    assert sorted(decomposition.antipode) == list(range(9))
    unit_block = decomposition.blocks[decomposition.unit_block]
    assert unit_block.dim == 1
    summary = decomposition.as_dict()
    assert summary["blocks"] == 9


def test_hopf_subalgebras_of_twisted_s4(twisted_s4):
    found = enumerate_hopf_subalgebras(twisted_s4)
    dims = {s["dimension"] for s in found}
    assert {1, 8, 24} <= dims
    assert dims <= {1, 2, 4, 8, 24}
    verdict = is_simple(twisted_s4)
    assert verdict["verdict"] == "not simple"
    assert 4 in verdict["normal_witnesses"]


def test_sign_certificate_needs_large_symmetric_group(twisted_s4):
    with pytest.raises(InputError):
        sn_simplicity_certificate(twisted_s4)


def test_twisted_group_algebra_degrees():
    group = build_group("C(2)xC(2)")
    sub = group.whole
    elems = list(sub.elements)
    trivial = [[0] * 4 for _ in elems]
    assert twisted_group_algebra_degrees(group, sub, trivial, 1) == [1, 1, 1, 1]


def test_projective_degree_sets():
    s4 = build_group("S(4)")
    klein = s4.subgroup("gens:(1 2)(3 4),(1 3)(2 4)")
    assert sorted(projective_degree_sets(s4, klein)) == [[1, 1, 1, 1], [2]]
    s3 = build_group("S(3)")
    assert projective_degree_sets(s3, s3.whole) == [[1, 1, 2]]
    d4 = build_group("D(4)")
    sets = projective_degree_sets(d4, d4.whole)
    assert sets[0] == [1, 1, 1, 1, 2]
    assert [2, 2] in sets


def test_extension_dimensions_exclude_q_squared():
    report = extension_dim_analyzer(build_group("D(3)"), build_group("D(5)"), 4)
    assert report["attainable"] == [1, 2, 5, 10]
    assert report["complete"]
    assert report["attainable_target"] is False
    assert report["kernel_order"] == 6


def test_semisolvable_series_of_twisted_d4(twisted_d4):
    series = semisolvable_series(twisted_d4)
    assert series["applicable"]
    assert [s["p"] for s in series["upper"]] == [2, 2, 2]
    assert all(s["factor"] == "cocommutative" for s in series["lower"])
    assert [s["factor_dim"] for s in series["lower"]] == [4, 2]


def test_series_needs_nilpotent_group(twisted_s4):
    assert not semisolvable_series(twisted_s4)["applicable"]


@pytest.mark.slow
def test_twisted_d3xd3_is_simple_and_self_dual():
    T = make_twist("D(3)xD(3)", "gens:(2 3),(5 6)")
    assert coalgebra_type(T) == {1: 4, 2: 4, 4: 1}
    assert len(cached_blocks(T).blocks) == 9
    assert is_simple(T)["verdict"] == "simple"
    assert self_duality_evidence(T)["equal"]


@pytest.mark.slow
def test_twisted_a5_types():
    T = make_twist("A(5)", "gens:(1 2)(3 4),(1 3)(2 4)")
    assert algebra_type(T) == {1: 1, 3: 2, 4: 1, 5: 1}
    assert not self_duality_evidence(T)["equal"]
    assert is_simple(T)["verdict"] == "simple"
