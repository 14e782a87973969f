from math import prod

import numpy as np
import pytest

from modules.cohomology import (
    AbelianGroup,
    OneCochain,
    TwoCocycle,
    canonical_nontrivial,
    coboundary,
    coboundary_test,
    h2,
    h2_order_by_counting,
    is_nondegenerate,
    list_all_trivializers,
    make_bicharacter,
    regular_elements,
)
from modules.errors import InputError, VerificationFailure


def test_abelian_group_order_and_sum_table():
    A = AbelianGroup((2, 4))
    assert A.order == 8
    assert A.exponent == 4
    assert A.elements[0] == A.zero
    assert A.add((1, 3), (1, 2)) == (0, 1)
    assert A.element_order((1, 2)) == 2
    assert A.sum_table[A.index[(1, 1)], A.index[(1, 3)]] == A.index[(0, 0)]


def test_h2_invariant_factors():
    assert h2(AbelianGroup((2, 2))) == [2]
    assert h2(AbelianGroup((4,))) == []
    assert h2(AbelianGroup((2, 4))) == [2]
    assert h2(AbelianGroup((2, 2, 2)), cross_check=False) == [2, 2, 2]
    assert h2(AbelianGroup((3, 3)), cross_check=False) == [3]


def test_h2_counting_matches_smith_form():
    assert h2_order_by_counting(AbelianGroup((2, 2))) == 2
    assert h2_order_by_counting(AbelianGroup((3,))) == 1


def test_canonical_nontrivial():
    E, e = canonical_nontrivial(AbelianGroup((2, 2)))
    assert E == [[0, 1], [0, 0]]
    assert e == 2
    with pytest.raises(InputError):
        canonical_nontrivial(AbelianGroup((2, 2, 2)))


def test_bicharacter_is_nondegenerate():
    A = AbelianGroup((2, 2))
    omega = make_bicharacter(A, [[0, 1], [0, 0]])
    assert omega((1, 0), (0, 1)) == 1
    assert omega((0, 1), (1, 0)) == 0
    assert not omega.is_symmetric()
    assert is_nondegenerate(omega)
    assert regular_elements(omega) == [A.zero]
    assert coboundary_test(omega) is None
    assert list_all_trivializers(omega) == []


def test_bicharacter_rejects_bad_exponents():
    A = AbelianGroup((2, 3))
    with pytest.raises(InputError):
        make_bicharacter(A, [[0, 1], [0, 0]], 6)
    with pytest.raises(InputError):
        make_bicharacter(A, [[0, 1]])


def test_cocycle_identity_is_checked():
    with pytest.raises(VerificationFailure) as excinfo:
        TwoCocycle(AbelianGroup((3,)), [[0, 0, 0], [0, 1, 0], [0, 0, 0]], 3)
    assert excinfo.value.witness is not None
    with pytest.raises(VerificationFailure):
        TwoCocycle(AbelianGroup((2,)), [[1, 0], [0, 0]], 2)


def test_coboundaries_are_trivialized():
    A = AbelianGroup((2, 2))
    u = OneCochain(A, [0, 1, 2, 3], 4)
    omega = coboundary(u)
    assert omega.failing_triple() is None
    assert omega.is_symmetric()
    found = list_all_trivializers(omega)
    assert len(found) == A.order
    for v in found:
        assert np.array_equal(coboundary(v).table, omega.rescaled(v.modulus).table)


def test_degenerate_cocycle_has_radical():
    A = AbelianGroup((2, 2, 2))
    omega = make_bicharacter(A, [[0, 1, 0], [0, 0, 0], [0, 0, 0]])
    assert not is_nondegenerate(omega)
    assert regular_elements(omega) == [A.zero, (0, 0, 1)]
    assert regular_elements(omega, fast=True) == regular_elements(omega)


def test_conjugated_and_inverse():
    A = AbelianGroup((2, 2))
    omega = make_bicharacter(A, [[0, 1], [0, 0]])
    swap = {x: (x[1], x[0]) for x in A.elements}
    swapped = omega.conjugated(swap)
    assert swapped((0, 1), (1, 0)) == 1
    assert (omega * omega.inverse()).is_trivial()
    assert TwoCocycle.trivial(A).is_trivial()


@pytest.mark.parametrize("orders, factors", [((3, 3), [3]), ((2, 4), [2]), ((2, 2), [2]), ((9,), [])])
def test_h2_agrees_with_cocycle_counting(orders, factors):
    A = AbelianGroup(orders)
    assert h2(A) == factors
    assert h2_order_by_counting(A) == prod(factors)
