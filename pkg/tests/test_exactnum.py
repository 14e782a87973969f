from fractions import Fraction

import numpy as np
import pytest

from modules.errors import InputError
from modules.exactnum import ONE, ZERO, CycNum, Subspace, cyclo_arith, cyclotomic_coeffs, embed, nullspace, root_of_unity


def test_cyclotomic_coeffs():
    assert cyclotomic_coeffs(1) == (-1, 1)
    assert cyclotomic_coeffs(4) == (1, 0, 1)
    assert cyclotomic_coeffs(6) == (1, -1, 1)


def test_root_of_unity_powers():
    z = root_of_unity(12)
    assert z ** 12 == ONE
    assert z ** 6 == -ONE
    assert z ** 4 != ONE
    assert root_of_unity(12, 5) == z ** 5
    assert root_of_unity(4, -1) == root_of_unity(4, 3)


def test_sum_of_roots_vanishes():
    for n in (2, 3, 5, 6, 12):
        total = ZERO
        for k in range(n):
            total = total + root_of_unity(n, k)
        assert total == 0


def test_mixed_conductors():
    i = root_of_unity(4)
    w = root_of_unity(3)
    product = i * w
    assert product == root_of_unity(12, 3 + 4)
    assert (product * product.inverse()) == 1
    assert (i + w) - w == i


def test_inverse_and_division():
    a = root_of_unity(5) + CycNum.rational(2)
    assert a * a.inverse() == ONE
    assert (a / a) == 1
    assert (ONE / a) * a == 1
    assert a / 2 * 2 == a
    with pytest.raises(ZeroDivisionError):
        ZERO.inverse()


def test_conjugate_is_inverse_on_roots():
    z = root_of_unity(7, 3)
    assert z.conjugate() == z.inverse()
    assert (z + z.conjugate()).conjugate() == z + z.conjugate()


def test_rational_values():
    half = CycNum.rational(Fraction(1, 2), 6)
    assert half.is_rational()
    assert half.to_fraction() == Fraction(1, 2)
    assert half == Fraction(1, 2)
    with pytest.raises(ValueError):
        root_of_unity(3).to_fraction()


def test_equal_values_hash_alike():
    a = root_of_unity(4) * root_of_unity(4)
    assert a == -1
    assert hash(a) == hash(-ONE)
    assert hash(root_of_unity(6, 2)) == hash(root_of_unity(3))


def test_to_modular_respects_products():
    ell, root = 13, 5  # 5 has order 4 modulo 13
    a = root_of_unity(4) + CycNum.rational(3)
    b = root_of_unity(4, 3)
    assert (a * b).to_modular(ell, root) == a.to_modular(ell, root) * b.to_modular(ell, root) % ell


def test_cyclo_arith_dispatch():
    a, b = root_of_unity(3), root_of_unity(3, 2)
    assert cyclo_arith(a, b, "mul") == ONE
    assert cyclo_arith(a, b, "add") == -1
    assert cyclo_arith(a, b, "eq") is False
    with pytest.raises(InputError):
        cyclo_arith(a, b, "pow")


def test_conductor_bound():
    with pytest.raises(InputError):
        root_of_unity(10 ** 6)


def test_subspace_membership():
    span = Subspace([{0: ONE, 1: ONE}, {1: ONE, 2: -ONE}])
    assert span.dim == 2
    assert span.contains({0: ONE, 2: ONE})
    assert not span.contains({0: ONE})
    assert not span.add({0: 2, 1: 2})
    coords = span.coordinates({0: ONE, 1: 2 * ONE, 2: -ONE})
    assert set(coords) == set(span.pivots())


def test_nullspace_of_cyclotomic_system():
    z = root_of_unity(3)
    equations = [{"a": ONE, "b": -z}, {"b": ONE, "c": -z}]
    kernel = nullspace(equations, ["a", "b", "c"])
    assert len(kernel) == 1
    v = kernel[0]
    for row in equations:
        total = ZERO
        for k, c in row.items():
            total = total + c * v.get(k, ZERO)
        assert total == 0


def _random_element(rng, conductor):
    degree = len(root_of_unity(conductor).coeffs)
    coeffs = tuple(Fraction(int(rng.integers(-5, 6)), int(rng.integers(1, 4))) for _ in range(degree))
    return CycNum(conductor, coeffs)


@pytest.mark.parametrize("conductors", [(1, 4, 3), (12, 8, 15), (24, 60, 9), (360, 40, 72)])
def test_field_axioms_on_random_elements(conductors):
    rng = np.random.default_rng(360)
    a, b, c = (_random_element(rng, n) for n in conductors)
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == 0
    for x in (a, b, c):
        if x:
            assert x * x.inverse() == 1
            assert (a / x) * x == a


def test_roots_of_unity_have_exact_order():
    for n in range(1, 65):
        z = root_of_unity(n)
        power = ONE
        for k in range(1, n + 1):
            power = power * z
            assert (power == 1) == (k == n), (n, k)


def test_embed_is_a_ring_homomorphism():
    rng = np.random.default_rng(12)
    a, b = _random_element(rng, 12), _random_element(rng, 12)
    for target in (24, 36, 60):
        assert embed(a + b, target) == embed(a, target) + embed(b, target)
        assert embed(a * b, target) == embed(a, target) * embed(b, target)
        assert embed(ONE, target) == 1
        assert embed(a, target).conductor == target
        assert embed(a, target) == a


def test_embed_needs_a_multiple_of_the_conductor():
    with pytest.raises(InputError):
        embed(root_of_unity(12), 8)
    with pytest.raises(InputError):
        embed(root_of_unity(5), 12)
