from fractions import Fraction
from itertools import islice

from sympy import isprime

from modules.exactnum import ONE, CycNum, root_of_unity
from modules.modular import (
    exact_roots,
    nullspace_mod,
    primes_one_mod,
    rank_mod,
    rational_reconstruct,
    root_of_unity_mod,
    roots_mod,
)


def test_primes_one_mod():
    primes = list(islice(primes_one_mod(12, floor=100), 4))
    assert primes == sorted(primes)
    assert all(isprime(p) and p % 12 == 1 and p >= 100 for p in primes)


def test_root_of_unity_mod_has_exact_order():
    ell = next(primes_one_mod(8, floor=1000))
    r = root_of_unity_mod(8, ell)
    assert pow(r, 8, ell) == 1
    assert pow(r, 4, ell) != 1


def test_roots_mod():
    # (x - 2)(x - 5) over F_11
    assert roots_mod([10, 4, 1], 11) == [2, 5]
    # x^2 + 1 has no roots modulo 7
    assert roots_mod([1, 0, 1], 7) is None


def test_rational_reconstruct():
    m = 1_000_003
    c = 3 * pow(7, -1, m) % m
    assert rational_reconstruct(c, m, bound=500) == Fraction(3, 7)
    assert rational_reconstruct(-c % m, m, bound=500) == Fraction(-3, 7)


def test_rank_and_nullspace_mod():
    rows = [[1, 2, 3], [2, 4, 6], [0, 1, 1]]
    assert rank_mod(rows, 7) == 2
    kernel = nullspace_mod(rows, 7)
    assert len(kernel) == 1
    for row in rows:
        assert sum(a * b for a, b in zip(row, kernel[0])) % 7 == 0


def test_exact_roots_of_cyclotomic_quadratic():
    # x^2 - x + 1 = Phi_6 splits in Q(zeta_6)
    coeffs = [ONE, -ONE, ONE]
    roots = exact_roots(coeffs, 6)
    assert len(roots) == 2
    assert {root_of_unity(6), root_of_unity(6, 5)} == set(roots)


def test_exact_roots_with_rational_values():
    # (x - 1/2)(x + 3)
    coeffs = [CycNum.rational(Fraction(-3, 2)), CycNum.rational(Fraction(5, 2)), ONE]
    roots = exact_roots(coeffs, 1)
    assert sorted(r.to_fraction() for r in roots) == [-3, Fraction(1, 2)]
