"""
Modular Module
Prime selection, reduction of cyclotomic data modulo primes, root finding over
finite fields and rational reconstruction of exact values.
"""

import itertools
import logging
from fractions import Fraction
from math import gcd, prod

from sympy import isprime, primitive_root
from sympy.polys.domains import GF, ZZ
from sympy.polys.galoistools import gf_factor_sqf, gf_sqf_part, gf_strip
from sympy.polys.matrices import DomainMatrix

import config
from modules.errors import ReconstructionError
from modules.exactnum import CycNum

logger = logging.getLogger(__name__)


def primes_one_mod(n, floor=None):
    """Yields the primes ell = 1 mod n with ell >= floor, increasing."""
    floor = config.PRIME_FLOOR if floor is None else floor
    k = max(1, -(-(floor - 1) // n))
    while True:
        ell = k * n + 1
        if isprime(ell):
            yield ell
        k += 1


def root_of_unity_mod(n, ell):
    """A primitive n-th root of unity in F_ell (requires n | ell - 1)."""
    if (ell - 1) % n:
        raise ValueError(f"{n} does not divide {ell} - 1")
    return pow(primitive_root(ell), (ell - 1) // n, ell)


def galois_exponents(n):
    """Exponents u with gcd(u, n) = 1; zeta -> zeta^u runs over Gal(Q(zeta_n)/Q)."""
    return [u for u in range(1, n + 1) if gcd(u, n) == 1]


def reduce_poly(coeffs, ell, root):
    return [c.to_modular(ell, root) for c in coeffs]


def roots_mod(coeffs, ell):
    """
    Distinct roots in F_ell of a polynomial.

    Args:
        coeffs (list): Residues, lowest degree first
        ell (int): Prime modulus

    Returns:
        list or None: Sorted distinct roots, or None if the polynomial does not split
    """
    f = gf_strip([c % ell for c in reversed(coeffs)])
    if len(f) <= 1:
        return []
    f = gf_sqf_part(f, ell, ZZ)
    _, factors = gf_factor_sqf(f, ell, ZZ)
    roots = []
    for factor in factors:
        if len(factor) != 2:
            return None
        roots.append(-factor[1] * pow(factor[0], -1, ell) % ell)
    return sorted(roots)


def rational_reconstruct(c, m, bound=None):
    """
    Wang's reconstruction of a/b from c = a/b mod m with |a|, b <= bound.

    Returns:
        Fraction or None
    """
    bound = config.RECON_HEIGHT if bound is None else bound
    r0, s0 = m, 0
    r1, s1 = c % m, 1
    while r1 > bound:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        s0, s1 = s1, s0 - q * s1
    if s1 == 0 or abs(s1) > bound or gcd(r1, abs(s1)) != 1:
        return None
    return Fraction(r1, s1)


def rank_mod(rows, ell):
    """Rank over F_ell of an integer matrix given as a list of rows."""
    if not rows or not rows[0]:
        return 0
    field = GF(ell)
    matrix = DomainMatrix([[field(v % ell) for v in row] for row in rows], (len(rows), len(rows[0])), field)
    return matrix.rank()


def nullspace_mod(rows, ell):
    """Basis of the right kernel over F_ell of an integer matrix given as a list of rows."""
    if not rows:
        return []
    field = GF(ell)
    matrix = DomainMatrix([[field(v % ell) for v in row] for row in rows], (len(rows), len(rows[0])), field)
    return [[int(v) % ell for v in row] for row in matrix.nullspace().to_list()]


class EmbeddingSolver:
    """
    Recovers canonical coordinates of an element of Q(zeta_n) from its images
    under every embedding zeta -> root^u into F_ell.
    """

    def __init__(self, n, ell, root):
        self.n = n
        self.ell = ell
        self.exponents = galois_exponents(n)
        d = len(self.exponents)
        field = GF(ell)
        vandermonde = DomainMatrix(
            [[field(pow(root, u * k, ell)) for k in range(d)] for u in self.exponents], (d, d), field
        )
        self.inverse = [[int(v) % ell for v in row] for row in vandermonde.inv().to_list()]
        self.roots = [pow(root, u, ell) for u in self.exponents]

    def solve(self, values):
        coords = []
        for row in self.inverse:
            residue = sum(a * v for a, v in zip(row, values)) % self.ell
            q = rational_reconstruct(residue, self.ell)
            if q is None:
                return None
            coords.append(q)
        return CycNum(self.n, tuple(coords))


def _match_roots(solver, root_sets, is_root):
    """Pairs each root of the first conjugate with one root of every other conjugate."""
    candidates = prod(len(s) for s in root_sets[1:])
    if candidates > config.MATCH_LIMIT:
        raise ReconstructionError(f"{candidates} Galois root tuples exceed the match limit {config.MATCH_LIMIT}")
    found = []
    for base in root_sets[0]:
        match = None
        for rest in itertools.product(*root_sets[1:]):
            value = solver.solve((base,) + rest)
            if value is not None and is_root(value):
                match = value
                break
        if match is None:
            return None
        found.append(match)
    return found


def exact_roots(coeffs, conductor, is_root=None):
    """
    Exact roots in Q(zeta_N) of a polynomial that splits there.

    Roots are located modulo primes ell = 1 mod N under every embedding,
    matched across embeddings, rationally reconstructed and checked exactly.
    PRIME_AGREEMENT primes must return the same root set.

    Args:
        coeffs (list): CycNum coefficients, lowest degree first
        conductor (int): N with all roots in Q(zeta_N)
        is_root (callable): Exact verifier; defaults to evaluating the polynomial

    Returns:
        list: Distinct exact roots
    """
    if is_root is None:
        def is_root(value):
            acc = CycNum.zero()
            for c in reversed(coeffs):
                acc = acc * value + c
            return acc.is_zero()

    agreed = None
    agreements = 0
    primes = primes_one_mod(conductor)
    for attempt in range(config.PRIME_BUDGET):
        ell = next(primes)
        root = root_of_unity_mod(conductor, ell)
        try:
            solver = EmbeddingSolver(conductor, ell, root)
            root_sets = [roots_mod(reduce_poly(coeffs, ell, r), ell) for r in solver.roots]
        except ZeroDivisionError:
            logger.warning("prime %d divides a denominator, skipping", ell)
            continue
        if any(s is None for s in root_sets) or len({len(s) for s in root_sets}) != 1:
            logger.warning("polynomial does not split cleanly modulo %d, skipping", ell)
            continue
        found = _match_roots(solver, root_sets, is_root)
        if found is None:
            logger.info("root matching failed modulo %d", ell)
            continue
        key = frozenset(found)
        if key == agreed:
            agreements += 1
        else:
            agreed, agreements = key, 1
        logger.debug("prime %d (attempt %d): %d roots, agreement %d", ell, attempt + 1, len(found), agreements)
        if agreements >= config.PRIME_AGREEMENT:
            return sorted(found, key=str)
    raise ReconstructionError(f"no agreement on the roots after {config.PRIME_BUDGET} primes (conductor {conductor})")
