"""
Cohomology Module
Root-of-unity valued 2-cocycles on finite abelian groups: bicharacters, cocycle and
coboundary tests, trivializers, H^2 by Smith normal form, regularity and nondegeneracy.
"""

import itertools
import logging
from math import gcd, lcm, prod

import numpy as np
from sympy import Matrix, ZZ
from sympy.matrices.normalforms import invariant_factors

import config
from modules.errors import InputError, TheoremViolation, VerificationFailure

logger = logging.getLogger(__name__)

SAMPLED_TRIPLES = 200_000


class AbelianGroup:
    """Z_{n_1} x ... x Z_{n_r}; elements are exponent tuples in lexicographic order."""

    def __init__(self, orders):
        self.orders = tuple(int(n) for n in orders)
        if any(n < 1 for n in self.orders):
            raise InputError(f"invalid cyclic factor orders {self.orders}")
        self.elements = list(itertools.product(*(range(n) for n in self.orders)))
        self.index = {x: i for i, x in enumerate(self.elements)}
        self.order = len(self.elements)
        self.exponent = lcm(*self.orders) if self.orders else 1
        self.zero = tuple(0 for _ in self.orders)
        self.gens = [tuple(int(i == j) for j in range(len(self.orders))) for i in range(len(self.orders))]
        self.sum_table = np.array(
            [[self.index[self.add(x, y)] for y in self.elements] for x in self.elements], dtype=np.int64
        ).reshape(self.order, self.order)

    def add(self, x, y):
        return tuple((a + b) % n for a, b, n in zip(x, y, self.orders))

    def neg(self, x):
        return tuple(-a % n for a, n in zip(x, self.orders))

    def element_order(self, x):
        return lcm(*(n // gcd(a, n) for a, n in zip(x, self.orders))) if x else 1

    def __repr__(self):
        return "AbelianGroup(" + "x".join(f"Z{n}" for n in self.orders) + ")"


class TwoCocycle:
    """
    Normalized 2-cocycle on an AbelianGroup with values zeta_M^e, stored as an
    integer exponent table indexed by element positions.
    """

    def __init__(self, domain, table, modulus, check=True):
        self.domain = domain
        self.modulus = modulus
        self.table = np.asarray(table, dtype=np.int64).reshape(domain.order, domain.order) % modulus
        if check:
            self.verify()

    @classmethod
    def trivial(cls, domain):
        return cls(domain, np.zeros((domain.order, domain.order), dtype=np.int64), 1)

    def __call__(self, x, y):
        return int(self.table[self.domain.index[x], self.domain.index[y]])

    def failing_triple(self):
        """First triple violating normalization or the cocycle identity, or None."""
        t, s, m = self.table, self.domain.sum_table, self.modulus
        n = self.domain.order
        if np.any(t[0, :]) or np.any(t[:, 0]):
            bad = int(np.argmax(np.logical_or(t[0, :] != 0, t[:, 0] != 0)))
            return (self.domain.zero, self.domain.elements[bad], self.domain.zero)
        if n <= config.COCYCLE_FULL_CHECK:
            x, y, z = np.meshgrid(np.arange(n), np.arange(n), np.arange(n), indexing="ij")
        else:
            rng = np.random.default_rng(config.SEED)
            x, y, z = (rng.integers(0, n, SAMPLED_TRIPLES) for _ in range(3))
        lhs = (t[x, y] + t[s[x, y], z]) % m
        rhs = (t[y, z] + t[x, s[y, z]]) % m
        bad = np.argwhere(lhs != rhs)
        if len(bad) == 0:
            return None
        pos = tuple(bad[0])
        triple = (x[pos], y[pos], z[pos])
        return tuple(self.domain.elements[int(i)] for i in triple)

    def verify(self):
        witness = self.failing_triple()
        if witness is not None:
            raise VerificationFailure("table violates the 2-cocycle identity", witness=witness)

    def inverse(self):
        return TwoCocycle(self.domain, -self.table, self.modulus, check=False)

    def rescaled(self, modulus):
        if modulus % self.modulus:
            raise InputError(f"modulus {self.modulus} does not divide {modulus}")
        return TwoCocycle(self.domain, self.table * (modulus // self.modulus), modulus, check=False)

    def __mul__(self, other):
        m = lcm(self.modulus, other.modulus)
        return TwoCocycle(self.domain, self.rescaled(m).table + other.rescaled(m).table, m, check=False)

    def skew(self, x, y):
        """Exponent of omega(x,y) omega(y,x)^-1."""
        return (self(x, y) - self(y, x)) % self.modulus

    def skew_table(self):
        return (self.table - self.table.T) % self.modulus

    def is_symmetric(self):
        return not np.any(self.skew_table())

    def is_trivial(self):
        return not np.any(self.table)

    def pulled_back(self, domain, embedding):
        """omega(f(x), f(y)) for a homomorphism f: domain -> self.domain given as a dict."""
        idx = [self.domain.index[embedding[x]] for x in domain.elements]
        return TwoCocycle(domain, self.table[np.ix_(idx, idx)], self.modulus)

    def conjugated(self, permutation):
        """omega(s(x), s(y)) for an automorphism s given as a dict on elements."""
        return self.pulled_back(self.domain, permutation)

    def exponent_map(self):
        return {
            f"{x}|{y}": int(self.table[i, j])
            for i, x in enumerate(self.domain.elements)
            for j, y in enumerate(self.domain.elements)
            if self.table[i, j]
        }


class OneCochain:
    """Map A -> roots of unity of order `modulus`, as exponents; u(0) = 0."""

    def __init__(self, domain, values, modulus):
        self.domain = domain
        self.values = list(v % modulus for v in values)
        self.modulus = modulus

    def __call__(self, x):
        return self.values[self.domain.index[x]]

    def times_character(self, chi):
        """u * chi for a character chi given as an exponent vector of A^."""
        e = self.domain.exponent
        step = self.modulus // e
        values = []
        for x, v in zip(self.domain.elements, self.values):
            pairing = sum(k * c * (e // n) for k, c, n in zip(chi, x, self.domain.orders))
            values.append(v + step * pairing)
        return OneCochain(self.domain, values, self.modulus)


def coboundary(u):
    """(du)(x,y) = u(x) u(y) u(xy)^-1."""
    values = np.array(u.values, dtype=np.int64)
    table = values[:, None] + values[None, :] - values[u.domain.sum_table]
    return TwoCocycle(u.domain, table, u.modulus, check=False)


def make_bicharacter(domain, E, modulus=None, gens=None):
    """
    Bicharacter omega(x,y) = zeta_M^(sum_ij E_ij x_i y_j) on generator coordinates.

    Args:
        domain (AbelianGroup): Group A
        E (list): Integer exponent matrix, r x r
        modulus (int): Value order M, defaults to exp(A)
        gens (list): Basis of A; defaults to the canonical unit vectors

    Returns:
        TwoCocycle: The verified bicharacter
    """
    r = len(domain.orders)
    modulus = domain.exponent if modulus is None else modulus
    E = [[int(v) for v in row] for row in E]
    if len(E) != r or any(len(row) != r for row in E):
        raise InputError(f"exponent matrix must be {r}x{r}")
    gens = domain.gens if gens is None else [tuple(g) for g in gens]
    orders = [domain.element_order(g) for g in gens]
    coords = {}
    for c in itertools.product(*(range(n) for n in orders)):
        x = domain.zero
        for g, k in zip(gens, c):
            for _ in range(k):
                x = domain.add(x, g)
        coords[x] = c
    if len(coords) != domain.order:
        raise InputError("bicharacter generators do not form a basis")
    for i in range(r):
        for j in range(r):
            if E[i][j] * orders[i] % modulus or E[i][j] * orders[j] % modulus:
                raise InputError(
                    f"exponent E[{i}][{j}] = {E[i][j]} is incompatible with generator orders "
                    f"{orders[i]}, {orders[j]} modulo {modulus}"
                )
    table = [
        [sum(E[i][j] * coords[x][i] * coords[y][j] for i in range(r) for j in range(r)) for y in domain.elements]
        for x in domain.elements
    ]
    omega = TwoCocycle(domain, table, modulus)
    for a in gens:
        for b in gens:
            for c in gens:
                if omega(domain.add(a, b), c) != (omega(a, c) + omega(b, c)) % modulus:
                    raise VerificationFailure("bicharacter law fails", witness=(a, b, c))
    return omega


def canonical_nontrivial(domain):
    """
    The upper-triangular representative of the nontrivial class when |H^2(A)| = 2.

    Raises:
        InputError: If H^2(A) is not of order 2
    """
    factors = h2(domain)
    if prod(factors) != 2:
        raise InputError(f"'nontrivial' is ambiguous: |H^2| = {prod(factors)}; give an explicit matrix")
    r = len(domain.orders)
    e = domain.exponent
    for i in range(r):
        for j in range(i + 1, r):
            if gcd(domain.orders[i], domain.orders[j]) % 2 == 0:
                E = [[0] * r for _ in range(r)]
                E[i][j] = e // 2
                return E, e
    raise TheoremViolation("no generator pair carries the order-2 class")


def coboundary_test(omega):
    """
    A trivializer u with du = omega, or None when omega is not a coboundary.

    Values of u are taken in the roots of unity of order M * exp(A); u is built along
    the generators and checked on all pairs.
    """
    if not omega.is_symmetric():
        return None
    domain = omega.domain
    e = domain.exponent
    big = omega.modulus * e
    scaled = omega.rescaled(big)
    gen_values = []
    for g, n in zip(domain.gens, domain.orders):
        total = 0
        x = domain.zero
        for _ in range(n):
            total += scaled(x, g)
            x = domain.add(x, g)
        # n * u(g) = total (mod big); total is a multiple of e
        gen_values.append((total // e) * (e // n) % big if total % e == 0 else None)
    if any(v is None for v in gen_values):
        raise TheoremViolation("symmetric cocycle with a non-divisible generator sum")
    values = {domain.zero: 0}
    for x in domain.elements[1:]:
        i = max(k for k, c in enumerate(x) if c)
        y = list(x)
        y[i] -= 1
        y = tuple(y)
        g = domain.gens[i]
        values[x] = (values[y] + gen_values[i] - scaled(y, g)) % big
    u = OneCochain(domain, [values[x] for x in domain.elements], big)
    if not np.array_equal(coboundary(u).table, scaled.table):
        raise TheoremViolation("symmetric cocycle failed to trivialize")
    return u


def list_all_trivializers(omega):
    """All |A| trivializers of omega (they differ by characters), or [] if none exist."""
    u = coboundary_test(omega)
    if u is None:
        return []
    domain = omega.domain
    found = [u.times_character(chi) for chi in domain.elements]
    for v in found:
        if not np.array_equal(coboundary(v).table, omega.rescaled(v.modulus).table):
            raise VerificationFailure("trivializer times character is not a trivializer")
    return found


def h2(domain, cross_check=None):
    """
    Invariant factors of H^2(A, k*) for A = Z_{n_1} x ... x Z_{n_r}: the Smith form of
    diag(gcd(n_i, n_j), i < j). Small groups are cross-checked by counting cocycles.

    Returns:
        list: Invariant factors > 1, each dividing the next
    """
    r = len(domain.orders)
    gcds = [gcd(domain.orders[i], domain.orders[j]) for i in range(r) for j in range(i + 1, r)]
    factors = []
    if gcds:
        factors = [int(f) for f in invariant_factors(Matrix.diag(*gcds), domain=ZZ) if f not in (0, 1)]
    factors.sort()
    if cross_check is None:
        cross_check = domain.order <= 9
    if cross_check:
        counted = h2_order_by_counting(domain)
        if counted != prod(factors):
            raise TheoremViolation(f"|H^2| by Smith form {prod(factors)} differs from count {counted}")
    return factors


def h2_order_by_counting(domain):
    """
    |H^2(A, k*)| = |Z^2(A, mu_e)| / e^(|A|-1), e = exp(A), with |Z^2| read off the Smith
    form of the normalized cocycle-condition matrix over Z.
    """
    e = domain.exponent
    nonzero = domain.elements[1:]
    unknowns = {(x, y): k for k, (x, y) in enumerate(itertools.product(nonzero, nonzero))}
    n = len(unknowns)
    if n == 0:
        return 1
    rows = set()
    for x, y, z in itertools.product(nonzero, repeat=3):
        row = [0] * n
        # w(x,y) + w(xy,z) - w(y,z) - w(x,yz)
        for pair, sign in (((x, y), 1), ((domain.add(x, y), z), 1), ((y, z), -1), ((x, domain.add(y, z)), -1)):
            if pair in unknowns:
                row[unknowns[pair]] += sign
        if any(row):
            rows.add(tuple(row))
    if rows:
        diag = [int(d) for d in invariant_factors(Matrix(sorted(rows)), domain=ZZ) if d != 0]
    else:
        diag = []
    cocycles = prod(gcd(d, e) for d in diag) * e ** (n - len(diag))
    coboundaries = e ** (domain.order - 1)
    if cocycles % coboundaries:
        raise TheoremViolation("cocycle count is not a multiple of the coboundary count")
    return cocycles // coboundaries


def regular_elements(omega, fast=False):
    """
    Elements g with omega(g,h) = omega(h,g) for every h commuting with g (all of A).

    Args:
        omega (TwoCocycle): Cocycle on an abelian group
        fast (bool): Use the radical of the skew form on generators instead of the scan

    Returns:
        list: Regular elements in element order
    """
    domain = omega.domain
    skew = omega.skew_table()
    if fast:
        gens = [domain.index[g] for g in domain.gens]
        return [x for i, x in enumerate(domain.elements) if not any(skew[i, j] for j in gens)]
    return [x for i, x in enumerate(domain.elements) if not np.any(skew[i, :])]


def is_nondegenerate(omega):
    scan = regular_elements(omega)
    fast = regular_elements(omega, fast=True)
    if scan != fast:
        raise TheoremViolation("skew-form radical differs from the regularity scan", witness=(scan, fast))
    return scan == [omega.domain.zero]
