"""
Exact Number Module
Exact arithmetic in cyclotomic fields Q(zeta_N) and exact sparse linear algebra over them.
"""

import logging
from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm

from sympy import Poly, Symbol, cyclotomic_poly, mobius, totient

import config
from modules.errors import InputError

logger = logging.getLogger(__name__)

_X = Symbol("x")


@lru_cache(maxsize=None)
def cyclotomic_coeffs(n):
    """
    Integer coefficients of the cyclotomic polynomial Phi_n, lowest degree first.

    Args:
        n (int): Conductor

    Returns:
        tuple: Coefficients (c_0, ..., c_phi(n)), the last one being 1
    """
    poly = Poly(cyclotomic_poly(n, _X), _X)
    return tuple(int(c) for c in reversed(poly.all_coeffs()))


@lru_cache(maxsize=None)
def field_degree(n):
    return int(totient(n))


def _reduce(raw, n):
    """Reduce a coefficient list modulo Phi_n into a canonical tuple of length phi(n)."""
    phi = cyclotomic_coeffs(n)
    d = len(phi) - 1
    c = [Fraction(v) for v in raw]
    if len(c) < d:
        c.extend([Fraction(0)] * (d - len(c)))
    for k in range(len(c) - 1, d - 1, -1):
        top = c[k]
        if top:
            for i in range(d):
                c[k - d + i] -= top * phi[i]
            c[k] = Fraction(0)
    return tuple(c[:d])


@lru_cache(maxsize=None)
def _powers(n):
    """Canonical coordinates of x^k for 0 <= k < n."""
    phi = cyclotomic_coeffs(n)
    d = len(phi) - 1
    rows = []
    current = [Fraction(0)] * d
    current[0] = Fraction(1)
    for _ in range(n):
        rows.append(tuple(current))
        shifted = [Fraction(0)] + current
        top = shifted[d]
        if top:
            for i in range(d):
                shifted[i] -= top * phi[i]
        current = shifted[:d]
    return tuple(rows)


@lru_cache(maxsize=None)
def _trace_weights(n):
    """Normalized traces of the power-basis elements zeta_n^k, k < phi(n)."""
    weights = []
    for k in range(field_degree(n)):
        order = n // gcd(k, n)
        weights.append(Fraction(int(mobius(order)), int(totient(order))))
    return tuple(weights)


def _check_conductor(n):
    if n > config.MAX_CONDUCTOR:
        raise InputError(f"conductor {n} exceeds the configured bound {config.MAX_CONDUCTOR}")


class CycNum:
    """
    Exact element of the cyclotomic field of conductor N, stored as rational
    coordinates in the power basis of Q[x]/Phi_N(x).
    """

    __slots__ = ("conductor", "coeffs")

    def __init__(self, conductor, coeffs):
        self.conductor = conductor
        self.coeffs = coeffs

    @classmethod
    def rational(cls, value, conductor=1):
        d = field_degree(conductor)
        coeffs = [Fraction(0)] * d
        coeffs[0] = Fraction(value)
        return cls(conductor, tuple(coeffs))

    @classmethod
    def zero(cls, conductor=1):
        return cls.rational(0, conductor)

    @classmethod
    def one(cls, conductor=1):
        return cls.rational(1, conductor)

    @classmethod
    def from_exponent_counts(cls, conductor, counts, scale=1):
        """
        Builds scale * sum(count_k * zeta_N^k) with a single pass over the power table.

        Args:
            conductor (int): Conductor N
            counts (dict): Map exponent k -> integer or rational multiplicity
            scale: Rational factor applied to the whole sum

        Returns:
            CycNum: The exact sum
        """
        _check_conductor(conductor)
        powers = _powers(conductor)
        acc = [Fraction(0)] * field_degree(conductor)
        for k, count in counts.items():
            if count:
                row = powers[k % conductor]
                for i, v in enumerate(row):
                    if v:
                        acc[i] += count * v
        scale = Fraction(scale)
        if scale != 1:
            acc = [scale * v for v in acc]
        return cls(conductor, tuple(acc))

    # -- structure ------------------------------------------------------

    def embed(self, conductor):
        """Same field element at a conductor divisible by the current one."""
        if conductor == self.conductor:
            return self
        if conductor % self.conductor:
            raise InputError(f"conductor {self.conductor} does not divide {conductor}")
        _check_conductor(conductor)
        step = conductor // self.conductor
        powers = _powers(conductor)
        acc = [Fraction(0)] * field_degree(conductor)
        for k, c in enumerate(self.coeffs):
            if c:
                for i, v in enumerate(powers[(k * step) % conductor]):
                    if v:
                        acc[i] += c * v
        return CycNum(conductor, tuple(acc))

    def is_zero(self):
        return not any(self.coeffs)

    def is_rational(self):
        return not any(self.coeffs[1:])

    def to_fraction(self):
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coeffs[0]

    def normalized_trace(self):
        """Trace to Q divided by the field degree; independent of the conductor."""
        return sum((c * w for c, w in zip(self.coeffs, _trace_weights(self.conductor))), Fraction(0))

    def conjugate(self):
        """Image under zeta -> zeta^-1."""
        n = self.conductor
        powers = _powers(n)
        acc = [Fraction(0)] * len(self.coeffs)
        for k, c in enumerate(self.coeffs):
            if c:
                for i, v in enumerate(powers[(-k) % n]):
                    if v:
                        acc[i] += c * v
        return CycNum(n, tuple(acc))

    def to_modular(self, ell, root):
        """
        Image in F_ell under zeta_N -> root.

        Args:
            ell (int): Prime with ell = 1 mod N
            root (int): Primitive N-th root of unity modulo ell

        Returns:
            int: Residue in [0, ell)
        """
        total = 0
        power = 1
        for c in self.coeffs:
            if c:
                if c.denominator % ell == 0:
                    raise ZeroDivisionError(f"denominator of {self} vanishes modulo {ell}")
                total += c.numerator * pow(c.denominator, -1, ell) * power
            power = power * root % ell
        return total % ell

    # -- arithmetic -----------------------------------------------------

    def _pair(self, other):
        if not isinstance(other, CycNum):
            other = CycNum.rational(other)
        if other.conductor == self.conductor:
            return self, other
        n = lcm(self.conductor, other.conductor)
        _check_conductor(n)
        return self.embed(n), other.embed(n)

    def __add__(self, other):
        a, b = self._pair(other)
        return CycNum(a.conductor, tuple(x + y for x, y in zip(a.coeffs, b.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return CycNum(self.conductor, tuple(-x for x in self.coeffs))

    def __sub__(self, other):
        a, b = self._pair(other)
        return CycNum(a.conductor, tuple(x - y for x, y in zip(a.coeffs, b.coeffs)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Fraction(other)
            return CycNum(self.conductor, tuple(other * x for x in self.coeffs))
        a, b = self._pair(other)
        if len(a.coeffs) == 1:
            return CycNum(a.conductor, (a.coeffs[0] * b.coeffs[0],))
        if b.is_rational():
            s = b.coeffs[0]
            return CycNum(a.conductor, tuple(s * x for x in a.coeffs))
        if a.is_rational():
            s = a.coeffs[0]
            return CycNum(a.conductor, tuple(s * x for x in b.coeffs))
        raw = [Fraction(0)] * (2 * len(a.coeffs) - 1)
        for i, x in enumerate(a.coeffs):
            if x:
                for j, y in enumerate(b.coeffs):
                    if y:
                        raw[i + j] += x * y
        return CycNum(a.conductor, _reduce(raw, a.conductor))

    __rmul__ = __mul__

    def inverse(self):
        """Multiplicative inverse by an exact solve of the multiplication-by-self system."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in a cyclotomic field")
        d = len(self.coeffs)
        if self.is_rational():
            return CycNum.rational(1 / self.coeffs[0], self.conductor)
        powers = _powers(self.conductor)
        columns = [(self * CycNum(self.conductor, powers[j])).coeffs for j in range(d)]
        # augmented matrix rows: sum_j columns[j][i] * b_j = delta_{i0}
        rows = [[columns[j][i] for j in range(d)] + [Fraction(int(i == 0))] for i in range(d)]
        for col in range(d):
            pivot = next(r for r in range(col, d) if rows[r][col])
            rows[col], rows[pivot] = rows[pivot], rows[col]
            inv = 1 / rows[col][col]
            rows[col] = [v * inv for v in rows[col]]
            for r in range(d):
                if r != col and rows[r][col]:
                    f = rows[r][col]
                    rows[r] = [v - f * w for v, w in zip(rows[r], rows[col])]
        return CycNum(self.conductor, tuple(rows[i][d] for i in range(d)))

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero in a cyclotomic field")
            return self * (1 / Fraction(other))
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        result = CycNum.one(self.conductor)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coeffs[0] == other
        if not isinstance(other, CycNum):
            return NotImplemented
        a, b = self._pair(other)
        return a.coeffs == b.coeffs

    def __hash__(self):
        if self.is_rational():
            return hash(self.coeffs[0])
        return hash(("cyc", self.normalized_trace()))

    def __bool__(self):
        return not self.is_zero()

    def __str__(self):
        terms = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            if k == 0:
                body = str(c)
            else:
                mono = "z" if k == 1 else f"z^{k}"
                body = mono if c == 1 else ("-" + mono if c == -1 else f"{c}*{mono}")
            terms.append(body)
        if not terms:
            return "0"
        text = terms[0]
        for t in terms[1:]:
            text += f" - {t[1:]}" if t.startswith("-") else f" + {t}"
        if not self.is_rational():
            text += f" [z=zeta_{self.conductor}]"
        return text

    def __repr__(self):
        return f"CycNum({self})"


ZERO = CycNum.zero()
ONE = CycNum.one()


def root_of_unity(n, k=1):
    """
    Returns zeta_n^k in canonical form.

    Args:
        n (int): Order of the primitive root, n >= 1
        k (int): Exponent

    Returns:
        CycNum: zeta_n^k at conductor n
    """
    if n < 1:
        raise InputError("root_of_unity needs N >= 1")
    _check_conductor(n)
    return CycNum(n, _powers(n)[k % n])


def embed(a, conductor):
    return a.embed(conductor)


def cyclo_arith(a, b, op):
    """
    Dispatches one field operation by name.

    Args:
        a (CycNum): Left operand
        b (CycNum): Right operand (ignored by neg and inv)
        op (str): One of add, sub, mul, div, neg, inv, eq

    Returns:
        CycNum or bool: Exact result at conductor lcm(N_a, N_b)
    """
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    if op == "neg":
        return -a
    if op == "inv":
        return a.inverse()
    if op == "eq":
        return a == b
    raise InputError(f"unknown cyclotomic operation '{op}'")


def as_cyc(value):
    return value if isinstance(value, CycNum) else CycNum.rational(value)


# -- exact sparse linear algebra ----------------------------------------------


def _axpy(target, scale, source):
    """target -= scale * source, dropping zeros."""
    for k, c in source.items():
        nv = target.get(k, ZERO) - scale * c
        if nv:
            target[k] = nv
        else:
            target.pop(k, None)


class Subspace:
    """
    Reduced row echelon span of sparse vectors (dict key -> CycNum).

    Every stored row has coefficient 1 at its pivot and 0 at all other pivots,
    so coordinates of a member vector are its entries at the pivots.
    """

    def __init__(self, vectors=()):
        self.rows = {}
        for v in vectors:
            self.add(v)

    def reduce(self, vector):
        v = {k: as_cyc(c) for k, c in vector.items() if c}
        for pivot, row in self.rows.items():
            c = v.get(pivot)
            if c:
                _axpy(v, c, row)
        return v

    def add(self, vector):
        r = self.reduce(vector)
        if not r:
            return False
        pivot = min(r)
        inv = r[pivot].inverse()
        r = {k: c * inv for k, c in r.items()}
        for row in self.rows.values():
            c = row.get(pivot)
            if c:
                _axpy(row, c, r)
        self.rows[pivot] = r
        return True

    def contains(self, vector):
        return not self.reduce(vector)

    def coordinates(self, vector):
        """Coordinates of a member vector on the stored rows, keyed by pivot."""
        rest = self.reduce(vector)
        if rest:
            raise ValueError("vector does not lie in the subspace")
        return {p: vector.get(p, ZERO) for p in self.rows}

    @property
    def dim(self):
        return len(self.rows)

    def basis(self):
        return [self.rows[p] for p in sorted(self.rows)]

    def pivots(self):
        return sorted(self.rows)


def nullspace(equations, unknowns):
    """
    Exact kernel basis of a sparse homogeneous system.

    Args:
        equations (list): Sparse rows, each a dict unknown -> coefficient
        unknowns (list): All unknowns, in a deterministic order

    Returns:
        list: Kernel basis vectors as dicts unknown -> CycNum
    """
    echelon = Subspace(equations)
    basis = []
    for f in unknowns:
        if f in echelon.rows:
            continue
        vector = {f: ONE}
        for pivot, row in echelon.rows.items():
            c = row.get(f)
            if c:
                vector[pivot] = -c
        basis.append(vector)
    return basis
