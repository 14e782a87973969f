"""
Groups Module
Finite permutation groups compiled to Cayley tables: constructors, subgroup analysis,
character groups of abelian subgroups and linear characters.
"""

import logging
from collections import Counter
from fractions import Fraction
from functools import cached_property
from math import gcd, lcm

import numpy as np
from sympy import isprime, primitive_root
from sympy.combinatorics.named_groups import AlternatingGroup, CyclicGroup, DihedralGroup, SymmetricGroup

import config
from modules.errors import InputError, VerificationFailure

logger = logging.getLogger(__name__)


def compose(p, q):
    """(pq)(x) = p(q(x))."""
    return tuple(p[x] for x in q)


def invert(p):
    out = [0] * len(p)
    for x, y in enumerate(p):
        out[y] = x
    return tuple(out)


def cycle_string(p):
    """1-based cycle notation; '()' for the identity."""
    seen = set()
    parts = []
    for start in range(len(p)):
        if start in seen or p[start] == start:
            continue
        cycle = [start]
        seen.add(start)
        x = p[start]
        while x != start:
            cycle.append(x)
            seen.add(x)
            x = p[x]
        parts.append("(" + " ".join(str(v + 1) for v in cycle) + ")")
    return "".join(parts) or "()"


def parse_cycles(text, degree, offset=0):
    """
    Parses a product of cycles such as '(1 2)(3 4 5)' into array form.

    Args:
        text (str): Cycle notation, 1-based points; '()' or 'e' is the identity
        degree (int): Number of points moved by the ambient group
        offset (int): Position of `text` inside the full input, for error messages

    Returns:
        tuple: Array form of the permutation
    """
    perm = tuple(range(degree))
    stripped = text.strip()
    if stripped in ("e", "1"):
        return perm
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch != "(":
            raise InputError(f"expected '(' but found '{ch}'", offset + i)
        j = text.find(")", i)
        if j < 0:
            raise InputError("unclosed cycle", offset + i)
        tokens = text[i + 1:j].replace(",", " ").split()
        try:
            points = [int(t) - 1 for t in tokens]
        except ValueError:
            raise InputError(f"non-integer point in cycle '{text[i:j + 1]}'", offset + i) from None
        if len(set(points)) != len(points) or any(not 0 <= x < degree for x in points):
            raise InputError(f"cycle '{text[i:j + 1]}' repeats a point or leaves 1..{degree}", offset + i)
        cycle = list(range(degree))
        for k, a in enumerate(points):
            cycle[a] = points[(k + 1) % len(points)]
        perm = compose(perm, tuple(cycle))
        i = j + 1
    return perm


def split_generators(text):
    """Splits 'g1,g2,...' at commas outside parentheses; yields (segment, offset)."""
    depth = 0
    start = 0
    for i, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == "," and depth == 0:
            yield text[start:i], start
            start = i + 1
    if text[start:].strip():
        yield text[start:], start


class FiniteGroup:
    """
    Permutation group with a deterministic element enumeration (lexicographic array
    forms, identity at index 0). Groups up to config.TABLE_LIMIT carry a verified Cayley table.
    """

    def __init__(self, generators, degree, provenance, factors=None):
        self.degree = degree
        self.provenance = provenance
        # constructor families, e.g. [("S", (5,))], used for character degrees
        self.factors = factors
        ident = tuple(range(degree))
        gens = []
        for g in generators:
            g = tuple(g)
            if len(g) != degree or sorted(g) != list(ident):
                raise InputError(f"generator {g} is not a permutation of {degree} points")
            if g != ident and g not in gens:
                gens.append(g)

        seen = {ident}
        frontier = [ident]
        while frontier:
            nxt = []
            for p in frontier:
                for g in gens:
                    q = compose(p, g)
                    if q not in seen:
                        seen.add(q)
                        nxt.append(q)
            frontier = nxt
        self.elements = sorted(seen)
        self.index = {p: i for i, p in enumerate(self.elements)}
        self.order = len(self.elements)
        self.identity = 0
        self.generators = [self.index[g] for g in gens]
        self.inv = [self.index[invert(p)] for p in self.elements]
        self._rows = None
        if self.order <= config.TABLE_LIMIT:
            self._rows = self._cayley_table().tolist()
            self.verify_table()
        logger.debug("built %s: order %d, %d generators", provenance, self.order, len(self.generators))

    def _cayley_table(self):
        perms = np.array(self.elements, dtype=np.int64).reshape(self.order, self.degree)
        n = self.order
        table = np.empty((n, n), dtype=np.int64)
        if self.degree and self.degree ** self.degree < 2 ** 62:
            weights = self.degree ** np.arange(self.degree - 1, -1, -1, dtype=np.int64)
            codes = perms @ weights
            for a in range(n):
                # row a: a∘b for every b
                products = perms[a][perms]
                table[a] = np.searchsorted(codes, products @ weights)
        else:
            for a in range(n):
                pa = self.elements[a]
                table[a] = [self.index[compose(pa, pb)] for pb in self.elements]
        return table

    def verify_table(self):
        """Identity, inverse and associativity (Light's test over the generators)."""
        table = np.array(self._rows)
        n = self.order
        everything = np.arange(n)
        if not (np.array_equal(table[0], everything) and np.array_equal(table[:, 0], everything)):
            raise VerificationFailure(f"{self.provenance}: identity law fails")
        if not np.all(table[everything, self.inv] == 0):
            raise VerificationFailure(f"{self.provenance}: inverse law fails")
        for g in self.generators:
            left = table[table[:, g], :]
            right = table[:, table[g, :]]
            if not np.array_equal(left, right):
                x, y = np.argwhere(left != right)[0]
                raise VerificationFailure(f"{self.provenance}: associativity fails", witness=(int(x), g, int(y)))

    # -- element arithmetic -------------------------------------------------

    def mul(self, a, b):
        if self._rows is not None:
            return self._rows[a][b]
        return self.index[compose(self.elements[a], self.elements[b])]

    def conj(self, g, h):
        """g h g^-1."""
        return self.mul(self.mul(g, h), self.inv[g])

    def commutator(self, a, b):
        return self.mul(self.mul(a, b), self.mul(self.inv[a], self.inv[b]))

    def power(self, a, k):
        k %= self.element_order(a)
        result = self.identity
        for _ in range(k):
            result = self.mul(result, a)
        return result

    def cyclic(self, a):
        powers = [self.identity]
        x = a
        while x != self.identity:
            powers.append(x)
            x = self.mul(x, a)
        return powers

    def element_order(self, a):
        return self._orders[a]

    @cached_property
    def _orders(self):
        orders = [0] * self.order
        for a in range(self.order):
            if orders[a]:
                continue
            powers = self.cyclic(a)
            m = len(powers)
            for k, x in enumerate(powers):
                if not orders[x]:
                    orders[x] = m // gcd(k, m)
        return orders

    @cached_property
    def exponent(self):
        return lcm(*self._orders)

    def parse_element(self, text, offset=0):
        perm = parse_cycles(text, self.degree, offset)
        if perm not in self.index:
            raise InputError(f"{cycle_string(perm)} is not an element of {self.provenance}", offset)
        return self.index[perm]

    def parse_generators(self, text, offset=0):
        if text.strip().startswith("gens:"):
            shift = text.index("gens:") + 5
            text, offset = text[shift:], offset + shift
        return [self.parse_element(seg, offset + pos) for seg, pos in split_generators(text)]

    def name(self, a):
        return cycle_string(self.elements[a])

    # -- subgroups ----------------------------------------------------------

    def closure(self, gens):
        gens = [g for g in dict.fromkeys(gens) if g != self.identity]
        seen = {self.identity}
        frontier = [self.identity]
        while frontier:
            nxt = []
            for x in frontier:
                for g in gens:
                    y = self.mul(x, g)
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
            frontier = nxt
        return Subgroup(self, seen, gens)

    def subgroup(self, text):
        return self.closure(self.parse_generators(text))

    @cached_property
    def whole(self):
        return Subgroup(self, range(self.order), self.generators)

    @cached_property
    def trivial(self):
        return Subgroup(self, [self.identity], [])

    def centralizer(self, elements):
        elements = list(elements)
        members = [g for g in range(self.order) if all(self.mul(g, x) == self.mul(x, g) for x in elements)]
        return Subgroup(self, members)

    @cached_property
    def center(self):
        return self.centralizer(self.generators)

    def normalizer(self, sub):
        members = [g for g in range(self.order) if all(self.conj(g, s) in sub for s in sub.gens)]
        return Subgroup(self, members)

    def normal_closure(self, seeds, within=None):
        """Smallest subgroup containing `seeds` and stable under conjugation by `within`."""
        within = self.generators if within is None else within
        gens = [s for s in dict.fromkeys(seeds) if s != self.identity]
        sub = self.closure(gens)
        queue = list(gens)
        while queue:
            x = queue.pop()
            for w in within:
                y = self.conj(w, x)
                if y not in sub:
                    gens.append(y)
                    queue.append(y)
                    sub = self.closure(gens)
        return sub

    def derived_subgroup(self, sub=None):
        sub = self.whole if sub is None else sub
        seeds = [self.commutator(a, b) for a in sub.gens for b in sub.gens]
        return self.normal_closure(seeds, sub.gens)

    def derived_series(self):
        series = [self.whole]
        while True:
            nxt = self.derived_subgroup(series[-1])
            if nxt.order == series[-1].order:
                return series
            series.append(nxt)

    def lower_central_series(self):
        series = [self.whole]
        while True:
            seeds = [self.commutator(x, g) for x in series[-1].gens for g in self.generators]
            nxt = self.normal_closure(seeds)
            if nxt.order == series[-1].order:
                return series
            series.append(nxt)

    @cached_property
    def is_nilpotent(self):
        return self.lower_central_series()[-1].order == 1

    @cached_property
    def is_abelian(self):
        return self.whole.is_abelian

    def subnormal_chain(self, sub):
        """H = H_0 ⊴ N(H_0) ⊴ ... up to G; None when the normalizer chain stalls."""
        chain = [sub]
        while chain[-1].order < self.order:
            nxt = self.normalizer(chain[-1])
            if nxt.order == chain[-1].order:
                return None
            chain.append(nxt)
        return chain

    @cached_property
    def conjugacy_classes(self):
        label = [-1] * self.order
        classes = []
        for start in range(self.order):
            if label[start] >= 0:
                continue
            label[start] = len(classes)
            orbit = [start]
            for x in orbit:
                for g in self.generators:
                    y = self.conj(g, x)
                    if label[y] < 0:
                        label[y] = len(classes)
                        orbit.append(y)
            classes.append(sorted(orbit))
        return classes

    def double_cosets(self, left, right=None):
        """Double cosets left·g·right in element order; each is (rep, sorted members)."""
        right = left if right is None else right
        assigned = set()
        cosets = []
        for g in range(self.order):
            if g in assigned:
                continue
            members = {self.mul(self.mul(a, g), b) for a in left.elements for b in right.elements}
            assigned |= members
            cosets.append((g, sorted(members)))
        return cosets

    def left_cosets(self, sub):
        assigned = set()
        cosets = []
        for g in range(self.order):
            if g not in assigned:
                members = sorted(self.mul(g, s) for s in sub.elements)
                assigned.update(members)
                cosets.append((g, members))
        return cosets

    def subgroup_classes(self):
        """All subgroups up to conjugacy, built by joining cyclic subgroups."""
        cyclic = {}
        for g in range(self.order):
            sub = self.closure([g])
            cyclic.setdefault(sub.key, sub)
        found = dict(cyclic)
        frontier = list(cyclic.values())
        while frontier:
            nxt = []
            for sub in frontier:
                for cyc in cyclic.values():
                    if cyc.gens and cyc.gens[0] in sub:
                        continue
                    joined = self.closure(list(sub.gens) + list(cyc.gens))
                    if joined.key not in found:
                        found[joined.key] = joined
                        nxt.append(joined)
            frontier = nxt
        classes = {}
        for sub in sorted(found.values(), key=lambda s: (s.order, s.key)):
            canon = min(tuple(sorted(self.conj(g, x) for x in sub.elements)) for g in range(self.order))
            classes.setdefault(canon, sub)
        return list(classes.values())

    def fingerprint(self, sub=None):
        sub = self.whole if sub is None else sub
        histogram = Counter(self.element_order(x) for x in sub.elements)
        return {"order": sub.order, "abelian": sub.is_abelian, "orders": dict(sorted(histogram.items()))}

    def __repr__(self):
        return f"FiniteGroup({self.provenance}, order={self.order})"


class Subgroup:
    """Subgroup of a FiniteGroup given by its sorted element indices and generators."""

    def __init__(self, parent, elements, gens=None):
        self.parent = parent
        self.elements = tuple(sorted(set(elements)))
        self._members = frozenset(self.elements)
        self.order = len(self.elements)
        self.gens = tuple(gens) if gens is not None else self._small_generators()

    def _small_generators(self):
        gens = []
        span = {self.parent.identity}
        for x in sorted(self.elements, key=lambda y: (-self.parent.element_order(y), y)):
            if x not in span:
                gens.append(x)
                span = set(self.parent.closure(gens).elements)
                if len(span) == self.order:
                    break
        return gens

    def __contains__(self, x):
        return x in self._members

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return self.order

    @property
    def key(self):
        return self.elements

    def is_subgroup_of(self, other):
        return self._members <= other._members

    @cached_property
    def is_abelian(self):
        mul = self.parent.mul
        return all(mul(a, b) == mul(b, a) for a in self.gens for b in self.gens)

    def is_normal(self, within=None):
        within = self.parent.generators if within is None else within
        return all(self.parent.conj(g, s) in self for g in within for s in self.gens)

    def conjugate(self, g):
        return Subgroup(self.parent, [self.parent.conj(g, x) for x in self.elements])

    def describe(self):
        return [self.parent.name(g) for g in self.gens]

    def __eq__(self, other):
        return isinstance(other, Subgroup) and other.parent is self.parent and other.elements == self.elements

    def __hash__(self):
        return hash(self.elements)

    def __repr__(self):
        return f"Subgroup(order={self.order}, gens={self.describe()})"


# -- constructors -----------------------------------------------------------------


def _sympy_factor(kind, n):
    if kind == "S":
        return SymmetricGroup(n)
    if kind == "A":
        return AlternatingGroup(n)
    if kind == "D":
        return DihedralGroup(n)
    return CyclicGroup(n)


def semidirect_generators(p, q):
    """x -> x+1 and x -> a·x on Z_p, with a of multiplicative order q."""
    if not (isprime(p) and isprime(q)) or (p - 1) % q:
        raise InputError(f"SD({p},{q}) needs primes p, q with q | p - 1")
    a = pow(primitive_root(p), (p - 1) // q, p)
    return [tuple((x + 1) % p for x in range(p)), tuple(a * x % p for x in range(p))], p


def _factor_generators(kind, params):
    if kind == "SD":
        return semidirect_generators(*params)
    n = params[0]
    if n < 1:
        raise InputError(f"{kind}({n}) needs n >= 1")
    group = _sympy_factor(kind, n)
    degree = group.degree
    return [tuple(g.array_form) for g in group.generators], degree


def _parse_factor(text, pos):
    """Parses NAME(INT[,INT]) at `pos`; returns (kind, params, next position)."""
    i = pos
    while i < len(text) and text[i].isalpha():
        i += 1
    kind = text[pos:i]
    if kind not in ("S", "A", "D", "C", "SD"):
        raise InputError(f"unknown group constructor '{kind}'", pos)
    if i >= len(text) or text[i] != "(":
        raise InputError("expected '('", i)
    j = text.find(")", i)
    if j < 0:
        raise InputError("unclosed parenthesis", i)
    try:
        params = tuple(int(t) for t in text[i + 1:j].split(","))
    except ValueError:
        raise InputError(f"non-integer parameter in '{text[pos:j + 1]}'", i + 1) from None
    if len(params) != (2 if kind == "SD" else 1):
        raise InputError(f"wrong number of parameters for {kind}", i + 1)
    return kind, params, j + 1


def parse_group_expr(expr):
    """'D(3)xD(5)' -> [('D', (3,)), ('D', (5,))]."""
    text = expr.replace(" ", "")
    if not text:
        raise InputError("empty group expression", 0)
    factors = []
    pos = 0
    while True:
        kind, params, pos = _parse_factor(text, pos)
        factors.append((kind, params))
        if pos == len(text):
            return factors
        if text[pos] != "x":
            raise InputError(f"expected 'x' between factors, found '{text[pos]}'", pos)
        pos += 1


def render_group_expr(factors):
    return "x".join(f"{kind}({','.join(str(p) for p in params)})" for kind, params in factors)


def build_group(expr):
    """
    Builds a verified permutation group from an expression such as 'S(5)', 'D(3)xD(5)'
    or 'SD(7,3)xSD(7,3)'. Factors act on disjoint blocks of points.

    Args:
        expr (str): Group expression

    Returns:
        FiniteGroup: The group with provenance and constructor families recorded
    """
    factors = parse_group_expr(expr)
    generators = []
    offset = 0
    blocks = []
    for kind, params in factors:
        gens, degree = _factor_generators(kind, params)
        blocks.append((gens, offset, degree))
        offset += degree
    total = offset
    for gens, start, degree in blocks:
        for g in gens:
            full = list(range(total))
            for x in range(degree):
                full[start + x] = start + g[x]
            generators.append(tuple(full))
    return FiniteGroup(generators, total, render_group_expr(factors), factors)


def quotient(group, normal):
    """
    Quotient by a normal subgroup, realized as the action on left cosets.

    Returns:
        tuple: (FiniteGroup quotient, list projection element index -> quotient index)
    """
    if not normal.is_normal():
        raise InputError("quotient requires a normal subgroup")
    cosets = group.left_cosets(normal)
    label = {}
    for c, (_, members) in enumerate(cosets):
        for x in members:
            label[x] = c
    reps = [rep for rep, _ in cosets]

    def action(x):
        return tuple(label[group.mul(x, r)] for r in reps)

    image = FiniteGroup([action(g) for g in group.generators], len(cosets), f"{group.provenance}/{normal.order}")
    projection = [image.index[action(x)] for x in range(group.order)]
    return image, projection


# -- analysis -----------------------------------------------------------------------


def analyze(group, sub):
    """
    Collects and verifies the subgroup data used throughout the workbench.

    Args:
        group (FiniteGroup): Ambient group G
        sub (Subgroup): Subgroup H

    Returns:
        dict: center, centralizers, normalizer, classes, double cosets, series, subnormal chain
    """
    normalizer = group.normalizer(sub)
    for g in normalizer.elements:
        if sorted(group.conj(g, h) for h in sub.elements) != list(sub.elements):
            raise VerificationFailure("normalizer element does not fix H", witness=group.name(g))
    classes = group.conjugacy_classes
    if sum(len(c) for c in classes) != group.order or any(group.order % len(c) for c in classes):
        raise VerificationFailure("conjugacy classes do not partition G")
    cosets = group.double_cosets(sub)
    if sum(len(m) for _, m in cosets) != group.order:
        raise VerificationFailure("double cosets do not partition G")
    record = {
        "group": group.provenance,
        "order": group.order,
        "subgroup": sub.describe(),
        "center": [group.name(z) for z in group.center.elements],
        "centralizers": {group.name(h): group.centralizer([h]).order for h in sub.gens},
        "normalizer_order": normalizer.order,
        "normalizer": group.fingerprint(normalizer),
        "class_sizes": sorted(len(c) for c in classes),
        "double_cosets": [{"rep": group.name(rep), "size": len(m)} for rep, m in cosets],
        "derived_series": [s.order for s in group.derived_series()],
        "nilpotent": group.is_nilpotent,
    }
    if group.is_nilpotent:
        chain = group.subnormal_chain(sub)
        if chain is None:
            raise VerificationFailure("normalizer chain of a nilpotent group stalled")
        record["subnormal_chain"] = [s.order for s in chain]
    else:
        record["subnormal_chain"] = "not nilpotent"
    return record


# -- characters -----------------------------------------------------------------------


def abelian_basis(group, sub, preferred=()):
    """
    Elements t_1..t_n with sub = <t_1> x ... x <t_n>, trying `preferred` first.

    Returns:
        list: Basis element indices
    """
    if not sub.is_abelian:
        raise InputError("abelian basis requested for a nonabelian subgroup")
    candidates = list(dict.fromkeys(
        [p for p in preferred if p in sub]
        + sorted(sub.elements, key=lambda x: (-group.element_order(x), x))
    ))
    candidates = [c for c in candidates if c != group.identity]

    def search(chosen, span):
        if len(span) == sub.order:
            return chosen
        for c in candidates:
            if c in span:
                continue
            powers = group.cyclic(c)
            if any(p in span for p in powers[1:]):
                continue
            found = search(chosen + [c], {group.mul(s, p) for s in span for p in powers})
            if found is not None:
                return found
        return None

    return search([], {group.identity})


class AbelianCharacter:
    """Homomorphism into the roots of unity of order `modulus`, stored as exponents."""

    def __init__(self, domain, values, modulus):
        self.domain = domain
        self.values = values
        self.modulus = modulus

    def __call__(self, x):
        return self.values[x]

    def is_trivial(self):
        return not any(self.values.values())

    def restrict(self, sub):
        return AbelianCharacter(sub, {x: self.values[x] for x in sub.elements}, self.modulus)

    def __mul__(self, other):
        m = lcm(self.modulus, other.modulus)
        a, b = m // self.modulus, m // other.modulus
        return AbelianCharacter(self.domain, {x: (a * v + b * other.values[x]) % m for x, v in self.values.items()}, m)

    def __eq__(self, other):
        m = lcm(self.modulus, other.modulus)
        a, b = m // self.modulus, m // other.modulus
        return all(a * v % m == b * other.values[x] % m for x, v in self.values.items())

    def __hash__(self):
        return hash(tuple(sorted((x, Fraction(v, self.modulus)) for x, v in self.values.items())))


class CharacterGroup:
    """
    Dual group of an abelian subgroup H = <t_1> x ... x <t_n>. Characters are exponent
    vectors k with chi_k(t^x) = zeta_e^(sum_i k_i x_i e / n_i), e = exp(H); the basis
    character a_i is the unit vector, so a_i(t_j) = 1 for i != j.
    """

    def __init__(self, group, sub, basis=None):
        self.group = group
        self.subgroup = sub
        self.basis = list(basis) if basis is not None else abelian_basis(group, sub, sub.gens)
        self.orders = tuple(group.element_order(t) for t in self.basis)
        self.exponent = lcm(*self.orders) if self.orders else 1
        self.coords = {}
        for x in self._products():
            self.coords[x[0]] = x[1]
        if len(self.coords) != sub.order:
            raise VerificationFailure("abelian basis does not parametrize the subgroup")

    def _products(self):
        items = [(self.group.identity, ())]
        for t, n in zip(self.basis, self.orders):
            nxt = []
            for x, c in items:
                y = x
                for k in range(n):
                    nxt.append((y, c + (k,)))
                    y = self.group.mul(y, t)
            items = nxt
        return items

    def element(self, coords):
        x = self.group.identity
        for t, k in zip(self.basis, coords):
            for _ in range(k):
                x = self.group.mul(x, t)
        return x

    def characters(self):
        """Exponent vectors of all characters in lexicographic order."""
        vectors = [()]
        for n in self.orders:
            vectors = [v + (k,) for v in vectors for k in range(n)]
        return vectors

    def pairing(self, chi, x):
        """Exponent of chi(x) as a power of zeta_e."""
        e = self.exponent
        return sum(k * c * (e // n) for k, c, n in zip(chi, self.coords[x], self.orders)) % e

    def as_character(self, chi):
        return AbelianCharacter(self.subgroup, {x: self.pairing(chi, x) for x in self.subgroup.elements}, self.exponent)

    def from_character(self, character):
        """Exponent vector of a character of H given by its values."""
        chi = []
        for t, n in zip(self.basis, self.orders):
            v = character(t) * self.exponent
            if v % character.modulus:
                raise InputError("character values are not roots of unity of order exp(H)")
            v //= character.modulus
            chi.append((v // (self.exponent // n)) % n)
        return tuple(chi)


def dual_abelian(group, sub, basis=None):
    """
    Character group of an abelian subgroup with its evaluation pairing.

    Raises:
        InputError: If the subgroup is not abelian
    """
    if not sub.is_abelian:
        raise InputError("dual group requested for a nonabelian subgroup")
    dual = CharacterGroup(group, sub, basis)
    chars = dual.characters()
    if len(chars) != sub.order:
        raise VerificationFailure("|dual| differs from |H|")
    for x in sub.elements:
        if x != group.identity and all(dual.pairing(chi, x) == 0 for chi in chars):
            raise VerificationFailure("characters do not separate elements", witness=group.name(x))
    return dual


def linear_characters(group):
    """
    Linear characters of G pulled back from the abelianization G/[G,G].

    Returns:
        list: AbelianCharacter objects on G, the trivial one first
    """
    derived = group.derived_subgroup()
    image, projection = quotient(group, derived)
    dual = dual_abelian(image, image.whole)
    result = []
    for chi in dual.characters():
        values = {x: dual.pairing(chi, projection[x]) for x in range(group.order)}
        character = AbelianCharacter(group.whole, values, dual.exponent)
        check = group.generators if group.order > config.EXHAUSTIVE_LIMIT else range(group.order)
        for x in range(group.order):
            for s in check:
                if values[group.mul(x, s)] != (values[x] + values[s]) % dual.exponent:
                    raise VerificationFailure("linear character is not multiplicative", witness=(x, s))
        result.append(character)
    if len(result) != group.order // derived.order:
        raise VerificationFailure("linear character count differs from |G/[G,G]|")
    return result
