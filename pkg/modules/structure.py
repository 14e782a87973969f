"""
Structure Module
Group-likes of A = (kG)^J and of its dual, the Radford map, centrality of dual group-likes,
the adjoint action, normal Hopf subalgebras and normality of prime quotients.
"""

import logging
from collections import Counter

import config
from modules.cohomology import is_nondegenerate, list_all_trivializers, regular_elements
from modules.errors import InputError, NotHopfSubalgebra, TheoremViolation, UnavailableError
from modules.exactnum import ONE, Subspace, root_of_unity
from modules.groups import AbelianCharacter, linear_characters
from modules.hopfcore import accumulate, alg_mul, coinvariants, counit, unit

logger = logging.getLogger(__name__)


class GroupLike:
    """(sum_alpha u(alpha) e_alpha) * g for a coset Hg inside N_G(H) and a cochain u on H^."""

    def __init__(self, element, coset, cochain):
        self.element = element
        self.coset = coset
        self.cochain = cochain

    @property
    def key(self):
        return tuple(sorted(self.element.items()))

    def __repr__(self):
        return f"GroupLike(coset={self.coset}, support={len(self.element)})"


class DualGroupLike:
    """A linear character of G, i.e. a group-like of A* = k^G."""

    def __init__(self, character, restriction):
        self.character = character
        self.restriction = restriction

    def __call__(self, x):
        return root_of_unity(self.character.modulus, self.character(x))

    def is_trivial(self):
        return self.character.is_trivial()

    def __repr__(self):
        return f"DualGroupLike(modulus={self.character.modulus}, restriction={self.restriction})"


def conjugate_character(dual, g, chi):
    """Exponent vector of alpha o c_g, (alpha o c_g)(h) = alpha(g h g^-1), for g normalizing H."""
    group = dual.group
    values = {h: dual.pairing(chi, group.conj(g, h)) for h in dual.subgroup.elements}
    return dual.from_character(AbelianCharacter(dual.subgroup, values, dual.exponent))


def discrepancy(T, g):
    """mu_g(alpha, beta) = omega(alpha o c_g, beta o c_g) omega(alpha, beta)^-1 on H^."""
    permutation = {chi: conjugate_character(T.dual, g, chi) for chi in T.chars}
    return T.omega.conjugated(permutation) * T.omega.inverse()


def _group_like_element(T, cochain, g):
    f = {}
    for chi, e_chi in zip(T.chars, T.idempotents):
        value = root_of_unity(cochain.modulus, cochain(chi))
        for h, c in e_chi.items():
            accumulate(f, h, value * c)
    return alg_mul(T.group, f, {g: ONE})


def group_likes(T, expected_count=None):
    """
    Group-likes of (kG)^J, searched coset by coset in N_G(H)/H.

    Every trivializer u of mu_g gives (sum u_alpha e_alpha) g; each candidate is checked
    against Delta^J(a) = a (x) a and eps(a) = 1, and the result against closure.

    Args:
        T (TwistedHopf): Twisted Hopf algebra
        expected_count (int): Number of one-dimensional corepresentations, when known

    Returns:
        list: GroupLike objects, the unit first

    Raises:
        TheoremViolation: If a candidate fails the direct test, the set is not closed, or
            the count differs from `expected_count`
        UnavailableError: If a degenerate cocycle leaves group-likes outside the searched cosets
    """
    group, sub = T.group, T.subgroup
    if T.omega.is_trivial():
        # J = 1 (x) 1
        return [GroupLike({g: ONE}, group.name(g), None) for g in range(group.order)]
    normalizer = group.normalizer(sub)
    covered = set()
    found = []
    for g in normalizer.elements:
        if g in covered:
            continue
        covered.update(group.mul(h, g) for h in sub.elements)
        for u in list_all_trivializers(discrepancy(T, g)):
            a = _group_like_element(T, u, g)
            delta = T.coproduct_of(a)
            square = {(x, y): c * d for x, c in a.items() for y, d in a.items()}
            if delta != square or counit(a) != ONE:
                raise TheoremViolation("trivializer does not give a group-like", witness=group.name(g))
            found.append(GroupLike(a, group.name(g), u))
    index = {like.key: like for like in found}
    if len(index) != len(found):
        raise TheoremViolation("two trivializers give the same group-like")
    for a in found:
        for b in found:
            if tuple(sorted(alg_mul(group, a.element, b.element).items())) not in index:
                raise TheoremViolation("group-likes are not closed under products", witness=(a.coset, b.coset))
    if group.order % len(found):
        raise TheoremViolation(f"|G(A)| = {len(found)} does not divide dim A = {group.order}")
    if expected_count is not None and expected_count != len(found):
        if not is_nondegenerate(T.omega):
            raise UnavailableError(
                f"coset search found {len(found)} of {expected_count} group-likes; the cocycle is degenerate"
            )
        raise TheoremViolation(f"{len(found)} group-likes but {expected_count} one-dimensional corepresentations")
    found.sort(key=lambda like: like.element != unit(group))
    logger.info("|G(A)| = %d for %r", len(found), T)
    return found


def group_like_order(T, a):
    power, k = dict(a), 1
    while power != unit(T.group):
        power = alg_mul(T.group, power, a)
        k += 1
    return k


def group_like_summary(T, likes):
    elements = [like.element for like in likes]
    orders = Counter(group_like_order(T, a) for a in elements)
    abelian = all(alg_mul(T.group, a, b) == alg_mul(T.group, b, a) for a in elements for b in elements)
    return {"order": len(likes), "abelian": abelian, "orders": dict(sorted(orders.items()))}


def central_group_likes(T, likes):
    """Z(A) cap G(A) by commutation against the generators of G; trivial when Z(G) = 1."""
    group = T.group
    central = [
        like for like in likes
        if all(alg_mul(group, like.element, {s: ONE}) == alg_mul(group, {s: ONE}, like.element) for s in group.generators)
    ]
    if group.center.order == 1 and len(central) != 1:
        raise TheoremViolation(f"Z(G) = 1 but Z(A) cap G(A) has {len(central)} elements")
    return central


def dual_group_likes(T):
    result = []
    for character in linear_characters(T.group):
        restricted = character.restrict(T.subgroup)
        result.append(DualGroupLike(character, T.dual.from_character(restricted)))
    return result


def radford_map(T, eta, R):
    """
    f(eta) = R^(1) eta(R^(2)), contracted directly and compared with
    sum_alpha omega(alpha, eta|H) omega(eta|H, alpha)^-1 e_alpha.
    """
    direct = {}
    for (a, b), c in R.items():
        accumulate(direct, a, c * eta(b))
    closed = {}
    for chi, e_chi in zip(T.chars, T.idempotents):
        value = root_of_unity(T.omega.modulus, T.omega.skew(chi, eta.restriction))
        for h, c in e_chi.items():
            accumulate(closed, h, value * c)
    if direct != closed:
        raise TheoremViolation("Radford map contraction differs from its closed form", witness=eta.restriction)
    return direct


def radford_images(T, R, etas=None):
    """f on every dual group-like, with the antihomomorphism law checked pairwise."""
    etas = dual_group_likes(T) if etas is None else etas
    images = [radford_map(T, eta, R) for eta in etas]
    position = {eta.character: i for i, eta in enumerate(etas)}
    for i, eta in enumerate(etas):
        for j, xi in enumerate(etas):
            k = position.get(eta.character * xi.character)
            if k is None:
                raise TheoremViolation("dual group-likes are not closed under products", witness=(i, j))
            if images[k] != alg_mul(T.group, images[j], images[i]):
                raise TheoremViolation("Radford map is not an antihomomorphism", witness=(i, j))
    return images


def is_convolution_central(T, eta, elements=None):
    """(eta (x) id) Delta^J(g) = (id (x) eta) Delta^J(g) on the check elements."""
    for g in T.check_elements() if elements is None else elements:
        left, right = {}, {}
        for (x, y), c in T.coproduct(g).items():
            accumulate(left, y, c * eta(x))
            accumulate(right, x, c * eta(y))
        if left != right:
            return False
    return True


def central_dual_group_likes(T):
    """
    Central dual group-likes by convolution-centrality, and by w-regularity of eta|H
    when Z(G) = 1; the two sets must coincide.

    Returns:
        dict: per-eta verdicts and the central subset
    """
    etas = dual_group_likes(T)
    regular = set(regular_elements(T.omega))
    centerless = T.group.center.order == 1
    entries = []
    for k, eta in enumerate(etas):
        oracle = is_convolution_central(T, eta)
        criterion = eta.restriction in regular
        if centerless and oracle != criterion:
            raise TheoremViolation(
                f"dual group-like {k}: convolution-centrality {oracle}, regularity criterion {criterion}",
                witness=eta.restriction,
            )
        entries.append({"eta": k, "restriction": list(eta.restriction), "oracle": oracle,
                        "criterion": criterion if centerless else None})
    central = [e["eta"] for e in entries if e["oracle"]]
    nondegenerate = is_nondegenerate(T.omega)
    if nondegenerate and (T.group.order // len(central)) % T.subgroup.order:
        raise TheoremViolation(f"|H| = {T.subgroup.order} does not divide dim A / {len(central)}")
    return {"etas": entries, "central": central, "criterion_applied": centerless, "nondegenerate": nondegenerate}


# -- adjoint action and normality ---------------------------------------------------------------


def adjoint_action(T, h, x):
    """^h x = sum h_1 x S^J(h_2) for a group element h."""
    group = T.group
    out = {}
    for (y, z), c in T.coproduct(h).items():
        term = alg_mul(group, alg_mul(group, {y: c}, x), T.antipode(z))
        for k, d in term.items():
            accumulate(out, k, d)
    return out


def _leg_slices(tensor, leg):
    slices = {}
    for key, c in tensor.items():
        slices.setdefault(key[1 - leg], {})[key[leg]] = c
    return slices.values()


def check_hopf_subalgebra(T, basis):
    """
    Unit, products, antipode and coproduct closure of span(basis).

    Returns:
        Subspace: The echelon span

    Raises:
        NotHopfSubalgebra: On the first closure test that fails
    """
    group = T.group
    span = Subspace(basis)
    if span.dim != len(basis):
        raise NotHopfSubalgebra("basis vectors are linearly dependent")
    if not span.contains(unit(group)):
        raise NotHopfSubalgebra("unit not in the subspace")
    for i, a in enumerate(basis):
        for b in basis[i:]:
            for product in (alg_mul(group, a, b), alg_mul(group, b, a)):
                if not span.contains(product):
                    raise NotHopfSubalgebra("not closed under multiplication", witness=i)
        if not span.contains(T.antipode_of(a)):
            raise NotHopfSubalgebra("not stable under the antipode", witness=i)
        delta = T.coproduct_of(a)
        for leg in (0, 1):
            if not all(span.contains(s) for s in _leg_slices(delta, leg)):
                raise NotHopfSubalgebra("not a subcoalgebra", witness=i)
    return span


def is_normal_hopf_subalgebra(T, basis, acting=None):
    """
    Stability of a Hopf subalgebra under the adjoint action of `acting` (the generators of
    G by default; the action of a product is the composite).

    Returns:
        dict: {"normal": bool, "dim": int, "witness": ...}
    """
    span = check_hopf_subalgebra(T, basis)
    return _adjoint_report(T, span, basis, acting)


def _adjoint_report(T, span, basis, acting):
    acting = T.group.generators if acting is None else acting
    for g in acting:
        for i, x in enumerate(basis):
            if not span.contains(adjoint_action(T, g, x)):
                return {"normal": False, "dim": len(basis), "witness": {"acting": T.group.name(g), "basis": i}}
    return {"normal": True, "dim": len(basis), "witness": None}


def adjoint_stability(T, basis, acting=None):
    """
    Adjoint stability of a subalgebra that need not be a Hopf subalgebra, such as the
    coinvariants A^{co pi} of a quotient pi. Such a subalgebra is a left coideal subalgebra,
    and it is stable exactly when pi is normal.

    Raises:
        NotHopfSubalgebra: If span(basis) is not a unital subalgebra
    """
    group = T.group
    span = Subspace(basis)
    if not span.contains(unit(group)):
        raise NotHopfSubalgebra("unit not in the subspace")
    for i, a in enumerate(basis):
        for b in basis[i:]:
            if not all(span.contains(p) for p in (alg_mul(group, a, b), alg_mul(group, b, a))):
                raise NotHopfSubalgebra("not closed under multiplication", witness=i)
    report = _adjoint_report(T, span, basis, acting)
    report["antipode_stable"] = all(span.contains(T.antipode_of(a)) for a in basis)
    return report


def group_algebra_basis(group, sub):
    return [{x: ONE} for x in sub.elements]


def inside_group_likes(T, vectors, likes):
    """Whether every vector lies in the span of the group-likes, i.e. in kG(A)."""
    span = Subspace([like.element for like in likes])
    return all(span.contains(v) for v in vectors)


def _least_prime(n):
    return next(p for p in range(2, n + 1) if n % p == 0)


def prime_quotient_normality(T, target, projection):
    """
    Normality of pi: A -> kF, |F| the least prime dividing dim A.

    Criterion: mu|H is w-regular for every mu in F^. Oracle: adjoint stability of A^{co pi}
    up to MAX_ENUM_DIM, convolution-centrality of the pulled-back characters of F beyond.

    Raises:
        InputError: If |F| is not the least prime divisor of dim A
        TheoremViolation: If the two verdicts differ
    """
    group = T.group
    if target.order == 1 or target.order != _least_prime(group.order):
        raise InputError(f"|F| = {target.order} is not the least prime dividing {group.order}")
    regular = set(regular_elements(T.omega))
    pulled = []
    for mu in linear_characters(target):
        values = {x: mu(projection[x]) for x in range(group.order)}
        character = AbelianCharacter(group.whole, values, mu.modulus)
        pulled.append(DualGroupLike(character, T.dual.from_character(character.restrict(T.subgroup))))
    criterion = all(eta.restriction in regular for eta in pulled)
    if group.order <= config.MAX_ENUM_DIM:
        stability = adjoint_stability(T, coinvariants(T, target, projection))
        oracle, method, witness = stability["normal"], "adjoint", stability["witness"]
    else:
        central = [is_convolution_central(T, eta, group.generators) for eta in pulled]
        oracle, method = all(central), "centrality"
        witness = None if oracle else {"eta": central.index(False)}
    if oracle != criterion:
        raise TheoremViolation(f"quotient normality: {method} oracle {oracle}, regularity criterion {criterion}")
    logger.info("prime quotient of order %d: normal=%s (%s oracle)", target.order, oracle, method)
    return {"normal": oracle, "criterion": criterion, "oracle": method, "witness": witness,
            "restrictions": [list(eta.restriction) for eta in pulled]}
