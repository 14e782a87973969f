import pytest

from modules.case_runner import CaseSpec, resolve
from modules.hopfcore import build_twist


def make_twist(group_expr, gens, cocycle="nontrivial"):
    group, sub, omega = resolve(CaseSpec(group_expr, gens, cocycle, ("axioms",)))
    return build_twist(group, sub, omega)


@pytest.fixture(scope="session")
def twisted_s4():
    return make_twist("S(4)", "gens:(1 2),(3 4)")


@pytest.fixture(scope="session")
def twisted_d4():
    return make_twist("D(4)", "gens:(1 2)(3 4),(1 4)(2 3)")


@pytest.fixture(scope="session")
def twisted_a4():
    return make_twist("A(4)", "gens:(1 2)(3 4),(1 3)(2 4)")


@pytest.fixture(scope="session")
def untwisted_s3():
    return make_twist("S(3)", "gens:(1 2)", "trivial")
