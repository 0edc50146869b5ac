import dataclasses
import itertools

import pytest

from liftlaw.cat import chain, identity_functor
from liftlaw.errors import MissingMorphism
from liftlaw.instances import cyclic, cyclic_discrete, max_chain, min_chain
from liftlaw.monoidal import (
    MonoidalFunctorData,
    MonoidObject,
    check_monoid,
    check_monoidal,
    check_monoidal_functor_naturality,
    monoid_objects,
    one_object_monoidal,
    thin_monoidal,
    unique_monoid,
    unit_monoid,
)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_max_and_min_chains_are_monoidal(n):
    assert check_monoidal(max_chain(n)).ok
    assert check_monoidal(min_chain(n)).ok


def test_discrete_cyclic_and_one_object_group():
    assert check_monoidal(cyclic_discrete(2)).ok
    assert check_monoidal(cyclic_discrete(3)).ok
    assert check_monoidal(one_object_monoidal(cyclic(3))).ok


def test_non_monotone_tensor_rejected():
    # x⊗y = 1 - max(x, y) is not a bifunctor on the 2-chain
    M = thin_monoidal(chain(2), lambda a, b: str(1 - max(int(a), int(b))), "0")
    assert not check_monoidal(M).ok


def test_assoc_mutation_breaks_pentagon_and_triangle():
    M = one_object_monoidal(cyclic(3))
    bad = dataclasses.replace(M, assoc={("*", "*", "*"): "g"}, strict=False)
    checks = check_monoidal(bad).checks()
    assert {"pentagon", "triangle"} <= checks
    assert "assoc" not in checks        # the component itself is a well-typed iso


def test_strict_flag_checked():
    M = one_object_monoidal(cyclic(3))
    bad = dataclasses.replace(M, runit={"*": "g"}, lunit={"*": "g"})
    assert "strict" in check_monoidal(bad).checks()


def test_mistyped_assoc_component():
    M = max_chain(2)
    bad = dataclasses.replace(M, assoc={**M.assoc, ("0", "0", "1"): "0<=0"})
    assert "assoc" in check_monoidal(bad).checks()


def test_monoid_on_top_of_max_chain():
    M = max_chain(3)
    B = unique_monoid(M, "2")
    assert B == MonoidObject("2", "2<=2", "0<=2")
    assert check_monoid(M, B).ok


def test_unit_monoid_always_valid():
    for M in (max_chain(3), min_chain(3), cyclic_discrete(3), one_object_monoidal(cyclic(2))):
        assert check_monoid(M, unit_monoid(M)).ok


def test_non_unit_element_of_discrete_group_has_no_monoid():
    M = cyclic_discrete(2)
    with pytest.raises(MissingMorphism):
        unique_monoid(M, "g")
    assert [B.carrier for B in monoid_objects(M)] == ["e"]


def test_wrong_monoid_unit_rejected():
    G = one_object_monoidal(cyclic(3))
    rep = check_monoid(G, MonoidObject("*", "e", "g"))
    assert {"left-unit", "right-unit"} <= rep.checks()


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_monoid_objects_on_chains_match_order_oracle(n):
    # in a poset, b carries a monoid iff b⊗b <= b and 1 <= b, and then uniquely
    for M, op, unit in ((max_chain(n), max, 0), (min_chain(n), min, n - 1)):
        found = sorted(int(B.carrier) for B in monoid_objects(M))
        expected = [b for b in range(n) if op(b, b) <= b and unit <= b]
        assert found == expected


def test_monoid_objects_in_group_category():
    # tensor is composition in an abelian group, so associativity is automatic
    # and the unit laws say mult∘unit = e
    G = one_object_monoidal(cyclic(3))
    found = {(B.mult, B.unit_mor) for B in monoid_objects(G)}
    brute = {(m, e) for m, e in itertools.product(G.base.morphisms, repeat=2) if G.base.comp[(m, e)] == "e"}
    assert found == brute and len(found) == 3


def test_identity_monoidal_functor_naturality():
    M = max_chain(3)
    C = M.base
    D = MonoidalFunctorData(identity_functor(C), {(x, y): C.identity[M.ob(x, y)] for x in C.objects for y in C.objects},
                            {})
    assert check_monoidal_functor_naturality(M, M, D).ok
    broken = dataclasses.replace(D, chi={k: v for k, v in D.chi.items() if k != ("0", "1")})
    assert "chi" in check_monoidal_functor_naturality(M, M, broken).checks()
