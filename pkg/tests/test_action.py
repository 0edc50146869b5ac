import dataclasses
import itertools

from hypothesis import given, strategies as st

from liftlaw.action import (
    CFunctor,
    check_action,
    check_c_functor,
    curry_action,
    identity_c_functor,
    is_strict,
    monad_from_monoid,
    psi_transformation,
    self_action,
    thin_action,
    unit_transformation,
)
from liftlaw.cat import chain, check_functor, check_nat_trans, finset
from liftlaw.instances import (
    const_top,
    cyclic_discrete,
    max_action,
    max_chain,
    min_action,
    min_chain,
    regular_action,
    terminal_collapse_action,
    trivial_action,
)
from liftlaw.monad import check_monad
from liftlaw.monoidal import monoid_objects, unique_monoid, unit_monoid


def test_self_actions():
    for C in (max_chain(3), min_chain(3), cyclic_discrete(3)):
        assert check_action(self_action(C)).ok


def test_stock_actions():
    assert check_action(max_action(3, max_chain(3))).ok
    assert check_action(min_action(3, min_chain(3))).ok
    assert check_action(regular_action(3)).ok
    assert check_action(terminal_collapse_action(finset([0, 1, 2]))).ok
    assert check_action(trivial_action(max_chain(2), finset([1, 2]))).ok


def test_unit_component_mutation_detected():
    A = regular_action(3)
    bad = dataclasses.replace(A, unit_u={"*": "g"})
    assert "unit-left-triangle" in check_action(bad).checks()


def test_psi_mutation_detected():
    A = regular_action(3)
    bad = dataclasses.replace(A, psi={("*", "*", "*"): "g"})
    # the pentagon reads g·g = g·g in an abelian group; only the triangles see it
    assert check_action(bad).checks() == {"unit-left-triangle", "unit-right-triangle"}


def test_missing_psi_reported():
    # max on the left, min on the right is not associative with respect to max
    A = thin_action(max_chain(2), chain(2), lambda m, q: str(min(int(m), int(q))))
    assert not check_action(A).ok


def test_curry_is_a_functor():
    A = max_action(3, max_chain(3))
    for q in A.C.base.objects:
        F = curry_action(A, q)
        assert check_functor(F).ok
        assert F.obj_map == {m: str(max(int(m), int(q))) for m in A.M.objects}


def test_psi_and_unit_transformations_natural():
    for A in (max_action(3, max_chain(3)), regular_action(3), terminal_collapse_action(finset([0, 1]))):
        Q = A.C.base.objects
        for q, q2 in itertools.product(Q, repeat=2):
            assert check_nat_trans(psi_transformation(A, q, q2)).ok
        assert check_nat_trans(unit_transformation(A)).ok


def test_identity_c_functor():
    for A in (max_action(3, max_chain(3)), regular_action(3)):
        cf = identity_c_functor(A)
        assert is_strict(cf)
        assert check_c_functor(cf).ok


def test_perturbed_zeta_fails():
    A = regular_action(3)
    cf = identity_c_functor(A)
    bad = CFunctor(cf.F, {("*", "*"): "g"}, A, A)
    assert not is_strict(bad)
    assert "c-functor-unit" in check_c_functor(bad).checks()


def test_monad_from_top_monoid_is_const_top():
    A = max_action(3, max_chain(3))
    m = monad_from_monoid(A, unique_monoid(A.C, "2"))
    assert check_monad(m).ok
    ref = const_top(3)
    assert m.T.same_tables(ref.T)
    assert m.mu.components == ref.mu.components
    assert m.eta.components == ref.eta.components


def test_monads_from_every_monoid_are_monads():
    for A in (max_action(3, max_chain(3)), regular_action(3), self_action(cyclic_discrete(2))):
        for B in monoid_objects(A.C):
            assert check_monad(monad_from_monoid(A, B)).ok
        m = monad_from_monoid(A, unit_monoid(A.C))
        assert check_monad(m).ok
        assert m.T.obj_map == {x: A.ob(x, A.C.unit) for x in A.M.objects}


@given(st.integers(1, 3), st.integers(1, 3), st.data())
def test_thin_action_matches_poset_oracle(n, k, data):
    # a table on chains is an action of (k-chain, max, 0) iff it is monotone,
    # m⋄max(x, y) = (m⋄x)⋄y and m⋄0 = m (isomorphisms in a poset are equalities)
    table = {(m, q): data.draw(st.integers(0, n - 1)) for m in range(n) for q in range(k)}
    monotone = all(table[(m, q)] <= table[(m2, q2)]
                   for m, m2 in itertools.product(range(n), repeat=2) if m <= m2
                   for q, q2 in itertools.product(range(k), repeat=2) if q <= q2)
    assoc = all(table[(m, max(x, y))] == table[(table[(m, x)], y)]
                for m in range(n) for x in range(k) for y in range(k))
    unital = all(table[(m, 0)] == m for m in range(n))
    A = thin_action(max_chain(k), chain(n), lambda m, q: str(table[(int(m), int(q))]))
    assert check_action(A).ok == (monotone and assoc and unital)
