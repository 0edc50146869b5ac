"""The six acceptance criteria, one test each.

Every test is marked with its criterion; the terminal summary prints one
PASS/FAIL line per criterion (see ``conftest.py``).
"""
import itertools
import time
from collections import Counter

import pytest

from fixture_builders import BUILDERS, NEGATIVE, build
from mutants import detected, mutations

from liftlaw.action import check_action, check_c_functor, strict_c_functor, thin_action
from liftlaw.cat import chain
from liftlaw.declare import Workspace
from liftlaw.distlaw import (
    Caps,
    check_lift_lemmas,
    check_unlift_lemmas,
    enumerate_laws,
    enumerate_strict_lifts,
    lift_from_law,
)
from liftlaw.instances import closure_monad, closure_operators, max_chain
from liftlaw.linear import (
    check_bialgebra,
    check_comodule,
    check_lb_monad,
    check_LB_compatibility,
    check_left_module,
    check_linear_distlaw,
    check_module_algebra,
    canonical_law,
    free_lb_module,
    kron,
    identity,
    lifted_action_direct,
    lifted_action_map,
    regular_comodule,
)
from liftlaw.linear_examples import BundleGenerator, f3_instance
from liftlaw.monad import em_category
from liftlaw.runner import run_roundtrip

# (fixture, action, monad) for the bijection suite
BIJECTION_SUITE = [
    ("identity_finset.yaml", "swap", "identity"),
    ("const_top_max2.yaml", "max", "top"),
    ("const_top_max3.yaml", "max", "top"),
    ("const_top_min2.yaml", "min", "top"),
    ("c3_twist.yaml", "regular", "twist"),
    ("conjugation_finset.yaml", "swap", "conjugation"),
    ("finset_collapse.yaml", "collapse", "terminal"),
]
SET_LIKE = ["c3_twist.yaml", "conjugation_finset.yaml", "finset_collapse.yaml"]


def _workspace(name):
    return Workspace(build(name))


@pytest.mark.criterion(1, "bijection between laws and strict lifts")
def test_bijection(fixture_path, detail):
    for name in SET_LIKE:
        ws = _workspace(name)
        M = ws.action(next(iter(build(name).sections["actions"]))).M
        assert not M.is_thin(), name
        assert len(M.objects) <= 3, name
        assert max(len(M.hom(x, y)) for x in M.objects for y in M.objects) <= 4, name
    total = time.perf_counter()
    counts = []
    for name, action, monad in BIJECTION_SUITE:
        start = time.perf_counter()
        run = run_roundtrip(fixture_path(name), action, monad, Caps())
        elapsed = time.perf_counter() - start
        assert run.status == 0, (name, run.error, [str(r) for r in run.reports])
        assert run.counts["laws"] == run.counts["lifts"], name
        assert all(line.endswith(": ok") for line in run.lines), (name, run.lines)
        assert elapsed < 60, (name, elapsed)
        counts.append(f"{name.split('.')[0]} {run.counts['laws']}={run.counts['lifts']}")
    assert time.perf_counter() - total < 300
    assert counts[3].endswith("0=0")
    detail(", ".join(counts))


def _lemma_instances():
    for name, action, monad in BIJECTION_SUITE:
        ws = _workspace(name)
        yield name, ws.action(action), ws.monad(monad)
    C = max_chain(3)
    for cl in closure_operators(3):
        yield f"closure {cl}", thin_action(C, chain(3), lambda m, q: str(max(int(m), int(q)))), closure_monad(3, cl)


@pytest.mark.criterion(2, "proof-step lemmas")
def test_proof_lemmas(detail):
    n_laws = n_lifts = 0
    for name, A, m in _lemma_instances():
        em = em_category(m)
        for law in enumerate_laws(A, m):
            rep = check_lift_lemmas(law, em)
            assert rep.ok, (name, str(rep))
            L = lift_from_law(law, em)
            assert check_action(L.tilde).ok, name
            assert L.strict_witness.ok, (name, str(L.strict_witness))
            assert check_c_functor(strict_c_functor(em.U, L.tilde, A)).ok, name
            n_laws += 1
        for L in enumerate_strict_lifts(A, m):
            rep = check_unlift_lemmas(L)
            assert rep.ok, (name, str(rep))
            n_lifts += 1
    assert n_laws > 0 and n_lifts > 0
    detail(f"{n_laws} laws, {n_lifts} lifts")


def _max_type_actions(n, k):
    """m⋄q = max(m, φ(q)) on the n-chain, for every monotone φ from the k-chain with φ(0) = 0."""
    C = max_chain(k)
    M = chain(n)
    for phi in itertools.product(range(n), repeat=k - 1):
        phi = (0,) + phi
        if all(phi[i] <= phi[i + 1] for i in range(k - 1)):
            yield phi, thin_action(C, M, lambda m, q, phi=phi: str(max(int(m), phi[int(q)])))


@pytest.mark.criterion(3, "poset criterion")
def test_poset_criterion(detail):
    cases = exist = 0
    for n, k in itertools.product(range(1, 5), repeat=2):
        for phi, A in _max_type_actions(n, k):
            assert check_action(A).ok
            for cl in closure_operators(n):
                m = closure_monad(n, cl)
                oracle = all(cl[max(a, phi[q])] <= max(cl[a], phi[q]) for a in range(n) for q in range(k))
                laws = enumerate_laws(A, m)
                assert len(laws) == (1 if oracle else 0), (n, k, phi, cl)
                cases += 1
                exist += oracle
    detail(f"{cases} (closure, action) pairs, {exist} with a law")


@pytest.mark.criterion(4, "F3 linear instance")
def test_linear_instance(detail):
    start = time.perf_counter()
    B, A, M, Q = f3_instance()
    assert check_bialgebra(B).ok and check_comodule(B, Q).ok
    assert check_module_algebra(B, A).ok and check_left_module(A, M).ok
    law = canonical_law(B, A, M.dim, Q)
    assert (law.cod, law.dom) == (8, 8)
    rep = check_linear_distlaw(law, B, A, M, Q, [regular_comodule(B)])
    assert rep.ok, str(rep)
    lifted = lifted_action_map(B, A, M, Q)
    assert check_left_module(A, lifted).ok
    assert lifted.act == kron(M.act, identity(B.field, Q.dim)) @ law
    assert lifted.act == lifted_action_direct(B, A, M, Q)
    lb = check_lb_monad(B, A, M)
    assert lb.ok, str(lb)
    N, right = free_lb_module(B, A, M)
    compat = check_LB_compatibility(B, A, N, right)
    assert compat.ok, str(compat)
    elapsed = time.perf_counter() - start
    assert elapsed < 5
    detail(f"{elapsed:.2f}s")


PASSING = [name for name in BUILDERS if name not in NEGATIVE]


@pytest.mark.criterion(5, "mutation robustness")
def test_mutation_robustness(detail):
    summary = []
    for name in PASSING:
        ms = mutations(build(name))
        assert len(ms) >= 20, (name, len(ms))
        missed = [str(m) for m in ms if not detected(m)[0]]
        assert not missed, (name, missed[:10])
        summary.append(f"{name.split('.')[0]} {len(ms)}")
    detail("mutations caught: " + ", ".join(summary))


@pytest.mark.criterion(6, "randomized linear bundles")
def test_random_bundles(detail):
    start = time.perf_counter()
    gen = BundleGenerator(seed=20240611)
    fields = Counter()
    for _ in range(120):
        b = gen.draw()
        B, A, M, Q = b.B, b.A, b.M, b.Q
        assert max(B.dim, A.dim, M.dim, Q.dim) <= 3, b.description
        for rep in (check_bialgebra(B), check_module_algebra(B, A), check_left_module(A, M), check_comodule(B, Q)):
            assert rep.ok, (b.description, str(rep))
        law = canonical_law(B, A, M.dim, Q)
        rep = check_linear_distlaw(law, B, A, M, Q, [regular_comodule(B)])
        assert rep.ok, (b.description, str(rep))
        fields[B.field.name] += 1
    elapsed = time.perf_counter() - start
    assert set(fields) == {"F2", "F3", "F5"}
    assert elapsed < 60
    detail(f"120 bundles in {elapsed:.1f}s, " + ", ".join(f"{k}: {v}" for k, v in sorted(fields.items())))
