import itertools

import pytest
from hypothesis import given, strategies as st

from liftlaw.cat import (
    Functor,
    NatTrans,
    check_category,
    check_functor,
    check_nat_trans,
    chain,
    compose_functors,
    constant_functor,
    discrete,
    enumerate_functors,
    enumerate_nat_trans,
    finset,
    from_tables,
    godement_product,
    identity_functor,
    identity_nat,
    monoid,
    opposite,
    poset,
    vertical,
)
from liftlaw.errors import CompositionUndefined, IncompatibleFunctors
from liftlaw.instances import cyclic, swap_conjugation


def test_compose_unit_law_on_chain():
    P = chain(2)
    assert P.compose("1<=1", "0<=1") == "0<=1"


def test_compose_in_group():
    G = cyclic(2)
    assert G.compose("g", "g") == "e"


def test_compose_endpoint_mismatch():
    P = chain(2)
    with pytest.raises(CompositionUndefined):
        P.compose("0<=1", "1<=1")


def test_compose_missing_entry():
    P = chain(2)
    broken = P.with_comp({k: v for k, v in P.comp.items() if k != ("1<=1", "0<=1")})
    with pytest.raises(CompositionUndefined):
        broken.compose("1<=1", "0<=1")


@pytest.mark.parametrize("cat", [discrete(["a", "b"]), chain(3), finset([0, 1, 2]), cyclic(3), poset("abc", lambda x, y: x == y or x == "a")])
def test_constructors_give_categories(cat):
    assert check_category(cat).ok


def test_nonassociative_table_fails_with_witness():
    table = {("id", "id"): "id", ("id", "a"): "a", ("a", "id"): "a", ("id", "b"): "b", ("b", "id"): "b",
             ("a", "a"): "b", ("a", "b"): "id", ("b", "a"): "a", ("b", "b"): "b"}
    M = monoid(["id", "a", "b"], table, "id")
    rep = check_category(M)
    assert not rep.ok
    triples = [dict(v.witness) for v in rep if v.check == "associativity"]
    assert {"h": "a", "g": "a", "f": "a"} in triples


def test_missing_identity_and_bad_endpoints_reported():
    cat = from_tables(["x"], {"f": ("x", "y")}, {}, {})
    rep = check_category(cat)
    assert "endpoints" in rep.checks()
    cat = from_tables(["x"], {"f": ("x", "x")}, {}, {("f", "f"): "f"})
    assert "identity" in check_category(cat).checks()


def _naive_is_category(cat):
    """Direct reading of the axioms, written independently of check_category."""
    ms = cat.morphisms
    for f, g, h in itertools.product(ms, repeat=3):
        if cat.tgt[f] == cat.src[g] and cat.tgt[g] == cat.src[h]:
            gf, hg = cat.comp[(g, f)], cat.comp[(h, g)]
            if cat.src[gf] != cat.src[f] or cat.tgt[gf] != cat.tgt[g]:
                return False
            if cat.comp[(h, gf)] != cat.comp[(hg, f)]:
                return False
    for f in ms:
        if cat.comp[(cat.identity[cat.tgt[f]], f)] != f or cat.comp[(f, cat.identity[cat.src[f]])] != f:
            return False
    return True


def test_single_entry_mutations_agree_with_naive_oracle():
    for cat in (chain(3), cyclic(3), finset([1, 2])):
        for key, value in cat.comp.items():
            g, f = key
            for other in cat.morphisms:
                if other == value or (cat.src[other], cat.tgt[other]) != (cat.src[f], cat.tgt[g]):
                    continue
                mutant = cat.with_comp({**cat.comp, key: other})
                assert check_category(mutant).ok == _naive_is_category(mutant), (key, other)


def test_composition_mutations_at_identities_always_fail():
    for cat in (chain(3), cyclic(3), finset([1, 2])):
        ids = set(cat.identity.values())
        for (g, f), value in cat.comp.items():
            if g in ids or f in ids:
                for other in cat.morphisms:
                    if other != value:
                        assert not check_category(cat.with_comp({**cat.comp, (g, f): other})).ok


# -- functors and transformations -------------------------------------------------------

def test_identity_and_constant_functors():
    P = chain(2)
    assert check_functor(identity_functor(P)).ok
    assert check_functor(constant_functor(P, P, "1")).ok


def test_swapped_object_map_fails():
    two = discrete(["a", "b"])
    F = Functor(two, two, {"a": "b", "b": "a"}, {f: f for f in two.morphisms})
    rep = check_functor(F)
    assert "endpoints" in rep.checks()


def test_c2_not_a_functor_when_generator_sent_to_identity_of_wrong_table():
    G = cyclic(3)
    F = Functor(G, G, {"*": "*"}, {"e": "e", "g": "g", "g2": "g"})
    assert "composition" in check_functor(F).checks()


def test_enumerate_functors_matches_brute_force():
    for dom, cod in [(chain(2), chain(3)), (cyclic(2), cyclic(2)), (cyclic(2), finset([2]))]:
        fast = {tuple(sorted(F.mor_map.items())) + tuple(sorted(F.obj_map.items()))
                for F in enumerate_functors(dom, cod)}
        slow = set()
        for om in itertools.product(cod.objects, repeat=len(dom.objects)):
            om = dict(zip(dom.objects, om))
            for mm in itertools.product(cod.morphisms, repeat=len(dom.morphisms)):
                F = Functor(dom, cod, om, dict(zip(dom.morphisms, mm)))
                if check_functor(F).ok:
                    slow.add(tuple(sorted(F.mor_map.items())) + tuple(sorted(om.items())))
        assert fast == slow


def test_identity_transformation_natural():
    M = finset([1, 2])
    assert check_nat_trans(identity_nat(swap_conjugation(M))).ok


def test_poset_codomain_every_family_natural():
    P = chain(3)
    F = identity_functor(P)
    G = constant_functor(P, P, "2")
    alpha = NatTrans(F, G, {x: P.unique(x, "2") for x in P.objects})
    assert check_nat_trans(alpha).ok


def test_broken_naturality_square_witnessed():
    M = finset([1, 2])
    I = identity_functor(M)
    comps = {"1": "1>1:0", "2": "2>2:10"}       # swap at 2, not natural for constant maps
    rep = check_nat_trans(NatTrans(I, I, comps))
    assert not rep.ok and rep.checks() == {"naturality"}
    natural = {tuple(sorted(a.components.items())) for a in enumerate_nat_trans(I, I)}
    assert tuple(sorted(comps.items())) not in natural


def test_godement_identities():
    M = finset([1, 2])
    T, S = swap_conjugation(M), identity_functor(M)
    prod = godement_product(identity_nat(T), identity_nat(S))
    assert prod.src_f.same_tables(compose_functors(T, S))
    assert prod.components == identity_nat(compose_functors(T, S)).components


def test_godement_poset_unique():
    P = chain(3)
    I = identity_functor(P)
    top = constant_functor(P, P, "2")
    eta = NatTrans(I, top, {x: P.unique(x, "2") for x in P.objects})
    prod = godement_product(eta, eta)
    assert prod.components == {x: P.unique(x, "2") for x in P.objects}


def test_godement_incompatible():
    P, Q = chain(2), chain(3)
    a = identity_nat(identity_functor(P))
    b = identity_nat(identity_functor(Q))
    with pytest.raises(IncompatibleFunctors):
        godement_product(a, b)


def _small_transformations(cat):
    functors = list(enumerate_functors(cat, cat))
    return [a for F, G in itertools.product(functors, repeat=2) for a in enumerate_nat_trans(F, G)]


@pytest.mark.parametrize("cat", [chain(2), cyclic(2), discrete(["a", "b"]), finset([0, 1])])
def test_godement_associative_and_unital(cat):
    assert len(cat.morphisms) <= 12
    alphas = _small_transformations(cat)
    for a in alphas:
        left = godement_product(identity_nat(identity_functor(cat)), a)
        right = godement_product(a, identity_nat(identity_functor(cat)))
        assert left.components == a.components == right.components
    for a, b, c in itertools.product(alphas[:6], repeat=3):
        one = godement_product(godement_product(c, b), a)
        two = godement_product(c, godement_product(b, a))
        assert one.components == two.components


def test_interchange_of_vertical_and_horizontal():
    cat = chain(2)
    alphas = _small_transformations(cat)
    for a, b in itertools.product(alphas, repeat=2):
        if not a.tgt_f.same_tables(b.src_f):
            continue
        for c, d in itertools.product(alphas, repeat=2):
            if not c.tgt_f.same_tables(d.src_f):
                continue
            lhs = godement_product(vertical(d, c), vertical(b, a))
            rhs = vertical(godement_product(d, b), godement_product(c, a))
            assert lhs.components == rhs.components


# -- opposite -------------------------------------------------------------------------------

def test_opposite_of_discrete_is_itself():
    D = discrete(["a", "b"])
    assert opposite(D) == D


def test_opposite_chain_is_reversed():
    P = opposite(chain(2))
    assert P.src["0<=1"] == "1" and P.tgt["0<=1"] == "0"
    assert check_category(P).ok


@pytest.mark.parametrize("cat", [chain(3), finset([1, 2]), cyclic(3)])
def test_opposite_involution(cat):
    assert opposite(opposite(cat)) == cat


@given(st.integers(1, 4), st.data())
def test_random_posets_are_categories(n, data):
    rel = {(i, j) for i in range(n) for j in range(n) if i == j or (i < j and data.draw(st.booleans()))}
    closed = set(rel)
    for _ in range(n):
        closed |= {(a, d) for (a, b) in closed for (c, d) in closed if b == c}
    P = poset(range(n), lambda a, b: (a, b) in closed)
    assert check_category(P).ok
    assert P.is_thin()
    assert opposite(opposite(P)) == P
