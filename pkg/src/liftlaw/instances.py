"""Ready-made small instances: posets, finite-set categories, monoid categories.

These back the shipped declaration fixtures and the test-suite.
"""
from __future__ import annotations

from typing import Callable, Mapping

from .action import MonoidalAction, strict_action, thin_action
from .cat import (
    Bifunctor,
    FinCategory,
    Functor,
    Id,
    NatTrans,
    chain,
    compose_functors,
    constant_functor,
    discrete,
    finset,
    identity_functor,
    monoid,
)
from .monad import Monad, identity_monad, make_monad, thin_monad
from .monoidal import (
    MonoidalCategory,
    discrete_monoidal,
    one_object_monoidal,
    thin_monoidal,
)


def max_chain(n: int) -> MonoidalCategory:
    return thin_monoidal(chain(n), lambda a, b: max(a, b), "0")


def min_chain(n: int) -> MonoidalCategory:
    return thin_monoidal(chain(n), lambda a, b: min(a, b), str(n - 1))


def max_action(n: int, C: MonoidalCategory) -> MonoidalAction:
    """C (a max-chain) acting on the n-chain by m⋄q = max(m, q), q clipped to the top."""
    top = n - 1
    return thin_action(C, chain(n), lambda m, q: str(max(int(m), min(int(q), top))))


def min_action(n: int, C: MonoidalCategory) -> MonoidalAction:
    top = n - 1
    return thin_action(C, chain(n), lambda m, q: str(min(int(m), min(int(q), top))))


def closure_monad(n: int, closure: Mapping[int, int]) -> Monad:
    return thin_monad(chain(n), {str(k): str(v) for k, v in closure.items()})


def const_top(n: int) -> Monad:
    return closure_monad(n, {i: n - 1 for i in range(n)})


def closure_operators(n: int) -> list[dict[int, int]]:
    """All closure operators on the n-chain (one per set of closed points containing the top)."""
    out = []
    for mask in range(1 << (n - 1)):
        closed = [i for i in range(n - 1) if mask >> i & 1] + [n - 1]
        out.append({i: min(c for c in closed if c >= i) for i in range(n)})
    return out


# -- one-object categories ----------------------------------------------------------

def cyclic(n: int, obj: str = "*") -> FinCategory:
    """The cyclic group of order n as a one-object category, elements e, g, g2, ..."""
    names = ["e"] + ["g" if k == 1 else f"g{k}" for k in range(1, n)]
    table = {(names[a], names[b]): names[(a + b) % n] for a in range(n) for b in range(n)}
    return monoid(names, table, "e", obj, f"C{n}")


def cyclic_discrete(n: int) -> MonoidalCategory:
    """C_n as a discrete strict monoidal category (objects = group elements)."""
    names = ["e"] + ["g" if k == 1 else f"g{k}" for k in range(1, n)]
    D = discrete(names, f"disc(C{n})")
    mult = {(names[a], names[b]): names[(a + b) % n] for a in range(n) for b in range(n)}
    return discrete_monoidal(D, mult, "e")


def endofunctor_action(C: MonoidalCategory, M: FinCategory, functors: Mapping[Id, Functor]) -> MonoidalAction:
    """Strict action of a discrete monoidal category through endofunctors F_Q, M⋄Q = F_Q(M)."""
    obj_map, mm = {}, {}
    for q, F in functors.items():
        for x in M.objects:
            obj_map[(x, q)] = F.obj_map[x]
        for f in M.morphisms:
            mm[(f, C.base.identity[q])] = F.mor_map[f]
    return strict_action(C, M, Bifunctor(M, C.base, M, obj_map, mm))


def trivial_action(C: MonoidalCategory, M: FinCategory) -> MonoidalAction:
    mm = {(f, g): f for f in M.morphisms for g in C.base.morphisms}
    obj_map = {(x, q): x for x in M.objects for q in C.base.objects}
    return strict_action(C, M, Bifunctor(M, C.base, M, obj_map, mm))


def swap_conjugation(M: FinCategory) -> Functor:
    """On a finset category: conjugate every map by the swap of {0, 1} in 2-element sets."""
    def perm(n: int) -> list[int]:
        return [1, 0] if n == 2 else list(range(n))

    mm = {}
    for f in M.morphisms:
        head, vals = f.split(":")
        n, m = (int(s) for s in head.split(">"))
        pn, pm = perm(n), perm(m)
        new = [0] * n
        for i in range(n):
            new[pn[i]] = pm[int(vals[i])]
        mm[f] = f"{n}>{m}:" + "".join(map(str, new))
    return Functor(M, M, {x: x for x in M.objects}, mm)


def terminal_collapse_action(M: FinCategory, terminal: Id = "1") -> MonoidalAction:
    """The 2-chain (max, unit 0) acting by M⋄0 = M, M⋄1 = terminal object.

    The morphism f⋄(0<=1) is the unique map into the terminal object.
    """
    C = max_chain(2)
    K = constant_functor(M, M, terminal)
    obj_map, mm = {}, {}
    for x in M.objects:
        obj_map[(x, "0")] = x
        obj_map[(x, "1")] = terminal
    for f in M.morphisms:
        mm[(f, "0<=0")] = f
        mm[(f, "1<=1")] = K.mor_map[f]
        mm[(f, "0<=1")] = M.hom(M.src[f], terminal)[0]
    return strict_action(C, M, Bifunctor(M, C.base, M, obj_map, mm))


def conjugation_monad(M: FinCategory) -> Monad:
    """The swap-conjugation functor σ (σσ = Id) made a monad with μ, η the natural isos Id ≅ σ.

    μ_X : σσX = X -> σX and η_X : X -> σX both use the swap on 2-element sets.
    """
    sigma = swap_conjugation(M)
    comps = {}
    for x in M.objects:
        n = int(x)
        vals = "10" if n == 2 else "".join(map(str, range(n)))
        comps[x] = f"{n}>{n}:{vals}"
    return make_monad(sigma, comps, comps)


def terminal_monad(M: FinCategory, terminal: Id = "1") -> Monad:
    T = constant_functor(M, M, terminal)
    return make_monad(T, {x: M.identity[terminal] for x in M.objects},
                      {x: M.hom(x, terminal)[0] for x in M.objects})


def twist_monad(n: int = 2) -> Monad:
    """On the one-object cyclic group C_n: T = Id with η = g and μ = g^(n-1) = η⁻¹.

    Monad laws reduce to μ∘η = id, so this is a monad that is isomorphic but
    not equal to the identity monad.
    """
    G = cyclic(n)
    inv = G.inverse("g")
    return make_monad(identity_functor(G), {"*": inv}, {"*": "g"})


def regular_action(n: int = 2) -> MonoidalAction:
    """C_n (one object, tensor = composition) acting on itself by right multiplication of morphisms."""
    G = cyclic(n)
    C = one_object_monoidal(G)
    mm = {(f, g): G.comp[(f, g)] for f in G.morphisms for g in G.morphisms}
    return strict_action(C, G, Bifunctor(G, G, G, {("*", "*"): "*"}, mm))
