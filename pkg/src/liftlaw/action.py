"""Right actions of a monoidal category on a category, and C-functors.

Orientation: ``psi[M, X, Y] : M⋄(X⊗Y) -> (M⋄X)⋄Y`` and ``unit_u[M] : M -> M⋄1``.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Mapping

from .cat import (
    Bifunctor,
    FinCategory,
    Functor,
    Id,
    NatTrans,
    check_bifunctor,
    compose_functors,
    curry,
    expect,
    identity_functor,
)
from .monad import Monad, make_monad
from .monoidal import MonoidalCategory, MonoidObject
from .report import Report


@dataclass(frozen=True)
class MonoidalAction:
    C: MonoidalCategory
    M: FinCategory
    act: Bifunctor
    psi: Mapping[tuple[Id, Id, Id], Id]
    unit_u: Mapping[Id, Id]

    def ob(self, m: Id, q: Id) -> Id:
        return self.act.ob(m, q)

    def tables(self) -> tuple:
        """Canonical, order-independent form of the action data (used for equality)."""
        return (
            tuple(sorted(self.act.obj_map.items(), key=repr)),
            tuple(sorted(self.act.mor_map.items(), key=repr)),
            tuple(sorted(self.psi.items(), key=repr)),
            tuple(sorted(self.unit_u.items(), key=repr)),
        )


def strict_action(C: MonoidalCategory, M: FinCategory, act: Bifunctor) -> MonoidalAction:
    """Action whose Ψ and u are identities (valid only if ⋄ is strictly associative/unital)."""
    ob = act.obj_map
    psi = {}
    for m, x, y in itertools.product(M.objects, C.base.objects, C.base.objects):
        psi[(m, x, y)] = M.identity.get(ob[(m, C.ob(x, y))])
    return MonoidalAction(C, M, act, psi, {m: M.identity.get(ob[(m, C.unit)]) for m in M.objects})


def thin_action(C: MonoidalCategory, M: FinCategory, act_ob: Callable[[Id, Id], Id]) -> MonoidalAction:
    """Action on a thin category from its object table.

    Morphism images and coherence components are the unique morphisms
    where they exist; missing ones are omitted so checks report them.
    """
    Q = C.base
    obj_map = {(m, q): act_ob(m, q) for m in M.objects for q in Q.objects}
    mm = {}
    for f in M.morphisms:
        for g in Q.morphisms:
            hs = M.hom(obj_map[(M.src[f], Q.src[g])], obj_map[(M.tgt[f], Q.tgt[g])])
            if hs:
                mm[(f, g)] = hs[0]
    psi, unit_u = {}, {}
    for m, x, y in itertools.product(M.objects, Q.objects, Q.objects):
        hs = M.hom(obj_map[(m, C.ob(x, y))], obj_map[(obj_map[(m, x)], y)])
        if hs:
            psi[(m, x, y)] = hs[0]
    for m in M.objects:
        hs = M.hom(m, obj_map[(m, C.unit)])
        if hs:
            unit_u[m] = hs[0]
    return MonoidalAction(C, M, Bifunctor(M, Q, M, obj_map, mm), psi, unit_u)


def self_action(C: MonoidalCategory) -> MonoidalAction:
    """C acting on its own underlying category by ⊗; Ψ is the associator, u the right unitor."""
    return MonoidalAction(C, C.base, C.tensor, dict(C.assoc), dict(C.runit))


def check_action(A: MonoidalAction) -> Report:
    rep = Report("monoidal action")
    C, M, act = A.C, A.M, A.act
    Q = C.base
    if act.dom1 != M or act.dom2 != Q or act.cod != M:
        rep.add("act", "action must be a bifunctor M×C -> M")
        return rep
    rep.extend(check_bifunctor(act))
    if not rep.ok:
        return rep
    ob, cob = act.ob, C.ob

    def typed(check, comp, s, t, **wit):
        if comp is None or not M.has_morphism(comp):
            rep.add(check, "component missing", **wit)
        elif M.src[comp] != s or M.tgt[comp] != t:
            rep.add(check, "component has wrong endpoints", component=comp, **wit)
        elif not M.is_iso(comp):
            rep.add(check, "component is not an isomorphism", component=comp, **wit)

    for m, x, y in itertools.product(M.objects, Q.objects, Q.objects):
        typed("psi", A.psi.get((m, x, y)), ob(m, cob(x, y)), ob(ob(m, x), y), M=m, X=x, Y=y)
    for m in M.objects:
        typed("unit_u", A.unit_u.get(m), m, ob(m, C.unit), M=m)
    if not rep.ok:
        return rep

    psi, u, one = A.psi, A.unit_u, C.unit
    L, R = act.left, act.right
    T = C.tensor
    for f in M.morphisms:
        s, t = M.src[f], M.tgt[f]
        for x, y in itertools.product(Q.objects, repeat=2):
            expect(rep, M, "psi-naturality", [psi[(t, x, y)], L(f, cob(x, y))],
                   [L(L(f, x), y), psi[(s, x, y)]], slot="M", f=f, X=x, Y=y)
        expect(rep, M, "u-naturality", [u[t], f], [L(f, one), u[s]], f=f)
    for g in Q.morphisms:
        s, t = Q.src[g], Q.tgt[g]
        for m, y in itertools.product(M.objects, Q.objects):
            expect(rep, M, "psi-naturality", [psi[(m, t, y)], R(m, T.left(g, y))],
                   [L(R(m, g), y), psi[(m, s, y)]], slot="X", g=g, M=m, Y=y)
            expect(rep, M, "psi-naturality", [psi[(m, y, t)], R(m, T.right(y, g))],
                   [R(ob(m, y), g), psi[(m, y, s)]], slot="Y", g=g, M=m, X=y)
    for m, x, y, z in itertools.product(M.objects, Q.objects, Q.objects, Q.objects):
        expect(rep, M, "action-pentagon",
               [psi[(ob(m, x), y, z)], psi[(m, x, cob(y, z))]],
               [L(psi[(m, x, y)], z), psi[(m, cob(x, y), z)], R(m, C.assoc.get((x, y, z)))],
               M=m, X=x, Y=y, Z=z)
    for m, q in itertools.product(M.objects, Q.objects):
        expect(rep, M, "unit-left-triangle", [psi[(m, one, q)], R(m, C.lunit.get(q))],
               [L(u[m], q)], M=m, Q=q)
        expect(rep, M, "unit-right-triangle", [psi[(m, q, one)], R(m, C.runit.get(q))],
               [u[ob(m, q)]], M=m, Q=q)
    return rep


def curry_action(A: MonoidalAction, q: Id) -> Functor:
    """The endofunctor M ↦ M⋄q."""
    return curry(A.act, q)


def psi_transformation(A: MonoidalAction, q: Id, q2: Id) -> NatTrans:
    """Ψ^{q,q2} as a transformation curry(q⊗q2) => curry(q2)∘curry(q)."""
    src = curry_action(A, A.C.ob(q, q2))
    tgt = compose_functors(curry_action(A, q2), curry_action(A, q))
    return NatTrans(src, tgt, {m: A.psi[(m, q, q2)] for m in A.M.objects})


def unit_transformation(A: MonoidalAction) -> NatTrans:
    """u as a transformation Id => curry(1)."""
    return NatTrans(identity_functor(A.M), curry_action(A, A.C.unit), dict(A.unit_u))


# -- C-functors ------------------------------------------------------------------------

@dataclass(frozen=True)
class CFunctor:
    """``F : source.M -> target.M`` with ζ_{M,Q} : F(M)⋄Q -> F(M⋄̃Q)."""

    F: Functor
    zeta: Mapping[tuple[Id, Id], Id]
    source: MonoidalAction
    target: MonoidalAction


def strict_c_functor(F: Functor, source: MonoidalAction, target: MonoidalAction) -> CFunctor:
    ids = {(m, q): F.cod.identity.get(F.obj_map[source.ob(m, q)])
           for m in source.M.objects for q in source.C.base.objects}
    return CFunctor(F, ids, source, target)


def identity_c_functor(A: MonoidalAction) -> CFunctor:
    return strict_c_functor(identity_functor(A.M), A, A)


def is_strict(cf: CFunctor) -> bool:
    N = cf.F.cod
    return all(z == N.identity.get(N.src.get(z)) for z in cf.zeta.values())


def check_c_functor(cf: CFunctor) -> Report:
    rep = Report("C-functor")
    F, S, Tg = cf.F, cf.source, cf.target
    Q = S.C.base
    if Q != Tg.C.base or F.dom != S.M or F.cod != Tg.M:
        rep.add("shape", "functor and actions do not match")
        return rep
    N = F.cod
    zeta = cf.zeta
    for m, q in itertools.product(S.M.objects, Q.objects):
        z = zeta.get((m, q))
        want = (Tg.ob(F.ob(m), q), F.ob(S.ob(m, q)))
        if z is None or not N.has_morphism(z):
            rep.add("zeta", "component missing", M=m, Q=q)
        elif (N.src[z], N.tgt[z]) != want:
            rep.add("zeta", "component has wrong endpoints", M=m, Q=q, component=z)
        elif not N.is_iso(z):
            rep.add("zeta", "component is not an isomorphism", M=m, Q=q, component=z)
    if not rep.ok:
        return rep
    for f in S.M.morphisms:
        s, t = S.M.src[f], S.M.tgt[f]
        for q in Q.objects:
            expect(rep, N, "zeta-naturality", [zeta[(t, q)], Tg.act.left(F.mor(f), q)],
                   [F.mor(S.act.left(f, q)), zeta[(s, q)]], slot="M", f=f, Q=q)
    for g in Q.morphisms:
        s, t = Q.src[g], Q.tgt[g]
        for m in S.M.objects:
            expect(rep, N, "zeta-naturality", [zeta[(m, t)], Tg.act.right(F.ob(m), g)],
                   [F.mor(S.act.right(m, g)), zeta[(m, s)]], slot="Q", g=g, M=m)
    one = S.C.unit
    for m in S.M.objects:
        expect(rep, N, "c-functor-unit", [zeta[(m, one)], Tg.unit_u[F.ob(m)]],
               [F.mor(S.unit_u[m])], M=m)
    for m, q, q2 in itertools.product(S.M.objects, Q.objects, Q.objects):
        expect(rep, N, "c-functor-hexagon",
               [zeta[(S.ob(m, q), q2)], Tg.act.left(zeta[(m, q)], q2), Tg.psi[(F.ob(m), q, q2)]],
               [F.mor(S.psi[(m, q, q2)]), zeta[(m, S.C.ob(q, q2))]],
               M=m, Q=q, Q2=q2)
    return rep


def monad_from_monoid(A: MonoidalAction, B: MonoidObject) -> Monad:
    """The monad M ↦ M⋄B with μ = (M⋄mult)∘Ψ^{-1} and η = (M⋄unit)∘u."""
    M = A.M
    T = curry_action(A, B.carrier)
    mu, eta = {}, {}
    for m in M.objects:
        mu[m] = M.chain(A.act.right(m, B.mult), M.inverse(A.psi[(m, B.carrier, B.carrier)]))
        eta[m] = M.chain(A.act.right(m, B.unit_mor), A.unit_u[m])
    return make_monad(T, mu, eta)
