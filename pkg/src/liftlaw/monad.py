"""Monads on a finite category and their Eilenberg-Moore categories."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Mapping

from .cat import (
    FinCategory,
    Functor,
    Id,
    NatTrans,
    check_functor,
    check_nat_trans,
    compose_functors,
    enumerate_functors,
    enumerate_nat_trans,
    expect,
    identity_functor,
    thin_functor,
)
from .errors import CapExceeded, UnknownObject
from .report import Report

MOR_CAP = 64


@dataclass(frozen=True)
class Monad:
    T: Functor
    mu: NatTrans
    eta: NatTrans | None = None

    @property
    def cat(self) -> FinCategory:
        return self.T.dom

    @property
    def unital(self) -> bool:
        return self.eta is not None

    def ob(self, x: Id) -> Id:
        return self.T.ob(x)

    def mor(self, f: Id) -> Id:
        return self.T.mor_map.get(f)


def make_monad(T: Functor, mu: Mapping[Id, Id], eta: Mapping[Id, Id] | None = None) -> Monad:
    TT = compose_functors(T, T)
    e = None if eta is None else NatTrans(identity_functor(T.dom), T, dict(eta))
    return Monad(T, NatTrans(TT, T, dict(mu)), e)


def identity_monad(cat: FinCategory) -> Monad:
    ids = {x: cat.identity[x] for x in cat.objects}
    return make_monad(identity_functor(cat), ids, ids)


def thin_monad(P: FinCategory, obj_map: Mapping[Id, Id]) -> Monad:
    """Monad data on a thin category from a monotone object map.

    Missing structure maps are left out so that :func:`check_monad` reports
    them; on a poset this passes exactly for closure operators.
    """
    T = thin_functor(P, P, obj_map)
    mu, eta = {}, {}
    for x in P.objects:
        hs = P.hom(obj_map[obj_map[x]], obj_map[x])
        if hs:
            mu[x] = hs[0]
        hs = P.hom(x, obj_map[x])
        if hs:
            eta[x] = hs[0]
    return make_monad(T, mu, eta)


def check_monad(m: Monad) -> Report:
    rep = Report("monad")
    T = m.T
    if T.dom != T.cod:
        rep.add("endofunctor", "T is not an endofunctor")
        return rep
    rep.extend(check_functor(T))
    if not rep.ok:
        return rep
    M = T.dom
    TT = compose_functors(T, T)
    if not (m.mu.src_f.same_tables(TT) and m.mu.tgt_f.same_tables(T)):
        rep.add("mu", "mu must be a transformation T∘T => T")
        return rep
    r = check_nat_trans(m.mu)
    for v in r:
        rep.violations.append(type(v)("mu-" + v.check, v.message, v.witness))
    if m.eta is not None:
        if not (m.eta.src_f.same_tables(identity_functor(M)) and m.eta.tgt_f.same_tables(T)):
            rep.add("eta", "eta must be a transformation Id => T")
            return rep
        for v in check_nat_trans(m.eta):
            rep.violations.append(type(v)("eta-" + v.check, v.message, v.witness))
    if not rep.ok:
        return rep
    mu = m.mu.components
    for x in M.objects:
        tx = T.obj_map[x]
        expect(rep, M, "associativity", [mu[x], T.mor_map[mu[x]]], [mu[x], mu[tx]], object=x)
        if m.eta is not None:
            eta = m.eta.components
            expect(rep, M, "left-unit", [mu[x], eta[tx]], [M.identity[tx]], object=x)
            expect(rep, M, "right-unit", [mu[x], T.mor_map[eta[x]]], [M.identity[tx]], object=x)
    return rep


def enumerate_monads(cat: FinCategory, unital: bool = True) -> Iterator[Monad]:
    """Every monad on a (tiny) category; brute force over functors and components."""
    I = identity_functor(cat)
    for T in enumerate_functors(cat, cat):
        TT = compose_functors(T, T)
        etas = list(enumerate_nat_trans(I, T)) if unital else [None]
        if not etas:
            continue
        for mu in enumerate_nat_trans(TT, T):
            for eta in etas:
                m = Monad(T, mu, eta)
                if check_monad(m).ok:
                    yield m


# -- modules -----------------------------------------------------------------------

@dataclass(frozen=True)
class TModule:
    carrier: Id
    nu: Id

    @property
    def id(self) -> tuple:
        return (self.carrier, self.nu)


def check_tmodule(m: Monad, X: TModule) -> Report:
    rep = Report(f"T-module on {X.carrier}")
    M, T = m.cat, m.T
    if not M.has_object(X.carrier):
        rep.add("carrier", "carrier is not an object", carrier=X.carrier)
        return rep
    x = X.carrier
    if not M.has_morphism(X.nu) or (M.src[X.nu], M.tgt[X.nu]) != (T.obj_map[x], x):
        rep.add("action", "action must be a morphism TM -> M", nu=X.nu)
        return rep
    expect(rep, M, "module-associativity", [X.nu, T.mor_map[X.nu]], [X.nu, m.mu.components[x]], carrier=x, nu=X.nu)
    if m.eta is not None:
        expect(rep, M, "module-unit", [X.nu, m.eta.components[x]], [M.identity[x]], carrier=x, nu=X.nu)
    return rep


def is_module_map(m: Monad, f: Id, nu: Id, xi: Id) -> bool:
    """ξ∘T(f) = f∘ν."""
    M = m.cat
    lhs = M.chain(xi, m.mor(f))
    return lhs is not None and lhs == M.chain(f, nu)


def free_module(m: Monad, x: Id) -> TModule:
    if not m.cat.has_object(x):
        raise UnknownObject(x)
    return TModule(m.T.obj_map[x], m.mu.components[x])


@dataclass(frozen=True)
class EMCategory:
    """Eilenberg-Moore category.

    Objects are pairs ``(carrier, nu)``; morphisms are triples
    ``(f, source_module, target_module)`` with ``f`` a module map.
    """

    monad: Monad
    base: FinCategory
    U: Functor
    F: Functor
    eps: NatTrans

    def modules(self) -> list[TModule]:
        return [TModule(*X) for X in self.base.objects]

    def mor(self, f: Id, X: tuple, Y: tuple) -> tuple | None:
        """The EM morphism over ``f`` from X to Y, if f is a module map."""
        key = (f, X, Y)
        return key if self.base.has_morphism(key) else None


def em_category(m: Monad, em_cap: int = 32, mor_cap: int = MOR_CAP) -> EMCategory:
    M, T = m.cat, m.T
    if len(M.morphisms) > mor_cap:
        raise CapExceeded(f"{len(M.morphisms)} morphisms exceeds cap {mor_cap}")
    objs = []
    for x in M.objects:
        for nu in M.hom(T.obj_map[x], x):
            if check_tmodule(m, TModule(x, nu)).ok:
                objs.append((x, nu))
    if len(objs) > em_cap:
        raise CapExceeded(f"{len(objs)} modules exceeds cap {em_cap}")
    mors: dict = {}
    for A in objs:
        for B in objs:
            for f in M.hom(A[0], B[0]):
                if is_module_map(m, f, A[1], B[1]):
                    mors[(f, A, B)] = (A, B)
    comp = {}
    for g, (B, C) in mors.items():
        for f, (A, B2) in mors.items():
            if B == B2:
                comp[(g, f)] = (M.comp[(g[0], f[0])], A, C)
    ident = {A: (M.identity[A[0]], A, A) for A in objs}
    base = FinCategory(tuple(objs), tuple(mors), {k: v[0] for k, v in mors.items()},
                       {k: v[1] for k, v in mors.items()}, ident, comp, f"EM({M.name})")
    U = Functor(base, M, {A: A[0] for A in objs}, {k: k[0] for k in mors})
    free = {x: (T.obj_map[x], m.mu.components[x]) for x in M.objects}
    F = Functor(M, base, free,
                {f: (T.mor_map[f], free[M.src[f]], free[M.tgt[f]]) for f in M.morphisms})
    FU = compose_functors(F, U)
    eps = NatTrans(FU, identity_functor(base), {A: (A[1], free[A[0]], A) for A in objs})
    return EMCategory(m, base, U, F, eps)


def check_em(em: EMCategory) -> Report:
    """Post-construction invariants of an Eilenberg-Moore category."""
    rep = Report("Eilenberg-Moore category")
    m, base, M = em.monad, em.base, em.monad.cat
    for A in em.F.obj_map.values():
        if not base.has_object(A):
            rep.add("free-module", "free module missing from EM category", module=A)
    for f, k in em.F.mor_map.items():
        if not base.has_morphism(k):
            rep.add("free-map", "T(f) is not a map of free modules", f=f)
    if not rep.ok:
        return rep
    UF = compose_functors(em.U, em.F)
    if not UF.same_tables(m.T):
        rep.add("UF=T", "U∘F differs from T")
    for A in base.objects:
        for B in base.objects:
            images = [em.U.mor_map[k] for k in base.hom(A, B)]
            if len(set(images)) != len(images):
                rep.add("faithful", "U is not faithful", source=A, target=B)
    for v in check_nat_trans(em.eps):
        rep.violations.append(type(v)("counit-" + v.check, v.message, v.witness))
    if m.eta is not None:
        for A in base.objects:
            expect(rep, M, "triangle", [em.U.mor_map[em.eps.components[A]], m.eta.components[A[0]]],
                   [M.identity[A[0]]], module=A)
    for v in check_functor(em.F):
        rep.violations.append(type(v)("free-functor-" + v.check, v.message, v.witness))
    return rep
