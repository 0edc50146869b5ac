"""Distributive laws from a monoidal action to a monad, and strict lifts.

A distributive law is a family ``l[M, Q] : T(M⋄Q) -> TM⋄Q``.  The two
constructions between laws and strict lifts of the action to the
Eilenberg-Moore category are :func:`lift_from_law` and
:func:`law_from_lift`.  :func:`enumerate_laws` and
:func:`enumerate_strict_lifts` search both sides independently so that the
correspondence can be checked by counting and by round trips.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, Iterator, Mapping

from .action import (
    MonoidalAction,
    check_action,
    check_c_functor,
    strict_c_functor,
)
from .cat import Bifunctor, Id, expect
from .errors import CapExceeded, LawInvalid
from .monad import EMCategory, Monad, em_category, is_module_map
from .report import Report


@dataclass(frozen=True)
class Caps:
    index: int = 16
    hom: int = 8
    em: int = 32

    @classmethod
    def parse(cls, text: str) -> "Caps":
        """Parse ``"index=16,hom=8,em=32"`` (any subset, any order)."""
        kw = {}
        for part in filter(None, (p.strip() for p in text.split(","))):
            key, _, val = part.partition("=")
            if key not in ("index", "hom", "em") or not val.isdigit():
                raise ValueError(f"bad cap setting {part!r}")
            kw[key] = int(val)
        return cls(**kw)


@dataclass(frozen=True)
class DistributiveLaw:
    action: MonoidalAction
    monad: Monad
    components: Mapping[tuple[Id, Id], Id]

    def __getitem__(self, key: tuple[Id, Id]) -> Id:
        return self.components[key]


@dataclass(frozen=True)
class LiftedAction:
    tilde: MonoidalAction
    em: EMCategory
    base_action: MonoidalAction
    strict_witness: Report = field(default_factory=Report, compare=False)

    def key(self) -> tuple:
        return self.tilde.tables()


def _indices(A: MonoidalAction) -> list[tuple[Id, Id]]:
    return [(m, q) for m in A.M.objects for q in A.C.base.objects]


# -- the four axioms plus binaturality, as equations over the component table -----

@dataclass(frozen=True)
class _Equation:
    check: str
    indices: tuple
    sides: Callable[[Mapping], tuple[list, list]]
    witness: tuple


def law_equations(A: MonoidalAction, m: Monad) -> list[_Equation]:
    """Binaturality and D1-D4 for a candidate family indexed by (M, Q)."""
    M, Q, act, C = A.M, A.C.base, A.act, A.C
    T, mu = m.T, m.mu.components
    eta = m.eta.components if m.eta is not None else None
    L, R = act.left, act.right
    Tm = m.mor
    eqs: list[_Equation] = []

    def add(check, idx, fn, **wit):
        eqs.append(_Equation(check, tuple(idx), fn, tuple(wit.items())))

    for q in Q.objects:
        for f in M.morphisms:
            s, t = M.src[f], M.tgt[f]
            add("law-naturality-M", [(s, q), (t, q)],
                lambda c, f=f, s=s, t=t, q=q: ([c[(t, q)], Tm(L(f, q))], [L(Tm(f), q), c[(s, q)]]),
                f=f, Q=q)
    for x in M.objects:
        for g in Q.morphisms:
            s, t = Q.src[g], Q.tgt[g]
            add("law-naturality-Q", [(x, s), (x, t)],
                lambda c, x=x, g=g, s=s, t=t: ([c[(x, t)], Tm(R(x, g))], [R(T.ob(x), g), c[(x, s)]]),
                M=x, g=g)
    for x, q in itertools.product(M.objects, Q.objects):
        tx = T.ob(x)
        add("D1", [(x, q), (tx, q)],
            lambda c, x=x, q=q, tx=tx: ([L(mu[x], q), c[(tx, q)], Tm(c[(x, q)])],
                                        [c[(x, q)], mu[act.ob(x, q)]]),
            M=x, Q=q)
        if eta is not None:
            add("D3", [(x, q)],
                lambda c, x=x, q=q: ([c[(x, q)], eta[act.ob(x, q)]], [L(eta[x], q)]),
                M=x, Q=q)
    for x, q, q2 in itertools.product(M.objects, Q.objects, Q.objects):
        tx, xq, qq = T.ob(x), act.ob(x, q), C.ob(q, q2)
        add("D2", [(x, qq), (xq, q2), (x, q)],
            lambda c, x=x, q=q, q2=q2, tx=tx, xq=xq, qq=qq: (
                [A.psi[(tx, q, q2)], c[(x, qq)]],
                [L(c[(x, q)], q2), c[(xq, q2)], Tm(A.psi[(x, q, q2)])]),
            M=x, Q=q, Q2=q2)
    one = C.unit
    for x in M.objects:
        add("D4", [(x, one)],
            lambda c, x=x: ([c[(x, one)], Tm(A.unit_u[x])], [A.unit_u[T.ob(x)]]),
            M=x)
    return eqs


def component_type(A: MonoidalAction, m: Monad, x: Id, q: Id) -> tuple[Id, Id]:
    return m.T.ob(A.ob(x, q)), A.ob(m.T.ob(x), q)


def check_distlaw(law: DistributiveLaw) -> Report:
    A, m, c = law.action, law.monad, law.components
    rep = Report("distributive law")
    M = A.M
    if m.cat != M:
        rep.add("shape", "monad and action live on different categories")
        return rep
    for x, q in _indices(A):
        s, t = component_type(A, m, x, q)
        k = c.get((x, q))
        if not M.hom(s, t):
            rep.add("NonExistent", "no morphism T(M⋄Q) -> TM⋄Q exists", M=x, Q=q, source=s, target=t)
        elif k is None or not M.has_morphism(k):
            rep.add("component", "component missing", M=x, Q=q)
        elif (M.src[k], M.tgt[k]) != (s, t):
            rep.add("component", "component has wrong endpoints", M=x, Q=q, component=k)
    if not rep.ok:
        return rep
    for eq in law_equations(A, m):
        lhs, rhs = eq.sides(c)
        expect(rep, M, eq.check, lhs, rhs, **dict(eq.witness))
    return rep


def _holds(M, eq: _Equation, c: Mapping) -> bool:
    lhs, rhs = eq.sides(c)
    a = M.chain(*lhs)
    return a is not None and a == M.chain(*rhs)


def enumerate_laws(A: MonoidalAction, m: Monad, caps: Caps = Caps()) -> list[DistributiveLaw]:
    """Every distributive law, by backtracking over component choices.

    Indices are visited in (object index of M, object index of C) order and
    candidates in morphism index order, so the output order is lexicographic.
    """
    M = A.M
    idx = _indices(A)
    if len(idx) > caps.index:
        raise CapExceeded(f"{len(idx)} indices exceeds cap {caps.index}")
    domains = []
    for x, q in idx:
        hs = M.hom(*component_type(A, m, x, q))
        if len(hs) > caps.hom:
            raise CapExceeded(f"hom-set of size {len(hs)} at {(x, q)!r} exceeds cap {caps.hom}")
        domains.append(list(hs))
    if any(not d for d in domains):
        return []
    pos = {k: i for i, k in enumerate(idx)}
    eqs = law_equations(A, m)
    unary = [eq for eq in eqs if len(set(eq.indices)) == 1]
    for eq in unary:
        i = pos[eq.indices[0]]
        domains[i] = [k for k in domains[i] if _holds(M, eq, {idx[i]: k})]
    by_last: dict[int, list] = {}
    for eq in eqs:
        if len(set(eq.indices)) > 1:
            by_last.setdefault(max(pos[k] for k in eq.indices), []).append(eq)

    found: list[DistributiveLaw] = []
    comp: dict = {}

    def rec(i: int) -> None:
        if i == len(idx):
            found.append(DistributiveLaw(A, m, dict(comp)))
            return
        for k in domains[i]:
            comp[idx[i]] = k
            if all(_holds(M, eq, comp) for eq in by_last.get(i, ())):
                rec(i + 1)
        comp.pop(idx[i], None)

    rec(0)
    for law in found:
        assert check_distlaw(law).ok
    return found


# -- strict lifts -------------------------------------------------------------------

def check_strict_lift(candidate: MonoidalAction, em: EMCategory, A: MonoidalAction) -> Report:
    """U(X⋄̃Q) = U(X)⋄Q on objects and morphisms, U(ũ) = u, U(Ψ̃) = Ψ, as table identities."""
    rep = Report("strict lift")
    U = em.U
    E, Q = em.base, A.C.base
    if candidate.M != E or candidate.act.dom2 != Q:
        rep.add("shape", "candidate does not act on the Eilenberg-Moore category")
        return rep
    for X, q in itertools.product(E.objects, Q.objects):
        Y = candidate.act.obj_map.get((X, q))
        if not E.has_object(Y) or U.obj_map[Y] != A.ob(U.obj_map[X], q):
            rep.add("lift-objects", "U(X⋄̃Q) != U(X)⋄Q", X=X, Q=q)
    for phi, g in itertools.product(E.morphisms, Q.morphisms):
        k = candidate.act.mor_map.get((phi, g))
        if not E.has_morphism(k) or U.mor_map[k] != A.act.mor(U.mor_map[phi], g):
            rep.add("lift-morphisms", "U(f⋄̃g) != U(f)⋄g", f=phi, g=g)
    for X in E.objects:
        k = candidate.unit_u.get(X)
        if not E.has_morphism(k) or U.mor_map[k] != A.unit_u[U.obj_map[X]]:
            rep.add("lift-unit", "U(ũ_X) != u_{U X}", X=X)
    for X, q, q2 in itertools.product(E.objects, Q.objects, Q.objects):
        k = candidate.psi.get((X, q, q2))
        if not E.has_morphism(k) or U.mor_map[k] != A.psi[(U.obj_map[X], q, q2)]:
            rep.add("lift-psi", "U(Ψ̃) != Ψ_{U X}", X=X, Q=q, Q2=q2)
    return rep


def _assemble(A: MonoidalAction, em: EMCategory, objs: Mapping) -> MonoidalAction | None:
    """The lifted action forced by strictness once the object table is chosen."""
    E, Q = em.base, A.C.base
    mm = {}
    for phi, g in itertools.product(E.morphisms, Q.morphisms):
        k = em.mor(A.act.mor(phi[0], g), objs[(E.src[phi], Q.src[g])], objs[(E.tgt[phi], Q.tgt[g])])
        if k is None:
            return None
        mm[(phi, g)] = k
    psi, unit_u = {}, {}
    for X, q, q2 in itertools.product(E.objects, Q.objects, Q.objects):
        k = em.mor(A.psi[(X[0], q, q2)], objs[(X, A.C.ob(q, q2))], objs[(objs[(X, q)], q2)])
        if k is None:
            return None
        psi[(X, q, q2)] = k
    for X in E.objects:
        k = em.mor(A.unit_u[X[0]], X, objs[(X, A.C.unit)])
        if k is None:
            return None
        unit_u[X] = k
    return MonoidalAction(A.C, E, Bifunctor(E, Q, E, dict(objs), mm), psi, unit_u)


def _witness(tilde: MonoidalAction, em: EMCategory, A: MonoidalAction) -> Report:
    rep = Report("strict lift witness")
    rep.extend(check_strict_lift(tilde, em, A))
    rep.extend(check_c_functor(strict_c_functor(em.U, tilde, A)))
    return rep


def lift_from_law(law: DistributiveLaw, em: EMCategory | None = None, caps: Caps = Caps()) -> LiftedAction:
    """(M, ν)⋄_l Q = (M⋄Q, (ν⋄Q)∘l[M, Q]); morphisms, Ψ̃ and ũ are those of the base action."""
    rep = check_distlaw(law)
    if not rep.ok:
        raise LawInvalid(str(rep))
    A, m, c = law.action, law.monad, law.components
    em = em or em_category(m, caps.em)
    M = A.M
    objs = {}
    for X, q in itertools.product(em.base.objects, A.C.base.objects):
        x, nu = X
        Y = (A.ob(x, q), M.chain(A.act.left(nu, q), c[(x, q)]))
        if not em.base.has_object(Y):
            raise LawInvalid(f"lifted structure on {x!r}⋄{q!r} is not a module")
        objs[(X, q)] = Y
    tilde = _assemble(A, em, objs)
    if tilde is None:
        raise LawInvalid("a lifted morphism is not a module map")
    return LiftedAction(tilde, em, A, _witness(tilde, em, A))


def law_from_lift(L: LiftedAction) -> DistributiveLaw:
    """l[M, Q] = U(ε_{FM⋄̃Q}) ∘ T(η_M⋄Q)."""
    em, A, tilde = L.em, L.base_action, L.tilde
    m = em.monad
    M = A.M
    comps = {}
    for x, q in _indices(A):
        Z = tilde.ob(em.F.ob(x), q)
        mu_hat = em.U.mor(em.eps.components[Z])
        comps[(x, q)] = M.chain(mu_hat, m.mor(A.act.left(m.eta.components[x], q)))
    return DistributiveLaw(A, m, comps)


def enumerate_strict_lifts(A: MonoidalAction, m: Monad, caps: Caps = Caps()) -> list[LiftedAction]:
    """Every action on the Eilenberg-Moore category strictly lifting ``A``.

    Built from the strictness conditions alone.  Strictness forces every
    morphism image, Ψ̃ and ũ once the object table is chosen, so the search
    runs over object tables: the value at (X, Q) must be a module with
    carrier U(X)⋄Q.  Each complete table is then verified with
    :func:`check_action` and :func:`check_strict_lift`.
    """
    M, Q = A.M, A.C.base
    if len(M.objects) * len(Q.objects) > caps.index:
        raise CapExceeded(f"{len(M.objects) * len(Q.objects)} indices exceeds cap {caps.index}")
    em = em_category(m, caps.em)
    E = em.base
    idx = [(X, q) for X in E.objects for q in Q.objects]
    by_carrier: dict = {}
    for Y in E.objects:
        by_carrier.setdefault(Y[0], []).append(Y)
    domains = [by_carrier.get(A.ob(X[0], q), []) for X, q in idx]
    if any(not d for d in domains):
        return []
    pos = {k: i for i, k in enumerate(idx)}

    # static constraints: morphism images and unit components must be module maps
    static: dict[int, list] = {}
    for phi, g in itertools.product(E.morphisms, Q.morphisms):
        a, b = (E.src[phi], Q.src[g]), (E.tgt[phi], Q.tgt[g])
        f = A.act.mor(phi[0], g)
        static.setdefault(max(pos[a], pos[b]), []).append(
            lambda o, a=a, b=b, f=f: is_module_map(m, f, o[a][1], o[b][1]))
    for X in E.objects:
        a = (X, A.C.unit)
        static.setdefault(pos[a], []).append(
            lambda o, X=X, a=a: is_module_map(m, A.unit_u[X[0]], X[1], o[a][1]))
    # Ψ̃ constraints depend on the value at (X, Q), so they are checked when resolvable
    dynamic = []
    for X, q, q2 in itertools.product(E.objects, Q.objects, Q.objects):
        dynamic.append((X, q, q2, A.C.ob(q, q2), A.psi[(X[0], q, q2)]))

    def dynamic_ok(o: Mapping) -> bool:
        for X, q, q2, qq, p in dynamic:
            a, b = (X, qq), (X, q)
            if a not in o or b not in o or (o[b], q2) not in o:
                continue
            if not is_module_map(m, p, o[a][1], o[(o[b], q2)][1]):
                return False
        return True

    results: list[LiftedAction] = []
    objs: dict = {}

    def rec(i: int) -> None:
        if i == len(idx):
            tilde = _assemble(A, em, objs)
            if tilde is None:
                return
            rep = check_action(tilde)
            rep.extend(check_strict_lift(tilde, em, A))
            if rep.ok:
                results.append(LiftedAction(tilde, em, A, _witness(tilde, em, A)))
            return
        for Y in domains[i]:
            objs[idx[i]] = Y
            if all(ok(objs) for ok in static.get(i, ())) and dynamic_ok(objs):
                rec(i + 1)
        objs.pop(idx[i], None)

    rec(0)
    return results


# -- proof-step lemmas as checks --------------------------------------------------------

def check_lift_lemmas(law: DistributiveLaw, em: EMCategory) -> Report:
    """Direction law -> lift, step by step, computed directly in M.

    (M⋄Q, ν^Q) is a module; f⋄g is a module map for module maps f; u_M and
    Ψ_M are module maps between the lifted modules.
    """
    A, m, c = law.action, law.monad, law.components
    M, Q, L = A.M, A.C.base, A.act.left
    rep = Report("law -> lift lemmas")
    T, mu, eta = m.T, m.mu.components, m.eta.components

    def nu_q(x, nu, q):
        return M.chain(L(nu, q), c[(x, q)])

    for (x, nu), q in itertools.product(em.base.objects, Q.objects):
        xq, n = A.ob(x, q), nu_q(x, nu, q)
        expect(rep, M, "lifted-module-associativity", [n, T.mor_map.get(n)], [n, mu[xq]], M=x, nu=nu, Q=q)
        expect(rep, M, "lifted-module-unit", [n, eta[xq]], [M.identity[xq]], M=x, nu=nu, Q=q)
    for phi, g in itertools.product(em.base.morphisms, Q.morphisms):
        f, (x, nu), (y, xi) = phi
        fg = A.act.mor(f, g)
        expect(rep, M, "lifted-morphism", [nu_q(y, xi, Q.tgt[g]), m.mor(fg)], [fg, nu_q(x, nu, Q.src[g])],
               f=f, g=g)
    one = A.C.unit
    for x, nu in em.base.objects:
        u = A.unit_u[x]
        expect(rep, M, "lifted-unit", [nu_q(x, nu, one), m.mor(u)], [u, nu], M=x, nu=nu)
    for (x, nu), q, q2 in itertools.product(em.base.objects, Q.objects, Q.objects):
        p = A.psi[(x, q, q2)]
        xq = A.ob(x, q)
        outer = M.chain(L(nu_q(x, nu, q), q2), c[(xq, q2)])
        expect(rep, M, "lifted-psi", [outer, m.mor(p)], [p, nu_q(x, nu, A.C.ob(q, q2))],
               M=x, nu=nu, Q=q, Q2=q2)
    return rep


def check_unlift_lemmas(L: LiftedAction, law: DistributiveLaw | None = None) -> Report:
    """Direction lift -> law: the constructed family is a law, D3 rechecked on
    its own, and ν̂^Q = (ν⋄Q)∘l[M, Q] for every module (M, ν)."""
    law = law or law_from_lift(L)
    A, m, c, em = law.action, law.monad, law.components, L.em
    M = A.M
    rep = Report("lift -> law lemmas")
    rep.extend(check_distlaw(law))
    eta = m.eta.components
    for x, q in _indices(A):
        expect(rep, M, "D3-direct", [c.get((x, q)), eta[A.ob(x, q)]], [A.act.left(eta[x], q)], M=x, Q=q)
    for X, q in itertools.product(em.base.objects, A.C.base.objects):
        x, nu = X
        nu_hat = L.tilde.ob(X, q)[1]
        expect(rep, M, "star", [nu_hat], [A.act.left(nu, q), c.get((x, q))], M=x, nu=nu, Q=q)
        # (ν⋄Q)∘μ̂ = ν̂∘T(ν⋄Q): ν⋄̃Q is a module map out of the free module
        mu_hat = L.tilde.ob(em.F.ob(x), q)[1]
        expect(rep, M, "counit-square", [A.act.left(nu, q), mu_hat], [nu_hat, m.mor(A.act.left(nu, q))],
               M=x, nu=nu, Q=q)
    return rep


# -- bijection --------------------------------------------------------------------------

@dataclass
class Roundtrip:
    laws: list[DistributiveLaw]
    lifts: list[LiftedAction]
    law_roundtrip: bool
    lift_roundtrip: bool
    same_lifts: bool
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return (len(self.laws) == len(self.lifts) and self.law_roundtrip
                and self.lift_roundtrip and self.same_lifts)


def roundtrip(A: MonoidalAction, m: Monad, caps: Caps = Caps()) -> Roundtrip:
    """Enumerate both sides and verify they correspond under the two constructions."""
    laws = enumerate_laws(A, m, caps)
    lifts = enumerate_strict_lifts(A, m, caps)
    em = lifts[0].em if lifts else em_category(m, caps.em)
    failures = []
    law_rt = True
    from_laws = []
    for i, law in enumerate(laws):
        L = lift_from_law(law, em, caps)
        from_laws.append(L.key())
        back = law_from_lift(L)
        if dict(back.components) != dict(law.components):
            law_rt = False
            failures.append(f"law #{i}: law_from_lift(lift_from_law(l)) != l")
    lift_rt = True
    for i, L in enumerate(lifts):
        try:
            again = lift_from_law(law_from_lift(L), em, caps)
        except LawInvalid as exc:
            lift_rt = False
            failures.append(f"lift #{i}: recovered family is not a law: {exc}")
            continue
        if again.key() != L.key():
            lift_rt = False
            failures.append(f"lift #{i}: lift_from_law(law_from_lift(L)) != L")
    same = sorted(map(repr, from_laws)) == sorted(repr(L.key()) for L in lifts)
    if not same:
        failures.append("lifts built from laws differ from enumerated lifts")
    return Roundtrip(laws, lifts, law_rt, lift_rt, same, failures)


def lifted_modules(L: LiftedAction) -> Iterator[tuple]:
    """Rows (module, Q, lifted module) of the lifted object table, in order."""
    for X in L.em.base.objects:
        for q in L.base_action.C.base.objects:
            yield X, q, L.tilde.ob(X, q)
