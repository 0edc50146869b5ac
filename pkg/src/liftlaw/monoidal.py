"""Monoidal structure on a finite category and monoid objects in it.

Orientation of the coherence families:

* ``assoc[X, Y, Z] : X⊗(Y⊗Z) -> (X⊗Y)⊗Z``
* ``runit[X]      : X -> X⊗1``
* ``lunit[X]      : X -> 1⊗X``

The unit maps point away from X; their inverses are read off the table.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Iterator, Mapping

from .cat import (
    Bifunctor,
    FinCategory,
    Functor,
    Id,
    check_bifunctor,
    expect,
    thin_bifunctor,
)
from .errors import MissingMorphism
from .report import Report


@dataclass(frozen=True)
class MonoidalCategory:
    base: FinCategory
    tensor: Bifunctor
    unit: Id
    assoc: Mapping[tuple[Id, Id, Id], Id]
    runit: Mapping[Id, Id]
    lunit: Mapping[Id, Id]
    strict: bool = False

    def ob(self, x: Id, y: Id) -> Id:
        return self.tensor.ob(x, y)

    def assoc_inv(self, x: Id, y: Id, z: Id) -> Id | None:
        a = self.assoc.get((x, y, z))
        return None if a is None else self.base.inverse(a)


def strict_monoidal(tensor: Bifunctor, unit: Id) -> MonoidalCategory:
    """Coherence families all identities (valid only if the tensor is strictly associative/unital)."""
    C = tensor.cod
    ob = tensor.obj_map
    assoc = {}
    for x, y, z in itertools.product(C.objects, repeat=3):
        assoc[(x, y, z)] = C.identity.get(ob[(x, ob[(y, z)])])
    return MonoidalCategory(C, tensor, unit, assoc,
                            {x: C.identity.get(ob[(x, unit)]) for x in C.objects},
                            {x: C.identity.get(ob[(unit, x)]) for x in C.objects},
                            strict=True)


def _thin_or_none(C: FinCategory, x: Id, y: Id) -> Id | None:
    hs = C.hom(x, y)
    return hs[0] if len(hs) == 1 else None


def thin_monoidal(C: FinCategory, tensor_ob: Callable[[Id, Id], Id], unit: Id, strict: bool = True) -> MonoidalCategory:
    """Monoidal structure on a thin category given by its object table.

    Components are the unique morphisms where they exist and are left out
    otherwise, so :func:`check_monoidal` reports the gap instead of raising.
    """
    obj_map = {(x, y): tensor_ob(x, y) for x in C.objects for y in C.objects}
    mm = {}
    for f in C.morphisms:
        for g in C.morphisms:
            h = _thin_or_none(C, obj_map[(C.src[f], C.src[g])], obj_map[(C.tgt[f], C.tgt[g])])
            if h is not None:
                mm[(f, g)] = h
    T = Bifunctor(C, C, C, obj_map, mm)
    assoc, runit, lunit = {}, {}, {}
    for x, y, z in itertools.product(C.objects, repeat=3):
        h = _thin_or_none(C, obj_map[(x, obj_map[(y, z)])], obj_map[(obj_map[(x, y)], z)])
        if h is not None:
            assoc[(x, y, z)] = h
    for x in C.objects:
        r = _thin_or_none(C, x, obj_map[(x, unit)])
        l = _thin_or_none(C, x, obj_map[(unit, x)])
        if r is not None:
            runit[x] = r
        if l is not None:
            lunit[x] = l
    return MonoidalCategory(C, T, unit, assoc, runit, lunit, strict)


def discrete_monoidal(C: FinCategory, mult: Mapping[tuple[Id, Id], Id], unit: Id) -> MonoidalCategory:
    """A monoid viewed as a discrete strict monoidal category (objects = elements)."""
    obj_map = dict(mult)
    mm = {(C.identity[x], C.identity[y]): C.identity[obj_map[(x, y)]] for x in C.objects for y in C.objects}
    return strict_monoidal(Bifunctor(C, C, C, obj_map, mm), unit)


def one_object_monoidal(C: FinCategory) -> MonoidalCategory:
    """One-object category of a commutative monoid; tensor of morphisms is composition."""
    (obj,) = C.objects
    mm = {(f, g): C.comp[(f, g)] for f in C.morphisms for g in C.morphisms}
    return strict_monoidal(Bifunctor(C, C, C, {(obj, obj): obj}, mm), obj)


def check_monoidal(M: MonoidalCategory) -> Report:
    rep = Report("monoidal category")
    C, T, one = M.base, M.tensor, M.unit
    if T.dom1 != C or T.dom2 != C or T.cod != C:
        rep.add("tensor", "tensor is not an endo-bifunctor of the base")
        return rep
    if not C.has_object(one):
        rep.add("unit", "unit object missing", unit=one)
        return rep
    rep.extend(check_bifunctor(T))
    if not rep.ok:
        return rep
    ob = T.ob
    objs = C.objects

    def typed(check, comp, s, t, **wit):
        if comp is None or not C.has_morphism(comp):
            rep.add(check, "component missing", **wit)
        elif C.src[comp] != s or C.tgt[comp] != t:
            rep.add(check, "component has wrong endpoints", component=comp, **wit)
        elif not C.is_iso(comp):
            rep.add(check, "component is not an isomorphism", component=comp, **wit)

    for x, y, z in itertools.product(objs, repeat=3):
        typed("assoc", M.assoc.get((x, y, z)), ob(x, ob(y, z)), ob(ob(x, y), z), X=x, Y=y, Z=z)
    for x in objs:
        typed("runit", M.runit.get(x), x, ob(x, one), X=x)
        typed("lunit", M.lunit.get(x), x, ob(one, x), X=x)
    if not rep.ok:
        return rep

    a, r, l = M.assoc, M.runit, M.lunit
    for f in C.morphisms:
        s, t = C.src[f], C.tgt[f]
        for y, z in itertools.product(objs, repeat=2):
            expect(rep, C, "assoc-naturality", [a[(t, y, z)], T.left(f, ob(y, z))],
                   [T.left(T.left(f, y), z), a[(s, y, z)]], slot=1, f=f, Y=y, Z=z)
            expect(rep, C, "assoc-naturality", [a[(y, t, z)], T.right(y, T.left(f, z))],
                   [T.left(T.right(y, f), z), a[(y, s, z)]], slot=2, f=f, X=y, Z=z)
            expect(rep, C, "assoc-naturality", [a[(y, z, t)], T.right(y, T.right(z, f))],
                   [T.right(ob(y, z), f), a[(y, z, s)]], slot=3, f=f, X=y, Y=z)
        expect(rep, C, "runit-naturality", [r[t], f], [T.left(f, one), r[s]], f=f)
        expect(rep, C, "lunit-naturality", [l[t], f], [T.right(one, f), l[s]], f=f)
    for x, y, z, w in itertools.product(objs, repeat=4):
        expect(rep, C, "pentagon",
               [a[(ob(x, y), z, w)], a[(x, y, ob(z, w))]],
               [T.left(a[(x, y, z)], w), a[(x, ob(y, z), w)], T.right(x, a[(y, z, w)])],
               X=x, Y=y, Z=z, W=w)
    for x, y in itertools.product(objs, repeat=2):
        expect(rep, C, "triangle", [a[(x, one, y)], T.right(x, l[y])], [T.left(r[x], y)], X=x, Y=y)
    if M.strict:
        for key, comp in itertools.chain(a.items(), r.items(), l.items()):
            if comp != C.identity[C.src[comp]]:
                rep.add("strict", "strict flag set but coherence component is not an identity", index=key)
    return rep


# -- monoid objects --------------------------------------------------------------

@dataclass(frozen=True)
class MonoidObject:
    carrier: Id
    mult: Id
    unit_mor: Id


def check_monoid(M: MonoidalCategory, B: MonoidObject) -> Report:
    rep = Report(f"monoid object {B.carrier}")
    C, T, one, b = M.base, M.tensor, M.unit, B.carrier
    if not C.has_object(b):
        rep.add("carrier", "carrier is not an object", carrier=b)
        return rep
    if not C.has_morphism(B.mult) or (C.src[B.mult], C.tgt[B.mult]) != (T.ob(b, b), b):
        rep.add("mult", "multiplication must be a morphism B⊗B -> B", mult=B.mult)
    if not C.has_morphism(B.unit_mor) or (C.src[B.unit_mor], C.tgt[B.unit_mor]) != (one, b):
        rep.add("unit", "unit must be a morphism 1 -> B", unit=B.unit_mor)
    if not rep.ok:
        return rep
    m, e = B.mult, B.unit_mor
    expect(rep, C, "associativity", [m, T.left(m, b), M.assoc.get((b, b, b))], [m, T.right(b, m)])
    expect(rep, C, "left-unit", [m, T.left(e, b), M.lunit.get(b)], [C.identity[b]])
    expect(rep, C, "right-unit", [m, T.right(b, e), M.runit.get(b)], [C.identity[b]])
    return rep


def unique_monoid(M: MonoidalCategory, carrier: Id) -> MonoidObject:
    """Monoid on ``carrier`` in a category where the structure maps are forced.

    Raises :class:`MissingMorphism` if a required hom-set is empty or ambiguous.
    """
    C = M.base
    mult = C.hom(M.ob(carrier, carrier), carrier)
    unit = C.hom(M.unit, carrier)
    if len(mult) != 1 or len(unit) != 1:
        raise MissingMorphism(
            f"carrier {carrier!r}: {len(mult)} candidate multiplications, {len(unit)} candidate units"
        )
    return MonoidObject(carrier, mult[0], unit[0])


def unit_monoid(M: MonoidalCategory) -> MonoidObject:
    """The monoid structure on the unit object built from the unitors."""
    C, one = M.base, M.unit
    return MonoidObject(one, C.inverse(M.lunit[one]), C.identity[one])


def monoid_objects(M: MonoidalCategory) -> Iterator[MonoidObject]:
    C = M.base
    for b in C.objects:
        for m in C.hom(M.ob(b, b), b):
            for e in C.hom(M.unit, b):
                B = MonoidObject(b, m, e)
                if check_monoid(M, B).ok:
                    yield B


# -- monoidal functors (data + naturality only) ------------------------------------

@dataclass(frozen=True)
class MonoidalFunctorData:
    """A functor with comparison families; only naturality of ``chi`` is checked."""

    F: Functor
    chi: Mapping[tuple[Id, Id], Id]
    xi: Mapping[Id, Id]


def check_monoidal_functor_naturality(src: MonoidalCategory, tgt: MonoidalCategory, D: MonoidalFunctorData) -> Report:
    rep = Report("monoidal functor (chi naturality)")
    F, A, B = D.F, src.base, tgt.base
    for x, y in itertools.product(A.objects, repeat=2):
        c = D.chi.get((x, y))
        want = (tgt.ob(F.ob(x), F.ob(y)), F.ob(src.ob(x, y)))
        if c is None or not B.has_morphism(c) or (B.src[c], B.tgt[c]) != want:
            rep.add("chi", "component missing or mistyped", X=x, Y=y)
    if not rep.ok:
        return rep
    for f in A.morphisms:
        s, t = A.src[f], A.tgt[f]
        for y in A.objects:
            expect(rep, B, "chi-naturality", [D.chi[(t, y)], tgt.tensor.left(F.mor(f), F.ob(y))],
                   [F.mor(src.tensor.left(f, y)), D.chi[(s, y)]], slot=1, f=f, Y=y)
            expect(rep, B, "chi-naturality", [D.chi[(y, t)], tgt.tensor.right(F.ob(y), F.mor(f))],
                   [F.mor(src.tensor.right(y, f)), D.chi[(y, s)]], slot=2, f=f, X=y)
    return rep


def thin_tensor(C: FinCategory, tensor_ob: Callable[[Id, Id], Id]) -> Bifunctor:
    return thin_bifunctor(C, C, C, {(x, y): tensor_ob(x, y) for x in C.objects for y in C.objects})
