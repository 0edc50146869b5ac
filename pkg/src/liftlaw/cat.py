"""Finite categories, functors, natural transformations.

Everything is tabulated: a morphism *is* its identifier, composition is a
lookup.  Identifiers may be any hashable value; user-declared ones are
strings, constructed ones (e.g. Eilenberg-Moore categories) are tuples.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Any, Callable, Hashable, Iterable, Iterator, Mapping, Sequence

from .errors import (
    CompositionUndefined,
    IncompatibleFunctors,
    MissingMorphism,
    UnknownObject,
)
from .report import Report

Id = Hashable


@dataclass(frozen=True)
class FinCategory:
    objects: tuple
    morphisms: tuple
    src: Mapping[Id, Id]
    tgt: Mapping[Id, Id]
    identity: Mapping[Id, Id]
    comp: Mapping[tuple[Id, Id], Id]
    name: str = field(default="", compare=False)
    _hom: dict = field(default_factory=dict, init=False, repr=False, compare=False)
    _obj_index: dict = field(default_factory=dict, init=False, repr=False, compare=False)
    _mor_index: dict = field(default_factory=dict, init=False, repr=False, compare=False)

    def __post_init__(self):
        for i, x in enumerate(self.objects):
            self._obj_index[x] = i
            self._hom[x] = {}
        for i, f in enumerate(self.morphisms):
            self._mor_index[f] = i
            s, t = self.src.get(f), self.tgt.get(f)
            if s in self._hom:
                self._hom[s].setdefault(t, []).append(f)

    def __repr__(self) -> str:
        label = self.name or "FinCategory"
        return f"<{label}: {len(self.objects)} objects, {len(self.morphisms)} morphisms>"

    # -- lookup -------------------------------------------------------------
    def has_object(self, x: Id) -> bool:
        return x in self._obj_index

    def has_morphism(self, f: Id) -> bool:
        return f in self._mor_index

    def obj_index(self, x: Id) -> int:
        try:
            return self._obj_index[x]
        except KeyError:
            raise UnknownObject(x) from None

    def mor_index(self, f: Id) -> int:
        return self._mor_index[f]

    def hom(self, x: Id, y: Id) -> tuple:
        if x not in self._hom:
            raise UnknownObject(x)
        if y not in self._obj_index:
            raise UnknownObject(y)
        return tuple(self._hom[x].get(y, ()))

    def id(self, x: Id) -> Id:
        try:
            return self.identity[x]
        except KeyError:
            raise UnknownObject(x) from None

    def composable_pairs(self) -> Iterator[tuple[Id, Id]]:
        """All (g, f) with target(f) = source(g), in index order."""
        for f in self.morphisms:
            for g in self.morphisms:
                if self.tgt[f] == self.src[g]:
                    yield g, f

    def compose(self, g: Id, f: Id) -> Id:
        if f not in self._mor_index or g not in self._mor_index:
            raise CompositionUndefined(f"unknown morphism in {g!r} o {f!r}")
        if self.tgt[f] != self.src[g]:
            raise CompositionUndefined(
                f"{g!r} o {f!r}: target {self.tgt[f]!r} != source {self.src[g]!r}"
            )
        try:
            return self.comp[(g, f)]
        except KeyError:
            raise CompositionUndefined(f"no table entry for {g!r} o {f!r}") from None

    def chain(self, *ms: Id | None) -> Id | None:
        """``chain(h, g, f)`` is h∘g∘f, or None if any step is undefined."""
        if not ms or any(m is None for m in ms):
            return None
        out = ms[-1]
        if out not in self._mor_index:
            return None
        for m in reversed(ms[:-1]):
            if m not in self._mor_index or self.tgt[out] != self.src[m]:
                return None
            out = self.comp.get((m, out))
            if out is None:
                return None
        return out

    def inverse(self, f: Id) -> Id | None:
        s, t = self.src[f], self.tgt[f]
        for g in self.hom(t, s):
            if self.comp.get((g, f)) == self.identity[s] and self.comp.get((f, g)) == self.identity[t]:
                return g
        return None

    def is_iso(self, f: Id) -> bool:
        return f in self._mor_index and self.inverse(f) is not None

    def is_thin(self) -> bool:
        return all(len(ts) <= 1 for d in self._hom.values() for ts in d.values())

    def unique(self, x: Id, y: Id) -> Id:
        """The morphism x -> y of a thin category."""
        hs = self.hom(x, y)
        if len(hs) != 1:
            raise MissingMorphism(f"expected exactly one morphism {x!r} -> {y!r}, found {len(hs)}")
        return hs[0]

    def with_comp(self, comp: Mapping) -> "FinCategory":
        """Copy with a replaced composition table (used for mutants)."""
        return FinCategory(self.objects, self.morphisms, dict(self.src), dict(self.tgt),
                           dict(self.identity), dict(comp), self.name)


def expect(report: Report, cat: FinCategory, check: str, lhs: Sequence, rhs: Sequence, **witness: Any) -> bool:
    """Record a violation unless the composites ``lhs`` and ``rhs`` agree.

    Both sides are lists in composition order (``[h, g, f]`` means h∘g∘f).
    """
    left, right = cat.chain(*lhs), cat.chain(*rhs)
    if left is None or right is None:
        side = "left" if left is None else "right"
        report.add(check, f"{side} side not composable", **witness)
        return False
    if cat.src[left] != cat.src[right] or cat.tgt[left] != cat.tgt[right]:
        report.add(check, "sides have different endpoints", lhs=left, rhs=right, **witness)
        return False
    if left != right:
        report.add(check, "diagram does not commute", lhs=left, rhs=right, **witness)
        return False
    return True


def check_category(cat: FinCategory) -> Report:
    rep = Report(f"category {cat.name}".strip())
    objs = set(cat.objects)
    if len(objs) != len(cat.objects):
        rep.add("objects", "duplicate object identifiers")
    if len(set(cat.morphisms)) != len(cat.morphisms):
        rep.add("morphisms", "duplicate morphism identifiers")
    for f in cat.morphisms:
        if cat.src.get(f) not in objs or cat.tgt.get(f) not in objs:
            rep.add("endpoints", "morphism endpoint is not an object", morphism=f)
    if not rep.ok:
        return rep
    for x in cat.objects:
        i = cat.identity.get(x)
        if i not in cat._mor_index:
            rep.add("identity", "object has no identity", object=x)
        elif cat.src[i] != x or cat.tgt[i] != x:
            rep.add("identity", "identity has wrong endpoints", object=x, morphism=i)
    for (g, f), h in cat.comp.items():
        if f not in cat._mor_index or g not in cat._mor_index or cat.tgt[f] != cat.src[g]:
            rep.add("composition", "entry for non-composable pair", g=g, f=f)
        elif h not in cat._mor_index:
            rep.add("composition", "composite is not a morphism", g=g, f=f, result=h)
        elif cat.src[h] != cat.src[f] or cat.tgt[h] != cat.tgt[g]:
            rep.add("composition", "composite has wrong endpoints", g=g, f=f, result=h)
    for g, f in cat.composable_pairs():
        if (g, f) not in cat.comp:
            rep.add("composition", "missing entry for composable pair", g=g, f=f)
    if not rep.ok:
        return rep
    for f in cat.morphisms:
        if cat.comp[(f, cat.identity[cat.src[f]])] != f:
            rep.add("unit", "f o id != f", f=f)
        if cat.comp[(cat.identity[cat.tgt[f]], f)] != f:
            rep.add("unit", "id o f != f", f=f)
    for h in cat.morphisms:
        for g in cat.morphisms:
            if cat.src[h] != cat.tgt[g]:
                continue
            hg = cat.comp[(h, g)]
            for f in cat.morphisms:
                if cat.src[g] != cat.tgt[f]:
                    continue
                if cat.comp[(h, cat.comp[(g, f)])] != cat.comp[(hg, f)]:
                    rep.add("associativity", "h o (g o f) != (h o g) o f", h=h, g=g, f=f)
    return rep


# -- constructors -------------------------------------------------------------

def from_tables(objects: Iterable, morphisms: Mapping[Id, tuple[Id, Id]], identity: Mapping,
                comp: Mapping, name: str = "") -> FinCategory:
    morphisms = dict(morphisms)
    return FinCategory(
        tuple(objects), tuple(morphisms),
        {f: s for f, (s, _) in morphisms.items()},
        {f: t for f, (_, t) in morphisms.items()},
        dict(identity), dict(comp), name,
    )


def discrete(objects: Iterable, name: str = "") -> FinCategory:
    objects = tuple(objects)
    ids = {x: f"id_{x}" for x in objects}
    return from_tables(objects, {ids[x]: (x, x) for x in objects}, ids,
                       {(ids[x], ids[x]): ids[x] for x in objects}, name)


def poset(elements: Iterable, leq: Callable[[Any, Any], bool], name: str = "") -> FinCategory:
    """Thin category of a preorder; the morphism x -> y is named ``"x<=y"``."""
    elements = tuple(elements)
    mors = {f"{x}<={y}": (x, y) for x in elements for y in elements if leq(x, y)}
    comp = {}
    for g, (b, c) in mors.items():
        for f, (a, b2) in mors.items():
            if b == b2:
                comp[(g, f)] = f"{a}<={c}"
    return from_tables(elements, mors, {x: f"{x}<={x}" for x in elements}, comp, name)


def chain(n: int, name: str = "") -> FinCategory:
    """The poset 0 < 1 < ... < n-1, objects named by decimal strings."""
    return poset([str(i) for i in range(n)], lambda a, b: int(a) <= int(b), name or f"chain{n}")


def monoid(elements: Sequence, table: Mapping[tuple, Any], unit: Any, obj: str = "*", name: str = "") -> FinCategory:
    """One-object category; ``table[(g, f)]`` is g∘f."""
    mors = {e: (obj, obj) for e in elements}
    return from_tables([obj], mors, {obj: unit},
                       {(g, f): table[(g, f)] for g in elements for f in elements}, name)


def finset(sizes: Iterable[int], name: str = "") -> FinCategory:
    """Full subcategory of finite sets on {0..n-1} for the given sizes.

    Objects are named ``str(n)``; a map n -> m is named ``"n>m:"`` followed
    by its values, e.g. ``"2>2:10"`` is the swap of a 2-element set.
    """
    sizes = tuple(sizes)
    objs = [str(n) for n in sizes]
    mors = {}
    fun = {}
    for n in sizes:
        for m in sizes:
            for vals in itertools.product(range(m), repeat=n):
                f = f"{n}>{m}:" + "".join(map(str, vals))
                mors[f] = (str(n), str(m))
                fun[f] = vals
    comp = {}
    for g, (b, c) in mors.items():
        for f, (a, b2) in mors.items():
            if b == b2:
                vals = tuple(fun[g][v] for v in fun[f])
                comp[(g, f)] = f"{a}>{c}:" + "".join(map(str, vals))
    ident = {str(n): f"{n}>{n}:" + "".join(map(str, range(n))) for n in sizes}
    return from_tables(objs, mors, ident, comp, name or "finset" + "".join(map(str, sizes)))


def opposite(cat: FinCategory) -> FinCategory:
    return FinCategory(
        cat.objects, cat.morphisms, dict(cat.tgt), dict(cat.src), dict(cat.identity),
        {(f, g): h for (g, f), h in cat.comp.items()},
        cat.name + "^op" if not cat.name.endswith("^op") else cat.name[:-3],
    )


# -- functors -----------------------------------------------------------------

@dataclass(frozen=True)
class Functor:
    dom: FinCategory
    cod: FinCategory
    obj_map: Mapping[Id, Id]
    mor_map: Mapping[Id, Id]

    def ob(self, x: Id) -> Id:
        try:
            return self.obj_map[x]
        except KeyError:
            raise UnknownObject(x) from None

    def mor(self, f: Id) -> Id:
        return self.mor_map[f]

    def same_tables(self, other: "Functor") -> bool:
        return dict(self.obj_map) == dict(other.obj_map) and dict(self.mor_map) == dict(other.mor_map)


def identity_functor(cat: FinCategory) -> Functor:
    return Functor(cat, cat, {x: x for x in cat.objects}, {f: f for f in cat.morphisms})


def compose_functors(g: Functor, f: Functor) -> Functor:
    """g∘f."""
    if f.cod != g.dom:
        raise IncompatibleFunctors("codomain of f is not the domain of g")
    return Functor(f.dom, g.cod,
                   {x: g.obj_map[f.obj_map[x]] for x in f.dom.objects},
                   {m: g.mor_map[f.mor_map[m]] for m in f.dom.morphisms})


def thin_functor(dom: FinCategory, cod: FinCategory, obj_map: Mapping) -> Functor:
    """Functor into a thin category: the morphism map is forced."""
    return Functor(dom, cod, dict(obj_map),
                   {f: cod.unique(obj_map[dom.src[f]], obj_map[dom.tgt[f]]) for f in dom.morphisms})


def constant_functor(dom: FinCategory, cod: FinCategory, x: Id) -> Functor:
    i = cod.id(x)
    return Functor(dom, cod, {y: x for y in dom.objects}, {f: i for f in dom.morphisms})


def check_functor(F: Functor) -> Report:
    rep = Report("functor")
    dom, cod = F.dom, F.cod
    for x in dom.objects:
        if not cod.has_object(F.obj_map.get(x)):
            rep.add("object-map", "object image missing or unknown", object=x)
    for f in dom.morphisms:
        if not cod.has_morphism(F.mor_map.get(f)):
            rep.add("morphism-map", "morphism image missing or unknown", morphism=f)
    if not rep.ok:
        return rep
    for f in dom.morphisms:
        Ff = F.mor_map[f]
        if cod.src[Ff] != F.obj_map[dom.src[f]] or cod.tgt[Ff] != F.obj_map[dom.tgt[f]]:
            rep.add("endpoints", "F(f) has wrong endpoints", morphism=f, image=Ff)
    for x in dom.objects:
        if F.mor_map[dom.identity[x]] != cod.identity[F.obj_map[x]]:
            rep.add("identity", "F(id) != id", object=x)
    if not rep.ok:
        return rep
    for g, f in dom.composable_pairs():
        lhs = F.mor_map[dom.comp[(g, f)]]
        rhs = cod.comp.get((F.mor_map[g], F.mor_map[f]))
        if lhs != rhs:
            rep.add("composition", "F(g o f) != F(g) o F(f)", g=g, f=f)
    return rep


def enumerate_functors(dom: FinCategory, cod: FinCategory) -> Iterator[Functor]:
    """All functors dom -> cod, by backtracking over morphism images.

    Deterministic: object maps in lexicographic index order, then morphism
    images in index order.
    """
    pairs = list(dom.composable_pairs())
    for images in itertools.product(cod.objects, repeat=len(dom.objects)):
        om = dict(zip(dom.objects, images))
        domains = []
        for f in dom.morphisms:
            s, t = om[dom.src[f]], om[dom.tgt[f]]
            if f == dom.identity[dom.src[f]]:
                domains.append((cod.identity[s],))
            else:
                domains.append(cod.hom(s, t))
        mors = dom.morphisms
        idx = {f: i for i, f in enumerate(mors)}
        # constraints checked once all three morphisms are assigned
        by_last: dict[int, list] = {}
        for g, f in pairs:
            h = dom.comp[(g, f)]
            last = max(idx[g], idx[f], idx[h])
            by_last.setdefault(last, []).append((g, f, h))
        mm: dict = {}

        def rec(i: int) -> Iterator[dict]:
            if i == len(mors):
                yield dict(mm)
                return
            for cand in domains[i]:
                mm[mors[i]] = cand
                if all(cod.comp.get((mm[g], mm[f])) == mm[h] for g, f, h in by_last.get(i, ())):
                    yield from rec(i + 1)
            mm.pop(mors[i], None)

        for m in rec(0):
            yield Functor(dom, cod, om, m)


# -- natural transformations ---------------------------------------------------

@dataclass(frozen=True)
class NatTrans:
    src_f: Functor
    tgt_f: Functor
    components: Mapping[Id, Id]

    def __getitem__(self, x: Id) -> Id:
        return self.components[x]


def identity_nat(F: Functor) -> NatTrans:
    return NatTrans(F, F, {x: F.cod.identity[F.obj_map[x]] for x in F.dom.objects})


def check_nat_trans(alpha: NatTrans) -> Report:
    rep = Report("natural transformation")
    F, G = alpha.src_f, alpha.tgt_f
    if F.dom != G.dom or F.cod != G.cod:
        rep.add("functors", "source and target functors differ in domain or codomain")
        return rep
    dom, cod = F.dom, F.cod
    for x in dom.objects:
        a = alpha.components.get(x)
        if not cod.has_morphism(a):
            rep.add("component", "component missing", object=x)
        elif cod.src[a] != F.obj_map[x] or cod.tgt[a] != G.obj_map[x]:
            rep.add("component", "component has wrong endpoints", object=x, component=a)
    if not rep.ok:
        return rep
    for f in dom.morphisms:
        x, y = dom.src[f], dom.tgt[f]
        expect(rep, cod, "naturality", [alpha.components[y], F.mor_map[f]],
               [G.mor_map[f], alpha.components[x]], morphism=f)
    return rep


def vertical(beta: NatTrans, alpha: NatTrans) -> NatTrans:
    """beta∘alpha : F => H for alpha : F => G, beta : G => H."""
    cod = alpha.src_f.cod
    return NatTrans(alpha.src_f, beta.tgt_f,
                    {x: cod.comp[(beta.components[x], alpha.components[x])] for x in alpha.src_f.dom.objects})


def godement_product(G: NatTrans, F: NatTrans) -> NatTrans:
    """Horizontal composite G⋆F : g∘f => g'∘f' of F : f => f' and G : g => g'.

    Both standard formulas are computed; they agree exactly when the
    inputs are natural, otherwise :class:`IncompatibleFunctors` is raised.
    """
    f, f2 = F.src_f, F.tgt_f
    g, g2 = G.src_f, G.tgt_f
    if f.cod != g.dom or f2.cod != g2.dom or f.dom != f2.dom or g.dom != g2.dom:
        raise IncompatibleFunctors("F's functors must land in the domain of G's functors")
    cod = g.cod
    comps = {}
    for m in f.dom.objects:
        one = cod.chain(g2.mor_map[F.components[m]], G.components[f.obj_map[m]])
        two = cod.chain(G.components[f2.obj_map[m]], g.mor_map[F.components[m]])
        if one is None or one != two:
            raise IncompatibleFunctors(f"the two Godement formulas disagree at {m!r}")
        comps[m] = one
    return NatTrans(compose_functors(g, f), compose_functors(g2, f2), comps)


def enumerate_nat_trans(F: Functor, G: Functor) -> Iterator[NatTrans]:
    dom, cod = F.dom, F.cod
    homs = [cod.hom(F.obj_map[x], G.obj_map[x]) for x in dom.objects]
    for comps in itertools.product(*homs):
        alpha = NatTrans(F, G, dict(zip(dom.objects, comps)))
        if check_nat_trans(alpha).ok:
            yield alpha


def opposite_functor(F: Functor) -> Functor:
    return Functor(opposite(F.dom), opposite(F.cod), F.obj_map, F.mor_map)


def opposite_nat(alpha: NatTrans) -> NatTrans:
    """alpha : F => G on C becomes G^op => F^op on C^op with the same components."""
    return NatTrans(opposite_functor(alpha.tgt_f), opposite_functor(alpha.src_f), alpha.components)


# -- bifunctors ----------------------------------------------------------------

@dataclass(frozen=True)
class Bifunctor:
    dom1: FinCategory
    dom2: FinCategory
    cod: FinCategory
    obj_map: Mapping[tuple[Id, Id], Id]
    mor_map: Mapping[tuple[Id, Id], Id]

    def ob(self, x: Id, y: Id) -> Id:
        try:
            return self.obj_map[(x, y)]
        except KeyError:
            raise UnknownObject((x, y)) from None

    def mor(self, f: Id, g: Id) -> Id | None:
        return self.mor_map.get((f, g))

    def left(self, f: Id, y: Id) -> Id | None:
        """f ⊗ Y, i.e. f tensored with the identity of Y."""
        return self.mor_map.get((f, self.dom2.identity[y]))

    def right(self, x: Id, g: Id) -> Id | None:
        """X ⊗ g."""
        return self.mor_map.get((self.dom1.identity[x], g))


def thin_bifunctor(dom1: FinCategory, dom2: FinCategory, cod: FinCategory, obj_map: Mapping) -> Bifunctor:
    mm = {}
    for f in dom1.morphisms:
        for g in dom2.morphisms:
            a = obj_map[(dom1.src[f], dom2.src[g])]
            b = obj_map[(dom1.tgt[f], dom2.tgt[g])]
            mm[(f, g)] = cod.unique(a, b)
    return Bifunctor(dom1, dom2, cod, dict(obj_map), mm)


def check_bifunctor(B: Bifunctor) -> Report:
    """Functoriality in each slot separately plus interchange.

    Together these are equivalent to functoriality on the product category.
    """
    rep = Report("bifunctor")
    d1, d2, cod = B.dom1, B.dom2, B.cod
    for x in d1.objects:
        for y in d2.objects:
            if not cod.has_object(B.obj_map.get((x, y))):
                rep.add("object-map", "object image missing", left=x, right=y)
    for f in d1.morphisms:
        for g in d2.morphisms:
            if not cod.has_morphism(B.mor_map.get((f, g))):
                rep.add("morphism-map", "morphism image missing", left=f, right=g)
    if not rep.ok:
        return rep
    for f in d1.morphisms:
        for g in d2.morphisms:
            h = B.mor_map[(f, g)]
            if cod.src[h] != B.obj_map[(d1.src[f], d2.src[g])] or cod.tgt[h] != B.obj_map[(d1.tgt[f], d2.tgt[g])]:
                rep.add("endpoints", "image has wrong endpoints", left=f, right=g)
    for x in d1.objects:
        for y in d2.objects:
            if B.mor_map[(d1.identity[x], d2.identity[y])] != cod.identity[B.obj_map[(x, y)]]:
                rep.add("identity", "id x id not sent to identity", left=x, right=y)
    if not rep.ok:
        return rep
    for g, f in d1.composable_pairs():
        for y in d2.objects:
            i = d2.identity[y]
            expect(rep, cod, "functorial-left", [B.mor_map[(d1.comp[(g, f)], i)]],
                   [B.mor_map[(g, i)], B.mor_map[(f, i)]], g=g, f=f, right=y)
    for g, f in d2.composable_pairs():
        for x in d1.objects:
            i = d1.identity[x]
            expect(rep, cod, "functorial-right", [B.mor_map[(i, d2.comp[(g, f)])]],
                   [B.mor_map[(i, g)], B.mor_map[(i, f)]], g=g, f=f, left=x)
    for f in d1.morphisms:
        for g in d2.morphisms:
            a, a2 = d1.src[f], d1.tgt[f]
            b, b2 = d2.src[g], d2.tgt[g]
            h = B.mor_map[(f, g)]
            expect(rep, cod, "interchange", [h], [B.left(f, b2), B.right(a, g)], left=f, right=g)
            expect(rep, cod, "interchange", [h], [B.right(a2, g), B.left(f, b)], left=f, right=g)
    return rep


def curry(B: Bifunctor, y: Id) -> Functor:
    """The endofunctor-like slice X ↦ B(X, y)."""
    if not B.dom2.has_object(y):
        raise UnknownObject(y)
    i = B.dom2.identity[y]
    return Functor(B.dom1, B.cod, {x: B.obj_map[(x, y)] for x in B.dom1.objects},
                   {f: B.mor_map[(f, i)] for f in B.dom1.morphisms})
