"""Declaration files: a YAML document of named sections.

The grammar is documented in ``docs/format.md``. Parsing normalizes every
identifier to a string and every table to a list of rows, so that
``parse(dump(parse(text))) == parse(text)``. :class:`Workspace` resolves
names into library objects, raising :class:`DeclarationError` on anything
malformed or dangling.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable, Iterable

import yaml

from .action import MonoidalAction
from .cat import Bifunctor, FinCategory, Functor, chain, discrete, finset, from_tables, monoid, poset
from .distlaw import DistributiveLaw
from .errors import DeclarationError
from .linear import BialgebraBundle, Comodule, ExactField, LeftAModule, LinMap, ModuleAlgebra
from .monad import Monad, make_monad
from .monoidal import MonoidalCategory
from .report import fmt_id

FORMAT = "liftlaw/1"
SECTIONS = ("categories", "monoidal", "actions", "monads", "laws", "linear")
LINEAR_SECTIONS = ("bialgebras", "module_algebras", "modules", "comodules", "laws")
CATEGORY_KINDS = ("table", "chain", "finset", "discrete", "poset", "monoid")
COHERENCE = ("strict", "derived", "explicit")


# -- normalization ------------------------------------------------------------------

def _where(path: tuple) -> str:
    return ".".join(map(str, path)) or "<root>"


def _ident(x: Any, path: tuple) -> str:
    if isinstance(x, bool) or not isinstance(x, (str, int)):
        raise DeclarationError(f"{_where(path)}: expected an identifier, got {x!r}")
    return str(x)


def _mapping(x: Any, path: tuple) -> dict:
    if not isinstance(x, dict):
        raise DeclarationError(f"{_where(path)}: expected a mapping")
    return x


def _list(x: Any, path: tuple) -> list:
    if not isinstance(x, list):
        raise DeclarationError(f"{_where(path)}: expected a list")
    return x


def _ids(x: Any, path: tuple) -> list[str]:
    return [_ident(v, path + (i,)) for i, v in enumerate(_list(x, path))]


def _rows(x: Any, width: int, path: tuple) -> list[list[str]]:
    out = []
    for i, row in enumerate(_list(x, path)):
        row = _ids(row, path + (i,))
        if len(row) != width:
            raise DeclarationError(f"{_where(path + (i,))}: expected {width} entries, got {len(row)}")
        out.append(row)
    return out


def _idmap(x: Any, path: tuple) -> dict[str, str]:
    return {_ident(k, path): _ident(v, path + (k,)) for k, v in _mapping(x, path).items()}


def _int(x: Any, path: tuple) -> int:
    if isinstance(x, bool) or not isinstance(x, int):
        raise DeclarationError(f"{_where(path)}: expected an integer")
    return x


def _scalar(x: Any, path: tuple) -> int | str:
    if isinstance(x, bool):
        raise DeclarationError(f"{_where(path)}: expected a number")
    if isinstance(x, int):
        return x
    if isinstance(x, str):
        try:
            Fraction(x)
        except ValueError:
            raise DeclarationError(f"{_where(path)}: {x!r} is not a number") from None
        return x
    raise DeclarationError(f"{_where(path)}: expected a number")


def _matrix(x: Any, path: tuple) -> list[list]:
    rows = [[_scalar(v, path + (i, j)) for j, v in enumerate(_list(r, path + (i,)))]
            for i, r in enumerate(_list(x, path))]
    if len({len(r) for r in rows}) > 1:
        raise DeclarationError(f"{_where(path)}: ragged matrix")
    return rows


def _keys(d: dict, path: tuple, required: Iterable[str], optional: Iterable[str] = ()) -> None:
    required, optional = set(required), set(optional)
    missing = required - d.keys()
    extra = set(d) - required - optional
    if missing:
        raise DeclarationError(f"{_where(path)}: missing {', '.join(sorted(missing))}")
    if extra:
        raise DeclarationError(f"{_where(path)}: unknown key {', '.join(sorted(map(str, extra)))}")


def _choice(x: Any, options: tuple, path: tuple) -> str:
    if x not in options:
        raise DeclarationError(f"{_where(path)}: expected one of {', '.join(options)}, got {x!r}")
    return x


def _norm_category(d: dict, path: tuple) -> dict:
    d = _mapping(d, path)
    kind = _choice(d.get("kind"), CATEGORY_KINDS, path + ("kind",))
    if kind == "chain":
        _keys(d, path, ["kind", "length"])
        return {"kind": kind, "length": _int(d["length"], path + ("length",))}
    if kind == "finset":
        _keys(d, path, ["kind", "sizes"])
        return {"kind": kind, "sizes": [_int(v, path + ("sizes", i)) for i, v in enumerate(_list(d["sizes"], path))]}
    if kind == "discrete":
        _keys(d, path, ["kind", "objects"])
        return {"kind": kind, "objects": _ids(d["objects"], path + ("objects",))}
    if kind == "poset":
        _keys(d, path, ["kind", "elements", "order"])
        return {"kind": kind, "elements": _ids(d["elements"], path + ("elements",)),
                "order": _rows(d["order"], 2, path + ("order",))}
    if kind == "monoid":
        _keys(d, path, ["kind", "elements", "unit", "table"], ["object"])
        out = {"kind": kind, "elements": _ids(d["elements"], path + ("elements",)),
               "unit": _ident(d["unit"], path + ("unit",)), "table": _rows(d["table"], 3, path + ("table",))}
        if "object" in d:
            out["object"] = _ident(d["object"], path + ("object",))
        return out
    _keys(d, path, ["kind", "objects", "morphisms", "identity", "compose"])
    return {"kind": kind, "objects": _ids(d["objects"], path + ("objects",)),
            "morphisms": _rows(d["morphisms"], 3, path + ("morphisms",)),
            "identity": _idmap(d["identity"], path + ("identity",)),
            "compose": _rows(d["compose"], 3, path + ("compose",))}


def _norm_coherent(d: dict, path: tuple, base: list[str], tables: dict[str, int], maps: list[str]) -> dict:
    """Shared shape of monoidal and action sections."""
    out = {}
    for key in base:
        out[key] = _ident(d[key], path + (key,))
    for key, width in tables.items():
        if key in d:
            out[key] = _rows(d[key], width, path + (key,))
    coh = _choice(d.get("coherence", "derived"), COHERENCE, path + ("coherence",))
    out["coherence"] = coh
    explicit = [k for k in d if k in maps or k in ("assoc", "psi")]
    if coh != "explicit" and explicit:
        raise DeclarationError(f"{_where(path)}: coherence components given but coherence is {coh!r}")
    if coh == "explicit":
        for key in maps:
            if key not in d:
                raise DeclarationError(f"{_where(path)}: explicit coherence needs {key}")
            out[key] = _idmap(d[key], path + (key,))
    return out


def _norm_monoidal(d: dict, path: tuple) -> dict:
    d = _mapping(d, path)
    _keys(d, path, ["category", "unit", "tensor_objects"],
          ["tensor_morphisms", "coherence", "assoc", "runit", "lunit"])
    out = _norm_coherent(d, path, ["category", "unit"],
                         {"tensor_objects": 3, "tensor_morphisms": 3}, ["runit", "lunit"])
    if out["coherence"] == "explicit":
        if "assoc" not in d:
            raise DeclarationError(f"{_where(path)}: explicit coherence needs assoc")
        out["assoc"] = _rows(d["assoc"], 4, path + ("assoc",))
    return out


def _norm_action(d: dict, path: tuple) -> dict:
    d = _mapping(d, path)
    _keys(d, path, ["monoidal", "category", "act_objects"], ["act_morphisms", "coherence", "psi", "unit_u"])
    out = _norm_coherent(d, path, ["monoidal", "category"],
                         {"act_objects": 3, "act_morphisms": 3}, ["unit_u"])
    if out["coherence"] == "explicit":
        if "psi" not in d:
            raise DeclarationError(f"{_where(path)}: explicit coherence needs psi")
        out["psi"] = _rows(d["psi"], 4, path + ("psi",))
    return out


def _norm_monad(d: dict, path: tuple) -> dict:
    d = _mapping(d, path)
    _keys(d, path, ["category", "objects"], ["morphisms", "mu", "eta"])
    out = {"category": _ident(d["category"], path + ("category",)),
           "objects": _idmap(d["objects"], path + ("objects",))}
    for key in ("morphisms", "mu", "eta"):
        if key in d:
            out[key] = _idmap(d[key], path + (key,))
    return out


def _norm_law(d: dict, path: tuple) -> dict:
    d = _mapping(d, path)
    _keys(d, path, ["action", "monad", "components"])
    return {"action": _ident(d["action"], path + ("action",)), "monad": _ident(d["monad"], path + ("monad",)),
            "components": _rows(d["components"], 3, path + ("components",))}


_LINEAR_FIELDS = {
    "bialgebras": (["field", "dim", "mult", "unit", "comult", "counit"], []),
    "module_algebras": (["bialgebra", "dim", "mult", "unit", "act"], []),
    "modules": (["algebra", "dim", "act"], []),
    "comodules": (["bialgebra", "dim", "coaction"], []),
    "laws": (["algebra", "module", "comodule", "matrix"], []),
}
_LINEAR_REFS = {"bialgebra", "algebra", "module", "comodule", "field"}


def _norm_linear_entry(kind: str, d: dict, path: tuple) -> dict:
    d = _mapping(d, path)
    req, opt = _LINEAR_FIELDS[kind]
    _keys(d, path, req, opt)
    out = {}
    for key in req:
        if key in _LINEAR_REFS:
            out[key] = _ident(d[key], path + (key,))
        elif key == "dim":
            out[key] = _int(d[key], path + (key,))
        else:
            out[key] = _matrix(d[key], path + (key,))
    return out


@dataclass
class Declaration:
    """Normalized contents of a declaration file."""

    sections: dict = field(default_factory=dict)

    def names(self) -> dict[str, str]:
        """Map every declared name to its section (``linear.<kind>`` for linear entries)."""
        out = {}
        for sec in SECTIONS:
            if sec == "linear":
                for kind, entries in self.sections.get("linear", {}).items():
                    for name in entries:
                        out[name] = f"linear.{kind}"
            else:
                for name in self.sections.get(sec, {}):
                    out[name] = sec
        return out

    def __eq__(self, other) -> bool:
        return isinstance(other, Declaration) and self.sections == other.sections


def normalize(doc: Any) -> Declaration:
    if doc is None:
        doc = {}
    doc = _mapping(doc, ())
    fmt = doc.get("format", FORMAT)
    if fmt != FORMAT:
        raise DeclarationError(f"format: unsupported version {fmt!r} (expected {FORMAT})")
    _keys(doc, (), [], ["format", *SECTIONS])
    norm = {"categories": _norm_category, "monoidal": _norm_monoidal, "actions": _norm_action,
            "monads": _norm_monad, "laws": _norm_law}
    out: dict = {}
    seen: dict[str, str] = {}

    def claim(name: str, where: str) -> None:
        if name in seen:
            raise DeclarationError(f"name {name!r} declared in both {seen[name]} and {where}")
        seen[name] = where

    for sec in SECTIONS:
        if sec not in doc:
            continue
        body = _mapping(doc[sec], (sec,))
        if sec == "linear":
            _keys(body, (sec,), [], LINEAR_SECTIONS)
            lin = {}
            for kind in LINEAR_SECTIONS:
                if kind in body:
                    entries = {}
                    for name, d in _mapping(body[kind], (sec, kind)).items():
                        name = _ident(name, (sec, kind))
                        claim(name, f"linear.{kind}")
                        entries[name] = _norm_linear_entry(kind, d, (sec, kind, name))
                    lin[kind] = entries
            out[sec] = lin
        else:
            entries = {}
            for name, d in body.items():
                name = _ident(name, (sec,))
                claim(name, sec)
                entries[name] = norm[sec](d, (sec, name))
            out[sec] = entries
    return Declaration(out)


def parse(text: str) -> Declaration:
    try:
        doc = yaml.safe_load(text)
    except yaml.YAMLError as exc:
        raise DeclarationError(f"not valid YAML: {exc}") from None
    return normalize(doc)


def load(path: str) -> Declaration:
    try:
        with open(path, encoding="utf-8") as fh:
            return parse(fh.read())
    except OSError as exc:
        raise DeclarationError(f"cannot read {path}: {exc.strerror}") from None


def to_document(decl: Declaration) -> dict:
    doc = {"format": FORMAT}
    for sec in SECTIONS:
        if sec in decl.sections:
            doc[sec] = decl.sections[sec]
    return doc


def dump(decl: Declaration) -> str:
    return yaml.safe_dump(to_document(decl), sort_keys=False, allow_unicode=True, default_flow_style=None,
                          width=100)


def dump_sections(sections: dict) -> str:
    """Serialize a fragment (no format header) in the same syntax."""
    return yaml.safe_dump(sections, sort_keys=False, allow_unicode=True, default_flow_style=None, width=100)


# -- serialization of library objects ---------------------------------------------------

def category_section(cat: FinCategory) -> dict:
    """Any finite category as a ``table`` section; tuple identifiers are flattened to strings."""
    s = fmt_id
    return {
        "kind": "table",
        "objects": [s(x) for x in cat.objects],
        "morphisms": [[s(f), s(cat.src[f]), s(cat.tgt[f])] for f in cat.morphisms],
        "identity": {s(x): s(cat.identity[x]) for x in cat.objects},
        "compose": [[s(g), s(f), s(h)] for (g, f), h in cat.comp.items()],
    }


def monoidal_section(C: MonoidalCategory, category_name: str) -> dict:
    s = fmt_id
    return {
        "category": category_name,
        "unit": s(C.unit),
        "tensor_objects": [[s(x), s(y), s(v)] for (x, y), v in C.tensor.obj_map.items()],
        "tensor_morphisms": [[s(f), s(g), s(v)] for (f, g), v in C.tensor.mor_map.items()],
        "coherence": "explicit",
        "assoc": [[s(x), s(y), s(z), s(v)] for (x, y, z), v in C.assoc.items()],
        "runit": {s(x): s(v) for x, v in C.runit.items()},
        "lunit": {s(x): s(v) for x, v in C.lunit.items()},
    }


def monad_section(m: Monad, category_name: str) -> dict:
    s = fmt_id
    out = {
        "category": category_name,
        "objects": {s(x): s(v) for x, v in m.T.obj_map.items()},
        "morphisms": {s(f): s(v) for f, v in m.T.mor_map.items()},
        "mu": {s(x): s(v) for x, v in m.mu.components.items()},
    }
    if m.eta is not None:
        out["eta"] = {s(x): s(v) for x, v in m.eta.components.items()}
    return out


def action_section(A: MonoidalAction, monoidal_name: str, category_name: str) -> dict:
    s = fmt_id
    return {
        "monoidal": monoidal_name,
        "category": category_name,
        "act_objects": [[s(m), s(q), s(v)] for (m, q), v in A.act.obj_map.items()],
        "act_morphisms": [[s(f), s(g), s(v)] for (f, g), v in A.act.mor_map.items()],
        "coherence": "explicit",
        "psi": [[s(m), s(x), s(y), s(v)] for (m, x, y), v in A.psi.items()],
        "unit_u": {s(m): s(v) for m, v in A.unit_u.items()},
    }


def law_section(law: DistributiveLaw, action_name: str, monad_name: str) -> dict:
    return {"action": action_name, "monad": monad_name,
            "components": [[fmt_id(m), fmt_id(q), fmt_id(c)] for (m, q), c in law.components.items()]}


# -- resolution ---------------------------------------------------------------------

def _closure(elements: list[str], order: list[list[str]]) -> set[tuple[str, str]]:
    rel = {(x, x) for x in elements} | {tuple(r) for r in order}
    changed = True
    while changed:
        changed = False
        for (a, b), (c, d) in itertools.product(list(rel), repeat=2):
            if b == c and (a, d) not in rel:
                rel.add((a, d))
                changed = True
    return rel


def _unique(C: FinCategory, x: str, y: str) -> str | None:
    hs = C.hom(x, y)
    return hs[0] if len(hs) == 1 else None


class Workspace:
    """Lazily resolved library objects for the names in a declaration."""

    def __init__(self, decl: Declaration):
        self.decl = decl
        self.kinds = decl.names()
        self._cache: dict = {}

    def kind(self, name: str) -> str:
        if name not in self.kinds:
            raise DeclarationError(f"unknown name {name!r}")
        return self.kinds[name]

    def entry(self, section: str, name: str) -> dict:
        """The normalized declaration of ``name`` in ``section`` (``linear.<kind>`` for linear ones)."""
        if section.startswith("linear."):
            entries = self.decl.sections.get("linear", {}).get(section[7:], {})
        else:
            entries = self.decl.sections.get(section, {})
        if name not in entries:
            raise DeclarationError(f"reference to undeclared {section} entry {name!r}")
        return entries[name]

    def _get(self, section: str, name: str, build: Callable[[dict], Any]) -> Any:
        key = (section, name)
        if key not in self._cache:
            self._cache[key] = build(self.entry(section, name))
        return self._cache[key]

    # categories

    def category(self, name: str) -> FinCategory:
        return self._get("categories", name, lambda d: self._build_category(name, d))

    def _build_category(self, name: str, d: dict) -> FinCategory:
        k = d["kind"]
        if k == "chain":
            return chain(d["length"], name)
        if k == "finset":
            return finset(d["sizes"], name)
        if k == "discrete":
            return discrete(d["objects"], name)
        if k == "poset":
            for row in d["order"]:
                for x in row:
                    if x not in d["elements"]:
                        raise DeclarationError(f"categories.{name}.order: unknown element {x!r}")
            rel = _closure(d["elements"], d["order"])
            return poset(d["elements"], lambda a, b: (a, b) in rel, name)
        if k == "monoid":
            table = {(g, f): h for g, f, h in d["table"]}
            els = d["elements"]
            for g, f in itertools.product(els, repeat=2):
                if (g, f) not in table:
                    raise DeclarationError(f"categories.{name}.table: no entry for {g}∘{f}")
            return monoid(els, table, d["unit"], d.get("object", "*"), name)
        objs = d["objects"]
        mors = {}
        for f, s, t in d["morphisms"]:
            if s not in objs or t not in objs:
                raise DeclarationError(f"categories.{name}.morphisms: {f!r} has an undeclared endpoint")
            mors[f] = (s, t)
        for x, i in d["identity"].items():
            if x not in objs:
                raise DeclarationError(f"categories.{name}.identity: unknown object {x!r}")
        return from_tables(objs, mors, d["identity"], {(g, f): h for g, f, h in d["compose"]}, name)

    # monoidal

    def monoidal(self, name: str) -> MonoidalCategory:
        return self._get("monoidal", name, lambda d: self._build_monoidal(name, d))

    def _build_monoidal(self, name: str, d: dict) -> MonoidalCategory:
        C = self.category(d["category"])
        obj_map = {(x, y): z for x, y, z in d["tensor_objects"]}
        for x, y in itertools.product(C.objects, repeat=2):
            if (x, y) not in obj_map:
                raise DeclarationError(f"monoidal.{name}.tensor_objects: no entry for ({x},{y})")
        mm = self._bifunctor_morphisms(C, C, C, obj_map, d.get("tensor_morphisms"))
        T = Bifunctor(C, C, C, obj_map, mm)
        unit, ob = d["unit"], obj_map.get
        coh = d["coherence"]
        if coh == "explicit":
            assoc = {(x, y, z): a for x, y, z, a in d["assoc"]}
            runit, lunit = dict(d["runit"]), dict(d["lunit"])
        else:
            pick = (lambda s, t: C.identity.get(s) if s == t else None) if coh == "strict" else \
                (lambda s, t: _unique(C, s, t))
            assoc = {(x, y, z): pick(ob((x, ob((y, z)))), ob((ob((x, y)), z)))
                     for x, y, z in itertools.product(C.objects, repeat=3)}
            runit = {x: pick(x, ob((x, unit))) for x in C.objects}
            lunit = {x: pick(x, ob((unit, x))) for x in C.objects}
        strip = lambda m: {k: v for k, v in m.items() if v is not None}
        return MonoidalCategory(C, T, unit, strip(assoc), strip(runit), strip(lunit), coh == "strict")

    @staticmethod
    def _bifunctor_morphisms(A: FinCategory, B: FinCategory, C: FinCategory, obj_map: dict, rows) -> dict:
        if rows is not None:
            return {(f, g): h for f, g, h in rows}
        mm = {}
        for f, g in itertools.product(A.morphisms, B.morphisms):
            s = obj_map.get((A.src[f], B.src[g]))
            t = obj_map.get((A.tgt[f], B.tgt[g]))
            h = _unique(C, s, t) if C.has_object(s) and C.has_object(t) else None
            if h is not None:
                mm[(f, g)] = h
        return mm

    # actions

    def action(self, name: str) -> MonoidalAction:
        return self._get("actions", name, lambda d: self._build_action(name, d))

    def _build_action(self, name: str, d: dict) -> MonoidalAction:
        C = self.monoidal(d["monoidal"])
        M = self.category(d["category"])
        Q = C.base
        obj_map = {(m, q): v for m, q, v in d["act_objects"]}
        for m, q in itertools.product(M.objects, Q.objects):
            if (m, q) not in obj_map:
                raise DeclarationError(f"actions.{name}.act_objects: no entry for ({m},{q})")
        mm = self._bifunctor_morphisms(M, Q, M, obj_map, d.get("act_morphisms"))
        act = Bifunctor(M, Q, M, obj_map, mm)
        ob = obj_map.get
        coh = d["coherence"]
        if coh == "explicit":
            psi = {(m, x, y): c for m, x, y, c in d["psi"]}
            unit_u = dict(d["unit_u"])
        else:
            pick = (lambda s, t: M.identity.get(s) if s == t else None) if coh == "strict" else \
                (lambda s, t: _unique(M, s, t))
            psi = {(m, x, y): pick(ob((m, C.ob(x, y))), ob((ob((m, x)), y)))
                   for m, x, y in itertools.product(M.objects, Q.objects, Q.objects)}
            unit_u = {m: pick(m, ob((m, C.unit))) for m in M.objects}
        strip = lambda t: {k: v for k, v in t.items() if v is not None}
        return MonoidalAction(C, M, act, strip(psi), strip(unit_u))

    # monads and laws

    def monad(self, name: str) -> Monad:
        return self._get("monads", name, lambda d: self._build_monad(name, d))

    def _build_monad(self, name: str, d: dict) -> Monad:
        M = self.category(d["category"])
        om = d["objects"]
        for x in M.objects:
            if x not in om:
                raise DeclarationError(f"monads.{name}.objects: no image for {x!r}")
        if "morphisms" in d:
            mm = dict(d["morphisms"])
        else:
            mm = {}
            for f in M.morphisms:
                s, t = om.get(M.src[f]), om.get(M.tgt[f])
                h = _unique(M, s, t) if M.has_object(s) and M.has_object(t) else None
                if h is not None:
                    mm[f] = h
        T = Functor(M, M, dict(om), mm)

        def derived(src_of: Callable[[str], str]) -> dict:
            out = {}
            for x in M.objects:
                s, t = src_of(x), om.get(x)
                h = _unique(M, s, t) if M.has_object(s) and M.has_object(t) else None
                if h is not None:
                    out[x] = h
            return out

        mu = d["mu"] if "mu" in d else derived(lambda x: om.get(om.get(x)))
        eta = d["eta"] if "eta" in d else derived(lambda x: x)
        return make_monad(T, mu, eta)

    def law(self, name: str) -> DistributiveLaw:
        return self._get("laws", name, self._build_law)

    def _build_law(self, d: dict) -> DistributiveLaw:
        return DistributiveLaw(self.action(d["action"]), self.monad(d["monad"]),
                               {(m, q): c for m, q, c in d["components"]})

    # linear

    def _field_of(self, bialgebra: str) -> ExactField:
        d = self.decl.sections.get("linear", {}).get("bialgebras", {}).get(bialgebra)
        if d is None:
            raise DeclarationError(f"reference to undeclared bialgebra {bialgebra!r}")
        try:
            return ExactField.parse(d["field"])
        except ValueError as exc:
            raise DeclarationError(f"linear.bialgebras.{bialgebra}.field: {exc}") from None

    @staticmethod
    def _mat(k: ExactField, rows: list, cod: int, dom: int, where: str) -> LinMap:
        if len(rows) != cod or any(len(r) != dom for r in rows):
            raise DeclarationError(f"{where}: expected a {cod}x{dom} matrix")
        if cod == 0 or dom == 0:
            raise DeclarationError(f"{where}: dimensions must be positive")
        return LinMap(k, k.array([[Fraction(v) if isinstance(v, str) else v for v in r] for r in rows]))

    def bialgebra(self, name: str) -> BialgebraBundle:
        def build(d):
            k, n = self._field_of(name), d["dim"]
            w = f"linear.bialgebras.{name}"
            return BialgebraBundle(k, n, self._mat(k, d["mult"], n, n * n, w + ".mult"),
                                   self._mat(k, d["unit"], n, 1, w + ".unit"),
                                   self._mat(k, d["comult"], n * n, n, w + ".comult"),
                                   self._mat(k, d["counit"], 1, n, w + ".counit"))
        return self._get("linear.bialgebras", name, build)

    def module_algebra(self, name: str) -> ModuleAlgebra:
        def build(d):
            B = self.bialgebra(d["bialgebra"])
            k, n = B.field, d["dim"]
            w = f"linear.module_algebras.{name}"
            return ModuleAlgebra(n, self._mat(k, d["mult"], n, n * n, w + ".mult"),
                                 self._mat(k, d["unit"], n, 1, w + ".unit"),
                                 self._mat(k, d["act"], n, B.dim * n, w + ".act"))
        return self._get("linear.module_algebras", name, build)

    def algebra_bialgebra(self, algebra: str) -> BialgebraBundle:
        d = self.decl.sections.get("linear", {}).get("module_algebras", {}).get(algebra)
        if d is None:
            raise DeclarationError(f"reference to undeclared module algebra {algebra!r}")
        return self.bialgebra(d["bialgebra"])

    def module(self, name: str) -> LeftAModule:
        def build(d):
            A = self.module_algebra(d["algebra"])
            n = d["dim"]
            return LeftAModule(n, self._mat(A.field, d["act"], n, A.dim * n, f"linear.modules.{name}.act"))
        return self._get("linear.modules", name, build)

    def comodule(self, name: str) -> Comodule:
        def build(d):
            B = self.bialgebra(d["bialgebra"])
            n = d["dim"]
            return Comodule(n, self._mat(B.field, d["coaction"], n * B.dim, n, f"linear.comodules.{name}.coaction"))
        return self._get("linear.comodules", name, build)

    def linear_law(self, name: str) -> tuple[LinMap, ModuleAlgebra, LeftAModule, Comodule]:
        def build(d):
            A, M, Q = self.module_algebra(d["algebra"]), self.module(d["module"]), self.comodule(d["comodule"])
            lin = self.decl.sections["linear"]
            if lin["modules"][d["module"]]["algebra"] != d["algebra"]:
                raise DeclarationError(f"linear.laws.{name}: module {d['module']!r} is over another algebra")
            if lin["comodules"][d["comodule"]]["bialgebra"] != lin["module_algebras"][d["algebra"]]["bialgebra"]:
                raise DeclarationError(f"linear.laws.{name}: comodule and algebra use different bialgebras")
            n = A.dim * M.dim * Q.dim
            return self._mat(A.field, d["matrix"], n, n, f"linear.laws.{name}.matrix"), A, M, Q
        return self._get("linear.laws", name, build)

    def linear_law_refs(self, name: str) -> dict:
        return self.decl.sections["linear"]["laws"][name]

    def module_refs(self, name: str) -> dict:
        return self.decl.sections["linear"]["modules"][name]

    def comodule_refs(self, name: str) -> dict:
        return self.decl.sections["linear"]["comodules"][name]

    def resolve_all(self) -> None:
        """Build every declared object (raises on the first dangling reference)."""
        getters = {"categories": self.category, "monoidal": self.monoidal, "actions": self.action,
                   "monads": self.monad, "laws": self.law, "linear.bialgebras": self.bialgebra,
                   "linear.module_algebras": self.module_algebra, "linear.modules": self.module,
                   "linear.comodules": self.comodule, "linear.laws": self.linear_law}
        for name, kind in self.kinds.items():
            getters[kind](name)
