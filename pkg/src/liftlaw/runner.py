"""Command implementations behind the CLI, returning structured run reports."""
from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Any, Callable

from . import declare
from .action import check_action
from .cat import check_category
from .declare import Workspace
from .distlaw import (
    Caps,
    check_distlaw,
    check_lift_lemmas,
    enumerate_strict_lifts,
    law_from_lift,
    lift_from_law,
    roundtrip,
)
from .errors import CapExceeded, DeclarationError, LiftlawError
from .linear import (
    check_bialgebra,
    check_comodule,
    check_lb_monad,
    check_LB_compatibility,
    check_left_module,
    check_linear_distlaw,
    check_module_algebra,
    canonical_law,
    free_lb_module,
    lifted_action_direct,
    lifted_action_map,
    regular_comodule,
)
from .linear_examples import f3_instance
from .monad import check_monad, em_category
from .monoidal import check_monoidal
from .report import Report

OK, VIOLATION, MALFORMED, CAPPED = 0, 1, 2, 3


@dataclass
class RunReport:
    command: str
    target: str
    reports: list[Report] = field(default_factory=list)
    counts: dict[str, int] = field(default_factory=dict)
    lines: list[str] = field(default_factory=list)
    data: dict[str, Any] = field(default_factory=dict)
    status: int = OK
    error: str = ""
    elapsed: float = 0.0

    @property
    def ok(self) -> bool:
        return self.status == OK


def _run_stages(run: RunReport, stages: list[tuple[str, Callable[[], Report]]]) -> bool:
    """Run checks in dependency order; stop at the first failing one."""
    for _, stage in stages:
        rep = stage()
        run.reports.append(rep)
        if not rep.ok:
            run.status = VIOLATION
            return False
    return True


def _category_stages(ws: Workspace, name: str) -> list:
    return [(f"category {name}", lambda: _named(check_category(ws.category(name)), f"category {name}"))]


def _named(rep: Report, subject: str) -> Report:
    rep.subject = subject
    return rep


def _monoidal_stages(ws: Workspace, name: str) -> list:
    d = ws.entry("monoidal", name)
    return _category_stages(ws, d["category"]) + [
        (name, lambda: _named(check_monoidal(ws.monoidal(name)), f"monoidal {name}"))]


def _action_stages(ws: Workspace, name: str) -> list:
    d = ws.entry("actions", name)
    return (_monoidal_stages(ws, d["monoidal"]) + _category_stages(ws, d["category"])
            + [(name, lambda: _named(check_action(ws.action(name)), f"action {name}"))])


def _monad_stages(ws: Workspace, name: str) -> list:
    d = ws.entry("monads", name)
    return _category_stages(ws, d["category"]) + [
        (name, lambda: _named(check_monad(ws.monad(name)), f"monad {name}"))]


def _law_stages(ws: Workspace, name: str) -> list:
    d = ws.entry("laws", name)
    return (_action_stages(ws, d["action"]) + _monad_stages(ws, d["monad"])
            + [(name, lambda: _named(check_distlaw(ws.law(name)), f"law {name}"))])


def _linear_stages(ws: Workspace, name: str, kind: str) -> list:
    if kind == "bialgebras":
        return [(name, lambda: _named(check_bialgebra(ws.bialgebra(name)), f"bialgebra {name}"))]
    if kind == "module_algebras":
        b = ws.entry("linear.module_algebras", name)["bialgebra"]
        return _linear_stages(ws, b, "bialgebras") + [
            (name, lambda: _named(check_module_algebra(ws.bialgebra(b), ws.module_algebra(name)),
                                  f"module algebra {name}"))]
    if kind == "comodules":
        b = ws.entry("linear.comodules", name)["bialgebra"]
        return _linear_stages(ws, b, "bialgebras") + [
            (name, lambda: _named(check_comodule(ws.bialgebra(b), ws.comodule(name)), f"comodule {name}"))]
    if kind == "modules":
        a = ws.entry("linear.modules", name)["algebra"]
        return _linear_stages(ws, a, "module_algebras") + [
            (name, lambda: _named(check_left_module(ws.module_algebra(a), ws.module(name)), f"module {name}"))]
    d = ws.entry("linear.laws", name)

    def law_check() -> Report:
        mat, A, M, Q = ws.linear_law(name)
        B = ws.algebra_bialgebra(d["algebra"])
        return _named(check_linear_distlaw(mat, B, A, M, Q, [regular_comodule(B)]), f"linear law {name}")

    return (_linear_stages(ws, d["module"], "modules") + _linear_stages(ws, d["comodule"], "comodules")[1:]
            + [(name, law_check)])


def stages_for(ws: Workspace, name: str) -> list:
    kind = ws.kind(name)
    if kind == "categories":
        return _category_stages(ws, name)
    if kind == "monoidal":
        return _monoidal_stages(ws, name)
    if kind == "actions":
        return _action_stages(ws, name)
    if kind == "monads":
        return _monad_stages(ws, name)
    if kind == "laws":
        return _law_stages(ws, name)
    return _linear_stages(ws, name, kind.split(".", 1)[1])


def _guard(run: RunReport, body: Callable[[], None]) -> RunReport:
    start = time.perf_counter()
    try:
        body()
    except CapExceeded as exc:
        run.status, run.error = CAPPED, f"cap exceeded: {exc}"
    except DeclarationError as exc:
        run.status, run.error = MALFORMED, f"malformed declaration: {exc}"
    except (LiftlawError, KeyError, TypeError, ValueError) as exc:
        run.status, run.error = MALFORMED, f"malformed declaration: {type(exc).__name__}: {exc}"
    run.elapsed = time.perf_counter() - start
    return run


def _workspace(path: str) -> Workspace:
    return Workspace(declare.load(path))


def run_check(path: str, target: str) -> RunReport:
    run = RunReport("check", target)

    def body():
        ws = _workspace(path)
        _run_stages(run, stages_for(ws, target))

    return _guard(run, body)


def check_all(ws: Workspace) -> list[Report]:
    """Every declared name checked (dependencies included, each failing stage stops that name)."""
    out = []
    for name in ws.kinds:
        run = RunReport("check", name)
        _run_stages(run, stages_for(ws, name))
        out.extend(run.reports)
    return out


def _action_of_law(ws: Workspace, law: str) -> tuple[str, str]:
    d = ws.entry("laws", law)
    return d["action"], d["monad"]


def run_lift(path: str, law_name: str, caps: Caps) -> RunReport:
    """Check a law, build the lifted action and emit it in declaration syntax."""
    run = RunReport("lift", law_name)

    def body():
        ws = _workspace(path)
        if ws.kind(law_name) != "laws":
            raise DeclarationError(f"{law_name!r} is not a law")
        if not _run_stages(run, _law_stages(ws, law_name)):
            return
        law = ws.law(law_name)
        em = em_category(law.monad, caps.em)
        L = lift_from_law(law, em, caps)
        run.reports.append(_named(check_lift_lemmas(law, em), "lift lemmas"))
        run.reports.append(_named(L.strict_witness, "strict lift"))
        if not all(r.ok for r in run.reports):
            run.status = VIOLATION
        action_name, _ = _action_of_law(ws, law_name)
        monoidal_name = ws.entry("actions", action_name)["monoidal"]
        em_name, lifted_name = f"EM_{law_name}", f"{law_name}_lifted"
        run.counts["modules"] = len(em.base.objects)
        run.data["fragment"] = {
            "categories": {em_name: declare.category_section(em.base)},
            "actions": {lifted_name: declare.action_section(L.tilde, monoidal_name, em_name)},
        }

    return _guard(run, body)


def run_unlift(path: str, action_name: str, monad_name: str, caps: Caps) -> RunReport:
    """Enumerate strict lifts and emit the recovered laws as a laws section."""
    run = RunReport("unlift", f"{action_name} {monad_name}")

    def body():
        ws = _workspace(path)
        if ws.kind(action_name) != "actions" or ws.kind(monad_name) != "monads":
            raise DeclarationError("unlift needs an action name and a monad name")
        if not _run_stages(run, _action_stages(ws, action_name) + _monad_stages(ws, monad_name)):
            return
        A, m = ws.action(action_name), ws.monad(monad_name)
        lifts = enumerate_strict_lifts(A, m, caps)
        run.counts["lifts"] = len(lifts)
        laws = {}
        for i, L in enumerate(lifts):
            law = law_from_lift(L)
            rep = _named(check_distlaw(law), f"recovered law #{i}")
            run.reports.append(rep)
            laws[f"{action_name}_{monad_name}_law{i}"] = declare.law_section(law, action_name, monad_name)
        if not all(r.ok for r in run.reports):
            run.status = VIOLATION
        run.data["fragment"] = {"laws": laws} if laws else {}

    return _guard(run, body)


def run_roundtrip(path: str, action_name: str, monad_name: str, caps: Caps) -> RunReport:
    run = RunReport("roundtrip", f"{action_name} {monad_name}")

    def body():
        ws = _workspace(path)
        if ws.kind(action_name) != "actions" or ws.kind(monad_name) != "monads":
            raise DeclarationError("roundtrip needs an action name and a monad name")
        if not _run_stages(run, _action_stages(ws, action_name) + _monad_stages(ws, monad_name)):
            return
        rt = roundtrip(ws.action(action_name), ws.monad(monad_name), caps)
        run.counts = {"laws": len(rt.laws), "lifts": len(rt.lifts)}
        verdict = Report("bijection")
        if len(rt.laws) != len(rt.lifts):
            verdict.add("counts", "law and lift counts differ", laws=len(rt.laws), lifts=len(rt.lifts))
        for msg in rt.failures:
            verdict.add("roundtrip", msg)
        run.reports.append(verdict)
        run.lines += [
            f"law -> lift -> law: {'ok' if rt.law_roundtrip else 'FAILED'}",
            f"lift -> law -> lift: {'ok' if rt.lift_roundtrip else 'FAILED'}",
            f"lifts from laws equal enumerated lifts: {'ok' if rt.same_lifts else 'FAILED'}",
        ]
        if not rt.ok:
            run.status = VIOLATION

    return _guard(run, body)


def run_linear_demo() -> RunReport:
    """The sign-action instance over F3, end to end."""
    run = RunReport("linear-demo", "F3[C2] on F3[x]/(x^2)")

    def body():
        B, A, M, Q = f3_instance()
        law = canonical_law(B, A, M.dim, Q)
        lifted = lifted_action_map(B, A, M, Q)
        N, right = free_lb_module(B, A, M)
        direct = Report("lifted action, two routes")
        if lifted.act != lifted_action_direct(B, A, M, Q):
            direct.add("routes", "(ν⊗Q)∘law differs from the basis summation")
        run.reports += [
            check_bialgebra(B), check_comodule(B, Q), check_module_algebra(B, A), check_left_module(A, M),
            check_linear_distlaw(law, B, A, M, Q, [regular_comodule(B)]),
            _named(check_left_module(A, lifted), "lifted module M⊗Q"), direct,
            check_lb_monad(B, A, M), check_LB_compatibility(B, A, N, right),
        ]
        run.lines += ["canonical law A⊗(M⊗Q) -> (A⊗M)⊗Q:", *law.to_text().splitlines(),
                      "lifted action A⊗(M⊗Q) -> M⊗Q:", *lifted.act.to_text().splitlines()]
        if not all(r.ok for r in run.reports):
            run.status = VIOLATION

    return _guard(run, body)
