import os

import pytest
import yaml

from fixture_builders import BUILDERS, NEGATIVE, build

from liftlaw import declare
from liftlaw.action import check_action
from liftlaw.cat import check_category
from liftlaw.declare import Workspace
from liftlaw.distlaw import Caps
from liftlaw.errors import DeclarationError
from liftlaw.runner import check_all, run_lift, run_unlift

FIXTURE_DIR = os.path.join(os.path.dirname(__file__), "..", "src", "liftlaw", "fixtures")


@pytest.mark.parametrize("name", sorted(BUILDERS))
def test_shipped_fixture_matches_builder(name):
    with open(os.path.join(FIXTURE_DIR, name), encoding="utf-8") as fh:
        text = fh.read()
    assert text == declare.dump(build(name))


@pytest.mark.parametrize("name", sorted(BUILDERS))
def test_parse_dump_roundtrip(name):
    decl = declare.load(os.path.join(FIXTURE_DIR, name))
    again = declare.parse(declare.dump(decl))
    assert again == decl
    assert declare.dump(again) == declare.dump(decl)


@pytest.mark.parametrize("name", sorted(set(BUILDERS) - NEGATIVE))
def test_passing_fixtures_check_clean(name):
    ws = Workspace(build(name))
    reps = check_all(ws)
    assert reps and all(r.ok for r in reps), [str(r) for r in reps if not r.ok]


def test_mutated_law_fails_and_dangling_does_not_resolve():
    reps = check_all(Workspace(build("mutated_law.yaml")))
    assert any(not r.ok and r.subject == "law broken_law" for r in reps)
    with pytest.raises(DeclarationError, match="closure"):
        check_all(Workspace(build("dangling.yaml")))


def test_identifiers_normalized_to_strings():
    decl = declare.parse("categories:\n  P: {kind: chain, length: 2}\n"
                         "monads:\n  top: {category: P, objects: {0: 1, 1: 1}}\n")
    assert decl.sections["monads"]["top"]["objects"] == {"0": "1", "1": "1"}
    assert Workspace(decl).monad("top").T.obj_map == {"0": "1", "1": "1"}


@pytest.mark.parametrize("text,fragment", [
    ("format: liftlaw/9\n", "unsupported version"),
    ("categories: [1, 2]\n", "expected a mapping"),
    ("categories:\n  P: {kind: lattice}\n", "kind"),
    ("categories:\n  P: {kind: chain, length: 2}\nmonads:\n  P: {category: P, objects: {0: 1, 1: 1}}\n", "declared in both"),
    ("bogus: {}\n", "bogus"),
    ("categories: {P: {kind: chain, length: [2]}}\n", "categories.P"),
    ("key: [unclosed\n", "not valid YAML"),
])
def test_malformed_documents(text, fragment):
    with pytest.raises(DeclarationError, match=fragment):
        declare.parse(text)


def test_unknown_reference():
    decl = declare.parse("monads:\n  top: {category: Q, objects: {a: a}}\n")
    with pytest.raises(DeclarationError):
        Workspace(decl).monad("top")
    with pytest.raises(DeclarationError, match="unknown name"):
        Workspace(decl).kind("nothing")


def test_missing_file():
    with pytest.raises(DeclarationError, match="cannot read"):
        declare.load("/nonexistent/file.yaml")


def test_library_objects_survive_serialization():
    ws = Workspace(build("c3_twist.yaml"))
    A = ws.action("regular")
    doc = {"categories": {"C3": declare.category_section(A.M)},
           "monoidal": {"C3mul": declare.monoidal_section(A.C, "C3")},
           "actions": {"regular": declare.action_section(A, "C3mul", "C3")},
           "monads": {"twist": declare.monad_section(ws.monad("twist"), "C3")}}
    ws2 = Workspace(declare.parse(declare.dump_sections(doc)))
    assert ws2.action("regular").tables() == A.tables()
    assert check_category(ws2.category("C3")).ok and check_action(ws2.action("regular")).ok
    assert ws2.monad("twist").mu.components == ws.monad("twist").mu.components


@pytest.mark.parametrize("name,law", [("const_top_max3.yaml", "top_law"), ("finset_collapse.yaml", "terminal_law"),
                                      ("c3_twist.yaml", "twist_law")])
def test_lift_fragment_merges_back(name, law):
    path = os.path.join(FIXTURE_DIR, name)
    run = run_lift(path, law, Caps())
    assert run.status == 0
    doc = yaml.safe_load(declare.dump(declare.load(path)))
    for sec, entries in run.data["fragment"].items():
        doc.setdefault(sec, {}).update(yaml.safe_load(declare.dump_sections(entries)))
    merged = declare.normalize(doc)
    ws = Workspace(merged)
    lifted = f"{law}_lifted"
    assert check_action(ws.action(lifted)).ok
    assert all(r.ok for r in check_all(ws))


def test_unlift_fragment_merges_back():
    path = os.path.join(FIXTURE_DIR, "conjugation_finset.yaml")
    run = run_unlift(path, "swap", "conjugation", Caps())
    assert run.status == 0 and run.counts["lifts"] == 1
    doc = yaml.safe_load(declare.dump(declare.load(path)))
    recovered = yaml.safe_load(declare.dump_sections(run.data["fragment"]))["laws"]
    doc["laws"].update(recovered)
    ws = Workspace(declare.normalize(doc))
    (name,) = recovered
    assert dict(ws.law(name).components) == dict(ws.law("conjugation_law").components)
